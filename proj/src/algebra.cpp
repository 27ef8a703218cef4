#include "ftc/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ftc/poly.hpp"

namespace ftc {

Algebra::Algebra(Field f, std::vector<std::string> basis_names, const std::vector<Vec>& products, Vec unit)
    : field_(f), names_(std::move(basis_names)), unit_(std::move(unit)) {
  const std::size_t d = names_.size();
  if (products.size() != d * d) throw std::invalid_argument("structure constant table has the wrong size");
  if (unit_.size() != d) throw std::invalid_argument("unit vector has the wrong length");
  for (const auto& s : unit_)
    if (s.field() != field_) throw FieldMismatch("unit coefficient over " + s.field().spec_string());
  left_.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Vec> cols(products.begin() + static_cast<std::ptrdiff_t>(i * d),
                          products.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
    left_.push_back(Matrix::from_columns(field_, d, cols));
  }
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) axpy(r, x[i], left_[i] * y);
  return r;
}

Vec Algebra::pow(const Vec& x, const mpz_class& e) const {
  Vec result = unit_, b = x;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mul(result, b);
    k >>= 1;
    if (k > 0) b = mul(b, b);
  }
  return result;
}

Matrix Algebra::left_mult(const Vec& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) m += x[i] * left_[i];
  return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(left_[j] * x);
  return Matrix::from_columns(field_, dim(), cols);
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (left_[i].column(j) != left_[j].column(i)) return false;
  return true;
}

AlgebraReport verify_algebra(const Algebra& a) {
  AlgebraReport r;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ij = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        Vec lhs = a.mul(ij, a.basis_vector(k));
        Vec rhs = a.mul(a.basis_vector(i), a.product(j, k));
        if (lhs != rhs)
          r.violations.push_back({"associativity", {i, j, k},
                                  "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" + std::to_string(k) +
                                      " = " + vec_to_string(lhs) + " but b" + std::to_string(i) + " (b" +
                                      std::to_string(j) + " b" + std::to_string(k) + ") = " + vec_to_string(rhs)});
      }
    }
  for (std::size_t i = 0; i < d; ++i) {
    Vec b = a.basis_vector(i);
    if (a.mul(a.unit(), b) != b) r.violations.push_back({"unit", {i}, "1 b != b"});
    if (a.mul(b, a.unit()) != b) r.violations.push_back({"unit", {i}, "b 1 != b"});
  }
  return r;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return zero(f, ambient);
  return {ambient, column_basis(Matrix::from_columns(f, ambient, vectors))};
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) { return {ambient, Matrix(f, ambient, 0)}; }

bool Subspace::contains(const Vec& v) const { return in_column_span(basis, v); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.vectors())
    if (!contains(v)) return false;
  return true;
}

Subspace center(const Algebra& a) {
  const std::size_t d = a.dim();
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < d; ++i) {
    Vec b = a.basis_vector(i);
    // z -> b z - z b
    blocks.push_back(a.left_basis(i) - a.right_mult(b));
  }
  if (d == 0) return Subspace::zero(a.field(), 0);
  Matrix k = kernel(vstack(blocks));
  return Subspace::span(a.field(), d, k.columns());
}

Subspace product_space(const Algebra& a, const Subspace& s, const Subspace& t) {
  std::vector<Vec> prods;
  for (const auto& x : s.vectors())
    for (const auto& y : t.vectors()) prods.push_back(a.mul(x, y));
  return Subspace::span(a.field(), a.dim(), prods);
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  for (const auto& x : s.vectors())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec b = a.basis_vector(i);
      if (!s.contains(a.mul(b, x)) || !s.contains(a.mul(x, b))) return false;
    }
  return true;
}

std::optional<std::size_t> nilpotency_index(const Algebra& a, const Subspace& s) {
  Subspace p = s;
  std::size_t k = 1;
  while (p.dim() > 0) {
    Subspace next = product_space(a, p, s);
    if (next.dim() >= p.dim()) return std::nullopt;
    p = std::move(next);
    ++k;
  }
  return k;
}

namespace {

Matrix trace_form(const Algebra& a) {
  const std::size_t d = a.dim();
  Matrix t(a.field(), d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) t(j, k) = a.left_mult(a.product(k, j)).trace();
  return t;
}

// Integer lift of an F_p matrix, raised to the e-th power modulo m, traced.
mpz_class lifted_trace_power(const Matrix& x, const mpz_class& e, const mpz_class& m) {
  const std::size_t n = x.rows();
  using ZMat = std::vector<mpz_class>;
  auto mul = [&](const ZMat& a, const ZMat& b) {
    ZMat r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i * n + k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] += a[i * n + k] * b[k * n + j];
      }
    for (auto& v : r) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
  };
  ZMat base(n * n), result(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    result[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) base[i * n + j] = static_cast<long>(x(i, j).residue());
  }
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  mpz_class tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += result[i * n + i];
  mpz_fdiv_r(tr.get_mpz_t(), tr.get_mpz_t(), m.get_mpz_t());
  return tr;
}

// Iterated p-power trace method over a prime field.
Subspace radical_prime_field(const Algebra& a) {
  const Field f = a.field();
  const long p = static_cast<long>(f.characteristic());
  const std::size_t n = a.dim();
  std::size_t l = 0;
  for (std::size_t pw = static_cast<std::size_t>(p); pw <= n; pw *= static_cast<std::size_t>(p)) ++l;
  Subspace ideal{n, Matrix::identity(f, n)};
  mpz_class pi = 1;
  for (std::size_t i = 0; i <= l && ideal.dim() > 0; ++i, pi *= p) {
    mpz_class mod = pi * p;
    auto xs = ideal.vectors();
    Matrix g(f, n, xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix lx = a.left_mult(a.mul(xs[k], a.basis_vector(j)));
        mpz_class t = lifted_trace_power(lx, pi, mod);
        if (t % pi != 0) throw std::logic_error("p-power trace not divisible as expected");
        g(j, k) = f.from_mpz(t / pi);
      }
    Matrix ker = kernel(g);
    ideal = Subspace::span(f, n, (ideal.basis * ker).columns());
  }
  return ideal;
}

// Restriction of scalars from F_q = F_p(a) to F_p: basis a^s b_i at index i*m + s.
Subspace radical_finite_extension(const Algebra& a) {
  const Field fq = a.field();
  const Field fp = fq.base();
  const std::size_t n = a.dim();
  const std::size_t m = static_cast<std::size_t>(fq.degree());
  std::vector<Scalar> alpha_pow{fq.one()};
  for (std::size_t s = 1; s < 2 * m; ++s) alpha_pow.push_back(alpha_pow.back() * fq.generator());
  std::vector<Vec> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < m; ++t) {
          Vec prod = a.product(i, j);
          Vec out = zero_vec(fp, n * m);
          for (std::size_t k = 0; k < n; ++k) {
            auto c = (prod[k] * alpha_pow[s + t]).coefficients();
            for (std::size_t u = 0; u < m; ++u) out[k * m + u] = c[u];
          }
          products.push_back(std::move(out));
        }
  // products is indexed by ((i, s), (j, t)) in the order generated above.
  Vec unit = zero_vec(fp, n * m);
  for (std::size_t k = 0; k < n; ++k) {
    auto c = a.unit()[k].coefficients();
    for (std::size_t u = 0; u < m; ++u) unit[k * m + u] = c[u];
  }
  std::vector<std::string> names(n * m);
  for (std::size_t i = 0; i < n * m; ++i) names[i] = "r" + std::to_string(i);
  Algebra restricted(fp, names, products, unit);
  Subspace rp = radical_prime_field(restricted);
  std::vector<Vec> back;
  for (const auto& v : rp.vectors()) {
    Vec w;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Scalar> c(v.begin() + static_cast<std::ptrdiff_t>(k * m),
                            v.begin() + static_cast<std::ptrdiff_t>((k + 1) * m));
      w.push_back(fq.from_coefficients(c));
    }
    back.push_back(std::move(w));
  }
  return Subspace::span(fq, n, back);
}

void certify_radical(const Algebra& a, const Subspace& j) {
  if (!is_two_sided_ideal(a, j)) throw RadicalUncertified("computed radical is not a two-sided ideal");
  if (!nilpotency_index(a, j)) throw RadicalUncertified("computed radical is not nilpotent");
  QuotientAlgebra q = quotient(a, j);
  const Algebra& b = q.algebra;
  if (b.dim() == 0) return;
  if (rank(trace_form(b)) == b.dim()) return;
  if (a.field().is_finite() && b.is_commutative()) {
    // Reduced iff x -> x^q is injective.
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < b.dim(); ++i) cols.push_back(b.pow(b.basis_vector(i), a.field().order()));
    if (rank(Matrix::from_columns(b.field(), b.dim(), cols)) == b.dim()) return;
  }
  std::ostringstream os;
  os << "cannot certify semisimplicity of A/J (dim A = " << a.dim() << ", dim J = " << j.dim()
     << ", field " << a.field().spec_string() << "): the trace form of the quotient is degenerate";
  throw RadicalUncertified(os.str());
}

}  // namespace

Subspace radical(const Algebra& a) {
  Subspace j;
  if (a.field().characteristic() == 0) {
    j = Subspace::span(a.field(), a.dim(), kernel(trace_form(a)).columns());
  } else if (a.field().kind() == FieldKind::prime) {
    j = radical_prime_field(a);
  } else {
    j = radical_finite_extension(a);
  }
  certify_radical(a, j);
  return j;
}

QuotientAlgebra quotient(const Algebra& a, const Subspace& ideal) {
  if (!is_two_sided_ideal(a, ideal)) throw std::invalid_argument("quotient requires a two-sided ideal");
  const Field f = a.field();
  const std::size_t n = a.dim();
  auto [r, pivots] = rref(ideal.basis.transpose());
  std::vector<bool> used(n, false);
  for (auto p : pivots) used[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) comp.push_back(i);
  const std::size_t qd = comp.size();
  std::vector<Vec> sec_cols;
  for (auto i : comp) sec_cols.push_back(a.basis_vector(i));
  Matrix section = Matrix::from_columns(f, n, sec_cols);
  Matrix full = hstack({ideal.basis, section});
  auto inv = inverse(full);
  if (!inv) throw std::logic_error("ideal complement is not a complement");
  Matrix projection = inv->block(ideal.dim(), 0, qd, n);

  std::vector<Vec> products;
  for (std::size_t u = 0; u < qd; ++u)
    for (std::size_t v = 0; v < qd; ++v) products.push_back(projection * a.product(comp[u], comp[v]));
  std::vector<std::string> names;
  for (auto i : comp) names.push_back(a.basis_names()[i]);
  Algebra qa(f, names, products, projection * a.unit());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = projection * a.product(i, j);
      Vec rhs = qa.mul(projection * a.basis_vector(i), projection * a.basis_vector(j));
      if (lhs != rhs) throw std::logic_error("quotient projection is not multiplicative");
    }
  return {std::move(qa), std::move(projection), std::move(section)};
}

Algebra subalgebra(const Algebra& a, const Subspace& s, const std::string& prefix) {
  auto xs = s.vectors();
  if (!s.contains(a.unit())) throw std::invalid_argument("subspace does not contain the unit");
  std::vector<Vec> products;
  for (const auto& x : xs)
    for (const auto& y : xs) {
      auto c = coordinates(s.basis, a.mul(x, y));
      if (!c) throw std::invalid_argument("subspace is not closed under multiplication");
      products.push_back(*c);
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < xs.size(); ++i) names.push_back(prefix + std::to_string(i));
  return Algebra(a.field(), names, products, *coordinates(s.basis, a.unit()));
}

Subspace commutator_ideal(const Algebra& a) {
  const std::size_t d = a.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec c = sub(a.product(i, j), a.product(j, i));
      if (!is_zero_vec(c)) gens.push_back(std::move(c));
    }
  Subspace s = Subspace::span(a.field(), d, gens);
  for (;;) {
    std::vector<Vec> more = s.vectors();
    for (const auto& x : s.vectors())
      for (std::size_t i = 0; i < d; ++i) {
        more.push_back(a.mul(a.basis_vector(i), x));
        more.push_back(a.mul(x, a.basis_vector(i)));
      }
    Subspace next = Subspace::span(a.field(), d, more);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

void CharacterSearch::require_complete(const std::string& context) const {
  if (complete()) return;
  std::string msg = context + ": the field does not split";
  for (const auto& o : obstructions) msg += " " + o;
  throw SplittingError(msg, obstructions);
}

namespace {

// Minimal polynomial of y inside the unital algebra e B (unit e).
Poly element_minpoly(const Algebra& b, const Vec& y, const Vec& e) {
  const Field f = b.field();
  std::vector<Vec> powers{e};
  for (;;) {
    Vec next = b.mul(powers.back(), y);
    Matrix m = Matrix::from_columns(f, b.dim(), powers);
    if (auto c = solve(m, next)) {
      std::vector<Scalar> coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.push_back(f.one());
      return Poly(f, coeffs);
    }
    powers.push_back(std::move(next));
    if (powers.size() > b.dim() + 1) throw std::logic_error("minimal polynomial search overran the dimension");
  }
}

Vec eval_in_algebra(const Algebra& b, const Poly& p, const Vec& y, const Vec& e) {
  Vec r = zero_vec(b.field(), b.dim());
  for (int k = p.degree(); k >= 0; --k) r = add(b.mul(r, y), scale(p.coeff(k), e));
  return r;
}

}  // namespace

CharacterSearch characters_commutative(const Algebra& a) {
  if (!a.is_commutative()) throw std::invalid_argument("characters_commutative needs a commutative algebra");
  const Field f = a.field();
  Subspace j = radical(a);
  QuotientAlgebra q = quotient(a, j);
  const Algebra& b = q.algebra;
  CharacterSearch out;

  std::function<void(const Vec&)> split = [&](const Vec& e) {
    std::vector<Vec> comp;
    for (std::size_t i = 0; i < b.dim(); ++i) comp.push_back(b.mul(e, b.basis_vector(i)));
    const std::size_t cdim = rank(Matrix::from_columns(f, b.dim(), comp));
    if (cdim == 1) {
      std::size_t t = 0;
      while (e[t].is_zero()) ++t;
      Vec chi_b;
      for (const auto& c : comp) chi_b.push_back(c[t] / e[t]);
      Vec chi = zero_vec(f, a.dim());
      for (std::size_t col = 0; col < a.dim(); ++col)
        for (std::size_t i = 0; i < b.dim(); ++i) chi[col] += chi_b[i] * q.projection(i, col);
      out.characters.push_back(std::move(chi));
      return;
    }
    std::optional<std::string> blocked;
    for (std::size_t i = 0; i < b.dim(); ++i) {
      const Vec& y = comp[i];
      Poly m = element_minpoly(b, y, e);
      Factorization fac = factor(m);
      for (const auto& pf : fac.factors)
        if (pf.multiplicity > 1) throw std::logic_error("repeated factor in a semisimple quotient");
      if (fac.factors.size() >= 2) {
        Poly g = fac.factors[0].factor;
        Poly h = m / g;
        Xgcd x = xgcd(h, g);
        Vec e1 = eval_in_algebra(b, x.s * h, y, e);
        Vec e2 = sub(e, e1);
        split(e1);
        split(e2);
        return;
      }
      if (m.degree() > 1 && !blocked) blocked = m.to_string();
    }
    if (!blocked) throw std::logic_error("component is neither split nor one-dimensional");
    out.obstructions.push_back(*blocked);
  };
  if (b.dim() > 0) split(b.unit());

  std::sort(out.characters.begin(), out.characters.end(), vec_less);
  // Multiplicativity and unit checks on every basis pair.
  for (const auto& chi : out.characters) {
    auto value = [&](const Vec& x) {
      Scalar s = f.zero();
      for (std::size_t i = 0; i < x.size(); ++i) s += chi[i] * x[i];
      return s;
    };
    if (!value(a.unit()).is_one()) throw std::logic_error("character does not send 1 to 1");
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (value(a.product(i, k)) != chi[i] * chi[k]) throw std::logic_error("character is not multiplicative");
  }
  if (!out.characters.empty() &&
      rank(Matrix::from_rows(f, out.characters)) != out.characters.size())
    throw std::logic_error("characters are not linearly independent");
  return out;
}

Vec lift_idempotent(const Algebra& a, const Vec& e_mod_rad, const Subspace& rad) {
  Vec e = e_mod_rad;
  if (!rad.contains(sub(a.mul(e, e), e))) throw std::invalid_argument("input is not idempotent modulo the radical");
  const Scalar three = a.field().from_int(3), two = a.field().from_int(2);
  for (std::size_t iter = 0; iter < 64; ++iter) {
    Vec e2 = a.mul(e, e);
    if (e2 == e) {
      if (!rad.contains(sub(e, e_mod_rad))) throw std::logic_error("lifted idempotent left its class");
      return e;
    }
    Vec e3 = a.mul(e2, e);
    e = sub(scale(three, e2), scale(two, e3));
  }
  throw std::logic_error("idempotent lifting did not converge");
}

std::vector<Vec> primitive_idempotents(const Algebra& c) {
  const Field f = c.field();
  if (!f.is_finite()) throw UnsupportedField("primitive idempotents are computed over finite fields only");
  if (!c.is_commutative()) throw std::invalid_argument("primitive_idempotents needs a commutative algebra");
  Subspace j = radical(c);
  QuotientAlgebra q = quotient(c, j);
  const Algebra& b = q.algebra;
  // Elements fixed by x -> x^q form a split algebra F_q^r with the same idempotents.
  std::vector<Vec> frob;
  for (std::size_t i = 0; i < b.dim(); ++i)
    frob.push_back(sub(b.pow(b.basis_vector(i), f.order()), b.basis_vector(i)));
  Matrix fixed = kernel(Matrix::from_columns(f, b.dim(), frob));
  Subspace fs = Subspace::span(f, b.dim(), fixed.columns());
  Algebra split = subalgebra(b, fs, "f");
  CharacterSearch chars = characters_commutative(split);
  chars.require_complete("primitive idempotents");
  const std::size_t r = chars.characters.size();
  if (r != split.dim()) throw std::logic_error("Frobenius-fixed subalgebra is not split semisimple");
  auto x = inverse(Matrix::from_rows(f, chars.characters));
  if (!x) throw std::logic_error("character matrix is singular");
  std::vector<Vec> out;
  for (std::size_t k = 0; k < r; ++k) {
    Vec in_split = x->column(k);
    Vec in_b = fs.basis * in_split;
    out.push_back(lift_idempotent(c, q.section * in_b, j));
  }
  std::sort(out.begin(), out.end(), vec_less);
  Vec total = zero_vec(f, c.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    total = add(total, out[i]);
    for (std::size_t k = i + 1; k < out.size(); ++k)
      if (!is_zero_vec(c.mul(out[i], out[k]))) throw std::logic_error("idempotents are not orthogonal");
  }
  if (total != c.unit()) throw std::logic_error("idempotents do not sum to 1");
  return out;
}

}  // namespace ftc
