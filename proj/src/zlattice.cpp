#include "ftc/zlattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ftc/poly.hpp"

namespace ftc {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

std::vector<mpz_class> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<mpz_class>& r) {
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("integer matrix shape mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  mpz_class prev = 1;
  int sign = 1;
  // Bareiss elimination.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(s, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row_dst += k * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  IntMatrix a = m, u = IntMatrix::identity(nr), v = IntMatrix::identity(nc);
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    // Minimal nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = nr, pc = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (a(i, j) != 0 && (pr == nr || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == nr) break;
    swap_rows(a, t, pr);
    swap_rows(u, t, pr);
    swap_cols(a, t, pc);
    swap_cols(v, t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder sits in row or column t; promote it.
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < nr; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(br, bc))) br = i, bc = t;
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(br, bc))) br = t, bc = j;
        swap_rows(a, t, br);
        swap_rows(u, t, br);
        swap_cols(a, t, bc);
        swap_cols(v, t, bc);
        continue;
      }
      std::size_t bad = nr;
      for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      add_row(a, t, bad, 1);
      add_row(u, t, bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < nc; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < nr; ++c) u(t, c) = -u(t, c);
    }
  }

  if (!(u * m * v == a) || !a.is_diagonal()) throw std::logic_error("Smith normal form postcondition failed");
  for (std::size_t t = 1; t < std::min(nr, nc); ++t)
    if (a(t - 1, t - 1) != 0 ? a(t, t) % a(t - 1, t - 1) != 0 : a(t, t) != 0)
      throw std::logic_error("Smith normal form divisibility failed");
  if (abs(u.determinant()) != 1 || abs(v.determinant()) != 1)
    throw std::logic_error("Smith normal form transform is not unimodular");
  return {u, a, v};
}

mpz_class AbelianInvariants::torsion_order() const {
  mpz_class r = 1;
  for (const auto& d : torsion) r *= d;
  return r;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    os << (first ? "" : " x ") << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

AbelianInvariants abelian_invariants(const AbelianGroupPresentation& p) {
  if (p.relations.rows() > 0 && p.relations.cols() != p.generators)
    throw std::invalid_argument("relation width differs from generator count");
  AbelianInvariants out;
  if (p.relations.rows() == 0) {
    out.free_rank = p.generators;
    return out;
  }
  SmithForm s = snf(p.relations);
  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(s.d.rows(), s.d.cols()); ++t) {
    const mpz_class& d = s.d(t, t);
    if (d == 0) continue;
    ++rank;
    if (d >= 2) out.torsion.push_back(d);
  }
  out.free_rank = p.generators - rank;
  return out;
}

namespace {

mpz_class prime_to_p(mpz_class d, long long p) {
  if (p <= 0 || d == 0) return d;
  const long q = static_cast<long>(p);
  while (d % q == 0) d /= q;
  return d;
}

}  // namespace

AbelianInvariants unit_character_group(const AbelianInvariants& inv, long long char_p) {
  AbelianInvariants out;
  out.free_rank = inv.free_rank;
  for (const auto& d : inv.torsion) {
    mpz_class e = prime_to_p(d, char_p);
    if (e >= 2) out.torsion.push_back(e);
  }
  // Dropping p-parts keeps the divisibility chain: d | d' implies p'(d) | p'(d').
  return out;
}

Scalar primitive_root_of_unity(const Field& f, long long n) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  if (n == 1) return f.one();
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, f.zero());
  c[0] = -f.one();
  c.back() = f.one();
  Poly cyc(f, c);
  for (const auto& r : roots(cyc))
    if (multiplicative_order(r, n) == n) return r;
  std::ostringstream os;
  os << "field " << f.spec_string() << " has no primitive root of unity of order " << n;
  std::vector<std::string> obstructions;
  for (const auto& pf : factor(cyc).factors)
    if (pf.factor.degree() > 1) obstructions.push_back(pf.factor.to_string());
  if (obstructions.empty()) obstructions.push_back(cyc.to_string());
  throw SplittingError(os.str(), obstructions);
}

std::vector<UnitCharacter> enumerate_characters(const AbelianGroupPresentation& p, long long char_p,
                                                const std::optional<Field>& field) {
  if (field && field->characteristic() != char_p)
    throw std::invalid_argument("evaluation field has the wrong characteristic");
  const std::size_t n = p.generators;
  IntMatrix rel = p.relations.rows() > 0 ? p.relations : IntMatrix(0, n);
  // Relations in coordinates x -> x V become d_i e_i; pad D to n columns.
  std::vector<mpz_class> d(n, 0);
  IntMatrix v = IntMatrix::identity(n);
  if (rel.rows() > 0) {
    SmithForm s = snf(rel);
    v = s.v;
    for (std::size_t t = 0; t < std::min(s.d.rows(), n); ++t) d[t] = s.d(t, t);
  }
  for (const auto& x : d)
    if (x == 0) throw InfiniteGroupError("character group is infinite (free rank > 0)");

  std::vector<mpz_class> orders(n);
  mpz_class modulus = 1;
  for (std::size_t i = 0; i < n; ++i) {
    orders[i] = prime_to_p(d[i], char_p);
    modulus = lcm(modulus, orders[i]);
  }

  std::vector<UnitCharacter> out;
  std::vector<mpz_class> a(n, 0);
  for (;;) {
    UnitCharacter ch;
    ch.modulus = modulus;
    ch.exponents.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class e = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != 0) e += a[i] * v(j, i) * (modulus / orders[i]);
      mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
      ch.exponents[j] = e;
    }
    out.push_back(std::move(ch));
    std::size_t i = 0;
    while (i < n) {
      if (++a[i] < orders[i]) break;
      a[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(),
            [](const UnitCharacter& x, const UnitCharacter& y) { return x.exponents < y.exponents; });

  for (const auto& ch : out)
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      mpz_class s = 0;
      for (std::size_t j = 0; j < n; ++j) s += rel(r, j) * ch.exponents[j];
      if (s % modulus != 0) throw std::logic_error("enumerated character violates a relation");
    }

  if (field) {
    if (!modulus.fits_slong_p()) throw std::invalid_argument("character modulus too large to evaluate");
    Scalar zeta = primitive_root_of_unity(*field, modulus.get_si());
    for (auto& ch : out) {
      std::vector<Scalar> vals;
      for (const auto& e : ch.exponents) vals.push_back(zeta.pow(e));
      ch.values = std::move(vals);
    }
  }
  return out;
}

}  // namespace ftc
