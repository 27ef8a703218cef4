#include "ftc/rep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ftc/errors.hpp"
#include "ftc/poly.hpp"

namespace ftc {

namespace {

/// Incrementally maintained row echelon form for membership tests.
class Echelon {
 public:
  /// Adds v when it is independent of the rows so far; reports whether it was.
  bool add(const Vec& v) {
    Vec w = v;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (!w[pivots_[k]].is_zero()) axpy(w, -w[pivots_[k]], rows_[k]);
    std::size_t p = 0;
    while (p < w.size() && w[p].is_zero()) ++p;
    if (p == w.size()) return false;
    Scalar inv = w[p].inv();
    for (auto& c : w) c *= inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  mpz_class q = f.order();
  mpz_class r = mpz_class(static_cast<unsigned long>(rng() >> 1));
  if (!q.fits_ulong_p()) r = r * mpz_class(static_cast<unsigned long>(rng() >> 1)) + static_cast<unsigned long>(rng() >> 1);
  r %= q;
  return f.element(r);
}

Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

/// T = [basis | standard complement] with T^{-1} rho T block upper triangular.
std::pair<Matrix, Matrix> adapted_basis(const RepModule& m, const Matrix& basis) {
  const Field& f = m.field;
  auto pivots = rref(basis.transpose()).pivots;
  std::vector<bool> used(m.dim, false);
  for (auto p : pivots) used[p] = true;
  std::vector<Vec> comp;
  for (std::size_t i = 0; i < m.dim; ++i)
    if (!used[i]) comp.push_back(unit_vec(f, m.dim, i));
  Matrix t = hstack({basis, Matrix::from_columns(f, m.dim, comp)});
  auto inv = inverse(t);
  if (!inv || pivots.size() != basis.cols()) throw std::invalid_argument("submodule basis is not independent");
  return {t, *inv};
}

bool lex_less(const RepModule& a, const RepModule& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  for (std::size_t i = 0; i < a.action.size(); ++i)
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c) {
        auto cmp = a.action[i](r, c) <=> b.action[i](r, c);
        if (cmp != 0) return cmp < 0;
      }
  return false;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  std::mt19937_64 rng(seq);
  return rng();
}

BlockPartition from_components(const SimpleCatalog& s, const std::vector<std::size_t>& comp) {
  std::vector<std::size_t> order;
  std::vector<std::vector<std::string>> classes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto it = std::find(order.begin(), order.end(), comp[i]);
    if (it == order.end()) {
      order.push_back(comp[i]);
      classes.push_back({s.names[i]});
    } else {
      classes[static_cast<std::size_t>(it - order.begin())].push_back(s.names[i]);
    }
  }
  return {classes};
}

}  // namespace

Matrix RepModule::act(const Vec& x) const {
  Matrix r(field, dim, dim);
  for (std::size_t i = 0; i < action.size(); ++i)
    if (!x[i].is_zero()) r += x[i] * action[i];
  return r;
}

std::vector<ModuleViolation> verify_module(const Algebra& a, const RepModule& m) {
  std::vector<ModuleViolation> out;
  if (m.action.size() != a.dim()) {
    out.push_back({{}, "expected one action matrix per basis element"});
    return out;
  }
  for (const auto& x : m.action)
    if (x.rows() != m.dim || x.cols() != m.dim || x.field() != a.field()) {
      out.push_back({{}, "action matrix has the wrong shape or field"});
      return out;
    }
  if (!m.act(a.unit()).is_identity()) out.push_back({{}, "the unit does not act as the identity"});
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m.action[i] * m.action[j] != m.act(a.product(i, j)))
        out.push_back({{i, j}, "rho(" + a.basis_names()[i] + ") rho(" + a.basis_names()[j] + ") != rho(" +
                                   a.basis_names()[i] + " " + a.basis_names()[j] + ")"});
  return out;
}

RepModule regular_module(const Algebra& a) {
  RepModule m{a.field(), a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left_basis(i));
  return m;
}

RepModule trivial_module(const Algebra& a, const Vec& counit) {
  RepModule m{a.field(), 1, {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix x(a.field(), 1, 1);
    x(0, 0) = counit[i];
    m.action.push_back(std::move(x));
  }
  return m;
}

RepModule submodule(const RepModule& m, const Matrix& basis) {
  auto [t, inv] = adapted_basis(m, basis);
  const std::size_t k = basis.cols();
  RepModule s{m.field, k, {}};
  for (const auto& x : m.action) {
    Matrix y = inv * x * t;
    if (!y.block(k, 0, m.dim - k, k).is_zero()) throw std::invalid_argument("subspace is not a submodule");
    s.action.push_back(y.block(0, 0, k, k));
  }
  return s;
}

RepModule quotient_module(const RepModule& m, const Matrix& basis) {
  auto [t, inv] = adapted_basis(m, basis);
  const std::size_t k = basis.cols();
  RepModule q{m.field, m.dim - k, {}};
  for (const auto& x : m.action) {
    Matrix y = inv * x * t;
    if (!y.block(k, 0, m.dim - k, k).is_zero()) throw std::invalid_argument("subspace is not a submodule");
    q.action.push_back(y.block(k, k, m.dim - k, m.dim - k));
  }
  return q;
}

Matrix spin(const RepModule& m, const std::vector<Vec>& seeds, bool transposed) {
  std::vector<Matrix> gens;
  for (const auto& x : m.action) gens.push_back(transposed ? x.transpose() : x);
  Echelon e;
  std::vector<Vec> basis;
  for (const auto& s : seeds)
    if (e.add(s)) basis.push_back(s);
  for (std::size_t k = 0; k < basis.size() && basis.size() < m.dim; ++k)
    for (const auto& g : gens) {
      Vec w = g * basis[k];
      if (e.add(w)) basis.push_back(std::move(w));
    }
  return Matrix::from_columns(m.field, m.dim, basis);
}

std::optional<Matrix> find_submodule(const RepModule& m, std::uint64_t seed) {
  if (!m.field.is_finite()) throw UnsupportedField("composition factors are computed over finite fields only; got " +
                                                   m.field.spec_string());
  if (m.dim <= 1) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Matrix theta = m.act(random_vec(m.field, m.action.size(), rng));
    Factorization fac = factor(charpoly(theta));
    for (const auto& pf : fac.factors) {
      Matrix p = pf.factor.eval(theta);
      Matrix k = kernel(p);
      Matrix w = spin(m, {k.column(0)});
      if (w.cols() < m.dim) return w;
      if (k.cols() != static_cast<std::size_t>(pf.factor.degree())) continue;
      // Norton: the kernel is a simple k[theta]-module, so the dual spin decides.
      Matrix kt = kernel(p.transpose());
      Matrix wt = spin(m, {kt.column(0)}, true);
      if (wt.cols() < m.dim) return kernel(wt.transpose());
      return std::nullopt;
    }
  }
  throw std::logic_error("irreducibility test found no usable random element");
}

std::vector<Matrix> intertwiners(const RepModule& m, const RepModule& n) {
  const std::size_t dm = m.dim, dn = n.dim, unknowns = dm * dn;
  const Field& f = m.field;
  if (unknowns == 0) return {};
  // Unknown X[r][c] at index r * dm + c; rows: X rho_m(b) - rho_n(b) X = 0.
  std::vector<Vec> rows;
  for (std::size_t b = 0; b < m.action.size(); ++b) {
    const Matrix& am = m.action[b];
    const Matrix& an = n.action[b];
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        Vec row = zero_vec(f, unknowns);
        for (std::size_t k = 0; k < dm; ++k) row[r * dm + k] += am(k, c);
        for (std::size_t k = 0; k < dn; ++k) row[k * dm + c] -= an(r, k);
        if (!is_zero_vec(row)) rows.push_back(std::move(row));
      }
  }
  Matrix ker = rows.empty() ? Matrix::identity(f, unknowns) : kernel(Matrix::from_rows(f, rows));
  std::vector<Matrix> out;
  for (std::size_t col = 0; col < ker.cols(); ++col) {
    Matrix x(f, dn, dm);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) x(r, c) = ker(r * dm + c, col);
    out.push_back(std::move(x));
  }
  return out;
}

bool iso_test(const RepModule& m, const RepModule& n) {
  if (m.dim != n.dim || m.field != n.field || m.action.size() != n.action.size()) return false;
  if (m.dim == 0) return true;
  auto basis = intertwiners(m, n);
  if (basis.empty()) return false;
  for (const auto& x : basis)
    if (!determinant(x).is_zero()) return true;
  if (!m.field.is_finite() && basis.size() == 1) return false;
  std::mt19937_64 rng(kDefaultSeed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix x(m.field, n.dim, m.dim);
    for (const auto& b : basis) {
      Scalar c = m.field.is_finite() ? random_scalar(m.field, rng) : m.field.from_int(static_cast<long long>(rng() % 97));
      x += c * b;
    }
    if (!determinant(x).is_zero()) return true;
  }
  return false;
}

CompositionSeries chop(const RepModule& m, std::uint64_t seed) {
  if (!m.field.is_finite()) throw UnsupportedField("composition factors are computed over finite fields only; got " +
                                                   m.field.spec_string());
  std::mt19937_64 rng(seed);
  std::vector<RepModule> simple;
  std::function<void(const RepModule&)> rec = [&](const RepModule& x) {
    if (x.dim == 0) return;
    auto sub = find_submodule(x, rng());
    if (!sub) {
      simple.push_back(x);
      return;
    }
    rec(submodule(x, *sub));
    rec(quotient_module(x, *sub));
  };
  rec(m);
  CompositionSeries out;
  for (auto& s : simple) {
    bool found = false;
    for (auto& f : out.factors)
      if (iso_test(f.module, s)) {
        ++f.multiplicity;
        found = true;
        break;
      }
    if (!found) out.factors.push_back({std::move(s), 1});
  }
  std::size_t total = 0;
  for (const auto& f : out.factors) total += f.multiplicity * f.module.dim;
  if (total != m.dim) throw std::logic_error("composition factor dimensions do not add up");
  return out;
}

std::size_t SimpleCatalog::find(const RepModule& s) const {
  for (std::size_t i = 0; i < modules.size(); ++i)
    if (iso_test(modules[i], s)) return i;
  return modules.size();
}

SimpleCatalog simples(const Algebra& a, std::uint64_t seed, const std::optional<Vec>& counit) {
  CompositionSeries cs = chop(regular_module(a), seed);
  std::vector<RepModule> mods;
  for (auto& f : cs.factors) {
    std::size_t end = intertwiners(f.module, f.module).size();
    if (end > 1) {
      std::ostringstream os;
      mpz_class q;
      mpz_pow_ui(q.get_mpz_t(), a.field().order().get_mpz_t(), end);
      os << "a simple module of dimension " << f.module.dim << " has a " << end
         << "-dimensional endomorphism algebra over " << a.field().spec_string() << "; extend to F_"
         << q.get_str();
      throw SplittingError(os.str(), {"End of dimension " + std::to_string(end)});
    }
    mods.push_back(std::move(f.module));
  }
  std::optional<RepModule> unit;
  if (counit) {
    RepModule t = trivial_module(a, *counit);
    auto it = std::find_if(mods.begin(), mods.end(), [&](const RepModule& s) { return iso_test(s, t); });
    if (it == mods.end()) throw std::logic_error("the trivial module is not a composition factor of the regular module");
    mods.erase(it);
    unit = std::move(t);
  }
  std::sort(mods.begin(), mods.end(), lex_less);
  if (unit) mods.insert(mods.begin(), std::move(*unit));
  SimpleCatalog out;
  for (std::size_t i = 0; i < mods.size(); ++i) out.names.push_back("S" + std::to_string(i));
  out.modules = std::move(mods);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (iso_test(out.modules[i], out.modules[j])) throw std::logic_error("simple catalog has isomorphic entries");
  return out;
}

BlockPartition idempotent_blocks(const Algebra& a, const SimpleCatalog& s) {
  Subspace zc = center(a);
  Algebra z = subalgebra(a, zc, "z");
  std::vector<std::size_t> comp(s.size(), s.size());
  std::size_t block = 0;
  for (const auto& e : primitive_idempotents(z)) {
    Vec ea = zc.basis * e;
    if (a.mul(ea, ea) != ea) throw std::logic_error("central idempotent is not idempotent in the algebra");
    bool hit = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Matrix x = s.modules[i].act(ea);
      if (x.is_identity()) {
        if (comp[i] != s.size()) throw std::logic_error("two central idempotents act as the identity on one simple");
        comp[i] = block;
        hit = true;
      } else if (!x.is_zero()) {
        throw std::logic_error("central idempotent acts neither as 1 nor as 0 on " + s.names[i]);
      }
    }
    if (!hit) throw std::logic_error("central idempotent kills every simple module");
    ++block;
  }
  for (auto c : comp)
    if (c == s.size()) throw std::logic_error("a simple module lies in no block");
  return from_components(s, comp);
}

std::size_t ext1_dim(const Algebra& a, const RepModule& s, const RepModule& t) {
  const Field& f = a.field();
  const std::size_t n = a.dim(), ds = s.dim, dt = t.dim, blk = ds * dt, unknowns = n * blk;
  // delta(b_i) is a dt x ds matrix at offset i * blk, entry (r, c) at r * ds + c.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = a.product(i, j);
      const Matrix& ti = t.action[i];
      const Matrix& sj = s.action[j];
      for (std::size_t r = 0; r < dt; ++r)
        for (std::size_t c = 0; c < ds; ++c) {
          // delta(b_i b_j) - rho_t(b_i) delta(b_j) - delta(b_i) rho_s(b_j) = 0
          Vec row = zero_vec(f, unknowns);
          for (std::size_t k = 0; k < n; ++k)
            if (!prod[k].is_zero()) row[k * blk + r * ds + c] += prod[k];
          for (std::size_t u = 0; u < dt; ++u) row[j * blk + u * ds + c] -= ti(r, u);
          for (std::size_t u = 0; u < ds; ++u) row[i * blk + r * ds + u] -= sj(u, c);
          if (!is_zero_vec(row)) rows.push_back(std::move(row));
        }
    }
  const std::size_t z1 = unknowns - (rows.empty() ? 0 : rank(Matrix::from_rows(f, rows)));
  const std::size_t b1 = blk - intertwiners(s, t).size();
  if (z1 < b1) throw std::logic_error("inner derivations exceed derivations");
  return z1 - b1;
}

BlockPartition ext_linkage_blocks(const Algebra& a, const SimpleCatalog& s) {
  std::vector<std::size_t> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (root(i) != root(j) && ext1_dim(a, s.modules[i], s.modules[j]) > 0) parent[root(i)] = root(j);
  std::vector<std::size_t> comp(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) comp[i] = root(i);
  return from_components(s, comp);
}

BlockPartition blocks(const Algebra& a, const SimpleCatalog& s) {
  BlockPartition p = idempotent_blocks(a, s);
  BlockPartition q = ext_linkage_blocks(a, s);
  if (!(p == q)) throw std::logic_error("central-idempotent blocks and Ext-linkage blocks disagree");
  return p;
}

RepModule tensor_module(const HopfAlgebra& h, const RepModule& m, const RepModule& n) {
  RepModule t{m.field, m.dim * n.dim, {}};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix x(m.field, t.dim, t.dim);
    for (const auto& term : h.comult[i]) x += term.coeff * m.action[term.left].kron(n.action[term.right]);
    t.action.push_back(std::move(x));
  }
  return t;
}

RepModule dual_module(const HopfAlgebra& h, const RepModule& m) {
  RepModule d{m.field, m.dim, {}};
  for (std::size_t i = 0; i < h.dim(); ++i) d.action.push_back(m.act(h.antipode.column(i)).transpose());
  return d;
}

HopfFusion fusion_from_hopf(const HopfAlgebra& h, std::uint64_t seed) {
  HopfFusion out;
  out.simples = simples(h.alg, seed, h.counit);
  const SimpleCatalog& cat = out.simples;
  const std::size_t n = cat.size();
  FusionRing& ring = out.ring;
  ring.labels = cat.names;
  ring.unit = cat.names[0];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RepModule t = tensor_module(h, cat.modules[i], cat.modules[j]);
      if (!verify_module(h.alg, t).empty()) throw std::logic_error("tensor product is not a module");
      for (const auto& f : chop(t, mix_seed(seed, i * n + j + 1)).factors) {
        std::size_t k = cat.find(f.module);
        if (k == n) throw std::logic_error("tensor product has a composition factor outside the catalog");
        ring.set(i, j, k, static_cast<long long>(f.multiplicity));
      }
    }
  std::vector<std::pair<std::size_t, std::size_t>> duals;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = cat.find(dual_module(h, cat.modules[i]));
    if (k == n) throw std::logic_error("dual of a simple module is not in the catalog");
    duals.emplace_back(i, k);
  }
  ring.dual = duals;
  FusionReport rep = validate_fusion(ring);
  if (!rep.valid())
    throw std::logic_error("computed fusion ring fails " + rep.violations.front().axiom + ": " +
                           rep.violations.front().detail);
  out.blocks = blocks(h.alg, cat);
  return out;
}

Scalar scalar_action(const Vec& z, const RepModule& s) {
  Matrix x = s.act(z);
  if (s.dim == 0) throw NonScalarAction("zero-dimensional module");
  Scalar lambda = x(0, 0);
  if (x != lambda * Matrix::identity(s.field, s.dim))
    throw NonScalarAction("element does not act as a scalar on the " + std::to_string(s.dim) + "-dimensional module");
  return lambda;
}

}  // namespace ftc
