#include "ftc/hopf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ftc {

Vec HopfAlgebra::coproduct(const Vec& x) const {
  const std::size_t d = dim();
  Vec r = zero_vec(field(), d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : comult[i]) r[t.left * d + t.right] += x[i] * t.coeff;
  }
  return r;
}

Scalar HopfAlgebra::epsilon(const Vec& x) const {
  Scalar s = field().zero();
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) s += counit[i] * x[i];
  return s;
}

Vec HopfAlgebra::tensor_mul(const Vec& u, const Vec& v) const {
  const std::size_t d = dim();
  Vec r = zero_vec(field(), d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Scalar& ua = u[a * d + b];
      if (ua.is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e) {
          const Scalar& ve = v[c * d + e];
          if (ve.is_zero()) continue;
          Vec left = alg.product(a, c), right = alg.product(b, e);
          Scalar w = ua * ve;
          for (std::size_t i = 0; i < d; ++i) {
            if (left[i].is_zero()) continue;
            Scalar wl = w * left[i];
            for (std::size_t j = 0; j < d; ++j)
              if (!right[j].is_zero()) r[i * d + j] += wl * right[j];
          }
        }
    }
  return r;
}

namespace {

std::string idx(std::size_t i) { return "b" + std::to_string(i); }

// (Delta (x) id) applied to an element of H (x) H.
Vec delta_left(const HopfAlgebra& h, const Vec& u) {
  const std::size_t d = h.dim();
  Vec r = zero_vec(h.field(), d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Scalar& c = u[a * d + b];
      if (c.is_zero()) continue;
      for (const auto& t : h.comult[a]) r[(t.left * d + t.right) * d + b] += c * t.coeff;
    }
  return r;
}

Vec delta_right(const HopfAlgebra& h, const Vec& u) {
  const std::size_t d = h.dim();
  Vec r = zero_vec(h.field(), d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Scalar& c = u[a * d + b];
      if (c.is_zero()) continue;
      for (const auto& t : h.comult[b]) r[(a * d + t.left) * d + t.right] += c * t.coeff;
    }
  return r;
}

}  // namespace

HopfReport verify_hopf(const HopfAlgebra& h) {
  HopfReport r;
  const std::size_t d = h.dim();
  const Field f = h.field();
  if (h.comult.size() != d || h.counit.size() != d || h.antipode.rows() != d || h.antipode.cols() != d) {
    r.violations.push_back({"shape", {}, "comultiplication, counit or antipode has the wrong size"});
    return r;
  }
  for (const auto& v : verify_algebra(h.alg).violations)
    r.violations.push_back({"algebra " + v.axiom, v.indices, v.detail});

  std::vector<Vec> delta(d);
  for (std::size_t i = 0; i < d; ++i) delta[i] = h.coproduct(h.alg.basis_vector(i));

  for (std::size_t i = 0; i < d; ++i) {
    if (delta_left(h, delta[i]) != delta_right(h, delta[i]))
      r.violations.push_back({"coassociativity", {i}, "(Delta x id) Delta " + idx(i) + " != (id x Delta) Delta " + idx(i)});
    Vec left = zero_vec(f, d), right = zero_vec(f, d);
    for (const auto& t : h.comult[i]) {
      left[t.right] += h.counit[t.left] * t.coeff;
      right[t.left] += h.counit[t.right] * t.coeff;
    }
    if (left != h.alg.basis_vector(i) || right != h.alg.basis_vector(i))
      r.violations.push_back({"counit", {i}, "(eps x id) Delta " + idx(i) + " or (id x eps) Delta " + idx(i) + " differs from " + idx(i)});
  }

  Vec one_one = zero_vec(f, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) one_one[a * d + b] = h.alg.unit()[a] * h.alg.unit()[b];
  if (h.coproduct(h.alg.unit()) != one_one) r.violations.push_back({"bialgebra", {}, "Delta(1) != 1 x 1"});
  if (!h.epsilon(h.alg.unit()).is_one()) r.violations.push_back({"bialgebra", {}, "eps(1) != 1"});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = h.alg.product(i, j);
      if (h.coproduct(prod) != h.tensor_mul(delta[i], delta[j]))
        r.violations.push_back({"bialgebra", {i, j}, "Delta(" + idx(i) + " " + idx(j) + ") != Delta(" + idx(i) + ") Delta(" + idx(j) + ")"});
      if (h.epsilon(prod) != h.counit[i] * h.counit[j])
        r.violations.push_back({"bialgebra", {i, j}, "eps(" + idx(i) + " " + idx(j) + ") != eps(" + idx(i) + ") eps(" + idx(j) + ")"});
    }

  for (std::size_t i = 0; i < d; ++i) {
    Vec left = zero_vec(f, d), right = zero_vec(f, d);
    for (const auto& t : h.comult[i]) {
      axpy(left, t.coeff, h.alg.mul(h.antipode.column(t.left), h.alg.basis_vector(t.right)));
      axpy(right, t.coeff, h.alg.mul(h.alg.basis_vector(t.left), h.antipode.column(t.right)));
    }
    Vec want = scale(h.counit[i], h.alg.unit());
    if (left != want) r.violations.push_back({"antipode", {i}, "S(" + idx(i) + "_1) " + idx(i) + "_2 != eps(" + idx(i) + ") 1"});
    if (right != want) r.violations.push_back({"antipode", {i}, idx(i) + "_1 S(" + idx(i) + "_2) != eps(" + idx(i) + ") 1"});
  }
  return r;
}

Algebra dual_algebra(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  const Field f = h.field();
  std::vector<Vec> products(d * d, zero_vec(f, d));
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& t : h.comult[i]) products[t.left * d + t.right][i] += t.coeff;
  std::vector<std::string> names;
  for (const auto& n : h.alg.basis_names()) names.push_back(n + "*");
  return Algebra(f, names, products, h.counit);
}

std::size_t GrouplikeSet::index_of(const Vec& g) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return i;
  return elements.size();
}

std::size_t GrouplikeSet::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < size(); ++b)
    if (table[a][b] == identity) return b;
  throw std::logic_error("grouplike without inverse");
}

std::size_t GrouplikeSet::order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != identity) {
    x = table[x][a];
    if (++k > size()) throw std::logic_error("grouplike order exceeds group size");
  }
  return k;
}

GrouplikeSet make_grouplike_set(const HopfAlgebra& h, std::vector<Vec> elements, std::vector<std::string> obstructions) {
  GrouplikeSet s;
  s.obstructions = std::move(obstructions);
  const Vec& one = h.alg.unit();
  std::sort(elements.begin(), elements.end(), [&](const Vec& a, const Vec& b) {
    if ((a == one) != (b == one)) return a == one;
    return vec_less(a, b);
  });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements[0] != one) throw std::logic_error("grouplike set lacks the identity");
  s.elements = std::move(elements);
  s.identity = 0;
  const std::size_t n = s.size();
  s.table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = s.index_of(h.alg.mul(s.elements[a], s.elements[b]));
      if (c == n) throw std::logic_error("grouplike set is not closed under multiplication");
      s.table[a][b] = c;
    }
  for (std::size_t a = 0; a < n; ++a) s.inverse(a);
  return s;
}

GrouplikeSet grouplikes(const HopfAlgebra& h, bool allow_partial) {
  const std::size_t d = h.dim();
  const Field f = h.field();
  Algebra dual = dual_algebra(h);
  QuotientAlgebra ab = quotient(dual, commutator_ideal(dual));
  CharacterSearch chars = characters_commutative(ab.algebra);
  if (!allow_partial) chars.require_complete("grouplike search in the dual algebra");
  std::vector<Vec> elems;
  for (const auto& chi : chars.characters) {
    // chi on the quotient, pulled back to H*: g = sum chi(pi(f_i)) b_i.
    Vec g = zero_vec(f, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < ab.algebra.dim(); ++k) g[i] += chi[k] * ab.projection(k, i);
    Vec gg = zero_vec(f, d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) gg[a * d + b] = g[a] * g[b];
    if (h.coproduct(g) != gg || !h.epsilon(g).is_one()) throw std::logic_error("character pulled back to a non-grouplike");
    elems.push_back(std::move(g));
  }
  return make_grouplike_set(h, std::move(elems), chars.obstructions);
}

GrouplikeSet central_grouplikes(const HopfAlgebra& h, const GrouplikeSet& g) {
  std::vector<Vec> central;
  for (const auto& x : g.elements) {
    bool ok = true;
    for (std::size_t i = 0; i < h.dim() && ok; ++i) {
      Vec b = h.alg.basis_vector(i);
      ok = h.alg.mul(x, b) == h.alg.mul(b, x);
    }
    if (ok) central.push_back(x);
  }
  return make_grouplike_set(h, std::move(central), g.obstructions);
}

std::vector<Vec> pivotal_grouplikes(const HopfAlgebra& h, const GrouplikeSet& g, const GrouplikeSet& central) {
  Matrix s2 = h.antipode * h.antipode;
  std::vector<Vec> out;
  for (const auto& x : g.elements) {
    bool ok = true;
    for (std::size_t i = 0; i < h.dim() && ok; ++i)
      ok = h.alg.mul(s2.column(i), x) == h.alg.mul(x, h.alg.basis_vector(i));
    if (ok) out.push_back(x);
  }
  if (!out.empty()) {
    std::vector<Vec> coset;
    for (const auto& z : central.elements) coset.push_back(h.alg.mul(out[0], z));
    auto a = out, b = coset;
    std::sort(a.begin(), a.end(), vec_less);
    std::sort(b.begin(), b.end(), vec_less);
    if (a != b) throw std::logic_error("pivotal grouplikes are not a coset of the central grouplikes");
  }
  return out;
}

bool grouplike_independence(const Field& f, std::size_t dim, const std::vector<Vec>& elements) {
  if (elements.empty()) return true;
  return rank(Matrix::from_columns(f, dim, elements)) == elements.size();
}

GrouplikeDecomposition decompose_p_parts(const GrouplikeSet& g, long long char_p) {
  GrouplikeDecomposition out;
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::size_t ord = g.order(a);
    bool p_power = ord == 1;
    if (char_p > 0 && !p_power) {
      std::size_t o = ord;
      while (o % static_cast<std::size_t>(char_p) == 0) o /= static_cast<std::size_t>(char_p);
      p_power = o == 1;
    }
    bool coprime = char_p == 0 || ord % static_cast<std::size_t>(char_p) != 0;
    if (p_power) out.p_part.push_back(a);
    if (coprime) out.p_prime_part.push_back(a);
  }
  std::vector<int> hits(g.size(), 0);
  for (auto a : out.p_part)
    for (auto b : out.p_prime_part) ++hits[g.table[a][b]];
  for (auto c : hits)
    if (c != 1) throw std::logic_error("p-part and p'-part do not factor the group uniquely");
  return out;
}

// ---------------------------------------------------------------------------

std::size_t FiniteGroup::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < size(); ++b)
    if (table[a][b] == 0) return b;
  throw std::invalid_argument("group element without inverse");
}

void validate_group(const FiniteGroup& g) {
  const std::size_t n = g.size();
  if (n == 0) throw std::invalid_argument("empty group");
  if (g.table.size() != n) throw std::invalid_argument("multiplication table has the wrong number of rows");
  for (const auto& row : g.table) {
    if (row.size() != n) throw std::invalid_argument("multiplication table row has the wrong length");
    for (auto v : row)
      if (v >= n) throw std::invalid_argument("multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (g.table[0][a] != a || g.table[a][0] != a) throw std::invalid_argument("element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t inv = n;
    for (std::size_t b = 0; b < n; ++b)
      if (g.table[a][b] == 0 && g.table[b][a] == 0) inv = b;
    if (inv == n) throw std::invalid_argument("element " + g.names[a] + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw std::invalid_argument("multiplication is not associative at (" + g.names[a] + ", " + g.names[b] + ", " +
                                      g.names[c] + ")");
}

FiniteGroup named_group(const std::string& name) {
  FiniteGroup g;
  if (name.size() > 1 && name[0] == 'Z') {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 1 || n > 64) throw std::invalid_argument("bad cyclic group " + name);
    for (int a = 0; a < n; ++a) g.names.push_back(a == 0 ? "1" : a == 1 ? "g" : "g" + std::to_string(a));
    g.table.assign(n, std::vector<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g.table[a][b] = static_cast<std::size_t>((a + b) % n);
  } else if (name == "S3") {
    std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) g.names.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    g.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
        g.table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
  } else if (name == "D4") {
    // r^i s^j at index i + 4 j, with s r = r^{-1} s.
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 4; ++i) {
        std::string s = i == 0 ? "" : i == 1 ? "r" : "r" + std::to_string(i);
        if (j) s += "s";
        g.names.push_back(s.empty() ? "1" : s);
      }
    g.table.assign(8, std::vector<std::size_t>(8));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        int i = a % 4, j = a / 4, k = b % 4, l = b / 4;
        int ri = ((i + (j ? -k : k)) % 4 + 4) % 4;
        g.table[a][b] = static_cast<std::size_t>(ri + 4 * ((j + l) % 2));
      }
  } else if (name == "Q8") {
    // Units +-1, +-i, +-j, +-k at index 2 u + sign.
    g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    // Unit products: u v = sign * w for u, v in {1, i, j, k}.
    const int w[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    g.table.assign(8, std::vector<std::size_t>(8));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        int u = a / 2, v = b / 2;
        int sign = (a % 2 + b % 2 + sg[u][v]) % 2;
        g.table[a][b] = static_cast<std::size_t>(2 * w[u][v] + sign);
      }
  } else {
    throw std::invalid_argument("unknown group '" + name + "' (expected Zn, S3, D4 or Q8)");
  }
  validate_group(g);
  return g;
}

HopfAlgebra gen_group_algebra(const FiniteGroup& g, const Field& f) {
  validate_group(g);
  const std::size_t n = g.size();
  std::vector<Vec> products;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) products.push_back(unit_vec(f, n, g.table[a][b]));
  HopfAlgebra h;
  h.alg = Algebra(f, g.names, products, unit_vec(f, n, 0));
  h.comult.resize(n);
  for (std::size_t a = 0; a < n; ++a) h.comult[a].push_back({a, a, f.one()});
  h.counit.assign(n, f.one());
  h.antipode = Matrix(f, n, n);
  for (std::size_t a = 0; a < n; ++a) h.antipode(g.inverse(a), a) = f.one();
  return h;
}

HopfAlgebra gen_dual_group_algebra(const FiniteGroup& g, const Field& f) {
  validate_group(g);
  const std::size_t n = g.size();
  std::vector<Vec> products;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) products.push_back(a == b ? unit_vec(f, n, a) : zero_vec(f, n));
  std::vector<std::string> names;
  for (const auto& s : g.names) names.push_back("d_" + s);
  HopfAlgebra h;
  h.alg = Algebra(f, names, products, Vec(n, f.one()));
  h.comult.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.comult[g.table[a][b]].push_back({a, b, f.one()});
  h.counit = unit_vec(f, n, 0);
  h.antipode = Matrix(f, n, n);
  for (std::size_t a = 0; a < n; ++a) h.antipode(g.inverse(a), a) = f.one();
  return h;
}

namespace {

std::vector<CoproductTerm> to_terms(const Vec& v, std::size_t d) {
  std::vector<CoproductTerm> out;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (!v[a * d + b].is_zero()) out.push_back({a, b, v[a * d + b]});
  return out;
}

// Fills comultiplication and antipode of a Hopf algebra generated by g and x
// from their images, with basis g^i x^j at index i * n + j.
void extend_from_generators(HopfAlgebra& h, int n, const Vec& delta_g, const Vec& delta_x, const Vec& s_g,
                            const Vec& s_x) {
  const std::size_t d = h.dim();
  const Field f = h.field();
  Vec unit_unit = zero_vec(f, d * d);
  unit_unit[0] = f.one();
  h.comult.assign(d, {});
  h.antipode = Matrix(f, d, d);
  std::vector<Vec> dg{unit_unit}, sg{h.alg.unit()};
  for (int i = 1; i < n; ++i) {
    dg.push_back(h.tensor_mul(dg.back(), delta_g));
    sg.push_back(h.alg.mul(sg.back(), s_g));
  }
  for (int i = 0; i < n; ++i) {
    Vec dx = dg[i];
    Vec sx = sg[i];  // S(g^i x^j) = S(x)^j S(g)^i
    for (int j = 0; j < n; ++j) {
      std::size_t idx = static_cast<std::size_t>(i * n + j);
      h.comult[idx] = to_terms(dx, d);
      h.antipode.set_column(idx, sx);
      dx = h.tensor_mul(dx, delta_x);
      sx = h.alg.mul(s_x, sx);
    }
  }
}

}  // namespace

HopfAlgebra gen_taft_unchecked(int n, const Scalar& q, const Field& f) {
  if (n < 2) throw std::invalid_argument("Taft algebras need n >= 2");
  if (q.field() != f) throw FieldMismatch("q lies in a different field");
  const std::size_t d = static_cast<std::size_t>(n * n);
  std::vector<Scalar> qpow{f.one()};
  for (int k = 1; k < n * n; ++k) qpow.push_back(qpow.back() * q);
  std::vector<Vec> products;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string s = i == 0 ? "" : i == 1 ? "g" : "g" + std::to_string(i);
      s += j == 0 ? "" : j == 1 ? "x" : "x" + std::to_string(j);
      names.push_back(s.empty() ? "1" : s);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Vec v = zero_vec(f, d);
          // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}
          if (j + l < n) v[static_cast<std::size_t>(((i + k) % n) * n + j + l)] = qpow[static_cast<std::size_t>(j * k)];
          products.push_back(std::move(v));
        }
    }
  // Row-major in (i n + j, k n + l).
  HopfAlgebra h;
  h.alg = Algebra(f, names, products, unit_vec(f, d, 0));
  h.counit = zero_vec(f, d);
  for (int i = 0; i < n; ++i) h.counit[static_cast<std::size_t>(i * n)] = f.one();
  const std::size_t g = static_cast<std::size_t>(n), x = 1;
  const std::size_t ginv = static_cast<std::size_t>((n - 1) * n);
  Vec delta_g = zero_vec(f, d * d), delta_x = zero_vec(f, d * d);
  delta_g[g * d + g] = f.one();
  delta_x[x * d + g] = f.one();
  delta_x[0 * d + x] = f.one();
  Vec s_g = unit_vec(f, d, ginv);
  // S(x) = -x g^{-1}
  Vec s_x = scale(-f.one(), h.alg.product(x, ginv));
  extend_from_generators(h, n, delta_g, delta_x, s_g, s_x);
  return h;
}

HopfAlgebra gen_taft(int n, const Scalar& q, const Field& f) {
  if (n < 2) throw std::invalid_argument("Taft algebras need n >= 2");
  if (q.field() != f) throw FieldMismatch("q lies in a different field");
  long long ord = multiplicative_order(q, 4LL * n);
  if (ord != n) {
    std::ostringstream os;
    os << "q = " << q.to_string() << " is not a primitive root of unity of order " << n << " in " << f.spec_string();
    if (ord > 0) os << " (its multiplicative order is " << ord << ")";
    throw std::invalid_argument(os.str());
  }
  return gen_taft_unchecked(n, q, f);
}

HopfAlgebra gen_sweedler(const Field& f) {
  if (f.characteristic() == 2) throw std::invalid_argument("Sweedler's algebra needs characteristic != 2");
  const Scalar one = f.one(), zero = f.zero(), m1 = -f.one();
  // Basis 1, g, x, gx.
  auto v = [&](Scalar a, Scalar b, Scalar c, Scalar d) { return Vec{a, b, c, d}; };
  std::vector<Vec> products{
      v(one, zero, zero, zero), v(zero, one, zero, zero), v(zero, zero, one, zero), v(zero, zero, zero, one),  // 1 *
      v(zero, one, zero, zero), v(one, zero, zero, zero), v(zero, zero, zero, one), v(zero, zero, one, zero),  // g *
      v(zero, zero, one, zero), v(zero, zero, zero, m1), v(zero, zero, zero, zero), v(zero, zero, zero, zero),  // x *
      v(zero, zero, zero, one), v(zero, zero, m1, zero), v(zero, zero, zero, zero), v(zero, zero, zero, zero),  // gx *
  };
  HopfAlgebra h;
  h.alg = Algebra(f, {"1", "g", "x", "gx"}, products, v(one, zero, zero, zero));
  h.comult = {
      {{0, 0, one}},
      {{1, 1, one}},
      {{2, 0, one}, {1, 2, one}},
      {{3, 1, one}, {0, 3, one}},
  };
  h.counit = v(one, one, zero, zero);
  h.antipode = Matrix(f, 4, 4);
  h.antipode(0, 0) = one;
  h.antipode(1, 1) = one;
  h.antipode(3, 2) = m1;  // S(x) = -gx
  h.antipode(2, 3) = one;  // S(gx) = x
  return h;
}

}  // namespace ftc
