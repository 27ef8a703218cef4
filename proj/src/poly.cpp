#include "ftc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ftc {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw FieldMismatch("polynomial coefficient over " + c.field().spec_string());
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x(Field f) { return Poly(f, {f.zero(), f.one()}); }
Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::from_ints(Field f, const std::vector<long long>& coeffs) {
  std::vector<Scalar> c;
  for (auto v : coeffs) c.push_back(f.from_int(v));
  return Poly(f, std::move(c));
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return c_[static_cast<std::size_t>(i)];
}

Scalar Poly::lead() const {
  if (c_.empty()) return field_.zero();
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return lead().inv() * *this;
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_.from_int(static_cast<long long>(i)) * c_[i]);
  return Poly(field_, std::move(d));
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar r = field_.zero();
  for (std::size_t k = c_.size(); k-- > 0;) r = r * at + c_[k];
  return r;
}

Matrix Poly::eval(const Matrix& at) const {
  Matrix r(field_, at.rows(), at.cols());
  Matrix id = Matrix::identity(field_, at.rows());
  for (std::size_t k = c_.size(); k-- > 0;) r = r * at + c_[k] * id;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.field_ != field_) throw FieldMismatch("polynomial sum over different fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator-(const Poly& p) {
  Poly r = p;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) throw FieldMismatch("polynomial product over different fields");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.field_, std::move(r));
}

Poly operator*(const Scalar& c, const Poly& p) {
  Poly r = p;
  for (auto& x : r.c_) x *= c;
  r.normalize();
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    auto c = a.coeff(k) <=> b.coeff(k);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string c = c_[k].to_string();
    bool compound = c.find_first_of("+a") != std::string::npos ||
                    (c.find('/') != std::string::npos && k > 0);
    bool negative = c[0] == '-' && !compound;
    if (!first) os << (negative ? "-" : "+");
    else if (negative) os << "-";
    if (negative) c = c.substr(1);
    first = false;
    if (compound && k > 0) c = "(" + c + ")";
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != "1") os << c << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw FieldMismatch("division over different fields");
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Field f = a.field();
  std::vector<Scalar> r = a.coeffs();
  const auto& bc = b.coeffs();
  if (r.size() < bc.size()) return {Poly(f), a};
  std::vector<Scalar> q(r.size() - bc.size() + 1, f.zero());
  Scalar li = b.lead().inv();
  const auto db = static_cast<std::ptrdiff_t>(bc.size()) - 1;
  for (auto k = static_cast<std::ptrdiff_t>(r.size()) - 1; k >= db; --k) {
    if (r[k].is_zero()) continue;
    Scalar c = r[k] * li;
    q[k - db] = c;
    for (std::ptrdiff_t i = 0; i <= db; ++i)
      if (!bc[i].is_zero()) r[k - db + i] -= c * bc[i];
  }
  r.resize(bc.size() - 1);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  Field f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar li = r0.lead().inv();
  return {li * r0, li * s0, li * t0};
}

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& mod) {
  Poly result = Poly::constant(base.field().one()) % mod;
  Poly b = base % mod;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = (result * b) % mod;
    k >>= 1;
    if (k > 0) b = (b * b) % mod;
  }
  return result;
}

Poly compose(const Poly& p, const Poly& q) {
  Poly r(p.field());
  for (int k = p.degree(); k >= 0; --k) r = r * q + Poly::constant(p.coeff(k));
  return r;
}

// ---------------------------------------------------------------------------
// Finite fields.

namespace {

std::mt19937_64 factoring_rng() { return std::mt19937_64(0x6a09e667f3bcc909ULL); }

Scalar random_element(const Field& f, std::mt19937_64& rng) {
  mpz_class q = f.order();
  mpz_class v = 0;
  for (int i = 0; i < 3; ++i) v = (v << 64) + mpz_class(std::to_string(rng()));
  return f.element(v % q);
}

// a^(1/p) in F_q, i.e. a^(q/p).
Scalar pth_root(const Scalar& a) {
  Field f = a.field();
  return a.pow(mpz_class(f.order() / mpz_class(static_cast<long>(f.characteristic()))));
}

std::vector<PolyFactor> squarefree_finite(const Poly& f) {
  Field fld = f.field();
  const long p = static_cast<long>(fld.characteristic());
  std::vector<PolyFactor> out;
  Poly one = Poly::constant(fld.one());
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    std::vector<Scalar> root;
    for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) root.push_back(pth_root(c.coeff(k)));
    for (auto& pf : squarefree_finite(Poly(fld, root).monic())) out.push_back({pf.factor, pf.multiplicity * static_cast<int>(p)});
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
  Field fld = f.field();
  mpz_class q = fld.order();
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  Poly x = Poly::x(fld);
  Poly h = x;
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = pow_mod(h, q, rest);
    Poly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  Field fld = g.field();
  mpz_class q = fld.order();
  const bool even = fld.characteristic() == 2;
  for (;;) {
    std::vector<Scalar> coeffs;
    for (int i = 0; i < g.degree(); ++i) coeffs.push_back(random_element(fld, rng));
    Poly a(fld, coeffs);
    if (a.degree() < 1) continue;
    Poly b(fld);
    if (even) {
      // Trace map a + a^2 + ... + a^(2^(m d - 1)), q = 2^m.
      const int steps = fld.degree() * d;
      Poly t = a % g;
      b = t;
      for (int i = 1; i < steps; ++i) {
        t = (t * t) % g;
        b += t;
      }
    } else {
      mpz_class qd;
      mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
      b = pow_mod(a, (qd - 1) / 2, g) - Poly::constant(fld.one());
    }
    Poly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_squarefree_finite(const Poly& f) {
  std::vector<Poly> out;
  auto rng = factoring_rng();
  for (auto& [g, d] : distinct_degree(f.monic())) equal_degree(g, d, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// Char 0: Yun's squarefree decomposition.

std::vector<PolyFactor> squarefree_char0(const Poly& f) {
  std::vector<PolyFactor> out;
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = f / a;
  Poly c = fp / a;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly ai = gcd(b, d);
    b = b / ai;
    c = d / ai;
    d = c - b.derivative();
    if (ai.degree() > 0) out.push_back({ai.monic(), i});
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus over Z.

using ZPoly = std::vector<mpz_class>;  // constant term first, no trailing zeros

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly primitive_from_rational(const Poly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.rational().get_den());
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(mpz_class(c.rational() * den));
  mpz_class g = zcontent(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

Poly zpoly_to_q(const ZPoly& z) {
  Field q = Field::rationals();
  std::vector<Scalar> c;
  for (const auto& v : z) c.push_back(q.from_mpz(v));
  return Poly(q, c);
}

Poly zpoly_mod(const ZPoly& z, const Field& fp) {
  std::vector<Scalar> c;
  for (const auto& v : z) c.push_back(fp.from_mpz(v));
  return Poly(fp, c);
}

ZPoly lift_poly(const Poly& p) {
  ZPoly z;
  for (const auto& c : p.coeffs()) z.emplace_back(static_cast<long>(c.residue()));
  return z;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

ZPoly zadd_scaled(ZPoly a, const mpz_class& m, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += m * b[i];
  ztrim(a);
  return a;
}

// Coefficients reduced into the symmetric range (-m/2, m/2].
ZPoly zsymmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (2 * c > m) c -= m;
  }
  ztrim(a);
  return a;
}

// Lifts f ≡ g h (mod p) with g monic to f ≡ g h (mod modulus).
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const Poly& g0, const Poly& h0, long p, const mpz_class& modulus) {
  Field fp = g0.field();
  auto [gg, s, t] = xgcd(g0, h0);
  if (gg.degree() != 0) throw std::logic_error("Hensel lifting needs coprime factors");
  ZPoly g = lift_poly(g0), h = lift_poly(h0);
  h.back() = f.back();
  mpz_class m = p;
  while (m < modulus) {
    ZPoly e = zsub(f, zmul(g, h));
    for (auto& c : e) {
      if (c % m != 0) throw std::logic_error("Hensel invariant broken");
      c /= m;
    }
    Poly ebar = zpoly_mod(e, fp);
    auto [q, dg] = divmod(t * ebar, g0);
    Poly dh = s * ebar + q * h0;
    g = zadd_scaled(g, m, lift_poly(dg));
    h = zadd_scaled(h, m, lift_poly(dh));
    m *= p;
  }
  return {zsymmod(g, modulus), zsymmod(h, modulus)};
}

std::vector<ZPoly> hensel_multi(const ZPoly& f, std::vector<Poly> factors, long p, const mpz_class& modulus) {
  Field fp = factors[0].field();
  if (factors.size() == 1) {
    mpz_class lc = f.back();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c *= inv;
    return {zsymmod(g, modulus)};
  }
  Poly g0 = factors[0];
  Poly h0 = Poly::constant(fp.from_mpz(f.back()));
  for (std::size_t i = 1; i < factors.size(); ++i) h0 = h0 * factors[i];
  auto [g, h] = hensel_pair(f, g0, h0, p, modulus);
  std::vector<ZPoly> out{g};
  factors.erase(factors.begin());
  for (auto& r : hensel_multi(h, factors, p, modulus)) out.push_back(std::move(r));
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors of a squarefree primitive integer polynomial of degree >= 1.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  Poly fq = zpoly_to_q(f);

  // Pick the prime giving the fewest modular factors among a few good ones.
  long best_p = 0;
  std::vector<Poly> best;
  int good = 0;
  for (long p = 3; good < 6 && p < 100000; p += 2) {
    if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25) == 0) continue;
    if (f.back() % p == 0) continue;
    Field fp = Field::prime(p);
    Poly fbar = zpoly_mod(f, fp);
    if (gcd(fbar, fbar.derivative()).degree() > 0) continue;
    ++good;
    auto facs = factor_squarefree_finite(fbar);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("no suitable prime for Zassenhaus factorization");
  if (best.size() == 1) return {f};
  std::sort(best.begin(), best.end());

  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class bound = abs(f.back()) * norm;
  bound <<= n;
  mpz_class modulus = best_p;
  while (modulus <= 2 * bound) modulus *= best_p;

  std::vector<ZPoly> lifted = hensel_multi(f, best, best_p, modulus);
  std::vector<ZPoly> out;
  ZPoly rest = f;
  for (std::size_t s = 1; 2 * s <= lifted.size();) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly cand{mpz_class(rest.back())};
      for (auto i : idx) cand = zsymmod(zmul(cand, lifted[i]), modulus);
      mpz_class ct = zcontent(cand);
      if (ct == 0) continue;
      for (auto& c : cand) c /= ct;
      if (cand.back() < 0)
        for (auto& c : cand) c = -c;
      if (rest[0] % (cand[0] == 0 ? mpz_class(1) : cand[0]) != 0) continue;
      auto [q, r] = divmod(zpoly_to_q(rest), zpoly_to_q(cand));
      if (!r.is_zero()) continue;
      out.push_back(cand);
      rest = primitive_from_rational(q);
      for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
      found = true;
      break;
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (rest.size() > 1) out.push_back(rest);
  return out;
}

std::vector<Poly> factor_squarefree_q(const Poly& f) {
  std::vector<Poly> out;
  for (const auto& z : zassenhaus(primitive_from_rational(f))) out.push_back(zpoly_to_q(z).monic());
  return out;
}

// ---------------------------------------------------------------------------
// Trager over Q(a).

Scalar norm_to_q(const Scalar& beta) {
  Field k = beta.field();
  const int d = k.degree();
  Field q = Field::rationals();
  Matrix m(q, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  Scalar basis = k.one();
  for (int j = 0; j < d; ++j) {
    auto col = (beta * basis).coefficients();
    for (int i = 0; i < d; ++i) m(i, j) = col[i];
    basis *= k.generator();
  }
  return determinant(m);
}

// Newton interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  Field f = xs[0].field();
  std::vector<Scalar> dd = ys;
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Poly result = Poly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) result = result * (Poly::x(f) - Poly::constant(xs[i])) + Poly::constant(dd[i]);
  return result;
}

std::vector<Poly> factor_squarefree_trager(const Poly& f) {
  Field k = f.field();
  Field q = Field::rationals();
  const int n = f.degree(), d = k.degree();
  if (n <= 1) return {f.monic()};
  Poly x = Poly::x(k);
  Scalar alpha = k.generator();
  for (long s : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L, 7L, -7L}) {
    Scalar shift = k.from_int(s) * alpha;
    Poly fs = compose(f, x - Poly::constant(shift));
    std::vector<Scalar> xs, ys;
    for (int t = 0; t <= n * d; ++t) {
      xs.push_back(q.from_int(t));
      ys.push_back(norm_to_q(fs.eval(k.from_int(t))));
    }
    Poly norm = interpolate(xs, ys);
    if (gcd(norm, norm.derivative()).degree() > 0) continue;
    std::vector<Poly> out;
    for (const auto& g : factor_squarefree_q(norm)) {
      std::vector<Scalar> lifted;
      for (const auto& c : g.coeffs()) lifted.push_back(k.from_rational(c.rational()));
      Poly h = gcd(fs, Poly(k, lifted));
      if (h.degree() > 0) out.push_back(compose(h, x + Poly::constant(shift)).monic());
    }
    return out;
  }
  throw std::runtime_error("no squarefree norm found for Trager factorization");
}

std::vector<Poly> factor_squarefree(const Poly& f) {
  Field fld = f.field();
  if (f.degree() <= 1) return {f.monic()};
  if (fld.is_finite()) return factor_squarefree_finite(f);
  if (fld.kind() == FieldKind::rationals) return factor_squarefree_q(f);
  return factor_squarefree_trager(f);
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  if (f.degree() == 0) return {};
  Poly m = f.monic();
  auto out = f.field().is_finite() ? squarefree_finite(m) : squarefree_char0(m);
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    return a.multiplicity != b.multiplicity ? a.multiplicity < b.multiplicity : a.factor < b.factor;
  });
  return out;
}

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  Factorization out{f.lead(), {}};
  for (const auto& [g, mult] : squarefree_decomposition(f))
    for (auto& irr : factor_squarefree(g)) out.factors.push_back({std::move(irr), mult});
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

std::vector<Scalar> roots(const Poly& f) {
  std::vector<Scalar> out;
  for (const auto& pf : factor(f).factors)
    if (pf.factor.degree() == 1) out.push_back(-pf.factor.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

bool is_irreducible_over(const Field& base, const std::vector<mpz_class>& coeffs) {
  std::vector<Scalar> c;
  for (const auto& v : coeffs) c.push_back(base.from_mpz(v));
  return is_irreducible(Poly(base, c));
}

// ---------------------------------------------------------------------------

Poly charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly of a non-square matrix");
  Field f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && h(i, k - 1).is_zero()) ++i;
    if (i == n) continue;
    Scalar t = h(i, k - 1);
    if (i != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, k));
    }
    Scalar tinv = t.inv();
    for (std::size_t j = k + 1; j < n; ++j) {
      Scalar u = h(j, k - 1) * tinv;
      if (u.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) h(j, c) -= u * h(k, c);
      for (std::size_t r = 0; r < n; ++r) h(r, k) += u * h(r, j);
    }
  }
  std::vector<Poly> p{Poly::constant(f.one())};
  Poly x = Poly::x(f);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly pk = (x - Poly::constant(h(k - 1, k - 1))) * p[k - 1];
    Scalar t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      pk -= (t * h(k - i - 1, k - 1)) * p[k - i - 1];
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

Poly minpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minpoly of a non-square matrix");
  Field f = m.field();
  const std::size_t n = m.rows();
  auto flatten = [&](const Matrix& a) {
    Vec v;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v.push_back(a(r, c));
    return v;
  };
  std::vector<Vec> powers;
  Matrix cur = Matrix::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec v = flatten(cur);
    if (k > 0) {
      Matrix basis = Matrix::from_columns(f, n * n, powers);
      if (auto c = solve(basis, v)) {
        std::vector<Scalar> coeffs;
        for (const auto& x : *c) coeffs.push_back(-x);
        coeffs.push_back(f.one());
        return Poly(f, coeffs);
      }
    }
    powers.push_back(std::move(v));
    cur = cur * m;
  }
  throw std::logic_error("minimal polynomial exceeded the dimension bound");
}

// ---------------------------------------------------------------------------

std::vector<mpz_class> parse_int_poly(const std::string& text) {
  Poly p = parse_poly(text, Field::rationals());
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs()) {
    if (c.rational().get_den() != 1) throw std::invalid_argument("non-integer coefficient in " + text);
    out.push_back(c.rational().get_num());
  }
  return out;
}

Poly parse_poly(const std::string& text, Field f) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<Scalar> coeffs;
  auto add_term = [&](const mpq_class& c, std::size_t deg) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, f.zero());
    coeffs[deg] += f.from_rational(c);
  };
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::string num;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) num += s[i++];
    mpq_class c = 1;
    if (!num.empty()) {
      c = mpq_class(num);
      c.canonicalize();
    }
    std::size_t deg = 0;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
        if (e.empty()) throw std::invalid_argument("bad exponent in " + text);
        deg = std::stoul(e);
      }
    } else if (num.empty()) {
      throw std::invalid_argument("cannot parse polynomial " + text);
    }
    add_term(sign * c, deg);
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw std::invalid_argument("cannot parse polynomial " + text);
  }
  return Poly(f, coeffs);
}

}  // namespace ftc
