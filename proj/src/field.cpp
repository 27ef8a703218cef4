#include "ftc/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ftc/poly.hpp"

namespace ftc {

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::rationals;
  std::int64_t p = 0;
  int deg = 1;
  const FieldData* base = nullptr;
  std::vector<mpz_class> min_poly;  // monic, constant term first
  std::vector<std::int64_t> m_mod;  // min_poly mod p (prime-field base)
  std::vector<mpq_class> m_q;       // min_poly over Q
  std::string spec;
};

}  // namespace detail

namespace {

using detail::FieldData;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldData>> r;
  return r;
}

const FieldData* intern(std::unique_ptr<FieldData> fd) {
  std::lock_guard lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(fd->spec);
  if (it != reg.end()) return it->second.get();
  const FieldData* raw = fd.get();
  reg.emplace(fd->spec, std::move(fd));
  return raw;
}

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_norm(a, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  if (a == 0) throw std::domain_error("inverse of zero");
  return powmod(a, p - 2, p);
}

std::int64_t mpz_mod_small(const mpz_class& v, std::int64_t p) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

struct FpOps {
  std::int64_t p;
  using T = std::int64_t;
  T zero() const { return 0; }
  T one() const { return 1 % p; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const {
    T r = a + b;
    return r >= p ? r - p : r;
  }
  T sub(T a, T b) const {
    T r = a - b;
    return r < 0 ? r + p : r;
  }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T mul(T a, T b) const { return mulmod(a, b, p); }
  T inv(T a) const { return invmod(a, p); }
};

struct QOps {
  using T = mpq_class;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
};

template <class Ops, class T = typename Ops::T>
void trim(const Ops& ops, std::vector<T>& a) {
  while (!a.empty() && ops.is_zero(a.back())) a.pop_back();
}

// a mod m for monic m, result padded to deg(m) entries.
template <class Ops, class T = typename Ops::T>
std::vector<T> reduce_monic(const Ops& ops, std::vector<T> a, const std::vector<T>& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t k = a.size(); k-- > d;) {
    T c = a[k];
    if (ops.is_zero(c)) continue;
    for (std::size_t i = 0; i <= d; ++i) a[k - d + i] = ops.sub(a[k - d + i], ops.mul(c, m[i]));
  }
  a.resize(d, ops.zero());
  return a;
}

template <class Ops, class T = typename Ops::T>
std::vector<T> ext_mul(const Ops& ops, const std::vector<T>& a, const std::vector<T>& b,
                       const std::vector<T>& m) {
  std::vector<T> r(a.size() + b.size() - 1, ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ops.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
  }
  return reduce_monic(ops, std::move(r), m);
}

// (q, r) with a = q*b + r; b nonzero and trimmed.
template <class Ops, class T = typename Ops::T>
std::pair<std::vector<T>, std::vector<T>> poly_divmod(const Ops& ops, std::vector<T> a,
                                                      const std::vector<T>& b) {
  trim(ops, a);
  if (a.size() < b.size()) return {{}, a};
  std::vector<T> q(a.size() - b.size() + 1, ops.zero());
  T lead_inv = ops.inv(b.back());
  const auto db = static_cast<std::ptrdiff_t>(b.size()) - 1;
  for (auto k = static_cast<std::ptrdiff_t>(a.size()) - 1; k >= db; --k) {
    T c = ops.mul(a[k], lead_inv);
    q[k - db] = c;
    if (ops.is_zero(c)) continue;
    for (std::ptrdiff_t i = 0; i <= db; ++i) a[k - db + i] = ops.sub(a[k - db + i], ops.mul(c, b[i]));
  }
  a.resize(b.size() - 1);
  trim(ops, a);
  trim(ops, q);
  return {q, a};
}

template <class Ops, class T = typename Ops::T>
std::vector<T> poly_mul(const Ops& ops, const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1, ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
  trim(ops, r);
  return r;
}

template <class Ops, class T = typename Ops::T>
std::vector<T> poly_sub(const Ops& ops, std::vector<T> a, const std::vector<T>& b) {
  if (a.size() < b.size()) a.resize(b.size(), ops.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ops.sub(a[i], b[i]);
  trim(ops, a);
  return a;
}

template <class Ops, class T = typename Ops::T>
std::vector<T> ext_inv(const Ops& ops, const std::vector<T>& a, const std::vector<T>& m) {
  std::vector<T> r0 = m, r1 = a;
  trim(ops, r1);
  if (r1.empty()) throw std::domain_error("inverse of zero");
  std::vector<T> s0, s1{ops.one()};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(ops, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = poly_sub(ops, s0, poly_mul(ops, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::domain_error("element not invertible: modulus is reducible");
  T c = ops.inv(r0[0]);
  for (auto& v : s0) v = ops.mul(v, c);
  s0.resize(m.size() - 1, ops.zero());
  return s0;
}

std::string render_int_poly(const std::vector<mpz_class>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    mpz_class a = abs(c[k]);
    if (!first) os << (c[k] < 0 ? "-" : "+");
    else if (c[k] < 0) os << "-";
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0 && a != 1) os << "*";
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

Field Field::rationals() {
  auto fd = std::make_unique<FieldData>();
  fd->kind = FieldKind::rationals;
  fd->spec = "Q";
  return Field(intern(std::move(fd)));
}

Field Field::prime(std::int64_t p) {
  if (p < 2 || p > (std::int64_t{1} << 62)) throw std::invalid_argument("prime out of range: " + std::to_string(p));
  mpz_class pz(static_cast<long>(p));
  if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0) throw std::invalid_argument("not a prime: " + std::to_string(p));
  auto fd = std::make_unique<FieldData>();
  fd->kind = FieldKind::prime;
  fd->p = p;
  fd->spec = "Fp:" + std::to_string(p);
  return Field(intern(std::move(fd)));
}

Field Field::extension(const Field& base, std::vector<mpz_class> min_poly) {
  if (base.kind() == FieldKind::extension) throw std::invalid_argument("extension towers are not supported");
  if (min_poly.size() < 3) throw std::invalid_argument("minimal polynomial must have degree >= 2");
  if (base.kind() == FieldKind::prime) {
    for (auto& c : min_poly) c = mpz_class(static_cast<long>(mpz_mod_small(c, base.characteristic())));
  }
  if (min_poly.back() != 1) throw std::invalid_argument("minimal polynomial must be monic");
  if (!is_irreducible_over(base, min_poly))
    throw std::invalid_argument("minimal polynomial " + render_int_poly(min_poly) + " is reducible over " +
                                base.spec_string());
  auto fd = std::make_unique<FieldData>();
  fd->kind = FieldKind::extension;
  fd->p = base.characteristic();
  fd->deg = static_cast<int>(min_poly.size()) - 1;
  fd->base = base.d_;
  fd->min_poly = min_poly;
  if (fd->p > 0) {
    for (const auto& c : min_poly) fd->m_mod.push_back(mpz_mod_small(c, fd->p));
  } else {
    for (const auto& c : min_poly) fd->m_q.emplace_back(c);
  }
  fd->spec = "ext:" + base.spec_string() + ":" + render_int_poly(min_poly);
  return Field(intern(std::move(fd)));
}

FieldKind Field::kind() const { return d_->kind; }
std::int64_t Field::characteristic() const { return d_->p; }
int Field::degree() const { return d_->deg; }
Field Field::base() const { return d_->base ? Field(d_->base) : *this; }
const std::vector<mpz_class>& Field::min_poly() const { return d_->min_poly; }
bool Field::is_finite() const { return d_->p > 0; }

mpz_class Field::order() const {
  if (!is_finite()) throw std::logic_error("order of an infinite field");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(d_->p), static_cast<unsigned long>(d_->deg));
  return q;
}

std::string Field::spec_string() const { return d_->spec; }

bool operator<(const Field& a, const Field& b) { return a.spec_string() < b.spec_string(); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const { return from_mpz(mpz_class(static_cast<long>(v))); }

Scalar Field::from_mpz(const mpz_class& v) const { return from_rational(mpq_class(v)); }

Scalar Field::from_rational(const mpq_class& v) const {
  switch (d_->kind) {
    case FieldKind::rationals: {
      mpq_class c(v);
      c.canonicalize();
      return Scalar(d_, std::move(c));
    }
    case FieldKind::prime: {
      std::int64_t den = mpz_mod_small(v.get_den(), d_->p);
      if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
      return Scalar(d_, mulmod(mpz_mod_small(v.get_num(), d_->p), invmod(den, d_->p), d_->p));
    }
    case FieldKind::extension: {
      if (d_->p > 0) {
        std::vector<std::int64_t> c(d_->deg, 0);
        c[0] = Field(d_->base).from_rational(v).residue();
        return Scalar(d_, std::move(c));
      }
      std::vector<mpq_class> c(d_->deg, mpq_class(0));
      c[0] = v;
      c[0].canonicalize();
      return Scalar(d_, std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Field::from_coefficients(const std::vector<Scalar>& base_coeffs) const {
  if (d_->kind != FieldKind::extension) {
    if (base_coeffs.size() != 1) throw std::invalid_argument("base field scalars take one coefficient");
    if (base_coeffs[0].field() != *this) throw FieldMismatch("coefficient over wrong field");
    return base_coeffs[0];
  }
  if (static_cast<int>(base_coeffs.size()) > d_->deg)
    throw std::invalid_argument("too many coefficients for extension of degree " + std::to_string(d_->deg));
  Field b(d_->base);
  for (const auto& c : base_coeffs)
    if (c.field() != b) throw FieldMismatch("extension coefficient must lie in the base field");
  if (d_->p > 0) {
    std::vector<std::int64_t> c(d_->deg, 0);
    for (std::size_t i = 0; i < base_coeffs.size(); ++i) c[i] = base_coeffs[i].residue();
    return Scalar(d_, std::move(c));
  }
  std::vector<mpq_class> c(d_->deg, mpq_class(0));
  for (std::size_t i = 0; i < base_coeffs.size(); ++i) c[i] = base_coeffs[i].rational();
  return Scalar(d_, std::move(c));
}

Scalar Field::generator() const {
  if (d_->kind != FieldKind::extension) throw std::logic_error("generator() needs an extension field");
  Field b(d_->base);
  std::vector<Scalar> c{b.zero(), b.one()};
  return from_coefficients(c);
}

Scalar Field::element(const mpz_class& index) const {
  if (!is_finite()) throw std::logic_error("cannot enumerate an infinite field");
  if (index < 0 || index >= order()) throw std::out_of_range("field element index out of range");
  if (d_->kind == FieldKind::prime) return Scalar(d_, mpz_mod_small(index, d_->p));
  std::vector<std::int64_t> c(d_->deg, 0);
  mpz_class rest = index;
  mpz_class pz(static_cast<long>(d_->p));
  for (int i = 0; i < d_->deg; ++i) {
    c[i] = mpz_mod_small(rest, d_->p);
    rest /= pz;
  }
  return Scalar(d_, std::move(c));
}

mpz_class Field::index_of(const Scalar& s) const {
  if (s.field() != *this) throw FieldMismatch("index_of: wrong field");
  if (!is_finite()) throw std::logic_error("cannot enumerate an infinite field");
  if (d_->kind == FieldKind::prime) return mpz_class(static_cast<long>(s.residue()));
  const auto& c = std::get<std::vector<std::int64_t>>(s.v_);
  mpz_class idx = 0;
  mpz_class pz(static_cast<long>(d_->p));
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * pz + mpz_class(static_cast<long>(c[i]));
  return idx;
}

// ---------------------------------------------------------------------------

void Scalar::check_same(const Scalar& o) const {
  if (f_ == nullptr || o.f_ == nullptr) throw std::logic_error("operation on an unset scalar");
  if (f_ != o.f_) throw FieldMismatch("scalars from different fields: " + f_->spec + " vs " + o.f_->spec);
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::int64_t>) return v == 0;
        else if constexpr (std::is_same_v<V, mpq_class>) return sgn(v) == 0;
        else if constexpr (std::is_same_v<V, std::vector<std::int64_t>>)
          return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
        else return std::all_of(v.begin(), v.end(), [](const auto& x) { return sgn(x) == 0; });
      },
      v_);
}

bool Scalar::is_one() const { return f_ != nullptr && *this == Field(f_).one(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  std::visit(
      [this](auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::int64_t>) v = FpOps{f_->p}.neg(v);
        else if constexpr (std::is_same_v<V, mpq_class>) v = -v;
        else if constexpr (std::is_same_v<V, std::vector<std::int64_t>>)
          for (auto& x : v) x = FpOps{f_->p}.neg(x);
        else
          for (auto& x : v) x = -x;
      },
      r.v_);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  std::visit(
      [this, &o](auto& v) {
        using V = std::decay_t<decltype(v)>;
        const auto& w = std::get<V>(o.v_);
        if constexpr (std::is_same_v<V, std::int64_t>) v = FpOps{f_->p}.add(v, w);
        else if constexpr (std::is_same_v<V, mpq_class>) v += w;
        else if constexpr (std::is_same_v<V, std::vector<std::int64_t>>)
          for (std::size_t i = 0; i < v.size(); ++i) v[i] = FpOps{f_->p}.add(v[i], w[i]);
        else
          for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      },
      v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  std::visit(
      [this, &o](auto& v) {
        using V = std::decay_t<decltype(v)>;
        const auto& w = std::get<V>(o.v_);
        if constexpr (std::is_same_v<V, std::int64_t>) v = mulmod(v, w, f_->p);
        else if constexpr (std::is_same_v<V, mpq_class>) v *= w;
        else if constexpr (std::is_same_v<V, std::vector<std::int64_t>>) v = ext_mul(FpOps{f_->p}, v, w, f_->m_mod);
        else v = ext_mul(QOps{}, v, w, f_->m_q);
      },
      v_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::inv() const {
  if (f_ == nullptr) throw std::logic_error("operation on an unset scalar");
  Scalar r = *this;
  std::visit(
      [this](auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::int64_t>) v = invmod(v, f_->p);
        else if constexpr (std::is_same_v<V, mpq_class>) v = QOps{}.inv(v);
        else if constexpr (std::is_same_v<V, std::vector<std::int64_t>>) v = ext_inv(FpOps{f_->p}, v, f_->m_mod);
        else v = ext_inv(QOps{}, v, f_->m_q);
      },
      r.v_);
  return r;
}

Scalar Scalar::pow(const mpz_class& e) const {
  if (f_ == nullptr) throw std::logic_error("operation on an unset scalar");
  if (e < 0) return inv().pow(mpz_class(-e));
  Scalar result = Field(f_).one();
  Scalar b = *this;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_) return false;
  return a.v_ == b.v_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_) {
    std::string sa = a.f_ ? a.f_->spec : "", sb = b.f_ ? b.f_->spec : "";
    return sa <=> sb;
  }
  bool za = a.is_zero(), zb = b.is_zero();
  if (za || zb) return zb <=> za;
  return std::visit(
      [&b](const auto& v) -> std::strong_ordering {
        using V = std::decay_t<decltype(v)>;
        const auto& w = std::get<V>(b.v_);
        if constexpr (std::is_same_v<V, std::int64_t>) return v <=> w;
        else if constexpr (std::is_same_v<V, mpq_class>) {
          int c = cmp(v, w);
          return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
        } else {
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == w[i]) continue;
            if constexpr (std::is_same_v<V, std::vector<std::int64_t>>) return v[i] <=> w[i];
            else return cmp(v[i], w[i]) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
          }
          return std::strong_ordering::equal;
        }
      },
      a.v_);
}

std::string Scalar::to_string() const {
  if (f_ == nullptr) return "<unset>";
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<V, mpq_class>) return v.get_str();
        else {
          std::ostringstream os;
          bool first = true;
          for (std::size_t k = v.size(); k-- > 0;) {
            std::string c;
            if constexpr (std::is_same_v<V, std::vector<std::int64_t>>) {
              if (v[k] == 0) continue;
              c = std::to_string(v[k]);
            } else {
              if (sgn(v[k]) == 0) continue;
              c = v[k].get_str();
            }
            const bool neg = c[0] == '-';
            if (neg) c = c.substr(1);
            if (first) os << (neg ? "-" : "");
            else os << (neg ? "-" : "+");
            first = false;
            if (k == 0) {
              os << c;
            } else {
              if (c != "1") os << (c.find('/') != std::string::npos ? "(" + c + ")" : c) << "*";
              os << "a";
              if (k > 1) os << "^" << k;
            }
          }
          if (first) os << "0";
          return os.str();
        }
      },
      v_);
}

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(v_); }
std::int64_t Scalar::residue() const { return std::get<std::int64_t>(v_); }

std::vector<Scalar> Scalar::coefficients() const {
  if (f_->kind != FieldKind::extension) return {*this};
  std::vector<Scalar> out;
  if (f_->p > 0) {
    for (auto x : std::get<std::vector<std::int64_t>>(v_)) out.push_back(Scalar(f_->base, x));
  } else {
    for (const auto& x : std::get<std::vector<mpq_class>>(v_)) out.push_back(Scalar(f_->base, x));
  }
  return out;
}

bool Scalar::in_base_field() const {
  if (f_->kind != FieldKind::extension) return true;
  auto c = coefficients();
  return std::all_of(c.begin() + 1, c.end(), [](const Scalar& s) { return s.is_zero(); });
}

long long multiplicative_order(const Scalar& s, long long limit) {
  if (s.is_zero()) return 0;
  Field f = s.field();
  if (f.is_finite()) {
    mpz_class n = f.order() - 1;
    // order divides q - 1: strip prime factors while the power stays 1.
    std::vector<mpz_class> primes;
    mpz_class rest = n;
    for (mpz_class d = 2; d * d <= rest; ++d) {
      if (rest % d == 0) {
        primes.push_back(d);
        while (rest % d == 0) rest /= d;
      }
    }
    if (rest > 1) primes.push_back(rest);
    mpz_class ord = n;
    for (const auto& pr : primes) {
      while (ord % pr == 0 && s.pow(mpz_class(ord / pr)).is_one()) ord /= pr;
    }
    return ord.fits_slong_p() ? ord.get_si() : 0;
  }
  Scalar acc = s;
  for (long long k = 1; k <= limit; ++k) {
    if (acc.is_one()) return k;
    acc *= s;
  }
  return 0;
}

}  // namespace ftc
