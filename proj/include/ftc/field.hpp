#pragma once

// Exact scalars over Q, prime fields F_p and simple extensions K[x]/(m).
//
// A Field is a cheap handle onto an interned, immutable descriptor; two
// handles compare equal iff they describe the same field. Scalars carry their
// field handle, so ordinary operators work and mixing fields throws
// FieldMismatch.

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>
#include <vector>

#include "ftc/errors.hpp"

namespace ftc {

enum class FieldKind { rationals, prime, extension };

namespace detail {
struct FieldData;
}

class Scalar;

class Field {
 public:
  static Field rationals();
  /// Throws std::invalid_argument unless p is prime and fits the residue type.
  static Field prime(std::int64_t p);
  /// Simple extension base[x]/(min_poly); `min_poly` holds integer
  /// coefficients, constant term first, and must be monic and irreducible of
  /// degree >= 2 over `base` (which must itself not be an extension).
  static Field extension(const Field& base, std::vector<mpz_class> min_poly);

  FieldKind kind() const;
  /// 0 for Q and its extensions.
  std::int64_t characteristic() const;
  /// Degree over the prime field (1 for Q and F_p).
  int degree() const;
  /// The ground field of an extension; the field itself otherwise.
  Field base() const;
  const std::vector<mpz_class>& min_poly() const;
  bool is_finite() const;
  /// Number of elements; only meaningful when is_finite().
  mpz_class order() const;

  /// Micro-syntax "Q", "Fp:7", "ext:Q:x^2+x+1".
  std::string spec_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;  // throws in char p if the denominator vanishes
  /// Extension element from base coefficients (constant term first).
  Scalar from_coefficients(const std::vector<Scalar>& base_coeffs) const;
  /// The adjoined root x of an extension.
  Scalar generator() const;
  /// Enumerates a finite field: index in [0, order()) maps bijectively to elements.
  Scalar element(const mpz_class& index) const;
  mpz_class index_of(const Scalar& s) const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.d_ != b.d_; }
  /// Deterministic ordering (by spec string).
  friend bool operator<(const Field& a, const Field& b);

  const detail::FieldData* data() const { return d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  friend class Scalar;
  const detail::FieldData* d_ = nullptr;
};

class Scalar {
 public:
  /// An unset scalar; only assignment and destruction are valid on it.
  Scalar() = default;

  Field field() const { return Field(f_); }
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws std::domain_error on zero.
  Scalar inv() const;
  /// Negative exponents invert.
  Scalar pow(const mpz_class& e) const;
  Scalar pow(long long e) const { return pow(mpz_class(static_cast<long>(e))); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order on canonical forms: zero first, then by representation.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

  // Representation access.
  const mpq_class& rational() const;                 // kind() == rationals
  std::int64_t residue() const;                      // kind() == prime
  std::vector<Scalar> coefficients() const;          // extension: base coefficients
  /// Ground-field value of a scalar lying in the base field of an extension.
  bool in_base_field() const;

 private:
  friend class Field;
  using Rep = std::variant<std::int64_t, mpq_class, std::vector<std::int64_t>, std::vector<mpq_class>>;
  Scalar(const detail::FieldData* f, Rep v) : f_(f), v_(std::move(v)) {}
  void check_same(const Scalar& o) const;

  const detail::FieldData* f_ = nullptr;
  Rep v_;
};

/// Multiplicative order of a nonzero scalar, or 0 if it is not a root of unity
/// of order <= limit.
long long multiplicative_order(const Scalar& s, long long limit = 1 << 20);

}  // namespace ftc
