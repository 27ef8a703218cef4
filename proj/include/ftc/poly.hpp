#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ftc/field.hpp"
#include "ftc/matrix.hpp"

namespace ftc {

/// Univariate polynomial, coefficients stored constant term first with no
/// trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  static Poly x(Field f);
  static Poly constant(const Scalar& c);
  static Poly from_ints(Field f, const std::vector<long long>& coeffs);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  Scalar coeff(int i) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar lead() const;

  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& at) const;
  /// Evaluates at a matrix argument.
  Matrix eval(const Matrix& at) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& p);
  friend Poly operator-(const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Deterministic order: by degree, then coefficients from the top.
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  Field field_;
  std::vector<Scalar> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
struct Xgcd {
  Poly g, s, t;  // g = s a + t b, g monic
};
Xgcd xgcd(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& mod);
/// p(q(x)).
Poly compose(const Poly& p, const Poly& q);

struct PolyFactor {
  Poly factor;  // monic irreducible
  int multiplicity = 1;
};

struct Factorization {
  Scalar unit;                      // leading coefficient
  std::vector<PolyFactor> factors;  // sorted by (degree, coefficients)
};

/// Complete factorization into monic irreducibles over the polynomial's field:
/// Cantor-Zassenhaus over finite fields, Zassenhaus (Hensel lifting plus
/// recombination) over Q, Trager's norm method over simple extensions of Q.
/// Throws std::invalid_argument on the zero polynomial.
Factorization factor(const Poly& f);

/// Squarefree decomposition: f = unit * prod g_i^i with g_i squarefree and
/// pairwise coprime; returns (g_i, i) for nonconstant g_i.
std::vector<PolyFactor> squarefree_decomposition(const Poly& f);

/// Distinct roots lying in the field, in canonical scalar order.
std::vector<Scalar> roots(const Poly& f);

bool is_irreducible(const Poly& f);
/// Irreducibility of an integer-coefficient polynomial over Q or F_p.
bool is_irreducible_over(const Field& base, const std::vector<mpz_class>& coeffs);

/// Characteristic polynomial det(x I - m), computed by Hessenberg reduction.
Poly charpoly(const Matrix& m);
/// Minimal polynomial of a square matrix.
Poly minpoly(const Matrix& m);

/// Parses "x^2+x+1", "x^3-2*x+1/2", integer or rational coefficients.
Poly parse_poly(const std::string& text, Field f);
std::vector<mpz_class> parse_int_poly(const std::string& text);

}  // namespace ftc
