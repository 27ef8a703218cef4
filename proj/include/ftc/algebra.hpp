#pragma once

// Finite-dimensional associative algebras given by structure constants.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ftc/field.hpp"
#include "ftc/matrix.hpp"

namespace ftc {

class Algebra {
 public:
  Algebra() = default;
  /// `products[i * dim + j]` holds the coordinates of b_i b_j.
  Algebra(Field f, std::vector<std::string> basis_names, const std::vector<Vec>& products, Vec unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vec& unit() const { return unit_; }

  /// Coordinates of b_i b_j.
  Vec product(std::size_t i, std::size_t j) const { return left_[i].column(j); }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec pow(const Vec& x, const mpz_class& e) const;
  /// Matrix of y -> x y.
  Matrix left_mult(const Vec& x) const;
  /// Matrix of y -> y x.
  Matrix right_mult(const Vec& x) const;
  const Matrix& left_basis(std::size_t i) const { return left_[i]; }
  Vec basis_vector(std::size_t i) const { return unit_vec(field_, dim(), i); }
  bool is_commutative() const;

 private:
  Field field_ = Field::rationals();
  std::vector<std::string> names_;
  std::vector<Matrix> left_;
  Vec unit_;
};

struct AlgebraViolation {
  std::string axiom;                  // "associativity", "unit", "shape"
  std::vector<std::size_t> indices;   // offending basis indices
  std::string detail;
};

struct AlgebraReport {
  std::vector<AlgebraViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Scans every basis triple for associativity and every basis element for the
/// two-sided unit law.
AlgebraReport verify_algebra(const Algebra& a);

/// A subspace of k^n, stored as a canonical column basis.
struct Subspace {
  std::size_t ambient = 0;
  Matrix basis;  // ambient x dim, columns independent

  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace zero(const Field& f, std::size_t ambient);
  std::size_t dim() const { return basis.cols(); }
  std::vector<Vec> vectors() const { return basis.columns(); }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

/// {z : z b = b z for every basis element b}, as the kernel of the stacked commutator maps.
Subspace center(const Algebra& a);

/// Span of all products x y with x in s and y in t.
Subspace product_space(const Algebra& a, const Subspace& s, const Subspace& t);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);
/// Smallest k with s^k = 0, or nullopt if the powers stabilize at a nonzero space.
std::optional<std::size_t> nilpotency_index(const Algebra& a, const Subspace& s);

/// Jacobson radical: the trace-form kernel in characteristic 0, iterated
/// p-power traces over F_p, restriction of scalars for F_q. The result is
/// certified to be a nilpotent two-sided ideal with semisimple quotient
/// (nondegenerate trace form, or injective Frobenius when the quotient is
/// commutative); otherwise RadicalUncertified is thrown.
Subspace radical(const Algebra& a);

struct QuotientAlgebra {
  Algebra algebra;
  Matrix projection;  // dim(a/I) x dim(a), an algebra map
  Matrix section;     // dim(a) x dim(a/I), linear lift of the quotient basis
};

/// a / ideal with a standard-basis complement; throws std::invalid_argument
/// unless the ideal is two-sided.
QuotientAlgebra quotient(const Algebra& a, const Subspace& ideal);

/// The subalgebra spanned by `basis` (a subspace closed under products and
/// containing the unit); throws std::invalid_argument otherwise.
Algebra subalgebra(const Algebra& a, const Subspace& basis, const std::string& prefix = "z");

/// Two-sided ideal generated by all commutators b_i b_j - b_j b_i.
Subspace commutator_ideal(const Algebra& a);

struct CharacterSearch {
  std::vector<Vec> characters;            // functionals chi(b_i), sorted
  std::vector<std::string> obstructions;  // irreducible non-linear minimal polynomials met
  bool complete() const { return obstructions.empty(); }
  /// Throws SplittingError naming the obstructions when incomplete.
  void require_complete(const std::string& context) const;
};

/// Algebra maps a -> k of a commutative algebra, by splitting a / rad(a)
/// with idempotents read off factored minimal polynomials of basis elements.
/// Components that do not split over the field are reported as obstructions.
CharacterSearch characters_commutative(const Algebra& a);

/// Lifts an idempotent of a / rad to an idempotent of a via e <- 3e^2 - 2e^3.
/// Throws std::invalid_argument when e^2 - e is not in rad.
Vec lift_idempotent(const Algebra& a, const Vec& e_mod_rad, const Subspace& rad);

/// Primitive idempotents of a commutative algebra over a finite field (they
/// need not be split); sorted canonically. Throws UnsupportedField otherwise.
std::vector<Vec> primitive_idempotents(const Algebra& commutative);

}  // namespace ftc
