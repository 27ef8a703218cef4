#pragma once

// Integer matrices, Smith normal form, and characters of finitely presented
// abelian groups with values in the unit group of a field.

#include <cstddef>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "ftc/field.hpp"

namespace ftc {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<mpz_class> row(std::size_t r) const;
  void append_row(const std::vector<mpz_class>& r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  bool is_diagonal() const;
  /// Determinant by fraction-free elimination (square matrices only).
  mpz_class determinant() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  IntMatrix u, d, v;  // u * m * v == d
};

/// Smith normal form with minimal-absolute-value pivoting. The diagonal of `d`
/// is nonnegative with d_1 | d_2 | ...; the postcondition is checked before
/// returning.
SmithForm snf(const IntMatrix& m);

struct AbelianGroupPresentation {
  std::size_t generators = 0;
  IntMatrix relations;  // one relation per row
};

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors, each >= 2, divisibility chain
  bool infinite() const { return free_rank > 0; }
  /// Order of the torsion part (the whole group when finite).
  mpz_class torsion_order() const;
  std::string to_string() const;
};

AbelianInvariants abelian_invariants(const AbelianGroupPresentation& p);

/// Invariants of Hom(A, k^x) with char k = char_p: torsion orders lose their
/// p-part (k^x has no p-torsion); a positive free rank flags an infinite group.
AbelianInvariants unit_character_group(const AbelianInvariants& inv, long long char_p);

/// A character A -> k^x, stored as exponents against a primitive modulus-th
/// root of unity: generator j maps to zeta^exponents[j].
struct UnitCharacter {
  mpz_class modulus = 1;
  std::vector<mpz_class> exponents;
  std::optional<std::vector<Scalar>> values;  // present when evaluated in a field

  friend bool operator==(const UnitCharacter& a, const UnitCharacter& b) {
    return a.modulus == b.modulus && a.exponents == b.exponents;
  }
};

/// A primitive n-th root of unity of `f`, chosen canonically (least in scalar
/// order). Throws SplittingError when the field has none.
Scalar primitive_root_of_unity(const Field& f, long long n);

/// All characters of the presented group with values in k^x, sorted
/// lexicographically by exponent vector. Throws InfiniteGroupError when the
/// character group is infinite and SplittingError when `field` lacks the
/// needed roots of unity. `field` must have characteristic char_p.
std::vector<UnitCharacter> enumerate_characters(const AbelianGroupPresentation& p, long long char_p,
                                                const std::optional<Field>& field = std::nullopt);

}  // namespace ftc
