#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftc/field.hpp"

namespace ftc {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);
/// Lexicographic order with the leading-support index compared first, so
/// standard basis vectors sort in index order.
bool vec_less(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  /// Throws FieldMismatch if any entry lies outside `f`, and
  /// std::invalid_argument on ragged input.
  static Matrix from_rows(Field f, const std::vector<Vec>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_ints(Field f, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> columns() const;
  void set_column(std::size_t c, const Vec& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Kronecker product: (A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l].
  Matrix kron(const Matrix& b) const;
  Matrix pow(unsigned long long e) const;
  bool is_zero() const;
  bool is_identity() const;
  /// Nonzero only on the diagonal with one repeated value; returns it.
  std::optional<Scalar> scalar_value() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend Vec operator*(const Matrix& m, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Throws FieldMismatch if some entry lies outside field().
  void check_entries() const;
  std::string to_string() const;

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix vstack(const std::vector<Matrix>& blocks);
Matrix hstack(const std::vector<Matrix>& blocks);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with strictly increasing pivot columns.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space, one basis vector per column; the basis is
/// the standard one read off the rref (free variable set to 1).
Matrix kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Some solution x of A x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Columns of `m` reduced to a basis of their span (rref of the transpose,
/// so the result is canonical for the subspace).
Matrix column_basis(const Matrix& m);
bool in_column_span(const Matrix& basis, const Vec& v);
/// Coordinates of v in the given independent columns, if v lies in their span.
std::optional<Vec> coordinates(const Matrix& basis, const Vec& v);

}  // namespace ftc
