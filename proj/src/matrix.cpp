#include "ftc/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ftc {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

namespace {
std::size_t leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}
}  // namespace

bool vec_less(const Vec& a, const Vec& b) {
  std::size_t la = leading_index(a), lb = leading_index(b);
  if (la != lb) return la < lb;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto c = a[i] <=> b[i];
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) {
      if (rows[r][c].field() != f) throw FieldMismatch("matrix entry over " + rows[r][c].field().spec_string());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (cols[c][r].field() != f) throw FieldMismatch("matrix entry over " + cols[c][r].field().spec_string());
      m(r, c) = cols[c][r];
    }
  }
  return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long long>>& rows) {
  std::vector<Vec> vs;
  for (const auto& r : rows) {
    Vec v;
    for (auto x : r) v.push_back(f.from_int(x));
    vs.push_back(std::move(v));
  }
  return from_rows(f, vs);
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Matrix Matrix::kron(const Matrix& b) const {
  if (b.field_ != field_) throw FieldMismatch("kron over different fields");
  Matrix k(field_, rows_ * b.rows_, cols_ * b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) k(i * b.rows_ + r, j * b.cols_ + c) = a * b(r, c);
    }
  return k;
}

Matrix Matrix::pow(unsigned long long e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of a non-square matrix");
  Matrix result = identity(field_, rows_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(field_, rows_); }

std::optional<Scalar> Matrix::scalar_value() const {
  if (rows_ != cols_) return std::nullopt;
  if (rows_ == 0) return field_.one();
  Scalar d = (*this)(0, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& x = (*this)(r, c);
      if (r == c ? x != d : !x.is_zero()) return std::nullopt;
    }
  return d;
}

Scalar Matrix::trace() const {
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.field_ != field_) throw FieldMismatch("matrix sum over different fields");
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.field_ != field_) throw FieldMismatch("matrix difference over different fields");
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix product over different fields");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) p(i, j) += x * y;
      }
    }
  return p;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= c;
  return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
  if (v.size() != m.cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out = zero_vec(m.field_, m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) {
      const Scalar& x = m(r, c);
      if (!x.is_zero() && !v[c].is_zero()) out[r] += x * v[c];
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void Matrix::check_entries() const {
  for (const auto& x : data_)
    if (x.field() != field_) throw FieldMismatch("matrix over " + field_.spec_string() + " holds an entry over " +
                                                 x.field().spec_string());
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) os << (r ? ", " : "") << vec_to_string(row(r));
  os << "]";
  return os.str();
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of nothing");
  std::size_t nr = 0, nc = blocks[0].cols();
  for (const auto& b : blocks) {
    if (b.cols() != nc) throw std::invalid_argument("vstack column mismatch");
    if (b.field() != blocks[0].field()) throw FieldMismatch("vstack over different fields");
    nr += b.rows();
  }
  Matrix m(blocks[0].field(), nr, nc);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < nc; ++c) m(off + r, c) = b(r, c);
    off += b.rows();
  }
  return m;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  std::vector<Matrix> t;
  for (const auto& b : blocks) t.push_back(b.transpose());
  return vstack(t).transpose();
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  m.check_entries();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    Scalar inv = a(row, col).inv();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.field(), m.cols(), basis);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  auto [r, pivots] = rref(hstack({m, Matrix::identity(m.field(), n)}));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return r.block(0, n, n, n);
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = m.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return m.field().zero();
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv = a(col, col).inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Scalar f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  Matrix bm = Matrix::from_columns(a.field(), a.rows(), {b});
  auto [r, pivots] = rref(hstack({a, bm}));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(a.field(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, a.cols());
  return x;
}

Matrix column_basis(const Matrix& m) {
  auto [r, pivots] = rref(m.transpose());
  return r.block(0, 0, pivots.size(), m.rows()).transpose();
}

bool in_column_span(const Matrix& basis, const Vec& v) {
  if (basis.cols() == 0) return is_zero_vec(v);
  return solve(basis, v).has_value();
}

std::optional<Vec> coordinates(const Matrix& basis, const Vec& v) {
  if (basis.cols() == 0) {
    if (is_zero_vec(v)) return Vec{};
    return std::nullopt;
  }
  return solve(basis, v);
}

}  // namespace ftc
