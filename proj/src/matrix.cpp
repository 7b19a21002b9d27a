#include "cohn/matrix.hpp"

#include <stdexcept>

#include "cohn/error.hpp"

namespace cohn {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    fail(ErrorCode::MixedFields, "matrices over " + a.field().name() + " and " + b.field().name());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::SizeMismatch, "matrix shapes differ",
         {{"left", {a.rows(), a.cols()}}, {"right", {b.rows(), b.cols()}}});
}

}  // namespace

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::SizeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(rows[i][j].field() == f))
        fail(ErrorCode::MixedFields, "entry over " + rows[i][j].field().name() + " in a matrix over " + f.name());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::SizeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(Field f, const Vector& v) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(ErrorCode::SizeMismatch, "column vector of wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::unit(Field f, std::size_t n, std::size_t a, std::size_t b) {
  Matrix m(f, n, n);
  m(a, b) = Scalar::one(f);
  return m;
}

Vector Matrix::column_vector(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

const Field& Matrix::uniform_field() const {
  for (const auto& e : data_)
    if (!(e.field() == field_))
      fail(ErrorCode::MixedFields, "matrix over " + field_.name() + " holds an entry over " + e.field().name());
  return field_;
}

bool Matrix::is_zero() const noexcept {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_scalar_multiple_of_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
      if (i == j && !((*this)(i, i) == (*this)(0, 0))) return false;
    }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) fail(ErrorCode::NotSquare, "trace of a non-square matrix");
  Scalar s(field_);
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& e : out.data_) e = -e;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_))
    fail(ErrorCode::MixedFields, "product of matrices over " + a.field_.name() + " and " + b.field_.name());
  if (a.cols_ != b.rows_)
    fail(ErrorCode::SizeMismatch, "inner dimensions differ in matrix product",
         {{"left", {a.rows_, a.cols_}}, {"right", {b.rows_, b.cols_}}});
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!(a.data_[k] == b.data_[k])) return false;
  return true;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) fail(ErrorCode::SizeMismatch, "matrix-vector size mismatch");
  Vector out(m.rows(), Scalar(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

Matrix pow(const Matrix& m, std::uint64_t exponent) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "power of a non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    fail(ErrorCode::MixedFields, "block sum of matrices over " + a.field().name() + " and " + b.field().name());
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("hstack of no blocks");
  std::size_t rows = blocks.front().rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) fail(ErrorCode::SizeMismatch, "hstack blocks differ in row count");
    if (!(b.field() == blocks.front().field())) fail(ErrorCode::MixedFields, "hstack blocks over different fields");
    cols += b.cols();
  }
  Matrix m(blocks.front().field(), rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of no blocks");
  std::size_t cols = blocks.front().cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) fail(ErrorCode::SizeMismatch, "vstack blocks differ in column count");
    if (!(b.field() == blocks.front().field())) fail(ErrorCode::MixedFields, "vstack blocks over different fields");
    rows += b.rows();
  }
  Matrix m(blocks.front().field(), rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(off + i, j) = b(i, j);
    off += b.rows();
  }
  return m;
}

Matrix sylvester_operator(const Matrix& b, const Matrix& c) {
  if (!b.is_square() || !c.is_square()) fail(ErrorCode::NotSquare, "sylvester operator needs square matrices");
  if (!(b.field() == c.field())) fail(ErrorCode::MixedFields, "sylvester operator over different fields");
  const std::size_t s = b.rows(), t = c.rows();
  Matrix op(b.field(), t * s, t * s);
  // (hB)_{rc} = sum_k h_{rk} B_{kc};  (Ch)_{rc} = sum_k C_{rk} h_{kc}.
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t col = 0; col < s; ++col) {
      const std::size_t eq = r * s + col;
      for (std::size_t k = 0; k < s; ++k) op(eq, r * s + k) += b(k, col);
      for (std::size_t k = 0; k < t; ++k) op(eq, k * s + col) -= c(r, k);
    }
  return op;
}



nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

}  // namespace cohn
