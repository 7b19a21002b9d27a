#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "cohn/field.hpp"

namespace cohn {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over a single Field. Entries written through the
// mutable accessor may carry a different field; consumers that care call
// uniform_field(), which reports MIXED_FIELDS.
class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field)) {}

  static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
  static Matrix identity(Field f, std::size_t n);
  // Rows must all have the same length; entries must share one field.
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_ints(Field f, const std::vector<std::vector<long>>& rows);
  // Column matrix (n x 1) from a vector; the field is needed for n = 0.
  static Matrix column(Field f, const Vector& v);
  // Matrix whose columns are the given vectors, each of length `rows`.
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);
  // Elementary matrix E_ab.
  static Matrix unit(Field f, std::size_t n, std::size_t a, std::size_t b);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> entries() const noexcept { return data_; }
  std::span<Scalar> entries() noexcept { return data_; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vector column_vector(std::size_t j) const;

  // Throws MIXED_FIELDS if some entry disagrees with the matrix field.
  const Field& uniform_field() const;

  bool is_zero() const noexcept;
  bool is_scalar_multiple_of_identity() const;

  Matrix transpose() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Vector operator*(const Matrix& m, const Vector& v);

Matrix pow(const Matrix& m, std::uint64_t exponent);
// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);
// Block-diagonal matrix diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

// Matrix of the linear map h -> h*B - C*h on row-major vec(h), where B is
// s x s, C is t x t and h is t x s. Shape (t*s) x (t*s).
Matrix sylvester_operator(const Matrix& b, const Matrix& c);

// Rows of canonical scalar strings.
nlohmann::json matrix_json(const Matrix& m);
nlohmann::json vector_json(const Vector& v);

}  // namespace cohn
