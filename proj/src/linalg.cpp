#include "cohn/linalg.hpp"

#include <numeric>
#include <utility>

#include "cohn/error.hpp"

namespace cohn {

RrefResult rref(const Matrix& m) {
  m.uniform_field();
  Matrix a = m;
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    const Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= factor * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.form = std::move(a);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(f));
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

Scalar det_prime(Matrix a) {
  const Field f = a.field();
  const std::size_t n = a.rows();
  Scalar d = Scalar::one(f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(f);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return d;
}

Scalar det_bareiss(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m(i, j).rational();
      a[i * n + j] = q.get_num() * (l / q.get_den());
    }
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  mpz_class d = n == 0 ? mpz_class(1) : a[(n - 1) * n + (n - 1)];
  return Scalar(m.field(), mpq_class(sign * d, scale));
}

}  // namespace

Scalar det(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "determinant of a non-square matrix", {{"shape", {m.rows(), m.cols()}}});
  m.uniform_field();
  if (m.field().is_rational()) return det_bareiss(m);
  return det_prime(m);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RrefResult r = rref(hstack({m, Matrix::identity(m.field(), n)}));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) fail(ErrorCode::SingularG, "matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

std::optional<Matrix> solve_full_column_rank(const Matrix& b, const Matrix& y) {
  const std::size_t m = b.cols();
  const RrefResult r = rref(hstack({b, y}));
  if (r.rank > m) return std::nullopt;  // a pivot landed in the y block
  if (r.rank < m) fail(ErrorCode::SizeMismatch, "basis matrix is not of full column rank");
  Matrix x(b.field(), m, y.cols());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) x(i, j) = r.form(i, m + j);
  return x;
}

std::optional<Vector> solve_any(const Matrix& a, const Vector& y) {
  const RrefResult r = rref(hstack({a, Matrix::column(a.field(), y)}));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), Scalar(a.field()));
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.form(i, a.cols());
  return x;
}

}  // namespace cohn
