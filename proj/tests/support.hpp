#pragma once
// Shared test helpers: independent brute-force oracles and seeded
// generators of commuting tuples. The oracles only use Scalar arithmetic and
// plain loops, never the library's linear algebra.
#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cohn/matrix.hpp"
#include "cohn/poly.hpp"
#include "cohn/sampler.hpp"
#include "cohn/tuple.hpp"

namespace oracle {

using cohn::Field;
using cohn::Matrix;
using cohn::Scalar;

// Laplace expansion along the first row.
inline Scalar cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(m.field());
  if (n == 1) return m(0, 0);
  Scalar total(m.field());
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor(m.field(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Scalar term = m(0, j) * cofactor_det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

// det(x I - m) at x = 0..n and Lagrange interpolation. Needs |field| > n.
inline cohn::UniPoly interpolated_char_poly(const Matrix& m) {
  const Field f = m.field();
  const std::size_t n = m.rows();
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    const Scalar x(f, static_cast<long>(k));
    Matrix shifted = m * Scalar(f, -1L);
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += x;
    xs.push_back(x);
    ys.push_back(cofactor_det(shifted));
  }
  cohn::UniPoly out(f);
  for (std::size_t k = 0; k <= n; ++k) {
    cohn::UniPoly basis = cohn::UniPoly::monomial(f, 0, Scalar::one(f));
    Scalar denom = Scalar::one(f);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis = basis * cohn::UniPoly::linear_root(xs[j]);
      denom *= xs[k] - xs[j];
    }
    out += basis * cohn::UniPoly::monomial(f, 0, ys[k] / denom);
  }
  return out;
}

// Entry-by-entry product, independent of Matrix::operator*.
inline Matrix product(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s(a.field());
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

inline bool commute(const Matrix& a, const Matrix& b) { return product(a, b) == product(b, a); }

// Integer matrices mod q for the counting oracles.
using IntMat = std::vector<long>;

inline IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t n, long q) {
  IntMat out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
      out[i * n + j] = s % q;
    }
  return out;
}

inline IntMat int_matrix(std::uint64_t code, std::size_t n, long q) {
  IntMat m(n * n);
  for (auto& e : m) {
    e = static_cast<long>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  return m;
}

inline bool int_nilpotent(const IntMat& a, std::size_t n, long q) {
  IntMat p = a;
  for (std::size_t k = 1; k < n; ++k) p = int_mul(p, a, n, q);
  for (long e : p)
    if (e != 0) return false;
  return true;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Number of commuting pairs of n x n matrices over F_q by a double loop.
inline std::uint64_t count_commuting_pairs(std::size_t n, long q) {
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(q), n * n);
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < total; ++a) {
    const IntMat A = int_matrix(a, n, q);
    for (std::uint64_t b = 0; b < total; ++b) {
      const IntMat B = int_matrix(b, n, q);
      if (int_mul(A, B, n, q) == int_mul(B, A, n, q)) ++count;
    }
  }
  return count;
}

inline cohn::Matrix to_matrix(const IntMat& m, std::size_t n, Field f) {
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n * n; ++i) out(i / n, i % n) = Scalar(f, m[i]);
  return out;
}

}  // namespace oracle

namespace gen {

using namespace cohn;

// A random Young diagram with `size` cells.
inline Staircase random_staircase(std::size_t size, Rng& rng) {
  std::vector<std::size_t> rows;
  std::size_t left = size;
  while (left > 0) {
    const std::size_t cap = rows.empty() ? left : std::min(left, rows.back());
    const std::size_t len = 1 + rng.below(cap);
    rows.push_back(len);
    left -= len;
  }
  return Staircase::from_row_lengths(rows);
}

// A local module of length m at `point`: each A_i is point_i plus a random
// combination of x, y and xy acting on a random staircase module.
inline CommutingTuple local_block(Field f, std::size_t m, const std::vector<Scalar>& point, Rng& rng) {
  const CommutingTuple base = from_staircase(random_staircase(m, rng), f);
  const Matrix mx = base[0], my = base[1], mxy = base[0] * base[1];
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < point.size(); ++i)
    mats.push_back(mx * random_scalar(f, rng, 2) + my * random_scalar(f, rng, 2) + mxy * random_scalar(f, rng, 2));
  const CommutingTuple nil = CommutingTuple::validate(f, m, mats);
  return translate(nil, point);
}

struct SplitSample {
  CommutingTuple tuple;
  std::vector<std::pair<std::vector<Scalar>, std::size_t>> blocks;  // point, length
  GroupElement g;  // tuple = g * (direct sum of blocks) * g^-1
};

// A split module of length n: a direct sum of local blocks at random
// points (repeats allowed), conjugated by a random invertible matrix.
inline SplitSample split_sample(Field f, std::size_t n, std::size_t d, Rng& rng) {
  std::vector<std::pair<std::vector<Scalar>, std::size_t>> blocks;
  std::optional<CommutingTuple> sum;
  std::size_t left = n;
  while (left > 0) {
    const std::size_t m = 1 + rng.below(left);
    std::vector<Scalar> point;
    for (std::size_t i = 0; i < d; ++i) point.push_back(random_scalar(f, rng, 2));
    const CommutingTuple block = local_block(f, m, point, rng);
    sum = sum ? direct_sum(*sum, block) : block;
    blocks.emplace_back(point, m);
    left -= m;
  }
  if (!sum) sum = CommutingTuple::zero(f, 0, d);
  auto [g, t] = random_conjugate(*sum, rng);
  return SplitSample{std::move(t), std::move(blocks), std::move(g)};
}

}  // namespace gen
