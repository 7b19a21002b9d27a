#include "cohn/fp_dense.hpp"

#include <algorithm>
#include <utility>

namespace cohn::fp {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

void mul(std::span<std::uint32_t> out, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
         std::size_t n, const simd::Modulus& m) {
  std::fill(out.begin(), out.end(), 0u);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = out.subspan(i * n, n);
    for (std::size_t k = 0; k < n; ++k)
      if (const std::uint32_t aik = a[i * n + k]) simd::axpy_mod(row, b.subspan(k * n, n), aik, m);
  }
}

void commutator(std::span<std::uint32_t> out, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::size_t n, const simd::Modulus& m) {
  Flat ba(n * n);
  mul(out, a, b, n, m);
  mul(ba, b, a, n, m);
  simd::axpy_mod(out, ba, m.p - 1, m);
}

bool is_nilpotent(std::span<const std::uint32_t> a, std::size_t n, const simd::Modulus& m) {
  if (n == 0) return true;
  Flat power(a.begin(), a.end()), next(n * n);
  for (std::size_t k = 1; k < n; ++k) {
    mul(next, power, a, n, m);
    std::swap(power, next);
    if (simd::all_zero(power)) return true;
  }
  return simd::all_zero(power);
}

std::vector<Flat> kernel(Flat data, std::size_t rows, std::size_t cols, const simd::Modulus& m) {
  auto row = [&](std::size_t i) { return std::span<std::uint32_t>(data.data() + i * cols, cols); };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && data[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(row(piv).begin(), row(piv).end(), row(r).begin());
    simd::scale_mod(row(r), inv_mod(data[r * cols + c], m.p), m);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      if (const std::uint32_t f = data[i * cols + c]) simd::axpy_mod(row(i), row(r), m.p - f, m);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Flat> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Flat v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const std::uint32_t e = data[i * cols + free];
      v[pivots[i]] = e ? m.p - e : 0;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Flat> centralizer_within(const std::vector<Flat>& basis, std::span<const std::uint32_t> a, std::size_t n,
                                     const simd::Modulus& m) {
  const std::size_t k = basis.size(), nn = n * n;
  if (k == 0) return {};
  // Column j of the system is vec([a, W_j]).
  Flat system(nn * k);
  Flat comm(nn);
  for (std::size_t j = 0; j < k; ++j) {
    commutator(comm, a, basis[j], n, m);
    for (std::size_t e = 0; e < nn; ++e) system[e * k + j] = comm[e];
  }
  std::vector<Flat> out;
  for (const auto& y : kernel(std::move(system), nn, k, m)) {
    Flat x(nn, 0);
    for (std::size_t j = 0; j < k; ++j)
      if (y[j]) simd::axpy_mod(x, basis[j], y[j], m);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace cohn::fp
