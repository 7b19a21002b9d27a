#include "cohn/simd/fp_kernels.hpp"

namespace cohn::simd::scalar {

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, const Modulus& m) {
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{a} * x[i]) % m.p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, const Modulus& m) {
  for (auto& v : y) v = static_cast<std::uint32_t>(std::uint64_t{a} * v % m.p);
}

bool all_zero(std::span<const std::uint32_t> y) noexcept {
  for (auto v : y)
    if (v) return false;
  return true;
}

}  // namespace cohn::simd::scalar
