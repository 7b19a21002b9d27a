#include <atomic>
#include <stdexcept>

#include "cohn/simd/fp_kernels.hpp"

namespace cohn::simd {

namespace {

bool cpu_has_avx2() noexcept {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() noexcept { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

std::atomic<Isa>& selected() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) noexcept { return isa == Isa::Scalar || cpu_has_avx2(); }

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("ISA not supported on this CPU");
  selected().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, const Modulus& m) {
  if (active_isa() == Isa::Avx2 && m.vectorizable())
    avx2::axpy_mod(y, x, a, m);
  else
    scalar::axpy_mod(y, x, a, m);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, const Modulus& m) {
  if (active_isa() == Isa::Avx2 && m.vectorizable())
    avx2::scale_mod(y, a, m);
  else
    scalar::scale_mod(y, a, m);
}

bool all_zero(std::span<const std::uint32_t> y) noexcept {
  return active_isa() == Isa::Avx2 ? avx2::all_zero(y) : scalar::all_zero(y);
}

}  // namespace cohn::simd
