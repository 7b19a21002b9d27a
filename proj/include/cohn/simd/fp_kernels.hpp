#pragma once

// Mod-p vector kernels used by the F_p enumeration loops. Each kernel has a
// scalar reference implementation and an AVX2 variant; the active one is
// chosen at startup from CPUID and can be overridden for testing.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cohn::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
Isa active_isa() noexcept;
// Throws std::invalid_argument if the CPU lacks the requested ISA.
void set_active_isa(Isa isa);

// A prime modulus p < 2^32 with its Barrett constant floor(2^32 / p).
// The vector paths need p < 2^16 so that a*x + y fits in 32 bits; larger
// moduli always run the scalar path.
struct Modulus {
  explicit Modulus(std::uint32_t prime) noexcept
      : p(prime), magic(static_cast<std::uint32_t>((std::uint64_t{1} << 32) / prime)) {}
  bool vectorizable() const noexcept { return p < (1u << 16); }

  std::uint32_t p;
  std::uint32_t magic;
};

// y[i] <- (y[i] + a * x[i]) mod p. Inputs are residues in [0, p).
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, const Modulus& m);
// y[i] <- a * y[i] mod p.
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, const Modulus& m);
bool all_zero(std::span<const std::uint32_t> y) noexcept;

namespace scalar {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, const Modulus& m);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, const Modulus& m);
bool all_zero(std::span<const std::uint32_t> y) noexcept;
}  // namespace scalar

namespace avx2 {
// Preconditions: the CPU supports AVX2 and m.vectorizable().
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, const Modulus& m);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, const Modulus& m);
bool all_zero(std::span<const std::uint32_t> y) noexcept;
}  // namespace avx2

}  // namespace cohn::simd
