#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cohn/simd/fp_kernels.hpp"

// Small dense linear algebra over F_p on flattened residue arrays, built on
// the dispatched mod-p kernels. This is the fast path for enumeration; the
// general Matrix/Scalar API is the reference.
namespace cohn::fp {

using Flat = std::vector<std::uint32_t>;

// out = a * b for n x n row-major matrices.
void mul(std::span<std::uint32_t> out, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
         std::size_t n, const simd::Modulus& m);
// out = a * b - b * a.
void commutator(std::span<std::uint32_t> out, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::size_t n, const simd::Modulus& m);
bool is_nilpotent(std::span<const std::uint32_t> a, std::size_t n, const simd::Modulus& m);

// Right null space of a rows x cols matrix given row-major; one basis vector
// per free column, in increasing column order.
std::vector<Flat> kernel(Flat data, std::size_t rows, std::size_t cols, const simd::Modulus& m);

// Basis (as n x n matrices) of { X in span(basis) : [a, X] = 0 }.
std::vector<Flat> centralizer_within(const std::vector<Flat>& basis, std::span<const std::uint32_t> a, std::size_t n,
                                     const simd::Modulus& m);

}  // namespace cohn::fp
