#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

// Data-parallel inner loops of the eigensolver and matrix builders.
//
// Every kernel has a scalar reference implementation and SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at runtime. The variants
// are bit-identical to the reference: elementwise kernels perform the same
// IEEE operations per element, and reductions accumulate into four
// interleaved partial sums combined as ((l0 + l1) + (l2 + l3)) + tail
// regardless of ISA. The accumulation order is part of the contract.

namespace chromspec::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

// ISA the dispatcher currently routes through.
Isa active_isa();

// ISAs usable on this machine; always contains Isa::scalar.
std::vector<Isa> available_isas();

// Route all kernels through one ISA (test hook; also reachable via the
// CHROMSPEC_ISA environment variable). Throws ValidationError if `isa`
// is not available on this machine.
void force_isa(Isa isa);

// Plane rotation applied in-place to two equal-length arrays:
//   x[k] <- c*x[k] - s*y[k]
//   y[k] <- s*x[k] + c*y[k]
void rotate_pair(double* x, double* y, std::size_t n, double c, double s);

// out[k] = a[k] + scale * b[k]. Aliasing out == a or out == b is allowed.
void scaled_add(double* out, const double* a, const double* b, std::size_t n, double scale);

// Fixed-order reductions (see header comment).
double sum_squares(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);

} // namespace chromspec::kernels
