#pragma once

#include <complex>
#include <span>
#include <string_view>

namespace luinv::kernels {

using Complex = std::complex<double>;

/// Complex-vector primitives behind the state and invariant code. Every backend
/// implements the same table; the scalar one is the reference.
struct KernelTable {
  /// sum_i conj(a_i) b_i
  Complex (*dot)(std::span<const Complex> a, std::span<const Complex> b);
  /// sum_i |a_i|^2
  double (*norm2)(std::span<const Complex> a);
  /// y += alpha x
  void (*axpy)(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
  /// out = alpha conj(x)
  void (*scale_conj)(Complex alpha, std::span<const Complex> x, std::span<Complex> out);
};

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);

/// Compiled in and supported by the running CPU.
bool backend_available(Backend b);

/// Table for a specific backend. Throws std::invalid_argument if unavailable.
const KernelTable& table(Backend b);

/// Backend picked at first use: the widest available one.
Backend active_backend();

// Dispatching entry points. Length mismatches throw std::invalid_argument.
Complex dot(std::span<const Complex> a, std::span<const Complex> b);
double norm2(std::span<const Complex> a);
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
void scale_conj(Complex alpha, std::span<const Complex> x, std::span<Complex> out);

namespace scalar {
const KernelTable& table();
}
namespace avx2 {
/// nullptr when not compiled for x86-64.
const KernelTable* table();
}
namespace neon {
/// nullptr when not compiled for AArch64.
const KernelTable* table();
}

}  // namespace luinv::kernels
