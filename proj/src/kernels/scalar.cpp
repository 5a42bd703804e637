#include "luinv/kernels.hpp"

namespace luinv::kernels::scalar {

namespace {

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  double re = 0, im = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm2(std::span<const Complex> a) {
  double s = 0;
  for (const Complex& z : a) s += z.real() * z.real() + z.imag() * z.imag();
  return s;
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale_conj(Complex alpha, std::span<const Complex> x, std::span<Complex> out) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * std::conj(x[i]);
}

constexpr KernelTable kTable{dot, norm2, axpy, scale_conj};

}  // namespace

const KernelTable& table() { return kTable; }

}  // namespace luinv::kernels::scalar
