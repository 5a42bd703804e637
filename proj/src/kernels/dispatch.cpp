#include <stdexcept>

#include "luinv/kernels.hpp"

namespace luinv::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return avx2::table() != nullptr && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon: return neon::table() != nullptr;  // baseline on AArch64
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (!backend_available(b)) throw std::invalid_argument("kernel backend not available on this CPU");
  switch (b) {
    case Backend::avx2: return *avx2::table();
    case Backend::neon: return *neon::table();
    default: return scalar::table();
  }
}

Backend active_backend() {
  static const Backend chosen = [] {
    if (backend_available(Backend::avx2)) return Backend::avx2;
    if (backend_available(Backend::neon)) return Backend::neon;
    return Backend::scalar;
  }();
  return chosen;
}

namespace {

const KernelTable& active() {
  static const KernelTable& t = table(active_backend());
  return t;
}

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}

}  // namespace

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  require_same_length(a.size(), b.size());
  return active().dot(a, b);
}

double norm2(std::span<const Complex> a) { return active().norm2(a); }

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  require_same_length(x.size(), y.size());
  active().axpy(alpha, x, y);
}

void scale_conj(Complex alpha, std::span<const Complex> x, std::span<Complex> out) {
  require_same_length(x.size(), out.size());
  active().scale_conj(alpha, x, out);
}

}  // namespace luinv::kernels
