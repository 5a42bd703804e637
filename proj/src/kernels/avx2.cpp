// Built with -mavx2 -mfma; only reached after a runtime CPU check.
#include "luinv/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace luinv::kernels::avx2 {

namespace {

// std::complex<double> is layout-compatible with double[2]; one __m256d holds two values.
inline const double* raw(std::span<const Complex> v) { return reinterpret_cast<const double*>(v.data()); }
inline double* raw(std::span<Complex> v) { return reinterpret_cast<double*>(v.data()); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  const std::size_t n = a.size();
  // re_acc lanes: ar*br, ai*bi ; im_acc lanes: ar*bi, ai*br
  __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
  __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * i);
    const __m256d a1 = _mm256_loadu_pd(pa + 2 * i + 4);
    const __m256d b1 = _mm256_loadu_pd(pb + 2 * i + 4);
    re0 = _mm256_fmadd_pd(a0, b0, re0);
    re1 = _mm256_fmadd_pd(a1, b1, re1);
    im0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), im0);
    im1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), im1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * i);
    re0 = _mm256_fmadd_pd(a0, b0, re0);
    im0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), im0);
  }
  const __m256d re = _mm256_add_pd(re0, re1);
  // im lanes alternate +ar*bi, +ai*br; the second must be subtracted.
  const __m256d im = _mm256_mul_pd(_mm256_add_pd(im0, im1), _mm256_setr_pd(1.0, -1.0, 1.0, -1.0));
  double r = hsum(re), m = hsum(im);
  for (; i < n; ++i) {
    r += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    m += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {r, m};
}

double norm2(std::span<const Complex> a) {
  const double* p = raw(a);
  const std::size_t len = 2 * a.size();
  __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d x0 = _mm256_loadu_pd(p + i);
    const __m256d x1 = _mm256_loadu_pd(p + i + 4);
    s0 = _mm256_fmadd_pd(x0, x0, s0);
    s1 = _mm256_fmadd_pd(x1, x1, s1);
  }
  double s = hsum(_mm256_add_pd(s0, s1));
  for (; i < len; ++i) s += p[i] * p[i];
  return s;
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  const double* px = raw(x);
  double* py = raw(y);
  const std::size_t n = x.size();
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(px + 2 * i);
    const __m256d swapped = _mm256_permute_pd(xv, 0b0101);  // xi, xr
    // addsub gives (ar xr - ai xi, ar xi + ai xr) = alpha x
    const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(ar, xv), _mm256_mul_pd(ai, swapped));
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_conj(Complex alpha, std::span<const Complex> x, std::span<Complex> out) {
  const double* px = raw(x);
  double* po = raw(out);
  const std::size_t n = x.size();
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const __m256d flip = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xc = _mm256_mul_pd(_mm256_loadu_pd(px + 2 * i), flip);  // conj(x)
    const __m256d swapped = _mm256_permute_pd(xc, 0b0101);
    _mm256_storeu_pd(po + 2 * i, _mm256_addsub_pd(_mm256_mul_pd(ar, xc), _mm256_mul_pd(ai, swapped)));
  }
  for (; i < n; ++i) out[i] = alpha * std::conj(x[i]);
}

constexpr KernelTable kTable{dot, norm2, axpy, scale_conj};

}  // namespace

const KernelTable* table() { return &kTable; }

}  // namespace luinv::kernels::avx2

#else

namespace luinv::kernels::avx2 {
const KernelTable* table() { return nullptr; }
}

#endif
