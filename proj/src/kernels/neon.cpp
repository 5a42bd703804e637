#include "luinv/kernels.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

namespace luinv::kernels::neon {

namespace {

// One float64x2_t holds one complex value (re, im).
inline const double* raw(std::span<const Complex> v) { return reinterpret_cast<const double*>(v.data()); }
inline double* raw(std::span<Complex> v) { return reinterpret_cast<double*>(v.data()); }

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  float64x2_t re = vdupq_n_f64(0.0);  // ar*br, ai*bi
  float64x2_t im = vdupq_n_f64(0.0);  // ar*bi, ai*br
  for (std::size_t i = 0; i < a.size(); ++i) {
    const float64x2_t av = vld1q_f64(pa + 2 * i);
    const float64x2_t bv = vld1q_f64(pb + 2 * i);
    re = vfmaq_f64(re, av, bv);
    im = vfmaq_f64(im, av, vextq_f64(bv, bv, 1));
  }
  return {vgetq_lane_f64(re, 0) + vgetq_lane_f64(re, 1), vgetq_lane_f64(im, 0) - vgetq_lane_f64(im, 1)};
}

double norm2(std::span<const Complex> a) {
  const double* p = raw(a);
  float64x2_t s = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const float64x2_t v = vld1q_f64(p + 2 * i);
    s = vfmaq_f64(s, v, v);
  }
  return vaddvq_f64(s);
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  const double* px = raw(x);
  double* py = raw(y);
  const float64x2_t ar = vdupq_n_f64(alpha.real());
  const float64x2_t ai = {-alpha.imag(), alpha.imag()};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const float64x2_t xv = vld1q_f64(px + 2 * i);
    float64x2_t yv = vld1q_f64(py + 2 * i);
    yv = vfmaq_f64(yv, ar, xv);
    yv = vfmaq_f64(yv, ai, vextq_f64(xv, xv, 1));
    vst1q_f64(py + 2 * i, yv);
  }
}

void scale_conj(Complex alpha, std::span<const Complex> x, std::span<Complex> out) {
  const double* px = raw(x);
  double* po = raw(out);
  const float64x2_t ar = vdupq_n_f64(alpha.real());
  const float64x2_t ai = {-alpha.imag(), alpha.imag()};
  const float64x2_t flip = {1.0, -1.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const float64x2_t xc = vmulq_f64(vld1q_f64(px + 2 * i), flip);
    float64x2_t r = vmulq_f64(ar, xc);
    r = vfmaq_f64(r, ai, vextq_f64(xc, xc, 1));
    vst1q_f64(po + 2 * i, r);
  }
}

constexpr KernelTable kTable{dot, norm2, axpy, scale_conj};

}  // namespace

const KernelTable* table() { return &kTable; }

}  // namespace luinv::kernels::neon

#else

namespace luinv::kernels::neon {
const KernelTable* table() { return nullptr; }
}

#endif
