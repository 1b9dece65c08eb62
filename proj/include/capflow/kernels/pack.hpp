#pragma once

#include <cmath>
#include <cstddef>

#if defined(__AVX2__)
#include <immintrin.h>
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace capflow::kern {

// Thin value wrappers over one SIMD register (or a plain double). Each
// backend implements the same operation set; the geometry kernel is written
// once against this interface and instantiated per backend in its own
// translation unit.

struct PackScalar {
  static constexpr int width = 1;
  double v;

  static PackScalar load(const double* p) { return {*p}; }
  static PackScalar broadcast(double x) { return {x}; }
  void store(double* p) const { *p = v; }

  friend PackScalar operator+(PackScalar a, PackScalar b) { return {a.v + b.v}; }
  friend PackScalar operator-(PackScalar a, PackScalar b) { return {a.v - b.v}; }
  friend PackScalar operator*(PackScalar a, PackScalar b) { return {a.v * b.v}; }
  friend PackScalar operator/(PackScalar a, PackScalar b) { return {a.v / b.v}; }
  friend PackScalar sqrt(PackScalar a) { return {std::sqrt(a.v)}; }
};

#if defined(__AVX2__)
struct PackAvx2 {
  static constexpr int width = 4;
  __m256d v;

  static PackAvx2 load(const double* p) { return {_mm256_loadu_pd(p)}; }
  static PackAvx2 broadcast(double x) { return {_mm256_set1_pd(x)}; }
  void store(double* p) const { _mm256_storeu_pd(p, v); }

  friend PackAvx2 operator+(PackAvx2 a, PackAvx2 b) { return {_mm256_add_pd(a.v, b.v)}; }
  friend PackAvx2 operator-(PackAvx2 a, PackAvx2 b) { return {_mm256_sub_pd(a.v, b.v)}; }
  friend PackAvx2 operator*(PackAvx2 a, PackAvx2 b) { return {_mm256_mul_pd(a.v, b.v)}; }
  friend PackAvx2 operator/(PackAvx2 a, PackAvx2 b) { return {_mm256_div_pd(a.v, b.v)}; }
  friend PackAvx2 sqrt(PackAvx2 a) { return {_mm256_sqrt_pd(a.v)}; }
};
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
struct PackNeon {
  static constexpr int width = 2;
  float64x2_t v;

  static PackNeon load(const double* p) { return {vld1q_f64(p)}; }
  static PackNeon broadcast(double x) { return {vdupq_n_f64(x)}; }
  void store(double* p) const { vst1q_f64(p, v); }

  friend PackNeon operator+(PackNeon a, PackNeon b) { return {vaddq_f64(a.v, b.v)}; }
  friend PackNeon operator-(PackNeon a, PackNeon b) { return {vsubq_f64(a.v, b.v)}; }
  friend PackNeon operator*(PackNeon a, PackNeon b) { return {vmulq_f64(a.v, b.v)}; }
  friend PackNeon operator/(PackNeon a, PackNeon b) { return {vdivq_f64(a.v, b.v)}; }
  friend PackNeon sqrt(PackNeon a) { return {vsqrtq_f64(a.v)}; }
};
#endif

} // namespace capflow::kern
