#include "vhl/kernels.hpp"

#include <limits>

#if defined(VHL_KERNELS_X86)
#include <immintrin.h>
#endif
#if defined(VHL_KERNELS_NEON)
#include <arm_neon.h>
#endif

namespace vhl::kernels {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double minplus_row_scalar(const double* row, const double* v, std::size_t n) {
  double best = kInf;
  for (std::size_t j = 0; j < n; ++j) {
    double cand = row[j] + v[j];
    if (cand < best) best = cand;
  }
  return best;
}

void minplus_axpy_scalar(double* dst, const double* row, double a, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    double cand = row[j] + a;
    if (cand < dst[j]) dst[j] = cand;
  }
}

bool bool_row_any_scalar(const std::uint64_t* r, const std::uint64_t* x,
                         std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w) {
    if (r[w] & x[w]) return true;
  }
  return false;
}

#if defined(VHL_KERNELS_X86)

__attribute__((target("avx2")))
double minplus_row_avx2(const double* row, const double* v, std::size_t n) {
  __m256d acc = _mm256_set1_pd(kInf);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d sum = _mm256_add_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(v + j));
    acc = _mm256_min_pd(acc, sum);
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d m = _mm_min_pd(lo, hi);
  m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
  double best = _mm_cvtsd_f64(m);
  for (; j < n; ++j) {
    double cand = row[j] + v[j];
    if (cand < best) best = cand;
  }
  return best;
}

__attribute__((target("avx2")))
void minplus_axpy_avx2(double* dst, const double* row, double a, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d sum = _mm256_add_pd(_mm256_loadu_pd(row + j), va);
    __m256d cur = _mm256_loadu_pd(dst + j);
    _mm256_storeu_pd(dst + j, _mm256_min_pd(cur, sum));
  }
  for (; j < n; ++j) {
    double cand = row[j] + a;
    if (cand < dst[j]) dst[j] = cand;
  }
}

__attribute__((target("avx2")))
bool bool_row_any_avx2(const std::uint64_t* r, const std::uint64_t* x,
                       std::size_t nwords) {
  std::size_t w = 0;
  for (; w + 4 <= nwords; w += 4) {
    __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + w));
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + w));
    if (!_mm256_testz_si256(vr, vx)) return true;
  }
  for (; w < nwords; ++w) {
    if (r[w] & x[w]) return true;
  }
  return false;
}

#endif  // VHL_KERNELS_X86

#if defined(VHL_KERNELS_NEON)

double minplus_row_neon(const double* row, const double* v, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(kInf);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t sum = vaddq_f64(vld1q_f64(row + j), vld1q_f64(v + j));
    acc = vminq_f64(acc, sum);
  }
  double best = vgetq_lane_f64(acc, 0);
  double hi = vgetq_lane_f64(acc, 1);
  if (hi < best) best = hi;
  for (; j < n; ++j) {
    double cand = row[j] + v[j];
    if (cand < best) best = cand;
  }
  return best;
}

void minplus_axpy_neon(double* dst, const double* row, double a, std::size_t n) {
  float64x2_t va = vdupq_n_f64(a);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t sum = vaddq_f64(vld1q_f64(row + j), va);
    float64x2_t cur = vld1q_f64(dst + j);
    vst1q_f64(dst + j, vminq_f64(cur, sum));
  }
  for (; j < n; ++j) {
    double cand = row[j] + a;
    if (cand < dst[j]) dst[j] = cand;
  }
}

bool bool_row_any_neon(const std::uint64_t* r, const std::uint64_t* x,
                       std::size_t nwords) {
  std::size_t w = 0;
  for (; w + 2 <= nwords; w += 2) {
    uint64x2_t vand = vandq_u64(vld1q_u64(r + w), vld1q_u64(x + w));
    if (vgetq_lane_u64(vand, 0) | vgetq_lane_u64(vand, 1)) return true;
  }
  for (; w < nwords; ++w) {
    if (r[w] & x[w]) return true;
  }
  return false;
}

#endif  // VHL_KERNELS_NEON

namespace {

const Dispatch kScalar = {
    "scalar",
    &minplus_row_scalar,
    &minplus_axpy_scalar,
    &bool_row_any_scalar,
};

const Dispatch* detect() {
#if defined(VHL_KERNELS_X86)
  if (__builtin_cpu_supports("avx2")) {
    static const Dispatch kAvx2 = {
        "avx2",
        &minplus_row_avx2,
        &minplus_axpy_avx2,
        &bool_row_any_avx2,
    };
    return &kAvx2;
  }
#elif defined(VHL_KERNELS_NEON)
  static const Dispatch kNeon = {
      "neon",
      &minplus_row_neon,
      &minplus_axpy_neon,
      &bool_row_any_neon,
  };
  return &kNeon;
#endif
  return &kScalar;
}

}  // namespace

const Dispatch& active() {
  static const Dispatch* chosen = detect();
  return *chosen;
}

const Dispatch& scalar() { return kScalar; }

}  // namespace vhl::kernels
