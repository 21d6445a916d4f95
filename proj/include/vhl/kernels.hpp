#pragma once

#include <cstddef>
#include <cstdint>

// Platform detection. Vector variants compile only where the instruction
// set exists; selection between them happens at runtime via active().
#if defined(__x86_64__) || defined(_M_X64)
#define VHL_KERNELS_X86 1
#elif defined(__aarch64__)
#define VHL_KERNELS_NEON 1
#endif

namespace vhl::kernels {

// ======================= scalar reference kernels =======================
// These define the semantics. Every vector variant must be bit-identical
// on all inputs: min over doubles is exact, and the adds are performed
// per element in both versions, so no reassociation of sums occurs.

/// min over j of row[j] + v[j]; +infinity entries are absorbing.
double minplus_row_scalar(const double* row, const double* v, std::size_t n);

/// dst[j] = min(dst[j], row[j] + a) for all j.
void minplus_axpy_scalar(double* dst, const double* row, double a, std::size_t n);

/// True when (r AND x) has any set bit across nwords 64-bit words.
bool bool_row_any_scalar(const std::uint64_t* r, const std::uint64_t* x,
                         std::size_t nwords);

// =========================== vector kernels =============================

#if defined(VHL_KERNELS_X86)
double minplus_row_avx2(const double* row, const double* v, std::size_t n);
void minplus_axpy_avx2(double* dst, const double* row, double a, std::size_t n);
bool bool_row_any_avx2(const std::uint64_t* r, const std::uint64_t* x,
                       std::size_t nwords);
#endif

#if defined(VHL_KERNELS_NEON)
double minplus_row_neon(const double* row, const double* v, std::size_t n);
void minplus_axpy_neon(double* dst, const double* row, double a, std::size_t n);
bool bool_row_any_neon(const std::uint64_t* r, const std::uint64_t* x,
                       std::size_t nwords);
#endif

// ========================== runtime dispatch ============================

struct Dispatch {
  const char* name;
  double (*minplus_row)(const double*, const double*, std::size_t);
  void (*minplus_axpy)(double*, const double*, double, std::size_t);
  bool (*bool_row_any)(const std::uint64_t*, const std::uint64_t*, std::size_t);
};

/// The kernel set picked for this machine (AVX2 or NEON when available,
/// scalar otherwise). Detection runs once, on first use.
const Dispatch& active();

/// The scalar reference set, for differential tests and forced-scalar runs.
const Dispatch& scalar();

}  // namespace vhl::kernels
