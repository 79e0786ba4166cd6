#pragma once

// Internal: per-backend entry points wired up by batch_dispatch.cpp.

namespace gpssm::simd::detail {

struct BatchTable {
  void (*se_cross)(const double*, const double*, int, int, double, double,
                   double*);
  void (*dot_cross)(const double*, const double*, int, int, double, double*);
  void (*pow_int_batch)(const double*, int, int, double*);
  double (*dot)(const double*, const double*, int);
  void (*exp_batch)(const double*, int, double*);
};

extern const BatchTable kScalarTable;

#if defined(GPSSM_HAVE_AVX2_TU)
extern const BatchTable kAvx2Table;
#endif

}  // namespace gpssm::simd::detail
