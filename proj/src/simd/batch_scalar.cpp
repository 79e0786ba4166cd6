// Scalar reference backend. Kept deliberately plain: this is the ground
// truth the AVX2 backend is equivalence-tested against.

#include <cmath>

#include "batch_impl.hpp"

namespace gpssm::simd::detail {
namespace {

void se_cross_scalar(const double* x, const double* X, int n, int m,
                     double sigma_f2, double inv_two_lambda2, double* out) {
  for (int j = 0; j < m; ++j) {
    const double* col = X + static_cast<long>(j) * n;
    double d2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = x[i] - col[i];
      d2 += d * d;
    }
    out[j] = sigma_f2 * std::exp(-d2 * inv_two_lambda2);
  }
}

void dot_cross_scalar(const double* x, const double* X, int n, int m, double c,
                      double* out) {
  for (int j = 0; j < m; ++j) {
    const double* col = X + static_cast<long>(j) * n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += x[i] * col[i];
    out[j] = s + c;
  }
}

// Binary exponentiation; the AVX2 backend performs the same multiply
// sequence lane-wise, so results agree bit for bit.
void pow_int_scalar(const double* base, int m, int p, double* out) {
  for (int j = 0; j < m; ++j) {
    double acc = 1.0;
    double b = base[j];
    int e = p;
    while (e > 0) {
      if (e & 1) acc *= b;
      e >>= 1;
      if (e > 0) b *= b;
    }
    out[j] = acc;
  }
}

double dot_scalar(const double* a, const double* b, int m) {
  double s = 0.0;
  for (int j = 0; j < m; ++j) s += a[j] * b[j];
  return s;
}

void exp_scalar(const double* v, int m, double* out) {
  for (int j = 0; j < m; ++j) out[j] = std::exp(v[j]);
}

}  // namespace

const BatchTable kScalarTable = {se_cross_scalar, dot_cross_scalar,
                                 pow_int_scalar, dot_scalar, exp_scalar};

}  // namespace gpssm::simd::detail
