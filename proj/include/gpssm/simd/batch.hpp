#pragma once

#include <cstdint>

// Batched kernel-evaluation primitives. These are the data-parallel inner
// loops of the toolkit: evaluating a covariance function against every
// training column at once, and reducing the result against a weight vector.
//
// Two backends exist: a scalar reference implementation and an AVX2+FMA
// implementation. The active backend is chosen at startup from CPU features
// (overridable via the GPSSM_SIMD environment variable or force_backend()),
// and the two are equivalence-tested against each other.
//
// Matrices are column-major with contiguous columns, matching Eigen's
// default layout: X[j * n + i] is component i of column j.

namespace gpssm::simd {

enum class Backend { Scalar, Avx2 };

// Backend currently used by the batch entry points.
Backend active_backend();

// True if this build and CPU can run the AVX2 backend.
bool avx2_available();

// Overrides backend selection (tests use this to exercise both paths).
// Throws gpssm::UsageError if the requested backend is unavailable.
void force_backend(Backend backend);

// out[j] = sigma_f2 * exp(-||x - X_col_j||^2 * inv_two_lambda2)
void se_cross(const double* x, const double* X, int n, int m, double sigma_f2,
              double inv_two_lambda2, double* out);

// out[j] = dot(x, X_col_j) + c
void dot_cross(const double* x, const double* X, int n, int m, double c,
               double* out);

// out[j] = base[j]^p for integer p >= 1 (binary exponentiation, identical
// operation order in both backends)
void pow_int_batch(const double* base, int m, int p, double* out);

// Sum_j a[j] * b[j]
double dot(const double* a, const double* b, int m);

// out[j] = exp(v[j]); exposed so the vectorized exp can be tested directly
void exp_batch(const double* v, int m, double* out);

}  // namespace gpssm::simd
