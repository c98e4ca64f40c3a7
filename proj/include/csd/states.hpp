// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "csd/qmat.hpp"

namespace csd {

// A 4x4 matrix that passed the density-matrix checks (Hermitian, unit trace,
// positive semidefinite). Construct via validate_density.
class DensityMatrix {
public:
    const CMat4& matrix() const { return m_; }

private:
    friend DensityMatrix validate_density(const CMat4& m);
    explicit DensityMatrix(const CMat4& m) : m_(m) {}
    CMat4 m_;
};

// Check order: Hermitian (1e-10), trace one (1e-10), PSD (eigenvalues >= -1e-10).
DensityMatrix validate_density(const CMat4& m);

// Centrosymmetric family: rho_11 = p1, rho_12 = p2 + i p3, rho_13 = p4 + i p5,
// rho_14 = p6, rho_23 = p7, rho_22 = 1/2 - p1, with a_ij = a_{5-i,5-j}.
struct CSParams {
    double p1, p2, p3, p4, p5, p6, p7;
};

// X family: diagonal (q1, q2, q3, 1-q1-q2-q3), rho_14 = q4 + i q5,
// rho_23 = q6 + i q7, all other off-diagonals zero.
struct XParams {
    double q1, q2, q3, q4, q5, q6, q7;
};

// Largest |m(i,j) - m(n-i+1, n-j+1)| over all entries (1-based mirror).
double cs_pattern_residual(const CMat4& m);

// Largest magnitude among the entries an X matrix requires to vanish.
double x_pattern_residual(const CMat4& m);

CSParams extract_cs(const DensityMatrix& rho, double tol = 1e-10);
DensityMatrix embed_cs(const CSParams& p);

XParams extract_x(const DensityMatrix& rho, double tol = 1e-10);
DensityMatrix embed_x(const XParams& q);

// Raw pattern matrices (no positivity guarantee); used by embed_* and tests.
CMat4 cs_matrix(const CSParams& p);
CMat4 x_matrix(const XParams& q);

// Random valid states via Gram construction: sample G with the pattern's
// symmetry, form G G^dagger, normalize the trace.
DensityMatrix random_cs_state(std::mt19937_64& rng);
DensityMatrix random_x_state(std::mt19937_64& rng);

} // namespace csd
