// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "csd/qmat.hpp"
#include "csd/states.hpp"

namespace csd {

// H = (1/sqrt(2)) [[1, 1], [1, -1]].
CMat2 hadamard2();

// R = H (x) H; orthogonal, symmetric, involutive.
CMat4 rotation_r();

// exp(-i phi sigma_z / 2) = diag(e^{-i phi/2}, e^{i phi/2}).
CMat2 phase_gate(double phi);

// Parameter-space images of conjugation by R (and its inverse).
XParams cs_to_x_params(const CSParams& p);
CSParams x_to_cs_params(const XParams& q);

// (uA (x) uB) rho (uA (x) uB)^dagger; rejects non-unitary factors (1e-12).
DensityMatrix conjugate_local(const DensityMatrix& rho, const CMat2& ua, const CMat2& ub);

// rho = (1/4) [c0 + sum_i a_i sigma_i(x)1 + sum_j b_j 1(x)sigma_j
//              + sum_ij t_ij sigma_i(x)sigma_j],  c_munu = tr[rho sigma_mu(x)sigma_nu].
struct BlochCoefficients {
    double c0;
    std::array<double, 3> a;
    std::array<double, 3> b;
    std::array<std::array<double, 3>, 3> t;
};

BlochCoefficients bloch_decompose(const DensityMatrix& rho);
CMat4 bloch_reconstruct(const BlochCoefficients& c);

// Angles (phiA, phiB) for U(phiA)(x)U(phiB) with U = phase_gate, chosen so both
// X off-diagonals become real; realX carries the rotated parameters, q5 = q7 = 0.
struct PhaseReduction {
    XParams real_x;
    double phi_a;
    double phi_b;
};

PhaseReduction phase_reduce_x(const XParams& q);

} // namespace csd
