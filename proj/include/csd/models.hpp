// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "csd/discord.hpp"
#include "csd/states.hpp"

namespace csd {

struct XxzDmCouplings {
    double j = 1.0;
    double jz = 1.0;
    double dx = 0.0;
    double beta = 0.0; // inverse temperature, >= 0
};

// Two-spin XXZ exchange plus a Dzyaloshinskii-Moriya term along x.
CMat4 xxz_dm_hamiltonian(double j, double jz, double dx);

// exp(-beta h) / tr exp(-beta h), spectrum shifted by its maximum before
// exponentiating.
DensityMatrix gibbs_state(const CMat4& h, double beta);

// Spin-chain transport model behind the correlation functions: n sites
// (n >= 3), coupling a, time t >= 0, inverse temperature beta. Only the
// products a*t and beta enter.
struct NanoporeSettings {
    int n = 20;
    double a = 1.0;
    double t = 0.0;
    double beta = 1.0;
};

struct NanoporeCorrelations {
    double p, q, r, u;
};

NanoporeCorrelations nanopore_correlations(const NanoporeSettings& s);

// Centrosymmetric state built from the correlations (diagonal 1/4,
// rho_12 = rho_13 = p/2 - iu, rho_14 = q - r, rho_23 = q + r).
DensityMatrix nanopore_state(const NanoporeCorrelations& c);

// Family parameters with the canonical reduction angle -atan2(2u, r)/2.
NanoporeFamilyParams family_from_correlations(const NanoporeCorrelations& c);

// rho = alpha |psi><psi| + (1-alpha)/4 I with
// |psi> = a(|00> + |11>) + b(|01> + |10>), |a|^2 + |b|^2 = 1/2.
struct PseudopureSettings {
    double alpha = 1.0;
    Cx a = Cx(0.7071067811865476, 0.0);
    Cx b = Cx(0.0, 0.0);
};

DensityMatrix pseudopure_state(const PseudopureSettings& s);

} // namespace csd
