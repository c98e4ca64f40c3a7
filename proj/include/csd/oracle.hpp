// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

#include "csd/discord.hpp"
#include "csd/states.hpp"

namespace csd {

// Projective measurement direction on the Bloch sphere.
struct MeasurementBasis {
    double theta; // polar angle, [0, pi]
    double phi;   // azimuth, [0, 2 pi)
};

struct OracleSettings {
    int grid_theta = 64;
    int grid_phi = 128;
    int refine_iterations = 60;
    double refine_shrink = 0.5;
    double tol = 1e-9; // clamp window for the final discord value
};

// Projectors (1/2)(I +- n.sigma) onto the +-n directions.
std::pair<CMat2, CMat2> basis_projectors(const MeasurementBasis& b);

// sum_k p_k S(rho_cond_k) for the projective measurement of `measured`,
// conditioning the other qubit. Outcomes with p_k <= 1e-14 contribute zero.
double conditional_entropy_after_measurement(const DensityMatrix& rho,
                                             const MeasurementBasis& b,
                                             Subsystem measured);

struct CorrelationResult {
    double value;
    MeasurementBasis basis; // minimizing basis, normalized ranges
};

// C = S(unmeasured marginal) - min over bases of the conditional entropy.
// Coarse grid scan, then pattern-search refinement (coordinate descent with
// step shrinking, floor 1e-7 rad).
CorrelationResult classical_correlation(const DensityMatrix& rho,
                                        const OracleSettings& settings = {},
                                        Subsystem measured = Subsystem::Second);

// Q = I(rho) - C(rho); ground truth for the closed forms.
DiscordResult discord_numeric(const DensityMatrix& rho,
                              const OracleSettings& settings = {},
                              Subsystem measured = Subsystem::Second);

} // namespace csd
