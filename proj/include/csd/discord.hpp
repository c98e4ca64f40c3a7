// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>

#include "csd/states.hpp"

namespace csd {

// Shannon entropy in bits of a spectrum that sums to one. Eigenvalues in
// [-1e-10, 0) are clamped to zero; 0 log 0 := 0.
double entropy_bits(std::span<const double> eigenvalues);

// Binary entropy of the (1/2 + p, 1/2 - p) marginal; requires |p| <= 1/2.
double reduced_entropy(double p);

// Real-X family reached from the centrosymmetric correlation states:
// diagonal (1/4+p+q, 1/4-q, 1/4-q, 1/4-p+q), anti-diagonal entries
// w = 2u sin(2 phi) - r cos(2 phi) and r, with phi the reduction angle.
struct NanoporeFamilyParams {
    double p, q, r, u;
    double phi;
};

// w as above: the rotated outer off-diagonal.
double family_off_diagonal(const NanoporeFamilyParams& f);

// Closed-form spectrum: 1/4 + q +- sqrt(p^2 + w^2), 1/4 - q +- |r|.
std::array<double, 4> family_eigenvalues(const NanoporeFamilyParams& f);

// The implied density matrix (embedded real-X form).
DensityMatrix family_state(const NanoporeFamilyParams& f);

enum class DiscordBranch { Z, XY };

struct DiscordResult {
    double q;             // discord, clamped to 0 within -1e-9
    double q1, q2;        // measurement-branch values (z and x/y)
    DiscordBranch branch; // which branch attained the minimum
    double s;             // total entropy
    double sr;            // reduced (marginal) entropy
};

// Closed-form discord of the family: min of the z branch and the x/y branch.
DiscordResult discord_family(const NanoporeFamilyParams& f);

// S(rho_A) + S(rho_B) - S(rho).
double mutual_information(const DensityMatrix& rho);

} // namespace csd
