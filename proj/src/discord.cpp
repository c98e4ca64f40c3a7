// SPDX-License-Identifier: Apache-2.0
#include "csd/discord.hpp"

#include <cmath>
#include <string>

#include "csd/errors.hpp"

namespace csd {

namespace {

constexpr double kEigenClamp = -1e-10;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

} // namespace

double entropy_bits(std::span<const double> eigenvalues) {
    double sum = 0.0;
    double s = 0.0;
    for (double lam : eigenvalues) {
        if (lam < kEigenClamp)
            throw NegativeEigenvalue("eigenvalue " + std::to_string(lam) +
                                     " below clamp threshold");
        if (lam < 0.0) lam = 0.0;
        sum += lam;
        s -= xlog2x(lam);
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw DomainError("eigenvalues sum to " + std::to_string(sum) + ", not 1");
    return s;
}

double reduced_entropy(double p) {
    if (std::abs(p) > 0.5)
        throw DomainError("marginal parameter " + std::to_string(p) + " outside [-1/2, 1/2]");
    return -xlog2x(0.5 + p) - xlog2x(0.5 - p);
}

double family_off_diagonal(const NanoporeFamilyParams& f) {
    return 2.0 * f.u * std::sin(2.0 * f.phi) - f.r * std::cos(2.0 * f.phi);
}

std::array<double, 4> family_eigenvalues(const NanoporeFamilyParams& f) {
    const double w = family_off_diagonal(f);
    const double g = std::sqrt(f.p * f.p + w * w);
    const double ar = std::abs(f.r);
    return {0.25 + f.q + g, 0.25 + f.q - g, 0.25 - f.q + ar, 0.25 - f.q - ar};
}

DensityMatrix family_state(const NanoporeFamilyParams& f) {
    return embed_x(XParams{0.25 + f.p + f.q, 0.25 - f.q, 0.25 - f.q,
                           family_off_diagonal(f), 0.0, f.r, 0.0});
}

DiscordResult discord_family(const NanoporeFamilyParams& f) {
    const double p = f.p;
    const double q = f.q;
    const double w = family_off_diagonal(f);

    const auto lams = family_eigenvalues(f);
    const double s = entropy_bits(lams);
    const double sr = reduced_entropy(p);

    // Conditional term x log2(x/d); a vanishing numerator contributes zero.
    auto term = [](double x, double d) { return x > 0.0 ? x * std::log2(x / d) : 0.0; };
    const double q1 = sr - s - term(0.25 + p + q, 0.5 + p) - term(0.25 - q, 0.5 + p) -
                      term(0.25 - p + q, 0.5 - p) - term(0.25 - q, 0.5 - p);

    const double g = std::sqrt(p * p + (std::abs(f.r) + std::abs(w)) * (std::abs(f.r) + std::abs(w)));
    const double q2 = sr - s - xlog2x(0.5 * (1.0 + 2.0 * g)) - xlog2x(0.5 * (1.0 - 2.0 * g));

    DiscordResult out;
    out.q1 = q1;
    out.q2 = q2;
    out.branch = q1 <= q2 ? DiscordBranch::Z : DiscordBranch::XY;
    out.q = std::min(q1, q2);
    if (out.q < 0.0 && out.q >= -1e-9) out.q = 0.0;
    out.s = s;
    out.sr = sr;
    return out;
}

double mutual_information(const DensityMatrix& rho) {
    const auto ev_a = herm_eig2_values(partial_trace(rho.matrix(), Subsystem::First));
    const auto ev_b = herm_eig2_values(partial_trace(rho.matrix(), Subsystem::Second));
    const double s = entropy_bits(herm_eig(rho.matrix()).eigenvalues);
    return entropy_bits(ev_a) + entropy_bits(ev_b) - s;
}

} // namespace csd
