// SPDX-License-Identifier: Apache-2.0
#include "csd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "csd/errors.hpp"

namespace csd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOutcomeCutoff = 1e-14;
constexpr double kStepFloor = 1e-7;

double entropy2(const CMat2& m) {
    const auto ev = herm_eig2_values(m);
    double s = 0.0;
    for (double lam : ev) {
        if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return s;
}

Subsystem other(Subsystem s) {
    return s == Subsystem::First ? Subsystem::Second : Subsystem::First;
}

} // namespace

std::pair<CMat2, CMat2> basis_projectors(const MeasurementBasis& b) {
    const double nx = std::sin(b.theta) * std::cos(b.phi);
    const double ny = std::sin(b.theta) * std::sin(b.phi);
    const double nz = std::cos(b.theta);
    CMat2 plus;
    plus(0, 0) = 0.5 * (1.0 + nz);
    plus(0, 1) = 0.5 * Cx(nx, -ny);
    plus(1, 0) = 0.5 * Cx(nx, ny);
    plus(1, 1) = 0.5 * (1.0 - nz);
    const CMat2 minus = CMat2::identity() - plus;
    return {plus, minus};
}

double conditional_entropy_after_measurement(const DensityMatrix& rho,
                                             const MeasurementBasis& b,
                                             Subsystem measured) {
    const auto [plus, minus] = basis_projectors(b);
    const Subsystem keep = other(measured);
    double total = 0.0;
    for (const CMat2* proj : {&plus, &minus}) {
        const CMat4 m = measured == Subsystem::Second ? kron(CMat2::identity(), *proj)
                                                      : kron(*proj, CMat2::identity());
        const CMat4 projected = m * rho.matrix() * m;
        const double pk = trace(projected).real();
        if (pk <= kOutcomeCutoff) continue;
        const CMat2 cond = Cx(1.0 / pk) * partial_trace(projected, keep);
        total += pk * entropy2(cond);
    }
    return total;
}

namespace {

struct GridPoint {
    double value;
    int i, j;
};

MeasurementBasis normalized_basis(double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    const double t = std::acos(std::clamp(nz, -1.0, 1.0));
    double p = (std::abs(nx) + std::abs(ny)) > 0.0 ? std::atan2(ny, nx) : 0.0;
    if (p < 0.0) p += 2.0 * kPi;
    return MeasurementBasis{t, p};
}

} // namespace

CorrelationResult classical_correlation(const DensityMatrix& rho,
                                        const OracleSettings& settings,
                                        Subsystem measured) {
    if (settings.grid_theta < 8 || settings.grid_phi < 8)
        throw DomainError("coarse grid must be at least 8x8");
    if (settings.refine_shrink <= 0.0 || settings.refine_shrink >= 1.0)
        throw DomainError("shrink factor must lie in (0, 1)");
    if (settings.tol <= 0.0) throw DomainError("tolerance must be positive");

    const int gt = settings.grid_theta;
    const int gp = settings.grid_phi;
    const double cell_t = kPi / (gt - 1);
    const double cell_p = 2.0 * kPi / gp;

    auto ce = [&](double theta, double phi) {
        return conditional_entropy_after_measurement(rho, MeasurementBasis{theta, phi},
                                                     measured);
    };

    std::vector<GridPoint> grid;
    grid.reserve(static_cast<size_t>(gt) * gp);
    for (int i = 0; i < gt; ++i)
        for (int j = 0; j < gp; ++j) grid.push_back({ce(i * cell_t, j * cell_p), i, j});
    std::sort(grid.begin(), grid.end(),
              [](const GridPoint& a, const GridPoint& b) { return a.value < b.value; });

    // Refine from up to four well-separated low points; one basin can shadow
    // a near-degenerate competitor at coarse resolution.
    std::vector<GridPoint> starts;
    for (const GridPoint& g : grid) {
        bool apart = true;
        for (const GridPoint& s : starts) {
            const int di = std::abs(g.i - s.i);
            const int djraw = std::abs(g.j - s.j);
            const int dj = std::min(djraw, gp - djraw);
            if (di <= 3 && dj <= 3) {
                apart = false;
                break;
            }
        }
        if (apart) starts.push_back(g);
        if (starts.size() == 4) break;
    }

    double best = grid.front().value;
    double best_theta = grid.front().i * cell_t;
    double best_phi = grid.front().j * cell_p;

    for (const GridPoint& start : starts) {
        double cur = start.value;
        double theta = start.i * cell_t;
        double phi = start.j * cell_p;
        double st = cell_t;
        double sp = cell_p;
        for (int iter = 0; iter < settings.refine_iterations; ++iter) {
            if (std::max(st, sp) < kStepFloor) break;
            bool improved = false;
            for (int axis = 0; axis < 2; ++axis) {
                const double step = axis == 0 ? st : sp;
                for (int walk = 0; walk < 1000; ++walk) {
                    const double up = axis == 0 ? ce(theta + step, phi) : ce(theta, phi + step);
                    const double dn = axis == 0 ? ce(theta - step, phi) : ce(theta, phi - step);
                    if (up < cur && up <= dn) {
                        cur = up;
                        (axis == 0 ? theta : phi) += step;
                    } else if (dn < cur) {
                        cur = dn;
                        (axis == 0 ? theta : phi) -= step;
                    } else {
                        break;
                    }
                    improved = true;
                }
            }
            if (!improved) {
                st *= settings.refine_shrink;
                sp *= settings.refine_shrink;
            }
        }
        if (cur < best) {
            best = cur;
            best_theta = theta;
            best_phi = phi;
        }
    }

    const CMat2 marginal = partial_trace(rho.matrix(), other(measured));
    return CorrelationResult{entropy2(marginal) - best, normalized_basis(best_theta, best_phi)};
}

DiscordResult discord_numeric(const DensityMatrix& rho, const OracleSettings& settings,
                              Subsystem measured) {
    const CMat2 ma = partial_trace(rho.matrix(), Subsystem::First);
    const CMat2 mb = partial_trace(rho.matrix(), Subsystem::Second);
    const double sa = entropy2(ma);
    const double sb = entropy2(mb);
    const double s = entropy_bits(herm_eig(rho.matrix()).eigenvalues);
    const double info = sa + sb - s;

    const CorrelationResult cc = classical_correlation(rho, settings, measured);
    double q = info - cc.value;
    if (q < 0.0 && q >= -settings.tol) q = 0.0;

    DiscordResult out;
    out.q = q;
    out.q1 = q;
    out.q2 = q;
    out.branch = DiscordBranch::Z;
    out.s = s;
    out.sr = measured == Subsystem::Second ? sa : sb;
    return out;
}

} // namespace csd
