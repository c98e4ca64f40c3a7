// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <random>

#include "csd/qmat.hpp"

namespace csdtest {

using csd::CMat2;
using csd::CMat4;
using csd::Cx;

// Pauli matrices built here so checks against library results stay independent.
inline CMat2 sigma_x() {
    CMat2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

inline CMat2 sigma_y() {
    CMat2 m;
    m(0, 1) = Cx(0.0, -1.0);
    m(1, 0) = Cx(0.0, 1.0);
    return m;
}

inline CMat2 sigma_z() {
    CMat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

inline CMat2 random_cmat2(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMat2 m;
    for (auto& v : m.e) v = Cx(n(rng), n(rng));
    return m;
}

inline CMat4 random_cmat4(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMat4 m;
    for (auto& v : m.e) v = Cx(n(rng), n(rng));
    return m;
}

inline CMat4 random_hermitian(std::mt19937_64& rng) {
    const CMat4 g = random_cmat4(rng);
    return Cx(0.5) * (g + csd::adjoint(g));
}

inline std::array<double, 4> sorted4(std::array<double, 4> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline double max_abs_diff4(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace csdtest
