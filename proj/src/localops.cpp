// SPDX-License-Identifier: Apache-2.0
#include "csd/localops.hpp"

#include <cmath>
#include <string>

#include "csd/errors.hpp"

namespace csd {

namespace {

const CMat2& pauli(int k) {
    // k = 0..3: identity, x, y, z
    static const std::array<CMat2, 4> s = [] {
        std::array<CMat2, 4> p;
        p[0] = CMat2::identity();
        p[1](0, 1) = 1.0;
        p[1](1, 0) = 1.0;
        p[2](0, 1) = Cx(0.0, -1.0);
        p[2](1, 0) = Cx(0.0, 1.0);
        p[3](0, 0) = 1.0;
        p[3](1, 1) = -1.0;
        return p;
    }();
    return s[k];
}

double unitarity_residual(const CMat2& u) {
    return max_abs_diff(adjoint(u) * u, CMat2::identity());
}

} // namespace

CMat2 hadamard2() {
    CMat2 h;
    const double s = 1.0 / std::sqrt(2.0);
    h(0, 0) = s;
    h(0, 1) = s;
    h(1, 0) = s;
    h(1, 1) = -s;
    return h;
}

CMat4 rotation_r() { return kron(hadamard2(), hadamard2()); }

CMat2 phase_gate(double phi) {
    CMat2 u;
    u(0, 0) = std::polar(1.0, -phi / 2.0);
    u(1, 1) = std::polar(1.0, phi / 2.0);
    return u;
}

XParams cs_to_x_params(const CSParams& p) {
    return XParams{
        0.25 + p.p2 + p.p4 + 0.5 * (p.p6 + p.p7),
        0.25 - p.p2 + p.p4 - 0.5 * (p.p6 + p.p7),
        0.25 + p.p2 - p.p4 - 0.5 * (p.p6 + p.p7),
        -0.25 + p.p1 + 0.5 * (p.p6 - p.p7),
        -p.p3 - p.p5,
        -0.25 + p.p1 - 0.5 * (p.p6 - p.p7),
        p.p3 - p.p5,
    };
}

CSParams x_to_cs_params(const XParams& q) {
    return CSParams{
        0.25 + 0.5 * (q.q4 + q.q6),
        -0.25 + 0.5 * (q.q1 + q.q3),
        -0.5 * (q.q5 - q.q7),
        -0.25 + 0.5 * (q.q1 + q.q2),
        -0.5 * (q.q5 + q.q7),
        0.25 - 0.5 * (q.q2 + q.q3 - q.q4 + q.q6),
        0.25 - 0.5 * (q.q2 + q.q3 + q.q4 - q.q6),
    };
}

DensityMatrix conjugate_local(const DensityMatrix& rho, const CMat2& ua, const CMat2& ub) {
    const double ra = unitarity_residual(ua);
    if (ra > 1e-12)
        throw NotUnitary("first factor unitarity residual " + std::to_string(ra));
    const double rb = unitarity_residual(ub);
    if (rb > 1e-12)
        throw NotUnitary("second factor unitarity residual " + std::to_string(rb));

    const CMat4 u = kron(ua, ub);
    return validate_density(u * rho.matrix() * adjoint(u));
}

BlochCoefficients bloch_decompose(const DensityMatrix& rho) {
    const CMat4& m = rho.matrix();
    auto coeff = [&](int i, int j) {
        const CMat4 op = kron(pauli(i), pauli(j));
        return trace(m * op).real();
    };
    BlochCoefficients c{};
    c.c0 = coeff(0, 0);
    for (int i = 1; i <= 3; ++i) {
        c.a[i - 1] = coeff(i, 0);
        c.b[i - 1] = coeff(0, i);
        for (int j = 1; j <= 3; ++j) c.t[i - 1][j - 1] = coeff(i, j);
    }
    return c;
}

CMat4 bloch_reconstruct(const BlochCoefficients& c) {
    CMat4 sum = Cx(c.c0) * kron(pauli(0), pauli(0));
    for (int i = 1; i <= 3; ++i) {
        sum = sum + Cx(c.a[i - 1]) * kron(pauli(i), pauli(0));
        sum = sum + Cx(c.b[i - 1]) * kron(pauli(0), pauli(i));
        for (int j = 1; j <= 3; ++j)
            sum = sum + Cx(c.t[i - 1][j - 1]) * kron(pauli(i), pauli(j));
    }
    return Cx(0.25) * sum;
}

namespace {

// Rotation angle that makes re + i*im real, as minus the atan2 of the pair
// written in (im, -re) order; zero when the imaginary part is negligible.
double reduction_angle(double re, double im) {
    if (std::abs(im) <= 1e-13 * std::max(1.0, std::abs(re))) return 0.0;
    return -std::atan2(im, -re);
}

} // namespace

PhaseReduction phase_reduce_x(const XParams& q) {
    const double sum = reduction_angle(q.q4, q.q5);
    const double diff = reduction_angle(q.q6, q.q7);

    XParams out = q;
    out.q4 = q.q4 * std::cos(sum) + q.q5 * std::sin(sum);
    out.q5 = 0.0;
    out.q6 = q.q6 * std::cos(diff) + q.q7 * std::sin(diff);
    out.q7 = 0.0;

    return PhaseReduction{out, 0.5 * (sum + diff), 0.5 * (sum - diff)};
}

} // namespace csd
