// SPDX-License-Identifier: Apache-2.0
#include "csd/models.hpp"

#include <cmath>
#include <string>

#include "csd/errors.hpp"

namespace csd {

CMat4 xxz_dm_hamiltonian(double j, double jz, double dx) {
    CMat4 h;
    const Cx id(0.0, dx);
    h(0, 0) = jz;
    h(0, 1) = id;
    h(0, 2) = -id;
    h(1, 0) = -id;
    h(1, 1) = -jz;
    h(1, 2) = 2.0 * j;
    h(1, 3) = id;
    h(2, 0) = id;
    h(2, 1) = 2.0 * j;
    h(2, 2) = -jz;
    h(2, 3) = -id;
    h(3, 1) = -id;
    h(3, 2) = id;
    h(3, 3) = jz;
    return h;
}

DensityMatrix gibbs_state(const CMat4& h, double beta) {
    if (beta < 0.0) throw DomainError("inverse temperature must be >= 0");
    const double emax = herm_eig(h).eigenvalues[3];
    const CMat4 weights =
        matrix_function(h, [&](double e) { return std::exp(-beta * (e - emax)); });
    const double z = trace(weights).real();
    return validate_density(Cx(1.0 / z) * weights);
}

namespace {

// Integer power by repeated multiplication; keeps the sign of odd powers exact.
double ipow(double base, int n) {
    double out = 1.0;
    for (int k = 0; k < n; ++k) out *= base;
    return out;
}

} // namespace

NanoporeCorrelations nanopore_correlations(const NanoporeSettings& s) {
    if (s.n < 3) throw DomainError("chain length must be >= 3");
    if (s.t < 0.0) throw DomainError("time must be >= 0");
    const double at = s.a * s.t;
    const double th = std::tanh(s.beta / 2.0);
    const double c = std::cos(at);
    const double c2 = std::cos(2.0 * at);
    NanoporeCorrelations out;
    out.p = 0.5 * th * ipow(c, s.n - 1);
    out.q = 0.125 * th * th * (1.0 + ipow(c2, s.n - 2));
    out.r = 0.125 * th * th * (1.0 - ipow(c2, s.n - 2));
    out.u = 0.25 * th * ipow(c, s.n - 2) * std::sin(at);
    return out;
}

DensityMatrix nanopore_state(const NanoporeCorrelations& c) {
    const Cx a(0.5 * c.p, -c.u);
    CMat4 m;
    m(0, 0) = 0.25;
    m(0, 1) = a;
    m(0, 2) = a;
    m(0, 3) = c.q - c.r;
    m(1, 0) = std::conj(a);
    m(1, 1) = 0.25;
    m(1, 2) = c.q + c.r;
    m(1, 3) = std::conj(a);
    m(2, 0) = std::conj(a);
    m(2, 1) = c.q + c.r;
    m(2, 2) = 0.25;
    m(2, 3) = std::conj(a);
    m(3, 0) = c.q - c.r;
    m(3, 1) = a;
    m(3, 2) = a;
    m(3, 3) = 0.25;
    return validate_density(m);
}

NanoporeFamilyParams family_from_correlations(const NanoporeCorrelations& c) {
    const double phi =
        (c.u == 0.0 && c.r == 0.0) ? 0.0 : -0.5 * std::atan2(2.0 * c.u, c.r);
    return NanoporeFamilyParams{c.p, c.q, c.r, c.u, phi};
}

DensityMatrix pseudopure_state(const PseudopureSettings& s) {
    if (s.alpha < 0.0 || s.alpha > 1.0)
        throw DomainError("mixing weight must lie in [0, 1]");
    const double nrm = std::norm(s.a) + std::norm(s.b);
    if (std::abs(nrm - 0.5) > 1e-12)
        throw DomainError("|a|^2 + |b|^2 = " + std::to_string(nrm) + ", expected 1/2");

    const std::array<Cx, 4> psi{s.a, s.b, s.b, s.a};
    CMat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = s.alpha * psi[i] * std::conj(psi[j]);
    const double iso = (1.0 - s.alpha) / 4.0;
    for (int i = 0; i < 4; ++i) m(i, i) += iso;
    return validate_density(m);
}

} // namespace csd
