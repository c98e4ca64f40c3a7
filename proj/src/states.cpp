// SPDX-License-Identifier: Apache-2.0
#include "csd/states.hpp"

#include <cmath>
#include <string>

#include "csd/errors.hpp"

namespace csd {

DensityMatrix validate_density(const CMat4& m) {
    const double herm = hermiticity_residual(m);
    if (herm > 1e-10)
        throw NotHermitian("hermiticity residual " + std::to_string(herm) + " exceeds 1e-10");

    const Cx tr = trace(m);
    if (std::abs(tr - Cx(1.0)) > 1e-10)
        throw TraceNotOne("trace " + std::to_string(tr.real()) + " + " +
                          std::to_string(tr.imag()) + "i differs from 1 beyond 1e-10");

    const EigenDecomposition d = herm_eig(m);
    if (d.eigenvalues[0] < -1e-10)
        throw NotPsd("eigenvalue " + std::to_string(d.eigenvalues[0]) + " below -1e-10");

    return DensityMatrix(m);
}

double cs_pattern_residual(const CMat4& m) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(m(i, j) - m(3 - i, 3 - j)));
    return worst;
}

double x_pattern_residual(const CMat4& m) {
    double worst = 0.0;
    const int zeros[8][2] = {{0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 3}, {2, 3}, {3, 1}, {3, 2}};
    for (const auto& z : zeros) worst = std::max(worst, std::abs(m(z[0], z[1])));
    return worst;
}

CSParams extract_cs(const DensityMatrix& rho, double tol) {
    const CMat4& m = rho.matrix();
    const double res = cs_pattern_residual(m);
    if (res > tol) {
        double worst = 0.0;
        int wi = 0, wj = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const double d = std::abs(m(i, j) - m(3 - i, 3 - j));
                if (d > worst) {
                    worst = d;
                    wi = i;
                    wj = j;
                }
            }
        throw NotCentrosymmetric("entry (" + std::to_string(wi + 1) + "," +
                                 std::to_string(wj + 1) + ") mirror residual " +
                                 std::to_string(worst) + " exceeds tolerance");
    }
    return CSParams{m(0, 0).real(), m(0, 1).real(), m(0, 1).imag(),
                    m(0, 2).real(), m(0, 2).imag(), m(0, 3).real(), m(1, 2).real()};
}

CMat4 cs_matrix(const CSParams& p) {
    CMat4 m;
    const Cx a(p.p2, p.p3);
    const Cx b(p.p4, p.p5);
    m(0, 0) = p.p1;
    m(0, 1) = a;
    m(0, 2) = b;
    m(0, 3) = p.p6;
    m(1, 0) = std::conj(a);
    m(1, 1) = 0.5 - p.p1;
    m(1, 2) = p.p7;
    m(1, 3) = std::conj(b);
    m(2, 0) = std::conj(b);
    m(2, 1) = p.p7;
    m(2, 2) = 0.5 - p.p1;
    m(2, 3) = std::conj(a);
    m(3, 0) = p.p6;
    m(3, 1) = b;
    m(3, 2) = a;
    m(3, 3) = p.p1;
    return m;
}

DensityMatrix embed_cs(const CSParams& p) { return validate_density(cs_matrix(p)); }

XParams extract_x(const DensityMatrix& rho, double tol) {
    const CMat4& m = rho.matrix();
    const int zeros[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    for (const auto& z : zeros) {
        const double mag = std::abs(m(z[0], z[1]));
        if (mag > tol)
            throw NotXForm("entry (" + std::to_string(z[0] + 1) + "," +
                           std::to_string(z[1] + 1) + ") magnitude " + std::to_string(mag) +
                           " exceeds tolerance");
    }
    return XParams{m(0, 0).real(), m(1, 1).real(), m(2, 2).real(),
                   m(0, 3).real(), m(0, 3).imag(), m(1, 2).real(), m(1, 2).imag()};
}

CMat4 x_matrix(const XParams& q) {
    CMat4 m;
    const Cx a(q.q4, q.q5);
    const Cx b(q.q6, q.q7);
    m(0, 0) = q.q1;
    m(1, 1) = q.q2;
    m(2, 2) = q.q3;
    m(3, 3) = 1.0 - q.q1 - q.q2 - q.q3;
    m(0, 3) = a;
    m(3, 0) = std::conj(a);
    m(1, 2) = b;
    m(2, 1) = std::conj(b);
    return m;
}

DensityMatrix embed_x(const XParams& q) { return validate_density(x_matrix(q)); }

namespace {

DensityMatrix gram_state(const CMat4& g) {
    const CMat4 gg = g * adjoint(g);
    const double tr = trace(gg).real();
    CMat4 m = Cx(1.0 / tr) * gg;
    // The Gram form is Hermitian PSD by construction; round the symmetry exactly.
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const Cx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    return validate_density(m);
}

} // namespace

DensityMatrix random_cs_state(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMat4 g;
    for (auto& v : g.e) v = Cx(n(rng), n(rng));
    // Project onto the exchange symmetry: G = (G + J G J)/2 with J the flip.
    CMat4 sym;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) sym(i, j) = 0.5 * (g(i, j) + g(3 - i, 3 - j));
    return gram_state(sym);
}

DensityMatrix random_x_state(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMat4 g;
    const int pattern[8][2] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 3}, {3, 0}, {1, 2}, {2, 1}};
    for (const auto& p : pattern) g(p[0], p[1]) = Cx(n(rng), n(rng));
    return gram_state(g);
}

} // namespace csd
