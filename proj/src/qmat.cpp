// SPDX-License-Identifier: Apache-2.0
#include "csd/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "csd/errors.hpp"

namespace csd {

CMat4 kron(const CMat2& a, const CMat2& b) {
    CMat4 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    c(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return c;
}

namespace {

double off_diagonal_sq(const CMat4& a) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) s += std::norm(a(i, j));
    return s;
}

double frobenius_sq(const CMat4& a) {
    double s = 0.0;
    for (const Cx& v : a.e) s += std::norm(v);
    return s;
}

} // namespace

EigenDecomposition herm_eig(const CMat4& m) {
    const double herm = hermiticity_residual(m);
    if (herm > 1e-10)
        throw NotHermitian("hermiticity residual " + std::to_string(herm) + " exceeds 1e-10");

    CMat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    CMat4 v = CMat4::identity();

    const double stop = 1e-30 * std::max(1.0, frobenius_sq(a));
    constexpr int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_sq(a) <= stop) {
            converged = true;
            break;
        }
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const Cx g = a(p, q);
                const double ag = std::abs(g);
                if (ag < 1e-300) continue;

                // Phase step: rotate column/row q so the pivot becomes real.
                const Cx ph = g / ag;
                const Cx phc = std::conj(ph);
                for (int r = 0; r < 4; ++r) {
                    a(r, q) *= phc;
                    a(q, r) *= ph;
                    v(r, q) *= phc;
                }

                // Real Jacobi rotation on the (p,q) plane.
                const double apq = a(p, q).real(); // = |g|
                const double th = (a(q, q).real() - a(p, p).real()) / (2.0 * apq);
                const double t = (th >= 0.0 ? 1.0 : -1.0) / (std::abs(th) + std::sqrt(th * th + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) = a(p, p).real() - t * apq;
                a(q, q) = a(q, q).real() + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < 4; ++r) {
                    if (r == p || r == q) continue;
                    const Cx arp = a(r, p);
                    const Cx arq = a(r, q);
                    a(r, p) = arp - s * (arq + tau * arp);
                    a(r, q) = arq + s * (arp - tau * arq);
                    a(p, r) = std::conj(a(r, p));
                    a(q, r) = std::conj(a(r, q));
                }
                for (int r = 0; r < 4; ++r) {
                    const Cx vrp = v(r, p);
                    const Cx vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if (!converged && off_diagonal_sq(a) > stop)
        throw NoConvergence("Jacobi sweep cap (100) exceeded");

    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition d;
    for (int k = 0; k < 4; ++k) {
        d.eigenvalues[k] = a(order[k], order[k]).real();
        for (int r = 0; r < 4; ++r) d.eigenvectors(r, k) = v(r, order[k]);
    }
    return d;
}

CMat4 matrix_function(const CMat4& m, const std::function<double(double)>& f) {
    const EigenDecomposition d = herm_eig(m);
    std::array<double, 4> fl{};
    for (int k = 0; k < 4; ++k) {
        fl[k] = f(d.eigenvalues[k]);
        if (!std::isfinite(fl[k]))
            throw DomainError("function not finite at eigenvalue " +
                              std::to_string(d.eigenvalues[k]));
    }
    CMat4 out;
    const CMat4& v = d.eigenvectors;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Cx s = 0.0;
            for (int k = 0; k < 4; ++k) s += v(i, k) * fl[k] * std::conj(v(j, k));
            out(i, j) = s;
        }
    return out;
}

CMat2 partial_trace(const CMat4& rho, Subsystem keep) {
    CMat2 out;
    if (keep == Subsystem::First) {
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap)
                out(a, ap) = rho(2 * a + 0, 2 * ap + 0) + rho(2 * a + 1, 2 * ap + 1);
    } else {
        for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp)
                out(b, bp) = rho(0 + b, 0 + bp) + rho(2 + b, 2 + bp);
    }
    return out;
}

std::array<double, 2> herm_eig2_values(const CMat2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    return {mean - disc, mean + disc};
}

} // namespace csd
