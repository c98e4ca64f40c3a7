// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <span>

namespace csd {

using Cx = std::complex<double>;

// Dense fixed-size complex matrices, row-major, zero-initialized.
struct CMat2 {
    std::array<Cx, 4> e{};

    Cx& operator()(int i, int j) { return e[2 * i + j]; }
    const Cx& operator()(int i, int j) const { return e[2 * i + j]; }

    static CMat2 identity() {
        CMat2 m;
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        return m;
    }
};

struct CMat4 {
    std::array<Cx, 16> e{};

    Cx& operator()(int i, int j) { return e[4 * i + j]; }
    const Cx& operator()(int i, int j) const { return e[4 * i + j]; }

    static CMat4 identity() {
        CMat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline CMat2 operator*(const CMat2& a, const CMat2& b) {
    CMat2 c;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            const Cx aik = a(i, k);
            for (int j = 0; j < 2; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline CMat4 operator*(const CMat4& a, const CMat4& b) {
    CMat4 c;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const Cx aik = a(i, k);
            for (int j = 0; j < 4; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline CMat4 operator+(const CMat4& a, const CMat4& b) {
    CMat4 c;
    for (int i = 0; i < 16; ++i) c.e[i] = a.e[i] + b.e[i];
    return c;
}

inline CMat4 operator-(const CMat4& a, const CMat4& b) {
    CMat4 c;
    for (int i = 0; i < 16; ++i) c.e[i] = a.e[i] - b.e[i];
    return c;
}

inline CMat4 operator*(Cx s, const CMat4& a) {
    CMat4 c;
    for (int i = 0; i < 16; ++i) c.e[i] = s * a.e[i];
    return c;
}

inline CMat2 operator*(Cx s, const CMat2& a) {
    CMat2 c;
    for (int i = 0; i < 4; ++i) c.e[i] = s * a.e[i];
    return c;
}

inline CMat2 operator+(const CMat2& a, const CMat2& b) {
    CMat2 c;
    for (int i = 0; i < 4; ++i) c.e[i] = a.e[i] + b.e[i];
    return c;
}

inline CMat2 operator-(const CMat2& a, const CMat2& b) {
    CMat2 c;
    for (int i = 0; i < 4; ++i) c.e[i] = a.e[i] - b.e[i];
    return c;
}

inline CMat2 adjoint(const CMat2& a) {
    CMat2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c(i, j) = std::conj(a(j, i));
    return c;
}

inline CMat4 adjoint(const CMat4& a) {
    CMat4 c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c(i, j) = std::conj(a(j, i));
    return c;
}

inline Cx trace(const CMat2& a) { return a(0, 0) + a(1, 1); }
inline Cx trace(const CMat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

inline double max_abs_diff(const CMat4& a, const CMat4& b) {
    double worst = 0.0;
    for (int i = 0; i < 16; ++i) worst = std::max(worst, std::abs(a.e[i] - b.e[i]));
    return worst;
}

inline double max_abs_diff(const CMat2& a, const CMat2& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.e[i] - b.e[i]));
    return worst;
}

// Largest |m(i,j) - conj(m(j,i))| over all entries.
inline double hermiticity_residual(const CMat4& m) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

enum class Subsystem { First, Second };

// Tensor product with |ab> ordering: row index 2*(row of a) + (row of b).
CMat4 kron(const CMat2& a, const CMat2& b);

struct EigenDecomposition {
    std::array<double, 4> eigenvalues; // ascending
    CMat4 eigenvectors;                // columns, same order
};

// Cyclic Jacobi for 4x4 Hermitian matrices. Symmetrizes (m + m^dagger)/2 first;
// rejects inputs whose hermiticity residual exceeds 1e-10.
EigenDecomposition herm_eig(const CMat4& m);

// f applied to the spectrum: V f(diag) V^dagger.
CMat4 matrix_function(const CMat4& m, const std::function<double(double)>& f);

// Trace out the complementary qubit, keeping `keep`.
CMat2 partial_trace(const CMat4& rho, Subsystem keep);

// Eigenvalues of a Hermitian 2x2, ascending (closed form).
std::array<double, 2> herm_eig2_values(const CMat2& m);

} // namespace csd
