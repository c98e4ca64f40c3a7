// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "csd/errors.hpp"
#include "csd/localops.hpp"
#include "csd/models.hpp"
#include "csd/states.hpp"

#include "helpers.hpp"

using namespace csd;
using namespace csdtest;

TEST_CASE("hadamard squares to the identity") {
    const CMat2 h = hadamard2();
    CHECK(max_abs_diff(h * h, CMat2::identity()) < 1e-15);
    CHECK(h(0, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(h(1, 1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("two-qubit rotation has the half-magnitude sign pattern") {
    const CMat4 r = rotation_r();
    const double sign[4][4] = {
        {1, 1, 1, 1},
        {1, -1, 1, -1},
        {1, 1, -1, -1},
        {1, -1, -1, 1},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(r(i, j).real() == doctest::Approx(0.5 * sign[i][j]).epsilon(1e-15));
    CHECK(max_abs_diff(r * r, CMat4::identity()) < 1e-15);
    CHECK(max_abs_diff(r, adjoint(r)) < 1e-15);
}

TEST_CASE("phase gate endpoints") {
    CHECK(max_abs_diff(phase_gate(0.0), CMat2::identity()) == 0.0);
    const CMat2 u = phase_gate(std::acos(-1.0));
    CHECK(std::abs(u(0, 0) - Cx(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(u(1, 1) - Cx(0.0, 1.0)) < 1e-15);
}

TEST_CASE("parameter map agrees with explicit conjugation") {
    std::mt19937_64 rng(12345);
    const CMat4 r = rotation_r();
    for (int trial = 0; trial < 500; ++trial) {
        const DensityMatrix rho = random_cs_state(rng);
        const CMat4 direct = r * rho.matrix() * r;
        const CMat4 mapped = x_matrix(cs_to_x_params(extract_cs(rho)));
        REQUIRE(max_abs_diff(direct, mapped) < 1e-13);
    }
}

TEST_CASE("inverse parameter map agrees with explicit conjugation") {
    std::mt19937_64 rng(2024);
    const CMat4 r = rotation_r();
    for (int trial = 0; trial < 500; ++trial) {
        const DensityMatrix rho = random_x_state(rng);
        // A generic X state maps to a centrosymmetric one and back.
        const CMat4 direct = r * rho.matrix() * r;
        const CMat4 mapped = cs_matrix(x_to_cs_params(extract_x(rho)));
        REQUIRE(max_abs_diff(direct, mapped) < 1e-13);
    }
}

TEST_CASE("parameter maps invert each other") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const DensityMatrix rho = random_cs_state(rng);
        const CSParams p = extract_cs(rho);
        const CSParams back = x_to_cs_params(cs_to_x_params(p));
        CHECK(std::abs(back.p1 - p.p1) < 1e-14);
        CHECK(std::abs(back.p2 - p.p2) < 1e-14);
        CHECK(std::abs(back.p3 - p.p3) < 1e-14);
        CHECK(std::abs(back.p4 - p.p4) < 1e-14);
        CHECK(std::abs(back.p5 - p.p5) < 1e-14);
        CHECK(std::abs(back.p6 - p.p6) < 1e-14);
        CHECK(std::abs(back.p7 - p.p7) < 1e-14);
    }
}

TEST_CASE("local conjugation preserves the spectrum") {
    std::mt19937_64 rng(8);
    const DensityMatrix rho = random_cs_state(rng);
    const DensityMatrix rotated = conjugate_local(rho, hadamard2(), hadamard2());
    const auto before = herm_eig(rho.matrix()).eigenvalues;
    const auto after = herm_eig(rotated.matrix()).eigenvalues;
    CHECK(max_abs_diff4(before, after) < 1e-12);

    const DensityMatrix back = conjugate_local(rotated, hadamard2(), hadamard2());
    CHECK(max_abs_diff(back.matrix(), rho.matrix()) < 1e-13);
}

TEST_CASE("local conjugation rejects non-unitary factors") {
    std::mt19937_64 rng(13);
    const DensityMatrix rho = random_cs_state(rng);
    const CMat2 scaled = Cx(2.0) * hadamard2();
    CHECK_THROWS_AS(conjugate_local(rho, scaled, hadamard2()), NotUnitary);
    CHECK_THROWS_AS(conjugate_local(rho, hadamard2(), scaled), NotUnitary);
}

TEST_CASE("bloch decomposition inverts and normalizes") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_cs_state(rng);
        const BlochCoefficients c = bloch_decompose(rho);
        CHECK(c.c0 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(max_abs_diff(bloch_reconstruct(c), rho.matrix()) < 1e-13);
    }
}

TEST_CASE("bloch coefficients of a centrosymmetric state") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_cs_state(rng);
        const CSParams p = extract_cs(rho);
        const BlochCoefficients c = bloch_decompose(rho);

        CHECK(c.a[0] == doctest::Approx(4.0 * p.p4).epsilon(1e-11).scale(1.0));
        CHECK(std::abs(c.a[1]) < 1e-12);
        CHECK(std::abs(c.a[2]) < 1e-12);
        CHECK(c.b[0] == doctest::Approx(4.0 * p.p2).epsilon(1e-11).scale(1.0));
        CHECK(std::abs(c.b[1]) < 1e-12);
        CHECK(std::abs(c.b[2]) < 1e-12);

        CHECK(c.t[0][0] == doctest::Approx(2.0 * (p.p6 + p.p7)).epsilon(1e-11).scale(1.0));
        CHECK(c.t[1][1] == doctest::Approx(2.0 * (p.p7 - p.p6)).epsilon(1e-11).scale(1.0));
        CHECK(c.t[2][2] == doctest::Approx(4.0 * p.p1 - 1.0).epsilon(1e-11).scale(1.0));
        CHECK(c.t[2][1] == doctest::Approx(-4.0 * p.p3).epsilon(1e-11).scale(1.0));
        CHECK(c.t[1][2] == doctest::Approx(-4.0 * p.p5).epsilon(1e-11).scale(1.0));
        CHECK(std::abs(c.t[0][1]) < 1e-12);
        CHECK(std::abs(c.t[0][2]) < 1e-12);
        CHECK(std::abs(c.t[1][0]) < 1e-12);
        CHECK(std::abs(c.t[2][0]) < 1e-12);
    }
}

TEST_CASE("hadamard conjugation swaps the x and z axes") {
    std::mt19937_64 rng(23);
    const DensityMatrix rho = random_cs_state(rng);
    const BlochCoefficients before = bloch_decompose(rho);
    const BlochCoefficients after = bloch_decompose(conjugate_local(rho, hadamard2(), hadamard2()));
    // H sigma_x H = sigma_z, H sigma_y H = -sigma_y, H sigma_z H = sigma_x.
    CHECK(after.a[0] == doctest::Approx(before.a[2]).epsilon(1e-11).scale(1.0));
    CHECK(after.a[1] == doctest::Approx(-before.a[1]).epsilon(1e-11).scale(1.0));
    CHECK(after.a[2] == doctest::Approx(before.a[0]).epsilon(1e-11).scale(1.0));
    CHECK(after.t[0][0] == doctest::Approx(before.t[2][2]).epsilon(1e-11).scale(1.0));
    CHECK(after.t[1][1] == doctest::Approx(before.t[1][1]).epsilon(1e-11).scale(1.0));
    CHECK(after.t[2][2] == doctest::Approx(before.t[0][0]).epsilon(1e-11).scale(1.0));
    CHECK(after.t[0][1] == doctest::Approx(-before.t[2][1]).epsilon(1e-11).scale(1.0));
    CHECK(after.t[1][0] == doctest::Approx(-before.t[1][2]).epsilon(1e-11).scale(1.0));
}

TEST_CASE("rotated transport state carries the cross correlations") {
    const NanoporeCorrelations c = nanopore_correlations(NanoporeSettings{20, 1.0, 0.3, 1.0});
    const DensityMatrix rho = nanopore_state(c);
    const DensityMatrix rotated = conjugate_local(rho, hadamard2(), hadamard2());
    const BlochCoefficients b = bloch_decompose(rotated);

    CHECK(b.a[2] == doctest::Approx(2.0 * c.p).epsilon(1e-12));
    CHECK(b.b[2] == doctest::Approx(2.0 * c.p).epsilon(1e-12));
    CHECK(b.t[2][2] == doctest::Approx(4.0 * c.q).epsilon(1e-12));
    CHECK(b.t[1][1] == doctest::Approx(4.0 * c.r).epsilon(1e-12));
    CHECK(b.t[0][1] == doctest::Approx(-4.0 * c.u).epsilon(1e-12));
    CHECK(b.t[1][0] == doctest::Approx(-4.0 * c.u).epsilon(1e-12));
}

TEST_CASE("phase reduction leaves real parameters alone") {
    const XParams q{0.3, 0.25, 0.2, 0.04, 0.0, -0.03, 0.0};
    const PhaseReduction red = phase_reduce_x(q);
    CHECK(red.phi_a == 0.0);
    CHECK(red.phi_b == 0.0);
    CHECK(red.real_x.q4 == q.q4);
    CHECK(red.real_x.q6 == q.q6);
    CHECK(red.real_x.q5 == 0.0);
    CHECK(red.real_x.q7 == 0.0);
}

TEST_CASE("phase reduction ignores negligible imaginary residue") {
    const XParams q{0.3, 0.25, 0.2, 0.04, 1e-17, 0.03, -1e-17};
    const PhaseReduction red = phase_reduce_x(q);
    CHECK(red.phi_a == 0.0);
    CHECK(red.phi_b == 0.0);
    CHECK(red.real_x.q4 == q.q4);
    CHECK(red.real_x.q6 == q.q6);
}

TEST_CASE("phase reduction angle matches the transport convention") {
    const NanoporeCorrelations c = nanopore_correlations(NanoporeSettings{20, 1.0, 0.3, 1.0});
    const DensityMatrix rho = nanopore_state(c);
    const XParams xq = extract_x(conjugate_local(rho, hadamard2(), hadamard2()));
    const PhaseReduction red = phase_reduce_x(xq);

    const double phi = -0.5 * std::atan2(2.0 * c.u, c.r);
    CHECK(red.phi_a == doctest::Approx(phi).epsilon(1e-12));
    CHECK(red.phi_a == doctest::Approx(red.phi_b).epsilon(1e-14));
    CHECK(red.real_x.q4 ==
          doctest::Approx(-std::sqrt(c.r * c.r + 4.0 * c.u * c.u)).epsilon(1e-12));
    CHECK(red.real_x.q6 == doctest::Approx(c.r).epsilon(1e-12));
}

TEST_CASE("phase reduction preserves off-diagonal magnitudes") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const XParams q = extract_x(random_x_state(rng));
        const PhaseReduction red = phase_reduce_x(q);
        CHECK(red.real_x.q5 == 0.0);
        CHECK(red.real_x.q7 == 0.0);
        CHECK(std::abs(std::abs(red.real_x.q4) - std::hypot(q.q4, q.q5)) < 1e-13);
        CHECK(std::abs(std::abs(red.real_x.q6) - std::hypot(q.q6, q.q7)) < 1e-13);
    }
}

TEST_CASE("phase reduction is realized by the phase gates") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        const DensityMatrix rho = random_x_state(rng);
        const PhaseReduction red = phase_reduce_x(extract_x(rho));
        const DensityMatrix rotated =
            conjugate_local(rho, phase_gate(red.phi_a), phase_gate(red.phi_b));
        REQUIRE(max_abs_diff(rotated.matrix(), x_matrix(red.real_x)) < 1e-13);
    }
}
