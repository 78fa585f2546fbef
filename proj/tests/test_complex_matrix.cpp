#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "bellkit/complex_matrix.hpp"
#include "bellkit/quantum.hpp"
#include "test_support.hpp"

using namespace bellkit;
using bellkit::testing::Rng;

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix sx() { return pauli_matrix(PauliAxis::X); }
ComplexMatrix sy() { return pauli_matrix(PauliAxis::Y); }
ComplexMatrix sz() { return pauli_matrix(PauliAxis::Z); }

}  // namespace

TEST_CASE("[linalg] products of Pauli matrices") {
    CHECK(approx_equal(ComplexMatrix::identity(2) * sx(), sx()));
    // sx * sy = i*sz, frozen from the 2x2 arithmetic
    const ComplexMatrix expected = ComplexMatrix::from_rows({{kI, 0.0}, {0.0, -kI}});
    CHECK(approx_equal(sx() * sy(), expected));
    CHECK(approx_equal(sx() * sx(), ComplexMatrix::identity(2)));
}

TEST_CASE("[linalg] multiplication rejects mismatched dimensions") {
    CHECK_THROWS_AS(ComplexMatrix::identity(2) * ComplexMatrix::identity(4), DimensionError);
    CHECK_THROWS_AS(commutator(sx(), ComplexMatrix::identity(4)), DimensionError);
}

TEST_CASE("[linalg] non-finite entries are rejected") {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ComplexMatrix::from_rows({{inf, 0.0}, {0.0, 0.0}}), Error);
    CHECK_THROWS_AS(ComplexMatrix::from_rows({{0.0, Complex{0.0, nan}}, {0.0, 0.0}}), Error);
}

TEST_CASE("[linalg] adjoint") {
    CHECK(approx_equal(adjoint(sy()), sy()));  // Hermitian
    const ComplexMatrix d = ComplexMatrix::from_rows({{kI, 0.0}, {0.0, 0.0}});
    CHECK(approx_equal(adjoint(d), ComplexMatrix::from_rows({{-kI, 0.0}, {0.0, 0.0}})));
    // (AB)^dagger = B^dagger A^dagger
    CHECK(approx_equal(adjoint(sx() * sy()), sy() * sx()));
}

TEST_CASE("[linalg] adjoint is an involution") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> dim_dist(1, 8);
        const std::size_t n = dim_dist(rng);
        ComplexMatrix m(n);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex{dist(rng), dist(rng)};
        CHECK(approx_equal(adjoint(adjoint(m)), m));
    }
}

TEST_CASE("[linalg] tensor product") {
    CHECK(approx_equal(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4)));

    const ComplexMatrix zz = tensor(sz(), sz());
    CHECK(zz(0, 0) == Complex{1.0, 0.0});
    CHECK(zz(1, 1) == Complex{-1.0, 0.0});
    CHECK(zz(3, 3) == Complex{1.0, 0.0});

    CHECK(std::abs(trace(tensor(sx(), sx()))) < kMatrixTolerance);
}

TEST_CASE("[linalg] tensor dimension law") {
    Rng rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> dim_dist(1, 4);
        const std::size_t na = dim_dist(rng);
        const std::size_t nb = dim_dist(rng);
        const ComplexMatrix a = bellkit::testing::random_hermitian(rng, na);
        const ComplexMatrix b = bellkit::testing::random_hermitian(rng, nb);
        CHECK(tensor(a, b).dim() == na * nb);
    }
}

TEST_CASE("[linalg] trace basics") {
    CHECK(trace(ComplexMatrix::identity(4)) == Complex{4.0, 0.0});
    CHECK(trace(sz()) == Complex{0.0, 0.0});
    CHECK(std::abs(trace(sx() * sy())) < kMatrixTolerance);  // trace of i*sz
}

TEST_CASE("[linalg] trace is linear and cyclic") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const ComplexMatrix a = bellkit::testing::random_hermitian(rng, 4);
        const ComplexMatrix b = bellkit::testing::random_hermitian(rng, 4);
        CHECK(std::abs(trace(a * b) - trace(b * a)) < 1e-12);
        CHECK(std::abs(trace(a + b) - (trace(a) + trace(b))) < 1e-12);
    }
}

TEST_CASE("[linalg] commutator") {
    const ComplexMatrix zero(2);
    CHECK(approx_equal(commutator(sx(), sx()), zero));
    // [sx, sy] = 2i*sz
    CHECK(approx_equal(commutator(sx(), sy()),
                       ComplexMatrix::from_rows({{2.0 * kI, 0.0}, {0.0, -2.0 * kI}})));
    // disjoint subsystems commute
    const ComplexMatrix a = tensor(sx(), ComplexMatrix::identity(2));
    const ComplexMatrix b = tensor(ComplexMatrix::identity(2), sy());
    CHECK(approx_equal(commutator(a, b), ComplexMatrix(4)));
}

TEST_CASE("[linalg] commutator antisymmetry") {
    Rng rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const ComplexMatrix a = bellkit::testing::random_hermitian(rng, 4);
        const ComplexMatrix b = bellkit::testing::random_hermitian(rng, 4);
        CHECK(approx_equal(commutator(a, b), -commutator(b, a)));
    }
}

TEST_CASE("[linalg] eigenvalues of fixed matrices") {
    const auto ev_z = hermitian_eigenvalues(sz());
    REQUIRE(ev_z.size() == 2);
    CHECK(ev_z[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ev_z[1] == doctest::Approx(1.0).epsilon(1e-12));

    const auto ev_i = hermitian_eigenvalues(ComplexMatrix::identity(4));
    for (double ev : ev_i) CHECK(ev == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("[linalg] eigensolver rejects non-Hermitian input") {
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})),
                    NotHermitianError);
}

TEST_CASE("[linalg] Bell operator spectrum against characteristic polynomial oracle") {
    // B = xx - xy + yx + yy
    const ComplexMatrix b = tensor(sx(), sx()) - tensor(sx(), sy()) + tensor(sy(), sx()) +
                            tensor(sy(), sy());

    // Oracle 1: Faddeev-LeVerrier characteristic polynomial. The operator
    // satisfies x^4 - 8 x^2 = 0, so its extreme eigenvalues are +-sqrt(8).
    const std::vector<double> c = bellkit::testing::characteristic_polynomial(b);
    REQUIRE(c.size() == 4);
    CHECK(c[3] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c[2] == doctest::Approx(-8.0).epsilon(1e-12));
    CHECK(std::abs(c[1]) < 1e-10);
    CHECK(std::abs(c[0]) < 1e-10);
    const double oracle_max = std::sqrt(-c[2]);

    // Oracle 2: spectrum of B^2 must be {0, 0, 8, 8}.
    const auto ev_b2 = hermitian_eigenvalues(b * b);
    REQUIRE(ev_b2.size() == 4);
    CHECK(ev_b2[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(ev_b2[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(ev_b2[2] == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(ev_b2[3] == doctest::Approx(8.0).epsilon(1e-10));

    const auto ev = hermitian_eigenvalues(b);
    CHECK(std::abs(ev.back() - oracle_max) < 1e-10);
    CHECK(std::abs(ev.back() - 2.0 * std::numbers::sqrt2) < 1e-10);
    CHECK(std::abs(ev.front() + oracle_max) < 1e-10);
}

TEST_CASE("[linalg] eigensolver round-trip on random Hermitian matrices") {
    Rng rng(15);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 16);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = dim_dist(rng);
        const ComplexMatrix a = bellkit::testing::random_hermitian(rng, n);
        const Eigensystem eig = hermitian_eigensystem(a);

        double sum = 0.0;
        for (double ev : eig.values) sum += ev;
        CHECK(std::abs(sum - trace(a).real()) < 1e-10);
        CHECK(std::abs(trace(a).imag()) < 1e-12);

        CHECK(bellkit::testing::max_reconstruction_residual(a, eig) <=
              1e-10 * frobenius_norm(a));

        for (std::size_t i = 1; i < eig.values.size(); ++i) {
            CHECK(eig.values[i - 1] <= eig.values[i]);
        }
    }
}

TEST_CASE("[linalg] degenerate spectra are reported as repeated entries") {
    const auto ev = hermitian_eigenvalues(tensor(sz(), ComplexMatrix::identity(2)));
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(-1.0));
    CHECK(ev[1] == doctest::Approx(-1.0));
    CHECK(ev[2] == doctest::Approx(1.0));
    CHECK(ev[3] == doctest::Approx(1.0));
}
