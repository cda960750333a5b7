#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sdc/errors.hpp"
#include "sdc/linalg.hpp"
#include "sdc/random.hpp"
#include "test_common.hpp"

using namespace sdc;

namespace {

// Frozen by the diagonalization oracle: Werner spectrum at gamma = 0.747,
// d = 2 is {0.81025, 0.06325 x3}.
constexpr double kWernerEntropy747 = 1.0016948207300613;

ComplexMatrix mes_matrix_d2() {
    std::vector<Complex> psi{{1.0 / std::sqrt(2.0), 0.0}, {0, 0}, {0, 0}, {1.0 / std::sqrt(2.0), 0.0}};
    return ComplexMatrix::outer(psi);
}

DensityOperator werner_d2(double gamma) {
    ComplexMatrix m = mes_matrix_d2();
    m *= Complex(gamma, 0.0);
    ComplexMatrix mixed = ComplexMatrix::identity(4);
    mixed *= Complex((1.0 - gamma) / 4.0, 0.0);
    m += mixed;
    return DensityOperator(std::move(m), {2, 2});
}

DensityOperator maximally_mixed(int d) {
    ComplexMatrix m = ComplexMatrix::identity(d);
    m *= Complex(1.0 / d, 0.0);
    return DensityOperator(std::move(m), {d});
}

}  // namespace

TEST_CASE("hermitian_eig on trivial matrices") {
    const Spectrum id2 = hermitian_eig(ComplexMatrix::identity(2));
    CHECK_NEAR(id2.eigenvalues[0], 1.0, 1e-12);
    CHECK_NEAR(id2.eigenvalues[1], 1.0, 1e-12);

    const Spectrum diag = hermitian_eig(ComplexMatrix::diagonal({{3.0, 0.0}, {1.0, 0.0}}));
    CHECK_NEAR(diag.eigenvalues[0], 3.0, 1e-12);
    CHECK_NEAR(diag.eigenvalues[1], 1.0, 1e-12);
    // Eigenvectors are the standard basis up to phase.
    CHECK_NEAR(std::abs(diag.eigenvectors(0, 0)), 1.0, 1e-12);
    CHECK_NEAR(std::abs(diag.eigenvectors(1, 1)), 1.0, 1e-12);
}

TEST_CASE("hermitian_eig matches the Jacobi oracle on random 4x4 Hermitians") {
    Rng rng(101);
    for (int trial = 0; trial < 12; ++trial) {
        const ComplexMatrix h = random_hermitian(4, rng);
        const Spectrum spec = hermitian_eig(h);
        const std::vector<double> reference = oracles::jacobi_eigenvalues(h);
        REQUIRE(reference.size() == 4);
        for (size_t i = 0; i < 4; ++i) CHECK_NEAR(spec.eigenvalues[i], reference[i], 1e-10);
    }
}

TEST_CASE("hermitian_eig reconstruction and eigenvector unitarity") {
    Rng rng(202);
    for (int d : {2, 3, 5, 8, 16}) {
        const ComplexMatrix h = random_hermitian(d, rng);
        const Spectrum spec = hermitian_eig(h);

        ComplexMatrix reconstructed(d);
        for (int i = 0; i < d; ++i)
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    reconstructed(r, c) += spec.eigenvalues[static_cast<size_t>(i)] *
                                           spec.eigenvectors(r, i) * std::conj(spec.eigenvectors(c, i));
        CHECK(reconstructed.max_abs_diff(h) <= 1e-10);
        CHECK(spec.eigenvectors.is_unitary(1e-10));
        for (size_t i = 1; i < spec.eigenvalues.size(); ++i)
            CHECK(spec.eigenvalues[i - 1] >= spec.eigenvalues[i]);
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = Complex(1.0, 0.0);
    CHECK_THROWS_AS(hermitian_eig(m), NonHermitian);
}

TEST_CASE("von Neumann entropy basics") {
    CHECK_NEAR(von_neumann_entropy(maximally_mixed(4)), 2.0, 1e-12);

    std::vector<Complex> pure{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    CHECK_NEAR(von_neumann_entropy(DensityOperator(ComplexMatrix::outer(pure), {3})), 0.0, 1e-12);

    CHECK_NEAR(von_neumann_entropy(werner_d2(0.747)), kWernerEntropy747, 1e-12);
}

TEST_CASE("entropy stays within [0, log2 d] and is unitarily invariant") {
    Rng rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 4;
        const DensityOperator rho = random_density({d}, rng);
        const double s = von_neumann_entropy(rho);
        CHECK(s >= 0.0);
        CHECK(s <= std::log2(static_cast<double>(d)) + 1e-12);

        const ComplexMatrix u = random_unitary(d, rng);
        const DensityOperator rotated(u * rho.matrix() * u.adjoint(), rho.dims());
        CHECK(std::abs(von_neumann_entropy(rotated) - s) <= 1e-9);
    }
}

TEST_CASE("relative entropy values and Klein inequality") {
    const DensityOperator werner5 = werner_d2(0.5);
    CHECK_NEAR(relative_entropy(werner5, werner5), 0.0, 1e-12);

    std::vector<Complex> zero_ket{{1.0, 0.0}, {0.0, 0.0}};
    const DensityOperator zero(ComplexMatrix::outer(zero_ket), {2});
    CHECK_NEAR(relative_entropy(zero, maximally_mixed(2)), 1.0, 1e-12);

    // D(rho || I/d^2) = log2(d^2) - S(rho).
    const double d_value = relative_entropy(werner5, maximally_mixed(4));
    CHECK_NEAR(d_value, 2.0 - von_neumann_entropy(werner5), 1e-10);

    Rng rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityOperator a = random_density({3}, rng);
        const DensityOperator b = random_density({3}, rng);
        CHECK(relative_entropy(a, b) >= 0.0);
    }
}

TEST_CASE("relative entropy reports support violations instead of infinities") {
    std::vector<Complex> zero_ket{{1.0, 0.0}, {0.0, 0.0}};
    std::vector<Complex> one_ket{{0.0, 0.0}, {1.0, 0.0}};
    const DensityOperator zero(ComplexMatrix::outer(zero_ket), {2});
    const DensityOperator one(ComplexMatrix::outer(one_ket), {2});
    CHECK_THROWS_AS(relative_entropy(zero, one), SupportViolation);
}

TEST_CASE("conditional entropy") {
    const DensityOperator product(tensor(ComplexMatrix::identity(2) * Complex(0.5, 0.0),
                                         ComplexMatrix::identity(2) * Complex(0.5, 0.0)),
                                  {2, 2});
    CHECK_NEAR(conditional_entropy(product, Subsystem::B), 1.0, 1e-12);

    const DensityOperator mes(mes_matrix_d2(), {2, 2});
    CHECK_NEAR(conditional_entropy(mes, Subsystem::B), -1.0, 1e-12);

    CHECK_NEAR(conditional_entropy(werner_d2(0.747), Subsystem::B), kWernerEntropy747 - 1.0, 1e-12);
}

TEST_CASE("tensor product") {
    CHECK(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2))
              .approx_equal(ComplexMatrix::identity(4), 0.0));

    const ComplexMatrix d1 = ComplexMatrix::diagonal({{1, 0}, {2, 0}});
    const ComplexMatrix d2 = ComplexMatrix::diagonal({{3, 0}, {4, 0}});
    CHECK(tensor(d1, d2).approx_equal(ComplexMatrix::diagonal({{3, 0}, {4, 0}, {6, 0}, {8, 0}}), 0.0));

    // (Q (x) I)|phi0> = (I (x) Q^T)|phi0> for any operator Q.
    Rng rng(505);
    std::vector<Complex> phi0{{1.0 / std::sqrt(2.0), 0.0}, {0, 0}, {0, 0}, {1.0 / std::sqrt(2.0), 0.0}};
    ComplexMatrix q(2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) q(r, c) = Complex(rng.gaussian(), rng.gaussian());
    const auto lhs = tensor(q, ComplexMatrix::identity(2)).apply(phi0);
    const auto rhs = tensor(ComplexMatrix::identity(2), q.transpose()).apply(phi0);
    for (size_t i = 0; i < 4; ++i) CHECK(std::abs(lhs[i] - rhs[i]) <= 1e-12);
}

TEST_CASE("partial trace marginals") {
    const DensityOperator mes(mes_matrix_d2(), {2, 2});
    const DensityOperator mes_b = partial_trace(mes, Subsystem::B);
    CHECK(mes_b.matrix().approx_equal(ComplexMatrix::identity(2) * Complex(0.5, 0.0), 1e-12));

    Rng rng(606);
    const DensityOperator rho_a = random_density({2}, rng);
    const DensityOperator rho_b = random_density({3}, rng);
    const DensityOperator product(tensor(rho_a.matrix(), rho_b.matrix()), {2, 3});
    CHECK(partial_trace(product, Subsystem::A).matrix().max_abs_diff(rho_a.matrix()) <= 1e-12);
    CHECK(partial_trace(product, Subsystem::B).matrix().max_abs_diff(rho_b.matrix()) <= 1e-12);
}

TEST_CASE("partial trace agrees with the direct-summation oracle") {
    Rng rng(707);
    for (int trial = 0; trial < 6; ++trial) {
        const int da = 2 + trial % 3, db = 2 + (trial + 1) % 3;
        const DensityOperator rho = random_density({da, db}, rng);
        const DensityOperator kept_a = partial_trace(rho, Subsystem::A);
        const DensityOperator kept_b = partial_trace(rho, Subsystem::B);
        CHECK(kept_a.matrix().max_abs_diff(
                  oracles::partial_trace_direct(rho.matrix(), da, db, true)) <= 1e-12);
        CHECK(kept_b.matrix().max_abs_diff(
                  oracles::partial_trace_direct(rho.matrix(), da, db, false)) <= 1e-12);
        CHECK(std::abs(kept_a.matrix().trace() - Complex(1.0, 0.0)) <= 1e-12);
    }
}

TEST_CASE("density operator validation") {
    ComplexMatrix not_hermitian(2);
    not_hermitian(0, 0) = 0.5;
    not_hermitian(1, 1) = 0.5;
    not_hermitian(0, 1) = Complex(0.3, 0.0);
    CHECK_THROWS_AS(DensityOperator(not_hermitian, {2}), InvalidState);

    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::identity(2), {2}), InvalidState);  // trace 2

    // Hermitian, unit trace, but indefinite.
    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::diagonal({{1.5, 0.0}, {-0.5, 0.0}}), {2}),
                    InvalidState);

    // dims metadata must factor the matrix dimension.
    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::diagonal({{0.5, 0.0}, {0.5, 0.0}}), {3}),
                    InvalidState);
}

TEST_CASE("shannon and binary entropy") {
    CHECK_NEAR(shannon_entropy({0.25, 0.25, 0.25, 0.25}), 2.0, 1e-12);
    CHECK_NEAR(shannon_entropy({1.0, 0.0}), 0.0, 1e-15);
    CHECK_NEAR(binary_entropy(0.75), 0.8112781244591328, 1e-12);
}
