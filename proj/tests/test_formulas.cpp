#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sdc/errors.hpp"
#include "sdc/formulas.hpp"
#include "sdc/random.hpp"
#include "test_common.hpp"

using namespace sdc;

namespace {

constexpr double kCapRotationPi6 = 1.811278124459133;   // 1 + Hbin(3/4)
constexpr double kAdvRotationPi6 = 0.8112781244591328;  // Hbin(3/4)
constexpr double kLog2FourThirds = 0.41503749927884376;

// 2x2 Fourier block on {0,1} plus a fixed point at |2>: column maxima differ.
ImperfectHadamard block_hadamard_d3() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix h(3);
    h(0, 0) = s;
    h(0, 1) = s;
    h(1, 0) = s;
    h(1, 1) = -s;
    h(2, 2) = 1.0;
    return ImperfectHadamard(h);
}

double component_sum_error(const BoundReport& r) {
    double sum = 0.0;
    for (const auto& [name, term] : r.components) sum += term;
    return std::abs(sum - r.value);
}

}  // namespace

TEST_CASE("capacity_mes_noiseless") {
    for (int d : {2, 3, 4}) {
        CHECK_NEAR(capacity_mes_noiseless(overlap_matrix(fourier_hadamard(d))),
                   2.0 * std::log2(d), 1e-12);
        CHECK_NEAR(capacity_mes_noiseless(overlap_matrix(identity_hadamard(d))), std::log2(d),
                   1e-12);
    }
    const OverlapMatrix rot = overlap_matrix(rotation_hadamard(std::numbers::pi / 6));
    CHECK_NEAR(capacity_mes_noiseless(rot), kCapRotationPi6, 1e-12);
}

TEST_CASE("quantum_advantage_mes decomposition") {
    Rng rng(3);
    for (int d : {2, 3, 4}) {
        CHECK_NEAR(quantum_advantage_mes(overlap_matrix(fourier_hadamard(d))), std::log2(d), 1e-12);
        CHECK_NEAR(quantum_advantage_mes(overlap_matrix(identity_hadamard(d))), 0.0, 1e-12);
        // capacity = log d + mean row entropy, for any Hadamard.
        const OverlapMatrix c = overlap_matrix(ImperfectHadamard{random_unitary(d, rng)});
        CHECK_NEAR(capacity_mes_noiseless(c), std::log2(d) + quantum_advantage_mes(c), 1e-12);
    }
    CHECK_NEAR(quantum_advantage_mes(overlap_matrix(rotation_hadamard(std::numbers::pi / 6))),
               kAdvRotationPi6, 1e-12);
}

TEST_CASE("classify_hadamard and the capacity biconditional") {
    Rng rng(7);
    CHECK(classify_hadamard(fourier_hadamard(3)) == HadamardClass::Full);
    CHECK(classify_hadamard(random_permutation_hadamard(4, rng)) == HadamardClass::Zero);
    CHECK(classify_hadamard(rotation_hadamard(std::numbers::pi / 6)) == HadamardClass::Partial);

    // Row phases keep a Hadamard matrix fully complementary.
    ComplexMatrix phased = fourier_hadamard(3).matrix();
    for (int k = 0; k < 3; ++k) {
        const Complex ph = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        for (int l = 0; l < 3; ++l) phased(k, l) *= ph;
    }
    CHECK(classify_hadamard(ImperfectHadamard{phased}) == HadamardClass::Full);

    for (int d : {2, 3}) {
        std::vector<ImperfectHadamard> family{fourier_hadamard(d), identity_hadamard(d),
                                              random_permutation_hadamard(d, rng),
                                              ImperfectHadamard{random_unitary(d, rng)}};
        if (d == 2) family.push_back(rotation_hadamard(0.4));
        for (const auto& h : family) {
            const double cap = capacity_mes_noiseless(overlap_matrix(h));
            const HadamardClass cls = classify_hadamard(h);
            CHECK((cls == HadamardClass::Full) == (std::abs(cap - 2.0 * std::log2(d)) <= 1e-8));
            CHECK((cls == HadamardClass::Zero) == (std::abs(cap - std::log2(d)) <= 1e-8));
        }
    }
}

TEST_CASE("werner_entropy analytic path matches diagonalization") {
    CHECK_NEAR(werner_entropy(0.747, 2), 1.0016948207300613, 1e-12);
    for (int d : {2, 3}) {
        for (double alpha : {0.0, 0.3, 0.7, 1.0})
            for (double beta : {0.4, 1.0}) {
                const DensityOperator hat = apply_to_A(depolarising_channel(beta, d),
                                                       werner_state(alpha, standard_mes(d)).rho());
                CHECK_NEAR(werner_entropy(alpha * beta, d), von_neumann_entropy(hat), 1e-10);
            }
    }
}

TEST_CASE("capacity_werner_depolarising") {
    const OverlapMatrix fourier2 = overlap_matrix(fourier_hadamard(2));
    CHECK_NEAR(capacity_werner_depolarising(1.0, 1.0, fourier2), 2.0, 1e-12);

    // Threshold noise 0.253: capacity grazes the classical bound.
    CHECK_NEAR(capacity_werner_depolarising(0.747, 1.0, fourier2), 0.9983051792699387, 1e-12);
    CHECK(std::abs(capacity_werner_depolarising(0.747, 1.0, fourier2) - 1.0) <= 0.01);

    Rng rng(11);
    const OverlapMatrix random_c = overlap_matrix(ImperfectHadamard{random_unitary(3, rng)});
    CHECK_NEAR(capacity_werner_depolarising(0.0, 0.7, random_c), 0.0, 1e-12);
    // alpha*beta = 1 reduces to the MES noiseless formula.
    CHECK_NEAR(capacity_werner_depolarising(1.0, 1.0, random_c), capacity_mes_noiseless(random_c),
               1e-12);

    CHECK_THROWS_AS(capacity_werner_depolarising(1.3, 1.0, fourier2), RangeError);
}

TEST_CASE("capacity_werner_depolarising is nonincreasing in c for d = 2") {
    for (double noise : {0.0, 0.1, 0.253, 0.4}) {
        double previous = 3.0;
        for (int i = 0; i < 50; ++i) {
            const double c_val = 0.5 + 0.5 * i / 49.0;
            const OverlapMatrix c =
                overlap_matrix(rotation_hadamard(std::acos(std::sqrt(c_val))));
            const double cap = capacity_werner_depolarising(1.0, 1.0 - noise, c);
            CHECK(cap <= previous + 1e-12);
            previous = cap;
        }
    }
}

TEST_CASE("capacity_overall_noiseless") {
    CHECK_NEAR(capacity_overall_noiseless(standard_mes(2)), 2.0, 1e-12);

    ComplexMatrix mixed = ComplexMatrix::identity(4);
    mixed *= Complex(0.25, 0.0);
    CHECK_NEAR(capacity_overall_noiseless(PresharedState(DensityOperator(mixed, {2, 2}))), 0.0,
               1e-12);

    CHECK_NEAR(capacity_overall_noiseless(werner_state(0.747, standard_mes(2))),
               0.9983051792699387, 1e-12);
}

TEST_CASE("lower_bound_noiseless") {
    for (int d : {2, 3}) {
        const BoundReport tight = lower_bound_noiseless(1.0 / d, standard_mes(d));
        CHECK_NEAR(tight.value, 2.0 * std::log2(d), 1e-9);
        CHECK(component_sum_error(tight) <= 1e-12);
    }
    const BoundReport loose = lower_bound_noiseless(1.0, standard_mes(2));
    CHECK_NEAR(loose.value, 1.0, 1e-9);

    const PresharedState werner9 = werner_state(0.9, standard_mes(2));
    const BoundReport partial = lower_bound_noiseless(0.75, werner9);
    const double expected = kLog2FourThirds - conditional_entropy(werner9.rho(), Subsystem::B);
    CHECK_NEAR(partial.value, expected, 1e-12);
    CHECK_NEAR(partial.components.at("log_inv_c"), kLog2FourThirds, 1e-12);

    CHECK_THROWS_AS(lower_bound_noiseless(0.2, standard_mes(2)), RangeError);
    CHECK_THROWS_AS(lower_bound_noiseless(1.2, standard_mes(2)), RangeError);
}

TEST_CASE("lower_bound_depolarising") {
    const PresharedState mes = standard_mes(2);

    // beta = 1 reduces exactly to the noiseless bound.
    const BoundReport noiseless = lower_bound_noiseless(0.6, mes);
    const BoundReport degenerate = lower_bound_depolarising(0.6, mes, 1.0);
    CHECK(std::abs(noiseless.value - degenerate.value) <= 1e-12);

    // Threshold consistency: overall capacity about 1 bit at beta = 0.747.
    CHECK_NEAR(capacity_overall_depolarising(mes, 0.747), 1.0, 0.01);
    const BoundReport threshold = lower_bound_depolarising(0.5, mes, 0.747);
    CHECK_NEAR(threshold.value, 0.9983051792699387, 1e-10);

    // Generic point: value assembles from the stated components.
    const BoundReport generic = lower_bound_depolarising(0.6, mes, 0.9);
    const DensityOperator hat = apply_to_A(depolarising_channel(0.9, 2), mes.rho());
    CHECK_NEAR(generic.value, std::log2(1.0 / 0.6) - conditional_entropy(hat, Subsystem::B), 1e-12);
    CHECK(component_sum_error(generic) <= 1e-12);
    CHECK_THROWS_AS(lower_bound_depolarising(0.6, mes, 1.4), RangeError);
}

TEST_CASE("lower_bound_werner_any_channel") {
    // Identity channel at alpha = 1: the tight MES bound again.
    const BoundReport tight = lower_bound_werner_any_channel(0.5, 1.0, KrausChannel::identity(2));
    CHECK_NEAR(tight.value, 2.0, 1e-9);

    // For Werner + depolarising, S(B|A) = S(A|B); matches prop4 exactly.
    const PresharedState werner = werner_state(0.8, standard_mes(2));
    const BoundReport via_ba =
        lower_bound_werner_any_channel(0.7, 0.8, depolarising_channel(0.9, 2));
    const BoundReport via_ab = lower_bound_depolarising(0.7, werner, 0.9);
    CHECK(std::abs(via_ba.value - via_ab.value) <= 1e-12);

    // Arbitrary unital channel: stays below the optimizer.
    Rng rng(13);
    const KrausChannel unital = random_unital_channel(2, 2, rng);
    const ImperfectHadamard h = fourier_hadamard(2);
    const BoundReport bound = lower_bound_werner_any_channel(0.5, 0.8, unital);
    const double value = maximize_chi(pauli_product_set(h), werner, unital).value;
    CHECK(bound.value <= value + 1e-6);
    CHECK(component_sum_error(bound) <= 1e-12);
    CHECK(bound.components.count("neg_cond_entropy_BA") == 1);
}

TEST_CASE("general_lower_bound components and reductions") {
    Rng rng(17);
    for (int d : {2, 3}) {
        const ImperfectHadamard h{random_unitary(d, rng)};
        const UnitarySet set = pauli_product_set(h);
        const double c_val = complementarity_c(overlap_matrix(h));
        const PresharedState rho(random_density({d, d}, rng));

        // Unital channel: divergence and mixture-entropy components cancel.
        const KrausChannel unital = random_unital_channel(d, 2, rng);
        const BoundReport ub = general_lower_bound(
            c_val, rho, unital,
            encoded_ensemble(set, rho, unital, ProbabilityVector::uniform(set.size())));
        CHECK(std::abs(ub.components.at("relative_entropy_term") +
                       ub.components.at("entropy_avg_A")) <= 1e-9);
        CHECK(component_sum_error(ub) <= 1e-12);

        // Maximally mixed marginals: divergence term equals -log2 d.
        const KrausChannel generic = random_channel(d, 2, rng);
        const PresharedState werner = werner_state(0.6, standard_mes(d));
        const BoundReport wb = general_lower_bound(
            c_val, werner, generic,
            encoded_ensemble(set, werner, generic, ProbabilityVector::uniform(set.size())));
        CHECK(std::abs(wb.components.at("relative_entropy_term") + std::log2(d)) <= 1e-9);

        // Full complementarity: bound collapses to the three-term expression.
        const UnitarySet weyl = pauli_product_set(fourier_hadamard(d));
        const Ensemble wens =
            encoded_ensemble(weyl, rho, generic, ProbabilityVector::uniform(weyl.size()));
        const BoundReport fb = general_lower_bound(1.0 / d, rho, generic, wens);
        double avg_entropy = 0.0;
        for (const auto& [p, member] : wens.members()) avg_entropy += p * von_neumann_entropy(member);
        ComplexMatrix chan_mixed = generic.apply_raw(ComplexMatrix::identity(d));
        chan_mixed *= Complex(1.0 / d, 0.0);
        const double expected = von_neumann_entropy(partial_trace(rho.rho(), Subsystem::B)) +
                                von_neumann_entropy(DensityOperator(chan_mixed, {d})) - avg_entropy;
        CHECK_NEAR(fb.value, expected, 1e-9);
    }

    // Uniform-probability precondition is enforced.
    const UnitarySet set = pauli_product_set(fourier_hadamard(2));
    const PresharedState mes = standard_mes(2);
    const KrausChannel identity = KrausChannel::identity(2);
    const Ensemble skewed =
        encoded_ensemble(set, mes, identity, ProbabilityVector({0.4, 0.2, 0.2, 0.2}));
    CHECK_THROWS_AS(general_lower_bound(0.5, mes, identity, skewed), InvalidProbability);
}

TEST_CASE("strong_lower_bound") {
    // Fourier overlaps: f = log d, reducing to the plain bound.
    for (int d : {2, 3}) {
        const PresharedState mes = standard_mes(d);
        const OverlapMatrix c = overlap_matrix(fourier_hadamard(d));
        const BoundReport strong = strong_lower_bound(mes, c);
        const BoundReport plain = lower_bound_noiseless(1.0 / d, mes);
        CHECK(std::abs(strong.value - plain.value) <= 1e-12);
    }

    // Symmetric qubit case: f equals log(1/c) when both column maxima agree.
    const OverlapMatrix rot = overlap_matrix(rotation_hadamard(std::numbers::pi / 6));
    const BoundReport rot_bound = strong_lower_bound(standard_mes(2), rot);
    CHECK_NEAR(rot_bound.components.at("f_rho_a"), kLog2FourThirds, 1e-12);

    // Block-structured d = 3 overlaps: the average beats the minimum strictly.
    const PresharedState mes3 = standard_mes(3);
    const OverlapMatrix block = overlap_matrix(block_hadamard_d3());
    const BoundReport strong3 = strong_lower_bound(mes3, block);
    CHECK_NEAR(strong3.components.at("f_rho_a"), 2.0 / 3, 1e-12);
    const BoundReport plain3 = lower_bound_noiseless(complementarity_c(block), mes3);
    CHECK_NEAR(plain3.components.at("log_inv_c"), 0.0, 1e-12);
    CHECK(strong3.value > plain3.value + 0.6);

    // Dominance over the plain bound for random states and Hadamards.
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + trial % 2;
        const PresharedState rho(random_density({d, d}, rng));
        const OverlapMatrix c = overlap_matrix(ImperfectHadamard{random_unitary(d, rng)});
        CHECK(strong_lower_bound(rho, c).value >=
              lower_bound_noiseless(complementarity_c(c), rho).value - 1e-12);
    }
}

TEST_CASE("every applicable bound stays below the optimizer") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + trial % 2;
        const ImperfectHadamard h{random_unitary(d, rng)};
        const UnitarySet set = pauli_product_set(h);
        const OverlapMatrix c = overlap_matrix(h);
        const double c_val = complementarity_c(c);
        const PresharedState rho(random_density({d, d}, rng));
        const KrausChannel identity = KrausChannel::identity(d);
        const double value = maximize_chi(set, rho, identity).value;

        CHECK(lower_bound_noiseless(c_val, rho).value <= value + 1e-6);
        CHECK(strong_lower_bound(rho, c).value <= value + 1e-6);
        const Ensemble uniform =
            encoded_ensemble(set, rho, identity, ProbabilityVector::uniform(set.size()));
        CHECK(general_lower_bound(c_val, rho, identity, uniform).value <= value + 1e-6);
    }
}
