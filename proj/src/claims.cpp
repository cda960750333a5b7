#include "sdc/claims.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sdc/errors.hpp"
#include "sdc/formulas.hpp"
#include "sdc/random.hpp"

namespace sdc {

namespace {

// Distinct stream per (claim, dim) so adding samples to one suite never
// shifts another suite's draws.
Rng claim_rng(const ClaimConfig& cfg, uint64_t claim_id, uint64_t lane) {
    return Rng(cfg.seed ^ (claim_id * 0x9e3779b97f4a7c15ULL) ^ (lane << 32));
}

std::string describe(const ClaimConfig& cfg, int per_dim, const char* what) {
    std::ostringstream os;
    os << what << "; dims";
    for (int d : cfg.dims) os << ' ' << d;
    os << "; " << per_dim << " per dim; seed " << cfg.seed;
    return os.str();
}

ClaimResult finish(std::string name, double max_dev, double tolerance, std::string detail) {
    return ClaimResult{std::move(name), max_dev <= tolerance, max_dev, tolerance, std::move(detail)};
}

double optimizer_value(const UnitarySet& set, const PresharedState& rho, const KrausChannel& e) {
    return maximize_chi(set, rho, e).value;
}

// --- individual claims ------------------------------------------------------

// Commuting encodings never beat the classical log d rate, for any state and
// channel.
ClaimResult claim_prop1(const ClaimConfig& cfg) {
    const int n_dims = std::max(static_cast<int>(cfg.dims.size()), 1);
    const int per_dim = cfg.samples > 0 ? cfg.samples : 50 / n_dims;
    double max_dev = 0.0;
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        Rng rng = claim_rng(cfg, 1, di);
        for (int s = 0; s < per_dim; ++s) {
            const UnitarySet set = random_commuting_set(d, d * d, rng);
            const PresharedState rho(random_density({d, d}, rng));
            const KrausChannel e = random_channel(d, 2, rng);
            const double value = optimizer_value(set, rho, e);
            max_dev = std::max(max_dev, value - classical_strategy_bound(d));
        }
    }
    return finish("prop1", max_dev, 1e-6,
                  describe(cfg, per_dim, "capacity minus log2(d) over commuting sets"));
}

// MES + noiseless capacity equals the overlap-matrix entropy for every
// Hadamard.
ClaimResult claim_thm1(const ClaimConfig& cfg) {
    const int per_dim = cfg.samples > 0 ? cfg.samples : 20;
    double max_dev = 0.0;
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        const PresharedState mes = standard_mes(d);
        const KrausChannel identity = KrausChannel::identity(d);
        Rng rng = claim_rng(cfg, 2, di);
        for (int s = 0; s < per_dim; ++s) {
            const ImperfectHadamard h{random_unitary(d, rng)};
            const double numeric = optimizer_value(pauli_product_set(h), mes, identity);
            const double closed = capacity_mes_noiseless(overlap_matrix(h));
            max_dev = std::max(max_dev, std::abs(numeric - closed));
        }
    }
    return finish("thm1", max_dev, 1e-5,
                  describe(cfg, per_dim, "|optimizer - overlap-entropy| on random Hadamards"));
}

// Capacity extremes: 2 log d for Fourier, log d for permutation-with-phases.
ClaimResult claim_prop2(const ClaimConfig& cfg) {
    double max_dev = 0.0;
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        const PresharedState mes = standard_mes(d);
        const KrausChannel identity = KrausChannel::identity(d);
        Rng rng = claim_rng(cfg, 3, di);

        const double full = optimizer_value(pauli_product_set(fourier_hadamard(d)), mes, identity);
        max_dev = std::max(max_dev, std::abs(full - 2.0 * classical_strategy_bound(d)));

        const ImperfectHadamard perm = random_permutation_hadamard(d, rng);
        const double zero = optimizer_value(pauli_product_set(perm), mes, identity);
        max_dev = std::max(max_dev, std::abs(zero - classical_strategy_bound(d)));
    }
    return finish("prop2", max_dev, 1e-8,
                  describe(cfg, 2, "|capacity - extreme| for Fourier and permutation Hadamards"));
}

// Uniform probabilities are optimal for Werner + depolarising resources.
ClaimResult claim_lemma1(const ClaimConfig& cfg) {
    const double grid[] = {0.3, 0.7, 1.0};
    double max_dev = 0.0;
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        Rng rng = claim_rng(cfg, 4, di);
        for (double alpha : grid)
            for (double beta : grid) {
                const ImperfectHadamard h{random_unitary(d, rng)};
                const UnitarySet set = pauli_product_set(h);
                const PresharedState rho = werner_state(alpha, standard_mes(d));
                const KrausChannel e = depolarising_channel(beta, d);
                const double best = optimizer_value(set, rho, e);
                const double uniform =
                    holevo_chi(encoded_ensemble(set, rho, e, ProbabilityVector::uniform(set.size())));
                max_dev = std::max(max_dev, std::abs(best - uniform));
            }
    }
    return finish("lemma1", max_dev, 1e-6,
                  describe(cfg, 9, "|optimizer - uniform chi| on an alpha-beta grid"));
}

// Werner + depolarising capacity matches the mixed overlap-entropy formula.
ClaimResult claim_thm2(const ClaimConfig& cfg) {
    const double grid[] = {0.3, 0.7, 1.0};
    double max_dev = 0.0;
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        Rng rng = claim_rng(cfg, 5, di);
        for (double alpha : grid)
            for (double beta : grid) {
                const ImperfectHadamard h{random_unitary(d, rng)};
                const double numeric = optimizer_value(
                    pauli_product_set(h), werner_state(alpha, standard_mes(d)),
                    depolarising_channel(beta, d));
                const double closed = capacity_werner_depolarising(alpha, beta, overlap_matrix(h));
                max_dev = std::max(max_dev, std::abs(numeric - closed));
            }
    }
    return finish("thm2", max_dev, 1e-5,
                  describe(cfg, 9, "|optimizer - closed form| on an alpha-beta grid"));
}

// Noiseless: Fourier encodings reach log d - S(A|B) for any state, and the
// log(1/c) - S(A|B) bound never exceeds the optimizer.
ClaimResult claim_prop3(const ClaimConfig& cfg) {
    const int per_dim = cfg.samples > 0 ? cfg.samples : 8;
    double max_dev = 0.0;
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        const KrausChannel identity = KrausChannel::identity(d);
        Rng rng = claim_rng(cfg, 6, di);
        for (int s = 0; s < per_dim; ++s) {
            const PresharedState rho(random_density({d, d}, rng));
            const double overall = capacity_overall_noiseless(rho);
            const double at_fourier =
                optimizer_value(pauli_product_set(fourier_hadamard(d)), rho, identity);
            max_dev = std::max(max_dev, std::abs(at_fourier - overall));

            const ImperfectHadamard h{random_unitary(d, rng)};
            const double c_val = complementarity_c(overlap_matrix(h));
            const double value = optimizer_value(pauli_product_set(h), rho, identity);
            max_dev = std::max(max_dev, lower_bound_noiseless(c_val, rho).value - value);
        }
    }
    return finish("prop3", max_dev, 1e-6,
                  describe(cfg, per_dim, "noiseless equality at Fourier and bound dominance"));
}

// Depolarising channel: same structure on the post-channel state.
ClaimResult claim_prop4(const ClaimConfig& cfg) {
    const int per_dim = cfg.samples > 0 ? cfg.samples : 6;
    double max_dev = 0.0;
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        Rng rng = claim_rng(cfg, 7, di);
        for (int s = 0; s < per_dim; ++s) {
            const double beta = 0.3 + 0.7 * rng.uniform();
            const KrausChannel e = depolarising_channel(beta, d);
            const PresharedState rho(random_density({d, d}, rng));

            const double overall = capacity_overall_depolarising(rho, beta);
            const double at_fourier = optimizer_value(pauli_product_set(fourier_hadamard(d)), rho, e);
            max_dev = std::max(max_dev, std::abs(at_fourier - overall));

            const ImperfectHadamard h{random_unitary(d, rng)};
            const double c_val = complementarity_c(overlap_matrix(h));
            const double value = optimizer_value(pauli_product_set(h), rho, e);
            max_dev = std::max(max_dev, lower_bound_depolarising(c_val, rho, beta).value - value);
        }
    }
    return finish("prop4", max_dev, 1e-6,
                  describe(cfg, per_dim, "depolarising equality at Fourier and bound dominance"));
}

// Werner state through an arbitrary channel.
ClaimResult claim_prop5(const ClaimConfig& cfg) {
    const int per_dim = cfg.samples > 0 ? cfg.samples : 6;
    double max_dev = 0.0;
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        Rng rng = claim_rng(cfg, 8, di);
        for (int s = 0; s < per_dim; ++s) {
            const double alpha = rng.uniform();
            const KrausChannel e =
                s % 2 == 0 ? random_channel(d, 2, rng) : random_unital_channel(d, 2, rng);
            const PresharedState rho = werner_state(alpha, standard_mes(d));

            const double overall = capacity_overall_werner(alpha, e);
            const double at_fourier = optimizer_value(pauli_product_set(fourier_hadamard(d)), rho, e);
            max_dev = std::max(max_dev, std::abs(at_fourier - overall));

            const ImperfectHadamard h{random_unitary(d, rng)};
            const double c_val = complementarity_c(overlap_matrix(h));
            const double value = optimizer_value(pauli_product_set(h), rho, e);
            max_dev = std::max(max_dev, lower_bound_werner_any_channel(c_val, alpha, e).value - value);
        }
    }
    return finish("prop5", max_dev, 1e-6,
                  describe(cfg, per_dim, "Werner equality at Fourier and bound dominance"));
}

// General five-term bound: dominance plus its three reduction identities.
ClaimResult claim_thm3(const ClaimConfig& cfg) {
    const int per_dim = cfg.samples > 0 ? cfg.samples : 5;
    double max_dev = 0.0;
    double max_reduction_dev = 0.0;
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        Rng rng = claim_rng(cfg, 9, di);
        for (int s = 0; s < per_dim; ++s) {
            const ImperfectHadamard h{random_unitary(d, rng)};
            const UnitarySet set = pauli_product_set(h);
            const double c_val = complementarity_c(overlap_matrix(h));
            const PresharedState rho(random_density({d, d}, rng));
            const KrausChannel e = random_channel(d, 2, rng);

            const Ensemble uniform =
                encoded_ensemble(set, rho, e, ProbabilityVector::uniform(set.size()));
            const BoundReport bound = general_lower_bound(c_val, rho, e, uniform);
            max_dev = std::max(max_dev, bound.value - optimizer_value(set, rho, e));

            // Unital reduction: the divergence and mixture-entropy terms cancel.
            const KrausChannel unital = random_unital_channel(d, 2, rng);
            const BoundReport ub = general_lower_bound(
                c_val, rho, unital,
                encoded_ensemble(set, rho, unital, ProbabilityVector::uniform(set.size())));
            max_reduction_dev =
                std::max(max_reduction_dev, std::abs(ub.components.at("relative_entropy_term") +
                                                     ub.components.at("entropy_avg_A")));

            // Maximally mixed marginals: divergence term collapses to -log2 d.
            const PresharedState werner = werner_state(0.5 + 0.5 * rng.uniform(), standard_mes(d));
            const BoundReport wb = general_lower_bound(
                c_val, werner, e,
                encoded_ensemble(set, werner, e, ProbabilityVector::uniform(set.size())));
            max_reduction_dev =
                std::max(max_reduction_dev, std::abs(wb.components.at("relative_entropy_term") +
                                                     classical_strategy_bound(d)));

            // Fully complementary case: bound equals the three-term expression.
            const UnitarySet fourier_set = pauli_product_set(fourier_hadamard(d));
            const Ensemble fu =
                encoded_ensemble(fourier_set, rho, e, ProbabilityVector::uniform(fourier_set.size()));
            const BoundReport fb = general_lower_bound(1.0 / d, rho, e, fu);
            double avg_member_entropy = 0.0;
            for (const auto& [p, member] : fu.members())
                avg_member_entropy += p * von_neumann_entropy(member);
            ComplexMatrix chan_mixed = e.apply_raw(ComplexMatrix::identity(d));
            chan_mixed *= Complex(1.0 / d, 0.0);
            const double three_term =
                von_neumann_entropy(partial_trace(rho.rho(), Subsystem::B)) +
                detail::entropy_of_matrix(chan_mixed) - avg_member_entropy;
            max_reduction_dev = std::max(max_reduction_dev, std::abs(fb.value - three_term));
        }
    }
    ClaimResult r;
    r.name = "thm3";
    r.pass = max_dev <= 1e-6 && max_reduction_dev <= 1e-9;
    r.max_deviation = std::max(max_dev, max_reduction_dev);
    r.tolerance = 1e-6;
    r.detail = describe(cfg, per_dim, "dominance (tol 1e-6) and reduction identities (tol 1e-9)");
    return r;
}

// f(rho_A) bound dominates both the optimizer check and the plain log(1/c)
// bound.
ClaimResult claim_strong(const ClaimConfig& cfg) {
    const int per_dim = cfg.samples > 0 ? cfg.samples : 8;
    double max_pair_dev = 0.0;     // plain - strong, exact dominance up to round-off
    double max_optimizer_dev = 0.0;  // strong - optimizer
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        const KrausChannel identity = KrausChannel::identity(d);
        Rng rng = claim_rng(cfg, 10, di);
        for (int s = 0; s < per_dim; ++s) {
            const PresharedState rho(random_density({d, d}, rng));
            const ImperfectHadamard h{random_unitary(d, rng)};
            const OverlapMatrix c = overlap_matrix(h);
            const BoundReport strong = strong_lower_bound(rho, c);
            const BoundReport plain = lower_bound_noiseless(complementarity_c(c), rho);
            max_pair_dev = std::max(max_pair_dev, plain.value - strong.value);
            const double value = optimizer_value(pauli_product_set(h), rho, identity);
            max_optimizer_dev = std::max(max_optimizer_dev, strong.value - value);
        }
    }
    ClaimResult r;
    r.name = "strong";
    r.pass = max_pair_dev <= 1e-12 && max_optimizer_dev <= 1e-6;
    r.max_deviation = std::max(max_pair_dev, max_optimizer_dev);
    r.tolerance = 1e-6;
    r.detail = describe(cfg, per_dim,
                        "plain-bound dominance (tol 1e-12) and optimizer dominance (tol 1e-6)");
    return r;
}

// Sweep of random configurations: every applicable bound stays below the
// optimizer value.
ClaimResult claim_dominance(const ClaimConfig& cfg) {
    const int n_dims = std::max(static_cast<int>(cfg.dims.size()), 1);
    const int per_dim = cfg.samples > 0 ? cfg.samples : 100 / n_dims;
    double max_bound_dev = 0.0;  // bound - optimizer
    double max_pair_dev = 0.0;   // plain noiseless bound - strong bound
    for (size_t di = 0; di < cfg.dims.size(); ++di) {
        const int d = cfg.dims[di];
        Rng rng = claim_rng(cfg, 11, di);
        for (int s = 0; s < per_dim; ++s) {
            // State: random / Werner / MES.
            const int state_kind = s % 3;
            double alpha = -1.0;
            PresharedState rho = [&]() -> PresharedState {
                if (state_kind == 0) return PresharedState(random_density({d, d}, rng));
                if (state_kind == 1) {
                    alpha = rng.uniform();
                    return werner_state(alpha, standard_mes(d));
                }
                alpha = 1.0;
                return general_mes(d, random_unitary(d, rng));
            }();

            // Channel: identity / depolarising / generic / unital.
            const int chan_kind = s % 4;
            double beta = -1.0;
            KrausChannel e = [&]() -> KrausChannel {
                if (chan_kind == 0) return KrausChannel::identity(d);
                if (chan_kind == 1) {
                    beta = 0.2 + 0.8 * rng.uniform();
                    return depolarising_channel(beta, d);
                }
                if (chan_kind == 2) return random_channel(d, 2, rng);
                return random_unital_channel(d, 2, rng);
            }();

            const ImperfectHadamard h{random_unitary(d, rng)};
            const UnitarySet set = pauli_product_set(h);
            const OverlapMatrix c = overlap_matrix(h);
            const double c_val = complementarity_c(c);
            const double value = optimizer_value(set, rho, e);

            std::vector<BoundReport> bounds;
            bounds.push_back(general_lower_bound(
                c_val, rho, e, encoded_ensemble(set, rho, e, ProbabilityVector::uniform(set.size()))));
            if (chan_kind == 0) {
                const BoundReport plain = lower_bound_noiseless(c_val, rho);
                const BoundReport strong = strong_lower_bound(rho, c);
                max_pair_dev = std::max(max_pair_dev, plain.value - strong.value);
                bounds.push_back(plain);
                bounds.push_back(strong);
            }
            if (chan_kind == 1) bounds.push_back(lower_bound_depolarising(c_val, rho, beta));
            // Werner-type states (MES included): the post-channel S(B|A) bound
            // applies to the actual preshared state.
            if (state_kind != 0) bounds.push_back(lower_bound_post_channel_BA(c_val, rho, e));
            if (state_kind == 1) bounds.push_back(lower_bound_werner_any_channel(c_val, alpha, e));

            for (const BoundReport& b : bounds)
                max_bound_dev = std::max(max_bound_dev, b.value - value);
        }
    }
    ClaimResult r;
    r.name = "dominance";
    r.pass = max_bound_dev <= 1e-6 && max_pair_dev <= 1e-12;
    r.max_deviation = max_bound_dev;
    r.tolerance = 1e-6;
    r.detail = describe(cfg, per_dim,
                        "max(bound - optimizer) (tol 1e-6); strong vs plain pair (tol 1e-12)");
    return r;
}

}  // namespace

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = {"prop1", "thm1",  "prop2", "lemma1",
                                                   "thm2",  "prop3", "prop4", "prop5",
                                                   "thm3",  "strong", "dominance"};
    return names;
}

ClaimResult run_claim(const std::string& name, const ClaimConfig& cfg) {
    if (name == "prop1") return claim_prop1(cfg);
    if (name == "thm1") return claim_thm1(cfg);
    if (name == "prop2") return claim_prop2(cfg);
    if (name == "lemma1") return claim_lemma1(cfg);
    if (name == "thm2") return claim_thm2(cfg);
    if (name == "prop3") return claim_prop3(cfg);
    if (name == "prop4") return claim_prop4(cfg);
    if (name == "prop5") return claim_prop5(cfg);
    if (name == "thm3") return claim_thm3(cfg);
    if (name == "strong") return claim_strong(cfg);
    if (name == "dominance") return claim_dominance(cfg);
    throw RangeError("unknown claim: " + name);
}

std::vector<ClaimResult> run_claims(const std::vector<std::string>& names, const ClaimConfig& cfg) {
    std::vector<ClaimResult> results;
    results.reserve(names.size());
    for (const auto& name : names) results.push_back(run_claim(name, cfg));
    return results;
}

}  // namespace sdc
