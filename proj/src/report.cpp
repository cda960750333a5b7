#include "sdc/report.hpp"

#include <cmath>

namespace sdc {

CapacityReport build_capacity_report(const ScenarioSpec& scenario, double tol_opt) {
    const int d = scenario.d;
    const UnitarySet set = pauli_product_set(scenario.hadamard);
    const OverlapMatrix c = overlap_matrix(scenario.hadamard);

    CapacityReport report{complementarity_c(c),
                          classify_hadamard(scenario.hadamard),
                          maximize_chi(set, scenario.state, scenario.channel, tol_opt),
                          classical_strategy_bound(d),
                          false,
                          {},
                          {}};
    report.advantage = report.optimizer.value > report.classical_bound + tol::advantage;

    const bool noiseless = scenario.channel_kind == "identity";
    const bool depolarising = noiseless || scenario.channel_kind == "depolarising";
    const bool mes_state = scenario.state_kind == "mes";
    const bool werner_like = mes_state || scenario.state_kind == "werner";
    const double value = report.optimizer.value;

    auto add_equality = [&](std::string name, double formula, bool applicable) {
        report.equalities.push_back(
            EqualityReport{std::move(name), formula, applicable, value - formula});
    };

    // Overlap-entropy closed forms.
    add_equality("thm1_mes_noiseless", capacity_mes_noiseless(c), mes_state && noiseless);
    if (werner_like && depolarising)
        add_equality("thm2_werner_depolarising",
                     capacity_werner_depolarising(scenario.alpha, scenario.beta, c), true);

    // Unrestricted-encoding capacities; they cap the Pauli-set optimizer.
    add_equality("overall_noiseless", capacity_overall_noiseless(scenario.state), noiseless);
    if (depolarising)
        add_equality("overall_depolarising",
                     capacity_overall_depolarising(scenario.state, scenario.beta), true);
    if (werner_like)
        add_equality("overall_werner", capacity_overall_werner(scenario.alpha, scenario.channel),
                     true);

    // Lower bounds. Evaluate each one that is expressible for the scenario
    // and mark whether its guarantee actually covers the configuration.
    BoundReport prop3 = lower_bound_noiseless(report.c_val, scenario.state);
    prop3.applicable = noiseless;
    report.bounds.push_back(std::move(prop3));

    BoundReport prop4 = lower_bound_post_channel_AB(report.c_val, scenario.state, scenario.channel);
    prop4.name = "prop4_depolarising";
    prop4.applicable = depolarising;
    report.bounds.push_back(std::move(prop4));

    BoundReport prop5 = lower_bound_post_channel_BA(report.c_val, scenario.state, scenario.channel);
    prop5.name = "prop5_werner";
    prop5.applicable = werner_like;
    report.bounds.push_back(std::move(prop5));

    report.bounds.push_back(general_lower_bound(
        report.c_val, scenario.state, scenario.channel,
        encoded_ensemble(set, scenario.state, scenario.channel,
                         ProbabilityVector::uniform(set.size()))));

    BoundReport strong = strong_lower_bound(scenario.state, c);
    strong.applicable = noiseless;
    report.bounds.push_back(std::move(strong));

    return report;
}

}  // namespace sdc
