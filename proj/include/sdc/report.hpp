#ifndef SDC_REPORT_HPP
#define SDC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "sdc/formulas.hpp"
#include "sdc/protocol.hpp"

namespace sdc {

// Fully resolved capacity query: which encodings, state, and channel to run.
// The kind strings drive applicability of the closed forms.
struct ScenarioSpec {
    int d;
    ImperfectHadamard hadamard;
    PresharedState state;
    std::string state_kind;    // "mes" | "werner" | "raw"
    double alpha = 1.0;        // meaningful for mes/werner
    KrausChannel channel;
    std::string channel_kind;  // "identity" | "depolarising" | "dephasing" | "kraus"
    double beta = 1.0;         // meaningful for identity/depolarising
};

// One closed-form capacity equality next to the optimizer's value.
struct EqualityReport {
    std::string name;
    double value = 0.0;
    bool applicable = true;
    double delta = 0.0;  // optimizer - formula, meaningful when applicable
};

struct CapacityReport {
    double c_val = 0.0;
    HadamardClass hadamard_class = HadamardClass::Partial;
    CapacityResult optimizer;
    double classical_bound = 0.0;
    bool advantage = false;
    std::vector<EqualityReport> equalities;
    std::vector<BoundReport> bounds;  // each with slack = optimizer - value implied
};

// Runs the optimizer and every closed form / bound that can be evaluated for
// the scenario, marking the ones whose guarantee does not cover it as not
// applicable.
CapacityReport build_capacity_report(const ScenarioSpec& scenario, double tol_opt = tol::opt);

}  // namespace sdc

#endif  // SDC_REPORT_HPP
