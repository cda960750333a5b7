#ifndef SDC_CLAIMS_HPP
#define SDC_CLAIMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sdc {

// Outcome of one named verification suite. `max_deviation` is the worst
// signed violation measure for the suite (its meaning per claim is described
// in `detail`); the claim passes iff max_deviation <= tolerance.
struct ClaimResult {
    std::string name;
    bool pass = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ClaimConfig {
    std::vector<int> dims{2, 3};
    uint64_t seed = 20260810;
    // 0 means "claim-specific default" (e.g. 20 Hadamards per dim for thm1).
    int samples = 0;
};

// prop1, thm1, prop2, lemma1, thm2, prop3, prop4, prop5, thm3, strong, dominance
const std::vector<std::string>& claim_names();

ClaimResult run_claim(const std::string& name, const ClaimConfig& cfg);

std::vector<ClaimResult> run_claims(const std::vector<std::string>& names, const ClaimConfig& cfg);

}  // namespace sdc

#endif  // SDC_CLAIMS_HPP
