#ifndef SDC_PROTOCOL_HPP
#define SDC_PROTOCOL_HPP

#include <utility>
#include <vector>

#include "sdc/encodings.hpp"
#include "sdc/linalg.hpp"
#include "sdc/resources.hpp"
#include "sdc/tolerances.hpp"

namespace sdc {

// Point on the probability simplex; length is the number of encodings.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> p);  // throws InvalidProbability
    static ProbabilityVector uniform(int n);

    int size() const { return static_cast<int>(p_.size()); }
    double operator[](int j) const { return p_[static_cast<size_t>(j)]; }
    const std::vector<double>& values() const { return p_; }

private:
    std::vector<double> p_;
};

// Weighted list of density operators over a common Hilbert space.
class Ensemble {
public:
    explicit Ensemble(std::vector<std::pair<double, DensityOperator>> members);

    int size() const { return static_cast<int>(members_.size()); }
    const std::pair<double, DensityOperator>& operator[](int j) const {
        return members_[static_cast<size_t>(j)];
    }
    const std::vector<std::pair<double, DensityOperator>>& members() const { return members_; }

private:
    std::vector<std::pair<double, DensityOperator>> members_;
};

struct CapacityResult {
    double value = 0.0;  // bits
    ProbabilityVector optimal_p;
    int iterations = 0;
    bool converged = false;
    // Upper-bound estimate minus achieved value (max_j D_j - chi), >= 0 up to
    // round-off; at most tol_opt when converged.
    double certificate_gap = 0.0;
};

struct WitnessReport {
    bool advantage = false;
    double capacity = 0.0;  // bits
    bool commuting = false;
};

// Member j is (p_j, (E (x) I)((U_j (x) I) rho (U_j (x) I)^dag)).
Ensemble encoded_ensemble(const UnitarySet& u, const PresharedState& rho, const KrausChannel& e,
                          const ProbabilityVector& p);

// chi = S(sum_j p_j rho_j) - sum_j p_j S(rho_j), in bits.
double holevo_chi(const Ensemble& ens);

// Per-member divergences D(rho_j || rho_bar) in bits; at a chi-maximizing
// distribution these are equal across supported members.
std::vector<double> member_divergences(const Ensemble& ens);

// Maximizes chi over the encoding distribution by the multiplicative
// fixed-point update p_j <- p_j 2^{D(rho_j||rho_bar)} / Z. Stops when the
// sup-gap drops below tol_opt or the iteration budget runs out (the best
// iterate is returned with converged=false in that case, never an exception).
CapacityResult maximize_chi(const UnitarySet& u, const PresharedState& rho, const KrausChannel& e,
                            double tol_opt = tol::opt, int max_iterations = 100000);

// log2(d): what any classical strategy can reach per transmitted system.
double classical_strategy_bound(int d);

// Capacity above log2(d) + tol certifies a non-commuting encoding set.
WitnessReport witness_complementarity(const UnitarySet& u, const PresharedState& rho,
                                      const KrausChannel& e);

}  // namespace sdc

#endif  // SDC_PROTOCOL_HPP
