#ifndef SDC_FORMULAS_HPP
#define SDC_FORMULAS_HPP

#include <map>
#include <string>

#include "sdc/encodings.hpp"
#include "sdc/protocol.hpp"
#include "sdc/resources.hpp"

namespace sdc {

// A closed-form capacity bound (or equality) split into its named additive
// terms. `value` always equals the sum of `components`. `applicable` is
// false when the formula was evaluated outside the regime where its
// guarantee holds; callers may also clear it based on context.
struct BoundReport {
    std::string name;
    double value = 0.0;  // bits
    bool applicable = true;
    std::map<std::string, double> components;
};

enum class HadamardClass { Full, Zero, Partial };

// MES + noiseless capacity: Shannon entropy of the normalized overlap
// matrix, H({c_kl / d}).
double capacity_mes_noiseless(const OverlapMatrix& c);

// Mean row entropy of c_kl; capacity_mes_noiseless = log2(d) + this.
double quantum_advantage_mes(const OverlapMatrix& c);

// Full: every |H_kl|^2 = 1/d (capacity 2 log d). Zero: permutation with
// phases (capacity log d). Partial: anything else.
HadamardClass classify_hadamard(const ImperfectHadamard& h, double tol = tol::classify);

// Entropy of the Werner spectrum {gamma + (1-gamma)/d^2, (1-gamma)/d^2 x(d^2-1)}
// evaluated from the two-point form rather than by diagonalization.
double werner_entropy(double gamma, int d);

// Werner(alpha) through depolarising(beta):
// H({alpha beta c_kl / d + (1-alpha beta)/d^2}) - S(Werner(alpha beta)).
double capacity_werner_depolarising(double alpha, double beta, const OverlapMatrix& c);

// Unrestricted-encoding capacities (equalities, not bounds).
double capacity_overall_noiseless(const PresharedState& rho);                  // log d - S(A|B)
double capacity_overall_depolarising(const PresharedState& rho, double beta);  // log d - S(A|B)_hat
double capacity_overall_werner(double alpha, const KrausChannel& e);           // log d - S(B|A)_hat

// Pauli-product lower bounds in terms of the complementarity factor c.
BoundReport lower_bound_noiseless(double c_val, const PresharedState& rho);
BoundReport lower_bound_depolarising(double c_val, const PresharedState& rho, double beta);
BoundReport lower_bound_werner_any_channel(double c_val, double alpha, const KrausChannel& e);

// Same expressions evaluated on an arbitrary post-channel state; applicable
// is set by the caller's context (the guarantee needs a depolarising channel
// for the A|B form and a Werner state for the B|A form).
BoundReport lower_bound_post_channel_AB(double c_val, const PresharedState& rho, const KrausChannel& e);
BoundReport lower_bound_post_channel_BA(double c_val, const PresharedState& rho, const KrausChannel& e);

// Five-term bound for arbitrary state and channel:
// log(1/c) + D(rho''_A_bar || E(I)) + S(rho_B) + S(rho''_A_bar) - avg_j S(rho''_AB_j).
// `uniform_ensemble` must be the uniform-probability encoding of rho through e
// over the full Pauli-product set.
BoundReport general_lower_bound(double c_val, const PresharedState& rho, const KrausChannel& e,
                                const Ensemble& uniform_ensemble);

// Noiseless-channel bound f(rho_A) - S(A|B) with
// f(rho_A) = sum_l (sum_k c_kl <k|rho_A|k>) log2(1 / max_k' c_k'l);
// dominates lower_bound_noiseless since f(rho_A) >= log(1/c).
BoundReport strong_lower_bound(const PresharedState& rho, const OverlapMatrix& c);

}  // namespace sdc

#endif  // SDC_FORMULAS_HPP
