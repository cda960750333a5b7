#ifndef SDC_RESOURCES_HPP
#define SDC_RESOURCES_HPP

#include <vector>

#include "sdc/complex_matrix.hpp"
#include "sdc/linalg.hpp"
#include "sdc/tolerances.hpp"

namespace sdc {

// CPTP map given by Kraus operators. Trace preservation (sum K^dag K = I)
// is checked at construction; complete positivity is automatic in this form.
class KrausChannel {
public:
    KrausChannel(int d_in, int d_out, std::vector<ComplexMatrix> kraus);

    static KrausChannel identity(int d);

    int d_in() const { return d_in_; }
    int d_out() const { return d_out_; }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

    // sum_i K_i m K_i^dag on a bare matrix (no state validation; accepts any
    // operator, e.g. basis elements when checking map identities).
    ComplexMatrix apply_raw(const ComplexMatrix& m) const;
    // Channel acting on a full single-system state.
    DensityOperator apply(const DensityOperator& rho) const;

    bool is_unital(double tol = tol::herm) const;

private:
    int d_in_ = 0;
    int d_out_ = 0;
    std::vector<ComplexMatrix> kraus_;
};

// Bipartite state rho_AB with equal local dimensions, shared before the
// protocol starts. Arbitrary mixed states are allowed.
class PresharedState {
public:
    explicit PresharedState(DensityOperator rho);

    const DensityOperator& rho() const { return rho_; }
    int local_dim() const { return rho_.dims()[0]; }

private:
    DensityOperator rho_;
};

// |phi_0> = sum_k |k>|k> / sqrt(d) as a density operator.
PresharedState standard_mes(int d);
// (I (x) U_B)|phi_0>; any maximally entangled pure state arises this way.
PresharedState general_mes(int d, const ComplexMatrix& u_b);
// alpha |phi><phi| + (1-alpha) I/d^2. Requires phi pure and maximally
// entangled (throws NotMES otherwise), alpha in [0,1].
PresharedState werner_state(double alpha, const PresharedState& phi);

// rho -> beta rho + (1-beta) I/d, realized as a Pauli-product twirl.
KrausChannel depolarising_channel(double beta, int d);
// Decoherence in the standard basis: rho -> sum_k |k><k| rho |k><k|.
KrausChannel dephasing_channel(int d);

// (E (x) I) acting on subsystem A of a bipartite state.
DensityOperator apply_to_A(const KrausChannel& e, const DensityOperator& rho_ab);

// max|E(U rho U^dag) - U E(rho) U^dag|; zero for channels covariant with U.
double channel_unitary_commutation_check(const KrausChannel& e, const ComplexMatrix& u,
                                         const DensityOperator& rho);

}  // namespace sdc

#endif  // SDC_RESOURCES_HPP
