#include "sdc/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "sdc/errors.hpp"

namespace sdc {

namespace {

// log2 floored at the PSD clamp so that null directions of the mixture never
// produce infinities; a member with real weight there is simply treated as
// maximally distinguishable, which pushes the update the right way.
double safe_log2(double mu) {
    return std::log2(std::max(mu, tol::psd));
}

struct ChiState {
    std::vector<double> divergences;  // D(rho_j || rho_bar), bits
    double chi = 0.0;                 // sum_j p_j D_j
    double gap = 0.0;                 // max_j D_j - chi
};

// One pass over the ensemble: mixture, its spectrum, and all member
// divergences. `neg_entropy[j]` caches Tr(rho_j log2 rho_j) = -S(rho_j).
ChiState evaluate_chi(const std::vector<const ComplexMatrix*>& members,
                      const std::vector<double>& neg_entropy, const std::vector<double>& p) {
    const int m = static_cast<int>(members.size());
    const int n = members[0]->dim();

    ComplexMatrix mixture(n);
    for (int j = 0; j < m; ++j) {
        if (p[j] == 0.0) continue;
        ComplexMatrix scaled = *members[j];
        scaled *= Complex(p[j], 0.0);
        mixture += scaled;
    }

    const Spectrum spec = hermitian_eig(mixture);
    std::vector<double> log_mu(n);
    for (int i = 0; i < n; ++i) log_mu[i] = safe_log2(spec.eigenvalues[i]);

    ChiState st;
    st.divergences.resize(m);
    const ComplexMatrix& v = spec.eigenvectors;
    for (int j = 0; j < m; ++j) {
        // Tr(rho_j log2 rho_bar) = sum_i log2(mu_i) <v_i|rho_j|v_i>
        double tr_log = 0.0;
        const ComplexMatrix& rho_j = *members[j];
        for (int i = 0; i < n; ++i) {
            double w = 0.0;
            for (int r = 0; r < n; ++r) {
                Complex acc(0.0, 0.0);
                for (int c = 0; c < n; ++c) acc += rho_j(r, c) * v(c, i);
                w += std::real(std::conj(v(r, i)) * acc);
            }
            tr_log += log_mu[i] * w;
        }
        st.divergences[j] = neg_entropy[j] - tr_log;
    }

    double chi = 0.0, dmax = st.divergences[0];
    for (int j = 0; j < m; ++j) {
        chi += p[j] * st.divergences[j];
        dmax = std::max(dmax, st.divergences[j]);
    }
    st.chi = std::max(chi, 0.0);
    st.gap = dmax - st.chi;
    return st;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw InvalidProbability("probability vector is empty");
    double sum = 0.0;
    for (double x : p_) {
        if (x < 0.0) throw InvalidProbability("negative probability");
        sum += x;
    }
    if (std::abs(sum - 1.0) > tol::simplex) throw InvalidProbability("probabilities do not sum to 1");
}

ProbabilityVector ProbabilityVector::uniform(int n) {
    if (n < 1) throw InvalidProbability("uniform distribution needs n >= 1");
    return ProbabilityVector(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

Ensemble::Ensemble(std::vector<std::pair<double, DensityOperator>> members)
    : members_(std::move(members)) {
    if (members_.empty()) throw InvalidProbability("ensemble is empty");
    const int n = members_[0].second.dim();
    double sum = 0.0;
    for (const auto& [p, rho] : members_) {
        if (p < 0.0) throw InvalidProbability("negative ensemble weight");
        if (rho.dim() != n) throw DimensionMismatch("ensemble members differ in dim");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol::simplex) throw InvalidProbability("ensemble weights do not sum to 1");
}

Ensemble encoded_ensemble(const UnitarySet& u, const PresharedState& rho, const KrausChannel& e,
                          const ProbabilityVector& p) {
    if (p.size() != u.size()) throw InvalidProbability("probability count differs from unitary count");
    const int d = rho.local_dim();
    if (u.dim() != d || e.d_in() != d) throw DimensionMismatch("encoding dims incompatible with state");

    const ComplexMatrix eye_b = ComplexMatrix::identity(d);
    std::vector<std::pair<double, DensityOperator>> members;
    members.reserve(static_cast<size_t>(u.size()));
    for (int j = 0; j < u.size(); ++j) {
        const ComplexMatrix lifted = tensor(u[j], eye_b);
        DensityOperator encoded(lifted * rho.rho().matrix() * lifted.adjoint(), rho.rho().dims());
        members.emplace_back(p[j], apply_to_A(e, encoded));
    }
    return Ensemble(std::move(members));
}

double holevo_chi(const Ensemble& ens) {
    const int n = ens[0].second.dim();
    ComplexMatrix mixture(n);
    double avg_entropy = 0.0;
    for (const auto& [p, rho] : ens.members()) {
        if (p == 0.0) continue;
        ComplexMatrix scaled = rho.matrix();
        scaled *= Complex(p, 0.0);
        mixture += scaled;
        avg_entropy += p * detail::entropy_of_matrix(rho.matrix());
    }
    return std::max(detail::entropy_of_matrix(mixture) - avg_entropy, 0.0);
}

std::vector<double> member_divergences(const Ensemble& ens) {
    std::vector<const ComplexMatrix*> members;
    std::vector<double> neg_entropy, p;
    for (const auto& [pj, rho] : ens.members()) {
        members.push_back(&rho.matrix());
        neg_entropy.push_back(-detail::entropy_of_matrix(rho.matrix()));
        p.push_back(pj);
    }
    return evaluate_chi(members, neg_entropy, p).divergences;
}

CapacityResult maximize_chi(const UnitarySet& u, const PresharedState& rho, const KrausChannel& e,
                            double tol_opt, int max_iterations) {
    const Ensemble base = encoded_ensemble(u, rho, e, ProbabilityVector::uniform(u.size()));
    const int m = base.size();

    std::vector<const ComplexMatrix*> members;
    std::vector<double> neg_entropy;
    members.reserve(static_cast<size_t>(m));
    for (const auto& [pj, member] : base.members()) {
        members.push_back(&member.matrix());
        neg_entropy.push_back(-detail::entropy_of_matrix(member.matrix()));
    }

    std::vector<double> p(static_cast<size_t>(m), 1.0 / m);
    ChiState st = evaluate_chi(members, neg_entropy, p);
    int iter = 1;
    bool converged = st.gap <= tol_opt;
    while (!converged && iter < max_iterations) {
        // Multiplicative update in a shifted exponent to avoid overflow.
        const double dmax = st.gap + st.chi;
        double norm = 0.0;
        for (int j = 0; j < m; ++j) {
            p[j] *= std::exp2(st.divergences[j] - dmax);
            norm += p[j];
        }
        for (int j = 0; j < m; ++j) p[j] /= norm;

        ++iter;
        st = evaluate_chi(members, neg_entropy, p);
        converged = st.gap <= tol_opt;
    }

    return CapacityResult{st.chi, ProbabilityVector(p), iter, converged, st.gap};
}

double classical_strategy_bound(int d) {
    if (d < 2) throw InvalidDimension("dimension must be >= 2");
    return std::log2(static_cast<double>(d));
}

WitnessReport witness_complementarity(const UnitarySet& u, const PresharedState& rho,
                                      const KrausChannel& e) {
    const CapacityResult result = maximize_chi(u, rho, e);
    WitnessReport report;
    report.capacity = result.value;
    report.advantage = result.value > classical_strategy_bound(rho.local_dim()) + tol::advantage;
    report.commuting = is_commuting_set(u);
    return report;
}

}  // namespace sdc
