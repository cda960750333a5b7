#include "sdc/formulas.hpp"

#include <algorithm>
#include <cmath>

#include "sdc/errors.hpp"

namespace sdc {

namespace {

BoundReport make_report(std::string name, std::map<std::string, double> components,
                        bool applicable = true) {
    BoundReport r;
    r.name = std::move(name);
    r.components = std::move(components);
    r.applicable = applicable;
    for (const auto& [key, term] : r.components) r.value += term;
    return r;
}

void require_unit_interval(double x, const char* what) {
    if (x < 0.0 || x > 1.0) throw RangeError(std::string(what) + " outside [0,1]");
}

void require_c_range(double c_val, int d) {
    if (c_val < 1.0 / d - tol::herm || c_val > 1.0 + tol::herm)
        throw RangeError("complementarity factor outside [1/d, 1]");
}

}  // namespace

double capacity_mes_noiseless(const OverlapMatrix& c) {
    std::vector<double> p;
    p.reserve(c.entries().size());
    for (double x : c.entries()) p.push_back(x / c.dim());
    return shannon_entropy(p);
}

double quantum_advantage_mes(const OverlapMatrix& c) {
    const int d = c.dim();
    double sum = 0.0;
    for (int k = 0; k < d; ++k) {
        std::vector<double> row(static_cast<size_t>(d));
        for (int l = 0; l < d; ++l) row[static_cast<size_t>(l)] = c(k, l);
        sum += shannon_entropy(row);
    }
    return sum / d;
}

HadamardClass classify_hadamard(const ImperfectHadamard& h, double tol) {
    const int d = h.dim();
    const OverlapMatrix c = overlap_matrix(h);

    bool full = true;
    for (double x : c.entries()) full = full && std::abs(x - 1.0 / d) <= tol;
    if (full) return HadamardClass::Full;

    // Zero complementarity: exactly one entry ~1 per row (double
    // stochasticity then forces one per column as well).
    bool zero = true;
    for (int k = 0; k < d && zero; ++k) {
        int ones = 0;
        for (int l = 0; l < d; ++l) {
            if (std::abs(c(k, l) - 1.0) <= tol)
                ++ones;
            else if (c(k, l) > tol)
                zero = false;
        }
        zero = zero && ones == 1;
    }
    return zero ? HadamardClass::Zero : HadamardClass::Partial;
}

double werner_entropy(double gamma, int d) {
    require_unit_interval(gamma, "werner_entropy gamma");
    const int n = d * d;
    const double small = (1.0 - gamma) / n;
    std::vector<double> spectrum(static_cast<size_t>(n), small);
    spectrum[0] = gamma + small;
    return shannon_entropy(spectrum);
}

double capacity_werner_depolarising(double alpha, double beta, const OverlapMatrix& c) {
    require_unit_interval(alpha, "alpha");
    require_unit_interval(beta, "beta");
    const int d = c.dim();
    const double g = alpha * beta;
    std::vector<double> mixed;
    mixed.reserve(c.entries().size());
    for (double x : c.entries()) mixed.push_back(g * x / d + (1.0 - g) / (d * d));
    return std::max(shannon_entropy(mixed) - werner_entropy(g, d), 0.0);
}

double capacity_overall_noiseless(const PresharedState& rho) {
    return classical_strategy_bound(rho.local_dim()) - conditional_entropy(rho.rho(), Subsystem::B);
}

double capacity_overall_depolarising(const PresharedState& rho, double beta) {
    const DensityOperator hat = apply_to_A(depolarising_channel(beta, rho.local_dim()), rho.rho());
    return classical_strategy_bound(rho.local_dim()) - conditional_entropy(hat, Subsystem::B);
}

double capacity_overall_werner(double alpha, const KrausChannel& e) {
    const PresharedState rho = werner_state(alpha, standard_mes(e.d_in()));
    const DensityOperator hat = apply_to_A(e, rho.rho());
    return classical_strategy_bound(e.d_in()) - conditional_entropy(hat, Subsystem::A);
}

BoundReport lower_bound_noiseless(double c_val, const PresharedState& rho) {
    require_c_range(c_val, rho.local_dim());
    return make_report("prop3_noiseless",
                       {{"log_inv_c", std::log2(1.0 / c_val)},
                        {"neg_cond_entropy", -conditional_entropy(rho.rho(), Subsystem::B)}});
}

BoundReport lower_bound_depolarising(double c_val, const PresharedState& rho, double beta) {
    require_unit_interval(beta, "beta");
    BoundReport r =
        lower_bound_post_channel_AB(c_val, rho, depolarising_channel(beta, rho.local_dim()));
    r.name = "prop4_depolarising";
    return r;
}

BoundReport lower_bound_werner_any_channel(double c_val, double alpha, const KrausChannel& e) {
    BoundReport r = lower_bound_post_channel_BA(c_val, werner_state(alpha, standard_mes(e.d_in())), e);
    r.name = "prop5_werner";
    return r;
}

BoundReport lower_bound_post_channel_AB(double c_val, const PresharedState& rho,
                                        const KrausChannel& e) {
    require_c_range(c_val, rho.local_dim());
    const DensityOperator hat = apply_to_A(e, rho.rho());
    return make_report("post_channel_AB",
                       {{"log_inv_c", std::log2(1.0 / c_val)},
                        {"neg_cond_entropy", -conditional_entropy(hat, Subsystem::B)}});
}

BoundReport lower_bound_post_channel_BA(double c_val, const PresharedState& rho,
                                        const KrausChannel& e) {
    require_c_range(c_val, rho.local_dim());
    const DensityOperator hat = apply_to_A(e, rho.rho());
    return make_report("post_channel_BA",
                       {{"log_inv_c", std::log2(1.0 / c_val)},
                        {"neg_cond_entropy_BA", -conditional_entropy(hat, Subsystem::A)}});
}

BoundReport general_lower_bound(double c_val, const PresharedState& rho, const KrausChannel& e,
                                const Ensemble& uniform_ensemble) {
    const int d = rho.local_dim();
    require_c_range(c_val, d);
    if (e.d_in() != d) throw DimensionMismatch("general_lower_bound channel dims");
    const int m = uniform_ensemble.size();
    if (m != d * d) throw InvalidProbability("general_lower_bound needs the full Pauli-product set");
    for (const auto& [p, member] : uniform_ensemble.members()) {
        if (std::abs(p - 1.0 / m) > tol::simplex)
            throw InvalidProbability("general_lower_bound needs uniform probabilities");
        if (member.dim() != d * d) throw DimensionMismatch("general_lower_bound member dims");
    }

    // Average output marginal on A and the average member entropy.
    ComplexMatrix avg_a(d);
    double avg_member_entropy = 0.0;
    for (const auto& [p, member] : uniform_ensemble.members()) {
        avg_a += detail::partial_trace_raw(member.matrix(), member.dims(), Subsystem::A);
        avg_member_entropy += p * detail::entropy_of_matrix(member.matrix());
    }
    avg_a *= Complex(1.0 / m, 0.0);
    const DensityOperator avg_a_state(avg_a, {d});

    // D(rho''_A_bar || E(I)) with the unnormalized reference E(I) = d * E(I/d):
    // subtract log2 d from the normalized divergence.
    ComplexMatrix chan_mixed = e.apply_raw(ComplexMatrix::identity(d));
    chan_mixed *= Complex(1.0 / d, 0.0);
    const double rel = relative_entropy(avg_a_state, DensityOperator(chan_mixed, {d})) -
                       std::log2(static_cast<double>(d));

    const double s_b = von_neumann_entropy(partial_trace(rho.rho(), Subsystem::B));

    return make_report("thm3_general",
                       {{"log_inv_c", std::log2(1.0 / c_val)},
                        {"relative_entropy_term", rel},
                        {"entropy_B", s_b},
                        {"entropy_avg_A", von_neumann_entropy(avg_a_state)},
                        {"neg_avg_member_entropy", -avg_member_entropy}});
}

BoundReport strong_lower_bound(const PresharedState& rho, const OverlapMatrix& c) {
    const int d = rho.local_dim();
    if (c.dim() != d) throw DimensionMismatch("strong_lower_bound overlap dims");

    const ComplexMatrix rho_a = detail::partial_trace_raw(rho.rho().matrix(), rho.rho().dims(),
                                                          Subsystem::A);
    double f = 0.0;
    for (int l = 0; l < d; ++l) {
        double weight = 0.0, col_max = 0.0;
        for (int k = 0; k < d; ++k) {
            weight += c(k, l) * std::real(rho_a(k, k));
            col_max = std::max(col_max, c(k, l));
        }
        f += weight * std::log2(1.0 / col_max);
    }
    return make_report("strong_noiseless",
                       {{"f_rho_a", f},
                        {"neg_cond_entropy", -conditional_entropy(rho.rho(), Subsystem::B)}});
}

}  // namespace sdc
