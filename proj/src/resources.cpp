#include "sdc/resources.hpp"

#include <cmath>

#include "sdc/encodings.hpp"
#include "sdc/errors.hpp"

namespace sdc {

namespace {

void require_dim(int d) {
    if (d < 2) throw InvalidDimension("dimension must be >= 2");
}

std::vector<Complex> standard_mes_ket(int d) {
    std::vector<Complex> psi(static_cast<size_t>(d) * d, Complex(0.0, 0.0));
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) psi[static_cast<size_t>(k) * d + k] = amp;
    return psi;
}

bool is_maximally_mixed(const DensityOperator& rho, double tol) {
    const int d = rho.dim();
    ComplexMatrix mixed = ComplexMatrix::identity(d);
    mixed *= Complex(1.0 / d, 0.0);
    return rho.matrix().approx_equal(mixed, tol);
}

}  // namespace

KrausChannel::KrausChannel(int d_in, int d_out, std::vector<ComplexMatrix> kraus)
    : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
    if (d_in < 1 || d_out < 1) throw InvalidDimension("channel dimensions must be positive");
    if (d_in != d_out) throw DimensionMismatch("only equal input/output dimensions are supported");
    if (kraus_.empty()) throw InvalidState("channel needs at least one Kraus operator");
    ComplexMatrix sum(d_in);
    for (const auto& k : kraus_) {
        if (k.dim() != d_in) throw DimensionMismatch("Kraus operator dimension mismatch");
        sum += k.adjoint() * k;
    }
    if (!sum.approx_equal(ComplexMatrix::identity(d_in), tol::herm))
        throw InvalidState("Kraus operators are not trace preserving");
}

KrausChannel KrausChannel::identity(int d) {
    require_dim(d);
    return KrausChannel(d, d, {ComplexMatrix::identity(d)});
}

ComplexMatrix KrausChannel::apply_raw(const ComplexMatrix& m) const {
    if (m.dim() != d_in_) throw DimensionMismatch("channel input dimension mismatch");
    ComplexMatrix out(d_out_);
    for (const auto& k : kraus_) out += k * m * k.adjoint();
    return out;
}

DensityOperator KrausChannel::apply(const DensityOperator& rho) const {
    return DensityOperator(apply_raw(rho.matrix()), rho.dims());
}

bool KrausChannel::is_unital(double tol) const {
    return apply_raw(ComplexMatrix::identity(d_in_)).approx_equal(ComplexMatrix::identity(d_out_), tol);
}

PresharedState::PresharedState(DensityOperator rho) : rho_(std::move(rho)) {
    if (rho_.dims().size() != 2 || rho_.dims()[0] != rho_.dims()[1])
        throw DimensionMismatch("preshared state must be bipartite with equal local dims");
}

PresharedState standard_mes(int d) {
    require_dim(d);
    return PresharedState(DensityOperator(ComplexMatrix::outer(standard_mes_ket(d)), {d, d}));
}

PresharedState general_mes(int d, const ComplexMatrix& u_b) {
    require_dim(d);
    if (u_b.dim() != d) throw DimensionMismatch("U_B dimension mismatch");
    if (!u_b.is_unitary(tol::herm)) throw NonUnitary("U_B is not unitary");
    const auto psi = tensor(ComplexMatrix::identity(d), u_b).apply(standard_mes_ket(d));
    return PresharedState(DensityOperator(ComplexMatrix::outer(psi), {d, d}));
}

PresharedState werner_state(double alpha, const PresharedState& phi) {
    if (alpha < 0.0 || alpha > 1.0) throw RangeError("werner_state: alpha outside [0,1]");
    const int d = phi.local_dim();
    // MES test: pure with both marginals maximally mixed.
    const ComplexMatrix& p = phi.rho().matrix();
    if ((p * p).max_abs_diff(p) > 1e-8) throw NotMES("werner_state: phi is not pure");
    if (!is_maximally_mixed(partial_trace(phi.rho(), Subsystem::A), 1e-8) ||
        !is_maximally_mixed(partial_trace(phi.rho(), Subsystem::B), 1e-8))
        throw NotMES("werner_state: phi marginals are not maximally mixed");

    ComplexMatrix m = p;
    m *= Complex(alpha, 0.0);
    ComplexMatrix mixed = ComplexMatrix::identity(d * d);
    mixed *= Complex((1.0 - alpha) / (d * d), 0.0);
    m += mixed;
    return PresharedState(DensityOperator(std::move(m), {d, d}));
}

KrausChannel depolarising_channel(double beta, int d) {
    if (beta < 0.0 || beta > 1.0) throw RangeError("depolarising_channel: beta outside [0,1]");
    require_dim(d);
    // Pauli-product twirl: identity keeps weight beta + (1-beta)/d^2, every
    // other Weyl operator gets (1-beta)/d^2.
    const UnitarySet weyl = pauli_product_set(fourier_hadamard(d));
    const double rest = (1.0 - beta) / (d * d);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(weyl.unitaries().size());
    for (int j = 0; j < weyl.size(); ++j) {
        const double w = j == 0 ? beta + rest : rest;
        if (w <= 0.0) continue;
        ComplexMatrix k = weyl[j];
        k *= Complex(std::sqrt(w), 0.0);
        kraus.push_back(std::move(k));
    }
    return KrausChannel(d, d, std::move(kraus));
}

KrausChannel dephasing_channel(int d) {
    require_dim(d);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        ComplexMatrix proj(d);
        proj(k, k) = 1.0;
        kraus.push_back(std::move(proj));
    }
    return KrausChannel(d, d, std::move(kraus));
}

DensityOperator apply_to_A(const KrausChannel& e, const DensityOperator& rho_ab) {
    if (rho_ab.dims().size() != 2) throw DimensionMismatch("apply_to_A needs a bipartite state");
    const int da = rho_ab.dims()[0], db = rho_ab.dims()[1];
    if (e.d_in() != da) throw DimensionMismatch("channel does not match subsystem A");
    const ComplexMatrix eye_b = ComplexMatrix::identity(db);
    ComplexMatrix out(da * db);
    for (const auto& k : e.kraus()) {
        const ComplexMatrix lifted = tensor(k, eye_b);
        out += lifted * rho_ab.matrix() * lifted.adjoint();
    }
    return DensityOperator(std::move(out), rho_ab.dims());
}

double channel_unitary_commutation_check(const KrausChannel& e, const ComplexMatrix& u,
                                         const DensityOperator& rho) {
    if (u.dim() != rho.dim() || e.d_in() != rho.dim())
        throw DimensionMismatch("commutation check dimension mismatch");
    const ComplexMatrix lhs = e.apply_raw(u * rho.matrix() * u.adjoint());
    const ComplexMatrix rhs = u * e.apply_raw(rho.matrix()) * u.adjoint();
    return lhs.max_abs_diff(rhs);
}

}  // namespace sdc
