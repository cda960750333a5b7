#include "sdc/encodings.hpp"

#include <cmath>
#include <numbers>

#include "sdc/errors.hpp"

namespace sdc {

namespace {

Complex root_of_unity(int d, long long power) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(power) / d;
    return Complex(std::cos(angle), std::sin(angle));
}

void require_dim(int d) {
    if (d < 2) throw InvalidDimension("qudit dimension must be >= 2");
}

}  // namespace

ImperfectHadamard::ImperfectHadamard(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.dim() < 2) throw InvalidDimension("Hadamard dimension must be >= 2");
    if (!matrix_.is_unitary(tol::herm)) throw NonUnitary("Hadamard matrix is not unitary");
}

OverlapMatrix::OverlapMatrix(int d, std::vector<double> entries) : d_(d), c_(std::move(entries)) {
    require_dim(d);
    if (c_.size() != static_cast<size_t>(d) * d) throw InvalidDimension("overlap matrix entry count");
    for (double x : c_)
        if (x < -tol::herm || x > 1.0 + tol::herm) throw RangeError("overlap entries must lie in [0,1]");
    for (int k = 0; k < d_; ++k) {
        double row = 0.0, col = 0.0;
        for (int l = 0; l < d_; ++l) {
            row += (*this)(k, l);
            col += (*this)(l, k);
        }
        if (std::abs(row - 1.0) > tol::herm || std::abs(col - 1.0) > tol::herm)
            throw RangeError("overlap matrix is not doubly stochastic");
    }
}

UnitarySet::UnitarySet(std::vector<ComplexMatrix> unitaries) : unitaries_(std::move(unitaries)) {
    if (unitaries_.empty()) throw InvalidDimension("unitary set is empty");
    const int d = unitaries_[0].dim();
    for (const auto& u : unitaries_) {
        if (u.dim() != d) throw DimensionMismatch("unitary set elements differ in dim");
        if (!u.is_unitary(tol::herm)) throw NonUnitary("unitary set element is not unitary");
    }
}

ComplexMatrix pauli_z(int d) {
    require_dim(d);
    ComplexMatrix z(d);
    for (int k = 0; k < d; ++k) z(k, k) = root_of_unity(d, k);
    return z;
}

ComplexMatrix pauli_x(int d) {
    require_dim(d);
    ComplexMatrix x(d);
    for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
    return x;
}

ImperfectHadamard fourier_hadamard(int d) {
    require_dim(d);
    ComplexMatrix h(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            h(k, l) = root_of_unity(d, -static_cast<long long>(k) * l) * scale;
    return ImperfectHadamard(h);
}

ImperfectHadamard identity_hadamard(int d) {
    require_dim(d);
    return ImperfectHadamard(ComplexMatrix::identity(d));
}

ImperfectHadamard rotation_hadamard(double theta) {
    ComplexMatrix h(2);
    h(0, 0) = std::cos(theta);
    h(0, 1) = -std::sin(theta);
    h(1, 0) = std::sin(theta);
    h(1, 1) = std::cos(theta);
    return ImperfectHadamard(h);
}

ComplexMatrix imperfect_x(const ImperfectHadamard& h) {
    return h.matrix() * pauli_z(h.dim()) * h.matrix().adjoint();
}

UnitarySet pauli_product_set(const ImperfectHadamard& h) {
    const int d = h.dim();
    const ComplexMatrix x = imperfect_x(h);
    const ComplexMatrix z = pauli_z(d);

    std::vector<ComplexMatrix> x_powers(d), z_powers(d);
    x_powers[0] = ComplexMatrix::identity(d);
    z_powers[0] = ComplexMatrix::identity(d);
    for (int k = 1; k < d; ++k) {
        x_powers[k] = x_powers[k - 1] * x;
        z_powers[k] = z_powers[k - 1] * z;
    }

    std::vector<ComplexMatrix> set;
    set.reserve(static_cast<size_t>(d) * d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) set.push_back(x_powers[m] * z_powers[n]);
    return UnitarySet(std::move(set));
}

OverlapMatrix overlap_matrix(const ImperfectHadamard& h) {
    const int d = h.dim();
    std::vector<double> c(static_cast<size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) c[static_cast<size_t>(k) * d + l] = std::norm(h.matrix()(k, l));
    return OverlapMatrix(d, std::move(c));
}

double complementarity_c(const OverlapMatrix& c) {
    double m = 0.0;
    for (double x : c.entries()) m = std::max(m, x);
    return m;
}

bool is_commuting_set(const UnitarySet& u, double tol) {
    for (int i = 0; i < u.size(); ++i)
        for (int j = i + 1; j < u.size(); ++j)
            if ((u[i] * u[j]).max_abs_diff(u[j] * u[i]) > tol) return false;
    return true;
}

}  // namespace sdc
