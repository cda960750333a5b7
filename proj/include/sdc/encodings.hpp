#ifndef SDC_ENCODINGS_HPP
#define SDC_ENCODINGS_HPP

#include <vector>

#include "sdc/complex_matrix.hpp"
#include "sdc/tolerances.hpp"

namespace sdc {

// Unitary relating the standard basis to the shifted basis; "imperfect"
// because it need not be an exact Fourier/Hadamard matrix.
class ImperfectHadamard {
public:
    explicit ImperfectHadamard(ComplexMatrix matrix);  // throws NonUnitary

    const ComplexMatrix& matrix() const { return matrix_; }
    int dim() const { return matrix_.dim(); }

private:
    ComplexMatrix matrix_;
};

// d x d doubly stochastic matrix of squared basis overlaps c_kl.
class OverlapMatrix {
public:
    OverlapMatrix(int d, std::vector<double> entries);  // row-major, validates

    int dim() const { return d_; }
    double operator()(int k, int l) const { return c_[static_cast<size_t>(k) * d_ + l]; }
    const std::vector<double>& entries() const { return c_; }

private:
    int d_ = 0;
    std::vector<double> c_;
};

// Ordered list of same-dimension unitaries. Pauli-product sets are indexed
// j = m*d + n; arbitrary sets (e.g. witness transcripts) may have any size.
class UnitarySet {
public:
    explicit UnitarySet(std::vector<ComplexMatrix> unitaries);  // throws NonUnitary

    int size() const { return static_cast<int>(unitaries_.size()); }
    int dim() const { return unitaries_.empty() ? 0 : unitaries_[0].dim(); }
    const ComplexMatrix& operator[](int j) const { return unitaries_[static_cast<size_t>(j)]; }
    const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }

private:
    std::vector<ComplexMatrix> unitaries_;
};

// Clock operator: diag(1, w, ..., w^{d-1}) with w = e^{2*pi*i/d}.
ComplexMatrix pauli_z(int d);
// Cyclic shift |k> -> |k+1 mod d>.
ComplexMatrix pauli_x(int d);

ImperfectHadamard fourier_hadamard(int d);
ImperfectHadamard identity_hadamard(int d);
// 2x2 real rotation [[cos t, -sin t], [sin t, cos t]].
ImperfectHadamard rotation_hadamard(double theta);

// sigma_X-like shift in the rotated basis: H sigma_Z H^dag.
ComplexMatrix imperfect_x(const ImperfectHadamard& h);

// The d^2 products {imperfect_x^m * pauli_z^n}, element (0,0) = identity.
UnitarySet pauli_product_set(const ImperfectHadamard& h);

// c[k][l] = |H[k][l]|^2.
OverlapMatrix overlap_matrix(const ImperfectHadamard& h);

// max_{k,l} c_kl, in [1/d, 1].
double complementarity_c(const OverlapMatrix& c);

// True iff every pairwise commutator norm max|U_i U_j - U_j U_i| <= tol.
bool is_commuting_set(const UnitarySet& u, double tol = tol::commute);

}  // namespace sdc

#endif  // SDC_ENCODINGS_HPP
