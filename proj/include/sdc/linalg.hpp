#ifndef SDC_LINALG_HPP
#define SDC_LINALG_HPP

#include <vector>

#include "sdc/complex_matrix.hpp"

namespace sdc {

// Full spectral decomposition of a Hermitian matrix. Eigenvalues are sorted
// descending; column i of `eigenvectors` pairs with eigenvalues[i].
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

enum class Subsystem { A, B };

// Positive semidefinite, unit-trace matrix with subsystem dimension metadata.
// Validated eagerly: Hermitian within tol::herm, trace 1 within tol::trace,
// eigenvalues >= -tol::psd, and the dims product must equal the matrix dim.
class DensityOperator {
public:
    DensityOperator(ComplexMatrix matrix, std::vector<int> dims);

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim() const { return matrix_.dim(); }

private:
    ComplexMatrix matrix_;
    std::vector<int> dims_;
};

// Throws NonHermitian if the symmetry check fails, NoConvergence if the
// iteration budget is exhausted.
Spectrum hermitian_eig(const ComplexMatrix& m);

// Shannon entropy in bits of a (sub)probability vector, convention 0*log 0 = 0.
// Entries with |p| below tol::psd are clamped to zero first.
double shannon_entropy(const std::vector<double>& p);
double binary_entropy(double p);

// S(rho) = -Tr(rho log2 rho), in bits.
double von_neumann_entropy(const DensityOperator& rho);

// D(rho || sigma) = Tr(rho log2 rho) - Tr(rho log2 sigma), in bits.
// Throws SupportViolation when rho has weight outside the support of sigma
// (the divergence would be +infinity).
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

// Conditional entropy of the other subsystem given `conditioned_on`:
// conditioned_on = B gives S(A|B) = S(AB) - S(B). May be negative.
double conditional_entropy(const DensityOperator& rho_ab, Subsystem conditioned_on);

// Kronecker product; out[(i*db+k),(j*db+l)] = a[i,j] * b[k,l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Marginal of a bipartite state on the kept subsystem.
DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep);

namespace detail {
// Entropy in bits straight from a Hermitian matrix, skipping DensityOperator
// validation. For internal mixtures already known to be valid states.
double entropy_of_matrix(const ComplexMatrix& m);
// Raw partial trace over index blocks; `dims` = {dA, dB}.
ComplexMatrix partial_trace_raw(const ComplexMatrix& m, const std::vector<int>& dims, Subsystem keep);
}  // namespace detail

}  // namespace sdc

#endif  // SDC_LINALG_HPP
