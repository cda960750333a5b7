#include "sdc/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "sdc/errors.hpp"
#include "sdc/tolerances.hpp"

namespace sdc {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    const int n = m.dim();
    Eigen::MatrixXcd out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = m(r, c);
    return out;
}

// Eigenvalue clamp shared by every entropy evaluation: tiny negative
// round-off must not reach log2.
double clamp_eigenvalue(double lambda) {
    return std::abs(lambda) < tol::psd ? 0.0 : lambda;
}

double entropy_of_spectrum(const std::vector<double>& eigenvalues) {
    double s = 0.0;
    for (double lambda : eigenvalues) {
        const double p = clamp_eigenvalue(lambda);
        if (p > 0.0) s -= p * std::log2(p);
    }
    return std::max(s, 0.0);
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix matrix, std::vector<int> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    if (dims_.empty()) throw InvalidState("density operator needs subsystem dims");
    long long prod = 1;
    for (int d : dims_) {
        if (d < 1) throw InvalidState("subsystem dimensions must be positive");
        prod *= d;
    }
    if (prod != matrix_.dim()) throw InvalidState("product of dims does not match matrix dim");
    if (!matrix_.is_hermitian(tol::herm)) throw InvalidState("density operator is not Hermitian");
    if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > tol::trace)
        throw InvalidState("density operator trace differs from 1");
    const Spectrum spec = hermitian_eig(matrix_);
    if (spec.eigenvalues.back() < -tol::psd)
        throw InvalidState("density operator has a negative eigenvalue");
}

Spectrum hermitian_eig(const ComplexMatrix& m) {
    if (m.dim() == 0) throw InvalidDimension("cannot decompose an empty matrix");
    if (!m.is_hermitian(tol::herm)) throw NonHermitian("hermitian_eig: matrix fails symmetry check");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
    if (solver.info() != Eigen::Success) throw NoConvergence("hermitian_eig: solver did not converge");

    const int n = m.dim();
    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = ComplexMatrix(n);
    // Eigen sorts ascending; flip to descending.
    for (int i = 0; i < n; ++i) {
        const int src = n - 1 - i;
        spec.eigenvalues[i] = solver.eigenvalues()(src);
        for (int r = 0; r < n; ++r) spec.eigenvectors(r, i) = solver.eigenvectors()(r, src);
    }
    return spec;
}

double shannon_entropy(const std::vector<double>& p) {
    return entropy_of_spectrum(p);
}

double binary_entropy(double p) {
    return shannon_entropy({p, 1.0 - p});
}

double von_neumann_entropy(const DensityOperator& rho) {
    return detail::entropy_of_matrix(rho.matrix());
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim()) throw DimensionMismatch("relative_entropy dims differ");

    const Spectrum srho = hermitian_eig(rho.matrix());
    double tr_rho_log_rho = 0.0;
    for (double lambda : srho.eigenvalues) {
        const double p = clamp_eigenvalue(lambda);
        if (p > 0.0) tr_rho_log_rho += p * std::log2(p);
    }

    const Spectrum ssig = hermitian_eig(sigma.matrix());
    const int n = sigma.dim();
    double tr_rho_log_sigma = 0.0;
    for (int i = 0; i < n; ++i) {
        // weight of rho along sigma's i-th eigenvector: <v_i| rho |v_i>
        std::vector<Complex> v(n);
        for (int r = 0; r < n; ++r) v[r] = ssig.eigenvectors(r, i);
        const std::vector<Complex> rv = rho.matrix().apply(v);
        double w = 0.0;
        for (int r = 0; r < n; ++r) w += std::real(std::conj(v[r]) * rv[r]);

        const double mu = clamp_eigenvalue(ssig.eigenvalues[i]);
        if (mu > 0.0) {
            tr_rho_log_sigma += w * std::log2(mu);
        } else if (w > tol::psd) {
            throw SupportViolation("relative_entropy: rho has weight outside supp(sigma)");
        }
    }

    double d = tr_rho_log_rho - tr_rho_log_sigma;
    if (d < 0.0 && d > -tol::herm) d = 0.0;  // Klein inequality up to round-off
    return d;
}

double conditional_entropy(const DensityOperator& rho_ab, Subsystem conditioned_on) {
    if (rho_ab.dims().size() != 2) throw InvalidState("conditional_entropy needs a bipartite state");
    const double s_ab = von_neumann_entropy(rho_ab);
    const double s_cond = von_neumann_entropy(partial_trace(rho_ab, conditioned_on));
    return s_ab - s_cond;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep) {
    if (rho.dims().size() != 2) throw InvalidState("partial_trace needs a bipartite state");
    const int kept_dim = keep == Subsystem::A ? rho.dims()[0] : rho.dims()[1];
    return DensityOperator(detail::partial_trace_raw(rho.matrix(), rho.dims(), keep), {kept_dim});
}

namespace detail {

double entropy_of_matrix(const ComplexMatrix& m) {
    return entropy_of_spectrum(hermitian_eig(m).eigenvalues);
}

ComplexMatrix partial_trace_raw(const ComplexMatrix& m, const std::vector<int>& dims, Subsystem keep) {
    const int da = dims[0], db = dims[1];
    if (da * db != m.dim()) throw DimensionMismatch("partial_trace dims do not factor the matrix");
    if (keep == Subsystem::A) {
        ComplexMatrix out(da);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < da; ++j) {
                Complex acc(0.0, 0.0);
                for (int k = 0; k < db; ++k) acc += m(i * db + k, j * db + k);
                out(i, j) = acc;
            }
        return out;
    }
    ComplexMatrix out(db);
    for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) {
            Complex acc(0.0, 0.0);
            for (int i = 0; i < da; ++i) acc += m(i * db + k, i * db + l);
            out(k, l) = acc;
        }
    return out;
}

}  // namespace detail

}  // namespace sdc
