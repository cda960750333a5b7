#include "sdc/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "sdc/errors.hpp"

namespace sdc {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 0) throw InvalidDimension("matrix dimension must be non-negative");
    a_.assign(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries) : dim_(dim), a_(std::move(entries)) {
    if (dim < 0 || a_.size() != static_cast<size_t>(dim) * dim)
        throw InvalidDimension("entry count does not match dim*dim");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
    ComplexMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<Complex>& psi) {
    const int n = static_cast<int>(psi.size());
    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = psi[r] * std::conj(psi[c]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::pow(int n) const {
    if (n < 0) throw RangeError("negative matrix power not supported");
    ComplexMatrix result = identity(dim_);
    for (int i = 0; i < n; ++i) result = result * (*this);
    return result;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw DimensionMismatch("matrix addition dims differ");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw DimensionMismatch("matrix subtraction dims differ");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& x : a_) x *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw DimensionMismatch("matrix product dims differ");
    const int n = lhs.dim_;
    ComplexMatrix out(n);
    // i,k,j loop order keeps the inner accumulation contiguous in row-major storage.
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
        }
    }
    return out;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch("matrix-vector dims differ");
    std::vector<Complex> out(static_cast<size_t>(dim_), Complex(0.0, 0.0));
    for (int r = 0; r < dim_; ++r) {
        Complex acc(0.0, 0.0);
        for (int c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("max_abs_diff dims differ");
    double m = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - other.a_[i]));
    return m;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
    return dim_ == other.dim_ && max_abs_diff(other) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int r = 0; r < dim_; ++r)
        for (int c = r; c < dim_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return (adjoint() * (*this)).approx_equal(identity(dim_), tol);
}

}  // namespace sdc
