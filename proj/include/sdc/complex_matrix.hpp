#ifndef SDC_COMPLEX_MATRIX_HPP
#define SDC_COMPLEX_MATRIX_HPP

#include <complex>
#include <vector>

namespace sdc {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major storage. Carrier for every operator
// in the library: unitaries, Kraus operators, density matrices.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);  // zero-filled
    ComplexMatrix(int dim, std::vector<Complex> entries);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(const std::vector<Complex>& entries);
    // |psi><psi| for a ket given as a coefficient vector.
    static ComplexMatrix outer(const std::vector<Complex>& psi);

    int dim() const { return dim_; }
    bool empty() const { return dim_ == 0; }

    Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;
    ComplexMatrix pow(int n) const;  // n >= 0

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& other) const;
    // Entrywise comparison with an explicit absolute tolerance.
    bool approx_equal(const ComplexMatrix& other, double tol) const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    const std::vector<Complex>& data() const { return a_; }

private:
    int dim_ = 0;
    std::vector<Complex> a_;
};

}  // namespace sdc

#endif  // SDC_COMPLEX_MATRIX_HPP
