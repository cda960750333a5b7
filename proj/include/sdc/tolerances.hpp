#ifndef SDC_TOLERANCES_HPP
#define SDC_TOLERANCES_HPP

namespace sdc::tol {

// All dimensions in this library are small (<= 64), so double precision
// leaves large headroom over these thresholds.

inline constexpr double herm = 1e-9;      // max|M - M^dag| for Hermiticity checks
inline constexpr double trace = 1e-9;     // |Tr(rho) - 1| for density operators
inline constexpr double psd = 1e-9;       // eigenvalue floor; |lambda| < psd clamps to 0
inline constexpr double eig = 1e-10;      // spectral reconstruction error budget
inline constexpr double simplex = 1e-12;  // probability vector normalization
inline constexpr double commute = 1e-9;   // default commutator norm threshold
inline constexpr double opt = 1e-8;       // Holevo maximizer sup-gap, in bits
inline constexpr double advantage = 1e-6; // margin above log2(d) for an advantage verdict
inline constexpr double classify = 1e-8;  // squared-modulus tolerance for Hadamard classification

}  // namespace sdc::tol

#endif  // SDC_TOLERANCES_HPP
