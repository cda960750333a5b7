#ifndef SDC_RANDOM_HPP
#define SDC_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "sdc/complex_matrix.hpp"
#include "sdc/encodings.hpp"
#include "sdc/linalg.hpp"
#include "sdc/resources.hpp"

namespace sdc {

// Seeded generator with hand-rolled Gaussian sampling so that identical seeds
// give identical streams regardless of standard-library internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    double uniform();  // [0, 1)
    double gaussian();
    int below(int bound);  // {0, ..., bound-1}

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Haar-like unitary from Gram-Schmidt orthonormalization of a complex
// Gaussian matrix.
ComplexMatrix random_unitary(int d, Rng& rng);

ComplexMatrix random_hermitian(int d, Rng& rng);

// rho = G G^dag / Tr(G G^dag) over the product of `dims`.
DensityOperator random_density(const std::vector<int>& dims, Rng& rng);

// Random CPTP map with n_kraus operators (isometry column construction).
KrausChannel random_channel(int d, int n_kraus, Rng& rng);

// Random mixture of unitaries: unital and trace preserving by construction.
KrausChannel random_unital_channel(int d, int n_unitaries, Rng& rng);

// Permutation-with-phases Hadamard: zero complementarity by construction.
ImperfectHadamard random_permutation_hadamard(int d, Rng& rng);

// `count` unitaries sharing a random eigenbasis with random phases.
UnitarySet random_commuting_set(int d, int count, Rng& rng);

}  // namespace sdc

#endif  // SDC_RANDOM_HPP
