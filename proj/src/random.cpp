#include "sdc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sdc/errors.hpp"
#include "sdc/tolerances.hpp"

namespace sdc {

double Rng::uniform() {
    // 53-bit mantissa from the top bits of the 64-bit state.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u clamped away from 0 to keep the log finite.
    const double u = std::max(uniform(), 0x1.0p-60);
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

int Rng::below(int bound) {
    return std::min(static_cast<int>(uniform() * bound), bound - 1);
}

namespace {

ComplexMatrix gaussian_matrix(int d, Rng& rng) {
    ComplexMatrix g(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
    return g;
}

}  // namespace

ComplexMatrix random_unitary(int d, Rng& rng) {
    if (d < 1) throw InvalidDimension("random_unitary dimension");
    // Modified Gram-Schmidt on the columns of a Gaussian matrix.
    ComplexMatrix g = gaussian_matrix(d, rng);
    for (int c = 0; c < d; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            Complex overlap(0.0, 0.0);
            for (int r = 0; r < d; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
            for (int r = 0; r < d; ++r) g(r, c) -= overlap * g(r, prev);
        }
        double norm = 0.0;
        for (int r = 0; r < d; ++r) norm += std::norm(g(r, c));
        norm = std::sqrt(norm);
        for (int r = 0; r < d; ++r) g(r, c) /= norm;
    }
    return g;
}

ComplexMatrix random_hermitian(int d, Rng& rng) {
    const ComplexMatrix g = gaussian_matrix(d, rng);
    ComplexMatrix h = g + g.adjoint();
    h *= Complex(0.5, 0.0);
    return h;
}

DensityOperator random_density(const std::vector<int>& dims, Rng& rng) {
    int n = 1;
    for (int d : dims) n *= d;
    const ComplexMatrix g = gaussian_matrix(n, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho *= Complex(1.0 / std::real(rho.trace()), 0.0);
    return DensityOperator(std::move(rho), dims);
}

KrausChannel random_channel(int d, int n_kraus, Rng& rng) {
    if (n_kraus < 1) throw InvalidDimension("random_channel needs n_kraus >= 1");
    // Stack Gaussian blocks G_i and normalize by (sum G_i^dag G_i)^{-1/2} so
    // that K_i = G_i S^{-1/2} satisfies sum K^dag K = I.
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<size_t>(n_kraus));
    ComplexMatrix gram(d);
    for (int i = 0; i < n_kraus; ++i) {
        blocks.push_back(gaussian_matrix(d, rng));
        gram += blocks.back().adjoint() * blocks.back();
    }
    const Spectrum spec = hermitian_eig(gram);
    ComplexMatrix inv_sqrt(d);
    for (int i = 0; i < d; ++i) {
        const double lambda = spec.eigenvalues[i];
        const double scale = 1.0 / std::sqrt(lambda);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                inv_sqrt(r, c) += scale * spec.eigenvectors(r, i) * std::conj(spec.eigenvectors(c, i));
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(blocks.size());
    for (auto& b : blocks) kraus.push_back(b * inv_sqrt);
    return KrausChannel(d, d, std::move(kraus));
}

KrausChannel random_unital_channel(int d, int n_unitaries, Rng& rng) {
    if (n_unitaries < 1) throw InvalidDimension("random_unital_channel needs n >= 1");
    std::vector<double> weights(static_cast<size_t>(n_unitaries));
    double sum = 0.0;
    for (double& w : weights) {
        w = rng.uniform() + 1e-3;
        sum += w;
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(weights.size());
    for (double w : weights) {
        ComplexMatrix k = random_unitary(d, rng);
        k *= Complex(std::sqrt(w / sum), 0.0);
        kraus.push_back(std::move(k));
    }
    return KrausChannel(d, d, std::move(kraus));
}

ImperfectHadamard random_permutation_hadamard(int d, Rng& rng) {
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = d - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);

    ComplexMatrix h(d);
    for (int k = 0; k < d; ++k) {
        const double phase = 2.0 * std::numbers::pi * rng.uniform();
        h(perm[k], k) = Complex(std::cos(phase), std::sin(phase));
    }
    return ImperfectHadamard(std::move(h));
}

UnitarySet random_commuting_set(int d, int count, Rng& rng) {
    const ComplexMatrix basis = random_unitary(d, rng);
    std::vector<ComplexMatrix> set;
    set.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::vector<Complex> phases(static_cast<size_t>(d));
        for (auto& ph : phases) {
            const double angle = 2.0 * std::numbers::pi * rng.uniform();
            ph = Complex(std::cos(angle), std::sin(angle));
        }
        set.push_back(basis * ComplexMatrix::diagonal(phases) * basis.adjoint());
    }
    return UnitarySet(std::move(set));
}

}  // namespace sdc
