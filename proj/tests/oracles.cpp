#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace oracles {

using sdc::Complex;
using sdc::ComplexMatrix;

std::vector<double> jacobi_eigenvalues(ComplexMatrix a, int max_sweeps) {
    const int n = a.dim();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < 1e-14) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex w = a(p, q);
                const double r = std::abs(w);
                if (r < 1e-16) continue;
                const double phi = std::arg(w);
                const double app = std::real(a(p, p));
                const double aqq = std::real(a(q, q));
                const double theta = (aqq - app) / (2.0 * r);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex e_pos = std::polar(1.0, phi);
                const Complex e_neg = std::polar(1.0, -phi);

                // A <- J^dag A J with J mixing columns p and q.
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * e_neg * akq;
                    a(k, q) = s * e_pos * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * e_pos * aqk;
                    a(q, k) = s * e_neg * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eigenvalues(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) eigenvalues[static_cast<size_t>(i)] = std::real(a(i, i));
    std::sort(eigenvalues.rbegin(), eigenvalues.rend());
    return eigenvalues;
}

double spectrum_entropy_bits(const std::vector<double>& spectrum) {
    double s = 0.0;
    for (double x : spectrum)
        if (std::abs(x) >= 1e-12 && x > 0.0) s -= x * std::log2(x);
    return s;
}

namespace {

double chi_at(const std::vector<ComplexMatrix>& members, const std::vector<double>& entropies,
              const std::vector<double>& p) {
    ComplexMatrix mixture(members[0].dim());
    double avg = 0.0;
    for (size_t j = 0; j < members.size(); ++j) {
        if (p[j] == 0.0) continue;
        ComplexMatrix scaled = members[j];
        scaled *= Complex(p[j], 0.0);
        mixture += scaled;
        avg += p[j] * entropies[j];
    }
    return spectrum_entropy_bits(jacobi_eigenvalues(mixture)) - avg;
}

void enumerate(const std::vector<ComplexMatrix>& members, const std::vector<double>& entropies,
               std::vector<double>& p, size_t j, int remaining, int resolution, double* best) {
    if (j + 1 == p.size()) {
        p[j] = static_cast<double>(remaining) / resolution;
        *best = std::max(*best, chi_at(members, entropies, p));
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        p[j] = static_cast<double>(k) / resolution;
        enumerate(members, entropies, p, j + 1, remaining - k, resolution, best);
    }
}

}  // namespace

double grid_search_max_chi(const std::vector<ComplexMatrix>& members,
                           const std::vector<double>& member_entropies, int resolution) {
    std::vector<double> p(members.size(), 0.0);
    double best = 0.0;
    enumerate(members, member_entropies, p, 0, resolution, resolution, &best);
    return best;
}

ComplexMatrix partial_trace_direct(const ComplexMatrix& m, int da, int db, bool keep_a) {
    ComplexMatrix out(keep_a ? da : db);
    const int n = m.dim();
    for (int x = 0; x < n; ++x) {
        const int ax = x / db, bx = x % db;
        for (int y = 0; y < n; ++y) {
            const int ay = y / db, by = y % db;
            if (keep_a && bx == by) out(ax, ay) += m(x, y);
            if (!keep_a && ax == ay) out(bx, by) += m(x, y);
        }
    }
    return out;
}

}  // namespace oracles
