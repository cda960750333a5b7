#include "sdc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "sdc/errors.hpp"
#include "sdc/formulas.hpp"
#include "sdc/json_io.hpp"
#include "sdc/linalg.hpp"

namespace sdc {

ImperfectHadamard hadamard_family_point(int d, double t) {
    if (d == 2) {
        // rotation(acos(sqrt(c))) sweeps c exactly; keep the same endpoints.
        return rotation_hadamard(t * std::numbers::pi / 4.0);
    }
    if (t < 0.0 || t > 1.0) throw RangeError("hadamard family parameter outside [0,1]");

    // Geodesic from the identity to the Fourier matrix: F = V diag(e^{i th}) V^dag,
    // H(t) = V diag(e^{i t th}) V^dag. The Fourier matrix is normal, so a
    // generic real combination of its Hermitian and anti-Hermitian parts has
    // the same eigenvectors and is diagonalizable by hermitian_eig; the phase
    // per eigenvector is recovered from F itself.
    const ComplexMatrix f = fourier_hadamard(d).matrix();
    ComplexMatrix sym = f + f.adjoint();
    sym *= Complex(0.5, 0.0);
    ComplexMatrix antisym = f - f.adjoint();
    antisym *= Complex(0.0, -0.5);
    const double mix = 0.37;  // any value outside {0, +-1} separates the four phase clusters
    ComplexMatrix combined = antisym;
    combined *= Complex(mix, 0.0);
    combined += sym;

    const Spectrum spec = hermitian_eig(combined);
    const int n = d;
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Complex> v(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] = spec.eigenvectors(r, i);
        const std::vector<Complex> fv = f.apply(v);
        Complex lambda(0.0, 0.0);
        for (int r = 0; r < n; ++r) lambda += std::conj(v[static_cast<size_t>(r)]) * fv[static_cast<size_t>(r)];
        const double phase = std::arg(lambda) * t;
        const Complex scale(std::cos(phase), std::sin(phase));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                h(r, c) += scale * v[static_cast<size_t>(r)] * std::conj(v[static_cast<size_t>(c)]);
    }
    return ImperfectHadamard(std::move(h));
}

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SDC_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

std::vector<SweepPoint> run_sweep(const SweepSpec& spec) {
    if (spec.d < 2) throw InvalidDimension("sweep dimension must be >= 2");
    if (spec.c_steps < 2) throw RangeError("sweep needs at least 2 c points");
    for (double noise : spec.noises)
        if (noise < 0.0 || noise > 1.0) throw RangeError("noise outside [0,1]");

    std::vector<double> noises = spec.noises;
    std::sort(noises.begin(), noises.end());

    const int d = spec.d;
    const int per_curve = spec.c_steps;
    const int total = static_cast<int>(noises.size()) * per_curve;
    std::vector<SweepPoint> points(static_cast<size_t>(total));

    // Overlap matrices depend only on the c index; share them across curves.
    std::vector<OverlapMatrix> overlaps;
    overlaps.reserve(static_cast<size_t>(per_curve));
    for (int i = 0; i < per_curve; ++i) {
        const double frac = static_cast<double>(i) / (per_curve - 1);
        if (d == 2) {
            // Uniform grid in c itself: c from 1/2 up to 1.
            const double c_val = 0.5 + 0.5 * frac;
            overlaps.push_back(overlap_matrix(rotation_hadamard(std::acos(std::sqrt(c_val)))));
        } else {
            // t = 1 gives Fourier (c = 1/d); flip so c increases with index.
            overlaps.push_back(overlap_matrix(hadamard_family_point(d, 1.0 - frac)));
        }
    }

    const double log_d = classical_strategy_bound(d);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
            const int noise_idx = idx / per_curve;
            const int c_idx = idx % per_curve;
            const double noise = noises[static_cast<size_t>(noise_idx)];
            const OverlapMatrix& c = overlaps[static_cast<size_t>(c_idx)];

            SweepPoint& pt = points[static_cast<size_t>(idx)];
            pt.noise = noise;
            pt.c = complementarity_c(c);
            pt.capacity = capacity_werner_depolarising(1.0, 1.0 - noise, c);
            pt.classical_bound = log_d;
            pt.advantage = pt.capacity - log_d > tol::advantage;
            pt.overlap = c.entries();
        }
    };

    const int n_threads = std::min(resolve_thread_count(spec.threads), total);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Index order is (noise, c index); c increases with the index for d = 2,
    // and the family is re-sorted here for d > 2 where achieved c values are
    // not equally spaced.
    for (size_t start = 0; start + per_curve <= points.size(); start += per_curve)
        std::sort(points.begin() + static_cast<long>(start),
                  points.begin() + static_cast<long>(start + per_curve),
                  [](const SweepPoint& a, const SweepPoint& b) { return a.c < b.c; });
    return points;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::string out = "c,noise,capacity,classical_bound,advantage\n";
    for (const auto& pt : points) {
        out += format_double(pt.c);
        out += ',';
        out += format_double(pt.noise);
        out += ',';
        out += format_double(pt.capacity);
        out += ',';
        out += format_double(pt.classical_bound);
        out += ',';
        out += pt.advantage ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace sdc
