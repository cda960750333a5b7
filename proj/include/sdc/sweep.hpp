#ifndef SDC_SWEEP_HPP
#define SDC_SWEEP_HPP

#include <string>
#include <vector>

#include "sdc/encodings.hpp"

namespace sdc {

struct SweepPoint {
    double c = 0.0;      // complementarity factor (max overlap entry)
    double noise = 0.0;  // 1 - alpha*beta
    double capacity = 0.0;
    double classical_bound = 0.0;
    bool advantage = false;
    std::vector<double> overlap;  // full c_kl, row-major (sidecar material for d > 2)
};

struct SweepSpec {
    int d = 2;
    std::vector<double> noises{0.0, 0.1, 0.2, 0.253, 0.4};
    int c_steps = 50;
    int threads = 0;  // 0: SDC_LAB_THREADS env, then hardware concurrency
};

// Interpolating Hadamard family for d > 2: t = 0 is the identity (c = 1),
// t = 1 is the Fourier matrix (c = 1/d), moving along the unitary geodesic.
ImperfectHadamard hadamard_family_point(int d, double t);

// Capacity grid over (noise, c). For d = 2 the c grid is exact via rotation
// Hadamards; for d > 2 the family above is sampled and the achieved c is
// reported per row. Rows come back sorted by (noise, c); points are computed
// by a bounded worker pool and assembled by index, so the output is
// deterministic for a fixed spec.
std::vector<SweepPoint> run_sweep(const SweepSpec& spec);

// Header `c,noise,capacity,classical_bound,advantage`, 12 significant digits,
// '.' decimal separator, advantage as 0/1.
std::string sweep_csv(const std::vector<SweepPoint>& points);

int resolve_thread_count(int requested);

}  // namespace sdc

#endif  // SDC_SWEEP_HPP
