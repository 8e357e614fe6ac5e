#ifndef BARRIER_HARNESS_HPP
#define BARRIER_HARNESS_HPP

/// \file
/// harness.hpp: competitive-ratio experiments over reproducible corpora,
/// runtime scaling measurement of the offline solver, CSV emission, and
/// SVG rendering of instance + trajectory pairs.

#include <cstdint>
#include <string>

#include "core.hpp"
#include "sim.hpp"

namespace barrier::harness {

struct BenchResult {
    std::string instance_id;
    std::string algo;
    std::size_t n = 0;
    double length = 0.0;
    double range = 0.0;
    double online_len = 0.0;
    double offline_len = 0.0;
    double ratio = 0.0;
    std::size_t triples = 0;
    std::size_t epochs = 0;
    double ms = 0.0;
    // Structural-check digest for the run (coverage, visit counts, walks).
    bool covered = false;
    int max_interior_visits = 0;
    int terminal_visits = 0;
    double max_walk_drift = 0.0;
};

struct BenchConfig {
    std::size_t random_instances = 10000;
    std::size_t n_min = 5;
    std::size_t n_max = 50;
    std::uint64_t seed = 1;
    bool include_adversaries = true;
    // Adversary scales; the defaults match the benchmark targets.
    double known_adv_length = 1e6;
    int unknown_adv_stack = 100;
    double unknown_adv_range = 1.0;
    double unknown_adv_delta = 0.1;
    double fixed_adv_length = 1000.0;
    double fixed_adv_range = 1.0;
    std::vector<std::string> algos{"adaptive", "triple-always", "fixed-switch"};
};

/// Runs every algorithm over the corpus of end-gap random instances plus
/// the three adversary families. Deterministic given the seed.
std::vector<BenchResult> bench_competitive(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchResult>& results);
std::vector<BenchResult> bench_from_csv(const std::string& csv);

/// Proven ceiling for an algorithm's competitive ratio.
double ratio_ceiling(const std::string& algo);

struct ScalePoint {
    std::size_t n = 0;
    double median_ms = 0.0;
};

/// Median offline-solver wall time per instance size.
std::vector<ScalePoint> measure_scaling(const std::vector<std::size_t>& sizes, int trials,
                                        std::uint64_t seed);

/// Figure of the instance before and after executing the trajectory:
/// coverage boxes for initial and final sensor positions with the
/// trajectory drawn between them as stacked horizontal passes.
std::string render_svg(const Instance& inst, const Trajectory& t,
                       const sim::SimulationReport& report);

}  // namespace barrier::harness

#endif
