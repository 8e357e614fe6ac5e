// C interface over the C++ core: opaque handles, error codes, and a
// thread-local message for the last failure.

#include "barrier/barrier.h"

#include <cstring>
#include <string>

#include "adversary.hpp"
#include "core.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "offline.hpp"
#include "online.hpp"
#include "oracle.hpp"
#include "sim.hpp"

using namespace barrier;

struct bc_instance {
    Instance value;
};
struct bc_trajectory {
    Trajectory value;
};
struct bc_report {
    sim::SimulationReport value;
};
struct bc_online_run {
    online::OnlineResult value;
    bc_trajectory trajectory;
};

namespace {

thread_local std::string g_last_error;

bc_status status_of(errc code) {
    switch (code) {
        case errc::none: return BC_OK;
        case errc::invalid_argument: return BC_ERR_INVALID_ARGUMENT;
        case errc::non_positive_range: return BC_ERR_NONPOSITIVE_RANGE;
        case errc::infeasible_coverage: return BC_ERR_INFEASIBLE_COVERAGE;
        case errc::position_out_of_range: return BC_ERR_POSITION_OUT_OF_RANGE;
        case errc::too_large: return BC_ERR_TOO_LARGE;
        case errc::degenerate_length: return BC_ERR_DEGENERATE_LENGTH;
        case errc::parse_error: return BC_ERR_PARSE;
        case errc::io_error: return BC_ERR_IO;
        case errc::internal: return BC_ERR_INTERNAL;
    }
    return BC_ERR_INTERNAL;
}

template <typename F>
bc_status guarded(F&& f) {
    try {
        f();
        return BC_OK;
    } catch (const error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return BC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bc_status require(bool ok, const char* message) {
    if (ok) return BC_OK;
    g_last_error = message;
    return BC_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* bc_last_error_message(void) { return g_last_error.c_str(); }

void bc_string_free(char* s) { std::free(s); }

double bc_epsilon(void) { return epsilon(); }

bc_status bc_set_epsilon(double eps) {
    return guarded([&] { set_epsilon(eps); });
}

bc_status bc_instance_create(double length, double range, const double* positions, size_t n,
                             bc_instance** out) {
    if (bc_status s = require(out && (positions || n == 0), "null argument"); s != BC_OK) return s;
    return guarded([&] {
        std::vector<double> xs(positions, positions + n);
        *out = new bc_instance{validate_instance(length, range, std::move(xs))};
    });
}

bc_status bc_instance_from_json(const char* text, bc_instance** out) {
    if (bc_status s = require(text && out, "null argument"); s != BC_OK) return s;
    return guarded([&] { *out = new bc_instance{io::instance_from_json(text)}; });
}

bc_status bc_instance_to_json(const bc_instance* inst, char** out) {
    if (bc_status s = require(inst && out, "null argument"); s != BC_OK) return s;
    return guarded([&] { *out = dup_string(io::instance_to_json(inst->value)); });
}

void bc_instance_free(bc_instance* inst) { delete inst; }

size_t bc_instance_size(const bc_instance* inst) { return inst ? inst->value.size() : 0; }

double bc_instance_length(const bc_instance* inst) { return inst ? inst->value.length() : 0.0; }

double bc_instance_range(const bc_instance* inst) { return inst ? inst->value.range() : 0.0; }

size_t bc_instance_positions(const bc_instance* inst, double* buf, size_t capacity) {
    if (!inst) return 0;
    const auto& xs = inst->value.positions();
    if (buf) {
        size_t m = std::min(capacity, xs.size());
        std::memcpy(buf, xs.data(), m * sizeof(double));
    }
    return xs.size();
}

size_t bc_compute_gaps(const bc_instance* inst, double* lohi, size_t capacity) {
    if (!inst) return 0;
    auto gaps = compute_gaps(inst->value);
    if (lohi) {
        size_t m = std::min(capacity, gaps.size());
        for (size_t i = 0; i < m; ++i) {
            lohi[2 * i] = gaps[i].lo;
            lohi[2 * i + 1] = gaps[i].hi;
        }
    }
    return gaps.size();
}

bc_status bc_coverage_balances(const bc_instance* inst, double* buf) {
    if (bc_status s = require(inst && buf, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        BalanceTable t = coverage_balances(inst->value);
        std::memcpy(buf, t.values.data(), t.values.size() * sizeof(double));
    });
}

bc_status bc_trajectory_create(const double* points, size_t n, bc_trajectory** out) {
    if (bc_status s = require(points && n > 0 && out, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        std::vector<double> pts(points, points + n);
        *out = new bc_trajectory{Trajectory::from_points(pts)};
    });
}

bc_status bc_trajectory_from_json(const char* text, bc_trajectory** out) {
    if (bc_status s = require(text && out, "null argument"); s != BC_OK) return s;
    return guarded([&] { *out = new bc_trajectory{io::trajectory_from_json(text)}; });
}

bc_status bc_trajectory_to_json(const bc_trajectory* t, char** out) {
    if (bc_status s = require(t && out, "null argument"); s != BC_OK) return s;
    return guarded([&] { *out = dup_string(io::trajectory_to_json(t->value)); });
}

void bc_trajectory_free(bc_trajectory* t) { delete t; }

double bc_trajectory_length(const bc_trajectory* t) {
    return t ? trajectory_length(t->value) : 0.0;
}

size_t bc_trajectory_points(const bc_trajectory* t, double* buf, size_t capacity) {
    if (!t) return 0;
    auto pts = t->value.points();
    if (buf) {
        size_t m = std::min(capacity, pts.size());
        std::memcpy(buf, pts.data(), m * sizeof(double));
    }
    return pts.size();
}

bc_status bc_solve_offline(const bc_instance* inst, bc_trajectory** out) {
    if (bc_status s = require(inst && out, "null argument"); s != BC_OK) return s;
    return guarded([&] { *out = new bc_trajectory{offline::solve(inst->value)}; });
}

bc_status bc_solve_online(const bc_instance* inst, const char* algo, int hide_length,
                          double switch_point, bc_online_run** out) {
    if (bc_status s = require(inst && algo && out, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        online::Environment env(inst->value, hide_length == 0);
        std::optional<double> z;
        if (switch_point >= 0) z = switch_point;
        online::OnlineResult res = online::run_algorithm(env, algo, z);
        auto* run = new bc_online_run{res, bc_trajectory{res.trajectory}};
        *out = run;
    });
}

void bc_online_run_free(bc_online_run* run) { delete run; }

const bc_trajectory* bc_online_run_trajectory(const bc_online_run* run) {
    return run ? &run->trajectory : nullptr;
}

size_t bc_online_run_triples(const bc_online_run* run) { return run ? run->value.triples : 0; }

size_t bc_online_run_epochs(const bc_online_run* run) { return run ? run->value.epochs : 0; }

double bc_online_run_walk_drift(const bc_online_run* run) {
    return run ? run->value.max_walk_drift : 0.0;
}

bc_status bc_oracle_optimal(const bc_instance* inst, size_t max_n, bc_trajectory** out) {
    if (bc_status s = require(inst && out, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        auto res = oracle::brute_force_optimal(inst->value, max_n == 0 ? 12 : max_n);
        *out = new bc_trajectory{res.trajectory};
    });
}

bc_status bc_execute_trajectory(const bc_instance* inst, const bc_trajectory* t,
                                bc_report** out) {
    if (bc_status s = require(inst && t && out, "null argument"); s != BC_OK) return s;
    return guarded([&] { *out = new bc_report{sim::execute_trajectory(inst->value, t->value)}; });
}

void bc_report_free(bc_report* rep) { delete rep; }

int bc_report_covered(const bc_report* rep) { return rep && rep->value.covered ? 1 : 0; }

int bc_report_order_preserved(const bc_report* rep) {
    return rep && rep->value.order_preserved ? 1 : 0;
}

double bc_report_length(const bc_report* rep) { return rep ? rep->value.length : 0.0; }

int bc_report_max_visits(const bc_report* rep) { return rep ? rep->value.max_visits : 0; }

size_t bc_report_final_positions(const bc_report* rep, double* buf, size_t capacity) {
    if (!rep) return 0;
    const auto& xs = rep->value.final_positions;
    if (buf) {
        size_t m = std::min(capacity, xs.size());
        std::memcpy(buf, xs.data(), m * sizeof(double));
    }
    return xs.size();
}

bc_status bc_verify_three_visits(const bc_trajectory* t, int* max_interior,
                                 int* terminal_visits) {
    if (bc_status s = require(t && max_interior && terminal_visits, "null argument"); s != BC_OK)
        return s;
    return guarded([&] {
        sim::VisitCounts v = sim::verify_three_visits(t->value);
        *max_interior = v.max_interior;
        *terminal_visits = v.terminal_visits;
    });
}

int bc_verify_shape(const bc_trajectory* t) {
    return t && sim::verify_shape(t->value) ? 1 : 0;
}

bc_status bc_gen_random_instance(size_t n, double length, double range, uint64_t seed,
                                 int require_end_gap, bc_instance** out) {
    if (bc_status s = require(out != nullptr, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        *out = new bc_instance{
            adversary::gen_random_instance(n, length, range, seed, require_end_gap != 0)};
    });
}

bc_status bc_adversary_known_length(double length, const char* algo, bc_instance** out,
                                    double* ratio) {
    if (bc_status s = require(algo && out, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        auto res = adversary::adversary_known_length(length, algo);
        *out = new bc_instance{res.instance};
        if (ratio) *ratio = res.ratio;
    });
}

bc_status bc_adversary_unknown_length(int stack, double range, double delta, const char* algo,
                                      bc_instance** out, double* ratio) {
    if (bc_status s = require(algo && out, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        auto res = adversary::adversary_unknown_length(stack, range, delta, algo);
        *out = new bc_instance{res.instance};
        if (ratio) *ratio = res.ratio;
    });
}

bc_status bc_adversary_fixed_switch(double switch_point, double length, double range,
                                    bc_instance** out) {
    if (bc_status s = require(out != nullptr, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        *out = new bc_instance{adversary::adversary_fixed_switch(switch_point, length, range)};
    });
}

bc_status bc_bench_competitive(size_t random_instances, uint64_t seed, char** csv_out,
                               double* max_ratio_out) {
    if (bc_status s = require(csv_out != nullptr, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        harness::BenchConfig config;
        config.random_instances = random_instances;
        config.seed = seed;
        auto rows = harness::bench_competitive(config);
        *csv_out = dup_string(harness::bench_csv(rows));
        if (max_ratio_out) {
            double worst = 0.0;
            for (const auto& r : rows) worst = std::max(worst, r.ratio);
            *max_ratio_out = worst;
        }
    });
}

bc_status bc_measure_scaling(const size_t* sizes, size_t count, int trials, uint64_t seed,
                             char** csv_out) {
    if (bc_status s = require(sizes && count > 0 && csv_out, "null argument"); s != BC_OK)
        return s;
    return guarded([&] {
        std::vector<std::size_t> ns(sizes, sizes + count);
        auto points = harness::measure_scaling(ns, trials, seed);
        std::string csv = "n,median_ms\n";
        for (const auto& p : points)
            csv += std::to_string(p.n) + "," + std::to_string(p.median_ms) + "\n";
        *csv_out = dup_string(csv);
    });
}

bc_status bc_render_svg(const bc_instance* inst, const bc_trajectory* t, char** svg_out) {
    if (bc_status s = require(inst && t && svg_out, "null argument"); s != BC_OK) return s;
    return guarded([&] {
        sim::SimulationReport rep = sim::execute_trajectory(inst->value, t->value);
        *svg_out = dup_string(harness::render_svg(inst->value, t->value, rep));
    });
}

}  // extern "C"
