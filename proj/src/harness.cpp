#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "adversary.hpp"
#include "offline.hpp"
#include "online.hpp"
#include "oracle.hpp"

namespace barrier::harness {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

BenchResult run_one(const Instance& inst, const std::string& algo, const std::string& id,
                    double offline_len) {
    BenchResult row;
    row.instance_id = id;
    row.algo = algo;
    row.n = inst.size();
    row.length = inst.length();
    row.range = inst.range();
    row.offline_len = offline_len;

    auto t0 = clock_type::now();
    online::Environment env(inst, algo != "triple-always");
    online::OnlineResult res = online::run_algorithm(env, algo);
    row.ms = ms_since(t0);

    sim::SimulationReport rep = sim::execute_trajectory(inst, res.trajectory);
    sim::VisitCounts visits = sim::verify_three_visits(res.trajectory);
    row.online_len = rep.length;
    row.ratio = offline_len > epsilon() ? rep.length / offline_len : 1.0;
    row.triples = res.triples;
    row.epochs = res.epochs;
    row.covered = rep.covered;
    row.max_interior_visits = visits.max_interior;
    row.terminal_visits = visits.terminal_visits;
    row.max_walk_drift = res.max_walk_drift;
    return row;
}

}  // namespace

double ratio_ceiling(const std::string& algo) {
    if (algo == "adaptive") return 1.25;
    if (algo == "triple-always") return 1.5;
    if (algo == "fixed-switch") return 4.0 / 3.0;
    return std::numeric_limits<double>::infinity();
}

std::vector<BenchResult> bench_competitive(const BenchConfig& config) {
    std::vector<BenchResult> rows;
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> urange(0.3, 2.0);
    std::uniform_real_distribution<double> uscale(0.55, 1.0);
    std::uniform_int_distribution<std::size_t> un(config.n_min, config.n_max);

    for (std::size_t i = 0; i < config.random_instances; ++i) {
        std::size_t n = un(rng);
        double r = urange(rng);
        double L = 2.0 * r * static_cast<double>(n) * uscale(rng);
        std::uint64_t inst_seed = rng();
        Instance inst = adversary::gen_random_instance(n, L, r, inst_seed, true);
        if (compute_gaps(inst).empty()) continue;  // corpus keeps only end-gap instances
        double off = trajectory_length(offline::solve(inst));
        std::string id = "rnd-" + std::to_string(inst_seed);
        for (const auto& algo : config.algos) rows.push_back(run_one(inst, algo, id, off));
    }

    if (config.include_adversaries) {
        // The known-length adversary adapts to whichever algorithm it plays
        // against, so each algorithm gets its own materialized instance.
        for (const auto& algo : config.algos) {
            auto out = adversary::adversary_known_length(config.known_adv_length, algo);
            rows.push_back(run_one(out.instance, algo, "adv-known", out.offline_length));
        }
        // The unknown-length construction targets the unknown-length
        // algorithm; the materialized instance then replays for everyone.
        auto unknown = adversary::adversary_unknown_length(
            config.unknown_adv_stack, config.unknown_adv_range, config.unknown_adv_delta,
            "triple-always");
        for (const auto& algo : config.algos)
            rows.push_back(run_one(unknown.instance, algo, "adv-unknown",
                                   unknown.offline_length));
        Instance fixed = adversary::adversary_fixed_switch(2.0 * config.fixed_adv_length / 3.0,
                                                           config.fixed_adv_length,
                                                           config.fixed_adv_range);
        double fixed_off = trajectory_length(offline::solve(fixed));
        for (const auto& algo : config.algos)
            rows.push_back(run_one(fixed, algo, "adv-fixed-switch", fixed_off));
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchResult>& results) {
    std::ostringstream out;
    out.precision(17);
    out << "instance_id,algo,n,L,r,online_len,offline_len,ratio,triples,epochs,ms\n";
    for (const auto& r : results) {
        out << r.instance_id << ',' << r.algo << ',' << r.n << ',' << r.length << ',' << r.range
            << ',' << r.online_len << ',' << r.offline_len << ',' << r.ratio << ',' << r.triples
            << ',' << r.epochs << ',' << r.ms << '\n';
    }
    return out.str();
}

std::vector<BenchResult> bench_from_csv(const std::string& csv) {
    std::vector<BenchResult> rows;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream ls(line);
        std::string field;
        BenchResult r;
        auto next = [&]() {
            if (!std::getline(ls, field, ',')) throw error(errc::parse_error, "truncated CSV row");
            return field;
        };
        r.instance_id = next();
        r.algo = next();
        r.n = std::stoull(next());
        r.length = std::stod(next());
        r.range = std::stod(next());
        r.online_len = std::stod(next());
        r.offline_len = std::stod(next());
        r.ratio = std::stod(next());
        r.triples = std::stoull(next());
        r.epochs = std::stoull(next());
        r.ms = std::stod(next());
        rows.push_back(r);
    }
    return rows;
}

std::vector<ScalePoint> measure_scaling(const std::vector<std::size_t>& sizes, int trials,
                                        std::uint64_t seed) {
    std::vector<ScalePoint> points;
    for (std::size_t n : sizes) {
        double r = 1.0;
        double L = 1.8 * static_cast<double>(n);  // comfortably feasible
        std::vector<double> times;
        for (int t = 0; t < trials; ++t) {
            Instance inst = adversary::gen_random_instance(n, L, r, seed + t, false);
            auto t0 = clock_type::now();
            offline::OfflineSolution sol = offline::solve_offline(inst);
            double ms = ms_since(t0);
            (void)sol;
            times.push_back(ms);
        }
        std::sort(times.begin(), times.end());
        points.push_back({n, times[times.size() / 2]});
    }
    return points;
}

namespace {

struct SvgScale {
    double x0, span, width, margin;
    double px(double x) const { return margin + (x - x0) / span * (width - 2 * margin); }
};

void coverage_row(std::ostringstream& svg, const SvgScale& s, const std::vector<double>& xs,
                  double r, double y, const char* fill) {
    for (double x : xs) {
        double lo = s.px(x - r);
        double wd = s.px(x + r) - lo;
        svg << "<rect x=\"" << lo << "\" y=\"" << y << "\" width=\"" << wd
            << "\" height=\"14\" fill=\"" << fill
            << "\" fill-opacity=\"0.45\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
        double cx = s.px(x);
        svg << "<circle cx=\"" << cx << "\" cy=\"" << y + 7 << "\" r=\"2\" fill=\"#111\"/>\n";
    }
}

}  // namespace

std::string render_svg(const Instance& inst, const Trajectory& t,
                       const sim::SimulationReport& report) {
    std::vector<double> pts = t.points();
    double x_min = 0.0, x_max = inst.length();
    for (double p : pts) {
        x_min = std::min(x_min, p);
        x_max = std::max(x_max, p);
    }
    for (double p : report.final_positions) x_max = std::max(x_max, p + inst.range());

    const double width = 900.0, margin = 40.0;
    SvgScale s{x_min, std::max(x_max - x_min, 1e-9), width, margin};
    std::size_t segments = t.segment_count();
    double traj_h = 16.0 * static_cast<double>(std::max<std::size_t>(segments, 1));
    double height = 40 + 24 + traj_h + 24 + 60;

    std::ostringstream svg;
    svg.precision(10);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

    // barrier axis helper
    auto axis = [&](double y) {
        svg << "<line x1=\"" << s.px(0) << "\" y1=\"" << y << "\" x2=\"" << s.px(inst.length())
            << "\" y2=\"" << y << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    };

    double y = 20;
    svg << "<text x=\"" << margin << "\" y=\"" << y - 6 << "\" font-size=\"11\">initial</text>\n";
    coverage_row(svg, s, inst.positions(), inst.range(), y, "#7aa6d6");
    axis(y + 14);
    y += 40;

    if (t.empty()) {
        svg << "<text x=\"" << margin << "\" y=\"" << y + 10
            << "\" font-size=\"12\">no action: barrier already covered</text>\n";
    } else {
        svg << "<text x=\"" << margin << "\" y=\"" << y - 2
            << "\" font-size=\"11\">trajectory</text>\n";
        for (std::size_t i = 1; i < pts.size(); ++i) {
            double yy = y + 16.0 * static_cast<double>(i - 1) + 8;
            double xa = s.px(pts[i - 1]);
            double xb = s.px(pts[i]);
            svg << "<line class=\"pass\" x1=\"" << xa << "\" y1=\"" << yy << "\" x2=\"" << xb
                << "\" y2=\"" << yy << "\" stroke=\"" << (i % 2 ? "#c0392b" : "#27ae60")
                << "\" stroke-width=\"2\"/>\n";
            // turn marker: a tick where the robot reverses
            svg << "<circle cx=\"" << xb << "\" cy=\"" << yy << "\" r=\"2.5\" fill=\"#c0392b\"/>\n";
            if (i + 1 < pts.size()) {
                double yn = yy + 16.0;
                svg << "<line x1=\"" << xb << "\" y1=\"" << yy << "\" x2=\"" << xb << "\" y2=\""
                    << yn << "\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"2,2\"/>\n";
            }
        }
        y += traj_h + 8;
    }
    y += 24;

    svg << "<text x=\"" << margin << "\" y=\"" << y - 6 << "\" font-size=\"11\">final ("
        << (report.covered ? "covered" : "NOT covered") << ", length " << report.length
        << ")</text>\n";
    coverage_row(svg, s, report.final_positions, inst.range(), y, "#8fd18f");
    axis(y + 14);

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace barrier::harness
