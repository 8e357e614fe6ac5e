#include "core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace barrier {

namespace {
std::atomic<double> g_epsilon{1e-9};
}

double epsilon() { return g_epsilon.load(std::memory_order_relaxed); }

void set_epsilon(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw error(errc::invalid_argument, "epsilon must be a positive finite number");
    g_epsilon.store(eps, std::memory_order_relaxed);
}

Instance::Instance(double length, double range, std::vector<double> positions)
    : length_(length), range_(range), positions_(std::move(positions)) {}

Instance validate_instance(double length, double range, std::vector<double> positions) {
    if (!std::isfinite(length) || length <= epsilon())
        throw error(errc::invalid_argument, "barrier length must be positive");
    if (!std::isfinite(range) || range <= epsilon())
        throw error(errc::non_positive_range, "sensor range must be positive");
    if (positions.empty())
        throw error(errc::infeasible_coverage, "instance needs at least one sensor");
    for (double x : positions) {
        if (!std::isfinite(x))
            throw error(errc::position_out_of_range, "sensor position is not finite");
        if (x < -epsilon() || x > length + epsilon())
            throw error(errc::position_out_of_range,
                        "sensor position " + std::to_string(x) + " outside [0, " +
                            std::to_string(length) + "]");
    }
    if (!std::is_sorted(positions.begin(), positions.end()))
        std::sort(positions.begin(), positions.end());
    double capacity = 2.0 * range * static_cast<double>(positions.size());
    if (capacity < length - epsilon())
        throw error(errc::infeasible_coverage,
                    "total sensor range " + std::to_string(capacity) +
                        " cannot cover barrier of length " + std::to_string(length));
    return Instance(length, range, std::move(positions));
}

std::vector<Gap> compute_gaps(double length, double range, const std::vector<double>& positions) {
    std::vector<Gap> gaps;
    double edge = 0.0;  // [0, edge] is covered so far
    for (double x : positions) {
        double lo = x - range;
        double hi = x + range;
        if (hi <= edge) continue;
        if (lo > edge + epsilon() && edge < length - epsilon()) {
            double gap_hi = std::min(lo, length);
            if (gap_hi - edge > epsilon()) gaps.push_back({edge, gap_hi});
        }
        edge = std::max(edge, hi);
        if (edge >= length) break;
    }
    if (edge < length - epsilon()) gaps.push_back({edge, length});
    return gaps;
}

std::vector<Gap> compute_gaps(const Instance& inst) {
    return compute_gaps(inst.length(), inst.range(), inst.positions());
}

BalanceTable coverage_balances(const Instance& inst) {
    BalanceTable table;
    table.values.reserve(inst.size());
    for (std::size_t i = 1; i <= inst.size(); ++i)
        table.values.push_back(inst.attached(i) - inst.positions()[i - 1]);
    return table;
}

Trajectory::Trajectory(double start, std::vector<double> turns, double terminal)
    : start_(start), turns_(std::move(turns)), terminal_(terminal) {
    validate();
}

Trajectory Trajectory::from_points(const std::vector<double>& pts) {
    if (pts.empty()) throw error(errc::invalid_argument, "trajectory needs at least one point");
    // Coalesce zero-length segments and merge runs that keep moving the
    // same way, so callers can emit turn points without degeneracy checks.
    std::vector<double> clean;
    clean.push_back(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double p = pts[i];
        if (std::abs(p - clean.back()) <= epsilon()) continue;
        if (clean.size() >= 2) {
            double prev_dir = clean.back() - clean[clean.size() - 2];
            double dir = p - clean.back();
            if ((prev_dir > 0) == (dir > 0)) {
                clean.back() = p;  // same direction, extend the segment
                continue;
            }
        }
        clean.push_back(p);
    }
    if (clean.size() == 1) return Trajectory(clean[0], {}, clean[0]);
    std::vector<double> turns(clean.begin() + 1, clean.end() - 1);
    return Trajectory(clean.front(), std::move(turns), clean.back());
}

void Trajectory::validate() const {
    std::vector<double> pts = points();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        bool rightward = (i % 2 == 1);  // odd steps move right
        if (rightward && !(pts[i] > pts[i - 1]))
            throw error(errc::invalid_argument, "trajectory must alternate strictly (right move expected)");
        if (!rightward && !(pts[i] < pts[i - 1]))
            throw error(errc::invalid_argument, "trajectory must alternate strictly (left move expected)");
    }
    for (double p : pts) {
        if (!std::isfinite(p) || p < -epsilon())
            throw error(errc::invalid_argument, "trajectory point out of range");
    }
}

std::vector<double> Trajectory::points() const {
    std::vector<double> pts;
    pts.reserve(turns_.size() + 2);
    pts.push_back(start_);
    if (empty()) return pts;
    for (double t : turns_) pts.push_back(t);
    pts.push_back(terminal_);
    return pts;
}

double trajectory_length(const Trajectory& t) {
    std::vector<double> pts = t.points();
    double total = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) total += std::abs(pts[i] - pts[i - 1]);
    return total;
}

}  // namespace barrier
