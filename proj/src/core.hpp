#ifndef BARRIER_CORE_HPP
#define BARRIER_CORE_HPP

/// \file
/// core.hpp: problem data model for barrier coverage restoration on a line
/// segment -- instances, gaps, coverage balances, robot trajectories and
/// their length arithmetic. Everything here is immutable after construction
/// and safe to share across threads.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace barrier {

enum class errc {
    none = 0,
    invalid_argument,
    non_positive_range,
    infeasible_coverage,
    position_out_of_range,
    too_large,
    degenerate_length,
    parse_error,
    io_error,
    internal,
};

/// Domain error carrying a machine-readable code next to the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

/// Absolute tolerance used by every sign/equality test in the library.
/// Set once at startup (CLI flag --epsilon); defaults to 1e-9.
double epsilon();
void set_epsilon(double eps);

inline bool approx_eq(double a, double b) { return std::abs(a - b) <= epsilon(); }
inline bool definitely_lt(double a, double b) { return a < b - epsilon(); }
inline bool definitely_gt(double a, double b) { return a > b + epsilon(); }
inline bool leq(double a, double b) { return a <= b + epsilon(); }
inline bool geq(double a, double b) { return a >= b - epsilon(); }

/// A validated problem instance: barrier [0, L], n sensors of identical
/// range r at sorted positions x_1 <= ... <= x_n, with 2rn >= L so that
/// complete coverage is achievable.
class Instance {
public:
    Instance(double length, double range, std::vector<double> positions);

    double length() const { return length_; }
    double range() const { return range_; }
    const std::vector<double>& positions() const { return positions_; }
    std::size_t size() const { return positions_.size(); }

    /// Attached position of sensor i (1-based): (2i-1)r. Sensors placed at
    /// consecutive attached positions leave no slack and no overlap.
    double attached(std::size_t i) const { return 2.0 * range_ * static_cast<double>(i) - range_; }

private:
    double length_;
    double range_;
    std::vector<double> positions_;
};

/// Maximal closed subinterval of [0, L] out of range of every sensor.
struct Gap {
    double lo;
    double hi;
    double width() const { return hi - lo; }
};

/// Coverage balances C_i = (2ri - r) - x_i. A negative balance means the
/// sensor sits right of its attached position and must move left for the
/// prefix to be fully stretched.
struct BalanceTable {
    std::vector<double> values;  // 1-based sensor i lives at values[i-1]
};

/// Robot trajectory: start t_0, alternating turn points t_1..t_{m-1}
/// (odd index = left turn at a local maximum, even = right turn), and the
/// termination point t_m. An empty trajectory (no turns, terminal == start)
/// is the answer for an already covered barrier.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(double start, std::vector<double> turns, double terminal);

    /// Builds from the flat point list [t_0, t_1, ..., t_m], coalescing
    /// zero-length segments. One point means the empty trajectory.
    static Trajectory from_points(const std::vector<double>& pts);

    double start() const { return start_; }
    const std::vector<double>& turns() const { return turns_; }
    double terminal() const { return terminal_; }
    bool empty() const { return turns_.empty() && approx_eq(start_, terminal_); }

    /// Flat view [t_0, ..., t_m].
    std::vector<double> points() const;
    std::size_t segment_count() const { return empty() ? 0 : turns_.size() + 1; }

private:
    void validate() const;

    double start_ = 0.0;
    std::vector<double> turns_;
    double terminal_ = 0.0;
};

/// Validates a raw candidate instance. Unsorted positions are sorted;
/// duplicates (collocated sensors) are fine. Errors: non_positive_range,
/// infeasible_coverage (2rn < L), position_out_of_range.
Instance validate_instance(double length, double range, std::vector<double> positions);

/// Maximal uncovered closed subintervals of [0, L], left to right.
/// Empty result means complete coverage. Gaps of width <= epsilon are
/// treated as covered and discarded.
std::vector<Gap> compute_gaps(const Instance& inst);

/// Gap computation over an arbitrary sensor configuration (used on final
/// positions produced by the simulator, which may sit slightly beyond L).
std::vector<Gap> compute_gaps(double length, double range, const std::vector<double>& positions);

BalanceTable coverage_balances(const Instance& inst);

/// Sum of segment lengths; 0 for the empty trajectory.
double trajectory_length(const Trajectory& t);

}  // namespace barrier

#endif
