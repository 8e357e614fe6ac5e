#ifndef BARRIER_ONLINE_HPP
#define BARRIER_ONLINE_HPP

/// \file
/// online.hpp: progressive-revelation environment and the three online
/// relocation algorithms. A robot discovers sensors only at positions it
/// has reached; adversaries may materialize the instance lazily in
/// response to the robot's moves.

#include <memory>
#include <optional>

#include "core.hpp"

namespace barrier::online {

struct SensorStack {
    double position = 0.0;
    int count = 0;
};

/// Strategy interface for adaptive instance construction. Commitments are
/// monotone: once a stack or the barrier end has been revealed it never
/// changes.
class Adversary {
public:
    virtual ~Adversary() = default;
    virtual double range() const = 0;
    /// Barrier length when the model discloses it to the robot.
    virtual std::optional<double> disclosed_length() const = 0;
    /// Next sensor stack strictly beyond `from`, if the adversary commits
    /// one before the (possibly still undetermined) barrier end.
    virtual std::optional<SensorStack> next_stack(double from) = 0;
    /// The barrier end, if committed by the time the robot stands at
    /// `prospective_frontier`.
    virtual std::optional<double> committed_end(double prospective_frontier) = 0;
    virtual void on_left_turn(double y) = 0;
    /// Full instance; only valid once the end has been committed.
    virtual Instance materialize() const = 0;
};

/// The robot's window onto the world. Sensors at one position are revealed
/// together with multiplicity; queries never look beyond the frontier.
class Environment {
public:
    Environment(Instance inst, bool disclose_length);
    Environment(std::unique_ptr<Adversary> adversary);

    double range() const { return range_; }
    double frontier() const { return frontier_; }

    /// Barrier end as far as the robot can know it: the disclosed length,
    /// or, in the unknown-length model, the end once the frontier is
    /// within sensing range of it.
    std::optional<double> known_end() const;

    struct Advance {
        double reached = 0.0;
        std::optional<SensorStack> stack;  // revealed exactly at `reached`
        bool at_end = false;
    };

    /// Extends the frontier rightward toward `target`, stopping at the
    /// first newly revealed sensor position or at the barrier end.
    Advance advance(double target);

    void note_left_turn(double y);

    const std::vector<SensorStack>& revealed() const { return revealed_; }

    Instance materialize() const;

private:
    std::optional<double> physical_end(double prospective) const;

    std::optional<Instance> scripted_;
    std::unique_ptr<Adversary> adversary_;
    double range_ = 0.0;
    bool disclose_length_ = false;
    double frontier_;
    std::vector<SensorStack> revealed_;
};

/// Per-run diagnostics shared by all three algorithms.
struct OnlineResult {
    Trajectory trajectory;
    std::size_t triples = 0;
    std::size_t epochs = 0;             // adaptive: epoch activations
    double max_walk_drift = 0.0;        // |(odometer - position)| change across walks
    std::vector<double> guard_ratios;   // trajectory/distance ratio at recursion points
    std::vector<double> epoch_origins;
    std::vector<double> betas;          // ratio at each potential right-turning point
    std::vector<double> gammas;         // ratio after each prospective triple
};

/// Known-length adaptive algorithm: triples while the projected detour
/// stays profitable, restarts its accounting whenever the ratio of
/// trajectory to distance drops to 2.5, finishes with one double.
OnlineResult adaptive_online(Environment& env);

/// Unknown-length algorithm: covers every gap with a triple from the first
/// potential left-turning point; a double only when the barrier end
/// arrives mid-deficit.
OnlineResult triple_always(Environment& env);

/// Known-length algorithm with a fixed switching point z (default 2L/3):
/// triples at left-turning points up to z, one final double afterwards.
OnlineResult fixed_switch(Environment& env, std::optional<double> switch_point = std::nullopt);

/// Degenerate baseline that never does a triple: sweeps right and finishes
/// with one double. Used by adversary experiments.
OnlineResult greedy_double(Environment& env);

/// Dispatch by name: "adaptive", "triple-always", "fixed-switch",
/// "greedy-double".
OnlineResult run_algorithm(Environment& env, const std::string& name,
                           std::optional<double> switch_point = std::nullopt);

/// Diagnostic probes for the two walks, run from the barrier start on a
/// fresh environment.
struct SurplusProbe {
    bool gap_found = false;  // false: coverage committed to the end
    double x = 0.0;          // potential right-turning point, or halt position
};
SurplusProbe probe_surplus_walk(Environment& env);

struct DeficitProbe {
    bool qualifying = false;  // false: barrier end reached first
    double y = 0.0;           // potential left-turning point, or end position
};
/// Surplus walk to the first gap, then the deficit walk.
DeficitProbe probe_deficit_walk(Environment& env);

}  // namespace barrier::online

#endif
