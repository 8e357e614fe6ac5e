#ifndef BARRIER_SIM_HPP
#define BARRIER_SIM_HPP

/// \file
/// sim.hpp: executes a trajectory against an instance under the
/// early-pick-up / late-drop relocation policy (order-preserving, fully
/// stretched) and checks the structural properties optimal trajectories
/// must have: visit multiplicities and triple/double decomposition.

#include "core.hpp"

namespace barrier::sim {

struct SimulationReport {
    std::vector<double> final_positions;  // per sensor, index order
    double length = 0.0;                  // true simulated trajectory length
    int max_visits = 1;                   // max multiplicity of any point
    bool covered = false;
    bool order_preserved = false;
    int relocated = 0;     // sensors delivered to an attached position
    int left_in_place = 0; // sensors met but not deliverable (or already attached)
};

/// Runs the relocation policy over the trajectory. While traversing, the
/// robot picks up every sensor it meets that is not already at an attached
/// position and deposits sensors on the attached grid (2j-1)r; a sensor
/// whose grid point the trajectory never reaches after the first meeting
/// keeps its position. Sensor identities are assigned order-preservingly
/// over the resulting multiset of positions. Never throws on incomplete
/// coverage: the report carries covered=false instead.
SimulationReport execute_trajectory(const Instance& inst, const Trajectory& t);

struct VisitCounts {
    int max_interior = 1;   // max multiplicity over points other than the terminal
    int terminal_visits = 1;
};

/// Exact visit multiplicities from segment overlaps (no sampling). A turn
/// point counts as one visit, not two.
VisitCounts verify_three_visits(const Trajectory& t);

/// True iff the trajectory decomposes into triples and straight runs,
/// optionally ending in a single double: consecutive retraced intervals
/// are disjoint except at endpoints, and a trailing rightward run exits
/// the last retraced interval.
bool verify_shape(const Trajectory& t);

}  // namespace barrier::sim

#endif
