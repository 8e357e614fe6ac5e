#ifndef BARRIER_OFFLINE_HPP
#define BARRIER_OFFLINE_HPP

/// \file
/// offline.hpp: the linear-time optimal offline solver. Computes the list
/// of potential triple delimiters from coverage balances, the anchor point
/// of the final double (or straight finish), the overhead of each
/// triple-count choice, and emits the minimum-length trajectory.

#include "core.hpp"

namespace barrier::offline {

/// Pairs (b_i, a_i) of 1-based sensor indices. a_i are the potential left
/// turning points: sensors with balance strictly between -2r and 0, or
/// balance exactly -2r while collocated with the next sensor. b_i is the
/// first sensor with negative balance after a_{i-1} (after 0 for b_1).
struct DelimiterList {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t count() const { return pairs.size(); }
};

/// k: the last sensor the robot relocates; c: where the trajectory's final
/// rightward sweep must reach (terminal of a straight finish, left turn of
/// the final double). k is the smallest index such that putting sensors
/// 1..k in attached positions, with sensors k+1..n untouched, covers the
/// whole barrier. c = x_k when C_k < 0, else the attached position of k.
struct AnchorInfo {
    std::size_t k = 0;
    double c = 0.0;
};

DelimiterList potential_delimiters(const Instance& inst, const BalanceTable& bal);

/// Requires at least one gap.
AnchorInfo anchor_point(const Instance& inst, const BalanceTable& bal);

/// Overheads o_0..o_m: extra length of the trajectory using triples on the
/// first j delimiter pairs (and a final double when j < m) beyond the
/// straight line to c.
std::vector<double> overheads(const Instance& inst, const BalanceTable& bal,
                              const DelimiterList& delims, const AnchorInfo& anchor);

struct OfflineSolution {
    Trajectory trajectory;
    std::size_t triples = 0;     // number of triple segments used
    bool ends_with_double = false;
    AnchorInfo anchor;
};

/// The optimal trajectory: empty when the barrier is already covered,
/// otherwise the minimum-overhead member of the triples-then-double /
/// triples-then-straight family. Ties resolve toward fewer triples.
/// Runs in time linear in the number of sensors.
OfflineSolution solve_offline(const Instance& inst);

/// Convenience wrapper returning just the trajectory.
Trajectory solve(const Instance& inst);

}  // namespace barrier::offline

#endif
