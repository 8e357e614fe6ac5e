#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "offline.hpp"
#include "sim.hpp"

namespace barrier::oracle {

namespace {

// Point list for one subset of left-turn indices. The right turn of each
// block dips just far enough left to fix the first pending deficit; the
// trajectory ends straight at c or with a double anchored at c. Returns
// false when a block has no pending deficit (the turn would be pointless
// and a smaller subset covers that shape).
bool build_candidate(const Instance& inst, const BalanceTable& bal,
                     const std::vector<std::size_t>& left_turns, bool end_with_double,
                     double c, std::vector<double>& pts, std::size_t& triples) {
    pts.clear();
    pts.push_back(0.0);
    auto first_deficit_after = [&](std::size_t idx) -> std::size_t {
        for (std::size_t j = idx + 1; j <= inst.size(); ++j)
            if (bal.values[j - 1] < -epsilon()) return j;
        return 0;
    };

    triples = 0;
    std::size_t resolved_upto = 0;
    for (std::size_t a : left_turns) {
        std::size_t d = first_deficit_after(resolved_upto);
        if (d == 0 || d > a) return false;
        pts.push_back(inst.positions()[a - 1]);
        pts.push_back(inst.attached(d));
        resolved_upto = a;
        ++triples;
    }

    std::size_t pending = first_deficit_after(resolved_upto);
    if (end_with_double) {
        if (pending == 0) return false;
        pts.push_back(c);
        pts.push_back(inst.attached(pending));
    } else {
        pts.push_back(c);
    }
    return true;
}

}  // namespace

OracleResult brute_force_optimal(const Instance& inst, std::size_t max_n) {
    const std::size_t n = inst.size();
    if (n > max_n)
        throw error(errc::too_large, "oracle limited to " + std::to_string(max_n) +
                                         " sensors, instance has " + std::to_string(n));

    OracleResult best;
    if (compute_gaps(inst).empty()) return best;  // empty trajectory, length 0

    BalanceTable bal = coverage_balances(inst);
    offline::AnchorInfo anchor = offline::anchor_point(inst, bal);

    best.length = std::numeric_limits<double>::infinity();
    std::vector<double> pts;
    std::vector<std::size_t> subset;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        subset.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) subset.push_back(i + 1);
        for (bool with_double : {false, true}) {
            std::size_t triples = 0;
            if (!build_candidate(inst, bal, subset, with_double, anchor.c, pts, triples)) continue;
            // Monotonicity violations in the raw point list (a left turn at
            // or left of the previous right turn) coalesce away; anything
            // still incoherent is rejected by the simulator's coverage check.
            Trajectory traj;
            try {
                traj = Trajectory::from_points(pts);
            } catch (const error&) {
                continue;
            }
            sim::SimulationReport report = sim::execute_trajectory(inst, traj);
            if (!report.covered) continue;
            double len = report.length;
            bool better = len < best.length - epsilon() ||
                          (std::abs(len - best.length) <= epsilon() && triples < best.triples);
            if (better) {
                best.trajectory = traj;
                best.length = len;
                best.triples = triples;
            }
        }
    }
    if (!std::isfinite(best.length))
        throw error(errc::internal, "oracle found no covering trajectory");
    return best;
}

}  // namespace barrier::oracle
