#ifndef BARRIER_ORACLE_HPP
#define BARRIER_ORACLE_HPP

/// \file
/// oracle.hpp: independent brute-force optimal solver for small instances.
/// Enumerates every subset of sensor locations as candidate left turning
/// points (not only the pruned delimiter list), derives minimal right
/// turns, tries both straight and double endings, and keeps the shortest
/// candidate the simulator certifies as covering.

#include "core.hpp"

namespace barrier::oracle {

struct OracleResult {
    Trajectory trajectory;
    double length = 0.0;
    std::size_t triples = 0;
};

/// Exhaustive optimum. Throws errc::too_large when the instance has more
/// than max_n sensors.
OracleResult brute_force_optimal(const Instance& inst, std::size_t max_n = 12);

}  // namespace barrier::oracle

#endif
