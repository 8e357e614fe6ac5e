#ifndef BARRIER_ADVERSARY_HPP
#define BARRIER_ADVERSARY_HPP

/// \file
/// adversary.hpp: instance generators for the lower-bound constructions
/// (adaptive strategies that materialize sensors in response to the
/// robot's moves) plus the reproducible random generator feeding the
/// benchmark corpus.

#include <cstdint>
#include <memory>

#include "core.hpp"
#include "online.hpp"

namespace barrier::adversary {

struct AdversaryOutcome {
    Instance instance;             // the materialized input
    online::OnlineResult online;   // what the algorithm did against it
    double online_length = 0.0;    // simulated length of the online trajectory
    double offline_length = 0.0;   // optimal offline length on the instance
    double ratio = 0.0;
};

/// Known-length construction: gap-then-stack blocks repeated while the
/// robot keeps answering with triples, switching to an attached tail plus
/// one coverage-forcing final sensor once it declines. By default the
/// stack size k and range r are both cbrt(L). Throws degenerate_length
/// when fewer than two blocks fit.
AdversaryOutcome adversary_known_length(double L, const std::string& algo,
                                        double r = 0.0, int k = 0);

/// Unknown-length construction: a stack of i sensors at 2ir; attached
/// sensors afterwards; the barrier ends at y + r + delta as soon as the
/// robot first turns left at y, or at 12ir if it never turns.
AdversaryOutcome adversary_unknown_length(int i, double r, double delta,
                                          const std::string& algo);

/// Static worst case for a fixed switching point z on a barrier of length
/// L: a gap placed just out of the switch's reach so the triple is
/// forbidden, with everything after z (or before, in the z > 2L/3 branch)
/// resolvable only by the final double.
Instance adversary_fixed_switch(double z, double L, double r);

/// Reproducible uniform instance; with require_end_gap the right endpoint
/// of the barrier is guaranteed uncovered.
Instance gen_random_instance(std::size_t n, double L, double r, std::uint64_t seed,
                             bool require_end_gap);

/// Factories for plugging the adaptive strategies into an Environment
/// directly (used by the harness and tests).
std::unique_ptr<online::Adversary> make_known_length_adversary(double L, double r, int k);
std::unique_ptr<online::Adversary> make_unknown_length_adversary(int i, double r, double delta);

}  // namespace barrier::adversary

#endif
