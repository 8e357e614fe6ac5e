#ifndef BARRIER_TESTS_FIXTURES_HPP
#define BARRIER_TESTS_FIXTURES_HPP

// Shared instances used across the suites. fig1 reproduces the worked
// eight-sensor example whose balances are 0.2, -1.1, -0.2, -0.1, 0.2,
// 0.3, -0.8, 0.2; tiny and tri are small hand-checkable cases.

#include <random>
#include <vector>

#include "core.hpp"

namespace fixtures {

inline barrier::Instance fig1() {
    return barrier::validate_instance(8.0, 0.5, {0.3, 2.6, 2.7, 3.6, 4.3, 5.2, 7.3, 7.3});
}

inline barrier::Instance tiny() { return barrier::validate_instance(2.0, 0.5, {2.0, 2.0}); }

inline barrier::Instance tri() {
    return barrier::validate_instance(4.0, 0.5, {1.3, 1.3, 1.3, 3.5});
}

inline barrier::Instance single() { return barrier::validate_instance(2.0, 1.0, {1.0}); }

// Uniform random instance without going through the production generator,
// so generator bugs cannot hide library bugs.
inline barrier::Instance random_instance(std::mt19937_64& rng, std::size_t n_max = 10) {
    std::uniform_int_distribution<std::size_t> un(1, n_max);
    std::uniform_real_distribution<double> ur(0.2, 2.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::size_t n = un(rng);
    double r = ur(rng);
    double L = 2.0 * r * static_cast<double>(n) * (0.4 + 0.6 * u01(rng));
    std::vector<double> xs(n);
    for (auto& x : xs) x = L * u01(rng);
    std::sort(xs.begin(), xs.end());
    return barrier::validate_instance(L, r, std::move(xs));
}

}  // namespace fixtures

#endif
