#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "offline.hpp"
#include "online.hpp"
#include "sim.hpp"

using namespace barrier;

namespace {

std::vector<double> run_points(const Instance& inst, const std::string& algo,
                               bool hide_length = false) {
    online::Environment env(inst, !hide_length);
    return online::run_algorithm(env, algo).trajectory.points();
}

void check_points(const std::vector<double>& got, const std::vector<double>& want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-9));
}

double ratio_of(const Instance& inst, const std::string& algo, bool hide_length = false) {
    online::Environment env(inst, !hide_length);
    auto res = online::run_algorithm(env, algo);
    double on = sim::execute_trajectory(inst, res.trajectory).length;
    double off = trajectory_length(offline::solve(inst));
    REQUIRE(off > 0.0);
    return on / off;
}

}  // namespace

TEST_CASE("surplus walk finds the first potential right-turning point") {
    online::Environment env(fixtures::fig1(), true);
    auto p = online::probe_surplus_walk(env);
    CHECK(p.gap_found);
    CHECK(p.x == doctest::Approx(1.5));  // s_1 dropped at 0.5, gap begins at 1.0
}

TEST_CASE("surplus walk halts when coverage is committed") {
    online::Environment env(fixtures::single(), true);
    auto p = online::probe_surplus_walk(env);
    CHECK_FALSE(p.gap_found);
}

TEST_CASE("a sensor exactly 2r past the last drop continues the walk") {
    // After the triple the walk of the three-stack example rolls through
    // the sensor sitting exactly on its grid point at 3.5 and halts there.
    auto pts = run_points(fixtures::tri(), "triple-always", true);
    check_points(pts, {0, 1.3, 0.5, 3.5});
}

TEST_CASE("deficit walk returns the first qualifying sensor") {
    {
        online::Environment env(fixtures::tiny(), true);
        auto d = online::probe_deficit_walk(env);
        CHECK(d.qualifying);
        CHECK(d.y == doctest::Approx(2.0));  // deep s_1 picked, s_2 qualifies at -0.5
    }
    {
        online::Environment env(fixtures::fig1(), true);
        auto d = online::probe_deficit_walk(env);
        CHECK(d.qualifying);
        CHECK(d.y == doctest::Approx(2.7));  // deep s_2 picked, s_3 qualifies
    }
}

TEST_CASE("adaptive on the worked examples") {
    {
        // Break fires in the first iteration; the double degenerates since
        // the robot already stands past L - r.
        online::Environment env(fixtures::tiny(), true);
        auto res = online::adaptive_online(env);
        check_points(res.trajectory.points(), {0, 2.0, 0.5});
        CHECK(sim::execute_trajectory(fixtures::tiny(), res.trajectory).length ==
              doctest::Approx(3.5));
        CHECK(res.triples == 0);
    }
    {
        online::Environment env(fixtures::fig1(), true);
        auto res = online::adaptive_online(env);
        check_points(res.trajectory.points(), {0, 2.7, 1.5, 3.6, 3.5, 7.3, 6.5, 7.5});
        CHECK(sim::execute_trajectory(fixtures::fig1(), res.trajectory).length ==
              doctest::Approx(11.7));
        CHECK(res.triples == 3);
        // Epochs open at the successive gap starts.
        REQUIRE(res.epoch_origins.size() == 3);
        CHECK(res.epoch_origins[0] == doctest::Approx(1.0));
        CHECK(res.epoch_origins[1] == doctest::Approx(3.0));
        CHECK(res.epoch_origins[2] == doctest::Approx(6.0));
        CHECK(ratio_of(fixtures::fig1(), "adaptive") == doctest::Approx(11.7 / 11.1));
    }
    {
        online::Environment env(fixtures::tri(), true);
        auto res = online::adaptive_online(env);
        check_points(res.trajectory.points(), {0, 1.3, 0.5, 3.5});
    }
}

TEST_CASE("adaptive requires the barrier length") {
    online::Environment env(fixtures::tiny(), false);
    CHECK_THROWS_AS(online::adaptive_online(env), error);
}

TEST_CASE("triple-always on the worked examples") {
    {
        auto pts = run_points(fixtures::tri(), "triple-always", true);
        check_points(pts, {0, 1.3, 0.5, 3.5});
        CHECK(ratio_of(fixtures::tri(), "triple-always", true) == doctest::Approx(5.1 / 4.1));
    }
    {
        auto pts = run_points(fixtures::fig1(), "triple-always", true);
        check_points(pts, {0, 2.7, 1.5, 3.6, 3.5, 7.3, 6.5, 7.5});
        CHECK(ratio_of(fixtures::fig1(), "triple-always", true) == doctest::Approx(11.7 / 11.1));
    }
    {
        // Barrier end arrives mid-deficit: finish with the double.
        auto pts = run_points(fixtures::tiny(), "triple-always", true);
        check_points(pts, {0, 2.0, 0.5});
        CHECK(ratio_of(fixtures::tiny(), "triple-always", true) == doctest::Approx(1.0));
    }
}

TEST_CASE("fixed-switch on the worked examples") {
    {
        // Delimiter at 1.3 < 8/3: identical to triple-always.
        auto pts = run_points(fixtures::tri(), "fixed-switch");
        check_points(pts, {0, 1.3, 0.5, 3.5});
    }
    {
        // Delimiter at 2.0 > 4/3: pure double.
        auto pts = run_points(fixtures::tiny(), "fixed-switch");
        check_points(pts, {0, 2.0, 0.5});
    }
    {
        // Third delimiter at 7.3 > 16/3 resolved by the final double; the
        // result happens to be the offline optimum.
        auto pts = run_points(fixtures::fig1(), "fixed-switch");
        check_points(pts, {0, 2.7, 1.5, 3.6, 3.5, 7.5, 6.5});
        CHECK(ratio_of(fixtures::fig1(), "fixed-switch") <= 4.0 / 3.0 + 1e-9);
    }
}

TEST_CASE("walk difference is conserved") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 100; ++trial) {
        Instance inst = fixtures::random_instance(rng);
        for (const char* algo : {"adaptive", "triple-always", "fixed-switch"}) {
            online::Environment env(inst, std::string(algo) != "triple-always");
            auto res = online::run_algorithm(env, algo);
            CHECK(res.max_walk_drift <= 1e-9);
        }
    }
}

TEST_CASE("recursion fires only at ratio 2.5 or below") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 150; ++trial) {
        Instance inst = fixtures::random_instance(rng);
        online::Environment env(inst, true);
        auto res = online::adaptive_online(env);
        for (double g : res.guard_ratios) CHECK(g <= 2.5 + 1e-9);
    }
}

TEST_CASE("online trajectories cover and respect the visit bounds") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        Instance inst = fixtures::random_instance(rng);
        for (const char* algo : {"adaptive", "triple-always", "fixed-switch"}) {
            online::Environment env(inst, std::string(algo) != "triple-always");
            auto res = online::run_algorithm(env, algo);
            auto rep = sim::execute_trajectory(inst, res.trajectory);
            CAPTURE(algo);
            CAPTURE(trial);
            CHECK(rep.covered);
            CHECK(rep.order_preserved);
            auto visits = sim::verify_three_visits(res.trajectory);
            CHECK(visits.max_interior <= 3);
            CHECK(visits.terminal_visits <= 2);
            CHECK(sim::verify_shape(res.trajectory));
        }
    }
}

TEST_CASE("revelation discipline: the frontier never runs ahead of the robot") {
    // The environment only reveals ground the robot has covered; the
    // frontier after a run must not exceed the trajectory's rightmost
    // point.
    std::mt19937_64 rng(99991);
    for (int trial = 0; trial < 50; ++trial) {
        Instance inst = fixtures::random_instance(rng);
        online::Environment env(inst, true);
        auto res = online::adaptive_online(env);
        double reach = 0.0;
        for (double p : res.trajectory.points()) reach = std::max(reach, p);
        CHECK(env.frontier() <= reach + 1e-9);
        // Everything revealed sits at or left of the frontier.
        for (const auto& s : env.revealed()) CHECK(s.position <= env.frontier() + 1e-9);
    }
}

TEST_CASE("a pure-surplus instance is solved by the initial walk alone") {
    // All balances positive: the robot rolls sensors rightward in one
    // straight pass and never opens an epoch.
    Instance inst = validate_instance(6.0, 0.5, {0.4, 1.4, 2.4, 3.4, 4.2, 4.3});
    online::Environment env(inst, true);
    auto res = online::adaptive_online(env);
    auto rep = sim::execute_trajectory(inst, res.trajectory);
    CHECK(rep.covered);
    CHECK(res.epoch_origins.empty());
    CHECK(res.trajectory.turns().empty());  // one straight run
}

TEST_CASE("a covered prefix shifts the first epoch to the first real gap") {
    Instance inst = validate_instance(6.0, 0.5, {0.5, 1.5, 2.5, 5.0, 5.0, 5.0});
    online::Environment env(inst, true);
    auto res = online::adaptive_online(env);
    auto rep = sim::execute_trajectory(inst, res.trajectory);
    CHECK(rep.covered);
    REQUIRE(!res.epoch_origins.empty());
    CHECK(res.epoch_origins[0] == doctest::Approx(3.0));
}
