#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "offline.hpp"
#include "oracle.hpp"
#include "sim.hpp"

using namespace barrier;

namespace {

offline::DelimiterList delims_of(const Instance& inst) {
    return offline::potential_delimiters(inst, coverage_balances(inst));
}

offline::AnchorInfo anchor_of(const Instance& inst) {
    return offline::anchor_point(inst, coverage_balances(inst));
}

}  // namespace

TEST_CASE("potential delimiters of the worked examples") {
    auto fig = delims_of(fixtures::fig1());
    REQUIRE(fig.count() == 3);
    CHECK(fig.pairs[0] == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(fig.pairs[1] == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(fig.pairs[2] == std::pair<std::size_t, std::size_t>{7, 7});

    auto tiny = delims_of(fixtures::tiny());
    REQUIRE(tiny.count() == 1);
    CHECK(tiny.pairs[0] == std::pair<std::size_t, std::size_t>{1, 2});

    auto tri = delims_of(fixtures::tri());
    REQUIRE(tri.count() == 1);
    CHECK(tri.pairs[0] == std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("balance exactly -2r qualifies only when collocated") {
    // Two sensors stacked so the lower one has balance exactly -2r.
    Instance stacked = validate_instance(4.0, 0.5, {1.5, 1.5, 3.5, 3.5});
    auto d = delims_of(stacked);
    REQUIRE(d.count() >= 1);
    CHECK(d.pairs[0].second == 1);  // C_1 = -1 = -2r, collocated with s_2

    // Same balance without collocation does not qualify.
    Instance spread = validate_instance(4.0, 0.5, {1.5, 1.6, 3.5, 3.5});
    auto d2 = delims_of(spread);
    CHECK(d2.pairs[0].second != 1);
}

TEST_CASE("anchor point of the worked examples") {
    auto fig = anchor_of(fixtures::fig1());
    CHECK(fig.k == 8);
    CHECK(fig.c == doctest::Approx(7.5));

    auto tiny = anchor_of(fixtures::tiny());
    CHECK(tiny.k == 2);
    CHECK(tiny.c == doctest::Approx(2.0));

    auto tri = anchor_of(fixtures::tri());
    CHECK(tri.k == 3);
    CHECK(tri.c == doctest::Approx(2.5));
}

TEST_CASE("anchor accounts for coverage vacated by the moved prefix") {
    // Moving s_2 left to its grid point uncovers [2.0, 2.1], which only
    // s_3 can fix, so the relocated prefix must extend to k = 3.
    Instance inst = validate_instance(3.0, 0.5, {0.2, 1.8, 2.6});
    auto a = anchor_of(inst);
    CHECK(a.k == 3);
    CHECK(a.c == doctest::Approx(2.6));  // C_3 < 0
    auto sol = offline::solve_offline(inst);
    auto rep = sim::execute_trajectory(inst, sol.trajectory);
    CHECK(rep.covered);
    // Cross-check against exhaustive search.
    auto best = oracle::brute_force_optimal(inst);
    CHECK(trajectory_length(sol.trajectory) == doctest::Approx(best.length));
}

TEST_CASE("overheads of the worked examples") {
    auto check_overheads = [](const Instance& inst, const std::vector<double>& expected) {
        auto bal = coverage_balances(inst);
        auto d = offline::potential_delimiters(inst, bal);
        auto a = offline::anchor_point(inst, bal);
        auto o = offline::overheads(inst, bal, d, a);
        REQUIRE(o.size() == expected.size());
        for (std::size_t i = 0; i < o.size(); ++i)
            CHECK(o[i] == doctest::Approx(expected[i]).epsilon(1e-9));
    };
    check_overheads(fixtures::fig1(), {6.0, 6.4, 3.6, 4.2});
    check_overheads(fixtures::tiny(), {1.5, 3.0});
    check_overheads(fixtures::tri(), {2.0, 1.6});
}

TEST_CASE("overhead equals simulated length minus the straight baseline") {
    // o_j is the detour cost: simulate each candidate and compare.
    for (const Instance& inst : {fixtures::fig1(), fixtures::tiny(), fixtures::tri()}) {
        auto bal = coverage_balances(inst);
        auto d = offline::potential_delimiters(inst, bal);
        auto a = offline::anchor_point(inst, bal);
        auto o = offline::overheads(inst, bal, d, a);
        for (std::size_t j = 0; j <= d.count(); ++j) {
            std::vector<double> pts{0.0};
            for (std::size_t i = 0; i < j; ++i) {
                pts.push_back(inst.positions()[d.pairs[i].second - 1]);
                pts.push_back(inst.attached(d.pairs[i].first));
            }
            pts.push_back(a.c);
            if (j < d.count()) pts.push_back(inst.attached(d.pairs[j].first));
            double len = trajectory_length(Trajectory::from_points(pts));
            CHECK(len - a.c == doctest::Approx(o[j]).epsilon(1e-9));
        }
    }
}

TEST_CASE("offline solver on the worked examples") {
    CHECK(offline::solve(fixtures::single()).empty());

    auto tiny = offline::solve_offline(fixtures::tiny());
    CHECK(tiny.trajectory.points() == std::vector<double>{0, 2.0, 0.5});
    CHECK(trajectory_length(tiny.trajectory) == doctest::Approx(3.5));
    CHECK(tiny.triples == 0);
    CHECK(tiny.ends_with_double);

    auto fig = offline::solve_offline(fixtures::fig1());
    auto pts = fig.trajectory.points();
    std::vector<double> expected{0, 2.7, 1.5, 3.6, 3.5, 7.5, 6.5};
    REQUIRE(pts.size() == expected.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(pts[i] == doctest::Approx(expected[i]).epsilon(1e-9));
    CHECK(trajectory_length(fig.trajectory) == doctest::Approx(11.1));
    CHECK(fig.triples == 2);
    CHECK(fig.ends_with_double);

    auto tri = offline::solve_offline(fixtures::tri());
    CHECK(tri.trajectory.points() == std::vector<double>{0, 1.3, 0.5, 2.5});
    CHECK(trajectory_length(tri.trajectory) == doctest::Approx(4.1));
    CHECK(tri.triples == 1);
    CHECK_FALSE(tri.ends_with_double);
}

TEST_CASE("solver output always covers, keeps shape and visit bounds") {
    std::mt19937_64 rng(123456);
    for (int trial = 0; trial < 300; ++trial) {
        Instance inst = fixtures::random_instance(rng);
        auto sol = offline::solve_offline(inst);
        auto rep = sim::execute_trajectory(inst, sol.trajectory);
        CAPTURE(inst.length());
        CAPTURE(inst.range());
        CHECK(rep.covered);
        CHECK(rep.order_preserved);
        CHECK(sim::verify_shape(sol.trajectory));
        auto visits = sim::verify_three_visits(sol.trajectory);
        CHECK(visits.max_interior <= 3);
        CHECK(visits.terminal_visits <= 2);
    }
}

TEST_CASE("solver matches the exhaustive oracle on random instances") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 250; ++trial) {
        Instance inst = fixtures::random_instance(rng, 8);
        auto sol = offline::solve_offline(inst);
        auto best = oracle::brute_force_optimal(inst);
        CAPTURE(trial);
        CHECK(trajectory_length(sol.trajectory) == doctest::Approx(best.length).epsilon(1e-9));
    }
}

TEST_CASE("pure-double instances where no sensor qualifies for a triple") {
    // Nine sensors bunched deep to the right: every balance up to the
    // anchor is at or below -2r, so only the final double remains.
    std::vector<double> xs;
    xs.push_back(0.2);
    for (int i = 0; i < 9; ++i) xs.push_back(9.0 + 0.1 * i);
    Instance inst = validate_instance(10.0, 0.5, xs);
    auto sol = offline::solve_offline(inst);
    auto rep = sim::execute_trajectory(inst, sol.trajectory);
    CHECK(rep.covered);
    CHECK(sol.ends_with_double);
    auto best = oracle::brute_force_optimal(inst, 10);
    CHECK(trajectory_length(sol.trajectory) == doctest::Approx(best.length).epsilon(1e-9));
}

TEST_CASE("runtime grows linearly") {
    // Coarse smoke check; the acceptance suite measures the real budget.
    std::mt19937_64 rng(5);
    std::vector<double> xs;
    std::size_t n = 200000;
    double L = 1.8 * static_cast<double>(n);
    std::uniform_real_distribution<double> u(0.0, L);
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(u(rng));
    std::sort(xs.begin(), xs.end());
    Instance inst = validate_instance(L, 1.0, std::move(xs));
    auto t0 = std::chrono::steady_clock::now();
    auto sol = offline::solve_offline(inst);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    CHECK(ms.count() < 2000.0);
    CHECK(!sol.trajectory.points().empty());
}
