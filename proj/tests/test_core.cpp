#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core.hpp"
#include "fixtures.hpp"

using namespace barrier;

namespace {

// Independent coverage oracle: a point is uncovered iff no sensor is
// within range. Used to cross-check the sweep-based gap computation.
bool point_uncovered(const Instance& inst, double p) {
    for (double x : inst.positions())
        if (std::abs(p - x) <= inst.range()) return false;
    return true;
}

bool in_some_gap(const std::vector<Gap>& gaps, double p) {
    for (const auto& g : gaps)
        if (p >= g.lo - 1e-12 && p <= g.hi + 1e-12) return true;
    return false;
}

}  // namespace

TEST_CASE("validate_instance accepts the worked examples") {
    Instance a = fixtures::single();
    CHECK(a.size() == 1);
    Instance b = fixtures::fig1();
    CHECK(b.size() == 8);
    CHECK(b.positions().front() == doctest::Approx(0.3));
    Instance c = fixtures::tiny();
    CHECK(c.positions()[0] == c.positions()[1]);  // collocated sensors are fine
}

TEST_CASE("validate_instance sorts unsorted input") {
    Instance inst = validate_instance(4.0, 0.5, {3.5, 1.3, 1.3, 1.3});
    CHECK(std::is_sorted(inst.positions().begin(), inst.positions().end()));
}

TEST_CASE("validate_instance rejects bad input") {
    CHECK_THROWS_WITH_AS(validate_instance(10.0, 0.5, {1.0}), doctest::Contains("cannot cover"),
                         error);
    try {
        validate_instance(10.0, 0.5, {1.0});
    } catch (const error& e) {
        CHECK(e.code() == errc::infeasible_coverage);
    }
    CHECK_THROWS_AS(validate_instance(2.0, -1.0, {1.0}), error);
    CHECK_THROWS_AS(validate_instance(2.0, 1.0, {3.5}), error);
    CHECK_THROWS_AS(validate_instance(2.0, 1.0, {}), error);
}

TEST_CASE("gaps of the worked examples") {
    CHECK(compute_gaps(fixtures::single()).empty());

    auto tiny_gaps = compute_gaps(fixtures::tiny());
    REQUIRE(tiny_gaps.size() == 1);
    CHECK(tiny_gaps[0].lo == doctest::Approx(0.0));
    CHECK(tiny_gaps[0].hi == doctest::Approx(1.5));

    auto fig_gaps = compute_gaps(fixtures::fig1());
    REQUIRE(fig_gaps.size() == 3);
    CHECK(fig_gaps[0].lo == doctest::Approx(0.8));
    CHECK(fig_gaps[0].hi == doctest::Approx(2.1));
    CHECK(fig_gaps[1].lo == doctest::Approx(5.7));
    CHECK(fig_gaps[1].hi == doctest::Approx(6.8));
    CHECK(fig_gaps[2].lo == doctest::Approx(7.8));
    CHECK(fig_gaps[2].hi == doctest::Approx(8.0));
}

TEST_CASE("gap/coverage duality on random instances") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        Instance inst = fixtures::random_instance(rng);
        auto gaps = compute_gaps(inst);
        for (int s = 0; s <= 400; ++s) {
            double p = inst.length() * s / 400.0;
            bool uncovered = point_uncovered(inst, p);
            bool in_gap = in_some_gap(gaps, p);
            // Skip points within tolerance of a gap boundary.
            bool boundary = false;
            for (const auto& g : gaps)
                if (std::abs(p - g.lo) < 1e-7 || std::abs(p - g.hi) < 1e-7) boundary = true;
            for (double x : inst.positions())
                if (std::abs(std::abs(p - x) - inst.range()) < 1e-7) boundary = true;
            if (!boundary) CHECK(uncovered == in_gap);
        }
    }
}

TEST_CASE("coverage balances match the worked lists") {
    auto fig = coverage_balances(fixtures::fig1()).values;
    std::vector<double> expected{0.2, -1.1, -0.2, -0.1, 0.2, 0.3, -0.8, 0.2};
    REQUIRE(fig.size() == expected.size());
    for (std::size_t i = 0; i < fig.size(); ++i)
        CHECK(fig[i] == doctest::Approx(expected[i]).epsilon(1e-9));

    auto one = coverage_balances(fixtures::single()).values;
    CHECK(one[0] == doctest::Approx(0.0));

    auto tiny = coverage_balances(fixtures::tiny()).values;
    CHECK(tiny[0] == doctest::Approx(-1.5));
    CHECK(tiny[1] == doctest::Approx(-0.5));
}

TEST_CASE("balances recompute from the definition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Instance inst = fixtures::random_instance(rng);
        auto bal = coverage_balances(inst).values;
        for (std::size_t i = 1; i <= inst.size(); ++i) {
            double direct = (2.0 * inst.range() * static_cast<double>(i) - inst.range()) -
                            inst.positions()[i - 1];
            CHECK(bal[i - 1] == direct);
        }
    }
}

TEST_CASE("trajectory length") {
    CHECK(trajectory_length(Trajectory()) == 0.0);
    CHECK(trajectory_length(Trajectory::from_points({0, 2.0, 0.5})) == doctest::Approx(3.5));
    CHECK(trajectory_length(Trajectory::from_points({0, 2.7, 1.5, 3.6, 3.5, 7.5, 6.5})) ==
          doctest::Approx(11.1));
}

TEST_CASE("trajectory length is additive over segments and nonnegative") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        // Build a strictly alternating point list.
        std::vector<double> pts{0.0};
        int m = 1 + static_cast<int>(rng() % 8);
        for (int i = 1; i <= m; ++i) {
            double prev = pts.back();
            double step = 0.1 + u(rng);
            pts.push_back(i % 2 == 1 ? prev + step : std::max(prev - step, prev * 0.3));
        }
        Trajectory t = Trajectory::from_points(pts);
        double sum = 0.0;
        auto flat = t.points();
        for (std::size_t i = 1; i < flat.size(); ++i) sum += std::abs(flat[i] - flat[i - 1]);
        CHECK(trajectory_length(t) == doctest::Approx(sum));
        CHECK(trajectory_length(t) >= 0.0);
    }
}

TEST_CASE("trajectory builder coalesces degenerate moves") {
    // Same-direction runs merge, zero-length steps vanish.
    Trajectory t = Trajectory::from_points({0, 1.0, 2.0, 1.5, 1.5, 3.0});
    CHECK(t.points() == std::vector<double>{0, 2.0, 1.5, 3.0});
    Trajectory empty = Trajectory::from_points({0.0});
    CHECK(empty.empty());
    CHECK(empty.segment_count() == 0);
}

TEST_CASE("epsilon is configurable and validated") {
    double before = epsilon();
    set_epsilon(1e-7);
    CHECK(epsilon() == 1e-7);
    set_epsilon(before);
    CHECK_THROWS_AS(set_epsilon(-1.0), error);
    CHECK_THROWS_AS(set_epsilon(0.0), error);
}
