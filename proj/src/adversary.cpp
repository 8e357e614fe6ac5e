#include "adversary.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "offline.hpp"
#include "sim.hpp"

namespace barrier::adversary {

namespace {

std::size_t sensors_needed(double L, double r) {
    // smallest n with 2rn >= L
    return static_cast<std::size_t>(std::ceil(L / (2.0 * r) - epsilon()));
}

double grid(std::size_t idx, double r) { return 2.0 * r * static_cast<double>(idx) - r; }

// Known-length construction. Gap-then-stack blocks repeat while the robot
// answers each with a triple; once it walks past a stack without turning,
// or the blocks run out of room, the rest of the barrier is an attached
// tail closed by one sensor that forces a visit to the last grid point.
class KnownLengthAdversary final : public online::Adversary {
public:
    KnownLengthAdversary(double L, double r, int k)
        : L_(L), r_(r), k_(static_cast<std::size_t>(k)), n_total_(sensors_needed(L, r)) {
        if (k < 2 || !room_for_block(2))
            throw error(errc::degenerate_length,
                        "barrier too short for two gap/stack blocks at this range");
    }

    double range() const override { return r_; }
    std::optional<double> disclosed_length() const override { return L_; }

    std::optional<online::SensorStack> next_stack(double from) override {
        while (true) {
            if (tail_) {
                for (const auto& s : *tail_)
                    if (s.position > from + epsilon()) return s;
                return std::nullopt;
            }
            double p = grid((stacks_revealed_ + 1) * k_, r_);  // next stack, on its grid point
            if (p > from + epsilon()) return online::SensorStack{p, static_cast<int>(k_)};
            // The frontier reached the stack: it is committed now.
            ++stacks_revealed_;
            if (turn_seen_) {
                turn_seen_ = false;
                if (!room_for_block(stacks_revealed_ + 1)) enter_tail();
                continue;  // repeat the configuration
            }
            enter_tail();  // the robot declined the triple: no more gaps
        }
    }

    std::optional<double> committed_end(double) override { return L_; }

    void on_left_turn(double) override {
        if (!tail_) turn_seen_ = true;
    }

    Instance materialize() const override {
        std::vector<double> xs;
        for (std::size_t b = 1; b <= stacks_revealed_; ++b) {
            double p = grid(b * k_, r_);
            for (std::size_t j = 0; j < k_; ++j) xs.push_back(p);
        }
        std::vector<online::SensorStack> tail =
            tail_ ? *tail_ : compute_tail(stacks_revealed_ * k_);
        for (const auto& s : tail)
            for (int j = 0; j < s.count; ++j) xs.push_back(s.position);
        return validate_instance(L_, r_, std::move(xs));
    }

private:
    bool room_for_block(std::size_t blocks) const {
        // After `blocks` stacks there must still be space for at least one
        // attached single and the forcing sensor.
        return blocks * k_ + 2 <= n_total_;
    }

    std::vector<online::SensorStack> compute_tail(std::size_t count) const {
        std::vector<online::SensorStack> tail;
        for (std::size_t idx = count + 1; idx <= n_total_ - 1; ++idx)
            tail.push_back({grid(idx, r_), 1});
        // The last sensor sits strictly between the final grid point and
        // L - r: the end stays uncovered until somebody carries it there.
        tail.push_back({0.5 * (grid(n_total_ - 1, r_) + (L_ - r_)), 1});
        return tail;
    }

    void enter_tail() { tail_ = compute_tail(stacks_revealed_ * k_); }

    double L_;
    double r_;
    std::size_t k_;
    std::size_t n_total_;
    std::size_t stacks_revealed_ = 0;
    bool turn_seen_ = false;
    std::optional<std::vector<online::SensorStack>> tail_;
};

// Unknown-length construction: a stack of i sensors at 2ir, attached
// singles afterwards; the barrier ends just past the robot's first left
// turn, or at 12ir if it never turns before reaching that point.
class UnknownLengthAdversary final : public online::Adversary {
public:
    UnknownLengthAdversary(int i, double r, double delta)
        : i_(static_cast<std::size_t>(i)), r_(r), delta_(delta) {
        if (i < 1) throw error(errc::invalid_argument, "stack size must be at least 1");
        if (!(delta > 0) || delta > r)
            throw error(errc::invalid_argument, "end slack must lie in (0, r]");
        x_ = 2.0 * r * static_cast<double>(i);
    }

    double range() const override { return r_; }
    std::optional<double> disclosed_length() const override { return std::nullopt; }

    std::optional<online::SensorStack> next_stack(double from) override {
        high_water_ = std::max(high_water_, from);
        if (from < x_ - epsilon()) return online::SensorStack{x_, static_cast<int>(i_)};
        if (end_) {
            if (closer_ && closer_->position > from + epsilon()) return closer_;
            return std::nullopt;
        }
        // Attached singles 2r apart while the robot keeps heading right,
        // leaving the strip before 6x = 12ir free of anything that could
        // cover its endpoint.
        auto j = static_cast<std::size_t>(std::floor((from - x_) / (2.0 * r_) + epsilon())) + 1;
        double pos = x_ + 2.0 * r_ * static_cast<double>(j);
        if (pos <= from + epsilon()) pos += 2.0 * r_;
        if (pos <= 6.0 * x_ - 2.0 * r_ + epsilon()) return online::SensorStack{pos, 1};
        return std::nullopt;
    }

    std::optional<double> committed_end(double prospective) override {
        if (!end_ && prospective >= 6.0 * x_ - epsilon()) {
            end_ = 6.0 * x_;
            top_up(singles_committed());
        }
        return end_;
    }

    void on_left_turn(double y) override {
        if (end_ || y < x_ - epsilon()) return;
        end_ = y + r_ + delta_;
        closer_position_ = y + delta_ / 2.0;
        top_up(singles_committed());
    }

    Instance materialize() const override {
        if (!end_) throw error(errc::internal, "adversary end not committed yet");
        std::vector<double> xs;
        for (std::size_t j = 0; j < i_; ++j) xs.push_back(x_);
        for (std::size_t j = 1; j <= singles_committed(); ++j)
            xs.push_back(x_ + 2.0 * r_ * static_cast<double>(j));
        if (closer_)
            for (int j = 0; j < closer_->count; ++j) xs.push_back(closer_->position);
        std::sort(xs.begin(), xs.end());
        return validate_instance(*end_, r_, std::move(xs));
    }

private:
    std::size_t singles_committed() const {
        if (high_water_ < x_ + 2.0 * r_ - epsilon()) return 0;
        auto j = static_cast<std::size_t>(std::floor((high_water_ - x_) / (2.0 * r_) + epsilon()));
        std::size_t cap = 5 * i_ - 1;  // grid stops short of covering 6x
        return std::min(j, cap);
    }

    void top_up(std::size_t singles) {
        std::size_t have = i_ + singles;
        std::size_t need = sensors_needed(*end_, r_);
        if (need <= have) return;
        // Place the feasibility top-up where it cannot cover the end: at
        // the fresh spot just past the turn, or on the last single.
        double p = closer_position_ > 0 ? closer_position_
                                        : x_ + 2.0 * r_ * static_cast<double>(singles);
        closer_ = online::SensorStack{p, static_cast<int>(need - have)};
    }

    std::size_t i_;
    double r_;
    double delta_;
    double x_ = 0.0;
    double high_water_ = -1.0;
    double closer_position_ = -1.0;
    std::optional<double> end_;
    std::optional<online::SensorStack> closer_;
};

AdversaryOutcome run_against(std::unique_ptr<online::Adversary> adv, const std::string& algo) {
    online::Environment env(std::move(adv));
    online::OnlineResult res = online::run_algorithm(env, algo);
    Instance inst = env.materialize();
    AdversaryOutcome out{inst, res, 0.0, 0.0, 0.0};
    out.online_length = sim::execute_trajectory(inst, res.trajectory).length;
    out.offline_length = trajectory_length(offline::solve(inst));
    out.ratio = out.offline_length > epsilon() ? out.online_length / out.offline_length : 1.0;
    return out;
}

}  // namespace

std::unique_ptr<online::Adversary> make_known_length_adversary(double L, double r, int k) {
    if (r <= 0 || k <= 0) {
        double c = std::cbrt(L);
        r = c;
        k = static_cast<int>(std::llround(c));
    }
    return std::make_unique<KnownLengthAdversary>(L, r, k);
}

std::unique_ptr<online::Adversary> make_unknown_length_adversary(int i, double r, double delta) {
    return std::make_unique<UnknownLengthAdversary>(i, r, delta);
}

AdversaryOutcome adversary_known_length(double L, const std::string& algo, double r, int k) {
    return run_against(make_known_length_adversary(L, r, k), algo);
}

AdversaryOutcome adversary_unknown_length(int i, double r, double delta, const std::string& algo) {
    return run_against(make_unknown_length_adversary(i, r, delta), algo);
}

Instance adversary_fixed_switch(double z, double L, double r) {
    if (L <= 0 || r <= 0) throw error(errc::invalid_argument, "need positive L and r");
    if (z < 0 || z > L + epsilon())
        throw error(errc::invalid_argument, "switching point must lie on the barrier");
    if (L < 12.0 * r)
        throw error(errc::degenerate_length, "barrier too short relative to the range");
    std::size_t n = sensors_needed(L, r);
    std::vector<double> xs;

    if (z <= 2.0 * L / 3.0 + epsilon()) {
        // Attached prefix reaching just past the switch; the short gap
        // right after it can only be fixed by the final double.
        std::size_t k = static_cast<std::size_t>(std::floor((z + r) / (2.0 * r) + epsilon()));
        if (k + 3 > n) throw error(errc::degenerate_length, "no room past the switching point");
        for (std::size_t idx = 1; idx <= k; ++idx) xs.push_back(grid(idx, r));
        xs.push_back(2.0 * r * static_cast<double>(k) + 1.5 * r);
        for (std::size_t idx = k + 2; idx <= n - 1; ++idx) xs.push_back(grid(idx, r));
        xs.push_back(0.5 * (grid(n - 1, r) + (L - r)));
        return validate_instance(L, r, std::move(xs));
    }

    // Switch past 2L/3: an initial gap closed by a stack at z, then the
    // same unreachable short gap and tail.
    std::size_t k = static_cast<std::size_t>(std::ceil(z / (2.0 * r) - epsilon()));
    double stack_pos = std::min(z, L - 1.5 * r);
    double after = 2.0 * r * static_cast<double>(k) + 1.5 * r;
    if (k + 3 <= n && after > stack_pos + epsilon() && after < grid(k + 2, r) - epsilon()) {
        for (std::size_t j = 0; j < k; ++j) xs.push_back(stack_pos);
        xs.push_back(after);
        for (std::size_t idx = k + 2; idx <= n - 1; ++idx) xs.push_back(grid(idx, r));
        xs.push_back(0.5 * (grid(n - 1, r) + (L - r)));
        return validate_instance(L, r, std::move(xs));
    }
    // The switch sits so close to the end that nothing fits after it: one
    // stack carrying the whole supply.
    for (std::size_t j = 0; j < n; ++j) xs.push_back(L - 1.5 * r);
    return validate_instance(L, r, std::move(xs));
}

Instance gen_random_instance(std::size_t n, double L, double r, std::uint64_t seed,
                             bool require_end_gap) {
    if (2.0 * r * static_cast<double>(n) < L - epsilon())
        throw error(errc::infeasible_coverage, "2rn < L: not enough sensors for this barrier");
    if (require_end_gap && L <= r + epsilon())
        throw error(errc::invalid_argument,
                    "every sensor position covers the endpoint when r >= L");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, L);
    std::vector<double> xs(n);
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (auto& x : xs) x = u(rng);
        std::sort(xs.begin(), xs.end());
        if (!require_end_gap) return validate_instance(L, r, std::move(xs));
        auto gaps = compute_gaps(L, r, xs);
        if (!gaps.empty() && gaps.back().hi >= L - epsilon())
            return validate_instance(L, r, std::move(xs));
    }
    // A dense draw kept covering the endpoint: push offenders out of its
    // sensing range.
    std::uniform_real_distribution<double> v(0.5, 0.999);
    for (auto& x : xs)
        if (x > L - r) x = (L - r) * v(rng);
    std::sort(xs.begin(), xs.end());
    return validate_instance(L, r, std::move(xs));
}

}  // namespace barrier::adversary
