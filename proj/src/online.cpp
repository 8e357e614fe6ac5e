#include "online.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace barrier::online {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Environment::Environment(Instance inst, bool disclose_length)
    : scripted_(std::move(inst)),
      range_(scripted_->range()),
      disclose_length_(disclose_length),
      frontier_(-kInf) {}

Environment::Environment(std::unique_ptr<Adversary> adversary)
    : adversary_(std::move(adversary)),
      range_(adversary_->range()),
      frontier_(-kInf) {
    disclose_length_ = adversary_->disclosed_length().has_value();
}

std::optional<double> Environment::physical_end(double prospective) const {
    if (scripted_) return scripted_->length();
    return adversary_->committed_end(prospective);
}

std::optional<double> Environment::known_end() const {
    if (scripted_ && disclose_length_) return scripted_->length();
    if (adversary_) {
        if (auto l = adversary_->disclosed_length()) return l;
    }
    // Unknown-length model: the end becomes visible once the robot is
    // within sensing range of it.
    std::optional<double> end = physical_end(frontier_);
    if (end && frontier_ >= *end - range_ - epsilon()) return end;
    return std::nullopt;
}

Environment::Advance Environment::advance(double target) {
    Advance res;
    if (target <= frontier_) {
        res.reached = target;  // old ground, nothing new to reveal
        return res;
    }
    std::optional<SensorStack> next;
    if (scripted_) {
        const auto& xs = scripted_->positions();
        auto it = std::upper_bound(xs.begin(), xs.end(), frontier_);
        if (it != xs.end()) {
            SensorStack s{*it, 0};
            for (auto jt = it; jt != xs.end() && *jt == *it; ++jt) ++s.count;
            next = s;
        }
    } else {
        next = adversary_->next_stack(frontier_);
    }

    // An adaptive adversary decides about the barrier end knowing only how
    // far this sweep can actually get (the next sensor bounds it).
    double prospective = next ? std::min(target, next->position) : target;
    std::optional<double> end = physical_end(prospective);
    double stop = target;
    if (end && *end < stop) stop = *end;

    if (next && next->position <= stop) {
        frontier_ = next->position;
        revealed_.push_back(*next);
        res.reached = frontier_;
        res.stack = next;
        res.at_end = end && std::abs(frontier_ - *end) <= epsilon();
        return res;
    }
    frontier_ = stop;
    res.reached = stop;
    res.at_end = end && stop >= *end - epsilon();
    return res;
}

void Environment::note_left_turn(double y) {
    if (adversary_) adversary_->on_left_turn(y);
}

Instance Environment::materialize() const {
    if (scripted_) return *scripted_;
    return adversary_->materialize();
}

namespace {

enum class Outcome : unsigned char { AtSlot, Carried, Dropped, Left };

// The robot shared by all algorithms: position, emitted turning points,
// revealed sensors by index with their relocation state, and the
// attached-prefix bookkeeping behind gap detection and halting.
class Walker {
public:
    explicit Walker(Environment& env) : env_(env), r_(env.range()) {
        raw_path_.push_back(0.0);
        end_ = env_.known_end();
    }

    double slot(std::size_t idx) const { return 2.0 * r_ * static_cast<double>(idx) - r_; }
    double pos() const { return pos_; }
    double range() const { return r_; }
    std::optional<double> end() const { return end_; }
    bool end_known() const { return end_.has_value(); }
    std::size_t carried_count() const { return carried_.size(); }
    std::size_t first_carried() const { return carried_.front(); }
    std::size_t last_carried() const { return carried_.back(); }

    double actual_edge() const { return 2.0 * r_ * static_cast<double>(actual_prefix_); }
    double committed_edge() const { return 2.0 * r_ * static_cast<double>(committed_prefix_); }
    std::size_t actual_count() const { return actual_prefix_; }

    /// Coverage is complete once every pending sensor lands on its grid point.
    bool committed_covers_end() const {
        return end_known() && committed_edge() >= *end_ - epsilon();
    }

    void push_turn(double p) { raw_path_.push_back(p); }

    void move_to(double target) {
        odometer_ += std::abs(target - pos_);
        pos_ = target;
    }

    struct Event {
        enum Kind { Sensor, End, Reached } kind;
        std::size_t index = 0;  // 1-based, for Sensor
        double position = 0.0;
    };

    /// Walks right toward `target`, stopping at the next sensor or at the
    /// barrier end on the way. Ground past a known end holds nothing, so
    /// the robot steps straight to the target there (it may park the last
    /// sensor on a grid point just beyond the end).
    Event next_event(double target) {
        if (consumed_ < xs_.size() && xs_[consumed_] <= target + epsilon()) {
            double p = xs_[consumed_];
            if (p > pos_) move_to(p);
            return {Event::Sensor, consumed_ + 1, pos_};
        }
        if (end_known() && pos_ >= *end_ - epsilon()) {
            if (target > pos_) move_to(target);
            return {Event::Reached, 0, pos_};
        }
        Environment::Advance adv = env_.advance(target);
        refresh_end_knowledge();
        if (adv.stack) {
            for (int i = 0; i < adv.stack->count; ++i) xs_.push_back(adv.stack->position);
            if (adv.stack->position > pos_) move_to(adv.stack->position);
            return {Event::Sensor, consumed_ + 1, pos_};
        }
        if (adv.reached > pos_) move_to(adv.reached);
        if (adv.at_end && adv.reached < target - epsilon()) return {Event::End, 0, pos_};
        if (target > pos_ && end_known() && pos_ >= *end_ - epsilon()) move_to(target);
        return {Event::Reached, 0, pos_};
    }

    /// Settles the sensor the robot is standing on. `allow_pick` lets the
    /// caller suppress pickups that committed coverage no longer needs.
    Outcome consume(std::size_t index, bool allow_pick) {
        double x = xs_[index - 1];
        double s = slot(index);
        Outcome o;
        if (std::abs(x - s) <= epsilon())
            o = Outcome::AtSlot;
        else if (allow_pick)
            o = Outcome::Carried;
        else
            o = Outcome::Left;
        out_.push_back(o);
        ++consumed_;
        if (o == Outcome::Carried) carried_.push_back(index);
        advance_prefixes();
        return o;
    }

    double balance_of(std::size_t index, double p) const { return slot(index) - p; }

    bool collocated_with_next(std::size_t index) const {
        return index < xs_.size() && std::abs(xs_[index] - xs_[index - 1]) <= epsilon();
    }

    void drop_front_carried() {
        std::size_t idx = carried_.front();
        carried_.pop_front();
        out_[idx - 1] = Outcome::Dropped;
        advance_prefixes();
    }

    /// Left sweep: walk to `to`, every carried sensor lands on its grid point.
    void drop_all_left(double to) {
        move_to(to);
        while (!carried_.empty()) {
            std::size_t idx = carried_.back();
            carried_.pop_back();
            out_[idx - 1] = Outcome::Dropped;
        }
        advance_prefixes();
    }

    /// Once the barrier end is known, carried sensors beyond what coverage
    /// needs are abandoned where they originally stood.
    void prune_carried(double end) {
        double need = end - actual_edge();
        std::size_t keep =
            need <= epsilon()
                ? 0
                : static_cast<std::size_t>(std::ceil(need / (2.0 * r_) - epsilon()));
        while (carried_.size() > keep) {
            std::size_t idx = carried_.back();
            carried_.pop_back();
            out_[idx - 1] = Outcome::Left;
        }
        advance_prefixes();
    }

    void refresh_end_knowledge() {
        if (!end_) {
            end_ = env_.known_end();
            if (end_) prune_carried(*end_);
        }
    }

    double odometer() const { return odometer_; }

    Trajectory finish() {
        if (std::abs(raw_path_.back() - pos_) > epsilon()) raw_path_.push_back(pos_);
        return Trajectory::from_points(raw_path_);
    }

    Environment& env() { return env_; }

private:
    void advance_prefixes() {
        while (actual_prefix_ < out_.size()) {
            Outcome o = out_[actual_prefix_];
            if (o == Outcome::AtSlot || o == Outcome::Dropped)
                ++actual_prefix_;
            else
                break;
        }
        while (committed_prefix_ < out_.size()) {
            if (out_[committed_prefix_] != Outcome::Left)
                ++committed_prefix_;
            else
                break;
        }
    }

    Environment& env_;
    double r_;
    double pos_ = 0.0;
    double odometer_ = 0.0;
    std::vector<double> raw_path_;
    std::vector<double> xs_;
    std::vector<Outcome> out_;
    std::size_t consumed_ = 0;
    std::size_t actual_prefix_ = 0;
    std::size_t committed_prefix_ = 0;
    std::deque<std::size_t> carried_;
    std::optional<double> end_;
};

// The trajectory-minus-position difference is invariant across a surplus
// or deficit walk; the residue is recorded so tests can check it.
struct WalkGuard {
    Walker& w;
    OnlineResult& result;
    double before;
    WalkGuard(Walker& walker, OnlineResult& r)
        : w(walker), result(r), before(walker.odometer() - walker.pos()) {}
    ~WalkGuard() {
        double after = w.odometer() - w.pos();
        result.max_walk_drift = std::max(result.max_walk_drift, std::abs(after - before));
    }
};

struct SurplusResult {
    enum Kind { GapFound, Halted } kind;
    double x = 0.0;
};

// Moves right depositing surplus sensors on the attached grid until a gap
// is confirmed (one full range past the coverage edge with nothing there)
// or committed coverage reaches the end and nothing is pending.
SurplusResult walk_in_surplus(Walker& w, OnlineResult& result) {
    WalkGuard guard(w, result);
    while (true) {
        w.refresh_end_knowledge();
        if (w.committed_covers_end() && w.carried_count() == 0)
            return {SurplusResult::Halted, w.pos()};

        // Next pending drop, or the gap-confirmation point one range past
        // the coverage edge; both are the first free grid point. (With
        // sensors carried, the lowest one owns exactly that grid point.)
        double target = w.slot(w.actual_count() + 1);

        Walker::Event ev = w.next_event(target);
        if (ev.kind == Walker::Event::Sensor) {
            w.consume(ev.index, !w.committed_covers_end());
            continue;
        }
        if (ev.kind == Walker::Event::End) continue;
        // Reached the grid target.
        if (w.carried_count() > 0 && std::abs(w.slot(w.first_carried()) - w.pos()) <= epsilon()) {
            w.drop_front_carried();
            continue;
        }
        if (w.committed_covers_end() && w.carried_count() == 0)
            return {SurplusResult::Halted, w.pos()};
        return {SurplusResult::GapFound, w.pos()};
    }
}

struct DeficitResult {
    enum Kind { Qualifying, EndReached, SuppliesComplete } kind;
    double y = 0.0;
};

// Moves right from a potential right-turning point collecting
// deficit-balance sensors until one qualifies as a left-turning point:
// balance strictly between -2r and 0, or exactly -2r while collocated with
// the next sensor. Stops early when the collected sensors already commit
// complete coverage, or when the barrier end arrives first.
DeficitResult walk_in_deficit(Walker& w, OnlineResult& result) {
    WalkGuard guard(w, result);
    while (true) {
        w.refresh_end_knowledge();
        if (w.committed_covers_end()) return {DeficitResult::SuppliesComplete, w.pos()};

        double target = w.end() ? *w.end() : kInf;
        Walker::Event ev = w.next_event(target);
        if (ev.kind == Walker::Event::Sensor) {
            double bal = w.balance_of(ev.index, ev.position);
            double two_r = 2.0 * w.range();
            bool collocated_exact =
                std::abs(bal + two_r) <= epsilon() && w.collocated_with_next(ev.index);
            bool qualifying = collocated_exact || (bal < -epsilon() && bal > -two_r + epsilon());
            w.consume(ev.index, true);
            if (qualifying) return {DeficitResult::Qualifying, ev.position};
            continue;
        }
        if (ev.kind == Walker::Event::End) {
            w.refresh_end_knowledge();
            continue;
        }
        return {DeficitResult::EndReached, w.pos()};
    }
}

// The triple: left turn at the qualifying sensor, place every carried
// sensor on its grid point down to the first pending one, turn right.
void do_triple(Walker& w, OnlineResult& result) {
    double y = w.pos();
    w.env().note_left_turn(y);
    w.push_turn(y);
    double b = w.slot(w.first_carried());
    w.drop_all_left(b);
    w.push_turn(b);
    ++result.triples;
}

// The final double: sweep right until the collected sensors commit full
// coverage, extend to the farthest point the drops require, then turn once
// and place everything.
void do_final_double(Walker& w, OnlineResult& result) {
    (void)result;
    while (!w.committed_covers_end()) {
        double target = w.end() ? std::max(*w.end(), w.pos()) : kInf;
        Walker::Event ev = w.next_event(target);
        if (ev.kind == Walker::Event::Sensor) {
            w.consume(ev.index, !w.committed_covers_end());
            continue;
        }
        if (ev.kind == Walker::Event::End) {
            w.refresh_end_knowledge();
            continue;
        }
        if (w.end_known() && w.pos() >= *w.end() - epsilon()) break;
    }
    if (w.carried_count() == 0) return;  // nothing pending, halt in place

    double end = w.end() ? *w.end() : w.pos();
    double reach = std::max({w.pos(), end - w.range(), w.slot(w.last_carried())});
    while (w.pos() < reach - epsilon()) {
        Walker::Event ev = w.next_event(reach);
        if (ev.kind == Walker::Event::Sensor) {
            w.consume(ev.index, false);  // coverage committed, leave extras alone
            continue;
        }
        if (ev.kind == Walker::Event::End) continue;
    }
    w.env().note_left_turn(w.pos());
    w.push_turn(w.pos());
    double terminal = w.slot(w.first_carried());
    w.drop_all_left(terminal);
}

OnlineResult finish_run(Walker& w, OnlineResult result) {
    result.trajectory = w.finish();
    return result;
}

}  // namespace

OnlineResult triple_always(Environment& env) {
    Walker w(env);
    OnlineResult result;
    result.epochs = 1;
    while (true) {
        SurplusResult s = walk_in_surplus(w, result);
        if (s.kind == SurplusResult::Halted) return finish_run(w, std::move(result));
        DeficitResult d = walk_in_deficit(w, result);
        if (d.kind == DeficitResult::Qualifying) {
            do_triple(w, result);
            continue;
        }
        do_final_double(w, result);
        return finish_run(w, std::move(result));
    }
}

OnlineResult fixed_switch(Environment& env, std::optional<double> switch_point) {
    if (!env.known_end())
        throw error(errc::invalid_argument, "fixed-switch needs the barrier length disclosed");
    double L = *env.known_end();
    double z = switch_point.value_or(2.0 * L / 3.0);
    if (z < -epsilon() || z > L + epsilon())
        throw error(errc::invalid_argument, "switching point must lie on the barrier");

    Walker w(env);
    OnlineResult result;
    result.epochs = 1;
    while (true) {
        SurplusResult s = walk_in_surplus(w, result);
        if (s.kind == SurplusResult::Halted) return finish_run(w, std::move(result));
        DeficitResult d = walk_in_deficit(w, result);
        if (d.kind == DeficitResult::Qualifying && d.y <= z + epsilon()) {
            do_triple(w, result);
            continue;
        }
        // Past the switching point (or no qualifying sensor left): at most
        // one more left turn, the final double.
        do_final_double(w, result);
        return finish_run(w, std::move(result));
    }
}

OnlineResult adaptive_online(Environment& env) {
    if (!env.known_end())
        throw error(errc::invalid_argument, "adaptive needs the barrier length disclosed");
    double L = *env.known_end();

    Walker w(env);
    OnlineResult result;

    // A covered prefix is walked through outside any epoch; each epoch
    // then opens at a gap start.
    SurplusResult s = walk_in_surplus(w, result);
    if (s.kind == SurplusResult::Halted) return finish_run(w, std::move(result));

    double t = s.x - w.range();
    while (true) {
        ++result.epochs;
        result.epoch_origins.push_back(t);
        double control = 0.0;  // trajectory accumulator, epoch-relative

        while (true) {
            double b_rel = w.pos() - t;
            result.betas.push_back((control + w.range()) / b_rel);
            DeficitResult d = walk_in_deficit(w, result);
            if (d.kind != DeficitResult::Qualifying) {
                do_final_double(w, result);
                return finish_run(w, std::move(result));
            }
            double a_rel = d.y - t;
            control += w.range() + 3.0 * (a_rel - b_rel);
            result.gammas.push_back(control / a_rel);
            if (control - a_rel > (L - t) + epsilon()) {
                // The triple's detour now outweighs what is left of the
                // barrier: stop tripling and finish with the double.
                do_final_double(w, result);
                return finish_run(w, std::move(result));
            }
            do_triple(w, result);
            SurplusResult s2 = walk_in_surplus(w, result);
            if (s2.kind == SurplusResult::Halted) return finish_run(w, std::move(result));
            double x_rel = s2.x - t;
            control += x_rel - w.range() - a_rel;
            if (s2.x < L && control / (x_rel - w.range()) <= 2.5 + epsilon()) {
                result.guard_ratios.push_back(control / (x_rel - w.range()));
                t = s2.x - w.range();  // fresh epoch at the new gap
                break;
            }
            // Ratio still too high: keep extending this epoch.
        }
    }
}

OnlineResult greedy_double(Environment& env) {
    if (!env.known_end())
        throw error(errc::invalid_argument, "greedy-double needs the barrier length disclosed");
    Walker w(env);
    OnlineResult result;
    result.epochs = 1;
    SurplusResult s = walk_in_surplus(w, result);
    if (s.kind == SurplusResult::Halted) return finish_run(w, std::move(result));
    do_final_double(w, result);
    return finish_run(w, std::move(result));
}

OnlineResult run_algorithm(Environment& env, const std::string& name,
                           std::optional<double> switch_point) {
    if (name == "adaptive") return adaptive_online(env);
    if (name == "triple-always") return triple_always(env);
    if (name == "fixed-switch") return fixed_switch(env, switch_point);
    if (name == "greedy-double") return greedy_double(env);
    throw error(errc::invalid_argument, "unknown online algorithm: " + name);
}

SurplusProbe probe_surplus_walk(Environment& env) {
    Walker w(env);
    OnlineResult scratch;
    SurplusResult s = walk_in_surplus(w, scratch);
    return {s.kind == SurplusResult::GapFound, s.x};
}

DeficitProbe probe_deficit_walk(Environment& env) {
    Walker w(env);
    OnlineResult scratch;
    SurplusResult s = walk_in_surplus(w, scratch);
    if (s.kind != SurplusResult::GapFound) return {false, s.x};
    DeficitResult d = walk_in_deficit(w, scratch);
    return {d.kind == DeficitResult::Qualifying, d.y};
}

}  // namespace barrier::online
