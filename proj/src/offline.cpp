#include "offline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace barrier::offline {

namespace {

bool negative(double c) { return c < -epsilon(); }

bool qualifies_as_a(const Instance& inst, const BalanceTable& bal, std::size_t i) {
    double c = bal.values[i - 1];
    double two_r = 2.0 * inst.range();
    if (std::abs(c + two_r) <= epsilon()) {
        // balance exactly -2r counts only when collocated with the next sensor
        return i < inst.size() &&
               std::abs(inst.positions()[i] - inst.positions()[i - 1]) <= epsilon();
    }
    return c < -epsilon() && c > -two_r + epsilon();
}

}  // namespace

DelimiterList potential_delimiters(const Instance& inst, const BalanceTable& bal) {
    DelimiterList list;
    std::size_t scan_from = 1;  // first candidate b index not yet consumed
    for (std::size_t i = 1; i <= inst.size(); ++i) {
        if (!qualifies_as_a(inst, bal, i)) continue;
        std::size_t b = 0;
        for (std::size_t j = scan_from; j <= i; ++j) {
            if (negative(bal.values[j - 1])) {
                b = j;
                break;
            }
        }
        if (b == 0) b = i;  // a-sensor is itself the first pending deficit
        list.pairs.push_back({b, i});
        scan_from = i + 1;
    }
    return list;
}

AnchorInfo anchor_point(const Instance& inst, const BalanceTable& bal) {
    const std::size_t n = inst.size();
    const double L = inst.length();
    const double r = inst.range();

    // uncovered_sup[k] = rightmost point of [0, L] out of range of every
    // sensor in the suffix k+1..n (0 when the suffix alone covers [0, L]).
    std::vector<double> uncovered_sup(n + 1, 0.0);
    double sup = L;
    uncovered_sup[n] = sup;
    for (std::size_t j = n; j >= 1; --j) {
        double lo = inst.positions()[j - 1] - r;
        double hi = inst.positions()[j - 1] + r;
        if (sup > lo - epsilon() && sup < hi + epsilon()) sup = std::max(lo, 0.0);
        uncovered_sup[j - 1] = sup;
        if (j == 1) break;
    }

    AnchorInfo anchor;
    for (std::size_t k = 1; k <= n; ++k) {
        if (uncovered_sup[k] <= 2.0 * r * static_cast<double>(k) + epsilon()) {
            anchor.k = k;
            break;
        }
    }
    if (anchor.k == 0) anchor.k = n;  // feasibility guarantees 2rn >= L

    double ck = bal.values[anchor.k - 1];
    anchor.c = negative(ck) ? inst.positions()[anchor.k - 1] : inst.attached(anchor.k);
    return anchor;
}

std::vector<double> overheads(const Instance& inst, const BalanceTable& bal,
                              const DelimiterList& delims, const AnchorInfo& anchor) {
    (void)bal;
    std::size_t m = delims.count();
    std::vector<double> out(m + 1, 0.0);
    double triple_sum = 0.0;
    for (std::size_t j = 0; j <= m; ++j) {
        if (j > 0) {
            auto [b, a] = delims.pairs[j - 1];
            triple_sum += 2.0 * (inst.positions()[a - 1] - inst.attached(b));
        }
        if (j < m) {
            std::size_t next_b = delims.pairs[j].first;
            out[j] = (anchor.c - inst.attached(next_b)) + triple_sum;
        } else {
            out[j] = triple_sum;
        }
    }
    return out;
}

OfflineSolution solve_offline(const Instance& inst) {
    OfflineSolution sol;
    if (compute_gaps(inst).empty()) {
        sol.trajectory = Trajectory();  // already covered, robot does nothing
        return sol;
    }

    BalanceTable bal = coverage_balances(inst);
    AnchorInfo anchor = anchor_point(inst, bal);
    sol.anchor = anchor;

    // Only delimiters within the relocated prefix 1..k matter; sensors
    // beyond k never move.
    DelimiterList all = potential_delimiters(inst, bal);
    DelimiterList delims;
    for (auto& p : all.pairs)
        if (p.second <= anchor.k) delims.pairs.push_back(p);
    std::size_t m = delims.count();

    // First pending deficit after the last triple of each candidate; for
    // j < m that is b_{j+1}, for j = m the first negative past a_m (if any,
    // the straight finish is infeasible and a double is forced).
    auto first_negative_after = [&](std::size_t idx) -> std::size_t {
        for (std::size_t j = idx + 1; j <= anchor.k; ++j)
            if (negative(bal.values[j - 1])) return j;
        return 0;
    };

    std::vector<double> o = overheads(inst, bal, delims, anchor);
    std::size_t last_a = m > 0 ? delims.pairs[m - 1].second : 0;
    std::size_t trailing_deficit = first_negative_after(last_a);
    if (trailing_deficit != 0) {
        // straight finish after a_m would strand sensors that must move left
        o[m] = (anchor.c - inst.attached(trailing_deficit)) + o[m];
    }

    std::size_t best_j = 0;
    for (std::size_t j = 1; j <= m; ++j)
        if (o[j] < o[best_j] - epsilon()) best_j = j;

    std::vector<double> pts;
    pts.push_back(0.0);
    for (std::size_t i = 0; i < best_j; ++i) {
        auto [b, a] = delims.pairs[i];
        pts.push_back(inst.positions()[a - 1]);  // left turn at the a-sensor
        pts.push_back(inst.attached(b));         // right turn at b's attached spot
    }
    std::size_t pending = best_j < m ? delims.pairs[best_j].first : trailing_deficit;
    pts.push_back(anchor.c);
    if (pending != 0) {
        pts.push_back(inst.attached(pending));  // final double down to the deficit
        sol.ends_with_double = true;
    }
    sol.trajectory = Trajectory::from_points(pts);
    sol.triples = best_j;
    return sol;
}

Trajectory solve(const Instance& inst) { return solve_offline(inst).trajectory; }

}  // namespace barrier::offline
