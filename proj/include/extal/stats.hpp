#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "extal/errors.hpp"
#include "extal/extremal.hpp"
#include "extal/lcs.hpp"
#include "extal/sequence.hpp"

namespace extal {

/// Piecewise-constant curve realization of an alignment: value(t) is the
/// partner coordinate of the last match point at or before t, 0 before the
/// first match. Right-continuous at match points, evaluated on 0..axis_len.
class StepCurve {
public:
    static StepCurve over_x(const Alignment& a, int n) {
        StepCurve c;
        c.axis_len_ = n;
        c.steps_.reserve(a.pairs.size());
        for (const auto& p : a.pairs) c.steps_.push_back({p.i, p.j});
        return c;
    }

    static StepCurve over_y(const Alignment& a, int m) {
        StepCurve c;
        c.axis_len_ = m;
        c.steps_.reserve(a.pairs.size());
        for (const auto& p : a.pairs) c.steps_.push_back({p.j, p.i});
        return c;
    }

    int value(int t) const {
        int v = 0;
        for (const auto& s : steps_) {
            if (s.where > t) break;
            v = s.height;
        }
        return v;
    }

    int axis_length() const { return axis_len_; }

    struct Cursor {
        std::size_t next = 0;
        int height = 0;
    };

    /// Advances the cursor to position t; calls must use non-decreasing t.
    int advance(Cursor& c, int t) const {
        while (c.next < steps_.size() && steps_[c.next].where <= t) {
            c.height = steps_[c.next].height;
            ++c.next;
        }
        return c.height;
    }

private:
    struct Step {
        int where;
        int height;
    };
    std::vector<Step> steps_;
    int axis_len_ = 0;
};

namespace detail {

// max over t = 0..axis of upper(t) - lower(t); every term must be >= 0.
inline int max_curve_gap(const StepCurve& upper, const StepCurve& lower, int axis) {
    StepCurve::Cursor cu, cl;
    int best = 0;
    for (int t = 0; t <= axis; ++t) {
        const int gap = upper.advance(cu, t) - lower.advance(cl, t);
        if (gap < 0) throw ChainError("extremal curves cross at t=" + std::to_string(t));
        best = std::max(best, gap);
    }
    return best;
}

}  // namespace detail

/// V: maximal pointwise gap between the extremal step curves along the Y
/// axis, scanned over X positions 0..n.
inline int vertical_distance(const ExtremalPair& pair, int n) {
    return detail::max_curve_gap(StepCurve::over_x(pair.highest, n),
                                 StepCurve::over_x(pair.lowest, n), n);
}

/// H: mirror of V with the roles of the axes swapped. The lowest alignment
/// lies to the right, so the gap is r_low - r_high.
inline int horizontal_distance(const ExtremalPair& pair, int m) {
    return detail::max_curve_gap(StepCurve::over_y(pair.lowest, m),
                                 StepCurve::over_y(pair.highest, m), m);
}

/// Ranks where the highest and lowest alignments share the same match point.
inline std::vector<MatchPair> uniqueness_pairs(const ExtremalPair& pair) {
    std::vector<MatchPair> out;
    for (std::size_t k = 0; k < pair.highest.pairs.size(); ++k) {
        if (pair.highest.pairs[k] == pair.lowest.pairs[k]) out.push_back(pair.highest.pairs[k]);
    }
    return out;
}

inline int uniqueness_points(const ExtremalPair& pair) {
    return static_cast<int>(uniqueness_pairs(pair).size());
}

namespace detail {

// longest run of positions 1..axis containing none of the given coordinates;
// sentinels 0 and axis+1 bound the first and last gap.
inline int max_gap_with_sentinels(const std::vector<int>& coords, int axis) {
    int best = 0;
    int prev = 0;
    for (int c : coords) {
        best = std::max(best, c - prev - 1);
        prev = c;
    }
    best = std::max(best, axis + 1 - prev - 1);
    return best;
}

}  // namespace detail

/// Longest interval of X positions without a uniqueness point. L = 0 gives n.
inline int non_uniqueness_stretch(const ExtremalPair& pair, int n) {
    std::vector<int> xs;
    for (const auto& p : uniqueness_pairs(pair)) xs.push_back(p.i);
    return detail::max_gap_with_sentinels(xs, n);
}

/// Same stretch measured along the Y axis (diagnostic, not the headline
/// statistic).
inline int non_uniqueness_stretch_y(const ExtremalPair& pair, int m) {
    std::vector<int> ys;
    for (const auto& p : uniqueness_pairs(pair)) ys.push_back(p.j);
    return detail::max_gap_with_sentinels(ys, m);
}

struct HomologyReport {
    std::string id_x;
    std::string id_y;
    int n = 0;
    int m = 0;
    int lcs = 0;
    int vertical = 0;
    int horizontal = 0;
    int sum = 0;
    int nonuniq_stretch = 0;
    int uniq_points = 0;
    // diagnostics
    std::int64_t co_optimal_cells = 0;
    int nonuniq_stretch_y = 0;
};

inline HomologyReport report_from_pair(const ExtremalPair& pair, const Sequence& x,
                                       const Sequence& y) {
    HomologyReport r;
    r.id_x = x.id;
    r.id_y = y.id;
    r.n = x.length();
    r.m = y.length();
    r.lcs = pair.lcs;
    r.vertical = vertical_distance(pair, r.n);
    r.horizontal = horizontal_distance(pair, r.m);
    r.sum = r.vertical + r.horizontal;
    r.nonuniq_stretch = non_uniqueness_stretch(pair, r.n);
    r.uniq_points = uniqueness_points(pair);
    r.co_optimal_cells = static_cast<std::int64_t>(pair.co_optimal.size());
    r.nonuniq_stretch_y = non_uniqueness_stretch_y(pair, r.m);
    return r;
}

inline HomologyReport compare(const Sequence& x, const Sequence& y,
                              std::uint64_t budget = default_cell_budget) {
    return report_from_pair(extremal_pair(x, y, budget), x, y);
}

}  // namespace extal
