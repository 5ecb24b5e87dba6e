#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "extal/errors.hpp"
#include "extal/lcs.hpp"
#include "extal/sequence.hpp"

namespace extal {

struct MatchPair {
    int i = 0;
    int j = 0;

    friend bool operator==(const MatchPair&, const MatchPair&) = default;
    friend auto operator<=>(const MatchPair&, const MatchPair&) = default;
};

/// Strictly increasing chain of match points (i_k, j_k).
struct Alignment {
    std::vector<MatchPair> pairs;

    int length() const { return static_cast<int>(pairs.size()); }
    bool empty() const { return pairs.empty(); }

    friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// Checks strict monotonicity in both coordinates, letter matching, and the
/// expected length. Throws ChainError on any violation.
inline void check_alignment(const Alignment& a, const Sequence& x, const Sequence& y,
                            int expected_length) {
    if (a.length() != expected_length) {
        throw ChainError("alignment length " + std::to_string(a.length()) + " != expected " +
                         std::to_string(expected_length));
    }
    for (std::size_t k = 0; k < a.pairs.size(); ++k) {
        const auto& p = a.pairs[k];
        if (p.i < 1 || p.i > x.length() || p.j < 1 || p.j > y.length()) {
            throw ChainError("pair out of range");
        }
        if (x.at(p.i) != y.at(p.j)) {
            throw ChainError("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                             ") is not a match");
        }
        if (k > 0 && (p.i <= a.pairs[k - 1].i || p.j <= a.pairs[k - 1].j)) {
            throw ChainError("chain not strictly increasing at rank " + std::to_string(k + 1));
        }
    }
}

struct ExtremalPair {
    Alignment highest;
    Alignment lowest;
    int lcs = 0;
    CoOptimalSet co_optimal;
};

/// Highest and lowest optimal alignments. Per rank k the highest takes the
/// co-optimal cell with maximal j (min i on ties) and the lowest the cell
/// with minimal j (max i on ties); within a rank class i and j are weakly
/// antitone, so these are the upper-left and lower-right corner cells.
inline ExtremalPair extremal_pair(const Sequence& x, const Sequence& y,
                                  std::uint64_t budget = default_cell_budget) {
    ExtremalPair out;
    out.co_optimal = co_optimal_cells(x, y, budget);
    out.lcs = out.co_optimal.lcs;
    out.highest.pairs.reserve(static_cast<std::size_t>(out.lcs));
    out.lowest.pairs.reserve(static_cast<std::size_t>(out.lcs));

    for (int k = 1; k <= out.lcs; ++k) {
        const std::size_t begin = out.co_optimal.rank_begin[static_cast<std::size_t>(k - 1)];
        const std::size_t end = out.co_optimal.rank_begin[static_cast<std::size_t>(k)];
        if (begin == end) throw ChainError("empty rank class " + std::to_string(k));
        MatchPair hi{out.co_optimal.cells[begin].i, out.co_optimal.cells[begin].j};
        MatchPair lo = hi;
        for (std::size_t t = begin + 1; t < end; ++t) {
            const auto& c = out.co_optimal.cells[t];
            if (c.j > hi.j || (c.j == hi.j && c.i < hi.i)) hi = MatchPair{c.i, c.j};
            if (c.j < lo.j || (c.j == lo.j && c.i > lo.i)) lo = MatchPair{c.i, c.j};
        }
        out.highest.pairs.push_back(hi);
        out.lowest.pairs.push_back(lo);
    }

    check_alignment(out.highest, x, y, out.lcs);
    check_alignment(out.lowest, x, y, out.lcs);
    for (int k = 0; k < out.lcs; ++k) {
        const auto& hi = out.highest.pairs[static_cast<std::size_t>(k)];
        const auto& lo = out.lowest.pairs[static_cast<std::size_t>(k)];
        if (hi.i > lo.i || hi.j < lo.j) {
            throw ChainError("dominance violated at rank " + std::to_string(k + 1));
        }
    }
    return out;
}

/// All distinct optimal alignments in lexicographic order of their pair
/// lists. Optimal alignments are exactly the strictly increasing chains that
/// take one co-optimal cell per rank 1..L; every partial chain extends, so a
/// plain DFS over rank classes enumerates them without dead ends.
/// For L = 0 the single empty alignment is returned.
inline std::vector<Alignment> enumerate_optimal_alignments(const Sequence& x, const Sequence& y,
                                                           std::uint64_t cap = 1'000'000,
                                                           std::uint64_t budget = default_cell_budget) {
    const CoOptimalSet set = co_optimal_cells(x, y, budget);
    std::vector<Alignment> out;
    if (set.lcs == 0) {
        out.emplace_back();
        return out;
    }

    std::vector<MatchPair> chain;
    chain.reserve(static_cast<std::size_t>(set.lcs));

    auto dfs = [&](auto&& self, int rank) -> void {
        if (rank > set.lcs) {
            if (static_cast<std::uint64_t>(out.size()) >= cap) throw TooManyAlignmentsError(cap);
            out.push_back(Alignment{chain});
            return;
        }
        const std::size_t begin = set.rank_begin[static_cast<std::size_t>(rank - 1)];
        const std::size_t end = set.rank_begin[static_cast<std::size_t>(rank)];
        for (std::size_t t = begin; t < end; ++t) {
            const auto& c = set.cells[t];
            if (!chain.empty() && (c.i <= chain.back().i || c.j <= chain.back().j)) continue;
            chain.push_back(MatchPair{c.i, c.j});
            self(self, rank + 1);
            chain.pop_back();
        }
    };
    dfs(dfs, 1);
    return out;
}

namespace detail {

// highest: lexicographically maximal j-sequence, then minimal i-sequence;
// lowest mirrored. Matches the per-rank corner construction.
inline bool higher_than(const Alignment& a, const Alignment& b) {
    for (std::size_t k = 0; k < a.pairs.size(); ++k) {
        if (a.pairs[k].j != b.pairs[k].j) return a.pairs[k].j > b.pairs[k].j;
    }
    for (std::size_t k = 0; k < a.pairs.size(); ++k) {
        if (a.pairs[k].i != b.pairs[k].i) return a.pairs[k].i < b.pairs[k].i;
    }
    return false;
}

inline bool lower_than(const Alignment& a, const Alignment& b) {
    for (std::size_t k = 0; k < a.pairs.size(); ++k) {
        if (a.pairs[k].j != b.pairs[k].j) return a.pairs[k].j < b.pairs[k].j;
    }
    for (std::size_t k = 0; k < a.pairs.size(); ++k) {
        if (a.pairs[k].i != b.pairs[k].i) return a.pairs[k].i > b.pairs[k].i;
    }
    return false;
}

}  // namespace detail

/// Brute-force reference: scans the full enumeration for the extremal pair.
/// Small instances only.
inline ExtremalPair oracle_extremal(const Sequence& x, const Sequence& y,
                                    std::uint64_t cap = 1'000'000,
                                    std::uint64_t budget = default_cell_budget) {
    const std::vector<Alignment> all = enumerate_optimal_alignments(x, y, cap, budget);
    ExtremalPair out;
    out.co_optimal = co_optimal_cells(x, y, budget);
    out.lcs = out.co_optimal.lcs;
    out.highest = all.front();
    out.lowest = all.front();
    for (const Alignment& a : all) {
        if (detail::higher_than(a, out.highest)) out.highest = a;
        if (detail::lower_than(a, out.lowest)) out.lowest = a;
    }
    const bool member_hi = std::find(all.begin(), all.end(), out.highest) != all.end();
    const bool member_lo = std::find(all.begin(), all.end(), out.lowest) != all.end();
    if (!member_hi || !member_lo) throw ChainError("oracle result not in enumeration");
    return out;
}

}  // namespace extal
