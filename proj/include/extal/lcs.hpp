#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "extal/errors.hpp"
#include "extal/sequence.hpp"

namespace extal {

// Cells per table before forward_table/backward_table refuse to allocate.
inline constexpr std::uint64_t default_cell_budget = 400'000'000;

inline void check_cell_budget(int n, int m, std::uint64_t budget) {
    std::uint64_t cells = (static_cast<std::uint64_t>(n) + 1) * (static_cast<std::uint64_t>(m) + 1);
    if (cells > budget) throw SizeLimitError(cells, budget);
}

enum class TableOrientation { forward, backward };

/// (n+1) x (m+1) grid of LCS prefix (forward) or suffix (backward) lengths.
/// Cell type is chosen by the caller; pick_cell_width() gives the smallest
/// unsigned type that holds max(n, m).
template <typename Cell>
class DpTable {
public:
    DpTable(int n, int m, TableOrientation orientation)
        : n_(n), m_(m), orientation_(orientation),
          cells_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(m + 1), 0) {}

    Cell at(int i, int j) const { return cells_[idx(i, j)]; }
    Cell& at(int i, int j) { return cells_[idx(i, j)]; }

    int n() const { return n_; }
    int m() const { return m_; }
    TableOrientation orientation() const { return orientation_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) +
               static_cast<std::size_t>(j);
    }

    int n_;
    int m_;
    TableOrientation orientation_;
    std::vector<Cell> cells_;
};

inline bool fits_u16(int n, int m) {
    return std::max(n, m) <= static_cast<int>(std::numeric_limits<std::uint16_t>::max());
}

template <typename Cell>
DpTable<Cell> forward_table(const Sequence& x, const Sequence& y,
                            std::uint64_t budget = default_cell_budget) {
    const int n = x.length(), m = y.length();
    check_cell_budget(n, m, budget);
    DpTable<Cell> t(n, m, TableOrientation::forward);
    for (int i = 1; i <= n; ++i) {
        const char xi = x.letters[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= m; ++j) {
            Cell best = std::max(t.at(i - 1, j), t.at(i, j - 1));
            if (xi == y.letters[static_cast<std::size_t>(j - 1)]) {
                best = std::max<Cell>(best, static_cast<Cell>(t.at(i - 1, j - 1) + 1));
            }
            t.at(i, j) = best;
        }
    }
    return t;
}

/// backward.at(i, j) = LCS of x[i+1..n] and y[j+1..m]; corner (0,0) holds L.
template <typename Cell>
DpTable<Cell> backward_table(const Sequence& x, const Sequence& y,
                             std::uint64_t budget = default_cell_budget) {
    const int n = x.length(), m = y.length();
    check_cell_budget(n, m, budget);
    DpTable<Cell> t(n, m, TableOrientation::backward);
    for (int i = n - 1; i >= 0; --i) {
        const char xi = x.letters[static_cast<std::size_t>(i)];
        for (int j = m - 1; j >= 0; --j) {
            Cell best = std::max(t.at(i + 1, j), t.at(i, j + 1));
            if (xi == y.letters[static_cast<std::size_t>(j)]) {
                best = std::max<Cell>(best, static_cast<Cell>(t.at(i + 1, j + 1) + 1));
            }
            t.at(i, j) = best;
        }
    }
    return t;
}

/// LCS length via two rolling rows; symmetric in its arguments.
inline int lcs_length(const Sequence& x, const Sequence& y,
                      std::uint64_t budget = default_cell_budget) {
    const int n = x.length(), m = y.length();
    check_cell_budget(n, m, budget);
    std::vector<std::uint32_t> prev(static_cast<std::size_t>(m) + 1, 0);
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const char xi = x.letters[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= m; ++j) {
            std::uint32_t best = std::max(prev[static_cast<std::size_t>(j)],
                                          cur[static_cast<std::size_t>(j - 1)]);
            if (xi == y.letters[static_cast<std::size_t>(j - 1)]) {
                best = std::max(best, prev[static_cast<std::size_t>(j - 1)] + 1);
            }
            cur[static_cast<std::size_t>(j)] = best;
        }
        std::swap(prev, cur);
    }
    return static_cast<int>(prev[static_cast<std::size_t>(m)]);
}

/// A match position (i, j) lying on at least one optimal alignment, with its
/// rank k inside such alignments: forward[i-1][j-1] + 1 + backward[i][j] = L
/// and k = forward[i-1][j-1] + 1.
struct CoOptimalCell {
    int i = 0;     // 1-based index into x
    int j = 0;     // 1-based index into y
    int rank = 0;  // 1..L

    friend bool operator==(const CoOptimalCell&, const CoOptimalCell&) = default;
};

struct CoOptimalSet {
    int lcs = 0;
    std::vector<CoOptimalCell> cells;  // sorted by (rank, i, j)
    std::vector<std::size_t> rank_begin;  // size lcs + 1; cells of rank k live in
                                          // [rank_begin[k-1], rank_begin[k])

    std::size_t size() const { return cells.size(); }
};

namespace detail {

template <typename Cell>
CoOptimalSet co_optimal_cells_impl(const Sequence& x, const Sequence& y, std::uint64_t budget) {
    const int n = x.length(), m = y.length();
    const DpTable<Cell> fwd = forward_table<Cell>(x, y, budget);
    const DpTable<Cell> bwd = backward_table<Cell>(x, y, budget);
    const int lcs = static_cast<int>(fwd.at(n, m));

    CoOptimalSet out;
    out.lcs = lcs;
    if (lcs == 0) {
        out.rank_begin.assign(1, 0);
        return out;
    }

    std::vector<std::size_t> count(static_cast<std::size_t>(lcs) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const char xi = x.letters[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= m; ++j) {
            if (xi != y.letters[static_cast<std::size_t>(j - 1)]) continue;
            if (static_cast<int>(fwd.at(i - 1, j - 1)) + 1 + static_cast<int>(bwd.at(i, j)) != lcs)
                continue;
            ++count[static_cast<std::size_t>(fwd.at(i - 1, j - 1))];
        }
    }
    out.rank_begin.assign(static_cast<std::size_t>(lcs) + 1, 0);
    for (int k = 1; k <= lcs; ++k) {
        out.rank_begin[static_cast<std::size_t>(k)] =
            out.rank_begin[static_cast<std::size_t>(k - 1)] + count[static_cast<std::size_t>(k - 1)];
    }
    out.cells.resize(out.rank_begin[static_cast<std::size_t>(lcs)]);

    // Row-major scan fills each rank bucket in (i, j) order directly.
    std::vector<std::size_t> cursor(out.rank_begin.begin(), out.rank_begin.end() - 1);
    for (int i = 1; i <= n; ++i) {
        const char xi = x.letters[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= m; ++j) {
            if (xi != y.letters[static_cast<std::size_t>(j - 1)]) continue;
            const int below = static_cast<int>(fwd.at(i - 1, j - 1));
            if (below + 1 + static_cast<int>(bwd.at(i, j)) != lcs) continue;
            out.cells[cursor[static_cast<std::size_t>(below)]++] = CoOptimalCell{i, j, below + 1};
        }
    }
    return out;
}

}  // namespace detail

inline CoOptimalSet co_optimal_cells(const Sequence& x, const Sequence& y,
                                     std::uint64_t budget = default_cell_budget) {
    if (fits_u16(x.length(), y.length())) {
        return detail::co_optimal_cells_impl<std::uint16_t>(x, y, budget);
    }
    return detail::co_optimal_cells_impl<std::uint32_t>(x, y, budget);
}

}  // namespace extal
