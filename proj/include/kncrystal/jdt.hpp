#pragma once

#include <stdexcept>
#include <vector>

#include "kncrystal/partition.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

enum class CornerPolicy { topmost, bottommost };

namespace detail {

// Dense grid view of a skew tableau; barred letters compare by plain integer
// order, which agrees with the column order restricted to barred letters.
struct JdtGrid {
    std::vector<int> outer, inner;  // row lengths, 1-based via index-1
    std::vector<std::vector<Letter>> g;

    explicit JdtGrid(const Tableau& t) {
        outer.assign(t.shape().parts().begin(), t.shape().parts().end());
        inner.assign(outer.size(), 0);
        for (int r = 1; r <= t.inner_shape().length(); ++r)
            inner[r - 1] = t.inner_shape().row(r);
        g.assign(outer.size(), {});
        auto rows = t.rows();
        for (std::size_t r = 0; r < g.size(); ++r) {
            g[r].assign(outer[r], 0);
            for (int c = inner[r]; c < outer[r]; ++c) g[r][c] = rows[r][c - inner[r]];
        }
    }

    bool present(int r, int c) const {  // 1-based
        return r >= 1 && r <= static_cast<int>(outer.size()) && c > inner[r - 1] &&
               c <= outer[r - 1];
    }

    Letter at(int r, int c) const { return g[r - 1][c - 1]; }
    void set(int r, int c, Letter v) { g[r - 1][c - 1] = v; }

    Tableau to_tableau() const {
        std::vector<std::vector<Letter>> rows;
        std::vector<int> out, in;
        for (std::size_t r = 0; r < outer.size(); ++r) {
            if (outer[r] == 0) continue;
            out.push_back(outer[r]);
            in.push_back(inner[r]);
            rows.emplace_back(g[r].begin() + inner[r], g[r].begin() + outer[r]);
        }
        return Tableau::from_rows(Partition(out), Partition(in), rows);
    }
};

// One forward slide from the inside corner in row r0.  Ties move the box
// below the hole, keeping rows weak and columns strict.
inline void jdt_slide(JdtGrid& grid, int r0) {
    int r = r0, c = grid.inner[r0 - 1];
    --grid.inner[r0 - 1];
    for (;;) {
        bool right = grid.present(r, c + 1);
        bool below = grid.present(r + 1, c);
        if (!right && !below) break;
        if (below && (!right || grid.at(r + 1, c) <= grid.at(r, c + 1))) {
            grid.set(r, c, grid.at(r + 1, c));
            ++r;
        } else {
            grid.set(r, c, grid.at(r, c + 1));
            ++c;
        }
    }
    --grid.outer[r - 1];
    if (r < static_cast<int>(grid.outer.size()) && grid.outer[r - 1] < grid.outer[r])
        throw std::logic_error("jeu de taquin hole did not end at an outer corner");
}

inline int pick_corner(const JdtGrid& grid, CornerPolicy policy) {
    int rows = static_cast<int>(grid.outer.size());
    int found = 0;
    for (int r = 1; r <= rows; ++r) {
        if (grid.inner[r - 1] == 0) continue;
        if (r < rows && grid.inner[r] >= grid.inner[r - 1]) continue;  // not a corner of inner
        if (policy == CornerPolicy::topmost) return r;
        found = r;
    }
    return found;  // bottommost, or 0 when inner is empty
}

}  // namespace detail

// Rectification of a skew semistandard tableau over barred letters, sliding
// per Schutzenberger until the inner shape is gone.  Confluent: the corner
// policy does not change the result.
inline Tableau rectify(const Tableau& skew, CornerPolicy policy = CornerPolicy::topmost) {
    for (int x = 1; x <= skew.column_count(); ++x)
        for (Letter m : skew.column(x))
            if (m >= 0) throw std::invalid_argument("rectify expects barred letters only");
    detail::JdtGrid grid(skew);
    while (int r = detail::pick_corner(grid, policy)) detail::jdt_slide(grid, r);
    return grid.to_tableau();
}

// All intermediate tableaux S_0, ..., S_m of the rectification.
inline std::vector<Tableau> rectify_trace(const Tableau& skew,
                                          CornerPolicy policy = CornerPolicy::topmost) {
    detail::JdtGrid grid(skew);
    std::vector<Tableau> steps{grid.to_tableau()};
    while (int r = detail::pick_corner(grid, policy)) {
        detail::jdt_slide(grid, r);
        steps.push_back(grid.to_tableau());
    }
    return steps;
}

}  // namespace kn
