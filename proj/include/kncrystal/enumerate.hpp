#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "kncrystal/admissible.hpp"
#include "kncrystal/alphabet.hpp"
#include "kncrystal/partition.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

enum class LetterFilter { all, unbarred_only, barred_only };

namespace detail {

// Incremental shape growth with O(1) apply/undo.  Rows are 1-based values in
// a fixed buffer of length rank; `alive` goes false permanently once a step
// leaves partition-land (only relevant transiently during backtracking).
struct ShapeState {
    std::vector<int> rows;
    int rank;

    explicit ShapeState(const Partition& p, int n) : rows(n, 0), rank(n) {
        for (int i = 1; i <= p.length(); ++i) rows[i - 1] = p.row(i);
    }

    // returns true and applies when the result is still a partition
    bool apply(Letter m) {
        if (m == 0) return rows[rank - 1] > 0;  // shape unchanged
        int i = letter_index(m);
        if (i > rank) return false;
        if (m > 0) {
            if (i >= 2 && rows[i - 2] < rows[i - 1] + 1) return false;
            ++rows[i - 1];
        } else {
            if (rows[i - 1] == 0) return false;
            if (i < rank && rows[i - 1] - 1 < rows[i]) return false;
            --rows[i - 1];
        }
        return true;
    }

    void undo(Letter m) {
        if (m == 0) return;
        int i = letter_index(m);
        rows[i - 1] -= m > 0 ? 1 : -1;
    }

    Partition to_partition() const { return Partition(rows); }
};

inline ColPair col_pair_raw(const Column& left, const Column& right) {
    ColPair cp;
    cp.rows = static_cast<int>(left.size());
    cp.left.assign(cp.rows + 1, kAbsent);
    cp.right.assign(cp.rows + 1, kAbsent);
    for (std::size_t i = 0; i < left.size(); ++i) cp.left[i + 1] = left[i];
    for (std::size_t i = 0; i < right.size(); ++i) cp.right[i + 1] = right[i];
    return cp;
}

inline bool adjacent_pair_ok(const Column& left, const Column& right, const Alphabet& a) {
    ColPair cp = col_pair_raw(left, right);
    switch (a.type) {
        case LieType::A: return true;
        case LieType::C: return check_c2(cp);
        case LieType::B:
            return check_b2_d4(cp, a.rank) && check_b3(cp, a.rank) && check_b4(cp, a.rank);
        case LieType::D:
            return check_b2_d4(cp, a.rank) && check_d5(cp, a.rank) && check_d6(cp, a.rank) &&
                   check_d7(cp, a.rank);
    }
    return true;
}

}  // namespace detail

// Enumerate KN-admissible semistandard tableaux of straight shape nu, columns
// generated rightmost first so the partial far-eastern word is always a
// prefix of the final one.  With a base shape, prune to words smooth on it
// and hand the landing shape to the visitor; without one the landing shape
// argument is the empty partition.
inline void for_each_kn_tableau(const Alphabet& a, const Partition& nu,
                                const std::optional<Partition>& base, LetterFilter filter,
                                const std::function<void(const Tableau&, const Partition&)>& visit) {
    if (nu.length() > a.rank) throw std::invalid_argument("shape has more than rank rows");
    Partition conj = nu.conjugate();
    int nc = conj.length();
    std::vector<Column> cols(nc);
    std::vector<Letter> letters = all_letters(a);
    if (filter == LetterFilter::unbarred_only)
        letters.erase(std::remove_if(letters.begin(), letters.end(),
                                     [](Letter m) { return m <= 0; }),
                      letters.end());
    if (filter == LetterFilter::barred_only)
        letters.erase(std::remove_if(letters.begin(), letters.end(),
                                     [](Letter m) { return m >= 0; }),
                      letters.end());

    detail::ShapeState shape(base.value_or(Partition{}), a.rank);
    bool track_shape = base.has_value();

    // D-type parity conventions still possible for the full-length column
    // block; bit 1 = plus, bit 2 = minus.
    auto column_done = [&](int x, int mask) -> int {
        const Column& c = cols[x - 1];
        if (!is_admissible_column(c, a)) return 0;
        if (a.type == LieType::D && static_cast<int>(c.size()) == a.rank) {
            mask &= static_cast<int>(d_column_parity(c, a.rank));
            if (mask == 0) return 0;
        }
        if (x < nc && !detail::adjacent_pair_ok(c, cols[x], a)) return 0;
        return mask;
    };

    auto rec = [&](auto&& self, int x, int cell, int mask) -> void {
        if (x == 0) {
            visit(Tableau::straight(nu, cols), track_shape ? shape.to_partition() : Partition{});
            return;
        }
        int len = conj.row(x);
        if (cell == len) {
            int m2 = column_done(x, mask);
            if (m2) self(self, x - 1, 0, m2);
            return;
        }
        for (Letter cand : letters) {
            if (cell > 0 && !column_step_ok(a, cols[x - 1][cell - 1], cand)) continue;
            if (x < nc && cell < static_cast<int>(cols[x].size()) &&
                !row_step_ok(a, cand, cols[x][cell]))
                continue;
            if (track_shape && !shape.apply(cand)) continue;
            cols[x - 1].push_back(cand);
            self(self, x, cell + 1, mask);
            cols[x - 1].pop_back();
            if (track_shape) shape.undo(cand);
        }
    };
    rec(rec, nc, 0, 3);
}

}  // namespace kn
