#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "kncrystal/alphabet.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

// Splitting data of a C_n-column: the unbarred values I, barred values J,
// the duplicated letters L = I cap J, the relocated letters L* (descending
// greedy, absent when the column cannot be split) and L-dagger (ascending
// greedy, absent when it runs past n), plus the counts N*(l) used by the
// coadmissibility test.
struct SplitData {
    std::vector<int> I, J;
    std::vector<int> L;
    std::optional<std::vector<int>> L_star;
    std::optional<std::vector<int>> L_dag;
    std::vector<std::pair<int, int>> N_star;  // (l, N*(l)) for l in L, ascending
};

inline SplitData split_letters(const Column& c, int n) {
    SplitData d;
    for (Letter m : c) {
        if (m > 0) d.I.push_back(m);
        else if (m < 0) d.J.push_back(-m);
        else throw std::invalid_argument("zero letter in a C_n-column");
    }
    std::sort(d.I.begin(), d.I.end());
    std::sort(d.J.begin(), d.J.end());
    std::set_intersection(d.I.begin(), d.I.end(), d.J.begin(), d.J.end(),
                          std::back_inserter(d.L));

    std::set<int> used(d.I.begin(), d.I.end());
    used.insert(d.J.begin(), d.J.end());

    // N*(l) = number of entries x with l <= x <= l-bar in the column order
    Alphabet alpha(LieType::C, n);
    for (int l : d.L) {
        int lo = order_key(alpha, l), hi = order_key(alpha, -l), cnt = 0;
        for (Letter m : c) {
            int k = order_key(alpha, m);
            if (lo <= k && k <= hi) ++cnt;
        }
        d.N_star.emplace_back(l, cnt);
    }

    // L*: for k = c..1, the largest letter below l_k avoiding all column
    // letters and the stars already chosen
    {
        std::set<int> avoid = used;
        std::vector<int> stars(d.L.size(), 0);
        bool ok = true;
        for (int k = static_cast<int>(d.L.size()) - 1; k >= 0 && ok; --k) {
            int cand = d.L[k] - 1;
            while (cand >= 1 && avoid.count(cand)) --cand;
            if (cand < 1) { ok = false; break; }
            stars[k] = cand;
            avoid.insert(cand);
        }
        if (ok) d.L_star = std::move(stars);
    }

    // L-dagger: for k = 1..c, the smallest letter above l_k avoiding all
    // column letters and the daggers already chosen
    {
        std::set<int> avoid = used;
        std::vector<int> dags(d.L.size(), 0);
        bool ok = true;
        for (std::size_t k = 0; k < d.L.size() && ok; ++k) {
            int cand = d.L[k] + 1;
            while (cand <= n && avoid.count(cand)) ++cand;
            if (cand > n) { ok = false; break; }
            dags[k] = cand;
            avoid.insert(cand);
        }
        if (ok) d.L_dag = std::move(dags);
    }
    return d;
}

// One-column KN condition.  Type C constrains every (unbarred, barred) pair,
// types B and D only the equal pairs (i, i-bar); type D additionally needs a
// consistent parity convention on full-length columns (see below).
enum class DParity { none = 0, plus = 1, minus = 2, either = 3 };

inline DParity d_column_parity(const Column& c, int n) {
    bool plus_ok = true, minus_ok = true;
    bool saw = false;
    for (std::size_t p = 0; p < c.size(); ++p) {
        int k = static_cast<int>(p) + 1;
        if (c[p] == n) {
            saw = true;
            if ((n - k) % 2 != 0) plus_ok = false;
            if ((n - k) % 2 == 0) minus_ok = false;
        } else if (c[p] == -n) {
            saw = true;
            if ((n - k) % 2 == 0) plus_ok = false;
            if ((n - k) % 2 != 0) minus_ok = false;
        }
    }
    if (!saw) return DParity::either;
    if (plus_ok && minus_ok) return DParity::either;
    if (plus_ok) return DParity::plus;
    if (minus_ok) return DParity::minus;
    return DParity::none;
}

inline bool is_admissible_column(const Column& c, const Alphabet& a) {
    int N = static_cast<int>(c.size());
    int n = a.rank;
    if (a.type == LieType::A) return true;
    if (a.type == LieType::C) {
        // (C1): every a at p above b-bar at q needs (q - p) + max(a, b) > N
        for (int p = 0; p < N; ++p) {
            if (c[p] <= 0) continue;
            for (int q = p + 1; q < N; ++q) {
                if (c[q] >= 0) continue;
                if ((q - p) + std::max(c[p], -c[q]) <= N) return false;
            }
        }
        return true;
    }
    // (B1)/(D1): i at p above i-bar at q needs (q - p) + i > N
    for (int p = 0; p < N; ++p) {
        if (c[p] <= 0) continue;
        for (int q = p + 1; q < N; ++q) {
            if (c[q] != -c[p]) continue;
            if ((q - p) + c[p] <= N) return false;
        }
    }
    if (a.type == LieType::D && N == n && d_column_parity(c, n) == DParity::none)
        return false;
    return true;
}

// KN-coadmissibility of a C_n-column: N*(l) <= n - l + 1 for every l in L.
inline bool is_coadmissible_column(const Column& c, int n) {
    SplitData d = split_letters(c, n);
    for (auto [l, cnt] : d.N_star)
        if (cnt > n - l + 1) return false;
    return true;
}

namespace detail {

// Sentinel for an absent box; distinct from every letter including the
// B-type zero.
inline constexpr Letter kAbsent = -1 << 20;

// Adjacent-column configuration tests.  Positions p, q, r, s are 1-based row
// indices; `left`/`right` fetch the entry of the respective column in a given
// row (kAbsent when the box is missing).
struct ColPair {
    std::vector<Letter> left, right;
    int rows;
};

inline ColPair make_col_pair(const Tableau& t, int x) {
    ColPair cp;
    cp.rows = t.shape().conjugate().row(x);
    cp.left.assign(cp.rows + 1, kAbsent);
    cp.right.assign(cp.rows + 1, kAbsent);
    Partition ic = t.inner_shape().conjugate();
    for (std::size_t i = 0; i < t.column(x).size(); ++i)
        cp.left[ic.row(x) + 1 + i] = t.column(x)[i];
    for (std::size_t i = 0; i < t.column(x + 1).size(); ++i)
        cp.right[ic.row(x + 1) + 1 + i] = t.column(x + 1)[i];
    return cp;
}

// (C2): configurations
//   a1@(p,L), b1@(q,R), b2bar@(r,R), a2bar@(s,R)   and
//   a1@(p,L), b1@(q,L), b2bar@(r,L), a2bar@(s,R)
// with p <= q < r <= s, a1 <= b1, a2 <= b2, all values unbarred, demand
// (q - p) + (s - r) < max(b1, b2) - min(a1, a2).
inline bool check_c2(const ColPair& cp) {
    auto barred_value = [](Letter v) { return v != kAbsent && v < 0 ? -v : 0; };
    for (int p = 1; p <= cp.rows; ++p) {
        Letter a1 = cp.left[p];
        if (a1 == kAbsent || a1 <= 0) continue;
        for (int variant = 0; variant < 2; ++variant) {
            const std::vector<Letter>& mid = variant == 0 ? cp.right : cp.left;
            for (int q = p; q <= cp.rows; ++q) {
                Letter b1 = mid[q];
                if (b1 == kAbsent || b1 <= 0 || b1 < a1) continue;
                for (int r = q + 1; r <= cp.rows; ++r) {
                    int b2 = barred_value(mid[r]);
                    if (b2 == 0) continue;
                    for (int s = r; s <= cp.rows; ++s) {
                        int a2 = barred_value(cp.right[s]);
                        if (a2 == 0 || a2 > b2) continue;
                        if ((q - p) + (s - r) >= std::max<int>(b1, b2) - std::min<int>(a1, a2))
                            return false;
                    }
                }
            }
        }
    }
    return true;
}

// (B2)/(D4): same two zigzag configurations with a single pair a <= b < n,
// demand (q - p) + (s - r) < b - a.
inline bool check_b2_d4(const ColPair& cp, int n) {
    for (int p = 1; p <= cp.rows; ++p) {
        Letter a = cp.left[p];
        if (a == kAbsent || a <= 0 || a >= n) continue;
        for (int variant = 0; variant < 2; ++variant) {
            const std::vector<Letter>& mid = variant == 0 ? cp.right : cp.left;
            for (int q = p; q <= cp.rows; ++q) {
                Letter b = mid[q];
                if (b < a || b <= 0 || b >= n) continue;
                for (int r = q + 1; r <= cp.rows; ++r) {
                    if (mid[r] != -b) continue;
                    for (int s = r; s <= cp.rows; ++s) {
                        if (cp.right[s] != -a) continue;
                        if ((q - p) + (s - r) >= b - a) return false;
                    }
                }
            }
        }
    }
    return true;
}

// (B3): a@(p,L), a-bar@(s,R), and in rows q, r = q+1 (same column, either
// side) one of the vertical dominoes n|n-bar, n|0, 0|0, 0|n-bar; demand
// s - p - 1 < n - a.
inline bool check_b3(const ColPair& cp, int n) {
    auto domino = [&](Letter top, Letter bot) {
        return (top == n && bot == -n) || (top == n && bot == 0) ||
               (top == 0 && bot == 0) || (top == 0 && bot == -n);
    };
    for (int p = 1; p <= cp.rows; ++p) {
        Letter a = cp.left[p];
        if (a <= 0 || a >= n) continue;
        for (int s = p; s <= cp.rows; ++s) {
            if (cp.right[s] != -a) continue;
            for (int q = p; q + 1 <= s; ++q) {
                int r = q + 1;
                if (domino(cp.right[q], cp.right[r]) || domino(cp.left[q], cp.left[r]))
                    if (s - p - 1 >= n - a) return false;
            }
        }
    }
    return true;
}

// (B4): forbidden pairs with p < s: {n,0}@(p,L) against {0,n-bar}@(s,R).
inline bool check_b4(const ColPair& cp, int n) {
    for (int p = 1; p <= cp.rows; ++p) {
        if (!(cp.left[p] == n || cp.left[p] == 0)) continue;
        for (int s = p + 1; s <= cp.rows; ++s)
            if (cp.right[s] == 0 || cp.right[s] == -n) return false;
    }
    return true;
}

// (D5): like (B3) with the dominoes n|n-bar and n-bar|n.
inline bool check_d5(const ColPair& cp, int n) {
    auto domino = [&](Letter top, Letter bot) {
        return (top == n && bot == -n) || (top == -n && bot == n);
    };
    for (int p = 1; p <= cp.rows; ++p) {
        Letter a = cp.left[p];
        if (a <= 0 || a >= n) continue;
        for (int s = p; s <= cp.rows; ++s) {
            if (cp.right[s] != -a) continue;
            for (int q = p; q + 1 <= s; ++q) {
                int r = q + 1;
                if (domino(cp.right[q], cp.right[r]) || domino(cp.left[q], cp.left[r]))
                    if (s - p - 1 >= n - a) return false;
            }
        }
    }
    return true;
}

// (D6): forbidden pairs with p < s: any of n, n-bar at (p,L) against any of
// n, n-bar at (s,R).
inline bool check_d6(const ColPair& cp, int n) {
    for (int p = 1; p <= cp.rows; ++p) {
        if (letter_index(cp.left[p]) != n || cp.left[p] == 0) continue;
        for (int s = p + 1; s <= cp.rows; ++s)
            if (letter_index(cp.right[s]) == n && cp.right[s] != 0) return false;
    }
    return true;
}

// (D7): a@(p,L), X@(q,R), Y@(r,L), a-bar@(s,R) with X, Y in {n, n-bar},
// p <= q < r <= s, a < n; X != Y when r - q + 1 is odd, X == Y when even;
// demand s - p < n - a.
inline bool check_d7(const ColPair& cp, int n) {
    for (int p = 1; p <= cp.rows; ++p) {
        Letter a = cp.left[p];
        if (a <= 0 || a >= n) continue;
        for (int q = p; q <= cp.rows; ++q) {
            Letter X = cp.right[q];
            if (letter_index(X) != n || X == 0) continue;
            for (int r = q + 1; r <= cp.rows; ++r) {
                Letter Y = cp.left[r];
                if (letter_index(Y) != n || Y == 0) continue;
                bool odd = (r - q + 1) % 2 != 0;
                if (odd && X == Y) continue;
                if (!odd && X != Y) continue;
                for (int s = r; s <= cp.rows; ++s) {
                    if (cp.right[s] != -a) continue;
                    if (s - p >= n - a) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace detail

// Parity convention of the block of full-length columns of a D_n-tableau,
// intersected over all such columns.
inline DParity d_block_convention(const Tableau& t, int n) {
    int mask = 3;
    for (int x = 1; x <= t.column_count(); ++x) {
        if (static_cast<int>(t.column(x).size()) != n || t.column_top_row(x) != 1) continue;
        mask &= static_cast<int>(d_column_parity(t.column(x), n));
    }
    return static_cast<DParity>(mask);
}

inline bool is_admissible_tableau(const Tableau& t, const Alphabet& a) {
    if (t.is_skew()) throw std::invalid_argument("admissibility is defined for straight shapes");
    for (int x = 1; x <= t.column_count(); ++x)
        if (!is_admissible_column(t.column(x), a)) return false;
    if (a.type == LieType::D && d_block_convention(t, a.rank) == DParity::none) return false;
    for (int x = 1; x + 1 <= t.column_count(); ++x) {
        detail::ColPair cp = detail::make_col_pair(t, x);
        switch (a.type) {
            case LieType::A: break;
            case LieType::C:
                if (!detail::check_c2(cp)) return false;
                break;
            case LieType::B:
                if (!detail::check_b2_d4(cp, a.rank)) return false;
                if (!detail::check_b3(cp, a.rank)) return false;
                if (!detail::check_b4(cp, a.rank)) return false;
                break;
            case LieType::D:
                if (!detail::check_b2_d4(cp, a.rank)) return false;
                if (!detail::check_d5(cp, a.rank)) return false;
                if (!detail::check_d6(cp, a.rank)) return false;
                if (!detail::check_d7(cp, a.rank)) return false;
                break;
        }
    }
    return true;
}

}  // namespace kn
