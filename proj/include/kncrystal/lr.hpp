#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "kncrystal/admissible.hpp"
#include "kncrystal/alphabet.hpp"
#include "kncrystal/column_maps.hpp"
#include "kncrystal/enumerate.hpp"
#include "kncrystal/jdt.hpp"
#include "kncrystal/partition.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

// Order on tableaux matching the enumeration convention: columns left to
// right, entries top to bottom, letters in the alphabet order (for type D,
// n before n-bar at the shared level).
inline bool canonical_less(const Tableau& s, const Tableau& t, const Alphabet& a) {
    if (s.shape() != t.shape()) return s.shape() < t.shape();
    if (s.inner_shape() != t.inner_shape()) return s.inner_shape() < t.inner_shape();
    auto key = [&](Letter m) { return 2 * order_key(a, m) + (m < 0 ? 1 : 0); };
    for (int x = 1; x <= s.column_count(); ++x) {
        const Column& cs = s.column(x);
        const Column& ct = t.column(x);
        for (std::size_t i = 0; i < cs.size() && i < ct.size(); ++i) {
            if (key(cs[i]) != key(ct[i])) return key(cs[i]) < key(ct[i]);
        }
        if (cs.size() != ct.size()) return cs.size() < ct.size();
    }
    return false;
}

// The LR crystal: shape-nu KN tableaux whose far-eastern word is smooth on
// mu and grows mu into lambda.  Its cardinality is the branching
// multiplicity d_{mu,nu}^{lambda}.
struct LRCrystal {
    Alphabet alphabet;
    Partition lambda, mu, nu;
    std::vector<Tableau> elements;  // canonically sorted
};

inline std::map<Partition, std::vector<Tableau>> enumerate_lr_all(const Alphabet& a,
                                                                  const Partition& mu,
                                                                  const Partition& nu) {
    if (mu.length() > a.rank || nu.length() > a.rank)
        throw std::invalid_argument("shape has more than rank rows");
    std::map<Partition, std::vector<Tableau>> out;
    for_each_kn_tableau(a, nu, mu, LetterFilter::all,
                        [&](const Tableau& t, const Partition& lambda) {
                            out[lambda].push_back(t);
                        });
    for (auto& [lam, v] : out)
        std::sort(v.begin(), v.end(),
                  [&](const Tableau& s, const Tableau& t) { return canonical_less(s, t, a); });
    return out;
}

inline LRCrystal enumerate_lr(const Alphabet& a, const Partition& lambda, const Partition& mu,
                              const Partition& nu) {
    if (lambda.length() > a.rank) throw std::invalid_argument("shape has more than rank rows");
    LRCrystal cr{a, lambda, mu, nu, {}};
    for_each_kn_tableau(a, nu, mu, LetterFilter::all,
                        [&](const Tableau& t, const Partition& lam) {
                            if (lam == lambda) cr.elements.push_back(t);
                        });
    std::sort(cr.elements.begin(), cr.elements.end(),
              [&](const Tableau& s, const Tableau& t) { return canonical_less(s, t, a); });
    return cr;
}

// LR coefficient c_{mu,nu}^{lambda}: shape-nu tableaux over unbarred letters
// whose reading grows mu into lambda (the A-type LR crystal).
inline long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                           int n) {
    if (lambda.length() > n || mu.length() > n || nu.length() > n)
        throw std::invalid_argument("shape has more than rank rows");
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!lambda.contains(mu)) return 0;
    long count = 0;
    Alphabet a(LieType::A, n);
    for_each_kn_tableau(a, nu, mu, LetterFilter::all,
                        [&](const Tableau&, const Partition& lam) {
                            if (lam == lambda) ++count;
                        });
    return count;
}

// Memo for the triple sums below; LR coefficients depend only on the shapes
// once n covers their lengths.
struct LRCoefCache {
    std::map<std::tuple<Partition, Partition, Partition>, long> memo;

    long coef(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
        auto key = std::make_tuple(lambda, mu, nu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long v = lr_coefficient(lambda, mu, nu, n);
        memo.emplace(std::move(key), v);
        return v;
    }
};

// Sum over xi, zeta, eta of c_{xi,zeta}^{lambda} c_{zeta,eta}^{mu}
// c_{eta,xi}^{nu}; equals the branching multiplicity in the stable region.
inline long branching_rhs(const Partition& lambda, const Partition& mu, const Partition& nu,
                          int n, LRCoefCache* cache = nullptr) {
    LRCoefCache local;
    LRCoefCache& cc = cache ? *cache : local;
    long two_xi = lambda.size() - mu.size() + nu.size();
    long two_zeta = lambda.size() + mu.size() - nu.size();
    long two_eta = -lambda.size() + mu.size() + nu.size();
    if (two_xi < 0 || two_zeta < 0 || two_eta < 0) return 0;
    if (two_xi % 2 || two_zeta % 2 || two_eta % 2) return 0;
    int sx = static_cast<int>(two_xi / 2), sz = static_cast<int>(two_zeta / 2),
        se = static_cast<int>(two_eta / 2);

    auto contained = [&](int boxes, const Partition& s1, const Partition& s2) {
        std::vector<Partition> out;
        int max_len = std::min({n, s1.length(), s2.length(), boxes});
        int max_part = std::min(s1.row(1), s2.row(1));
        for (const Partition& p : partitions_of(boxes, max_len, max_part))
            if (s1.contains(p) && s2.contains(p)) out.push_back(p);
        return out;
    };

    long total = 0;
    for (const Partition& zeta : contained(sz, lambda, mu)) {
        for (const Partition& eta : contained(se, mu, nu)) {
            long c2 = cc.coef(mu, zeta, eta, n);
            if (!c2) continue;
            for (const Partition& xi : contained(sx, lambda, nu)) {
                long c1 = cc.coef(lambda, xi, zeta, n);
                if (!c1) continue;
                long c3 = cc.coef(nu, eta, xi, n);
                total += c1 * c2 * c3;
            }
        }
    }
    return total;
}

// Split a C_n-tableau into its unbarred part (a straight tableau) and barred
// part (a skew tableau on the complementary shape).
inline std::pair<Tableau, Tableau> split_plus_minus(const Tableau& t) {
    if (t.is_skew()) throw std::invalid_argument("split_plus_minus expects a straight shape");
    std::vector<int> plus_len;
    std::vector<Column> plus_cols, minus_cols;
    for (int x = 1; x <= t.column_count(); ++x) {
        const Column& c = t.column(x);
        Column p, m;
        for (Letter v : c) (v > 0 ? p : m).push_back(v);
        plus_len.push_back(static_cast<int>(p.size()));
        plus_cols.push_back(std::move(p));
        minus_cols.push_back(std::move(m));
    }
    auto xi_conj = Partition::try_make(plus_len);
    if (!xi_conj)
        throw std::invalid_argument("unbarred part is not a straight Young subtableau");
    Partition xi = xi_conj->conjugate();
    while (!plus_cols.empty() && plus_cols.back().empty()) plus_cols.pop_back();
    Tableau plus = Tableau::straight(xi, std::move(plus_cols));
    Tableau minus(t.shape(), xi, std::move(minus_cols));
    return {plus, minus};
}

// Rejoin an unbarred straight tableau and a barred skew filling of the
// complementary shape.
inline Tableau join_plus_minus(const Tableau& plus, const Tableau& minus) {
    if (minus.inner_shape() != plus.shape())
        throw std::invalid_argument("parts do not share the boundary shape");
    std::vector<Column> cols;
    for (int x = 1; x <= minus.column_count(); ++x) {
        Column c;
        if (x <= plus.column_count()) c = plus.column(x);
        const Column& m = minus.column(x);
        c.insert(c.end(), m.begin(), m.end());
        cols.push_back(std::move(c));
    }
    return Tableau::straight(minus.shape(), std::move(cols));
}

// The surjection underlying the branching formula: T maps to the unbarred
// part of Phi(T) and the rectified barred part.
inline std::pair<Tableau, Tableau> phi_projection(const Tableau& t, int n) {
    Tableau u = phi_tableau(t, n);
    auto [plus, minus] = split_plus_minus(u);
    return {plus, rectify(minus)};
}

struct FiberClass {
    Tableau plus, rect_minus;
    std::vector<Tableau> members;
};

inline std::vector<FiberClass> classify_fibers(const LRCrystal& cr) {
    std::map<std::pair<Tableau, Tableau>, std::vector<Tableau>> groups;
    for (const Tableau& t : cr.elements)
        groups[phi_projection(t, cr.alphabet.rank)].push_back(t);
    std::vector<FiberClass> out;
    for (auto& [key, members] : groups)
        out.push_back({key.first, key.second, std::move(members)});
    return out;
}

// All shape-nu semistandard fillings whose unbarred part equals `plus` and
// whose barred part rectifies to `rect_minus`; there are c_{xi,eta}^{nu} of
// them.
inline std::vector<Tableau> fillings_for(const Tableau& plus, const Tableau& rect_minus,
                                         const Partition& nu, int n) {
    const Partition& xi = plus.shape();
    if (!nu.contains(xi)) return {};
    if (xi.size() + rect_minus.shape().size() != nu.size()) return {};
    Partition nuc = nu.conjugate(), xic = xi.conjugate();
    int nc = nuc.length();
    std::vector<Column> cols(nc);
    std::vector<Tableau> out;

    auto rec = [&](auto&& self, int x, int cell) -> void {
        if (x > nc) {
            Tableau minus(nu, xi, cols);
            if (rectify(minus) == rect_minus) out.push_back(join_plus_minus(plus, minus));
            return;
        }
        int len = nuc.row(x) - xic.row(x);
        if (cell == len) {
            self(self, x + 1, 0);
            return;
        }
        int row = xic.row(x) + 1 + cell;  // 1-based row of this box
        for (int v = -n; v <= -1; ++v) {
            if (cell > 0 && cols[x - 1][cell - 1] >= v) continue;  // strict column
            if (x > 1) {
                // weak row increase against the left column, when that box is barred
                int left_top = xic.row(x - 1) + 1;
                int idx = row - left_top;
                if (idx >= 0 && idx < static_cast<int>(cols[x - 2].size()) &&
                    cols[x - 2][idx] > v)
                    continue;
            }
            cols[x - 1].push_back(v);
            self(self, x, cell + 1);
            cols[x - 1].pop_back();
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end(), [&](const Tableau& s, const Tableau& t) {
        return canonical_less(s, t, Alphabet(LieType::C, n));
    });
    return out;
}

// Psi applied to a filling assembled from a (plus, rect_minus) pair; in the
// stable region this lands back in the LR crystal.
inline Tableau psi_reconstruct(const Tableau& plus, const Tableau& rect_minus,
                               const Partition& nu, const Tableau& filling, int n) {
    if (filling.is_skew() || filling.shape() != nu)
        throw std::invalid_argument("filling does not have shape nu");
    Alphabet a(LieType::C, n);
    if (!is_semistandard(filling, a))
        throw std::invalid_argument("filling is not semistandard");
    auto [p, m] = split_plus_minus(filling);
    if (p != plus || rectify(m) != rect_minus)
        throw std::invalid_argument("filling does not project to the given pair");
    return psi_tableau(filling, n);
}

// Set comparison of the three LR crystals in the stable region
// (soundness of trading C_n for so_{2n+1} or so_{2n}).
struct StableBDReport {
    long size_b = 0, size_c = 0, size_d = 0;
    bool equal_bc = false, equal_dc = false;
    bool b_zero_free = true;
    bool d_word_order_ok = true;  // n precedes n-bar in every FE word

    bool all_ok() const { return equal_bc && equal_dc && b_zero_free && d_word_order_ok; }
};

inline StableBDReport verify_stable_BD(const Partition& lambda, const Partition& mu,
                                       const Partition& nu, int n) {
    LRCrystal b = enumerate_lr(Alphabet(LieType::B, n), lambda, mu, nu);
    LRCrystal c = enumerate_lr(Alphabet(LieType::C, n), lambda, mu, nu);
    LRCrystal d = enumerate_lr(Alphabet(LieType::D, n), lambda, mu, nu);
    StableBDReport rep;
    rep.size_b = static_cast<long>(b.elements.size());
    rep.size_c = static_cast<long>(c.elements.size());
    rep.size_d = static_cast<long>(d.elements.size());
    rep.equal_bc = b.elements == c.elements;
    rep.equal_dc = d.elements == c.elements;
    for (const Tableau& t : b.elements)
        for (int x = 1; x <= t.column_count(); ++x)
            for (Letter m : t.column(x))
                if (m == 0) rep.b_zero_free = false;
    for (const Tableau& t : d.elements) {
        auto w = fe_reading(t);
        auto first_n = std::find(w.begin(), w.end(), n);
        auto first_nbar = std::find(w.begin(), w.end(), -n);
        if (first_nbar != w.end() && first_nbar < first_n) rep.d_word_order_ok = false;
    }
    return rep;
}

}  // namespace kn
