#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kncrystal/admissible.hpp"
#include "kncrystal/alphabet.hpp"
#include "kncrystal/enumerate.hpp"
#include "kncrystal/partition.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

enum class Kashiwara { e, f };

// Crystal operator index range: 1..n for B, C, D; 1..n-1 for A.
inline int index_count(const Alphabet& a) {
    return a.type == LieType::A ? a.rank - 1 : a.rank;
}

// Arrows of the vector representation crystal.
//   A: i -> i+1
//   C: i -> i+1, (i+1)b -> ib (i < n); n -> nb
//   B: as C for i < n; n -> 0 -> nb
//   D: as C for i <= n-2; f_{n-1}: n-1 -> n, nb -> (n-1)b;
//      f_n: n-1 -> nb, n -> (n-1)b
inline std::optional<Letter> vector_rep_action(Kashiwara op, int i, Letter b, const Alphabet& a) {
    int n = a.rank;
    if (i < 1 || i > index_count(a)) throw std::invalid_argument("operator index out of range");
    if (a.type == LieType::D && n < 2) throw std::invalid_argument("type D needs rank >= 2");
    auto f = [&]() -> std::optional<Letter> {
        switch (a.type) {
            case LieType::A:
                if (b == i) return i + 1;
                return std::nullopt;
            case LieType::C:
                if (i < n) {
                    if (b == i) return i + 1;
                    if (b == -(i + 1)) return -i;
                    return std::nullopt;
                }
                if (b == n) return -n;
                return std::nullopt;
            case LieType::B:
                if (i < n) {
                    if (b == i) return i + 1;
                    if (b == -(i + 1)) return -i;
                    return std::nullopt;
                }
                if (b == n) return 0;
                if (b == 0) return -n;
                return std::nullopt;
            case LieType::D:
                if (i <= n - 2) {
                    if (b == i) return i + 1;
                    if (b == -(i + 1)) return -i;
                    return std::nullopt;
                }
                if (i == n - 1) {
                    if (b == n - 1) return n;
                    if (b == -n) return -(n - 1);
                    return std::nullopt;
                }
                if (b == n - 1) return -n;
                if (b == n) return -(n - 1);
                return std::nullopt;
        }
        return std::nullopt;
    };
    auto e = [&]() -> std::optional<Letter> {
        switch (a.type) {
            case LieType::A:
                if (b == i + 1) return i;
                return std::nullopt;
            case LieType::C:
                if (i < n) {
                    if (b == i + 1) return i;
                    if (b == -i) return -(i + 1);
                    return std::nullopt;
                }
                if (b == -n) return n;
                return std::nullopt;
            case LieType::B:
                if (i < n) {
                    if (b == i + 1) return i;
                    if (b == -i) return -(i + 1);
                    return std::nullopt;
                }
                if (b == 0) return n;
                if (b == -n) return 0;
                return std::nullopt;
            case LieType::D:
                if (i <= n - 2) {
                    if (b == i + 1) return i;
                    if (b == -i) return -(i + 1);
                    return std::nullopt;
                }
                if (i == n - 1) {
                    if (b == n) return n - 1;
                    if (b == -(n - 1)) return -n;
                    return std::nullopt;
                }
                if (b == -n) return n - 1;
                if (b == -(n - 1)) return n;
                return std::nullopt;
        }
        return std::nullopt;
    };
    return op == Kashiwara::f ? f() : e();
}

struct CrystalWord {
    Alphabet alphabet;
    std::vector<Letter> letters;

    friend bool operator==(const CrystalWord& a, const CrystalWord& b) {
        return a.letters == b.letters;
    }
};

namespace detail {

// Signature rule: each letter contributes "-"^eps "+"^phi; a "-" cancels the
// nearest surviving "+" to its left.  Survivors give the word statistics;
// e acts at the rightmost surviving "-", f at the leftmost surviving "+".
struct Signature {
    std::vector<int> plus_stack;     // positions of surviving "+"
    std::vector<int> minus_list;     // positions of surviving "-"
};

inline Signature signature(int i, const CrystalWord& w) {
    Signature s;
    for (std::size_t pos = 0; pos < w.letters.size(); ++pos) {
        Letter b = w.letters[pos];
        // per-letter string lengths; the B-type arrows n -> 0 -> n-bar make
        // these reach 2, everywhere else they are 0 or 1
        int eps = 0, phi = 0;
        for (Letter x = b; auto up = vector_rep_action(Kashiwara::e, i, x, w.alphabet); x = *up)
            ++eps;
        for (Letter x = b; auto dn = vector_rep_action(Kashiwara::f, i, x, w.alphabet); x = *dn)
            ++phi;
        for (int k = 0; k < eps; ++k) {
            if (!s.plus_stack.empty()) s.plus_stack.pop_back();
            else s.minus_list.push_back(static_cast<int>(pos));
        }
        for (int k = 0; k < phi; ++k) s.plus_stack.push_back(static_cast<int>(pos));
    }
    return s;
}

}  // namespace detail

inline std::pair<int, int> string_statistics(int i, const CrystalWord& w) {
    detail::Signature s = detail::signature(i, w);
    return {static_cast<int>(s.minus_list.size()), static_cast<int>(s.plus_stack.size())};
}

inline std::optional<CrystalWord> apply_kashiwara(Kashiwara op, int i, const CrystalWord& w) {
    detail::Signature s = detail::signature(i, w);
    int pos;
    if (op == Kashiwara::f) {
        if (s.plus_stack.empty()) return std::nullopt;
        pos = s.plus_stack.front();
    } else {
        if (s.minus_list.empty()) return std::nullopt;
        pos = s.minus_list.back();
    }
    CrystalWord out = w;
    auto img = vector_rep_action(op, i, out.letters[pos], out.alphabet);
    if (!img) throw std::logic_error("signature rule pointed at a fixed letter");
    out.letters[pos] = *img;
    return out;
}

inline bool is_highest_weight(const CrystalWord& w) {
    for (int i = 1; i <= index_count(w.alphabet); ++i)
        if (!detail::signature(i, w).minus_list.empty()) return false;
    return true;
}

inline bool is_highest_weight(const Tableau& t, const Alphabet& a) {
    return is_highest_weight(CrystalWord{a, fe_reading(t)});
}

// <alpha_i^vee, wt>: the coroot pairing entering Def 2.1 (1).
inline int coroot_pairing(const Alphabet& a, int i, const std::vector<int>& wt) {
    int n = a.rank;
    if (i < n) return wt[i - 1] - wt[i];
    switch (a.type) {
        case LieType::A: throw std::invalid_argument("operator index out of range");
        case LieType::C: return wt[n - 1];
        case LieType::B: return 2 * wt[n - 1];
        case LieType::D: return wt[n - 2] + wt[n - 1];
    }
    return 0;
}

// Kashiwara operator on a KN tableau through the far-eastern embedding.  The
// result is refilled into the same shape and must again be KN-admissible;
// anything else is an implementation bug.
inline std::optional<Tableau> tableau_kashiwara(Kashiwara op, int i, const Tableau& t,
                                                const Alphabet& a) {
    CrystalWord w{a, fe_reading(t)};
    auto res = apply_kashiwara(op, i, w);
    if (!res) return std::nullopt;
    Tableau out = from_word(t.shape(), res->letters);
    if (!is_semistandard(out, a) || !is_admissible_tableau(out, a))
        throw std::logic_error("Kashiwara operator left the KN tableau set");
    return out;
}

// Tensor product decomposition oracle: the multiplicity of B(lambda) in
// B(mu) (x) B(nu) equals the number of highest-weight elements of weight
// lambda, found by scanning concatenated far-eastern words.
inline std::map<Partition, long> decompose_tensor(const Partition& mu, const Partition& nu,
                                                  const Alphabet& a) {
    if (mu.length() > a.rank || nu.length() > a.rank)
        throw std::invalid_argument("shape has more than rank rows");
    std::vector<std::vector<Letter>> mu_hw;
    for_each_kn_tableau(a, mu, std::nullopt, LetterFilter::all,
                        [&](const Tableau& t, const Partition&) {
                            if (is_highest_weight(t, a)) mu_hw.push_back(fe_reading(t));
                        });
    std::map<Partition, long> out;
    for_each_kn_tableau(a, nu, std::nullopt, LetterFilter::all,
                        [&](const Tableau& t, const Partition&) {
                            std::vector<Letter> tail = fe_reading(t);
                            for (const auto& head : mu_hw) {
                                CrystalWord w{a, head};
                                w.letters.insert(w.letters.end(), tail.begin(), tail.end());
                                if (!is_highest_weight(w)) continue;
                                auto wt = word_weight(w.letters, a);
                                auto p = Partition::try_make(wt);
                                if (p) ++out[*p];
                            }
                        });
    return out;
}

}  // namespace kn
