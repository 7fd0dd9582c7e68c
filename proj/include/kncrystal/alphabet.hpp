#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kn {

// Letters are signed integers: +k is the unbarred letter k, -k is the barred
// letter k-bar (1 <= k <= rank), and 0 is the B-type zero letter.
using Letter = int;

enum class LieType { A, B, C, D };

inline char lie_type_char(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
    }
    throw std::logic_error("bad LieType");
}

inline LieType lie_type_from_char(char c) {
    switch (c) {
        case 'A': return LieType::A;
        case 'B': return LieType::B;
        case 'C': return LieType::C;
        case 'D': return LieType::D;
    }
    throw std::invalid_argument(std::string("unknown Lie type: ") + c);
}

struct Alphabet {
    LieType type = LieType::C;
    int rank = 1;

    Alphabet() = default;
    Alphabet(LieType t, int n) : type(t), rank(n) {
        if (n < 1) throw std::invalid_argument("rank must be >= 1");
    }
};

inline bool is_barred(Letter m) { return m < 0; }
inline bool is_unbarred(Letter m) { return m > 0; }
inline bool is_zero(Letter m) { return m == 0; }
inline int letter_index(Letter m) { return m < 0 ? -m : m; }

inline bool letter_valid(const Alphabet& a, Letter m) {
    if (m == 0) return a.type == LieType::B;
    if (letter_index(m) > a.rank) return false;
    if (a.type == LieType::A && m < 0) return false;
    return true;
}

// Rank of a letter in the type-specific order, scaled by 2 so the B-type zero
// fits between n and n-bar.  For type D, n and n-bar share the same key; the
// extra semistandardness rules around that level live in tableau.hpp.
inline int order_key(const Alphabet& a, Letter m) {
    int n = a.rank;
    if (m == 0) {
        if (a.type != LieType::B) throw std::invalid_argument("zero letter outside type B");
        return 2 * n + 1;
    }
    if (letter_index(m) > n) throw std::invalid_argument("letter out of range");
    if (m > 0) return 2 * m;
    if (a.type == LieType::D && m == -n) return 2 * n;
    return 2 * (2 * n + 1 - letter_index(m));
}

// All letters in weakly increasing order of order_key.  For type D the pair
// n, n-bar shares a key and is listed in that order.
inline std::vector<Letter> all_letters(const Alphabet& a) {
    int n = a.rank;
    std::vector<Letter> out;
    for (int k = 1; k <= n; ++k) out.push_back(k);
    if (a.type == LieType::A) return out;
    if (a.type == LieType::B) out.push_back(0);
    for (int k = n; k >= 1; --k) out.push_back(-k);
    return out;
}

inline std::string letter_str(Letter m) { return std::to_string(m); }

}  // namespace kn
