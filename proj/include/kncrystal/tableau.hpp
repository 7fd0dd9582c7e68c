#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kncrystal/alphabet.hpp"
#include "kncrystal/partition.hpp"

namespace kn {

// One column, entries top to bottom.
using Column = std::vector<Letter>;

// Shape + fillings, stored column-wise.  inner_shape() is empty for straight
// shapes; a nonempty inner shape makes this a skew tableau whose columns hold
// only the present boxes.
class Tableau {
  public:
    Tableau() = default;

    Tableau(Partition outer, Partition inner, std::vector<Column> cols)
        : outer_(std::move(outer)), inner_(std::move(inner)), cols_(std::move(cols)) {
        if (!outer_.contains(inner_)) throw std::invalid_argument("inner shape not contained in outer");
        Partition oc = outer_.conjugate(), ic = inner_.conjugate();
        if (static_cast<int>(cols_.size()) != oc.length())
            throw std::invalid_argument("column count does not match shape");
        for (int x = 1; x <= oc.length(); ++x) {
            if (static_cast<int>(cols_[x - 1].size()) != oc.row(x) - ic.row(x))
                throw std::invalid_argument("column length does not match shape");
        }
    }

    static Tableau straight(Partition shape, std::vector<Column> cols) {
        return Tableau(std::move(shape), Partition{}, std::move(cols));
    }

    static Tableau from_rows(Partition outer, Partition inner,
                             const std::vector<std::vector<Letter>>& rows) {
        if (static_cast<int>(rows.size()) != outer.length())
            throw std::invalid_argument("row count does not match shape");
        Partition oc = outer.conjugate();
        std::vector<Column> cols(oc.length());
        for (int r = 1; r <= outer.length(); ++r) {
            int lo = inner.row(r), hi = outer.row(r);
            if (static_cast<int>(rows[r - 1].size()) != hi - lo)
                throw std::invalid_argument("row length does not match shape");
            for (int c = lo + 1; c <= hi; ++c) cols[c - 1].push_back(rows[r - 1][c - lo - 1]);
        }
        return Tableau(std::move(outer), std::move(inner), std::move(cols));
    }

    const Partition& shape() const { return outer_; }
    const Partition& inner_shape() const { return inner_; }
    bool is_skew() const { return !inner_.empty(); }
    int box_count() const { return outer_.size() - inner_.size(); }
    int column_count() const { return static_cast<int>(cols_.size()); }

    const Column& column(int x) const { return cols_.at(x - 1); }
    Column& column_mut(int x) { return cols_.at(x - 1); }

    // 1-based row index of the topmost present box of column x
    int column_top_row(int x) const { return inner_.conjugate().row(x) + 1; }

    // entry at (row r, column c), 1-based; nullopt if the box is absent
    std::optional<Letter> cell(int r, int c) const {
        if (c < 1 || c > column_count()) return std::nullopt;
        int top = inner_.conjugate().row(c);
        if (r <= top || r > top + static_cast<int>(cols_[c - 1].size())) return std::nullopt;
        return cols_[c - 1][r - 1 - top];
    }

    std::vector<std::vector<Letter>> rows() const {
        std::vector<std::vector<Letter>> out(outer_.length());
        Partition ic = inner_.conjugate();
        for (int c = 1; c <= column_count(); ++c) {
            int top = ic.row(c);
            for (std::size_t i = 0; i < cols_[c - 1].size(); ++i)
                out[top + i].push_back(cols_[c - 1][i]);
        }
        return out;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

  private:
    Partition outer_, inner_;
    std::vector<Column> cols_;
};

// Far-eastern reading: rightmost column first, each column top to bottom;
// absent boxes of a skew tableau are simply skipped.
inline std::vector<Letter> fe_reading(const Tableau& t) {
    std::vector<Letter> word;
    for (int x = t.column_count(); x >= 1; --x) {
        const Column& c = t.column(x);
        word.insert(word.end(), c.begin(), c.end());
    }
    return word;
}

inline std::vector<int> word_weight(std::span<const Letter> word, const Alphabet& a) {
    std::vector<int> wt(a.rank, 0);
    for (Letter m : word) {
        if (m > 0) ++wt[m - 1];
        else if (m < 0) --wt[-m - 1];
    }
    return wt;
}

inline std::vector<int> weight(const Tableau& t, const Alphabet& a) {
    auto w = fe_reading(t);
    return word_weight(w, a);
}

// Inverse of fe_reading for a fixed straight shape.  Performs no
// semistandardness check; that is a separate predicate.
inline Tableau from_word(const Partition& shape, std::span<const Letter> word) {
    if (static_cast<int>(word.size()) != shape.size())
        throw std::invalid_argument("word length does not match shape size");
    Partition conj = shape.conjugate();
    std::vector<Column> cols(conj.length());
    std::size_t pos = 0;
    for (int x = conj.length(); x >= 1; --x) {
        cols[x - 1].assign(word.begin() + pos, word.begin() + pos + conj.row(x));
        pos += conj.row(x);
    }
    return Tableau::straight(shape, std::move(cols));
}

// Column rule: strictly increasing, except that B-type zeros may repeat and
// the D-type pair n, n-bar may alternate in consecutive boxes.
inline bool column_step_ok(const Alphabet& a, Letter above, Letter below) {
    int ka = order_key(a, above), kb = order_key(a, below);
    if (ka < kb) return true;
    if (ka > kb) return false;
    if (a.type == LieType::B && above == 0 && below == 0) return true;
    if (a.type == LieType::D && above != below && letter_index(above) == a.rank) return true;
    return false;
}

// Row rule: weakly increasing, except that B-type zeros may not repeat and a
// D-type row never holds both n and n-bar (adjacent check suffices: any two
// cells at the n level are separated only by other n-level cells).
inline bool row_step_ok(const Alphabet& a, Letter left, Letter right) {
    int kl = order_key(a, left), kr = order_key(a, right);
    if (kl > kr) return false;
    if (a.type == LieType::B && left == 0 && right == 0) return false;
    if (a.type == LieType::D && kl == kr && left != right) return false;
    return true;
}

inline bool is_semistandard(const Tableau& t, const Alphabet& a) {
    for (int x = 1; x <= t.column_count(); ++x) {
        const Column& c = t.column(x);
        for (Letter m : c)
            if (!letter_valid(a, m)) return false;
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (!column_step_ok(a, c[i], c[i + 1])) return false;
    }
    for (const auto& row : t.rows()) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            if (!row_step_ok(a, row[i], row[i + 1])) return false;
        if (a.type == LieType::D) {
            bool has_n = false, has_nbar = false;
            for (Letter m : row) {
                if (m == a.rank) has_n = true;
                if (m == -a.rank) has_nbar = true;
            }
            if (has_n && has_nbar) return false;
        }
    }
    return true;
}

inline bool is_valid_column(const Column& c, const Alphabet& a) {
    for (Letter m : c)
        if (!letter_valid(a, m)) return false;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!column_step_ok(a, c[i], c[i + 1])) return false;
    return true;
}

}  // namespace kn
