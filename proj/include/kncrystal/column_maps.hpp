#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kncrystal/admissible.hpp"
#include "kncrystal/alphabet.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

enum class SplitVariant { first_kind, second_kind };

// 2 x n slot diagram of a column: slot k records which of k, k-bar the column
// contains; cross marks a freshly relocated pair.  Debug/trace aid only.
enum class Slot : unsigned char { empty, plus, minus, plus_minus, cross };

struct FillingDiagram {
    std::vector<Slot> slots;  // slot k at index k-1
};

inline FillingDiagram filling_diagram(const Column& c, int n,
                                      const std::set<int>& fresh = {}) {
    FillingDiagram d;
    d.slots.assign(n, Slot::empty);
    for (Letter m : c) {
        int k = letter_index(m);
        Slot& s = d.slots[k - 1];
        if (m > 0) s = (s == Slot::minus || s == Slot::plus_minus) ? Slot::plus_minus : Slot::plus;
        else s = (s == Slot::plus || s == Slot::plus_minus) ? Slot::plus_minus : Slot::minus;
    }
    for (int k : fresh)
        if (d.slots[k - 1] == Slot::plus_minus) d.slots[k - 1] = Slot::cross;
    return d;
}

namespace detail {

struct ColumnParts {
    std::vector<int> up;    // unbarred values, top to bottom
    std::vector<int> down;  // barred values (as positive ints), top to bottom
};

inline ColumnParts column_parts(const Column& c) {
    ColumnParts p;
    for (Letter m : c) {
        if (m > 0) p.up.push_back(m);
        else if (m < 0) p.down.push_back(-m);
        else throw std::invalid_argument("zero letter in a C_n-column");
    }
    return p;
}

inline Column assemble(const std::vector<int>& up, const std::vector<int>& down) {
    Column c;
    for (int v : up) c.push_back(v);
    for (int v : down) c.push_back(-v);
    return c;
}

inline Column assemble_sorted(std::set<int> up, std::set<int> down) {
    Column c;
    for (int v : up) c.push_back(v);
    for (auto it = down.rbegin(); it != down.rend(); ++it) c.push_back(-*it);
    return c;
}

// Shared state of the second-kind block algorithms.  `pinned` holds values
// whose boxes later operations must not touch: relocated stars/daggers and
// their non-L block companions.
struct SecondKind {
    std::vector<int> up, down;
    std::set<int> present;  // values present in either part
    std::set<int> pinned;

    explicit SecondKind(const Column& c) {
        ColumnParts p = column_parts(c);
        up = std::move(p.up);
        down = std::move(p.down);
        present.insert(up.begin(), up.end());
        present.insert(down.begin(), down.end());
    }

    bool movable(int v, int lo, int hi) const {
        return lo < v && v < hi && !pinned.count(v);
    }

    // the unpinned values of the open interval (lo, hi) must be exactly the
    // contiguous block seq[begin, end)
    void check_run(const std::vector<int>& seq, std::size_t begin, std::size_t end,
                   int lo, int hi) const {
        std::set<int> expect;
        for (int v : seq)
            if (movable(v, lo, hi)) expect.insert(v);
        std::set<int> got(seq.begin() + begin, seq.begin() + end);
        if (expect != got)
            throw std::logic_error("column splitting: in-between block is not contiguous");
    }
};

// Operation for l -> l* of the second-kind phi algorithm: operation (A)
// swaps l with the block of in-between letters, operation (B) expels the
// next L-letters of that block to keep them adjacent to the upcoming step.
inline void phi_second_step(SecondKind& st, int l, int star) {
    // unbarred side
    {
        auto pos = std::find(st.up.begin(), st.up.end(), l) - st.up.begin();
        auto first = pos;
        while (first > 0 && st.movable(st.up[first - 1], star, l)) --first;
        st.check_run(st.up, first, pos, star, l);
        std::vector<int> run(st.up.begin() + first, st.up.begin() + pos);
        std::vector<int> gamma, rest;
        for (int v : run)
            if (std::count(st.down.begin(), st.down.end(), v)) gamma.push_back(v);
            else rest.push_back(v);
        std::sort(gamma.begin(), gamma.end());
        std::sort(rest.begin(), rest.end());
        std::vector<int> seg;
        seg.insert(seg.end(), gamma.begin(), gamma.end());
        seg.push_back(star);
        seg.insert(seg.end(), rest.begin(), rest.end());
        std::copy(seg.begin(), seg.end(), st.up.begin() + first);
        for (int v : rest) st.pinned.insert(v);
    }
    // barred side
    {
        auto pos = std::find(st.down.begin(), st.down.end(), l) - st.down.begin();
        auto last = pos;
        while (last + 1 < static_cast<long>(st.down.size()) &&
               st.movable(st.down[last + 1], star, l))
            ++last;
        st.check_run(st.down, pos + 1, last + 1, star, l);
        std::vector<int> run(st.down.begin() + pos + 1, st.down.begin() + last + 1);
        std::vector<int> gamma, rest;
        for (int v : run)
            if (std::count(st.up.begin(), st.up.end(), v)) gamma.push_back(v);
            else rest.push_back(v);
        std::sort(gamma.rbegin(), gamma.rend());
        std::sort(rest.rbegin(), rest.rend());
        std::vector<int> seg;
        seg.insert(seg.end(), rest.begin(), rest.end());
        seg.push_back(star);
        seg.insert(seg.end(), gamma.begin(), gamma.end());
        std::copy(seg.begin(), seg.end(), st.down.begin() + pos);
        for (int v : rest) st.pinned.insert(v);
    }
    st.present.erase(l);
    st.present.insert(star);
    st.pinned.insert(star);
}

// Mirror operation for l -> l-dagger of the second-kind psi algorithm.
inline void psi_second_step(SecondKind& st, int l, int dag) {
    // unbarred side: in-between block sits directly below l
    {
        auto pos = std::find(st.up.begin(), st.up.end(), l) - st.up.begin();
        auto last = pos;
        while (last + 1 < static_cast<long>(st.up.size()) &&
               st.movable(st.up[last + 1], l, dag))
            ++last;
        st.check_run(st.up, pos + 1, last + 1, l, dag);
        std::vector<int> run(st.up.begin() + pos + 1, st.up.begin() + last + 1);
        std::vector<int> gamma, rest;
        for (int v : run)
            if (std::count(st.down.begin(), st.down.end(), v)) gamma.push_back(v);
            else rest.push_back(v);
        std::sort(gamma.begin(), gamma.end());
        std::sort(rest.begin(), rest.end());
        std::vector<int> seg;
        seg.insert(seg.end(), rest.begin(), rest.end());
        seg.push_back(dag);
        seg.insert(seg.end(), gamma.begin(), gamma.end());
        std::copy(seg.begin(), seg.end(), st.up.begin() + pos);
        for (int v : rest) st.pinned.insert(v);
    }
    // barred side: in-between block sits directly above l-bar
    {
        auto pos = std::find(st.down.begin(), st.down.end(), l) - st.down.begin();
        auto first = pos;
        while (first > 0 && st.movable(st.down[first - 1], l, dag)) --first;
        st.check_run(st.down, first, pos, l, dag);
        std::vector<int> run(st.down.begin() + first, st.down.begin() + pos);
        std::vector<int> gamma, rest;
        for (int v : run)
            if (std::count(st.up.begin(), st.up.end(), v)) gamma.push_back(v);
            else rest.push_back(v);
        std::sort(gamma.rbegin(), gamma.rend());
        std::sort(rest.rbegin(), rest.rend());
        std::vector<int> seg;
        seg.insert(seg.end(), gamma.begin(), gamma.end());
        seg.push_back(dag);
        seg.insert(seg.end(), rest.begin(), rest.end());
        std::copy(seg.begin(), seg.end(), st.down.begin() + first);
        for (int v : rest) st.pinned.insert(v);
    }
    st.present.erase(l);
    st.present.insert(dag);
    st.pinned.insert(dag);
}

inline bool sorted_strict_inc(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] >= v[i + 1]) return false;
    return true;
}

inline bool sorted_strict_dec(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] <= v[i + 1]) return false;
    return true;
}

}  // namespace detail

// phi: KN-admissible column -> KN-coadmissible column (weight preserving).
inline Column phi_column(const Column& c, int n, SplitVariant variant = SplitVariant::second_kind) {
    Alphabet alpha(LieType::C, n);
    if (!is_admissible_column(c, alpha))
        throw std::invalid_argument("phi_column: column is not KN-admissible");
    SplitData d = split_letters(c, n);
    if (!d.L_star) throw std::logic_error("admissible column without split letters");

    if (variant == SplitVariant::first_kind) {
        std::set<int> up(d.I.begin(), d.I.end()), down(d.J.begin(), d.J.end());
        for (int k = static_cast<int>(d.L.size()) - 1; k >= 0; --k) {
            up.erase(d.L[k]);
            down.erase(d.L[k]);
            up.insert((*d.L_star)[k]);
            down.insert((*d.L_star)[k]);
        }
        return detail::assemble_sorted(std::move(up), std::move(down));
    }

    detail::SecondKind st(c);
    for (int k = static_cast<int>(d.L.size()) - 1; k >= 0; --k) {
        int l = d.L[k];
        int star = l - 1;
        while (star >= 1 && st.present.count(star)) --star;
        if (star < 1) throw std::logic_error("second-kind phi: no star letter available");
        detail::phi_second_step(st, l, star);
    }
    if (!detail::sorted_strict_inc(st.up) || !detail::sorted_strict_dec(st.down))
        throw std::logic_error("second-kind phi: result not semistandard");
    return detail::assemble(st.up, st.down);
}

// psi = phi^{-1}: KN-coadmissible column -> KN-admissible column.
inline Column psi_column(const Column& c, int n, SplitVariant variant = SplitVariant::second_kind) {
    if (!is_coadmissible_column(c, n))
        throw std::invalid_argument("psi_column: column is not KN-coadmissible");
    SplitData d = split_letters(c, n);
    if (!d.L_dag) throw std::logic_error("coadmissible column without dagger letters");

    if (variant == SplitVariant::first_kind) {
        std::set<int> up(d.I.begin(), d.I.end()), down(d.J.begin(), d.J.end());
        for (std::size_t k = 0; k < d.L.size(); ++k) {
            up.erase(d.L[k]);
            down.erase(d.L[k]);
            up.insert((*d.L_dag)[k]);
            down.insert((*d.L_dag)[k]);
        }
        return detail::assemble_sorted(std::move(up), std::move(down));
    }

    detail::SecondKind st(c);
    for (std::size_t k = 0; k < d.L.size(); ++k) {
        int l = d.L[k];
        int dag = l + 1;
        while (dag <= n && st.present.count(dag)) ++dag;
        if (dag > n) throw std::logic_error("second-kind psi: no dagger letter available");
        detail::psi_second_step(st, l, dag);
    }
    if (!detail::sorted_strict_inc(st.up) || !detail::sorted_strict_dec(st.down))
        throw std::logic_error("second-kind psi: result not semistandard");
    return detail::assemble(st.up, st.down);
}

namespace detail {

inline std::pair<Column, Column> split_cases(const Column& c) {
    Column plus, minus;
    for (Letter m : c) (m > 0 ? plus : minus).push_back(m);
    return {plus, minus};
}

}  // namespace detail

struct ColumnMapStep {
    int x = 0, y = 0;
    Column before, after;  // the synthesized column C^{(x,y)} and its image
};

// phi^{(x,y)}: build the column whose unbarred part comes from column y and
// barred part from column x; when it is KN-admissible, push the phi image
// back into both columns, otherwise return nullopt (the paper's empty map).
inline std::optional<Tableau> phi_xy(const Tableau& t, int x, int y, int n,
                                     SplitVariant variant = SplitVariant::second_kind,
                                     std::vector<ColumnMapStep>* trace = nullptr) {
    if (x < 1 || y < x || y > t.column_count()) throw std::out_of_range("phi_xy: bad column pair");
    Alphabet alpha(LieType::C, n);
    auto [x_plus, x_minus] = detail::split_cases(t.column(x));
    auto [y_plus, y_minus] = detail::split_cases(t.column(y));
    Column synth = y_plus;
    synth.insert(synth.end(), x_minus.begin(), x_minus.end());
    if (!is_admissible_column(synth, alpha)) return std::nullopt;
    Column image = phi_column(synth, n, variant);
    if (trace) trace->push_back({x, y, synth, image});
    auto [img_plus, img_minus] = detail::split_cases(image);

    Tableau out = t;
    if (x == y) {
        out.column_mut(x) = image;
    } else {
        Column cx = x_plus;
        cx.insert(cx.end(), img_minus.begin(), img_minus.end());
        Column cy = img_plus;
        cy.insert(cy.end(), y_minus.begin(), y_minus.end());
        out.column_mut(x) = std::move(cx);
        out.column_mut(y) = std::move(cy);
    }
    return out;
}

inline std::optional<Tableau> psi_xy(const Tableau& t, int x, int y, int n,
                                     SplitVariant variant = SplitVariant::second_kind,
                                     std::vector<ColumnMapStep>* trace = nullptr) {
    if (x < 1 || y < x || y > t.column_count()) throw std::out_of_range("psi_xy: bad column pair");
    auto [x_plus, x_minus] = detail::split_cases(t.column(x));
    auto [y_plus, y_minus] = detail::split_cases(t.column(y));
    Column synth = y_plus;
    synth.insert(synth.end(), x_minus.begin(), x_minus.end());
    if (!is_coadmissible_column(synth, n)) return std::nullopt;
    Column image = psi_column(synth, n, variant);
    if (trace) trace->push_back({x, y, synth, image});
    auto [img_plus, img_minus] = detail::split_cases(image);

    Tableau out = t;
    if (x == y) {
        out.column_mut(x) = image;
    } else {
        Column cx = x_plus;
        cx.insert(cx.end(), img_minus.begin(), img_minus.end());
        Column cy = img_plus;
        cy.insert(cy.end(), y_minus.begin(), y_minus.end());
        out.column_mut(x) = std::move(cx);
        out.column_mut(y) = std::move(cy);
    }
    return out;
}

// Phi = Phi^(1) o ... o Phi^(nc) with Phi^(x) = phi^(x,nc) o ... o phi^(x,x).
// Well-defined on every KN-admissible tableau; a failing stage signals an
// implementation bug and throws.
inline Tableau phi_tableau(const Tableau& t, int n,
                           SplitVariant variant = SplitVariant::second_kind,
                           std::vector<ColumnMapStep>* trace = nullptr) {
    Tableau cur = t;
    int nc = cur.column_count();
    for (int x = nc; x >= 1; --x) {
        for (int y = x; y <= nc; ++y) {
            auto next = phi_xy(cur, x, y, n, variant, trace);
            if (!next)
                throw std::logic_error("Phi undefined at stage (" + std::to_string(x) + "," +
                                       std::to_string(y) + ")");
            cur = std::move(*next);
        }
    }
    return cur;
}

// Psi = Psi^(nc) o ... o Psi^(1) with Psi^(x) = psi^(x,x) o ... o psi^(x,nc).
inline Tableau psi_tableau(const Tableau& t, int n,
                           SplitVariant variant = SplitVariant::second_kind,
                           std::vector<ColumnMapStep>* trace = nullptr) {
    Tableau cur = t;
    int nc = cur.column_count();
    for (int x = 1; x <= nc; ++x) {
        for (int y = nc; y >= x; --y) {
            auto next = psi_xy(cur, x, y, n, variant, trace);
            if (!next)
                throw std::logic_error("Psi undefined at stage (" + std::to_string(x) + "," +
                                       std::to_string(y) + ")");
            cur = std::move(*next);
        }
    }
    return cur;
}

}  // namespace kn
