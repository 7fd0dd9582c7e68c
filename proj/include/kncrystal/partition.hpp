#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kncrystal/alphabet.hpp"

namespace kn {

// Weakly decreasing sequence of positive integers; trailing zeros trimmed on
// construction, so equality is plain sequence equality.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw std::invalid_argument("not weakly decreasing nonnegative");
        }
    }

    static std::optional<Partition> try_make(std::vector<int> parts) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0 || (i + 1 < parts.size() && parts[i] < parts[i + 1]))
                return std::nullopt;
        }
        Partition p;
        p.parts_ = std::move(parts);
        return p;
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // number of boxes
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 1-based row length; rows past the end have length 0
    int row(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 1; i <= inner.length(); ++i)
            if (inner.row(i) > row(i)) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
        for (int c = 1; c <= (parts_.empty() ? 0 : parts_[0]); ++c) {
            int cnt = 0;
            for (int r : parts_)
                if (r >= c) ++cnt;
            t[c - 1] = cnt;
        }
        Partition p;
        p.parts_ = std::move(t);
        return p;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Shape growth by a single letter (Def. of lambda[m]):
//   unbarred i adds a box to row i, barred i-bar removes one,
//   the B-type zero keeps lambda when lambda_n > 0 and otherwise kills the
//   shape for good (the -infinity row can never become a partition again).
// Returns nullopt whenever the result is not a partition.
inline std::optional<Partition> apply_letter(const Partition& shape, Letter m,
                                             const Alphabet& alphabet) {
    int n = alphabet.rank;
    if (!letter_valid(alphabet, m))
        throw std::invalid_argument("letter not in alphabet");
    if (m == 0) {
        if (alphabet.type != LieType::B)
            throw std::invalid_argument("zero letter outside type B");
        if (shape.row(n) > 0) return shape;
        return std::nullopt;
    }
    int i = letter_index(m);
    std::vector<int> rows(shape.parts());
    if (static_cast<int>(rows.size()) < i) rows.resize(i, 0);
    rows[i - 1] += m > 0 ? 1 : -1;
    auto p = Partition::try_make(std::move(rows));
    if (p && p->length() > n) return std::nullopt;
    return p;
}

struct WordGrowth {
    std::optional<Partition> shape;  // nullopt if any step left partition-land
    bool smooth = false;             // every intermediate shape was a partition
};

inline WordGrowth apply_word(const Partition& shape, std::span<const Letter> word,
                             const Alphabet& alphabet) {
    Partition cur = shape;
    for (Letter m : word) {
        auto next = apply_letter(cur, m, alphabet);
        if (!next) return {std::nullopt, false};
        cur = std::move(*next);
    }
    return {std::move(cur), true};
}

inline bool is_smooth(const Partition& shape, std::span<const Letter> word,
                      const Alphabet& alphabet) {
    return apply_word(shape, word, alphabet).smooth;
}

// All partitions of total size `boxes` with at most max_len rows and parts at
// most max_part.
inline std::vector<Partition> partitions_of(int boxes, int max_len, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int part = std::min(cap, remaining); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, boxes, std::min(max_part, boxes));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Partition> partitions_up_to(int max_boxes, int max_len, int max_part) {
    std::vector<Partition> out;
    for (int b = 0; b <= max_boxes; ++b) {
        auto v = partitions_of(b, max_len, max_part);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace kn
