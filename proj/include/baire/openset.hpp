#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "baire/rational.hpp"

namespace baire {

/// Open interval (lo, hi); endpoints excluded.
struct Interval {
    ExactRational lo;
    ExactRational hi;

    bool contains(const ExactRational& x) const { return lo < x && x < hi; }

    bool operator==(const Interval&) const = default;
};

/// A finitely presented open subset of (0, epsilon): disjoint open
/// intervals, sorted. Adherence to 0 is rendered decidably: the set
/// adheres to 0 exactly when its first interval starts at 0.
class OpenSet1D {
public:
    OpenSet1D(std::vector<Interval> intervals, ExactRational epsilon)
        : intervals_(std::move(intervals)), epsilon_(std::move(epsilon)) {
        if (!(ExactRational(0) < epsilon_))
            throw std::invalid_argument("epsilon must be positive");
        for (std::size_t j = 0; j < intervals_.size(); ++j) {
            const Interval& iv = intervals_[j];
            if (!(ExactRational(0) <= iv.lo && iv.lo < iv.hi && iv.hi <= epsilon_))
                throw std::invalid_argument("interval out of order or outside (0, epsilon)");
            if (j > 0 && !(intervals_[j - 1].hi <= iv.lo))
                throw std::invalid_argument("intervals must be sorted and disjoint");
        }
    }

    const std::vector<Interval>& intervals() const { return intervals_; }
    const ExactRational& epsilon() const { return epsilon_; }

    bool zero_adherent() const {
        return !intervals_.empty() && intervals_.front().lo == ExactRational(0);
    }

    bool contains(const ExactRational& x) const {
        return containing_interval(x).has_value();
    }

    std::optional<std::size_t> containing_interval(const ExactRational& x) const {
        for (std::size_t j = 0; j < intervals_.size(); ++j)
            if (intervals_[j].contains(x)) return j;
        return std::nullopt;
    }

    bool operator==(const OpenSet1D&) const = default;

private:
    std::vector<Interval> intervals_;
    ExactRational epsilon_;
};

}  // namespace baire
