#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "baire/word.hpp"

namespace baire {

/// Eventually periodic continuation of a schedule's domain: every index
/// i >= start is in the domain and f(i) = f(start + (i - start) mod period).
struct PeriodicTail {
    std::uint64_t start = 0;
    std::uint64_t period = 1;

    bool operator==(const PeriodicTail&) const = default;
};

/// A finitely presented challenge function f : J -> union of X^n.
/// J is the set of listed indices, extended to all i >= tail.start when a
/// periodic tail is present (the entries then list one full period).
class ChallengeSchedule {
public:
    ChallengeSchedule(Alphabet alphabet,
                      std::map<std::uint64_t, FiniteWord> entries,
                      std::optional<PeriodicTail> tail = std::nullopt)
        : alphabet_(alphabet), entries_(std::move(entries)), tail_(tail) {
        for (const auto& [i, word] : entries_)
            if (word.alphabet() != alphabet_)
                throw std::invalid_argument("schedule entry alphabet mismatch");
        if (tail_) {
            if (tail_->period == 0)
                throw std::invalid_argument("tail period must be >= 1");
            for (std::uint64_t i = tail_->start; i < tail_->start + tail_->period; ++i)
                if (!entries_.count(i))
                    throw std::invalid_argument(
                        "tail requires one explicitly listed full period");
            for (const auto& [i, word] : entries_) {
                if (i < tail_->start + tail_->period) continue;
                std::uint64_t base = tail_->start + (i - tail_->start) % tail_->period;
                if (!(word == entries_.at(base)))
                    throw std::invalid_argument(
                        "entry at " + std::to_string(i) + " breaks tail periodicity");
            }
        }
    }

    static ChallengeSchedule finite(Alphabet alphabet,
                                    std::map<std::uint64_t, FiniteWord> entries) {
        return ChallengeSchedule(alphabet, std::move(entries));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<std::uint64_t, FiniteWord>& entries() const { return entries_; }
    const std::optional<PeriodicTail>& tail() const { return tail_; }
    bool is_finite() const { return !tail_.has_value(); }

    bool in_domain(std::uint64_t i) const {
        return entries_.count(i) > 0 || (tail_ && i >= tail_->start);
    }

    const FiniteWord& at(std::uint64_t i) const {
        auto it = entries_.find(i);
        if (it != entries_.end()) return it->second;
        if (tail_ && i >= tail_->start)
            return entries_.at(tail_->start + (i - tail_->start) % tail_->period);
        throw std::out_of_range("index " + std::to_string(i) + " not in schedule domain");
    }

    /// Least domain index >= from, if any. Always exists with a tail.
    std::optional<std::uint64_t> next_index(std::uint64_t from) const {
        std::optional<std::uint64_t> best;
        auto it = entries_.lower_bound(from);
        if (it != entries_.end()) best = it->first;
        if (tail_) {
            std::uint64_t t = std::max(from, tail_->start);
            if (!best || t < *best) best = t;
        }
        return best;
    }

    /// Longest scheduled word; 0 for an empty schedule.
    std::size_t max_word_size() const {
        std::size_t m = 0;
        for (const auto& [i, w] : entries_) m = std::max(m, w.size());
        return m;
    }

    bool operator==(const ChallengeSchedule&) const = default;

private:
    Alphabet alphabet_;
    std::map<std::uint64_t, FiniteWord> entries_;
    std::optional<PeriodicTail> tail_;
};

/// Certificate that positions start, start + stride, start + 2*stride, ...
/// are all hits.
struct PeriodicHit {
    std::uint64_t start = 0;
    std::uint64_t stride = 1;

    bool operator==(const PeriodicHit&) const = default;
};

/// Hit indices of a word against a schedule within a horizon, with an
/// optional symbolic certificate of infinitely many further hits.
struct HitSet {
    std::vector<std::uint64_t> indices;  // sorted, all <= horizon
    std::optional<PeriodicHit> symbolic_tail;

    bool contains(std::uint64_t i) const {
        if (std::binary_search(indices.begin(), indices.end(), i)) return true;
        return symbolic_tail && i >= symbolic_tail->start &&
               (i - symbolic_tail->start) % symbolic_tail->stride == 0;
    }

    bool operator==(const HitSet&) const = default;
};

/// The set {i in dom(f), i <= horizon : shift of w at i extends f(i)},
/// plus a periodic-hit certificate when both w and f are eventually
/// periodic and a hit lands beyond both preperiods. The certificate is a
/// conservative, finitely checkable rendering of "infinitely many i": the
/// search window has length L = lcm(|period(w)|, f's tail period) and a
/// certified start additionally needs |f(start)| <= L, so one aligned
/// block witnesses every later one.
inline HitSet hit_set(const UpWord& w, const ChallengeSchedule& f, std::uint64_t horizon) {
    if (w.alphabet() != f.alphabet())
        throw std::invalid_argument("alphabet mismatch");
    HitSet out;
    for (std::uint64_t i = 0; i <= horizon; ++i) {
        if (!f.in_domain(i)) continue;
        if (w.extends_at(i, f.at(i))) out.indices.push_back(i);
    }
    if (f.tail()) {
        std::uint64_t L = std::lcm<std::uint64_t>(w.period_size(), f.tail()->period);
        std::uint64_t lo = std::max<std::uint64_t>(f.tail()->start, w.prefix_size());
        for (std::uint64_t i = lo; i < lo + L; ++i) {
            if (f.at(i).size() <= L && w.extends_at(i, f.at(i))) {
                out.symbolic_tail = PeriodicHit{i, L};
                break;
            }
        }
    }
    return out;
}

}  // namespace baire
