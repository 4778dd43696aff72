#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "baire/automaton.hpp"
#include "baire/schedule.hpp"

namespace baire {

/// Raised by dense_extension when the finite schedule has no index usable
/// beyond k.
struct NoChallengeBeyond : std::runtime_error {
    explicit NoChallengeBeyond(std::uint64_t k)
        : std::runtime_error("no scheduled challenge beyond index " +
                             std::to_string(k)),
          index(k) {}
    std::uint64_t index;
};

/// Raised by baire_witness when the schedule never reaches past the
/// constraint's interior witness.
struct ScheduleTooSparse : std::runtime_error {
    ScheduleTooSparse() : std::runtime_error("schedule too sparse for witness") {}
};

/// Internal invariant guard: the constructed witness escaped the
/// constraint set. Unreachable when the interior witness is valid.
struct ConstraintViolation : std::runtime_error {
    ConstraintViolation() : std::runtime_error("constructed word left the constraint set") {}
};

/// A closed set together with a finite word whose whole cylinder it
/// contains. Standing in for a non-meager set: meeting every dense open
/// set inside one cylinder is enough for the witness construction, and
/// the cylinder makes that finitely checkable.
class ConstraintSet {
public:
    ConstraintSet(SafetyAutomaton automaton, FiniteWord interior_witness)
        : automaton_(std::move(automaton)), witness_(std::move(interior_witness)) {
        if (witness_.alphabet() != automaton_.alphabet())
            throw std::invalid_argument("alphabet mismatch");
        std::vector<bool> full = full_states(automaton_);
        State q = automaton_.initial();
        bool valid = automaton_.live(q);
        for (std::size_t m = 0; valid && m < witness_.size(); ++m) {
            q = automaton_.next(q, witness_[m]);
            valid = automaton_.live(q);
        }
        if (!valid || !full[q])
            throw std::invalid_argument(
                "interior witness cylinder is not inside the constraint set");
    }

    static ConstraintSet whole_space(Alphabet alphabet) {
        return ConstraintSet(SafetyAutomaton::full_space(alphabet),
                             FiniteWord::empty(alphabet));
    }

    static ConstraintSet cylinder(const FiniteWord& w) {
        return ConstraintSet(cylinder_automaton(w, w.alphabet()), w);
    }

    const SafetyAutomaton& automaton() const { return automaton_; }
    const FiniteWord& interior_witness() const { return witness_; }

private:
    SafetyAutomaton automaton_;
    FiniteWord witness_;
};

/// One density step: extend w so that every omega-continuation of the
/// result hits the schedule strictly beyond k. Picks the least scheduled
/// i with i > k and i >= |w|, pads w up to position i, appends f(i).
inline FiniteWord dense_extension(const FiniteWord& w, std::uint64_t k,
                                  const ChallengeSchedule& f, Symbol pad) {
    if (w.alphabet() != f.alphabet())
        throw std::invalid_argument("alphabet mismatch");
    if (!w.alphabet().contains(pad))
        throw std::invalid_argument("pad symbol outside alphabet");
    std::uint64_t from = std::max<std::uint64_t>(k + 1, w.size());
    std::optional<std::uint64_t> i = f.next_index(from);
    if (!i) throw NoChallengeBeyond(k);
    return w.padded_to(static_cast<std::size_t>(*i), pad).append(f.at(*i));
}

struct BaireWitness {
    UpWord word;
    HitSet hits;                         // recomputed from the finished word
    std::vector<std::uint64_t> consumed;  // indices frozen into the prefix
};

/// The Baire category argument run forward: starting inside the
/// constraint's interior cylinder, repeatedly apply dense_extension, so
/// the limit word hits the schedule beyond every k. A finite schedule is
/// consumed whole and closed with pad symbols; a periodic schedule is
/// closed with a periodic tail that embeds one challenge block per stride,
/// which certifies infinitely many hits symbolically.
inline BaireWitness baire_witness(const ChallengeSchedule& f, const ConstraintSet& c,
                                  Symbol pad) {
    const FiniteWord& w0 = c.interior_witness();
    if (f.alphabet() != w0.alphabet())
        throw std::invalid_argument("alphabet mismatch");
    if (!f.alphabet().contains(pad))
        throw std::invalid_argument("pad symbol outside alphabet");
    if (!f.next_index(w0.size())) throw ScheduleTooSparse();

    std::vector<std::uint64_t> consumed;
    FiniteWord current = w0;
    // Finite part: consume every usable index below the tail (all of them
    // when the schedule is finite).
    for (;;) {
        std::uint64_t from = std::max<std::uint64_t>(
            consumed.empty() ? 0 : consumed.back() + 1, current.size());
        std::optional<std::uint64_t> i = f.next_index(from);
        if (!i || (f.tail() && *i >= f.tail()->start)) break;
        current = current.padded_to(static_cast<std::size_t>(*i), pad).append(f.at(*i));
        consumed.push_back(*i);
    }

    std::optional<UpWord> word;
    std::uint64_t verify_to = consumed.empty() ? 0 : consumed.back();
    if (!f.tail()) {
        word = UpWord(current, FiniteWord(f.alphabet(), {pad}));
    } else {
        std::uint64_t p = f.tail()->period;
        std::uint64_t maxlen = f.max_word_size();
        std::uint64_t stride = maxlen <= p ? p : p * ((maxlen + 1 + p - 1) / p);
        std::uint64_t start = *f.next_index(
            std::max<std::uint64_t>(current.size(), f.tail()->start));
        FiniteWord block = f.at(start).padded_to(static_cast<std::size_t>(stride), pad);
        word = UpWord(current.padded_to(static_cast<std::size_t>(start), pad), block);
        verify_to = std::max(verify_to, start);
    }
    if (!contains(c.automaton(), *word)) throw ConstraintViolation();
    return BaireWitness{*word, hit_set(*word, f, verify_to), std::move(consumed)};
}

/// The schedule induced by an evading word g: f(i) is the single symbol
/// g(i), so hitting f at i means agreeing with g at i. A set of words all
/// eventually different from g meets only finitely many of these
/// challenges, which is how the evasion property forbids property (*).
inline ChallengeSchedule challenge_from_evader(const UpWord& g) {
    std::map<std::uint64_t, FiniteWord> entries;
    for (std::uint64_t i = 0; i < g.prefix_size() + g.period_size(); ++i)
        entries.emplace(i, FiniteWord(g.alphabet(), {g.at(i)}));
    PeriodicTail tail{g.prefix_size(), g.period_size()};
    return ChallengeSchedule(g.alphabet(), std::move(entries), tail);
}

}  // namespace baire
