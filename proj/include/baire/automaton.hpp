#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "baire/word.hpp"

namespace baire {

using State = std::uint32_t;

/// Raised by avoiding_word when the set has non-empty interior: no finite
/// word has a cylinder disjoint from the set inside the interior's trace.
struct HasInteriorError : std::runtime_error {
    explicit HasInteriorError(FiniteWord w)
        : std::runtime_error("set has non-empty interior"), witness(std::move(w)) {}
    FiniteWord witness;
};

/// Deterministic total safety automaton over a finite alphabet. An
/// omega-word belongs to the denoted set iff every state visited along it
/// (the initial state included) is live. Such sets are exactly the closed
/// sets this toolkit manipulates.
class SafetyAutomaton {
public:
    SafetyAutomaton(Alphabet alphabet, State initial,
                    std::vector<std::vector<State>> delta, std::vector<bool> live)
        : alphabet_(alphabet),
          initial_(initial),
          delta_(std::move(delta)),
          live_(std::move(live)) {
        if (!alphabet_.is_finite())
            throw std::invalid_argument("safety automata require a finite alphabet");
        std::size_t n = delta_.size();
        if (n == 0) throw std::invalid_argument("automaton needs at least one state");
        if (live_.size() != n) throw std::invalid_argument("live vector size mismatch");
        if (initial_ >= n) throw std::invalid_argument("initial state out of range");
        for (const auto& row : delta_) {
            if (row.size() != alphabet_.size())
                throw std::invalid_argument("transition function must be total");
            for (State target : row)
                if (target >= n) throw std::invalid_argument("transition target out of range");
        }
    }

    /// The whole space X^omega.
    static SafetyAutomaton full_space(Alphabet alphabet) {
        return SafetyAutomaton(alphabet, 0,
                               {std::vector<State>(alphabet.size(), 0)}, {true});
    }

    /// The empty set.
    static SafetyAutomaton empty_set(Alphabet alphabet) {
        return SafetyAutomaton(alphabet, 0,
                               {std::vector<State>(alphabet.size(), 0)}, {false});
    }

    const Alphabet& alphabet() const { return alphabet_; }
    State initial() const { return initial_; }
    std::size_t state_count() const { return delta_.size(); }
    bool live(State q) const { return live_[q]; }
    State next(State q, Symbol a) const { return delta_[q][static_cast<std::size_t>(a)]; }
    const std::vector<std::vector<State>>& delta() const { return delta_; }
    const std::vector<bool>& live_states() const { return live_; }

    bool operator==(const SafetyAutomaton&) const = default;

private:
    Alphabet alphabet_;
    State initial_;
    std::vector<std::vector<State>> delta_;
    std::vector<bool> live_;
};

/// Viability pruning: the greatest fixpoint V = {q live : some successor
/// stays in V}. States outside V admit no infinite live run and are marked
/// dead. The denoted set is unchanged; idempotent.
inline SafetyAutomaton prune(const SafetyAutomaton& a) {
    std::vector<bool> viable = a.live_states();
    bool changed = true;
    while (changed) {
        changed = false;
        for (State q = 0; q < a.state_count(); ++q) {
            if (!viable[q]) continue;
            bool has_live_successor = false;
            for (Symbol x = 0; x < a.alphabet().size(); ++x)
                if (viable[a.next(q, x)]) { has_live_successor = true; break; }
            if (!has_live_successor) {
                viable[q] = false;
                changed = true;
            }
        }
    }
    return SafetyAutomaton(a.alphabet(), a.initial(), a.delta(), viable);
}

/// Membership of an ultimately periodic word: run the prefix, then detect
/// the cycle of (state, period position) pairs; at most n * |period|
/// further steps decide the infinite run.
inline bool contains(const SafetyAutomaton& a, const UpWord& w) {
    if (w.alphabet() != a.alphabet())
        throw std::invalid_argument("alphabet mismatch");
    State q = a.initial();
    if (!a.live(q)) return false;
    for (std::uint64_t n = 0; n < w.prefix_size(); ++n) {
        q = a.next(q, w.at(n));
        if (!a.live(q)) return false;
    }
    std::vector<Symbol> period = w.period().symbols();
    std::set<std::pair<State, std::size_t>> seen;
    std::size_t phase = 0;
    while (seen.insert({q, phase}).second) {
        q = a.next(q, period[phase]);
        if (!a.live(q)) return false;
        phase = (phase + 1) % period.size();
    }
    return true;
}

inline bool is_empty(const SafetyAutomaton& a) {
    SafetyAutomaton p = prune(a);
    return !p.live(p.initial());
}

/// Greatest fixpoint F = {q live : every successor stays in F}. A state is
/// in F exactly when its residual set is all of X^omega.
inline std::vector<bool> full_states(const SafetyAutomaton& a) {
    std::vector<bool> full = a.live_states();
    bool changed = true;
    while (changed) {
        changed = false;
        for (State q = 0; q < a.state_count(); ++q) {
            if (!full[q]) continue;
            for (Symbol x = 0; x < a.alphabet().size(); ++x) {
                if (!full[a.next(q, x)]) {
                    full[q] = false;
                    changed = true;
                    break;
                }
            }
        }
    }
    return full;
}

struct NwdCertificate {
    bool nowhere_dense = false;
    std::optional<FiniteWord> witness;  // cylinder(witness) inside the set
};

namespace detail {

/// BFS from the initial state through live states, symbols in ascending
/// order, so the first path to any goal is the shortest, ties broken
/// lexicographically. Returns the word reaching the first goal state, or
/// nullopt if none is reachable.
template <typename GoalFn>
std::optional<FiniteWord> shortest_lex_path(const SafetyAutomaton& a, GoalFn is_goal) {
    if (is_goal(a.initial()))
        return FiniteWord::empty(a.alphabet());
    if (!a.live(a.initial())) return std::nullopt;
    std::vector<bool> discovered(a.state_count(), false);
    discovered[a.initial()] = true;
    std::deque<std::pair<State, std::vector<Symbol>>> queue;
    queue.push_back({a.initial(), {}});
    while (!queue.empty()) {
        auto [q, path] = queue.front();
        queue.pop_front();
        for (Symbol x = 0; x < a.alphabet().size(); ++x) {
            State t = a.next(q, x);
            std::vector<Symbol> next_path = path;
            next_path.push_back(x);
            if (is_goal(t)) return FiniteWord(a.alphabet(), std::move(next_path));
            if (a.live(t) && !discovered[t]) {
                discovered[t] = true;
                queue.push_back({t, std::move(next_path)});
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides nowhere-density of the denoted closed set. The set fails to be
/// nowhere dense exactly when a full state is reachable from the initial
/// state through live states; the witness is the shortest such access word
/// (lexicographic tie-break) and its cylinder lies inside the set.
inline NwdCertificate is_nowhere_dense(const SafetyAutomaton& a) {
    SafetyAutomaton p = prune(a);
    std::vector<bool> full = full_states(p);
    auto witness = detail::shortest_lex_path(p, [&](State q) { return full[q]; });
    if (witness) return {false, std::move(witness)};
    return {true, std::nullopt};
}

/// Shortest word (lexicographic tie-break) whose run from the initial
/// state reaches a dead state; its cylinder is disjoint from the denoted
/// set. Returns the empty word for the empty set. Length is at most the
/// state count. Throws HasInteriorError when the set has interior.
inline FiniteWord avoiding_word(const SafetyAutomaton& a) {
    SafetyAutomaton p = prune(a);
    NwdCertificate cert = is_nowhere_dense(p);
    if (!cert.nowhere_dense) throw HasInteriorError(*cert.witness);
    if (!p.live(p.initial())) return FiniteWord::empty(p.alphabet());
    auto word = detail::shortest_lex_path(p, [&](State q) { return !p.live(q); });
    if (!word)
        throw std::logic_error("pruned nowhere dense automaton must reach a dead state");
    return *word;
}

/// Deterministic normal form: prune, merge states with equal residual sets
/// (partition refinement, dead states as their own block), restrict to the
/// part reachable from the initial state, renumber it in BFS order (symbols
/// ascending), and collapse the dead states into a single sink. The result
/// is the minimal automaton of the denoted set with a fixed numbering, so
/// two automata denote the same set iff their normal forms are equal.
inline SafetyAutomaton canonical(const SafetyAutomaton& a) {
    SafetyAutomaton p = prune(a);
    std::uint64_t k = p.alphabet().size();
    if (!p.live(p.initial())) return SafetyAutomaton::empty_set(p.alphabet());

    std::vector<State> reach;  // live states reachable from the initial one
    std::set<State> seen{p.initial()};
    std::deque<State> queue{p.initial()};
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        reach.push_back(q);
        for (Symbol x = 0; x < k; ++x) {
            State t = p.next(q, x);
            if (p.live(t) && seen.insert(t).second) queue.push_back(t);
        }
    }

    // Split blocks by per-symbol target block until stable.
    const State kDeadBlock = ~State{0};
    std::map<State, State> block;
    for (State q : reach) block[q] = 0;
    for (std::size_t blocks = 1;;) {
        std::map<std::pair<State, std::vector<State>>, State> fresh;
        std::map<State, State> next;
        for (State q : reach) {
            std::vector<State> sig(k);
            for (Symbol x = 0; x < k; ++x) {
                State t = p.next(q, x);
                sig[x] = p.live(t) ? block.at(t) : kDeadBlock;
            }
            auto key = std::make_pair(block.at(q), std::move(sig));
            auto [it, added] = fresh.emplace(std::move(key), static_cast<State>(fresh.size()));
            next[q] = it->second;
        }
        bool stable = fresh.size() == blocks;
        blocks = fresh.size();
        block = std::move(next);
        if (stable) break;
    }

    std::vector<State> order;  // block representatives in BFS order
    std::map<State, State> index;
    index[block.at(p.initial())] = 0;
    order.push_back(p.initial());
    bool needs_sink = false;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Symbol x = 0; x < k; ++x) {
            State t = p.next(order[head], x);
            if (!p.live(t)) {
                needs_sink = true;
            } else if (!index.count(block.at(t))) {
                index[block.at(t)] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    State sink = static_cast<State>(order.size());
    std::size_t n = order.size() + (needs_sink ? 1 : 0);
    std::vector<std::vector<State>> delta(n, std::vector<State>(k));
    std::vector<bool> live(n, true);
    for (std::size_t qi = 0; qi < order.size(); ++qi)
        for (Symbol x = 0; x < k; ++x) {
            State t = p.next(order[qi], x);
            delta[qi][x] = p.live(t) ? index.at(block.at(t)) : sink;
        }
    if (needs_sink) {
        delta[sink].assign(k, sink);
        live[sink] = false;
    }
    return SafetyAutomaton(p.alphabet(), 0, std::move(delta), std::move(live));
}

namespace detail {

/// Generic reachable-state product: seeds plus a step function over
/// caller-defined state labels, built into a canonical automaton.
template <typename Label, typename StepFn, typename LiveFn>
SafetyAutomaton assemble(Alphabet alphabet, const Label& start, StepFn step, LiveFn is_live) {
    std::map<Label, State> index;
    std::vector<Label> order;
    std::deque<Label> queue;
    index[start] = 0;
    order.push_back(start);
    queue.push_back(start);
    while (!queue.empty()) {
        Label l = queue.front();
        queue.pop_front();
        if (!is_live(l)) continue;  // dead labels act as sinks
        for (Symbol x = 0; x < alphabet.size(); ++x) {
            Label t = step(l, x);
            if (!index.count(t)) {
                index[t] = static_cast<State>(order.size());
                order.push_back(t);
                queue.push_back(t);
            }
        }
    }
    std::size_t n = order.size();
    std::vector<std::vector<State>> delta(n, std::vector<State>(alphabet.size()));
    std::vector<bool> live(n);
    for (std::size_t qi = 0; qi < n; ++qi) {
        live[qi] = is_live(order[qi]);
        for (Symbol x = 0; x < alphabet.size(); ++x)
            delta[qi][x] = live[qi] ? index.at(step(order[qi], x)) : static_cast<State>(qi);
    }
    return canonical(SafetyAutomaton(alphabet, 0, std::move(delta), std::move(live)));
}

}  // namespace detail

/// Product automaton denoting the intersection of the two closed sets.
inline SafetyAutomaton intersection(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("alphabet mismatch");
    using Label = std::pair<State, State>;
    return detail::assemble(
        a.alphabet(), Label{a.initial(), b.initial()},
        [&](const Label& l, Symbol x) { return Label{a.next(l.first, x), b.next(l.second, x)}; },
        [&](const Label& l) { return a.live(l.first) && b.live(l.second); });
}

/// Pairing with a crash marker per component: a component collapses once
/// its run has visited a dead state, and the pair is live while either
/// component is still running. Denotes exactly the union of the two closed
/// sets (the union of closed sets is closed, so safety automata cover it).
inline SafetyAutomaton set_union(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("alphabet mismatch");
    constexpr State kCrashed = static_cast<State>(-1);
    using Label = std::pair<State, State>;
    auto step_one = [](const SafetyAutomaton& m, State q, Symbol x) {
        if (q == kCrashed) return kCrashed;
        State t = m.next(q, x);
        return m.live(t) ? t : kCrashed;
    };
    Label start{a.live(a.initial()) ? a.initial() : kCrashed,
                b.live(b.initial()) ? b.initial() : kCrashed};
    return detail::assemble(
        a.alphabet(), start,
        [&](const Label& l, Symbol x) {
            return Label{step_one(a, l.first, x), step_one(b, l.second, x)};
        },
        [&](const Label& l) { return l.first != kCrashed || l.second != kCrashed; });
}

/// The set of words obtained by dropping the first symbol of a member:
/// {shift(a, 1) : a in C}. Subset construction over the live first-step
/// successors; closed (safety semantics) and, over a finite alphabet,
/// nowhere dense whenever the input is.
inline SafetyAutomaton shift_image(const SafetyAutomaton& a) {
    SafetyAutomaton p = prune(a);
    using Label = std::vector<State>;  // sorted set of still-alive runs
    Label start;
    if (p.live(p.initial())) {
        std::set<State> seeds;
        for (Symbol x = 0; x < p.alphabet().size(); ++x) {
            State t = p.next(p.initial(), x);
            if (p.live(t)) seeds.insert(t);
        }
        start.assign(seeds.begin(), seeds.end());
    }
    return detail::assemble(
        p.alphabet(), start,
        [&](const Label& l, Symbol x) {
            std::set<State> targets;
            for (State q : l) {
                State t = p.next(q, x);
                if (p.live(t)) targets.insert(t);
            }
            return Label(targets.begin(), targets.end());
        },
        [](const Label& l) { return !l.empty(); });
}

/// i-fold iteration of shift_image; the identity for i = 0.
inline SafetyAutomaton shift_image_n(const SafetyAutomaton& a, std::uint64_t i) {
    SafetyAutomaton out = canonical(a);
    for (std::uint64_t step = 0; step < i; ++step) out = shift_image(out);
    return out;
}

/// The cylinder of u: all omega-words extending u at position 0. Built
/// with |u| + 2 states: the spine reading u, a full state, a dead sink.
inline SafetyAutomaton cylinder_automaton(const FiniteWord& u, Alphabet alphabet) {
    if (u.alphabet() != alphabet)
        throw std::invalid_argument("alphabet mismatch");
    if (!alphabet.is_finite())
        throw std::invalid_argument("cylinder automata require a finite alphabet");
    std::size_t m = u.size();
    State full = static_cast<State>(m);
    State sink = static_cast<State>(m + 1);
    std::vector<std::vector<State>> delta(m + 2, std::vector<State>(alphabet.size(), sink));
    for (std::size_t j = 0; j < m; ++j)
        delta[j][static_cast<std::size_t>(u[j])] = static_cast<State>(j + 1);
    delta[full].assign(alphabet.size(), full);
    std::vector<bool> live(m + 2, true);
    live[sink] = false;
    return SafetyAutomaton(alphabet, 0, std::move(delta), std::move(live));
}

}  // namespace baire
