#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "baire/automaton.hpp"
#include "baire/schedule.hpp"

namespace baire {

/// Raised when a layer (or a cumulative union of layers) has non-empty
/// interior and therefore cannot enter a meager presentation.
struct NotNowhereDense : std::runtime_error {
    NotNowhereDense(std::size_t layer, FiniteWord w)
        : std::runtime_error("layer " + std::to_string(layer) +
                             " is not nowhere dense"),
          layer_index(layer),
          witness(std::move(w)) {}
    std::size_t layer_index;
    FiniteWord witness;  // cylinder(witness) inside the offending layer
};

/// An increasing chain of nowhere dense closed sets, covering the meager
/// set presented. Construction replaces layer j by the union of layers
/// 0..j and verifies each cumulative layer is nowhere dense, so the chain
/// invariant holds by construction, not by trust. Indices past the last
/// layer keep denoting it: layer(i) = layers[min(i, count-1)].
class MeagerPresentation {
public:
    explicit MeagerPresentation(std::vector<SafetyAutomaton> raw_layers) {
        if (raw_layers.empty())
            throw std::invalid_argument("presentation needs at least one layer");
        for (const auto& a : raw_layers)
            if (a.alphabet() != raw_layers.front().alphabet())
                throw std::invalid_argument("layers must share one alphabet");
        for (std::size_t j = 0; j < raw_layers.size(); ++j) {
            SafetyAutomaton cumulative =
                j == 0 ? canonical(raw_layers[0])
                       : set_union(layers_.back(), raw_layers[j]);
            NwdCertificate cert = is_nowhere_dense(cumulative);
            if (!cert.nowhere_dense) throw NotNowhereDense(j, *cert.witness);
            layers_.push_back(std::move(cumulative));
        }
    }

    const std::vector<SafetyAutomaton>& layers() const { return layers_; }
    std::size_t layer_count() const { return layers_.size(); }
    const Alphabet& alphabet() const { return layers_.front().alphabet(); }

    /// Y_i of the chain; constant from the last listed layer on.
    const SafetyAutomaton& layer(std::uint64_t i) const {
        std::size_t j = static_cast<std::size_t>(
            std::min<std::uint64_t>(i, layers_.size() - 1));
        return layers_[j];
    }

private:
    std::vector<SafetyAutomaton> layers_;
};

inline MeagerPresentation normalize_presentation(std::vector<SafetyAutomaton> layers) {
    return MeagerPresentation(std::move(layers));
}

/// The challenge schedule defeating every point of the presented meager
/// set: f(i) avoids the i-fold shift image of Y_i, so a word whose shift
/// at i extends f(i) cannot lie in Y_i. Once the layer chain is exhausted
/// and the shift images stabilize (identical canonical automata for
/// consecutive i), the schedule closes with a period-1 tail; otherwise it
/// stays finite up to the horizon.
inline ChallengeSchedule build_defeating_challenge(const MeagerPresentation& p,
                                                   std::uint64_t horizon) {
    std::map<std::uint64_t, FiniteWord> entries;
    std::optional<PeriodicTail> tail;
    std::uint64_t chain_end = p.layer_count() - 1;
    std::optional<SafetyAutomaton> image;  // shift_image_n(layer(i), i), from chain_end on
    for (std::uint64_t i = 0; i <= horizon; ++i) {
        if (i < chain_end) {
            entries.emplace(i, avoiding_word(shift_image_n(p.layer(i), i)));
            continue;
        }
        if (!image) image = shift_image_n(p.layer(i), i);
        entries.emplace(i, avoiding_word(*image));
        SafetyAutomaton next = shift_image(*image);
        if (next == *image) {
            tail = PeriodicTail{i, 1};
            break;
        }
        image = std::move(next);
    }
    return ChallengeSchedule(p.alphabet(), std::move(entries), tail);
}

struct DefeatRecord {
    std::uint64_t index = 0;
    FiniteWord challenge;
    bool escapes_layer = false;  // w not in Y_index, as the theorem demands
};

/// Outcome of checking a word against a defeating schedule: one record per
/// hit, and the finiteness side-condition for members of the presented set.
struct DefeatReport {
    std::vector<DefeatRecord> records;
    bool member_of_union = false;     // w in the top cumulative layer
    bool symbolic_certificate = false;  // hit set claims infinitely many hits
    bool pass = false;

    static bool evaluate(const std::vector<DefeatRecord>& records,
                         bool member_of_union, bool symbolic_certificate) {
        for (const auto& r : records)
            if (!r.escapes_layer) return false;
        return !(member_of_union && symbolic_certificate);
    }
};

/// Checks the defeating property on a concrete word: every hit index i
/// must satisfy w not in Y_i, and a word inside the presented set must not
/// carry an infinite-hit certificate (its hit set is finite).
inline DefeatReport verify_defeat(const MeagerPresentation& p,
                                  const ChallengeSchedule& f, const UpWord& w,
                                  std::uint64_t horizon) {
    if (f.alphabet() != p.alphabet() || w.alphabet() != p.alphabet())
        throw std::invalid_argument("alphabet mismatch");
    HitSet hits = hit_set(w, f, horizon);
    DefeatReport report;
    for (std::uint64_t i : hits.indices)
        report.records.push_back({i, f.at(i), !contains(p.layer(i), w)});
    report.member_of_union = contains(p.layers().back(), w);
    report.symbolic_certificate = hits.symbolic_tail.has_value();
    report.pass = DefeatReport::evaluate(report.records, report.member_of_union,
                                         report.symbolic_certificate);
    return report;
}

}  // namespace baire
