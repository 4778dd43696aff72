#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baire/automaton.hpp"
#include "baire/openset.hpp"
#include "baire/presentation.hpp"
#include "baire/schedule.hpp"
#include "baire/tailsum.hpp"
#include "baire/witness.hpp"
#include "baire/word.hpp"

namespace baire {

/// Insertion-ordered JSON: emitted documents keep a fixed key order, so
/// equal values serialize to equal bytes. Loaders read known keys and
/// ignore extras, letting one command's output feed the next.
using Json = nlohmann::ordered_json;

inline Json alphabet_json(const Alphabet& a) {
    return a.is_finite() ? Json(a.size()) : Json(0);
}

inline Alphabet alphabet_from_json(const Json& j) {
    std::uint64_t k = j.get<std::uint64_t>();
    return k == 0 ? Alphabet::naturals() : Alphabet::finite(k);
}

inline Json symbols_json(const std::vector<Symbol>& symbols) {
    return Json(symbols);
}

inline Json word_json(const FiniteWord& w) { return symbols_json(w.symbols()); }

inline FiniteWord word_from_json(Alphabet alphabet, const Json& j) {
    return FiniteWord(alphabet, j.get<std::vector<Symbol>>());
}

inline Json upword_json(const UpWord& w) {
    return Json{{"alphabet", alphabet_json(w.alphabet())},
                {"prefix", word_json(w.prefix())},
                {"period", word_json(w.period())}};
}

inline UpWord upword_from_json(const Json& j) {
    Alphabet alphabet = alphabet_from_json(j.at("alphabet"));
    return UpWord(word_from_json(alphabet, j.at("prefix")),
                  word_from_json(alphabet, j.at("period")));
}

inline Json automaton_json(const SafetyAutomaton& a) {
    Json live = Json::array();
    for (State q = 0; q < a.state_count(); ++q) live.push_back(a.live(q));
    return Json{{"alphabet", alphabet_json(a.alphabet())},
                {"states", a.state_count()},
                {"initial", a.initial()},
                {"live", live},
                {"delta", Json(a.delta())}};
}

inline SafetyAutomaton automaton_from_json(const Json& j) {
    Alphabet alphabet = alphabet_from_json(j.at("alphabet"));
    std::size_t states = j.at("states").get<std::size_t>();
    auto delta = j.at("delta").get<std::vector<std::vector<State>>>();
    auto live = j.at("live").get<std::vector<bool>>();
    if (delta.size() != states || live.size() != states)
        throw std::invalid_argument("automaton state count mismatch");
    return SafetyAutomaton(alphabet, j.at("initial").get<State>(), std::move(delta),
                           std::move(live));
}

inline Json schedule_json(const ChallengeSchedule& f) {
    Json entries = Json::array();
    for (const auto& [i, word] : f.entries())
        entries.push_back(Json{{"i", i}, {"word", word_json(word)}});
    Json tail;
    if (f.tail())
        tail = Json{{"start", f.tail()->start}, {"period", f.tail()->period}};
    return Json{{"alphabet", alphabet_json(f.alphabet())},
                {"entries", std::move(entries)},
                {"tail", std::move(tail)}};
}

inline ChallengeSchedule schedule_from_json(const Json& j) {
    Alphabet alphabet = alphabet_from_json(j.at("alphabet"));
    std::map<std::uint64_t, FiniteWord> entries;
    for (const Json& e : j.at("entries"))
        entries.emplace(e.at("i").get<std::uint64_t>(),
                        word_from_json(alphabet, e.at("word")));
    std::optional<PeriodicTail> tail;
    if (!j.at("tail").is_null())
        tail = PeriodicTail{j.at("tail").at("start").get<std::uint64_t>(),
                            j.at("tail").at("period").get<std::uint64_t>()};
    return ChallengeSchedule(alphabet, std::move(entries), tail);
}

/// Presentation files list raw layers; normalization (and the
/// nowhere-density check) happens on load.
inline std::vector<SafetyAutomaton> layers_from_json(const Json& j) {
    std::vector<SafetyAutomaton> layers;
    for (const Json& l : j.at("layers")) layers.push_back(automaton_from_json(l));
    return layers;
}

inline Json layers_json(const std::vector<SafetyAutomaton>& layers) {
    Json arr = Json::array();
    for (const SafetyAutomaton& a : layers) arr.push_back(automaton_json(a));
    return Json{{"layers", std::move(arr)}};
}

inline Json rational_json(const ExactRational& r) { return Json(r.str()); }

inline ExactRational rational_from_json(const Json& j) {
    return ExactRational::parse(j.get<std::string>());
}

inline Json interval_json(const Interval& iv) {
    return Json::array({rational_json(iv.lo), rational_json(iv.hi)});
}

inline Interval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("interval must be a [lo, hi] pair");
    return Interval{rational_from_json(j.at(0)), rational_from_json(j.at(1))};
}

inline Json openset_json(const OpenSet1D& u) {
    Json intervals = Json::array();
    for (const Interval& iv : u.intervals()) intervals.push_back(interval_json(iv));
    return Json{{"epsilon", rational_json(u.epsilon())},
                {"intervals", std::move(intervals)}};
}

inline OpenSet1D openset_from_json(const Json& j) {
    std::vector<Interval> intervals;
    for (const Json& iv : j.at("intervals")) intervals.push_back(interval_from_json(iv));
    return OpenSet1D(std::move(intervals), rational_from_json(j.at("epsilon")));
}

inline Json constraint_json(const ConstraintSet& c) {
    return Json{{"automaton", automaton_json(c.automaton())},
                {"witness", word_json(c.interior_witness())}};
}

inline ConstraintSet constraint_from_json(const Json& j) {
    SafetyAutomaton a = automaton_from_json(j.at("automaton"));
    FiniteWord w = word_from_json(a.alphabet(), j.at("witness"));
    return ConstraintSet(std::move(a), std::move(w));
}

inline Json hit_certificate_json(const std::optional<PeriodicHit>& cert) {
    if (!cert) return Json();
    return Json{{"start", cert->start}, {"stride", cert->stride}};
}

inline Json defeat_report_json(const DefeatReport& report) {
    Json records = Json::array();
    for (const DefeatRecord& r : report.records)
        records.push_back(Json{{"i", r.index},
                               {"challenge", word_json(r.challenge)},
                               {"escapes_layer", r.escapes_layer}});
    return Json{{"records", std::move(records)},
                {"member_of_union", report.member_of_union},
                {"symbolic_certificate", report.symbolic_certificate},
                {"verdict", report.pass ? "pass" : "fail"}};
}

inline Json window_certificate_json(const WindowCertificate& cert) {
    Json records = Json::array();
    for (const WindowRecord& r : cert.records)
        records.push_back(Json{{"i", r.index},
                               {"word", word_json(r.word)},
                               {"window", interval_json(r.window)},
                               {"interval_index", r.interval_index},
                               {"interval", interval_json(r.interval)}});
    return Json{{"records", std::move(records)}};
}

}  // namespace baire
