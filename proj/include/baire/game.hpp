#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "baire/presentation.hpp"
#include "baire/witness.hpp"

namespace baire {

using Challenger = std::function<ChallengeSchedule()>;
using Responder = std::function<UpWord(const ChallengeSchedule&)>;

/// One play of the challenge game: the challenger commits a schedule, the
/// responder answers with a word, and the transcript records the hits plus
/// the context-dependent verdicts. "Responder wins" renders "infinitely
/// many hits" finitely: a symbolic certificate, or failing that a hit at
/// every scheduled index within the horizon.
struct GameTranscript {
    ChallengeSchedule schedule;
    UpWord response;
    HitSet hits;
    bool responder_in_set = false;
    std::optional<DefeatReport> defeat;  // present when the context is a presentation
    bool responder_wins = false;
};

namespace detail {

inline bool hits_every_scheduled_index(const ChallengeSchedule& f, const HitSet& hits,
                                       std::uint64_t horizon) {
    std::uint64_t from = 0;
    for (;;) {
        std::optional<std::uint64_t> i = f.next_index(from);
        if (!i || *i > horizon) return true;
        if (!hits.contains(*i)) return false;
        from = *i + 1;
    }
}

}  // namespace detail

inline GameTranscript run_star_game(const Challenger& challenger,
                                    const Responder& responder,
                                    const MeagerPresentation& context,
                                    std::uint64_t horizon) {
    ChallengeSchedule schedule = challenger();
    UpWord response = responder(schedule);
    HitSet hits = hit_set(response, schedule, horizon);
    bool wins = hits.symbolic_tail.has_value() ||
                detail::hits_every_scheduled_index(schedule, hits, horizon);
    DefeatReport defeat = verify_defeat(context, schedule, response, horizon);
    bool in_set = defeat.member_of_union;
    return GameTranscript{std::move(schedule), std::move(response), std::move(hits),
                          in_set, std::move(defeat), wins};
}

inline GameTranscript run_star_game(const Challenger& challenger,
                                    const Responder& responder,
                                    const ConstraintSet& context,
                                    std::uint64_t horizon) {
    ChallengeSchedule schedule = challenger();
    UpWord response = responder(schedule);
    HitSet hits = hit_set(response, schedule, horizon);
    bool wins = hits.symbolic_tail.has_value() ||
                detail::hits_every_scheduled_index(schedule, hits, horizon);
    bool in_set = contains(context.automaton(), response);
    return GameTranscript{std::move(schedule), std::move(response), std::move(hits),
                          in_set, std::nullopt, wins};
}

}  // namespace baire
