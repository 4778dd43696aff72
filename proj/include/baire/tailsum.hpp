#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "baire/openset.hpp"
#include "baire/schedule.hpp"
#include "baire/witness.hpp"
#include "baire/word.hpp"

namespace baire {

/// t_n = sum over k >= n of g(k) / 2^k, exactly: finite sum over the
/// shifted prefix plus the geometric closed form over the period.
inline ExactRational tail_sum(const UpWord& g, std::uint64_t n) {
    if (g.alphabet() != Alphabet::binary())
        throw std::invalid_argument("tail sums need a binary word");
    UpWord h = g.shifted(n);
    ExactRational acc;
    for (std::size_t j = 0; j < h.prefix_size(); ++j)
        if (h.at(j) == 1) acc += ExactRational::pow2(-static_cast<std::int64_t>(j));
    ExactRational period_value;
    const FiniteWord period = h.period();
    for (std::size_t j = 0; j < period.size(); ++j)
        if (period[j] == 1)
            period_value += ExactRational::pow2(-static_cast<std::int64_t>(j));
    ExactRational one(1);
    ExactRational ratio = one - ExactRational::pow2(-static_cast<std::int64_t>(period.size()));
    acc += ExactRational::pow2(-static_cast<std::int64_t>(h.prefix_size())) *
           (period_value / ratio);
    return ExactRational::pow2(-static_cast<std::int64_t>(n)) * acc;
}

struct HitsReport {
    std::vector<std::uint64_t> hits;  // n <= horizon with t_n in U
    bool infinitely_often = false;
};

/// Which tail sums of g land in U, and whether infinitely many do. The
/// decision uses the ray structure: past the preperiod t_{n+p} = 2^{-p} t_n,
/// and a shrinking positive ray meets U infinitely often exactly when U
/// adheres to 0 and the ray is not identically zero (g has a 1 in its
/// period).
inline HitsReport hits_in_U(const UpWord& g, const OpenSet1D& u, std::uint64_t horizon) {
    HitsReport report;
    for (std::uint64_t n = 0; n <= horizon; ++n)
        if (u.contains(tail_sum(g, n))) report.hits.push_back(n);
    bool ones_forever = false;
    const FiniteWord period = g.period();
    for (Symbol s : period.symbols())
        if (s == 1) ones_forever = true;
    report.infinitely_often = u.zero_adherent() && ones_forever;
    return report;
}

/// The exact set of values t_i can take over all omega-extensions of w
/// placed at position i: the closed interval
/// 2^{1-i} * [val01(w), val01(w) + 2^{-|w|}], where val01(w) is the value
/// of w read as a binary fraction. Both endpoints are attained (all-zero
/// and all-one suffixes).
inline Interval dyadic_window(std::uint64_t i, const FiniteWord& w) {
    if (w.alphabet() != Alphabet::binary())
        throw std::invalid_argument("dyadic windows need binary words");
    ExactRational val01;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (w[j] == 1) val01 += ExactRational::pow2(-static_cast<std::int64_t>(j) - 1);
    ExactRational scale = ExactRational::pow2(1 - static_cast<std::int64_t>(i));
    ExactRational hi = val01 + ExactRational::pow2(-static_cast<std::int64_t>(w.size()));
    return Interval{scale * val01, scale * hi};
}

struct WindowRecord {
    std::uint64_t index = 0;       // schedule position i
    FiniteWord word;               // scheduled word w = f(i)
    Interval window;               // exact range of t_i over extensions of w
    std::size_t interval_index = 0;  // which interval of U contains the window
    Interval interval;             // that interval's endpoints, copied

    bool operator==(const WindowRecord&) const = default;
};

/// Per-index proof that scheduled words steer tail sums into U.
struct WindowCertificate {
    std::vector<WindowRecord> records;

    bool operator==(const WindowCertificate&) const = default;
};

/// Revalidates a certificate against U: windows recomputed from scratch
/// must match the stored endpoints exactly, the referenced interval must
/// be U's, and containment must hold strictly (window endpoints are
/// attained, so they must fall strictly inside the open interval).
inline bool validate_certificate(const WindowCertificate& cert, const OpenSet1D& u) {
    for (const WindowRecord& r : cert.records) {
        if (r.interval_index >= u.intervals().size()) return false;
        if (!(u.intervals()[r.interval_index] == r.interval)) return false;
        if (!(dyadic_window(r.index, r.word) == r.window)) return false;
        if (!(r.interval.lo < r.window.lo && r.window.hi < r.interval.hi)) return false;
    }
    return true;
}

/// Raised when no word of length <= depth has its window inside U at
/// scale 2^{-i}; carries the closest candidate for diagnosis.
struct NoWindow : std::runtime_error {
    NoWindow(std::uint64_t i, std::optional<FiniteWord> nm)
        : std::runtime_error("no dyadic window fits inside U at index " +
                             std::to_string(i)),
          index(i),
          near_miss(std::move(nm)) {}
    std::uint64_t index;
    std::optional<FiniteWord> near_miss;
};

namespace detail {

/// Shortest-then-lexicographic search for a word whose window at i fits
/// strictly inside an interval of U (only the interval starting at 0 when
/// zero_only is set, so the same word keeps working at every later index).
inline WindowRecord find_window(const OpenSet1D& u, std::uint64_t i,
                                               std::uint64_t depth, bool zero_only) {
    Alphabet bin = Alphabet::binary();
    std::optional<FiniteWord> near_miss;
    std::optional<ExactRational> near_gap;
    for (std::uint64_t len = 1; len <= depth; ++len) {
        std::vector<Symbol> symbols(static_cast<std::size_t>(len), 0);
        for (;;) {
            FiniteWord w(bin, symbols);
            Interval window = dyadic_window(i, w);
            for (std::size_t j = 0; j < u.intervals().size(); ++j) {
                const Interval& iv = u.intervals()[j];
                if (zero_only && !(iv.lo == ExactRational(0))) continue;
                if (iv.lo < window.lo && window.hi < iv.hi)
                    return WindowRecord{i, w, window, j, iv};
                ExactRational gap;
                if (window.lo <= iv.lo) gap += iv.lo - window.lo;
                if (window.hi >= iv.hi) gap += window.hi - iv.hi;
                if (!near_gap || gap < *near_gap) {
                    near_gap = gap;
                    near_miss = w;
                }
            }
            // next word of this length in lexicographic order
            std::size_t j = symbols.size();
            while (j > 0 && symbols[j - 1] == 1) symbols[--j] = 0;
            if (j == 0) break;
            symbols[j - 1] = 1;
        }
    }
    throw NoWindow(i, near_miss);
}

}  // namespace detail

struct ChallengeWithCertificate {
    ChallengeSchedule schedule;
    WindowCertificate certificate;
};

/// Challenges steering tail sums into U at each listed index: f(i) is the
/// shortest word whose window at i fits inside U, so every word extending
/// f(i) at i has t_i in U.
inline ChallengeWithCertificate challenge_from_open_set(const OpenSet1D& u,
                                                        const std::vector<std::uint64_t>& indices,
                                                        std::uint64_t depth) {
    if (!u.zero_adherent())
        throw std::invalid_argument("U must adhere to 0");
    std::map<std::uint64_t, FiniteWord> entries;
    WindowCertificate cert;
    for (std::uint64_t i : indices) {
        if (entries.count(i)) continue;
        WindowRecord r = detail::find_window(u, i, depth, false);
        entries.emplace(i, r.word);
        cert.records.push_back(std::move(r));
    }
    return ChallengeWithCertificate{
        ChallengeSchedule(Alphabet::binary(), std::move(entries)), std::move(cert)};
}

/// Periodic variant: one word, found inside U's zero-adjacent interval at
/// the tail start, certifies every later index as well (scaling toward 0
/// preserves containment in an interval with lo = 0), so the schedule
/// carries a periodic tail repeating that word.
inline ChallengeWithCertificate challenge_from_open_set(const OpenSet1D& u,
                                                        const PeriodicTail& tail,
                                                        std::uint64_t depth) {
    if (!u.zero_adherent())
        throw std::invalid_argument("U must adhere to 0");
    if (tail.period == 0)
        throw std::invalid_argument("tail period must be >= 1");
    WindowRecord base = detail::find_window(u, tail.start, depth, true);
    std::map<std::uint64_t, FiniteWord> entries;
    WindowCertificate cert;
    for (std::uint64_t i = tail.start; i < tail.start + tail.period; ++i) {
        entries.emplace(i, base.word);
        cert.records.push_back(WindowRecord{i, base.word, dyadic_window(i, base.word),
                                            base.interval_index, base.interval});
    }
    return ChallengeWithCertificate{
        ChallengeSchedule(Alphabet::binary(), std::move(entries), tail), std::move(cert)};
}

struct CorollaryTranscript {
    ChallengeSchedule schedule;
    WindowCertificate certificate;
    UpWord word;
    HitsReport report;
    std::uint64_t horizon = 0;  // hits enumerated for n <= horizon
};

/// End-to-end demonstration against a hypothetical function bounded away
/// from 0 on U: synthesize challenges from U, answer them with a witness
/// word, and report that its tail sums enter U infinitely often. The
/// witness has infinitely many ones: every certified window word contains
/// a 1 (an all-zero word's window starts at 0, never strictly inside an
/// open interval), and the periodic tail embeds one such word per stride.
inline CorollaryTranscript corollary_demo(const OpenSet1D& u, const PeriodicTail& tail,
                                          std::uint64_t depth) {
    ChallengeWithCertificate cc = challenge_from_open_set(u, tail, depth);
    BaireWitness witness =
        baire_witness(cc.schedule, ConstraintSet::whole_space(Alphabet::binary()), 0);
    bool period_has_one = false;
    const FiniteWord witness_period = witness.word.period();
    for (Symbol s : witness_period.symbols())
        if (s == 1) period_has_one = true;
    if (!period_has_one)
        throw std::logic_error("witness period lost its ones");
    std::uint64_t horizon = witness.word.prefix_size() + 2 * witness.word.period_size();
    HitsReport report = hits_in_U(witness.word, u, horizon);
    if (!report.infinitely_often)
        throw std::logic_error("corollary witness must hit U infinitely often");
    return CorollaryTranscript{std::move(cc.schedule), std::move(cc.certificate),
                               std::move(witness.word), std::move(report), horizon};
}

}  // namespace baire
