#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "baire/schedule.hpp"
#include "baire/word.hpp"

namespace baire {

/// A rule a |-> psi(a) with, for the built-ins, an infinite image; that
/// unboundedness is what lets a responder stretch blocks over any
/// scheduled challenge.
class PsiFunction {
public:
    static PsiFunction identity() { return PsiFunction(Kind::identity, {}); }
    static PsiFunction doubling() { return PsiFunction(Kind::doubling, {}); }
    static PsiFunction table(std::map<Symbol, std::uint64_t> entries) {
        return PsiFunction(Kind::table, std::move(entries));
    }

    std::uint64_t apply(Symbol a) const {
        switch (kind_) {
            case Kind::identity: return a;
            case Kind::doubling: return 2 * a;
            case Kind::table: {
                auto it = table_.find(a);
                if (it == table_.end())
                    throw std::invalid_argument("psi table does not define symbol " +
                                                std::to_string(a));
                return it->second;
            }
        }
        throw std::logic_error("unhandled psi kind");
    }

    /// Least a with psi(a) >= need; nullopt when a finite table has none.
    std::optional<Symbol> smallest_opener(std::uint64_t need) const {
        switch (kind_) {
            case Kind::identity: return need;
            case Kind::doubling: return (need + 1) / 2;
            case Kind::table:
                for (const auto& [a, v] : table_)
                    if (v >= need) return a;
                return std::nullopt;
        }
        throw std::logic_error("unhandled psi kind");
    }

    bool is_table() const { return kind_ == Kind::table; }
    const std::map<Symbol, std::uint64_t>& table_entries() const { return table_; }

    std::string describe() const {
        switch (kind_) {
            case Kind::identity: return "identity";
            case Kind::doubling: return "doubling";
            case Kind::table: return "table";
        }
        return "";
    }

    bool operator==(const PsiFunction&) const = default;

private:
    enum class Kind { identity, doubling, table };

    PsiFunction(Kind kind, std::map<Symbol, std::uint64_t> table)
        : kind_(kind), table_(std::move(table)) {}

    Kind kind_;
    std::map<Symbol, std::uint64_t> table_;
};

/// Raised when two scheduled challenges force different symbols at one
/// position; no word can satisfy both.
struct OverlappingChallenges : std::runtime_error {
    explicit OverlappingChallenges(std::uint64_t pos)
        : std::runtime_error("challenges force conflicting symbols at position " +
                             std::to_string(pos)),
          position(pos) {}
    std::uint64_t position;
};

/// Raised when a challenge pins a block-structural position (opener or
/// closer) to a symbol the grammar cannot realize there.
struct UnreachablePosition : std::runtime_error {
    explicit UnreachablePosition(std::uint64_t pos)
        : std::runtime_error("challenge conflicts with block structure at position " +
                             std::to_string(pos)),
          position(pos) {}
    std::uint64_t position;
};

enum class Remark2Verdict { consistent, inconsistent };

/// Checks a finite prefix against the block grammar
/// a, psi(a) fillers, a, b, psi(b) fillers, b, ...
/// A prefix ending inside a block (fillers present or closer missing) is
/// consistent; only a completed block whose closer differs from its
/// opener is inconsistent.
inline Remark2Verdict remark2_membership(const FiniteWord& prefix, const PsiFunction& psi) {
    std::uint64_t pos = 0;
    while (pos < prefix.size()) {
        Symbol opener = prefix[static_cast<std::size_t>(pos)];
        std::uint64_t closer = pos + psi.apply(opener) + 1;
        if (closer >= prefix.size()) return Remark2Verdict::consistent;
        if (prefix[static_cast<std::size_t>(closer)] != opener)
            return Remark2Verdict::inconsistent;
        pos = closer + 1;
    }
    return Remark2Verdict::consistent;
}

namespace detail {

/// Contiguous span of forced symbols at [start, start + content.size()).
struct ForcedSegment {
    std::uint64_t start = 0;
    std::vector<Symbol> content;

    std::uint64_t end() const { return start + content.size(); }
};

/// Merge scheduled challenges into disjoint forced segments, rejecting
/// conflicting overlaps.
inline std::vector<ForcedSegment> forced_segments(const ChallengeSchedule& f) {
    std::vector<ForcedSegment> segments;
    for (const auto& [i, word] : f.entries()) {
        if (word.is_empty()) continue;  // hits vacuously wherever scheduled
        ForcedSegment seg{i, word.symbols()};
        if (!segments.empty() && segments.back().end() >= seg.start) {
            ForcedSegment& prev = segments.back();
            for (std::uint64_t q = seg.start; q < std::min(prev.end(), seg.end()); ++q) {
                if (prev.content[static_cast<std::size_t>(q - prev.start)] !=
                    seg.content[static_cast<std::size_t>(q - seg.start)])
                    throw OverlappingChallenges(q);
            }
            for (std::uint64_t q = prev.end(); q < seg.end(); ++q)
                prev.content.push_back(seg.content[static_cast<std::size_t>(q - seg.start)]);
            continue;
        }
        segments.push_back(std::move(seg));
    }
    return segments;
}

}  // namespace detail

/// Builds a member of the block-grammar set hitting every scheduled
/// challenge: challenges land in filler regions of blocks whose openers
/// are chosen large enough, openers forced by position-0 challenges are
/// honored literally, and the word closes with all-zero blocks. This is
/// the responder strategy showing the set meets property-(box) style
/// schedules despite being closed and nowhere dense over an infinite
/// alphabet.
inline UpWord remark2_responder(const ChallengeSchedule& f, const PsiFunction& psi) {
    if (!f.alphabet().is_naturals())
        throw std::invalid_argument("responder plays over the naturals alphabet");
    if (!f.is_finite())
        throw std::invalid_argument("responder requires a finite schedule");
    psi.apply(0);  // closing blocks use opener 0; a table must define it

    std::vector<detail::ForcedSegment> segments = detail::forced_segments(f);
    std::vector<Symbol> out;
    std::size_t next = 0;  // first unconsumed segment
    std::uint64_t pos = 0;  // start of the block being placed
    auto write = [&out](std::uint64_t q, Symbol s) {
        if (out.size() <= q) out.resize(static_cast<std::size_t>(q) + 1, 0);
        out[static_cast<std::size_t>(q)] = s;
    };
    while (next < segments.size()) {
        const detail::ForcedSegment& first = segments[next];
        Symbol opener;
        if (first.start == pos) {
            opener = first.content[0];
        } else {
            // Grow the opener until closer and following opener clear
            // every segment they would otherwise touch.
            std::uint64_t need = first.end() - pos;
            for (;;) {
                std::optional<Symbol> a = psi.smallest_opener(need);
                if (!a) throw UnreachablePosition(first.start);
                opener = *a;
                std::uint64_t closer = pos + psi.apply(opener) + 1;
                std::uint64_t grown = need;
                for (std::size_t j = next; j < segments.size(); ++j) {
                    if (segments[j].start > closer + 1) break;
                    grown = std::max(grown, segments[j].end() - pos);
                }
                if (grown == need) break;
                need = grown;
            }
        }
        std::uint64_t closer = pos + psi.apply(opener) + 1;
        write(pos, opener);
        write(closer, opener);
        while (next < segments.size() && segments[next].start <= closer) {
            detail::ForcedSegment seg = segments[next];
            for (std::uint64_t q = seg.start; q < std::min(seg.end(), closer + 1); ++q) {
                Symbol s = seg.content[static_cast<std::size_t>(q - seg.start)];
                if ((q == pos || q == closer) && s != opener)
                    throw UnreachablePosition(q);
                write(q, s);
            }
            ++next;
            if (seg.end() > closer + 1) {
                // Tail of the segment restarts at the next block's opener.
                seg.content.erase(seg.content.begin(),
                                  seg.content.begin() +
                                      static_cast<std::ptrdiff_t>(closer + 1 - seg.start));
                seg.start = closer + 1;
                segments.insert(segments.begin() + static_cast<std::ptrdiff_t>(next), seg);
            }
        }
        pos = closer + 1;
    }
    return UpWord(f.alphabet(), std::move(out), {0});
}

}  // namespace baire
