#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baire/alphabet.hpp"

namespace baire {

/// A finite word over an alphabet. Possibly empty.
class FiniteWord {
public:
    FiniteWord(Alphabet alphabet, std::vector<Symbol> symbols)
        : alphabet_(alphabet), symbols_(std::move(symbols)) {
        for (Symbol s : symbols_)
            if (!alphabet_.contains(s))
                throw std::invalid_argument("symbol " + std::to_string(s) +
                                            " outside alphabet " + alphabet_.describe());
    }

    FiniteWord(Alphabet alphabet, std::initializer_list<Symbol> symbols)
        : FiniteWord(alphabet, std::vector<Symbol>(symbols)) {}

    static FiniteWord empty(Alphabet alphabet) { return FiniteWord(alphabet, {}); }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool is_empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    FiniteWord append(const FiniteWord& tail) const {
        require_same_alphabet(tail);
        std::vector<Symbol> out = symbols_;
        out.insert(out.end(), tail.symbols_.begin(), tail.symbols_.end());
        return FiniteWord(alphabet_, std::move(out));
    }

    FiniteWord padded_to(std::size_t length, Symbol pad) const {
        std::vector<Symbol> out = symbols_;
        while (out.size() < length) out.push_back(pad);
        return FiniteWord(alphabet_, std::move(out));
    }

    bool is_prefix_of(const FiniteWord& other) const {
        return size() <= other.size() &&
               std::equal(symbols_.begin(), symbols_.end(), other.symbols_.begin());
    }

    void require_same_alphabet(const FiniteWord& other) const {
        if (alphabet_ != other.alphabet_)
            throw std::invalid_argument("alphabet mismatch");
    }

    bool operator==(const FiniteWord&) const = default;

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

/// An ultimately periodic omega-word: prefix followed by an endlessly
/// repeated period. Instances are kept in canonical form: the period is
/// primitive (not a power of a shorter word) and the prefix is shortest
/// possible, so equality of canonical fields is equality of denoted words.
class UpWord {
public:
    UpWord(FiniteWord prefix, FiniteWord period)
        : alphabet_(prefix.alphabet()),
          prefix_(prefix.symbols()),
          period_(period.symbols()) {
        prefix.require_same_alphabet(period);
        if (period_.empty())
            throw std::invalid_argument("period must be non-empty");
        canonicalize();
    }

    UpWord(Alphabet alphabet, std::vector<Symbol> prefix, std::vector<Symbol> period)
        : UpWord(FiniteWord(alphabet, std::move(prefix)),
                 FiniteWord(alphabet, std::move(period))) {}

    static UpWord constant(Alphabet alphabet, Symbol s) {
        return UpWord(alphabet, {}, {s});
    }

    const Alphabet& alphabet() const { return alphabet_; }
    FiniteWord prefix() const { return FiniteWord(alphabet_, prefix_); }
    FiniteWord period() const { return FiniteWord(alphabet_, period_); }
    std::size_t prefix_size() const { return prefix_.size(); }
    std::size_t period_size() const { return period_.size(); }

    /// Symbol at position n.
    Symbol at(std::uint64_t n) const {
        if (n < prefix_.size()) return prefix_[static_cast<std::size_t>(n)];
        return period_[static_cast<std::size_t>((n - prefix_.size()) % period_.size())];
    }

    /// The word n |-> at(i + n), canonicalized. shifted(0) == *this.
    UpWord shifted(std::uint64_t i) const {
        std::vector<Symbol> new_prefix;
        std::vector<Symbol> new_period = period_;
        if (i < prefix_.size()) {
            new_prefix.assign(prefix_.begin() + static_cast<std::ptrdiff_t>(i), prefix_.end());
        } else {
            std::size_t rot = static_cast<std::size_t>((i - prefix_.size()) % period_.size());
            std::rotate(new_period.begin(),
                        new_period.begin() + static_cast<std::ptrdiff_t>(rot),
                        new_period.end());
        }
        return UpWord(alphabet_, std::move(new_prefix), std::move(new_period));
    }

    /// True iff the shift of this word at position i extends the finite
    /// word u, i.e. at(i + m) == u[m] for all m < |u|. Vacuously true for
    /// the empty word.
    bool extends_at(std::uint64_t i, const FiniteWord& u) const {
        if (u.alphabet() != alphabet_)
            throw std::invalid_argument("alphabet mismatch");
        for (std::size_t m = 0; m < u.size(); ++m)
            if (at(i + m) != u[m]) return false;
        return true;
    }

    /// u . w : prepend a finite word, canonicalized.
    static UpWord concat(const FiniteWord& u, const UpWord& w) {
        std::vector<Symbol> new_prefix = u.symbols();
        new_prefix.insert(new_prefix.end(), w.prefix_.begin(), w.prefix_.end());
        return UpWord(u.alphabet(), std::move(new_prefix), w.period_);
    }

    bool operator==(const UpWord&) const = default;

    std::string describe() const {
        std::string out = "[";
        for (std::size_t i = 0; i < prefix_.size(); ++i)
            out += (i ? "," : "") + std::to_string(prefix_[i]);
        out += "](";
        for (std::size_t i = 0; i < period_.size(); ++i)
            out += (i ? "," : "") + std::to_string(period_[i]);
        return out + ")^w";
    }

private:
    void canonicalize() {
        // Primitive root of the period: smallest divisor length d whose
        // d-prefix repeated reproduces the period.
        std::size_t p = period_.size();
        for (std::size_t d = 1; d <= p / 2; ++d) {
            if (p % d != 0) continue;
            bool repeats = true;
            for (std::size_t j = d; j < p && repeats; ++j)
                repeats = period_[j] == period_[j - d];
            if (repeats) {
                period_.resize(d);
                break;
            }
        }
        // Shortest prefix: absorb trailing prefix symbols that agree with
        // the backward extension of the period.
        while (!prefix_.empty() && prefix_.back() == period_.back()) {
            prefix_.pop_back();
            std::rotate(period_.begin(), period_.end() - 1, period_.end());
        }
    }

    Alphabet alphabet_;
    std::vector<Symbol> prefix_;
    std::vector<Symbol> period_;
};

/// Canonical form of a (prefix, period) presentation; the UpWord
/// constructor already canonicalizes, so this is the identity on UpWord.
inline UpWord canonicalize(const UpWord& w) { return w; }

}  // namespace baire
