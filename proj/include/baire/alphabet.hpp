#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace baire {

/// Symbols are non-negative integers. Finite alphabets identify their
/// symbols with 0..k-1; the naturals alphabet accepts every value.
using Symbol = std::uint64_t;

class Alphabet {
public:
    static Alphabet finite(std::uint64_t size) {
        if (size == 0)
            throw std::invalid_argument("finite alphabet needs size >= 1");
        return Alphabet(size);
    }

    static Alphabet naturals() { return Alphabet(0); }

    static Alphabet binary() { return finite(2); }

    bool is_finite() const { return size_ != 0; }
    bool is_naturals() const { return size_ == 0; }

    /// Number of symbols; only meaningful for finite alphabets.
    std::uint64_t size() const {
        if (!is_finite())
            throw std::logic_error("naturals alphabet has no size");
        return size_;
    }

    bool contains(Symbol s) const { return !is_finite() || s < size_; }

    bool operator==(const Alphabet&) const = default;

    std::string describe() const {
        return is_finite() ? std::to_string(size_) : std::string("naturals");
    }

private:
    explicit Alphabet(std::uint64_t size) : size_(size) {}

    std::uint64_t size_;  // 0 encodes the naturals kind
};

}  // namespace baire
