#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace baire {

/// Arbitrary-precision rational, always in reduced form with positive
/// denominator. Exact: no operation rounds. Serialized as "p/q".
class ExactRational {
public:
    using Int = boost::multiprecision::cpp_int;

    ExactRational() : value_(0) {}
    ExactRational(std::int64_t n) : value_(n) {}  // NOLINT: implicit by design
    ExactRational(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        value_ = Rational(num, den);
    }

    /// 2^e for any integer e, exactly.
    static ExactRational pow2(std::int64_t e) {
        Int shifted = Int(1) << static_cast<unsigned>(e < 0 ? -e : e);
        return e < 0 ? ExactRational(1, shifted) : ExactRational(shifted, 1);
    }

    /// Parses "p" or "p/q" with optional leading minus signs.
    static ExactRational parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return ExactRational(parse_int(text), 1);
        return ExactRational(parse_int(text.substr(0, slash)),
                             parse_int(text.substr(slash + 1)));
    }

    Int numerator() const { return boost::multiprecision::numerator(value_); }
    Int denominator() const { return boost::multiprecision::denominator(value_); }
    bool is_zero() const { return value_ == 0; }

    std::string str() const {
        return numerator().str() + "/" + denominator().str();
    }

    ExactRational operator+(const ExactRational& o) const { return wrap(value_ + o.value_); }
    ExactRational operator-(const ExactRational& o) const { return wrap(value_ - o.value_); }
    ExactRational operator*(const ExactRational& o) const { return wrap(value_ * o.value_); }
    ExactRational operator/(const ExactRational& o) const {
        if (o.value_ == 0) throw std::invalid_argument("division by zero");
        return wrap(value_ / o.value_);
    }
    ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }

    bool operator==(const ExactRational& o) const { return value_ == o.value_; }
    bool operator!=(const ExactRational& o) const { return value_ != o.value_; }
    bool operator<(const ExactRational& o) const { return value_ < o.value_; }
    bool operator<=(const ExactRational& o) const { return value_ <= o.value_; }
    bool operator>(const ExactRational& o) const { return value_ > o.value_; }
    bool operator>=(const ExactRational& o) const { return value_ >= o.value_; }

private:
    using Rational = boost::multiprecision::cpp_rational;

    static ExactRational wrap(Rational v) {
        ExactRational out;
        out.value_ = std::move(v);
        return out;
    }

    static Int parse_int(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("empty rational component");
        std::size_t start = text[0] == '-' ? 1 : 0;
        if (start == text.size()) throw std::invalid_argument("bare minus sign");
        for (std::size_t j = start; j < text.size(); ++j)
            if (text[j] < '0' || text[j] > '9')
                throw std::invalid_argument("malformed rational: " + text);
        return Int(text);
    }

    Rational value_;
};

}  // namespace baire
