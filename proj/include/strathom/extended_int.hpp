#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "strathom/errors.hpp"

namespace strathom {

/// An element of Z extended by +infinity and -infinity, with saturating
/// arithmetic: finite + (-inf) = -inf, -(+inf) = -inf, and so on. The sum
/// (+inf) + (-inf) is undefined and throws.
class ExtendedInt {
public:
    constexpr ExtendedInt() : state_(State::Finite), value_(0) {}
    constexpr ExtendedInt(long long v) : state_(State::Finite), value_(v) {}

    static constexpr ExtendedInt plus_infinity() { return ExtendedInt(State::PlusInf); }
    static constexpr ExtendedInt minus_infinity() { return ExtendedInt(State::MinusInf); }

    constexpr bool is_finite() const { return state_ == State::Finite; }
    constexpr bool is_plus_infinity() const { return state_ == State::PlusInf; }
    constexpr bool is_minus_infinity() const { return state_ == State::MinusInf; }

    long long finite_value() const {
        if (!is_finite()) throw ValidationError("extended integer is not finite");
        return value_;
    }

    friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
        return a.state_ == b.state_ && (a.state_ != State::Finite || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
        auto key = [](const ExtendedInt& x) -> int {
            return x.state_ == State::MinusInf ? -1 : (x.state_ == State::PlusInf ? 1 : 0);
        };
        if (key(a) != key(b)) return key(a) <=> key(b);
        if (a.state_ == State::Finite) return a.value_ <=> b.value_;
        return std::strong_ordering::equal;
    }

    friend ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
        if (a.is_finite() && b.is_finite()) return ExtendedInt(a.value_ + b.value_);
        if (a.is_plus_infinity() && b.is_minus_infinity()) throw ValidationError("(+inf) + (-inf) is undefined");
        if (a.is_minus_infinity() && b.is_plus_infinity()) throw ValidationError("(-inf) + (+inf) is undefined");
        return a.is_finite() ? b : a;
    }

    friend ExtendedInt operator-(const ExtendedInt& a) {
        if (a.is_plus_infinity()) return minus_infinity();
        if (a.is_minus_infinity()) return plus_infinity();
        return ExtendedInt(-a.value_);
    }

    friend ExtendedInt operator-(const ExtendedInt& a, const ExtendedInt& b) { return a + (-b); }

    std::string str() const {
        if (is_plus_infinity()) return "+inf";
        if (is_minus_infinity()) return "-inf";
        return std::to_string(value_);
    }

    /// Accepts a decimal integer or the literals "+inf" / "-inf".
    static ExtendedInt parse(const std::string& text) {
        if (text == "+inf") return plus_infinity();
        if (text == "-inf") return minus_infinity();
        try {
            std::size_t used = 0;
            long long v = std::stoll(text, &used);
            if (used != text.size()) throw ValidationError("trailing characters in integer '" + text + "'");
            return ExtendedInt(v);
        } catch (const std::invalid_argument&) {
            throw ValidationError("not an extended integer: '" + text + "'");
        } catch (const std::out_of_range&) {
            throw ValidationError("integer out of range: '" + text + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtendedInt& v) { return os << v.str(); }

private:
    enum class State { MinusInf, Finite, PlusInf };
    constexpr explicit ExtendedInt(State s) : state_(s), value_(0) {}

    State state_;
    long long value_;
};

}  // namespace strathom
