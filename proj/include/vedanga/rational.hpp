// rational.hpp - exact rational arithmetic over Natural magnitudes
#pragma once

#include <compare>
#include <string>

#include "vedanga/natural.hpp"

namespace vedanga {

/// Exact rational number. Values are kept in canonical form: denominator
/// nonzero, gcd(numerator, denominator) == 1, and zero is non-negative.
/// All operations are pure; no floating point is involved anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value);
    Rational(long long num, long long den);
    Rational(Natural num, Natural den, bool negative = false);

    const Natural& numerator() const { return num_; }
    const Natural& denominator() const { return den_; }
    bool negative() const { return negative_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == Natural{1}; }

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.negative_ == b.negative_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "num/den" with optional sign; integers render without the "/den".
    std::string str() const;

private:
    bool negative_ = false;
    Natural num_;
    Natural den_;

    void canonicalize_();
};

/// Canonical (lowest-terms) form of r. Values are stored canonical, so this
/// is the identity on any constructed Rational; it exists as the named
/// reduction entry point and is idempotent by construction.
Rational reduce(const Rational& r);

/// Whole part plus proper fractional remainder; exact recombination holds:
/// whole * den + frac.num == num.
struct MixedNumber {
    Natural whole;
    Rational frac;

    Rational to_rational() const;

    friend bool operator==(const MixedNumber& a, const MixedNumber& b) = default;
};

/// Split a non-negative rational into whole and proper fractional parts.
MixedNumber to_mixed(const Rational& r);

/// Solve a/b = c/d for a, i.e. a = b*c/d. Exact; d must be nonzero.
Rational rule_of_three(const Rational& b, const Rational& c, const Rational& d);

/// Decimal rendering with `places` fractional digits, rounded half-up on the
/// magnitude. Display-only: computation paths never consume this output.
std::string render_decimal(const Rational& r, unsigned places);

/// "14 73/124" style rendering; pure whole parts render as plain integers.
std::string to_string(const MixedNumber& m);

inline Rational::Rational(long long value)
    : Rational(Natural{value < 0 ? static_cast<unsigned long long>(-(value + 1)) + 1
                                 : static_cast<unsigned long long>(value)},
               Natural{1}, value < 0) {}

}  // namespace vedanga
