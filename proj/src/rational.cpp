#include "vedanga/rational.hpp"

#include <utility>

namespace vedanga {

Rational::Rational(long long num, long long den)
    : Rational(Natural{num < 0 ? static_cast<unsigned long long>(-(num + 1)) + 1
                               : static_cast<unsigned long long>(num)},
               Natural{den < 0 ? static_cast<unsigned long long>(-(den + 1)) + 1
                               : static_cast<unsigned long long>(den)},
               (num < 0) != (den < 0)) {}

Rational::Rational(Natural num, Natural den, bool negative)
    : negative_(negative), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominatorError("rational with zero denominator");
    canonicalize_();
}

void Rational::canonicalize_() {
    if (num_.is_zero()) {
        den_ = Natural{1};
        negative_ = false;
        return;
    }
    const Natural g = gcd(num_, den_);
    if (g != Natural{1}) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    if (is_zero()) return *this;
    Rational r = *this;
    r.negative_ = !negative_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    const Natural lhs = a.num_ * b.den_;
    const Natural rhs = b.num_ * a.den_;
    const Natural den = a.den_ * b.den_;
    if (a.negative_ == b.negative_) return Rational(lhs + rhs, den, a.negative_);
    // Opposite signs: the larger cross product decides sign and magnitude.
    if (lhs == rhs) return Rational();
    if (lhs > rhs) return Rational(lhs - rhs, den, a.negative_);
    return Rational(rhs - lhs, den, b.negative_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_, a.negative_ != b.negative_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ZeroDenominatorError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_, a.negative_ != b.negative_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.negative_ != b.negative_)
        return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    const auto cross = (a.num_ * b.den_) <=> (b.num_ * a.den_);
    return a.negative_ ? (0 <=> cross) : cross;
}

std::string Rational::str() const {
    std::string s = negative_ ? "-" : "";
    s += num_.str();
    if (!is_integer()) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational reduce(const Rational& r) { return r; }

Rational MixedNumber::to_rational() const { return Rational(whole, Natural{1}) + frac; }

MixedNumber to_mixed(const Rational& r) {
    if (r.negative()) throw DomainError("to_mixed requires a non-negative rational");
    auto [q, rem] = divmod(r.numerator(), r.denominator());
    return MixedNumber{std::move(q), Rational(std::move(rem), r.denominator())};
}

Rational rule_of_three(const Rational& b, const Rational& c, const Rational& d) {
    if (d.is_zero()) throw ZeroDenominatorError("rule of three with zero fourth term");
    return b * c / d;
}

std::string render_decimal(const Rational& r, unsigned places) {
    const Natural scale = power(Natural{10}, Natural{places});
    auto [q, rem] = divmod(r.numerator() * scale, r.denominator());
    if (rem + rem >= r.denominator()) ++q;  // half-up on the magnitude
    auto [whole, frac] = divmod(q, scale);
    std::string s = (r.negative() && !q.is_zero()) ? "-" : "";
    s += whole.str();
    if (places > 0) {
        std::string digits = frac.str();
        s += '.';
        s.append(places - digits.size(), '0');
        s += digits;
    }
    return s;
}

std::string to_string(const MixedNumber& m) {
    if (m.frac.is_zero()) return m.whole.str();
    if (m.whole.is_zero()) return m.frac.str();
    return m.whole.str() + " " + m.frac.str();
}

}  // namespace vedanga
