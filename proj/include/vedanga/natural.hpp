// natural.hpp - arbitrary-precision non-negative integers
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "vedanga/errors.hpp"

namespace vedanga {

/// Non-negative integer of arbitrary magnitude. Closed under add, multiply
/// and power; subtraction throws on underflow instead of wrapping.
class Natural {
public:
    Natural() = default;
    Natural(unsigned long long v) : v_(v) {}
    explicit Natural(const std::string& decimal_digits);

    bool is_zero() const { return v_.is_zero(); }

    Natural& operator+=(const Natural& o) {
        v_ += o.v_;
        return *this;
    }
    Natural& operator*=(const Natural& o) {
        v_ *= o.v_;
        return *this;
    }
    Natural& operator-=(const Natural& o) {
        if (v_ < o.v_) throw DomainError("natural subtraction underflow");
        v_ -= o.v_;
        return *this;
    }
    Natural& operator++() {
        ++v_;
        return *this;
    }
    Natural& operator--() {
        if (v_.is_zero()) throw DomainError("natural decrement underflow");
        --v_;
        return *this;
    }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator/(const Natural& a, const Natural& b) { return divmod(a, b).first; }
    friend Natural operator%(const Natural& a, const Natural& b) { return divmod(a, b).second; }

    /// Quotient and remainder in one pass; divisor must be nonzero.
    friend std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b) {
        if (b.is_zero()) throw DomainError("natural division by zero");
        boost::multiprecision::cpp_int q, r;
        boost::multiprecision::divide_qr(a.v_, b.v_, q, r);
        return {Natural(std::move(q)), Natural(std::move(r))};
    }

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    bool is_odd() const { return boost::multiprecision::bit_test(v_, 0); }
    Natural& halve() {
        v_ >>= 1;
        return *this;
    }

    std::string str() const { return v_.str(); }
    std::uint64_t to_uint64() const;

private:
    explicit Natural(boost::multiprecision::cpp_int v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_int v_;

    friend Natural gcd(const Natural& a, const Natural& b);
};

Natural gcd(const Natural& a, const Natural& b);

/// base^exp by binary exponentiation; 0^0 is rejected.
Natural power(const Natural& base, const Natural& exp);

/// n-th successive square of base, i.e. base^(2^n).
Natural square_iterate(const Natural& base, unsigned n);

/// Number of base-10 digits; digit_count(0) == 1.
std::size_t digit_count(const Natural& n);

}  // namespace vedanga
