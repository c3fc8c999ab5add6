#include "vedanga/natural.hpp"

#include <limits>

namespace vedanga {

Natural::Natural(const std::string& decimal_digits) {
    if (decimal_digits.empty()) throw DomainError("empty natural literal");
    for (char c : decimal_digits) {
        if (c < '0' || c > '9')
            throw DomainError("natural literal is not a decimal digit string: " + decimal_digits);
    }
    v_ = boost::multiprecision::cpp_int(decimal_digits);
}

std::uint64_t Natural::to_uint64() const {
    if (v_ > std::numeric_limits<std::uint64_t>::max())
        throw DomainError("natural too large for 64-bit conversion: " + str());
    return static_cast<std::uint64_t>(v_);
}

Natural gcd(const Natural& a, const Natural& b) {
    return Natural(boost::multiprecision::gcd(a.v_, b.v_));
}

Natural power(const Natural& base, const Natural& exp) {
    if (base.is_zero() && exp.is_zero()) throw DomainError("0^0 is undefined");
    Natural result{1};
    Natural b = base;
    Natural e = exp;
    while (!e.is_zero()) {
        if (e.is_odd()) result *= b;
        e.halve();
        if (!e.is_zero()) b *= b;
    }
    return result;
}

Natural square_iterate(const Natural& base, unsigned n) {
    Natural result = base;
    for (unsigned i = 0; i < n; ++i) result *= result;
    return result;
}

std::size_t digit_count(const Natural& n) {
    if (n.is_zero()) return 1;
    const Natural ten{10};
    std::size_t count = 0;
    Natural t = n;
    while (!t.is_zero()) {
        ++count;
        t = t / ten;
    }
    return count;
}

}  // namespace vedanga
