// oracles.hpp - independent brute-force oracles used only by the tests.
// Everything here runs on plain machine integers and naive procedures so the
// expected values never flow through the library code they check.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oracles {

// Largest common divisor by trial division from the smaller value down.
inline std::uint64_t gcd_trial_division(std::uint64_t a, std::uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    for (std::uint64_t g = a < b ? a : b; g >= 1; --g)
        if (a % g == 0 && b % g == 0) return g;
    return 1;
}

// Whole part of num/den by repeated subtraction.
inline std::uint64_t whole_by_repeated_subtraction(std::uint64_t num, std::uint64_t den) {
    std::uint64_t whole = 0;
    while (num >= den) {
        num -= den;
        ++whole;
    }
    return whole;
}

// Decimal rendering of num/den to `places` digits, rounded half-up, by
// schoolbook long division.
inline std::string decimal_by_long_division(std::uint64_t num, std::uint64_t den,
                                            unsigned places) {
    std::string s = std::to_string(num / den);
    std::uint64_t rem = num % den;
    std::string digits;
    for (unsigned i = 0; i < places; ++i) {
        rem *= 10;
        digits += static_cast<char>('0' + rem / den);
        rem %= den;
    }
    // Half-up: look at twice the final remainder.
    if (2 * rem >= den) {
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9') {
            digits[static_cast<std::size_t>(i)] = '0';
            --i;
        }
        if (i >= 0) {
            ++digits[static_cast<std::size_t>(i)];
        } else {
            s = std::to_string(num / den + 1);
        }
    }
    if (places > 0) s += "." + digits;
    return s;
}

// Tithi serial in progress at day d, found by walking tithi boundaries
// upward with repeated addition: boundary j sits at j * 61/62 days.
inline long long tithi_serial_walk(int d, long long tithi_len_num = 61,
                                   long long tithi_len_den = 62) {
    const long long target = static_cast<long long>(d) * tithi_len_den;
    long long serial = 0;
    long long boundary = 0;  // serial * tithi_len_num
    while (boundary + tithi_len_num <= target) {
        boundary += tithi_len_num;
        ++serial;
    }
    return serial;
}

// Moon position after k parvas by accumulating 1809/124 with plain integers:
// returns (index, offset numerator, offset denominator) reduced.
struct CirclePosition {
    std::uint64_t index, offset_num, offset_den;
};

inline CirclePosition accumulate_position(std::uint64_t count, std::uint64_t step_num,
                                          std::uint64_t step_den, std::uint64_t circle) {
    std::uint64_t acc = 0;
    for (std::uint64_t i = 0; i < count; ++i) acc += step_num;
    std::uint64_t whole = whole_by_repeated_subtraction(acc, step_den);
    const std::uint64_t offset_num = acc - whole * step_den;
    while (whole >= circle) whole -= circle;
    const std::uint64_t g = gcd_trial_division(offset_num, step_den);
    return {whole, offset_num / g, step_den / g};
}

// All divisors of n up to max_k, by trial scan.
inline std::vector<std::uint64_t> divisors_up_to(std::uint64_t n, std::uint64_t max_k) {
    std::vector<std::uint64_t> divs;
    for (std::uint64_t k = 1; k <= max_k; ++k)
        if (n % k == 0) divs.push_back(k);
    return divs;
}

// Mixed-radix odometer: advances a 1-based tuple one position in
// lexicographic order. Radices are most significant first.
inline void odometer_advance(std::vector<std::uint32_t>& tuple,
                             const std::vector<std::uint32_t>& radices) {
    for (std::size_t i = tuple.size(); i-- > 0;) {
        if (tuple[i] < radices[i]) {
            ++tuple[i];
            return;
        }
        tuple[i] = 1;
    }
}

// Tuple reached after `steps` odometer advances from all-ones.
inline std::vector<std::uint32_t> odometer_at(std::uint64_t steps,
                                              const std::vector<std::uint32_t>& radices) {
    std::vector<std::uint32_t> tuple(radices.size(), 1);
    for (std::uint64_t i = 0; i < steps; ++i) odometer_advance(tuple, radices);
    return tuple;
}

// Group walk for the tax-in-kind split.
struct TaxWalk {
    std::uint64_t tax = 0, kept = 0, remainder = 0;
};

inline TaxWalk tax_group_walk(std::uint64_t measures, std::uint64_t divisor) {
    TaxWalk w;
    std::uint64_t in_group = 0;
    for (std::uint64_t m = 0; m < measures; ++m) {
        ++in_group;
        if (in_group == divisor) {
            ++w.tax;
            in_group = 0;
        } else {
            ++w.kept;
        }
    }
    w.remainder = in_group;
    w.kept -= in_group;
    return w;
}

}  // namespace oracles
