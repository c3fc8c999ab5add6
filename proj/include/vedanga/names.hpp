// names.hpp - mixed-radix codec for the 810,000 time-segment name sequences
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vedanga/rational.hpp"

namespace vedanga::names {

/// Ordered radices, most significant first. The yuga default is
/// (5 years, 12 months, 2 parvas, 30 ahoratra slots, 15 muhurtas,
/// 15 prati-muhurtas), product 810,000. Any vector of radices >= 1 works;
/// the factorization is a parameter, not a constant.
struct RadixVector {
    std::vector<std::uint32_t> radices;

    static RadixVector yuga_default() { return RadixVector{{5, 12, 2, 30, 15, 15}}; }

    /// Exact product of the radices. Throws DomainError on an empty or
    /// zero-containing vector, or if the product overflows 64 bits.
    std::uint64_t total_segments() const;

    std::size_t size() const { return radices.size(); }

    friend bool operator==(const RadixVector& a, const RadixVector& b) = default;
};

/// One name tuple: 1-based components, most significant first, one per radix.
struct TimeSegmentName {
    std::vector<std::uint32_t> components;

    friend bool operator==(const TimeSegmentName& a, const TimeSegmentName& b) = default;
};

/// Column labels for rendering: the six yuga component names when the vector
/// is 6 long, positional "c1".."cn" otherwise.
std::vector<std::string> component_labels(const RadixVector& rv);

/// Mixed-radix digits of index (0-based), shifted to 1-based components.
TimeSegmentName encode_index(std::uint64_t index, const RadixVector& rv);

/// Exact inverse of encode_index. Throws RangeError naming the offending
/// component if any component is outside [1, radix].
std::uint64_t decode_name(const TimeSegmentName& name, const RadixVector& rv);

/// Duration of one prati-muhurta in minutes: 1440/(30*15) = 16/5.
Rational prati_muhurta_minutes(int muhurtas_per_ahoratra = 30, int prati_muhurtas_per_muhurta = 15);

/// Duration of one muhurta in minutes: 1440/30 = 48.
Rational muhurta_minutes(int muhurtas_per_ahoratra = 30);

/// Round-trips every index in [0, total); returns the number of indices whose
/// decode(encode(i)) != i (0 means the codec is a bijection). OpenMP-parallel;
/// the serial twin is the reference the tests compare against.
std::uint64_t verify_bijection(const RadixVector& rv);
std::uint64_t verify_bijection_serial(const RadixVector& rv);

}  // namespace vedanga::names
