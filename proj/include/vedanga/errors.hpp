// errors.hpp - exception types shared across the library
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vedanga {

// Rational with a zero denominator, or an operation that would create one.
struct ZeroDenominatorError : std::domain_error {
    explicit ZeroDenominatorError(const std::string& what) : std::domain_error(what) {}
};

// Input outside the mathematical domain of an operation (0^0, divisor < 2, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Index or day argument outside its declared range.
struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// Equal split attempted with a body count that does not divide the total.
struct NotDivisibleError : std::runtime_error {
    NotDivisibleError(const std::string& what, std::uint64_t rem)
        : std::runtime_error(what), remainder(rem) {}
    std::uint64_t remainder;
};

// Month length other than 29 or 30 passed to the sadaha partition.
struct InvalidMonthError : std::invalid_argument {
    explicit InvalidMonthError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace vedanga
