#include "vedanga/names.hpp"

#include <limits>

#include "vedanga/errors.hpp"

namespace vedanga::names {
namespace {

void check_radices(const RadixVector& rv) {
    if (rv.radices.empty()) throw DomainError("radix vector must have at least one component");
    for (std::uint32_t r : rv.radices)
        if (r < 1) throw DomainError("every radix must be >= 1");
}

}  // namespace

std::uint64_t RadixVector::total_segments() const {
    check_radices(*this);
    std::uint64_t product = 1;
    for (std::uint32_t r : radices) {
        if (product > std::numeric_limits<std::uint64_t>::max() / r)
            throw DomainError("radix product overflows 64 bits");
        product *= r;
    }
    return product;
}

std::vector<std::string> component_labels(const RadixVector& rv) {
    if (rv == RadixVector::yuga_default())
        return {"year", "month", "parva", "ahoratra", "muhurta", "prati_muhurta"};
    std::vector<std::string> labels;
    labels.reserve(rv.size());
    for (std::size_t i = 0; i < rv.size(); ++i) labels.push_back("c" + std::to_string(i + 1));
    return labels;
}

TimeSegmentName encode_index(std::uint64_t index, const RadixVector& rv) {
    const std::uint64_t total = rv.total_segments();
    if (index >= total)
        throw RangeError("index " + std::to_string(index) + " out of range [0, " +
                         std::to_string(total) + ")");
    TimeSegmentName name;
    name.components.assign(rv.size(), 1);
    for (std::size_t i = rv.size(); i-- > 0;) {
        const std::uint32_t radix = rv.radices[i];
        name.components[i] = static_cast<std::uint32_t>(index % radix) + 1;
        index /= radix;
    }
    return name;
}

std::uint64_t decode_name(const TimeSegmentName& name, const RadixVector& rv) {
    rv.total_segments();  // validates the radices
    if (name.components.size() != rv.size())
        throw RangeError("name has " + std::to_string(name.components.size()) +
                         " components, expected " + std::to_string(rv.size()));
    const auto labels = component_labels(rv);
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < rv.size(); ++i) {
        const std::uint32_t c = name.components[i];
        if (c < 1 || c > rv.radices[i])
            throw RangeError("component " + labels[i] + "=" + std::to_string(c) +
                             " out of range [1, " + std::to_string(rv.radices[i]) + "]");
        index = index * rv.radices[i] + (c - 1);
    }
    return index;
}

Rational prati_muhurta_minutes(int muhurtas_per_ahoratra, int prati_muhurtas_per_muhurta) {
    return Rational(24 * 60, static_cast<long long>(muhurtas_per_ahoratra) *
                                 prati_muhurtas_per_muhurta);
}

Rational muhurta_minutes(int muhurtas_per_ahoratra) {
    return Rational(24 * 60, muhurtas_per_ahoratra);
}

std::uint64_t verify_bijection_serial(const RadixVector& rv) {
    const std::uint64_t total = rv.total_segments();
    std::uint64_t mismatches = 0;
    for (std::uint64_t i = 0; i < total; ++i)
        if (decode_name(encode_index(i, rv), rv) != i) ++mismatches;
    return mismatches;
}

std::uint64_t verify_bijection(const RadixVector& rv) {
    const std::uint64_t total = rv.total_segments();
    std::uint64_t mismatches = 0;
    const long long n = static_cast<long long>(total);
#pragma omp parallel for schedule(static) reduction(+ : mismatches)
    for (long long i = 0; i < n; ++i) {
        const std::uint64_t idx = static_cast<std::uint64_t>(i);
        if (decode_name(encode_index(idx, rv), rv) != idx) ++mismatches;
    }
    return mismatches;
}

}  // namespace vedanga::names
