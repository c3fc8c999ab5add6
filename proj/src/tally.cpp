#include "vedanga/tally.hpp"

#include <algorithm>
#include <optional>

namespace vedanga::tally {
namespace {

// Core of equal_split without the throwing contract, so the enumeration
// sweep can probe candidates cheaply inside a parallel loop.
std::optional<SplitResult> try_equal_split(std::uint64_t total, std::uint64_t bodies,
                                           std::uint64_t& remainder_out) {
    TallyMachine machine;
    const auto source = machine.add_pile("source", Natural{total});
    std::vector<TallyMachine::PileId> body_piles;
    body_piles.reserve(bodies);
    for (std::uint64_t b = 0; b < bodies; ++b)
        body_piles.push_back(machine.add_pile("body-" + std::to_string(b + 1)));

    std::uint64_t position = 0;  // whom the next token is dealt to
    for (std::uint64_t t = 0; t < total; ++t) {
        machine.move_one(source, body_piles[position]);
        position = position + 1 == bodies ? 0 : position + 1;
    }
    // The dealer sees whether the last round came back to the first pile; a
    // short round means the piles cannot be equal.
    if (position != 0) {
        remainder_out = position;
        return std::nullopt;
    }
    const Natural size = machine.count_off(body_piles[0]);
    return SplitResult{bodies, size.to_uint64(), machine.steps()};
}

}  // namespace

SplitResult equal_split(std::uint64_t total, std::uint64_t bodies) {
    if (total < 1) throw DomainError("equal_split requires at least one token");
    if (bodies < 1) throw DomainError("equal_split requires at least one body");
    std::uint64_t remainder = 0;
    if (auto result = try_equal_split(total, bodies, remainder)) return *result;
    throw NotDivisibleError(std::to_string(bodies) + " bodies leave " +
                                std::to_string(remainder) + " of " + std::to_string(total) +
                                " tokens over",
                            remainder);
}

std::vector<SplitResult> enumerate_splits_serial(std::uint64_t total, std::uint64_t max_bodies) {
    if (total < 1) throw DomainError("enumerate_splits requires at least one token");
    std::vector<SplitResult> results;
    for (std::uint64_t b = 1; b <= max_bodies; ++b) {
        std::uint64_t remainder = 0;
        if (auto result = try_equal_split(total, b, remainder)) results.push_back(*result);
    }
    return results;
}

std::vector<SplitResult> enumerate_splits(std::uint64_t total, std::uint64_t max_bodies) {
    if (total < 1) throw DomainError("enumerate_splits requires at least one token");
    std::vector<std::optional<SplitResult>> slots(max_bodies);
    const long long n = static_cast<long long>(max_bodies);
#pragma omp parallel for schedule(dynamic)
    for (long long b = 1; b <= n; ++b) {
        std::uint64_t remainder = 0;
        slots[static_cast<std::size_t>(b - 1)] =
            try_equal_split(total, static_cast<std::uint64_t>(b), remainder);
    }
    std::vector<SplitResult> results;
    for (auto& slot : slots)
        if (slot) results.push_back(std::move(*slot));
    return results;
}

std::vector<int> sadaha_partition(const std::vector<int>& month_lengths) {
    std::vector<int> sadahas;
    sadahas.reserve(month_lengths.size() * 5);
    for (std::size_t i = 0; i < month_lengths.size(); ++i) {
        const int len = month_lengths[i];
        if (len != 29 && len != 30)
            throw InvalidMonthError("month " + std::to_string(i + 1) + " has " +
                                    std::to_string(len) + " days; only 29 or 30 are valid");
        sadahas.insert(sadahas.end(), {6, 6, 6, 6, len == 30 ? 6 : 5});
    }
    return sadahas;
}

std::vector<RitualEvent> gavamayana_schedule(int days_in_year,
                                             const std::vector<int>& parva_days,
                                             const std::vector<int>& season_starts,
                                             const std::vector<int>& ayana_starts) {
    if (days_in_year < 0) throw RangeError("days_in_year must be non-negative");
    const auto check_days = [days_in_year](const std::vector<int>& days, const char* what) {
        for (int d : days)
            if (d < 0 || d >= days_in_year)
                throw RangeError(std::string(what) + " day " + std::to_string(d) +
                                 " outside [0, " + std::to_string(days_in_year) + ")");
    };
    check_days(parva_days, "parva");
    check_days(season_starts, "season start");
    check_days(ayana_starts, "ayana start");

    std::vector<RitualEvent> events;
    events.reserve(2 * static_cast<std::size_t>(days_in_year) + parva_days.size() +
                   season_starts.size() + ayana_starts.size());
    for (int d = 0; d < days_in_year; ++d) {
        events.push_back({d, EventKind::morning_oblation});
        events.push_back({d, EventKind::evening_oblation});
    }
    for (int d : parva_days) events.push_back({d, EventKind::parva_offering});
    for (int d : season_starts) events.push_back({d, EventKind::season_start});
    for (int d : ayana_starts) events.push_back({d, EventKind::ayana_start});

    std::sort(events.begin(), events.end(), [](const RitualEvent& a, const RitualEvent& b) {
        if (a.day_index != b.day_index) return a.day_index < b.day_index;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    return events;
}

TaxResult tax_in_kind(std::uint64_t measures, std::uint64_t divisor) {
    if (divisor < 2) throw DomainError("tax divisor must be at least 2");
    TallyMachine machine;
    const auto stream = machine.add_pile("stream", Natural{measures});
    const auto kept = machine.add_pile("kept");
    const auto tax = machine.add_pile("tax");
    const auto untaxed = machine.add_pile("untaxed");

    std::uint64_t in_group = 0;
    for (std::uint64_t m = 0; m < measures; ++m) {
        ++in_group;
        if (in_group == divisor) {
            machine.move_one(stream, tax);  // the separated sixth measure
            in_group = 0;
        } else {
            machine.move_one(stream, kept);
        }
    }
    // A trailing short group was never completed, so it stays untaxed.
    for (std::uint64_t m = 0; m < in_group; ++m) machine.move_one(kept, untaxed);

    return TaxResult{machine.peek(tax).to_uint64(), machine.peek(kept).to_uint64(),
                     machine.peek(untaxed).to_uint64(), machine.steps()};
}

ProductResult repeated_addition_product(std::uint64_t a, std::uint64_t b) {
    TallyMachine machine;
    const auto accumulator = machine.add_pile("accumulator");
    for (std::uint64_t round = 0; round < b; ++round)
        for (std::uint64_t t = 0; t < a; ++t) machine.add_one(accumulator);
    return ProductResult{machine.peek(accumulator), b, machine.steps()};
}

std::uint64_t check_product_grid_serial(std::uint64_t max_a, std::uint64_t max_b) {
    std::uint64_t mismatches = 0;
    for (std::uint64_t a = 0; a <= max_a; ++a) {
        for (std::uint64_t b = 0; b <= max_b; ++b) {
            if (repeated_addition_product(a, b).product != Natural{a} * Natural{b})
                ++mismatches;
        }
    }
    return mismatches;
}

std::uint64_t check_product_grid(std::uint64_t max_a, std::uint64_t max_b) {
    std::uint64_t mismatches = 0;
    const long long na = static_cast<long long>(max_a);
#pragma omp parallel for schedule(dynamic) reduction(+ : mismatches)
    for (long long a = 0; a <= na; ++a) {
        for (std::uint64_t b = 0; b <= max_b; ++b) {
            if (repeated_addition_product(static_cast<std::uint64_t>(a), b).product !=
                Natural{static_cast<std::uint64_t>(a)} * Natural{b})
                ++mismatches;
        }
    }
    return mismatches;
}

std::uint64_t check_split_divisibility_serial(std::uint64_t max_total, std::uint64_t max_bodies) {
    std::uint64_t disagreements = 0;
    for (std::uint64_t n = 1; n <= max_total; ++n) {
        for (std::uint64_t k = 1; k <= max_bodies; ++k) {
            std::uint64_t remainder = 0;
            const auto result = try_equal_split(n, k, remainder);
            const bool divides = n % k == 0;
            if (result.has_value() != divides) ++disagreements;
            else if (result && result->size_per_body * k != n) ++disagreements;
        }
    }
    return disagreements;
}

std::uint64_t check_split_divisibility(std::uint64_t max_total, std::uint64_t max_bodies) {
    std::uint64_t disagreements = 0;
    const long long nn = static_cast<long long>(max_total);
#pragma omp parallel for schedule(dynamic) reduction(+ : disagreements)
    for (long long n = 1; n <= nn; ++n) {
        for (std::uint64_t k = 1; k <= max_bodies; ++k) {
            std::uint64_t remainder = 0;
            const auto result = try_equal_split(static_cast<std::uint64_t>(n), k, remainder);
            const bool divides = static_cast<std::uint64_t>(n) % k == 0;
            if (result.has_value() != divides) ++disagreements;
            else if (result && result->size_per_body * k != static_cast<std::uint64_t>(n))
                ++disagreements;
        }
    }
    return disagreements;
}

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::morning_oblation: return "morning_oblation";
        case EventKind::evening_oblation: return "evening_oblation";
        case EventKind::parva_offering: return "parva_offering";
        case EventKind::season_start: return "season_start";
        case EventKind::ayana_start: return "ayana_start";
    }
    return "unknown";
}

}  // namespace vedanga::tally
