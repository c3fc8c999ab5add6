// tally.hpp - token-level proto-arithmetic: tallying, splitting, schedules
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vedanga/natural.hpp"

namespace vedanga::tally {

/// A register of labeled token piles restricted to concrete acts: create a
/// token, remove one, move one between piles, compare two piles, count a
/// pile off token by token. Each primitive act bumps the step counter, so an
/// algorithm's cost is the number of single-token operations it performs.
/// Instances are single-owner mutable state; do not share across threads.
class TallyMachine {
public:
    using PileId = std::size_t;

    /// Registers a pile with an initial stock. Stocking is free: steps count
    /// the operations an algorithm performs, not the tokens it starts with.
    PileId add_pile(std::string label, Natural initial = Natural{}) {
        labels_.push_back(std::move(label));
        counts_.push_back(std::move(initial));
        return counts_.size() - 1;
    }

    void add_one(PileId p) {
        ++counts_[check_(p)];
        ++steps_;
    }

    void remove_one(PileId p) {
        Natural& c = counts_[check_(p)];
        if (c.is_zero()) throw DomainError("remove_one from empty pile " + labels_[p]);
        --c;
        ++steps_;
    }

    void move_one(PileId from, PileId to) {
        Natural& f = counts_[check_(from)];
        if (f.is_zero()) throw DomainError("move_one from empty pile " + labels_[from]);
        --f;
        ++counts_[check_(to)];
        ++steps_;
    }

    bool piles_equal(PileId a, PileId b) {
        ++steps_;
        return counts_[check_(a)] == counts_[check_(b)];
    }

    /// Reads a pile's size by tallying it token by token: costs one step per
    /// token counted.
    Natural count_off(PileId p) {
        const Natural& c = counts_[check_(p)];
        steps_ += c;
        return c;
    }

    /// Free readout for assertions and reports; not a machine act.
    const Natural& peek(PileId p) const { return counts_[check_(p)]; }

    const Natural& steps() const { return steps_; }
    std::size_t pile_count() const { return counts_.size(); }
    const std::string& label(PileId p) const { return labels_[check_(p)]; }

    Natural total_tokens() const {
        Natural sum;
        for (const Natural& c : counts_) sum += c;
        return sum;
    }

private:
    std::size_t check_(PileId p) const {
        if (p >= counts_.size()) throw RangeError("no such pile: " + std::to_string(p));
        return p;
    }

    std::vector<std::string> labels_;
    std::vector<Natural> counts_;
    Natural steps_;
};

/// Outcome of dealing `total` tokens into `bodies` equal piles.
struct SplitResult {
    std::uint64_t bodies = 0;
    std::uint64_t size_per_body = 0;
    Natural steps;  // total single-token deals plus the final count-off
};

/// Deals tokens one at a time, round robin, into `bodies` piles. Succeeds
/// iff bodies divides total; otherwise throws NotDivisibleError carrying the
/// short last round's token count.
SplitResult equal_split(std::uint64_t total, std::uint64_t bodies);

/// Every bodies count in [1, max_bodies] that splits `total` evenly, each
/// realized by the dealing procedure, sorted ascending. OpenMP-parallel;
/// the serial twin is the reference the tests compare against.
std::vector<SplitResult> enumerate_splits(std::uint64_t total, std::uint64_t max_bodies = 24);
std::vector<SplitResult> enumerate_splits_serial(std::uint64_t total,
                                                 std::uint64_t max_bodies = 24);

/// Six-day ritual sets per month: a 30-day month yields five sadahas of 6
/// days; a 29-day month drops the last day of its fifth sadaha (6,6,6,6,5).
std::vector<int> sadaha_partition(const std::vector<int>& month_lengths);

enum class EventKind {
    morning_oblation,
    evening_oblation,
    parva_offering,
    season_start,
    ayana_start,
};

struct RitualEvent {
    int day_index = 0;
    EventKind kind = EventKind::morning_oblation;

    friend bool operator==(const RitualEvent& a, const RitualEvent& b) = default;
};

/// Year-long oblation schedule: two daily events, one per listed parva day,
/// season start and ayana start. Sorted by day, then kind. Listed days must
/// lie in [0, days_in_year).
std::vector<RitualEvent> gavamayana_schedule(int days_in_year,
                                             const std::vector<int>& parva_days,
                                             const std::vector<int>& season_starts,
                                             const std::vector<int>& ayana_starts);

struct TaxResult {
    std::uint64_t tax = 0;
    std::uint64_t kept = 0;
    std::uint64_t remainder_untaxed = 0;
    Natural token_moves;
};

/// Walks the measures in groups of `divisor`, separating the last measure of
/// each complete group for tax; an incomplete trailing group stays untaxed.
TaxResult tax_in_kind(std::uint64_t measures, std::uint64_t divisor = 6);

struct ProductResult {
    Natural product;
    std::uint64_t rounds = 0;  // accumulation rounds, one per unit of b
    Natural token_moves;       // single-token acts performed overall
};

/// a*b computed solely by b-fold accumulation of a on the tally machine.
ProductResult repeated_addition_product(std::uint64_t a, std::uint64_t b);

/// Verification sweeps pairing the machine procedures against symbolic
/// arithmetic. Both return the number of disagreements (0 expected).
/// OpenMP-parallel with serial reference twins.
std::uint64_t check_product_grid(std::uint64_t max_a, std::uint64_t max_b);
std::uint64_t check_product_grid_serial(std::uint64_t max_a, std::uint64_t max_b);
std::uint64_t check_split_divisibility(std::uint64_t max_total, std::uint64_t max_bodies);
std::uint64_t check_split_divisibility_serial(std::uint64_t max_total, std::uint64_t max_bodies);

const char* to_string(EventKind k);

}  // namespace vedanga::tally
