#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vedanga/rational.hpp"
#include "vedanga/tally.hpp"

using namespace vedanga::tally;
using vedanga::DomainError;
using vedanga::InvalidMonthError;
using vedanga::Natural;
using vedanga::NotDivisibleError;
using vedanga::RangeError;

TEST_SUITE_BEGIN("tally");

TEST_CASE("machine primitives and step accounting") {
    TallyMachine machine;
    const auto a = machine.add_pile("a", Natural{3});
    const auto b = machine.add_pile("b");
    CHECK(machine.steps() == Natural{0});  // stocking is free

    machine.move_one(a, b);
    machine.move_one(a, b);
    CHECK(machine.peek(a) == Natural{1});
    CHECK(machine.peek(b) == Natural{2});
    CHECK(machine.steps() == Natural{2});

    machine.add_one(a);
    machine.remove_one(b);
    CHECK(machine.steps() == Natural{4});
    CHECK_FALSE(machine.piles_equal(a, b));
    CHECK(machine.steps() == Natural{5});

    CHECK(machine.count_off(b) == Natural{1});
    CHECK(machine.steps() == Natural{6});

    CHECK_THROWS_AS(machine.remove_one(machine.add_pile("empty")), DomainError);
    CHECK_THROWS_AS(machine.add_one(99), RangeError);
}

TEST_CASE("moves conserve tokens on randomized programs") {
    std::mt19937 rng(2024);
    for (int run = 0; run < 50; ++run) {
        TallyMachine machine;
        std::uniform_int_distribution<int> pile_count(2, 6), stock(0, 20);
        const int piles = pile_count(rng);
        for (int p = 0; p < piles; ++p)
            machine.add_pile("p" + std::to_string(p),
                             Natural{static_cast<unsigned long long>(stock(rng))});
        const Natural before = machine.total_tokens();
        std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(piles - 1));
        for (int step = 0; step < 200; ++step) {
            const auto from = pick(rng), to = pick(rng);
            if (machine.peek(from).is_zero()) continue;
            machine.move_one(from, to);
            CHECK(machine.total_tokens() == before);
        }
    }
}

TEST_CASE("equal split of the 720 bricks") {
    const SplitResult four = equal_split(720, 4);
    CHECK(four.size_per_body == 180);
    CHECK(four.steps == Natural{720 + 180});  // deals plus the final count-off

    CHECK(equal_split(720, 24).size_per_body == 30);

    CHECK_THROWS_AS(equal_split(720, 7), NotDivisibleError);
    try {
        equal_split(720, 7);
    } catch (const NotDivisibleError& e) {
        CHECK(e.remainder == 6);
    }

    CHECK(equal_split(5, 1).size_per_body == 5);
    CHECK_THROWS_AS(equal_split(0, 3), DomainError);
    CHECK_THROWS_AS(equal_split(3, 0), DomainError);
}

TEST_CASE("split succeeds exactly when the bodies divide the total") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t k = 1; k <= 20; ++k) {
            if (n % k == 0) {
                const SplitResult r = equal_split(n, k);
                CHECK(r.size_per_body * k == n);
            } else {
                CHECK_THROWS_AS(equal_split(n, k), NotDivisibleError);
            }
        }
    }
}

TEST_CASE("enumerate splits reproduces the divisor lists") {
    const auto sb = enumerate_splits_serial(720, 24);
    std::vector<std::uint64_t> bodies;
    for (const auto& r : sb) bodies.push_back(r.bodies);
    const std::vector<std::uint64_t> sb_list{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24};
    CHECK(bodies == sb_list);
    for (const auto& r : sb) CHECK(r.bodies * r.size_per_body == 720);

    std::vector<std::uint64_t> six;
    for (const auto& r : enumerate_splits_serial(6, 6)) six.push_back(r.bodies);
    const std::vector<std::uint64_t> six_list{1, 2, 3, 6};
    CHECK(six == six_list);

    CHECK(enumerate_splits_serial(720, 720).size() == 30);
    CHECK(oracles::divisors_up_to(720, 720).size() == 30);
}

TEST_CASE("parallel enumeration agrees with the serial reference") {
    for (std::uint64_t total : {6ULL, 720ULL, 97ULL, 360ULL}) {
        const auto serial = enumerate_splits_serial(total, 64);
        const auto parallel = enumerate_splits(total, 64);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(parallel[i].bodies == serial[i].bodies);
            CHECK(parallel[i].size_per_body == serial[i].size_per_body);
            CHECK(parallel[i].steps == serial[i].steps);
        }
        // Trial-scan oracle for the divisor set.
        const auto divisors = oracles::divisors_up_to(total, 64);
        REQUIRE(divisors.size() == serial.size());
        for (std::size_t i = 0; i < divisors.size(); ++i)
            CHECK(serial[i].bodies == divisors[i]);
    }
}

TEST_CASE("sadaha partition") {
    const std::vector<int> full{6, 6, 6, 6, 6};
    const std::vector<int> dropped{6, 6, 6, 6, 5};
    const std::vector<int> three_months{6, 6, 6, 6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 6, 6};
    CHECK(sadaha_partition({30}) == full);
    CHECK(sadaha_partition({29}) == dropped);
    CHECK(sadaha_partition({30, 29, 30}) == three_months);
    CHECK(sadaha_partition({}).empty());
    CHECK_THROWS_AS(sadaha_partition({30, 28}), InvalidMonthError);
    CHECK_THROWS_AS(sadaha_partition({31}), InvalidMonthError);
}

TEST_CASE("sadaha properties hold on randomized month sequences") {
    std::mt19937 rng(811);
    std::uniform_int_distribution<int> months(0, 24), coin(0, 1);
    for (int run = 0; run < 1000; ++run) {
        std::vector<int> lengths;
        const int m = months(rng);
        for (int i = 0; i < m; ++i) lengths.push_back(coin(rng) ? 30 : 29);
        const auto sadahas = sadaha_partition(lengths);
        CHECK(sadahas.size() == lengths.size() * 5);
        int total = 0;
        for (std::size_t i = 0; i < sadahas.size(); ++i) {
            CHECK((sadahas[i] == 6 || sadahas[i] == 5));
            // A 5 appears only as the fifth sadaha of a 29-day month.
            if (sadahas[i] == 5) {
                CHECK(i % 5 == 4);
                CHECK(lengths[i / 5] == 29);
            }
            total += sadahas[i];
        }
        int expected = 0;
        for (int len : lengths) expected += len;
        CHECK(total == expected);
    }
}

TEST_CASE("gavamayana schedule") {
    std::vector<int> parvas, seasons, ayanas;
    for (int p = 0; p < 24; ++p) parvas.push_back(p * 15 + 14);
    for (int s = 0; s < 6; ++s) seasons.push_back(s * 60);
    ayanas = {0, 180};
    const auto events = gavamayana_schedule(360, parvas, seasons, ayanas);
    CHECK(events.size() == 720 + 24 + 6 + 2);

    std::size_t daily = 0;
    for (const auto& e : events)
        if (e.kind == EventKind::morning_oblation || e.kind == EventKind::evening_oblation)
            ++daily;
    CHECK(daily == 720);

    // Sorted by day then kind.
    for (std::size_t i = 1; i < events.size(); ++i) {
        const bool ordered =
            events[i - 1].day_index < events[i].day_index ||
            (events[i - 1].day_index == events[i].day_index &&
             static_cast<int>(events[i - 1].kind) <= static_cast<int>(events[i].kind));
        CHECK(ordered);
    }

    const std::vector<RitualEvent> one_day{{0, EventKind::morning_oblation},
                                           {0, EventKind::evening_oblation}};
    CHECK(gavamayana_schedule(1, {}, {}, {}) == one_day);
    CHECK_THROWS_AS(gavamayana_schedule(360, {360}, {}, {}), RangeError);
    CHECK_THROWS_AS(gavamayana_schedule(360, {}, {-1}, {}), RangeError);
}

TEST_CASE("gavamayana event-count identity on randomized inputs") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> days(1, 400), list_len(0, 30);
    for (int run = 0; run < 200; ++run) {
        const int d = days(rng);
        std::uniform_int_distribution<int> day_pick(0, d - 1);
        std::vector<int> parvas, seasons, ayanas;
        for (int i = list_len(rng); i > 0; --i) parvas.push_back(day_pick(rng));
        for (int i = list_len(rng) % 7; i > 0; --i) seasons.push_back(day_pick(rng));
        for (int i = list_len(rng) % 3; i > 0; --i) ayanas.push_back(day_pick(rng));
        const auto events = gavamayana_schedule(d, parvas, seasons, ayanas);
        CHECK(events.size() ==
              2 * static_cast<std::size_t>(d) + parvas.size() + seasons.size() + ayanas.size());
    }
}

TEST_CASE("tax in kind") {
    const TaxResult twelve = tax_in_kind(12, 6);
    CHECK(twelve.tax == 2);
    CHECK(twelve.kept == 10);
    CHECK(twelve.remainder_untaxed == 0);

    const TaxResult five = tax_in_kind(5, 6);
    CHECK(five.tax == 0);
    CHECK(five.kept == 0);
    CHECK(five.remainder_untaxed == 5);

    const TaxResult seventeen = tax_in_kind(17, 6);
    CHECK(seventeen.tax == 2);
    CHECK(seventeen.kept == 10);
    CHECK(seventeen.remainder_untaxed == 5);

    CHECK(tax_in_kind(0, 6).tax == 0);
    CHECK_THROWS_AS(tax_in_kind(10, 1), DomainError);

    std::mt19937 rng(4);
    std::uniform_int_distribution<std::uint64_t> m(0, 2000), div(2, 12);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t measures = m(rng), divisor = div(rng);
        const auto walk = oracles::tax_group_walk(measures, divisor);
        const TaxResult got = tax_in_kind(measures, divisor);
        CHECK(got.tax == walk.tax);
        CHECK(got.kept == walk.kept);
        CHECK(got.remainder_untaxed == walk.remainder);
        CHECK(got.tax == measures / divisor);
        CHECK(got.tax + got.kept + got.remainder_untaxed == measures);
    }
}

TEST_CASE("repeated addition products") {
    const ProductResult bricks = repeated_addition_product(180, 4);
    CHECK(bricks.product == Natural{720});
    CHECK(bricks.rounds == 4);
    CHECK(bricks.token_moves == Natural{720});

    const ProductResult ten = repeated_addition_product(72, 10);
    CHECK(ten.product == Natural{720});
    CHECK(ten.rounds == 10);

    CHECK(repeated_addition_product(513, 0).product == Natural{0});
    CHECK(repeated_addition_product(513, 0).rounds == 0);
    CHECK(repeated_addition_product(0, 513).product == Natural{0});
}

TEST_CASE("verification sweeps agree with their serial references") {
    CHECK(check_product_grid_serial(40, 40) == 0);
    CHECK(check_product_grid(40, 40) == 0);
    CHECK(check_split_divisibility_serial(120, 20) == 0);
    CHECK(check_split_divisibility(120, 20) == 0);
}

TEST_SUITE_END();
