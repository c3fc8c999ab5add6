// acceptance.cpp - the release gate. Runs every acceptance criterion at its
// stated tolerance and prints one PASS/FAIL line per criterion; exits
// nonzero if any fails. Budgets are wall-clock upper bounds where stated.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vedanga/names.hpp"
#include "vedanga/series.hpp"
#include "vedanga/tally.hpp"
#include "vedanga/yuga.hpp"

using vedanga::Natural;
using vedanga::Rational;

namespace {

struct Criterion {
    std::string name;
    double budget_ms;  // 0 = untimed
    std::function<bool(std::string&)> run;
};

#define EXPECT(cond)                                     \
    do {                                                 \
        if (!(cond)) {                                   \
            why += "failed: " #cond " ";                 \
            return false;                                \
        }                                                \
    } while (0)

bool parva_increment_exactness(std::string& why) {
    const auto position = vedanga::yuga::moon_position_at_parva_end(1);
    EXPECT(position.nakshatra_index == 14);
    EXPECT(position.offset == Rational(73, 124));
    EXPECT(render_decimal(Rational(1809, 124), 5) == "14.58871");
    return true;
}

bool yuga_closure(std::string& why) {
    // Repeated-addition oracle: 124 exact additions of 1809/124.
    Rational accumulated;
    for (int k = 0; k < 124; ++k) accumulated += Rational(1809, 124);
    EXPECT(accumulated == Rational(1809));
    EXPECT(1809 % 27 == 0);

    const vedanga::yuga::SkyPosition origin{0, Rational(0)};
    EXPECT(vedanga::yuga::moon_position_at_day(1830) == origin);
    EXPECT(vedanga::yuga::sun_position_at_day(1830) == origin);
    EXPECT(vedanga::yuga::tithi_serial_at_day(1830) == 1860);
    EXPECT(1860 % 30 == 0);
    return true;
}

bool codec_bijection(std::string& why) {
    const auto rv = vedanga::names::RadixVector::yuga_default();
    EXPECT(rv.total_segments() == 810000);
    EXPECT(vedanga::names::verify_bijection(rv) == 0);
    return true;
}

bool sb_divisor_enumeration(std::string& why) {
    const auto splits = vedanga::tally::enumerate_splits(720, 24);
    const std::vector<std::uint64_t> expected{1, 2,  3,  4,  5,  6,  8, 9,
                                              10, 12, 15, 16, 18, 20, 24};
    EXPECT(splits.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        EXPECT(splits[i].bodies == expected[i]);
    const auto size_of = [&](std::uint64_t bodies) -> std::uint64_t {
        for (const auto& s : splits)
            if (s.bodies == bodies) return s.size_per_body;
        return 0;
    };
    EXPECT(size_of(4) == 180);
    EXPECT(size_of(6) == 120);
    EXPECT(size_of(10) == 72);
    EXPECT(size_of(24) == 30);
    return true;
}

bool decimal_series(std::string& why) {
    const auto terms = vedanga::series::decimal_series();
    const std::vector<std::string> names{"eka",    "daśa",    "śata",    "sahasra", "ayuta",
                                         "niyuta", "prayuta", "arbuda",  "nyarbuda",
                                         "samudra", "madhya", "anta",    "parārdha"};
    EXPECT(terms.size() == 13);
    for (std::size_t k = 0; k < 13; ++k) {
        EXPECT(terms[k].name == names[k]);
        EXPECT(terms[k].value == power(Natural{10}, Natural{static_cast<unsigned>(k)}));
    }
    return true;
}

bool centesimal_series(std::string& why) {
    const auto terms = vedanga::series::centesimal_series();
    EXPECT(terms.size() == 24);
    EXPECT(terms[22].value == power(Natural{10}, Natural{53}));
    EXPECT(terms[22].name == "tallakṣana");
    EXPECT(terms[23].value == power(Natural{10}, Natural{55}));
    EXPECT(terms[23].name == "dhvajāgravatī");
    return true;
}

bool jain_computation(std::string& why) {
    const auto jain = vedanga::series::jain_population();
    EXPECT(jain.sixth_square.str() == "18446744073709551616");
    EXPECT(jain.fifth_square.str() == "4294967296");
    EXPECT(jain.digits == 29);
    // Independent route: direct binary exponentiation, not iterated squaring.
    EXPECT(jain.value == power(Natural{2}, Natural{96}));
    return true;
}

bool mean_tithi_length(std::string& why) {
    const vedanga::yuga::YugaConfig cfg;
    const Rational hours = cfg.mean_tithi_hours();
    EXPECT(cfg.mean_tithi_days() == Rational(1830, 1860));
    EXPECT(hours == Rational(732, 31));
    EXPECT(render_decimal(hours, 2) == "23.61");
    // Model-vs-observation difference: within 0.02 h of the observed 23.62.
    const Rational observed(2362, 100);
    const Rational diff = hours < observed ? observed - hours : hours - observed;
    EXPECT(diff <= Rational(2, 100));
    return true;
}

bool sadaha_rule(std::string& why) {
    const std::vector<int> full{6, 6, 6, 6, 6};
    const std::vector<int> dropped{6, 6, 6, 6, 5};
    EXPECT(vedanga::tally::sadaha_partition({30}) == full);
    EXPECT(vedanga::tally::sadaha_partition({29}) == dropped);

    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> month_count(0, 24), coin(0, 1);
    for (int run = 0; run < 1000; ++run) {
        std::vector<int> months;
        for (int i = month_count(rng); i > 0; --i) months.push_back(coin(rng) ? 30 : 29);
        const auto sadahas = vedanga::tally::sadaha_partition(months);
        EXPECT(sadahas.size() == months.size() * 5);
        int sum = 0, expected_sum = 0;
        for (std::size_t i = 0; i < sadahas.size(); ++i) {
            EXPECT(sadahas[i] == 6 || sadahas[i] == 5);
            if (sadahas[i] == 5) {
                EXPECT(i % 5 == 4);
                EXPECT(months[i / 5] == 29);
            }
            sum += sadahas[i];
        }
        for (int len : months) expected_sum += len;
        EXPECT(sum == expected_sum);
    }
    return true;
}

bool proto_arithmetic_equivalence(std::string& why) {
    EXPECT(vedanga::tally::check_product_grid(200, 200) == 0);
    EXPECT(vedanga::tally::check_split_divisibility(1000, 50) == 0);
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"parva increment exactness: (14, 73/124) and \"14.58871\"", 1.0,
         parva_increment_exactness},
        {"yuga closure: 124 parvas = 1809 asterisms, day 1830 = origin", 1000.0, yuga_closure},
        {"codec bijection over all 810,000 indices", 5000.0, codec_bijection},
        {"SB divisor enumeration of 720 into 15 bodies counts", 1000.0, sb_divisor_enumeration},
        {"decimal series: 13 terms, eka .. parārdha", 0.0, decimal_series},
        {"centesimal series: term 23 = 10^53, term 24 = 10^55", 0.0, centesimal_series},
        {"jain computation: 2^64 * 2^32 = 2^96, 29 digits", 0.0, jain_computation},
        {"mean tithi length 732/31 h = 23.61, within 0.02 of 23.62", 0.0, mean_tithi_length},
        {"sadaha rule: day drop for 29-day months, 1000 random sequences", 1000.0, sadaha_rule},
        {"proto-arithmetic equivalence on exhaustive grids", 10000.0,
         proto_arithmetic_equivalence},
    };

    // Warm-up so the timed criteria measure steady-state arithmetic.
    { std::string unused; parva_increment_exactness(unused); }

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& criterion = criteria[i];
        std::string why;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(why);
        } catch (const std::exception& e) {
            why += std::string("exception: ") + e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ok && criterion.budget_ms > 0 && ms > criterion.budget_ms) {
            ok = false;
            std::ostringstream budget;
            budget << "over budget: " << ms << " ms > " << criterion.budget_ms << " ms";
            why += budget.str();
        }
        std::printf("[%2zu/%zu] %s  %s (%.2f ms)\n", i + 1, criteria.size(),
                    ok ? "PASS" : "FAIL", criterion.name.c_str(), ms);
        if (!ok) {
            std::printf("        %s\n", why.c_str());
            ++failures;
        }
    }
    std::printf("%d/%zu acceptance criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
