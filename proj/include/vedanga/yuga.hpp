// yuga.hpp - Vedanga Jyotisha five-year-yuga calendar kernel
#pragma once

#include <vector>

#include "vedanga/rational.hpp"

namespace vedanga::yuga {

/// Model constants of the five-year yuga. All motion is mean motion over a
/// fixed sky; the cycle starts at the sun-moon-Dhanishtha conjunction at
/// winter solstice (day 0, nakshatra index 0).
struct YugaConfig {
    int years_per_yuga = 5;
    int civil_days_per_year = 366;
    int civil_days_per_yuga = 1830;
    int synodic_months = 62;
    int sidereal_months = 67;
    int nakshatra_count = 27;
    int parvas_per_yuga = 124;
    int tithis_per_paksha = 15;
    int muhurtas_per_ahoratra = 30;
    int prati_muhurtas_per_muhurta = 15;
    int seasons_per_year = 6;

    /// Throws DomainError if the constants are mutually inconsistent.
    void validate() const;

    int nakshatras_per_yuga() const { return sidereal_months * nakshatra_count; }  // 1809
    int tithis_per_yuga() const { return synodic_months * 2 * tithis_per_paksha; }  // 1860

    Rational nakshatras_per_parva() const;    // 1809/124
    Rational moon_nakshatras_per_day() const; // 1809/1830
    Rational sun_nakshatras_per_day() const;  // 27/366 = 9/122
    Rational tithis_per_day() const;          // 1860/1830 = 62/61
    Rational mean_tithi_days() const;         // 61/62
    Rational mean_tithi_hours() const;        // 732/31
};

/// Position on the 27-nakshatra circle: whole asterism index plus the exact
/// fractional offset into it. Index 0 is Dhanishtha.
struct SkyPosition {
    int nakshatra_index = 0;
    Rational offset;

    friend bool operator==(const SkyPosition& a, const SkyPosition& b) = default;
};

enum class Ayana { northern, southern };
enum class Paksha { bright, dark };

struct Tithi {
    Paksha paksha = Paksha::bright;
    int ordinal = 1;  // 1..15

    friend bool operator==(const Tithi& a, const Tithi& b) = default;
};

struct DayRecord {
    int day_index = 0;     // 0..1829
    int year_in_yuga = 1;  // 1..5
    Ayana ayana = Ayana::northern;
    int season_index = 1;  // 1..6
    int parva_index = 1;   // 1..124
    Tithi tithi;
    SkyPosition moon;
    SkyPosition sun;
};

/// Moon position after k completed parvas: (k * 1809/124) mod 27, exact.
SkyPosition moon_position_at_parva_end(int k, const YugaConfig& cfg = {});

/// Moon position at the start of civil day d: (d * 1809/1830) mod 27.
SkyPosition moon_position_at_day(int d, const YugaConfig& cfg = {});

/// Sun position at the start of civil day d: (d * 9/122) mod 27.
SkyPosition sun_position_at_day(int d, const YugaConfig& cfg = {});

/// Serial number of the tithi in progress at day d: floor(d * 62/61).
/// Valid for d in [0, 1830]; d == 1830 yields the closing serial 1860.
long long tithi_serial_at_day(int d, const YugaConfig& cfg = {});

/// Paksha and ordinal of the tithi in progress at civil day d in [0, 1829].
Tithi tithi_at_day(int d, const YugaConfig& cfg = {});

/// All per-day fields for civil day d in [0, 1829].
DayRecord calendar_record(int d, const YugaConfig& cfg = {});

/// Day records for the inclusive range [first, last]. OpenMP-parallel; the
/// serial twin is the reference the tests compare against.
std::vector<DayRecord> yuga_table(int first, int last, const YugaConfig& cfg = {});
std::vector<DayRecord> yuga_table_serial(int first, int last, const YugaConfig& cfg = {});

const char* to_string(Ayana a);
const char* to_string(Paksha p);

}  // namespace vedanga::yuga
