#include "vedanga/yuga.hpp"

#include <string>

namespace vedanga::yuga {
namespace {

void check_range(int value, int lo, int hi, const char* what) {
    if (value < lo || value > hi)
        throw RangeError(std::string(what) + " out of range [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]: " + std::to_string(value));
}

// Splits a non-negative count of traversed nakshatras into a circle position.
SkyPosition position_on_circle(const Rational& traversed, int nakshatra_count) {
    MixedNumber m = to_mixed(traversed);
    const Natural wrapped = m.whole % Natural{static_cast<unsigned long long>(nakshatra_count)};
    return SkyPosition{static_cast<int>(wrapped.to_uint64()), m.frac};
}

}  // namespace

void YugaConfig::validate() const {
    if (civil_days_per_yuga != years_per_yuga * civil_days_per_year)
        throw DomainError("civil_days_per_yuga != years_per_yuga * civil_days_per_year");
    if (parvas_per_yuga != 2 * synodic_months)
        throw DomainError("parvas_per_yuga != 2 * synodic_months");
    if (sidereal_months - synodic_months != years_per_yuga)
        throw DomainError("sidereal_months - synodic_months != years_per_yuga");
    if (years_per_yuga < 1 || civil_days_per_year < 1 || nakshatra_count < 1 ||
        tithis_per_paksha < 1 || seasons_per_year < 1)
        throw DomainError("yuga constants must be positive");
    if (civil_days_per_year % 2 != 0)
        throw DomainError("civil_days_per_year must split evenly into two ayanas");
    if (civil_days_per_year % seasons_per_year != 0)
        throw DomainError("civil_days_per_year must split evenly into seasons");
}

Rational YugaConfig::nakshatras_per_parva() const {
    return Rational(Natural{static_cast<unsigned long long>(nakshatras_per_yuga())},
                    Natural{static_cast<unsigned long long>(parvas_per_yuga)});
}

Rational YugaConfig::moon_nakshatras_per_day() const {
    return Rational(Natural{static_cast<unsigned long long>(nakshatras_per_yuga())},
                    Natural{static_cast<unsigned long long>(civil_days_per_yuga)});
}

Rational YugaConfig::sun_nakshatras_per_day() const {
    return Rational(Natural{static_cast<unsigned long long>(nakshatra_count)},
                    Natural{static_cast<unsigned long long>(civil_days_per_year)});
}

Rational YugaConfig::tithis_per_day() const {
    return Rational(Natural{static_cast<unsigned long long>(tithis_per_yuga())},
                    Natural{static_cast<unsigned long long>(civil_days_per_yuga)});
}

Rational YugaConfig::mean_tithi_days() const {
    return Rational(Natural{static_cast<unsigned long long>(civil_days_per_yuga)},
                    Natural{static_cast<unsigned long long>(tithis_per_yuga())});
}

Rational YugaConfig::mean_tithi_hours() const { return mean_tithi_days() * Rational(24); }

SkyPosition moon_position_at_parva_end(int k, const YugaConfig& cfg) {
    check_range(k, 0, cfg.parvas_per_yuga, "parva count");
    return position_on_circle(Rational(k) * cfg.nakshatras_per_parva(), cfg.nakshatra_count);
}

SkyPosition moon_position_at_day(int d, const YugaConfig& cfg) {
    check_range(d, 0, cfg.civil_days_per_yuga, "day");
    return position_on_circle(Rational(d) * cfg.moon_nakshatras_per_day(), cfg.nakshatra_count);
}

SkyPosition sun_position_at_day(int d, const YugaConfig& cfg) {
    check_range(d, 0, cfg.civil_days_per_yuga, "day");
    return position_on_circle(Rational(d) * cfg.sun_nakshatras_per_day(), cfg.nakshatra_count);
}

long long tithi_serial_at_day(int d, const YugaConfig& cfg) {
    check_range(d, 0, cfg.civil_days_per_yuga, "day");
    MixedNumber m = to_mixed(Rational(d) * cfg.tithis_per_day());
    return static_cast<long long>(m.whole.to_uint64());
}

Tithi tithi_at_day(int d, const YugaConfig& cfg) {
    check_range(d, 0, cfg.civil_days_per_yuga - 1, "day");
    const long long serial = tithi_serial_at_day(d, cfg);
    const int per_month = 2 * cfg.tithis_per_paksha;
    const int in_month = static_cast<int>(serial % per_month);
    return Tithi{in_month < cfg.tithis_per_paksha ? Paksha::bright : Paksha::dark,
                 static_cast<int>(serial % cfg.tithis_per_paksha) + 1};
}

DayRecord calendar_record(int d, const YugaConfig& cfg) {
    check_range(d, 0, cfg.civil_days_per_yuga - 1, "day");
    const int ayana_days = cfg.civil_days_per_year / 2;
    const int season_days = cfg.civil_days_per_year / cfg.seasons_per_year;
    DayRecord rec;
    rec.day_index = d;
    rec.year_in_yuga = d / cfg.civil_days_per_year + 1;
    rec.ayana = (d / ayana_days) % 2 == 0 ? Ayana::northern : Ayana::southern;
    rec.season_index = (d % cfg.civil_days_per_year) / season_days + 1;
    rec.parva_index =
        static_cast<int>(static_cast<long long>(d) * cfg.parvas_per_yuga / cfg.civil_days_per_yuga) + 1;
    rec.tithi = tithi_at_day(d, cfg);
    rec.moon = moon_position_at_day(d, cfg);
    rec.sun = sun_position_at_day(d, cfg);
    return rec;
}

std::vector<DayRecord> yuga_table_serial(int first, int last, const YugaConfig& cfg) {
    check_range(first, 0, cfg.civil_days_per_yuga - 1, "range start");
    check_range(last, first, cfg.civil_days_per_yuga - 1, "range end");
    std::vector<DayRecord> table;
    table.reserve(static_cast<std::size_t>(last - first + 1));
    for (int d = first; d <= last; ++d) table.push_back(calendar_record(d, cfg));
    return table;
}

std::vector<DayRecord> yuga_table(int first, int last, const YugaConfig& cfg) {
    check_range(first, 0, cfg.civil_days_per_yuga - 1, "range start");
    check_range(last, first, cfg.civil_days_per_yuga - 1, "range end");
    std::vector<DayRecord> table(static_cast<std::size_t>(last - first + 1));
#pragma omp parallel for schedule(static)
    for (int d = first; d <= last; ++d)
        table[static_cast<std::size_t>(d - first)] = calendar_record(d, cfg);
    return table;
}

const char* to_string(Ayana a) { return a == Ayana::northern ? "northern" : "southern"; }
const char* to_string(Paksha p) { return p == Paksha::bright ? "bright" : "dark"; }

}  // namespace vedanga::yuga
