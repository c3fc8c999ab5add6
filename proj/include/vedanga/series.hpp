// series.hpp - named large-number series: decimal, centesimal, Jain squaring
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "vedanga/natural.hpp"

namespace vedanga::series {

enum class Tradition { yajurveda, lalitavistara, jain, variant };

struct NamedNumber {
    std::string name;
    Natural value;
    Tradition tradition = Tradition::yajurveda;
};

/// The thirteen-term decimal series eka (1) through parardha (10^12).
std::vector<NamedNumber> decimal_series();

/// Geometric series parameters. The default is the centesimal series from
/// 10^9 in steps of 100, 24 terms, where term 23 is tallaksana (10^53) and
/// term 24 is dhvajagravati (10^55).
struct SeriesSpec {
    Natural start_value;
    Natural step_factor;
    std::size_t term_count = 1;
    /// Positional display names; terms beyond the list get "term-N" labels.
    std::vector<std::pair<std::size_t, std::string>> named_terms;

    static SeriesSpec centesimal_default();
};

std::vector<NamedNumber> centesimal_series(const SeriesSpec& spec = SeriesSpec::centesimal_default());

/// The Jain world-population computation: the sixth square of two times its
/// fifth square, i.e. 2^64 * 2^32 = 2^96, a 29-digit number.
struct JainPopulation {
    Natural sixth_square;
    Natural fifth_square;
    Natural value;
    std::size_t digits = 0;
};

JainPopulation jain_population();

/// One row of a value-name table: name attached to 10^exponent.
struct VariantRow {
    unsigned exponent = 0;
    std::string name;
    Tradition tradition = Tradition::yajurveda;
};

/// Name lookup across traditions keyed by value. Ships with the Yajurveda
/// 17.2 and Aryabhatiya 2.2 rows built in; extensible from TSV files of
/// "exponent<TAB>name<TAB>tradition" rows.
class VariantTable {
public:
    static VariantTable builtin();
    static VariantTable from_file(const std::filesystem::path& path);

    void add(VariantRow row) { rows_.push_back(std::move(row)); }
    void merge_file(const std::filesystem::path& path);

    /// All recorded (name, tradition) pairs for the value, table order.
    std::vector<std::pair<std::string, Tradition>> lookup(const Natural& value) const;

    const std::vector<VariantRow>& rows() const { return rows_; }

private:
    std::vector<VariantRow> rows_;
};

/// Lookup against the built-in table.
std::vector<std::pair<std::string, Tradition>> variant_lookup(const Natural& value);

const char* to_string(Tradition t);
Tradition tradition_from_string(const std::string& s);

}  // namespace vedanga::series
