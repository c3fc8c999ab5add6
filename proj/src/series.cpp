#include "vedanga/series.hpp"

#include <fstream>
#include <sstream>

#include "vedanga/errors.hpp"

namespace vedanga::series {
namespace {

// Yajurveda 17.2 number names, eka through parardha, one decade apart.
const char* const kDecimalNames[13] = {
    "eka", "daśa", "śata", "sahasra", "ayuta", "niyuta", "prayuta",
    "arbuda", "nyarbuda", "samudra", "madhya", "anta", "parārdha",
};

VariantRow parse_row(const std::string& line, const std::filesystem::path& path, int lineno) {
    std::vector<std::string> fields;
    if (line.find('\t') != std::string::npos) {
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, '\t')) fields.push_back(field);
    } else {
        std::stringstream ss(line);
        std::string field;
        while (ss >> field) fields.push_back(field);
    }
    if (fields.size() != 3)
        throw DomainError(path.string() + ":" + std::to_string(lineno) +
                          ": expected 'exponent<TAB>name<TAB>tradition'");
    VariantRow row;
    try {
        row.exponent = static_cast<unsigned>(std::stoul(fields[0]));
    } catch (const std::exception&) {
        throw DomainError(path.string() + ":" + std::to_string(lineno) +
                          ": bad exponent '" + fields[0] + "'");
    }
    row.name = fields[1];
    row.tradition = tradition_from_string(fields[2]);
    return row;
}

}  // namespace

std::vector<NamedNumber> decimal_series() {
    std::vector<NamedNumber> terms;
    terms.reserve(13);
    for (unsigned k = 0; k < 13; ++k)
        terms.push_back({kDecimalNames[k], power(Natural{10}, Natural{k}), Tradition::yajurveda});
    return terms;
}

SeriesSpec SeriesSpec::centesimal_default() {
    SeriesSpec spec;
    spec.start_value = power(Natural{10}, Natural{9});  // one hundred times koti
    spec.step_factor = Natural{100};
    spec.term_count = 24;
    spec.named_terms = {{23, "tallakṣana"}, {24, "dhvajāgravatī"}};
    return spec;
}

std::vector<NamedNumber> centesimal_series(const SeriesSpec& spec) {
    if (spec.term_count < 1) throw DomainError("series needs at least one term");
    if (spec.step_factor < Natural{2}) throw DomainError("series step factor must be >= 2");
    std::vector<NamedNumber> terms;
    terms.reserve(spec.term_count);
    Natural value = spec.start_value;
    for (std::size_t n = 1; n <= spec.term_count; ++n) {
        std::string name = "term-" + std::to_string(n);
        for (const auto& [term, known] : spec.named_terms)
            if (term == n) name = known;
        terms.push_back({std::move(name), value, Tradition::lalitavistara});
        if (n < spec.term_count) value *= spec.step_factor;
    }
    return terms;
}

JainPopulation jain_population() {
    JainPopulation result;
    result.sixth_square = square_iterate(Natural{2}, 6);
    result.fifth_square = square_iterate(Natural{2}, 5);
    result.value = result.sixth_square * result.fifth_square;
    result.digits = digit_count(result.value);
    return result;
}

VariantTable VariantTable::builtin() {
    VariantTable table;
    for (unsigned k = 0; k < 13; ++k)
        table.add({k, kDecimalNames[k], Tradition::yajurveda});
    // Aryabhatiya 2.2 names for ten-, hundred- and thousand-millions.
    table.add({7, "koti", Tradition::variant});
    table.add({8, "arbuda", Tradition::variant});
    table.add({9, "vraṇḍa", Tradition::variant});
    return table;
}

VariantTable VariantTable::from_file(const std::filesystem::path& path) {
    VariantTable table;
    table.merge_file(path);
    return table;
}

void VariantTable::merge_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open variant table: " + path.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        rows_.push_back(parse_row(line.substr(first), path, lineno));
    }
}

std::vector<std::pair<std::string, Tradition>> VariantTable::lookup(const Natural& value) const {
    std::vector<std::pair<std::string, Tradition>> hits;
    for (const VariantRow& row : rows_)
        if (power(Natural{10}, Natural{row.exponent}) == value)
            hits.emplace_back(row.name, row.tradition);
    return hits;
}

std::vector<std::pair<std::string, Tradition>> variant_lookup(const Natural& value) {
    return VariantTable::builtin().lookup(value);
}

const char* to_string(Tradition t) {
    switch (t) {
        case Tradition::yajurveda: return "yajurveda";
        case Tradition::lalitavistara: return "lalitavistara";
        case Tradition::jain: return "jain";
        case Tradition::variant: return "variant";
    }
    return "unknown";
}

Tradition tradition_from_string(const std::string& s) {
    if (s == "yajurveda") return Tradition::yajurveda;
    if (s == "lalitavistara") return Tradition::lalitavistara;
    if (s == "jain") return Tradition::jain;
    if (s == "variant") return Tradition::variant;
    throw DomainError("unknown tradition: " + s);
}

}  // namespace vedanga::series
