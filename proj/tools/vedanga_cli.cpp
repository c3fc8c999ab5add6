// vedanga_cli.cpp - command-line frontend for the yuga calendar, the
// time-segment name codec, the tally procedures and the number series.
#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "vedanga/name_table.hpp"
#include "vedanga/names.hpp"
#include "vedanga/series.hpp"
#include "vedanga/tally.hpp"
#include "vedanga/yuga.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using vedanga::NameTable;
using vedanga::Natural;
using vedanga::Rational;

namespace {

struct GlobalOptions {
    std::string format = "table";
    std::string names_dir;
    bool quiet = false;
};

// ---------------------------------------------------------------------------
// Output rendering. Every command produces an array of records; JSON emits it
// verbatim, CSV and table derive their columns from the first record's keys.
// Exact fractions are always strings ("1809/124"), never floats.
// ---------------------------------------------------------------------------

std::string cell_text(const ordered_json& value) {
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_csv(const std::vector<ordered_json>& records, std::ostream& out) {
    if (records.empty()) return;
    bool first = true;
    for (const auto& [key, value] : records.front().items()) {
        (void)value;
        out << (first ? "" : ",") << csv_escape(key);
        first = false;
    }
    out << "\n";
    for (const auto& record : records) {
        first = true;
        for (const auto& [key, value] : record.items()) {
            (void)key;
            out << (first ? "" : ",") << csv_escape(cell_text(value));
            first = false;
        }
        out << "\n";
    }
}

void emit_table(const std::vector<ordered_json>& records, std::ostream& out) {
    if (records.empty()) return;
    std::vector<std::string> headers;
    for (const auto& [key, value] : records.front().items()) {
        (void)value;
        headers.push_back(key);
    }
    std::vector<std::size_t> widths;
    for (const auto& h : headers) widths.push_back(h.size());
    std::vector<std::vector<std::string>> rows;
    for (const auto& record : records) {
        std::vector<std::string> row;
        std::size_t i = 0;
        for (const auto& [key, value] : record.items()) {
            (void)key;
            row.push_back(cell_text(value));
            widths[i] = std::max(widths[i], row.back().size());
            ++i;
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < headers.size(); ++i)
        out << (i ? "  " : "") << headers[i]
            << std::string(widths[i] - headers[i].size(), ' ');
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "  " : "") << row[i] << std::string(widths[i] - row[i].size(), ' ');
        out << "\n";
    }
}

void emit(const std::vector<ordered_json>& records, const GlobalOptions& g) {
    if (g.format == "json") {
        std::cout << ordered_json(records).dump(2) << "\n";
    } else if (g.format == "csv") {
        emit_csv(records, std::cout);
    } else {
        emit_table(records, std::cout);
    }
}

// ---------------------------------------------------------------------------
// Name tables. The names directory is optional; missing files just mean
// ordinal-only rendering.
// ---------------------------------------------------------------------------

fs::path effective_names_dir(const GlobalOptions& g) {
    if (!g.names_dir.empty()) return g.names_dir;
    if (fs::exists("data/names")) return "data/names";
    return {};
}

std::optional<NameTable> load_table(const fs::path& dir, const std::string& stem) {
    if (dir.empty()) return std::nullopt;
    const fs::path path = dir / (stem + ".names");
    if (!fs::exists(path)) return std::nullopt;
    return NameTable::from_file(path);
}

// ---------------------------------------------------------------------------
// yuga
// ---------------------------------------------------------------------------

struct YugaOptions {
    int day = -1;
    int from = 0;
    int to = 1829;
    bool parva_ends = false;
    bool decimal = false;
    bool day_given = false;
    bool from_given = false;
    bool to_given = false;
};

ordered_json day_record_json(const vedanga::yuga::DayRecord& rec, bool decimal,
                             const std::optional<NameTable>& nakshatras,
                             const std::optional<NameTable>& tithi_bright,
                             const std::optional<NameTable>& tithi_dark) {
    using vedanga::yuga::Paksha;
    ordered_json j;
    j["day"] = rec.day_index;
    j["year"] = rec.year_in_yuga;
    j["ayana"] = to_string(rec.ayana);
    j["season"] = rec.season_index;
    j["parva"] = rec.parva_index;
    j["paksha"] = to_string(rec.tithi.paksha);
    j["tithi"] = rec.tithi.ordinal;
    const auto& tithi_names = rec.tithi.paksha == Paksha::bright ? tithi_bright : tithi_dark;
    if (tithi_names) {
        if (auto name = tithi_names->name(static_cast<std::uint32_t>(rec.tithi.ordinal)))
            j["tithi_name"] = *name;
    }
    j["moon_nakshatra"] = rec.moon.nakshatra_index + 1;
    if (nakshatras) {
        if (auto name = nakshatras->name(static_cast<std::uint32_t>(rec.moon.nakshatra_index + 1)))
            j["moon_name"] = *name;
    }
    j["moon_offset"] = rec.moon.offset.str();
    j["sun_nakshatra"] = rec.sun.nakshatra_index + 1;
    if (nakshatras) {
        if (auto name = nakshatras->name(static_cast<std::uint32_t>(rec.sun.nakshatra_index + 1)))
            j["sun_name"] = *name;
    }
    j["sun_offset"] = rec.sun.offset.str();
    if (decimal) {
        j["moon_approx"] =
            render_decimal(Rational(rec.moon.nakshatra_index) + rec.moon.offset, 5);
        j["sun_approx"] = render_decimal(Rational(rec.sun.nakshatra_index) + rec.sun.offset, 5);
    }
    return j;
}

int run_yuga(const YugaOptions& opt, const GlobalOptions& g) {
    const auto dir = effective_names_dir(g);
    const auto nakshatras = load_table(dir, "nakshatra");
    const auto tithi_bright = load_table(dir, "tithi_bright");
    const auto tithi_dark = load_table(dir, "tithi_dark");
    const vedanga::yuga::YugaConfig cfg;

    std::vector<ordered_json> records;
    if (opt.parva_ends) {
        const Rational increment = cfg.nakshatras_per_parva();
        for (int k = 1; k <= cfg.parvas_per_yuga; ++k) {
            const auto position = vedanga::yuga::moon_position_at_parva_end(k, cfg);
            const Rational cumulative = Rational(k) * increment;
            ordered_json j;
            j["parva"] = k;
            j["cumulative"] = cumulative.str();
            j["cumulative_mixed"] = to_string(to_mixed(cumulative));
            j["moon_nakshatra"] = position.nakshatra_index + 1;
            if (nakshatras) {
                if (auto name =
                        nakshatras->name(static_cast<std::uint32_t>(position.nakshatra_index + 1)))
                    j["moon_name"] = *name;
            }
            j["moon_offset"] = position.offset.str();
            if (opt.decimal) j["cumulative_approx"] = render_decimal(cumulative, 5);
            records.push_back(std::move(j));
        }
    } else if (opt.day_given) {
        records.push_back(day_record_json(vedanga::yuga::calendar_record(opt.day, cfg),
                                          opt.decimal, nakshatras, tithi_bright, tithi_dark));
    } else {
        for (const auto& rec : vedanga::yuga::yuga_table(opt.from, opt.to, cfg))
            records.push_back(
                day_record_json(rec, opt.decimal, nakshatras, tithi_bright, tithi_dark));
    }
    emit(records, g);
    return 0;
}

// ---------------------------------------------------------------------------
// name
// ---------------------------------------------------------------------------

struct NameOptions {
    std::vector<std::uint32_t> radices = {5, 12, 2, 30, 15, 15};
    std::uint64_t encode_index = 0;
    std::vector<std::string> decode_components;
    bool roundtrip_check = false;
};

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

int run_name_encode(const NameOptions& opt, const GlobalOptions& g) {
    const vedanga::names::RadixVector rv{opt.radices};
    const auto name = vedanga::names::encode_index(opt.encode_index, rv);
    const auto labels = component_labels(rv);
    const auto dir = effective_names_dir(g);

    ordered_json j;
    j["index"] = opt.encode_index;
    for (std::size_t i = 0; i < name.components.size(); ++i) {
        j[labels[i]] = name.components[i];
        if (auto table = load_table(dir, labels[i])) {
            if (auto display = table->name(name.components[i]))
                j[labels[i] + "_name"] = *display;
        }
    }
    emit({j}, g);
    return 0;
}

int run_name_decode(const NameOptions& opt, const GlobalOptions& g) {
    const vedanga::names::RadixVector rv{opt.radices};
    const auto labels = component_labels(rv);
    const auto dir = effective_names_dir(g);

    vedanga::names::TimeSegmentName name;
    if (opt.decode_components.size() != rv.size())
        throw vedanga::RangeError("expected " + std::to_string(rv.size()) +
                                  " components, got " +
                                  std::to_string(opt.decode_components.size()));
    for (std::size_t i = 0; i < opt.decode_components.size(); ++i) {
        const std::string& token = opt.decode_components[i];
        if (all_digits(token)) {
            name.components.push_back(static_cast<std::uint32_t>(std::stoul(token)));
            continue;
        }
        const auto table = load_table(dir, labels[i]);
        if (!table)
            throw vedanga::RangeError("no name table for component " + labels[i] +
                                      "; cannot resolve '" + token + "'");
        const auto key = table->key(token);
        if (!key)
            throw vedanga::RangeError("unknown " + labels[i] + " name '" + token + "'");
        name.components.push_back(*key);
    }

    ordered_json j;
    j["index"] = decode_name(name, rv);
    emit({j}, g);
    return 0;
}

int run_name_duration(const GlobalOptions& g) {
    const Rational prati = vedanga::names::prati_muhurta_minutes();
    const Rational muhurta = vedanga::names::muhurta_minutes();
    ordered_json p;
    p["unit"] = "prati_muhurta";
    p["minutes"] = prati.str();
    p["approx_minutes"] = render_decimal(prati, 1);
    ordered_json m;
    m["unit"] = "muhurta";
    m["minutes"] = muhurta.str();
    m["approx_minutes"] = render_decimal(muhurta, 1);
    emit({p, m}, g);
    return 0;
}

int run_name_roundtrip(const NameOptions& opt, const GlobalOptions& g) {
    const vedanga::names::RadixVector rv{opt.radices};
    const std::uint64_t total = rv.total_segments();
    const std::uint64_t mismatches = vedanga::names::verify_bijection(rv);
    ordered_json j;
    j["segments"] = total;
    j["mismatches"] = mismatches;
    j["bijective"] = mismatches == 0;
    emit({j}, g);
    return mismatches == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// tally
// ---------------------------------------------------------------------------

ordered_json split_json(const vedanga::tally::SplitResult& r) {
    ordered_json j;
    j["bodies"] = r.bodies;
    j["size_per_body"] = r.size_per_body;
    j["steps"] = r.steps.str();
    return j;
}

int run_tally_schedule(int days, const std::vector<int>& parvas,
                       const std::vector<int>& seasons, const std::vector<int>& ayanas,
                       const GlobalOptions& g) {
    const auto events = vedanga::tally::gavamayana_schedule(days, parvas, seasons, ayanas);
    std::vector<ordered_json> records;
    records.reserve(events.size());
    for (const auto& e : events) {
        ordered_json j;
        j["day"] = e.day_index;
        j["event"] = to_string(e.kind);
        records.push_back(std::move(j));
    }
    emit(records, g);
    if (!g.quiet)
        std::cerr << "total events: " << events.size() << " (2*" << days << " daily + "
                  << parvas.size() << " parva + " << seasons.size() << " season + "
                  << ayanas.size() << " ayana)\n";
    return 0;
}

// ---------------------------------------------------------------------------
// bignum
// ---------------------------------------------------------------------------

std::vector<ordered_json> series_records(const std::vector<vedanga::series::NamedNumber>& terms) {
    std::vector<ordered_json> records;
    records.reserve(terms.size());
    int term = 0;
    for (const auto& t : terms) {
        ordered_json j;
        j["term"] = ++term;
        j["name"] = t.name;
        j["value"] = t.value.str();
        j["digits"] = digit_count(t.value);
        records.push_back(std::move(j));
    }
    return records;
}

int run_bignum_lookup(const std::string& value_text, const GlobalOptions& g) {
    vedanga::series::VariantTable table = vedanga::series::VariantTable::builtin();
    const auto dir = effective_names_dir(g);
    if (!dir.empty() && fs::exists(dir / "variants.tsv")) {
        // The file replaces the built-ins so user edits are authoritative.
        table = vedanga::series::VariantTable::from_file(dir / "variants.tsv");
    }
    const auto hits = table.lookup(Natural{value_text});
    std::vector<ordered_json> records;
    for (const auto& [name, tradition] : hits) {
        ordered_json j;
        j["name"] = name;
        j["tradition"] = to_string(tradition);
        records.push_back(std::move(j));
    }
    emit(records, g);
    if (!g.quiet && hits.empty())
        std::cerr << "no recorded name for " << value_text << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vedanga Jyotisha five-year-yuga calendar, time-segment name codec,\n"
                 "tally-machine procedures and ancient number series, on exact arithmetic."};
    app.set_config("--config");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow a subcommand

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--names", g.names_dir,
                   "Directory of display-name tables (defaults to data/names when present)");
    app.add_flag("--quiet", g.quiet, "Suppress informational notes on stderr");

    // --- yuga ---------------------------------------------------------------
    YugaOptions yuga_opt;
    auto* yuga_cmd = app.add_subcommand("yuga", "Day records and parva ends of the 1830-day yuga");
    auto* day_opt = yuga_cmd->add_option("--day", yuga_opt.day, "Single civil day (0..1829)");
    auto* from_opt = yuga_cmd->add_option("--from", yuga_opt.from, "Range start (default 0)");
    auto* to_opt = yuga_cmd->add_option("--to", yuga_opt.to, "Range end (default 1829)");
    auto* parva_flag =
        yuga_cmd->add_flag("--parva-ends", yuga_opt.parva_ends, "Moon positions after each parva");
    yuga_cmd->add_flag("--decimal", yuga_opt.decimal,
                       "Append approximate decimal columns (5 places)");
    day_opt->excludes(from_opt)->excludes(to_opt)->excludes(parva_flag);
    parva_flag->excludes(from_opt)->excludes(to_opt);

    // --- name ---------------------------------------------------------------
    NameOptions name_opt;
    auto* name_cmd =
        app.add_subcommand("name", "Encode/decode time-segment name tuples (810,000 segments)");
    name_cmd->add_option("--radices", name_opt.radices,
                         "Radix vector, most significant first (default 5,12,2,30,15,15)")
        ->delimiter(',');
    name_cmd->add_flag("--roundtrip-check", name_opt.roundtrip_check,
                       "Exhaustively verify decode(encode(i)) == i for every index");
    auto* encode_cmd = name_cmd->add_subcommand("encode", "Index -> name tuple");
    encode_cmd->add_option("index", name_opt.encode_index, "Segment index (0-based)")->required();
    auto* decode_cmd = name_cmd->add_subcommand("decode", "Name tuple -> index");
    decode_cmd
        ->add_option("components", name_opt.decode_components,
                     "One value (or table name) per component")
        ->required()
        ->expected(-1);
    auto* duration_cmd =
        name_cmd->add_subcommand("duration", "Lengths of the named time segments");

    // --- tally --------------------------------------------------------------
    auto* tally_cmd =
        app.add_subcommand("tally", "Concrete-token procedures with step accounting");
    tally_cmd->require_subcommand(1);
    std::uint64_t split_total = 0, split_bodies = 0;
    auto* split_cmd = tally_cmd->add_subcommand("split", "Deal tokens into equal bodies");
    split_cmd->add_option("total", split_total, "Tokens to deal")->required();
    split_cmd->add_option("bodies", split_bodies, "Number of bodies")->required();

    std::uint64_t enum_total = 0, enum_max_bodies = 24;
    auto* enum_cmd =
        tally_cmd->add_subcommand("enumerate", "All equal splits up to a bodies bound");
    enum_cmd->add_option("total", enum_total, "Tokens to deal")->required();
    enum_cmd->add_option("--max-bodies", enum_max_bodies, "Largest bodies count to try")
        ->capture_default_str();

    std::vector<int> sadaha_months;
    auto* sadaha_cmd = tally_cmd->add_subcommand("sadaha", "Six-day sets for 29/30-day months");
    sadaha_cmd->add_option("months", sadaha_months, "Month lengths (29 or 30)")
        ->required()
        ->expected(-1);

    int sched_days = 360;
    std::vector<int> sched_parvas, sched_seasons, sched_ayanas;
    auto* sched_cmd = tally_cmd->add_subcommand("schedule", "Year-long oblation schedule");
    sched_cmd->add_option("--days", sched_days, "Days in the ritual year")->capture_default_str();
    sched_cmd->add_option("--parvas", sched_parvas, "Parva days (comma separated)")
        ->delimiter(',');
    sched_cmd->add_option("--seasons", sched_seasons, "Season start days")->delimiter(',');
    sched_cmd->add_option("--ayanas", sched_ayanas, "Ayana start days")->delimiter(',');

    std::uint64_t tax_measures = 0, tax_divisor = 6;
    auto* tax_cmd = tally_cmd->add_subcommand("tax", "Tax in kind by group separation");
    tax_cmd->add_option("measures", tax_measures, "Measures in the stream")->required();
    tax_cmd->add_option("--divisor", tax_divisor, "Group size; last of each group is tax")
        ->capture_default_str();

    std::uint64_t prod_a = 0, prod_b = 0;
    auto* prod_cmd = tally_cmd->add_subcommand("product", "Multiply by repeated addition");
    prod_cmd->add_option("a", prod_a, "Tokens added per round")->required();
    prod_cmd->add_option("b", prod_b, "Number of rounds")->required();

    // --- bignum -------------------------------------------------------------
    auto* bignum_cmd = app.add_subcommand("bignum", "Ancient large-number series");
    bignum_cmd->require_subcommand(1);
    auto* decimal_cmd =
        bignum_cmd->add_subcommand("decimal", "The thirteen-name decimal series");
    std::size_t cent_terms = 24;
    std::string cent_start = "1000000000", cent_factor = "100";
    auto* cent_cmd = bignum_cmd->add_subcommand("centesimal", "The centesimal series");
    cent_cmd->add_option("--terms", cent_terms, "Number of terms")->capture_default_str();
    cent_cmd->add_option("--start", cent_start, "First term value")->capture_default_str();
    cent_cmd->add_option("--factor", cent_factor, "Step factor")->capture_default_str();
    auto* jain_cmd = bignum_cmd->add_subcommand("jain", "The squared-squares population number");
    std::string lookup_value;
    auto* lookup_cmd = bignum_cmd->add_subcommand("lookup", "Names recorded for a value");
    lookup_cmd->add_option("value", lookup_value, "Decimal value to look up")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*yuga_cmd) {
            yuga_opt.day_given = day_opt->count() > 0;
            return run_yuga(yuga_opt, g);
        }
        if (*name_cmd) {
            if (*encode_cmd) return run_name_encode(name_opt, g);
            if (*decode_cmd) return run_name_decode(name_opt, g);
            if (*duration_cmd) return run_name_duration(g);
            if (name_opt.roundtrip_check) return run_name_roundtrip(name_opt, g);
            throw vedanga::DomainError(
                "name requires encode, decode, duration or --roundtrip-check");
        }
        if (*tally_cmd) {
            if (*split_cmd) {
                emit({split_json(vedanga::tally::equal_split(split_total, split_bodies))}, g);
                return 0;
            }
            if (*enum_cmd) {
                std::vector<ordered_json> records;
                for (const auto& r : vedanga::tally::enumerate_splits(enum_total, enum_max_bodies))
                    records.push_back(split_json(r));
                emit(records, g);
                return 0;
            }
            if (*sadaha_cmd) {
                const auto lengths = vedanga::tally::sadaha_partition(sadaha_months);
                std::vector<ordered_json> records;
                for (std::size_t i = 0; i < lengths.size(); ++i) {
                    ordered_json j;
                    j["month"] = i / 5 + 1;
                    j["sadaha"] = i % 5 + 1;
                    j["days"] = lengths[i];
                    records.push_back(std::move(j));
                }
                emit(records, g);
                return 0;
            }
            if (*sched_cmd)
                return run_tally_schedule(sched_days, sched_parvas, sched_seasons, sched_ayanas,
                                          g);
            if (*tax_cmd) {
                const auto r = vedanga::tally::tax_in_kind(tax_measures, tax_divisor);
                ordered_json j;
                j["measures"] = tax_measures;
                j["divisor"] = tax_divisor;
                j["tax"] = r.tax;
                j["kept"] = r.kept;
                j["remainder_untaxed"] = r.remainder_untaxed;
                j["token_moves"] = r.token_moves.str();
                emit({j}, g);
                return 0;
            }
            if (*prod_cmd) {
                const auto r = vedanga::tally::repeated_addition_product(prod_a, prod_b);
                ordered_json j;
                j["a"] = prod_a;
                j["b"] = prod_b;
                j["product"] = r.product.str();
                j["rounds"] = r.rounds;
                j["token_moves"] = r.token_moves.str();
                emit({j}, g);
                return 0;
            }
        }
        if (*bignum_cmd) {
            if (*decimal_cmd) {
                emit(series_records(vedanga::series::decimal_series()), g);
                return 0;
            }
            if (*cent_cmd) {
                vedanga::series::SeriesSpec spec = vedanga::series::SeriesSpec::centesimal_default();
                spec.term_count = cent_terms;
                spec.start_value = Natural{cent_start};
                spec.step_factor = Natural{cent_factor};
                if (cent_cmd->count("--start") || cent_cmd->count("--factor"))
                    spec.named_terms.clear();  // known names hold only for the default scale
                emit(series_records(vedanga::series::centesimal_series(spec)), g);
                return 0;
            }
            if (*jain_cmd) {
                const auto jain = vedanga::series::jain_population();
                ordered_json j;
                j["sixth_square"] = jain.sixth_square.str();
                j["fifth_square"] = jain.fifth_square.str();
                j["product"] = jain.value.str();
                j["digits"] = jain.digits;
                emit({j}, g);
                return 0;
            }
            if (*lookup_cmd) return run_bignum_lookup(lookup_value, g);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
