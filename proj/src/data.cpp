#include "regio/data.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

#include "regio/error.hpp"
#include "regio/format.hpp"
#include "regio/rng.hpp"

namespace regio {

namespace {

const char* const kHeader[5] = {"region_id", "region_name", "income",
                                "poverty_share", "gini"};

// Splits CSV text into rows of fields. Quoted fields may contain commas,
// doubled quotes and newlines. CRLF and LF both end a row.
std::vector<std::vector<std::string>> split_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };

    while (i < n) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                field.push_back(c);
                ++i;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty() || field_was_quoted) {
                    throw DataError("stray quote inside unquoted field at row " +
                                    std::to_string(rows.size() + 1));
                }
                in_quotes = true;
                field_was_quoted = true;
                ++i;
                break;
            case ',':
                end_field();
                ++i;
                break;
            case '\r':
                if (i + 1 < n && text[i + 1] == '\n') {
                    end_row();
                    i += 2;
                } else {
                    throw DataError("bare carriage return at row " +
                                    std::to_string(rows.size() + 1));
                }
                break;
            case '\n':
                end_row();
                ++i;
                break;
            default:
                field.push_back(c);
                ++i;
        }
    }
    if (in_quotes) throw DataError("unterminated quoted field");
    if (!field.empty() || field_was_quoted || !row.empty()) end_row();
    return rows;
}

std::string quote_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

double parse_field(const std::string& text, const char* name, std::size_t row) {
    const auto value = parse_double(text);
    if (!value || !std::isfinite(*value)) {
        throw DataError(std::string("non-numeric value for ") + name + " at row " +
                        std::to_string(row) + ": '" + text + "'");
    }
    return *value;
}

void check_record(const RegionRecord& r, std::size_t row) {
    if (!(r.income > 0.0)) {
        throw DataError("income out of range (0,inf) at row " + std::to_string(row));
    }
    if (!(r.poverty_share >= 0.0 && r.poverty_share <= 100.0)) {
        throw DataError("poverty_share out of range [0,100] at row " +
                        std::to_string(row));
    }
    if (!(r.gini > 0.0 && r.gini < 1.0)) {
        throw DataError("gini out of range (0,1) at row " + std::to_string(row));
    }
    if (r.region_id.empty()) {
        throw DataError("empty region_id at row " + std::to_string(row));
    }
}

}  // namespace

Dataset parse_dataset(const std::string& csv_text) {
    const auto rows = split_csv(csv_text);
    if (rows.empty()) throw DataError("empty input, expected a header row");

    const auto& header = rows.front();
    for (std::size_t j = 0; j < 5 && j < header.size(); ++j) {
        if (header[j] != kHeader[j]) {
            throw DataError(std::string("schema error: expected column '") +
                            kHeader[j] + "', found '" + header[j] + "'");
        }
    }
    if (header.size() < 5) {
        throw DataError(std::string("schema error: missing column '") +
                        kHeader[header.size()] + "'");
    }
    if (header.size() > 5) {
        throw DataError("schema error: unexpected extra column '" + header[5] + "'");
    }

    Dataset ds;
    std::set<std::string> seen_ids;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& fields = rows[r];
        const std::size_t file_row = r + 1;
        if (fields.size() != 5) {
            throw DataError("expected 5 fields, got " + std::to_string(fields.size()) +
                            " at row " + std::to_string(file_row));
        }
        RegionRecord rec;
        rec.region_id = fields[0];
        rec.region_name = fields[1];
        rec.income = parse_field(fields[2], "income", file_row);
        rec.poverty_share = parse_field(fields[3], "poverty_share", file_row);
        rec.gini = parse_field(fields[4], "gini", file_row);
        check_record(rec, file_row);
        if (!seen_ids.insert(rec.region_id).second) {
            throw DataError("duplicate region_id '" + rec.region_id + "' at row " +
                            std::to_string(file_row));
        }
        ds.records.push_back(std::move(rec));
    }
    if (ds.records.empty()) throw DataError("no data rows");
    return ds;
}

std::string serialize_dataset(const Dataset& ds) {
    std::string out = "region_id,region_name,income,poverty_share,gini\n";
    for (const auto& r : ds.records) {
        out += quote_if_needed(r.region_id);
        out.push_back(',');
        out += quote_if_needed(r.region_name);
        out.push_back(',');
        out += format_shortest(r.income);
        out.push_back(',');
        out += format_shortest(r.poverty_share);
        out.push_back(',');
        out += format_shortest(r.gini);
        out.push_back('\n');
    }
    return out;
}

FeatureMatrix to_feature_matrix(const Dataset& ds) {
    if (ds.records.empty()) throw DataError("dataset has no records");
    FeatureMatrix m;
    m.rows = ds.records.size();
    m.cols = 3;
    m.column_names = {"income", "poverty_share", "gini"};
    m.values.reserve(m.rows * 3);
    for (const auto& r : ds.records) {
        m.values.push_back(r.income);
        m.values.push_back(r.poverty_share);
        m.values.push_back(r.gini);
    }
    return m;
}

namespace {

double clamp_coordinate(double raw, double lo, double hi, const char* name,
                        std::size_t record_index) {
    double clamped = raw;
    if (clamped < lo) clamped = lo;
    if (clamped > hi) clamped = hi;
    const double moved = std::fabs(clamped - raw);
    if (moved > 0.5 * std::fabs(raw)) {
        throw DataError(std::string("noise too large for the centroid: clamping ") +
                        name + " of record " + std::to_string(record_index) +
                        " from " + format_shortest(raw) + " moved it by more than "
                        "half its magnitude");
    }
    return clamped;
}

}  // namespace

SyntheticPanel generate_synthetic(const SyntheticSpec& spec) {
    if (spec.archetypes.empty()) throw DataError("synthetic spec has no archetypes");
    for (const auto& a : spec.archetypes) {
        if (a.count == 0) throw DataError("archetype count must be positive");
        for (const double s : a.noise_scale) {
            if (!(s >= 0.0) || !std::isfinite(s)) {
                throw DataError("noise scales must be nonnegative and finite");
            }
        }
    }

    Rng rng(spec.seed);
    SyntheticPanel panel;
    panel.dataset.year = 2018;
    std::size_t index = 0;
    for (std::size_t a = 0; a < spec.archetypes.size(); ++a) {
        const auto& arch = spec.archetypes[a];
        for (std::size_t j = 0; j < arch.count; ++j) {
            ++index;
            double coords[3];
            for (int c = 0; c < 3; ++c) {
                coords[c] = arch.centroid[c] + arch.noise_scale[c] * rng.normal();
            }
            RegionRecord rec;
            char id[16];
            std::snprintf(id, sizeof(id), "R%03zu", index);
            rec.region_id = id;
            rec.region_name = "Synthetic region " + std::to_string(index);
            rec.income = clamp_coordinate(coords[0], 1e-9, 1e18, "income", index);
            rec.poverty_share =
                clamp_coordinate(coords[1], 0.0, 100.0, "poverty_share", index);
            rec.gini = clamp_coordinate(coords[2], 1e-12, 1.0 - 1e-12, "gini", index);
            panel.dataset.records.push_back(std::move(rec));
            panel.labels.push_back(static_cast<int>(a));
        }
    }
    return panel;
}

SyntheticSpec default_archetype_spec(std::uint64_t seed, double noise_fraction) {
    if (!(noise_fraction >= 0.0)) throw ParamError("noise fraction must be >= 0");
    // Raw-scale noise that maps to about 5% of the smallest standardized
    // inter-centroid gap when noise_fraction == 1.
    const double f = noise_fraction;
    SyntheticSpec spec;
    spec.seed = seed;
    spec.archetypes = {
        {{19521.0, 24.37, 0.355}, 10, {1000.0 * f, 0.35 * f, 0.0017 * f}},
        {{62125.0, 8.00, 0.409}, 9, {1000.0 * f, 0.35 * f, 0.0017 * f}},
        {{30196.0, 13.50, 0.389}, 31, {1000.0 * f, 0.35 * f, 0.0017 * f}},
        {{25308.0, 13.70, 0.355}, 35, {1000.0 * f, 0.35 * f, 0.0017 * f}},
    };
    return spec;
}

}  // namespace regio
