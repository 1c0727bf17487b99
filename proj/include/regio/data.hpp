#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace regio {

// One region with its three income indicators: mean monetary income per
// capita (rubles/month, > 0), share of population below the living wage
// (percent, [0,100]) and the Gini coefficient (fraction, (0,1)).
struct RegionRecord {
    std::string region_id;
    std::string region_name;
    double income = 0.0;
    double poverty_share = 0.0;
    double gini = 0.0;
};

struct Dataset {
    std::vector<RegionRecord> records;
    int year = 0;  // metadata only, never affects computation
};

enum class Standardization { none, zscore };

// Row-major n x p matrix of finite reals with column metadata.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;
    std::vector<std::string> column_names;
    Standardization standardized = Standardization::none;

    double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }
    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * cols, cols};
    }
};

// Recipe for a synthetic panel: per archetype a centroid, a member count and
// per-coordinate normal noise scales.
struct Archetype {
    std::array<double, 3> centroid{};  // income, poverty_share, gini
    std::size_t count = 0;
    std::array<double, 3> noise_scale{};
};

struct SyntheticSpec {
    std::vector<Archetype> archetypes;
    std::uint64_t seed = 0;
};

struct SyntheticPanel {
    Dataset dataset;
    std::vector<int> labels;  // generating archetype of each record
};

// Parses the canonical CSV schema
//   region_id,region_name,income,poverty_share,gini
// (UTF-8, ',' separator, '.' decimal, mandatory header, LF or CRLF).
// Throws DataError with the offending row/field on any violation.
Dataset parse_dataset(const std::string& csv_text);

// Inverse of parse_dataset: emits the canonical schema with shortest
// round-trip decimal literals, so parse(serialize(ds)) == ds field for field.
std::string serialize_dataset(const Dataset& ds);

// n x 3 matrix with columns (income, poverty_share, gini) in record order.
FeatureMatrix to_feature_matrix(const Dataset& ds);

// Deterministic panel for the given spec: record j of archetype a is
// centroid + noise_scale * N(0,1) per coordinate, clamped into the record
// invariants. A clamp that moves a coordinate by more than half its
// magnitude raises DataError (noise too large for the centroid).
SyntheticPanel generate_synthetic(const SyntheticSpec& spec);

// Bundled four-archetype calibration (poor / wealthy / upper-middle /
// middle regions, 10+9+31+35 members). noise_fraction = 1 corresponds
// roughly to 5% of the minimum inter-centroid gap after standardization.
SyntheticSpec default_archetype_spec(std::uint64_t seed, double noise_fraction);

}  // namespace regio
