#pragma once

#include <vector>

#include "regio/data.hpp"

namespace regio {

// Per-column mean and population standard deviation (divisor n).
struct ColumnStats {
    std::vector<double> mean;
    std::vector<double> std;
};

// Requires n >= 2 rows.
ColumnStats column_stats(const FeatureMatrix& m);

// (x - mean) / std per entry. Every column std must be positive; a zero std
// raises NumericError naming the degenerate column.
FeatureMatrix zscore(const FeatureMatrix& m, const ColumnStats& s);

// column_stats + zscore in one step.
FeatureMatrix standardize(const FeatureMatrix& m);

}  // namespace regio
