#include "regio/preprocess.hpp"

#include <cmath>

#include "regio/error.hpp"

namespace regio {

ColumnStats column_stats(const FeatureMatrix& m) {
    if (m.rows < 2) {
        throw DataError("column statistics need at least 2 rows, got " +
                        std::to_string(m.rows));
    }
    ColumnStats s;
    s.mean.assign(m.cols, 0.0);
    s.std.assign(m.cols, 0.0);
    for (std::size_t j = 0; j < m.cols; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) sum += m.at(i, j);
        s.mean[j] = sum / static_cast<double>(m.rows);
    }
    for (std::size_t j = 0; j < m.cols; ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) {
            const double d = m.at(i, j) - s.mean[j];
            ss += d * d;
        }
        s.std[j] = std::sqrt(ss / static_cast<double>(m.rows));
    }
    return s;
}

FeatureMatrix zscore(const FeatureMatrix& m, const ColumnStats& s) {
    if (s.mean.size() != m.cols || s.std.size() != m.cols) {
        throw ParamError("column stats do not match matrix width");
    }
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (!(s.std[j] > 0.0)) {
            const std::string name =
                j < m.column_names.size() ? m.column_names[j] : std::to_string(j);
            throw NumericError("degenerate column: " + name);
        }
    }
    FeatureMatrix out = m;
    out.standardized = Standardization::zscore;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            out.at(i, j) = (m.at(i, j) - s.mean[j]) / s.std[j];
        }
    }
    return out;
}

FeatureMatrix standardize(const FeatureMatrix& m) {
    return zscore(m, column_stats(m));
}

}  // namespace regio
