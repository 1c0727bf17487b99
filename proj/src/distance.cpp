#include "regio/distance.hpp"

#include <cmath>

#include "regio/error.hpp"

namespace regio {

double squared_euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ParamError("vector length mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_euclidean(a, b));
}

DistanceMatrix distance_matrix(const FeatureMatrix& m) {
    if (m.rows < 2) {
        throw DataError("distance matrix needs at least 2 rows, got " +
                        std::to_string(m.rows));
    }
    DistanceMatrix d;
    d.n = m.rows;
    d.values.reserve(d.n * (d.n - 1) / 2);
    for (std::size_t i = 0; i < d.n; ++i) {
        for (std::size_t j = i + 1; j < d.n; ++j) {
            d.values.push_back(euclidean(m.row(i), m.row(j)));
        }
    }
    return d;
}

}  // namespace regio
