#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "regio/data.hpp"

namespace regio {

// Condensed upper-triangular storage of all n(n-1)/2 pairwise distances.
// Symmetry and zero diagonal hold by construction.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<double> values;

    static std::size_t condensed_index(std::size_t i, std::size_t j, std::size_t n) {
        // caller guarantees i < j < n
        return n * i - i * (i + 1) / 2 + (j - i - 1);
    }

    double at(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        if (i > j) std::swap(i, j);
        return values[condensed_index(i, j, n)];
    }
};

// sqrt of the coordinate-wise squared differences, summed left to right.
double euclidean(std::span<const double> a, std::span<const double> b);

double squared_euclidean(std::span<const double> a, std::span<const double> b);

// All pairwise Euclidean distances between matrix rows. Requires n >= 2.
DistanceMatrix distance_matrix(const FeatureMatrix& m);

}  // namespace regio
