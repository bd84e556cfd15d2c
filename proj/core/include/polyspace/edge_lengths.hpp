#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace polyspace {

/// Ordered vector of n >= 3 strictly positive edge lengths.
class EdgeLengths {
public:
    /// Throws ValidationError if fewer than 3 entries or any entry <= 0 (or non-finite).
    explicit EdgeLengths(std::vector<double> lengths);

    std::size_t count() const { return lengths_.size(); }
    double operator[](std::size_t i) const { return lengths_[i]; }
    const std::vector<double>& values() const { return lengths_; }

    /// Sum of all entries; the natural length scale for residual tolerances.
    double total() const { return total_; }

    /// Largest entry and its (first) index.
    double max_length() const { return lengths_[max_index_]; }
    std::size_t max_index() const { return max_index_; }

    bool operator==(const EdgeLengths& other) const { return lengths_ == other.lengths_; }

    std::string str() const;

private:
    std::vector<double> lengths_;
    double total_ = 0.0;
    std::size_t max_index_ = 0;
};

/// Where an edge-length vector sits relative to the feasibility cone.
enum class FeasibilityClass {
    Infeasible,  ///< some l_i exceeds the sum of the others; no polygon exists
    Border,      ///< some l_i equals the sum of the others; only collinear polygons exist
    Interior,    ///< every l_i is strictly below the sum of the others
};

const char* to_string(FeasibilityClass c);

/// Classifies an edge-length vector by the polygon inequalities.
///
/// Comparisons are exact on the given numbers: the input is user data,
/// not a computed quantity, so no epsilon is applied.
FeasibilityClass classify_feasibility(const EdgeLengths& ell);

}  // namespace polyspace
