#pragma once

#include "polyspace/errors.hpp"

namespace polyspace {

/// Named numerical thresholds used throughout the library.
///
/// All geometric predicates are tolerance-based: the underlying
/// definitions are exact linear algebra, and these cutoffs decide how
/// much floating-point slack each comparison gets.
struct ToleranceConfig {
    /// Relative singular-value cutoff for numerical rank.
    double eps_rank = 1e-8;
    /// Relative tolerance for Gram-matrix entry comparison.
    double eps_gram = 1e-7;
    /// Alignment/closure residual tolerance, relative to the edge-length total.
    double eps_align = 1e-6;
    /// Root-finding tolerance (relative bracket width).
    double eps_root = 1e-12;
    /// Minimum sigma_k/sigma_1 for a sample to count as well-conditioned.
    double cond_floor = 1e-3;

    void validate() const {
        if (!(eps_rank > 0.0 && eps_gram > 0.0 && eps_align > 0.0 && eps_root > 0.0 &&
              cond_floor > 0.0)) {
            throw ValidationError("tolerances must be strictly positive");
        }
        if (!(eps_root < eps_rank)) {
            throw ValidationError("eps_root must be smaller than eps_rank");
        }
    }
};

}  // namespace polyspace
