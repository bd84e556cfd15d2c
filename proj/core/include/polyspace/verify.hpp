#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyspace/edge_lengths.hpp"
#include "polyspace/tolerance.hpp"

namespace polyspace::verify {

/// Machine-readable result of one randomized experiment. Reproducible
/// bit-for-bit from (name, ell, d, trials, seed) except elapsed_ms.
struct ExperimentReport {
    std::string name;
    EdgeLengths ell;
    int d = 0;
    int trials = 0;
    int failures = 0;
    /// One polygon JSON document per failing trial, replayable standalone.
    std::vector<std::string> failure_payloads;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;
    /// Deterministic counters (conditioning exclusions, dimension tallies, ...).
    std::map<std::string, std::int64_t> metadata;

    bool passed() const { return failures == 0; }
};

/// dim(P) <= min(n-1, d) on random samples.
ExperimentReport verify_dimension_bound(const EdgeLengths& ell, int d, int trials,
                                        std::uint64_t seed, const ToleranceConfig& tol = {});

/// Every k in 2..min(d, n-1) is realized with dimension exactly k.
ExperimentReport verify_dimension_range(const EdgeLengths& ell, int d, std::uint64_t seed = 0,
                                        const ToleranceConfig& tol = {});

/// A polygon is SO-equivalent to its mirror iff its dimension is below
/// the ambient dimension, cross-checked against the Procrustes oracle.
/// Ill-conditioned samples are excluded and counted in metadata.
ExperimentReport verify_chirality(const EdgeLengths& ell, int d, int trials, std::uint64_t seed,
                                  const ToleranceConfig& tol = {});

/// Surjectivity threshold of the embedding map and its fiber cardinality:
/// explicit preimages exist for every sample exactly when d >= n-1, and
/// fibers are mirror pairs over full-dimensional points, singletons
/// elsewhere.
ExperimentReport verify_fiber_and_surjectivity(const EdgeLengths& ell, int d, int trials,
                                               std::uint64_t seed,
                                               const ToleranceConfig& tol = {});

/// The directed system stabilizes at d = n: pairwise SO-equivalence of a
/// fixed sample set is unchanged from ambient n to n+1 and n+2, while a
/// full-dimensional mirror pair is still distinct at n-1. Border inputs
/// reduce to the moduli-singleton check.
ExperimentReport verify_stabilization(const EdgeLengths& ell, int trials, std::uint64_t seed,
                                      const ToleranceConfig& tol = {});

/// Enumerates the collinear classes, realizes each, and checks they are
/// 1-dimensional and pairwise inequivalent at d = 2, 3, 4.
ExperimentReport verify_degenerate_classes(const EdgeLengths& ell,
                                           const ToleranceConfig& tol = {});

}  // namespace polyspace::verify
