#pragma once

#include <Eigen/Dense>

#include "polyspace/polygon.hpp"
#include "polyspace/tolerance.hpp"

namespace polyspace {

/// Symmetric positive-semidefinite (n-1)x(n-1) matrix of vertex inner
/// products G[i][j] = <v_i, v_j>. Invariant under every orthogonal
/// transformation of the polygon, and a complete invariant of its
/// O(d) orbit.
struct GramForm {
    Eigen::MatrixXd entries;
};

GramForm gram(const Polygon& p);

/// Rank of a Gram form under eps_rank. Applied on the square-root scale
/// (singular values of the underlying vertex matrix), so it agrees with
/// dimension() computed from vertices.
int gram_rank(const GramForm& g, const ToleranceConfig& tol = {});

/// Entrywise comparison: max |A - B| <= eps_gram * max(1, largest |entry|).
bool gram_close(const GramForm& a, const GramForm& b, double eps_gram);

}  // namespace polyspace
