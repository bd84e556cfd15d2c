#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "polyspace/gram.hpp"
#include "polyspace/polygon.hpp"
#include "polyspace/tolerance.hpp"

namespace polyspace::quotient {

/// Canonical representative of a rotation orbit [P] in M_d(ell):
/// the Gram form plus, exactly when the polygon is full-dimensional,
/// an orientation sign separating the two chiral rotation orbits
/// inside one O(d) orbit.
struct ModuliPoint {
    EdgeLengths edge_lengths;
    int ambient_dim = 0;
    GramForm gram;
    int rank = 0;
    std::optional<int> orientation;  ///< +1 or -1; present iff rank == ambient_dim
};

/// Orientation sign of a full-dimensional polygon; absent when
/// dim(p) < d (every reflection is then reachable by rotation, so the
/// orbit carries no chirality). Pivot vertices are selected greedily
/// from the Gram matrix alone, so O-equivalent polygons pick identical
/// pivots; the sign is the determinant sign of the pivot columns.
std::optional<int> orientation_sign(const Polygon& p, const ToleranceConfig& tol = {});

/// Same O(d) orbit: Gram forms agree entrywise within eps_gram.
/// Requires equal edge lengths and ambient dimension.
bool o_equivalent(const Polygon& p, const Polygon& q, const ToleranceConfig& tol = {});

/// Same SO(d) orbit: O-equivalent, and either the dimension is below the
/// ambient dimension or the orientation signs agree.
bool so_equivalent(const Polygon& p, const Polygon& q, const ToleranceConfig& tol = {});

struct AlignResult {
    double residual = 0.0;      ///< Frobenius norm of T * V_p - V_q at the optimum
    Eigen::MatrixXd transform;  ///< the minimizing d x d orthogonal matrix
};

/// Orthogonal Procrustes: minimizes ||T V_p - V_q||_F over T in O(d)
/// (proper_only = false) or SO(d) (true). Independent oracle for the
/// Gram-based equivalence predicates.
AlignResult align(const Polygon& p, const Polygon& q, bool proper_only,
                  const ToleranceConfig& tol = {});

/// Assembles the moduli point of a polygon. Two polygons produce equal
/// points (under `equal`) iff they are SO-equivalent.
ModuliPoint moduli_point(const Polygon& p, const ToleranceConfig& tol = {});

/// The directed-system map into the next ambient dimension: the Gram
/// form and rank carry over, the orientation is dropped (after embedding
/// the rank is always below the ambient dimension).
ModuliPoint phi(const ModuliPoint& mp);

/// Fiber of phi over a point of M_{d+1}(ell), as points of M_d(ell):
/// empty when rank > d (the point is not in the image), a mirror pair
/// {+1, -1} when rank == d, and a singleton otherwise.
/// Requires image.ambient_dim >= 3 so the fiber lives in a valid space.
std::vector<ModuliPoint> phi_fiber(const ModuliPoint& image, const ToleranceConfig& tol = {});

/// ModuliPoint equality: Gram entrywise within eps_gram, equal rank,
/// equal orientation presence and value. Requires matching edge lengths
/// and ambient dimension.
bool equal(const ModuliPoint& a, const ModuliPoint& b, const ToleranceConfig& tol = {});

}  // namespace polyspace::quotient
