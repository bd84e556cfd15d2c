#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polyspace/polygon.hpp"
#include "polyspace/tolerance.hpp"

namespace polyspace::construct {

/// A collinear polygon up to rotation: edge i points in direction
/// signs[i] along a fixed line. Valid for ell when the signed length
/// sum vanishes.
class SignPattern {
public:
    /// Entries must be +1 or -1.
    explicit SignPattern(std::vector<int> signs);

    /// Parses a string of '+'/'-' characters.
    static SignPattern parse(const std::string& text);
    std::string str() const;

    std::size_t size() const { return signs_.size(); }
    int operator[](std::size_t i) const { return signs_[i]; }

    /// Sum of signs[i] * l_i.
    double signed_sum(const EdgeLengths& ell) const;

    /// |signed_sum| <= eps_root * total(l).
    bool valid_for(const EdgeLengths& ell, const ToleranceConfig& tol = {}) const;

    bool operator==(const SignPattern& other) const { return signs_ == other.signs_; }

private:
    std::vector<int> signs_;
};

/// A vertex the polygon can be bent at: v_i lies in the span of the
/// other vertices but off the line L_i through its neighbors.
struct BendSite {
    int index = 0;             ///< 1-based vertex index i in 1..n-1
    Eigen::VectorXd foot;      ///< orthogonal projection of v_i onto L_i
    double radius = 0.0;       ///< ||v_i - foot||
    Eigen::VectorXd line_dir;  ///< unit direction of L_i; zero when L_i degenerates to a point
};

/// All sign patterns with vanishing signed length sum, one representative
/// per {pattern, -pattern} pair (a half-turn of the ambient space reverses
/// the line, so global negation is a rotation). Deterministic order with
/// the first sign fixed to '+'. Throws for n > 24 (2^n enumeration).
std::vector<SignPattern> enumerate_degenerate_classes(const EdgeLengths& ell,
                                                      const ToleranceConfig& tol = {});

/// Realizes a sign pattern as a collinear polygon along the first axis:
/// v_k = (sum of the first k signed lengths) * e_1. Always 1-dimensional.
Polygon build_degenerate(const EdgeLengths& ell, const SignPattern& pattern, int ambient_dim,
                         const ToleranceConfig& tol = {});

/// The convex cyclic realization of an interior edge-length vector:
/// vertices on a circle in the plane, circumradius found by bisection.
/// Requires classify_feasibility(ell) == Interior.
Polygon build_planar(const EdgeLengths& ell, const ToleranceConfig& tol = {});

/// Every qualifying bend site, by ascending vertex index.
std::vector<BendSite> list_bend_sites(const Polygon& p, const ToleranceConfig& tol = {});

/// The smallest-index bend site. Requires 2 <= dim(p) < n-1 (existence
/// is then guaranteed) and dim(p) < ambient_dim so the site is usable.
BendSite find_bend_site(const Polygon& p, const ToleranceConfig& tol = {});

/// Replaces v_i by w = foot + radius * u, rotating the vertex out of the
/// current span about L_i. Requires u to be a unit vector outside the
/// span of the other vertices and perpendicular to L_i; then all edge
/// lengths are preserved and the dimension rises by exactly one.
Polygon bend(const Polygon& p, const BendSite& site, const Eigen::VectorXd& u,
             const ToleranceConfig& tol = {});

/// Bends at the given 1-based vertex index (or at the smallest
/// qualifying site when index == 0) in a seeded random direction drawn
/// orthogonal to the span of the kept vertices.
Polygon bend_random(const Polygon& p, int index, std::uint64_t seed,
                    const ToleranceConfig& tol = {});

/// A k-dimensional polygon in ambient dimension d, built from the planar
/// realization by repeated bending. Requires interior ell and
/// 2 <= k <= min(d, n-1).
Polygon raise_to_dimension(const EdgeLengths& ell, int k, int ambient_dim, std::uint64_t seed,
                           const ToleranceConfig& tol = {});

/// A random element of V_d(ell): planar start, a geometric number of
/// random bends (mean n) at uniformly chosen sites with directions drawn
/// in the orthogonal complement of the kept span, then a Haar rotation.
/// Deterministic per seed. The distribution is a coverage device for
/// property testing, not a uniform law on the space.
Polygon sample(const EdgeLengths& ell, int ambient_dim, std::uint64_t seed,
               const ToleranceConfig& tol = {});

}  // namespace polyspace::construct
