#pragma once

#include <Eigen/Dense>

#include "polyspace/edge_lengths.hpp"
#include "polyspace/tolerance.hpp"

namespace polyspace {

/// A closed chain of n segments in R^d with prescribed edge lengths,
/// starting and ending at the origin. Only the n-1 interior vertices
/// v_1 .. v_{n-1} are stored (as matrix columns); v_0 = v_n = 0 is
/// implicit and never materialized.
class Polygon {
public:
    /// `vertices` is d x (n-1) with columns v_1 .. v_{n-1}.
    /// Checks structure only (d >= 2, column count n-1); use validate()
    /// for the metric edge-length invariant.
    Polygon(EdgeLengths edge_lengths, Eigen::MatrixXd vertices);

    int ambient_dim() const { return static_cast<int>(vertices_.rows()); }
    std::size_t edge_count() const { return edge_lengths_.count(); }  // n
    std::size_t vertex_count() const { return edge_lengths_.count() - 1; }

    const EdgeLengths& edge_lengths() const { return edge_lengths_; }
    const Eigen::MatrixXd& vertices() const { return vertices_; }

    /// Vertex v_i for i in 1..n-1 (the paper's indexing); i = 0 and i = n
    /// return the origin.
    Eigen::VectorXd vertex(std::size_t i) const;

    /// Largest deviation |  ||v_i - v_{i-1}|| - l_i  | over all n edges.
    double max_edge_error() const;

    /// Throws ValidationError unless every edge length holds within
    /// eps_align * total(l).
    void validate(const ToleranceConfig& tol = {}) const;

private:
    EdgeLengths edge_lengths_;
    Eigen::MatrixXd vertices_;
};

/// Dimension of a polygon: numerical rank of its vertex matrix.
/// Always between 1 and min(n-1, d) for a valid polygon.
int dimension(const Polygon& p, const ToleranceConfig& tol = {});

/// Canonical isometric embedding into a higher ambient dimension:
/// appends zero coordinates to every vertex. Any other linear isometric
/// embedding yields the same moduli point, so zero-padding loses nothing.
Polygon embed(const Polygon& p, int target_dim);

/// Re-expresses the polygon in an orthonormal basis of the span of its
/// vertices, shrinking the ambient dimension to max(2, dim(p)). The Gram
/// form is preserved within eps_gram.
Polygon project_to_span(const Polygon& p, const ToleranceConfig& tol = {});

/// The fixed reflection negating the last coordinate.
Polygon reflect(const Polygon& p);

}  // namespace polyspace
