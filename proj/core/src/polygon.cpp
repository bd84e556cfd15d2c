#include "polyspace/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyspace/errors.hpp"
#include "polyspace/linalg.hpp"

namespace polyspace {

Polygon::Polygon(EdgeLengths edge_lengths, Eigen::MatrixXd vertices)
    : edge_lengths_(std::move(edge_lengths)), vertices_(std::move(vertices)) {
    const auto n = edge_lengths_.count();
    if (vertices_.cols() != static_cast<Eigen::Index>(n - 1)) {
        throw ValidationError("polygon with " + std::to_string(n) + " edges needs " +
                              std::to_string(n - 1) + " vertices, got " +
                              std::to_string(vertices_.cols()));
    }
    if (vertices_.rows() < 2) {
        throw ValidationError("ambient dimension must be at least 2");
    }
}

Eigen::VectorXd Polygon::vertex(std::size_t i) const {
    if (i == 0 || i == edge_count()) return Eigen::VectorXd::Zero(ambient_dim());
    if (i > vertex_count()) {
        throw ValidationError("vertex index " + std::to_string(i) + " out of range");
    }
    return vertices_.col(static_cast<Eigen::Index>(i - 1));
}

double Polygon::max_edge_error() const {
    double worst = 0.0;
    Eigen::VectorXd prev = Eigen::VectorXd::Zero(ambient_dim());
    for (std::size_t i = 1; i <= edge_count(); ++i) {
        Eigen::VectorXd cur = vertex(i);
        worst = std::max(worst, std::abs((cur - prev).norm() - edge_lengths_[i - 1]));
        prev = std::move(cur);
    }
    return worst;
}

void Polygon::validate(const ToleranceConfig& tol) const {
    tol.validate();
    const double err = max_edge_error();
    const double bound = tol.eps_align * edge_lengths_.total();
    if (!(err <= bound)) {
        throw ValidationError("edge lengths violated: max deviation " + std::to_string(err) +
                              " exceeds " + std::to_string(bound));
    }
}

int dimension(const Polygon& p, const ToleranceConfig& tol) {
    return linalg::numerical_rank(p.vertices(), tol.eps_rank);
}

Polygon embed(const Polygon& p, int target_dim) {
    if (target_dim < p.ambient_dim()) {
        throw ValidationError("embed target dimension " + std::to_string(target_dim) +
                              " is below the current ambient dimension " +
                              std::to_string(p.ambient_dim()));
    }
    Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(target_dim, p.vertices().cols());
    padded.topRows(p.ambient_dim()) = p.vertices();
    return Polygon(p.edge_lengths(), std::move(padded));
}

Polygon project_to_span(const Polygon& p, const ToleranceConfig& tol) {
    Eigen::MatrixXd basis = linalg::span_basis(p.vertices(), tol.eps_rank);
    Eigen::MatrixXd coords = basis.transpose() * p.vertices();
    // Ambient floor: polygon spaces start at d = 2, so pad a rank-1
    // (or rank-0) span with zero coordinates.
    if (coords.rows() < 2) {
        Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(2, coords.cols());
        padded.topRows(coords.rows()) = coords;
        coords = std::move(padded);
    }
    return Polygon(p.edge_lengths(), std::move(coords));
}

Polygon reflect(const Polygon& p) {
    Eigen::MatrixXd flipped = p.vertices();
    flipped.row(flipped.rows() - 1) *= -1.0;
    return Polygon(p.edge_lengths(), std::move(flipped));
}

}  // namespace polyspace
