#pragma once

#include <Eigen/Dense>

namespace polyspace::linalg {

/// Numerical rank of a matrix: number of singular values above
/// eps_rank * sigma_max. Returns 0 for an all-zero (or empty) matrix.
int numerical_rank(const Eigen::MatrixXd& m, double eps_rank);

/// Singular values of a matrix, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

/// Orthonormal basis of the column span of `m` at the eps_rank cutoff.
/// Returns a rows(m) x rank matrix whose columns are orthonormal.
Eigen::MatrixXd span_basis(const Eigen::MatrixXd& m, double eps_rank);

/// Residual of `v` against the span of the orthonormal columns `basis`:
/// the norm of v minus its orthogonal projection onto the span.
double projection_residual(const Eigen::VectorXd& v, const Eigen::MatrixXd& basis);

}  // namespace polyspace::linalg
