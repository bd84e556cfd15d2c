#include "polyspace/linalg.hpp"

namespace polyspace::linalg {

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return Eigen::VectorXd();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues();
}

int numerical_rank(const Eigen::MatrixXd& m, double eps_rank) {
    Eigen::VectorXd sv = singular_values(m);
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    const double cutoff = eps_rank * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    return rank;
}

Eigen::MatrixXd span_basis(const Eigen::MatrixXd& m, double eps_rank) {
    if (m.size() == 0) return Eigen::MatrixXd(m.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return Eigen::MatrixXd(m.rows(), 0);
    const double cutoff = eps_rank * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

double projection_residual(const Eigen::VectorXd& v, const Eigen::MatrixXd& basis) {
    if (basis.cols() == 0) return v.norm();
    return (v - basis * (basis.transpose() * v)).norm();
}

}  // namespace polyspace::linalg
