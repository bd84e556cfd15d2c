#include "polyspace/gram.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "polyspace/errors.hpp"

namespace polyspace {

GramForm gram(const Polygon& p) {
    return GramForm{p.vertices().transpose() * p.vertices()};
}

int gram_rank(const GramForm& g, const ToleranceConfig& tol) {
    if (g.entries.size() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.entries, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw InternalError("eigendecomposition of Gram matrix failed");
    }
    const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
    const double top = ev(ev.size() - 1);
    if (!(top > 0.0)) return 0;
    // Count on the square-root scale so the result matches the rank of
    // the underlying vertex matrix at the same cutoff.
    const double cutoff = tol.eps_rank * std::sqrt(top);
    int rank = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) > 0.0 && std::sqrt(ev(i)) > cutoff) ++rank;
    }
    return rank;
}

bool gram_close(const GramForm& a, const GramForm& b, double eps_gram) {
    if (a.entries.rows() != b.entries.rows() || a.entries.cols() != b.entries.cols()) {
        return false;
    }
    const double scale = std::max({1.0, a.entries.cwiseAbs().maxCoeff(),
                                   b.entries.cwiseAbs().maxCoeff()});
    return (a.entries - b.entries).cwiseAbs().maxCoeff() <= eps_gram * scale;
}

}  // namespace polyspace
