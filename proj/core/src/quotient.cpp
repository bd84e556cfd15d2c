#include "polyspace/quotient.hpp"

#include <string>
#include <vector>

#include "polyspace/errors.hpp"
#include "polyspace/linalg.hpp"

namespace polyspace::quotient {

namespace {

void require_comparable(const Polygon& p, const Polygon& q) {
    if (!(p.edge_lengths() == q.edge_lengths())) {
        throw ValidationError("polygons have different edge lengths");
    }
    if (p.ambient_dim() != q.ambient_dim()) {
        throw ValidationError("polygons live in different ambient dimensions");
    }
}

Eigen::MatrixXd gram_submatrix(const GramForm& g, const std::vector<int>& idx) {
    Eigen::MatrixXd sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = 0; b < idx.size(); ++b) {
            sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                g.entries(idx[a], idx[b]);
        }
    }
    return sub;
}

}  // namespace

std::optional<int> orientation_sign(const Polygon& p, const ToleranceConfig& tol) {
    const int d = p.ambient_dim();
    if (dimension(p, tol) < d) return std::nullopt;

    // Pivot selection sees only the Gram matrix, so any two polygons in
    // the same O(d) orbit pick the same vertex subset.
    const GramForm g = gram(p);
    std::vector<int> pivots;
    for (int i = 0; i < static_cast<int>(p.vertex_count()) &&
                    static_cast<int>(pivots.size()) < d;
         ++i) {
        std::vector<int> candidate = pivots;
        candidate.push_back(i);
        if (gram_rank(GramForm{gram_submatrix(g, candidate)}, tol) >
            static_cast<int>(pivots.size())) {
            pivots = std::move(candidate);
        }
    }
    if (static_cast<int>(pivots.size()) != d) {
        throw InternalError("full-dimensional polygon yielded no vertex basis");
    }

    Eigen::MatrixXd basis(d, d);
    for (int a = 0; a < d; ++a) basis.col(a) = p.vertices().col(pivots[a]);
    return basis.determinant() >= 0.0 ? 1 : -1;
}

bool o_equivalent(const Polygon& p, const Polygon& q, const ToleranceConfig& tol) {
    require_comparable(p, q);
    return gram_close(gram(p), gram(q), tol.eps_gram);
}

bool so_equivalent(const Polygon& p, const Polygon& q, const ToleranceConfig& tol) {
    if (!o_equivalent(p, q, tol)) return false;
    if (dimension(p, tol) < p.ambient_dim()) return true;
    return orientation_sign(p, tol) == orientation_sign(q, tol);
}

AlignResult align(const Polygon& p, const Polygon& q, bool proper_only,
                  const ToleranceConfig& tol) {
    require_comparable(p, q);
    (void)tol;
    const int d = p.ambient_dim();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(q.vertices() * p.vertices().transpose(),
                                          Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXd t = svd.matrixU() * svd.matrixV().transpose();
    if (proper_only && t.determinant() < 0.0) {
        // Flip the least-significant singular direction to stay in SO(d).
        Eigen::VectorXd flip = Eigen::VectorXd::Ones(d);
        flip(d - 1) = -1.0;
        t = svd.matrixU() * flip.asDiagonal() * svd.matrixV().transpose();
    }
    AlignResult result;
    result.residual = (t * p.vertices() - q.vertices()).norm();
    result.transform = std::move(t);
    return result;
}

ModuliPoint moduli_point(const Polygon& p, const ToleranceConfig& tol) {
    ModuliPoint mp{p.edge_lengths(), p.ambient_dim(), gram(p), dimension(p, tol),
                   orientation_sign(p, tol)};
    return mp;
}

ModuliPoint phi(const ModuliPoint& mp) {
    ModuliPoint image = mp;
    image.ambient_dim += 1;
    image.orientation.reset();
    return image;
}

std::vector<ModuliPoint> phi_fiber(const ModuliPoint& image, const ToleranceConfig& tol) {
    (void)tol;
    const int d = image.ambient_dim - 1;
    if (d < 2) {
        throw ValidationError("no moduli space below ambient dimension 2");
    }
    if (image.rank > d) return {};
    ModuliPoint base = image;
    base.ambient_dim = d;
    if (image.rank == d) {
        ModuliPoint plus = base;
        plus.orientation = 1;
        ModuliPoint minus = base;
        minus.orientation = -1;
        return {plus, minus};
    }
    base.orientation.reset();
    return {base};
}

bool equal(const ModuliPoint& a, const ModuliPoint& b, const ToleranceConfig& tol) {
    if (!(a.edge_lengths == b.edge_lengths)) {
        throw ValidationError("moduli points have different edge lengths");
    }
    if (a.ambient_dim != b.ambient_dim) {
        throw ValidationError("moduli points live in different ambient dimensions");
    }
    return a.rank == b.rank && a.orientation == b.orientation &&
           gram_close(a.gram, b.gram, tol.eps_gram);
}

}  // namespace polyspace::quotient
