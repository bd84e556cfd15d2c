#include "polyspace/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "polyspace/errors.hpp"
#include "polyspace/linalg.hpp"
#include "polyspace/random.hpp"

namespace polyspace::construct {

namespace {

constexpr int kMaxEnumerationEdges = 24;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

/// Sum of central angles on a circle of radius r, each edge seen as a chord.
double angle_sum(const EdgeLengths& ell, double r) {
    double sum = 0.0;
    for (std::size_t i = 0; i < ell.count(); ++i) {
        sum += 2.0 * std::asin(clamp_unit(ell[i] / (2.0 * r)));
    }
    return sum;
}

/// Case B closure function: the longest edge's angle against the rest.
double reflex_gap(const EdgeLengths& ell, double r) {
    double rest = 0.0;
    for (std::size_t i = 0; i < ell.count(); ++i) {
        if (i == ell.max_index()) continue;
        rest += 2.0 * std::asin(clamp_unit(ell[i] / (2.0 * r)));
    }
    const double longest = 2.0 * std::asin(clamp_unit(ell.max_length() / (2.0 * r)));
    return longest - rest;
}

/// Bisects f over [lo, hi]; f(lo) >= 0 > f(hi). Stops at relative width eps_root.
template <typename F>
double bisect(F&& f, double lo, double hi, double eps_root) {
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
        if (f(mid) >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= eps_root * mid) break;
    }
    return 0.5 * (lo + hi);
}

/// Matrix of all vertices except the 1-based index i.
Eigen::MatrixXd others_matrix(const Polygon& p, int index) {
    const auto m = static_cast<Eigen::Index>(p.vertex_count());
    Eigen::MatrixXd out(p.ambient_dim(), m - 1);
    Eigen::Index col = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
        if (j == static_cast<Eigen::Index>(index - 1)) continue;
        out.col(col++) = p.vertices().col(j);
    }
    return out;
}

/// Checks whether vertex i (1-based) qualifies as a bend site.
/// `span_others` is an orthonormal basis of U_i.
std::optional<BendSite> qualify_site(const Polygon& p, int index,
                                     const Eigen::MatrixXd& span_others,
                                     const ToleranceConfig& tol) {
    const Eigen::VectorXd vi = p.vertex(static_cast<std::size_t>(index));
    const double scale = p.edge_lengths().total();

    // v_i must lie in the span of the other vertices.
    const double span_residual = linalg::projection_residual(vi, span_others);
    if (span_residual > tol.eps_rank * vi.norm()) {
        return std::nullopt;
    }

    const Eigen::VectorXd prev = p.vertex(static_cast<std::size_t>(index - 1));
    const Eigen::VectorXd next = p.vertex(static_cast<std::size_t>(index + 1));
    const Eigen::VectorXd chord = next - prev;

    BendSite site;
    site.index = index;
    if (chord.norm() <= tol.eps_rank * scale) {
        // Coincident neighbors: L_i degenerates to a point.
        site.foot = prev;
        site.line_dir = Eigen::VectorXd::Zero(p.ambient_dim());
    } else {
        site.line_dir = chord.normalized();
        site.foot = prev + site.line_dir.dot(vi - prev) * site.line_dir;
    }
    site.radius = (vi - site.foot).norm();
    // ... and off the line through its neighbors.
    if (site.radius <= tol.eps_rank * scale) return std::nullopt;
    return site;
}

Eigen::MatrixXd with_vertex_replaced(const Polygon& p, int index, const Eigen::VectorXd& w) {
    Eigen::MatrixXd vertices = p.vertices();
    vertices.col(static_cast<Eigen::Index>(index - 1)) = w;
    return vertices;
}

/// Unit vector drawn in the orthogonal complement of the given span.
Eigen::VectorXd complement_direction(Rng& rng, const Eigen::MatrixXd& span_basis, int dim) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Eigen::VectorXd g = rng.gaussian_vector(dim);
        if (span_basis.cols() > 0) g -= span_basis * (span_basis.transpose() * g);
        const double norm = g.norm();
        if (norm > 1e-8) return g / norm;
    }
    throw InternalError("failed to draw a direction in the orthogonal complement");
}

struct SitePick {
    BendSite site;
    Eigen::MatrixXd span_others;
};

std::vector<SitePick> qualifying_sites(const Polygon& p, const ToleranceConfig& tol) {
    std::vector<SitePick> picks;
    for (int i = 1; i <= static_cast<int>(p.vertex_count()); ++i) {
        Eigen::MatrixXd basis = linalg::span_basis(others_matrix(p, i), tol.eps_rank);
        if (auto site = qualify_site(p, i, basis, tol)) {
            picks.push_back({std::move(*site), std::move(basis)});
        }
    }
    return picks;
}

Polygon bend_with_basis(const Polygon& p, const BendSite& site,
                        const Eigen::MatrixXd& span_others, const Eigen::VectorXd& u,
                        const ToleranceConfig& tol) {
    if (u.size() != p.ambient_dim()) {
        throw ValidationError("bend direction has wrong dimension");
    }
    if (std::abs(u.norm() - 1.0) > tol.eps_rank) {
        throw ValidationError("bend direction must be a unit vector");
    }
    if (linalg::projection_residual(u, span_others) <= tol.eps_rank) {
        throw ValidationError("bend direction lies in the span of the kept vertices");
    }
    // The edge-preserving step is a right angle at the foot, so u may not
    // lean along the neighbor line.
    if (site.line_dir.size() == u.size() && std::abs(site.line_dir.dot(u)) > tol.eps_rank) {
        throw ValidationError("bend direction must be perpendicular to the neighbor line");
    }
    const Eigen::VectorXd w = site.foot + site.radius * u;
    return Polygon(p.edge_lengths(), with_vertex_replaced(p, site.index, w));
}

}  // namespace

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_) {
        if (s != 1 && s != -1) throw ValidationError("sign pattern entries must be +1 or -1");
    }
}

SignPattern SignPattern::parse(const std::string& text) {
    std::vector<int> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            signs.push_back(1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else {
            throw ValidationError(std::string("invalid sign character '") + c + "'");
        }
    }
    return SignPattern(std::move(signs));
}

std::string SignPattern::str() const {
    std::string out;
    out.reserve(signs_.size());
    for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
    return out;
}

double SignPattern::signed_sum(const EdgeLengths& ell) const {
    if (ell.count() != signs_.size()) {
        throw ValidationError("sign pattern length does not match edge count");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < signs_.size(); ++i) sum += signs_[i] * ell[i];
    return sum;
}

bool SignPattern::valid_for(const EdgeLengths& ell, const ToleranceConfig& tol) const {
    return std::abs(signed_sum(ell)) <= tol.eps_root * ell.total();
}

std::vector<SignPattern> enumerate_degenerate_classes(const EdgeLengths& ell,
                                                      const ToleranceConfig& tol) {
    tol.validate();
    const auto n = ell.count();
    if (n > kMaxEnumerationEdges) {
        throw ValidationError("degenerate enumeration is capped at n = " +
                              std::to_string(kMaxEnumerationEdges) + " edges, got " +
                              std::to_string(n));
    }
    // Fixing the first sign to '+' picks one representative per
    // {pattern, -pattern} pair and halves the search.
    const double bound = tol.eps_root * ell.total();
    std::vector<SignPattern> classes;
    const std::uint64_t combos = 1ULL << (n - 1);
    std::vector<int> signs(n, 1);
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        double sum = ell[0];
        for (std::size_t i = 1; i < n; ++i) {
            signs[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
            sum += signs[i] * ell[i];
        }
        if (std::abs(sum) <= bound) classes.push_back(SignPattern(signs));
    }
    return classes;
}

Polygon build_degenerate(const EdgeLengths& ell, const SignPattern& pattern, int ambient_dim,
                         const ToleranceConfig& tol) {
    tol.validate();
    if (ambient_dim < 2) throw ValidationError("ambient dimension must be at least 2");
    if (!pattern.valid_for(ell, tol)) {
        throw ValidationError("sign pattern " + pattern.str() +
                              " has nonzero signed length sum for " + ell.str());
    }
    Eigen::MatrixXd vertices =
        Eigen::MatrixXd::Zero(ambient_dim, static_cast<Eigen::Index>(ell.count() - 1));
    double position = 0.0;
    for (std::size_t k = 0; k + 1 < ell.count(); ++k) {
        position += pattern[k] * ell[k];
        vertices(0, static_cast<Eigen::Index>(k)) = position;
    }
    return Polygon(ell, std::move(vertices));
}

Polygon build_planar(const EdgeLengths& ell, const ToleranceConfig& tol) {
    tol.validate();
    if (classify_feasibility(ell) != FeasibilityClass::Interior) {
        throw ValidationError("planar construction requires interior edge lengths, got " +
                              std::string(to_string(classify_feasibility(ell))));
    }

    const double r_min = ell.max_length() / 2.0;
    double radius;
    bool center_inside;
    if (angle_sum(ell, r_min) >= kTwoPi) {
        // Case A: circumcenter inside; total central angle decreases in r.
        double hi = ell.total();
        radius = bisect([&](double r) { return angle_sum(ell, r) - kTwoPi; }, r_min, hi,
                        tol.eps_root);
        center_inside = true;
    } else {
        // Case B: circumcenter beyond the longest edge.
        double hi = ell.total();
        int doublings = 0;
        while (reflex_gap(ell, hi) > 0.0) {
            hi *= 2.0;
            if (++doublings > 60) {
                throw InternalError("no circumradius bracket for " + ell.str());
            }
        }
        radius = bisect([&](double r) { return reflex_gap(ell, r); }, r_min, hi, tol.eps_root);
        center_inside = false;
    }

    // Walk the circle. The longest edge turns backwards in case B.
    Eigen::MatrixXd vertices(2, static_cast<Eigen::Index>(ell.count() - 1));
    double angle = 0.0;
    for (std::size_t k = 0; k + 1 < ell.count(); ++k) {
        double theta = 2.0 * std::asin(clamp_unit(ell[k] / (2.0 * radius)));
        if (!center_inside && k == ell.max_index()) theta = -theta;
        angle += theta;
        vertices(0, static_cast<Eigen::Index>(k)) = radius * (std::cos(angle) - 1.0);
        vertices(1, static_cast<Eigen::Index>(k)) = radius * std::sin(angle);
    }

    Polygon p(ell, std::move(vertices));
    if (p.max_edge_error() > tol.eps_align * ell.total()) {
        throw InternalError("planar closure failed for " + ell.str());
    }
    return p;
}

std::vector<BendSite> list_bend_sites(const Polygon& p, const ToleranceConfig& tol) {
    std::vector<BendSite> sites;
    for (auto& pick : qualifying_sites(p, tol)) sites.push_back(std::move(pick.site));
    return sites;
}

BendSite find_bend_site(const Polygon& p, const ToleranceConfig& tol) {
    const int dim_p = dimension(p, tol);
    const int n = static_cast<int>(p.edge_count());
    if (dim_p < 2) {
        throw ValidationError("no bend site: polygon dimension " + std::to_string(dim_p) +
                              " is below 2");
    }
    if (dim_p >= n - 1) {
        throw ValidationError("no bend site: dimension " + std::to_string(dim_p) +
                              " equals n-1, the vertices are independent");
    }
    if (dim_p >= p.ambient_dim()) {
        throw ValidationError("no bend target: dimension " + std::to_string(dim_p) +
                              " already fills the ambient space");
    }
    auto picks = qualifying_sites(p, tol);
    if (picks.empty()) {
        throw InternalError("no bend site found although 2 <= dim < n-1");
    }
    return picks.front().site;
}

Polygon bend(const Polygon& p, const BendSite& site, const Eigen::VectorXd& u,
             const ToleranceConfig& tol) {
    if (site.index < 1 || site.index > static_cast<int>(p.vertex_count())) {
        throw ValidationError("bend site index out of range");
    }
    if (dimension(p, tol) >= p.ambient_dim()) {
        throw ValidationError("no room to bend: dimension equals ambient dimension");
    }
    Eigen::MatrixXd basis = linalg::span_basis(others_matrix(p, site.index), tol.eps_rank);
    return bend_with_basis(p, site, basis, u, tol);
}

Polygon bend_random(const Polygon& p, int index, std::uint64_t seed,
                    const ToleranceConfig& tol) {
    if (dimension(p, tol) >= p.ambient_dim()) {
        throw ValidationError("no room to bend: dimension equals ambient dimension");
    }
    auto picks = qualifying_sites(p, tol);
    if (picks.empty()) {
        // Reuse the precondition diagnostics.
        find_bend_site(p, tol);
        throw InternalError("no bend site found although 2 <= dim < n-1");
    }
    const SitePick* pick = nullptr;
    if (index == 0) {
        pick = &picks.front();
    } else {
        for (const auto& candidate : picks) {
            if (candidate.site.index == index) pick = &candidate;
        }
        if (pick == nullptr) {
            throw ValidationError("vertex " + std::to_string(index) +
                                  " is not a bendable site");
        }
    }
    Rng rng(seed);
    const Eigen::VectorXd u = complement_direction(rng, pick->span_others, p.ambient_dim());
    return bend_with_basis(p, pick->site, pick->span_others, u, tol);
}

Polygon raise_to_dimension(const EdgeLengths& ell, int k, int ambient_dim, std::uint64_t seed,
                           const ToleranceConfig& tol) {
    const int cap = std::min(ambient_dim, static_cast<int>(ell.count()) - 1);
    if (k < 2 || k > cap) {
        throw ValidationError("target dimension " + std::to_string(k) +
                              " outside 2..min(d, n-1) = 2.." + std::to_string(cap));
    }
    Rng rng(seed);
    Polygon p = embed(build_planar(ell, tol), ambient_dim);
    int dim_p = 2;
    while (dim_p < k) {
        auto picks = qualifying_sites(p, tol);
        if (picks.empty()) throw InternalError("bend site vanished while raising dimension");
        const auto& pick = picks.front();
        const Eigen::VectorXd u = complement_direction(rng, pick.span_others, ambient_dim);
        p = bend_with_basis(p, pick.site, pick.span_others, u, tol);
        ++dim_p;
    }
    return p;
}

Polygon sample(const EdgeLengths& ell, int ambient_dim, std::uint64_t seed,
               const ToleranceConfig& tol) {
    if (ambient_dim < 2) throw ValidationError("ambient dimension must be at least 2");
    Rng rng(seed);
    Polygon p = embed(build_planar(ell, tol), ambient_dim);
    const int cap = std::min(ambient_dim, static_cast<int>(ell.count()) - 1);
    int dim_p = 2;
    const int bends = rng.geometric(static_cast<double>(ell.count()));
    for (int b = 0; b < bends && dim_p < cap; ++b) {
        auto picks = qualifying_sites(p, tol);
        if (picks.empty()) break;
        const auto& pick = picks[rng.uniform_below(picks.size())];
        const Eigen::VectorXd u = complement_direction(rng, pick.span_others, ambient_dim);
        p = bend_with_basis(p, pick.site, pick.span_others, u, tol);
        ++dim_p;
    }
    return Polygon(ell, rng.rotation(ambient_dim) * p.vertices());
}

}  // namespace polyspace::construct
