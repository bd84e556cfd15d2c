#include "polyspace/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "polyspace/errors.hpp"

namespace polyspace {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index * 0xd1342543de82ef95ULL + 1));
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    // Box-Muller, cosine branch only; u1 shifted into (0, 1].
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw InternalError("uniform_below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

int Rng::geometric(double mean) {
    if (!(mean > 0.0)) return 0;
    const double p = 1.0 / (mean + 1.0);
    const double u = 1.0 - uniform01();  // (0, 1]
    // Inverse transform: failures before first success.
    return static_cast<int>(std::floor(std::log(u) / std::log1p(-p)));
}

Eigen::VectorXd Rng::gaussian_vector(int dim) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = gaussian();
    return v;
}

Eigen::MatrixXd Rng::rotation(int dim) {
    Eigen::MatrixXd g(dim, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) g(i, j) = gaussian();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        if (r(i, i) < 0.0) q.col(i) *= -1.0;
    }
    if (q.determinant() < 0.0) q.col(dim - 1) *= -1.0;
    return q;
}

}  // namespace polyspace
