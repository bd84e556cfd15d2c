#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "polyspace/edge_lengths.hpp"
#include "polyspace/polygon.hpp"
#include "polyspace/random.hpp"

namespace polyspace::testutil {

/// The unit square with vertices (1,0), (1,1), (0,1), edge lengths (1,1,1,1).
inline Polygon make_square(int ambient_dim = 2) {
    Eigen::MatrixXd v(2, 3);
    v << 1, 1, 0,
         0, 1, 1;
    Polygon square(EdgeLengths({1, 1, 1, 1}), v);
    return ambient_dim == 2 ? square : embed(square, ambient_dim);
}

/// The square bent along a diagonal: (0.5, 0.5, sqrt(2)/2), (1,1,0), (0,1,0).
inline Polygon make_bent_square() {
    const double z = std::sqrt(2.0) / 2.0;
    Eigen::MatrixXd v(3, 3);
    v << 0.5, 1, 0,
         0.5, 1, 1,
         z,   0, 0;
    return Polygon(EdgeLengths({1, 1, 1, 1}), v);
}

/// Collinear equilateral 4-gon (1,0), (2,0), (1,0).
inline Polygon make_collinear(int ambient_dim = 2) {
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(ambient_dim, 3);
    v(0, 0) = 1;
    v(0, 1) = 2;
    v(0, 2) = 1;
    return Polygon(EdgeLengths({1, 1, 1, 1}), v);
}

/// Deterministic interior edge-length vector with entries in [0.5, 1.5].
inline EdgeLengths random_interior_ell(Rng& rng, std::size_t n) {
    for (;;) {
        std::vector<double> lengths(n);
        for (auto& l : lengths) l = 0.5 + rng.uniform01();
        EdgeLengths ell(std::move(lengths));
        if (classify_feasibility(ell) == FeasibilityClass::Interior) return ell;
    }
}

}  // namespace polyspace::testutil
