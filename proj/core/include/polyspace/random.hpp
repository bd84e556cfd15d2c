#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace polyspace {

/// splitmix64 mix of (seed, index); used to derive independent
/// per-trial sub-seeds so aggregation order never matters.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic random source. All distributions are implemented
/// explicitly on top of mt19937_64 so that a seed pins the output
/// exactly, independent of standard-library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Standard normal via Box-Muller (one value per two uniforms).
    double gaussian();

    /// Uniform integer in [0, bound), bound >= 1.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Geometric count of failures before first success, success
    /// probability 1/(mean+1), so the expected value is `mean`.
    int geometric(double mean);

    Eigen::VectorXd gaussian_vector(int dim);

    /// Haar-distributed rotation in SO(d): QR of a Gaussian matrix with
    /// the R diagonal sign-corrected, then one column flip if needed to
    /// reach determinant +1.
    Eigen::MatrixXd rotation(int dim);

private:
    std::mt19937_64 engine_;
};

}  // namespace polyspace
