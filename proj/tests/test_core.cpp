#include <doctest.h>

#include <cmath>

#include "polyspace/edge_lengths.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/gram.hpp"
#include "polyspace/linalg.hpp"
#include "polyspace/polygon.hpp"
#include "polyspace/random.hpp"
#include "test_util.hpp"

using namespace polyspace;
using testutil::make_bent_square;
using testutil::make_collinear;
using testutil::make_square;

namespace {

/// Direct transcription of the polygon inequalities, kept independent of
/// classify_feasibility.
FeasibilityClass feasibility_oracle(const std::vector<double>& l) {
    bool border = false;
    for (std::size_t i = 0; i < l.size(); ++i) {
        double rest = 0.0;
        for (std::size_t j = 0; j < l.size(); ++j) {
            if (j != i) rest += l[j];
        }
        if (l[i] > rest) return FeasibilityClass::Infeasible;
        if (l[i] == rest) border = true;
    }
    return border ? FeasibilityClass::Border : FeasibilityClass::Interior;
}

}  // namespace

TEST_CASE("edge lengths validate their invariants") {
    CHECK_THROWS_AS(EdgeLengths({1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(EdgeLengths({1.0, -1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(EdgeLengths({1.0, 0.0, 1.0}), ValidationError);
    EdgeLengths ell({3, 4, 5});
    CHECK(ell.count() == 3);
    CHECK(ell.total() == doctest::Approx(12.0));
    CHECK(ell.max_length() == 5.0);
}

TEST_CASE("feasibility classification matches the stated examples") {
    CHECK(classify_feasibility(EdgeLengths({1, 1, 1, 1})) == FeasibilityClass::Interior);
    CHECK(classify_feasibility(EdgeLengths({2, 1, 1})) == FeasibilityClass::Border);
    CHECK(classify_feasibility(EdgeLengths({5, 1, 1, 1})) == FeasibilityClass::Infeasible);
}

TEST_CASE("feasibility agrees with the direct inequality oracle") {
    Rng rng(2024);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 3 + rng.uniform_below(6);
        std::vector<double> l(n);
        for (auto& x : l) x = 0.05 + 2.0 * rng.uniform01();
        // Force the occasional border/infeasible case.
        const int mode = static_cast<int>(rng.uniform_below(3));
        if (mode == 1) {
            double rest = 0.0;
            for (std::size_t j = 1; j < n; ++j) rest += l[j];
            l[0] = rest;
        } else if (mode == 2) {
            double rest = 0.0;
            for (std::size_t j = 1; j < n; ++j) rest += l[j];
            l[0] = rest * (1.0 + rng.uniform01());
        }
        CHECK(classify_feasibility(EdgeLengths(l)) == feasibility_oracle(l));
    }
}

TEST_CASE("feasibility is scale invariant") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3 + rng.uniform_below(5);
        std::vector<double> l(n);
        for (auto& x : l) x = 0.1 + rng.uniform01();
        const double c = std::exp(4.0 * (rng.uniform01() - 0.5));
        std::vector<double> scaled = l;
        for (auto& x : scaled) x *= c;
        CHECK(classify_feasibility(EdgeLengths(l)) == classify_feasibility(EdgeLengths(scaled)));
    }
}

TEST_CASE("polygon structure is validated") {
    Eigen::MatrixXd v(2, 2);
    v << 1, 1, 0, 1;
    CHECK_THROWS_AS(Polygon(EdgeLengths({1, 1, 1, 1}), v), ValidationError);
    Eigen::MatrixXd one_row(1, 3);
    one_row << 1, 2, 1;
    CHECK_THROWS_AS(Polygon(EdgeLengths({1, 1, 1, 1}), one_row), ValidationError);

    Polygon square = make_square();
    CHECK_NOTHROW(square.validate());
    Eigen::MatrixXd off = square.vertices();
    off(0, 0) += 0.01;
    CHECK_THROWS_AS(Polygon(square.edge_lengths(), off).validate(), ValidationError);
}

TEST_CASE("dimension of the named polygons") {
    CHECK(dimension(make_square()) == 2);
    CHECK(dimension(make_collinear()) == 1);

    const Polygon bent = make_bent_square();
    // Independent oracle: the 3x3 vertex determinant is nonzero.
    const double det = bent.vertices().determinant();
    CHECK(std::abs(det) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(dimension(bent) == 3);
}

TEST_CASE("gram matrices of the named polygons") {
    Eigen::MatrixXd expected_square(3, 3);
    expected_square << 1, 1, 0,
                       1, 2, 1,
                       0, 1, 1;
    CHECK((gram(make_square()).entries - expected_square).cwiseAbs().maxCoeff() < 1e-14);

    Eigen::MatrixXd expected_collinear(3, 3);
    expected_collinear << 1, 2, 1,
                          2, 4, 2,
                          1, 2, 1;
    CHECK((gram(make_collinear()).entries - expected_collinear).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("gram is invariant under rotations, reflection and embedding") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        Polygon p = t % 2 == 0 ? make_bent_square() : make_square(3);
        const GramForm g = gram(p);
        Polygon rotated(p.edge_lengths(), rng.rotation(p.ambient_dim()) * p.vertices());
        CHECK(gram_close(g, gram(rotated), 1e-12));
        CHECK(gram_close(g, gram(reflect(p)), 1e-12));
        CHECK(gram_close(g, gram(embed(p, p.ambient_dim() + 2)), 1e-12));
    }
}

TEST_CASE("gram diagonal satisfies the edge-length identity") {
    const Polygon p = make_bent_square();
    const Eigen::MatrixXd g = gram(p).entries;
    const auto& l = p.edge_lengths();
    for (std::size_t i = 2; i < p.edge_count(); ++i) {
        const auto a = static_cast<Eigen::Index>(i - 1);
        const auto b = static_cast<Eigen::Index>(i - 2);
        CHECK(g(a, a) + g(b, b) - 2 * g(a, b) == doctest::Approx(l[i - 1] * l[i - 1]));
    }
}

TEST_CASE("embed zero-pads and preserves the invariants") {
    const Polygon square = make_square();
    const Polygon lifted = embed(square, 3);
    Eigen::MatrixXd expected(3, 3);
    expected << 1, 1, 0,
                0, 1, 1,
                0, 0, 0;
    CHECK((lifted.vertices() - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK(dimension(lifted) == 2);
    CHECK_THROWS_AS(embed(lifted, 2), ValidationError);
}

TEST_CASE("project_to_span recovers the intrinsic coordinates") {
    const Polygon square5 = make_square(5);
    const Polygon back = project_to_span(square5);
    CHECK(back.ambient_dim() == 2);
    CHECK(gram_close(gram(back), gram(make_square()), 1e-10));

    const Polygon bent6 = embed(make_bent_square(), 6);
    CHECK(project_to_span(bent6).ambient_dim() == 3);

    // Rank-1 spans are padded up to the ambient floor of 2.
    const Polygon line4 = embed(make_collinear(), 4);
    const Polygon floor = project_to_span(line4);
    CHECK(floor.ambient_dim() == 2);
    CHECK_NOTHROW(floor.validate());
}

TEST_CASE("reflect negates the last coordinate and is an involution") {
    const Polygon square = make_square();
    const Polygon mirror = reflect(square);
    Eigen::MatrixXd expected(2, 3);
    expected << 1, 1, 0,
                0, -1, -1;
    CHECK((mirror.vertices() - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK((reflect(mirror).vertices() - square.vertices()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("numerical rank helpers behave at the cutoff") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
    CHECK(linalg::numerical_rank(m, 1e-8) == 0);
    m(0, 0) = 1.0;
    m(1, 1) = 1e-4;
    m(2, 2) = 1e-12;
    CHECK(linalg::numerical_rank(m, 1e-8) == 2);
    CHECK(linalg::span_basis(m, 1e-8).cols() == 2);
}
