#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "permutovol/oracle.hpp"
#include "permutovol/volume.hpp"
#include "test_support.hpp"

using namespace permutovol;
using namespace testsupport;

namespace {

WeightVector weight(std::initializer_list<Rational> coords) {
    return WeightVector(std::vector<Rational>(coords));
}

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("orbit vertices are the distinct coordinate permutations") {
    VertexSet segment = orbit_vertices(weight({rq(1)}));
    REQUIRE(segment.vertices.size() == 2);
    std::set<std::vector<Rational>> coords;
    for (const auto& v : segment.vertices) coords.insert(v.coords);
    CHECK(coords.count({rq(1, 2), rq(-1, 2)}) == 1);
    CHECK(coords.count({rq(-1, 2), rq(1, 2)}) == 1);

    CHECK(orbit_vertices(weight({rq(1), rq(1), rq(1)})).vertices.size() == 24);

    VertexSet tetra = orbit_vertices(weight({rq(1), rq(0), rq(0)}));
    CHECK(tetra.vertices.size() == 4);
    for (const auto& v : tetra.vertices) {
        CHECK(std::count(v.coords.begin(), v.coords.end(), rq(-1, 4)) == 3);
        CHECK(std::count(v.coords.begin(), v.coords.end(), rq(3, 4)) == 1);
    }

    CHECK_THROWS_AS(orbit_vertices(weight({rq(-1), rq(1)})), NotDominant);
}

TEST_CASE("orbit cardinality follows the repeated-coordinate multiplicities") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 5; ++n) {
        for (int t = 0; t < 8; ++t) {
            std::vector<Rational> x;
            for (int i = 0; i < n; ++i) x.push_back(Rational(static_cast<long>(rng() % 3)));
            WeightVector v(x);
            VertexSet vs = orbit_vertices(v);

            std::vector<Rational> coords = to_ambient(v).coords;
            std::sort(coords.begin(), coords.end());
            long denom = 1;
            std::size_t run = 1;
            for (std::size_t k = 1; k <= coords.size(); ++k) {
                if (k < coords.size() && coords[k] == coords[k - 1]) {
                    ++run;
                } else {
                    denom *= factorial(static_cast<int>(run));
                    run = 1;
                }
            }
            CHECK(static_cast<long>(vs.vertices.size()) == factorial(n + 1) / denom);
            if (stabilizer(v).members.empty()) {
                CHECK(static_cast<long>(vs.vertices.size()) == factorial(n + 1));
            }
        }
    }
}

TEST_CASE("majorization membership") {
    WeightVector x = weight({rq(1), rq(1), rq(1)});
    AmbientPoint lambda = to_ambient(x);
    CHECK(contains(x, lambda));
    CHECK(contains(x, AmbientPoint(std::vector<Rational>(4, rq(0)))));
    CHECK_FALSE(contains(x, AmbientPoint({rq(2), rq(0), rq(-1, 2), rq(-3, 2)})));
    CHECK_THROWS_AS(AmbientPoint({rq(1), rq(1), rq(1), rq(1)}), NotInHyperplane);
    CHECK_THROWS_AS(contains(weight({rq(-1), rq(1), rq(1)}), lambda), NotDominant);
}

TEST_CASE("membership sanity: vertices and midpoints in, inflated vertices out") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 4; ++n) {
        std::vector<Rational> coords;
        for (int i = 0; i < n; ++i) coords.push_back(Rational(1 + static_cast<long>(rng() % 3)));
        WeightVector x(coords);  // strictly positive => empty stabilizer
        REQUIRE(stabilizer(x).members.empty());
        VertexSet vs = orbit_vertices(x);
        const Rational inflate(1'000'001, 1'000'000);  // 1 + 1e-6
        for (std::size_t a = 0; a < vs.vertices.size(); ++a) {
            CHECK(contains(x, vs.vertices[a]));
            std::vector<Rational> scaled_coords = vs.vertices[a].coords;
            for (auto& c : scaled_coords) c *= inflate;
            CHECK_FALSE(contains(x, AmbientPoint(std::move(scaled_coords))));
            for (std::size_t b = a + 1; b < vs.vertices.size(); ++b) {
                std::vector<Rational> mid(vs.vertices[a].coords.size());
                for (std::size_t k = 0; k < mid.size(); ++k) {
                    mid[k] = (vs.vertices[a].coords[k] + vs.vertices[b].coords[k]) /
                             rq(2);
                }
                CHECK(contains(x, AmbientPoint(std::move(mid))));
            }
        }
    }
}

TEST_CASE("orthonormal basis of the zero-sum hyperplane") {
    for (int n = 1; n <= 5; ++n) {
        auto basis = orthonormal_basis(n);
        REQUIRE(basis.size() == static_cast<std::size_t>(n));
        for (std::size_t a = 0; a < basis.size(); ++a) {
            double sum = 0.0;
            for (double c : basis[a]) sum += c;
            CHECK(std::abs(sum) < 1e-12);  // inside the hyperplane
            for (std::size_t b = 0; b < basis.size(); ++b) {
                double dot = 0.0;
                for (std::size_t j = 0; j < basis[a].size(); ++j) dot += basis[a][j] * basis[b][j];
                CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("shoelace area agrees with hand values and the formula") {
    CHECK(area_2d(weight({rq(1), rq(1)})) ==
          doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(area_2d(weight({rq(1), rq(0)})) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(area_2d(weight({rq(0), rq(0)})) == 0.0);
    CHECK_THROWS_AS(area_2d(weight({rq(1)})), DimensionMismatch);

    ScaledPoly v2 = volume_recursive(2).value;
    std::mt19937_64 rng(101);
    for (int t = 0; t < 40; ++t) {
        std::vector<Rational> x{random_rational(rng, 0, 10, 9), random_rational(rng, 0, 10, 9)};
        double formula = v2.evaluate(x).to_double();
        double shoelace = area_2d(WeightVector(x));
        CHECK(std::abs(shoelace - formula) <= 1e-9 * std::max(1.0, formula));
    }
}

TEST_CASE("Monte Carlo estimates are seeded and calibrated") {
    WeightVector hexagon = weight({rq(1), rq(1)});
    double target = area_2d(hexagon);
    for (std::uint64_t seed : {7ull, 99ull, 12345ull}) {
        VolumeEstimate est = monte_carlo_volume(hexagon, 20'000, seed);
        CHECK(est.samples == 20'000);
        CHECK(est.seed == seed);
        CHECK(est.standard_error > 0.0);
        CHECK(std::abs(est.mean - target) <= 4.0 * est.standard_error);
        VolumeEstimate again = monte_carlo_volume(hexagon, 20'000, seed);
        CHECK(est.mean == again.mean);
        CHECK(est.standard_error == again.standard_error);
    }

    VolumeEstimate big = monte_carlo_volume(hexagon, 1'000'000, 2024);
    CHECK(std::abs(big.mean - target) <= 4.0 * big.standard_error);

    // n = 1: the hull fills its own bounding box, so the estimate is exact.
    VolumeEstimate segment = monte_carlo_volume(weight({rq(4)}), 1'000, 1);
    CHECK(segment.mean == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(segment.standard_error == 0.0);

    VolumeEstimate degenerate = monte_carlo_volume(weight({rq(0), rq(0)}), 10, 1);
    CHECK(degenerate.mean == 0.0);
    CHECK(degenerate.standard_error == 0.0);

    CHECK_THROWS_AS(monte_carlo_volume(weight({rq(-1), rq(1)}), 10, 1), NotDominant);
}

TEST_CASE("Monte Carlo thread split is deterministic and consistent") {
    WeightVector x = weight({rq(1), rq(1), rq(1)});
    VolumeEstimate a = monte_carlo_volume(x, 30'000, 11, 3);
    VolumeEstimate b = monte_carlo_volume(x, 30'000, 11, 3);
    CHECK(a.mean == b.mean);
    // A different worker count draws different sub-streams but stays in the
    // confidence band.
    VolumeEstimate c = monte_carlo_volume(x, 30'000, 11, 1);
    CHECK(std::abs(a.mean - 32.0) <= 4.0 * a.standard_error + 1e-9);
    CHECK(std::abs(c.mean - 32.0) <= 4.0 * c.standard_error + 1e-9);
}

TEST_CASE("verify report runs every applicable check") {
    VerifyReport hexagon = verify(weight({rq(5), rq(7)}), 20'000, 21);
    CHECK(hexagon.pass);
    bool saw_shoelace = false;
    for (const auto& c : hexagon.checks) {
        CHECK(c.pass);
        if (c.name == "shoelace_vs_formula") saw_shoelace = true;
    }
    CHECK(saw_shoelace);

    VerifyReport cube = verify(weight({rq(1), rq(1), rq(1)}), 50'000, 42);
    CHECK(cube.pass);
    CHECK(cube.formula_value == doctest::Approx(32.0).epsilon(1e-12));
    bool saw_mc = false;
    for (const auto& c : cube.checks) {
        if (c.name == "monte_carlo_vs_formula") saw_mc = true;
    }
    CHECK(saw_mc);

    VerifyReport segment = verify(weight({rq(4)}), 1'000, 1);
    CHECK(segment.pass);
    CHECK(segment.formula_value == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-12));

    auto parsed = nlohmann::json::parse(cube.to_json());
    CHECK(parsed["n"] == 3);
    CHECK(parsed["pass"] == true);
    CHECK(parsed["x"].size() == 3);
    REQUIRE(parsed["checks"].is_array());
    for (const auto& c : parsed["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("observed"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("pass"));
    }
}
