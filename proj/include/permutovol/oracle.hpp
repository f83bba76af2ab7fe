#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permutovol/typea.hpp"

namespace permutovol {

// Everything here verifies the volume formulas from the geometry side and
// deliberately never touches the gamma-polynomial pipeline.

struct VertexSet {
    int n;
    std::vector<AmbientPoint> vertices;
};

struct VolumeEstimate {
    double mean;
    double standard_error;
    std::uint64_t samples;
    std::uint64_t seed;
};

struct CheckResult {
    std::string name;
    double expected;
    double observed;
    double tolerance;
    bool pass;
};

struct VerifyReport {
    int n;
    std::vector<Rational> x;
    double formula_value;
    std::vector<CheckResult> checks;
    bool pass;

    std::string to_json() const;
};

// All distinct coordinate permutations of to_ambient(x).
VertexSet orbit_vertices(const WeightVector& x);

// Majorization membership: p lies in the orbit hull of lambda = to_ambient(x)
// iff every top-k partial sum of p's sorted coordinates is bounded by
// lambda's. Exact rational comparisons.
bool contains(const WeightVector& x, const AmbientPoint& p);

// Orthonormal basis of the zero-sum hyperplane, as n vectors with n+1
// double coordinates, built by Gram-Schmidt on the simple roots. Box and
// hull volumes in these coordinates are the induced Euclidean volume.
std::vector<std::vector<double>> orthonormal_basis(int n);

// Shoelace area of the (at most hexagonal) orbit hull, n = 2 only.
double area_2d(const WeightVector& x);

// Hit-or-miss estimate over the bounding box of the vertex set in
// orthonormal coordinates. Deterministic per (seed, samples, threads):
// worker w draws from splitmix64(seed + w).
VolumeEstimate monte_carlo_volume(const WeightVector& x, std::uint64_t samples,
                                  std::uint64_t seed, int threads = 1);

// Runs formula evaluation, the pyramid formula, and the applicable
// geometric oracle (shoelace for n = 2, Monte Carlo otherwise), and
// reports each check with its observed deviation.
VerifyReport verify(const WeightVector& x, std::uint64_t samples, std::uint64_t seed,
                    int threads = 1);

}  // namespace permutovol
