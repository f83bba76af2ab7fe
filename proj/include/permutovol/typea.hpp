#pragma once

#include <vector>

#include "permutovol/rational.hpp"

namespace permutovol {

// Point of the zero-sum hyperplane E in R^(n+1), exact coordinates.
struct AmbientPoint {
    std::vector<Rational> coords;

    AmbientPoint() = default;
    // Throws NotInHyperplane unless the coordinate sum is exactly zero.
    explicit AmbientPoint(std::vector<Rational> c);

    int n() const { return static_cast<int>(coords.size()) - 1; }

    friend bool operator==(const AmbientPoint& a, const AmbientPoint& b) {
        return a.coords == b.coords;
    }
};

// Coordinates x1..xn in the fundamental-weight basis.
struct WeightVector {
    std::vector<Rational> x;

    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> coords) : x(std::move(coords)) {}

    int n() const { return static_cast<int>(x.size()); }
    bool is_dominant() const;

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.x == b.x;
    }
};

// Subset of the simple-reflection indices {1, ..., n}.
struct SimpleSubset {
    int n = 0;
    std::vector<int> members;  // sorted, unique, each in 1..n

    SimpleSubset() = default;
    SimpleSubset(int rank, std::vector<int> m);

    static SimpleSubset full(int rank);
    static SimpleSubset empty(int rank) { return SimpleSubset(rank, {}); }
};

// A maximal run {1+u, ..., d+u} of consecutive indices.
struct ComponentInterval {
    int d;
    int u;
    friend bool operator==(const ComponentInterval&, const ComponentInterval&) = default;
};

// Entry (i,j) of the inverse Cartan matrix of type A_d:
// min{i,j} - i*j/(d+1). Symmetric and strictly positive.
Rational inverse_cartan_entry(int d, int i, int j);

// Fundamental weight w_i of A_n in ambient coordinates: the first i
// coordinates are 1 - i/(n+1), the remaining n+1-i are -i/(n+1).
AmbientPoint fundamental_weight_ambient(int n, int i);

// Simple root alpha_i = e_i - e_{i+1}.
AmbientPoint simple_root_ambient(int n, int i);

// lambda = sum x_i * w_i.
AmbientPoint to_ambient(const WeightVector& v);

// Inverse of to_ambient: x_i = p_i - p_{i+1}.
WeightVector to_weight_coords(const AmbientPoint& p);

// Coordinates sorted in non-increasing order; the unique dominant point of
// the permutation orbit.
AmbientPoint dominant_representative(const AmbientPoint& p);

// Indices of the simple reflections fixing the (dominant) vector: {i : x_i = 0}.
SimpleSubset stabilizer(const WeightVector& v);

// Maximal runs of consecutive members, left to right.
std::vector<ComponentInterval> connected_components(const SimpleSubset& J);

// Ambient inner product.
Rational inner(const AmbientPoint& a, const AmbientPoint& b);

}  // namespace permutovol
