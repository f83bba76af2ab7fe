#pragma once

#include "permutovol/dyck.hpp"
#include "permutovol/ratpoly.hpp"
#include "permutovol/typea.hpp"

namespace permutovol {

// The two flavours of the degree-1 building blocks:
//   gamma:       (1/d) * C(d+1,i) * sum_j c_{d,i,j} x_{j+u}   (rational)
//   gamma_prime: gamma / sqrt(c_{d,i,i})                       (scaled)
enum class GammaForm { gamma, gamma_prime };

enum class VolumeMethod { dyck_sum, recursion };

struct VolumePolynomial {
    int n;
    ScaledPoly value;
    VolumeMethod provenance;
};

ScaledPoly gamma_poly(int d, int i, int u, GammaForm form);

// Product of the gamma polynomials over the north-step labels of the path.
ScaledPoly gamma_path(const DyckPath& path, GammaForm form);

// prod_N c_{d_N, i_N, i_N}; equals 1/(n+1) for every n-path.
Rational path_constant(const DyckPath& path);

std::uint64_t binomial(int n, int k);

// Volume polynomial of the A_n permutohedron as the sum of gamma_prime
// products over all n-Dyck paths. Workers fold disjoint path sub-streams;
// exact arithmetic makes the result independent of the split.
VolumePolynomial volume_dyck(int n, int threads = 1);

// Same polynomial by the pyramid recursion
//   V_m = sum_i gamma_prime(m,i) * V_{i-1} * V_{m-i} shifted by i,
// built bottom-up from V_0 = 1.
VolumePolynomial volume_recursive(int n);

// Face volume V_J: the product over the connected components {1+u,..,d+u}
// of J of V_d shifted by u. Involves only variables indexed by J.
ScaledPoly face_volume(int n, const SimpleSubset& J);

// Numeric pyramid-formula evaluation
//   (1/n) * sum_i C(n+1,i) * (lambda, w_i)/|w_i| * V_{S\{i}}(lambda),
// float-only because the facet norms mix incompatible radicands.
double pyramid_eval(const WeightVector& x);

}  // namespace permutovol
