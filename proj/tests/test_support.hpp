#pragma once

// Shared fixtures for the test binaries: frozen expected values and small
// random generators with fixed seeds.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "permutovol/ratpoly.hpp"

namespace testsupport {

using permutovol::Monomial;
using permutovol::Rational;
using permutovol::RationalPoly;
using permutovol::ScaledPoly;

inline Rational rq(long num, long den = 1) { return Rational(num, den); }

inline Monomial mono(std::initializer_list<std::pair<int, int>> exps) {
    Monomial m;
    for (const auto& [v, e] : exps) m = m.times(Monomial::var(v, e));
    return m;
}

inline RationalPoly poly(
    std::initializer_list<std::pair<Monomial, Rational>> terms) {
    RationalPoly p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

// Degree-1 polynomial sum c_k * x_k from (index, coefficient) pairs.
inline RationalPoly linear(std::initializer_list<std::pair<int, Rational>> coeffs) {
    RationalPoly p;
    for (const auto& [v, c] : coeffs) p.add_term(Monomial::var(v), c);
    return p;
}

// The volume polynomial of the A_3 permutohedron, all ten terms written
// out.
inline ScaledPoly known_v3() {
    return ScaledPoly(poly({
        {mono({{1, 3}}), rq(1, 3)},
        {mono({{1, 2}, {2, 1}}), rq(2)},
        {mono({{1, 1}, {2, 2}}), rq(4)},
        {mono({{2, 3}}), rq(4, 3)},
        {mono({{1, 2}, {3, 1}}), rq(3)},
        {mono({{1, 1}, {2, 1}, {3, 1}}), rq(12)},
        {mono({{2, 2}, {3, 1}}), rq(4)},
        {mono({{1, 1}, {3, 2}}), rq(3)},
        {mono({{2, 1}, {3, 2}}), rq(2)},
        {mono({{3, 3}}), rq(1, 3)},
    }));
}

inline constexpr const char* kKnownV3Latex =
    "\\tfrac{1}{3}x_1^3 + 2x_1^2x_2 + 4x_1x_2^2 + \\tfrac{4}{3}x_2^3 + 3x_1^2x_3 + "
    "12x_1x_2x_3 + 4x_2^2x_3 + 3x_1x_3^2 + 2x_2x_3^2 + \\tfrac{1}{3}x_3^3";

// V_2 worked out by hand from the two 2-Dyck paths (NNEE and NENE).
inline ScaledPoly known_v2() {
    return ScaledPoly(poly({
                          {mono({{1, 2}}), rq(1, 2)},
                          {mono({{1, 1}, {2, 1}}), rq(2)},
                          {mono({{2, 2}}), rq(1, 2)},
                      }),
                      3);
}

inline Rational random_rational(std::mt19937_64& rng, long lo = -9, long hi = 9,
                                long max_den = 9) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Monomial random_monomial(std::mt19937_64& rng, int max_var, int max_exp) {
    std::uniform_int_distribution<int> pick(0, 1);
    std::uniform_int_distribution<int> exp(1, max_exp);
    Monomial m;
    for (int v = 1; v <= max_var; ++v) {
        if (pick(rng)) m = m.times(Monomial::var(v, exp(rng)));
    }
    return m;
}

inline RationalPoly random_poly(std::mt19937_64& rng, int max_var = 3, int max_terms = 4,
                                int max_exp = 3) {
    std::uniform_int_distribution<int> count(0, max_terms);
    RationalPoly p;
    int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        p.add_term(random_monomial(rng, max_var, max_exp), random_rational(rng));
    }
    return p;
}

}  // namespace testsupport
