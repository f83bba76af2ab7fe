#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permutovol/rational.hpp"

namespace permutovol {

// Product of powers of the variables x1, x2, ... (1-based indices).
// Stored as (index, exponent) pairs sorted by index, no zero exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial one() { return {}; }
    static Monomial var(int index, int exponent = 1);

    bool is_one() const { return factors_.empty(); }
    int degree() const;
    int exponent(int index) const;
    // Largest variable index present, 0 for the constant monomial.
    int max_var() const { return factors_.empty() ? 0 : factors_.back().first; }

    Monomial times(const Monomial& other) const;
    Monomial shifted(int u) const;

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<std::pair<int, int>> factors_;
};

// Graded-lexicographic order with x1 > x2 > ...: total degree first, ties
// broken by the exponent vector (e1, e2, ...) compared lexicographically.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_less(b, a);
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: no zero coefficients; term map ordered leading-term-first
// (descending graded-lex), so iteration order is the rendering order.
class RationalPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    RationalPoly() = default;
    static RationalPoly zero() { return {}; }
    static RationalPoly constant(Rational c);
    static RationalPoly variable(int index);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    int degree() const;
    bool is_homogeneous() const;
    int max_var() const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    RationalPoly operator-() const;
    RationalPoly scaled(const Rational& c) const;

    // Substitution x_j -> x_{j+u}.
    RationalPoly shifted(int u) const;
    // Substitution x_i -> x_{n+1-i}; every variable index must be <= n.
    RationalPoly reversed(int n) const;

    // Exact evaluation; the point must cover every variable present.
    Rational evaluate(std::span<const Rational> point) const;

    void add_term(const Monomial& m, const Rational& c);

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.terms_ == b.terms_;
    }

private:
    TermMap terms_;
};

// Squarefree decomposition m = square_root^2 * radicand.
struct SquareSplit {
    std::uint64_t square_root;
    std::uint64_t radicand;
};
SquareSplit split_square(std::uint64_t m);

struct ExactValue {
    Rational rational;
    std::uint64_t radicand;
    double to_double() const;
};

// A rational polynomial times the square root of a squarefree positive
// integer. Canonical: radicand squarefree, and radicand == 1 when the
// polynomial is zero. This is the value type of the volume formulas, where
// the radical carries the sqrt(n+1) normalization.
class ScaledPoly {
public:
    ScaledPoly() : radicand_(1) {}
    // Absorbs the square part of `radicand` into the polynomial.
    explicit ScaledPoly(RationalPoly poly, std::uint64_t radicand = 1);
    static ScaledPoly constant(Rational c) { return ScaledPoly(RationalPoly::constant(std::move(c))); }
    // sqrt(m) as a ScaledPoly, m >= 1.
    static ScaledPoly sqrt_integer(std::uint64_t m);

    const RationalPoly& poly() const { return poly_; }
    std::uint64_t radicand() const { return radicand_; }
    bool is_zero() const { return poly_.is_zero(); }

    // Throws IncompatibleRadicand when both operands are nonzero with
    // different radicands.
    friend ScaledPoly operator+(const ScaledPoly& a, const ScaledPoly& b);
    friend ScaledPoly operator*(const ScaledPoly& a, const ScaledPoly& b);
    ScaledPoly scaled(const Rational& c) const;
    ScaledPoly shifted(int u) const;

    ExactValue evaluate(std::span<const Rational> point) const;

    friend bool operator==(const ScaledPoly& a, const ScaledPoly& b) {
        return a.radicand_ == b.radicand_ && a.poly_ == b.poly_;
    }

private:
    RationalPoly poly_;
    std::uint64_t radicand_;
};

enum class PolyFormat { plain, latex, json };
PolyFormat parse_format(std::string_view name);

// Deterministic rendering, terms in descending graded-lex order.
//   plain: "1/2*x2 + x3", radicand as "sqrt(3)*( ... )"
//   latex: "\tfrac{1}{2}x_2 + x_3", radicand as "\sqrt{3}\left( ... \right)"
//   json:  {"radicand": r, "terms": [{"coeff": "p/q", "exps": {"1": e1}}]}
std::string render(const ScaledPoly& p, PolyFormat format);
std::string render(const RationalPoly& p, PolyFormat format);

// Inverse of the json rendering.
ScaledPoly parse_scaled_poly_json(const std::string& text);

}  // namespace permutovol
