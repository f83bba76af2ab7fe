#include "permutovol/ratpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace permutovol {

Monomial Monomial::var(int index, int exponent) {
    if (index < 1) throw IndexOutOfRange("variable index must be >= 1");
    if (exponent < 1) throw InvalidArgument("exponent must be >= 1");
    Monomial m;
    m.factors_.emplace_back(index, exponent);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [_, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(int index) const {
    for (const auto& [v, e] : factors_)
        if (v == index) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

Monomial Monomial::shifted(int u) const {
    if (u < 0) throw InvalidArgument("shift must be non-negative");
    Monomial out;
    out.factors_.reserve(factors_.size());
    for (const auto& [v, e] : factors_) out.factors_.emplace_back(v + u, e);
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: walk the sorted factor lists; the first index where the
    // exponents differ decides, larger exponent on the smaller index wins.
    auto ia = a.factors().begin();
    auto ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first != ib->first) {
            // The monomial owning the smaller index has positive exponent
            // there; the other has zero.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    // Equal prefixes with equal degree: remaining factors on either side
    // would change the degree, so both must be exhausted.
    return false;
}

RationalPoly RationalPoly::constant(Rational c) {
    RationalPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

RationalPoly RationalPoly::variable(int index) {
    RationalPoly p;
    p.terms_.emplace(Monomial::var(index), Rational(1));
    return p;
}

Rational RationalPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int RationalPoly::degree() const {
    // Leading term first means the first key has maximal degree.
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool RationalPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, _] : terms_)
        if (m.degree() != d) return false;
    return true;
}

int RationalPoly::max_var() const {
    int mv = 0;
    for (const auto& [m, _] : terms_) mv = std::max(mv, m.max_var());
    return mv;
}

void RationalPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

RationalPoly RationalPoly::scaled(const Rational& c) const {
    RationalPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

RationalPoly RationalPoly::shifted(int u) const {
    if (u == 0) return *this;
    RationalPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.shifted(u), c);
    return out;
}

RationalPoly RationalPoly::reversed(int n) const {
    if (max_var() > n) throw IndexOutOfRange("variable index exceeds reversal bound");
    RationalPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial image;
        for (const auto& [v, e] : m.factors()) {
            image = image.times(Monomial::var(n + 1 - v, e));
        }
        out.add_term(image, c);
    }
    return out;
}

Rational RationalPoly::evaluate(std::span<const Rational> point) const {
    if (max_var() > static_cast<int>(point.size())) {
        throw MissingVariable("point has " + std::to_string(point.size()) +
                              " coordinates, polynomial uses x" + std::to_string(max_var()));
    }
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [v, e] : m.factors()) {
            term *= point[static_cast<std::size_t>(v - 1)].pow(static_cast<unsigned long>(e));
        }
        sum += term;
    }
    return sum;
}

SquareSplit split_square(std::uint64_t m) {
    if (m == 0) throw InvalidArgument("radicand must be positive");
    std::uint64_t root = 1;
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            root *= p;
        }
    }
    return {root, rest};
}

double ExactValue::to_double() const {
    return rational.to_double() * std::sqrt(static_cast<double>(radicand));
}

ScaledPoly::ScaledPoly(RationalPoly poly, std::uint64_t radicand) : poly_(std::move(poly)) {
    auto [root, rest] = split_square(radicand);
    if (root != 1) poly_ = poly_.scaled(Rational(static_cast<long>(root)));
    radicand_ = poly_.is_zero() ? 1 : rest;
}

ScaledPoly ScaledPoly::sqrt_integer(std::uint64_t m) {
    return ScaledPoly(RationalPoly::constant(Rational(1)), m);
}

ScaledPoly operator+(const ScaledPoly& a, const ScaledPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.radicand_ != b.radicand_) {
        throw IncompatibleRadicand("cannot add sqrt(" + std::to_string(a.radicand_) +
                                   ") and sqrt(" + std::to_string(b.radicand_) + ") terms");
    }
    return ScaledPoly(a.poly_ + b.poly_, a.radicand_);
}

ScaledPoly operator*(const ScaledPoly& a, const ScaledPoly& b) {
    if (b.radicand_ > std::numeric_limits<std::uint64_t>::max() / a.radicand_)
        throw InvalidArgument("radicand overflow");
    return ScaledPoly(a.poly_ * b.poly_, a.radicand_ * b.radicand_);
}

ScaledPoly ScaledPoly::scaled(const Rational& c) const {
    return ScaledPoly(poly_.scaled(c), radicand_);
}

ScaledPoly ScaledPoly::shifted(int u) const {
    return ScaledPoly(poly_.shifted(u), radicand_);
}

ExactValue ScaledPoly::evaluate(std::span<const Rational> point) const {
    return {poly_.evaluate(point), radicand_};
}

}  // namespace permutovol
