#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "permutovol/errors.hpp"

namespace permutovol {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator; zero is 0/1. Backed by GMP.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    // Accepts "p", "p/q", "-p/q", "+p"; rejects decimals and whitespace.
    static Rational parse(std::string_view text);
    // Exact conversion of a finite double (every finite double is rational).
    static Rational from_double(double x);

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    double to_double() const { return value_.get_d(); }
    // "p" when the denominator is 1, else "p/q".
    std::string str() const;

    Rational pow(unsigned long e) const;
    Rational abs() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    Rational operator-() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace permutovol
