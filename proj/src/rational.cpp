#include "permutovol/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace permutovol {

Rational::Rational(long num, long den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
    if (value_.get_den() == 0) throw InvalidArgument("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw ParseError("not a rational: '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&] {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail();
        return std::string(text.substr(start, pos - start));
    };
    std::string num = read_digits();
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits();
    }
    if (pos != text.size()) fail();
    mpq_class v(num + "/" + den);
    if (v.get_den() == 0) fail();
    v.canonicalize();
    if (negative) v = -v;
    return Rational(std::move(v));
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw InvalidArgument("non-finite double");
    return Rational(mpq_class(x));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace permutovol
