#include <json.hpp>

#include <sstream>
#include <string>

#include "permutovol/ratpoly.hpp"

namespace permutovol {

namespace {

std::string plain_monomial(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string latex_monomial(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        out += "x_";
        out += v < 10 ? std::to_string(v) : "{" + std::to_string(v) + "}";
        if (e > 1) {
            out += "^";
            out += e < 10 ? std::to_string(e) : "{" + std::to_string(e) + "}";
        }
    }
    return out;
}

std::string latex_coeff(const Rational& c) {
    if (c.denominator() == 1) return c.numerator().get_str();
    std::string sign = c.sign() < 0 ? "-" : "";
    return sign + "\\tfrac{" + c.abs().numerator().get_str() + "}{" +
           c.denominator().get_str() + "}";
}

std::string poly_body(const RationalPoly& p, PolyFormat format) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = (a == Rational(1));
        if (format == PolyFormat::plain) {
            if (m.is_one()) {
                out += a.str();
            } else if (unit) {
                out += plain_monomial(m);
            } else {
                out += a.str() + "*" + plain_monomial(m);
            }
        } else {
            if (m.is_one()) {
                out += latex_coeff(a);
            } else if (unit) {
                out += latex_monomial(m);
            } else {
                out += latex_coeff(a) + latex_monomial(m);
            }
        }
    }
    return out;
}

nlohmann::ordered_json scaled_to_json(const ScaledPoly& p) {
    nlohmann::ordered_json j;
    j["radicand"] = p.radicand();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.poly().terms()) {
        nlohmann::ordered_json t;
        t["coeff"] = c.str();
        auto exps = nlohmann::ordered_json::object();
        for (const auto& [v, e] : m.factors()) exps[std::to_string(v)] = e;
        t["exps"] = exps;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace

PolyFormat parse_format(std::string_view name) {
    if (name == "plain") return PolyFormat::plain;
    if (name == "latex") return PolyFormat::latex;
    if (name == "json") return PolyFormat::json;
    throw ParseError("unknown format '" + std::string(name) + "'");
}

std::string render(const ScaledPoly& p, PolyFormat format) {
    if (format == PolyFormat::json) return scaled_to_json(p).dump();
    std::string body = poly_body(p.poly(), format);
    if (p.radicand() == 1) return body;
    bool wrap = p.poly().term_count() > 1;
    if (format == PolyFormat::plain) {
        std::string r = "sqrt(" + std::to_string(p.radicand()) + ")*";
        return wrap ? r + "(" + body + ")" : r + body;
    }
    std::string r = "\\sqrt{" + std::to_string(p.radicand()) + "}";
    return wrap ? r + "\\left(" + body + "\\right)" : r + body;
}

std::string render(const RationalPoly& p, PolyFormat format) {
    return render(ScaledPoly(p), format);
}

ScaledPoly parse_scaled_poly_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polynomial json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial json needs a 'terms' array");
    std::uint64_t radicand = j.value("radicand", std::uint64_t{1});
    RationalPoly poly;
    for (const auto& t : j["terms"]) {
        if (!t.contains("coeff")) throw ParseError("term without 'coeff'");
        Rational c = Rational::parse(t["coeff"].get<std::string>());
        Monomial m;
        if (t.contains("exps")) {
            for (const auto& [key, val] : t["exps"].items()) {
                int v = 0;
                try {
                    v = std::stoi(key);
                } catch (const std::exception&) {
                    throw ParseError("bad variable index '" + key + "'");
                }
                m = m.times(Monomial::var(v, val.get<int>()));
            }
        }
        poly.add_term(m, c);
    }
    return ScaledPoly(std::move(poly), radicand);
}

}  // namespace permutovol
