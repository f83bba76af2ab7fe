#include "permutovol/volume.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

namespace permutovol {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int t = 0; t < std::min(k, n - k); ++t) {
        c = c * static_cast<std::uint64_t>(n - t) / (static_cast<std::uint64_t>(t) + 1);
    }
    return c;
}

ScaledPoly gamma_poly(int d, int i, int u, GammaForm form) {
    if (d < 1 || i < 1 || i > d || u < 0) {
        throw InvalidIndices("gamma requires 1 <= i <= d and u >= 0, got d=" +
                             std::to_string(d) + " i=" + std::to_string(i) +
                             " u=" + std::to_string(u));
    }
    Rational scale = Rational(static_cast<long>(binomial(d + 1, i)), d);
    RationalPoly poly;
    for (int j = 1; j <= d; ++j) {
        poly.add_term(Monomial::var(j + u), scale * inverse_cartan_entry(d, i, j));
    }
    if (form == GammaForm::gamma) return ScaledPoly(std::move(poly));
    // gamma_prime = gamma / sqrt(c) with c = p/q in lowest terms:
    // 1/sqrt(c) = sqrt(p*q)/p.
    Rational c = inverse_cartan_entry(d, i, i);
    mpz_class pq_z = c.numerator() * c.denominator();
    std::uint64_t pq = pq_z.get_ui();
    return ScaledPoly(poly.scaled(Rational(1) / Rational(mpq_class(c.numerator()))), pq);
}

ScaledPoly gamma_path(const DyckPath& path, GammaForm form) {
    ScaledPoly product = ScaledPoly::constant(Rational(1));
    for (const NorthStepLabel& label : north_step_labels(path)) {
        product = product * gamma_poly(label.d, label.i, label.u, form);
    }
    return product;
}

Rational path_constant(const DyckPath& path) {
    Rational c(1);
    for (const NorthStepLabel& label : north_step_labels(path)) {
        c *= inverse_cartan_entry(label.d, label.i, label.i);
    }
    return c;
}

VolumePolynomial volume_dyck(int n, int threads) {
    if (n < 0) throw InvalidArgument("negative rank");
    if (threads < 1) threads = 1;
    if (n == 0) {
        return {0, ScaledPoly::constant(Rational(1)), VolumeMethod::dyck_sum};
    }

    auto fold_stride = [n, threads](int worker) {
        ScaledPoly sum;
        std::uint64_t index = 0;
        for_each_path(n, [&](const DyckPath& path) {
            if (index++ % static_cast<std::uint64_t>(threads) ==
                static_cast<std::uint64_t>(worker)) {
                sum = sum + gamma_path(path, GammaForm::gamma_prime);
            }
        });
        return sum;
    };

    if (threads == 1) {
        return {n, fold_stride(0), VolumeMethod::dyck_sum};
    }

    std::vector<ScaledPoly> partial(static_cast<std::size_t>(threads));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                partial[static_cast<std::size_t>(w)] = fold_stride(w);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    ScaledPoly sum;
    for (const auto& part : partial) sum = sum + part;
    return {n, sum, VolumeMethod::dyck_sum};
}

namespace {

// V_0..V_n by the pyramid recursion; each entry computed once.
std::vector<ScaledPoly> volume_table(int n) {
    std::vector<ScaledPoly> table;
    table.reserve(static_cast<std::size_t>(n) + 1);
    table.push_back(ScaledPoly::constant(Rational(1)));
    for (int m = 1; m <= n; ++m) {
        ScaledPoly sum;
        for (int i = 1; i <= m; ++i) {
            ScaledPoly addend = gamma_poly(m, i, 0, GammaForm::gamma_prime) *
                                table[static_cast<std::size_t>(i - 1)] *
                                table[static_cast<std::size_t>(m - i)].shifted(i);
            sum = sum + addend;
        }
        table.push_back(std::move(sum));
    }
    return table;
}

}  // namespace

VolumePolynomial volume_recursive(int n) {
    if (n < 0) throw InvalidArgument("negative rank");
    return {n, volume_table(n).back(), VolumeMethod::recursion};
}

ScaledPoly face_volume(int n, const SimpleSubset& J) {
    if (J.n != n) throw DimensionMismatch("subset rank differs from n");
    ScaledPoly product = ScaledPoly::constant(Rational(1));
    auto components = connected_components(J);
    if (components.empty()) return product;
    int max_d = 0;
    for (const ComponentInterval& part : components) max_d = std::max(max_d, part.d);
    auto table = volume_table(max_d);
    for (const ComponentInterval& part : components) {
        product = product * table[static_cast<std::size_t>(part.d)].shifted(part.u);
    }
    return product;
}

double pyramid_eval(const WeightVector& x) {
    int n = x.n();
    if (n < 1) throw InvalidArgument("pyramid formula needs n >= 1");
    if (!x.is_dominant()) throw NotDominant("pyramid formula requires a dominant point");

    double total = 0.0;
    for (int i = 1; i <= n; ++i) {
        // (lambda, w_i) = sum_j x_j c_{n,j,i};  |w_i| = sqrt(c_{n,i,i}).
        Rational pairing(0);
        for (int j = 1; j <= n; ++j) {
            pairing += x.x[static_cast<std::size_t>(j - 1)] * inverse_cartan_entry(n, j, i);
        }
        double distance =
            pairing.to_double() / std::sqrt(inverse_cartan_entry(n, i, i).to_double());

        SimpleSubset J = SimpleSubset::full(n);
        J.members.erase(J.members.begin() + (i - 1));
        double facet = face_volume(n, J).evaluate(x.x).to_double();

        total += static_cast<double>(binomial(n + 1, i)) * distance * facet;
    }
    return total / n;
}

}  // namespace permutovol
