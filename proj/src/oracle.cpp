#include "permutovol/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>
#include <utility>

#include "permutovol/volume.hpp"

namespace permutovol {

namespace {

// Non-increasing prefix sums of the coordinates, the exact data the
// majorization test compares against.
std::vector<Rational> sorted_prefix_sums(const std::vector<Rational>& coords) {
    std::vector<Rational> sorted = coords;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<Rational> prefix(sorted.size());
    Rational run(0);
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        run += sorted[k];
        prefix[k] = run;
    }
    return prefix;
}

bool majorized_by(const std::vector<Rational>& lambda_prefix,
                  const std::vector<Rational>& coords) {
    std::vector<Rational> prefix = sorted_prefix_sums(coords);
    for (std::size_t k = 0; k + 1 < prefix.size(); ++k) {
        if (prefix[k] > lambda_prefix[k]) return false;
    }
    return true;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform double in [0,1) from the top 53 bits; portable across platforms.
double next_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> ambient_to_basis(const AmbientPoint& p,
                                     const std::vector<std::vector<double>>& basis) {
    std::vector<double> out(basis.size(), 0.0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        double dot = 0.0;
        for (std::size_t j = 0; j < p.coords.size(); ++j) {
            dot += p.coords[j].to_double() * basis[k][j];
        }
        out[k] = dot;
    }
    return out;
}

// Exact zero-sum point closest to the sampled double coordinates: each
// coordinate is rationalized exactly, then the mean is subtracted.
AmbientPoint rationalize_to_hyperplane(const std::vector<double>& coords) {
    std::vector<Rational> exact(coords.size());
    Rational sum(0);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        exact[j] = Rational::from_double(coords[j]);
        sum += exact[j];
    }
    Rational mean = sum / Rational(static_cast<long>(coords.size()));
    for (auto& c : exact) c -= mean;
    return AmbientPoint(std::move(exact));
}

}  // namespace

VertexSet orbit_vertices(const WeightVector& x) {
    if (!x.is_dominant()) throw NotDominant("orbit requires a dominant vector");
    std::vector<Rational> coords = to_ambient(x).coords;
    std::sort(coords.begin(), coords.end());
    VertexSet out{x.n(), {}};
    do {
        out.vertices.push_back(AmbientPoint(coords));
    } while (std::next_permutation(coords.begin(), coords.end()));
    return out;
}

bool contains(const WeightVector& x, const AmbientPoint& p) {
    if (!x.is_dominant()) throw NotDominant("membership test requires a dominant vector");
    AmbientPoint lambda = to_ambient(x);
    if (p.coords.size() != lambda.coords.size()) {
        throw DimensionMismatch("point dimension differs from the hull's");
    }
    return majorized_by(sorted_prefix_sums(lambda.coords), p.coords);
}

std::vector<std::vector<double>> orthonormal_basis(int n) {
    if (n < 1) throw InvalidArgument("basis needs n >= 1");
    std::vector<std::vector<double>> basis;
    basis.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        // Gram-Schmidt over the simple roots e_i - e_{i+1}.
        std::vector<double> v(static_cast<std::size_t>(n + 1), 0.0);
        v[static_cast<std::size_t>(i - 1)] = 1.0;
        v[static_cast<std::size_t>(i)] = -1.0;
        for (const auto& b : basis) {
            double dot = 0.0;
            for (std::size_t j = 0; j < v.size(); ++j) dot += v[j] * b[j];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= dot * b[j];
        }
        double norm = 0.0;
        for (double c : v) norm += c * c;
        norm = std::sqrt(norm);
        for (double& c : v) c /= norm;
        basis.push_back(std::move(v));
    }
    return basis;
}

double area_2d(const WeightVector& x) {
    if (x.n() != 2) throw DimensionMismatch("shoelace oracle is 2-dimensional only");
    VertexSet vs = orbit_vertices(x);
    if (vs.vertices.size() < 3) return 0.0;

    auto basis = orthonormal_basis(2);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(vs.vertices.size());
    for (const auto& v : vs.vertices) {
        auto c = ambient_to_basis(v, basis);
        pts.emplace_back(c[0], c[1]);
    }
    // The orbit centroid is the origin, so angular order about it walks the
    // convex polygon boundary.
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return std::atan2(a.second, a.first) < std::atan2(b.second, b.first);
    });
    double twice_area = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& [ax, ay] = pts[i];
        const auto& [bx, by] = pts[(i + 1) % pts.size()];
        twice_area += ax * by - bx * ay;
    }
    return std::abs(twice_area) / 2.0;
}

VolumeEstimate monte_carlo_volume(const WeightVector& x, std::uint64_t samples,
                                  std::uint64_t seed, int threads) {
    if (!x.is_dominant()) throw NotDominant("Monte Carlo requires a dominant vector");
    int n = x.n();
    if (n < 1) throw InvalidArgument("Monte Carlo needs n >= 1");
    if (samples == 0) throw InvalidArgument("need at least one sample");
    if (threads < 1) threads = 1;

    VertexSet vs = orbit_vertices(x);
    auto basis = orthonormal_basis(n);
    std::vector<double> lo(static_cast<std::size_t>(n), 0.0);
    std::vector<double> hi(static_cast<std::size_t>(n), 0.0);
    bool first = true;
    for (const auto& v : vs.vertices) {
        auto c = ambient_to_basis(v, basis);
        for (std::size_t k = 0; k < c.size(); ++k) {
            lo[k] = first ? c[k] : std::min(lo[k], c[k]);
            hi[k] = first ? c[k] : std::max(hi[k], c[k]);
        }
        first = false;
    }
    double box_volume = 1.0;
    for (std::size_t k = 0; k < lo.size(); ++k) box_volume *= hi[k] - lo[k];
    if (box_volume <= 0.0) {
        return {0.0, 0.0, samples, seed};
    }

    std::vector<Rational> lambda_prefix = sorted_prefix_sums(to_ambient(x).coords);

    auto count_hits = [&](int worker, std::uint64_t count) {
        std::mt19937_64 rng(splitmix64(seed + static_cast<std::uint64_t>(worker)));
        std::vector<double> point(static_cast<std::size_t>(n + 1));
        std::uint64_t hits = 0;
        for (std::uint64_t s = 0; s < count; ++s) {
            std::fill(point.begin(), point.end(), 0.0);
            for (std::size_t k = 0; k < lo.size(); ++k) {
                double t = lo[k] + (hi[k] - lo[k]) * next_double(rng);
                for (std::size_t j = 0; j < point.size(); ++j) point[j] += t * basis[k][j];
            }
            AmbientPoint p = rationalize_to_hyperplane(point);
            if (majorized_by(lambda_prefix, p.coords)) ++hits;
        }
        return hits;
    };

    std::uint64_t hits = 0;
    if (threads == 1) {
        hits = count_hits(0, samples);
    } else {
        std::uint64_t base = samples / static_cast<std::uint64_t>(threads);
        std::uint64_t rem = samples % static_cast<std::uint64_t>(threads);
        std::vector<std::uint64_t> partial(static_cast<std::size_t>(threads), 0);
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) {
            std::uint64_t count = base + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
            pool.emplace_back([&, w, count] {
                try {
                    partial[static_cast<std::size_t>(w)] = count_hits(w, count);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        for (std::uint64_t h : partial) hits += h;
    }

    double fraction = static_cast<double>(hits) / static_cast<double>(samples);
    double mean = box_volume * fraction;
    double se = box_volume * std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(samples));
    return {mean, se, samples, seed};
}

VerifyReport verify(const WeightVector& x, std::uint64_t samples, std::uint64_t seed,
                    int threads) {
    if (!x.is_dominant()) throw NotDominant("verification requires a dominant point");
    int n = x.n();
    if (n < 1) throw InvalidArgument("verification needs n >= 1");

    VerifyReport report;
    report.n = n;
    report.x = x.x;

    ScaledPoly volume = volume_recursive(n).value;
    double formula = volume.evaluate(x.x).to_double();
    report.formula_value = formula;
    double scale = std::max(1.0, std::abs(formula));

    auto add_check = [&](std::string name, double expected, double observed, double tolerance) {
        bool pass = std::abs(observed - expected) <= tolerance;
        report.checks.push_back({std::move(name), expected, observed, tolerance, pass});
    };

    if (n <= 8) {
        bool equal = volume_dyck(n, threads).value == volume;
        add_check("dyck_vs_recursive", 1.0, equal ? 1.0 : 0.0, 0.0);
    }

    add_check("pyramid_vs_formula", formula, pyramid_eval(x), 1e-9 * scale);

    if (n == 2) {
        add_check("shoelace_vs_formula", formula, area_2d(x), 1e-9 * scale);
    } else {
        VolumeEstimate mc = monte_carlo_volume(x, samples, seed, threads);
        // 4-sigma band, widened by a relative epsilon for the degenerate
        // n = 1 case where every sample hits and the binomial error is 0.
        add_check("monte_carlo_vs_formula", formula, mc.mean,
                  4.0 * mc.standard_error + 1e-9 * scale);
    }

    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.pass; });
    return report;
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    auto coords = nlohmann::ordered_json::array();
    for (const auto& c : x) coords.push_back(c.str());
    j["x"] = std::move(coords);
    j["formula_value"] = formula_value;
    auto list = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["observed"] = c.observed;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        list.push_back(std::move(jc));
    }
    j["checks"] = std::move(list);
    j["pass"] = pass;
    return j.dump();
}

}  // namespace permutovol
