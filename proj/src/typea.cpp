#include "permutovol/typea.hpp"

#include <algorithm>
#include <functional>

namespace permutovol {

AmbientPoint::AmbientPoint(std::vector<Rational> c) : coords(std::move(c)) {
    Rational sum(0);
    for (const auto& v : coords) sum += v;
    if (!sum.is_zero()) {
        throw NotInHyperplane("coordinate sum is " + sum.str() + ", expected 0");
    }
}

bool WeightVector::is_dominant() const {
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() >= 0; });
}

SimpleSubset::SimpleSubset(int rank, std::vector<int> m) : n(rank), members(std::move(m)) {
    if (rank < 0) throw IndexOutOfRange("rank must be non-negative");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int i : members) {
        if (i < 1 || i > n) {
            throw IndexOutOfRange("simple reflection index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(n));
        }
    }
}

SimpleSubset SimpleSubset::full(int rank) {
    std::vector<int> all(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) all[static_cast<std::size_t>(i - 1)] = i;
    return SimpleSubset(rank, std::move(all));
}

Rational inverse_cartan_entry(int d, int i, int j) {
    if (d < 1) throw IndexOutOfRange("rank must be >= 1");
    if (i < 1 || i > d || j < 1 || j > d) {
        throw IndexOutOfRange("(" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside 1.." + std::to_string(d));
    }
    return Rational(std::min(i, j)) - Rational(static_cast<long>(i) * j, d + 1);
}

AmbientPoint fundamental_weight_ambient(int n, int i) {
    if (n < 1) throw IndexOutOfRange("rank must be >= 1");
    if (i < 1 || i > n) {
        throw IndexOutOfRange("weight index " + std::to_string(i) + " outside 1.." +
                              std::to_string(n));
    }
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    Rational high = Rational(1) - Rational(i, n + 1);
    Rational low = Rational(0) - Rational(i, n + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = k < i ? high : low;
    return AmbientPoint(std::move(c));
}

AmbientPoint simple_root_ambient(int n, int i) {
    if (n < 1 || i < 1 || i > n) throw IndexOutOfRange("simple root index outside 1..n");
    std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
    c[static_cast<std::size_t>(i - 1)] = Rational(1);
    c[static_cast<std::size_t>(i)] = Rational(-1);
    return AmbientPoint(std::move(c));
}

AmbientPoint to_ambient(const WeightVector& v) {
    int n = v.n();
    std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
    for (int i = 1; i <= n; ++i) {
        if (v.x[static_cast<std::size_t>(i - 1)].is_zero()) continue;
        AmbientPoint w = fundamental_weight_ambient(n, i);
        for (int k = 0; k <= n; ++k) {
            c[static_cast<std::size_t>(k)] +=
                v.x[static_cast<std::size_t>(i - 1)] * w.coords[static_cast<std::size_t>(k)];
        }
    }
    return AmbientPoint(std::move(c));
}

WeightVector to_weight_coords(const AmbientPoint& p) {
    int n = p.n();
    if (n < 0) throw InvalidArgument("empty ambient point");
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        x[static_cast<std::size_t>(i - 1)] =
            p.coords[static_cast<std::size_t>(i - 1)] - p.coords[static_cast<std::size_t>(i)];
    }
    return WeightVector(std::move(x));
}

AmbientPoint dominant_representative(const AmbientPoint& p) {
    std::vector<Rational> sorted = p.coords;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return AmbientPoint(std::move(sorted));
}

SimpleSubset stabilizer(const WeightVector& v) {
    if (!v.is_dominant()) throw NotDominant("stabilizer requires a dominant vector");
    std::vector<int> zero;
    for (int i = 1; i <= v.n(); ++i) {
        if (v.x[static_cast<std::size_t>(i - 1)].is_zero()) zero.push_back(i);
    }
    return SimpleSubset(v.n(), std::move(zero));
}

std::vector<ComponentInterval> connected_components(const SimpleSubset& J) {
    std::vector<ComponentInterval> out;
    std::size_t i = 0;
    while (i < J.members.size()) {
        std::size_t j = i;
        while (j + 1 < J.members.size() && J.members[j + 1] == J.members[j] + 1) ++j;
        out.push_back({static_cast<int>(j - i + 1), J.members[i] - 1});
        i = j + 1;
    }
    return out;
}

Rational inner(const AmbientPoint& a, const AmbientPoint& b) {
    if (a.coords.size() != b.coords.size()) {
        throw DimensionMismatch("inner product of points in different spaces");
    }
    Rational sum(0);
    for (std::size_t k = 0; k < a.coords.size(); ++k) sum += a.coords[k] * b.coords[k];
    return sum;
}

}  // namespace permutovol
