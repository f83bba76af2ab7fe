// Command-line surface over the permutohedron volume library: every
// pipeline stage (paths, labels, gamma polynomials, volume polynomials,
// face volumes, evaluation, geometric verification) is scriptable.
//
// Exit codes: 0 success, 1 computation error, 2 usage error. Nothing is
// written to stdout unless the command succeeds.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "permutovol/dyck.hpp"
#include "permutovol/oracle.hpp"
#include "permutovol/ratpoly.hpp"
#include "permutovol/typea.hpp"
#include "permutovol/volume.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;
constexpr std::uint64_t kDefaultSamples = 1'000'000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<permutovol::Rational> parse_rationals(const std::string& csv) {
    std::vector<permutovol::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(permutovol::Rational::parse(item));
        } catch (const permutovol::Error& e) {
            throw UsageError("--x: " + std::string(e.what()));
        }
    }
    if (out.empty()) throw UsageError("--x: expected comma-separated rationals");
    return out;
}

std::vector<int> parse_indices(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--J: bad index '" + item + "'");
        }
    }
    return out;
}

permutovol::PolyFormat parse_format_flag(const std::string& name) {
    try {
        return permutovol::parse_format(name);
    } catch (const permutovol::Error& e) {
        throw UsageError("--format: " + std::string(e.what()));
    }
}

permutovol::DyckPath parse_path_flag(const std::string& text) {
    try {
        return permutovol::DyckPath::parse(text);
    } catch (const permutovol::Error& e) {
        throw UsageError("--path: " + std::string(e.what()));
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Options {
    int n = 0;
    int d = 0;
    int i = 0;
    int u = 0;
    bool prime = false;
    int threads = 1;
    std::uint64_t samples = kDefaultSamples;
    std::uint64_t seed = kDefaultSeed;
    std::string method = "dyck";
    std::string format = "plain";
    std::string x_csv;
    std::string j_csv;
    bool j_given = false;
    std::string path_text;
};

std::string run_volume(const Options& opt) {
    permutovol::VolumePolynomial v =
        opt.method == "recursive" ? permutovol::volume_recursive(opt.n)
                                  : permutovol::volume_dyck(opt.n, opt.threads);
    return permutovol::render(v.value, parse_format_flag(opt.format)) + "\n";
}

std::string run_gamma(const Options& opt) {
    auto form = opt.prime ? permutovol::GammaForm::gamma_prime : permutovol::GammaForm::gamma;
    auto poly = permutovol::gamma_poly(opt.d, opt.i, opt.u, form);
    return permutovol::render(poly, parse_format_flag(opt.format)) + "\n";
}

std::string run_paths(const Options& opt) {
    auto format = parse_format_flag(opt.format);
    std::string out;
    if (format == permutovol::PolyFormat::json) {
        std::string items;
        permutovol::for_each_path(opt.n, [&](const permutovol::DyckPath& p) {
            if (!items.empty()) items += ",";
            items += "\"" + p.str() + "\"";
        });
        out = "{\"n\":" + std::to_string(opt.n) +
              ",\"count\":" + std::to_string(permutovol::catalan(opt.n)) +
              ",\"paths\":[" + items + "]}\n";
    } else {
        permutovol::for_each_path(opt.n,
                                  [&](const permutovol::DyckPath& p) { out += p.str() + "\n"; });
        if (out.empty()) out = "\n";  // the empty 0-path
    }
    return out;
}

std::string run_labels(const Options& opt) {
    auto path = parse_path_flag(opt.path_text);
    auto labels = permutovol::north_step_labels(path);
    auto format = parse_format_flag(opt.format);
    std::string out;
    if (format == permutovol::PolyFormat::json) {
        out = "[";
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (k) out += ",";
            out += "{\"d\":" + std::to_string(labels[k].d) +
                   ",\"i\":" + std::to_string(labels[k].i) +
                   ",\"u\":" + std::to_string(labels[k].u) + "}";
        }
        out += "]\n";
    } else {
        out = "[";
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (k) out += ",";
            out += "(" + std::to_string(labels[k].d) + "," + std::to_string(labels[k].i) + "," +
                   std::to_string(labels[k].u) + ")";
        }
        out += "]\n";
    }
    return out;
}

std::string run_faces(const Options& opt) {
    std::vector<int> members;
    if (opt.j_given) {
        if (!opt.j_csv.empty()) members = parse_indices(opt.j_csv);
    } else {
        for (int i = 1; i <= opt.n; ++i) members.push_back(i);
    }
    permutovol::SimpleSubset J(opt.n, std::move(members));
    auto poly = permutovol::face_volume(opt.n, J);
    return permutovol::render(poly, parse_format_flag(opt.format)) + "\n";
}

std::string run_eval(const Options& opt) {
    auto x = parse_rationals(opt.x_csv);
    int n = static_cast<int>(x.size());
    permutovol::VolumePolynomial v = opt.method == "dyck"
                                         ? permutovol::volume_dyck(n, opt.threads)
                                         : permutovol::volume_recursive(n);
    permutovol::ExactValue value = v.value.evaluate(x);
    auto format = parse_format_flag(opt.format);
    if (format == permutovol::PolyFormat::json) {
        return "{\"rational\":\"" + value.rational.str() +
               "\",\"radicand\":" + std::to_string(value.radicand) +
               ",\"value\":" + format_double(value.to_double()) + "}\n";
    }
    std::string exact = value.rational.str();
    if (value.radicand != 1) exact += "*sqrt(" + std::to_string(value.radicand) + ")";
    return "exact: " + exact + "\nfloat: " + format_double(value.to_double()) + "\n";
}

std::string run_verify(const Options& opt, bool n_given, int& exit_code) {
    auto coords = parse_rationals(opt.x_csv);
    if (n_given && opt.n != static_cast<int>(coords.size())) {
        throw UsageError("--n disagrees with the length of --x");
    }
    permutovol::WeightVector x(std::move(coords));
    permutovol::VerifyReport report =
        permutovol::verify(x, opt.samples, opt.seed, opt.threads);
    exit_code = report.pass ? 0 : 1;
    return report.to_json() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volume polynomials of type-A permutohedra via Dyck paths"};
    app.require_subcommand(1);

    Options opt;

    auto* volume = app.add_subcommand("volume", "Print the volume polynomial V_n");
    volume->add_option("--n", opt.n, "rank")->required()->check(CLI::NonNegativeNumber);
    volume->add_option("--method", opt.method, "dyck|recursive")
        ->check(CLI::IsMember({"dyck", "recursive"}));
    volume->add_option("--format", opt.format, "plain|latex|json");
    volume->add_option("--threads", opt.threads)->check(CLI::PositiveNumber);

    auto* gamma = app.add_subcommand("gamma", "Print a gamma polynomial");
    gamma->add_option("--d", opt.d, "rank of the block")->required();
    gamma->add_option("--i", opt.i, "row index")->required();
    gamma->add_option("--u", opt.u, "variable shift");
    gamma->add_flag("--prime", opt.prime, "emit gamma' (divided by sqrt(c_{d,i,i}))");
    gamma->add_option("--format", opt.format, "plain|latex|json");

    auto* paths = app.add_subcommand("paths", "Enumerate n-Dyck paths in lex order");
    paths->add_option("--n", opt.n, "path size")->required()->check(CLI::NonNegativeNumber);
    paths->add_option("--format", opt.format, "plain|json");

    auto* labels = app.add_subcommand("labels", "North-step labels (d,i,u) of a path");
    labels->add_option("--path", opt.path_text, "step string over {N,E}")->required();
    labels->add_option("--format", opt.format, "plain|json");

    auto* faces = app.add_subcommand("faces", "Face volume polynomial V_J");
    faces->add_option("--n", opt.n, "rank")->required()->check(CLI::NonNegativeNumber);
    faces->add_option("--J", opt.j_csv, "comma-separated indices (default: all)");
    faces->add_option("--format", opt.format, "plain|latex|json");

    auto* verify = app.add_subcommand("verify", "Cross-check formulas against geometry");
    verify->add_option("--x", opt.x_csv, "comma-separated rationals")->required();
    verify->add_option("--n", opt.n, "rank (must match --x)");
    verify->add_option("--samples", opt.samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed);
    verify->add_option("--threads", opt.threads)->check(CLI::PositiveNumber);

    auto* eval = app.add_subcommand("eval", "Evaluate V_n at a point (n from --x)");
    eval->add_option("--x", opt.x_csv, "comma-separated rationals")->required();
    eval->add_option("--method", opt.method, "dyck|recursive")
        ->check(CLI::IsMember({"dyck", "recursive"}));
    eval->add_option("--format", opt.format, "plain|json");
    eval->add_option("--threads", opt.threads)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return 2;
    }

    std::string out;
    int exit_code = 0;
    try {
        if (volume->parsed()) {
            out = run_volume(opt);
        } else if (gamma->parsed()) {
            out = run_gamma(opt);
        } else if (paths->parsed()) {
            out = run_paths(opt);
        } else if (labels->parsed()) {
            out = run_labels(opt);
        } else if (faces->parsed()) {
            opt.j_given = faces->count("--J") > 0;
            out = run_faces(opt);
        } else if (verify->parsed()) {
            out = run_verify(opt, verify->count("--n") > 0, exit_code);
        } else if (eval->parsed()) {
            out = run_eval(opt);
        }
    } catch (const UsageError& e) {
        std::fputs((std::string(e.what()) + "\n").c_str(), stderr);
        return 2;
    } catch (const permutovol::Error& e) {
        std::fputs((std::string(e.what()) + "\n").c_str(), stderr);
        return 1;
    }

    std::fputs(out.c_str(), stdout);
    return exit_code;
}
