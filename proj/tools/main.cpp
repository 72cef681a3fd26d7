#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bkk/binomial.hpp"
#include "bkk/error.hpp"
#include "bkk/exact_linear.hpp"
#include "bkk/geometry.hpp"
#include "bkk/io.hpp"
#include "bkk/mixed_volume.hpp"
#include "bkk/planar.hpp"
#include "bkk/root_bounds.hpp"
#include "bkk/subdivision.hpp"

namespace {

using bkk::io::Json;

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
};

int exit_code(bkk::ErrorCode c) {
    switch (c) {
        case bkk::ErrorCode::parse: return 2;
        case bkk::ErrorCode::dimension: return 3;
        case bkk::ErrorCode::precondition: return 4;
        case bkk::ErrorCode::range: return 5;
        case bkk::ErrorCode::genericity: return 6;
        case bkk::ErrorCode::internal: return 10;
    }
    return 1;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("BKK_SEED");
    if (!env || !*env) return 0;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw bkk::ParseError("BKK_SEED must be a nonnegative integer");
    }
}

std::string point_str(const bkk::Point& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

std::string vector_str(const bkk::BigVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string points_str(const std::vector<bkk::Point>& pts) {
    std::string s = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + point_str(pts[i]);
    return s + "}";
}

std::string complex_str(bkk::Complex z, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::vector<bkk::PointConfiguration> load_configurations(const std::vector<std::string>& files,
                                                         std::vector<std::optional<std::vector<bkk::Coord>>>* lifts = nullptr) {
    std::vector<bkk::PointConfiguration> out;
    for (const auto& f : files) {
        auto doc = bkk::io::parse_points(bkk::io::read_file(f));
        out.push_back(doc.points);
        if (lifts) lifts->push_back(doc.lifts);
    }
    return out;
}

std::string monomial_str(const bkk::BigVector& e, const std::string& var) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var + std::to_string(i + 1);
        if (e[i] != 1) s += "^" + e[i].get_str();
    }
    return s.empty() ? "1" : s;
}

std::string polynomial_str(const bkk::Polynomial& f, const std::vector<std::string>& names) {
    std::string s;
    for (const auto& [e, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + c.re.get_str() + (c.im == 0 ? "" : (c.im > 0 ? "+" : "") + c.im.get_str() + "i") + ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            s += "*" + names[i];
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

void emit(const Options& opt, const Json& j, const std::string& human) {
    if (opt.json) std::cout << j.dump(2) << "\n";
    else std::cout << human;
}

int cmd_hnf(const Options& opt, const std::string& file) {
    const auto m = bkk::io::parse_matrix(bkk::io::read_file(file));
    const auto f = bkk::hermite_factorization(m);
    std::ostringstream os;
    os << "U = " << f.U << "\nH = " << f.H << "\nrank = " << f.rank << "\npivot product = " << f.pivot_product << "\n";
    Json j{{"U", bkk::io::to_json(f.U)},
           {"H", bkk::io::to_json(f.H)},
           {"rank", f.rank},
           {"pivot_product", bkk::io::to_json(f.pivot_product)},
           {"pivot_columns", f.pivot_columns}};
    emit(opt, j, os.str());
    return 0;
}

int cmd_binomial(const Options& opt, const std::string& action, const std::string& file, int precision) {
    const auto system = bkk::io::parse_binomial(bkk::io::read_file(file));
    const auto count = bkk::count_torus_roots(system.exponents());
    if (action == "count") {
        Json j{{"finite", count.finite}};
        if (count.finite) j["count"] = bkk::io::to_json(count.count);
        emit(opt, j, count.finite ? "torus roots = " + count.count.get_str() + "\n"
                                  : "det E = 0: no roots or infinitely many\n");
        return 0;
    }
    const auto result = bkk::enumerate_roots(system, bkk::RootMode::numeric);
    const auto constants = system.numeric_constants();
    double worst = 0;
    Json roots = Json::array();
    std::ostringstream os;
    os << result.roots.size() << " roots\n";
    for (const auto& r : result.roots) {
        worst = std::max(worst, bkk::binomial_residual(system.exponents(), constants, r));
        Json row = Json::array();
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            row.push_back({r[i].real(), r[i].imag()});
            line += (i ? ", " : "") + complex_str(r[i], precision);
        }
        roots.push_back(std::move(row));
        os << "  (" << line << ")\n";
    }
    os << "max residual = " << std::setprecision(3) << worst << "\n";
    emit(opt, Json{{"count", result.roots.size()}, {"roots", roots}, {"max_residual", worst}}, os.str());
    return 0;
}

int cmd_volume(const Options& opt, const std::string& file) {
    const auto a = bkk::io::parse_points(bkk::io::read_file(file)).points;
    const auto nv = bkk::normalized_volume(a);
    const auto ev = bkk::euclidean_volume(a);
    emit(opt, Json{{"normalized_volume", bkk::io::to_json(nv)}, {"euclidean_volume", bkk::io::to_json(ev)}},
         "normalized volume = " + nv.get_str() + "\neuclidean volume = " + ev.get_str() + "\n");
    return 0;
}

int cmd_subdivide(const Options& opt, const std::vector<std::string>& files, const std::string& lifts_mode,
                  bool mixed_only) {
    std::vector<std::optional<std::vector<bkk::Coord>>> lifts;
    const auto inputs = load_configurations(files, &lifts);
    bkk::MixedSubdivision s;
    if (lifts_mode == "inline") {
        std::vector<bkk::LiftingFunction> fs;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (!lifts[i]) throw bkk::ParseError(files[i] + " has no \"lifts\" field");
            fs.push_back({*lifts[i]});
        }
        s = bkk::induced_mixed_subdivision(inputs, fs);
    } else {
        s = bkk::certified_generic_subdivision(inputs, opt.seed);
    }
    Json cells = Json::array();
    std::ostringstream os;
    bkk::BigInt total_volume = 0, mixed_total = 0;
    std::size_t shown = 0;
    for (const auto& cell : s.cells) {
        std::vector<bkk::PointConfiguration> parts;
        for (const auto& p : cell.parts) parts.emplace_back(inputs.front().dimension(), p);
        const auto volume = bkk::normalized_volume(bkk::minkowski_sum_points(parts));
        total_volume += volume;
        std::optional<bkk::BigInt> contribution;
        if (cell.is_mixed() && inputs.size() == inputs.front().dimension()) {
            contribution = volume / bkk::factorial(inputs.size());
            mixed_total += *contribution;
        }
        if (mixed_only && !contribution) continue;
        ++shown;
        Json c{{"witness", bkk::io::to_json(cell.witness)}, {"type", cell.type}, {"parts", cell.parts},
               {"normalized_volume", bkk::io::to_json(volume)}};
        if (contribution) c["mixed_contribution"] = bkk::io::to_json(*contribution);
        cells.push_back(std::move(c));
        os << "cell witness=" << vector_str(cell.witness) << " type=(";
        for (std::size_t i = 0; i < cell.type.size(); ++i) os << (i ? "," : "") << cell.type[i];
        os << ") volume=" << volume;
        if (contribution) os << " mixed=" << *contribution;
        os << "\n";
        for (const auto& p : cell.parts) os << "  " << points_str(p) << "\n";
    }
    os << shown << " cells, total normalized volume " << total_volume;
    if (inputs.size() == inputs.front().dimension() && inputs.size() > 1) os << ", mixed volume " << mixed_total;
    os << "\n";
    Json lifts_json = Json::array();
    for (const auto& f : s.lifts) lifts_json.push_back(f.values);
    emit(opt, Json{{"cells", cells}, {"lifts", lifts_json}, {"total_normalized_volume", bkk::io::to_json(total_volume)}},
         os.str());
    return 0;
}

}  // namespace

namespace {

bkk::MixedVolumeStrategy parse_strategy(const std::string& m) {
    if (m == "auto") return bkk::MixedVolumeStrategy::automatic;
    if (m == "cells") return bkk::MixedVolumeStrategy::cells;
    if (m == "ie") return bkk::MixedVolumeStrategy::inclusion_exclusion;
    return bkk::MixedVolumeStrategy::planar;
}

int cmd_mixed_volume(const Options& opt, const std::vector<std::string>& files, const std::string& method,
                     bool certificate) {
    const auto inputs = load_configurations(files);
    const auto r = bkk::mixed_volume(inputs, parse_strategy(method), opt.seed);
    std::ostringstream os;
    os << "mixed volume = " << r.value << "\nmethod = " << bkk::method_name(r.method);
    if (!r.closed_form.empty()) os << " (" << r.closed_form << ")";
    os << "\n";
    Json j{{"value", bkk::io::to_json(r.value)}, {"method", bkk::method_name(r.method)}};
    if (!r.closed_form.empty()) j["closed_form"] = r.closed_form;
    if (certificate && r.certificate) {
        Json entries = Json::array();
        for (const auto& e : *r.certificate) {
            entries.push_back({{"parts", e.parts}, {"contribution", bkk::io::to_json(e.contribution)}});
            os << "  ";
            for (const auto& p : e.parts) os << points_str(p) << " ";
            os << "-> " << e.contribution << "\n";
        }
        j["certificate"] = std::move(entries);
    }
    emit(opt, j, os.str());
    return 0;
}

int cmd_init(const Options& opt, const std::string& file, const std::vector<std::string>& weight_text) {
    auto doc = bkk::io::parse_system(bkk::io::read_file(file));
    bkk::BigVector w;
    for (const auto& t : weight_text) w.push_back(bkk::io::parse_integer(Json(t)));
    bkk::io::SystemDocument out{doc.variables, bkk::initial_term_system(doc.system, w)};
    std::ostringstream os;
    for (std::size_t i = 0; i < out.system.size(); ++i)
        os << "f" << i + 1 << " = " << polynomial_str(out.system[i], out.variables) << "\n";
    emit(opt, bkk::io::to_json(out), os.str());
    return 0;
}

int cmd_toric_ideal(const Options& opt, const std::string& file) {
    const auto a = bkk::io::parse_points(bkk::io::read_file(file)).points;
    const auto t = bkk::toric_ideal_binomials(a);
    std::ostringstream os;
    Json rel = Json::array();
    for (const auto& r : t.relations) {
        os << monomial_str(r.plus, "p") << " = " << monomial_str(r.minus, "p") << "\n";
        rel.push_back({{"plus", bkk::io::to_json(r.plus)}, {"minus", bkk::io::to_json(r.minus)}});
    }
    os << "h = " << t.degree << "\nrank = " << t.rank << "\n";
    emit(opt, Json{{"relations", rel}, {"h", bkk::io::to_json(t.degree)}, {"rank", t.rank}}, os.str());
    return 0;
}

int cmd_cayley(const Options& opt, const std::vector<std::string>& files) {
    const auto c = bkk::cayley_configuration(load_configurations(files));
    std::ostringstream os;
    os << "dimension " << c.dimension() << ", " << c.size() << " points\n";
    for (const auto& p : c.points()) os << "  " << point_str(p) << "\n";
    emit(opt, bkk::io::to_json(c), os.str());
    return 0;
}

int cmd_bounds(const Options& opt, const std::string& file) {
    const auto doc = bkk::io::parse_system(bkk::io::read_file(file));
    const auto r = bkk::bound_report(doc.system, opt.seed);
    auto field = [](const std::optional<bkk::BigInt>& v) { return v ? bkk::io::to_json(*v) : Json(nullptr); };
    auto text = [](const std::optional<bkk::BigInt>& v) { return v ? v->get_str() : std::string("n/a (not square)"); };
    std::ostringstream os;
    os << "system: " << r.equations << " equations in " << r.variables << " variables\n"
       << std::left << std::setw(22) << "bezout" << text(r.bezout) << "\n"
       << std::setw(22) << "multigraded" << text(r.multigraded) << "\n"
       << std::setw(22) << "kushnirenko (union)" << r.kushnirenko_union << "\n"
       << std::setw(22) << "bkk" << text(r.bkk) << "\n"
       << std::setw(22) << "components" << r.component_bound << " [" << bkk::branch_name(r.branch) << "]\n";
    emit(opt,
         Json{{"equations", r.equations},
              {"variables", r.variables},
              {"bezout", field(r.bezout)},
              {"multigraded", field(r.multigraded)},
              {"kushnirenko_union", bkk::io::to_json(r.kushnirenko_union)},
              {"bkk", field(r.bkk)},
              {"component_bound", bkk::io::to_json(r.component_bound)},
              {"branch", bkk::branch_name(r.branch)}},
         os.str());
    return 0;
}

int cmd_bench(const Options& opt, const std::vector<std::size_t>& sizes, int repeat) {
    Json rows = Json::array();
    if (!opt.json) std::cout << "N,hull_ms,strips,total_ms\n";
    for (const auto n : sizes) {
        auto to_config = [](const std::vector<bkk::planar::Vec2>& poly) {
            std::vector<bkk::Point> pts;
            for (const auto& v : poly) pts.push_back({v.x, v.y});
            return bkk::PointConfiguration(2, std::move(pts));
        };
        const auto a1 = to_config(bkk::planar::random_convex_polygon(n, opt.seed));
        const auto a2 = to_config(bkk::planar::random_convex_polygon(n, opt.seed + 1));
        std::vector<bkk::MixedAreaStats> runs;
        for (int i = 0; i < std::max(repeat, 1); ++i)
            bkk::mixed_area_fast(a1, a2, [&](const bkk::MixedAreaStats& s) { runs.push_back(s); });
        std::sort(runs.begin(), runs.end(), [](const auto& x, const auto& y) { return x.total_ms < y.total_ms; });
        const auto& m = runs[runs.size() / 2];
        if (opt.json) rows.push_back({{"N", n}, {"hull_ms", m.hull_ms}, {"strips", m.strips}, {"total_ms", m.total_ms}});
        else std::cout << n << "," << m.hull_ms << "," << m.strips << "," << m.total_ms << "\n";
    }
    if (opt.json) std::cout << rows.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sparse polynomial root counting: Hermite factorizations, binomial systems, "
                 "lattice polytopes, mixed subdivisions and mixed volumes."};
    app.require_subcommand(1);
    Options opt;
    std::optional<std::uint64_t> seed;
    app.add_flag("--json", opt.json, "Print machine-readable JSON on stdout");
    app.add_option("--seed", seed, "Random seed (default: $BKK_SEED or 0)");

    std::string file, action = "count", lifts_mode, method = "auto";
    std::vector<std::string> files, weight;
    int precision = 12, repeat = 1;
    bool mixed_only = false, certificate = false;
    std::vector<std::size_t> sizes;

    auto* hnf = app.add_subcommand("hnf", "Hermite factorization U*M = H of an integer matrix");
    hnf->add_option("matrix-file", file)->required()->check(CLI::ExistingFile);

    auto* binomial = app.add_subcommand("binomial", "Count or solve a binomial system");
    binomial->add_option("action", action, "count or solve")->required()->check(CLI::IsMember({"count", "solve"}));
    binomial->add_option("system-file", file)->required()->check(CLI::ExistingFile);
    binomial->add_option("--precision", precision, "Significant digits printed per root coordinate")
        ->check(CLI::Range(1, 30));

    auto* volume = app.add_subcommand("volume", "Normalized and Euclidean volume of a point configuration");
    volume->add_option("points-file", file)->required()->check(CLI::ExistingFile);

    auto* subdivide = app.add_subcommand("subdivide", "Regular (mixed) subdivision induced by a lifting");
    subdivide->add_option("points-files", files)->required()->check(CLI::ExistingFile);
    subdivide->add_option("--lifts", lifts_mode, "Use the \"lifts\" field of each points file")
        ->check(CLI::IsMember({"inline"}));
    subdivide->add_flag("--mixed", mixed_only, "List mixed cells only");

    auto* mixed = app.add_subcommand("mixed-volume", "Mixed volume of n configurations in Z^n");
    mixed->add_option("points-files", files)->required()->check(CLI::ExistingFile);
    mixed->add_option("--method", method)->check(CLI::IsMember({"auto", "cells", "ie", "planar"}));
    mixed->add_flag("--certificate", certificate, "List the summands");

    auto* init = app.add_subcommand("init", "Initial term system for a weight vector");
    init->add_option("system-file", file)->required()->check(CLI::ExistingFile);
    init->add_option("--weight", weight, "Comma-separated integer weights")->required()->delimiter(',');

    auto* toric = app.add_subcommand("toric-ideal", "Binomial relations of the toric variety of a configuration");
    toric->add_option("points-file", file)->required()->check(CLI::ExistingFile);

    auto* cayley = app.add_subcommand("cayley", "Cayley configuration of several point configurations");
    cayley->add_option("points-files", files)->required()->check(CLI::ExistingFile);

    auto* bounds = app.add_subcommand("bounds", "Bezout, multigraded, Kushnirenko, BKK and component bounds");
    bounds->add_option("system-file", file)->required()->check(CLI::ExistingFile);

    auto* bench = app.add_subcommand("bench", "Benchmarks");
    bench->require_subcommand(1);
    auto* bench_area = bench->add_subcommand("mixed-area", "Time planar mixed area on random convex polygons");
    bench_area->add_option("--sizes", sizes, "Comma-separated vertex counts")->required()->delimiter(',');
    bench_area->add_option("--repeat", repeat, "Runs per size; the median is reported")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        opt.seed = seed ? *seed : default_seed();
        if (hnf->parsed()) return cmd_hnf(opt, file);
        if (binomial->parsed()) return cmd_binomial(opt, action, file, precision);
        if (volume->parsed()) return cmd_volume(opt, file);
        if (subdivide->parsed()) return cmd_subdivide(opt, files, lifts_mode, mixed_only);
        if (mixed->parsed()) return cmd_mixed_volume(opt, files, method, certificate);
        if (init->parsed()) return cmd_init(opt, file, weight);
        if (toric->parsed()) return cmd_toric_ideal(opt, file);
        if (cayley->parsed()) return cmd_cayley(opt, files);
        if (bounds->parsed()) return cmd_bounds(opt, file);
        if (bench_area->parsed()) return cmd_bench(opt, sizes, repeat);
    } catch (const bkk::Error& e) {
        if (opt.json)
            std::cerr << Json{{"error", {{"code", bkk::error_code_name(e.code())}, {"message", e.what()}}}}.dump() << "\n";
        else
            std::cerr << "error[" << bkk::error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code(e.code());
    }
    return 1;
}
