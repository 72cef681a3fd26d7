// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "bkk/binomial.hpp"
#include "bkk/error.hpp"
#include "bkk/exact_linear.hpp"
#include "bkk/geometry.hpp"
#include "bkk/io.hpp"
#include "bkk/mixed_volume.hpp"
#include "bkk/planar.hpp"
#include "bkk/root_bounds.hpp"
#include "bkk/subdivision.hpp"
#include "oracles.hpp"

using namespace bkk;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::string data(const std::string& name) { return std::string(BKK_DATA_DIR) + "/" + name; }

std::vector<PointConfiguration> random_tuple(oracle::Rng& rng, std::size_t n, std::size_t max_points, Coord max_coord) {
    std::vector<PointConfiguration> as;
    for (std::size_t i = 0; i < n; ++i)
        as.push_back(oracle::random_configuration(
            rng, n, static_cast<std::size_t>(oracle::uniform(rng, 1, static_cast<Coord>(max_points))), max_coord));
    return as;
}

void twelve_point(Outcome& o) {
    const auto t0 = Clock::now();
    const auto doc = io::parse_system(io::read_file(data("twelve_point_system.json")));
    const BigInt vol = normalized_volume(doc.system[0].support());
    const BigInt bez = bezout_bound(doc.system);
    const BigInt multi = multigraded_bound(doc.system);
    const double s = seconds_since(t0);
    o.detail << "vol=" << vol << " bezout=" << bez << " multigraded=" << multi << " time=" << s << "s";
    o.expect(vol == 321, "volume");
    o.expect(bez == 21952, "bezout");
    o.expect(multi == 6000, "multigraded");
    o.expect(s < 1.0, "runtime");
}

void kushnirenko(Outcome& o) {
    const auto t0 = Clock::now();
    const PointConfiguration a(2, {{0, 0}, {2, 0}, {0, 1}, {7, 5}, {6, 7}});
    const BigInt vol = normalized_volume(a);
    const auto s = induced_subdivision(a, {{1, 0, 0, 0, 1}});
    const double t = seconds_since(t0);
    o.detail << "vol=" << vol << " cells=" << s.cells.size();
    o.expect(vol == 35, "volume");
    std::vector<std::pair<BigVector, BigInt>> got;
    for (const auto& c : s.cells) got.push_back({c.witness, normalized_volume(PointConfiguration(2, c.parts[0]))});
    const std::vector<std::pair<BigVector, BigInt>> expected{{{0, 0, 1}, 15}, {{1, 2, 2}, 2}, {{4, -7, 18}, 18}};
    o.expect(got == expected, "cells");
    o.detail << " time=" << t << "s";
    o.expect(t < 1.0, "runtime");
}

void hermite(Outcome& o) {
    const IntegerMatrix e{{1, 7, 7, 4}, {6, 4, 9, 6}, {2, 3, 2, 6}, {6, 4, 8, 5}};
    const auto f = hermite_factorization(e);
    o.expect(f.H == IntegerMatrix{{1, 0, 0, 62}, {0, 1, 0, 175}, {0, 0, 1, 1}, {0, 0, 0, 215}}, "H");
    o.expect(is_unimodular(f.U) && f.U * e == f.H, "U");
    const auto count = count_torus_roots(e);
    o.expect(count.finite && count.count == 215, "count");

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> mag(0.5, 2.0), arg(-3.14159, 3.14159);
    std::vector<Complex> c;
    for (int i = 0; i < 4; ++i) c.push_back(std::polar(mag(rng), arg(rng)));
    const auto r = enumerate_roots(BinomialSystem(e, c), RootMode::numeric);
    double worst = 0;
    for (const auto& x : r.roots) worst = std::max(worst, binomial_residual(e, c, x));
    double min_gap = 1e300;
    for (std::size_t i = 0; i < r.roots.size(); ++i)
        for (std::size_t j = i + 1; j < r.roots.size(); ++j) {
            double d = 0;
            for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(r.roots[i][k] - r.roots[j][k]));
            min_gap = std::min(min_gap, d);
        }
    o.detail << "roots=" << r.roots.size() << " max_residual=" << worst << " min_separation=" << min_gap;
    o.expect(r.roots.size() == 215, "root count");
    o.expect(worst < 1e-8, "residual");
    o.expect(min_gap > 1e-6, "distinct");
}

void toric(Outcome& o) {
    const auto t = toric_ideal_binomials(PointConfiguration(2, {{0, 0}, {2, 0}, {0, 1}, {7, 5}, {6, 7}}));
    o.detail << "relations=" << t.relations.size() << " h=" << t.degree;
    o.expect(t.degree == 1, "h");
    o.expect(t.relations.size() == 2, "relation count");
    if (t.relations.size() == 2) {
        o.expect(t.relations[0].plus == BigVector{15, 0, 0, 2, 0} && t.relations[0].minus == BigVector{0, 7, 10, 0, 0},
                 "first relation");
        o.expect(t.relations[1].plus == BigVector{9, 0, 0, 0, 1} && t.relations[1].minus == BigVector{0, 3, 7, 0, 0},
                 "second relation");
    }
}

void cross_validation(Outcome& o) {
    const auto t0 = Clock::now();
    oracle::Rng rng(5);
    std::size_t planar_failures = 0, spatial_failures = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto as = random_tuple(rng, 2, 12, 50);
        const BigInt cells = mixed_volume_cells(as, static_cast<std::uint64_t>(t)).value;
        const BigInt ie = mixed_volume_ie(as).value;
        const BigInt fast = mixed_area_fast(as[0], as[1]).value;
        if (cells != ie || fast != ie) ++planar_failures;
    }
    for (int t = 0; t < 100; ++t) {
        const auto as = random_tuple(rng, 3, 6, 5);
        if (mixed_volume_cells(as, static_cast<std::uint64_t>(t)).value != mixed_volume_ie(as).value) ++spatial_failures;
    }
    const double s = seconds_since(t0);
    o.detail << "planar_failures=" << planar_failures << "/1000 spatial_failures=" << spatial_failures << "/100 time=" << s << "s";
    o.expect(planar_failures == 0, "planar");
    o.expect(spatial_failures == 0, "spatial");
    o.expect(s < 60.0, "runtime");
}

void closed_forms(Outcome& o) {
    const PointConfiguration b1(2, {{0, 0}, {2, 0}, {0, 3}, {2, 3}});
    const PointConfiguration b2(2, {{0, 0}, {5, 0}, {0, 7}, {5, 7}});
    const auto boxes = mixed_volume({b1, b2});
    o.expect(boxes.value == 29 && mixed_volume_ie({b1, b2}).value == 29, "boxes");

    const PointConfiguration r1(2, {{0, 0}, {1, 0}, {0, 2}, {1, 2}});
    const PointConfiguration r2(2, {{0, 0}, {3, 0}, {0, 4}, {3, 4}});
    const BigInt perm = permanent(IntegerMatrix{{1, 2}, {3, 4}});
    o.expect(perm == 10 && mixed_volume({r1, r2}).value == 10 && mixed_volume_ie({r1, r2}).value == 10, "bricks");

    const std::vector<PointConfiguration> segs{PointConfiguration(3, {{0, 0, 0}, {2, 1, 0}}),
                                               PointConfiguration(3, {{1, 1, 1}, {1, 4, 2}}),
                                               PointConfiguration(3, {{0, 0, 0}, {1, 1, 5}})};
    const BigInt det = abs(determinant(IntegerMatrix{{2, 1, 0}, {0, 3, 1}, {1, 1, 5}}));
    o.expect(mixed_volume(segs).value == det && mixed_volume_ie(segs).value == det, "segments");

    oracle::Rng rng(6);
    std::size_t mismatches = 0;
    for (int t = 0; t < 50; ++t) {
        IntegerMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = oracle::uniform(rng, 0, 5);
        if (cornered_spike_formula(a) != mixed_volume_ie(spike_simplices(a)).value) {
            if (mismatches == 0) o.detail << "first spike mismatch: " << a << " ";
            ++mismatches;
        }
    }
    o.detail << "boxes=" << boxes.value << " bricks=" << perm << " segments=" << det << " spike_mismatches=" << mismatches << "/50";
    o.expect(mismatches == 0, "spikes");
}

void scaling(Outcome& o) {
    const std::vector<std::size_t> sizes{10000, 20000, 40000, 80000, 100000};
    std::vector<double> medians;
    double slowest = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        const std::size_t n = sizes[k];
        std::vector<double> runs;
        for (std::uint64_t rep = 0; rep < 5; ++rep) {
            auto to_config = [](const std::vector<planar::Vec2>& poly) {
                std::vector<Point> pts;
                pts.reserve(poly.size());
                for (const auto& v : poly) pts.push_back({v.x, v.y});
                return PointConfiguration(2, std::move(pts));
            };
            const auto p = to_config(planar::random_convex_polygon(n, 1000 * k + 2 * rep + 1));
            const auto q = to_config(planar::random_convex_polygon(n, 1000 * k + 2 * rep + 2));
            double total = 0;
            const auto t0 = Clock::now();
            mixed_area_fast(p, q, [&](const MixedAreaStats& s) { total = s.total_ms; });
            slowest = std::max(slowest, seconds_since(t0));
            runs.push_back(total);
        }
        std::nth_element(runs.begin(), runs.begin() + 2, runs.end());
        medians.push_back(runs[2]);
    }
    bool growth_ok = true;
    o.detail << "median_ms:";
    for (std::size_t k = 0; k < sizes.size(); ++k) o.detail << " " << sizes[k] << "=" << medians[k];
    o.detail << " ratios:";
    for (std::size_t k = 1; k < sizes.size(); ++k) {
        const double doublings = std::log2(static_cast<double>(sizes[k]) / static_cast<double>(sizes[k - 1]));
        const double limit = std::pow(2.6, doublings);
        const double ratio = medians[k] / std::max(medians[k - 1], 1e-3);
        o.detail << " " << ratio << "(<=" << limit << ")";
        if (ratio > limit) growth_ok = false;
    }
    o.detail << " slowest=" << slowest << "s";
    o.expect(slowest < 5.0, "per-instance runtime");
    o.expect(growth_ok, "growth");
}

void invariance(Outcome& o) {
    oracle::Rng rng(8);
    const int instances = 200;
    std::size_t fail_translation = 0, fail_unimodular = 0, fail_symmetry = 0, fail_linear = 0;
    for (int t = 0; t < instances; ++t) {
        const std::size_t n = t % 4 == 3 ? 3 : 2;
        const auto as = random_tuple(rng, n, n == 2 ? 9 : 5, n == 2 ? 20 : 4);
        const auto seed = static_cast<std::uint64_t>(t);
        const BigInt m = mixed_volume_ie(as).value;
        auto mv = [&](const std::vector<PointConfiguration>& bs) {
            return n == 2 ? mixed_area_fast(bs[0], bs[1]).value : mixed_volume_cells(bs, seed).value;
        };

        std::vector<PointConfiguration> moved, mapped;
        const auto u = oracle::random_unimodular(rng, n);
        for (const auto& a : as) {
            Point v(n);
            for (auto& x : v) x = oracle::uniform(rng, -40, 40);
            moved.push_back(a.translated(v));
            mapped.push_back(oracle::transform(a, u));
        }
        if (mv(moved) != m || mixed_volume_ie(moved).value != m) ++fail_translation;
        if (mv(mapped) != m || mixed_volume_cells(mapped, seed).value != m) ++fail_unimodular;

        auto perm = as;
        std::shuffle(perm.begin(), perm.end(), rng);
        if (mv(perm) != m || mixed_volume_cells(perm, seed + 1).value != m) ++fail_symmetry;

        const auto extra = oracle::random_configuration(rng, n, static_cast<std::size_t>(oracle::uniform(rng, 1, 5)), 5);
        const std::size_t slot = static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<Coord>(n - 1)));
        auto sum = as, other = as;
        sum[slot] = minkowski_sum_points(as[slot], extra);
        other[slot] = extra;
        if (mv(sum) != m + mixed_volume_ie(other).value) ++fail_linear;
    }
    o.detail << "instances=" << instances << " failures: translation=" << fail_translation << " unimodular=" << fail_unimodular
             << " symmetry=" << fail_symmetry << " multilinearity=" << fail_linear;
    o.expect(fail_translation + fail_unimodular + fail_symmetry + fail_linear == 0, "invariance");
}

void polarization(Outcome& o) {
    oracle::Rng rng(9);
    for (std::size_t n = 2; n <= 3; ++n) {
        // Coefficients derived from the first n instances with independent features.
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        while (rows.size() < n) {
            const auto as = random_tuple(rng, n, 5, 4);
            const auto f = oracle::polarization_features(as);
            rows.emplace_back(f.begin(), f.end());
            rhs.emplace_back(mixed_volume_ie(as).value);
            if (rows.size() == n && !oracle::solve_exact(rows, rhs)) {
                rows.pop_back();
                rhs.pop_back();
            }
        }
        const auto c = *oracle::solve_exact(rows, rhs);
        o.detail << "n=" << n << " coefficients=(";
        for (std::size_t s = 0; s < n; ++s) o.detail << (s ? "," : "") << c[s];
        o.detail << ")";
        for (std::size_t s = 1; s <= n; ++s) {
            Rational expected(((n - s) % 2) ? -1 : 1, factorial(n));
            expected.canonicalize();
            o.expect(c[s - 1] == expected, "coefficient sign/scale");
        }
        std::size_t failures = 0;
        const int instances = 100;
        for (int t = 0; t < instances; ++t) {
            const auto as = random_tuple(rng, n, 5, n == 2 ? 8 : 4);
            const auto f = oracle::polarization_features(as);
            Rational predicted = 0;
            for (std::size_t s = 0; s < n; ++s) predicted += c[s] * f[s];
            if (predicted != Rational(mixed_volume_cells(as, static_cast<std::uint64_t>(t)).value)) ++failures;
        }
        o.detail << " failures=" << failures << "/" << instances << " ";
        o.expect(failures == 0, "reproduction n=" + std::to_string(n));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"twelve-point support bounds", twelve_point},
        {"pentagon subdivision", kushnirenko},
        {"hermite factorization and binomial roots", hermite},
        {"toric relations", toric},
        {"mixed volume cross-validation", cross_validation},
        {"closed forms", closed_forms},
        {"planar strip scaling", scaling},
        {"invariance", invariance},
        {"polarization", polarization},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail.str()
                  << " (" << seconds_since(t0) << "s)" << std::endl;
        if (!o.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
