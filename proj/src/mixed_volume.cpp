#include "bkk/mixed_volume.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "bkk/error.hpp"
#include "bkk/planar.hpp"
#include "bkk/subdivision.hpp"

namespace bkk {

const char* method_name(MixedVolumeMethod m) noexcept {
    switch (m) {
        case MixedVolumeMethod::mixed_cells: return "mixed-cells";
        case MixedVolumeMethod::inclusion_exclusion: return "inclusion-exclusion";
        case MixedVolumeMethod::planar_strips: return "planar-strips";
        case MixedVolumeMethod::closed_form: return "closed-form";
    }
    return "unknown";
}

namespace {

void validate_tuple(const std::vector<PointConfiguration>& inputs) {
    if (inputs.empty()) throw PreconditionError("mixed volume needs at least one configuration");
    const std::size_t n = inputs.front().dimension();
    if (inputs.size() != n) throw DimensionError("mixed volume needs n configurations in dimension n");
    for (const auto& a : inputs) {
        if (a.dimension() != n) throw DimensionError("configurations live in different dimensions");
        if (a.empty()) throw PreconditionError("empty configuration");
    }
}

// Endpoints of a one-dimensional part (collinear points sort along the line).
std::pair<Point, Point> segment_endpoints(std::vector<Point> pts) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    return {*lo, *hi};
}

Point sub(const Point& a, const Point& b) {
    Point d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

std::vector<planar::Vec2> vec2s(const PointConfiguration& a) {
    if (a.dimension() != 2) throw DimensionError("planar routine needs two-dimensional configurations");
    std::vector<planar::Vec2> out;
    out.reserve(a.size());
    for (const auto& p : a.points()) out.push_back({p[0], p[1]});
    return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

BigInt abs_det_of_columns(const std::vector<Point>& vectors) {
    const std::size_t n = vectors.size();
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = to_big(vectors[i][j]);
    return abs(determinant(m));
}

}  // namespace

MixedVolumeResult mixed_volume_cells(const std::vector<PointConfiguration>& inputs, std::uint64_t seed) {
    validate_tuple(inputs);
    const auto s = certified_generic_subdivision(inputs, seed);
    MixedVolumeResult out{0, MixedVolumeMethod::mixed_cells, {}, std::vector<CertificateEntry>{}};
    for (const auto& cell : s.cells) {
        if (!cell.is_mixed()) continue;
        std::vector<Point> edge_vectors;
        CertificateEntry entry;
        for (const auto& part : cell.parts) {
            auto [p, q] = segment_endpoints(part);
            edge_vectors.push_back(sub(q, p));
            entry.parts.push_back({p, q});
        }
        entry.contribution = abs_det_of_columns(edge_vectors);
        out.value += entry.contribution;
        out.certificate->push_back(std::move(entry));
    }
    return out;
}

MixedVolumeResult mixed_volume_ie(const std::vector<PointConfiguration>& inputs) {
    validate_tuple(inputs);
    const std::size_t n = inputs.size();
    if (n > 16) throw RangeError("inclusion-exclusion is limited to n <= 16");
    BigInt total = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<PointConfiguration> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1U << i)) subset.push_back(inputs[i]);
        const BigInt vol = normalized_volume(minkowski_sum_points(subset));
        if ((n - subset.size()) % 2 == 0) total += vol;
        else total -= vol;
    }
    // sum of (-1)^{n-|I|} n! vol_E(sum_I) divided by n!
    Rational value(total, factorial(n));
    value.canonicalize();
    if (value.get_den() != 1)
        throw InternalError("inclusion-exclusion mixed volume is not an integer: " + value.get_str());
    return {value.get_num(), MixedVolumeMethod::inclusion_exclusion, {}, std::nullopt};
}

MixedVolumeResult mixed_area_fast(const PointConfiguration& a1, const PointConfiguration& a2,
                                  const MixedAreaObserver& observer, bool with_certificate) {
    using planar::Vec2;
    const auto t0 = std::chrono::steady_clock::now();
    const auto p1 = planar::hull(vec2s(a1));
    const auto p2 = planar::hull(vec2s(a2));
    MixedAreaStats stats;
    stats.hull_ms = ms_since(t0);

    MixedVolumeResult out{0, MixedVolumeMethod::planar_strips, {}, std::nullopt};
    if (with_certificate) out.certificate.emplace();

    if (p1.size() >= 2 && p2.size() >= 2) {
        const auto e1 = planar::edges(p1);
        const auto e2 = planar::edges(p2);
        const Vec2 start = *std::max_element(p2.begin(), p2.end());
        __int128 acc = 0;
        constexpr __int128 flush = static_cast<__int128>(1) << 125;
        for (std::size_t i = 0; i < e1.size(); ++i) {
            const Vec2 e = e1[i];
            const auto it = std::partition_point(e2.begin(), e2.end(), [&](Vec2 f) { return planar::angle_less(f, e); });
            const Vec2 end = p2[static_cast<std::size_t>(it - e2.begin()) % p2.size()];
            __int128 c = planar::cross(e, end - start);
            if (c < 0) c = -c;
            if (c == 0) continue;
            ++stats.strips;
            acc += c;
            if (acc > flush) {
                out.value += to_big(acc);
                acc = 0;
            }
            if (with_certificate) {
                const Vec2 a = p1[i];
                const Vec2 b = p1[(i + 1) % p1.size()];
                out.certificate->push_back({{{{a.x, a.y}, {b.x, b.y}}, {{start.x, start.y}, {end.x, end.y}}}, to_big(c)});
            }
        }
        out.value += to_big(acc);
    }
    stats.total_ms = ms_since(t0);
    if (observer) observer(stats);
    return out;
}

namespace {

std::vector<Point> sorted_vertices(const PointConfiguration& a) {
    auto v = convex_hull(a).vertices;
    std::sort(v.begin(), v.end());
    return v;
}

// Side lengths when Conv(A) is an axis-parallel box with A containing every corner.
std::optional<std::vector<Coord>> box_widths(const PointConfiguration& a) {
    const std::size_t n = a.dimension();
    Point lo = a[0], hi = a[0];
    for (const auto& p : a.points())
        for (std::size_t j = 0; j < n; ++j) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Point corner(n);
        for (std::size_t j = 0; j < n; ++j) corner[j] = (mask >> j) & 1U ? hi[j] : lo[j];
        if (!a.contains(corner)) return std::nullopt;
    }
    std::vector<Coord> widths(n);
    for (std::size_t j = 0; j < n; ++j) widths[j] = hi[j] - lo[j];
    return widths;
}

std::optional<MixedVolumeResult> closed_form(const std::vector<PointConfiguration>& inputs) {
    const std::size_t n = inputs.size();
    const auto first = sorted_vertices(inputs.front());
    bool all_equal = true;
    for (std::size_t i = 1; i < n && all_equal; ++i) all_equal = sorted_vertices(inputs[i]) == first;
    if (all_equal)
        return MixedVolumeResult{normalized_volume(inputs.front()), MixedVolumeMethod::closed_form, "unmixed", std::nullopt};

    std::vector<std::size_t> dims;
    for (const auto& a : inputs) dims.push_back(affine_dimension(a));
    if (std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d <= 1; })) {
        if (std::find(dims.begin(), dims.end(), 0) != dims.end())
            return MixedVolumeResult{0, MixedVolumeMethod::closed_form, "segments", std::nullopt};
        std::vector<Point> vectors;
        for (const auto& a : inputs) {
            auto [p, q] = segment_endpoints(a.points());
            vectors.push_back(sub(q, p));
        }
        return MixedVolumeResult{abs_det_of_columns(vectors), MixedVolumeMethod::closed_form, "segments", std::nullopt};
    }

    if (n <= kMaxPermanentSize) {
        IntegerMatrix widths(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto w = box_widths(inputs[i]);
            if (!w) return std::nullopt;
            for (std::size_t j = 0; j < n; ++j) widths(i, j) = to_big((*w)[j]);
        }
        return MixedVolumeResult{permanent(widths), MixedVolumeMethod::closed_form, "bricks", std::nullopt};
    }
    return std::nullopt;
}

}  // namespace

MixedVolumeResult mixed_volume(const std::vector<PointConfiguration>& inputs, MixedVolumeStrategy strategy,
                               std::uint64_t seed) {
    validate_tuple(inputs);
    switch (strategy) {
        case MixedVolumeStrategy::cells: return mixed_volume_cells(inputs, seed);
        case MixedVolumeStrategy::inclusion_exclusion: return mixed_volume_ie(inputs);
        case MixedVolumeStrategy::planar:
            if (inputs.size() != 2) throw DimensionError("planar strips need exactly two planar configurations");
            return mixed_area_fast(inputs[0], inputs[1], {}, true);
        case MixedVolumeStrategy::automatic: break;
    }
    if (auto r = closed_form(inputs)) return *r;
    if (inputs.size() == 2) return mixed_area_fast(inputs[0], inputs[1], {}, true);
    return mixed_volume_cells(inputs, seed);
}

BigInt permanent(const IntegerMatrix& d) {
    if (!d.square()) throw DimensionError("permanent of a non-square matrix");
    const std::size_t n = d.rows();
    if (n > kMaxPermanentSize) throw RangeError("permanent is limited to 12 x 12");
    // Row-by-row subset recurrence: f[mask] sums products over the first
    // popcount(mask) rows assigned to the columns in mask.
    std::vector<BigInt> f(std::size_t{1} << n, BigInt(0));
    f[0] = 1;
    for (std::size_t mask = 0; mask < f.size(); ++mask) {
        if (f[mask] == 0) continue;
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        if (row == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            mpz_addmul(f[mask | (std::size_t{1} << j)].get_mpz_t(), f[mask].get_mpz_t(), d(row, j).get_mpz_t());
        }
    }
    return f.back();
}

BigInt cornered_spike_formula(const IntegerMatrix& a) {
    if (!a.square()) throw DimensionError("spike matrix must be square");
    const std::size_t n = a.rows();
    if (n > kMaxSpikeSize) throw RangeError("spike formula is limited to 8 x 8");
    for (const auto& x : a.entries())
        if (x < 0) throw PreconditionError("spike lengths must be nonnegative");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    BigInt best = 0;
    do {
        BigInt prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod *= a(i, perm[i]);
        if (prod > best) best = prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<PointConfiguration> spike_simplices(const IntegerMatrix& a) {
    if (!a.square()) throw DimensionError("spike matrix must be square");
    const std::size_t n = a.rows();
    std::vector<PointConfiguration> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Point> pts{Point(n, 0)};
        for (std::size_t j = 0; j < n; ++j) {
            Point p(n, 0);
            p[j] = to_int64(a(i, j));
            pts.push_back(std::move(p));
        }
        out.push_back(PointConfiguration::deduplicated(n, std::move(pts)));
    }
    return out;
}

}  // namespace bkk
