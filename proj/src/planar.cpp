#include "bkk/planar.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "bkk/error.hpp"

namespace bkk::planar {

void check_range(std::span<const Vec2> pts) {
    for (const auto& p : pts) {
        if (p.x >= kCoordinateLimit || p.x <= -kCoordinateLimit || p.y >= kCoordinateLimit ||
            p.y <= -kCoordinateLimit)
            throw RangeError("planar coordinate exceeds 2^61 in absolute value");
    }
}

namespace {

// 0 for directions in (-pi/2, pi/2], 1 for (pi/2, 3pi/2].
int half(Vec2 v) { return (v.x > 0 || (v.x == 0 && v.y > 0)) ? 0 : 1; }

}  // namespace

bool angle_less(Vec2 a, Vec2 b) {
    const int ha = half(a);
    const int hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

std::vector<Vec2> hull(std::vector<Vec2> pts) {
    check_range(pts);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    std::vector<Vec2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        const Vec2 p = pts[i];
        while (k >= lower && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
        h[k++] = p;
    }
    h.resize(k - 1);
    return h;
}

std::vector<Vec2> edges(const std::vector<Vec2>& polygon) {
    std::vector<Vec2> e;
    if (polygon.size() < 2) return e;
    e.reserve(polygon.size());
    for (std::size_t i = 0; i < polygon.size(); ++i) e.push_back(polygon[(i + 1) % polygon.size()] - polygon[i]);
    return e;
}

std::vector<Vec2> minkowski(const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
    if (p.empty() || q.empty()) return {};
    const auto ep = edges(p);
    const auto eq = edges(q);
    std::vector<Vec2> out;
    out.reserve(p.size() + q.size());
    Vec2 cur = p.front() + q.front();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ep.size() || j < eq.size()) {
        out.push_back(cur);
        Vec2 step;
        if (j == eq.size() || (i < ep.size() && angle_less(ep[i], eq[j]))) {
            step = ep[i++];
        } else if (i == ep.size() || angle_less(eq[j], ep[i])) {
            step = eq[j++];
        } else {
            step = ep[i++] + eq[j++];
        }
        cur = cur + step;
    }
    if (out.empty()) out.push_back(cur);
    check_range(out);
    return out;
}

std::vector<Vec2> random_convex_polygon(std::size_t vertices, std::uint64_t seed, std::int64_t max_step) {
    if (vertices < 3) throw PreconditionError("a polygon needs at least three vertices");
    if (max_step < 1) throw PreconditionError("max_step must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-max_step, max_step);
    auto direction = [](Vec2 v) {
        const std::int64_t g = std::gcd(v.x, v.y);
        return Vec2{v.x / g, v.y / g};
    };
    for (;;) {
        std::set<Vec2> seen;
        std::vector<Vec2> steps;
        Vec2 sum{};
        while (steps.size() + 1 < vertices) {
            Vec2 v{dist(rng), dist(rng)};
            if (v == Vec2{} || std::gcd(v.x, v.y) != 1 || !seen.insert(v).second) continue;
            steps.push_back(v);
            sum = sum + v;
        }
        const Vec2 closing = Vec2{} - sum;
        if (closing == Vec2{} || seen.count(direction(closing))) continue;
        steps.push_back(closing);
        std::sort(steps.begin(), steps.end(), angle_less);
        std::vector<Vec2> polygon;
        polygon.reserve(vertices);
        Vec2 cur{};
        for (const auto& s : steps) {
            polygon.push_back(cur);
            cur = cur + s;
        }
        auto h = hull(polygon);
        if (h.size() == vertices) return h;
    }
}

BigInt twice_area(const std::vector<Vec2>& polygon) {
    if (polygon.size() < 3) return 0;
    BigInt total = 0;
    __int128 acc = 0;
    const Vec2 o = polygon.front();
    for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
        acc += cross(polygon[i] - o, polygon[i + 1] - o);
        // Flush well before the accumulator could overflow.
        if (acc > (static_cast<__int128>(1) << 125) || acc < -(static_cast<__int128>(1) << 125)) {
            total += to_big(acc);
            acc = 0;
        }
    }
    total += to_big(acc);
    return total;
}

}  // namespace bkk::planar
