#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bkk/bigint.hpp"
#include "bkk/exact_linear.hpp"
#include "bkk/geometry.hpp"

// Mixed volume convention used throughout: M(P_1..P_n) is the coefficient of
// l_1 l_2 ... l_n in the Euclidean volume of l_1 P_1 + ... + l_n P_n. With
// this normalization M(P,...,P) equals the normalized volume n! vol(P), a
// tuple of segments gives |det|, axis boxes give the permanent of their side
// lengths, and M is the generic number of torus roots.
namespace bkk {

enum class MixedVolumeMethod { mixed_cells, inclusion_exclusion, planar_strips, closed_form };

const char* method_name(MixedVolumeMethod m) noexcept;

/// One summand of a certificate. For mixed cells `parts` holds the n edges;
/// for planar strips it holds the edge of P1 and the endpoints of the
/// matching boundary chain of P2.
struct CertificateEntry {
    std::vector<std::vector<Point>> parts;
    BigInt contribution;
};

struct MixedVolumeResult {
    BigInt value;
    MixedVolumeMethod method = MixedVolumeMethod::mixed_cells;
    std::string closed_form;  // which closed form was recognized, if any
    std::optional<std::vector<CertificateEntry>> certificate;
};

/// Sum of |det(edges)| over the mixed cells of a certified-generic mixed
/// subdivision.
MixedVolumeResult mixed_volume_cells(const std::vector<PointConfiguration>& inputs, std::uint64_t seed = 0);

/// Alternating sum of Euclidean volumes of partial Minkowski sums, in exact
/// rational arithmetic. Throws InternalError if the total is not an integer.
MixedVolumeResult mixed_volume_ie(const std::vector<PointConfiguration>& inputs);

struct MixedAreaStats {
    double hull_ms = 0;
    std::size_t strips = 0;
    double total_ms = 0;
};

using MixedAreaObserver = std::function<void(const MixedAreaStats&)>;

/// Planar mixed area in O(N log N) by strip decomposition: each edge E of P1
/// pairs with the boundary chain of P2 running from the lexicographically
/// largest vertex of P2 to the vertex of P2 minimizing E's inner normal,
/// and contributes |det(E, chain end - chain start)|. The chain end is
/// located by binary search over the angularly sorted edges of P2.
MixedVolumeResult mixed_area_fast(const PointConfiguration& a1, const PointConfiguration& a2,
                                  const MixedAreaObserver& observer = {}, bool with_certificate = false);

enum class MixedVolumeStrategy { automatic, cells, inclusion_exclusion, planar };

/// Automatic dispatch tries closed forms first (all inputs with the same hull,
/// all segments, all axis-parallel boxes), then planar strips when n = 2,
/// then mixed cells.
MixedVolumeResult mixed_volume(const std::vector<PointConfiguration>& inputs,
                               MixedVolumeStrategy strategy = MixedVolumeStrategy::automatic,
                               std::uint64_t seed = 0);

inline constexpr std::size_t kMaxPermanentSize = 12;
inline constexpr std::size_t kMaxSpikeSize = 8;

BigInt permanent(const IntegerMatrix& d);

/// max over permutations s of prod_i a[i][s(i)].
BigInt cornered_spike_formula(const IntegerMatrix& a);

/// Row i becomes Conv{O, a[i][0] e_1, ..., a[i][n-1] e_n}.
std::vector<PointConfiguration> spike_simplices(const IntegerMatrix& a);

}  // namespace bkk
