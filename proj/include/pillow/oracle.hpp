#pragma once

// Brute-force search for compressing-disk partners.
//
// The sphere is modelled with all six punctures of the knot: the fat corners
// P and P' of the pillowcase are opened up into the short arcs d (joining the
// x- and z-punctures inside P) and d' (joining the y- and z-punctures inside
// P'). Obstacle curves are drawn as chords on the two sheets, every face is
// fan-triangulated, and embedded closed curves are enumerated by their normal
// coordinates: one weight per crossable edge, bounded by a caller-supplied N.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pillow/chord_map.hpp"
#include "pillow/pillowcase.hpp"
#include "pillow/slope.hpp"
#include "pillow/word.hpp"

namespace pillow {

inline constexpr int kDefaultOracleBound = 8;
inline constexpr std::uint64_t kDefaultNodeCap = 400'000'000;

class BoundTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed curve on the six-puncture sphere, as ordered chords. Consecutive
/// chords share an endpoint; the last chord returns to the first one's start.
struct ClosedCurve {
  std::string name;
  std::vector<CurveChord> chords;
  /// Letters read at each endpoint shared by consecutive chords; +1 when the
  /// curve passes from the front sheet to the back sheet. Corner arcs d, d'
  /// carry no letter.
  Word word;
};

/// One obstacle set drawn on the six-puncture sphere.
struct Configuration {
  std::string name;
  Slope slope;
  std::vector<ClosedCurve> obstacles;
  ChordMap map;
};

/// Boundary of a small disk around d (the curve of D).
ClosedCurve disk_boundary_p();
/// Boundary of a small disk around d' (the curve of D').
ClosedCurve disk_boundary_p_prime();
/// Boundary of a neighbourhood of d + arc + d': the band sum of the curves of
/// D and D' along the arc of slope s.
ClosedCurve band_sum_curve(const Slope& s);

/// The curve obtained from the boundary of D by surgery along the outermost
/// disk cut off by alpha: the component that is not isotopic to a boundary
/// curve of D or D'. Throws SlopeError unless s is infinite or 1/(2k).
ClosedCurve surgered_disk_boundary(const Slope& s);

/// Curves of D, D' and the closed-up arc: any curve disjoint from all three
/// stays off alpha and off the fat corners.
Configuration disjointness_configuration(const Slope& s);
/// The surgered disk alone. Same preconditions as surgered_disk_boundary.
Configuration surgered_configuration(const Slope& s);

/// An embedded closed curve in normal position. `weights` has one entry per
/// edge of the configuration map (zero on obstacle chords); `routing` holds
/// the weights on the triangulation diagonals, which fix the per-face
/// matching of intersection points.
struct NormalCurve {
  std::vector<int> weights;
  std::vector<int> routing;
  friend bool operator==(const NormalCurve&, const NormalCurve&) = default;
};

struct CurveVerdict {
  NormalCurve curve;
  Word word;         // all crossings, b included
  Word xyz_word;     // crossings with x, y, z only
  int punctures_inside = 0;   // smaller side
  int punctures_outside = 0;
  bool essential = false;
  bool trivial_word = false;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;       // normal multicurves visited
  std::uint64_t single_curves = 0;   // connected ones
};

/// Every essential embedded closed curve disjoint from the obstacles with all
/// weights <= bound, sorted lexicographically by (weights, routing). Throws
/// BoundTooLarge when the search exceeds `node_cap` nodes.
std::vector<CurveVerdict> enumerate_disjoint_curves(const Configuration& config, int bound,
                                                    std::uint64_t node_cap = kDefaultNodeCap,
                                                    EnumerationStats* stats = nullptr);

/// The configuration the oracle uses for a slope: surgered for the infinite
/// and 1/(2k) slopes, the disjointness configuration otherwise.
Configuration oracle_configuration(const Slope& s);

/// First essential curve with a trivial x, y, z word, or none within the bound.
std::optional<CurveVerdict> exists_trivial_partner(const Slope& s, int bound = kDefaultOracleBound,
                                                   std::uint64_t node_cap = kDefaultNodeCap);

/// Nested cancellations realisable in the three locations around the marked
/// region R_i of a General slope.
struct CancellationProfile {
  int interior_depth = 0;
  bool crossing_si_cancels = false;
  int complementary_depth = 0;
  Word interior_witness;       // e.g. z z' x for k = 1
  Word si_witness;             // z y' z' or z y z'
  Word complementary_witness;  // e.g. z' z y' for k = 1
};

/// Reads the crossing word of R_i off the planar map and builds, for each
/// location, the subword an embedded arc of a disjoint curve can read there:
///   interior      - turning inside R_i across its leading (b z') windings,
///                   then leaving across the x-edge;
///   through s_i   - passing s_i between the last z winding and the y-edge;
///   complementary - turning around the trailing (b' z) windings before the
///                   y-edge.
/// Depths are the nesting depths of the z cancellations in those subwords.
/// Throws SlopeError for maps of non-General slopes.
CancellationProfile region_cancellation_analysis(const PlanarMap& map);

}  // namespace pillow
