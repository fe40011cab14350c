#pragma once

// The pillowcase model of the marked sphere: a unit square doubled along its
// boundary. Corners are LL = P' (lower left, multiplicity 2), LR (1), UR (1),
// UL = P (2). The edges are y (bottom), b (right), x (top) and z (left), so z
// joins P' to P, x touches P only, y touches P' only and b touches neither.
//
// Points on an edge are given by their pillowcase coordinate: the x-coordinate
// for the top and bottom edges, the y-coordinate for the left and right ones.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pillow/chord_map.hpp"
#include "pillow/slope.hpp"
#include "pillow/word.hpp"

namespace pillow {

/// One transverse intersection of the arc of a finite slope with an edge.
struct Crossing {
  Letter letter;
  bool vertical = false;      // unfolded line x = i (edges b, z) or y = j (x, y)
  std::int64_t lattice_line = 0;
  Rational along;             // parameter in (0, 1) along the unfolded segment
  Rational coord;             // pillowcase coordinate on the edge
  int left = 1;               // coordinate direction of the arc's left-hand side
  Sheet before = Sheet::front;
};

/// The arc of slope s oriented from P' to P, unfolded to the segment from
/// (0, 0) to (q, p). A crossing with x = i reads b for odd i, z for even i; a
/// crossing with y = j reads x for odd j, y for even j. The sign is +1 when
/// the arc passes from the front sheet to the back sheet.
struct ArcDiagram {
  Slope slope;
  std::vector<Crossing> crossings;  // sorted by `along`; empty for infinity
};

ArcDiagram arc_diagram(const Slope& s);

/// Crossing word of the arc; the single letter z for the infinite slope.
Word beta_word(const Slope& s);

/// Letters swept by the closed-up arc when it passes around P' from the
/// right-hand side of the arc to the left-hand side: y then z'.
Word corner_loop_word();

/// Word of the frontier of a neighbourhood of (arc + P'), read from P back
/// along the arc, around P', and out to P again. Throws SlopeError for the
/// infinite slope.
Word alpha_word(const Slope& s);

/// True iff, after deleting b and all signs, the letter sequence has x next to
/// y, y next to z and z next to x somewhere. `closed` adds the wraparound
/// adjacency of a cyclic word.
bool obstruction_present(const Word& w, bool closed = false);

/// A point on one of the four edges, at a pillowcase coordinate plus an
/// infinitesimal offset (`level` eps, in the coordinate direction).
struct EdgePoint {
  Gen edge = Gen::x;
  Rational coord;
  int level = 0;
};

/// Position along a side of the boundary cycle. The cycle runs y, b, x, z
/// counterclockwise, so x and z are traversed against their coordinate.
SidePos side_position(const EdgePoint& p);

/// One chord of a curve drawn on the doubled square. An unset endpoint
/// stands for the corner P.
struct CurveChord {
  Sheet sheet = Sheet::front;
  std::optional<EdgePoint> a, b;
};

/// Parallel copy of a crossing on the arc's left (right) side.
EdgePoint left_copy(const Crossing& c, int eps_level);
EdgePoint right_copy(const Crossing& c, int eps_level);

/// Chords of both parallel copies of the arc between consecutive crossings.
std::vector<CurveChord> band_chords(const ArcDiagram& arc, int eps_level);

/// Chords of the closed-up arc alpha: band copies on both sides of the arc
/// at offset `eps_level`, a loop around P' and both ends at the corner P.
std::vector<CurveChord> alpha_chords(const ArcDiagram& arc, int eps_level);

/// The marked region of a General slope and the data used to find it.
struct PlanarMap {
  Slope slope;
  SlopeClass slope_class;
  ChordMap map;
  int p_prime_vertex = -1;
  int p_vertex = -1;
  /// Index (in the arc diagram) of the crossing p_i for the last letter of w_i.
  std::size_t pi_crossing = 0;
  EdgePoint pi;
  /// Segment edge of the map that forms the short arc s_i.
  int si_edge = -1;
  /// Faces of the region bounded by alpha and s_i that contains P'.
  std::vector<int> region_faces;
  /// Letters read crossing the segments from P' out to s_i inside the region,
  /// followed by the letter of s_i itself.
  Word region_word;
  int region_euler_characteristic = 0;
};

/// The sphere cut along the four edges and alpha, with no marked region.
/// Works for every finite slope.
ChordMap build_alpha_map(const Slope& s);

/// Planar map with R_i, s_i and p_i identified. Throws SlopeError unless the
/// slope is in the General class.
PlanarMap build_planar_map(const Slope& s);

/// SVG 1.1 drawing of the square, its four edges and the folded arc with
/// labelled crossings.
std::string render_svg(const Slope& s);

/// JSON sidecar with lattice indices and rational parameters of the crossings.
std::string crossings_json(const Slope& s);

}  // namespace pillow
