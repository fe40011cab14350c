#pragma once

// A sphere presented as two polygonal sheets (front, back) glued along their
// common boundary cycle. Curves drawn on the sphere are recorded as chords
// inside one sheet between points of the boundary cycle; the builder turns a
// set of pairwise non-crossing chords into a combinatorial map (vertices,
// edges, faces) with exact positions along the boundary.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pillow/word.hpp"

namespace pillow {

using Rational = boost::rational<std::int64_t>;

/// a < b by cross multiplication; denominators are positive.
inline bool rational_less(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.numerator()) * b.denominator() <
         static_cast<__int128>(b.numerator()) * a.denominator();
}

/// A position r + level * eps along a side, eps an infinitesimal.
struct SidePos {
  Rational r;
  int level = 0;

  friend bool operator==(const SidePos&, const SidePos&) = default;
  friend bool operator<(const SidePos& a, const SidePos& b) {
    if (a.r != b.r) return rational_less(a.r, b.r);
    return a.level < b.level;
  }
};

enum class Sheet : std::uint8_t { front = 0, back = 1 };

inline Sheet other(Sheet s) { return s == Sheet::front ? Sheet::back : Sheet::front; }

struct Corner {
  std::string name;
  int multiplicity = 0;  // punctures carried by the corner
};

/// Side j of the boundary cycle runs from corner j to corner j+1.
struct Side {
  std::string name;
  std::optional<Gen> letter;  // nullopt for arcs that carry no generator
};

struct BoundaryCycle {
  std::vector<Corner> corners;
  std::vector<Side> sides;
};

struct MapVertex {
  std::optional<int> corner;  // corner index, or a point on a side
  int side = -1;
  SidePos pos;
  int multiplicity = 0;
};

enum class EdgeKind : std::uint8_t { segment, chord };

struct MapEdge {
  EdgeKind kind = EdgeKind::segment;
  int u = 0, v = 0;  // vertex ids; segments run along the boundary cycle
  int side = -1;     // segments only
  std::optional<Gen> letter;
  Sheet sheet = Sheet::front;  // chords only
  int tag = -1;                // chords only: caller supplied curve id
};

struct Dart {
  int edge = 0;
  bool forward = true;  // u -> v
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct MapFace {
  Sheet sheet = Sheet::front;
  std::vector<Dart> darts;   // boundary walk, face on the left
  std::vector<int> vertices; // tail vertex of each dart
};

class ChordMap {
 public:
  const BoundaryCycle& cycle() const { return cycle_; }
  const std::vector<MapVertex>& vertices() const { return vertices_; }
  const std::vector<MapEdge>& edges() const { return edges_; }
  const std::vector<MapFace>& faces() const { return faces_; }

  /// The two faces incident to an edge (front then back for segments).
  std::pair<int, int> faces_of(int edge) const { return edge_faces_[edge]; }

  int euler_characteristic() const {
    return static_cast<int>(vertices_.size()) - static_cast<int>(edges_.size()) +
           static_cast<int>(faces_.size());
  }
  int total_multiplicity() const;

  /// Segment edge on `side` whose interior contains position `pos`.
  int segment_containing(int side, const SidePos& pos) const;
  int vertex_at(int side, const SidePos& pos) const;
  int corner_vertex(int corner) const { return corner_vertex_[corner]; }

 private:
  friend class ChordMapBuilder;
  BoundaryCycle cycle_;
  std::vector<MapVertex> vertices_;  // in cyclic boundary order
  std::vector<MapEdge> edges_;       // segments first (segment i: vertex i -> i+1)
  std::vector<MapFace> faces_;
  std::vector<std::pair<int, int>> edge_faces_;
  std::vector<int> corner_vertex_;
};

/// Endpoint of a chord: a corner, or a position on a side.
struct ChordEnd {
  std::optional<int> corner;
  int side = -1;
  SidePos pos;

  static ChordEnd at_corner(int c) { return {c, -1, {}}; }
  static ChordEnd on_side(int side, SidePos pos) { return {std::nullopt, side, pos}; }
};

class ChordMapBuilder {
 public:
  explicit ChordMapBuilder(BoundaryCycle cycle) : cycle_(std::move(cycle)) {}

  void add_chord(Sheet sheet, ChordEnd a, ChordEnd b, int tag);

  /// Throws std::logic_error if two chords of a sheet cross, a chord is
  /// degenerate, or a side position lies outside (0, 1).
  ChordMap build() const;

 private:
  struct PendingChord {
    Sheet sheet;
    ChordEnd a, b;
    int tag;
  };
  BoundaryCycle cycle_;
  std::vector<PendingChord> chords_;
};

}  // namespace pillow
