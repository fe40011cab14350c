#include "pillow/chord_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace pillow {

int ChordMap::total_multiplicity() const {
  int total = 0;
  for (const auto& v : vertices_) total += v.multiplicity;
  return total;
}

int ChordMap::segment_containing(int side, const SidePos& pos) const {
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto& ed = edges_[e];
    if (ed.kind != EdgeKind::segment || ed.side != side) continue;
    const auto& a = vertices_[ed.u];
    const auto& b = vertices_[ed.v];
    const bool after_a = a.corner || a.pos < pos;
    const bool before_b = b.corner || pos < b.pos;
    if (after_a && before_b) return e;
  }
  throw std::out_of_range("segment_containing: no segment at position");
}

int ChordMap::vertex_at(int side, const SidePos& pos) const {
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i)
    if (!vertices_[i].corner && vertices_[i].side == side && vertices_[i].pos == pos) return i;
  throw std::out_of_range("vertex_at: no vertex at position");
}

void ChordMapBuilder::add_chord(Sheet sheet, ChordEnd a, ChordEnd b, int tag) {
  chords_.push_back({sheet, a, b, tag});
}

namespace {

// Sort key placing corner j before the points of side j.
struct VertexKey {
  int side = 0;
  bool on_side = false;
  SidePos pos;

  friend bool operator==(const VertexKey&, const VertexKey&) = default;
};

bool key_less(const VertexKey& a, const VertexKey& b) {
  if (a.side != b.side) return a.side < b.side;
  if (a.on_side != b.on_side) return b.on_side;
  if (a.pos.r != b.pos.r) return rational_less(a.pos.r, b.pos.r);
  return a.pos.level < b.pos.level;
}

VertexKey key_of(const ChordEnd& e) {
  if (e.corner) return {*e.corner, false, SidePos{}};
  return {e.side, true, e.pos};
}

}  // namespace

ChordMap ChordMapBuilder::build() const {
  const int n_corners = static_cast<int>(cycle_.corners.size());
  if (n_corners < 2 || cycle_.sides.size() != cycle_.corners.size())
    throw std::logic_error("chord map: boundary needs matching corners and sides");

  std::vector<VertexKey> keys;
  keys.reserve(n_corners + 2 * chords_.size());
  for (int c = 0; c < n_corners; ++c) keys.push_back({c, 0, SidePos{}});
  for (const auto& ch : chords_) {
    for (const ChordEnd* e : {&ch.a, &ch.b}) {
      if (e->corner) {
        if (*e->corner < 0 || *e->corner >= n_corners) throw std::logic_error("chord map: bad corner");
        continue;
      }
      if (e->side < 0 || e->side >= n_corners) throw std::logic_error("chord map: bad side");
      if (e->pos.r <= Rational(0) || e->pos.r >= Rational(1)) {
        // Infinitesimal offsets from an endpoint are allowed: 0 + eps, 1 - eps.
        const bool ok = (e->pos.r == Rational(0) && e->pos.level > 0) || (e->pos.r == Rational(1) && e->pos.level < 0);
        if (!ok) throw std::logic_error("chord map: side position outside (0, 1)");
      }
      keys.push_back(key_of(*e));
    }
  }
  std::sort(keys.begin(), keys.end(), key_less);
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  ChordMap map;
  map.cycle_ = cycle_;
  map.corner_vertex_.assign(n_corners, -1);
  map.vertices_.reserve(keys.size());
  for (const auto& k : keys) {
    MapVertex v;
    v.side = k.side;
    if (k.on_side) {
      v.pos = k.pos;
    } else {
      v.corner = k.side;
      v.multiplicity = cycle_.corners[k.side].multiplicity;
      map.corner_vertex_[k.side] = static_cast<int>(map.vertices_.size());
    }
    map.vertices_.push_back(v);
  }
  auto index_of = [&](const ChordEnd& e) {
    const auto it = std::lower_bound(keys.begin(), keys.end(), key_of(e), key_less);
    return static_cast<int>(it - keys.begin());
  };
  const int m = static_cast<int>(map.vertices_.size());

  for (int i = 0; i < m; ++i) {
    MapEdge e;
    e.kind = EdgeKind::segment;
    e.u = i;
    e.v = (i + 1) % m;
    e.side = map.vertices_[i].side;
    e.letter = cycle_.sides[e.side].letter;
    map.edges_.push_back(e);
  }
  for (const auto& ch : chords_) {
    MapEdge e;
    e.kind = EdgeKind::chord;
    e.u = index_of(ch.a);
    e.v = index_of(ch.b);
    if (e.u == e.v) throw std::logic_error("chord map: degenerate chord");
    e.sheet = ch.sheet;
    e.tag = ch.tag;
    map.edges_.push_back(e);
  }

  // Non-crossing check per sheet: chords as intervals (lo, hi) of the cycle
  // order must nest. Sorted by lo, then by hi descending, the open intervals
  // form a stack whose top has the smallest hi.
  const int n_edges = static_cast<int>(map.edges_.size());
  for (Sheet sheet : {Sheet::front, Sheet::back}) {
    std::vector<std::tuple<int, int, int>> spans;  // lo, -hi, edge
    for (int e = m; e < n_edges; ++e) {
      const auto& ed = map.edges_[e];
      if (ed.sheet == sheet) spans.emplace_back(std::min(ed.u, ed.v), -std::max(ed.u, ed.v), e);
    }
    std::sort(spans.begin(), spans.end());
    std::vector<std::pair<int, int>> open;  // hi, edge
    for (const auto& [lo, neg_hi, e] : spans) {
      while (!open.empty() && open.back().first <= lo) open.pop_back();
      if (!open.empty() && open.back().first < -neg_hi)
        throw std::logic_error("chord map: chords " + std::to_string(map.edges_[open.back().second].tag) + " and " +
                               std::to_string(map.edges_[e].tag) + " cross");
      open.emplace_back(-neg_hi, e);
    }
  }

  // Rotation systems per sheet: outgoing darts at each vertex in
  // counterclockwise order, interior of the sheet on the left of the cycle.
  auto dart_id = [](Dart d) { return 2 * d.edge + (d.forward ? 0 : 1); };
  auto head = [&](Dart d) { return d.forward ? map.edges_[d.edge].v : map.edges_[d.edge].u; };
  auto tail = [&](Dart d) { return d.forward ? map.edges_[d.edge].u : map.edges_[d.edge].v; };

  map.edge_faces_.assign(n_edges, {-1, -1});
  for (Sheet sheet : {Sheet::front, Sheet::back}) {
    // Flat rotation, bucketed by vertex. Within a vertex: the segment to
    // u+1, chords by cyclic distance, then the segment back to u-1.
    std::vector<int> first(m + 1, 0);
    for (int u = 0; u < m; ++u) first[u + 1] += 2;
    for (int e = m; e < n_edges; ++e) {
      const auto& ed = map.edges_[e];
      if (ed.sheet != sheet) continue;
      ++first[ed.u + 1];
      ++first[ed.v + 1];
    }
    for (int u = 0; u < m; ++u) first[u + 1] += first[u];
    std::vector<std::pair<int, int>> rot(first[m]);  // rank, dart id
    std::vector<int> fill(first.begin(), first.end() - 1);
    for (int u = 0; u < m; ++u) rot[fill[u]++] = {0, dart_id({u, true})};
    for (int e = m; e < n_edges; ++e) {
      const auto& ed = map.edges_[e];
      if (ed.sheet != sheet) continue;
      rot[fill[ed.u]++] = {((ed.v - ed.u) % m + m) % m, dart_id({e, true})};
      rot[fill[ed.v]++] = {((ed.u - ed.v) % m + m) % m, dart_id({e, false})};
    }
    for (int u = 0; u < m; ++u) {
      rot[fill[u]++] = {m, dart_id({(u - 1 + m) % m, false})};
      std::sort(rot.begin() + first[u], rot.begin() + first[u + 1]);
    }
    std::vector<int> pos_in_rot(2 * n_edges, -1);
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) pos_in_rot[rot[i].second] = i;
    auto dart_of = [](int id) { return Dart{id / 2, id % 2 == 0}; };

    std::vector<char> used(2 * n_edges, 0);
    std::vector<Dart> walk;
    auto start_ok = [&](Dart d) {
      const auto& ed = map.edges_[d.edge];
      if (ed.kind == EdgeKind::segment) return d.forward;
      return ed.sheet == sheet;
    };
    for (int e = 0; e < n_edges; ++e) {
      for (bool fwd : {true, false}) {
        Dart start{e, fwd};
        if (!start_ok(start) || used[dart_id(start)]) continue;
        walk.clear();
        Dart d = start;
        do {
          used[dart_id(d)] = 1;
          walk.push_back(d);
          const int b = head(d);
          const Dart back{d.edge, !d.forward};
          const int i = pos_in_rot[dart_id(back)];
          d = dart_of(rot[i == first[b] ? first[b + 1] - 1 : i - 1].second);
          if (!start_ok(d)) throw std::logic_error("chord map: face walk left the sheet");
        } while (!(d == start));
        MapFace face;
        face.sheet = sheet;
        face.darts.assign(walk.begin(), walk.end());
        face.vertices.reserve(walk.size());
        for (const Dart& w : walk) face.vertices.push_back(tail(w));
        const int fid = static_cast<int>(map.faces_.size());
        for (const auto& fd : face.darts) {
          auto& slot = map.edge_faces_[fd.edge];
          if (map.edges_[fd.edge].kind == EdgeKind::segment)
            (sheet == Sheet::front ? slot.first : slot.second) = fid;
          else
            (fd.forward ? slot.first : slot.second) = fid;
        }
        map.faces_.push_back(std::move(face));
      }
    }
  }
  return map;
}

}  // namespace pillow
