#include "pillow/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pillow {

namespace {

BoundaryCycle hexagon_cycle() {
  BoundaryCycle c;
  c.corners = {{"p'y", 1}, {"LR", 1}, {"UR", 1}, {"px", 1}, {"pz", 1}, {"p'z", 1}};
  c.sides = {{"y", Gen::y}, {"b", Gen::b}, {"x", Gen::x}, {"d", std::nullopt}, {"z", Gen::z}, {"d'", std::nullopt}};
  return c;
}

int hexagon_side(Gen g) {
  switch (g) {
    case Gen::y: return 0;
    case Gen::b: return 1;
    case Gen::x: return 2;
    case Gen::z: return 4;
  }
  return -1;
}

ChordEnd hexagon_end(const EdgePoint& p) { return ChordEnd::on_side(hexagon_side(p.edge), side_position(p)); }

bool same_point(const EdgePoint& a, const EdgePoint& b) {
  return a.edge == b.edge && a.coord == b.coord && a.level == b.level;
}

ClosedCurve make_curve(std::string name, std::vector<CurveChord> chords) {
  ClosedCurve c{std::move(name), std::move(chords), {}};
  const std::size_t n = c.chords.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cur = c.chords[i];
    const auto& next = c.chords[(i + 1) % n];
    if (!cur.a || !cur.b || !same_point(*cur.b, *next.a) || cur.sheet == next.sheet)
      throw std::logic_error("closed curve " + c.name + ": chords do not chain");
    c.word.push_back({cur.b->edge, cur.sheet == Sheet::front ? 1 : -1});
  }
  return c;
}

EdgePoint near_low(Gen g, int level) { return {g, Rational(0), level}; }
EdgePoint near_high(Gen g, int level) { return {g, Rational(1), -level}; }

}  // namespace

ClosedCurve disk_boundary_p() {
  const EdgePoint x = near_low(Gen::x, 1), z = near_high(Gen::z, 1);
  return make_curve("dD", {{Sheet::front, x, z}, {Sheet::back, z, x}});
}

ClosedCurve disk_boundary_p_prime() {
  const EdgePoint y = near_low(Gen::y, 1), z = near_low(Gen::z, 1);
  return make_curve("dD'", {{Sheet::front, y, z}, {Sheet::back, z, y}});
}

ClosedCurve band_sum_curve(const Slope& s) {
  constexpr int level = 2;
  const EdgePoint y_low = near_low(Gen::y, level), z_low = near_low(Gen::z, level);
  const EdgePoint x_low = near_low(Gen::x, level), z_high = near_high(Gen::z, level);
  std::vector<CurveChord> chords;
  if (s.is_infinite()) {
    // The arc runs up beside z on the front sheet, its left side towards z.
    chords = {{Sheet::back, y_low, z_low},
              {Sheet::front, z_low, z_high},
              {Sheet::back, z_high, x_low},
              {Sheet::front, x_low, y_low}};
    return make_curve("band " + s.str(), std::move(chords));
  }
  const ArcDiagram arc = arc_diagram(s);
  const auto& cs = arc.crossings;
  const std::size_t m = cs.size();
  chords.push_back({Sheet::back, y_low, z_low});
  chords.push_back({Sheet::front, z_low, left_copy(cs[0], level)});
  for (std::size_t i = 0; i + 1 < m; ++i)
    chords.push_back({other(cs[i].before), left_copy(cs[i], level), left_copy(cs[i + 1], level)});
  const Sheet end_sheet = other(cs[m - 1].before);
  chords.push_back({end_sheet, left_copy(cs[m - 1], level), x_low});
  chords.push_back({other(end_sheet), x_low, z_high});
  chords.push_back({end_sheet, z_high, right_copy(cs[m - 1], level)});
  for (std::size_t i = m - 1; i > 0; --i)
    chords.push_back({other(cs[i - 1].before), right_copy(cs[i], level), right_copy(cs[i - 1], level)});
  chords.push_back({Sheet::front, right_copy(cs[0], level), y_low});
  return make_curve("band " + s.str(), std::move(chords));
}

ClosedCurve surgered_disk_boundary(const Slope& s) {
  const SlopeClass c = classify(s);
  if (!std::holds_alternative<slope_class::Infinity>(c) && !std::holds_alternative<slope_class::ReciprocalEven>(c))
    throw SlopeError("surgered_disk_boundary: slope " + s.str() + " is " + describe(c) +
                     "; surgery is only drawn for the infinite and 1/(2k) slopes");
  ClosedCurve curve = band_sum_curve(s);
  curve.name = "surgered " + s.str();
  return curve;
}

namespace {

Configuration make_configuration(std::string name, const Slope& s, std::vector<ClosedCurve> obstacles) {
  ChordMapBuilder builder(hexagon_cycle());
  for (std::size_t i = 0; i < obstacles.size(); ++i)
    for (const auto& ch : obstacles[i].chords)
      builder.add_chord(ch.sheet, hexagon_end(*ch.a), hexagon_end(*ch.b), static_cast<int>(i));
  Configuration c{std::move(name), s, std::move(obstacles), {}};
  c.map = builder.build();
  return c;
}

}  // namespace

Configuration disjointness_configuration(const Slope& s) {
  return make_configuration("disjoint " + s.str(), s, {disk_boundary_p(), disk_boundary_p_prime(), band_sum_curve(s)});
}

Configuration surgered_configuration(const Slope& s) {
  return make_configuration("surgered " + s.str(), s, {surgered_disk_boundary(s)});
}

Configuration oracle_configuration(const Slope& s) {
  const SlopeClass c = classify(s);
  if (std::holds_alternative<slope_class::Infinity>(c) || std::holds_alternative<slope_class::ReciprocalEven>(c))
    return surgered_configuration(s);
  return disjointness_configuration(s);
}

// ---------------------------------------------------------------------------
// Triangulation and normal curves

namespace {

struct TriEdge {
  int u = 0, v = 0;
  bool crossable = true;
  std::optional<Gen> letter;
  int map_edge = -1;  // -1 for diagonals
};

/// A triangle (3 sides) or a bigon (2 sides). Side j runs from corner j to
/// corner j+1; `aligned[j]` is true when the edge's u is corner j.
struct Cell {
  Sheet sheet = Sheet::front;
  int n = 3;
  int corners[3] = {0, 0, 0};
  int sides[3] = {0, 0, 0};
  bool aligned[3] = {true, true, true};
};

struct Triangulation {
  std::vector<TriEdge> edges;
  std::vector<Cell> cells;
  std::vector<std::vector<std::pair<int, int>>> edge_cells;  // (cell, side)
  int n_map_edges = 0;
  int n_vertices = 0;
  std::vector<int> multiplicity;
};

Triangulation triangulate(const ChordMap& map) {
  Triangulation t;
  t.n_vertices = static_cast<int>(map.vertices().size());
  for (const auto& v : map.vertices()) t.multiplicity.push_back(v.multiplicity);
  for (const auto& e : map.edges())
    t.edges.push_back({e.u, e.v, e.kind == EdgeKind::segment, e.kind == EdgeKind::segment ? e.letter : std::nullopt,
                       static_cast<int>(&e - map.edges().data())});
  t.n_map_edges = static_cast<int>(t.edges.size());

  auto add_cell = [&](Sheet sheet, std::vector<int> corners, std::vector<int> sides) {
    Cell c;
    c.sheet = sheet;
    c.n = static_cast<int>(corners.size());
    for (int j = 0; j < c.n; ++j) {
      c.corners[j] = corners[j];
      c.sides[j] = sides[j];
      c.aligned[j] = t.edges[sides[j]].u == corners[j];
    }
    t.cells.push_back(c);
  };

  for (const auto& face : map.faces()) {
    const int n = static_cast<int>(face.darts.size());
    const auto& vs = face.vertices;
    std::vector<int> sides;
    for (const auto& d : face.darts) sides.push_back(d.edge);
    if (n == 2) {
      add_cell(face.sheet, {vs[0], vs[1]}, {sides[0], sides[1]});
      continue;
    }
    if (n < 2) throw std::logic_error("triangulate: degenerate face");
    // Fan from vs[0]: diagonal i joins vs[0] to vs[i], i = 2 .. n-2.
    std::vector<int> diag(n, -1);
    for (int i = 2; i <= n - 2; ++i) {
      diag[i] = static_cast<int>(t.edges.size());
      t.edges.push_back({vs[0], vs[i], true, std::nullopt, -1});
    }
    for (int i = 1; i <= n - 2; ++i) {
      const int first = (i == 1) ? sides[0] : diag[i];
      const int last = (i == n - 2) ? sides[n - 1] : diag[i + 1];
      add_cell(face.sheet, {vs[0], vs[i], vs[i + 1]}, {first, sides[i], last});
    }
  }
  t.edge_cells.assign(t.edges.size(), {});
  for (int c = 0; c < static_cast<int>(t.cells.size()); ++c)
    for (int j = 0; j < t.cells[c].n; ++j) t.edge_cells[t.cells[c].sides[j]].push_back({c, j});
  for (const auto& ec : t.edge_cells)
    if (ec.size() != 2) throw std::logic_error("triangulate: edge not shared by two cells");
  return t;
}

bool cell_ok(const Cell& c, const std::vector<int>& w) {
  if (c.n == 2) return w[c.sides[0]] == w[c.sides[1]];
  const int a = w[c.sides[0]], b = w[c.sides[1]], d = w[c.sides[2]];
  return (a + b + d) % 2 == 0 && a <= b + d && b <= a + d && d <= a + b;
}

struct Traced {
  int components = 0;
  Word word;
};

/// Partner of the point at local index `i` (from corner j) on side j of a cell.
std::pair<int, int> cell_partner(const Cell& c, const std::vector<int>& w, int j, int i) {
  if (c.n == 2) return {1 - j, w[c.sides[1 - j]] - 1 - i};
  const int wj = w[c.sides[j]];
  const int prev = (j + 2) % 3, next = (j + 1) % 3;
  const int corner_j = (wj + w[c.sides[prev]] - w[c.sides[next]]) / 2;
  if (i < corner_j) return {prev, w[c.sides[prev]] - 1 - i};
  return {next, wj - 1 - i};
}

Traced trace(const Triangulation& t, const std::vector<int>& w) {
  Traced out;
  std::vector<std::vector<char>> seen(t.edges.size());
  for (std::size_t e = 0; e < t.edges.size(); ++e) seen[e].assign(w[e], 0);
  auto to_local = [&](const Cell& c, int j, int idx) { return c.aligned[j] ? idx : w[c.sides[j]] - 1 - idx; };
  for (std::size_t e0 = 0; e0 < t.edges.size(); ++e0) {
    for (int i0 = 0; i0 < w[e0]; ++i0) {
      if (seen[e0][i0]) continue;
      ++out.components;
      int e = static_cast<int>(e0), idx = i0;
      int from_cell = t.edge_cells[e][0].first;
      while (!seen[e][idx]) {
        seen[e][idx] = 1;
        const auto [c0, j0] = t.edge_cells[e][0];
        const auto [c1, j1] = t.edge_cells[e][1];
        const int cell = (c0 == from_cell) ? c1 : c0;
        const int side = (c0 == from_cell) ? j1 : j0;
        if (out.components == 1 && t.edges[e].letter)
          out.word.push_back({*t.edges[e].letter, t.cells[from_cell].sheet == Sheet::front ? 1 : -1});
        const Cell& c = t.cells[cell];
        const auto [pj, plocal] = cell_partner(c, w, side, to_local(c, side, idx));
        e = c.sides[pj];
        idx = to_local(c, pj, plocal);
        from_cell = cell;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CurveVerdict> enumerate_disjoint_curves(const Configuration& config, int bound, std::uint64_t node_cap,
                                                    EnumerationStats* stats) {
  if (bound < 1) throw std::invalid_argument("enumerate_disjoint_curves: bound must be >= 1");
  const Triangulation t = triangulate(config.map);
  const int n_edges = static_cast<int>(t.edges.size());

  // Components of the complement of the obstacles, as sets of cells.
  std::vector<int> comp(t.cells.size());
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int a) { return comp[a] == a ? a : comp[a] = find(comp[a]); };
  for (int e = 0; e < n_edges; ++e)
    if (t.edges[e].crossable) comp[find(t.edge_cells[e][0].first)] = find(t.edge_cells[e][1].first);

  std::vector<CurveVerdict> found;
  EnumerationStats local;
  std::vector<int> roots;
  for (int c = 0; c < static_cast<int>(t.cells.size()); ++c)
    if (find(c) == c) roots.push_back(c);

  for (int root : roots) {
    // Variables: crossable edges with a cell in this component, in a greedy
    // order that keeps each new edge next to already-constrained cells.
    std::vector<int> order;
    std::vector<char> chosen(n_edges, 0);
    std::vector<int> known_in_cell(t.cells.size(), 0);
    for (int e = 0; e < n_edges; ++e)
      if (!t.edges[e].crossable)
        for (auto [c, j] : t.edge_cells[e]) ++known_in_cell[c];
    std::vector<int> candidates;
    for (int e = 0; e < n_edges; ++e)
      if (t.edges[e].crossable && find(t.edge_cells[e][0].first) == root) candidates.push_back(e);
    if (candidates.empty()) continue;
    while (order.size() < candidates.size()) {
      int best = -1, best_score = -1;
      for (int e : candidates) {
        if (chosen[e]) continue;
        int score = 0;
        for (auto [c, j] : t.edge_cells[e]) score = std::max(score, known_in_cell[c] * 4 + (t.cells[c].n == 2 ? 8 : 0));
        if (score > best_score) best = e, best_score = score;
      }
      chosen[best] = 1;
      order.push_back(best);
      for (auto [c, j] : t.edge_cells[best]) ++known_in_cell[c];
    }

    // Cells that become fully assigned at each step.
    std::vector<int> pos(n_edges, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    std::vector<std::vector<int>> closing(order.size());
    for (int c = 0; c < static_cast<int>(t.cells.size()); ++c) {
      int last = -1;
      bool touches = false;
      for (int j = 0; j < t.cells[c].n; ++j) {
        const int e = t.cells[c].sides[j];
        if (pos[e] >= 0) last = std::max(last, pos[e]), touches = true;
      }
      if (touches) closing[last].push_back(c);
    }

    std::vector<int> w(n_edges, 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t k) {
      if (++local.nodes > node_cap)
        throw BoundTooLarge("enumerate_disjoint_curves: bound " + std::to_string(bound) +
                            " too large for node cap " + std::to_string(node_cap) + " on " + config.name);
      if (k == order.size()) {
        bool nonzero = false;
        for (int e : order) nonzero |= w[e] != 0;
        if (!nonzero) return;
        ++local.solutions;
        Traced tr = trace(t, w);
        if (tr.components != 1) return;
        ++local.single_curves;

        // Sides of the curve: parity of crossings along triangulation edges.
        std::vector<int> side(t.n_vertices, -1);
        side[0] = 0;
        bool changed = true;
        while (changed) {
          changed = false;
          for (int e = 0; e < n_edges; ++e) {
            const auto& ed = t.edges[e];
            if (side[ed.u] >= 0 && side[ed.v] < 0) side[ed.v] = side[ed.u] ^ (w[e] & 1), changed = true;
            if (side[ed.v] >= 0 && side[ed.u] < 0) side[ed.u] = side[ed.v] ^ (w[e] & 1), changed = true;
          }
        }
        int count[2] = {0, 0};
        for (int v = 0; v < t.n_vertices; ++v) count[side[v]] += t.multiplicity[v];

        CurveVerdict verdict;
        verdict.curve.weights.assign(w.begin(), w.begin() + t.n_map_edges);
        verdict.curve.routing.assign(w.begin() + t.n_map_edges, w.end());
        verdict.word = tr.word;
        verdict.xyz_word = tr.word.xyz();
        verdict.punctures_inside = std::min(count[0], count[1]);
        verdict.punctures_outside = std::max(count[0], count[1]);
        verdict.essential = verdict.punctures_inside >= 2;
        verdict.trivial_word = is_trivial(verdict.xyz_word);
        if (verdict.essential) found.push_back(std::move(verdict));
        return;
      }
      const int e = order[k];
      int lo = 0, hi = bound;
      for (auto [c, j] : t.edge_cells[e]) {
        const Cell& cell = t.cells[c];
        if (cell.n == 2) {
          const int o = cell.sides[1 - j];
          if (pos[o] >= 0 && pos[o] < static_cast<int>(k)) lo = std::max(lo, w[o]), hi = std::min(hi, w[o]);
          else if (pos[o] < 0) lo = hi + 1;  // other side is an obstacle: weight 0
        }
      }
      for (int v = lo; v <= hi; ++v) {
        w[e] = v;
        bool ok = true;
        for (int c : closing[k])
          if (!cell_ok(t.cells[c], w)) {
            ok = false;
            break;
          }
        if (ok) dfs(k + 1);
      }
      w[e] = 0;
    };
    dfs(0);
  }

  std::sort(found.begin(), found.end(), [](const CurveVerdict& a, const CurveVerdict& b) {
    if (a.curve.weights != b.curve.weights) return a.curve.weights < b.curve.weights;
    return a.curve.routing < b.curve.routing;
  });
  if (stats) *stats = local;
  return found;
}

std::optional<CurveVerdict> exists_trivial_partner(const Slope& s, int bound, std::uint64_t node_cap) {
  const Configuration config = oracle_configuration(s);
  for (auto& v : enumerate_disjoint_curves(config, bound, node_cap))
    if (v.trivial_word) return std::move(v);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cancellation analysis around R_i

CancellationProfile region_cancellation_analysis(const PlanarMap& pm) {
  const auto* gen = as_general(pm.slope_class);
  if (!gen) throw SlopeError("region_cancellation_analysis: map of a non-General slope");
  const auto& ls = pm.region_word.letters();
  const Letter b{Gen::b, 1}, B{Gen::b, -1}, z{Gen::z, 1}, Z{Gen::z, -1};

  // Leading windings (b z') and the x-letter after them.
  std::size_t i = 0;
  Word lead;
  while (i + 1 < ls.size() && ls[i] == b && ls[i + 1] == Z) {
    lead.push_back(ls[i + 1]);
    i += 2;
  }
  std::optional<Letter> x_letter;
  for (std::size_t j = i; j < ls.size(); ++j)
    if (ls[j].gen == Gen::x) {
      x_letter = ls[j];
      break;
    }
  // The y-letter of R_i and the trailing windings (b' z) just before it.
  std::size_t y_at = ls.size();
  for (std::size_t j = 0; j < ls.size(); ++j)
    if (ls[j].gen == Gen::y) y_at = j;
  if (!x_letter || y_at == ls.size()) throw std::logic_error("region_cancellation_analysis: region word lacks x or y");
  std::size_t end = y_at;
  while (end > 0 && ls[end - 1].gen == Gen::b) --end;
  Word trail;
  std::size_t j = end;
  while (j >= 2 && ls[j - 1] == z && ls[j - 2] == B) {
    trail.push_back(ls[j - 1]);
    j -= 2;
  }
  const Letter y_letter = ls[y_at];
  std::optional<Letter> last_z;
  for (std::size_t t = 0; t < y_at; ++t)
    if (ls[t].gen == Gen::z) last_z = ls[t];
  if (!last_z) throw std::logic_error("region_cancellation_analysis: no z before the y-letter");

  auto depth_of = [](const Word& w) {
    int d = 0;
    for (const auto& site : nesting_profile(w))
      if (site.gen == Gen::z) d = std::max(d, site.depth);
    return d;
  };

  CancellationProfile out;
  out.interior_witness = concat(lead.inverse(), lead);
  out.interior_witness.push_back(*x_letter);
  out.interior_depth = depth_of(out.interior_witness);

  out.si_witness = Word({*last_z, y_letter, last_z->inverse()});
  out.crossing_si_cancels = !nesting_profile(out.si_witness).empty();

  out.complementary_witness = concat(trail.inverse(), trail);
  out.complementary_witness.push_back(y_letter);
  out.complementary_depth = depth_of(out.complementary_witness);
  return out;
}

}  // namespace pillow
