#include "pillow/pillowcase.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace pillow {

namespace {

Sheet sheet_of_cell(std::int64_t col, std::int64_t row) {
  return ((col + row) % 2 == 0) ? Sheet::front : Sheet::back;
}

}  // namespace

ArcDiagram arc_diagram(const Slope& s) {
  ArcDiagram arc{s, {}};
  if (s.is_infinite()) return arc;
  const std::int64_t p = s.p(), q = s.q();
  std::vector<Crossing> vert, horiz;
  vert.reserve(static_cast<std::size_t>(q - 1));
  horiz.reserve(static_cast<std::size_t>(p - 1));

  for (std::int64_t i = 1; i < q; ++i) {
    Crossing c;
    c.vertical = true;
    c.lattice_line = i;
    c.along = Rational(i, q);
    const std::int64_t row = p * i / q, rem = p * i % q;
    c.coord = row % 2 == 0 ? Rational(rem, q) : Rational(q - rem, q);
    c.left = row % 2 == 0 ? 1 : -1;
    c.before = sheet_of_cell(i - 1, row);
    c.letter = {i % 2 == 1 ? Gen::b : Gen::z, c.before == Sheet::front ? 1 : -1};
    vert.push_back(c);
  }
  for (std::int64_t j = 1; j < p; ++j) {
    Crossing c;
    c.vertical = false;
    c.lattice_line = j;
    c.along = Rational(j, p);
    const std::int64_t col = q * j / p, rem = q * j % p;
    c.coord = col % 2 == 0 ? Rational(rem, p) : Rational(p - rem, p);
    c.left = col % 2 == 0 ? -1 : 1;
    c.before = sheet_of_cell(col, j - 1);
    c.letter = {j % 2 == 1 ? Gen::x : Gen::y, c.before == Sheet::front ? 1 : -1};
    horiz.push_back(c);
  }
  // Both runs are already ordered; gcd(p, q) = 1 keeps the segment off
  // lattice points, so there are no ties.
  arc.crossings.resize(vert.size() + horiz.size());
  std::merge(vert.begin(), vert.end(), horiz.begin(), horiz.end(), arc.crossings.begin(),
             [](const Crossing& a, const Crossing& b) { return rational_less(a.along, b.along); });
  return arc;
}

Word beta_word(const Slope& s) {
  if (s.is_infinite()) return Word({{Gen::z, 1}});
  // Same merge as arc_diagram, in integers: vertical line i sits at i/q,
  // horizontal line j at j/p.
  const std::int64_t p = s.p(), q = s.q();
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(p + q - 2));
  std::int64_t i = 1, j = 1;
  while (i < q || j < p) {
    if (j >= p || (i < q && i * p < j * q)) {
      const bool front = sheet_of_cell(i - 1, p * i / q) == Sheet::front;
      letters.push_back({i % 2 == 1 ? Gen::b : Gen::z, front ? 1 : -1});
      ++i;
    } else {
      const bool front = sheet_of_cell(q * j / p, j - 1) == Sheet::front;
      letters.push_back({j % 2 == 1 ? Gen::x : Gen::y, front ? 1 : -1});
      ++j;
    }
  }
  return Word(std::move(letters));
}

Word corner_loop_word() { return Word({{Gen::y, 1}, {Gen::z, -1}}); }

Word alpha_word(const Slope& s) {
  if (s.is_infinite()) throw SlopeError("alpha_word: the infinite slope has no closed-up arc");
  const Word beta = beta_word(s);
  Word w = beta.inverse();
  w.append(corner_loop_word());
  w.append(beta);
  return w;
}

bool obstruction_present(const Word& w, bool closed) {
  const Word r = w.xyz();
  bool xy = false, yz = false, zx = false;
  auto note = [&](Gen a, Gen b) {
    if (a == b) return;
    const bool has_x = a == Gen::x || b == Gen::x;
    const bool has_y = a == Gen::y || b == Gen::y;
    const bool has_z = a == Gen::z || b == Gen::z;
    if (has_x && has_y) xy = true;
    if (has_y && has_z) yz = true;
    if (has_z && has_x) zx = true;
  };
  for (std::size_t i = 0; i + 1 < r.size(); ++i) note(r[i].gen, r[i + 1].gen);
  if (closed && r.size() > 1) note(r[r.size() - 1].gen, r[0].gen);
  return xy && yz && zx;
}

SidePos side_position(const EdgePoint& p) {
  switch (p.edge) {
    case Gen::y:
    case Gen::b: return {p.coord, p.level};
    case Gen::x:
    case Gen::z: return {Rational(1) - p.coord, -p.level};
  }
  return {};
}

EdgePoint left_copy(const Crossing& c, int eps_level) { return {c.letter.gen, c.coord, c.left * eps_level}; }
EdgePoint right_copy(const Crossing& c, int eps_level) { return {c.letter.gen, c.coord, -c.left * eps_level}; }

std::vector<CurveChord> band_chords(const ArcDiagram& arc, int eps_level) {
  std::vector<CurveChord> out;
  const auto& cs = arc.crossings;
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    const Sheet sheet = other(cs[i].before);
    out.push_back({sheet, left_copy(cs[i], eps_level), left_copy(cs[i + 1], eps_level)});
    out.push_back({sheet, right_copy(cs[i], eps_level), right_copy(cs[i + 1], eps_level)});
  }
  return out;
}

std::vector<CurveChord> alpha_chords(const ArcDiagram& arc, int eps_level) {
  if (arc.crossings.empty()) throw SlopeError("alpha_chords: needs a finite slope");
  const auto& first = arc.crossings.front();
  const auto& last = arc.crossings.back();
  const EdgePoint z_low{Gen::z, Rational(0), eps_level};
  const EdgePoint y_low{Gen::y, Rational(0), eps_level};

  std::vector<CurveChord> out;
  out.push_back({Sheet::front, z_low, left_copy(first, eps_level)});
  out.push_back({Sheet::front, right_copy(first, eps_level), y_low});
  out.push_back({Sheet::back, y_low, z_low});
  auto band = band_chords(arc, eps_level);
  out.insert(out.end(), band.begin(), band.end());
  const Sheet end_sheet = other(last.before);
  out.push_back({end_sheet, left_copy(last, eps_level), std::nullopt});
  out.push_back({end_sheet, std::nullopt, right_copy(last, eps_level)});
  return out;
}

namespace {

constexpr int kCornerPPrime = 0;
constexpr int kCornerP = 3;

BoundaryCycle square_cycle() {
  BoundaryCycle c;
  c.corners = {{"P'", 2}, {"LR", 1}, {"UR", 1}, {"P", 2}};
  c.sides = {{"y", Gen::y}, {"b", Gen::b}, {"x", Gen::x}, {"z", Gen::z}};
  return c;
}

int square_side(Gen g) {
  switch (g) {
    case Gen::y: return 0;
    case Gen::b: return 1;
    case Gen::x: return 2;
    case Gen::z: return 3;
  }
  return -1;
}

ChordEnd square_end(const std::optional<EdgePoint>& p) {
  if (!p) return ChordEnd::at_corner(kCornerP);
  return ChordEnd::on_side(square_side(p->edge), side_position(*p));
}

ChordMap alpha_map_of(const ArcDiagram& arc) {
  ChordMapBuilder builder(square_cycle());
  for (const auto& ch : alpha_chords(arc, 1)) builder.add_chord(ch.sheet, square_end(ch.a), square_end(ch.b), 0);
  return builder.build();
}

}  // namespace

ChordMap build_alpha_map(const Slope& s) {
  if (s.is_infinite()) throw SlopeError("build_alpha_map: needs a finite slope");
  return alpha_map_of(arc_diagram(s));
}

PlanarMap build_planar_map(const Slope& s) {
  const SlopeClass cls = classify(s);
  const auto* gen = as_general(cls);
  if (!gen) throw SlopeError("build_planar_map: slope " + s.str() + " is not in the General class");

  PlanarMap pm;
  pm.slope = s;
  pm.slope_class = cls;
  const ArcDiagram arc = arc_diagram(s);
  pm.map = alpha_map_of(arc);
  pm.p_prime_vertex = pm.map.corner_vertex(kCornerPPrime);
  pm.p_vertex = pm.map.corner_vertex(kCornerP);

  const std::size_t prefix_len = expected_prefix(gen->subcase, gen->k).size();
  if (prefix_len > arc.crossings.size()) throw std::logic_error("build_planar_map: arc shorter than its prefix");
  pm.pi_crossing = prefix_len - 1;
  const Crossing& pi = arc.crossings[pm.pi_crossing];
  pm.pi = {pi.letter.gen, pi.coord, 0};
  pm.si_edge = pm.map.segment_containing(square_side(pi.letter.gen), side_position(pm.pi));

  // Flood from the faces at P' across segments other than s_i.
  const auto& faces = pm.map.faces();
  const auto& edges = pm.map.edges();
  std::vector<int> parent_face(faces.size(), -2), parent_edge(faces.size(), -1);
  std::deque<int> queue;
  int start = -1;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& vs = faces[f].vertices;
    if (std::find(vs.begin(), vs.end(), pm.p_prime_vertex) != vs.end() && faces[f].sheet == Sheet::front) start = f;
  }
  if (start < 0) throw std::logic_error("build_planar_map: no front face at P'");
  parent_face[start] = -1;
  queue.push_back(start);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    pm.region_faces.push_back(f);
    for (const auto& d : faces[f].darts) {
      if (edges[d.edge].kind != EdgeKind::segment || d.edge == pm.si_edge) continue;
      const auto [a, b] = pm.map.faces_of(d.edge);
      const int g = (a == f) ? b : a;
      if (parent_face[g] != -2) continue;
      parent_face[g] = f;
      parent_edge[g] = d.edge;
      queue.push_back(g);
    }
  }
  std::sort(pm.region_faces.begin(), pm.region_faces.end());

  // Euler characteristic of the closed region.
  std::vector<char> in_region(faces.size(), 0);
  for (int f : pm.region_faces) in_region[f] = 1;
  std::vector<char> v_seen(pm.map.vertices().size(), 0), e_seen(edges.size(), 0);
  int nv = 0, ne = 0;
  for (int f : pm.region_faces) {
    for (const auto& d : faces[f].darts) {
      if (!e_seen[d.edge]) e_seen[d.edge] = 1, ++ne;
      for (int v : {edges[d.edge].u, edges[d.edge].v})
        if (!v_seen[v]) v_seen[v] = 1, ++nv;
    }
  }
  pm.region_euler_characteristic = nv - ne + static_cast<int>(pm.region_faces.size());

  // Letters along the dual path from P' to the face on the near side of s_i.
  const auto [sa, sb] = pm.map.faces_of(pm.si_edge);
  const int near = in_region[sa] ? sa : sb;
  const int far = near == sa ? sb : sa;
  if (in_region[far]) throw std::logic_error("build_planar_map: s_i does not bound the region");
  std::vector<Letter> path;
  auto crossing_letter = [&](int from_face, int edge) {
    const int sign = faces[from_face].sheet == Sheet::front ? 1 : -1;
    return Letter{*edges[edge].letter, sign};
  };
  for (int f = near; parent_face[f] != -1; f = parent_face[f]) path.push_back(crossing_letter(parent_face[f], parent_edge[f]));
  std::reverse(path.begin(), path.end());
  path.push_back(crossing_letter(near, pm.si_edge));
  pm.region_word = Word(std::move(path));
  return pm;
}

}  // namespace pillow
