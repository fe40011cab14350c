#include <json.hpp>

#include <sstream>

#include "pillow/pillowcase.hpp"

namespace pillow {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 40.0;

struct Pt {
  double x, y;
};

Pt to_svg(double u, double v) { return {kMargin + u * kSize, kMargin + (1.0 - v) * kSize}; }

Pt crossing_point(const Crossing& c) {
  const double t = boost::rational_cast<double>(c.coord);
  switch (c.letter.gen) {
    case Gen::b: return to_svg(1.0, t);
    case Gen::z: return to_svg(0.0, t);
    case Gen::x: return to_svg(t, 1.0);
    case Gen::y: return to_svg(t, 0.0);
  }
  return {0, 0};
}

}  // namespace

std::string render_svg(const Slope& s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  const double w = kSize + 2 * kMargin;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << w << "\">\n"
    << "<title>arc of slope " << s.str() << "</title>\n";

  const Pt ll = to_svg(0, 0), lr = to_svg(1, 0), ur = to_svg(1, 1), ul = to_svg(0, 1);
  auto edge = [&](Pt a, Pt b, const char* name, const char* colour) {
    o << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
      << "\" stroke=\"" << colour << "\" stroke-width=\"3\"/>\n"
      << "<text x=\"" << (a.x + b.x) / 2 + 6 << "\" y=\"" << (a.y + b.y) / 2 - 6 << "\" font-size=\"16\">" << name
      << "</text>\n";
  };
  edge(ll, lr, "y", "#1f77b4");
  edge(lr, ur, "b", "#7f7f7f");
  edge(ur, ul, "x", "#d62728");
  edge(ul, ll, "z", "#2ca02c");
  auto corner = [&](Pt p, const char* name) {
    o << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"6\" fill=\"black\"/>\n"
      << "<text x=\"" << p.x - 30 << "\" y=\"" << p.y + 20 << "\" font-size=\"14\">" << name << "</text>\n";
  };
  corner(ll, "P'");
  corner(ul, "P");
  corner(lr, "LR");
  corner(ur, "UR");

  if (s.is_infinite()) {
    o << "<line class=\"beta\" x1=\"" << ll.x << "\" y1=\"" << ll.y << "\" x2=\"" << ul.x << "\" y2=\"" << ul.y
      << "\" stroke=\"orange\" stroke-width=\"2\" stroke-dasharray=\"2,2\"/>\n";
  } else {
    const ArcDiagram arc = arc_diagram(s);
    Pt prev = ll;
    Sheet sheet = Sheet::front;
    auto piece = [&](Pt a, Pt b, Sheet sh) {
      o << "<line class=\"beta\" x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
        << "\" stroke=\"orange\" stroke-width=\"2\"" << (sh == Sheet::back ? " stroke-dasharray=\"6,4\"" : "")
        << "/>\n";
    };
    for (std::size_t i = 0; i < arc.crossings.size(); ++i) {
      const auto& c = arc.crossings[i];
      const Pt p = crossing_point(c);
      piece(prev, p, sheet);
      Word single({c.letter});
      o << "<circle class=\"crossing\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"3\" fill=\"orange\"/>\n"
        << "<text class=\"label\" x=\"" << p.x + 4 << "\" y=\"" << p.y - 4 << "\" font-size=\"11\">" << i + 1 << ":"
        << single.str() << "</text>\n";
      prev = p;
      sheet = other(sheet);
    }
    piece(prev, ul, sheet);
  }
  o << "</svg>\n";
  return o.str();
}

std::string crossings_json(const Slope& s) {
  nlohmann::ordered_json j;
  j["slope"] = s.str();
  j["word"] = beta_word(s).str();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : arc_diagram(s).crossings) {
    nlohmann::ordered_json e;
    e["letter"] = Word({c.letter}).str();
    e["line"] = c.vertical ? "vertical" : "horizontal";
    e["lattice_index"] = c.lattice_line;
    e["along"] = {c.along.numerator(), c.along.denominator()};
    e["coord"] = {c.coord.numerator(), c.coord.denominator()};
    e["sheet_before"] = c.before == Sheet::front ? "front" : "back";
    arr.push_back(std::move(e));
  }
  j["crossings"] = std::move(arr);
  return j.dump(2);
}

}  // namespace pillow
