#include "hermann/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "hermann/faces.hpp"
#include "hermann/root_geometry.hpp"

namespace hermann {

namespace {

struct Vec2 {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string emit_cell_svg(const SymmetricTriad& t, const std::vector<MarkedPoint>& points) {
  if (t.rank != 2) throw std::invalid_argument("cell diagrams need rank 2, got rank " + std::to_string(t.rank));
  auto geom = RootGeometry::from_triad(t);
  auto embed = [&](const std::vector<double>& x) -> Vec2 {
    if (!geom) return {x[0], x[1]};
    auto e = geom->embed(x);
    return {e[0], e[1]};
  };

  FaceEnumeration fe = enumerate_faces(t);
  std::vector<const Face*> vertices, edges;
  for (const auto& f : fe.faces) {
    if (f.dimension == 0) vertices.push_back(&f);
    if (f.dimension == 1) edges.push_back(&f);
  }
  auto vertex_pos = [&](const Face& f) { return embed(f.ambient({})); };

  std::vector<Vec2> poly;
  for (const Face* v : vertices) poly.push_back(vertex_pos(*v));
  Vec2 c{0, 0};
  for (const auto& p : poly) c = {c.x + p.x / static_cast<double>(poly.size()), c.y + p.y / static_cast<double>(poly.size())};
  std::vector<std::size_t> order(poly.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::atan2(poly[a].y - c.y, poly[a].x - c.x) < std::atan2(poly[b].y - c.y, poly[b].x - c.x);
  });

  std::vector<Vec2> marks;
  for (const auto& m : points) marks.push_back(embed(m.z.to_radians()));

  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const auto* set : {&poly, &marks}) {
    for (const auto& p : *set) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  }
  const double size = 440.0, margin = 110.0;
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  double scale = size / span;
  auto px = [&](Vec2 p) -> Vec2 { return {margin + (p.x - lo_x) * scale, margin + (hi_y - p.y) * scale}; };
  Vec2 cc = px(c);
  const double width = 2 * margin + (hi_x - lo_x) * scale, height = 2 * margin + (hi_y - lo_y) * scale;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  os << "  <title>" << escape(t.name) << "</title>\n";
  os << "  <polygon points=\"";
  for (std::size_t k = 0; k < order.size(); ++k) {
    Vec2 p = px(poly[order[k]]);
    os << (k ? " " : "") << num(p.x) << "," << num(p.y);
  }
  os << "\" fill=\"#dde8f5\" stroke=\"none\"/>\n";

  for (const Face* e : edges) {
    std::vector<Vec2> ends;
    for (const Face* v : vertices) {
      if (std::includes(v->tight.begin(), v->tight.end(), e->tight.begin(), e->tight.end())) ends.push_back(px(vertex_pos(*v)));
    }
    if (ends.size() != 2) continue;
    os << "  <line x1=\"" << num(ends[0].x) << "\" y1=\"" << num(ends[0].y) << "\" x2=\"" << num(ends[1].x) << "\" y2=\""
       << num(ends[1].y) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    Vec2 mid{(ends[0].x + ends[1].x) / 2, (ends[0].y + ends[1].y) / 2};
    double dx = mid.x - cc.x, dy = mid.y - cc.y, len = std::hypot(dx, dy);
    if (len > 0) mid = {mid.x + 28 * dx / len, mid.y + 28 * dy / len};
    std::string label;
    for (std::size_t h : e->tight) label += (label.empty() ? "" : " = ") + fe.hyperplanes[h].label(t);
    os << "  <text x=\"" << num(mid.x) << "\" y=\"" << num(mid.y)
       << "\" font-family=\"serif\" font-size=\"12\" text-anchor=\"middle\">" << escape(label) << "</text>\n";
  }

  for (std::size_t k = 0; k < points.size(); ++k) {
    Vec2 p = px(marks[k]);
    os << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"4\" fill=\"#b22222\"/>\n";
    os << "  <text x=\"" << num(p.x + 7) << "\" y=\"" << num(p.y - 7) << "\" font-family=\"serif\" font-size=\"11\">"
       << escape(points[k].label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hermann
