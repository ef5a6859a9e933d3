#include "ipseg/intersection.hpp"

namespace ipseg {

namespace {

bool interval_vs_permutation(const IntervalShape& iv, const PermutationShape& p) {
  const Coord& x = iv.line == LineId::L1 ? p.x_top : p.x_bot;
  return iv.xl <= x && x <= iv.xr;
}

struct Point {
  Coord x;
  Coord y;
};

// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c) {
  const Coord v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// c is collinear with a-b; is it inside the bounding box?
bool on_segment(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

std::pair<Point, Point> endpoints(const Segment& s) {
  if (s.is_interval()) {
    const auto& iv = s.as_interval();
    const Coord y(line_number(iv.line));
    return {{iv.xl, y}, {iv.xr, y}};
  }
  const auto& p = s.as_permutation();
  return {{p.x_top, Coord(1)}, {p.x_bot, Coord(2)}};
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& p) {
  if (s.is_interval() && p.is_interval()) {
    const auto& a = s.as_interval();
    const auto& b = p.as_interval();
    if (a.line != b.line) return false;
    // Either one's left endpoint lies in the other, or one's right endpoint
    // does; checking a single direction misses [1,4] vs [3,6].
    auto one_way = [](const IntervalShape& u, const IntervalShape& v) {
      return (v.xl <= u.xl && u.xl <= v.xr) || (u.xl <= v.xr && v.xr <= u.xr);
    };
    return one_way(a, b) || one_way(b, a);
  }
  if (s.is_permutation() && p.is_permutation()) {
    const auto& a = s.as_permutation();
    const auto& b = p.as_permutation();
    return (a.x_top <= b.x_top && b.x_bot <= a.x_bot) || (b.x_top <= a.x_top && a.x_bot <= b.x_bot);
  }
  if (s.is_interval()) return interval_vs_permutation(s.as_interval(), p.as_permutation());
  return interval_vs_permutation(p.as_interval(), s.as_permutation());
}

bool geometric_intersect_oracle(const Segment& s, const Segment& p) {
  const auto [a, b] = endpoints(s);
  const auto [c, d] = endpoints(p);
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

std::vector<std::vector<bool>> adjacency_matrix(const Model& model) {
  const std::size_t n = model.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (segments_intersect(model.segments[i], model.segments[j])) adj[i][j] = adj[j][i] = true;
  return adj;
}

Graph build_graph(const Model& model) {
  Graph g;
  g.vertices.reserve(model.size());
  for (const auto& s : model.segments) g.vertices.push_back(s.id);
  const auto adj = adjacency_matrix(model);
  for (std::size_t i = 0; i < model.size(); ++i)
    for (std::size_t j = i + 1; j < model.size(); ++j)
      if (adj[i][j]) g.add_edge(g.vertices[i], g.vertices[j]);
  return g;
}

}  // namespace ipseg
