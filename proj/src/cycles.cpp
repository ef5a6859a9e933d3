#include "ipseg/cycles.hpp"

#include <algorithm>
#include <unordered_map>

#include "ipseg/intersection.hpp"

namespace ipseg {

std::size_t ArcDecomposition::count(ArcKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.kind == kind; }));
}

bool is_chordless_cycle(const Model& model, const std::vector<std::string>& order) {
  const std::size_t n = order.size();
  if (n < 4 || n != model.size()) return false;
  std::vector<const Segment*> seq;
  for (const auto& id : order) {
    const auto idx = model.find(id);
    if (!idx) return false;
    seq.push_back(&model.segments[*idx]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (segments_intersect(*seq[i], *seq[j]) != consecutive) return false;
    }
  return true;
}

namespace {

void require_cycle(const Model& model, const std::vector<std::string>& order) {
  if (!is_chordless_cycle(model, order))
    throw std::invalid_argument("model is not a chordless cycle (n >= 4) in the given order");
}

std::size_t position(const std::vector<std::string>& order, const std::string& id) {
  const auto it = std::find(order.begin(), order.end(), id);
  if (it == order.end()) throw std::invalid_argument("'" + id + "' is not in the cycle");
  return static_cast<std::size_t>(it - order.begin());
}

// The part of interval `target` that `neighbour` touches, as [lo, hi].
std::pair<Coord, Coord> coverage(const IntervalShape& target, const Segment& neighbour) {
  if (neighbour.is_interval()) {
    const auto& iv = neighbour.as_interval();
    return {std::max(target.xl, iv.xl), std::min(target.xr, iv.xr)};
  }
  const Coord x = neighbour.low_on(target.line);
  return {x, x};
}

}  // namespace

ArcDecomposition arc_decomposition(const Model& model, const std::vector<std::string>& order) {
  require_cycle(model, order);
  const std::size_t n = order.size();
  std::vector<const Segment*> seq;
  for (const auto& id : order) seq.push_back(&model.at(id));
  auto kind = [&](std::size_t i) {
    return seq[i % n]->is_interval() ? ArcKind::Interval : ArcKind::Permutation;
  };

  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < n && !start; ++i)
    if (kind(i) != kind(i + n - 1)) start = i;

  ArcDecomposition out;
  const std::size_t first = start.value_or(0);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = first + step;
    if (step == 0 || kind(i) != kind(i - 1)) {
      Arc arc;
      arc.kind = kind(i);
      if (arc.kind == ArcKind::Interval) arc.line = seq[i % n]->as_interval().line;
      out.arcs.push_back(std::move(arc));
    }
    out.arcs.back().members.push_back(order[i % n]);
  }
  return out;
}

CycleModel expand_interval_arc(const CycleModel& cycle, const std::string& target) {
  require_cycle(cycle.model, cycle.order);
  const std::size_t n = cycle.order.size();
  const std::size_t pos = position(cycle.order, target);
  const Segment& seg = cycle.model.at(target);
  if (!seg.is_interval())
    throw std::invalid_argument("'" + target + "' is not an interval segment");
  const IntervalShape& iv = seg.as_interval();

  const std::string& prev_id = cycle.order[(pos + n - 1) % n];
  const std::string& next_id = cycle.order[(pos + 1) % n];
  const auto prev_cov = coverage(iv, cycle.model.at(prev_id));
  const auto next_cov = coverage(iv, cycle.model.at(next_id));
  const bool prev_on_left = prev_cov.first < next_cov.first;
  const auto& left = prev_on_left ? prev_cov : next_cov;
  const auto& right = prev_on_left ? next_cov : prev_cov;

  const Coord mid = (left.second + right.first) / 2;
  const Coord delta = (right.first - left.second) / 4;
  Segment first = Segment::interval(target + ".1", iv.line, iv.xl, mid + delta);
  Segment second = Segment::interval(target + ".2", iv.line, mid - delta, iv.xr);

  CycleModel out;
  for (const auto& s : cycle.model.segments) {
    if (s.id != target) {
      out.model.segments.push_back(s);
      continue;
    }
    out.model.segments.push_back(first);
    out.model.segments.push_back(second);
  }
  for (const auto& id : cycle.order) {
    if (id != target) {
      out.order.push_back(id);
      continue;
    }
    out.order.push_back(prev_on_left ? first.id : second.id);
    out.order.push_back(prev_on_left ? second.id : first.id);
  }
  return out;
}

CycleModel contract_interval_arc(const CycleModel& cycle, const std::string& id_a,
                                 const std::string& id_b) {
  require_cycle(cycle.model, cycle.order);
  const std::size_t n = cycle.order.size();
  if (n < 5) throw std::invalid_argument("contracting a C4 would leave a triangle");
  const std::size_t pa = position(cycle.order, id_a);
  const std::size_t pb = position(cycle.order, id_b);
  if ((pa + 1) % n != pb && (pb + 1) % n != pa)
    throw std::invalid_argument("'" + id_a + "' and '" + id_b + "' are not consecutive");
  const Segment& a = cycle.model.at(id_a);
  const Segment& b = cycle.model.at(id_b);
  if (!a.is_interval() || !b.is_interval())
    throw std::invalid_argument("'" + id_a + "' and '" + id_b + "' are not both interval segments");

  std::string merged_id = id_a + "+" + id_b;
  for (const auto& [x, y] : {std::pair{id_a, id_b}, std::pair{id_b, id_a}}) {
    if (x.size() > 2 && x.ends_with(".1") && y == x.substr(0, x.size() - 2) + ".2")
      merged_id = x.substr(0, x.size() - 2);
  }
  const auto& ia = a.as_interval();
  const auto& ib = b.as_interval();
  const Segment merged = Segment::interval(merged_id, ia.line, std::min(ia.xl, ib.xl),
                                           std::max(ia.xr, ib.xr));

  CycleModel out;
  bool placed = false;
  for (const auto& s : cycle.model.segments) {
    if (s.id == id_a || s.id == id_b) {
      if (!placed) out.model.segments.push_back(merged);
      placed = true;
    } else {
      out.model.segments.push_back(s);
    }
  }
  placed = false;
  for (const auto& id : cycle.order) {
    if (id == id_a || id == id_b) {
      if (!placed) out.order.push_back(merged_id);
      placed = true;
    } else {
      out.order.push_back(id);
    }
  }
  return out;
}

CycleModel canonical_star_cycle(std::size_t n) {
  if (n < 4) throw std::invalid_argument("cycle length must be at least 4");
  CycleModel out;
  auto add = [&](Segment s) {
    out.order.push_back(s.id);
    out.model.segments.push_back(std::move(s));
  };
  if (n == 4) {
    add(Segment::interval("i1", LineId::L1, 1, 4));
    add(Segment::interval("i2", LineId::L1, 3, 8));
    add(Segment::permutation("p1", 6, 1));
    add(Segment::permutation("p2", 2, 2));
    return out;
  }
  // Interval k (k >= 2) spans [3k-3, 3k+1] and overlaps only its chain
  // neighbours; the last one is widened to reach the first permutation top.
  const auto m = static_cast<std::int64_t>(n - 3);
  for (std::int64_t k = 1; k <= m; ++k) {
    const std::int64_t xl = k == 1 ? 1 : 3 * k - 3;
    const std::int64_t xr = k == m ? 3 * k + 3 : (k == 1 ? 4 : 3 * k + 1);
    add(Segment::interval("i" + std::to_string(k), LineId::L1, xl, xr));
  }
  add(Segment::permutation("p1", 3 * m + 2, 7));
  add(Segment::permutation("p2", 3 * m + 6, 5));
  add(Segment::permutation("p3", 2, 6));
  return out;
}

CycleModel canonical_two_arc_cycle(std::size_t n) {
  if (n < 4) throw std::invalid_argument("cycle length must be at least 4");
  CycleModel out;
  auto add = [&](Segment s) {
    out.order.push_back(s.id);
    out.model.segments.push_back(std::move(s));
  };
  if (n == 4) {
    add(Segment::interval("i1", LineId::L1, 6, 9));
    add(Segment::permutation("q1", 7, 7));
    add(Segment::interval("i2", LineId::L2, 6, 9));
    add(Segment::permutation("q2", 8, 8));
    return out;
  }
  add(Segment::interval("i1", LineId::L1, 6, 9));
  add(Segment::permutation("q1", 7, 7));
  add(Segment::interval("i2", LineId::L2, 6, 9));
  add(Segment::permutation("q2", 12, 8));
  add(Segment::permutation("q3", 8, 12));
  for (std::size_t step = 0; out.order.size() < n; ++step) {
    const LineId line = step % 2 == 0 ? LineId::L1 : LineId::L2;
    const auto arcs = arc_decomposition(out.model, out.order);
    const auto arc = std::find_if(arcs.arcs.begin(), arcs.arcs.end(),
                                  [&](const Arc& a) { return a.line == line; });
    out = expand_interval_arc(out, arc->members.back());
  }
  return out;
}

CycleModel permutation_c4() {
  CycleModel out;
  out.model.segments = {Segment::permutation("a", 1, 3), Segment::permutation("b", 2, 4),
                        Segment::permutation("c", 3, 1), Segment::permutation("d", 4, 2)};
  out.order = {"a", "c", "b", "d"};
  return out;
}

Graph gn_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("G_n needs n >= 3");
  Graph g;
  for (const char* prefix : {"v", "w", "z"})
    for (std::size_t i = 1; i <= n; ++i) g.vertices.push_back(prefix + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) {
    const auto s = std::to_string(i);
    g.add_edge("v" + s, "v" + std::to_string(i % n + 1));
    g.add_edge("v" + s, "w" + s);
    g.add_edge("w" + s, "z" + s);
  }
  return g;
}

Model g7_model() {
  // Cycle v1..v7: v1, v2 interval arc on L1; v3, v4 permutation arc; v5 alone
  // on L2; v6, v7 permutation arc. Each w_i sticks out of a free end of v_i
  // (or surrounds a free permutation endpoint) and z_i hangs off w_i.
  using L = LineId;
  return Model{{
      Segment::interval("v1", L::L1, 20, 30), Segment::interval("v2", L::L1, 28, 40),
      Segment::permutation("v3", 38, 35),     Segment::permutation("v4", 55, 18),
      Segment::interval("v5", L::L2, 10, 20), Segment::permutation("v6", 5, 12),
      Segment::permutation("v7", 22, 5),

      Segment::interval("w1", L::L1, 17, 21), Segment::interval("w2", L::L1, 39, 45),
      Segment::interval("w3", L::L2, 34, 37), Segment::interval("w4", L::L1, 54, 57),
      Segment::interval("w5", L::L2, 19, 25), Segment::interval("w6", L::L1, 3, 7),
      Segment::interval("w7", L::L2, 3, 7),

      Segment::interval("z1", L::L1, 15, 18), Segment::interval("z2", L::L1, 44, 48),
      Segment::interval("z3", L::L2, 36, 39), Segment::interval("z4", L::L1, 56, 59),
      Segment::interval("z5", L::L2, 24, 28), Segment::interval("z6", L::L1, 1, 4),
      Segment::interval("z7", L::L2, 1, 4),
  }};
}

}  // namespace ipseg
