#include <algorithm>
#include <map>

#include "ipseg/model.hpp"

namespace ipseg {

namespace {

enum class TokenRole { Left, Perm, Right };

struct Token {
  std::size_t segment;
  TokenRole role;
  Coord x;
};

std::vector<Token> tokens_on(const Model& model, LineId line) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < model.segments.size(); ++i) {
    const Segment& s = model.segments[i];
    if (!s.touches(line)) continue;
    if (s.is_interval()) {
      out.push_back({i, TokenRole::Left, s.as_interval().xl});
      out.push_back({i, TokenRole::Right, s.as_interval().xr});
    } else {
      out.push_back({i, TokenRole::Perm, s.low_on(line)});
    }
  }
  return out;
}

void set_coord(Segment& s, LineId line, TokenRole role, const Coord& x) {
  if (auto* iv = std::get_if<IntervalShape>(&s.shape)) {
    (role == TokenRole::Left ? iv->xl : iv->xr) = x;
    return;
  }
  auto& p = std::get<PermutationShape>(s.shape);
  (line == LineId::L1 ? p.x_top : p.x_bot) = x;
}

// Spreads every group of coincident endpoints on `line` across the empty open
// interval around it: left endpoints of intervals first, then permutation
// endpoints in reverse order of their other-line endpoints, then right
// endpoints of intervals.
void deshare_line(Model& model, LineId line) {
  const std::vector<Token> tokens = tokens_on(model, line);
  std::map<Coord, std::vector<const Token*>> groups;
  for (const auto& t : tokens) groups[t.x].push_back(&t);

  // Gaps are computed from the coordinates before any move, and each gap is
  // at most half the distance to either neighbour, so gaps never overlap.
  std::vector<std::pair<const Token*, Coord>> assignments;
  for (auto it = groups.begin(); it != groups.end(); ++it) {
    auto& members = it->second;
    if (members.size() < 2) continue;
    const Coord e = it->first;

    std::optional<Coord> half;
    if (it != groups.begin()) half = (e - std::prev(it)->first) / 2;
    if (auto next = std::next(it); next != groups.end()) {
      const Coord h = (next->first - e) / 2;
      half = half ? std::min(*half, h) : h;
    }
    const Coord h = half.value_or(Coord(1));

    const auto& segs = model.segments;
    auto rank = [](TokenRole r) { return r == TokenRole::Left ? 0 : r == TokenRole::Perm ? 1 : 2; };
    std::stable_sort(members.begin(), members.end(), [&](const Token* a, const Token* b) {
      if (rank(a->role) != rank(b->role)) return rank(a->role) < rank(b->role);
      const Segment& sa = segs[a->segment];
      const Segment& sb = segs[b->segment];
      if (a->role == TokenRole::Perm) {
        const Coord oa = sa.low_on(other_line(line));
        const Coord ob = sb.low_on(other_line(line));
        if (oa != ob) return oa > ob;
      }
      return sa.id < sb.id;
    });

    const auto count = static_cast<std::int64_t>(members.size());
    for (std::int64_t j = 0; j < count; ++j) {
      const Coord x = e - h + Coord(2 * (j + 1), count + 1) * h;
      assignments.emplace_back(members[static_cast<std::size_t>(j)], x);
    }
  }

  for (const auto& [token, x] : assignments)
    set_coord(model.segments[token->segment], line, token->role, x);
}

}  // namespace

bool endpoint_distinct(const Model& model) {
  for (const LineId line : {LineId::L1, LineId::L2}) {
    std::vector<Coord> xs;
    for (const auto& t : tokens_on(model, line)) xs.push_back(t.x);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return false;
  }
  return true;
}

Model deshare(const Model& model) {
  Model out = model;
  deshare_line(out, LineId::L1);
  deshare_line(out, LineId::L2);
  return out;
}

Model compact(const Model& model) {
  Model out = model;
  for (const LineId line : {LineId::L1, LineId::L2}) {
    const std::vector<Token> tokens = tokens_on(model, line);
    std::vector<Coord> xs;
    xs.reserve(tokens.size());
    for (const auto& t : tokens) xs.push_back(t.x);
    std::sort(xs.begin(), xs.end());
    if (auto dup = std::adjacent_find(xs.begin(), xs.end()); dup != xs.end())
      throw std::invalid_argument("shared endpoints on L" + std::to_string(line_number(line)) +
                                  " at x=" + format_coord(*dup));
    for (const auto& t : tokens) {
      const auto r = std::lower_bound(xs.begin(), xs.end(), t.x) - xs.begin();
      set_coord(out.segments[t.segment], line, t.role, Coord(r + 1));
    }
  }
  return out;
}

Model normalize(const Model& model) { return compact(deshare(model)); }

}  // namespace ipseg
