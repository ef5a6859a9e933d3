#include "ipseg/model.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace ipseg {

bool Segment::touches(LineId line) const noexcept {
  if (const auto* iv = std::get_if<IntervalShape>(&shape)) return iv->line == line;
  return true;
}

Coord Segment::low_on(LineId line) const {
  if (const auto* iv = std::get_if<IntervalShape>(&shape)) return iv->xl;
  const auto& p = std::get<PermutationShape>(shape);
  return line == LineId::L1 ? p.x_top : p.x_bot;
}

Coord Segment::high_on(LineId line) const {
  if (const auto* iv = std::get_if<IntervalShape>(&shape)) return iv->xr;
  const auto& p = std::get<PermutationShape>(shape);
  return line == LineId::L1 ? p.x_top : p.x_bot;
}

bool Model::is_star() const noexcept {
  std::optional<LineId> seen;
  for (const auto& s : segments) {
    if (!s.is_interval()) continue;
    const LineId line = s.as_interval().line;
    if (seen && *seen != line) return false;
    seen = line;
  }
  return true;
}

std::optional<std::size_t> Model::find(std::string_view id) const {
  for (std::size_t i = 0; i < segments.size(); ++i)
    if (segments[i].id == id) return i;
  return std::nullopt;
}

const Segment& Model::at(std::string_view id) const {
  const auto idx = find(id);
  if (!idx) throw std::out_of_range("no segment with id '" + std::string(id) + "'");
  return segments[*idx];
}

namespace {
std::pair<std::string, std::string> edge_key(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}
}  // namespace

void Graph::add_edge(const std::string& a, const std::string& b) {
  if (a == b) throw std::invalid_argument("self-loop on '" + a + "'");
  edges.insert(edge_key(a, b));
}

bool Graph::has_edge(const std::string& a, const std::string& b) const {
  return edges.count(edge_key(a, b)) != 0;
}

std::size_t Graph::degree(const std::string& v) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
    return e.first == v || e.second == v;
  }));
}

std::vector<Violation> validate(const Model& model) {
  std::vector<Violation> out;
  std::unordered_set<std::string> seen;
  for (const auto& s : model.segments) {
    if (s.id.empty()) out.push_back({s.id, "id must be non-empty"});
    if (std::any_of(s.id.begin(), s.id.end(), [](unsigned char c) { return std::isspace(c); }))
      out.push_back({s.id, "id must not contain whitespace"});
    if (!seen.insert(s.id).second) out.push_back({s.id, "ids unique"});
    if (s.is_interval() && s.as_interval().xl > s.as_interval().xr)
      out.push_back({s.id, "xl ≤ xr"});
  }
  return out;
}

bool right_of(const Segment& q, const Segment& p) {
  for (const LineId line : {LineId::L1, LineId::L2}) {
    if (!q.touches(line) || !p.touches(line)) continue;
    if (!(p.low_on(line) > q.high_on(line))) return false;
  }
  return true;
}

bool between(const Segment& r, const Segment& q, const Segment& p) {
  return right_of(q, r) && right_of(r, p);
}

}  // namespace ipseg
