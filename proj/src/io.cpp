#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ipseg/model.hpp"

namespace ipseg {

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error(reason + " at line " + std::to_string(line)), line_(line) {}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Calls fn(line_number, fields) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    fn(line_no, fields);
  }
}

Coord coord_field(std::string_view field, std::size_t line_no) {
  try {
    return parse_coord(field);
  } catch (const std::invalid_argument&) {
    throw ParseError(line_no, "bad coordinate '" + std::string(field) + "'");
  }
}

}  // namespace

Coord parse_coord(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = parse_int(text.substr(0, slash));
  if (!num) throw std::invalid_argument("bad coordinate '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Coord(*num);
  const auto den = parse_int(text.substr(slash + 1));
  if (!den || *den == 0) throw std::invalid_argument("bad coordinate '" + std::string(text) + "'");
  return Coord(*num, *den);
}

std::string format_coord(const Coord& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

Model parse_model(std::string_view text) {
  Model model;
  std::unordered_set<std::string> ids;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    const std::string_view tag = f[0];
    if (tag == "I") {
      if (f.size() != 5) throw ParseError(line_no, "interval needs 'I <id> <line> <xl> <xr>'");
      const auto line = parse_int(f[2]);
      if (!line || (*line != 1 && *line != 2))
        throw ParseError(line_no, "bad line '" + std::string(f[2]) + "' (expected 1 or 2)");
      const Coord xl = coord_field(f[3], line_no);
      const Coord xr = coord_field(f[4], line_no);
      if (xl > xr) throw ParseError(line_no, "xl > xr");
      model.segments.push_back(Segment::interval(std::string(f[1]),
                                                 *line == 1 ? LineId::L1 : LineId::L2, xl, xr));
    } else if (tag == "P") {
      if (f.size() != 4) throw ParseError(line_no, "permutation needs 'P <id> <x_top> <x_bot>'");
      model.segments.push_back(Segment::permutation(std::string(f[1]), coord_field(f[2], line_no),
                                                    coord_field(f[3], line_no)));
    } else {
      throw ParseError(line_no, "unknown kind tag '" + std::string(tag) + "'");
    }
    if (!ids.insert(model.segments.back().id).second)
      throw ParseError(line_no, "duplicate id '" + model.segments.back().id + "'");
  });
  return model;
}

std::string serialize_model(const Model& model) {
  std::ostringstream out;
  for (const auto& s : model.segments) {
    if (s.is_interval()) {
      const auto& iv = s.as_interval();
      out << "I " << s.id << ' ' << line_number(iv.line) << ' ' << format_coord(iv.xl) << ' '
          << format_coord(iv.xr) << '\n';
    } else {
      const auto& p = s.as_permutation();
      out << "P " << s.id << ' ' << format_coord(p.x_top) << ' ' << format_coord(p.x_bot) << '\n';
    }
  }
  return out.str();
}

Graph parse_graph(std::string_view text) {
  Graph g;
  std::optional<std::size_t> declared;
  std::unordered_map<std::string, std::size_t> index;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    const std::string_view tag = f[0];
    if (!declared) {
      const auto count = f.size() == 2 && tag == "n" ? parse_int(f[1]) : std::nullopt;
      if (!count || *count < 0) throw ParseError(line_no, "expected header 'n <count>'");
      declared = static_cast<std::size_t>(*count);
      return;
    }
    if (tag == "v") {
      if (f.size() != 2) throw ParseError(line_no, "vertex needs 'v <id>'");
      if (!g.edges.empty()) throw ParseError(line_no, "vertex after edges");
      std::string id(f[1]);
      if (!index.emplace(id, g.vertices.size()).second)
        throw ParseError(line_no, "duplicate vertex '" + id + "'");
      g.vertices.push_back(std::move(id));
    } else if (tag == "e") {
      if (f.size() != 3) throw ParseError(line_no, "edge needs 'e <id1> <id2>'");
      for (const auto& end : {f[1], f[2]})
        if (!index.count(std::string(end)))
          throw ParseError(line_no, "unknown vertex '" + std::string(end) + "'");
      if (f[1] == f[2]) throw ParseError(line_no, "self-loop on '" + std::string(f[1]) + "'");
      g.add_edge(std::string(f[1]), std::string(f[2]));
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tag) + "'");
    }
  });
  if (!declared) throw ParseError(1, "missing header 'n <count>'");
  if (*declared != g.vertices.size())
    throw ParseError(1, "header declares " + std::to_string(*declared) + " vertices, found " +
                            std::to_string(g.vertices.size()));
  return g;
}

std::string serialize_graph(const Graph& graph) {
  std::ostringstream out;
  out << "n " << graph.vertices.size() << '\n';
  for (const auto& v : graph.vertices) out << "v " << v << '\n';
  const auto& vs = graph.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (graph.has_edge(vs[i], vs[j])) out << "e " << vs[i] << ' ' << vs[j] << '\n';
  return out.str();
}

}  // namespace ipseg
