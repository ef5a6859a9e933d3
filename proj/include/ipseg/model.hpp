// Segment and model types for two-line interval/permutation segment models.
//
// A model lives on two parallel horizontal lines L1 and L2. Every segment is
// either an interval segment (both endpoints on one line) or a permutation
// segment (one endpoint on each line, the first on L1). Coordinates along a
// line are exact rationals so that normalization can insert new endpoints in
// open gaps without rounding.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

// Boost's mixed rational/integer operator== forwards to its own reversed form,
// which C++20 rewriting turns into unbounded recursion. Exact non-template
// overloads take precedence and stop that.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == static_cast<std::int64_t>(b);
}
}  // namespace boost

namespace ipseg {

using Coord = boost::rational<std::int64_t>;

enum class LineId : std::uint8_t { L1 = 1, L2 = 2 };

constexpr int line_number(LineId line) noexcept { return static_cast<int>(line); }
constexpr LineId other_line(LineId line) noexcept {
  return line == LineId::L1 ? LineId::L2 : LineId::L1;
}

struct IntervalShape {
  LineId line = LineId::L1;
  Coord xl;
  Coord xr;
  friend bool operator==(const IntervalShape&, const IntervalShape&) = default;
};

struct PermutationShape {
  Coord x_top;  // endpoint on L1
  Coord x_bot;  // endpoint on L2
  friend bool operator==(const PermutationShape&, const PermutationShape&) = default;
};

struct Segment {
  std::string id;
  std::variant<IntervalShape, PermutationShape> shape;

  static Segment interval(std::string id, LineId line, Coord xl, Coord xr) {
    return {std::move(id), IntervalShape{line, xl, xr}};
  }
  static Segment permutation(std::string id, Coord x_top, Coord x_bot) {
    return {std::move(id), PermutationShape{x_top, x_bot}};
  }

  bool is_interval() const noexcept { return std::holds_alternative<IntervalShape>(shape); }
  bool is_permutation() const noexcept { return !is_interval(); }
  const IntervalShape& as_interval() const { return std::get<IntervalShape>(shape); }
  const PermutationShape& as_permutation() const { return std::get<PermutationShape>(shape); }

  /// True if the segment has at least one endpoint on `line`.
  bool touches(LineId line) const noexcept;

  /// Smallest and largest endpoint coordinate on `line`; only meaningful when
  /// touches(line). For permutation segments both are the single endpoint.
  Coord low_on(LineId line) const;
  Coord high_on(LineId line) const;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Model {
  std::vector<Segment> segments;

  std::size_t size() const noexcept { return segments.size(); }
  bool empty() const noexcept { return segments.empty(); }

  /// All interval segments lie on one line (vacuously true without intervals).
  bool is_star() const noexcept;

  /// Index of the segment with the given id, if present.
  std::optional<std::size_t> find(std::string_view id) const;
  const Segment& at(std::string_view id) const;

  friend bool operator==(const Model&, const Model&) = default;
};

/// Intersection graph with labelled vertices. Edges are stored with the
/// lexicographically smaller label first.
struct Graph {
  std::vector<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;

  void add_edge(const std::string& a, const std::string& b);
  bool has_edge(const std::string& a, const std::string& b) const;
  std::size_t degree(const std::string& v) const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

struct Violation {
  std::string segment_id;
  std::string rule;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Lists every broken type invariant. An empty result means the model is valid.
std::vector<Violation> validate(const Model& model);

/// True when `p` lies to the right of `q` (q < p): on every line where both
/// have endpoints, each endpoint of p is strictly right of each endpoint of q.
bool right_of(const Segment& q, const Segment& p);

/// True when q < r and r < p.
bool between(const Segment& r, const Segment& q, const Segment& p);

/// Removes shared endpoints without changing the labelled intersection graph.
Model deshare(const Model& model);

/// Replaces coordinates on each line by their ranks 1..k. Throws
/// std::invalid_argument("shared endpoints ...") if two endpoints on one line
/// coincide.
Model compact(const Model& model);

/// deshare followed by compact.
Model normalize(const Model& model);

/// True when no two endpoints on the same line share a coordinate (the two
/// endpoints of a degenerate interval count as shared).
bool endpoint_distinct(const Model& model);

/// Deterministic pseudo-random valid model with ids s1..sn and integer
/// coordinates in [1, coord_range].
Model random_model(std::size_t n, double perm_fraction, std::int64_t coord_range,
                   std::uint64_t seed);

// Text formats --------------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Coord parse_coord(std::string_view text);
std::string format_coord(const Coord& c);

Model parse_model(std::string_view text);
std::string serialize_model(const Model& model);

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& graph);

}  // namespace ipseg
