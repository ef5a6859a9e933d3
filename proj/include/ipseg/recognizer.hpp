// Brute-force recognition by enumerating every model on a few vertices.
//
// A model is determined, up to the intersection graph, by each segment's type
// and the left-to-right order of endpoints on each line. The canonical space
// therefore consists of all type assignments times all per-line endpoint
// orders (interval left endpoint before right endpoint, no shared endpoints),
// realized with integer coordinates equal to ranks.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ipseg/model.hpp"

namespace ipseg {

inline constexpr std::size_t kDefaultEnumBound = 6;

enum class VertexType : std::uint8_t { IntervalL1, IntervalL2, Permutation };

/// One partition of the canonical space: a fixed type per vertex.
struct EnumSpec {
  std::vector<VertexType> types;
  bool star_only = false;
};

struct EnumSummary {
  std::uint64_t type_assignments = 0;
  std::uint64_t models = 0;
};

using ModelVisitor = std::function<void(const Model&)>;

/// Number of endpoint orderings for one type assignment.
std::uint64_t ordering_count(const EnumSpec& spec);

/// Visits every canonical model of one type assignment. Segment ids are
/// v1..vn in vertex order.
EnumSummary enumerate_assignment(const EnumSpec& spec, const ModelVisitor& visit);

/// Visits every canonical model on n vertices in a fixed order: type
/// assignments lexicographically (L1 interval < L2 interval < permutation,
/// L2 intervals skipped when star_only), then L1 orders, then L2 orders.
/// Throws std::length_error when n exceeds `bound`.
EnumSummary enumerate_models(std::size_t n, bool star_only, const ModelVisitor& visit,
                             std::size_t bound = kDefaultEnumBound);

struct Witness {
  Model model;                       // ids are the query graph's vertex labels
  std::vector<std::size_t> mapping;  // canonical vertex i -> query vertex mapping[i]
  std::uint64_t models_visited = 0;
};

/// True if `perm` maps the edge set of `a` onto that of `b`, where vertex i of
/// `a` corresponds to vertex perm[i] of `b`.
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<std::size_t>& perm);

/// Searches the canonical space for a model of `graph` (single-line intervals
/// when star_only). The witness's intersection graph equals `graph` exactly,
/// labels included. Returns nothing when no model exists. Throws
/// std::length_error above `bound` vertices.
std::optional<Witness> is_ip_seg(const Graph& graph, bool star_only,
                                 std::size_t bound = kDefaultEnumBound);

struct ArcLemmaReport {
  std::size_t n = 0;
  bool star_only = false;
  std::uint64_t models_visited = 0;
  std::uint64_t cycle_models = 0;
  std::uint64_t violations = 0;
  std::uint64_t pure_permutation = 0;
  std::map<std::string, std::uint64_t> profiles;  // e.g. "interval arcs: L1,L2"
};

/// Enumerates all canonical models on n vertices, keeps those whose graph is a
/// chordless n-cycle, decomposes them into arcs and counts how many break the
/// allowed shapes: one interval arc, or two on different lines; exactly one
/// for single-line models; no interval arcs only when n = 4.
ArcLemmaReport verify_cycle_arc_lemmas(std::size_t n, bool star_only,
                                       std::size_t bound = kDefaultEnumBound);

std::string format_report(const ArcLemmaReport& report);

}  // namespace ipseg
