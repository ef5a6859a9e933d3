// Maximum clique and maximum independent set on a given two-line segment
// model, their classical interval/permutation subroutines, and exhaustive
// oracles over abstract graphs.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "ipseg/model.hpp"

namespace ipseg {

enum class SolveKind { Clique, IndependentSet };

struct SolveResult {
  SolveKind kind = SolveKind::Clique;
  std::vector<std::string> members;  // sorted

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

/// `size <k>` followed by one member id per line, sorted.
std::string serialize_result(const SolveResult& result);

/// True if the members exist in `graph` and are pairwise adjacent (clique) or
/// pairwise non-adjacent (independent set).
bool certifies(const Graph& graph, const SolveResult& result);

/// Greedy maximum independent set of interval segments on a single line:
/// repeatedly take the interval with the leftmost right endpoint. Ties on the
/// right endpoint go to the smaller id. Throws std::invalid_argument on
/// permutation segments or intervals on more than one line.
SolveResult interval_mis(std::span<const Segment> intervals);

/// Maximum clique of permutation segments: order by top endpoint and take a
/// longest non-increasing run of bottom endpoints. With distinct endpoints this
/// is the longest decreasing subsequence. Throws std::invalid_argument on
/// interval segments.
SolveResult permutation_clique(std::span<const Segment> perms);

/// Maximum clique of the model's intersection graph. Shared endpoints are
/// removed internally; members are reported by original id.
SolveResult max_clique(const Model& model);

/// Permutation segments ordered so that every segment comes after all
/// segments it lies to the right of (sorted by top endpoint, then id).
std::vector<Segment> topo_order(std::span<const Segment> perms);

struct MaxIsOptions {
  // Uncorrected recurrence: I(p) omits p itself and intervals
  // to the right of the last chosen permutation segment are never collected.
  // Only useful for demonstrating why the corrected recurrence is needed.
  bool pseudocode_literal = false;
};

/// Maximum independent set by dynamic programming over permutation segments
/// in topological order, filling the gaps with greedy interval sets.
SolveResult max_is(const Model& model, const MaxIsOptions& options = {});

inline constexpr std::size_t kDefaultBruteBound = 20;

/// Exact maximum clique by branch and bound. Throws std::length_error above
/// `bound` vertices.
SolveResult brute_clique(const Graph& graph, std::size_t bound = kDefaultBruteBound);

/// Exact maximum independent set (clique of the complement).
SolveResult brute_mis(const Graph& graph, std::size_t bound = kDefaultBruteBound);

}  // namespace ipseg
