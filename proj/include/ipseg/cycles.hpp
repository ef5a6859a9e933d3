// Models of chordless cycles: their decomposition into interval and
// permutation arcs, the arc expand/contract moves, canonical cycle models and
// the pendant-path family G_n.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipseg/model.hpp"

namespace ipseg {

enum class ArcKind { Interval, Permutation };

struct Arc {
  ArcKind kind = ArcKind::Interval;
  std::vector<std::string> members;  // consecutive along the cycle
  std::optional<LineId> line;        // interval arcs only

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Maximal same-kind runs of a cycle model, in cyclic order. The first arc
/// starts at the first kind change in the cycle order; a model of a single
/// kind yields one arc listing the cycle order unchanged.
struct ArcDecomposition {
  std::vector<Arc> arcs;

  std::size_t count(ArcKind kind) const;
  friend bool operator==(const ArcDecomposition&, const ArcDecomposition&) = default;
};

/// A model together with the order in which its segments traverse the cycle.
struct CycleModel {
  Model model;
  std::vector<std::string> order;
};

/// True when the model's segments are exactly `order` and the intersection
/// graph is the chordless cycle visiting them in that order (n >= 4).
bool is_chordless_cycle(const Model& model, const std::vector<std::string>& order);

/// Throws std::invalid_argument unless is_chordless_cycle holds.
ArcDecomposition arc_decomposition(const Model& model, const std::vector<std::string>& order);

/// Replaces interval segment `target` by `<target>.1` (left part) and
/// `<target>.2` (right part). The two halves overlap only at the midpoint of
/// the part of `target` that neither cycle neighbour touches, so the result
/// models a cycle one longer.
CycleModel expand_interval_arc(const CycleModel& cycle, const std::string& target);

/// Replaces two cycle-consecutive interval segments by their union. The merged
/// id is `<base>` when the pair is `<base>.1`/`<base>.2`, otherwise `<a>+<b>`.
/// Needs a cycle of length at least 5 so the result is still a chordless cycle.
CycleModel contract_interval_arc(const CycleModel& cycle, const std::string& id_a,
                                 const std::string& id_b);

/// Single-line model of C_n (n >= 4): a chain of n-3 intervals on L1 closed by
/// three permutation segments (two intervals and two permutation segments for
/// n = 4).
CycleModel canonical_star_cycle(std::size_t n);

/// Model of C_n (n >= 4) with one interval arc on each line and permutation
/// arcs of at most two segments. Longer cycles grow the interval arcs
/// alternately, starting with L1.
CycleModel canonical_two_arc_cycle(std::size_t n);

/// C4 from four permutation segments.
CycleModel permutation_c4();

/// C_n with a pendant path v_i - w_i - z_i on every cycle vertex (n >= 3).
/// Vertices are listed v1..vn, w1..wn, z1..zn.
Graph gn_graph(std::size_t n);

/// A hand-built two-line model whose intersection graph is exactly
/// gn_graph(7): interval arcs {v1, v2} on L1 and {v5} on L2.
Model g7_model();

}  // namespace ipseg
