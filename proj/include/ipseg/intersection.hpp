// Pairwise intersection of model segments and intersection-graph construction.
#pragma once

#include "ipseg/model.hpp"

namespace ipseg {

/// Closed-segment intersection decided from endpoint orderings alone:
/// intervals meet iff they share a line and overlap, permutation segments meet
/// iff their endpoint orders agree-or-touch in the crossing sense, and an
/// interval meets a permutation segment iff it contains that segment's
/// endpoint on its line. Touching counts as intersecting.
bool segments_intersect(const Segment& s, const Segment& p);

/// Independent check: treats both segments as closed straight-line segments in
/// the plane (L1 at y=1, L2 at y=2) and uses exact orientation tests.
bool geometric_intersect_oracle(const Segment& s, const Segment& p);

/// Vertices in model order; edge {a,b} iff the segments intersect.
Graph build_graph(const Model& model);

/// Adjacency as a dense boolean matrix in model order.
std::vector<std::vector<bool>> adjacency_matrix(const Model& model);

}  // namespace ipseg
