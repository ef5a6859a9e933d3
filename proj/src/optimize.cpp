#include "ipseg/optimize.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ipseg/intersection.hpp"

namespace ipseg {

namespace {

// Positions of a longest non-increasing subsequence of `values`; among equal
// lengths the one patience sorting reaches first.
template <typename T>
std::vector<std::size_t> longest_nonincreasing(const std::vector<T>& values) {
  std::vector<std::size_t> tails;  // index of the run-ending element per length
  std::vector<std::ptrdiff_t> parent(values.size(), -1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto pos = std::upper_bound(tails.begin(), tails.end(), values[i],
                                      [&](const T& x, std::size_t t) { return x > values[t]; });
    const auto k = static_cast<std::size_t>(pos - tails.begin());
    if (k > 0) parent[i] = static_cast<std::ptrdiff_t>(tails[k - 1]);
    if (k == tails.size())
      tails.push_back(i);
    else
      tails[k] = i;
  }
  std::vector<std::size_t> out;
  for (auto i = tails.empty() ? std::ptrdiff_t{-1} : static_cast<std::ptrdiff_t>(tails.back());
       i >= 0; i = parent[static_cast<std::size_t>(i)])
    out.push_back(static_cast<std::size_t>(i));
  std::reverse(out.begin(), out.end());
  return out;
}

SolveResult make_result(SolveKind kind, std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  return {kind, std::move(ids)};
}

void require_valid(const Model& model) {
  const auto violations = validate(model);
  if (!violations.empty())
    throw std::invalid_argument("invalid model: segment '" + violations.front().segment_id +
                                "' violates " + violations.front().rule);
}

// Integer view of a normalized model; all endpoints on a line are distinct.
struct FlatModel {
  struct Interval {
    std::int64_t xl;
    std::int64_t xr;
    std::size_t index;
  };
  std::vector<std::size_t> perms;  // sorted by top endpoint
  std::vector<std::int64_t> top, bot;
  std::vector<Interval> intervals[2];  // per line, sorted by right endpoint
  std::int64_t limit = 0;              // exceeds every coordinate

  explicit FlatModel(const Model& norm)
      : top(norm.size(), 0), bot(norm.size(), 0) {
    for (std::size_t i = 0; i < norm.size(); ++i) {
      const Segment& s = norm.segments[i];
      if (s.is_interval()) {
        const auto& iv = s.as_interval();
        intervals[iv.line == LineId::L1 ? 0 : 1].push_back(
            {iv.xl.numerator(), iv.xr.numerator(), i});
        limit = std::max(limit, iv.xr.numerator());
      } else {
        top[i] = s.as_permutation().x_top.numerator();
        bot[i] = s.as_permutation().x_bot.numerator();
        perms.push_back(i);
        limit = std::max({limit, top[i], bot[i]});
      }
    }
    ++limit;
    std::sort(perms.begin(), perms.end(), [&](auto a, auto b) { return top[a] < top[b]; });
    for (auto& ivs : intervals)
      std::sort(ivs.begin(), ivs.end(), [](const auto& a, const auto& b) { return a.xr < b.xr; });
  }

  std::int64_t coord(std::size_t perm, int line) const { return line == 0 ? top[perm] : bot[perm]; }

  // Greedy maximum independent set among intervals on `line` lying strictly
  // inside (lo, hi).
  std::size_t greedy(int line, std::int64_t lo, std::int64_t hi,
                     std::vector<std::size_t>* out = nullptr) const {
    std::size_t count = 0;
    std::int64_t last = lo;
    for (const auto& iv : intervals[line]) {
      if (iv.xr >= hi) break;
      if (iv.xl > last) {
        ++count;
        last = iv.xr;
        if (out) out->push_back(iv.index);
      }
    }
    return count;
  }

  // Maximum clique among the given permutation segments (already in top order).
  std::vector<std::size_t> perm_clique(const std::vector<std::size_t>& ordered) const {
    std::vector<std::int64_t> bots;
    bots.reserve(ordered.size());
    for (auto i : ordered) bots.push_back(bot[i]);
    std::vector<std::size_t> out;
    for (auto pos : longest_nonincreasing(bots)) out.push_back(ordered[pos]);
    return out;
  }
};

std::vector<std::string> ids_of(const Model& model, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(model.segments[i].id);
  return out;
}

}  // namespace

std::string serialize_result(const SolveResult& result) {
  std::ostringstream out;
  out << "size " << result.size() << '\n';
  for (const auto& m : result.members) out << m << '\n';
  return out.str();
}

bool certifies(const Graph& graph, const SolveResult& result) {
  const auto& ms = result.members;
  for (const auto& m : ms)
    if (std::find(graph.vertices.begin(), graph.vertices.end(), m) == graph.vertices.end())
      return false;
  if (std::adjacent_find(ms.begin(), ms.end()) != ms.end()) return false;
  const bool want_edge = result.kind == SolveKind::Clique;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (graph.has_edge(ms[i], ms[j]) != want_edge) return false;
  return true;
}

SolveResult interval_mis(std::span<const Segment> intervals) {
  std::optional<LineId> line;
  for (const auto& s : intervals) {
    if (!s.is_interval())
      throw std::invalid_argument("interval_mis: '" + s.id + "' is a permutation segment");
    if (line && *line != s.as_interval().line)
      throw std::invalid_argument("interval_mis: intervals lie on more than one line");
    line = s.as_interval().line;
  }
  std::vector<const Segment*> order;
  for (const auto& s : intervals) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const Segment* a, const Segment* b) {
    const auto& ia = a->as_interval();
    const auto& ib = b->as_interval();
    return ia.xr != ib.xr ? ia.xr < ib.xr : a->id < b->id;
  });
  std::vector<std::string> picked;
  std::optional<Coord> last;
  for (const Segment* s : order) {
    if (last && !(s->as_interval().xl > *last)) continue;
    picked.push_back(s->id);
    last = s->as_interval().xr;
  }
  return make_result(SolveKind::IndependentSet, std::move(picked));
}

SolveResult permutation_clique(std::span<const Segment> perms) {
  std::vector<const Segment*> order;
  for (const auto& s : perms) {
    if (!s.is_permutation())
      throw std::invalid_argument("permutation_clique: '" + s.id + "' is an interval segment");
    order.push_back(&s);
  }
  // Equal tops always touch, so order them by descending bottom to keep them
  // inside one non-increasing run.
  std::sort(order.begin(), order.end(), [](const Segment* a, const Segment* b) {
    const auto& pa = a->as_permutation();
    const auto& pb = b->as_permutation();
    if (pa.x_top != pb.x_top) return pa.x_top < pb.x_top;
    if (pa.x_bot != pb.x_bot) return pa.x_bot > pb.x_bot;
    return a->id < b->id;
  });
  std::vector<Coord> bots;
  for (const Segment* s : order) bots.push_back(s->as_permutation().x_bot);
  std::vector<std::string> ids;
  for (auto pos : longest_nonincreasing(bots)) ids.push_back(order[pos]->id);
  return make_result(SolveKind::Clique, std::move(ids));
}

SolveResult max_clique(const Model& model) {
  require_valid(model);
  const Model norm = normalize(model);
  const FlatModel flat(norm);

  std::vector<std::size_t> best = flat.perm_clique(flat.perms);

  for (int line = 0; line < 2; ++line) {
    const auto& ivs = flat.intervals[line];
    std::vector<std::int64_t> ends;
    for (const auto& iv : ivs) {
      ends.push_back(iv.xl);
      ends.push_back(iv.xr);
    }
    std::sort(ends.begin(), ends.end());

    std::vector<std::size_t> window;
    for (std::size_t a = 0; a < ends.size(); ++a) {
      for (std::size_t b = a; b < ends.size(); ++b) {
        const std::int64_t s1 = ends[a];
        const std::int64_t s2 = ends[b];
        std::vector<std::size_t> members;
        for (const auto& iv : ivs)
          if (iv.xl <= s1 && s2 <= iv.xr) members.push_back(iv.index);
        // Containing [s1, s2] only gets harder as s2 grows.
        if (members.empty()) break;
        if (members.size() + flat.perms.size() <= best.size()) continue;

        window.clear();
        for (auto p : flat.perms) {
          const std::int64_t x = flat.coord(p, line);
          if (s1 <= x && x <= s2) window.push_back(p);
        }
        if (members.size() + window.size() <= best.size()) continue;
        const auto crossing = flat.perm_clique(window);
        if (members.size() + crossing.size() > best.size()) {
          members.insert(members.end(), crossing.begin(), crossing.end());
          best = std::move(members);
        }
      }
    }
  }
  return make_result(SolveKind::Clique, ids_of(model, best));
}

std::vector<Segment> topo_order(std::span<const Segment> perms) {
  std::vector<Segment> out(perms.begin(), perms.end());
  std::stable_sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) {
    const Coord ta = a.low_on(LineId::L1);
    const Coord tb = b.low_on(LineId::L1);
    return ta != tb ? ta < tb : a.id < b.id;
  });
  return out;
}

SolveResult max_is(const Model& model, const MaxIsOptions& options) {
  require_valid(model);
  const Model norm = normalize(model);
  const FlatModel flat(norm);
  const bool literal = options.pseudocode_literal;
  const std::int64_t inf = flat.limit;

  // Baseline: intervals only.
  std::size_t best_size = flat.greedy(0, 0, inf) + flat.greedy(1, 0, inf);
  std::ptrdiff_t best_last = -1;  // -1: the interval-only set wins

  const auto& order = flat.perms;
  const std::size_t k = order.size();
  std::vector<std::size_t> value(k, 0);
  std::vector<std::ptrdiff_t> pred(k, -1);
  const std::size_t self = literal ? 0 : 1;

  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t p = order[j];
    value[j] = self + flat.greedy(0, 0, flat.top[p]) + flat.greedy(1, 0, flat.bot[p]);
    for (std::size_t i = 0; i < j; ++i) {
      const std::size_t q = order[i];
      if (!(flat.top[q] < flat.top[p] && flat.bot[q] < flat.bot[p])) continue;
      const std::size_t candidate = value[i] + self + flat.greedy(0, flat.top[q], flat.top[p]) +
                                    flat.greedy(1, flat.bot[q], flat.bot[p]);
      if (candidate > value[j]) {
        value[j] = candidate;
        pred[j] = static_cast<std::ptrdiff_t>(i);
      }
    }
    std::size_t total = value[j];
    if (!literal) total += flat.greedy(0, flat.top[p], inf) + flat.greedy(1, flat.bot[p], inf);
    if (total > best_size) {
      best_size = total;
      best_last = static_cast<std::ptrdiff_t>(j);
    }
  }

  std::vector<std::size_t> members;
  if (best_last < 0) {
    flat.greedy(0, 0, inf, &members);
    flat.greedy(1, 0, inf, &members);
  } else {
    auto j = static_cast<std::size_t>(best_last);
    if (!literal) {
      flat.greedy(0, flat.top[order[j]], inf, &members);
      flat.greedy(1, flat.bot[order[j]], inf, &members);
    }
    while (true) {
      const std::size_t p = order[j];
      if (!literal) members.push_back(p);
      if (pred[j] < 0) {
        flat.greedy(0, 0, flat.top[p], &members);
        flat.greedy(1, 0, flat.bot[p], &members);
        break;
      }
      const std::size_t q = order[static_cast<std::size_t>(pred[j])];
      flat.greedy(0, flat.top[q], flat.top[p], &members);
      flat.greedy(1, flat.bot[q], flat.bot[p], &members);
      j = static_cast<std::size_t>(pred[j]);
    }
  }
  return make_result(SolveKind::IndependentSet, ids_of(model, members));
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  std::uint64_t run() {
    const std::uint64_t all = adj_.size() == 64 ? ~0ULL : (1ULL << adj_.size()) - 1;
    expand(0, 0, all);
    return best_;
  }

 private:
  void expand(std::uint64_t chosen, int size, std::uint64_t candidates) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    while (candidates != 0) {
      if (size + std::popcount(candidates) <= best_size_) return;
      const int v = std::countr_zero(candidates);
      const std::uint64_t bit = 1ULL << v;
      expand(chosen | bit, size + 1, candidates & adj_[static_cast<std::size_t>(v)]);
      candidates &= ~bit;
    }
    if (size > best_size_) {
      best_size_ = size;
      best_ = chosen;
    }
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
  int best_size_ = -1;
};

SolveResult brute_search(const Graph& graph, std::size_t bound, bool complement) {
  const std::size_t n = graph.vertices.size();
  if (n > bound || n > 64)
    throw std::length_error("graph has " + std::to_string(n) +
                            " vertices; brute-force bound is " + std::to_string(std::min<std::size_t>(bound, 64)));
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(graph.vertices[i], i);
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [a, b] : graph.edges) {
    const auto i = index.at(a);
    const auto j = index.at(b);
    adj[i] |= 1ULL << j;
    adj[j] |= 1ULL << i;
  }
  if (complement)
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
      adj[i] = ~adj[i] & all & ~(1ULL << i);
    }
  const std::uint64_t mask = CliqueSearch(std::move(adj)).run();
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1ULL) ids.push_back(graph.vertices[i]);
  return make_result(complement ? SolveKind::IndependentSet : SolveKind::Clique, std::move(ids));
}

}  // namespace

SolveResult brute_clique(const Graph& graph, std::size_t bound) {
  return brute_search(graph, bound, false);
}

SolveResult brute_mis(const Graph& graph, std::size_t bound) {
  return brute_search(graph, bound, true);
}

}  // namespace ipseg
