#include "ipseg/recognizer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ipseg/cycles.hpp"
#include "ipseg/intersection.hpp"

namespace ipseg {

namespace {

enum class Role : std::uint8_t { Left, Right, Single };

struct Token {
  std::size_t vertex;
  Role role;
};

// Integer realization of a canonical model. Coordinates are ranks; for a
// permutation vertex lo == hi on each line.
struct Canon {
  std::vector<VertexType> types;
  std::vector<int> lo[2], hi[2];

  explicit Canon(std::vector<VertexType> t) : types(std::move(t)) {
    for (int l = 0; l < 2; ++l) {
      lo[l].assign(types.size(), 0);
      hi[l].assign(types.size(), 0);
    }
  }

  bool on_line(std::size_t v, int line) const {
    return types[v] == VertexType::Permutation ||
           types[v] == (line == 0 ? VertexType::IntervalL1 : VertexType::IntervalL2);
  }

  bool adjacent(std::size_t i, std::size_t j) const {
    const bool pi = types[i] == VertexType::Permutation;
    const bool pj = types[j] == VertexType::Permutation;
    if (pi && pj) return (lo[0][i] < lo[0][j]) == (lo[1][i] > lo[1][j]);
    for (int l = 0; l < 2; ++l) {
      if (!on_line(i, l) || !on_line(j, l)) continue;
      return lo[l][i] <= hi[l][j] && lo[l][j] <= hi[l][i];
    }
    return false;
  }

  // Bit k is set when the k-th pair (i < j, row-major) is adjacent.
  std::uint32_t edge_mask() const {
    std::uint32_t mask = 0;
    int bit = 0;
    for (std::size_t i = 0; i < types.size(); ++i)
      for (std::size_t j = i + 1; j < types.size(); ++j, ++bit)
        if (adjacent(i, j)) mask |= 1U << bit;
    return mask;
  }

  Model to_model(const std::vector<std::string>* ids = nullptr) const {
    Model m;
    for (std::size_t v = 0; v < types.size(); ++v) {
      std::string id = ids ? (*ids)[v] : "v" + std::to_string(v + 1);
      switch (types[v]) {
        case VertexType::IntervalL1:
          m.segments.push_back(Segment::interval(std::move(id), LineId::L1, lo[0][v], hi[0][v]));
          break;
        case VertexType::IntervalL2:
          m.segments.push_back(Segment::interval(std::move(id), LineId::L2, lo[1][v], hi[1][v]));
          break;
        case VertexType::Permutation:
          m.segments.push_back(Segment::permutation(std::move(id), lo[0][v], lo[1][v]));
          break;
      }
    }
    return m;
  }
};

std::vector<Token> line_tokens(const std::vector<VertexType>& types, int line) {
  const VertexType own = line == 0 ? VertexType::IntervalL1 : VertexType::IntervalL2;
  std::vector<Token> out;
  for (std::size_t v = 0; v < types.size(); ++v) {
    if (types[v] == own) {
      out.push_back({v, Role::Left});
      out.push_back({v, Role::Right});
    } else if (types[v] == VertexType::Permutation) {
      out.push_back({v, Role::Single});
    }
  }
  return out;
}

std::uint64_t line_ordering_count(const std::vector<Token>& tokens) {
  std::uint64_t count = 1;
  for (std::uint64_t k = 2; k <= tokens.size(); ++k) count *= k;
  for (const auto& t : tokens)
    if (t.role == Role::Left) count /= 2;
  return count;
}

// Rank of every token in one admissible order.
using Ordering = std::vector<int>;

// Generates every order of `tokens` in which each Right token follows its
// Left token. fn returns true to stop; the return value reports a stop.
template <typename Fn>
bool for_each_ordering(const std::vector<Token>& tokens, Fn&& fn) {
  const std::size_t k = tokens.size();
  std::vector<std::size_t> left_of(k, k);
  for (std::size_t i = 0; i < k; ++i)
    if (tokens[i].role == Role::Right)
      for (std::size_t j = 0; j < k; ++j)
        if (tokens[j].vertex == tokens[i].vertex && tokens[j].role == Role::Left) left_of[i] = j;

  Ordering rank(k, 0);
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == k) return fn(static_cast<const Ordering&>(rank));
    for (std::size_t i = 0; i < k; ++i) {
      if (used[i] || (left_of[i] < k && !used[left_of[i]])) continue;
      used[i] = true;
      rank[i] = static_cast<int>(pos) + 1;
      const bool stop = self(self, pos + 1);
      used[i] = false;
      if (stop) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

void apply(Canon& c, const std::vector<Token>& tokens, const Ordering& rank, int line) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto v = tokens[i].vertex;
    if (tokens[i].role != Role::Right) c.lo[line][v] = rank[i];
    if (tokens[i].role != Role::Left) c.hi[line][v] = rank[i];
  }
}

// Runs fn(const Canon&) over every model of one type assignment, L1 orders
// outermost. The line with fewer orders is materialized; the other is
// generated on the fly. Returns true if fn asked to stop.
template <typename Fn>
bool run_assignment(const std::vector<VertexType>& types, Fn&& fn) {
  Canon canon(types);
  const auto t1 = line_tokens(types, 0);
  const auto t2 = line_tokens(types, 1);

  if (line_ordering_count(t1) <= line_ordering_count(t2)) {
    std::vector<Ordering> outer;
    for_each_ordering(t1, [&](const Ordering& r) {
      outer.push_back(r);
      return false;
    });
    for (const auto& r1 : outer) {
      apply(canon, t1, r1, 0);
      const bool stop = for_each_ordering(t2, [&](const Ordering& r2) {
        apply(canon, t2, r2, 1);
        return fn(static_cast<const Canon&>(canon));
      });
      if (stop) return true;
    }
    return false;
  }
  std::vector<Ordering> inner;
  for_each_ordering(t2, [&](const Ordering& r) {
    inner.push_back(r);
    return false;
  });
  return for_each_ordering(t1, [&](const Ordering& r1) {
    apply(canon, t1, r1, 0);
    for (const auto& r2 : inner) {
      apply(canon, t2, r2, 1);
      if (fn(static_cast<const Canon&>(canon))) return true;
    }
    return false;
  });
}

void check_spec(const EnumSpec& spec) {
  if (spec.star_only &&
      std::count(spec.types.begin(), spec.types.end(), VertexType::IntervalL2) != 0)
    throw std::invalid_argument("star-only assignment contains an L2 interval");
}

void check_bound(std::size_t n, std::size_t bound) {
  if (n > bound)
    throw std::length_error(std::to_string(n) + " vertices exceeds the enumeration bound of " +
                            std::to_string(bound));
}

// All type assignments in lexicographic order.
template <typename Fn>
bool for_each_assignment(std::size_t n, bool star_only, Fn&& fn) {
  const std::vector<VertexType> alphabet =
      star_only ? std::vector{VertexType::IntervalL1, VertexType::Permutation}
                : std::vector{VertexType::IntervalL1, VertexType::IntervalL2,
                              VertexType::Permutation};
  std::vector<std::size_t> digits(n, 0);
  std::vector<VertexType> types(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) types[i] = alphabet[digits[i]];
    if (fn(static_cast<const std::vector<VertexType>&>(types))) return true;
    std::size_t i = n;
    while (i > 0 && digits[i - 1] + 1 == alphabet.size()) digits[--i] = 0;
    if (i == 0) return false;
    ++digits[i - 1];
  }
}

int edge_bit(std::size_t i, std::size_t j, std::size_t n) {
  // Row-major index of pair (i, j), i < j.
  return static_cast<int>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

}  // namespace

std::uint64_t ordering_count(const EnumSpec& spec) {
  check_spec(spec);
  return line_ordering_count(line_tokens(spec.types, 0)) *
         line_ordering_count(line_tokens(spec.types, 1));
}

EnumSummary enumerate_assignment(const EnumSpec& spec, const ModelVisitor& visit) {
  check_spec(spec);
  EnumSummary summary{1, 0};
  run_assignment(spec.types, [&](const Canon& c) {
    ++summary.models;
    visit(c.to_model());
    return false;
  });
  return summary;
}

EnumSummary enumerate_models(std::size_t n, bool star_only, const ModelVisitor& visit,
                             std::size_t bound) {
  check_bound(n, bound);
  EnumSummary summary;
  for_each_assignment(n, star_only, [&](const std::vector<VertexType>& types) {
    const auto part = enumerate_assignment({types, star_only}, visit);
    summary.type_assignments += part.type_assignments;
    summary.models += part.models;
    return false;
  });
  return summary;
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<std::size_t>& perm) {
  const std::size_t n = a.vertices.size();
  if (b.vertices.size() != n || perm.size() != n || a.edges.size() != b.edges.size()) return false;
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p >= n || hit[p]) return false;
    hit[p] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.has_edge(a.vertices[i], a.vertices[j]) !=
          b.has_edge(b.vertices[perm[i]], b.vertices[perm[j]]))
        return false;
  return true;
}

std::optional<Witness> is_ip_seg(const Graph& graph, bool star_only, std::size_t bound) {
  const std::size_t n = graph.vertices.size();
  check_bound(n, bound);
  if (n == 0) return Witness{};

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[i][j] = i != j && graph.has_edge(graph.vertices[i], graph.vertices[j]);

  // Every labelled edge mask isomorphic to the query. Canonical vertex i
  // plays query vertex perm[i].
  auto mask_under = [&](const std::vector<std::size_t>& perm) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (adj[perm[i]][perm[j]]) mask |= 1U << edge_bit(i, j, n);
    return mask;
  };
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<bool> accept(std::size_t{1} << pairs, false);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do accept[mask_under(perm)] = true;
  while (std::next_permutation(perm.begin(), perm.end()));

  // Vertex labels of a canonical model are arbitrary, so only the multiset of
  // types matters. Cheaper partitions go first.
  struct Part {
    std::vector<VertexType> types;
    std::uint64_t cost;
  };
  std::vector<Part> parts;
  for (std::size_t c1 = 0; c1 <= n; ++c1)
    for (std::size_t c2 = 0; c1 + c2 <= n; ++c2) {
      if (star_only && c2 > 0) continue;
      std::vector<VertexType> types(c1, VertexType::IntervalL1);
      types.insert(types.end(), c2, VertexType::IntervalL2);
      types.insert(types.end(), n - c1 - c2, VertexType::Permutation);
      const auto cost = ordering_count({types, star_only});
      parts.push_back({std::move(types), cost});
    }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.cost < b.cost; });

  std::optional<Witness> found;
  std::uint64_t visited = 0;
  for (const auto& part : parts) {
    const bool stop = run_assignment(part.types, [&](const Canon& c) {
      ++visited;
      const std::uint32_t mask = c.edge_mask();
      if (!accept[mask]) return false;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        if (mask_under(perm) == mask) break;
      } while (std::next_permutation(perm.begin(), perm.end()));

      // Re-label canonical vertex i as query vertex perm[i], listed in query order.
      std::vector<std::string> ids(n);
      for (std::size_t i = 0; i < n; ++i) ids[i] = graph.vertices[perm[i]];
      Model labelled = c.to_model(&ids);
      Witness w;
      for (std::size_t q = 0; q < n; ++q)
        w.model.segments.push_back(labelled.segments[static_cast<std::size_t>(
            std::find(perm.begin(), perm.end(), q) - perm.begin())]);
      w.mapping = perm;
      found = std::move(w);
      return true;
    });
    if (stop) break;
  }
  if (found) {
    found->models_visited = visited;
    if (build_graph(found->model) != graph)
      throw std::logic_error("recognizer produced a witness that does not re-verify");
  }
  return found;
}

ArcLemmaReport verify_cycle_arc_lemmas(std::size_t n, bool star_only, std::size_t bound) {
  check_bound(n, bound);
  if (n < 4) throw std::invalid_argument("chordless cycles need n >= 4");
  ArcLemmaReport report;
  report.n = n;
  report.star_only = star_only;

  for_each_assignment(n, star_only, [&](const std::vector<VertexType>& types) {
    run_assignment(types, [&](const Canon& c) {
      ++report.models_visited;
      std::vector<std::vector<std::size_t>> nbrs(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (c.adjacent(i, j)) {
            nbrs[i].push_back(j);
            nbrs[j].push_back(i);
          }
      if (std::any_of(nbrs.begin(), nbrs.end(), [](const auto& v) { return v.size() != 2; }))
        return false;
      std::vector<std::size_t> walk{0};
      std::size_t prev = 0;
      std::size_t cur = nbrs[0][0];
      while (cur != 0) {
        walk.push_back(cur);
        const std::size_t next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
        prev = cur;
        cur = next;
      }
      if (walk.size() != n) return false;  // disjoint union of shorter cycles

      ++report.cycle_models;
      const Model model = c.to_model();
      std::vector<std::string> order;
      for (auto v : walk) order.push_back(model.segments[v].id);
      const auto arcs = arc_decomposition(model, order);

      std::vector<std::string> lines;
      for (const auto& arc : arcs.arcs)
        if (arc.kind == ArcKind::Interval) lines.push_back("L" + std::to_string(line_number(*arc.line)));
      std::sort(lines.begin(), lines.end());
      std::string profile = "interval arcs:";
      if (lines.empty()) profile += " none";
      for (std::size_t i = 0; i < lines.size(); ++i) profile += (i ? "," : " ") + lines[i];
      ++report.profiles[profile];

      bool ok = false;
      if (lines.empty()) {
        ++report.pure_permutation;
        ok = n == 4;
      } else if (lines.size() == 1) {
        ok = true;
      } else if (lines.size() == 2) {
        ok = lines[0] != lines[1] && !model.is_star();
      }
      if (!ok) ++report.violations;
      return false;
    });
    return false;
  });
  return report;
}

std::string format_report(const ArcLemmaReport& r) {
  std::ostringstream out;
  out << "n " << r.n << '\n'
      << "star_only " << (r.star_only ? "true" : "false") << '\n'
      << "models_visited " << r.models_visited << '\n'
      << "cycle_models " << r.cycle_models << '\n'
      << "pure_permutation " << r.pure_permutation << '\n'
      << "violations " << r.violations << '\n';
  for (const auto& [profile, count] : r.profiles) out << "profile " << profile << " = " << count << '\n';
  return out.str();
}

}  // namespace ipseg
