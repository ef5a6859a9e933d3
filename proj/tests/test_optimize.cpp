#include <doctest.h>

#include <algorithm>

#include "ipseg/cycles.hpp"
#include "ipseg/intersection.hpp"
#include "ipseg/optimize.hpp"
#include "oracles.hpp"

using namespace ipseg;

namespace {
Segment iv(const std::string& id, LineId line, Coord a, Coord b) {
  return Segment::interval(id, line, a, b);
}
Segment pm(const std::string& id, Coord top, Coord bot) { return Segment::permutation(id, top, bot); }

using Ids = std::vector<std::string>;

// Maximum number of pairwise disjoint closed intervals by the classic
// "previous compatible interval" recurrence, independent of the greedy rule.
std::size_t interval_dp(std::vector<Segment> ivs) {
  std::sort(ivs.begin(), ivs.end(), [](const Segment& a, const Segment& b) {
    return a.as_interval().xr < b.as_interval().xr;
  });
  std::vector<std::size_t> best(ivs.size() + 1, 0);
  for (std::size_t i = 1; i <= ivs.size(); ++i) {
    const Coord xl = ivs[i - 1].as_interval().xl;
    std::size_t prev = 0;
    for (std::size_t j = i - 1; j > 0; --j)
      if (ivs[j - 1].as_interval().xr < xl) {
        prev = j;
        break;
      }
    best[i] = std::max(best[i - 1], best[prev] + 1);
  }
  return best.back();
}

Model induced(const std::vector<Segment>& segs) { return Model{segs}; }
}  // namespace

TEST_CASE("interval_mis") {
  SUBCASE("greedy trace") {
    const std::vector<Segment> s{iv("a", LineId::L1, 1, 4), iv("b", LineId::L1, 3, 9),
                                 iv("c", LineId::L1, 5, 8)};
    const auto r = interval_mis(s);
    CHECK(r.kind == SolveKind::IndependentSet);
    CHECK(r.members == Ids{"a", "c"});
  }
  SUBCASE("disjoint intervals are all taken") {
    std::vector<Segment> s;
    for (int i = 0; i < 7; ++i) s.push_back(iv("s" + std::to_string(i), LineId::L2, 2 * i, 2 * i + 1));
    CHECK(interval_mis(s).size() == 7);
  }
  SUBCASE("touching intervals conflict") {
    const std::vector<Segment> s{iv("a", LineId::L1, 1, 3), iv("b", LineId::L1, 3, 5)};
    CHECK(interval_mis(s).size() == 1);
  }
  SUBCASE("ties on the right endpoint go to the smaller id") {
    const std::vector<Segment> s{iv("b", LineId::L1, 1, 3), iv("a", LineId::L1, 2, 3)};
    CHECK(interval_mis(s).members == Ids{"a"});
  }
  SUBCASE("rejects mixed input") {
    const std::vector<Segment> mixed{iv("a", LineId::L1, 1, 3), iv("b", LineId::L2, 1, 3)};
    CHECK_THROWS_AS(interval_mis(mixed), std::invalid_argument);
    const std::vector<Segment> perm{pm("p", 1, 2)};
    CHECK_THROWS_AS(interval_mis(perm), std::invalid_argument);
  }
  SUBCASE("matches exhaustive search and an independent recurrence") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Model m = random_model(seed % 2 ? 18 : 200, 0.0, 60, seed);
      std::vector<Segment> on_l1;
      for (const auto& s : m.segments)
        if (s.as_interval().line == LineId::L1) on_l1.push_back(s);
      const auto r = interval_mis(on_l1);
      CHECK(r.size() == interval_dp(on_l1));
      const Graph g = build_graph(induced(on_l1));
      CHECK(certifies(g, r));
      if (on_l1.size() <= 20) CHECK(r.size() == oracle::mis_size(g));
    }
  }
}

TEST_CASE("permutation_clique") {
  const std::vector<Segment> pair{pm("a", 1, 4), pm("b", 2, 3)};
  CHECK(permutation_clique(pair).members == Ids{"a", "b"});
  const std::vector<Segment> chain{pm("a", 1, 1), pm("b", 2, 2), pm("c", 3, 3)};
  CHECK(permutation_clique(chain).size() == 1);
  const std::vector<Segment> shared{pm("a", 3, 1), pm("b", 3, 6), pm("c", 1, 6)};
  CHECK(permutation_clique(shared).size() == 3);  // all touch pairwise
  const std::vector<Segment> bad{iv("i", LineId::L1, 1, 2)};
  CHECK_THROWS_AS(permutation_clique(bad), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Model m = random_model(seed % 4 == 0 ? 60 : 18, 1.0, seed % 3 == 0 ? 8 : 60, seed);
    const auto r = permutation_clique(m.segments);
    const Graph g = build_graph(m);
    CHECK(certifies(g, r));
    if (m.size() <= 20) CHECK(r.size() == oracle::clique_size(g));
    CHECK(r.size() == brute_clique(g, 64).size());
  }
}

TEST_CASE("max_clique") {
  SUBCASE("nested intervals plus crossing permutations") {
    const Model m{{iv("a", LineId::L1, 1, 10), iv("b", LineId::L1, 2, 9), iv("c", LineId::L1, 3, 8),
                   pm("d", 4, 7), pm("e", 5, 6)}};
    CHECK(max_clique(m).members == Ids{"a", "b", "c", "d", "e"});
  }
  SUBCASE("C5") { CHECK(max_clique(canonical_star_cycle(5).model).size() == 2); }
  SUBCASE("empty") {
    const auto r = max_clique(Model{});
    CHECK(r.size() == 0);
    CHECK(r.kind == SolveKind::Clique);
  }
  SUBCASE("L2 intervals with bottoms inside") {
    const Model m{{iv("a", LineId::L2, 1, 10), iv("b", LineId::L1, 1, 10), pm("p", 20, 4),
                   pm("q", 21, 3), pm("r", 0, 0)}};
    CHECK(max_clique(m).members == Ids{"a", "p", "q"});
  }
  SUBCASE("shared endpoints are handled") {
    const Model m{{iv("a", LineId::L1, 1, 5), iv("b", LineId::L1, 5, 9), pm("p", 5, 5),
                   pm("q", 5, 1)}};
    CHECK(max_clique(m).size() == 4);
  }
  SUBCASE("invalid model is rejected") {
    CHECK_THROWS_AS(max_clique(Model{{iv("a", LineId::L1, 3, 1)}}), std::invalid_argument);
  }
}

TEST_CASE("topo_order") {
  const std::vector<Segment> two{pm("b", 10, 11), pm("a", 1, 2)};
  const auto t = topo_order(two);
  CHECK(t[0].id == "a");
  CHECK(t[1].id == "b");
  const std::vector<Segment> crossing{pm("x", 5, 1), pm("y", 2, 9)};
  CHECK(topo_order(crossing)[0].id == "y");

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto order = topo_order(normalize(random_model(25, 1.0, 50, seed)).segments);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j) CHECK_FALSE(right_of(order[j], order[i]));
  }
}

TEST_CASE("max_is") {
  SUBCASE("everything independent") {
    const Model m{{pm("p", 1, 2), pm("q", 10, 11), iv("a", LineId::L1, 3, 4),
                   iv("b", LineId::L1, 5, 6), iv("c", LineId::L2, 4, 7)}};
    CHECK(max_is(m).size() == 5);
  }
  SUBCASE("C5") { CHECK(max_is(canonical_star_cycle(5).model).size() == 2); }
  SUBCASE("disjoint intervals") {
    Model m;
    for (int i = 0; i < 9; ++i)
      m.segments.push_back(iv("s" + std::to_string(i), LineId::L1, 3 * i, 3 * i + 2));
    CHECK(max_is(m).size() == 9);
  }
  SUBCASE("interval to the right of the last permutation segment") {
    const Model m{{pm("p", 1, 1), iv("a", LineId::L1, 5, 6)}};
    CHECK(max_is(m).members == Ids{"a", "p"});
    CHECK(max_is(m, {.pseudocode_literal = true}).size() == 1);
  }
  SUBCASE("empty") { CHECK(max_is(Model{}).size() == 0); }
}

TEST_CASE("brute force oracles") {
  const Graph c5 = oracle::cycle_graph(5);
  CHECK(brute_clique(c5).size() == 2);
  CHECK(brute_mis(c5).size() == 2);
  const Graph k5 = oracle::complete_graph(5);
  CHECK(brute_clique(k5).size() == 5);
  CHECK(brute_mis(k5).size() == 1);
  const Graph e7 = oracle::edgeless_graph(7);
  CHECK(brute_clique(e7).size() == 1);
  CHECK(brute_mis(e7).size() == 7);
  CHECK(brute_clique(Graph{}).size() == 0);
  CHECK_THROWS_AS(brute_mis(oracle::edgeless_graph(21)), std::length_error);
  CHECK(brute_mis(oracle::edgeless_graph(21), 30).size() == 21);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = build_graph(random_model(14, 0.5, 12, seed));
    CHECK(brute_clique(g).size() == oracle::clique_size(g));
    CHECK(brute_mis(g).size() == oracle::mis_size(g));
    CHECK(certifies(g, brute_clique(g)));
    CHECK(certifies(g, brute_mis(g)));
  }
}

TEST_CASE("solvers match brute force on random models") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const double frac = static_cast<double>(seed % 5) / 4.0;
    const Model m = random_model(n, frac, 3 + static_cast<std::int64_t>(seed % 17), seed);
    const Graph g = build_graph(m);
    const auto c = max_clique(m);
    const auto i = max_is(m);
    REQUIRE(certifies(g, c));
    REQUIRE(certifies(g, i));
    CHECK(c.size() == brute_clique(g).size());
    CHECK(i.size() == brute_mis(g).size());
    // Normalizing the input changes nothing.
    CHECK(max_clique(normalize(m)).size() == c.size());
    CHECK(max_is(deshare(m)).size() == i.size());
  }
}

TEST_CASE("serialize_result") {
  const SolveResult r{SolveKind::Clique, {"a", "b"}};
  CHECK(serialize_result(r) == "size 2\na\nb\n");
  CHECK(serialize_result(SolveResult{}) == "size 0\n");
}
