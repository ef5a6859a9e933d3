#include <doctest.h>

#include "ipseg/cycles.hpp"
#include "ipseg/intersection.hpp"
#include "oracles.hpp"

using namespace ipseg;

namespace {
using Ids = std::vector<std::string>;

Arc interval_arc(LineId line, Ids members) { return Arc{ArcKind::Interval, std::move(members), line}; }
Arc permutation_arc(Ids members) { return Arc{ArcKind::Permutation, std::move(members), std::nullopt}; }

std::size_t arc_size(const ArcDecomposition& d, ArcKind kind) {
  std::size_t total = 0;
  for (const auto& a : d.arcs)
    if (a.kind == kind) total += a.members.size();
  return total;
}
}  // namespace

TEST_CASE("arc decomposition of the small canonical cycles") {
  SUBCASE("single-line C5") {
    const auto c = canonical_star_cycle(5);
    const auto d = arc_decomposition(c.model, c.order);
    CHECK(d.arcs == std::vector<Arc>{interval_arc(LineId::L1, {"i1", "i2"}),
                                     permutation_arc({"p1", "p2", "p3"})});
    CHECK(d.count(ArcKind::Interval) == 1);
  }
  SUBCASE("two-line C5") {
    const auto c = canonical_two_arc_cycle(5);
    const auto d = arc_decomposition(c.model, c.order);
    CHECK(d.arcs == std::vector<Arc>{interval_arc(LineId::L1, {"i1"}), permutation_arc({"q1"}),
                                     interval_arc(LineId::L2, {"i2"}),
                                     permutation_arc({"q2", "q3"})});
  }
  SUBCASE("C4 of permutation segments is a single arc") {
    const auto c = permutation_c4();
    const auto d = arc_decomposition(c.model, c.order);
    REQUIRE(d.arcs.size() == 1);
    CHECK(d.arcs[0].kind == ArcKind::Permutation);
    CHECK(d.arcs[0].members == c.order);
    CHECK(d.count(ArcKind::Interval) == 0);
  }
  SUBCASE("rotating the cycle order rotates the arcs") {
    auto c = canonical_star_cycle(6);
    std::rotate(c.order.begin(), c.order.begin() + 2, c.order.end());
    const auto d = arc_decomposition(c.model, c.order);
    REQUIRE(d.arcs.size() == 2);
    CHECK(d.arcs[0].members == Ids{"p1", "p2", "p3"});
    CHECK(d.arcs[1].members == Ids{"i1", "i2", "i3"});
  }
  SUBCASE("not a cycle") {
    const auto c = canonical_star_cycle(5);
    Ids wrong = c.order;
    std::swap(wrong[0], wrong[1]);
    CHECK_FALSE(is_chordless_cycle(c.model, wrong));
    CHECK_THROWS_AS(arc_decomposition(c.model, wrong), std::invalid_argument);
    CHECK_THROWS_AS(arc_decomposition(c.model, Ids{"i1", "i2", "p1"}), std::invalid_argument);
  }
}

TEST_CASE("generators produce chordless cycles with the stated arc profile") {
  for (std::size_t n = 4; n <= 12; ++n) {
    CAPTURE(n);
    const auto star = canonical_star_cycle(n);
    REQUIRE(star.model.size() == n);
    CHECK(star.model.is_star());
    CHECK(oracle::relabel(build_graph(star.model), star.order) == oracle::cycle_graph(n));
    const auto ds = arc_decomposition(star.model, star.order);
    CHECK(ds.count(ArcKind::Interval) == 1);
    CHECK(arc_size(ds, ArcKind::Permutation) == (n == 4 ? 2 : 3));

    const auto two = canonical_two_arc_cycle(n);
    REQUIRE(two.model.size() == n);
    CHECK_FALSE(two.model.is_star());
    CHECK(oracle::relabel(build_graph(two.model), two.order) == oracle::cycle_graph(n));
    const auto dt = arc_decomposition(two.model, two.order);
    CHECK(dt.count(ArcKind::Interval) == 2);
    std::vector<LineId> lines;
    for (const auto& a : dt.arcs) {
      if (a.kind == ArcKind::Interval) lines.push_back(*a.line);
      else CHECK(a.members.size() <= 2);
    }
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] != lines[1]);
    CHECK(validate(two.model).empty());
  }
  CHECK_THROWS_AS(canonical_star_cycle(3), std::invalid_argument);
  CHECK_THROWS_AS(canonical_two_arc_cycle(3), std::invalid_argument);
}

TEST_CASE("expand and contract") {
  SUBCASE("expand keeps a chordless cycle one longer") {
    const auto c = canonical_star_cycle(5);
    const auto e = expand_interval_arc(c, "i1");
    REQUIRE(e.order.size() == 6);
    CHECK(e.model.at("i1.1").as_interval().xl == 1);
    CHECK(e.model.at("i1.2").as_interval().xr == 4);
    CHECK(is_chordless_cycle(e.model, e.order));
    CHECK(arc_decomposition(e.model, e.order).arcs[0].members.size() == 3);
  }
  SUBCASE("contract undoes expand") {
    for (std::size_t n = 5; n <= 8; ++n) {
      const auto c = canonical_star_cycle(n);
      for (const auto& id : c.order) {
        if (!c.model.at(id).is_interval()) continue;
        const auto e = expand_interval_arc(c, id);
        const auto back = contract_interval_arc(e, id + ".2", id + ".1");
        CHECK(build_graph(back.model) == build_graph(c.model));
        CHECK(back.order == c.order);
      }
    }
  }
  SUBCASE("contracting two original intervals") {
    const auto c = canonical_star_cycle(6);
    const auto k = contract_interval_arc(c, "i1", "i2");
    CHECK(k.order == Ids{"i1+i2", "i3", "p1", "p2", "p3"});
    CHECK(is_chordless_cycle(k.model, k.order));
  }
  SUBCASE("errors") {
    const auto c = canonical_star_cycle(5);
    CHECK_THROWS_AS(expand_interval_arc(c, "p1"), std::invalid_argument);
    CHECK_THROWS_AS(expand_interval_arc(c, "nope"), std::invalid_argument);
    CHECK_THROWS_AS(contract_interval_arc(c, "i1", "p1"), std::invalid_argument);
    CHECK_THROWS_AS(contract_interval_arc(canonical_star_cycle(6), "i1", "i3"),
                    std::invalid_argument);
    CHECK_THROWS_AS(contract_interval_arc(canonical_star_cycle(4), "i1", "i2"),
                    std::invalid_argument);
  }
}

TEST_CASE("pendant-path family") {
  const Graph g7 = gn_graph(7);
  CHECK(g7.vertices.size() == 21);
  CHECK(g7.edges.size() == 21);
  for (std::size_t i = 1; i <= 7; ++i) {
    const auto k = std::to_string(i);
    CHECK(g7.degree("v" + k) == 3);
    CHECK(g7.degree("w" + k) == 2);
    CHECK(g7.degree("z" + k) == 1);
    CHECK(g7.has_edge("v" + k, "w" + k));
    CHECK(g7.has_edge("w" + k, "z" + k));
  }
  const Graph g3 = gn_graph(3);
  CHECK(g3.vertices.size() == 9);
  CHECK(g3.edges.size() == 9);
  CHECK_THROWS_AS(gn_graph(2), std::invalid_argument);

  const Model m = g7_model();
  CHECK(validate(m).empty());
  CHECK(build_graph(m) == g7);
}
