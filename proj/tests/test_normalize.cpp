#include <doctest.h>

#include "ipseg/cycles.hpp"
#include "ipseg/intersection.hpp"
#include "ipseg/model.hpp"
#include "oracles.hpp"

using namespace ipseg;

TEST_CASE("deshare: intervals sharing a right endpoint") {
  const Model m{{Segment::interval("a", LineId::L1, 1, 5), Segment::interval("b", LineId::L1, 3, 5)}};
  const Model d = deshare(m);
  CHECK(endpoint_distinct(d));
  CHECK(build_graph(d) == build_graph(m));
  CHECK(build_graph(d).has_edge("a", "b"));
  // Only the shared point moved, and it stayed within the gap around 5.
  CHECK(d.at("a").as_interval().xl == 1);
  CHECK(d.at("b").as_interval().xl == 3);
  for (const auto* id : {"a", "b"}) {
    const Coord xr = d.at(id).as_interval().xr;
    CHECK(xr > 4);
    CHECK(xr < 6);
  }
}

TEST_CASE("deshare: permutation segments sharing a top endpoint now cross") {
  const Model m{{Segment::permutation("p", 3, 1), Segment::permutation("q", 3, 6)}};
  const Model d = deshare(m);
  CHECK(endpoint_distinct(d));
  // The one with the smaller bottom takes the larger top.
  CHECK(d.at("p").as_permutation().x_top > d.at("q").as_permutation().x_top);
  CHECK(segments_intersect(d.at("p"), d.at("q")));
  CHECK(d.at("p").as_permutation().x_bot == 1);
}

TEST_CASE("deshare: segments sharing both endpoints") {
  const Model m{{Segment::permutation("p", 3, 4), Segment::permutation("q", 3, 4),
                 Segment::interval("i", LineId::L1, 0, 3), Segment::interval("j", LineId::L2, 4, 4)}};
  const Model d = deshare(m);
  CHECK(endpoint_distinct(d));
  CHECK(build_graph(d) == build_graph(m));
}

TEST_CASE("deshare is the identity on endpoint-distinct models") {
  const Model m = canonical_star_cycle(6).model;
  REQUIRE(endpoint_distinct(m));
  CHECK(deshare(m) == m);
}

TEST_CASE("compact") {
  SUBCASE("rank map") {
    const Model m{{Segment::interval("a", LineId::L1, Coord(5, 2), Coord(29, 4))}};
    CHECK(compact(m).segments[0] == Segment::interval("a", LineId::L1, 1, 2));
  }
  SUBCASE("canonical C5 keeps its graph") {
    const Model m = canonical_star_cycle(5).model;
    CHECK(build_graph(compact(m)) == build_graph(m));
  }
  SUBCASE("shared endpoint is rejected") {
    const Model m{{Segment::permutation("p", 1, 2), Segment::interval("a", LineId::L1, 1, 3)}};
    CHECK_THROWS_WITH_AS(compact(m), "shared endpoints on L1 at x=1", std::invalid_argument);
  }
  SUBCASE("degenerate interval counts as shared") {
    CHECK_THROWS_AS(compact(Model{{Segment::interval("a", LineId::L2, 2, 2)}}),
                    std::invalid_argument);
    CHECK(endpoint_distinct(normalize(Model{{Segment::interval("a", LineId::L2, 2, 2)}})));
  }
}

TEST_CASE("normalize keeps the labelled graph and lands in 1..2n") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 14;
    const Model m = oracle::with_shared_endpoints(n, seed);
    REQUIRE(validate(m).empty());
    const Model d = deshare(m);
    CHECK(endpoint_distinct(d));
    CHECK(build_graph(d) == build_graph(m));
    const Model c = compact(d);
    CHECK(build_graph(c) == build_graph(m));
    for (const auto& s : c.segments)
      for (const LineId line : {LineId::L1, LineId::L2}) {
        if (!s.touches(line)) continue;
        for (const Coord& x : {s.low_on(line), s.high_on(line)}) {
          CHECK(x.denominator() == 1);
          CHECK(x >= 1);
          CHECK(x <= Coord(static_cast<std::int64_t>(2 * n)));
        }
      }
  }
}
