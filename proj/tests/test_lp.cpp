#include "doctest.h"
#include "ncp/lp.hpp"

using namespace ncp;

TEST_CASE("lp_maximize solves a small problem exactly") {
  // max x + y st x <= 3, y <= 2, x + y <= 4
  Mat a = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  Vec b = {Rat(3), Rat(2), Rat(4)};
  Vec c = {Rat(1), Rat(1)};
  LPResult r = lp_maximize(a, b, c);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == 4);
}

TEST_CASE("lp_maximize detects unboundedness and infeasibility") {
  Mat a = {{Rat(-1), Rat(0)}};
  Vec b = {Rat(0)};
  Vec c = {Rat(1), Rat(0)};
  CHECK(lp_maximize(a, b, c).status == LPStatus::Unbounded);

  Mat a2 = {{Rat(1)}, {Rat(-1)}};
  Vec b2 = {Rat(-1), Rat(-1)};  // x <= -1 and -x <= -1
  Vec c2 = {Rat(0)};
  CHECK(lp_maximize(a2, b2, c2).status == LPStatus::Infeasible);
}

TEST_CASE("lp_maximize with negative slacks goes through phase one") {
  // max x st x >= 2 (i.e. -x <= -2), x <= 5
  Mat a = {{Rat(-1)}, {Rat(1)}};
  Vec b = {Rat(-2), Rat(5)};
  Vec c = {Rat(1)};
  LPResult r = lp_maximize(a, b, c);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == 5);
  CHECK(r.x[0] == 5);
}

TEST_CASE("facet_indices finds the walls of a square with redundancy") {
  std::vector<HalfSpace> hs = {
      {{Rat(1), Rat(0)}, Rat(1)},   // x <= 1
      {{Rat(-1), Rat(0)}, Rat(1)},  // x >= -1
      {{Rat(0), Rat(1)}, Rat(1)},   // y <= 1
      {{Rat(0), Rat(-1)}, Rat(1)},  // y >= -1
      {{Rat(1), Rat(1)}, Rat(10)},  // redundant
  };
  Vec inside = {Rat(0), Rat(0)};
  auto f = facet_indices(hs, inside);
  CHECK(f == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("facet_indices on an unbounded strip") {
  std::vector<HalfSpace> hs = {
      {{Rat(0), Rat(1)}, Rat(1)},
      {{Rat(0), Rat(-1)}, Rat(1)},
      {{Rat(1), Rat(5)}, Rat(100)},  // redundant within the interesting region?
  };
  Vec inside = {Rat(0), Rat(0)};
  auto f = facet_indices(hs, inside);
  // the third constraint does cut the strip far to the right, so it is a facet
  CHECK(f == std::vector<int>{0, 1, 2});
}
