#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdesign/admissible.hpp"

using namespace qdesign;

TEST_CASE("Gaussian brackets and the gcd identity") {
  CHECK(q_bracket(13, 2) == 8191);
  CHECK(q_bracket(1, 7) == 1);
  CHECK(q_bracket(5, 3) == 121);
  CHECK(q_bracket_gcd(4, 6, 2) == 3);
  CHECK(q_bracket_gcd(13, 12, 2) == 1);
  // exhaustive: gcd([m]_q, [n]_q) = [gcd(m,n)]_q (the helper throws on violation)
  for (int m = 1; m <= 30; ++m)
    for (int n = 1; n <= 30; ++n)
      for (uint64_t q : {2, 3, 4, 5, 7, 9}) (void)q_bracket_gcd(m, n, q);
  CHECK(true);
}

TEST_CASE("congruence admissibility: complete, cycle, path blocks") {
  CHECK(steiner_admissible(13, 3, 2));
  CHECK(!steiner_admissible(8, 3, 2));
  CHECK(!steiner_admissible(16, 6, 2));
  CHECK(steiner_admissible(31, 6, 2));
  CHECK(steiner_admissible(36, 6, 2));
  CHECK(steiner_admissible(7, 3, 5));  // 7 = 1 mod 6
  CHECK(cycle_admissible(7, 3, 2));
  CHECK(cycle_admissible(6, 3, 2));
  CHECK(cycle_admissible(9, 3, 2));
  CHECK(!cycle_admissible(8, 3, 2));
  CHECK(!path_admissible(5, 3, 2));  // even q never works for paths
  CHECK(path_admissible(5, 3, 3));
  CHECK_THROWS_AS(steiner_admissible(3, 7, 2), error);
  CHECK_THROWS_AS(cycle_admissible(7, 2, 2), error);
}

TEST_CASE("family and initial-block counts") {
  auto s = steiner_family_sizes(13, 3, 2);
  CHECK(s.family_size == 195);
  REQUIRE(s.initial_size);
  CHECK(*s.initial_size == 15);
  auto s2 = steiner_family_sizes(19, 3, 2);
  CHECK(s2.family_size == 12483);
  CHECK(*s2.initial_size == 657);
  auto s3 = steiner_family_sizes(7, 3, 2);
  CHECK(s3.family_size == 3);
  CHECK(!s3.initial_size);
  auto s4 = steiner_family_sizes(25, 3, 3);
  CHECK(s4.family_size == 2715668620ULL);
  CHECK(!s4.initial_size);
  CHECK(steiner_family_sizes(15, 3, 2).family_size == 780);
  CHECK(steiner_family_sizes(21, 3, 2).family_size == 49932);
  CHECK(steiner_family_sizes(13, 3, 3).family_size == 5110);
  CHECK(steiner_family_sizes(21, 3, 3).family_size == 33526773);
  CHECK(steiner_family_sizes(16, 4, 2).family_size == 312);
  CHECK(steiner_family_sizes(25, 4, 2).family_size == 159783);
  CHECK(steiner_family_sizes(28, 4, 2).family_size == 1278264);
  CHECK(steiner_family_sizes(13, 4, 3).family_size == 511);
  CHECK(steiner_family_sizes(16, 4, 3).family_size == 13797);
  CHECK(steiner_family_sizes(25, 4, 3).family_size == 271566862);
  CHECK(steiner_family_sizes(28, 4, 3).family_size == 7332305274ULL);
  auto s19 = steiner_family_sizes(19, 3, 3);
  CHECK(s19.family_size == 3725197);
  CHECK(*s19.initial_size == 196063);
  CHECK_THROWS_AS(steiner_family_sizes(8, 3, 2), error);
}

TEST_CASE("the v=7 plane-count row over growing q") {
  uint64_t fq[] = {2, 3, 4, 5, 7, 9, 11, 13, 16, 17, 19};
  uint64_t fF[] = {3, 7, 13, 21, 43, 73, 111, 157, 241, 273, 343};
  for (int i = 0; i < 11; ++i) CHECK(steiner_family_sizes(7, 3, fq[i]).family_size == fF[i]);
  CHECK(*steiner_family_sizes(7, 3, 3).initial_size == 1);
  CHECK(*steiner_family_sizes(7, 3, 5).initial_size == 3);
  CHECK(*steiner_family_sizes(7, 3, 17).initial_size == 39);
  CHECK(*steiner_family_sizes(7, 3, 19).initial_size == 49);
}

TEST_CASE("admissible (order, size) table for v=7, q=2, lambda=1") {
  auto rows = admissible_table(7, 2, 1);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].order == 7);
  CHECK(rows[0].sizes == std::vector<uint64_t>{7, 9, 21});
  CHECK(rows[1].sizes == std::vector<uint64_t>{21, 63});
  CHECK(rows[2].sizes == std::vector<uint64_t>{63, 127, 381});
  CHECK(rows[3].sizes == std::vector<uint64_t>{63, 127, 381, 889, 1143});
  CHECK(rows[0].regular_possible[0]);
  CHECK(!rows[0].regular_possible[1]);
  CHECK(rows[0].regular_possible[2]);
  CHECK(!rows[1].regular_possible[0]);
  CHECK(!rows[1].regular_possible[1]);
  for (bool r : rows[2].regular_possible) CHECK(!r);
  CHECK(rows[3].regular_possible[0]);
  for (size_t i = 1; i < rows[3].regular_possible.size(); ++i) CHECK(!rows[3].regular_possible[i]);
}

TEST_CASE("general admissibility of a candidate graph") {
  CHECK(admissible_general(7, 2, 1, make_cycle(7)).admissible);
  CHECK(admissible_general(7, 2, 1, make_q3star()).admissible);
  AbstractGraph g5;
  g5.order = 5;
  g5.add_edge(0, 1);
  g5.finish();
  CHECK(!admissible_general(7, 2, 1, g5).order_ok);
}
