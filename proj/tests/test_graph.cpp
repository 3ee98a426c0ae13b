#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdesign/graph.hpp"

using namespace qdesign;

TEST_CASE("constructors: orders, sizes, degree sequences") {
  auto c7 = make_cycle(7);
  CHECK(c7.order == 7);
  CHECK(c7.size() == 7);
  for (int d : c7.degrees()) CHECK(d == 2);

  auto p13 = make_path(13);
  CHECK(p13.order == 13);
  CHECK(p13.size() == 12);

  auto k7 = make_complete(7);
  CHECK(k7.size() == 21);
  for (int d : k7.degrees()) CHECK(d == 6);

  for (auto g : {make_prism(20), make_petersen(20, 3), make_moebius(40)}) {
    CHECK(g.order == 40);
    CHECK(g.size() == 60);
    for (int d : g.degrees()) CHECK(d == 3);  // cubic families
  }

  auto q3 = make_q3star();
  CHECK(q3.order == 7);
  CHECK(q3.size() == 9);
  auto deg = q3.degrees();
  CHECK(std::count(deg.begin(), deg.end(), 3) == 4);
  CHECK(std::count(deg.begin(), deg.end(), 2) == 3);

  auto u = disjoint_union(make_cycle(3), make_cycle(4));
  CHECK(u.order == 7);
  CHECK(u.size() == 7);

  auto w = with_isolated(make_prism(3), 1);
  CHECK(w.order == 7);
  CHECK(w.size() == 9);
  CHECK(w.isolated == 1);

  auto circ = make_circulant(9, {1, 2, 4});
  CHECK(circ.order == 9);
  CHECK(circ.size() == 27);
}

TEST_CASE("constructor rejections") {
  CHECK_THROWS_AS(make_cycle(2), error);
  CHECK_THROWS_AS(make_prism(2), error);
  CHECK_THROWS_AS(make_petersen(20, 0), error);
  CHECK_THROWS_AS(make_moebius(7), error);
  CHECK_THROWS_AS(make_circulant(6, {4}), error);
}

TEST_CASE("labeled graph validation and difference lists") {
  LabeledGraph b;
  b.graph = make_cycle(3);
  b.modulus = 15;
  b.labels = {3, 6, 10};
  b.validate();
  auto d = difference_list(b);
  CHECK(d[3] == 1);   // 6 - 3
  CHECK(d[12] == 1);  // 3 - 6
  CHECK(d[4] == 1);   // 10 - 6
  CHECK(d[7] == 1);   // 10 - 3
  auto t = difference_table(b);
  CHECK(t[0][1].has_value());
  CHECK(*t[0][1] == (3 + 15 - 6) % 15);
  CHECK(!t[0][0].has_value());

  b.labels = {3, 6, 6};
  CHECK_THROWS_AS(b.validate(), error);
  b.labels = {3, 6};
  CHECK_THROWS_AS(b.validate(), error);
  b.labels = {3, 6, 20};
  CHECK_THROWS_AS(b.validate(), error);
}

TEST_CASE("discrete-log class map") {
  auto m = make_log_map(127, 3, 7);
  CHECK(m.classes == 18);
  CHECK(m(125) == 9);
  auto big = make_log_map(8191, 17, 13);
  CHECK(big.classes == 630);
  CHECK(big((0 + 8191 - 1) % 8191) == 315);
  CHECK(big((0 + 8191 - 1249) % 8191) == 376);
  CHECK(big((0 + 8191 - 7258) % 8191) == 460);
  CHECK(big(1249) == 61);
  CHECK_THROWS_AS(make_log_map(15, 2, 7), error);    // not prime
  CHECK_THROWS_AS(make_log_map(127, 2, 7), error);   // 2 has order 7, not primitive
  CHECK_THROWS_AS((void)m(0), error);
  auto img = log_image(m, {125, 1});
  CHECK(img == std::vector<uint64_t>{9, m(1)});
}

TEST_CASE("seed expansion by a rotation") {
  auto ctx = make_singer(build_field(2, 1, 7, modulus_from_values(2, {1, 1, 0, 0, 0, 0, 0, 1})));
  auto g = make_cycle(63);
  // rotation shifts the cycle by 9; labels multiply by q = 2
  std::vector<int> rot(63);
  for (int i = 0; i < 63; ++i) rot[i] = (i + 9) % 63;
  std::vector<std::optional<Point>> seed(63);
  std::vector<Point> s9 = {1, 3, 9, 101, 91, 5, 83, 113, 11};
  for (int i = 0; i < 9; ++i) seed[i] = s9[i];
  auto lab = expand_frobenius_seed(*ctx, g, seed, rot);
  CHECK(lab.labels[9] == 2);   // 2 * 1
  CHECK(lab.labels[10] == 6);  // 2 * 3
  CHECK(lab.labels[62] == (64 * 11) % 127);

  // incomplete seed: rotation fixing everything cannot reach vertex 1
  std::vector<int> id(63);
  for (int i = 0; i < 63; ++i) id[i] = i;
  std::vector<std::optional<Point>> only0(63);
  only0[0] = 1;
  CHECK_THROWS_AS(expand_frobenius_seed(*ctx, g, only0, id), error);

  // collision: conflicting seed values on one orbit
  auto bad = seed;
  bad[9] = 5;  // should be 2
  CHECK_THROWS_AS(expand_frobenius_seed(*ctx, g, bad, rot), error);
}
