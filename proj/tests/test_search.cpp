#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdesign/search.hpp"

using namespace qdesign;

namespace {

const std::vector<Point> kD15 = {0, 1, 2, 4, 5, 8, 10};

SingerPtr singer(uint64_t p, int v, std::vector<uint64_t> coeffs) {
  return make_singer(build_field(p, 1, v, modulus_from_values(p, coeffs)));
}

}  // namespace

TEST_CASE("graceful search finds a 7-cycle labeling in the (15,7,3) set") {
  auto r = search_graceful(15, kD15, make_cycle(7), 1);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(verify_graceful_labeling(kD15, *r.witness, 1).pass);
}

TEST_CASE("graceful search is exhaustive: no C3+C4 labeling inside the set") {
  auto g = disjoint_union(make_cycle(3), make_cycle(4));
  auto r = search_graceful(15, kD15, g, 1);
  CHECK(r.status == SearchStatus::exhausted);
  CHECK(!brute_force_graceful_exists(15, kD15, g, 1));
  // sanity for the oracle itself: it does find the 7-cycle labeling
  CHECK(brute_force_graceful_exists(15, kD15, make_cycle(7), 1));
}

TEST_CASE("infeasible parameter combinations are rejected up front") {
  CHECK_THROWS_AS(search_graceful(15, kD15, make_cycle(6), 1), error);  // 12 != 14 differences
  CHECK_THROWS_AS(search_nested_set(31, kD15, 5, 1, {}), error);        // 20 != 30
}

TEST_CASE("subspace block search rediscovers a cube-minus-vertex block") {
  auto ctx = singer(2, 7, {1, 1, 0, 0, 0, 0, 0, 1});
  auto r = search_subspace_block(*ctx, make_q3star(), 1);
  REQUIRE(r.status == SearchStatus::found);
  // the found block expands under Frobenius to a full lambda = 1 family
  InitialBlocks ib;
  ib.ctx = ctx;
  ib.blocks = {*r.witness};
  ib.lambda = 1;
  ib.subspace_required = true;
  CHECK(verify_family(expand_initial_blocks(ib)).pass);
}

TEST_CASE("family search finds four relative 7-cycles over Z_63") {
  auto ctx = singer(2, 6, {1, 1, 0, 1, 1, 0, 1});
  std::vector<Point> H;
  for (uint64_t h = 0; h < 63; h += 9) H.push_back(h);
  auto r = search_family(*ctx, 7, 1, H);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(r.family_witness->size() == 4);
}

TEST_CASE("nested set search finds a (31,6,1) set inside the printed 15-set") {
  std::vector<Point> D = {1, 3, 5, 6, 7, 11, 17, 18, 20, 21, 24, 25, 26, 27, 29};
  auto r = search_nested_set(31, D, 6, 1);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(check_nested_difference_set(31, D, *r.set_witness, 1));
}

TEST_CASE("budgets trip deterministically") {
  auto ctx = singer(2, 6, {1, 1, 0, 1, 1, 0, 1});
  std::vector<Point> H;
  for (uint64_t h = 0; h < 63; h += 9) H.push_back(h);
  SearchBudget tiny;
  tiny.nodes = 50;
  auto r = search_family(*ctx, 7, 1, H, tiny);
  CHECK(r.status == SearchStatus::budget_exceeded);
  CHECK(r.nodes_explored == 51);
}

TEST_CASE("identical specs give identical traces and witnesses") {
  auto a = search_graceful(15, kD15, make_cycle(7), 1);
  auto b = search_graceful(15, kD15, make_cycle(7), 1);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.witness->labels == b.witness->labels);

  auto ctx1 = singer(2, 7, {1, 1, 0, 0, 0, 0, 0, 1});
  auto ctx2 = singer(2, 7, {1, 1, 0, 0, 0, 0, 0, 1});
  auto r1 = search_subspace_block(*ctx1, make_q3star(), 1);
  auto r2 = search_subspace_block(*ctx2, make_q3star(), 1);
  CHECK(r1.nodes_explored == r2.nodes_explored);
  CHECK(r1.witness->labels == r2.witness->labels);
}
