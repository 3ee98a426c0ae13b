#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdesign/verify.hpp"

using namespace qdesign;

namespace {

LabeledGraph cyc(const std::vector<Point>& seq, uint64_t mod) {
  LabeledGraph b;
  b.graph = make_cycle(int(seq.size()));
  b.labels = seq;
  b.modulus = mod;
  return b;
}

const std::vector<std::vector<Point>> kCycles127 = {
    {0, 1, 3, 7, 15, 31, 63},     {0, 7, 1, 71, 74, 79, 92},   {0, 18, 42, 14, 2, 114, 53},
    {0, 14, 47, 70, 91, 2, 22},   {0, 80, 2, 75, 41, 14, 102}, {0, 55, 3, 111, 63, 13, 96},
    {0, 29, 19, 8, 95, 65, 56},   {0, 37, 20, 89, 63, 3, 46},  {0, 51, 10, 72, 108, 40, 85}};

const std::vector<std::vector<Point>> kCycles63 = {{0, 1, 58, 25, 21, 56, 42},
                                                   {0, 50, 42, 49, 2, 21, 53},
                                                   {0, 2, 27, 10, 49, 9, 60},
                                                   {0, 22, 27, 12, 46, 9, 52}};

FamilyCandidate family127() {
  auto s = make_singer(build_field(2, 1, 7, modulus_from_values(2, {1, 1, 0, 0, 0, 0, 0, 1})));
  FamilyCandidate c;
  c.modulus = 127;
  c.ctx = s;
  c.lambda = 1;
  c.subspace_required = true;
  for (auto& v : kCycles127) c.blocks.push_back(cyc(v, 127));
  return c;
}

FamilyCandidate family63() {
  auto s = make_singer(build_field(2, 1, 6, modulus_from_values(2, {1, 1, 0, 1, 1, 0, 1})));
  FamilyCandidate c;
  c.modulus = 63;
  c.ctx = s;
  c.lambda = 1;
  c.subspace_required = true;
  for (uint64_t h = 0; h < 63; h += 9) c.subgroup.push_back(h);
  for (auto& v : kCycles63) c.blocks.push_back(cyc(v, 63));
  return c;
}

}  // namespace

TEST_CASE("nine 7-cycles partition the differences of Z_127") {
  auto c = family127();
  auto cert = verify_family(c);
  CHECK(cert.pass);
  CHECK(cert.subspace_witnesses.size() == 9);
  // break one label: verification must localize violations
  c.blocks[0].labels[1] = 5;
  auto bad = verify_family(c);
  CHECK(!bad.pass);
  CHECK(!bad.violations.empty());
}

TEST_CASE("development into a design and pair coverage") {
  auto c = family127();
  auto d = develop(c);
  CHECK(d.blocks.size() == 9 * 127);
  auto dc = verify_design(d, 2);
  CHECK(dc.pass);
  CHECK(dc.pairs_checked == 127 * 126 / 2);
}

TEST_CASE("relative family over Z_63 and its group divisible development") {
  auto rc = family63();
  CHECK(verify_family(rc).pass);
  auto gdd = develop(rc);
  CHECK(gdd.point_class.size() == 63);
  CHECK(verify_design(gdd, 1).pass);
}

TEST_CASE("Walecki completion turns the Z_63 relative family into a design") {
  auto rc = family63();
  auto spread = desarguesian_spread(*rc.ctx, 3);
  auto full = complete_relative_design(rc, spread);
  CHECK(full.blocks.size() == 4 * 63 + 9 * 3);
  CHECK(verify_design(full, 4).pass);
}

TEST_CASE("Walecki Hamiltonian cycle systems decompose K_u for all odd u <= 99") {
  for (int u = 3; u <= 99; u += 2) {
    auto hcs = walecki_hcs(u);
    CHECK(int(hcs.size()) == (u - 1) / 2);
    std::vector<int> cnt(u * u, 0);
    for (auto& cy : hcs) {
      CHECK(int(cy.size()) == u);
      for (int i = 0; i < u; ++i) {
        int a = cy[i], b = cy[(i + 1) % u];
        if (a > b) std::swap(a, b);
        ++cnt[a * u + b];
      }
    }
    bool all_once = true;
    for (int a = 0; a < u; ++a)
      for (int b = a + 1; b < u; ++b) all_once = all_once && (cnt[a * u + b] == 1);
    CHECK(all_once);
  }
  CHECK_THROWS_AS(walecki_hcs(4), error);
}

TEST_CASE("initial blocks: evenly distributed differences expand to a family") {
  auto s = make_singer(build_field(2, 1, 9, modulus_from_values(2, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1})));
  InitialBlocks ib;
  ib.ctx = s;
  ib.lambda = 1;
  ib.subspace_required = true;
  for (uint64_t h = 0; h < 511; h += 73) ib.subgroup.push_back(h);
  for (auto& v : std::vector<std::vector<Point>>{{0, 60, 1, 470, 130, 11, 504},
                                                 {0, 134, 130, 14, 1, 333, 139},
                                                 {0, 24, 130, 1, 294, 338, 474},
                                                 {0, 27, 130, 277, 1, 185, 142}})
    ib.blocks.push_back(cyc(v, 511));
  CHECK(check_evenly_distributed(ib).pass);
  auto fam = expand_initial_blocks(ib);
  CHECK(fam.blocks.size() == 36);
  CHECK(verify_family(fam).pass);
}

TEST_CASE("graceful labelings") {
  std::vector<Point> D15 = {0, 1, 2, 4, 5, 8, 10};
  CHECK(verify_graceful_labeling(D15, cyc({10, 4, 8, 1, 0, 2, 5}, 15), 1).pass);
  // label outside D
  CHECK(!verify_graceful_labeling(D15, cyc({10, 4, 8, 1, 0, 2, 6}, 15), 1).pass);
  // right labels, wrong order
  CHECK(!verify_graceful_labeling(D15, cyc({10, 4, 8, 1, 0, 5, 2}, 15), 1).pass);
}

TEST_CASE("Paley circulant labelings for several primes and connection sets") {
  std::mt19937 rng(12345);
  for (uint64_t p : {7, 11, 19, 23, 31}) {
    int n = int((p - 1) / 2);
    std::vector<Point> squares;
    for (uint64_t x = 1; x < p; ++x) squares.push_back(x * x % p);
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
    for (int trial = 0; trial < 5; ++trial) {
      // random nonempty connection set in 1..floor(n/2)
      std::vector<int> S;
      for (int s = 1; 2 * s <= n; ++s)
        if (rng() % 2) S.push_back(s);
      if (S.empty()) S.push_back(1 + int(rng() % (n / 2)));
      auto lg = paley_circulant_labeling(p, S);
      CHECK(verify_graceful_labeling(squares, lg, uint32_t(S.size())).pass);
    }
  }
  CHECK_THROWS_AS(paley_circulant_labeling(13, {1}), error);  // 13 = 1 mod 4
  CHECK_THROWS_AS(paley_circulant_labeling(15, {1}), error);  // composite
}

TEST_CASE("nested difference sets") {
  std::vector<Point> Dn = {1, 3, 5, 6, 7, 11, 17, 18, 20, 21, 24, 25, 26, 27, 29};
  CHECK(is_difference_set(31, Dn, 7));
  CHECK(check_nested_difference_set(31, Dn, {1, 5, 11, 24, 25, 27}, 1));
  CHECK(!check_nested_difference_set(15, {0, 1, 2, 4, 5, 8, 10}, {0, 1, 2}, 1));
}

TEST_CASE("line partition check flags the non-line triangles") {
  auto s31 = make_singer(build_field(2, 1, 5, modulus_from_values(2, {1, 0, 1, 0, 0, 1})));
  std::vector<Point> D31 = {1, 2, 3, 4, 6, 8, 12, 15, 16, 17, 23, 24, 27, 29, 30};
  auto lp = verify_line_partition(
      *s31, {{1, 29, 3}, {2, 27, 6}, {4, 23, 12}, {8, 24, 15}, {16, 30, 17}}, D31);
  CHECK(!lp.all_lines);
  CHECK(lp.partition);
  CHECK(lp.non_line_blocks.size() == 5);
  // non-lines also fail the class-level near-resolvability check
  auto s15 = make_singer(build_field(2, 1, 4, modulus_from_values(2, {1, 1, 0, 0, 1})));
  CHECK(!verify_near_resolvable(*s15, {{{0, 1, 2}}}));
}

TEST_CASE("translation invariance of family verdicts") {
  std::mt19937 rng(999);
  auto c = family127();
  for (int i = 0; i < 10; ++i) {
    auto t = translate_candidate(c, rng() % 127);
    CHECK(verify_family(t).pass == verify_family(c).pass);
  }
}

TEST_CASE("improper block: prism plus isolated vertex fills a plane") {
  auto s = make_singer(build_field(2, 1, 7, modulus_from_values(2, {1, 1, 0, 0, 0, 0, 0, 1})));
  InitialBlocks ib;
  ib.ctx = s;
  ib.lambda = 1;
  ib.subspace_required = true;
  LabeledGraph b;
  b.graph = with_isolated(make_prism(3), 1);
  b.labels = {105, 60, 25, 7, 1, 0, 124};
  b.modulus = 127;
  ib.blocks.push_back(b);
  CHECK(check_evenly_distributed(ib).pass);
  auto fam = expand_initial_blocks(ib);
  CHECK(verify_family(fam).pass);
  auto d = develop(fam);
  CHECK(d.improper_degree == 1);
  CHECK(verify_design(d, 2).pass);
}
