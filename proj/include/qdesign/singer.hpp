#pragma once

// The Singer-group view of PG(F_q^v): points are residues mod [v]_q through
// the quotient map f: g^i -> i mod [v]_q. Subspace spans, lines, hyperplanes,
// Desarguesian spreads, and the Frobenius action x -> qx all live here.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "qdesign/field.hpp"

namespace qdesign {

using Point = uint64_t;  // residue mod [v]_q

struct SingerContext {
  FieldPtr field;
  uint64_t v_q = 0;  // [v]_q

  Point project(const FieldElement& x) const { return Point(uint64_t(x.rep) % v_q); }
  FieldElement lift(Point r) const { return element(*field, int64_t(r)); }
};
using SingerPtr = std::shared_ptr<const SingerContext>;

inline SingerPtr make_singer(FieldPtr f) {
  auto s = std::make_shared<SingerContext>();
  s->v_q = f->singer_order();
  s->field = std::move(f);
  return s;
}

struct Subspace {
  std::vector<Point> points;  // sorted
  int dim = -1;               // projective dimension
  std::vector<Point> generators;
};

namespace detail {

// Closure of a set of field vectors (packed codes) under GF(q)-linear
// combinations; gens given as canonical point lifts. Returns the vector set
// including 0 and the rank.
inline std::pair<std::vector<uint64_t>, int> linear_closure(const FieldContext& f,
                                                            const std::vector<Point>& gens) {
  std::unordered_set<uint64_t> vecs = {0};
  int rank = 0;
  for (Point g : gens) {
    uint64_t gv = f.exp_[uint64_t(g) % f.order];
    if (vecs.count(gv)) continue;
    ++rank;
    std::vector<uint64_t> snapshot(vecs.begin(), vecs.end());
    for (uint64_t u : snapshot)
      for (uint32_t c = 1; c < f.q; ++c) vecs.insert(f.vec_add(u, f.vec_scale(uint32_t(c), gv)));
  }
  return {std::vector<uint64_t>(vecs.begin(), vecs.end()), rank};
}

}  // namespace detail

inline Subspace span(const SingerContext& ctx, const std::vector<Point>& gens) {
  if (gens.empty()) throw error(errc::bad_params, "span of empty generator list");
  const FieldContext& f = *ctx.field;
  auto [vecs, rank] = detail::linear_closure(f, gens);
  Subspace s;
  s.dim = rank - 1;
  std::unordered_set<Point> pts;
  for (uint64_t u : vecs)
    if (u != 0) pts.insert(Point(f.log_[u] % ctx.v_q));
  s.points.assign(pts.begin(), pts.end());
  std::sort(s.points.begin(), s.points.end());
  s.generators = gens;
  return s;
}

// q-binomial point count [d+1]_q of a projective d-subspace
inline uint64_t subspace_point_count(uint64_t q, int dim) {
  uint64_t n = 0, p = 1;
  for (int i = 0; i <= dim; ++i) {
    n += p;
    p *= q;
  }
  return n;
}

struct SubspaceCheck {
  bool ok = false;
  std::vector<Point> generators;            // witness when ok
  std::optional<std::pair<Point, Point>> violating_pair;  // a pair whose line escapes
};

inline SubspaceCheck is_subspace(const SingerContext& ctx, const std::vector<Point>& points) {
  SubspaceCheck r;
  if (points.empty()) return r;
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != points.size()) return r;  // repeated points
  // greedy basis: add points that grow the span
  const FieldContext& f = *ctx.field;
  std::vector<Point> basis;
  Subspace cur;
  for (Point p : sorted) {
    if (!basis.empty() &&
        std::binary_search(cur.points.begin(), cur.points.end(), p))
      continue;
    basis.push_back(p);
    cur = span(ctx, basis);
  }
  (void)f;
  if (cur.points == sorted) {
    r.ok = true;
    r.generators = basis;
    return r;
  }
  // find a violating pair: two members whose line leaves the set
  for (size_t i = 0; i < sorted.size() && !r.violating_pair; ++i)
    for (size_t j = i + 1; j < sorted.size() && !r.violating_pair; ++j) {
      Subspace l = span(ctx, {sorted[i], sorted[j]});
      for (Point p : l.points)
        if (!std::binary_search(sorted.begin(), sorted.end(), p)) {
          r.violating_pair = {sorted[i], sorted[j]};
          break;
        }
    }
  return r;
}

inline Subspace line_through(const SingerContext& ctx, Point a, Point b) {
  if (a == b) throw error(errc::equal_points, "line through equal points");
  return span(ctx, {a, b});
}

struct Spread {
  std::vector<Subspace> classes;
  uint64_t subgroup_generator = 0;  // classes are cosets of <generator>
};

// Partition of Z_[mn]_q into the cosets of the subgroup of order [n]_q
// (the f-image of the GF(q^n)-subgeometry and its Singer translates).
inline Spread desarguesian_spread(const SingerContext& ctx, int n) {
  int v = ctx.field->v;
  if (n <= 0 || v % n != 0) throw error(errc::not_divisible, "n must divide v");
  uint64_t class_size = subspace_point_count(ctx.field->q, n - 1);  // [n]_q
  uint64_t gen = ctx.v_q / class_size;                              // [m]_{q^n}
  Spread sp;
  sp.subgroup_generator = gen;
  for (uint64_t c = 0; c < gen; ++c) {
    std::vector<Point> pts;
    for (uint64_t i = 0; i < class_size; ++i) pts.push_back((c + i * gen) % ctx.v_q);
    std::sort(pts.begin(), pts.end());
    auto chk = is_subspace(ctx, pts);
    if (!chk.ok) throw error(errc::bad_params, "spread class failed subspace check");
    Subspace s;
    s.points = std::move(pts);
    s.dim = n - 1;
    s.generators = chk.generators;
    sp.classes.push_back(std::move(s));
  }
  return sp;
}

inline std::vector<Point> frobenius_orbit(const SingerContext& ctx, Point x) {
  std::vector<Point> orbit;
  Point y = x % ctx.v_q;
  do {
    orbit.push_back(y);
    y = Point((unsigned __int128)y * ctx.field->q % ctx.v_q);
  } while (y != x % ctx.v_q);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

inline std::vector<std::vector<Point>> frobenius_orbits(const SingerContext& ctx,
                                                        const std::vector<Point>& domain) {
  std::vector<std::vector<Point>> parts;
  std::unordered_set<Point> seen;
  for (Point x : domain) {
    if (seen.count(x % ctx.v_q)) continue;
    auto orb = frobenius_orbit(ctx, x);
    for (Point y : orb) seen.insert(y);
    parts.push_back(std::move(orb));
  }
  return parts;
}

inline bool frobenius_semiregular_on_nonidentity(int v, uint64_t q) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return q % uint64_t(v) != 1;
}

inline std::vector<Point> default_hyperplane_generators(const SingerContext& ctx) {
  // exponents 0..v-2 lift to the basis vectors 1, x, ..., x^{v-2}
  std::vector<Point> gens;
  for (int i = 0; i + 1 < ctx.field->v; ++i) gens.push_back(Point(i));
  if (gens.empty()) gens.push_back(0);  // v = 1: single-point geometry
  return gens;
}

// Coverage map of pairwise differences of a point set; helper shared with verify.
inline std::vector<uint32_t> difference_coverage(uint64_t modulus, const std::vector<Point>& set) {
  std::vector<uint32_t> cov(modulus, 0);
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = 0; j < set.size(); ++j)
      if (i != j) ++cov[(set[i] + modulus - set[j]) % modulus];
  return cov;
}

inline std::vector<Point> singer_difference_set(const SingerContext& ctx,
                                                const std::vector<Point>& hyperplane_gens) {
  Subspace h = span(ctx, hyperplane_gens);
  int v = ctx.field->v;
  if (v >= 2 && h.dim != v - 2) throw error(errc::not_hyperplane, "generators do not span a hyperplane");
  if (v == 1) return {0};
  // verify the ([v]_q, [v-1]_q, [v-2]_q) difference-set property
  uint64_t lambda = subspace_point_count(ctx.field->q, v - 3);  // [v-2]_q ([0]_q = 0... dim v-3)
  auto cov = difference_coverage(ctx.v_q, h.points);
  for (uint64_t r = 1; r < ctx.v_q; ++r)
    if (cov[r] != lambda) throw error(errc::not_hyperplane, "hyperplane image is not a difference set");
  return h.points;
}

}  // namespace qdesign
