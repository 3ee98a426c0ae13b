#pragma once

// Graph families, labelings over Singer points, difference lists/tables,
// the logarithmic (cyclotomic-class) image, and Frobenius seed expansion.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qdesign/singer.hpp"

namespace qdesign {

enum class GraphFamily {
  custom,
  complete,
  cycle,
  path,
  prism,
  petersen,
  moebius,
  q3star,
  circulant,
  clique_union,
  with_nulls,
};

struct AbstractGraph {
  int order = 0;
  std::vector<std::pair<int, int>> edges;  // i < j
  GraphFamily family = GraphFamily::custom;
  std::string name = "custom";
  int isolated = 0;  // isolated-vertex count for improper designs

  void add_edge(int a, int b) {
    if (a == b) throw error(errc::bad_params, "loop edge");
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  void finish() {
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw error(errc::bad_params, "duplicate edge");
    for (auto& [a, b] : edges)
      if (a < 0 || b >= order) throw error(errc::bad_params, "edge endpoint out of range");
    std::vector<int> deg(order, 0);
    for (auto& [a, b] : edges) ++deg[a], ++deg[b];
    isolated = int(std::count(deg.begin(), deg.end(), 0));
  }
  size_t size() const { return edges.size(); }
  std::vector<int> degrees() const {
    std::vector<int> deg(order, 0);
    for (auto& [a, b] : edges) ++deg[a], ++deg[b];
    return deg;
  }
};

inline AbstractGraph make_cycle(int k) {
  if (k < 3) throw error(errc::bad_params, "cycle needs k >= 3");
  AbstractGraph g;
  g.order = k;
  g.family = GraphFamily::cycle;
  g.name = "C" + std::to_string(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  g.finish();
  return g;
}

inline AbstractGraph make_path(int k) {
  if (k < 2) throw error(errc::bad_params, "path needs k >= 2");
  AbstractGraph g;
  g.order = k;
  g.family = GraphFamily::path;
  g.name = "P" + std::to_string(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  g.finish();
  return g;
}

inline AbstractGraph make_complete(int k) {
  if (k < 1) throw error(errc::bad_params, "complete graph needs k >= 1");
  AbstractGraph g;
  g.order = k;
  g.family = GraphFamily::complete;
  g.name = "K" + std::to_string(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  g.finish();
  return g;
}

// Vertices: outer ring 0..n-1, inner ring n..2n-1; spokes i -- n+i.
inline AbstractGraph make_prism(int n) {
  if (n < 3) throw error(errc::bad_params, "prism needs n >= 3");
  AbstractGraph g;
  g.order = 2 * n;
  g.family = GraphFamily::prism;
  g.name = "Prism" + std::to_string(n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  g.finish();
  return g;
}

// Generalized Petersen P(n,t): outer n-cycle, inner edges i -- i+t, spokes.
inline AbstractGraph make_petersen(int n, int t) {
  if (n < 3 || t < 1 || t > n - 1) throw error(errc::bad_params, "bad Petersen parameters");
  AbstractGraph g;
  g.order = 2 * n;
  g.family = GraphFamily::petersen;
  g.name = "P(" + std::to_string(n) + "," + std::to_string(t) + ")";
  std::set<std::pair<int, int>> inner;
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    int a = n + i, b = n + (i + t) % n;
    if (a > b) std::swap(a, b);
    inner.insert({a, b});
    g.add_edge(i, n + i);
  }
  for (auto& e : inner) g.add_edge(e.first, e.second);
  g.finish();
  return g;
}

// Circulant C(Z_n; S) with S subset of {1..floor(n/2)}.
inline AbstractGraph make_circulant(int n, const std::vector<int>& S) {
  AbstractGraph g;
  g.order = n;
  g.family = GraphFamily::circulant;
  g.name = "C(Z" + std::to_string(n) + ")";
  std::set<std::pair<int, int>> es;
  for (int s : S) {
    if (s < 1 || 2 * s > n) throw error(errc::bad_params, "connection out of range");
    for (int i = 0; i < n; ++i) {
      int a = i, b = (i + s) % n;
      if (a > b) std::swap(a, b);
      es.insert({a, b});
    }
  }
  for (auto& e : es) g.add_edge(e.first, e.second);
  g.finish();
  return g;
}

// Moebius ladder M_{2n} = C(Z_{2n}; {1, n}).
inline AbstractGraph make_moebius(int two_n) {
  if (two_n < 4 || two_n % 2) throw error(errc::bad_params, "Moebius ladder order must be even >= 4");
  AbstractGraph g = make_circulant(two_n, {1, two_n / 2});
  g.family = GraphFamily::moebius;
  g.name = "M" + std::to_string(two_n);
  return g;
}

// Cube minus a vertex: the 3-cube on bit-vectors 0..7 with vertex 7 deleted,
// keeping indices 0..6 (three vertices of degree 2, four of degree 3).
inline AbstractGraph make_q3star() {
  AbstractGraph g;
  g.order = 7;
  g.family = GraphFamily::q3star;
  g.name = "Q3*";
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      int x = a ^ b;
      if ((x & (x - 1)) == 0 && a != 7 && b != 7) g.add_edge(a, b);
    }
  g.finish();
  return g;
}

inline AbstractGraph disjoint_union(const AbstractGraph& a, const AbstractGraph& b) {
  AbstractGraph g;
  g.order = a.order + b.order;
  g.family = GraphFamily::clique_union;
  g.name = a.name + "+" + b.name;
  g.edges = a.edges;
  for (auto& [x, y] : b.edges) g.add_edge(x + a.order, y + a.order);
  g.finish();
  return g;
}

inline AbstractGraph with_isolated(AbstractGraph g, int d) {
  if (d < 0) throw error(errc::bad_params, "negative null-graph order");
  g.order += d;
  g.family = GraphFamily::with_nulls;
  g.name += "+N" + std::to_string(d);
  g.finish();
  return g;
}

struct LabeledGraph {
  AbstractGraph graph;
  std::vector<Point> labels;  // aligned to vertex index
  uint64_t modulus = 0;       // [v]_q of the ambient group

  void validate() const {
    if (int(labels.size()) != graph.order) throw error(errc::bad_params, "label count mismatch");
    std::vector<Point> s = labels;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw error(errc::bad_params, "labels not injective");
    for (Point p : labels)
      if (p >= modulus) throw error(errc::bad_params, "label out of range");
  }
};

// DifferenceList: dense multiplicity array over Z_modulus (index 0 unused).
using DifferenceList = std::vector<uint32_t>;

inline DifferenceList difference_list(const LabeledGraph& B) {
  DifferenceList d(B.modulus, 0);
  for (auto& [i, j] : B.graph.edges) {
    uint64_t x = (B.labels[i] + B.modulus - B.labels[j]) % B.modulus;
    ++d[x];
    ++d[(B.modulus - x) % B.modulus];
  }
  return d;
}

inline std::vector<std::vector<std::optional<uint64_t>>> difference_table(const LabeledGraph& B) {
  int n = B.graph.order;
  std::vector<std::vector<std::optional<uint64_t>>> t(n, std::vector<std::optional<uint64_t>>(n));
  for (auto& [i, j] : B.graph.edges) {
    t[i][j] = (B.labels[i] + B.modulus - B.labels[j]) % B.modulus;
    t[j][i] = (B.labels[j] + B.modulus - B.labels[i]) % B.modulus;
  }
  return t;
}

// Discrete-log map Log: r^i in Z_p^* -> i mod ((p-1)/v), the cyclotomic-class
// index used to test evenly-distributed differences.
struct LogMap {
  uint64_t p = 0, r = 0, classes = 0;
  std::vector<uint64_t> dlog;  // dlog[x] for x in 1..p-1

  uint64_t operator()(uint64_t x) const {
    if (x == 0 || x >= p) throw error(errc::bad_params, "Log of non-unit");
    return dlog[x] % classes;
  }
};

inline LogMap make_log_map(uint64_t p, uint64_t r, int v) {
  // p must be prime and r a primitive root mod p
  if (p < 2) throw error(errc::not_prime, "modulus not prime");
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw error(errc::not_prime, "modulus not prime");
  if ((p - 1) % uint64_t(v) != 0) throw error(errc::bad_params, "v does not divide p-1");
  LogMap m;
  m.p = p;
  m.r = r;
  m.classes = (p - 1) / uint64_t(v);
  m.dlog.assign(p, 0);
  uint64_t x = 1;
  std::vector<bool> seen(p, false);
  for (uint64_t i = 0; i < p - 1; ++i) {
    if (seen[x]) throw error(errc::not_primitive_root, "r is not a primitive root");
    seen[x] = true;
    m.dlog[x] = i;
    x = (unsigned __int128)x * r % p;
  }
  return m;
}

inline std::vector<uint64_t> log_image(const LogMap& m, const std::vector<uint64_t>& residues) {
  std::vector<uint64_t> out;
  out.reserve(residues.size());
  for (uint64_t x : residues) out.push_back(m(x));
  return out;
}

// Fills a labeling from a seed on a transversal of rotation-orbits: the image
// of vertex rotation(x) is q * label(x) mod [v]_q. Seed entries are given for
// a subset of vertices (others = nullopt).
inline LabeledGraph expand_frobenius_seed(const SingerContext& ctx, const AbstractGraph& graph,
                                          const std::vector<std::optional<Point>>& seed,
                                          const std::vector<int>& rotation) {
  if (int(seed.size()) != graph.order || int(rotation.size()) != graph.order)
    throw error(errc::bad_params, "seed/rotation size mismatch");
  std::vector<std::optional<Point>> lab = seed;
  uint64_t q = ctx.field->q;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int x = 0; x < graph.order; ++x) {
      if (!lab[x]) continue;
      int y = rotation[x];
      Point want = Point((unsigned __int128)(*lab[x]) * q % ctx.v_q);
      if (!lab[y]) {
        lab[y] = want;
        progress = true;
      } else if (*lab[y] != want) {
        throw error(errc::collision, "seed expansion collides");
      }
    }
  }
  LabeledGraph out;
  out.graph = graph;
  out.modulus = ctx.v_q;
  out.labels.resize(graph.order);
  for (int x = 0; x < graph.order; ++x) {
    if (!lab[x]) throw error(errc::seed_incomplete, "seed does not reach every vertex");
    out.labels[x] = *lab[x];
  }
  out.validate();
  return out;
}

}  // namespace qdesign
