#pragma once

// Symmetry-reduced exact search: D-graceful labelings, subspace blocks with
// evenly-distributed differences, difference families (two-phase exact-cover
// style), and nested difference sets. All exploration is single-threaded and
// in a fixed order, so identical specs yield identical traces and witnesses.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qdesign/verify.hpp"

namespace qdesign {

enum class SearchStatus { found, exhausted, budget_exceeded };

struct SearchBudget {
  uint64_t nodes = 100'000'000;
  double seconds = 300.0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<LabeledGraph> witness;
  std::optional<std::vector<LabeledGraph>> family_witness;
  std::optional<std::vector<Point>> set_witness;
  uint64_t nodes_explored = 0;
};

namespace detail {

struct BudgetClock {
  const SearchBudget& budget;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  uint64_t nodes = 0;
  bool exceeded = false;

  explicit BudgetClock(const SearchBudget& b) : budget(b) {}
  bool tick() {
    if (exceeded) return false;
    if (++nodes > budget.nodes) {
      exceeded = true;
      return false;
    }
    if ((nodes & 0xFFF) == 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
            budget.seconds) {
      exceeded = true;
      return false;
    }
    return true;
  }
};

// fail-first vertex order: highest-degree vertex adjacent to the labeled
// frontier, ties by lowest index; isolated components enter by degree.
inline int next_vertex(const AbstractGraph& g, const std::vector<bool>& labeled) {
  auto deg = g.degrees();
  int best = -1;
  bool best_adjacent = false;
  int best_deg = -1;
  for (int v = 0; v < g.order; ++v) {
    if (labeled[v]) continue;
    bool adj = false;
    for (auto& [a, b] : g.edges)
      if ((a == v && labeled[b]) || (b == v && labeled[a])) adj = true;
    if (std::pair(adj, deg[v]) > std::pair(best_adjacent, best_deg)) {
      best = v;
      best_adjacent = adj;
      best_deg = deg[v];
    }
  }
  return best;
}

}  // namespace detail

// Backtracking over injective assignments V -> D with multiplicity pruning:
// no residue's coverage may exceed lambda. "exhausted" is a desk-scale
// nonexistence certificate (the space is explored without symmetry cuts).
inline SearchResult search_graceful(uint64_t modulus, const std::vector<Point>& D,
                                    const AbstractGraph& graph, uint32_t lambda,
                                    const SearchBudget& budget = {}) {
  if (graph.order > int(D.size()) || 2 * graph.size() != uint64_t(lambda) * (modulus - 1))
    throw error(errc::infeasible_count, "edge/lambda count mismatch");
  std::vector<Point> dom = D;
  std::sort(dom.begin(), dom.end());
  SearchResult res;
  detail::BudgetClock clock(budget);
  std::vector<int64_t> label(graph.order, -1);
  std::vector<bool> labeled(graph.order, false), used(dom.size(), false);
  std::vector<uint32_t> cov(modulus, 0);
  // precompute neighbor lists
  std::vector<std::vector<int>> nbr(graph.order);
  for (auto& [a, b] : graph.edges) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  std::vector<int> order;  // static variable order is fine: graph is fixed
  {
    std::vector<bool> tmp(graph.order, false);
    for (int i = 0; i < graph.order; ++i) {
      int v = detail::next_vertex(graph, tmp);
      order.push_back(v);
      tmp[v] = true;
    }
  }
  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == graph.order) return true;
    int v = order[depth];
    for (size_t di = 0; di < dom.size(); ++di) {
      if (used[di]) continue;
      if (!clock.tick()) return false;
      Point val = dom[di];
      bool ok = true;
      std::vector<uint64_t> placed;
      for (int w : nbr[v]) {
        if (!labeled[w]) continue;
        uint64_t d = (val + modulus - uint64_t(label[w])) % modulus;
        uint64_t dr = (modulus - d) % modulus;
        if (cov[d] + 1 > lambda || cov[dr] + 1 > lambda) {
          ok = false;
          break;
        }
        ++cov[d];
        ++cov[dr];
        placed.push_back(d);
      }
      if (ok) {
        label[v] = int64_t(val);
        labeled[v] = true;
        used[di] = true;
        if (rec(depth + 1)) return true;
        labeled[v] = false;
        used[di] = false;
        label[v] = -1;
      }
      for (uint64_t d : placed) {
        --cov[d];
        --cov[(modulus - d) % modulus];
      }
      if (clock.exceeded) return false;
    }
    return false;
  };
  bool found = rec(0);
  res.nodes_explored = clock.nodes;
  if (clock.exceeded) {
    res.status = SearchStatus::budget_exceeded;
    return res;
  }
  if (found) {
    LabeledGraph w;
    w.graph = graph;
    w.modulus = modulus;
    for (int64_t l : label) w.labels.push_back(Point(l));
    auto cert = verify_graceful_labeling(D, w, lambda);
    if (!cert.pass) throw error(errc::bad_params, "search produced an invalid witness");
    res.witness = std::move(w);
    res.status = SearchStatus::found;
  } else {
    res.status = SearchStatus::exhausted;
  }
  return res;
}

// Independent oracle for small instances: plain permutation enumeration.
inline bool brute_force_graceful_exists(uint64_t modulus, const std::vector<Point>& D,
                                        const AbstractGraph& graph, uint32_t lambda) {
  std::vector<Point> dom = D;
  std::sort(dom.begin(), dom.end());
  std::vector<int> idx(dom.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
  // choose graph.order of |D| slots in permutation order
  std::vector<Point> perm(dom.size());
  do {
    std::vector<uint32_t> cov(modulus, 0);
    bool ok = true;
    for (auto& [a, b] : graph.edges) {
      if (a >= graph.order || b >= graph.order) continue;
      uint64_t d = (dom[idx[a]] + modulus - dom[idx[b]]) % modulus;
      ++cov[d];
      ++cov[(modulus - d) % modulus];
    }
    for (uint64_t r = 1; r < modulus && ok; ++r)
      if (cov[r] != lambda) ok = false;
    if (ok) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

namespace detail {

// All subspaces through point 0 of the given projective dimension.
inline std::vector<Subspace> subspaces_through_zero(const SingerContext& ctx, int dim) {
  std::set<std::vector<Point>> seen;
  std::vector<Subspace> out;
  std::vector<Point> gens;
  std::function<void(Point, int)> rec = [&](Point start, int picked) {
    if (picked == dim) {
      std::vector<Point> full = {0};
      full.insert(full.end(), gens.begin(), gens.end());
      Subspace s = span(ctx, full);
      if (s.dim == dim && seen.insert(s.points).second) out.push_back(std::move(s));
      return;
    }
    for (Point g = start; g < ctx.v_q; ++g) {
      gens.push_back(g);
      rec(g + 1, picked + 1);
      gens.pop_back();
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace detail

// Two-step strategy: (i) keep subspaces whose complete difference list hits
// every Frobenius orbit; (ii) search injective labelings of the graph on the
// subspace points whose difference list hits each orbit exactly lambda times.
// This is the single-initial-block search under the full Frobenius symmetry.
inline SearchResult search_subspace_block(const SingerContext& ctx, const AbstractGraph& graph,
                                          uint32_t lambda, const SearchBudget& budget = {},
                                          const std::vector<Point>& subgroup = {}) {
  SearchResult res;
  detail::BudgetClock clock(budget);
  // orbit index per residue
  std::vector<Point> domain;
  for (uint64_t r = 1; r < ctx.v_q; ++r)
    if (!in_sorted(subgroup, r)) domain.push_back(r);
  auto orbits = frobenius_orbits(ctx, domain);
  std::vector<int> orbit_of(ctx.v_q, -1);
  for (size_t i = 0; i < orbits.size(); ++i)
    for (Point x : orbits[i]) orbit_of[x] = int(i);
  if (2 * graph.size() != lambda * orbits.size())
    throw error(errc::infeasible_count, "graph size does not match orbit count");
  int dim = 0;
  while (subspace_point_count(ctx.field->q, dim) < uint64_t(graph.order)) ++dim;
  if (subspace_point_count(ctx.field->q, dim) != uint64_t(graph.order))
    throw error(errc::infeasible_count, "graph order is not a subspace size");

  std::vector<std::vector<int>> nbr(graph.order);
  for (auto& [a, b] : graph.edges) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  std::vector<int> vorder;
  {
    std::vector<bool> tmp(graph.order, false);
    for (int i = 0; i < graph.order; ++i) {
      int v = detail::next_vertex(graph, tmp);
      vorder.push_back(v);
      tmp[v] = true;
    }
  }
  for (const Subspace& s : detail::subspaces_through_zero(ctx, dim)) {
    // step (i): the subspace's full difference list must reach every orbit
    std::vector<uint32_t> hit(orbits.size(), 0);
    bool surjective = true;
    for (size_t i = 0; i < s.points.size(); ++i)
      for (size_t j = 0; j < s.points.size(); ++j) {
        if (i == j) continue;
        uint64_t d = (s.points[i] + ctx.v_q - s.points[j]) % ctx.v_q;
        if (orbit_of[d] >= 0) ++hit[orbit_of[d]];
      }
    for (uint32_t h : hit)
      if (h == 0) surjective = false;
    if (!surjective) continue;
    // step (ii): backtrack over injective labelings by the subspace's points
    std::vector<int64_t> label(graph.order, -1);
    std::vector<bool> labeled(graph.order, false), used(s.points.size(), false);
    std::vector<uint32_t> ocov(orbits.size(), 0);
    std::function<bool(int)> rec = [&](int depth) -> bool {
      if (depth == graph.order) return true;
      int v = vorder[depth];
      for (size_t di = 0; di < s.points.size(); ++di) {
        if (used[di]) continue;
        if (!clock.tick()) return false;
        Point val = s.points[di];
        bool ok = true;
        std::vector<int> placed;
        for (int w : nbr[v]) {
          if (!labeled[w]) continue;
          uint64_t d = (val + ctx.v_q - uint64_t(label[w])) % ctx.v_q;
          int o1 = orbit_of[d], o2 = orbit_of[(ctx.v_q - d) % ctx.v_q];
          if (o1 < 0 || o2 < 0 || ocov[o1] + 1 > lambda || (o2 != o1 && ocov[o2] + 1 > lambda) ||
              (o2 == o1 && ocov[o1] + 2 > lambda)) {
            ok = false;
            break;
          }
          ++ocov[o1];
          ++ocov[o2];
          placed.push_back(o1);
          placed.push_back(o2);
        }
        if (ok) {
          label[v] = int64_t(val);
          labeled[v] = true;
          used[di] = true;
          if (rec(depth + 1)) return true;
          labeled[v] = false;
          used[di] = false;
          label[v] = -1;
        }
        for (int o : placed) --ocov[o];
        if (clock.exceeded) return false;
      }
      return false;
    };
    if (rec(0)) {
      LabeledGraph w;
      w.graph = graph;
      w.modulus = ctx.v_q;
      for (int64_t l : label) w.labels.push_back(Point(l));
      // certify: expansion by the full Frobenius group is a valid family
      InitialBlocks ib;
      ib.ctx = std::make_shared<SingerContext>(ctx);
      ib.blocks = {w};
      ib.lambda = lambda;
      ib.subgroup = subgroup;
      ib.subspace_required = true;
      auto fam = expand_initial_blocks(ib);
      if (!verify_family(fam).pass)
        throw error(errc::bad_params, "search produced an invalid witness");
      res.witness = std::move(w);
      res.status = SearchStatus::found;
      res.nodes_explored = clock.nodes;
      return res;
    }
    if (clock.exceeded) break;
  }
  res.nodes_explored = clock.nodes;
  res.status = clock.exceeded ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
  return res;
}

// Exact-cover-style family search for cycle blocks on subspaces: pick
// (subspace-through-0, cycle arrangement) candidates whose difference lists
// tile the target domain exactly lambda times. Block translates contribute
// identical differences, so anchoring every block at 0 loses no witnesses.
inline SearchResult search_family(const SingerContext& ctx, int cycle_len, uint32_t lambda,
                                  const std::vector<Point>& subgroup = {},
                                  const SearchBudget& budget = {}) {
  SearchResult res;
  detail::BudgetClock clock(budget);
  int dim = 0;
  while (subspace_point_count(ctx.field->q, dim) < uint64_t(cycle_len)) ++dim;
  if (subspace_point_count(ctx.field->q, dim) != uint64_t(cycle_len))
    throw error(errc::infeasible_count, "cycle length is not a subspace size");
  struct Candidate {
    std::vector<Point> cycle;
    std::vector<uint64_t> diffs;  // 2*cycle_len residues
  };
  std::vector<Candidate> cands;
  auto subs = detail::subspaces_through_zero(ctx, dim);
  for (const Subspace& s : subs) {
    int n = int(s.points.size());
    // distinct cycles on the point set: fix points[0] first, halve by direction
    std::vector<int> idx(n - 1);
    for (int i = 0; i < n - 1; ++i) idx[i] = i + 1;
    do {
      if (idx[0] > idx[n - 2]) continue;  // orientation break
      if (!clock.tick()) {
        res.status = SearchStatus::budget_exceeded;
        res.nodes_explored = clock.nodes;
        return res;
      }
      Candidate c;
      c.cycle.push_back(s.points[0]);
      for (int i : idx) c.cycle.push_back(s.points[i]);
      bool ok = true;
      std::vector<uint32_t> local(ctx.v_q, 0);
      for (int i = 0; i < n && ok; ++i) {
        uint64_t d =
            (c.cycle[i] + ctx.v_q - c.cycle[(i + 1) % n]) % ctx.v_q;
        uint64_t dr = (ctx.v_q - d) % ctx.v_q;
        if (in_sorted(subgroup, d)) ok = false;
        if (++local[d] > lambda || ++local[dr] > lambda) ok = false;
        c.diffs.push_back(d);
        c.diffs.push_back(dr);
      }
      if (ok) cands.push_back(std::move(c));
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  // index candidates by the residues they cover
  std::vector<std::vector<uint32_t>> by_residue(ctx.v_q);
  for (uint32_t ci = 0; ci < cands.size(); ++ci)
    for (uint64_t d : cands[ci].diffs) by_residue[d].push_back(ci);
  std::vector<uint32_t> cov(ctx.v_q, 0);
  std::vector<uint32_t> chosen;
  std::function<bool()> rec = [&]() -> bool {
    uint64_t target = 0;
    for (uint64_t r = 1; r < ctx.v_q; ++r)
      if (!in_sorted(subgroup, r) && cov[r] < lambda) {
        target = r;
        break;
      }
    if (target == 0) return true;  // everything covered
    for (uint32_t ci : by_residue[target]) {
      if (!chosen.empty() && ci <= chosen.back()) continue;  // canonical order
      if (!clock.tick()) return false;
      const Candidate& c = cands[ci];
      bool ok = true;
      for (uint64_t d : c.diffs)
        if (cov[d] + 1 > lambda) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (uint64_t d : c.diffs) ++cov[d];
      chosen.push_back(ci);
      if (rec()) return true;
      chosen.pop_back();
      for (uint64_t d : c.diffs) --cov[d];
      if (clock.exceeded) return false;
    }
    return false;
  };
  bool found = rec();
  res.nodes_explored = clock.nodes;
  if (clock.exceeded) {
    res.status = SearchStatus::budget_exceeded;
    return res;
  }
  if (!found) {
    res.status = SearchStatus::exhausted;
    return res;
  }
  std::vector<LabeledGraph> fam;
  for (uint32_t ci : chosen) {
    LabeledGraph b;
    b.graph = make_cycle(cycle_len);
    b.labels = cands[ci].cycle;
    b.modulus = ctx.v_q;
    fam.push_back(std::move(b));
  }
  FamilyCandidate fc;
  fc.modulus = ctx.v_q;
  fc.ctx = std::make_shared<SingerContext>(ctx);
  fc.blocks = fam;
  fc.lambda = lambda;
  fc.subgroup = subgroup;
  fc.subspace_required = true;
  if (!verify_family(fc).pass) throw error(errc::bad_params, "search produced an invalid family");
  res.family_witness = std::move(fam);
  res.status = SearchStatus::found;
  return res;
}

// Backtracking over k'-subsets of D toward a (v, k', lambda') difference set.
inline SearchResult search_nested_set(uint64_t modulus, const std::vector<Point>& D, int k_sub,
                                      uint32_t lambda_sub, const SearchBudget& budget = {}) {
  if (k_sub > int(D.size())) throw error(errc::infeasible_count, "subset larger than D");
  if (uint64_t(k_sub) * (k_sub - 1) != uint64_t(lambda_sub) * (modulus - 1))
    throw error(errc::infeasible_count, "subset size incompatible with lambda");
  std::vector<Point> dom = D;
  std::sort(dom.begin(), dom.end());
  SearchResult res;
  detail::BudgetClock clock(budget);
  std::vector<Point> cur;
  std::vector<uint32_t> cov(modulus, 0);
  std::function<bool(size_t)> rec = [&](size_t start) -> bool {
    if (int(cur.size()) == k_sub) {
      for (uint64_t r = 1; r < modulus; ++r)
        if (cov[r] != lambda_sub) return false;
      return true;
    }
    for (size_t i = start; i < dom.size(); ++i) {
      if (!clock.tick()) return false;
      Point x = dom[i];
      bool ok = true;
      for (Point y : cur) {
        uint64_t d = (x + modulus - y) % modulus;
        if (cov[d] + 1 > lambda_sub || cov[(modulus - d) % modulus] + 1 > lambda_sub) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (Point y : cur) {
        uint64_t d = (x + modulus - y) % modulus;
        ++cov[d];
        ++cov[(modulus - d) % modulus];
      }
      cur.push_back(x);
      if (rec(i + 1)) return true;
      cur.pop_back();
      for (Point y : cur) {
        uint64_t d = (x + modulus - y) % modulus;
        --cov[d];
        --cov[(modulus - d) % modulus];
      }
      if (clock.exceeded) return false;
    }
    return false;
  };
  bool found = rec(0);
  res.nodes_explored = clock.nodes;
  if (clock.exceeded) {
    res.status = SearchStatus::budget_exceeded;
    return res;
  }
  if (found) {
    if (!check_nested_difference_set(modulus, D, cur, lambda_sub))
      throw error(errc::bad_params, "search produced an invalid set");
    res.set_witness = cur;
    res.status = SearchStatus::found;
  } else {
    res.status = SearchStatus::exhausted;
  }
  return res;
}

}  // namespace qdesign
