#pragma once

// Certification engine: (relative) difference families, multiplier expansion,
// development into designs/GDDs, pair-coverage design checks, graceful
// labelings, Paley labelings, and the near-resolvability line checks.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "qdesign/graph.hpp"
#include "qdesign/singer.hpp"

namespace qdesign {

struct FamilyCandidate {
  uint64_t modulus = 0;  // [v]_q
  SingerPtr ctx;         // needed when subspace_required
  std::vector<LabeledGraph> blocks;
  uint32_t lambda = 1;
  std::vector<Point> subgroup;  // sorted residues of H; empty = plain family
  bool subspace_required = false;
};

struct Violation {
  uint64_t residue = 0;
  uint32_t expected = 0, got = 0;
};

struct FamilyCertificate {
  bool pass = false;
  DifferenceList coverage;
  std::vector<Violation> violations;
  std::vector<std::vector<Point>> subspace_witnesses;  // generator lists per block
  std::string note;
};

inline bool in_sorted(const std::vector<Point>& s, Point x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline FamilyCertificate verify_family(const FamilyCandidate& c) {
  FamilyCertificate cert;
  cert.coverage.assign(c.modulus, 0);
  for (const auto& b : c.blocks) {
    b.validate();
    if (b.modulus != c.modulus) throw error(errc::context_mismatch, "block modulus mismatch");
    DifferenceList d = difference_list(b);
    for (uint64_t r = 0; r < c.modulus; ++r) cert.coverage[r] += d[r];
  }
  for (uint64_t r = 1; r < c.modulus; ++r) {
    uint32_t expected = in_sorted(c.subgroup, r) ? 0 : c.lambda;
    if (cert.coverage[r] != expected) cert.violations.push_back({r, expected, cert.coverage[r]});
  }
  bool subspaces_ok = true;
  if (c.subspace_required) {
    if (!c.ctx) throw error(errc::bad_params, "subspace check requires a Singer context");
    for (const auto& b : c.blocks) {
      auto chk = is_subspace(*c.ctx, b.labels);
      if (!chk.ok) {
        subspaces_ok = false;
        cert.note = "a block's label set is not a subspace";
        cert.subspace_witnesses.push_back({});
      } else {
        cert.subspace_witnesses.push_back(chk.generators);
      }
    }
  }
  cert.pass = cert.violations.empty() && subspaces_ok;
  return cert;
}

struct InitialBlocks {
  std::vector<LabeledGraph> blocks;  // transversal of multiplier orbits
  SingerPtr ctx;
  uint32_t lambda = 1;
  std::vector<Point> subgroup;
  bool subspace_required = false;
};

// Applies every Frobenius multiplier x -> q^j x to every initial block.
inline FamilyCandidate expand_initial_blocks(const InitialBlocks& ib) {
  FamilyCandidate c;
  c.modulus = ib.ctx->v_q;
  c.ctx = ib.ctx;
  c.lambda = ib.lambda;
  c.subgroup = ib.subgroup;
  c.subspace_required = ib.subspace_required;
  uint64_t q = ib.ctx->field->q, m = 1;
  for (int j = 0; j < ib.ctx->field->v; ++j) {
    for (const auto& b : ib.blocks) {
      LabeledGraph t = b;
      for (auto& lab : t.labels) lab = Point((unsigned __int128)lab * m % c.modulus);
      c.blocks.push_back(std::move(t));
    }
    m = m * q % c.modulus;
  }
  return c;
}

// Theorem hypothesis check: the initial blocks' combined difference list hits
// every Frobenius orbit on the target domain exactly lambda times.
inline FamilyCertificate check_evenly_distributed(const InitialBlocks& ib) {
  const SingerContext& ctx = *ib.ctx;
  DifferenceList cov(ctx.v_q, 0);
  for (const auto& b : ib.blocks) {
    DifferenceList d = difference_list(b);
    for (uint64_t r = 0; r < ctx.v_q; ++r) cov[r] += d[r];
  }
  std::vector<Point> domain;
  for (uint64_t r = 1; r < ctx.v_q; ++r)
    if (!in_sorted(ib.subgroup, r)) domain.push_back(r);
  // semiregularity on the actual domain: every multiplier orbit has full
  // length v (the v-prime shortcut is sufficient but not necessary once a
  // forbidden subgroup is removed)
  for (const auto& orbit : frobenius_orbits(ctx, domain))
    if (int(orbit.size()) != ctx.field->v)
      throw error(errc::semiregularity_fails, "Frobenius is not semiregular on this domain");
  FamilyCertificate cert;
  cert.coverage = cov;
  for (const auto& orbit : frobenius_orbits(ctx, domain)) {
    uint32_t hits = 0;
    for (Point x : orbit) hits += cov[x];
    if (hits != ib.lambda) cert.violations.push_back({orbit.front(), ib.lambda, hits});
  }
  for (Point h : ib.subgroup)
    if (h != 0 && cov[h] != 0) cert.violations.push_back({h, 0, cov[h]});
  cert.pass = cert.violations.empty();
  return cert;
}

struct DesignInstance {
  uint64_t modulus = 0;
  SingerPtr ctx;
  std::vector<LabeledGraph> blocks;
  uint32_t lambda = 1;
  int improper_degree = 0;
  bool subspace_required = false;
  std::vector<int> point_class;  // GDD class per point; empty = plain design
};

inline constexpr uint64_t kDevelopLimit = 8191;

// dev F: all translates B + g. The relative case yields a GDD whose classes
// are the cosets of the subgroup.
inline DesignInstance develop(const FamilyCandidate& c, bool force_materialize = false) {
  FamilyCertificate cert = verify_family(c);
  if (!cert.pass) throw error(errc::family_not_verified, "family fails verification");
  if (c.modulus > kDevelopLimit && !force_materialize)
    throw error(errc::too_large, "development would exceed the materialization limit");
  DesignInstance d;
  d.modulus = c.modulus;
  d.ctx = c.ctx;
  d.lambda = c.lambda;
  d.subspace_required = c.subspace_required;
  d.blocks.reserve(c.blocks.size() * c.modulus);
  for (uint64_t g = 0; g < c.modulus; ++g)
    for (const auto& b : c.blocks) {
      LabeledGraph t = b;
      for (auto& lab : t.labels) lab = (lab + g) % c.modulus;
      d.blocks.push_back(std::move(t));
    }
  int iso = 0;
  for (const auto& b : c.blocks) iso = std::max(iso, b.graph.isolated);
  d.improper_degree = iso;
  if (c.subgroup.size() >= 2) {
    uint64_t h = c.subgroup[1];  // subgroup generator (sorted coset of 0)
    d.point_class.assign(c.modulus, 0);
    for (uint64_t r = 0; r < c.modulus; ++r) d.point_class[r] = int(r % h);
  }
  return d;
}

// Walecki's zig-zag Hamiltonian cycle system: (u-1)/2 u-cycles on
// {0..u-2} + a hub vertex u-1 decomposing K_u.
inline std::vector<std::vector<int>> walecki_hcs(int u) {
  if (u < 3 || u % 2 == 0) throw error(errc::even_order, "Hamiltonian cycle system needs odd u >= 3");
  int n = u - 1, m = n / 2;
  std::vector<int> zig(n);
  zig[0] = 0;
  for (int j = 1; j < n; ++j) {
    int step = (j + 1) / 2;
    zig[j] = ((j % 2) ? step : n - step) % n;
  }
  std::vector<std::vector<int>> cycles;
  for (int k = 0; k < m; ++k) {
    std::vector<int> c;
    c.push_back(u - 1);
    for (int x : zig) c.push_back((x + k) % n);
    cycles.push_back(std::move(c));
  }
  return cycles;
}

// Completes a relative family's development into a full design by running a
// Hamiltonian cycle system on each spread class (the composition route for
// cycle designs; needs [n]_q odd).
inline DesignInstance complete_relative_design(const FamilyCandidate& c, const Spread& spread) {
  DesignInstance d = develop(c);
  int u = int(spread.classes.front().points.size());
  auto hcs = walecki_hcs(u);
  for (const auto& cls : spread.classes)
    for (const auto& cyc : hcs) {
      LabeledGraph b;
      b.graph = make_cycle(u);
      b.modulus = c.modulus;
      b.labels.resize(u);
      for (int i = 0; i < u; ++i) b.labels[i] = cls.points[cyc[i]];
      d.blocks.push_back(std::move(b));
    }
  d.point_class.clear();  // the completed object is a plain design
  return d;
}

struct DesignCertificate {
  bool pass = false;
  std::vector<Violation> violations;  // residue field holds a packed pair index
  uint64_t pairs_checked = 0;
  std::string note;
};

// Pair-coverage check: every unordered point pair (cross-class pair for GDDs)
// is adjacent in exactly lambda blocks. Parallel over blocks; the shared
// counters are atomic, so the result is schedule-independent.
inline DesignCertificate verify_design(const DesignInstance& d, int jobs = 1) {
  DesignCertificate out;
  uint64_t n = d.modulus;
  uint64_t npairs = n * (n - 1) / 2;
  auto pair_index = [n](uint64_t a, uint64_t b) {  // a < b
    return b * (b - 1) / 2 + a;
  };
  std::vector<std::atomic<uint32_t>> cov(npairs);
  for (auto& x : cov) x.store(0, std::memory_order_relaxed);
  auto work = [&](size_t lo, size_t hi) {
    for (size_t bi = lo; bi < hi; ++bi) {
      const auto& b = d.blocks[bi];
      for (auto& [i, j] : b.graph.edges) {
        uint64_t a = b.labels[i], c = b.labels[j];
        if (a > c) std::swap(a, c);
        cov[pair_index(a, c)].fetch_add(1, std::memory_order_relaxed);
      }
    }
  };
  if (jobs <= 1 || d.blocks.size() < 64) {
    work(0, d.blocks.size());
  } else {
    std::vector<std::thread> ts;
    size_t chunk = (d.blocks.size() + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      size_t lo = t * chunk, hi = std::min(d.blocks.size(), lo + chunk);
      if (lo < hi) ts.emplace_back(work, lo, hi);
    }
    for (auto& t : ts) t.join();
  }
  for (uint64_t b = 1; b < n; ++b)
    for (uint64_t a = 0; a < b; ++a) {
      uint32_t expected = d.lambda;
      if (!d.point_class.empty() && d.point_class[a] == d.point_class[b]) expected = 0;
      uint32_t got = cov[pair_index(a, b)].load(std::memory_order_relaxed);
      if (got != expected && out.violations.size() < 32)
        out.violations.push_back({pair_index(a, b), expected, got});
      ++out.pairs_checked;
    }
  // subspace side condition: full label set (isolated vertices included)
  if (d.subspace_required && d.ctx)
    for (const auto& b : d.blocks)
      if (!is_subspace(*d.ctx, b.labels).ok) {
        out.note = "a block's label set is not a subspace";
        out.violations.push_back({0, 1, 0});
        break;
      }
  out.pass = out.violations.empty();
  return out;
}

inline FamilyCertificate verify_graceful_labeling(const std::vector<Point>& D,
                                                  const LabeledGraph& B, uint32_t lambda) {
  FamilyCertificate cert;
  B.validate();
  std::vector<Point> ds = D;
  std::sort(ds.begin(), ds.end());
  for (Point p : B.labels)
    if (!in_sorted(ds, p)) {
      cert.note = "a label lies outside D";
      cert.pass = false;
      cert.violations.push_back({p, 1, 0});
      return cert;
    }
  cert.coverage = difference_list(B);
  for (uint64_t r = 1; r < B.modulus; ++r)
    if (cert.coverage[r] != lambda) cert.violations.push_back({r, lambda, cert.coverage[r]});
  cert.pass = cert.violations.empty();
  return cert;
}

// Constructive graceful labeling of the circulant C(Z_n; S), n = (p-1)/2,
// by powers of a generator of the square subgroup of Z_p^*.
inline LabeledGraph paley_circulant_labeling(uint64_t p, const std::vector<int>& S) {
  if (p < 3 || p % 4 != 3) throw error(errc::bad_prime, "need a prime p = 3 (mod 4)");
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw error(errc::bad_prime, "p is not prime");
  int n = int((p - 1) / 2);
  uint64_t r = 0;
  for (uint64_t c = 2; c < p && !r; ++c) {
    uint64_t x = 1;
    bool prim = true;
    for (uint64_t i = 1; i + 1 < p; ++i) {
      x = x * c % p;
      if (x == 1) {  // order i < p-1
        prim = false;
        break;
      }
    }
    if (prim) r = c;
  }
  uint64_t s = r * r % p;  // generates the squares, order n
  LabeledGraph out;
  out.graph = make_circulant(n, S);
  out.modulus = p;
  out.labels.resize(n);
  uint64_t x = 1;
  for (int i = 0; i < n; ++i) {
    out.labels[i] = x;
    x = x * s % p;
  }
  out.validate();
  return out;
}

struct LinePartitionCertificate {
  bool graceful_pass = false;
  bool all_lines = false;
  bool partition = false;
  std::vector<int> non_line_blocks;
};

// The near-resolvability building block: are these (q+1)-point blocks lines,
// and do they partition the given difference set?
inline LinePartitionCertificate verify_line_partition(const SingerContext& ctx,
                                                      const std::vector<std::vector<Point>>& blocks,
                                                      const std::vector<Point>& D) {
  LinePartitionCertificate out;
  out.all_lines = true;
  for (size_t i = 0; i < blocks.size(); ++i) {
    auto chk = is_subspace(ctx, blocks[i]);
    if (!chk.ok || blocks[i].size() != ctx.field->q + 1) {
      out.all_lines = false;
      out.non_line_blocks.push_back(int(i));
    }
  }
  std::vector<Point> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  std::vector<Point> ds = D;
  std::sort(ds.begin(), ds.end());
  out.partition = (all == ds) &&
                  std::adjacent_find(all.begin(), all.end()) == all.end();
  return out;
}

// Full near-resolvable check: each class is a set of pairwise disjoint lines
// whose union is the point set of a hyperplane.
inline bool verify_near_resolvable(const SingerContext& ctx,
                                   const std::vector<std::vector<std::vector<Point>>>& classes) {
  int v = ctx.field->v;
  if (v < 3) throw error(errc::bad_params, "degenerate geometry for near-resolvability");
  for (const auto& cls : classes) {
    std::vector<Point> uni;
    for (const auto& line : cls) {
      auto chk = is_subspace(ctx, line);
      if (!chk.ok || line.size() != ctx.field->q + 1) return false;
      uni.insert(uni.end(), line.begin(), line.end());
    }
    std::sort(uni.begin(), uni.end());
    if (std::adjacent_find(uni.begin(), uni.end()) != uni.end()) return false;
    auto chk = is_subspace(ctx, uni);
    if (!chk.ok || uni.size() != subspace_point_count(ctx.field->q, v - 2)) return false;
  }
  return true;
}

inline bool is_difference_set(uint64_t modulus, const std::vector<Point>& D, uint32_t lambda) {
  auto cov = difference_coverage(modulus, D);
  for (uint64_t r = 1; r < modulus; ++r)
    if (cov[r] != lambda) return false;
  return true;
}

inline bool check_nested_difference_set(uint64_t modulus, const std::vector<Point>& D,
                                        const std::vector<Point>& Dsub, uint32_t lambda_sub) {
  std::vector<Point> ds = D;
  std::sort(ds.begin(), ds.end());
  for (Point p : Dsub)
    if (!in_sorted(ds, p)) return false;
  return is_difference_set(modulus, Dsub, lambda_sub);
}

// Helper for the translation-invariance property: shift every block.
inline FamilyCandidate translate_candidate(FamilyCandidate c, uint64_t g) {
  for (auto& b : c.blocks)
    for (auto& lab : b.labels) lab = (lab + g) % c.modulus;
  return c;
}

}  // namespace qdesign
