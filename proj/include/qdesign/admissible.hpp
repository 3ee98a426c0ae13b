#pragma once

// Number-theoretic admissibility predicates and the size formulas that gate
// every search. All table arithmetic is arbitrary precision: the printed
// size tables reach past 10^15.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdesign/graph.hpp"

namespace qdesign {

using bigint = boost::multiprecision::cpp_int;

inline bigint q_bracket(int v, const bigint& q) {
  if (v < 0) throw error(errc::bad_params, "negative bracket index");
  bigint n = 0, p = 1;
  for (int i = 0; i < v; ++i) {
    n += p;
    p *= q;
  }
  return n;
}

// gcd([m]_q, [n]_q) = [gcd(m,n)]_q, returned with the identity re-verified.
inline bigint q_bracket_gcd(int m, int n, const bigint& q) {
  bigint lhs = boost::multiprecision::gcd(q_bracket(m, q), q_bracket(n, q));
  bigint rhs = q_bracket(std::gcd(m, n), q);
  if (lhs != rhs) throw error(errc::bad_params, "bracket gcd identity violated");
  return rhs;
}

struct AdmissibleVerdict {
  bool admissible = false;
  bool order_ok = false;   // |V| = [k]_q for some k
  bool size_ok = false;    // |E| divides lambda q [v]_q [v-1]_q / 2
  bool degree_ok = false;  // gcd of degrees divides lambda q [v-1]_q
  int k = 0;               // the bracket index when order_ok
  std::string reason;
};

inline std::optional<int> bracket_index(uint64_t n, uint64_t q) {
  uint64_t s = 0, p = 1;
  for (int k = 0; k <= 64; ++k) {
    if (s == n && k > 0) return k;
    if (s > n) return std::nullopt;
    s += p;
    p *= q;
  }
  return std::nullopt;
}

inline AdmissibleVerdict admissible_general(int v, uint64_t q, uint64_t lambda,
                                            const AbstractGraph& graph) {
  AdmissibleVerdict out;
  auto k = bracket_index(uint64_t(graph.order), q);
  out.order_ok = k.has_value();
  if (k) out.k = *k;
  if (!out.order_ok) {
    out.reason = "graph order is not a q-bracket";
    return out;
  }
  bigint total = lambda * q * q_bracket(v, q) * q_bracket(v - 1, q) / 2;
  out.size_ok = graph.size() > 0 && total % bigint(graph.size()) == 0;
  if (!out.size_ok) out.reason = "graph size does not divide the total edge count";
  auto deg = graph.degrees();
  uint64_t g = 0;
  for (int d : deg)
    if (d > 0) g = std::gcd(g, uint64_t(d));
  bigint degree_budget = lambda * q * q_bracket(v - 1, q);
  out.degree_ok = g == 0 || degree_budget % bigint(g) == 0;
  if (!out.degree_ok) out.reason = "degree gcd does not divide the replication budget";
  out.admissible = out.order_ok && out.size_ok && out.degree_ok;
  return out;
}

inline bool steiner_admissible(int v, int k, uint64_t /*q*/) {
  if (k < 2 || k >= v) throw error(errc::bad_params, "need 2 <= k < v");
  int m = k * (k - 1);
  return v % m == 1 % m || v % m == k % m;
}

inline bool cycle_admissible(int v, int k, uint64_t q) {
  if (k < 3) throw error(errc::bad_params, "cycles need k >= 3");
  if (q % 2 == 0) return v % k == 0 || v % k == 1;
  if (k % 2 == 0) return v % k == 1;
  return v % (2 * k) == 1 || v % (2 * k) == k;
}

inline bool path_admissible(int v, int k, uint64_t q) {
  if (k < 2) throw error(errc::bad_params, "paths need k >= 2");
  if (q % 2 == 0) return false;
  if (k % 2 == 0) return v % (k - 1) == 0 || v % (k - 1) == 1;
  return v % (2 * (k - 1)) == 0 || v % (2 * (k - 1)) == 1;
}

struct SteinerSizes {
  bigint family_size;
  std::optional<bigint> initial_size;  // none when no multiplier reduction applies
};

inline bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// |F| by the congruence-case formula; |I| = |F|/v exactly when the Frobenius
// group acts semiregularly on the family (v prime, q != 1 mod v) and the
// orbit count divides out.
inline SteinerSizes steiner_family_sizes(int v, int k, uint64_t q) {
  if (!steiner_admissible(v, k, q)) throw error(errc::not_admissible, "no Steiner congruence holds");
  bigint Q = q;
  int m = k * (k - 1);
  bigint num, den = (boost::multiprecision::pow(Q, unsigned(k)) - 1) *
                    (boost::multiprecision::pow(Q, unsigned(k - 1)) - 1);
  if (v % m == 1 % m)
    num = (Q - 1) * (boost::multiprecision::pow(Q, unsigned(v - 1)) - 1);
  else
    num = boost::multiprecision::pow(Q, unsigned(k - 1)) * (Q - 1) *
          (boost::multiprecision::pow(Q, unsigned(v - k)) - 1);
  if (num % den != 0) throw error(errc::bad_params, "size formula not integral");
  SteinerSizes out;
  out.family_size = num / den;
  if (is_prime_int(v) && q % uint64_t(v) != 1 && out.family_size % v == 0)
    out.initial_size = out.family_size / v;
  return out;
}

// The admissibility table for a fixed ambient space: for each graph order
// [k]_q (k = 3..v-1), the sizes e dividing lambda q [v]_q [v-1]_q / 2 within
// the connected-graph range [n-1, n(n-1)/2]. A size is flagged
// "regular-possible" when a d-regular graph could realize it: 2e/n integral
// and dividing lambda q [v-1]_q.
struct AdmissibleTableRow {
  uint64_t order = 0;
  std::vector<uint64_t> sizes;
  std::vector<bool> regular_possible;
};

inline std::vector<AdmissibleTableRow> admissible_table(int v, uint64_t q, uint64_t lambda) {
  std::vector<AdmissibleTableRow> rows;
  bigint total = lambda * q * q_bracket(v, q) * q_bracket(v - 1, q) / 2;
  bigint degree_budget = lambda * q * q_bracket(v - 1, q);
  for (int k = 3; k < v; ++k) {
    bigint nq = q_bracket(k, q);
    uint64_t n = uint64_t(nq);
    AdmissibleTableRow row;
    row.order = n;
    for (uint64_t e = n - 1; e <= n * (n - 1) / 2; ++e) {
      if (total % e != 0) continue;
      row.sizes.push_back(e);
      bool reg = (2 * e) % n == 0 && degree_budget % bigint(2 * e / n) == 0;
      row.regular_possible.push_back(reg);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qdesign
