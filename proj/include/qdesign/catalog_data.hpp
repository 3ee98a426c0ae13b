#pragma once

// Generated from data/catalog/*.json; regenerate with tools/embed_catalog.
// Do not edit by hand.

#include <utility>

namespace qdesign {

inline constexpr std::pair<const char*, const char*> kCatalogData[] = {
  {"cliqueunion-15-not-D-graceful", R"qdcat({
 "D": [
  0,
  1,
  2,
  4,
  5,
  8,
  10
 ],
 "expected": "fail",
 "graph": {
  "parts": [
   {
    "n": 3,
    "type": "cycle"
   },
   {
    "n": 4,
    "type": "cycle"
   }
  ],
  "type": "union"
 },
 "group_order": 15,
 "id": "cliqueunion-15-not-D-graceful",
 "kind": "graceful_search",
 "lambda": 1,
 "provenance": "exhaustive check: no union of a triangle and a square is graceful within the (15,7,3) set"
})qdcat"},
  {"cycle-6-C3-q2-relative", R"qdcat({
 "blocks": [
  [
   0,
   1,
   58,
   25,
   21,
   56,
   42
  ],
  [
   0,
   50,
   42,
   49,
   2,
   21,
   53
  ],
  [
   0,
   2,
   27,
   10,
   49,
   9,
   60
  ],
  [
   0,
   22,
   27,
   12,
   46,
   9,
   52
  ]
 ],
 "expected": "pass",
 "field": {
  "e": 1,
  "modulus": [
   0,
   0,
   -1,
   0,
   0,
   -1,
   0
  ],
  "p": 2,
  "v": 6
 },
 "graph": {
  "n": 7,
  "type": "cycle"
 },
 "id": "cycle-6-C3-q2-relative",
 "kind": "relative_family",
 "lambda": 1,
 "provenance": "four 7-cycles on planes relative to the index-9 subgroup of Z_63",
 "subgroup": [
  0,
  9,
  18,
  27,
  36,
  45,
  54
 ],
 "subspace_required": true
})qdcat"},
  {"cycle-7-C3-q2", R"qdcat({
 "blocks": [
  [
   0,
   1,
   3,
   7,
   15,
   31,
   63
  ],
  [
   0,
   7,
   1,
   71,
   74,
   79,
   92
  ],
  [
   0,
   18,
   42,
   14,
   2,
   114,
   53
  ],
  [
   0,
   14,
   47,
   70,
   91,
   2,
   22
  ],
  [
   0,
   80,
   2,
   75,
   41,
   14,
   102
  ],
  [
   0,
   55,
   3,
   111,
   63,
   13,
   96
  ],
  [
   0,
   29,
   19,
   8,
   95,
   65,
   56
  ],
  [
   0,
   37,
   20,
   89,
   63,
   3,
   46
  ],
  [
   0,
   51,
   10,
   72,
   108,
   40,
   85
  ]
 ],
 "expected": "pass",
 "field": {
  "e": 1,
  "modulus": [
   0,
   0,
   -1,
   -1,
   -1,
   -1,
   -1,
   0
  ],
  "p": 2,
  "v": 7
 },
 "graph": {
  "n": 7,
  "type": "cycle"
 },
 "id": "cycle-7-C3-q2",
 "kind": "family",
 "lambda": 1,
 "provenance": "nine 7-cycles on planes whose differences partition the nonzero residues mod 127",
 "subgroup": [],
 "subspace_required": true
})qdcat"},
  {"cycle-9-C3-q2-initial", R"qdcat({
 "blocks": [
  [
   0,
   60,
   1,
   470,
   130,
   11,
   504
  ],
  [
   0,
   134,
   130,
   14,
   1,
   333,
   139
  ],
  [
   0,
   24,
   130,
   1,
   294,
   338,
   474
  ],
  [
   0,
   27,
   130,
   277,
   1,
   185,
   142
  ]
 ],
 "expected": "pass",
 "field": {
  "e": 1,
  "modulus": [
   0,
   -1,
   -1,
   -1,
   0,
   -1,
   -1,
   -1,
   -1,
   0
  ],
  "p": 2,
  "v": 9
 },
 "graph": {
  "n": 7,
  "type": "cycle"
 },
 "id": "cycle-9-C3-q2-initial",
 "kind": "initial_blocks",
 "lambda": 1,
 "provenance": "four initial 7-cycles on planes over GF(2^9), relative to the subgroup of order 7",
 "subgroup": [
  0,
  73,
  146,
  219,
  292,
  365,
  438
 ],
 "subspace_required": true
})qdcat"},
  {"improper-7-prism3-N1-q2", R"qdcat({
 "blocks": [
  [
   105,
   60,
   25,
   7,
   1,
   0,
   124
  ]
 ],
 "expected": "pass",
 "field": {
  "e": 1,
  "modulus": [
   0,
   0,
   -1,
   -1,
   -1,
   -1,
   -1,
   0
  ],
  "p": 2,
  "v": 7
 },
 "graph": {
  "isolated": 1,
  "n": 3,
  "type": "prism"
 },
 "id": "improper-7-prism3-N1-q2",
 "kind": "initial_blocks",
 "lambda": 1,
 "provenance": "triangular prism plus an isolated vertex filling a plane over GF(2^7)",
 "subgroup": [],
 "subspace_required": true
})qdcat"},
  {"moebius40-121-q3-seed", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 40,
  "type": "moebius"
 },
 "group_order": 121,
 "id": "moebius40-121-q3-seed",
 "kind": "graceful_labeling",
 "labels": [
  59,
  63,
  104,
  18,
  9,
  33,
  58,
  102,
  60,
  21,
  75,
  6,
  3,
  11,
  100,
  34,
  20,
  7,
  25,
  2,
  1,
  44,
  114,
  92,
  47,
  83,
  89,
  41,
  81,
  55,
  38,
  71,
  56,
  68,
  70,
  54,
  27,
  99,
  53,
  64
 ],
 "lambda": 1,
 "provenance": "40-vertex Moebius ladder from a tripling seed over Z_121",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    40
   ]
  ],
  "stride": 32
 }
})qdcat"},
  {"nested-31-6-in-15", R"qdcat({
 "D": [
  1,
  3,
  5,
  6,
  7,
  11,
  17,
  18,
  20,
  21,
  24,
  25,
  26,
  27,
  29
 ],
 "D_sub": [
  1,
  5,
  11,
  24,
  25,
  27
 ],
 "expected": "pass",
 "group_order": 31,
 "id": "nested-31-6-in-15",
 "kind": "nested_set",
 "lambda": 7,
 "provenance": "a (31,6,1) difference set nested in a (31,15,7) difference set",
 "sub_lambda": 1
})qdcat"},
  {"nonline-cliques-31", R"qdcat({
 "D": [
  1,
  2,
  3,
  4,
  6,
  8,
  12,
  15,
  16,
  17,
  23,
  24,
  27,
  29,
  30
 ],
 "expected": "pass",
 "field": {
  "e": 1,
  "modulus": [
   0,
   -1,
   0,
   -1,
   -1,
   0
  ],
  "p": 2,
  "v": 5
 },
 "graph": {
  "parts": [
   {
    "n": 3,
    "type": "cycle"
   },
   {
    "n": 3,
    "type": "cycle"
   },
   {
    "n": 3,
    "type": "cycle"
   },
   {
    "n": 3,
    "type": "cycle"
   },
   {
    "n": 3,
    "type": "cycle"
   }
  ],
  "type": "union"
 },
 "group_order": 31,
 "id": "nonline-cliques-31",
 "kind": "graceful_labeling",
 "labels": [
  1,
  29,
  3,
  2,
  27,
  6,
  4,
  23,
  12,
  8,
  24,
  15,
  16,
  30,
  17
 ],
 "lambda": 1,
 "line_partition": {
  "blocks": [
   [
    1,
    29,
    3
   ],
   [
    2,
    27,
    6
   ],
   [
    4,
    23,
    12
   ],
   [
    8,
    24,
    15
   ],
   [
    16,
    30,
    17
   ]
  ],
  "expected": "fail"
 },
 "provenance": "five triangles covering a (31,15,7) difference set; the triangles are not lines"
})qdcat"},
  {"paley-19-prism3", R"qdcat({
 "D": [
  1,
  4,
  5,
  6,
  7,
  9,
  11,
  16,
  17
 ],
 "expected": "pass",
 "graph": {
  "n": 3,
  "type": "prism"
 },
 "group_order": 19,
 "id": "paley-19-prism3",
 "kind": "graceful_labeling",
 "labels": [
  17,
  9,
  11,
  16,
  4,
  1
 ],
 "lambda": 1,
 "provenance": "triangular prism labeled by quadratic residues mod 19"
})qdcat"},
  {"path-5-P3-q3", R"qdcat({
 "blocks": [
  [
   0,
   1,
   3,
   69,
   86,
   93,
   77,
   5,
   47,
   75,
   28,
   15,
   49
  ]
 ],
 "expected": "pass",
 "field": {
  "e": 1,
  "modulus": [
   0,
   1,
   -1,
   -1,
   -1,
   0
  ],
  "p": 3,
  "v": 5
 },
 "graph": {
  "n": 13,
  "type": "path"
 },
 "id": "path-5-P3-q3",
 "kind": "initial_blocks",
 "lambda": 1,
 "provenance": "13-vertex path on a plane over GF(3^5), one difference per Frobenius orbit",
 "subgroup": [],
 "subspace_required": true
})qdcat"},
  {"petersen-20-2-q3", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 20,
  "t": 2,
  "type": "petersen"
 },
 "group_order": 121,
 "id": "petersen-20-2-q3",
 "kind": "graceful_labeling",
 "labels": [
  1,
  7,
  2,
  34,
  3,
  21,
  6,
  102,
  9,
  63,
  18,
  64,
  27,
  68,
  54,
  71,
  81,
  83,
  41,
  92,
  70,
  20,
  11,
  53,
  89,
  60,
  33,
  38,
  25,
  59,
  99,
  114,
  75,
  56,
  55,
  100,
  104,
  47,
  44,
  58
 ],
 "lambda": 1,
 "provenance": "generalized Petersen graph P(20,2) from a tripling seed over Z_121",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    20
   ],
   [
    20,
    20
   ]
  ],
  "stride": 4
 }
})qdcat"},
  {"petersen-20-3-q3", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 20,
  "t": 3,
  "type": "petersen"
 },
 "group_order": 121,
 "id": "petersen-20-3-q3",
 "kind": "graceful_labeling",
 "labels": [
  1,
  11,
  7,
  2,
  3,
  33,
  21,
  6,
  9,
  99,
  63,
  18,
  27,
  55,
  68,
  54,
  81,
  44,
  83,
  41,
  20,
  34,
  25,
  58,
  60,
  102,
  75,
  53,
  59,
  64,
  104,
  38,
  56,
  71,
  70,
  114,
  47,
  92,
  89,
  100
 ],
 "lambda": 1,
 "provenance": "generalized Petersen graph P(20,3) from a tripling seed over Z_121",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    20
   ],
   [
    20,
    20
   ]
  ],
  "stride": 4
 }
})qdcat"},
  {"petersen-20-4-q3", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 20,
  "t": 4,
  "type": "petersen"
 },
 "group_order": 121,
 "id": "petersen-20-4-q3",
 "kind": "graceful_labeling",
 "labels": [
  1,
  7,
  2,
  100,
  3,
  21,
  6,
  58,
  9,
  63,
  18,
  53,
  27,
  68,
  54,
  38,
  81,
  83,
  41,
  114,
  11,
  20,
  64,
  25,
  33,
  60,
  71,
  75,
  99,
  59,
  92,
  104,
  55,
  56,
  34,
  70,
  44,
  47,
  102,
  89
 ],
 "lambda": 1,
 "provenance": "generalized Petersen graph P(20,4) from a tripling seed over Z_121",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    20
   ],
   [
    20,
    20
   ]
  ],
  "stride": 4
 }
})qdcat"},
  {"petersen-20-5-q3", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 20,
  "t": 5,
  "type": "petersen"
 },
 "group_order": 121,
 "id": "petersen-20-5-q3",
 "kind": "graceful_labeling",
 "labels": [
  1,
  20,
  2,
  25,
  3,
  60,
  6,
  75,
  9,
  59,
  18,
  104,
  27,
  56,
  54,
  70,
  81,
  47,
  41,
  89,
  64,
  7,
  53,
  11,
  71,
  21,
  38,
  33,
  92,
  63,
  114,
  99,
  34,
  68,
  100,
  55,
  102,
  83,
  58,
  44
 ],
 "lambda": 1,
 "provenance": "generalized Petersen graph P(20,5) from a tripling seed over Z_121",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    20
   ],
   [
    20,
    20
   ]
  ],
  "stride": 4
 }
})qdcat"},
  {"petersen-20-6-q3", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 20,
  "t": 6,
  "type": "petersen"
 },
 "group_order": 121,
 "id": "petersen-20-6-q3",
 "kind": "graceful_labeling",
 "labels": [
  1,
  58,
  7,
  25,
  3,
  53,
  21,
  75,
  9,
  38,
  63,
  104,
  27,
  114,
  68,
  70,
  81,
  100,
  83,
  89,
  11,
  2,
  20,
  34,
  33,
  6,
  60,
  102,
  99,
  18,
  59,
  64,
  55,
  54,
  56,
  71,
  44,
  41,
  47,
  92
 ],
 "lambda": 1,
 "provenance": "generalized Petersen graph P(20,6) from a tripling seed over Z_121",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    20
   ],
   [
    20,
    20
   ]
  ],
  "stride": 4
 }
})qdcat"},
  {"petersen-20-7-q3", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 20,
  "t": 7,
  "type": "petersen"
 },
 "group_order": 121,
 "id": "petersen-20-7-q3",
 "kind": "graceful_labeling",
 "labels": [
  1,
  25,
  7,
  34,
  3,
  75,
  21,
  102,
  9,
  104,
  63,
  64,
  27,
  70,
  68,
  71,
  81,
  89,
  83,
  92,
  20,
  114,
  2,
  11,
  60,
  100,
  6,
  33,
  59,
  58,
  18,
  99,
  56,
  53,
  54,
  55,
  47,
  38,
  41,
  44
 ],
 "lambda": 1,
 "provenance": "generalized Petersen graph P(20,7) from a tripling seed over Z_121",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    20
   ],
   [
    20,
    20
   ]
  ],
  "stride": 4
 }
})qdcat"},
  {"petersen-20-8-q3", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 20,
  "t": 8,
  "type": "petersen"
 },
 "group_order": 121,
 "id": "petersen-20-8-q3",
 "kind": "graceful_labeling",
 "labels": [
  1,
  20,
  58,
  7,
  3,
  60,
  53,
  21,
  9,
  59,
  38,
  63,
  27,
  56,
  114,
  68,
  81,
  47,
  100,
  83,
  25,
  2,
  11,
  34,
  75,
  6,
  33,
  102,
  104,
  18,
  99,
  64,
  70,
  54,
  55,
  71,
  89,
  41,
  44,
  92
 ],
 "lambda": 1,
 "provenance": "generalized Petersen graph P(20,8) from a tripling seed over Z_121",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    20
   ],
   [
    20,
    20
   ]
  ],
  "stride": 4
 }
})qdcat"},
  {"petersen-20-9-q3", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 20,
  "t": 9,
  "type": "petersen"
 },
 "group_order": 121,
 "id": "petersen-20-9-q3",
 "kind": "graceful_labeling",
 "labels": [
  1,
  53,
  11,
  64,
  3,
  38,
  33,
  71,
  9,
  114,
  99,
  92,
  27,
  100,
  55,
  34,
  81,
  58,
  44,
  102,
  7,
  2,
  20,
  25,
  21,
  6,
  60,
  75,
  63,
  18,
  59,
  104,
  68,
  54,
  56,
  70,
  83,
  41,
  47,
  89
 ],
 "lambda": 1,
 "provenance": "generalized Petersen graph P(20,9) from a tripling seed over Z_121",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    20
   ],
   [
    20,
    20
   ]
  ],
  "stride": 4
 }
})qdcat"},
  {"prism40-121-q3", R"qdcat({
 "D": [
  1,
  2,
  3,
  6,
  7,
  9,
  11,
  18,
  20,
  21,
  25,
  27,
  33,
  34,
  38,
  41,
  44,
  47,
  53,
  54,
  55,
  56,
  58,
  59,
  60,
  63,
  64,
  68,
  70,
  71,
  75,
  81,
  83,
  89,
  92,
  99,
  100,
  102,
  104,
  114
 ],
 "expected": "pass",
 "graph": {
  "n": 20,
  "type": "prism"
 },
 "group_order": 121,
 "id": "prism40-121-q3",
 "kind": "graceful_labeling",
 "labels": [
  18,
  99,
  9,
  53,
  6,
  33,
  3,
  58,
  2,
  11,
  1,
  100,
  41,
  44,
  81,
  114,
  54,
  55,
  27,
  38,
  104,
  63,
  34,
  60,
  75,
  21,
  92,
  20,
  25,
  7,
  71,
  47,
  89,
  83,
  64,
  56,
  70,
  68,
  102,
  59
 ],
 "lambda": 1,
 "provenance": "20-gonal prism labeled by a (121,40,13) difference set, tripling rotation",
 "seed_check": {
  "multiplier": 3,
  "segments": [
   [
    0,
    20
   ],
   [
    20,
    20
   ]
  ],
  "stride": 16
 }
})qdcat"},
  {"q3star-7-q2", R"qdcat({
 "blocks": [
  [
   14,
   2,
   5,
   0,
   65,
   54,
   95
  ]
 ],
 "expected": "pass",
 "field": {
  "e": 1,
  "modulus": [
   0,
   0,
   -1,
   -1,
   -1,
   -1,
   -1,
   0
  ],
  "p": 2,
  "v": 7
 },
 "graph": {
  "type": "q3star"
 },
 "id": "q3star-7-q2",
 "kind": "initial_blocks",
 "lambda": 1,
 "log_check": {
  "r": 3
 },
 "provenance": "cube-minus-a-vertex initial block over GF(2^7), Frobenius expansion",
 "subgroup": [],
 "subspace_required": true
})qdcat"},
  {"singer-C15-31", R"qdcat({
 "D": [
  1,
  2,
  3,
  4,
  6,
  8,
  12,
  15,
  16,
  17,
  23,
  24,
  27,
  29,
  30
 ],
 "expected": "pass",
 "graph": {
  "n": 15,
  "type": "cycle"
 },
 "group_order": 31,
 "id": "singer-C15-31",
 "kind": "graceful_labeling",
 "labels": [
  23,
  4,
  27,
  24,
  29,
  15,
  17,
  2,
  1,
  8,
  30,
  3,
  16,
  6,
  12
 ],
 "lambda": 1,
 "provenance": "15-cycle gracefully labeled by a (31,15,7) hyperplane difference set"
})qdcat"},
  {"singer-C31-63", R"qdcat({
 "D": [
  0,
  1,
  2,
  3,
  4,
  6,
  7,
  8,
  9,
  12,
  13,
  14,
  16,
  18,
  19,
  24,
  26,
  27,
  28,
  32,
  33,
  35,
  36,
  38,
  41,
  45,
  48,
  49,
  52,
  54,
  56
 ],
 "expected": "pass",
 "graph": {
  "n": 31,
  "type": "cycle"
 },
 "group_order": 63,
 "id": "singer-C31-63",
 "kind": "graceful_labeling",
 "labels": [
  13,
  36,
  14,
  45,
  33,
  4,
  52,
  32,
  19,
  18,
  12,
  1,
  8,
  3,
  6,
  2,
  0,
  28,
  9,
  35,
  49,
  41,
  24,
  48,
  27,
  54,
  7,
  16,
  26,
  56,
  38
 ],
 "lambda": 1,
 "provenance": "31-cycle gracefully labeled by a (63,31,15) hyperplane difference set"
})qdcat"},
  {"singer-C63-127-seed", R"qdcat({
 "D": [
  1,
  2,
  3,
  4,
  5,
  6,
  8,
  9,
  10,
  11,
  12,
  15,
  16,
  17,
  18,
  20,
  22,
  23,
  24,
  29,
  30,
  32,
  33,
  34,
  36,
  39,
  40,
  44,
  46,
  48,
  49,
  55,
  57,
  58,
  59,
  60,
  64,
  65,
  66,
  68,
  69,
  71,
  72,
  75,
  78,
  80,
  83,
  88,
  91,
  92,
  93,
  96,
  98,
  99,
  101,
  105,
  109,
  110,
  113,
  114,
  116,
  118,
  120
 ],
 "expected": "pass",
 "graph": {
  "n": 63,
  "type": "cycle"
 },
 "group_order": 127,
 "id": "singer-C63-127-seed",
 "kind": "graceful_labeling",
 "labels": [
  1,
  3,
  9,
  101,
  91,
  5,
  83,
  113,
  11,
  2,
  6,
  18,
  75,
  55,
  10,
  39,
  99,
  22,
  4,
  12,
  36,
  23,
  110,
  20,
  78,
  71,
  44,
  8,
  24,
  72,
  46,
  93,
  40,
  29,
  15,
  88,
  16,
  48,
  17,
  92,
  59,
  80,
  58,
  30,
  49,
  32,
  96,
  34,
  57,
  118,
  33,
  116,
  60,
  98,
  64,
  65,
  68,
  114,
  109,
  66,
  105,
  120,
  69
 ],
 "lambda": 1,
 "provenance": "63-cycle from a 9-vertex doubling seed, labeled by a (127,63,31) difference set",
 "seed_check": {
  "multiplier": 2,
  "segments": [
   [
    0,
    63
   ]
  ],
  "stride": 9
 }
})qdcat"},
  {"singer-C7-15", R"qdcat({
 "D": [
  0,
  1,
  2,
  4,
  5,
  8,
  10
 ],
 "expected": "pass",
 "graph": {
  "n": 7,
  "type": "cycle"
 },
 "group_order": 15,
 "id": "singer-C7-15",
 "kind": "graceful_labeling",
 "labels": [
  10,
  4,
  8,
  1,
  0,
  2,
  5
 ],
 "lambda": 1,
 "provenance": "7-cycle gracefully labeled by a (15,7,3) hyperplane difference set"
})qdcat"},
  {"steiner-13-3-1-q2", R"qdcat({
 "blocks": [
  [
   0,
   1,
   1249,
   7258,
   8105,
   5040,
   7978
  ],
  [
   0,
   7,
   1857,
   6681,
   7259,
   7381,
   7908
  ],
  [
   0,
   9,
   1144,
   7714,
   1945,
   8102,
   6771
  ],
  [
   0,
   11,
   209,
   1941,
   3565,
   6579,
   2926
  ],
  [
   0,
   12,
   2181,
   3696,
   6673,
   6965,
   2519
  ],
  [
   0,
   13,
   4821,
   8110,
   8052,
   5178,
   7823
  ],
  [
   0,
   17,
   291,
   5132,
   1199,
   8057,
   6266
  ],
  [
   0,
   20,
   1075,
   3996,
   7313,
   4776,
   3939
  ],
  [
   0,
   21,
   2900,
   6087,
   4915,
   4226,
   8008
  ],
  [
   0,
   27,
   1190,
   3572,
   6710,
   4989,
   5199
  ],
  [
   0,
   30,
   141,
   682,
   6256,
   6406,
   2024
  ],
  [
   0,
   31,
   814,
   1243,
   4434,
   1161,
   6254
  ],
  [
   0,
   37,
   258,
   5396,
   6469,
   2093,
   4703
  ],
  [
   0,
   115,
   949,
   1272,
   4539,
   4873,
   1580
  ],
  [
   0,
   119,
   490,
   6670,
   6812,
   7312,
   5941
  ]
 ],
 "expected": "pass",
 "field": {
  "e": 1,
  "modulus": [
   0,
   -1,
   -1,
   -1,
   -1,
   -1,
   -1,
   -1,
   -1,
   0,
   0,
   -1,
   0,
   0
  ],
  "p": 2,
  "v": 13
 },
 "generators": [
  [
   1,
   1249
  ],
  [
   7,
   1857
  ],
  [
   9,
   1144
  ],
  [
   11,
   209
  ],
  [
   12,
   2181
  ],
  [
   13,
   4821
  ],
  [
   17,
   291
  ],
  [
   20,
   1075
  ],
  [
   21,
   2900
  ],
  [
   27,
   1190
  ],
  [
   30,
   141
  ],
  [
   31,
   814
  ],
  [
   37,
   258
  ],
  [
   115,
   949
  ],
  [
   119,
   490
  ]
 ],
 "graph": {
  "n": 7,
  "type": "complete"
 },
 "id": "steiner-13-3-1-q2",
 "kind": "initial_blocks",
 "lambda": 1,
 "log_check": {
  "r": 17
 },
 "provenance": "fifteen plane initial blocks over GF(2^13) generating a triple system",
 "subgroup": [],
 "subspace_required": true
})qdcat"},
};

}  // namespace qdesign
