#pragma once

#include <string>
#include <vector>

#include "p6c4/graph.hpp"

// The fixed graphs the structure theory is phrased in.  Vertex order and
// labels are canonical here and everywhere else (certificates, witnesses).

namespace p6c4 {

inline Graph base_p3() {
  return Graph::build(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
}

// dart: triangle a-b-c plus d adjacent to a,c and pendant e on c.
inline Graph base_dart() {
  return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {2, 4}},
                      {"a", "b", "c", "d", "e"});
}

inline Graph base_c5() {
  return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
                      {"v1", "v2", "v3", "v4", "v5"});
}

inline Graph base_c6() {
  return Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}},
                      {"v1", "v2", "v3", "v4", "v5", "v6"});
}

// F1: C5 v1..v5, x on {v1,v2}, y on {v2,v3}, z on {v3,v4}, path x-y-z.
inline Graph base_f1() {
  return Graph::build(8,
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                       {5, 0}, {5, 1}, {6, 1}, {6, 2}, {7, 2}, {7, 3},
                       {5, 6}, {6, 7}},
                      {"v1", "v2", "v3", "v4", "v5", "x", "y", "z"});
}

// F2: C5 v1..v5, t on {v4,v5,v1}, x on {v1,v2}, y on {v3,v4}, edges tx, ty.
inline Graph base_f2() {
  return Graph::build(8,
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                       {5, 3}, {5, 4}, {5, 0},
                       {6, 0}, {6, 1}, {7, 2}, {7, 3},
                       {5, 6}, {5, 7}},
                      {"v1", "v2", "v3", "v4", "v5", "t", "x", "y"});
}

// F3: C6 v1..v6, x on {v1,v2,v3}, y on {v3,v4,v5}, z on {v5,v6,v1},
// triangle x-y-z.
inline Graph base_f3() {
  return Graph::build(9,
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                       {6, 0}, {6, 1}, {6, 2},
                       {7, 2}, {7, 3}, {7, 4},
                       {8, 4}, {8, 5}, {8, 0},
                       {6, 7}, {7, 8}, {8, 6}},
                      {"v1", "v2", "v3", "v4", "v5", "v6", "x", "y", "z"});
}

// H1 is the Petersen graph, drawn as hexagon w1..w6 with long diagonals
// split by a,b,c and a center z adjacent to a,b,c.
inline Graph base_h1() {
  return Graph::build(10,
                      {{0, 1}, {0, 2}, {0, 3},
                       {1, 4}, {1, 7}, {2, 5}, {2, 8}, {3, 6}, {3, 9},
                       {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 4}},
                      {"z", "a", "b", "c", "w1", "w2", "w3", "w4", "w5", "w6"});
}

inline Graph base_petersen() { return base_h1(); }

// H2: C6 v1..v6, a on {v6,v1,v2,v3}, b on {v3,v4,v5,v6}, c on {v3,v6},
// triangle a-b-c.
inline Graph base_h2() {
  return Graph::build(9,
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                       {6, 5}, {6, 0}, {6, 1}, {6, 2},
                       {7, 2}, {7, 3}, {7, 4}, {7, 5},
                       {8, 2}, {8, 5},
                       {6, 7}, {6, 8}, {7, 8}},
                      {"v1", "v2", "v3", "v4", "v5", "v6", "a", "b", "c"});
}

// H3: the square of C9 (chords between vertices at distance two).
inline Graph base_h3() {
  std::vector<Edge> es;
  for (int i = 0; i < 9; ++i) {
    es.emplace_back(i, (i + 1) % 9);
    es.emplace_back(i, (i + 2) % 9);
  }
  std::vector<std::string> lab;
  for (int i = 1; i <= 9; ++i) lab.push_back("v" + std::to_string(i));
  return Graph::build(9, es, lab);
}

// H4: C6 v1..v6, b1 on {v6,v1,v2,v3}, b2 on {v1,v2,v3,v4},
// b3 on {v2,v3,v4,v5}, path b1-b2-b3.
inline Graph base_h4() {
  return Graph::build(9,
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                       {6, 5}, {6, 0}, {6, 1}, {6, 2},
                       {7, 0}, {7, 1}, {7, 2}, {7, 3},
                       {8, 1}, {8, 2}, {8, 3}, {8, 4},
                       {6, 7}, {7, 8}},
                      {"v1", "v2", "v3", "v4", "v5", "v6", "b1", "b2", "b3"});
}

// H5: C5 v1..v5 plus pairwise non-adjacent tabs t1..t5, tab ti on
// {v(i-1), vi, v(i+1)}.
inline Graph base_h5() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) es.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(5 + i, (i + 4) % 5);
    es.emplace_back(5 + i, i);
    es.emplace_back(5 + i, (i + 1) % 5);
  }
  return Graph::build(10, es,
                      {"v1", "v2", "v3", "v4", "v5", "t1", "t2", "t3", "t4", "t5"});
}

// F_{k,l}: clique A = a0..ak matched to stable U = u1..uk, clique
// B = b0..bl matched to stable W = w1..wl, plus x (sees A,U,W,y),
// y (sees B,U,W,x) and z (sees A,B).  F_{0,0} is C5.
struct FklLayout {
  int k = 0, l = 0;
  VertexSet A, U, B, W;
  int x = -1, y = -1, z = -1;
};

inline FklLayout fkl_layout(int k, int l) {
  if (k < 0 || l < 0) throw graph_error("F_{k,l} needs k,l >= 0");
  FklLayout lo;
  lo.k = k;
  lo.l = l;
  int id = 0;
  for (int i = 0; i <= k; ++i) lo.A.push_back(id++);
  for (int i = 1; i <= k; ++i) lo.U.push_back(id++);
  for (int j = 0; j <= l; ++j) lo.B.push_back(id++);
  for (int j = 1; j <= l; ++j) lo.W.push_back(id++);
  lo.x = id++;
  lo.y = id++;
  lo.z = id++;
  return lo;
}

inline Graph base_fkl(int k, int l) {
  FklLayout lo = fkl_layout(k, l);
  std::vector<Edge> es;
  auto add_clique = [&](const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j) es.emplace_back(s[i], s[j]);
  };
  add_clique(lo.A);
  add_clique(lo.B);
  for (int i = 1; i <= k; ++i) es.emplace_back(lo.A[i], lo.U[i - 1]);
  for (int j = 1; j <= l; ++j) es.emplace_back(lo.B[j], lo.W[j - 1]);
  for (int v : lo.A) es.emplace_back(lo.x, v);
  for (int v : lo.U) es.emplace_back(lo.x, v);
  for (int v : lo.W) es.emplace_back(lo.x, v);
  es.emplace_back(lo.x, lo.y);
  for (int v : lo.B) es.emplace_back(lo.y, v);
  for (int v : lo.U) es.emplace_back(lo.y, v);
  for (int v : lo.W) es.emplace_back(lo.y, v);
  for (int v : lo.A) es.emplace_back(lo.z, v);
  for (int v : lo.B) es.emplace_back(lo.z, v);
  std::vector<std::string> lab(lo.z + 1);
  for (int i = 0; i <= k; ++i) lab[lo.A[i]] = "a" + std::to_string(i);
  for (int i = 1; i <= k; ++i) lab[lo.U[i - 1]] = "u" + std::to_string(i);
  for (int j = 0; j <= l; ++j) lab[lo.B[j]] = "b" + std::to_string(j);
  for (int j = 1; j <= l; ++j) lab[lo.W[j - 1]] = "w" + std::to_string(j);
  lab[lo.x] = "x";
  lab[lo.y] = "y";
  lab[lo.z] = "z";
  return Graph::build(lo.z + 1, es, lab);
}

enum class BaseName { P3, DART, C5, C6, H1, H2, H3, H4, H5, F1, F2, F3, FKL };

inline std::string base_name_str(BaseName b) {
  switch (b) {
    case BaseName::P3: return "P3";
    case BaseName::DART: return "dart";
    case BaseName::C5: return "C5";
    case BaseName::C6: return "C6";
    case BaseName::H1: return "H1";
    case BaseName::H2: return "H2";
    case BaseName::H3: return "H3";
    case BaseName::H4: return "H4";
    case BaseName::H5: return "H5";
    case BaseName::F1: return "F1";
    case BaseName::F2: return "F2";
    case BaseName::F3: return "F3";
    case BaseName::FKL: return "Fkl";
  }
  return "?";
}

inline Graph base_graph(BaseName b) {
  switch (b) {
    case BaseName::P3: return base_p3();
    case BaseName::DART: return base_dart();
    case BaseName::C5: return base_c5();
    case BaseName::C6: return base_c6();
    case BaseName::H1: return base_h1();
    case BaseName::H2: return base_h2();
    case BaseName::H3: return base_h3();
    case BaseName::H4: return base_h4();
    case BaseName::H5: return base_h5();
    case BaseName::F1: return base_f1();
    case BaseName::F2: return base_f2();
    case BaseName::F3: return base_f3();
    case BaseName::FKL: throw graph_error("F_{k,l} needs parameters");
  }
  throw graph_error("unknown base graph");
}

}  // namespace p6c4
