#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "p6c4/graph.hpp"

// Exact brute-force references: maximum clique, chromatic number, coloring
// verification, subset-enumeration pattern search, clique-cutset existence.
// Everything here is deliberately simple and self-contained so it can serve
// as ground truth for the algorithmic modules.

namespace p6c4 {

struct OracleResult {
  int value = 0;
  VertexSet clique;       // witness for exact_clique
  Coloring coloring;      // witness for exact_chromatic
  long long nodes = 0;    // search nodes explored
};

struct OracleCaps {
  int chi_cap = 30;
  int omega_cap = 60;
};

// Caps are advisory configuration consulted by callers (CLI, fallback layer),
// overridable via environment.
inline OracleCaps oracle_caps() {
  OracleCaps caps;
  if (const char* s = std::getenv("P6C4_CHI_CAP")) caps.chi_cap = std::atoi(s);
  if (const char* s = std::getenv("P6C4_OMEGA_CAP")) caps.omega_cap = std::atoi(s);
  return caps;
}

// ---- maximum clique: branch and bound with a greedy-coloring bound ----

namespace detail {

struct CliqueSearch {
  const Graph& g;
  VertexSet best;
  long long nodes = 0;

  explicit CliqueSearch(const Graph& gr) : g(gr) {}

  // Greedy-color candidates in order; color[i] is an upper bound on the
  // clique size within P[i..end] ∩ ... (classic bound).
  void expand(VertexSet& r, std::vector<int>& p) {
    ++nodes;
    if (p.empty()) {
      if (r.size() > best.size()) best = r;
      return;
    }
    std::vector<int> color(p.size());
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < p.size(); ++i) {
      int v = p[i];
      size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (int u : classes[c])
          if (g.has_edge(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
      color[i] = static_cast<int>(c) + 1;
    }
    // process candidates by decreasing color
    std::vector<size_t> order(p.size());
    for (size_t i = 0; i < p.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return color[a] < color[b]; });
    std::vector<char> removed(p.size(), 0);
    for (size_t oi = order.size(); oi-- > 0;) {
      size_t i = order[oi];
      int v = p[i];
      if (r.size() + color[i] <= best.size()) return;
      r.push_back(v);
      std::vector<int> np;
      for (size_t j = 0; j < p.size(); ++j)
        if (!removed[j] && g.has_edge(p[j], v)) np.push_back(p[j]);
      expand(r, np);
      r.pop_back();
      removed[i] = 1;
    }
  }
};

}  // namespace detail

inline OracleResult exact_clique(const Graph& g) {
  OracleResult res;
  if (g.n() == 0) return res;
  detail::CliqueSearch cs(g);
  std::vector<int> p(g.n());
  for (int v = 0; v < g.n(); ++v) p[v] = v;
  std::stable_sort(p.begin(), p.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  VertexSet r;
  cs.expand(r, p);
  res.value = static_cast<int>(cs.best.size());
  res.clique = vs_sorted(cs.best);
  res.nodes = cs.nodes;
  return res;
}

// ---- coloring verification ----

struct ColorCheck {
  bool ok = false;
  Edge bad_edge{-1, -1};
  std::string message;
};

inline ColorCheck verify_coloring(const Graph& g, const Coloring& c) {
  ColorCheck r;
  if (static_cast<int>(c.assignment.size()) != g.n()) {
    r.message = "coloring is not total";
    return r;
  }
  for (int v = 0; v < g.n(); ++v)
    if (c.assignment[v] < 0) {
      r.message = "vertex " + std::to_string(v) + " uncolored";
      return r;
    }
  for (auto [u, v] : g.edge_list())
    if (c.assignment[u] == c.assignment[v]) {
      r.bad_edge = {u, v};
      r.message = "monochromatic edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
      return r;
    }
  r.ok = true;
  return r;
}

// ---- DSATUR heuristic (upper bound and branching seed) ----

inline Coloring dsatur_heuristic(const Graph& g) {
  int n = g.n();
  std::vector<int> color(n, -1);
  std::vector<std::vector<char>> sat(n);
  for (int v = 0; v < n; ++v) sat[v].assign(n + 1, 0);
  std::vector<int> satdeg(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (pick < 0 || satdeg[v] > satdeg[pick] ||
          (satdeg[v] == satdeg[pick] && g.degree(v) > g.degree(pick)))
        pick = v;
    }
    int c = 0;
    while (sat[pick][c]) ++c;
    color[pick] = c;
    for (int w : g.neighbors(pick))
      if (color[w] < 0 && !sat[w][c]) {
        sat[w][c] = 1;
        ++satdeg[w];
      }
  }
  return make_coloring(color);
}

// ---- exact chromatic number ----

namespace detail {

struct KColorSearch {
  const Graph& g;
  int k;
  std::vector<int> color;
  long long nodes = 0;
  bool found = false;

  KColorSearch(const Graph& gr, int kk) : g(gr), k(kk), color(gr.n(), -1) {}

  bool run(const VertexSet& seed_clique) {
    int used = 0;
    for (int v : seed_clique) {
      if (used >= k) return false;
      color[v] = used++;
    }
    return rec(used);
  }

  bool rec(int used) {
    ++nodes;
    // most-constrained uncolored vertex
    int pick = -1, pick_avail = k + 1;
    std::vector<char> avail;
    for (int v = 0; v < g.n(); ++v) {
      if (color[v] >= 0) continue;
      std::vector<char> a(k, 1);
      int cnt = 0;
      for (int w : g.neighbors(v))
        if (color[w] >= 0 && a[color[w]]) {
          a[color[w]] = 0;
        }
      for (int c = 0; c < k; ++c) cnt += a[c];
      if (cnt == 0) return false;
      if (cnt < pick_avail ||
          (cnt == pick_avail && pick >= 0 && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_avail = cnt;
        avail = a;
      }
    }
    if (pick < 0) return true;  // all colored
    int cap = std::min(k - 1, used);  // new colors in canonical first-use order
    for (int c = 0; c <= cap; ++c) {
      if (!avail[c]) continue;
      color[pick] = c;
      if (rec(std::max(used, c + 1))) return true;
      color[pick] = -1;
    }
    return false;
  }
};

}  // namespace detail

inline OracleResult exact_chromatic(const Graph& g) {
  OracleResult res;
  if (g.n() == 0) {
    res.coloring = Coloring{};
    return res;
  }
  OracleResult cl = exact_clique(g);
  Coloring upper = dsatur_heuristic(g);
  res.nodes = cl.nodes;
  for (int k = std::max(1, cl.value); k < upper.num_colors; ++k) {
    detail::KColorSearch ks(g, k);
    bool ok = ks.run(cl.clique);
    res.nodes += ks.nodes;
    if (ok) {
      res.value = k;
      res.coloring = make_coloring(ks.color);
      return res;
    }
  }
  res.value = upper.num_colors;
  res.coloring = upper;
  return res;
}

// Second, independent chromatic oracle: plain lexicographic enumeration with
// only the first-use canonical order as symmetry break.  For cross-validation
// at small n.
namespace detail {
inline bool enum_color(const Graph& g, int k, int v, std::vector<int>& color, int used) {
  if (v == g.n()) return true;
  int cap = std::min(k - 1, used);
  for (int c = 0; c <= cap; ++c) {
    bool ok = true;
    for (int w : g.neighbors(v))
      if (w < v && color[w] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (enum_color(g, k, v + 1, color, std::max(used, c + 1))) return true;
    color[v] = -1;
  }
  return false;
}
}  // namespace detail

inline OracleResult exact_chromatic_enumeration(const Graph& g) {
  OracleResult res;
  if (g.n() == 0) {
    res.coloring = Coloring{};
    return res;
  }
  for (int k = 1; k <= g.n(); ++k) {
    std::vector<int> color(g.n(), -1);
    if (detail::enum_color(g, k, 0, color, 0)) {
      res.value = k;
      res.coloring = make_coloring(color);
      return res;
    }
  }
  throw graph_error("unreachable: graph is n-colorable");
}

// ---- subset-enumeration pattern oracle ----

namespace detail {

inline bool iso_extend(const Graph& host, const VertexSet& sub, const Graph& pat,
                       std::vector<int>& map, std::vector<char>& used) {
  int i = static_cast<int>(map.size());
  if (i == pat.n()) return true;
  for (size_t t = 0; t < sub.size(); ++t) {
    if (used[t]) continue;
    int v = sub[t];
    bool ok = true;
    for (int j = 0; j < i; ++j)
      if (pat.has_edge(j, i) != host.has_edge(map[j], v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map.push_back(v);
    used[t] = 1;
    if (iso_extend(host, sub, pat, map, used)) return true;
    map.pop_back();
    used[t] = 0;
  }
  return false;
}

inline bool subsets_rec(const Graph& host, const Graph& pat, VertexSet& sub, int next) {
  if (static_cast<int>(sub.size()) == pat.n()) {
    std::vector<int> map;
    std::vector<char> used(sub.size(), 0);
    return iso_extend(host, sub, pat, map, used);
  }
  int need = pat.n() - static_cast<int>(sub.size());
  for (int v = next; v + need <= host.n(); ++v) {
    sub.push_back(v);
    if (subsets_rec(host, pat, sub, v + 1)) return true;
    sub.pop_back();
  }
  return false;
}

}  // namespace detail

// True iff host contains an induced subgraph isomorphic to pattern.
// Exhaustive over vertex subsets; intended for small hosts.
inline bool oracle_contains_induced(const Graph& host, const Graph& pattern) {
  if (pattern.n() > host.n()) return false;
  VertexSet sub;
  return detail::subsets_rec(host, pattern, sub, 0);
}

inline bool oracle_has_induced_path(const Graph& g, int k) {
  return oracle_contains_induced(g, path_graph(k));
}

inline bool oracle_has_induced_cycle(const Graph& g, int k) {
  return oracle_contains_induced(g, cycle_graph(k));
}

// ---- clique cutset existence by clique enumeration (small n) ----

namespace detail {
inline bool cutset_rec(const Graph& g, VertexSet& k, int next) {
  if (!k.empty()) {
    VertexSet rest = vs_diff(all_vertices(g), k);
    if (!rest.empty()) {
      auto sub = induced_subgraph(g, rest);
      if (components(sub.graph).size() >= 2) return true;
    }
  }
  for (int v = next; v < g.n(); ++v) {
    bool adj_all = true;
    for (int u : k)
      if (!g.has_edge(u, v)) {
        adj_all = false;
        break;
      }
    if (!adj_all) continue;
    k.push_back(v);
    if (cutset_rec(g, k, v + 1)) return true;
    k.pop_back();
  }
  return false;
}
}  // namespace detail

// True iff connected g has a clique whose removal disconnects it.
inline bool oracle_has_clique_cutset(const Graph& g) {
  if (g.n() == 0) return false;
  VertexSet k;
  return detail::cutset_rec(g, k, 0);
}

}  // namespace p6c4
