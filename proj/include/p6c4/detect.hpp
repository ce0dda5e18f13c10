#pragma once

#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "p6c4/bases.hpp"
#include "p6c4/graph.hpp"

// Forbidden-induced-subgraph detectors, chordality, simplicial vertices,
// clique cutsets, universal vertices.  All "find first" searches break ties
// lexicographically so witnesses are reproducible.

namespace p6c4 {

enum class WitnessKind { P4, P6, C4, C5, C6, F1, F2, F3, HOLE, TWO_P3, DART };

inline std::string witness_kind_str(WitnessKind k) {
  switch (k) {
    case WitnessKind::P4: return "P4";
    case WitnessKind::P6: return "P6";
    case WitnessKind::C4: return "C4";
    case WitnessKind::C5: return "C5";
    case WitnessKind::C6: return "C6";
    case WitnessKind::F1: return "F1";
    case WitnessKind::F2: return "F2";
    case WitnessKind::F3: return "F3";
    case WitnessKind::HOLE: return "hole";
    case WitnessKind::TWO_P3: return "2P3";
    case WitnessKind::DART: return "dart";
  }
  return "?";
}

// vertices are in pattern order (path/cycle order, or base-graph labeling),
// not sorted.
struct Witness {
  WitnessKind kind;
  std::vector<int> vertices;
};

inline Graph pattern_2p3() {
  return Graph::build(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}},
                      {"p1", "p2", "p3", "q1", "q2", "q3"});
}

inline Graph witness_pattern(WitnessKind k) {
  switch (k) {
    case WitnessKind::P4: return path_graph(4);
    case WitnessKind::P6: return path_graph(6);
    case WitnessKind::C4: return cycle_graph(4);
    case WitnessKind::C5: return base_c5();
    case WitnessKind::C6: return base_c6();
    case WitnessKind::F1: return base_f1();
    case WitnessKind::F2: return base_f2();
    case WitnessKind::F3: return base_f3();
    case WitnessKind::TWO_P3: return pattern_2p3();
    case WitnessKind::DART: return base_dart();
    case WitnessKind::HOLE: throw graph_error("hole has no fixed pattern");
  }
  throw graph_error("unknown witness kind");
}

// Re-check a witness against its pattern (holes: chordless cycle >= 4).
inline bool witness_valid(const Graph& g, const Witness& w) {
  const auto& vs = w.vertices;
  for (int v : vs)
    if (v < 0 || v >= g.n()) return false;
  VertexSet uniq = vs_sorted(VertexSet(vs.begin(), vs.end()));
  if (uniq.size() != vs.size()) return false;
  if (w.kind == WitnessKind::HOLE) {
    int k = static_cast<int>(vs.size());
    if (k < 4) return false;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        bool ring = (j == i + 1) || (i == 0 && j == k - 1);
        if (g.has_edge(vs[i], vs[j]) != ring) return false;
      }
    return true;
  }
  Graph pat = witness_pattern(w.kind);
  if (static_cast<int>(vs.size()) != pat.n()) return false;
  for (int i = 0; i < pat.n(); ++i)
    for (int j = i + 1; j < pat.n(); ++j)
      if (g.has_edge(vs[i], vs[j]) != pat.has_edge(i, j)) return false;
  return true;
}

// ---- induced paths and cycles ----

namespace detail {

inline bool path_dfs(const Graph& g, int k, std::vector<int>& path, std::vector<char>& used) {
  if (static_cast<int>(path.size()) == k) return true;
  int last = path.back();
  for (int w = 0; w < g.n(); ++w) {
    if (used[w] || !g.has_edge(last, w)) continue;
    bool induced = true;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (g.has_edge(path[i], w)) {
        induced = false;
        break;
      }
    if (!induced) continue;
    path.push_back(w);
    used[w] = 1;
    if (path_dfs(g, k, path, used)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

inline bool cycle_dfs(const Graph& g, int k, std::vector<int>& path, std::vector<char>& used) {
  int len = static_cast<int>(path.size());
  if (len == k) {
    return g.has_edge(path.back(), path[0]) && path[1] < path.back();
  }
  int last = path.back();
  for (int w = path[0] + 1; w < g.n(); ++w) {  // path[0] stays the minimum
    if (used[w] || !g.has_edge(last, w)) continue;
    bool ok = true;
    for (int i = (len == k - 1) ? 1 : 0; i + 1 < len; ++i)
      if (g.has_edge(path[i], w)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    path.push_back(w);
    used[w] = 1;
    if (cycle_dfs(g, k, path, used)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

}  // namespace detail

inline std::optional<Witness> find_induced_path(const Graph& g, int k) {
  if (k < 1) throw graph_error("path length must be at least 1");
  if (k > g.n()) return std::nullopt;
  if (k == 1) return g.n() ? std::optional<Witness>({WitnessKind::P6, {0}}) : std::nullopt;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> path = {s};
    std::vector<char> used(g.n(), 0);
    used[s] = 1;
    if (detail::path_dfs(g, k, path, used)) {
      WitnessKind kind = k == 4 ? WitnessKind::P4 : WitnessKind::P6;
      return Witness{kind, path};
    }
  }
  return std::nullopt;
}

inline std::optional<Witness> find_induced_cycle(const Graph& g, int k) {
  if (k < 3) throw graph_error("cycle length must be at least 3");
  if (k > g.n()) return std::nullopt;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> path = {s};
    std::vector<char> used(g.n(), 0);
    used[s] = 1;
    if (detail::cycle_dfs(g, k, path, used)) {
      WitnessKind kind = k == 4   ? WitnessKind::C4
                         : k == 5 ? WitnessKind::C5
                         : k == 6 ? WitnessKind::C6
                                  : WitnessKind::HOLE;
      return Witness{kind, path};
    }
  }
  return std::nullopt;
}

// ---- fixed-pattern search (F1, F2, F3, 2P3, dart) ----

namespace detail {

inline bool pattern_dfs(const Graph& g, const Graph& pat, std::vector<int>& map,
                        std::vector<char>& used) {
  int i = static_cast<int>(map.size());
  if (i == pat.n()) return true;
  for (int v = 0; v < g.n(); ++v) {
    if (used[v] || g.degree(v) < pat.degree(i)) continue;
    bool ok = true;
    for (int j = 0; j < i; ++j)
      if (g.has_edge(map[j], v) != pat.has_edge(j, i)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map.push_back(v);
    used[v] = 1;
    if (pattern_dfs(g, pat, map, used)) return true;
    map.pop_back();
    used[v] = 0;
  }
  return false;
}

}  // namespace detail

inline std::optional<Witness> find_special(const Graph& g, WitnessKind which) {
  Graph pat = witness_pattern(which);
  if (pat.n() > g.n()) return std::nullopt;
  std::vector<int> map;
  std::vector<char> used(g.n(), 0);
  if (detail::pattern_dfs(g, pat, map, used)) return Witness{which, map};
  return std::nullopt;
}

inline bool contains_induced(const Graph& g, WitnessKind which) {
  return find_special(g, which).has_value();
}

// ---- membership in the class ----

struct P6C4Verdict {
  bool free = false;
  std::optional<Witness> witness;  // C4 preferred when both exist
};

inline std::optional<Witness> find_c4(const Graph& g) {
  // two non-adjacent vertices with two non-adjacent common neighbors
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v)) continue;
      VertexSet common = vs_inter(g.neighbors(u), g.neighbors(v));
      for (size_t i = 0; i < common.size(); ++i)
        for (size_t j = i + 1; j < common.size(); ++j)
          if (!g.has_edge(common[i], common[j]))
            return Witness{WitnessKind::C4, {u, common[i], v, common[j]}};
    }
  return std::nullopt;
}

inline P6C4Verdict is_p6c4_free(const Graph& g) {
  P6C4Verdict r;
  if (auto c4 = find_c4(g)) {
    r.witness = c4;
    return r;
  }
  if (auto p6 = find_induced_path(g, 6)) {
    r.witness = p6;
    return r;
  }
  r.free = true;
  return r;
}

// ---- chordality ----

struct EliminationOrder {
  std::vector<int> order;  // order[0] eliminated first; later neighbors form cliques
};

struct ChordalityResult {
  std::optional<EliminationOrder> peo;
  std::optional<Witness> hole;
  bool chordal() const { return peo.has_value(); }
};

// Some hole, via a non-adjacent neighbor pair x,y of a vertex v: a shortest
// x-y path avoiding the rest of N[v] closes a chordless cycle through v.
inline std::optional<Witness> find_hole(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int x = nb[i], y = nb[j];
        if (g.has_edge(x, y)) continue;
        std::vector<int> prev(g.n(), -2);
        for (int w : g.neighbors(v)) prev[w] = -3;  // blocked
        prev[v] = -3;
        prev[x] = -1;
        std::queue<int> q;
        q.push(x);
        bool reached = false;
        while (!q.empty() && !reached) {
          int a = q.front();
          q.pop();
          for (int b : g.neighbors(a)) {
            if (b == y) {
              prev[y] = a;
              reached = true;
              break;
            }
            if (prev[b] == -2) {
              prev[b] = a;
              q.push(b);
            }
          }
        }
        if (!reached) continue;
        std::vector<int> cyc = {v};
        std::vector<int> tail;
        for (int a = y; a != -1; a = prev[a]) tail.push_back(a);
        // tail is y..x; append x..y after v
        for (auto it = tail.rbegin(); it != tail.rend(); ++it) cyc.push_back(*it);
        return Witness{WitnessKind::HOLE, cyc};
      }
  }
  return std::nullopt;
}

inline ChordalityResult chordality(const Graph& g) {
  ChordalityResult res;
  int n = g.n();
  // maximum cardinality search, then verify the reverse visit order
  std::vector<int> weight(n, 0), visit;
  std::vector<char> numbered(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    numbered[pick] = 1;
    visit.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!numbered[w]) ++weight[w];
  }
  std::vector<int> order(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  bool ok = true;
  for (int i = 0; i < n && ok; ++i) {
    VertexSet later;
    for (int w : g.neighbors(order[i]))
      if (pos[w] > i) later.push_back(w);
    if (!is_clique(g, later)) ok = false;
  }
  if (ok) {
    res.peo = EliminationOrder{order};
    return res;
  }
  res.hole = find_hole(g);
  if (!res.hole) throw graph_error("elimination order failed but no hole found");
  return res;
}

inline bool is_chordal(const Graph& g) { return chordality(g).chordal(); }

// ---- simplicial / universal vertices ----

inline bool is_simplicial(const Graph& g, int v) {
  return is_clique(g, g.neighbors(v));
}

inline VertexSet simplicial_vertices(const Graph& g) {
  VertexSet s;
  for (int v = 0; v < g.n(); ++v)
    if (is_simplicial(g, v)) s.push_back(v);
  return s;
}

inline bool is_universal(const Graph& g, int v) { return g.degree(v) == g.n() - 1; }

inline VertexSet universal_vertices(const Graph& g) {
  VertexSet s;
  for (int v = 0; v < g.n(); ++v)
    if (is_universal(g, v)) s.push_back(v);
  return s;
}

// ---- clique cutsets ----

struct CliqueCutset {
  VertexSet clique;
  VertexSet side_a;  // component of G minus clique containing the pivot
  VertexSet side_b;  // everything else
};

namespace detail {

// Minimal triangulation by MCS-M: returns elimination order (first eliminated
// first) and the fill-extended neighbor lists.
struct McsM {
  std::vector<int> order;
  std::vector<VertexSet> fill_adj;
};

inline McsM mcs_m(const Graph& g) {
  int n = g.n();
  McsM res;
  res.fill_adj.resize(n);
  for (int v = 0; v < n; ++v) res.fill_adj[v] = g.neighbors(v);
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<int> visit;  // last eliminated first
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (!numbered[u] && (v < 0 || weight[u] > weight[v])) v = u;
    // reachable u: some path v..u through unnumbered internals of weight < w(u);
    // minimise the maximum internal weight with a Dijkstra-style sweep
    const int INF = 1 << 30;
    std::vector<int> cost(n, INF);
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> pq;
    for (int w : g.neighbors(v))
      if (!numbered[w]) {
        cost[w] = -1;
        pq.push({-1, w});
      }
    while (!pq.empty()) {
      auto [c, u] = pq.top();
      pq.pop();
      if (c != cost[u]) continue;
      int through = std::max(c, weight[u]);
      for (int w : g.neighbors(u))
        if (!numbered[w] && w != v && through < cost[w]) {
          cost[w] = through;
          pq.push({through, w});
        }
    }
    for (int u = 0; u < n; ++u) {
      if (numbered[u] || u == v || cost[u] == INF) continue;
      if (cost[u] < weight[u] || cost[u] == -1) {
        ++weight[u];
        if (!g.has_edge(u, v)) {
          res.fill_adj[u] = vs_union(res.fill_adj[u], {v});
          res.fill_adj[v] = vs_union(res.fill_adj[v], {u});
        }
      }
    }
    numbered[v] = 1;
    visit.push_back(v);
  }
  res.order.assign(visit.rbegin(), visit.rend());
  return res;
}

}  // namespace detail

// Clique-separator search: candidate separators are the higher neighborhoods
// in a minimal triangulation; each candidate that is a clique of G and
// disconnects G is a clique cutset, and if none works there is none.
inline std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
  if (g.n() <= 1) return std::nullopt;
  if (!is_connected(g)) throw graph_error("clique cutset search needs a connected graph");
  detail::McsM tri = detail::mcs_m(g);
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[tri.order[i]] = i;
  for (int i = 0; i < g.n() - 1; ++i) {
    int v = tri.order[i];
    VertexSet sep;
    for (int w : tri.fill_adj[v])
      if (pos[w] > i) sep.push_back(w);
    if (static_cast<int>(sep.size()) >= g.n() - 1) continue;
    if (!is_clique(g, sep)) continue;
    {
      auto rest0 = induced_subgraph(g, vs_diff(all_vertices(g), sep));
      if (components(rest0.graph).size() < 2) continue;
    }
    // shrink to a minimal disconnecting subset (drop vertices one at a time)
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (size_t d = 0; d < sep.size() && !shrunk; ++d) {
        VertexSet smaller = sep;
        smaller.erase(smaller.begin() + static_cast<long>(d));
        auto sub = induced_subgraph(g, vs_diff(all_vertices(g), smaller));
        if (components(sub.graph).size() >= 2) {
          sep = smaller;
          shrunk = true;
        }
      }
    }
    auto rest = induced_subgraph(g, vs_diff(all_vertices(g), sep));
    auto comps = components(rest.graph);
    CliqueCutset cut;
    cut.clique = sep;
    int vsub = rest.to_sub[v];
    for (const auto& comp : comps) {
      VertexSet host;
      for (int u : comp) host.push_back(rest.to_host[u]);
      host = vs_sorted(host);
      if (vs_contains(comp, vsub))
        cut.side_a = host;
      else
        cut.side_b = vs_union(cut.side_b, host);
    }
    return cut;
  }
  return std::nullopt;
}

// ---- maximal clique enumeration (Bron-Kerbosch with pivoting) ----
// Fine at this scale: the square-free inputs the engine sees have few
// maximal cliques.

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // pivot: vertex of P ∪ X with most neighbors in P
  int pivot = -1, best = -1;
  for (int u : vs_union(p, x)) {
    int cnt = static_cast<int>(nbhd_in(g, u, p).size());
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  VertexSet cand = pivot < 0 ? p : vs_diff(p, g.neighbors(pivot));
  for (int v : cand) {
    r.push_back(v);
    bron_kerbosch(g, r, nbhd_in(g, v, p), nbhd_in(g, v, x), out);
    r.pop_back();
    p = vs_diff(p, {v});
    x = vs_union(x, {v});
  }
}

}  // namespace detail

inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet r;
  detail::bron_kerbosch(g, r, all_vertices(g), {}, out);
  for (auto& k : out) k = vs_sorted(k);
  std::sort(out.begin(), out.end());
  return out;
}

// Clique number via the enumeration; callers that need an independent value
// use the oracle instead.
inline int clique_number(const Graph& g) {
  if (g.n() == 0) return 0;
  size_t best = 0;
  for (const auto& k : maximal_cliques(g)) best = std::max(best, k.size());
  return static_cast<int>(best);
}

}  // namespace p6c4
