#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p6c4 {

struct graph_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

using Edge = std::pair<int, int>;

// Simple undirected graph, immutable after build().  Vertex ids are dense
// 0..n-1.  Adjacency is kept twice: sorted neighbor lists (for ordered
// iteration) and packed bit rows (for O(1) edge tests and fast set algebra).
class Graph {
public:
  Graph() = default;

  static Graph build(int n, const std::vector<Edge>& edges,
                     std::vector<std::string> labels = {}) {
    if (n < 0) throw graph_error("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.adj_.assign(n, {});
    g.bits_.assign(static_cast<size_t>(n) * g.words_, 0);
    for (size_t idx = 0; idx < edges.size(); ++idx) {
      auto [u, v] = edges[idx];
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw graph_error("edge " + std::to_string(idx) + " endpoint out of range");
      if (u == v)
        throw graph_error("edge " + std::to_string(idx) + " is a self-loop");
      if (!g.test_bit(u, v)) {
        g.set_bit(u, v);
        g.set_bit(v, u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
      }
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    if (!labels.empty()) {
      if (static_cast<int>(labels.size()) != n)
        throw graph_error("label count does not match vertex count");
      g.labels_ = std::move(labels);
    }
    return g;
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return u != v && test_bit(u, v);
  }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  std::vector<Edge> edge_list() const {
    std::vector<Edge> es;
    es.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) es.emplace_back(u, v);
    return es;
  }

  // Packed adjacency row of v: words() u64 words.
  const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
  int words() const { return words_; }

private:
  bool test_bit(int u, int v) const {
    return bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64) & 1;
  }
  void set_bit(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
  }

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<uint64_t> bits_;
  std::vector<std::string> labels_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges,
                         std::vector<std::string> labels = {}) {
  return Graph::build(n, edges, std::move(labels));
}

// ---- VertexSet algebra (inputs and outputs sorted & unique) ----

inline VertexSet vs_sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool vs_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline VertexSet vs_inter(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline VertexSet vs_diff(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline bool vs_disjoint(const VertexSet& a, const VertexSet& b) {
  return vs_inter(a, b).empty();
}

inline bool vs_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet all_vertices(const Graph& g) {
  VertexSet s(g.n());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

inline VertexSet open_nbhd(const Graph& g, int v) { return g.neighbors(v); }

inline VertexSet closed_nbhd(const Graph& g, int v) {
  return vs_union(g.neighbors(v), {v});
}

inline VertexSet nbhd_in(const Graph& g, int v, const VertexSet& s) {
  return vs_inter(g.neighbors(v), s);
}

// ---- elementary predicates ----

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

inline bool is_stable(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

inline bool complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int u : a)
    for (int v : b)
      if (u != v && !g.has_edge(u, v)) return false;
  return true;
}

inline bool anticomplete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int u : a)
    for (int v : b)
      if (g.has_edge(u, v)) return false;
  return true;
}

// Does `bags` (one set per vertex of h, empties allowed) exhibit g as a
// blowup of h?  Bags must partition V(g), each bag a clique, and cross pairs
// complete exactly over the edges of h.
inline bool is_blowup_of(const Graph& g, const Graph& h,
                         const std::vector<VertexSet>& bags) {
  if (static_cast<int>(bags.size()) != h.n()) return false;
  std::vector<int> owner(g.n(), -1);
  for (size_t i = 0; i < bags.size(); ++i)
    for (int v : bags[i]) {
      if (v < 0 || v >= g.n() || owner[v] != -1) return false;
      owner[v] = static_cast<int>(i);
    }
  for (int v = 0; v < g.n(); ++v)
    if (owner[v] == -1) return false;
  for (size_t i = 0; i < bags.size(); ++i) {
    if (!is_clique(g, bags[i])) return false;
    for (size_t j = i + 1; j < bags.size(); ++j) {
      bool want = h.has_edge(static_cast<int>(i), static_cast<int>(j));
      bool fits = want ? complete_between(g, bags[i], bags[j])
                       : anticomplete_between(g, bags[i], bags[j]);
      if (!fits) return false;
    }
  }
  return true;
}

// ---- induced subgraphs and components ----

struct InducedSubgraph {
  Graph graph;
  // sub id -> host id; host id -> sub id (-1 outside s).
  std::vector<int> to_host;
  std::vector<int> to_sub;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s_in) {
  VertexSet s = vs_sorted(s_in);
  for (int v : s)
    if (v < 0 || v >= g.n()) throw graph_error("induced subgraph: vertex out of range");
  InducedSubgraph r;
  r.to_host = s;
  r.to_sub.assign(g.n(), -1);
  for (size_t i = 0; i < s.size(); ++i) r.to_sub[s[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  std::vector<std::string> labels;
  if (g.has_labels())
    for (int v : s) labels.push_back(g.label(v));
  for (int v : s)
    for (int w : g.neighbors(v))
      if (v < w && r.to_sub[w] >= 0) es.emplace_back(r.to_sub[v], r.to_sub[w]);
  r.graph = Graph::build(static_cast<int>(s.size()), es, std::move(labels));
  return r;
}

// Connected components, ordered by smallest member; each set sorted.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    comps.push_back(vs_sorted(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

struct DegreeStats {
  int max_degree = 0;
  std::vector<int> degrees;
};

inline DegreeStats degree_stats(const Graph& g) {
  if (g.n() == 0) throw graph_error("degree stats undefined for the empty graph");
  DegreeStats st;
  st.degrees.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    st.degrees[v] = g.degree(v);
    st.max_degree = std::max(st.max_degree, st.degrees[v]);
  }
  return st;
}

// ---- colorings ----

struct Coloring {
  std::vector<int> assignment;  // vertex -> color, 0-based
  int num_colors = 0;
};

// ---- elementary families ----

inline Graph path_graph(int k) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
  return Graph::build(k, es);
}

inline Graph cycle_graph(int k) {
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  return Graph::build(k, es);
}

inline Graph complete_graph(int k) {
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
  return Graph::build(k, es);
}

inline Coloring make_coloring(std::vector<int> assignment) {
  Coloring c;
  c.assignment = std::move(assignment);
  int mx = -1;
  for (int x : c.assignment) {
    if (x < 0) throw graph_error("coloring has an uncolored vertex");
    mx = std::max(mx, x);
  }
  std::vector<char> used(mx + 1, 0);
  for (int x : c.assignment) used[x] = 1;
  c.num_colors = static_cast<int>(std::count(used.begin(), used.end(), 1));
  return c;
}

}  // namespace p6c4
