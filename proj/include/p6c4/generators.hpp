#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "p6c4/bases.hpp"
#include "p6c4/detect.hpp"
#include "p6c4/graph.hpp"
#include "p6c4/structure.hpp"

// Constructors for every special shape the classifier knows, plus random
// in-class instances.  Everything is driven by an explicit seed and nothing
// else, so a (spec, seed) pair pins the exact edge set.  Outputs are checked
// before they leave: the shape validators re-run on the assembled parts, and
// the forbidden-subgraph detector vets anything built from random choices.

namespace p6c4 {

// ---- blowups ----

struct BlowupResult {
  Graph graph;
  std::vector<VertexSet> bags;  // aligned with the base's vertex ids
};

namespace detail {

inline void clique_edges(int lo, int count, std::vector<Edge>& es) {
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) es.emplace_back(lo + i, lo + j);
}

inline void join_edges(int lo_a, int na, int lo_b, int nb, std::vector<Edge>& es) {
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) es.emplace_back(lo_a + i, lo_b + j);
}

}  // namespace detail

// Substitute a clique of sizes[v] fresh vertices for every vertex v of the
// base, joining two cliques completely when their base vertices are adjacent.
// Empty bags simply erase their base vertex.
inline BlowupResult gen_blowup(const Graph& base, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != base.n())
    throw graph_error("gen_blowup: one size per base vertex");
  std::vector<int> at(base.n() + 1, 0);
  for (int v = 0; v < base.n(); ++v) {
    if (sizes[v] < 0) throw graph_error("gen_blowup: negative bag size");
    at[v + 1] = at[v] + sizes[v];
  }
  std::vector<Edge> es;
  for (int v = 0; v < base.n(); ++v) detail::clique_edges(at[v], sizes[v], es);
  for (const Edge& e : base.edge_list())
    detail::join_edges(at[e.first], sizes[e.first], at[e.second], sizes[e.second], es);
  BlowupResult r;
  r.graph = Graph::build(at[base.n()], es);
  r.bags.resize(base.n());
  for (int v = 0; v < base.n(); ++v)
    for (int i = at[v]; i < at[v + 1]; ++i) r.bags[v].push_back(i);
  return r;
}

inline std::pair<Graph, BlowupMap> gen_blowup(const BlowupBase& base,
                                              const std::vector<int>& sizes) {
  BlowupResult r = gen_blowup(blowup_base_graph(base), sizes);
  BlowupMap map{base, std::move(r.bags)};
  Validation v = validate_blowup_map(r.graph, map);
  if (!v.ok()) throw graph_error("gen_blowup: " + *v.violation);
  return {std::move(r.graph), std::move(map)};
}

inline std::pair<Graph, BlowupMap> gen_fkl(int k, int l, std::vector<int> sizes = {}) {
  if (k < 0 || l < 0) throw graph_error("gen_fkl: negative parameters");
  BlowupBase base{BaseName::FKL, k, l};
  if (sizes.empty()) sizes.assign(blowup_base_graph(base).n(), 1);
  return gen_blowup(base, sizes);
}

// pentagon blowup with every bag of size q: clique number 2q, chromatic
// number ceil(5q/2), so the engine's ceil(5*omega/4) guarantee is met with
// equality — the extremal family for the whole coloring story
inline std::pair<Graph, BlowupMap> gen_tight(int q) {
  if (q < 1) throw graph_error("gen_tight: q must be positive");
  return gen_blowup(BlowupBase{BaseName::C5, 0, 0}, std::vector<int>(5, q));
}

// ---- bands ----

struct BandSizes {
  std::array<int, 5> q{1, 1, 1, 1, 1};  // q1..q5, all required non-empty
  int r2 = 0, r3 = 0;
  bool complete_pairs = false;  // force the three graded pairs complete
};

namespace detail {

// nested-prefix edges between two clique ranges: each left vertex sees a
// leading run of the right range, runs non-increasing down the left side.
// Every graded pair has this normal form, so sampling prefixes loses nothing.
inline void graded_edges(std::mt19937_64& rng, int lo_a, int na, int lo_b, int nb,
                         bool complete, std::vector<Edge>& es) {
  std::vector<int> pref(na, nb);
  if (!complete)
    for (int& p : pref) p = static_cast<int>(rng() % (nb + 1));
  std::sort(pref.rbegin(), pref.rend());
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < pref[i]; ++j) es.emplace_back(lo_a + i, lo_b + j);
}

}  // namespace detail

// Assemble a band from its seven cliques.  Only the three graded pairs leave
// any freedom; everything else is forced to be complete or anticomplete.
// The part axioms are not enough on their own: partial prefixes on both the
// q1-q2 and q3-q4 pairs can thread a six-vertex induced path along the
// q1-q2-q3-q4 spine, so the detector vets every draw and the prefixes are
// resampled until it passes.  The planted-violation hook adds one q1-q4
// edge so tests can watch the validator catch it.
inline std::pair<Graph, BandParts> gen_band(uint64_t seed, const BandSizes& sz,
                                            bool plant_violation = false,
                                            int retry_budget = 1000) {
  for (int i = 0; i < 5; ++i)
    if (sz.q[i] < 1) throw graph_error("gen_band: q parts must be non-empty");
  if (sz.r2 < 0 || sz.r3 < 0) throw graph_error("gen_band: negative part size");
  std::mt19937_64 rng(seed);
  std::string last = "no attempt made";
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    int at[8];
    at[0] = 0;
    const int counts[7] = {sz.q[0], sz.q[1], sz.q[2], sz.q[3], sz.q[4], sz.r2, sz.r3};
    for (int i = 0; i < 7; ++i) at[i + 1] = at[i] + counts[i];
    std::vector<Edge> es;
    for (int i = 0; i < 7; ++i) detail::clique_edges(at[i], counts[i], es);
    auto join = [&](int a, int b) { detail::join_edges(at[a], counts[a], at[b], counts[b], es); };
    join(4, 0), join(4, 3);              // q5 over the q1,q4 shoulders
    join(5, 0), join(5, 1), join(5, 2);  // r2 over q1+q2+q3
    join(6, 1), join(6, 2), join(6, 3);  // r3 over q2+q3+q4
    join(1, 2);                          // the q2-q3 hinge
    const int pairs[3][2] = {{0, 1}, {2, 3}, {5, 6}};
    for (auto [a, b] : pairs)
      detail::graded_edges(rng, at[a], counts[a], at[b], counts[b], sz.complete_pairs, es);
    if (plant_violation) es.emplace_back(at[0], at[3]);
    Graph g = Graph::build(at[7], es);
    BandParts p;
    for (int i = 0; i < 5; ++i)
      for (int v = at[i]; v < at[i + 1]; ++v) p.q[i].push_back(v);
    for (int v = at[5]; v < at[6]; ++v) p.r2.push_back(v);
    for (int v = at[6]; v < at[7]; ++v) p.r3.push_back(v);
    if (plant_violation) return {std::move(g), std::move(p)};
    Validation v = validate_band(g, p);
    if (!v.ok()) throw graph_error("gen_band: " + *v.violation);
    auto verdict = is_p6c4_free(g);
    if (!verdict.witness) return {std::move(g), std::move(p)};
    last = "output contains " + witness_kind_str(verdict.witness->kind);
  }
  throw graph_error("gen_band: retry budget exhausted; last violation: " + last);
}

// ---- belts ----

struct BeltSizes {
  std::array<int, 5> q{1, 1, 2, 1, 1};
  int r2 = 2, r3 = 0;  // 0 or at least 2: a one-vertex r part is always
                       // universal inside itself, which the axioms forbid
};

// A belt differs from a band in its middle: q2+r2 and q3+r3 face each other
// with free-form cross edges, and the r parts need not be cliques.  The
// recipe keeps the hinge [q2,q3] complete and shapes each r part as two
// anticomplete cliques whose across-neighborhoods are disjoint sets of hinge
// vertices — that satisfies every local clause by construction; the global
// hole-freeness check is left to the validator, resampling the random
// choices until it passes or the budget runs out.
inline std::pair<Graph, BeltParts> gen_belt(uint64_t seed, BeltSizes sz,
                                            int retry_budget = 1000) {
  for (int i = 0; i < 5; ++i)
    if (sz.q[i] < 1) throw graph_error("gen_belt: q parts must be non-empty");
  for (int r : {sz.r2, sz.r3})
    if (r == 1 || r < 0)
      throw graph_error("gen_belt: r parts need at least two vertices or none");
  if (sz.r2 > 0 && sz.q[2] < 2) sz.q[2] = 2;  // two disjoint landing spots
  if (sz.r3 > 0 && sz.q[1] < 2) sz.q[1] = 2;
  std::mt19937_64 rng(seed);
  std::string last = "no attempt made";
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    int at[8];
    at[0] = 0;
    const int counts[7] = {sz.q[0], sz.q[1], sz.q[2], sz.q[3], sz.q[4], sz.r2, sz.r3};
    for (int i = 0; i < 7; ++i) at[i + 1] = at[i] + counts[i];
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) detail::clique_edges(at[i], counts[i], es);
    auto join = [&](int a, int b) { detail::join_edges(at[a], counts[a], at[b], counts[b], es); };
    join(0, 1), join(0, 4), join(0, 5);  // q1 over q2, q5 and r2
    join(3, 2), join(3, 4), join(3, 6);  // q4 over q3, q5 and r3
    join(1, 5), join(2, 6);              // [qj,rj] complete
    join(1, 2);                          // the hinge
    // r part: two anticomplete cliques, each complete to its own nonempty
    // share of the opposite hinge clique
    auto attach = [&](int part, int hinge) {
      int nr = counts[part], nh = counts[hinge];
      if (nr == 0) return;
      int half = 1 + static_cast<int>(rng() % (nr - 1));
      detail::clique_edges(at[part], half, es);
      detail::clique_edges(at[part] + half, nr - half, es);
      int cut = 1 + static_cast<int>(rng() % (nh - 1));
      for (int i = 0; i < nr; ++i)
        for (int j = (i < half ? 0 : cut); j < (i < half ? cut : nh); ++j)
          es.emplace_back(at[part] + i, at[hinge] + j);
    };
    attach(5, 2);  // r2 lands on q3
    attach(6, 1);  // r3 lands on q2
    Graph g = Graph::build(at[7], es);
    BeltParts p;
    for (int i = 0; i < 5; ++i)
      for (int v = at[i]; v < at[i + 1]; ++v) p.q[i].push_back(v);
    for (int v = at[5]; v < at[6]; ++v) p.r2.push_back(v);
    for (int v = at[6]; v < at[7]; ++v) p.r3.push_back(v);
    Validation v = validate_belt(g, p);
    if (v.ok()) return {std::move(g), std::move(p)};
    last = *v.violation;
  }
  throw graph_error("gen_belt: retry budget exhausted; last violation: " + last);
}

// ---- boilers ----

struct BoilerSizes {
  int q = 1, a = 1;
  int k = 3;                     // block count, at least three
  int block_m = 1, block_b = 1;  // per-block size caps
  int l = 0;                     // attachment clique size, 0 = absent
  bool l_path = false;           // make l a three-vertex path instead
};

// The boiler is the most constrained shape: a clique b split into blocks,
// each block fed by its own anticomplete m-block, a hub clique q over a and
// m, and a-vertices complete to leading runs of the blocks.  Two wiring
// rules keep the output hole-free: an a-vertex may only see a clique inside
// l (seeing a non-edge of l plus any missed b-vertex closes a square), and
// when l is not a clique every a-vertex that reaches its non-universal part
// must run the longest allowed prefix.  With l absent or a clique the
// prefixes are sampled freely in [2, k-1].
inline std::pair<Graph, BoilerParts> gen_boiler(uint64_t seed, BoilerSizes sz,
                                               int retry_budget = 1000) {
  if (sz.k < 3) throw graph_error("gen_boiler: needs at least three blocks");
  if (sz.q < 1 || sz.a < 1 || sz.block_m < 1 || sz.block_b < 1)
    throw graph_error("gen_boiler: q, a and block caps must be positive");
  if (sz.l < 0) throw graph_error("gen_boiler: negative attachment size");
  if (sz.l_path) {
    sz.l = 3;
    if (sz.a < 2) sz.a = 2;  // the two path ends need distinct a-contacts
  }
  std::mt19937_64 rng(seed);
  std::string last = "no attempt made";
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::vector<int> msz(sz.k), bsz(sz.k);
    for (int i = 0; i < sz.k; ++i) {
      msz[i] = 1 + static_cast<int>(rng() % sz.block_m);
      bsz[i] = 1 + static_cast<int>(rng() % sz.block_b);
    }
    int q0 = 0, a0 = sz.q, b0 = a0 + sz.a;
    std::vector<int> bat(sz.k + 1, b0), mat(sz.k + 1, 0);
    for (int i = 0; i < sz.k; ++i) bat[i + 1] = bat[i] + bsz[i];
    int l0 = bat[sz.k];
    mat[0] = l0 + sz.l;
    for (int i = 0; i < sz.k; ++i) mat[i + 1] = mat[i] + msz[i];
    int n = mat[sz.k];
    std::vector<Edge> es;
    detail::clique_edges(q0, sz.q, es);
    detail::clique_edges(a0, sz.a, es);
    detail::clique_edges(b0, bat[sz.k] - b0, es);  // b is one clique overall
    for (int i = 0; i < sz.k; ++i) detail::clique_edges(mat[i], msz[i], es);
    if (sz.l_path) es.insert(es.end(), {{l0, l0 + 1}, {l0 + 1, l0 + 2}});
    else detail::clique_edges(l0, sz.l, es);
    detail::join_edges(q0, sz.q, a0, sz.a, es);
    detail::join_edges(q0, sz.q, mat[0], n - mat[0], es);
    detail::join_edges(b0, bat[sz.k] - b0, l0, sz.l, es);
    for (int i = 0; i < sz.k; ++i)
      detail::join_edges(mat[i], msz[i], bat[i], bsz[i], es);
    std::vector<int> pref(sz.a);
    for (int& p : pref)
      p = (sz.l > 0 && sz.l_path) ? sz.k - 1 : 2 + static_cast<int>(rng() % (sz.k - 2));
    for (int ai = 0; ai < sz.a; ++ai)
      for (int i = 0; i < pref[ai]; ++i) {
        detail::join_edges(a0 + ai, 1, mat[i], msz[i], es);
        detail::join_edges(a0 + ai, 1, bat[i], bsz[i], es);
      }
    if (sz.l > 0) {
      if (sz.l_path) {
        es.insert(es.end(), {{a0, l0}, {a0, l0 + 1}, {a0 + 1, l0 + 1}, {a0 + 1, l0 + 2}});
      } else {
        detail::join_edges(a0, sz.a, l0, sz.l, es);
      }
    }
    Graph g = Graph::build(n, es);
    BoilerParts p;
    for (int v = q0; v < a0; ++v) p.q.push_back(v);
    for (int v = a0; v < b0; ++v) p.a.push_back(v);
    for (int v = b0; v < bat[sz.k]; ++v) p.b.push_back(v);
    for (int v = l0; v < l0 + sz.l; ++v) p.l.push_back(v);
    for (int v = mat[0]; v < n; ++v) p.m.push_back(v);
    p.m_block.resize(sz.k);
    p.b_block.resize(sz.k);
    for (int i = 0; i < sz.k; ++i) {
      for (int v = mat[i]; v < mat[i + 1]; ++v) p.m_block[i].push_back(v);
      for (int v = bat[i]; v < bat[i + 1]; ++v) p.b_block[i].push_back(v);
    }
    p.b_star = bat[sz.k - 1];
    p.m_star = mat[sz.k - 1];
    p.a_prefix = pref;
    p.j = *std::min_element(pref.begin(), pref.end()) + 1;
    if (sz.l > 0) {
      if (sz.l_path) {
        p.a_l = {a0, a0 + 1};
        p.a_l_strict = {a0, a0 + 1};
      } else {
        p.a_l = p.a;
      }
    }
    Validation v = validate_boiler(g, p);
    if (v.ok()) return {std::move(g), std::move(p)};
    last = *v.violation;
  }
  throw graph_error("gen_boiler: retry budget exhausted; last violation: " + last);
}

// ---- gluing and random members ----

struct GluedGraph {
  Graph graph;
  CliqueCutset cut;  // the shared clique, ready for a cutset certificate
};

// Overlay two graphs along equal-size cliques: kb[i] lands on ka[i] and the
// rest of b is appended after a's vertices.  The shared clique separates the
// two remainders, so the result carries a clique cutset by construction —
// both remainders must be non-empty for that to mean anything.
inline GluedGraph glue_at_clique(const Graph& a, const VertexSet& ka, const Graph& b,
                                 const VertexSet& kb) {
  if (ka.empty() || ka.size() != kb.size())
    throw graph_error("glue_at_clique: shared cliques must match and be non-empty");
  if (!is_clique(a, ka) || !is_clique(b, kb))
    throw graph_error("glue_at_clique: shared sets must be cliques");
  if (static_cast<int>(ka.size()) == a.n() || static_cast<int>(kb.size()) == b.n())
    throw graph_error("glue_at_clique: a side would be empty");
  std::vector<int> to_host(b.n(), -1);
  for (size_t i = 0; i < kb.size(); ++i) to_host[kb[i]] = ka[i];
  int next = a.n();
  for (int v = 0; v < b.n(); ++v)
    if (to_host[v] < 0) to_host[v] = next++;
  std::vector<Edge> es = a.edge_list();
  for (const Edge& e : b.edge_list()) es.emplace_back(to_host[e.first], to_host[e.second]);
  GluedGraph r;
  r.graph = Graph::build(next, es);
  r.cut.clique = vs_sorted(ka);
  for (int v = 0; v < a.n(); ++v)
    if (!vs_contains(r.cut.clique, v)) r.cut.side_a.push_back(v);
  for (int v = a.n(); v < next; ++v) r.cut.side_b.push_back(v);
  return r;
}

enum class RandomStrategy { STRUCTURED, REJECTION };

namespace detail {

inline Graph random_host(int n, int edge_percent, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(static_cast<int>(rng() % i), i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng() % 100) < edge_percent) es.emplace_back(i, j);
  return Graph::build(n, es);
}

// one structured in-class instance of roughly the requested order: a blowup
// of a random base with bag sizes scaled to the budget, or a small band,
// belt or boiler when the dice say so
inline Graph structured_instance(int n, std::mt19937_64& rng) {
  int kind = static_cast<int>(rng() % 8);
  if (kind == 5) {
    BandSizes sz;
    for (int i = 0; i < 5; ++i) sz.q[i] = 1 + static_cast<int>(rng() % 2);
    sz.r2 = static_cast<int>(rng() % 3);
    sz.r3 = static_cast<int>(rng() % 2);
    sz.complete_pairs = rng() % 2 == 0;
    return gen_band(rng(), sz).first;
  }
  if (kind == 6) {
    BeltSizes sz;
    for (int i = 0; i < 5; ++i) sz.q[i] = 1 + static_cast<int>(rng() % 2);
    sz.r2 = 2 * static_cast<int>(rng() % 2);
    sz.r3 = 2 * static_cast<int>(rng() % 2);
    return gen_belt(rng(), sz).first;
  }
  if (kind == 7) {
    BoilerSizes sz;
    sz.k = 3 + static_cast<int>(rng() % 2);
    sz.q = 1 + static_cast<int>(rng() % 2);
    sz.a = 1 + static_cast<int>(rng() % 2);
    sz.l = static_cast<int>(rng() % 3);
    return gen_boiler(rng(), sz).first;
  }
  Graph base;
  if (kind == 4) base = base_fkl(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
  else {
    const BaseName menu[] = {BaseName::C5, BaseName::F3, BaseName::H1, BaseName::H2,
                             BaseName::H5};
    base = base_graph(menu[static_cast<int>(rng() % 4 + (kind & 1))]);
  }
  int scale = std::max(1, n / base.n());
  std::vector<int> sizes(base.n());
  int total = 0;
  for (int& s : sizes) total += (s = static_cast<int>(rng() % (2 * scale + 1)));
  if (total == 0) sizes[static_cast<int>(rng() % sizes.size())] = 1;
  return gen_blowup(base, sizes).graph;
}

// try to glue a second structured instance onto g at a shared vertex; every
// candidate is vetted by the detector since vertex-gluing two members can
// manufacture a long path (two pentagons sharing a corner contain one)
inline std::optional<GluedGraph> try_glue(const Graph& g, std::mt19937_64& rng, int tries) {
  if (g.n() < 2) return std::nullopt;
  for (int t = 0; t < tries; ++t) {
    Graph other = structured_instance(5, rng);
    if (other.n() < 2) continue;
    VertexSet ka{static_cast<int>(rng() % g.n())};
    VertexSet kb{static_cast<int>(rng() % other.n())};
    GluedGraph glued = glue_at_clique(g, ka, other, kb);
    if (!is_p6c4_free(glued.graph).witness) return glued;
  }
  return std::nullopt;
}

}  // namespace detail

inline Graph gen_random_p6c4free(int n, uint64_t seed, RandomStrategy strategy) {
  if (n < 1) throw graph_error("gen_random_p6c4free: n must be positive");
  std::mt19937_64 rng(seed);
  if (strategy == RandomStrategy::REJECTION) {
    if (n > 10)
      throw graph_error("gen_random_p6c4free: rejection sampling is capped at ten vertices");
    if (n == 1) return Graph::build(1, {});
    for (int attempt = 0; attempt < 20000; ++attempt) {
      Graph g = detail::random_host(n, 25 + static_cast<int>(rng() % 50), rng);
      if (!is_p6c4_free(g).witness) return g;
    }
    throw graph_error("gen_random_p6c4free: rejection budget exhausted");
  }
  Graph g = detail::structured_instance(n, rng);
  if (rng() % 3 == 0) {
    // universal vertices are always safe to add: they cannot lie on an
    // induced path of three or more vertices, nor inside a square
    std::vector<Edge> es = g.edge_list();
    for (int v = 0; v < g.n(); ++v) es.emplace_back(v, g.n());
    g = Graph::build(g.n() + 1, es);
  }
  if (rng() % 3 == 0)
    if (auto glued = detail::try_glue(g, rng, 8)) g = glued->graph;
  auto verdict = is_p6c4_free(g);
  if (verdict.witness)
    throw graph_error("gen_random_p6c4free: output contains " +
                      witness_kind_str(verdict.witness->kind));
  return g;
}

// ---- one-stop dispatch ----

enum class GenFamily { BLOWUP, FKL, TIGHT, BAND, BELT, BOILER, RANDOM_P6C4, GLUED };

inline std::string gen_family_str(GenFamily f) {
  switch (f) {
    case GenFamily::BLOWUP: return "blowup";
    case GenFamily::FKL: return "fkl";
    case GenFamily::TIGHT: return "tight";
    case GenFamily::BAND: return "band";
    case GenFamily::BELT: return "belt";
    case GenFamily::BOILER: return "boiler";
    case GenFamily::RANDOM_P6C4: return "random";
    case GenFamily::GLUED: return "glued";
  }
  return "?";
}

// Everything the dispatcher needs in one bag, shaped for a JSON round-trip.
// `sizes` is family-specific: bag sizes for BLOWUP/FKL; {q1..q5,r2,r3} for
// BAND (an eighth entry forces the graded pairs complete) and BELT;
// {q,a,k,block_m,block_b,l,l_path} for BOILER; ignored elsewhere.
struct GenSpec {
  GenFamily family = GenFamily::BLOWUP;
  BlowupBase base;         // BLOWUP target; FKL parameters ride in base.k/l
  std::vector<int> sizes;  // empty means the documented default
  int q = 1;               // TIGHT scale
  int n = 8;               // RANDOM_P6C4 / GLUED order guide
  int depth = 1;           // GLUED: number of gluings
  RandomStrategy strategy = RandomStrategy::STRUCTURED;
  uint64_t seed = 0;
};

struct GenOutput {
  Graph graph;
  std::optional<StructureCertificate> cert;  // when the shape is certified
  std::string note;  // construction choices a consumer may care about
};

inline GenOutput generate(const GenSpec& spec) {
  GenOutput out;
  auto need = [&](size_t want, const char* family) {
    if (!spec.sizes.empty() && spec.sizes.size() != want)
      throw graph_error(std::string("generate: ") + family + " takes " +
                        std::to_string(want) + " size entries");
  };
  switch (spec.family) {
    case GenFamily::BLOWUP: {
      Graph base = blowup_base_graph(spec.base);
      std::vector<int> sizes = spec.sizes.empty()
                                   ? std::vector<int>(base.n(), 1)
                                   : spec.sizes;
      auto [g, map] = gen_blowup(spec.base, sizes);
      out.graph = std::move(g);
      out.cert = StructureCertificate{BlowupCert{std::move(map)}, "generated"};
      out.note = "blowup of " + blowup_base_str(spec.base);
      break;
    }
    case GenFamily::FKL: {
      auto [g, map] = gen_fkl(spec.base.k, spec.base.l, spec.sizes);
      out.graph = std::move(g);
      out.note = "fkl k=" + std::to_string(spec.base.k) + " l=" + std::to_string(spec.base.l);
      out.cert = StructureCertificate{BlowupCert{std::move(map)}, "generated"};
      break;
    }
    case GenFamily::TIGHT: {
      auto [g, map] = gen_tight(spec.q);
      out.graph = std::move(g);
      out.cert = StructureCertificate{BlowupCert{std::move(map)}, "generated"};
      out.note = "tight pentagon blowup q=" + std::to_string(spec.q);
      break;
    }
    case GenFamily::BAND: {
      if (!spec.sizes.empty() && spec.sizes.size() != 7) need(8, "band");
      BandSizes sz;
      if (!spec.sizes.empty()) {
        for (int i = 0; i < 5; ++i) sz.q[i] = spec.sizes[i];
        sz.r2 = spec.sizes[5];
        sz.r3 = spec.sizes[6];
        sz.complete_pairs = spec.sizes.size() == 8 && spec.sizes[7] != 0;
      }
      auto [g, parts] = gen_band(spec.seed, sz);
      out.graph = std::move(g);
      out.cert = StructureCertificate{BandCert{std::move(parts)}, "generated"};
      out.note = "band";
      break;
    }
    case GenFamily::BELT: {
      need(7, "belt");
      BeltSizes sz;
      if (!spec.sizes.empty()) {
        for (int i = 0; i < 5; ++i) sz.q[i] = spec.sizes[i];
        sz.r2 = spec.sizes[5];
        sz.r3 = spec.sizes[6];
      }
      auto [g, parts] = gen_belt(spec.seed, sz);
      out.graph = std::move(g);
      out.cert = StructureCertificate{BeltCert{std::move(parts)}, "generated"};
      out.note = "belt; r parts are two anticomplete cliques each";
      break;
    }
    case GenFamily::BOILER: {
      need(7, "boiler");
      BoilerSizes sz;
      if (!spec.sizes.empty()) {
        sz.q = spec.sizes[0];
        sz.a = spec.sizes[1];
        sz.k = spec.sizes[2];
        sz.block_m = spec.sizes[3];
        sz.block_b = spec.sizes[4];
        sz.l = spec.sizes[5];
        sz.l_path = spec.sizes[6] != 0;
      }
      auto [g, parts] = gen_boiler(spec.seed, sz);
      out.graph = std::move(g);
      out.cert = StructureCertificate{BoilerCert{std::move(parts)}, "generated"};
      out.note = sz.l_path ? "boiler; l wired as a path, all prefixes maximal"
                           : "boiler; l wired as a clique";
      break;
    }
    case GenFamily::RANDOM_P6C4: {
      out.graph = gen_random_p6c4free(spec.n, spec.seed, spec.strategy);
      out.note = spec.strategy == RandomStrategy::REJECTION ? "rejection-sampled"
                                                            : "structured sample";
      break;
    }
    case GenFamily::GLUED: {
      std::mt19937_64 rng(spec.seed);
      Graph g = detail::structured_instance(spec.n, rng);
      std::optional<CliqueCutset> first_cut;
      int made = 0;
      for (int d = 0; d < spec.depth; ++d) {
        auto glued = detail::try_glue(g, rng, 40);
        if (!glued) continue;
        if (!first_cut) {
          first_cut = glued->cut;
        } else {
          // later additions see only their attach vertex, so they join its
          // side of the first cut (either side works when it sits on the cut)
          int attach = glued->cut.clique[0];
          VertexSet& side =
              vs_contains(first_cut->side_b, attach) ? first_cut->side_b : first_cut->side_a;
          for (int v = g.n(); v < glued->graph.n(); ++v) side.push_back(v);
        }
        g = glued->graph;
        ++made;
      }
      if (!first_cut)
        throw graph_error("generate: no glue attempt survived the detector");
      out.graph = std::move(g);
      out.cert = StructureCertificate{CliqueCutsetCert{std::move(*first_cut)}, "generated"};
      out.note = "glued " + std::to_string(made) + " times";
      break;
    }
  }
  if (out.cert) {
    Validation v = validate_certificate(out.graph, *out.cert);
    if (!v.ok()) throw graph_error("generate: " + *v.violation);
  }
  auto verdict = is_p6c4_free(out.graph);
  if (verdict.witness)
    throw graph_error("generate: output contains " + witness_kind_str(verdict.witness->kind));
  return out;
}

}  // namespace p6c4
