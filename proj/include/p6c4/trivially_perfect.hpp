#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p6c4/bases.hpp"
#include "p6c4/detect.hpp"
#include "p6c4/graph.hpp"

// Clone classes, graded clique pairs, universal-peeling trees for graphs
// without induced P4 or C4, and the C-pair decomposition built on top of
// them.  Vertex ids in all outputs refer to the graph passed in.

namespace p6c4 {

// ---- clone classes ----

struct CloneClasses {
  std::vector<VertexSet> classes;  // ordered by smallest member
  Graph quotient;                  // vertex i stands for classes[i]
  std::vector<int> class_of;       // vertex -> class index
};

// Group vertices by equal closed neighborhood.  Equal N[.] forces adjacency,
// so classes are cliques and cross edges are all-or-nothing; the quotient is
// well defined.
inline CloneClasses clone_quotient(const Graph& g) {
  CloneClasses r;
  r.class_of.assign(g.n(), -1);
  std::map<VertexSet, int> seen;
  for (int v = 0; v < g.n(); ++v) {
    VertexSet key = closed_nbhd(g, v);
    auto it = seen.find(key);
    if (it == seen.end()) {
      it = seen.emplace(key, static_cast<int>(r.classes.size())).first;
      r.classes.push_back({});
    }
    r.class_of[v] = it->second;
    r.classes[it->second].push_back(v);
  }
  std::vector<Edge> qes;
  for (size_t i = 0; i < r.classes.size(); ++i)
    for (size_t j = i + 1; j < r.classes.size(); ++j) {
      bool adj = g.has_edge(r.classes[i][0], r.classes[j][0]);
      bool all = complete_between(g, r.classes[i], r.classes[j]);
      bool none = anticomplete_between(g, r.classes[i], r.classes[j]);
      if (adj ? !all : !none)
        throw graph_error("clone classes with mixed cross edges");
      if (adj) qes.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  r.quotient = Graph::build(static_cast<int>(r.classes.size()), qes);
  return r;
}

// ---- graded clique pairs ----

// Orders of two disjoint cliques under which cross neighborhoods are nested:
// N_B(a_1) ⊇ N_B(a_2) ⊇ ... and likewise for B.  In a square-free graph the
// orders always exist; otherwise `square` carries a C4.  When [A,B] is
// incomplete, `crossing` gives indices (i,j) into the orders such that
// order_a[i] misses order_b[j] but sees order_b[h] for h < j, order_b[j] sees
// order_a[g] for g < i, and every maximal clique of G[A ∪ B] contains one of
// the two.
struct GradedLabeling {
  std::vector<int> order_a, order_b;
  std::optional<std::pair<int, int>> crossing;
  std::optional<Witness> square;
  bool ok() const { return !square.has_value(); }
};

namespace detail {

// nesting check along one side; on failure emits the C4 spanning the two
// incomparable neighborhoods
inline std::optional<Witness> graded_check(const Graph& g, const std::vector<int>& order,
                                           const VertexSet& other) {
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    VertexSet hi = nbhd_in(g, order[i], other);
    VertexSet lo = nbhd_in(g, order[i + 1], other);
    if (vs_subset(lo, hi)) continue;
    VertexSet in_lo = vs_diff(lo, hi), in_hi = vs_diff(hi, lo);
    if (in_hi.empty())
      throw graph_error("graded order not sorted by neighborhood size");
    return Witness{WitnessKind::C4, {order[i], in_hi[0], in_lo[0], order[i + 1]}};
  }
  return std::nullopt;
}

}  // namespace detail

inline GradedLabeling graded_labeling(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (!is_clique(g, a) || !is_clique(g, b))
    throw graph_error("graded labeling needs two cliques");
  if (!vs_disjoint(a, b)) throw graph_error("graded labeling needs disjoint cliques");
  GradedLabeling r;
  auto by_cross_degree = [&](VertexSet side, const VertexSet& other) {
    std::sort(side.begin(), side.end(), [&](int u, int v) {
      size_t du = nbhd_in(g, u, other).size(), dv = nbhd_in(g, v, other).size();
      return du != dv ? du > dv : u < v;
    });
    return std::vector<int>(side.begin(), side.end());
  };
  r.order_a = by_cross_degree(a, b);
  r.order_b = by_cross_degree(b, a);
  r.square = detail::graded_check(g, r.order_a, vs_sorted(b));
  if (!r.square) r.square = detail::graded_check(g, r.order_b, vs_sorted(a));
  if (r.square) return r;
  if (!complete_between(g, a, b)) {
    for (size_t i = 0; i < r.order_a.size(); ++i) {
      if (nbhd_in(g, r.order_a[i], b).size() == b.size()) continue;
      for (size_t j = 0; j < r.order_b.size(); ++j)
        if (!g.has_edge(r.order_a[i], r.order_b[j])) {
          r.crossing = {static_cast<int>(i), static_cast<int>(j)};
          return r;
        }
      throw graph_error("incomplete pair without a missing edge");
    }
  }
  return r;
}

// ---- universal-peeling trees ----

// One tree per connected component: the root holds the universal vertices,
// children are built from the components left after removing them.  Every
// bag is a clique, and a vertex is adjacent exactly to its bag plus all
// ancestor and descendant bags.
struct BambooNode {
  VertexSet bag;
  int parent = -1;
  std::vector<int> children;
  bool spine = false;  // has children; in the 2P3-free case these form a path
};

struct Bamboo {
  std::vector<BambooNode> nodes;  // preorder, nodes[0] is the root
};

struct BambooBuild {
  std::vector<Bamboo> trees;       // one per component, by smallest vertex
  std::optional<Witness> witness;  // P4 or C4 when the peeling gets stuck
  bool ok() const { return !witness.has_value(); }
};

namespace detail {

inline bool peel(const Graph& g, const VertexSet& span, int parent, Bamboo& tree,
                 std::optional<Witness>& bad) {
  VertexSet universal;
  for (int v : span) {
    bool all = true;
    for (int u : span)
      if (u != v && !g.has_edge(u, v)) {
        all = false;
        break;
      }
    if (all) universal.push_back(v);
  }
  if (universal.empty()) {
    auto sub = induced_subgraph(g, span);
    auto w = find_induced_path(sub.graph, 4);
    if (!w) w = find_c4(sub.graph);
    if (!w) throw graph_error("no universal vertex yet no P4 or C4");
    for (int& v : w->vertices) v = sub.to_host[v];
    bad = w;
    return false;
  }
  int idx = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({universal, parent, {}, false});
  if (parent >= 0) tree.nodes[parent].children.push_back(idx);
  VertexSet rest = vs_diff(span, universal);
  if (rest.empty()) return true;
  tree.nodes[idx].spine = true;
  auto sub = induced_subgraph(g, rest);
  for (const auto& comp : components(sub.graph)) {
    VertexSet host;
    for (int v : comp) host.push_back(sub.to_host[v]);
    if (!peel(g, vs_sorted(host), idx, tree, bad)) return false;
  }
  return true;
}

}  // namespace detail

inline BambooBuild build_bamboo(const Graph& g) {
  BambooBuild out;
  for (const auto& comp : components(g)) {
    Bamboo tree;
    if (!detail::peel(g, comp, -1, tree, out.witness)) {
      out.trees.clear();
      return out;
    }
    out.trees.push_back(std::move(tree));
  }
  return out;
}

// Rebuild the graph a forest describes: bags are cliques, each complete to
// all its ancestors.  Inverse of build_bamboo.
inline Graph expand_bamboo(const std::vector<Bamboo>& trees, int n) {
  std::vector<Edge> es;
  for (const auto& tree : trees)
    for (const auto& node : tree.nodes) {
      for (size_t i = 0; i < node.bag.size(); ++i)
        for (size_t j = i + 1; j < node.bag.size(); ++j)
          es.emplace_back(node.bag[i], node.bag[j]);
      for (int anc = node.parent; anc >= 0; anc = tree.nodes[anc].parent)
        for (int u : node.bag)
          for (int v : tree.nodes[anc].bag) es.emplace_back(u, v);
    }
  return Graph::build(n, es);
}

inline int leaf_count(const BambooBuild& b) {
  int k = 0;
  for (const auto& tree : b.trees)
    for (const auto& node : tree.nodes)
      if (node.children.empty()) ++k;
  return k;
}

// Additionally 2P3-free?  Exactly when at most one component is not a clique
// and no node has two non-leaf children (the tree is a spine with leaves).
inline bool bamboo_shape(const BambooBuild& b) {
  int branched_trees = 0;
  for (const auto& tree : b.trees) {
    if (tree.nodes.size() > 1) ++branched_trees;
    for (const auto& node : tree.nodes) {
      int internal = 0;
      for (int c : node.children)
        if (!tree.nodes[c].children.empty()) ++internal;
      if (internal > 1) return false;
    }
  }
  return branched_trees <= 1;
}

// ---- few independent simplicials: P3 and dart blowups ----

// In a universal-peeling forest the simplicial vertices are exactly the leaf
// bags, and a maximum pairwise non-adjacent selection takes one per leaf.
// With at most two leaves the graph is a blowup of P3, with at most three a
// blowup of the dart; the shapes below are the exhaustive list.
enum class SimplicialShape { BLOWUP_P3, BLOWUP_DART, OTHER };

struct SimplicialClassification {
  SimplicialShape shape = SimplicialShape::OTHER;
  std::optional<std::array<VertexSet, 3>> p3_bags;    // base_p3 order a,b,c
  std::optional<std::array<VertexSet, 5>> dart_bags;  // base_dart order a..e
  std::optional<Witness> witness;                     // precondition failure
  bool ok() const { return !witness.has_value(); }
};

inline SimplicialClassification classify_bamboo_simplicial(const Graph& g) {
  SimplicialClassification r;
  BambooBuild b = build_bamboo(g);
  if (!b.ok()) {
    r.witness = b.witness;
    return r;
  }
  int k = leaf_count(b);
  auto star_leaves = [&](const Bamboo& t) {  // root plus only leaf children?
    if (t.nodes.empty() || t.nodes[0].children.size() + 1 != t.nodes.size()) return false;
    for (int c : t.nodes[0].children)
      if (!t.nodes[c].children.empty()) return false;
    return true;
  };
  if (k <= 2) {
    std::array<VertexSet, 3> bags;
    if (b.trees.size() == 1 && b.trees[0].nodes.size() == 1) {
      bags[0] = b.trees[0].nodes[0].bag;  // one clique
    } else if (b.trees.size() == 2) {
      bags[0] = b.trees[0].nodes[0].bag;  // two cliques
      bags[2] = b.trees[1].nodes[0].bag;
    } else if (b.trees.size() == 1 && star_leaves(b.trees[0]) && k == 2) {
      const Bamboo& t = b.trees[0];
      bags[0] = t.nodes[t.nodes[0].children[0]].bag;
      bags[1] = t.nodes[0].bag;
      bags[2] = t.nodes[t.nodes[0].children[1]].bag;
    } else if (!b.trees.empty()) {
      throw graph_error("unexpected peeling shape with two leaves");
    }
    if (!is_blowup_of(g, base_p3(), {bags[0], bags[1], bags[2]}))
      throw graph_error("three-part split is not a blowup");
    r.shape = SimplicialShape::BLOWUP_P3;
    r.p3_bags = bags;
    return r;
  }
  if (k == 3) {
    std::array<VertexSet, 5> bags;
    bool shaped = false;
    if (b.trees.size() == 3) {  // three cliques
      bags[1] = b.trees[0].nodes[0].bag;
      bags[3] = b.trees[1].nodes[0].bag;
      bags[4] = b.trees[2].nodes[0].bag;
      shaped = true;
    } else if (b.trees.size() == 2) {  // a clique beside a two-leaf star
      int star = b.trees[0].nodes.size() > 1 ? 0 : 1;
      const Bamboo& t = b.trees[star];
      if (star_leaves(t)) {
        bags[0] = t.nodes[0].bag;
        bags[1] = t.nodes[t.nodes[0].children[0]].bag;
        bags[3] = t.nodes[t.nodes[0].children[1]].bag;
        bags[4] = b.trees[1 - star].nodes[0].bag;
        shaped = true;
      }
    } else if (b.trees.size() == 1 && star_leaves(b.trees[0])) {  // three-leaf star
      const Bamboo& t = b.trees[0];
      bags[2] = t.nodes[0].bag;
      bags[1] = t.nodes[t.nodes[0].children[0]].bag;
      bags[3] = t.nodes[t.nodes[0].children[1]].bag;
      bags[4] = t.nodes[t.nodes[0].children[2]].bag;
      shaped = true;
    } else if (b.trees.size() == 1) {  // spine of two: leaf + inner star
      const Bamboo& t = b.trees[0];
      const auto& rc = t.nodes[0].children;
      if (rc.size() == 2) {
        int mid = !t.nodes[rc[0]].children.empty() ? rc[0] : rc[1];
        int lone = rc[0] + rc[1] - mid;
        const auto& mc = t.nodes[mid].children;
        if (t.nodes[lone].children.empty() && mc.size() == 2 &&
            t.nodes[mc[0]].children.empty() && t.nodes[mc[1]].children.empty()) {
          bags[2] = t.nodes[0].bag;
          bags[4] = t.nodes[lone].bag;
          bags[0] = t.nodes[mid].bag;
          bags[1] = t.nodes[mc[0]].bag;
          bags[3] = t.nodes[mc[1]].bag;
          shaped = true;
        }
      }
    }
    if (!shaped) throw graph_error("unexpected peeling shape with three leaves");
    if (!is_blowup_of(g, base_dart(), {bags[0], bags[1], bags[2], bags[3], bags[4]}))
      throw graph_error("five-part split is not a blowup");
    r.shape = SimplicialShape::BLOWUP_DART;
    r.dart_bags = bags;
    return r;
  }
  return r;
}

// ---- C-pairs ----

// A C-pair splits the vertices into a clique A and a set X whose graph has
// no P4, C4 or 2P3, such that every X-vertex has an A-neighbor and
// non-adjacent X-vertices never share one.  The decomposition groups A by
// the peeling forest of G[X]: node i owns A_i, the A-neighbors of its bag
// not already claimed below it, and the leftover A_0 sees nothing of X.
// Nodes whose members disagree on their A-neighborhood form the matching;
// each such bag makes a graded pair with its A_i, and their union is a
// clique.
struct CPairNodeRef {
  int tree = 0;
  int node = 0;
};

struct CPairDecomposition {
  VertexSet x, a;
  std::vector<Bamboo> skeleton;                // peeling forest of G[X]
  std::vector<std::vector<VertexSet>> node_a;  // A_i per tree and node
  VertexSet a_slack;                           // A_0
  std::vector<CPairNodeRef> matching;          // non-homogeneous nodes
};

struct CPairResult {
  std::optional<CPairDecomposition> value;
  std::optional<std::string> violation;
  std::optional<Witness> witness;
  bool ok() const { return value.has_value(); }
};

inline CPairResult decompose_cpair(const Graph& g, const VertexSet& x_in,
                                   const VertexSet& a_in) {
  VertexSet x = vs_sorted(x_in), a = vs_sorted(a_in);
  if (!vs_disjoint(x, a) || vs_union(x, a) != all_vertices(g))
    throw graph_error("C-pair needs a partition into X and A");
  CPairResult res;
  auto fail = [&](std::string why, std::optional<Witness> w = std::nullopt) {
    res.violation = std::move(why);
    res.witness = std::move(w);
    return res;
  };

  if (!is_clique(g, a)) return fail("A is not a clique");
  auto chord = chordality(g);
  if (!chord.chordal()) return fail("graph is not chordal", chord.hole);
  if (auto p6 = find_induced_path(g, 6))
    return fail("graph has a six-vertex induced path", p6);
  for (int v : x)
    if (nbhd_in(g, v, a).empty())
      return fail("X-vertex " + std::to_string(v) + " has no neighbor in A");
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) {
      if (g.has_edge(x[i], x[j])) continue;
      VertexSet common = vs_inter(nbhd_in(g, x[i], a), nbhd_in(g, x[j], a));
      if (!common.empty())
        return fail("non-adjacent X-vertices " + std::to_string(x[i]) + "," +
                    std::to_string(x[j]) + " share the A-neighbor " +
                    std::to_string(common[0]));
    }

  auto sub = induced_subgraph(g, x);
  BambooBuild forest = build_bamboo(sub.graph);
  if (!forest.ok()) {
    for (int& v : forest.witness->vertices) v = sub.to_host[v];
    return fail("G[X] has an induced " + witness_kind_str(forest.witness->kind),
                forest.witness);
  }
  for (auto& tree : forest.trees)
    for (auto& node : tree.nodes)
      for (int& v : node.bag) v = sub.to_host[v];
  if (!bamboo_shape(forest)) {
    auto w = find_special(sub.graph, WitnessKind::TWO_P3);
    if (!w) throw graph_error("branched peeling forest without a 2P3");
    for (int& v : w->vertices) v = sub.to_host[v];
    return fail("G[X] has two anticomplete induced P3s", w);
  }

  CPairDecomposition d;
  d.x = x;
  d.a = a;
  d.skeleton = forest.trees;
  VertexSet claimed;
  for (const auto& tree : d.skeleton) {
    std::vector<VertexSet> seen(tree.nodes.size());  // A-neighbors at or below
    d.node_a.emplace_back(tree.nodes.size());
    for (int i = static_cast<int>(tree.nodes.size()) - 1; i >= 0; --i) {
      VertexSet here;
      for (int v : tree.nodes[i].bag) here = vs_union(here, nbhd_in(g, v, a));
      VertexSet below;
      for (int c : tree.nodes[i].children) below = vs_union(below, seen[c]);
      seen[i] = vs_union(here, below);
      d.node_a.back()[i] = vs_diff(here, below);
      claimed = vs_union(claimed, d.node_a.back()[i]);
      // ancestors must see everything claimed strictly below them
      for (int anc = tree.nodes[i].parent; anc >= 0; anc = tree.nodes[anc].parent)
        for (int u : tree.nodes[anc].bag)
          for (int w : seen[i])
            if (!g.has_edge(u, w))
              return fail("ancestor " + std::to_string(u) +
                          " misses the descendant A-neighbor " + std::to_string(w));
    }
  }
  d.a_slack = vs_diff(a, claimed);
  if (!anticomplete_between(g, x, d.a_slack))
    throw graph_error("slack A-vertices still see X");

  for (size_t t = 0; t < d.skeleton.size(); ++t)
    for (size_t i = 0; i < d.skeleton[t].nodes.size(); ++i) {
      const VertexSet& bag = d.skeleton[t].nodes[i].bag;
      bool homogeneous = true;
      VertexSet first = nbhd_in(g, bag[0], a);
      for (size_t v = 1; v < bag.size() && homogeneous; ++v)
        homogeneous = nbhd_in(g, bag[v], a) == first;
      if (homogeneous) continue;
      auto graded = graded_labeling(g, bag, d.node_a[t][i]);
      if (!graded.ok())
        return fail("matching bag is not graded against its A-part", graded.square);
      d.matching.push_back({static_cast<int>(t), static_cast<int>(i)});
    }
  for (size_t p = 0; p < d.matching.size(); ++p)
    for (size_t q = p + 1; q < d.matching.size(); ++q) {
      const VertexSet& bp = d.skeleton[d.matching[p].tree].nodes[d.matching[p].node].bag;
      const VertexSet& bq = d.skeleton[d.matching[q].tree].nodes[d.matching[q].node].bag;
      if (!complete_between(g, bp, bq))
        return fail("matching bags are not pairwise adjacent");
    }

  res.value = std::move(d);
  return res;
}

}  // namespace p6c4
