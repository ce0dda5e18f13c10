#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "p6c4/bases.hpp"
#include "p6c4/detect.hpp"
#include "p6c4/graph.hpp"
#include "p6c4/oracle.hpp"
#include "p6c4/structure.hpp"
#include "p6c4/trivially_perfect.hpp"

// Coloring within ceil(5*omega/4) colors.  The engine peels the graph down
// with a small toolbox of verified steps -- a low-degree vertex, a (very)
// good stable set, a stable set whose removal leaves a chordal graph, or a
// family of t disjoint stable sets that knocks the clique number down by
// t-1 -- and colors the rest by recursion.  Certificates suggest which step
// to take, but every suggestion is re-checked against the graph before it is
// applied, so a wrong suggestion degrades to the generic searches and, at
// worst, to the exact oracle (counted, and expected to stay unused on inputs
// the recognizer accepts).

namespace p6c4 {

// ceil(5w/4) and ceil((delta+omega+1)/2), in integers
inline int bound54(int omega) { return (5 * omega + 3) / 4; }
inline int reed_bound(int delta, int omega) { return (delta + omega + 2) / 2; }

struct BoundReport {
  int omega = 0;
  int delta = 0;
  int bound54 = 0;
  int reed = 0;
  int chi_alg = 0;               // colors the engine used
  std::optional<int> chi_exact;  // oracle value, when requested and in reach
};

enum class ToolTag {
  LOW_DEGREE_VERTEX,
  GOOD_STABLE_SET,
  VERY_GOOD_STABLE_SET,
  PERFECT_REMAINDER_SET,
  T_STABLE_SETS,
};

inline std::string tool_tag_str(ToolTag t) {
  switch (t) {
    case ToolTag::LOW_DEGREE_VERTEX: return "low-degree-vertex";
    case ToolTag::GOOD_STABLE_SET: return "good-stable-set";
    case ToolTag::VERY_GOOD_STABLE_SET: return "very-good-stable-set";
    case ToolTag::PERFECT_REMAINDER_SET: return "perfect-remainder-set";
    case ToolTag::T_STABLE_SETS: return "t-stable-sets";
  }
  return "?";
}

// One peeling step.  LOW_DEGREE_VERTEX names a vertex; the other tags carry
// stable sets (a single one, or t pairwise disjoint ones).
struct ToolStep {
  ToolTag tag = ToolTag::LOW_DEGREE_VERTEX;
  int vertex = -1;
  std::vector<VertexSet> sets;
  int t = 0;
};

struct TraceEntry {
  std::string branch;
  VertexSet vertices;  // removed (or otherwise pivotal) at this step
  int colors_introduced = 0;
};

struct ColorResult {
  Coloring coloring;
  BoundReport bounds;
  std::vector<TraceEntry> trace;
  std::optional<Witness> witness;  // set when the input is outside the class
  int exact_uses = 0;   // subinstances handed to the exponential oracle
  int rescue_uses = 0;  // levels where no tool step could be found
  bool ok() const { return !witness.has_value(); }
};

namespace detail {

inline bool stable_set(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

inline VertexSet step_removal(const ToolStep& s) {
  if (s.tag == ToolTag::LOW_DEGREE_VERTEX) return {s.vertex};
  VertexSet all;
  for (const VertexSet& t : s.sets) all = vs_union(all, t);
  return all;
}

}  // namespace detail

// Re-check a tool step from scratch; returns the first violated clause by
// name, or nothing if the step is sound for this graph.
inline std::optional<std::string> check_tool_step(const Graph& g, const ToolStep& step) {
  auto bad = [](std::string m) { return std::optional<std::string>(std::move(m)); };
  const std::string what = tool_tag_str(step.tag);
  if (step.tag == ToolTag::LOW_DEGREE_VERTEX) {
    if (step.vertex < 0 || step.vertex >= g.n())
      return bad(what + ": vertex out of range");
    int cap = bound54(clique_number(g)) - 1;
    if (g.degree(step.vertex) > cap)
      return bad(what + ": vertex " + std::to_string(step.vertex) + " has degree " +
                 std::to_string(g.degree(step.vertex)) + " > " + std::to_string(cap));
    return std::nullopt;
  }
  for (const VertexSet& s : step.sets) {
    for (int v : s)
      if (v < 0 || v >= g.n()) return bad(what + ": vertex out of range");
    VertexSet sorted = vs_sorted(s);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return bad(what + ": vertex repeated inside a set");
    if (!detail::stable_set(g, s)) return bad(what + ": set is not stable");
  }
  if (step.tag == ToolTag::T_STABLE_SETS) {
    if (step.t < 5) return bad(what + ": needs at least five sets");
    if (static_cast<int>(step.sets.size()) != step.t)
      return bad(what + ": set count does not match t");
    VertexSet all;
    size_t total = 0;
    for (const VertexSet& s : step.sets) {
      total += s.size();
      all = vs_union(all, s);
    }
    if (all.size() != total) return bad(what + ": sets are not pairwise disjoint");
    if (all.empty()) return bad(what + ": nothing to remove");
    InducedSubgraph rest = induced_subgraph(g, vs_diff(all_vertices(g), all));
    if (clique_number(rest.graph) > clique_number(g) - (step.t - 1))
      return bad(what + ": clique number drops by less than t-1");
    return std::nullopt;
  }
  if (step.sets.size() != 1) return bad(what + ": expects exactly one set");
  const VertexSet& s = step.sets[0];
  if (s.empty()) return bad(what + ": nothing to remove");
  if (step.tag == ToolTag::PERFECT_REMAINDER_SET) {
    InducedSubgraph rest = induced_subgraph(g, vs_diff(all_vertices(g), s));
    if (!is_chordal(rest.graph)) return bad(what + ": remainder is not chordal");
    return std::nullopt;
  }
  // good: meets every maximum clique; very good: every maximal one
  std::vector<VertexSet> cliques = maximal_cliques(g);
  size_t w = 0;
  for (const VertexSet& k : cliques) w = std::max(w, k.size());
  for (const VertexSet& k : cliques) {
    if (step.tag == ToolTag::GOOD_STABLE_SET && k.size() != w) continue;
    if (vs_disjoint(k, s))
      return bad(what + ": misses the clique {" + [&] {
        std::string out;
        for (size_t i = 0; i < k.size(); ++i)
          out += (i ? "," : "") + std::to_string(k[i]);
        return out;
      }() + "}");
  }
  return std::nullopt;
}

// ---- good and very good stable sets ----
//
// A maximal clique contains every clone class it touches whole, so it is
// enough to search for a clique transversal among the classes of the clone
// quotient; the lift takes the smallest member of each chosen class.
// Iterative deepening keeps answers small and reproducible: the three-vertex
// path answers with its middle vertex, not with its two ends.

namespace detail {

inline bool transversal_dfs(const Graph& q, const std::vector<VertexSet>& targets,
                            std::vector<int>& chosen, size_t limit, long& budget) {
  if (--budget < 0) return false;
  const VertexSet* open = nullptr;
  for (const VertexSet& t : targets) {
    bool hit = false;
    for (int c : t)
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) {
        hit = true;
        break;
      }
    if (!hit) {
      open = &t;
      break;
    }
  }
  if (!open) return true;
  if (chosen.size() == limit) return false;
  for (int c : *open) {
    bool fits = true;
    for (int d : chosen)
      if (q.has_edge(c, d)) {
        fits = false;
        break;
      }
    if (!fits) continue;
    chosen.push_back(c);
    if (transversal_dfs(q, targets, chosen, limit, budget)) return true;
    chosen.pop_back();
  }
  return false;
}

inline std::optional<VertexSet> class_transversal(const CloneClasses& cq,
                                                  const std::vector<VertexSet>& targets) {
  for (size_t limit = 1; limit <= static_cast<size_t>(cq.quotient.n()); ++limit) {
    std::vector<int> chosen;
    long budget = 500000;
    if (transversal_dfs(cq.quotient, targets, chosen, limit, budget)) {
      VertexSet out;
      for (int c : chosen) out.push_back(cq.classes[c][0]);
      return vs_sorted(out);
    }
    if (budget < 0) break;  // out of moves; report absent and let callers cope
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<VertexSet> find_very_good_stable_set(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  CloneClasses cq = clone_quotient(g);
  return detail::class_transversal(cq, maximal_cliques(cq.quotient));
}

inline std::optional<VertexSet> find_good_stable_set(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  CloneClasses cq = clone_quotient(g);
  std::vector<VertexSet> all = maximal_cliques(cq.quotient);
  // weight a quotient clique by the vertices it stands for
  size_t best = 0;
  std::vector<size_t> weight(all.size(), 0);
  for (size_t i = 0; i < all.size(); ++i) {
    for (int c : all[i]) weight[i] += cq.classes[c].size();
    best = std::max(best, weight[i]);
  }
  std::vector<VertexSet> targets;
  for (size_t i = 0; i < all.size(); ++i)
    if (weight[i] == best) targets.push_back(all[i]);
  return detail::class_transversal(cq, targets);
}

// Compose a coloring of the remainder with one tool step.  The remainder is
// g minus the removed vertices, in ascending vertex order; `sub` must color
// it properly.  Violated step invariants are rejected by name.
inline Coloring apply_tool(const Graph& g, const ToolStep& step, const Coloring& sub) {
  if (auto flaw = check_tool_step(g, step)) throw graph_error("apply_tool: " + *flaw);
  VertexSet removed = detail::step_removal(step);
  VertexSet rest = vs_diff(all_vertices(g), removed);
  InducedSubgraph is = induced_subgraph(g, rest);
  ColorCheck chk = verify_coloring(is.graph, sub);
  if (!chk.ok) throw graph_error("apply_tool: remainder " + chk.message);
  std::vector<int> out(g.n(), -1);
  for (int i = 0; i < is.graph.n(); ++i) out[is.to_host[i]] = sub.assignment[i];
  switch (step.tag) {
    case ToolTag::LOW_DEGREE_VERTEX: {
      std::vector<char> used(g.n() + 1, 0);
      for (int u : g.neighbors(step.vertex))
        if (out[u] >= 0) used[out[u]] = 1;
      int c = 0;
      while (used[c]) ++c;
      out[step.vertex] = c;
      break;
    }
    case ToolTag::GOOD_STABLE_SET:
    case ToolTag::VERY_GOOD_STABLE_SET:
    case ToolTag::PERFECT_REMAINDER_SET:
      for (int v : step.sets[0]) out[v] = sub.num_colors;
      break;
    case ToolTag::T_STABLE_SETS:
      for (int i = 0; i < step.t; ++i)
        for (int v : step.sets[i]) out[v] = sub.num_colors + i;
      break;
  }
  // keep the palette dense: later merges index arrays by color value
  std::vector<int> dense(*std::max_element(out.begin(), out.end()) + 1, -1);
  for (int v : out) dense[v] = 0;
  int next = 0;
  for (int& d : dense)
    if (d == 0) d = next++;
  for (int& v : out) v = dense[v];
  return make_coloring(out);
}

namespace detail {

// Greedy on a perfect elimination order, coloring later vertices first: the
// already-colored neighbors of order[i] form a clique, so omega colors
// always suffice.
inline Coloring peo_greedy(const Graph& g, const EliminationOrder& eo) {
  std::vector<int> color(g.n(), -1);
  std::vector<char> used(g.n() + 1, 0);
  for (int i = g.n() - 1; i >= 0; --i) {
    int v = eo.order[i];
    for (int u : g.neighbors(v))
      if (color[u] >= 0) used[color[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    for (int u : g.neighbors(v))
      if (color[u] >= 0) used[color[u]] = 0;
  }
  return make_coloring(color);
}

// Lift a family of stable sets of the base through a blowup map: the j-th
// vertex of a bag joins the j-th listed set containing its base vertex.
// Bags larger than their cover multiplicity leave their tail to the
// remainder; smaller bags simply fill fewer sets.
inline std::vector<VertexSet> lift_cover(const BlowupMap& map,
                                         const std::vector<std::vector<int>>& family) {
  std::vector<VertexSet> out(family.size());
  for (size_t v = 0; v < map.bags.size(); ++v) {
    std::vector<size_t> covering;
    for (size_t i = 0; i < family.size(); ++i)
      if (std::find(family[i].begin(), family[i].end(), static_cast<int>(v)) !=
          family[i].end())
        covering.push_back(i);
    const VertexSet& bag = map.bags[v];
    size_t take = std::min(covering.size(), bag.size());
    for (size_t j = 0; j < take; ++j) out[covering[j]].push_back(bag[j]);
  }
  for (VertexSet& s : out) s = vs_sorted(s);
  return out;
}

inline std::vector<int> apply_perm(const std::vector<int>& perm, const std::vector<int>& set) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int v : set) out.push_back(perm[v]);
  return out;
}

inline std::vector<std::vector<int>> perm_family(const std::vector<int>& perm,
                                                 const std::vector<std::vector<int>>& family) {
  std::vector<std::vector<int>> out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(apply_perm(perm, s));
  return out;
}

// ---- the driver ----

struct ColorEngine {
  OracleCaps caps = oracle_caps();
  std::vector<TraceEntry> trace;
  int exact_uses = 0;
  int rescue_uses = 0;

  Coloring run(const Graph& g) {
    if (g.n() == 0) return Coloring{};
    std::vector<VertexSet> comps = components(g);
    if (comps.size() == 1) return run_connected(g);
    // components share one palette
    std::vector<int> out(g.n(), -1);
    for (const VertexSet& comp : comps) {
      InducedSubgraph is = induced_subgraph(g, comp);
      Coloring c = run_connected(is.graph);
      for (int i = 0; i < is.graph.n(); ++i) out[is.to_host[i]] = c.assignment[i];
    }
    return make_coloring(out);
  }

  Coloring run_connected(const Graph& g) {
    if (g.n() == 1) return make_coloring({0});
    VertexSet uni = universal_vertices(g);
    if (!uni.empty()) {
      // each universal vertex needs a fresh color on top of the rest
      VertexSet rest = vs_diff(all_vertices(g), uni);
      std::vector<int> out(g.n(), -1);
      int palette = 0;
      if (!rest.empty()) {
        InducedSubgraph is = induced_subgraph(g, rest);
        Coloring sub = run(is.graph);
        for (int i = 0; i < is.graph.n(); ++i) out[is.to_host[i]] = sub.assignment[i];
        palette = sub.num_colors;
      }
      for (size_t i = 0; i < uni.size(); ++i) out[uni[i]] = palette + static_cast<int>(i);
      trace.push_back({"universal-peel", uni, static_cast<int>(uni.size())});
      return make_coloring(out);
    }
    if (auto cut = find_clique_cutset(g)) return split_on_cutset(g, *cut);
    ChordalityResult ch = chordality(g);
    if (ch.chordal()) {
      Coloring c = peo_greedy(g, *ch.peo);
      trace.push_back({"chordal-greedy", {}, c.num_colors});
      return c;
    }
    ClassifyResult r = classify(g);
    int omega = clique_number(g);
    std::string branch;
    std::optional<ToolStep> step;
    if (r.cert) step = leaf_step(g, *r.cert, omega, &branch);
    else step = generic_step(g, omega, &branch);
    if (!step) {
      ++rescue_uses;
      return exact_color(g);
    }
    return take_step(g, *step, branch);
  }

  Coloring take_step(const Graph& g, const ToolStep& step, const std::string& branch) {
    VertexSet removed = step_removal(step);
    InducedSubgraph is = induced_subgraph(g, vs_diff(all_vertices(g), removed));
    Coloring sub = run(is.graph);
    Coloring full = apply_tool(g, step, sub);
    trace.push_back({branch, removed, full.num_colors - sub.num_colors});
    return full;
  }

  Coloring split_on_cutset(const Graph& g, const CliqueCutset& cut) {
    InducedSubgraph la = induced_subgraph(g, vs_sorted(vs_union(cut.clique, cut.side_a)));
    InducedSubgraph rb = induced_subgraph(g, vs_sorted(vs_union(cut.clique, cut.side_b)));
    Coloring ca = run(la.graph);
    Coloring cb = run(rb.graph);
    // the side with the larger palette keeps its colors; the other side's
    // cutset colors are permuted to agree and the rest move to free slots
    const InducedSubgraph& keep = ca.num_colors >= cb.num_colors ? la : rb;
    const InducedSubgraph& move = ca.num_colors >= cb.num_colors ? rb : la;
    const Coloring& ck = ca.num_colors >= cb.num_colors ? ca : cb;
    const Coloring& cm = ca.num_colors >= cb.num_colors ? cb : ca;
    std::vector<int> out(g.n(), -1);
    for (int i = 0; i < keep.graph.n(); ++i) out[keep.to_host[i]] = ck.assignment[i];
    std::vector<int> perm(cm.num_colors, -1);
    std::vector<char> used(ck.num_colors, 0);
    for (int v : cut.clique) {
      perm[cm.assignment[move.to_sub[v]]] = out[v];
      used[out[v]] = 1;
    }
    int slot = 0;
    for (int c = 0; c < cm.num_colors; ++c) {
      if (perm[c] != -1) continue;
      while (used[slot]) ++slot;
      perm[c] = slot++;
    }
    for (int i = 0; i < move.graph.n(); ++i) {
      int host = move.to_host[i];
      if (out[host] == -1) out[host] = perm[cm.assignment[i]];
    }
    trace.push_back({"cutset-split", cut.clique, 0});
    return make_coloring(out);
  }

  Coloring exact_color(const Graph& g) {
    if (g.n() > caps.chi_cap)
      throw graph_error("coloring: no applicable step on " + std::to_string(g.n()) +
                        " vertices, above the exact cap " + std::to_string(caps.chi_cap));
    OracleResult r = exact_chromatic(g);
    ++exact_uses;
    trace.push_back({"exact-oracle", {}, r.value});
    return r.coloring;
  }

  // the generic toolbox, strongest first
  std::optional<ToolStep> generic_step(const Graph& g, int omega, std::string* branch) {
    if (auto s = find_very_good_stable_set(g)) {
      *branch = "very-good-set";
      return ToolStep{ToolTag::VERY_GOOD_STABLE_SET, -1, {*s}, 0};
    }
    if (auto s = find_good_stable_set(g)) {
      *branch = "good-set";
      return ToolStep{ToolTag::GOOD_STABLE_SET, -1, {*s}, 0};
    }
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) <= bound54(omega) - 1) {
        *branch = "low-degree";
        return ToolStep{ToolTag::LOW_DEGREE_VERTEX, v, {}, 0};
      }
    return std::nullopt;
  }

  std::optional<ToolStep> leaf_step(const Graph& g, const StructureCertificate& cert,
                                    int omega, std::string* branch) {
    if (auto s = generic_step(g, omega, branch)) return s;
    return family_step(g, cert, branch);
  }

  // Certificate-guided peels.  Many certificates admit a sharper reading as a
  // blowup of a small base with an explicit color recipe; try those from the
  // most structured base down.
  std::optional<ToolStep> family_step(const Graph& g, const StructureCertificate& cert,
                                      std::string* branch) {
    if (auto m = match_blowup(g, {BaseName::H1, 0, 0}))
      if (auto s = h1_step(g, *m, branch)) return s;
    if (auto m = match_blowup(g, {BaseName::F3, 0, 0}))
      if (auto s = f3_step(g, *m, branch)) return s;
    if (auto m = match_blowup(g, {BaseName::H5, 0, 0}))
      if (auto s = h5_step(g, *m, branch)) return s;
    if (auto m = match_blowup(g, {BaseName::H2, 0, 0}))
      if (auto s = h2_step(g, *m, branch)) return s;
    if (cert_kind(cert) == CertKind::BLOWUP) {
      const BlowupMap& map = std::get<BlowupCert>(cert.body).map;
      if (map.base.name == BaseName::FKL)
        if (auto s = fkl_step(g, map, branch, 0)) return s;
    }
    if (cert_kind(cert) == CertKind::BAND || cert_kind(cert) == CertKind::BELT ||
        cert_kind(cert) == CertKind::BOILER) {
      // with no good set and no low-degree vertex these shapes collapse to a
      // blowup of F_{2,0}: cliques around two leaves of the chordal side,
      // their common neighbors, the far clique and its attachments
      if (auto m = match_blowup(g, {BaseName::FKL, 2, 0}))
        if (auto s = fkl_step(g, *m, branch, 0)) return s;
    }
    return std::nullopt;
  }

  // try one cover family; validation decides whether the recipe fits
  std::optional<ToolStep> cover_step(const Graph& g, const BlowupMap& map,
                                     const std::vector<std::vector<int>>& family,
                                     std::string* branch, const std::string& name) {
    ToolStep st{ToolTag::T_STABLE_SETS, -1, lift_cover(map, family),
                static_cast<int>(family.size())};
    for (const VertexSet& s : st.sets)
      if (s.empty()) return std::nullopt;  // recipe degenerated; try another
    if (check_tool_step(g, st)) return std::nullopt;
    *branch = name;
    return st;
  }

  // Petersen, hexagon form: five stable sets covering every base vertex
  // exactly twice.  With two vertices taken from every bag the clique number
  // drops by four.
  std::optional<ToolStep> h1_step(const Graph& g, const BlowupMap& map, std::string* branch) {
    static const std::vector<std::vector<int>> cover = {
        {1, 2, 6, 9}, {2, 3, 4, 7}, {1, 3, 5, 8}, {0, 4, 6, 8}, {0, 5, 7, 9}};
    if (auto s = cover_step(g, map, cover, branch, "h1-cover")) return s;
    // the unit-bag graph itself ends up here (3-regular, no good set); one
    // vertex over a maximum stable set of the base leaves three disjoint
    // edges, and that remainder is chordal
    for (const auto& c : cover) {
      VertexSet s;
      for (int v : c)
        if (!map.bags[v].empty()) s.push_back(map.bags[v][0]);
      if (s.empty()) continue;
      ToolStep st{ToolTag::PERFECT_REMAINDER_SET, -1, {vs_sorted(s)}, 0};
      if (!check_tool_step(g, st)) {
        *branch = "h1-chordal-remainder";
        return st;
      }
    }
    return std::nullopt;
  }

  // Two recipes: seven sets covering everything twice, and -- when the bags
  // of x,v4,v5,v6 (up to symmetry) are small -- six sets covering the other
  // five bags twice and the small ones once.
  std::optional<ToolStep> f3_step(const Graph& g, const BlowupMap& map, std::string* branch) {
    static const std::vector<std::vector<int>> full = {
        {6, 3, 5}, {7, 1, 5}, {8, 1, 3}, {6, 4}, {7, 0}, {8, 2}, {0, 2, 4}};
    if (auto s = cover_step(g, map, full, branch, "f3-cover")) return s;
    static const std::vector<std::vector<int>> skew = {
        {0, 2, 4}, {1, 7}, {1, 8}, {0, 7}, {2, 8}, {6, 3, 5}};
    static const std::vector<int> rot = {2, 3, 4, 5, 0, 1, 7, 8, 6};
    static const std::vector<int> flip = {0, 5, 4, 3, 2, 1, 8, 7, 6};
    std::vector<std::vector<int>> perms;
    std::vector<int> id(9);
    for (int i = 0; i < 9; ++i) id[i] = i;
    perms.push_back(id);
    perms.push_back(rot);
    perms.push_back(apply_perm(rot, rot));
    perms.push_back(flip);
    perms.push_back(apply_perm(rot, flip));
    perms.push_back(apply_perm(apply_perm(rot, rot), flip));
    for (const auto& p : perms)
      if (auto s = cover_step(g, map, perm_family(p, skew), branch, "f3-cover-skew"))
        return s;
    return std::nullopt;
  }

  // five sets pairing each pentagon bag with the second vertex two steps on
  std::optional<ToolStep> h5_step(const Graph& g, const BlowupMap& map, std::string* branch) {
    static const std::vector<std::vector<int>> cover = {
        {0, 2}, {1, 3}, {2, 4}, {3, 0}, {4, 1}};
    return cover_step(g, map, cover, branch, "h5-cover");
  }

  // three recipes keyed to which of the a,b,c bags are inhabited, plus their
  // mirror images
  std::optional<ToolStep> h2_step(const Graph& g, const BlowupMap& map, std::string* branch) {
    static const std::vector<std::vector<int>> center = {
        {0, 2, 4}, {1, 3, 5}, {8, 0, 4}, {8, 1, 3}, {2, 5}};
    static const std::vector<std::vector<int>> wings = {
        {0, 2, 4}, {1, 3, 5}, {2, 5}, {6, 4}, {7, 1}, {8, 0, 3}};
    static const std::vector<std::vector<int>> side = {
        {0, 2, 4}, {1, 3, 5}, {1, 3}, {2, 5}, {8, 0, 4}};
    static const std::vector<int> mirror = {4, 3, 2, 1, 0, 5, 7, 6, 8};
    if (auto s = cover_step(g, map, center, branch, "h2-cover-center")) return s;
    if (auto s = cover_step(g, map, wings, branch, "h2-cover-wings")) return s;
    if (auto s = cover_step(g, map, perm_family(mirror, wings), branch, "h2-cover-wings"))
      return s;
    if (auto s = cover_step(g, map, side, branch, "h2-cover-side")) return s;
    if (auto s = cover_step(g, map, perm_family(mirror, side), branch, "h2-cover-side"))
      return s;
    return std::nullopt;
  }

  // ---- F_{k,l} blowups ----

  bool map_ok(const Graph& g, const BlowupMap& m) const {
    return validate_certificate(g, StructureCertificate{BlowupCert{m}, ""}).ok();
  }

  // fold the clique mate of an uninhabited stable slot into the hub bag
  std::optional<BlowupMap> fkl_drop_pair(const Graph& g, const BlowupMap& map, bool a_side,
                                         int i) const {
    const FklLayout lo = fkl_layout(map.base.k, map.base.l);
    int k = map.base.k - (a_side ? 1 : 0);
    int l = map.base.l - (a_side ? 0 : 1);
    const FklLayout nu = fkl_layout(k, l);
    BlowupMap out;
    out.base = {BaseName::FKL, k, l};
    out.bags.assign(nu.z + 1, {});
    const VertexSet *hub_extra, *hub;
    auto old_a = [&](int t) { return map.bags[lo.A[t]]; };
    auto old_b = [&](int t) { return map.bags[lo.B[t]]; };
    int at = 0;
    for (int t = 0; t <= map.base.k; ++t) {
      if (a_side && t == i) continue;
      out.bags[nu.A[at++]] = old_a(t);
    }
    at = 1;
    for (int t = 1; t <= map.base.k; ++t) {
      if (a_side && t == i) continue;
      out.bags[nu.U[at++ - 1]] = map.bags[lo.U[t - 1]];
    }
    int bt = 0;
    for (int t = 0; t <= map.base.l; ++t) {
      if (!a_side && t == i) continue;
      out.bags[nu.B[bt++]] = old_b(t);
    }
    bt = 1;
    for (int t = 1; t <= map.base.l; ++t) {
      if (!a_side && t == i) continue;
      out.bags[nu.W[bt++ - 1]] = map.bags[lo.W[t - 1]];
    }
    hub = a_side ? &out.bags[nu.A[0]] : &out.bags[nu.B[0]];
    hub_extra = a_side ? &map.bags[lo.A[i]] : &map.bags[lo.B[i]];
    VertexSet merged = vs_union(*hub, *hub_extra);
    if (a_side) out.bags[nu.A[0]] = merged;
    else out.bags[nu.B[0]] = merged;
    out.bags[nu.x] = map.bags[lo.x];
    out.bags[nu.y] = map.bags[lo.y];
    out.bags[nu.z] = map.bags[lo.z];
    if (!map_ok(g, out)) return std::nullopt;
    return out;
  }

  BlowupMap fkl_swap_sides(const BlowupMap& map) const {
    const FklLayout lo = fkl_layout(map.base.k, map.base.l);
    const FklLayout nu = fkl_layout(map.base.l, map.base.k);
    BlowupMap out;
    out.base = {BaseName::FKL, map.base.l, map.base.k};
    out.bags.assign(nu.z + 1, {});
    for (int t = 0; t <= map.base.l; ++t) out.bags[nu.A[t]] = map.bags[lo.B[t]];
    for (int t = 1; t <= map.base.l; ++t) out.bags[nu.U[t - 1]] = map.bags[lo.W[t - 1]];
    for (int t = 0; t <= map.base.k; ++t) out.bags[nu.B[t]] = map.bags[lo.A[t]];
    for (int t = 1; t <= map.base.k; ++t) out.bags[nu.W[t - 1]] = map.bags[lo.U[t - 1]];
    out.bags[nu.x] = map.bags[lo.y];
    out.bags[nu.y] = map.bags[lo.x];
    out.bags[nu.z] = map.bags[lo.z];
    return out;
  }

  // with the a-hub, y and z all uninhabited, b_l can play z and w_l can play
  // the a-hub one size down
  std::optional<BlowupMap> fkl_rerole(const Graph& g, const BlowupMap& map) const {
    const FklLayout lo = fkl_layout(0, map.base.l);
    const FklLayout nu = fkl_layout(0, map.base.l - 1);
    BlowupMap out;
    out.base = {BaseName::FKL, 0, map.base.l - 1};
    out.bags.assign(nu.z + 1, {});
    out.bags[nu.A[0]] = map.bags[lo.W[map.base.l - 1]];
    out.bags[nu.z] = map.bags[lo.B[map.base.l]];
    for (int t = 0; t < map.base.l; ++t) out.bags[nu.B[t]] = map.bags[lo.B[t]];
    for (int t = 1; t < map.base.l; ++t) out.bags[nu.W[t - 1]] = map.bags[lo.W[t - 1]];
    out.bags[nu.x] = map.bags[lo.x];
    out.bags[nu.y] = map.bags[lo.y];
    if (!map_ok(g, out)) return std::nullopt;
    return out;
  }

  std::optional<ToolStep> fkl_step(const Graph& g, const BlowupMap& map, std::string* branch,
                                   int depth) {
    if (depth > 64 || map.base.name != BaseName::FKL) return std::nullopt;
    const int k = map.base.k, l = map.base.l;
    const FklLayout lo = fkl_layout(k, l);
    auto bag = [&](int slot) -> const VertexSet& { return map.bags[slot]; };
    for (int i = 1; i <= k; ++i)
      if (bag(lo.U[i - 1]).empty())
        if (auto m = fkl_drop_pair(g, map, true, i)) return fkl_step(g, *m, branch, depth + 1);
    for (int j = 1; j <= l; ++j)
      if (bag(lo.W[j - 1]).empty())
        if (auto m = fkl_drop_pair(g, map, false, j)) return fkl_step(g, *m, branch, depth + 1);
    if (k > l) return fkl_step(g, fkl_swap_sides(map), branch, depth + 1);
    if (k <= 1 && l <= 1) {
      // these embed in the ten-vertex bases, whose recipes are sharper
      if (auto m = match_blowup(g, {BaseName::H5, 0, 0}))
        if (auto s = h5_step(g, *m, branch)) return s;
      if (auto m = match_blowup(g, {BaseName::H1, 0, 0}))
        if (auto s = h1_step(g, *m, branch)) return s;
      return std::nullopt;
    }
    if (k == 0 && bag(lo.A[0]).empty())
      if (auto m = fkl_rerole(g, map))
        if (auto s = fkl_step(g, *m, branch, depth + 1)) return s;
    // all matched stable slots plus z at once: what is left is the two hub
    // cliques under x and y, joined by the x-y edge, which is chordal
    {
      bool thin = bag(lo.z).size() <= 1;
      VertexSet s = bag(lo.z);
      for (int i = 1; i <= k && thin; ++i) {
        if (bag(lo.U[i - 1]).size() > 1) thin = false;
        s = vs_union(s, bag(lo.U[i - 1]));
      }
      for (int j = 1; j <= l && thin; ++j) {
        if (bag(lo.W[j - 1]).size() > 1) thin = false;
        s = vs_union(s, bag(lo.W[j - 1]));
      }
      if (thin && !s.empty()) {
        ToolStep st{ToolTag::PERFECT_REMAINDER_SET, -1, {vs_sorted(s)}, 0};
        if (!check_tool_step(g, st)) {
          *branch = "fkl-chordal-remainder";
          return st;
        }
      }
    }
    if (l < 2 || k > 2) return std::nullopt;
    const int b1 = lo.B[1], b2 = lo.B[2], w1 = lo.W[0], w2 = lo.W[1];
    const int x = lo.x, y = lo.y, z = lo.z;
    const int af = k == 0 ? lo.A[0] : lo.A[1];
    const int as = k == 2 ? lo.A[2] : af;
    // singleton stable slots: five sets around the chosen a-vertices
    {
      const std::vector<std::vector<int>> v1 = {{af, b1}, {b2, x}, {z, x}, {as, y}, {z, y}};
      const std::vector<std::vector<int>> v2 = {{af, b1}, {b2, x}, {z, x}, {as, y}, {z, x}};
      const std::vector<std::vector<int>> v3 = {{af, b1}, {b2, x}, {z, x}, {as}, {z, x}};
      if (auto s = cover_step(g, map, v1, branch, "fkl-cover")) return s;
      if (auto s = cover_step(g, map, v2, branch, "fkl-cover")) return s;
      if (auto s = cover_step(g, map, v3, branch, "fkl-cover")) return s;
    }
    // wide stable slots: recipes keyed to k
    if (k == 0) {
      const int a0 = lo.A[0];
      const std::vector<std::vector<int>> main = {
          {b1, w2, a0}, {b2, w1, a0}, {z, w1, w2}, {b1, x}, {a0, y}};
      const std::vector<std::vector<int>> alt = {
          {b1, w2, a0}, {b2, w1, a0}, {z, w1, w2}, {b1, x}, {a0, w1, w2}};
      if (auto s = cover_step(g, map, main, branch, "fkl-cover")) return s;
      if (auto s = cover_step(g, map, alt, branch, "fkl-cover")) return s;
    } else if (k == 1) {
      const int a0 = lo.A[0], a1 = lo.A[1], u1 = lo.U[0];
      const std::vector<std::vector<int>> main = {
          {b1, w2, u1, a0}, {b2, w1, a1}, {x, z}, {y, z}, {a1, y}};
      if (auto s = cover_step(g, map, main, branch, "fkl-cover")) return s;
    } else {
      const int a1 = lo.A[1], a2 = lo.A[2], u1 = lo.U[0], u2 = lo.U[1];
      const std::vector<std::vector<int>> main = {
          {a1, b1, u2, w2}, {a2, b2, u1, w1}, {x, b1}, {y, a1}, {z, u1, u2, w1, w2}};
      if (auto s = cover_step(g, map, main, branch, "fkl-cover")) return s;
    }
    return std::nullopt;
  }
};

}  // namespace detail

inline ColorResult color(const Graph& g) {
  ColorResult out;
  P6C4Verdict verdict = is_p6c4_free(g);
  if (verdict.witness) {
    out.witness = verdict.witness;
    return out;
  }
  detail::ColorEngine eng;
  out.coloring = eng.run(g);
  out.trace = std::move(eng.trace);
  out.exact_uses = eng.exact_uses;
  out.rescue_uses = eng.rescue_uses;
  ColorCheck chk = verify_coloring(g, out.coloring);
  if (!chk.ok) throw graph_error("coloring: produced " + chk.message);
  out.bounds.omega = clique_number(g);
  for (int v = 0; v < g.n(); ++v) out.bounds.delta = std::max(out.bounds.delta, g.degree(v));
  out.bounds.bound54 = bound54(out.bounds.omega);
  out.bounds.reed = reed_bound(out.bounds.delta, out.bounds.omega);
  out.bounds.chi_alg = out.coloring.num_colors;
  return out;
}

// Color along a caller-supplied certificate.  The certificate is validated
// first; its shape picks the first step and recursion handles the rest.
inline Coloring color_special(const Graph& g, const StructureCertificate& cert) {
  Validation val = validate_certificate(g, cert);
  if (!val.ok()) throw graph_error("color_special: " + *val.violation);
  detail::ColorEngine eng;
  switch (cert_kind(cert)) {
    case CertKind::CLIQUE_CUTSET:
      return eng.split_on_cutset(g, std::get<CliqueCutsetCert>(cert.body).cut);
    case CertKind::CHORDAL_LEAF:
      return detail::peo_greedy(g, std::get<ChordalLeafCert>(cert.body).order);
    case CertKind::UNIVERSAL_VERTEX:
      return eng.run(g);
    default: {
      std::string branch;
      int omega = clique_number(g);
      if (auto step = eng.leaf_step(g, cert, omega, &branch))
        return eng.take_step(g, *step, branch);
      return eng.run(g);
    }
  }
}

inline BoundReport bounds(const Graph& g, bool with_exact = false) {
  BoundReport r;
  r.omega = exact_clique(g).value;
  for (int v = 0; v < g.n(); ++v) r.delta = std::max(r.delta, g.degree(v));
  r.bound54 = bound54(r.omega);
  r.reed = reed_bound(r.delta, r.omega);
  if (!is_p6c4_free(g).witness) {
    detail::ColorEngine eng;
    r.chi_alg = eng.run(g).num_colors;
  }
  if (with_exact && g.n() <= oracle_caps().chi_cap) r.chi_exact = exact_chromatic(g).value;
  return r;
}

}  // namespace p6c4
