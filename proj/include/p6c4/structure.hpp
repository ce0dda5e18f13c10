#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "p6c4/bases.hpp"
#include "p6c4/detect.hpp"
#include "p6c4/graph.hpp"
#include "p6c4/trivially_perfect.hpp"

// Decomposition engine.  classify() peels one layer of structure off a
// connected square-free P6-free graph: a clique cutset, a universal vertex,
// a perfect elimination order, or a global shape (blowup of one of the fixed
// base graphs, band, belt, boiler).  Certificates are plain data; nothing in
// them depends on how they were found, and validate_certificate() re-checks
// every clause from scratch so a certificate can be trusted across process
// boundaries.

namespace p6c4 {

// ---- neighborhood traces around a five-hole ----

// a vertex whose hole trace fits none of the recognized shapes; `trace` holds
// the hole vertices it sees.
struct TraceViolation {
  int v = -1;
  VertexSet trace;
};

// hole[i] is adjacent to hole[i+1 mod 5].  Every other vertex is filed by its
// exact trace on the hole: a (all five), t[i] ({i-1,i,i+1}), w[i] ({i}),
// x[i] ({i,i+1}), leftover (none).  Anything else lands in `violations`.
struct C5Partition {
  std::array<int, 5> hole{};
  VertexSet a;
  std::array<VertexSet, 5> t{};
  std::array<VertexSet, 5> w{};
  std::array<VertexSet, 5> x{};
  VertexSet leftover;
  std::vector<TraceViolation> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline void check_hole(const Graph& g, const int* hole, int len) {
  for (int i = 0; i < len; ++i) {
    if (hole[i] < 0 || hole[i] >= g.n()) throw graph_error("hole vertex out of range");
    for (int j = i + 1; j < len; ++j) {
      if (hole[i] == hole[j]) throw graph_error("hole vertex repeated");
      bool want = (j - i == 1) || (i == 0 && j == len - 1);
      if (g.has_edge(hole[i], hole[j]) != want)
        throw graph_error("vertices do not induce a hole in the given order");
    }
  }
}

// positions 0..len-1 of the hole vertices v is adjacent to
inline std::vector<int> hole_trace(const Graph& g, int v, const int* hole, int len) {
  std::vector<int> pos;
  for (int i = 0; i < len; ++i)
    if (g.has_edge(v, hole[i])) pos.push_back(i);
  return pos;
}

// does `pos` equal the cyclic run start, start+1, ..., start+run_len-1?
inline bool is_cyclic_run(const std::vector<int>& pos, int start, int run_len, int len) {
  if (static_cast<int>(pos.size()) != run_len) return false;
  std::vector<int> want;
  for (int i = 0; i < run_len; ++i) want.push_back((start + i) % len);
  std::sort(want.begin(), want.end());
  return pos == want;
}

inline VertexSet lift_positions(const std::vector<int>& pos, const int* hole) {
  VertexSet out;
  for (int p : pos) out.push_back(hole[p]);
  return vs_sorted(out);
}

}  // namespace detail

inline C5Partition partition_around_c5(const Graph& g, const std::array<int, 5>& hole) {
  detail::check_hole(g, hole.data(), 5);
  C5Partition p;
  p.hole = hole;
  std::vector<char> on_hole(g.n(), 0);
  for (int h : hole) on_hole[h] = 1;
  for (int v = 0; v < g.n(); ++v) {
    if (on_hole[v]) continue;
    std::vector<int> pos = detail::hole_trace(g, v, hole.data(), 5);
    int sz = static_cast<int>(pos.size());
    if (sz == 0) {
      p.leftover.push_back(v);
      continue;
    }
    if (sz == 5) {
      p.a.push_back(v);
      continue;
    }
    bool filed = false;
    for (int i = 0; i < 5 && !filed; ++i) {
      if (sz == 1 && pos[0] == i) {
        p.w[i].push_back(v);
        filed = true;
      } else if (sz == 2 && detail::is_cyclic_run(pos, i, 2, 5)) {
        p.x[i].push_back(v);
        filed = true;
      } else if (sz == 3 && detail::is_cyclic_run(pos, (i + 4) % 5, 3, 5)) {
        p.t[i].push_back(v);
        filed = true;
      }
    }
    if (!filed) p.violations.push_back({v, detail::lift_positions(pos, hole.data())});
  }
  return p;
}

// ---- neighborhood traces around a six-hole ----

// s sees all six, a[i] sees {i-1,i,i+1}, b[i] sees {i-1,i,i+1,i+2},
// d[i] (i in 0..2) sees the opposite pair {i,i+3}, l sees nothing.
struct C6Partition {
  std::array<int, 6> hole{};
  VertexSet s;
  std::array<VertexSet, 6> a{};
  std::array<VertexSet, 6> b{};
  std::array<VertexSet, 3> d{};
  VertexSet l;
  std::vector<TraceViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline C6Partition partition_around_c6(const Graph& g, const std::array<int, 6>& hole) {
  detail::check_hole(g, hole.data(), 6);
  C6Partition p;
  p.hole = hole;
  std::vector<char> on_hole(g.n(), 0);
  for (int h : hole) on_hole[h] = 1;
  for (int v = 0; v < g.n(); ++v) {
    if (on_hole[v]) continue;
    std::vector<int> pos = detail::hole_trace(g, v, hole.data(), 6);
    int sz = static_cast<int>(pos.size());
    if (sz == 0) {
      p.l.push_back(v);
      continue;
    }
    if (sz == 6) {
      p.s.push_back(v);
      continue;
    }
    bool filed = false;
    if (sz == 2 && pos[1] - pos[0] == 3) {
      p.d[pos[0]].push_back(v);
      filed = true;
    }
    for (int i = 0; i < 6 && !filed; ++i) {
      if (sz == 3 && detail::is_cyclic_run(pos, (i + 5) % 6, 3, 6)) {
        p.a[i].push_back(v);
        filed = true;
      } else if (sz == 4 && detail::is_cyclic_run(pos, (i + 5) % 6, 4, 6)) {
        p.b[i].push_back(v);
        filed = true;
      }
    }
    if (!filed) p.violations.push_back({v, detail::lift_positions(pos, hole.data())});
  }
  return p;
}

// ---- blowup recognition ----

// base shape of a blowup; k,l carry the parameters when name == FKL.
struct BlowupBase {
  BaseName name = BaseName::C5;
  int k = 0, l = 0;
};

inline Graph blowup_base_graph(const BlowupBase& b) {
  if (b.name == BaseName::FKL) return base_fkl(b.k, b.l);
  return base_graph(b.name);
}

inline std::string blowup_base_str(const BlowupBase& b) {
  if (b.name == BaseName::FKL)
    return "F[" + std::to_string(b.k) + "," + std::to_string(b.l) + "]";
  return base_name_str(b.name);
}

// bags[i] is the (possibly empty) clique substituted for base vertex i.
struct BlowupMap {
  BlowupBase base;
  std::vector<VertexSet> bags;
};

namespace detail {

// lexicographically-first injective map of q into h preserving adjacency and
// non-adjacency among mapped vertices
inline bool embed_induced(const Graph& q, const Graph& h, std::vector<int>& img, int at) {
  if (at == q.n()) return true;
  for (int cand = 0; cand < h.n(); ++cand) {
    if (h.degree(cand) < q.degree(at)) continue;
    bool fits = true;
    for (int prev = 0; prev < at && fits; ++prev) {
      if (img[prev] == cand) fits = false;
      else if (q.has_edge(prev, at) != h.has_edge(img[prev], cand)) fits = false;
    }
    if (!fits) continue;
    img[at] = cand;
    if (embed_induced(q, h, img, at + 1)) return true;
  }
  img[at] = -1;
  return false;
}

}  // namespace detail

// A graph is a blowup of a twin-free base exactly when its clone quotient
// embeds in the base as an induced subgraph: two bags visible to the rest of
// the graph in the same way would be a single clone class, so nonempty bags
// are forced to be the clone classes.  The embedding found is the
// lexicographically first one, which makes the bag layout reproducible.
inline std::optional<BlowupMap> match_blowup(const Graph& g, const BlowupBase& base) {
  Graph h = blowup_base_graph(base);
  if (g.n() == 0) return std::nullopt;
  CloneClasses cq = clone_quotient(g);
  if (cq.quotient.n() > h.n()) return std::nullopt;
  std::vector<int> img(cq.quotient.n(), -1);
  if (!detail::embed_induced(cq.quotient, h, img, 0)) return std::nullopt;
  BlowupMap map;
  map.base = base;
  map.bags.assign(h.n(), {});
  for (int c = 0; c < cq.quotient.n(); ++c) map.bags[img[c]] = cq.classes[c];
  if (!is_blowup_of(g, h, map.bags)) throw graph_error("blowup embedding inconsistent");
  return map;
}

inline int empty_bag_count(const BlowupMap& map) {
  int k = 0;
  for (const auto& b : map.bags)
    if (b.empty()) ++k;
  return k;
}

// ---- certificate part lists ----

// seven cliques; q[1],r2 and q[2],r3 play symmetric roles around the
// q[0]-q[4]-q[3] spine.
struct BandParts {
  std::array<VertexSet, 5> q{};
  VertexSet r2, r3;
};

// five cliques plus two attachment sets r2,r3 that need not be cliques.
struct BeltParts {
  std::array<VertexSet, 5> q{};
  VertexSet r2, r3;
};

// q,a,b cliques; m splits into blocks pairwise anticomplete, each wired to
// its own slice of b; l is an optional chordal-side remainder hanging off a.
// The blocks are listed so that every vertex of a is complete to a prefix of
// them and anticomplete to the rest; the last block contains b_star, a
// b-vertex with no neighbor in a, and m_star is one of its m-neighbors.
struct BoilerParts {
  VertexSet q, a, b, l, m;
  std::vector<VertexSet> m_block, b_block;  // aligned; size >= 3
  int b_star = -1;
  int m_star = -1;
  std::vector<int> a_prefix;  // a[i] is complete to this many leading blocks
  int j = 0;                  // 1-based index of the first block missed by some a-vertex
  VertexSet a_l;              // a-vertices with a neighbor in l
  VertexSet a_l_strict;       // a-vertices with a neighbor in the non-universal part of l
};

// ---- certificates ----

struct CliqueCutsetCert {
  CliqueCutset cut;
};
struct UniversalVertexCert {
  int v = -1;
};
struct ChordalLeafCert {
  EliminationOrder order;
};
struct BlowupCert {
  BlowupMap map;
};
struct BandCert {
  BandParts parts;
};
struct BeltCert {
  BeltParts parts;
};
struct BoilerCert {
  BoilerParts parts;
};

// alternative order mirrors CertKind
using CertBody = std::variant<CliqueCutsetCert, UniversalVertexCert, ChordalLeafCert,
                              BlowupCert, BandCert, BeltCert, BoilerCert>;

enum class CertKind {
  CLIQUE_CUTSET,
  UNIVERSAL_VERTEX,
  CHORDAL_LEAF,
  BLOWUP,
  BAND,
  BELT,
  BOILER
};

inline std::string cert_kind_str(CertKind k) {
  switch (k) {
    case CertKind::CLIQUE_CUTSET: return "clique-cutset";
    case CertKind::UNIVERSAL_VERTEX: return "universal-vertex";
    case CertKind::CHORDAL_LEAF: return "chordal-leaf";
    case CertKind::BLOWUP: return "blowup";
    case CertKind::BAND: return "band";
    case CertKind::BELT: return "belt";
    case CertKind::BOILER: return "boiler";
  }
  return "?";
}

struct StructureCertificate {
  CertBody body;
  std::string provenance;  // free-form: branch taken, hole used, relabelings
};

inline CertKind cert_kind(const StructureCertificate& c) {
  return static_cast<CertKind>(c.body.index());
}

// ---- certificate validation ----

struct Validation {
  std::optional<std::string> violation;  // first failed clause, by name
  bool ok() const { return !violation.has_value(); }
};

namespace detail {

inline Validation fail(std::string msg) { return Validation{std::move(msg)}; }

inline std::string ids(const VertexSet& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

// checks that the listed sets partition 0..n-1; `what` names the certificate
inline std::optional<std::string> check_partition(int n, const std::vector<const VertexSet*>& sets,
                                                  const std::string& what) {
  std::vector<int> owner(n, -1);
  for (size_t i = 0; i < sets.size(); ++i)
    for (int v : *sets[i]) {
      if (v < 0 || v >= n) return what + ": vertex " + std::to_string(v) + " out of range";
      if (owner[v] != -1) return what + ": vertex " + std::to_string(v) + " listed twice";
      owner[v] = static_cast<int>(i);
    }
  for (int v = 0; v < n; ++v)
    if (owner[v] == -1) return what + ": vertex " + std::to_string(v) + " not covered";
  return std::nullopt;
}

inline bool has_neighbor_in(const Graph& g, int v, const VertexSet& s) {
  for (int u : s)
    if (u != v && g.has_edge(v, u)) return true;
  return false;
}

inline bool complete_to(const Graph& g, int v, const VertexSet& s) {
  for (int u : s)
    if (u != v && !g.has_edge(v, u)) return false;
  return true;
}

inline bool universal_in(const Graph& g, int v, const VertexSet& s) {
  return complete_to(g, v, s);
}

// (P4,2P3)-freeness of an induced subgraph, reported against host ids
inline std::optional<std::string> check_p4_2p3_free(const Graph& g, const VertexSet& s,
                                                    const std::string& what) {
  InducedSubgraph sub = induced_subgraph(g, s);
  if (auto w = find_induced_path(sub.graph, 4)) {
    VertexSet host;
    for (int v : w->vertices) host.push_back(sub.to_host[v]);
    return what + ": induced four-vertex path " + ids(host);
  }
  if (auto w = find_special(sub.graph, WitnessKind::TWO_P3)) {
    VertexSet host;
    for (int v : w->vertices) host.push_back(sub.to_host[v]);
    return what + ": two anticomplete three-vertex paths " + ids(host);
  }
  return std::nullopt;
}

// hosts of belts and boilers must be free of squares, six-vertex paths and
// six-holes; the definitions are conditional on that
inline std::optional<std::string> check_host_free(const Graph& g, const std::string& what) {
  auto verdict = is_p6c4_free(g);
  if (verdict.witness)
    return what + ": host contains " + witness_kind_str(verdict.witness->kind);
  if (find_induced_cycle(g, 6)) return what + ": host contains a six-hole";
  return std::nullopt;
}

}  // namespace detail

inline Validation validate_clique_cutset(const Graph& g, const CliqueCutsetCert& c) {
  const auto& cut = c.cut;
  if (auto bad = detail::check_partition(
          g.n(), {&cut.clique, &cut.side_a, &cut.side_b}, "clique-cutset"))
    return detail::fail(*bad);
  if (!is_clique(g, cut.clique)) return detail::fail("clique-cutset: separator is not a clique");
  if (cut.side_a.empty() || cut.side_b.empty())
    return detail::fail("clique-cutset: a side is empty");
  if (!anticomplete_between(g, cut.side_a, cut.side_b))
    return detail::fail("clique-cutset: sides are joined by an edge");
  return {};
}

inline Validation validate_universal_vertex(const Graph& g, const UniversalVertexCert& c) {
  if (c.v < 0 || c.v >= g.n()) return detail::fail("universal-vertex: vertex out of range");
  if (g.degree(c.v) != g.n() - 1)
    return detail::fail("universal-vertex: vertex " + std::to_string(c.v) + " misses a vertex");
  return {};
}

inline Validation validate_chordal_leaf(const Graph& g, const ChordalLeafCert& c) {
  const auto& ord = c.order.order;
  if (static_cast<int>(ord.size()) != g.n())
    return detail::fail("chordal-leaf: order has wrong length");
  std::vector<int> pos(g.n(), -1);
  for (int i = 0; i < g.n(); ++i) {
    if (ord[i] < 0 || ord[i] >= g.n() || pos[ord[i]] != -1)
      return detail::fail("chordal-leaf: order is not a permutation");
    pos[ord[i]] = i;
  }
  for (int i = 0; i < g.n(); ++i) {
    VertexSet later;
    for (int u : g.neighbors(ord[i]))
      if (pos[u] > i) later.push_back(u);
    if (!is_clique(g, later))
      return detail::fail("chordal-leaf: vertex " + std::to_string(ord[i]) +
                          " has non-adjacent later neighbors");
  }
  return {};
}

inline Validation validate_blowup_map(const Graph& g, const BlowupMap& map) {
  if (map.base.name == BaseName::FKL && (map.base.k < 0 || map.base.l < 0))
    return detail::fail("blowup: negative parameters");
  Graph h = blowup_base_graph(map.base);
  if (static_cast<int>(map.bags.size()) != h.n())
    return detail::fail("blowup: bag count does not match base order");
  std::vector<const VertexSet*> sets;
  for (const auto& b : map.bags) sets.push_back(&b);
  if (auto bad = detail::check_partition(g.n(), sets, "blowup")) return detail::fail(*bad);
  for (int i = 0; i < h.n(); ++i)
    if (!is_clique(g, map.bags[i]))
      return detail::fail("blowup: bag " + std::to_string(i) + " is not a clique");
  for (int i = 0; i < h.n(); ++i)
    for (int j = i + 1; j < h.n(); ++j) {
      if (h.has_edge(i, j)) {
        if (!complete_between(g, map.bags[i], map.bags[j]))
          return detail::fail("blowup: bags " + std::to_string(i) + "," + std::to_string(j) +
                              " are not complete");
      } else if (!anticomplete_between(g, map.bags[i], map.bags[j])) {
        return detail::fail("blowup: bags " + std::to_string(i) + "," + std::to_string(j) +
                            " are not anticomplete");
      }
    }
  return {};
}

inline Validation validate_band(const Graph& g, const BandParts& p) {
  std::vector<const VertexSet*> sets = {&p.q[0], &p.q[1], &p.q[2], &p.q[3], &p.q[4],
                                        &p.r2, &p.r3};
  if (auto bad = detail::check_partition(g.n(), sets, "band")) return detail::fail(*bad);
  const char* names[] = {"q1", "q2", "q3", "q4", "q5", "r2", "r3"};
  const VertexSet* parts[] = {&p.q[0], &p.q[1], &p.q[2], &p.q[3], &p.q[4], &p.r2, &p.r3};
  for (int i = 0; i < 7; ++i)
    if (!is_clique(g, *parts[i]))
      return detail::fail(std::string("band: ") + names[i] + " is not a clique");
  auto complete = [&](const VertexSet& a, const VertexSet& b, const char* an, const char* bn)
      -> std::optional<std::string> {
    if (!complete_between(g, a, b))
      return std::string("band: [") + an + "," + bn + "] is not complete";
    return std::nullopt;
  };
  auto empty = [&](const VertexSet& a, const VertexSet& b, const char* an, const char* bn)
      -> std::optional<std::string> {
    if (!anticomplete_between(g, a, b))
      return std::string("band: [") + an + "," + bn + "] is not anticomplete";
    return std::nullopt;
  };
  if (auto bad = complete(p.q[4], vs_union(p.q[0], p.q[3]), "q5", "q1+q4")) return detail::fail(*bad);
  if (auto bad = complete(p.r2, vs_union(vs_union(p.q[0], p.q[1]), p.q[2]), "r2", "q1+q2+q3"))
    return detail::fail(*bad);
  if (auto bad = complete(p.r3, vs_union(vs_union(p.q[1], p.q[2]), p.q[3]), "r3", "q2+q3+q4"))
    return detail::fail(*bad);
  if (auto bad = complete(p.q[1], p.q[2], "q2", "q3")) return detail::fail(*bad);
  if (auto bad = empty(p.q[0], vs_union(vs_union(p.q[2], p.r3), p.q[3]), "q1", "q3+r3+q4"))
    return detail::fail(*bad);
  if (auto bad = empty(p.q[3], vs_union(vs_union(p.q[0], p.q[1]), p.r2), "q4", "q1+q2+r2"))
    return detail::fail(*bad);
  if (auto bad = empty(p.q[4], vs_union(vs_union(p.q[1], p.r2), vs_union(p.q[2], p.r3)), "q5",
                       "q2+r2+q3+r3"))
    return detail::fail(*bad);
  const std::pair<const VertexSet*, const VertexSet*> graded_pairs[] = {
      {&p.q[0], &p.q[1]}, {&p.q[2], &p.q[3]}, {&p.r2, &p.r3}};
  const char* graded_names[] = {"{q1,q2}", "{q3,q4}", "{r2,r3}"};
  for (int i = 0; i < 3; ++i)
    if (!graded_labeling(g, *graded_pairs[i].first, *graded_pairs[i].second).ok())
      return detail::fail(std::string("band: pair ") + graded_names[i] + " is not graded");
  return {};
}

inline Validation validate_belt(const Graph& g, const BeltParts& p) {
  if (auto bad = detail::check_host_free(g, "belt")) return detail::fail(*bad);
  std::vector<const VertexSet*> sets = {&p.q[0], &p.q[1], &p.q[2], &p.q[3], &p.q[4],
                                        &p.r2, &p.r3};
  if (auto bad = detail::check_partition(g.n(), sets, "belt")) return detail::fail(*bad);
  const char* qnames[] = {"q1", "q2", "q3", "q4", "q5"};
  for (int i = 0; i < 5; ++i)
    if (!is_clique(g, p.q[i]))
      return detail::fail(std::string("belt: ") + qnames[i] + " is not a clique");
  if (!complete_between(g, p.q[0], vs_union(vs_union(p.q[1], p.r2), p.q[4])))
    return detail::fail("belt: [q1,q2+r2+q5] is not complete");
  if (!complete_between(g, p.q[3], vs_union(vs_union(p.q[2], p.r3), p.q[4])))
    return detail::fail("belt: [q4,q3+r3+q5] is not complete");
  if (!anticomplete_between(g, p.q[0], vs_union(vs_union(p.q[2], p.r3), p.q[3])))
    return detail::fail("belt: [q1,q3+r3+q4] is not anticomplete");
  if (!anticomplete_between(g, p.q[3], vs_union(p.q[1], p.r2)))
    return detail::fail("belt: [q4,q2+r2] is not anticomplete");
  if (!anticomplete_between(g, p.q[4], vs_union(vs_union(p.q[1], p.r2), vs_union(p.q[2], p.r3))))
    return detail::fail("belt: [q5,q2+r2+q3+r3] is not anticomplete");
  const VertexSet* qq[] = {&p.q[1], &p.q[2]};
  const VertexSet* rr[] = {&p.r2, &p.r3};
  const char* jn[] = {"2", "3"};
  for (int side = 0; side < 2; ++side) {
    const VertexSet &qj = *qq[side], &rj = *rr[side];
    const VertexSet &qo = *qq[1 - side], &ro = *rr[1 - side];
    if (!complete_between(g, qj, rj))
      return detail::fail(std::string("belt: [q") + jn[side] + ",r" + jn[side] +
                          "] is not complete");
    VertexSet other = vs_union(qo, ro);
    for (int v : vs_union(qj, rj))
      if (!detail::has_neighbor_in(g, v, other))
        return detail::fail("belt: vertex " + std::to_string(v) + " has no neighbor across");
    InducedSubgraph sub = induced_subgraph(g, rj);
    for (int i = 0; i < sub.graph.n(); ++i)
      if (sub.graph.degree(i) == sub.graph.n() - 1)
        return detail::fail("belt: vertex " + std::to_string(sub.to_host[i]) +
                            " is universal inside r" + jn[side]);
    // derived properties
    for (size_t i = 0; i < rj.size(); ++i)
      for (size_t k = i + 1; k < rj.size(); ++k) {
        if (g.has_edge(rj[i], rj[k])) continue;
        for (int u : qo)
          if (g.has_edge(rj[i], u) && g.has_edge(rj[k], u))
            return detail::fail("belt: non-adjacent " + std::to_string(rj[i]) + "," +
                                std::to_string(rj[k]) + " share neighbor " + std::to_string(u) +
                                " in q" + jn[1 - side]);
      }
    for (int v : qj)
      if (detail::has_neighbor_in(g, v, ro) && !detail::complete_to(g, v, qo))
        return detail::fail("belt: vertex " + std::to_string(v) + " of q" + jn[side] +
                            " touches r" + jn[1 - side] + " but misses q" + jn[1 - side]);
    if (auto bad = detail::check_p4_2p3_free(g, rj, std::string("belt r") + jn[side]))
      return detail::fail(*bad);
  }
  if (!anticomplete_between(g, p.r2, p.r3))
    return detail::fail("belt: [r2,r3] is not anticomplete");
  return {};
}

inline Validation validate_boiler(const Graph& g, const BoilerParts& p) {
  if (auto bad = detail::check_host_free(g, "boiler")) return detail::fail(*bad);
  if (auto bad = detail::check_partition(g.n(), {&p.q, &p.a, &p.b, &p.l, &p.m}, "boiler"))
    return detail::fail(*bad);
  if (p.q.empty() || p.a.empty() || p.b.empty() || p.m.empty())
    return detail::fail("boiler: one of q,a,b,m is empty");
  if (!is_clique(g, p.q)) return detail::fail("boiler: q is not a clique");
  if (!is_clique(g, p.a)) return detail::fail("boiler: a is not a clique");
  if (!is_clique(g, p.b)) return detail::fail("boiler: b is not a clique");
  if (!complete_between(g, p.q, p.a)) return detail::fail("boiler: [q,a] is not complete");
  if (!complete_between(g, p.q, p.m)) return detail::fail("boiler: [q,m] is not complete");
  if (!complete_between(g, p.b, p.l)) return detail::fail("boiler: [b,l] is not complete");
  if (!anticomplete_between(g, p.q, p.b)) return detail::fail("boiler: [q,b] is not anticomplete");
  if (!anticomplete_between(g, p.q, p.l)) return detail::fail("boiler: [q,l] is not anticomplete");
  if (!anticomplete_between(g, p.l, p.m)) return detail::fail("boiler: [l,m] is not anticomplete");
  if (auto bad = detail::check_p4_2p3_free(g, p.l, "boiler l")) return detail::fail(*bad);
  if (auto bad = detail::check_p4_2p3_free(g, p.m, "boiler m")) return detail::fail(*bad);
  for (int v : p.l)
    if (!detail::has_neighbor_in(g, v, p.a))
      return detail::fail("boiler: vertex " + std::to_string(v) + " of l has no neighbor in a");

  // block structure
  int k = static_cast<int>(p.m_block.size());
  if (k < 3) return detail::fail("boiler: fewer than three blocks");
  if (static_cast<int>(p.b_block.size()) != k)
    return detail::fail("boiler: block lists have different lengths");
  {
    std::vector<const VertexSet*> msets, bsets;
    for (const auto& s : p.m_block) msets.push_back(&s);
    for (const auto& s : p.b_block) bsets.push_back(&s);
    std::vector<int> owner(g.n(), -1);
    int covered = 0;
    for (int i = 0; i < k; ++i) {
      if (p.m_block[i].empty() || p.b_block[i].empty())
        return detail::fail("boiler: block " + std::to_string(i + 1) + " has an empty part");
      for (int v : p.m_block[i]) {
        if (!vs_contains(p.m, v) || owner[v] != -1)
          return detail::fail("boiler: m-blocks do not partition m");
        owner[v] = i;
        ++covered;
      }
    }
    if (covered != static_cast<int>(p.m.size()))
      return detail::fail("boiler: m-blocks do not partition m");
    std::fill(owner.begin(), owner.end(), -1);
    covered = 0;
    for (int i = 0; i < k; ++i)
      for (int v : p.b_block[i]) {
        if (!vs_contains(p.b, v) || owner[v] != -1)
          return detail::fail("boiler: b-blocks do not partition b");
        owner[v] = i;
        ++covered;
      }
    if (covered != static_cast<int>(p.b.size()))
      return detail::fail("boiler: b-blocks do not partition b");
  }
  for (int i = 0; i < k; ++i)
    for (int j2 = i + 1; j2 < k; ++j2)
      if (!anticomplete_between(g, p.m_block[i], p.m_block[j2]))
        return detail::fail("boiler: m-blocks " + std::to_string(i + 1) + "," +
                            std::to_string(j2 + 1) + " are joined by an edge");
  for (int i = 0; i < k; ++i)
    for (int v : p.m_block[i]) {
      if (!detail::has_neighbor_in(g, v, p.b_block[i]))
        return detail::fail("boiler: vertex " + std::to_string(v) +
                            " has no neighbor in its own b-block");
      for (int j2 = 0; j2 < k; ++j2)
        if (j2 != i && detail::has_neighbor_in(g, v, p.b_block[j2]))
          return detail::fail("boiler: vertex " + std::to_string(v) +
                              " reaches a foreign b-block");
    }
  for (int v : p.b)
    if (!detail::has_neighbor_in(g, v, p.m))
      return detail::fail("boiler: vertex " + std::to_string(v) + " of b has no neighbor in m");
  VertexSet first_two = vs_union(vs_union(p.m_block[0], p.b_block[0]),
                                 vs_union(p.m_block[1], p.b_block[1]));
  if (!complete_between(g, p.a, first_two))
    return detail::fail("boiler: [a,block1+block2] is not complete");
  for (int i = 2; i < k; ++i) {
    VertexSet blk = vs_union(p.m_block[i], p.b_block[i]);
    for (int v : p.a) {
      bool some = detail::has_neighbor_in(g, v, blk);
      bool all = detail::complete_to(g, v, blk);
      if (some && !all)
        return detail::fail("boiler: vertex " + std::to_string(v) + " is split on block " +
                            std::to_string(i + 1));
    }
  }
  for (int v : p.a)
    if (detail::complete_to(g, v, p.b))
      return detail::fail("boiler: vertex " + std::to_string(v) + " of a is complete to b");

  // refinement: b_star, m_star, nested prefixes, j and the l-attachment split
  if (!vs_contains(p.b, p.b_star))
    return detail::fail("boiler: b_star is not in b");
  if (detail::has_neighbor_in(g, p.b_star, p.a))
    return detail::fail("boiler: b_star has a neighbor in a");
  if (!vs_contains(p.b_block[k - 1], p.b_star))
    return detail::fail("boiler: b_star is not in the last block");
  if (!vs_contains(p.m, p.m_star) || !g.has_edge(p.b_star, p.m_star))
    return detail::fail("boiler: m_star is not an m-neighbor of b_star");
  if (p.a_prefix.size() != p.a.size())
    return detail::fail("boiler: prefix list has wrong length");
  int jmin = k + 1;
  for (size_t ai = 0; ai < p.a.size(); ++ai) {
    int v = p.a[ai], pref = p.a_prefix[ai];
    if (pref < 2 || pref > k - 1)
      return detail::fail("boiler: prefix of vertex " + std::to_string(v) + " out of range");
    for (int i = 0; i < k; ++i) {
      VertexSet blk = vs_union(p.m_block[i], p.b_block[i]);
      bool want = i < pref;
      if (detail::complete_to(g, v, blk) != want)
        return detail::fail("boiler: vertex " + std::to_string(v) +
                            " breaks its prefix at block " + std::to_string(i + 1));
    }
    jmin = std::min(jmin, pref + 1);
  }
  if (p.j != jmin || p.j < 3 || p.j > k)
    return detail::fail("boiler: stored j does not match the prefixes");
  VertexSet a_l, a_l_strict;
  {
    InducedSubgraph sub = induced_subgraph(g, p.l);
    VertexSet non_universal;
    for (int i = 0; i < sub.graph.n(); ++i)
      if (sub.graph.degree(i) != sub.graph.n() - 1) non_universal.push_back(sub.to_host[i]);
    for (int v : p.a) {
      if (detail::has_neighbor_in(g, v, p.l)) a_l.push_back(v);
      if (detail::has_neighbor_in(g, v, non_universal)) a_l_strict.push_back(v);
    }
  }
  if (a_l != p.a_l) return detail::fail("boiler: stored a_l does not match the graph");
  if (a_l_strict != p.a_l_strict)
    return detail::fail("boiler: stored a_l_strict does not match the graph");
  if (!p.l.empty() && !is_clique(g, p.l)) {
    for (size_t ai = 0; ai < p.a.size(); ++ai) {
      int v = p.a[ai], pref = p.a_prefix[ai];
      if (vs_contains(p.a_l_strict, v) && pref != k - 1)
        return detail::fail("boiler: vertex " + std::to_string(v) +
                            " touches the non-universal part of l but misses a middle block");
      if (!vs_contains(p.a_l, v) && pref != p.j - 1)
        return detail::fail("boiler: vertex " + std::to_string(v) +
                            " avoids l but has prefix other than j-1");
    }
  }
  return {};
}

inline Validation validate_certificate(const Graph& g, const StructureCertificate& cert) {
  return std::visit(
      [&](const auto& c) -> Validation {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CliqueCutsetCert>) return validate_clique_cutset(g, c);
        else if constexpr (std::is_same_v<T, UniversalVertexCert>)
          return validate_universal_vertex(g, c);
        else if constexpr (std::is_same_v<T, ChordalLeafCert>) return validate_chordal_leaf(g, c);
        else if constexpr (std::is_same_v<T, BlowupCert>) return validate_blowup_map(g, c.map);
        else if constexpr (std::is_same_v<T, BandCert>) return validate_band(g, c.parts);
        else if constexpr (std::is_same_v<T, BeltCert>) return validate_belt(g, c.parts);
        else return validate_boiler(g, c.parts);
      },
      cert.body);
}

// ---- classification ----

struct ClassifyResult {
  std::optional<StructureCertificate> cert;
  std::optional<Witness> witness;    // set when the graph is outside the class
  std::optional<std::string> error;  // diagnostic: no decomposition branch applied
  bool ok() const { return cert.has_value(); }
};

namespace detail {

// all induced five-cycles, smallest vertex first, second vertex smaller than
// the last; listed in lexicographic order
inline std::vector<std::array<int, 5>> all_induced_c5(const Graph& g) {
  std::vector<std::array<int, 5>> out;
  for (int v0 = 0; v0 < g.n(); ++v0)
    for (int v1 : g.neighbors(v0)) {
      if (v1 <= v0) continue;
      for (int v2 : g.neighbors(v1)) {
        if (v2 <= v0 || v2 == v1 || g.has_edge(v2, v0)) continue;
        for (int v3 : g.neighbors(v2)) {
          if (v3 <= v0 || v3 == v1 || v3 == v2) continue;
          if (g.has_edge(v3, v0) || g.has_edge(v3, v1)) continue;
          for (int v4 : g.neighbors(v3)) {
            if (v4 <= v1 || v4 == v2 || v4 == v3) continue;  // v4 > v1 kills the reflection
            if (!g.has_edge(v4, v0) || g.has_edge(v4, v1) || g.has_edge(v4, v2)) continue;
            out.push_back({v0, v1, v2, v3, v4});
          }
        }
      }
    }
  return out;
}

inline bool dominating(const Graph& g, const std::vector<int>& set) {
  std::vector<char> near(g.n(), 0);
  for (int v : set) {
    near[v] = 1;
    for (int u : g.neighbors(v)) near[u] = 1;
  }
  for (int v = 0; v < g.n(); ++v)
    if (!near[v]) return false;
  return true;
}

inline std::string hole_str(const int* hole, int len) {
  std::string out;
  for (int i = 0; i < len; ++i) {
    if (i) out += "-";
    out += std::to_string(hole[i]);
  }
  return out;
}

// shared result channel for the branch helpers
struct Branch {
  std::optional<StructureCertificate> cert;
  std::optional<std::string> error;
};

inline Branch branch_fail(std::string msg) { return Branch{std::nullopt, std::move(msg)}; }

inline Branch gate(const Graph& g, StructureCertificate cert) {
  Validation v = validate_certificate(g, cert);
  if (!v.ok())
    return branch_fail("constructed certificate failed validation: " + *v.violation +
                       " [" + cert.provenance + "]");
  return Branch{std::move(cert), std::nullopt};
}

inline Branch match_blowup_gated(const Graph& g, const BlowupBase& base, std::string provenance) {
  auto map = match_blowup(g, base);
  if (!map)
    return branch_fail("expected a blowup of " + blowup_base_str(base) + " [" + provenance + "]");
  return gate(g, StructureCertificate{BlowupCert{*map}, std::move(provenance)});
}

// blowup branch keyed by a triple-tab hexagon
inline Branch classify_f3(const Graph& g, const Witness& f3) {
  std::string prov = "branch=f3 hex=" + hole_str(f3.vertices.data(), 6);
  return match_blowup_gated(g, {BaseName::F3}, prov);
}

// band branch keyed by a three-tab pentagon (x,y,z tabs on consecutive edges)
inline Branch classify_band(const Graph& g, const Witness& f1) {
  std::array<int, 5> hole;
  std::copy_n(f1.vertices.begin(), 5, hole.begin());
  std::string prov = "branch=band hole=" + hole_str(hole.data(), 5);
  C5Partition p = partition_around_c5(g, hole);
  if (!p.ok())
    return branch_fail("unexpected trace of vertex " + std::to_string(p.violations[0].v) +
                       " [" + prov + "]");
  if (!p.a.empty()) return branch_fail("full-trace vertices present [" + prov + "]");
  for (int i = 0; i < 5; ++i)
    if (!p.w[i].empty()) return branch_fail("single-trace vertices present [" + prov + "]");
  if (!p.x[3].empty() || !p.x[4].empty())
    return branch_fail("edge-traces outside the tab range [" + prov + "]");
  // split the middle tab set by which outer tab block it avoids
  VertexSet y1, y4;
  for (int u : p.x[1]) {
    if (!has_neighbor_in(g, u, p.t[3])) y1.push_back(u);
    else if (!has_neighbor_in(g, u, p.t[0])) y4.push_back(u);
    else
      return branch_fail("vertex " + std::to_string(u) + " reaches both outer tab blocks [" +
                         prov + "]");
  }
  BandParts parts;
  parts.q[0] = vs_sorted(vs_union({hole[0]}, p.t[0]));
  parts.q[3] = vs_sorted(vs_union({hole[3]}, p.t[3]));
  parts.q[4] = vs_sorted(vs_union({hole[4]}, p.t[4]));
  VertexSet s2 = vs_sorted(vs_union(vs_union({hole[1]}, p.t[1]), vs_union(p.x[0], y1)));
  VertexSet s3 = vs_sorted(vs_union(vs_union({hole[2]}, p.t[2]), vs_union(p.x[2], y4)));
  for (int u : s2)
    (complete_to(g, u, parts.q[0]) ? parts.r2 : parts.q[1]).push_back(u);
  for (int u : s3)
    (complete_to(g, u, parts.q[3]) ? parts.r3 : parts.q[2]).push_back(u);
  return gate(g, StructureCertificate{BandCert{parts}, prov});
}

// hexagon branch: one of the four C6-based blowup shapes
inline Branch classify_c6(const Graph& g, const Witness& c6) {
  std::array<int, 6> hole;
  std::copy_n(c6.vertices.begin(), 6, hole.begin());
  std::string prov = "branch=c6 hole=" + hole_str(hole.data(), 6);
  if (!dominating(g, c6.vertices))
    return match_blowup_gated(g, {BaseName::H1}, prov + " case=h1-nondominating");
  C6Partition p = partition_around_c6(g, hole);
  if (!p.ok())
    return branch_fail("unexpected trace of vertex " + std::to_string(p.violations[0].v) +
                       " [" + prov + "]");
  if (!p.s.empty())
    return branch_fail("full-trace vertices present without a universal vertex [" + prov + "]");
  if (!p.l.empty())
    return branch_fail("dominating hexagon left uncovered vertices [" + prov + "]");
  int first_b = -1;
  bool consecutive = false;
  for (int i = 0; i < 6; ++i) {
    if (p.b[i].empty()) continue;
    if (first_b < 0) first_b = i;
    if (!p.b[(i + 1) % 6].empty()) consecutive = true;
  }
  BlowupBase base{BaseName::H1};
  std::string kase = "h1";
  if (consecutive) {
    base.name = BaseName::H4;
    kase = "h4";
  } else if (first_b >= 0) {
    int i = first_b;
    bool opposite = !p.b[(i + 3) % 6].empty();
    bool flanks = !p.b[(i + 2) % 6].empty() || !p.b[(i + 4) % 6].empty();
    if (opposite || !flanks) {
      base.name = BaseName::H2;
      kase = "h2";
    } else {
      base.name = BaseName::H3;
      kase = "h3";
    }
  }
  return match_blowup_gated(g, base, prov + " case=" + kase);
}

// pentagon-with-hat branch: either the five-tab pentagon or the two-matched-
// cliques family, depending on the low-trace side
inline Branch classify_f2(const Graph& g, const Witness& f2) {
  std::array<int, 5> hole;
  std::copy_n(f2.vertices.begin(), 5, hole.begin());
  bool reflected = false;
  C5Partition p = partition_around_c5(g, hole);
  auto bail = [&](const std::string& why) {
    return branch_fail(why + " [branch=f2 hole=" + hole_str(hole.data(), 5) +
                       (reflected ? " reflected=1" : "") + "]");
  };
  if (!p.ok()) return bail("unexpected trace of vertex " + std::to_string(p.violations[0].v));
  if (!p.x[1].empty() || !p.x[3].empty() || !p.x[4].empty())
    return bail("edge-traces outside the two expected slots");
  if (!p.w[1].empty() || !p.w[2].empty() || !p.w[4].empty())
    return bail("single-traces outside the two expected slots");
  if (!p.w[0].empty() && !p.w[3].empty()) return bail("single-traces on both sides");
  if (!p.w[3].empty()) {
    // move the populated side next to position 1 by reflecting the hole
    hole = {hole[3], hole[2], hole[1], hole[0], hole[4]};
    reflected = true;
    p = partition_around_c5(g, hole);
    if (!p.ok()) return bail("unexpected trace of vertex " + std::to_string(p.violations[0].v));
  }
  if (!p.a.empty()) return bail("full-trace vertices present without a universal vertex");
  const VertexSet &x12 = p.x[0], &x34 = p.x[2], &w1 = p.w[0];
  VertexSet q1 = vs_sorted(vs_union({hole[0]}, p.t[0]));
  VertexSet q4 = vs_sorted(vs_union({hole[3]}, p.t[3]));
  VertexSet q2 = {hole[1]}, r2, q3 = {hole[2]}, r3, q5, r5 = {hole[4]};
  for (int u : p.t[1]) (complete_to(g, u, x12) ? q2 : r2).push_back(u);
  for (int u : p.t[2]) (complete_to(g, u, x34) ? q3 : r3).push_back(u);
  for (int u : p.t[4])
    (complete_to(g, u, x12) && complete_to(g, u, x34) ? q5 : r5).push_back(u);
  q2 = vs_sorted(q2);
  q3 = vs_sorted(q3);
  r5 = vs_sorted(r5);
  std::string prov = "branch=f2 hole=" + hole_str(hole.data(), 5) +
                     (reflected ? " reflected=1" : "");
  if (w1.empty()) return match_blowup_gated(g, {BaseName::H5}, prov + " case=h5");
  if (!r3.empty()) return bail("split tab block opposite the populated side");
  // each low-trace component hangs off either r2 or the far edge-trace clique
  std::vector<VertexSet> zr2, zx34;
  {
    InducedSubgraph sub = induced_subgraph(g, w1);
    std::vector<VertexSet> comps = components(sub.graph);
    std::vector<VertexSet> lifted;
    for (const auto& c : comps) {
      VertexSet host;
      for (int v : c) host.push_back(sub.to_host[v]);
      lifted.push_back(vs_sorted(host));
    }
    std::sort(lifted.begin(), lifted.end());
    for (const auto& z : lifted) {
      bool in_r2 = false, in_x34 = false;
      for (int v : z) {
        if (has_neighbor_in(g, v, r2)) in_r2 = true;
        if (has_neighbor_in(g, v, x34)) in_x34 = true;
      }
      if (in_r2 == in_x34)
        return bail("low-trace component " + ids(z) +
                    (in_r2 ? " hangs off both sides" : " hangs off neither side"));
      (in_r2 ? zr2 : zx34).push_back(z);
    }
  }
  int kk = static_cast<int>(zr2.size()) + 1, ll = static_cast<int>(zx34.size()) + 1;
  FklLayout lo = fkl_layout(kk, ll);
  BlowupMap map;
  map.base = {BaseName::FKL, kk, ll};
  map.bags.assign(lo.z + 1, {});
  VertexSet r2_rest = r2, x34_rest = x34;
  for (size_t i = 0; i < zr2.size(); ++i) {
    VertexSet sup;
    for (int v : r2)
      if (has_neighbor_in(g, v, zr2[i])) sup.push_back(v);
    map.bags[lo.U[i]] = zr2[i];
    map.bags[lo.A[i + 1]] = sup;
    r2_rest = vs_diff(r2_rest, sup);
  }
  for (size_t i = 0; i < zx34.size(); ++i) {
    VertexSet sup;
    for (int v : x34)
      if (has_neighbor_in(g, v, zx34[i])) sup.push_back(v);
    map.bags[lo.W[i]] = zx34[i];
    map.bags[lo.B[i + 1]] = sup;
    x34_rest = vs_diff(x34_rest, sup);
  }
  map.bags[lo.A[0]] = r2_rest;
  map.bags[lo.A[kk]] = q2;
  map.bags[lo.U[kk - 1]] = x12;
  map.bags[lo.B[0]] = x34_rest;
  map.bags[lo.B[ll]] = q4;
  map.bags[lo.W[ll - 1]] = r5;
  map.bags[lo.x] = q1;
  map.bags[lo.y] = q5;
  map.bags[lo.z] = q3;
  return gate(g, StructureCertificate{
                     BlowupCert{map},
                     prov + " case=fkl k=" + std::to_string(kk) + " l=" + std::to_string(ll)});
}

// Group the components of g[m] by shared attachment in b, order the blocks
// so that every a-vertex is complete to a prefix of them (largest coverage
// first, the block of b_star last), and fill the refinement fields.
inline std::optional<std::string> refine_boiler(const Graph& g, BoilerParts& parts) {
  InducedSubgraph sub = induced_subgraph(g, parts.m);
  std::vector<VertexSet> comps;
  for (const auto& c : components(sub.graph)) {
    VertexSet host;
    for (int v : c) host.push_back(sub.to_host[v]);
    comps.push_back(vs_sorted(host));
  }
  std::sort(comps.begin(), comps.end());
  int nc = static_cast<int>(comps.size());
  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<int> b_first(parts.b.size(), -1);
  for (size_t bi = 0; bi < parts.b.size(); ++bi) {
    for (int ci = 0; ci < nc; ++ci) {
      if (!has_neighbor_in(g, parts.b[bi], comps[ci])) continue;
      if (b_first[bi] == -1) b_first[bi] = ci;
      else parent[find(ci)] = find(b_first[bi]);
    }
    if (b_first[bi] == -1)
      return "boiler: vertex " + std::to_string(parts.b[bi]) + " of b has no neighbor in m";
  }
  struct Blk {
    VertexSet m, b, cov;
  };
  std::vector<int> slot(nc, -1);
  std::vector<Blk> blocks;
  for (int ci = 0; ci < nc; ++ci) {
    int r = find(ci);
    if (slot[r] == -1) {
      slot[r] = static_cast<int>(blocks.size());
      blocks.push_back({});
    }
    blocks[slot[r]].m = vs_union(blocks[slot[r]].m, comps[ci]);
  }
  for (size_t bi = 0; bi < parts.b.size(); ++bi)
    blocks[slot[find(b_first[bi])]].b.push_back(parts.b[bi]);
  if (blocks.size() < 3) return std::string("boiler: fewer than three blocks");
  // b_star: smallest b-vertex seeing nothing of a (parts.b is sorted)
  parts.b_star = -1;
  for (int v : parts.b)
    if (!has_neighbor_in(g, v, parts.a)) {
      parts.b_star = v;
      break;
    }
  if (parts.b_star == -1) return std::string("boiler: every vertex of b has a neighbor in a");
  parts.m_star = -1;
  for (int v : parts.m)
    if (g.has_edge(v, parts.b_star)) {
      parts.m_star = v;
      break;
    }
  if (parts.m_star == -1) return std::string("boiler: b_star has no neighbor in m");
  for (auto& blk : blocks)
    for (int v : parts.a)
      if (complete_to(g, v, vs_union(blk.m, blk.b))) blk.cov.push_back(v);
  int star_blk = slot[find(b_first[static_cast<size_t>(
      std::lower_bound(parts.b.begin(), parts.b.end(), parts.b_star) - parts.b.begin())])];
  std::vector<int> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if ((lhs == star_blk) != (rhs == star_blk)) return rhs == star_blk;
    if (blocks[lhs].cov.size() != blocks[rhs].cov.size())
      return blocks[lhs].cov.size() > blocks[rhs].cov.size();
    return blocks[lhs].m[0] < blocks[rhs].m[0];
  });
  parts.m_block.clear();
  parts.b_block.clear();
  for (int idx : order) {
    parts.m_block.push_back(blocks[idx].m);
    parts.b_block.push_back(vs_sorted(blocks[idx].b));
  }
  int k = static_cast<int>(parts.m_block.size());
  parts.a_prefix.clear();
  int jmin = k + 1;
  for (int v : parts.a) {
    int pref = 0;
    for (int i = 0; i < k; ++i)
      if (complete_to(g, v, vs_union(parts.m_block[i], parts.b_block[i]))) ++pref;
    parts.a_prefix.push_back(pref);
    jmin = std::min(jmin, pref + 1);
  }
  parts.j = jmin;
  parts.a_l.clear();
  parts.a_l_strict.clear();
  InducedSubgraph lsub = induced_subgraph(g, parts.l);
  VertexSet non_universal;
  for (int i = 0; i < lsub.graph.n(); ++i)
    if (lsub.graph.degree(i) != lsub.graph.n() - 1) non_universal.push_back(lsub.to_host[i]);
  for (int v : parts.a) {
    if (has_neighbor_in(g, v, parts.l)) parts.a_l.push_back(v);
    if (has_neighbor_in(g, v, non_universal)) parts.a_l_strict.push_back(v);
  }
  return std::nullopt;
}

// last branch: only pentagons remain; the pentagon with the fewest
// triple-trace vertices pins down a blowup of the pentagon, a belt, or a
// boiler
inline Branch classify_final(const Graph& g) {
  CloneClasses cq = clone_quotient(g);
  std::vector<std::array<int, 5>> holes_q = all_induced_c5(cq.quotient);
  if (holes_q.empty()) return branch_fail("no pentagon found in the quotient");
  std::array<int, 5> hole{};
  int best_t = -1;
  for (const auto& hq : holes_q) {
    std::array<int, 5> lift{};
    for (int i = 0; i < 5; ++i) lift[i] = cq.classes[hq[i]][0];
    C5Partition p = partition_around_c5(g, lift);
    if (!p.ok())
      return branch_fail("unexpected trace of vertex " + std::to_string(p.violations[0].v) +
                         " [branch=final hole=" + hole_str(lift.data(), 5) + "]");
    int tsize = 0;
    for (int i = 0; i < 5; ++i) tsize += static_cast<int>(p.t[i].size());
    if (best_t < 0 || tsize < best_t) {
      best_t = tsize;
      hole = lift;
    }
  }
  C5Partition p = partition_around_c5(g, hole);
  std::string prov = "branch=final hole=" + hole_str(hole.data(), 5) +
                     " tabs=" + std::to_string(best_t);
  bool have_x = false;
  for (int i = 0; i < 5; ++i)
    if (!p.x[i].empty()) have_x = true;
  if (!have_x) {
    for (int i = 0; i < 5; ++i)
      if (!p.w[i].empty())
        return branch_fail("single-trace vertex without edge-traces [" + prov + "]");
    if (!p.a.empty())
      return branch_fail("full-trace vertices present without a universal vertex [" + prov + "]");
    BlowupMap map;
    map.base = {BaseName::C5};
    map.bags.assign(5, {});
    for (int i = 0; i < 5; ++i) map.bags[i] = vs_sorted(vs_union({hole[i]}, p.t[i]));
    return gate(g, StructureCertificate{BlowupCert{map}, prov + " case=c5"});
  }
  // relabel the hole so the edge-traces sit on the 1-2 and 3-4 edges, away
  // from position 5, with the single-traces (if any) at position 1
  bool framed = false;
  for (int d = 0; d < 2 && !framed; ++d)
    for (int s = 0; s < 5 && !framed; ++s) {
      std::array<int, 5> cand{};
      for (int i = 0; i < 5; ++i) cand[i] = hole[(s + (d ? 5 - i : i)) % 5];
      C5Partition cp = partition_around_c5(g, cand);
      if (!cp.ok()) continue;
      if (!cp.x[1].empty() || !cp.x[3].empty() || !cp.x[4].empty()) continue;
      if (cp.x[2].empty()) continue;
      if (!cp.w[1].empty() || !cp.w[2].empty() || !cp.w[3].empty() || !cp.w[4].empty()) continue;
      if (!anticomplete_between(g, cp.x[2], cp.t[4])) continue;
      if (!anticomplete_between(g, cp.x[0], cp.t[4])) continue;
      hole = cand;
      p = cp;
      prov += " relabel=" + std::string(d ? "flip" : "rot") + std::to_string(s);
      framed = true;
    }
  if (!framed) return branch_fail("no hole labeling fits the frame [" + prov + "]");
  const VertexSet &x12 = p.x[0], &x34 = p.x[2], &w1 = p.w[0];
  VertexSet w1t, w1n, x34t, x34n, x340;
  for (int v : w1) (has_neighbor_in(g, v, p.t[1]) ? w1t : w1n).push_back(v);
  for (int v : x34) {
    if (has_neighbor_in(g, v, p.t[1])) x34t.push_back(v);
    else if (has_neighbor_in(g, v, w1)) x34n.push_back(v);
    else x340.push_back(v);
  }
  prov += " x12=" + std::to_string(x12.size()) + " x34t=" + std::to_string(x34t.size()) +
          " x34n=" + std::to_string(x34n.size()) + " x340=" + std::to_string(x340.size()) +
          " w1=" + std::to_string(w1.size());
  auto make_belt = [&](std::string why) -> Branch {
    BeltParts parts;
    for (int i : {0, 3, 4}) parts.q[i] = vs_sorted(vs_union({hole[i]}, p.t[i]));
    VertexSet s2 = vs_sorted(vs_union(vs_union({hole[1]}, p.t[1]), vs_union(x12, w1)));
    VertexSet s3 = vs_sorted(vs_union(vs_union({hole[2]}, p.t[2]), x34));
    for (int v : s2) (universal_in(g, v, s2) ? parts.q[1] : parts.r2).push_back(v);
    for (int v : s3) (universal_in(g, v, s3) ? parts.q[2] : parts.r3).push_back(v);
    return gate(g, StructureCertificate{BeltCert{parts}, prov + " case=belt" + why});
  };
  if (x34n.empty()) {
    if (!x340.empty())
      return branch_fail("detached edge-trace vertices but no bridge [" + prov + "]");
    if (!w1n.empty())
      return branch_fail("single-trace vertices reach neither side [" + prov + "]");
    if (!p.a.empty())
      return branch_fail("full-trace vertices present without a universal vertex [" + prov + "]");
    return make_belt("");
  }
  if (p.a.empty()) {
    // no attachment clique: the boiler shape degenerates, but with no
    // chordal remainder the same split is a belt
    if (x340.empty()) return make_belt("-no-attachment");
    return branch_fail("chordal remainder present but no attachment clique [" + prov + "]");
  }
  BoilerParts parts;
  parts.q = vs_sorted(vs_union({hole[0]}, p.t[0]));
  parts.a = p.a;
  parts.b = vs_sorted(vs_union(vs_union({hole[2], hole[3]}, vs_union(p.t[2], p.t[3])),
                               vs_union(x34t, x34n)));
  parts.m = vs_sorted(vs_union(vs_union({hole[1], hole[4]}, vs_union(p.t[1], p.t[4])),
                               vs_union(x12, w1)));
  parts.l = x340;
  if (auto bad = refine_boiler(g, parts)) return branch_fail(*bad + " [" + prov + "]");
  return gate(g, StructureCertificate{BoilerCert{parts}, prov + " case=boiler"});
}

}  // namespace detail

inline ClassifyResult classify(const Graph& g) {
  if (!is_connected(g)) throw graph_error("classify needs a connected graph");
  ClassifyResult out;
  if (g.n() <= 2) {
    ChordalLeafCert leaf{*chordality(g).peo};
    out.cert = StructureCertificate{leaf, "branch=tiny"};
    return out;
  }
  P6C4Verdict verdict = is_p6c4_free(g);
  if (verdict.witness) {
    out.witness = verdict.witness;
    return out;
  }
  if (auto cut = find_clique_cutset(g)) {
    StructureCertificate cert{CliqueCutsetCert{*cut}, "branch=cutset"};
    Validation v = validate_certificate(g, cert);
    if (!v.ok()) out.error = *v.violation;
    else out.cert = std::move(cert);
    return out;
  }
  VertexSet uni = universal_vertices(g);
  if (!uni.empty()) {
    out.cert = StructureCertificate{UniversalVertexCert{uni[0]},
                                    "branch=universal v=" + std::to_string(uni[0])};
    return out;
  }
  ChordalityResult ch = chordality(g);
  if (ch.chordal()) {
    out.cert = StructureCertificate{ChordalLeafCert{*ch.peo}, "branch=chordal"};
    return out;
  }
  detail::Branch br;
  if (auto f3 = find_special(g, WitnessKind::F3)) br = detail::classify_f3(g, *f3);
  else if (auto f1 = find_special(g, WitnessKind::F1)) br = detail::classify_band(g, *f1);
  else if (auto c6 = find_induced_cycle(g, 6)) br = detail::classify_c6(g, *c6);
  else if (auto f2 = find_special(g, WitnessKind::F2)) br = detail::classify_f2(g, *f2);
  else br = detail::classify_final(g);
  if (br.cert) out.cert = std::move(br.cert);
  else out.error = br.error.value_or("no decomposition branch applied");
  return out;
}

}  // namespace p6c4
