#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "p6c4/bases.hpp"
#include "p6c4/detect.hpp"
#include "p6c4/graph.hpp"
#include "p6c4/oracle.hpp"

using namespace p6c4;

namespace {

Graph tight_example(int q) {
  std::vector<Edge> es;
  auto bag = [&](int i, int t) { return i * q + t; };
  for (int i = 0; i < 5; ++i)
    for (int s = 0; s < q; ++s) {
      for (int t = s + 1; t < q; ++t) es.emplace_back(bag(i, s), bag(i, t));
      for (int t = 0; t < q; ++t) es.emplace_back(bag(i, s), bag((i + 1) % 5, t));
    }
  return Graph::build(5 * q, es);
}

Graph random_graph(int n, int edge_percent, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 99);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_percent) es.emplace_back(i, j);
  return Graph::build(n, es);
}

Graph random_connected_graph(int n, int edge_percent, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 99);
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) {
    // random spanning tree keeps it connected
    std::uniform_int_distribution<int> anchor(0, i - 1);
    es.emplace_back(anchor(rng), i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_percent) es.emplace_back(i, j);
  return Graph::build(n, es);
}

// K4 minus one edge; square-free although its central edge is in two triangles
Graph diamond() { return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph bowtie() { return Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

const std::vector<BaseName> kAllBases = {
    BaseName::C5, BaseName::C6, BaseName::H1, BaseName::H2, BaseName::H3,
    BaseName::H4, BaseName::H5, BaseName::F1, BaseName::F2, BaseName::F3};

}  // namespace

TEST_CASE("witness patterns and validity checks") {
  CHECK(witness_pattern(WitnessKind::P4).n() == 4);
  CHECK(witness_pattern(WitnessKind::P6).n() == 6);
  CHECK(witness_pattern(WitnessKind::C4).n() == 4);
  CHECK(witness_pattern(WitnessKind::C5).n() == 5);
  CHECK(witness_pattern(WitnessKind::C6).n() == 6);
  CHECK(witness_pattern(WitnessKind::F1).n() == 8);
  CHECK(witness_pattern(WitnessKind::F2).n() == 8);
  CHECK(witness_pattern(WitnessKind::F3).n() == 9);
  CHECK(witness_pattern(WitnessKind::TWO_P3).n() == 6);
  CHECK(witness_pattern(WitnessKind::DART).n() == 5);
  CHECK_THROWS_AS(witness_pattern(WitnessKind::HOLE), graph_error);

  CHECK(witness_kind_str(WitnessKind::TWO_P3) == "2P3");
  CHECK(witness_kind_str(WitnessKind::HOLE) == "hole");

  Graph c5 = base_c5();
  CHECK(witness_valid(c5, {WitnessKind::C5, {0, 1, 2, 3, 4}}));
  CHECK_FALSE(witness_valid(c5, {WitnessKind::C5, {0, 1, 2, 3, 3}}));  // repeat
  CHECK_FALSE(witness_valid(c5, {WitnessKind::C5, {0, 2, 1, 3, 4}}));  // wrong order
  CHECK_FALSE(witness_valid(c5, {WitnessKind::C5, {0, 1, 2, 3, 9}}));  // out of range
  CHECK_FALSE(witness_valid(c5, {WitnessKind::C4, {0, 1, 2, 3}}));     // chordless but open

  Graph c7 = cycle_graph(7);
  CHECK(witness_valid(c7, {WitnessKind::HOLE, {0, 1, 2, 3, 4, 5, 6}}));
  CHECK_FALSE(witness_valid(c7, {WitnessKind::HOLE, {0, 1, 2}}));       // too short
  CHECK_FALSE(witness_valid(c7, {WitnessKind::HOLE, {0, 1, 2, 4, 5}}));  // not a cycle

  CHECK(witness_valid(base_f1(), {WitnessKind::F1, {0, 1, 2, 3, 4, 5, 6, 7}}));
  CHECK(witness_valid(base_dart(), {WitnessKind::DART, {0, 1, 2, 3, 4}}));
}

TEST_CASE("induced path search") {
  Graph p6 = path_graph(6);
  auto w = find_induced_path(p6, 6);
  REQUIRE(w.has_value());
  CHECK(w->kind == WitnessKind::P6);
  CHECK(w->vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(witness_valid(p6, *w));

  auto p4 = find_induced_path(p6, 4);
  REQUIRE(p4.has_value());
  CHECK(p4->kind == WitnessKind::P4);
  CHECK(p4->vertices == std::vector<int>{0, 1, 2, 3});

  // the Petersen graph has induced five-vertex paths but none on six vertices
  Graph pet = base_petersen();
  CHECK(find_induced_path(pet, 5).has_value());
  CHECK_FALSE(find_induced_path(pet, 6).has_value());

  CHECK_FALSE(find_induced_path(path_graph(3), 4).has_value());
  CHECK_FALSE(find_induced_path(complete_graph(4), 3).has_value());
  CHECK(find_induced_path(complete_graph(4), 2).has_value());
  CHECK_THROWS_AS(find_induced_path(p6, 0), graph_error);
}

TEST_CASE("induced cycle search") {
  auto c5 = find_induced_cycle(base_c5(), 5);
  REQUIRE(c5.has_value());
  CHECK(c5->kind == WitnessKind::C5);
  CHECK(c5->vertices == std::vector<int>{0, 1, 2, 3, 4});

  Graph c6 = base_c6();
  CHECK_FALSE(find_induced_cycle(c6, 4).has_value());
  CHECK_FALSE(find_induced_cycle(c6, 5).has_value());
  auto h = find_induced_cycle(c6, 6);
  REQUIRE(h.has_value());
  CHECK(h->kind == WitnessKind::C6);
  CHECK(witness_valid(c6, *h));

  // Petersen: girth five, and the hexagon w1..w6 is induced
  Graph pet = base_petersen();
  CHECK(find_induced_cycle(pet, 5).has_value());
  auto pc6 = find_induced_cycle(pet, 6);
  REQUIRE(pc6.has_value());
  CHECK(witness_valid(pet, *pc6));
  CHECK_FALSE(find_induced_cycle(pet, 4).has_value());

  auto c7 = find_induced_cycle(cycle_graph(7), 7);
  REQUIRE(c7.has_value());
  CHECK(c7->kind == WitnessKind::HOLE);
  CHECK(witness_valid(cycle_graph(7), *c7));

  // every four-cycle of K4 has a chord
  CHECK_FALSE(find_induced_cycle(complete_graph(4), 4).has_value());
  CHECK_THROWS_AS(find_induced_cycle(base_c5(), 2), graph_error);
}

TEST_CASE("fixed pattern search") {
  auto f1 = find_special(base_f1(), WitnessKind::F1);
  REQUIRE(f1.has_value());
  CHECK(witness_valid(base_f1(), *f1));

  auto f3 = find_special(base_f3(), WitnessKind::F3);
  REQUIRE(f3.has_value());
  CHECK(witness_valid(base_f3(), *f3));

  CHECK_FALSE(contains_induced(base_f2(), WitnessKind::F1));
  CHECK_FALSE(contains_induced(base_f1(), WitnessKind::F3));
  CHECK(contains_induced(base_f3(), WitnessKind::C6));
  CHECK(contains_induced(base_dart(), WitnessKind::DART));

  Graph two_paths = Graph::build(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  CHECK(contains_induced(two_paths, WitnessKind::TWO_P3));
  CHECK_FALSE(contains_induced(path_graph(6), WitnessKind::TWO_P3));

  // cross-check against the subset-enumeration oracle
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(7, 20 + static_cast<int>(seed % 5) * 15, 8100 + seed);
    CHECK(contains_induced(g, WitnessKind::DART) == oracle_contains_induced(g, base_dart()));
    CHECK(contains_induced(g, WitnessKind::TWO_P3) ==
          oracle_contains_induced(g, pattern_2p3()));
  }
}

TEST_CASE("square detection and class membership") {
  auto sq = find_c4(cycle_graph(4));
  REQUIRE(sq.has_value());
  CHECK(witness_valid(cycle_graph(4), *sq));

  // the diamond is square-free even though its middle edge lies in two triangles
  CHECK_FALSE(find_c4(diamond()).has_value());

  for (BaseName b : kAllBases) {
    Graph g = base_graph(b);
    auto v = is_p6c4_free(g);
    CHECK(v.free);
    CHECK_FALSE(v.witness.has_value());
  }
  CHECK(is_p6c4_free(base_fkl(2, 2)).free);
  CHECK(is_p6c4_free(tight_example(2)).free);

  auto long_path = is_p6c4_free(path_graph(7));
  CHECK_FALSE(long_path.free);
  REQUIRE(long_path.witness.has_value());
  CHECK(long_path.witness->kind == WitnessKind::P6);
  CHECK(witness_valid(path_graph(7), *long_path.witness));

  // when both violations exist the square is reported
  Graph both = Graph::build(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  auto v = is_p6c4_free(both);
  CHECK_FALSE(v.free);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->kind == WitnessKind::C4);

  for (uint64_t seed = 0; seed < 60; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 25 + static_cast<int>(seed % 4) * 15, 4400 + seed);
    bool expect = !oracle_contains_induced(g, cycle_graph(4)) && !oracle_has_induced_path(g, 6);
    auto verdict = is_p6c4_free(g);
    CHECK(verdict.free == expect);
    if (verdict.witness) CHECK(witness_valid(g, *verdict.witness));
  }
}

TEST_CASE("chordality, elimination orders and holes") {
  auto valid_peo = [](const Graph& g, const EliminationOrder& peo) {
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[peo.order[i]] = i;
    for (int i = 0; i < g.n(); ++i) {
      VertexSet later;
      for (int w : g.neighbors(peo.order[i]))
        if (pos[w] > i) later.push_back(w);
      if (!is_clique(g, later)) return false;
    }
    return true;
  };

  for (const Graph& g : {complete_graph(5), path_graph(6), diamond(), bowtie(),
                         Graph::build(4, {}), Graph::build(0, {})}) {
    auto r = chordality(g);
    REQUIRE(r.chordal());
    CHECK(valid_peo(g, *r.peo));
    CHECK_FALSE(r.hole.has_value());
  }

  for (BaseName b : kAllBases) {
    Graph g = base_graph(b);
    auto r = chordality(g);
    CHECK_FALSE(r.chordal());
    REQUIRE(r.hole.has_value());
    CHECK(r.hole->kind == WitnessKind::HOLE);
    CHECK(witness_valid(g, *r.hole));
    CHECK(r.hole->vertices.size() >= 5);  // the bases are square-free
  }

  auto sq = chordality(cycle_graph(4));
  REQUIRE(sq.hole.has_value());
  CHECK(sq.hole->vertices.size() == 4);

  for (uint64_t seed = 0; seed < 60; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 30 + static_cast<int>(seed % 4) * 15, 9700 + seed);
    bool any_hole = false;
    for (int k = 4; k <= n && !any_hole; ++k)
      any_hole = oracle_has_induced_cycle(g, k);
    CHECK(is_chordal(g) == !any_hole);
  }
}

TEST_CASE("simplicial and universal vertices") {
  CHECK(simplicial_vertices(path_graph(4)) == VertexSet{0, 3});
  CHECK(simplicial_vertices(complete_graph(4)) == VertexSet{0, 1, 2, 3});
  CHECK(simplicial_vertices(base_c5()).empty());
  CHECK(simplicial_vertices(base_dart()) == VertexSet{1, 3, 4});

  CHECK(universal_vertices(base_dart()) == VertexSet{2});
  CHECK(universal_vertices(complete_graph(3)) == VertexSet{0, 1, 2});
  CHECK(universal_vertices(base_c5()).empty());
  CHECK(universal_vertices(Graph::build(1, {})) == VertexSet{0});
  for (BaseName b : kAllBases) CHECK(universal_vertices(base_graph(b)).empty());
}

TEST_CASE("clique cutset search") {
  auto mid = find_clique_cutset(path_graph(3));
  REQUIRE(mid.has_value());
  CHECK(mid->clique == VertexSet{1});
  CHECK(vs_union(mid->side_a, mid->side_b) == VertexSet{0, 2});

  auto bow = find_clique_cutset(bowtie());
  REQUIRE(bow.has_value());
  CHECK(bow->clique == VertexSet{2});

  for (const Graph& g : {base_c5(), base_f1(), base_petersen(), base_h5(), complete_graph(4)})
    CHECK_FALSE(find_clique_cutset(g).has_value());

  CHECK_THROWS_AS(find_clique_cutset(Graph::build(4, {{0, 1}, {2, 3}})), graph_error);

  for (uint64_t seed = 0; seed < 80; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Graph g = random_connected_graph(n, 10 + static_cast<int>(seed % 5) * 12, 3300 + seed);
    auto cut = find_clique_cutset(g);
    CHECK(cut.has_value() == oracle_has_clique_cutset(g));
    if (!cut) continue;
    CHECK(is_clique(g, cut->clique));
    CHECK_FALSE(cut->side_a.empty());
    CHECK_FALSE(cut->side_b.empty());
    CHECK(vs_disjoint(cut->side_a, cut->side_b));
    VertexSet all = vs_union(cut->clique, vs_union(cut->side_a, cut->side_b));
    CHECK(all == all_vertices(g));
    CHECK(anticomplete_between(g, cut->side_a, cut->side_b));
  }
}

TEST_CASE("maximal clique enumeration") {
  auto tri = maximal_cliques(Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}));
  REQUIRE(tri.size() == 1);
  CHECK(tri[0] == VertexSet{0, 1, 2});

  // dual witness that edges may sit inside several maximal cliques
  auto dia = maximal_cliques(diamond());
  REQUIRE(dia.size() == 2);
  CHECK(dia[0] == VertexSet{0, 1, 2});
  CHECK(dia[1] == VertexSet{0, 1, 3});

  CHECK(maximal_cliques(base_c5()).size() == 5);
  CHECK(maximal_cliques(base_petersen()).size() == 15);  // the edges
  CHECK(maximal_cliques(Graph::build(4, {})) ==
        std::vector<VertexSet>{{0}, {1}, {2}, {3}});
  CHECK(maximal_cliques(complete_graph(4)).size() == 1);

  auto tight = maximal_cliques(tight_example(2));
  CHECK(tight.size() == 5);
  for (const auto& k : tight) CHECK(k.size() == 4);

  CHECK(clique_number(tight_example(3)) == 6);
  CHECK(clique_number(Graph::build(0, {})) == 0);

  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 30 + static_cast<int>(seed % 4) * 15, 5500 + seed);
    auto ks = maximal_cliques(g);
    CHECK(clique_number(g) == exact_clique(g).value);
    CHECK(std::is_sorted(ks.begin(), ks.end()));
    CHECK(std::adjacent_find(ks.begin(), ks.end()) == ks.end());
    for (const auto& k : ks) {
      CHECK(is_clique(g, k));
      // maximality: no outside vertex extends it
      for (int v = 0; v < g.n(); ++v) {
        if (vs_contains(k, v)) continue;
        CHECK(!vs_subset(k, g.neighbors(v)));
      }
    }
    CHECK(maximal_cliques(g) == ks);  // deterministic
  }
}
