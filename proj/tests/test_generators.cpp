#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "p6c4/bases.hpp"
#include "p6c4/detect.hpp"
#include "p6c4/generators.hpp"
#include "p6c4/graph.hpp"
#include "p6c4/oracle.hpp"
#include "p6c4/structure.hpp"

using namespace p6c4;

namespace {

// heaviest base clique after weighting each vertex by its bag size
int heaviest_clique(const Graph& base, const std::vector<int>& sizes) {
  int best = 0;
  for (const VertexSet& k : maximal_cliques(base)) {
    int w = 0;
    for (int v : k) w += sizes[v];
    best = std::max(best, w);
  }
  return best;
}

bool free_of_both(const Graph& g) { return !is_p6c4_free(g).witness.has_value(); }

}  // namespace

TEST_CASE("blowup generation") {
  SECTION("unit bags reproduce the base exactly") {
    for (Graph base : {base_c5(), base_f3(), base_h1(), base_h5(), base_fkl(2, 1)}) {
      BlowupResult r = gen_blowup(base, std::vector<int>(base.n(), 1));
      CHECK(r.graph.n() == base.n());
      CHECK(r.graph.edge_list() == base.edge_list());
    }
  }
  SECTION("the doubled decagon has twenty vertices and clique number four") {
    auto [g, map] = gen_blowup(BlowupBase{BaseName::H1, 0, 0}, std::vector<int>(10, 2));
    CHECK(g.n() == 20);
    CHECK(exact_clique(g).value == 4);
    CHECK(validate_blowup_map(g, map).ok());
    CHECK(free_of_both(g));
  }
  SECTION("empty bags erase their base vertex") {
    BlowupResult r = gen_blowup(base_c5(), {2, 0, 1, 1, 1});
    CHECK(r.graph.n() == 5);
    CHECK(r.bags[1].empty());
  }
  SECTION("clique number is the heaviest base clique") {
    std::mt19937_64 rng(505);
    for (Graph base : {base_c5(), base_f1(), base_f2(), base_f3(), base_h1(), base_h2(),
                       base_h3(), base_h4(), base_h5(), base_fkl(1, 2)}) {
      for (int round = 0; round < 4; ++round) {
        std::vector<int> sizes(base.n());
        for (int& s : sizes) s = static_cast<int>(rng() % 3);
        BlowupResult r = gen_blowup(base, sizes);
        INFO("base n=" << base.n() << " round " << round);
        CHECK(exact_clique(r.graph).value == heaviest_clique(base, sizes));
        CHECK(free_of_both(r.graph));
      }
    }
  }
  SECTION("generated maps survive re-recognition") {
    auto [g, map] = gen_blowup(BlowupBase{BaseName::H2, 0, 0}, {2, 1, 2, 1, 2, 1, 2, 1, 2});
    auto found = match_blowup(g, map.base);
    REQUIRE(found.has_value());
    CHECK(validate_blowup_map(g, *found).ok());
  }
  SECTION("malformed requests are refused") {
    CHECK_THROWS_AS(gen_blowup(base_c5(), {1, 1}), graph_error);
    CHECK_THROWS_AS(gen_blowup(base_c5(), {1, 1, 1, 1, -1}), graph_error);
  }
}

TEST_CASE("parametric family generation") {
  SECTION("the (2,2) shape counts thirteen vertices") {
    auto [g, map] = gen_fkl(2, 2);
    CHECK(g.n() == 13);
    CHECK(g.edge_list() == base_fkl(2, 2).edge_list());
    CHECK(validate_blowup_map(g, map).ok());
  }
  SECTION("the (0,0) shape counts five") {
    CHECK(gen_fkl(0, 0).first.n() == 5);
  }
  SECTION("negative parameters are refused") {
    CHECK_THROWS_AS(gen_fkl(-1, 2), graph_error);
  }
  SECTION("the tight family pins both bounds") {
    auto [g1, m1] = gen_tight(1);
    CHECK(g1.edge_list() == base_c5().edge_list());
    auto [g2, m2] = gen_tight(2);
    CHECK(g2.n() == 10);
    CHECK(exact_clique(g2).value == 4);
    int delta = 0;
    for (int v = 0; v < g2.n(); ++v) delta = std::max(delta, g2.degree(v));
    CHECK(delta == 5);
    CHECK_THROWS_AS(gen_tight(0), graph_error);
  }
}

TEST_CASE("band generation") {
  SECTION("singleton parts with complete pairs collapse to the pentagon") {
    BandSizes sz;
    sz.complete_pairs = true;
    auto [g, parts] = gen_band(1, sz);
    CHECK(g.n() == 5);
    CHECK(g.m() == 5);
    CHECK(find_induced_cycle(g, 5).has_value());
  }
  SECTION("a seed-fixed medium instance validates") {
    BandSizes sz;
    sz.q = {2, 2, 2, 2, 2};
    sz.r2 = 2;
    sz.r3 = 1;
    auto [g, parts] = gen_band(77, sz);
    CHECK(g.n() == 13);
    CHECK(validate_band(g, parts).ok());
    CHECK(free_of_both(g));
  }
  SECTION("identical seeds give identical edge sets") {
    BandSizes sz;
    sz.q = {2, 3, 2, 2, 1};
    sz.r2 = 2;
    auto a = gen_band(9, sz);
    auto b = gen_band(9, sz);
    CHECK(a.first.edge_list() == b.first.edge_list());
  }
  SECTION("the planted violation is caught by name") {
    BandSizes sz;
    sz.q = {2, 1, 1, 2, 1};
    sz.complete_pairs = true;
    auto [g, parts] = gen_band(3, sz, true);
    Validation v = validate_band(g, parts);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violation->find("anticomplete") != std::string::npos);
  }
  SECTION("empty q parts are refused") {
    BandSizes sz;
    sz.q[2] = 0;
    CHECK_THROWS_AS(gen_band(0, sz), graph_error);
  }
  SECTION("random bands stay inside the class") {
    std::mt19937_64 rng(808);
    for (int round = 0; round < 20; ++round) {
      BandSizes sz;
      for (int i = 0; i < 5; ++i) sz.q[i] = 1 + static_cast<int>(rng() % 3);
      sz.r2 = static_cast<int>(rng() % 3);
      sz.r3 = static_cast<int>(rng() % 3);
      auto [g, parts] = gen_band(1000 + round, sz);
      INFO("round " << round);
      CHECK(validate_band(g, parts).ok());
      CHECK(free_of_both(g));
    }
  }
}

TEST_CASE("belt generation") {
  SECTION("the default sizes build a valid belt") {
    auto [g, parts] = gen_belt(5, BeltSizes{});
    CHECK(validate_belt(g, parts).ok());
    CHECK(free_of_both(g));
    CHECK_FALSE(parts.r2.empty());
  }
  SECTION("both r parts at once") {
    BeltSizes sz;
    sz.q = {1, 2, 2, 1, 1};
    sz.r2 = 2;
    sz.r3 = 3;
    auto [g, parts] = gen_belt(11, sz);
    CHECK(validate_belt(g, parts).ok());
    CHECK(free_of_both(g));
  }
  SECTION("identical seeds give identical edge sets") {
    auto a = gen_belt(21, BeltSizes{});
    auto b = gen_belt(21, BeltSizes{});
    CHECK(a.first.edge_list() == b.first.edge_list());
  }
  SECTION("a one-vertex r part is rejected up front") {
    BeltSizes sz;
    sz.r2 = 1;
    CHECK_THROWS_AS(gen_belt(0, sz), graph_error);
  }
  SECTION("an exhausted budget names the last violation") {
    CHECK_THROWS_WITH(gen_belt(0, BeltSizes{}, 0),
                      Catch::Matchers::ContainsSubstring("budget"));
  }
  SECTION("belts classify without error") {
    auto [g, parts] = gen_belt(31, BeltSizes{});
    ClassifyResult c = classify(g);
    INFO(c.error.value_or(""));
    CHECK(c.ok());
  }
}

TEST_CASE("boiler generation") {
  SECTION("fewer than three blocks is refused") {
    BoilerSizes sz;
    sz.k = 2;
    CHECK_THROWS_WITH(gen_boiler(0, sz), Catch::Matchers::ContainsSubstring("three"));
  }
  SECTION("the minimal boiler validates") {
    auto [g, parts] = gen_boiler(2, BoilerSizes{});
    CHECK(validate_boiler(g, parts).ok());
    CHECK(free_of_both(g));
    CHECK(parts.m_block.size() == 3);
  }
  SECTION("an attachment clique rides along") {
    BoilerSizes sz;
    sz.l = 2;
    sz.a = 2;
    auto [g, parts] = gen_boiler(7, sz);
    CHECK(validate_boiler(g, parts).ok());
    CHECK(parts.l.size() == 2);
    CHECK(parts.a_l == parts.a);
    CHECK(parts.a_l_strict.empty());
  }
  SECTION("a path-shaped attachment forces maximal prefixes") {
    BoilerSizes sz;
    sz.l_path = true;
    sz.k = 4;
    auto [g, parts] = gen_boiler(13, sz);
    CHECK(validate_boiler(g, parts).ok());
    CHECK(parts.l.size() == 3);
    CHECK_FALSE(is_clique(g, parts.l));
    CHECK(parts.j == 4);
    CHECK(free_of_both(g));
  }
  SECTION("identical seeds give identical edge sets") {
    BoilerSizes sz;
    sz.k = 4;
    sz.block_m = 2;
    auto a = gen_boiler(17, sz);
    auto b = gen_boiler(17, sz);
    CHECK(a.first.edge_list() == b.first.edge_list());
  }
}

TEST_CASE("gluing along cliques") {
  SECTION("two triangles sharing an edge make a diamond") {
    Graph tri = complete_graph(3);
    GluedGraph r = glue_at_clique(tri, {0, 1}, tri, {0, 1});
    CHECK(r.graph.n() == 4);
    CHECK(r.graph.m() == 5);
    StructureCertificate cert{CliqueCutsetCert{r.cut}, ""};
    CHECK(validate_certificate(r.graph, cert).ok());
  }
  SECTION("degenerate requests are refused") {
    Graph tri = complete_graph(3);
    CHECK_THROWS_AS(glue_at_clique(tri, {0, 1}, tri, {0}), graph_error);
    CHECK_THROWS_AS(glue_at_clique(cycle_graph(5), {0, 2}, tri, {0, 1}), graph_error);
    CHECK_THROWS_AS(glue_at_clique(tri, {0, 1, 2}, tri, {0, 1, 2}), graph_error);
  }
}

TEST_CASE("random member generation") {
  SECTION("rejection sampling returns verified members of the exact order") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
      Graph g = gen_random_p6c4free(6, seed, RandomStrategy::REJECTION);
      CHECK(g.n() == 6);
      CHECK(free_of_both(g));
    }
    CHECK(gen_random_p6c4free(1, 0, RandomStrategy::REJECTION).n() == 1);
    CHECK_THROWS_AS(gen_random_p6c4free(11, 0, RandomStrategy::REJECTION), graph_error);
  }
  SECTION("structured sampling covers larger orders") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
      Graph g = gen_random_p6c4free(12, seed, RandomStrategy::STRUCTURED);
      INFO("seed " << seed);
      CHECK(g.n() >= 1);
      CHECK(free_of_both(g));
    }
  }
  SECTION("the seed pins the output") {
    for (RandomStrategy s : {RandomStrategy::STRUCTURED, RandomStrategy::REJECTION}) {
      Graph a = gen_random_p6c4free(7, 99, s);
      Graph b = gen_random_p6c4free(7, 99, s);
      CHECK(a.edge_list() == b.edge_list());
    }
  }
}

TEST_CASE("the dispatcher builds certified instances") {
  SECTION("every certified family validates out of the box") {
    GenSpec blowup;
    blowup.family = GenFamily::BLOWUP;
    blowup.base = {BaseName::H1, 0, 0};
    blowup.sizes = std::vector<int>(10, 2);

    GenSpec fkl;
    fkl.family = GenFamily::FKL;
    fkl.base = {BaseName::FKL, 2, 1};

    GenSpec tight;
    tight.family = GenFamily::TIGHT;
    tight.q = 2;

    GenSpec band;
    band.family = GenFamily::BAND;
    band.sizes = {1, 2, 2, 1, 1, 2, 0, 1};
    band.seed = 4;

    GenSpec belt;
    belt.family = GenFamily::BELT;
    belt.seed = 6;

    GenSpec boiler;
    boiler.family = GenFamily::BOILER;
    boiler.sizes = {1, 1, 3, 1, 1, 0, 0};
    boiler.seed = 8;

    const CertKind want[] = {CertKind::BLOWUP, CertKind::BLOWUP, CertKind::BLOWUP,
                             CertKind::BAND,   CertKind::BELT,   CertKind::BOILER};
    const GenSpec* specs[] = {&blowup, &fkl, &tight, &band, &belt, &boiler};
    for (int i = 0; i < 6; ++i) {
      GenOutput out = generate(*specs[i]);
      INFO(out.note);
      REQUIRE(out.cert.has_value());
      CHECK(cert_kind(*out.cert) == want[i]);
      CHECK(validate_certificate(out.graph, *out.cert).ok());
      CHECK(free_of_both(out.graph));
    }
  }
  SECTION("identical specs give identical graphs") {
    GenSpec spec;
    spec.family = GenFamily::BELT;
    spec.seed = 42;
    Graph a = generate(spec).graph;
    Graph b = generate(spec).graph;
    CHECK(a.edge_list() == b.edge_list());
  }
  SECTION("random members carry no certificate") {
    GenSpec spec;
    spec.family = GenFamily::RANDOM_P6C4;
    spec.n = 6;
    spec.strategy = RandomStrategy::REJECTION;
    spec.seed = 3;
    GenOutput out = generate(spec);
    CHECK_FALSE(out.cert.has_value());
    CHECK(free_of_both(out.graph));
  }
  SECTION("glued instances carry the cutset that built them") {
    int made = 0;
    for (uint64_t seed = 0; seed < 30 && made < 3; ++seed) {
      GenSpec spec;
      spec.family = GenFamily::GLUED;
      spec.n = 8;
      spec.depth = 2;
      spec.seed = seed;
      GenOutput out;
      try {
        out = generate(spec);
      } catch (const graph_error&) {
        continue;  // every glue attempt for this seed hit a long path
      }
      ++made;
      REQUIRE(out.cert.has_value());
      CHECK(cert_kind(*out.cert) == CertKind::CLIQUE_CUTSET);
      CHECK(validate_certificate(out.graph, *out.cert).ok());
      CHECK(free_of_both(out.graph));
    }
    CHECK(made >= 3);
  }
  SECTION("two glued bands split at the shared clique") {
    BandSizes sz;
    sz.complete_pairs = true;
    sz.q = {1, 1, 1, 1, 2};
    Graph one = gen_band(1, sz).first;
    Graph two = gen_band(2, sz).first;
    // share the two-vertex top clique q5 = {4,5} of each copy
    GluedGraph glued = glue_at_clique(one, {4, 5}, two, {4, 5});
    if (free_of_both(glued.graph)) {
      ClassifyResult c = classify(glued.graph);
      REQUIRE(c.ok());
      CHECK(cert_kind(*c.cert) == CertKind::CLIQUE_CUTSET);
    }
  }
  SECTION("wrong size lists are refused") {
    GenSpec spec;
    spec.family = GenFamily::BOILER;
    spec.sizes = {1, 1, 3};
    CHECK_THROWS_AS(generate(spec), graph_error);
  }
}
