#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "p6c4/bases.hpp"
#include "p6c4/detect.hpp"
#include "p6c4/graph.hpp"
#include "p6c4/oracle.hpp"
#include "p6c4/structure.hpp"

using namespace p6c4;

namespace {

// replace vertex v of h by a clique of sizes[v] clones (0 allowed)
Graph blow(const Graph& h, const std::vector<int>& sizes) {
  std::vector<int> base(h.n() + 1, 0);
  for (int v = 0; v < h.n(); ++v) base[v + 1] = base[v] + sizes[v];
  std::vector<Edge> es;
  for (int v = 0; v < h.n(); ++v)
    for (int s = base[v]; s < base[v + 1]; ++s)
      for (int t = s + 1; t < base[v + 1]; ++t) es.emplace_back(s, t);
  for (const Edge& e : h.edge_list())
    for (int s = base[e.first]; s < base[e.first + 1]; ++s)
      for (int t = base[e.second]; t < base[e.second + 1]; ++t) es.emplace_back(s, t);
  return Graph::build(base[h.n()], es);
}

Graph random_connected_graph(int n, int edge_percent, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 99);
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> anchor(0, i - 1);
    es.emplace_back(anchor(rng), i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_percent) es.emplace_back(i, j);
  return Graph::build(n, es);
}

// trace laws around a five-hole; returns the first broken law
std::string c5_laws(const Graph& g, const C5Partition& p, bool host_c6free,
                    bool host_no_cutset) {
  auto t = [&](int i) { return p.t[(i % 5 + 5) % 5]; };
  auto w = [&](int i) { return p.w[(i % 5 + 5) % 5]; };
  auto x = [&](int i) { return p.x[(i % 5 + 5) % 5]; };
  for (int i = 0; i < 5; ++i) {
    if (!is_clique(g, vs_union(p.a, t(i)))) return "a+t not clique";
    if (!anticomplete_between(g, t(i), t(i + 2))) return "[t,t+2] not empty";
    if (!anticomplete_between(g, x(i), x(i + 2))) return "[x,x+2] not empty";
    if (!anticomplete_between(g, w(i), w(i + 1))) return "[w,w+1] not empty";
    if (!anticomplete_between(g, t(i), vs_union(w(i + 3), w(i + 2)))) return "[t,w far] not empty";
    if (!anticomplete_between(g, t(i), x(i + 2))) return "[t,x far] not empty";
    if (!anticomplete_between(g, x(i), vs_union(w(i), w(i + 1)))) return "[x,w under] not empty";
    if (!complete_between(g, x(i), x(i + 1))) return "[x,x+1] not complete";
    if (!complete_between(g, w(i), w(i + 2))) return "[w,w+2] not complete";
    if (!complete_between(g, x(i), vs_union(w(i + 4), w(i + 2)))) return "[x,w beside] not complete";
    if (host_c6free) {
      if (!x(i).empty() && !x(i + 1).empty()) return "adjacent x slots both full";
      if (!w(i).empty() && !w(i + 2).empty()) return "w,w+2 both full";
      if (!x(i).empty() && !(w(i + 4).empty() && w(i + 2).empty()))
        return "x and beside-w both full";
    }
    if (host_no_cutset && !complete_between(g, t(i), w(i))) return "[t,w] not complete";
  }
  if (host_no_cutset && !p.leftover.empty()) return "hole not dominating";
  return "";
}

// nine vertices: pentagon, one vertex over everything, and a three-link
// chain hanging off the 3-4 edge; lands in the boiler case
Graph small_boiler() {
  return Graph::build(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                          {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 8},
                          {6, 0}, {6, 7},
                          {7, 2}, {7, 3}, {7, 8},
                          {8, 2}, {8, 3}});
}

// pentagon with one tab on 1-2-3 and an edge-vertex on 3-4 joined to it
Graph small_belt() {
  return Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                          {5, 2}, {5, 3}, {6, 0}, {6, 1}, {6, 2}, {5, 6}});
}

StructureCertificate expect_cert(const ClassifyResult& r) {
  INFO(r.error.value_or("outside class"));
  REQUIRE(r.ok());
  return *r.cert;
}

void expect_valid(const Graph& g, const ClassifyResult& r, CertKind kind) {
  StructureCertificate cert = expect_cert(r);
  INFO(cert.provenance);
  CHECK(cert_kind(cert) == kind);
  Validation v = validate_certificate(g, cert);
  INFO(v.violation.value_or(""));
  CHECK(v.ok());
}

}  // namespace

TEST_CASE("five-hole trace partition") {
  SECTION("the three tabs of the banded pentagon sit on consecutive edges") {
    Graph g = base_f1();
    C5Partition p = partition_around_c5(g, {0, 1, 2, 3, 4});
    REQUIRE(p.ok());
    CHECK(p.x[0] == VertexSet{5});
    CHECK(p.x[1] == VertexSet{6});
    CHECK(p.x[2] == VertexSet{7});
    CHECK(p.a.empty());
    CHECK(p.leftover.empty());
    CHECK(c5_laws(g, p, false, true).empty());
  }
  SECTION("the hatted pentagon fills t5, x12, x34") {
    Graph g = base_f2();
    C5Partition p = partition_around_c5(g, {0, 1, 2, 3, 4});
    REQUIRE(p.ok());
    CHECK(p.t[4] == VertexSet{5});
    CHECK(p.x[0] == VertexSet{6});
    CHECK(p.x[2] == VertexSet{7});
    CHECK(c5_laws(g, p, true, true).empty());
  }
  SECTION("a bare pentagon leaves every slot empty") {
    Graph g = base_c5();
    C5Partition p = partition_around_c5(g, {0, 1, 2, 3, 4});
    REQUIRE(p.ok());
    CHECK(p.a.empty());
    CHECK(p.leftover.empty());
    for (int i = 0; i < 5; ++i) {
      CHECK(p.t[i].empty());
      CHECK(p.w[i].empty());
      CHECK(p.x[i].empty());
    }
  }
  SECTION("five tabs, one per corner") {
    Graph g = base_h5();
    C5Partition p = partition_around_c5(g, {0, 1, 2, 3, 4});
    REQUIRE(p.ok());
    for (int i = 0; i < 5; ++i) CHECK(p.t[i] == VertexSet{5 + i});
    CHECK(c5_laws(g, p, true, true).empty());
  }
  SECTION("non-consecutive and four-vertex traces are reported, not filed") {
    Graph skew = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 2}});
    C5Partition p = partition_around_c5(skew, {0, 1, 2, 3, 4});
    REQUIRE_FALSE(p.ok());
    REQUIRE(p.violations.size() == 1);
    CHECK(p.violations[0].v == 5);
    CHECK(p.violations[0].trace == VertexSet{0, 2});
    Graph quad =
        Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}});
    C5Partition q = partition_around_c5(quad, {0, 1, 2, 3, 4});
    REQUIRE_FALSE(q.ok());
    CHECK(q.violations[0].trace == VertexSet{0, 1, 2, 3});
  }
  SECTION("a malformed hole is rejected outright") {
    Graph g = base_c5();
    CHECK_THROWS_AS(partition_around_c5(g, {0, 1, 2, 3, 3}), graph_error);
    CHECK_THROWS_AS(partition_around_c5(g, {0, 2, 1, 3, 4}), graph_error);
  }
}

TEST_CASE("six-hole trace partition") {
  SECTION("the three triple-tabs of the triangled hexagon") {
    Graph g = base_f3();
    C6Partition p = partition_around_c6(g, {0, 1, 2, 3, 4, 5});
    REQUIRE(p.ok());
    CHECK(p.a[1] == VertexSet{6});
    CHECK(p.a[3] == VertexSet{7});
    CHECK(p.a[5] == VertexSet{8});
    CHECK(p.s.empty());
    CHECK(p.l.empty());
  }
  SECTION("two quads and an opposite pair") {
    Graph g = base_h2();
    C6Partition p = partition_around_c6(g, {0, 1, 2, 3, 4, 5});
    REQUIRE(p.ok());
    CHECK(p.b[0] == VertexSet{6});
    CHECK(p.b[3] == VertexSet{7});
    CHECK(p.d[2] == VertexSet{8});
  }
  SECTION("the decagon around a six-hole uses only opposite pairs") {
    Graph g = base_h1();
    auto c6 = find_induced_cycle(g, 6);
    REQUIRE(c6.has_value());
    std::array<int, 6> hole;
    std::copy_n(c6->vertices.begin(), 6, hole.begin());
    C6Partition p = partition_around_c6(g, hole);
    REQUIRE(p.ok());
    // six outbound edges land in three opposite pairs; the tenth vertex
    // sees none of the hole, so this hexagon is non-dominating
    int dn = 0;
    for (int i = 0; i < 3; ++i) dn += static_cast<int>(p.d[i].size());
    CHECK(dn == 3);
    CHECK(p.l.size() == 1);
    for (int i = 0; i < 6; ++i) {
      CHECK(p.a[i].empty());
      CHECK(p.b[i].empty());
    }
    CHECK(p.s.empty());
  }
  SECTION("bare hexagon") {
    C6Partition p = partition_around_c6(base_c6(), {0, 1, 2, 3, 4, 5});
    REQUIRE(p.ok());
    CHECK(p.l.empty());
  }
  SECTION("pendants and two-edge traces are violations") {
    Graph pend = Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}});
    C6Partition p = partition_around_c6(pend, {0, 1, 2, 3, 4, 5});
    REQUIRE_FALSE(p.ok());
    CHECK(p.violations[0].v == 6);
    Graph two =
        Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 1}});
    CHECK_FALSE(partition_around_c6(two, {0, 1, 2, 3, 4, 5}).ok());
  }
}

TEST_CASE("blowup recognition") {
  SECTION("a bare pentagon embeds in the decagon with five empty bags") {
    auto map = match_blowup(base_c5(), {BaseName::H1});
    REQUIRE(map.has_value());
    CHECK(empty_bag_count(*map) == 5);
    CHECK(validate_blowup_map(base_c5(), *map).ok());
  }
  SECTION("the decagon matches itself with unit bags") {
    auto map = match_blowup(base_h1(), {BaseName::H1});
    REQUIRE(map.has_value());
    CHECK(empty_bag_count(*map) == 0);
    for (const auto& b : map->bags) CHECK(b.size() == 1);
  }
  SECTION("doubling every vertex doubles every bag") {
    Graph g = blow(base_h1(), std::vector<int>(10, 2));
    auto map = match_blowup(g, {BaseName::H1});
    REQUIRE(map.has_value());
    for (const auto& b : map->bags) CHECK(b.size() == 2);
    CHECK(validate_blowup_map(g, *map).ok());
  }
  SECTION("the banded pentagon is not a decagon blowup") {
    CHECK_FALSE(match_blowup(base_f1(), {BaseName::H1}).has_value());
  }
  SECTION("parametric bases match themselves") {
    Graph g = base_fkl(2, 1);
    auto map = match_blowup(g, {BaseName::FKL, 2, 1});
    REQUIRE(map.has_value());
    CHECK(empty_bag_count(*map) == 0);
    CHECK(validate_blowup_map(g, *map).ok());
  }
  SECTION("random bag sizes round-trip on every base") {
    std::mt19937_64 rng(20240817);
    std::vector<BlowupBase> bases = {{BaseName::C5},       {BaseName::H1}, {BaseName::H2},
                                     {BaseName::H3},       {BaseName::H4}, {BaseName::H5},
                                     {BaseName::F3},       {BaseName::FKL, 1, 1},
                                     {BaseName::FKL, 2, 2}};
    for (const auto& base : bases) {
      Graph h = blowup_base_graph(base);
      for (int round = 0; round < 12; ++round) {
        // even rounds keep every bag inhabited so sizes stay comparable
        std::uniform_int_distribution<int> size(round % 2 == 0 ? 1 : 0, 3);
        std::vector<int> sizes(h.n());
        int total = 0;
        for (int& s : sizes) total += (s = size(rng));
        if (total == 0) continue;
        Graph g = blow(h, sizes);
        if (!is_connected(g)) continue;
        auto map = match_blowup(g, base);
        INFO(blowup_base_str(base) << " round " << round);
        REQUIRE(map.has_value());
        CHECK(validate_blowup_map(g, *map).ok());
        // an empty bag can erase the distinction between two base vertices,
        // letting a valid map regroup the clones; sizes are only pinned when
        // every bag is inhabited
        if (*std::min_element(sizes.begin(), sizes.end()) > 0) {
          std::vector<int> got, want;
          for (const auto& b : map->bags) got.push_back(static_cast<int>(b.size()));
          want = sizes;
          std::sort(got.begin(), got.end());
          std::sort(want.begin(), want.end());
          CHECK(got == want);
        }
      }
    }
  }
}

TEST_CASE("certificate validation rejects tampering") {
  SECTION("clique-cutset certificates") {
    Graph bowtie = Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CliqueCutsetCert good{{{0}, {1, 2}, {3, 4}}};
    CHECK(validate_clique_cutset(bowtie, good).ok());
    CliqueCutsetCert cross{{{1}, {0, 2}, {3, 4}}};
    CHECK_FALSE(validate_clique_cutset(bowtie, cross).ok());
    CliqueCutsetCert lopsided{{{0, 1, 2}, {3, 4}, {}}};
    CHECK_FALSE(validate_clique_cutset(bowtie, lopsided).ok());
  }
  SECTION("universal-vertex certificates") {
    CHECK(validate_universal_vertex(base_dart(), UniversalVertexCert{2}).ok());
    CHECK_FALSE(validate_universal_vertex(base_dart(), UniversalVertexCert{0}).ok());
    CHECK_FALSE(validate_universal_vertex(base_dart(), UniversalVertexCert{9}).ok());
  }
  SECTION("elimination orders") {
    Graph g = base_dart();
    auto peo = chordality(g).peo;
    REQUIRE(peo.has_value());
    CHECK(validate_chordal_leaf(g, ChordalLeafCert{*peo}).ok());
    ChordalLeafCert backwards{{{2, 0, 1, 3, 4}}};
    CHECK_FALSE(validate_chordal_leaf(g, backwards).ok());
    ChordalLeafCert repeated{{{0, 0, 1, 3, 4}}};
    CHECK_FALSE(validate_chordal_leaf(g, repeated).ok());
  }
  SECTION("blowup maps") {
    Graph g = blow(base_c5(), {2, 1, 1, 1, 1});
    auto map = match_blowup(g, {BaseName::C5});
    REQUIRE(map.has_value());
    BlowupMap moved = *map;
    // drag one clone into the neighboring bag
    int v = moved.bags[0].back();
    moved.bags[0].pop_back();
    moved.bags[1].push_back(v);
    moved.bags[1] = vs_sorted(moved.bags[1]);
    CHECK_FALSE(validate_blowup_map(g, moved).ok());
  }
  SECTION("band parts") {
    Graph g = base_f1();
    StructureCertificate cert = expect_cert(classify(g));
    REQUIRE(cert_kind(cert) == CertKind::BAND);
    BandParts parts = std::get<BandCert>(cert.body).parts;
    CHECK(validate_band(g, parts).ok());
    std::swap(parts.q[0], parts.q[2]);
    CHECK_FALSE(validate_band(g, parts).ok());
  }
  SECTION("belt parts") {
    Graph g = small_belt();
    StructureCertificate cert = expect_cert(classify(g));
    REQUIRE(cert_kind(cert) == CertKind::BELT);
    BeltParts parts = std::get<BeltCert>(cert.body).parts;
    CHECK(validate_belt(g, parts).ok());
    BeltParts swapped = parts;
    std::swap(swapped.q[0], swapped.q[3]);
    CHECK_FALSE(validate_belt(g, swapped).ok());
    BeltParts merged = parts;
    merged.r2 = vs_sorted(vs_union(merged.r2, merged.q[1]));
    merged.q[1].clear();
    CHECK_FALSE(validate_belt(g, merged).ok());
  }
  SECTION("boiler parts") {
    Graph g = small_boiler();
    StructureCertificate cert = expect_cert(classify(g));
    REQUIRE(cert_kind(cert) == CertKind::BOILER);
    BoilerParts parts = std::get<BoilerCert>(cert.body).parts;
    CHECK(validate_boiler(g, parts).ok());
    BoilerParts reordered = parts;
    std::swap(reordered.m_block[0], reordered.m_block[2]);
    std::swap(reordered.b_block[0], reordered.b_block[2]);
    CHECK_FALSE(validate_boiler(g, reordered).ok());
    BoilerParts bad_star = parts;
    bad_star.b_star = bad_star.b_block[0][0];
    CHECK_FALSE(validate_boiler(g, bad_star).ok());
  }
}

TEST_CASE("classification of the named shapes") {
  SECTION("complete graphs surrender a universal vertex") {
    expect_valid(complete_graph(5), classify(complete_graph(5)), CertKind::UNIVERSAL_VERTEX);
  }
  SECTION("the bowtie splits at its center") {
    Graph bowtie = Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    expect_valid(bowtie, classify(bowtie), CertKind::CLIQUE_CUTSET);
  }
  SECTION("paths split at interior vertices") {
    Graph p4 = path_graph(4);
    expect_valid(p4, classify(p4), CertKind::CLIQUE_CUTSET);
  }
  SECTION("one- and two-vertex graphs are leaves") {
    expect_valid(complete_graph(1), classify(complete_graph(1)), CertKind::CHORDAL_LEAF);
    expect_valid(complete_graph(2), classify(complete_graph(2)), CertKind::CHORDAL_LEAF);
  }
  SECTION("graphs outside the class are rejected with a witness") {
    ClassifyResult r = classify(path_graph(6));
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind == WitnessKind::P6);
    CHECK(witness_valid(path_graph(6), *r.witness));
    ClassifyResult c = classify(cycle_graph(4));
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->kind == WitnessKind::C4);
  }
  SECTION("each base graph classifies as expected") {
    expect_valid(base_c5(), classify(base_c5()), CertKind::BLOWUP);
    expect_valid(base_f1(), classify(base_f1()), CertKind::BAND);
    expect_valid(base_f2(), classify(base_f2()), CertKind::BLOWUP);
    expect_valid(base_f3(), classify(base_f3()), CertKind::BLOWUP);
    for (Graph g : {base_h1(), base_h2(), base_h3(), base_h4(), base_h5()})
      expect_valid(g, classify(g), CertKind::BLOWUP);
  }
  SECTION("doubled decagon comes back with its base and doubled bags") {
    Graph g = blow(base_h1(), std::vector<int>(10, 2));
    StructureCertificate cert = expect_cert(classify(g));
    REQUIRE(cert_kind(cert) == CertKind::BLOWUP);
    const BlowupMap& map = std::get<BlowupCert>(cert.body).map;
    CHECK(map.base.name == BaseName::H1);
    for (const auto& b : map.bags) CHECK(b.size() == 2);
  }
  SECTION("hand-built belt and boiler") {
    Graph belt = small_belt();
    REQUIRE_FALSE(is_p6c4_free(belt).witness.has_value());
    REQUIRE_FALSE(find_induced_cycle(belt, 6).has_value());
    expect_valid(belt, classify(belt), CertKind::BELT);
    Graph boiler = small_boiler();
    REQUIRE_FALSE(is_p6c4_free(boiler).witness.has_value());
    expect_valid(boiler, classify(boiler), CertKind::BOILER);
    StructureCertificate cert = expect_cert(classify(boiler));
    const BoilerParts& parts = std::get<BoilerCert>(cert.body).parts;
    CHECK(parts.m_block.size() == 3);
    CHECK(parts.b_star == 7);
    CHECK(parts.j == 3);
  }
  SECTION("disconnected input is a caller error") {
    Graph two = Graph::build(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(classify(two), graph_error);
  }
  SECTION("classification is reproducible") {
    for (Graph g : {base_f1(), base_f2(), small_belt(), small_boiler()}) {
      ClassifyResult r1 = classify(g);
      ClassifyResult r2 = classify(g);
      REQUIRE(r1.ok());
      REQUIRE(r2.ok());
      CHECK(r1.cert->provenance == r2.cert->provenance);
      CHECK(cert_kind(*r1.cert) == cert_kind(*r2.cert));
    }
  }
}

TEST_CASE("random members always classify and validate") {
  int classified = 0;
  std::array<int, 7> by_kind{};
  for (uint64_t seed = 0; classified < 150; ++seed) {
    REQUIRE(seed < 4000);
    Graph g = random_connected_graph(8, 30, 9000 + seed);
    if (is_p6c4_free(g).witness.has_value()) continue;
    ClassifyResult r = classify(g);
    INFO("seed " << seed << (r.error ? " error: " + *r.error : std::string()));
    REQUIRE(r.ok());
    Validation v = validate_certificate(g, *r.cert);
    INFO(v.violation.value_or(""));
    REQUIRE(v.ok());
    ++by_kind[static_cast<int>(cert_kind(*r.cert))];
    ++classified;
    // agreement with the exhaustive separator search
    bool cut = oracle_has_clique_cutset(g);
    CHECK(cut == (cert_kind(*r.cert) == CertKind::CLIQUE_CUTSET));
  }
  // the sample should exercise more than the cutset branch
  CHECK(by_kind[static_cast<int>(CertKind::CLIQUE_CUTSET)] < classified);
}

TEST_CASE("pentagons dominate cutset-free members") {
  auto check_one = [](const Graph& g, const std::string& tag) {
    if (find_clique_cutset(g).has_value()) return false;
    auto c5 = find_induced_cycle(g, 5);
    if (!c5.has_value()) return false;
    std::array<int, 5> hole;
    std::copy_n(c5->vertices.begin(), 5, hole.begin());
    C5Partition p = partition_around_c5(g, hole);
    REQUIRE(p.ok());
    CHECK(p.leftover.empty());
    bool c6free = !find_induced_cycle(g, 6).has_value();
    std::string law = c5_laws(g, p, c6free, true);
    INFO(tag << ": " << law);
    CHECK(law.empty());
    return true;
  };

  int covered = 0;
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> size(1, 3);
  for (Graph h : {base_c5(), base_f1(), base_f2(), base_f3(), base_h2(), base_h3(), base_h4(),
                  base_h5()}) {
    covered += check_one(h, "base");
    std::vector<int> sizes(h.n());
    for (int& s : sizes) s = size(rng);
    Graph g = blow(h, sizes);
    if (!is_p6c4_free(g).witness.has_value()) covered += check_one(g, "blown base");
  }
  covered += check_one(small_belt(), "belt");
  covered += check_one(small_boiler(), "boiler");
  CHECK(covered >= 14);

  // whatever turns up in a bounded random scan
  for (uint64_t seed = 0; seed < 1200; ++seed) {
    Graph g = random_connected_graph(8, 35, 31000 + seed);
    if (is_p6c4_free(g).witness.has_value()) continue;
    check_one(g, "seed " + std::to_string(seed));
  }
}
