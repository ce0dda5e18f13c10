#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "generators.hpp"
#include "io.hpp"

// Command-line surface.  Everything lives behind cli_main(args, in, out, err)
// so tests can drive the tool without spawning processes; tools/p6c4_cli.cpp
// is a three-line wrapper.  Exit codes: 0 success (or a pass verdict),
// 1 usage / IO / schema trouble, 2 input outside the class (or a fail
// verdict from `verify`), 3 internal invariant failure — the bug signal.
// All JSON reports carry "schema": 1.

namespace p6c4 {

using json = nlohmann::json;

// ---- JSON views of the core types ----

inline json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back(json::array({u, v}));
  return json{{"n", g.n()}, {"m", g.m()}, {"edges", std::move(edges)}};
}

inline json witness_json(const Witness& w) {
  return json{{"kind", witness_kind_str(w.kind)}, {"vertices", w.vertices}};
}

inline json coloring_json(const Coloring& c) {
  return json{{"assignment", c.assignment}, {"num_colors", c.num_colors}};
}

inline json bounds_json(const BoundReport& b) {
  json j{{"omega", b.omega}, {"delta", b.delta},      {"bound54", b.bound54},
         {"reed", b.reed},   {"chi_alg", b.chi_alg}};
  j["chi_exact"] = b.chi_exact ? json(*b.chi_exact) : json(nullptr);
  return j;
}

inline json trace_json(const std::vector<TraceEntry>& trace) {
  json arr = json::array();
  for (const TraceEntry& t : trace)
    arr.push_back(json{{"branch", t.branch},
                       {"vertices", t.vertices},
                       {"colors_introduced", t.colors_introduced}});
  return arr;
}

inline json cert_json(const StructureCertificate& cert) {
  json j{{"schema", 1},
         {"kind", cert_kind_str(cert_kind(cert))},
         {"provenance", cert.provenance}};
  auto sets = [](const std::array<VertexSet, 5>& q) {
    json arr = json::array();
    for (const VertexSet& s : q) arr.push_back(s);
    return arr;
  };
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CliqueCutsetCert>) {
          j["cutset"] = json{{"clique", c.cut.clique},
                             {"side_a", c.cut.side_a},
                             {"side_b", c.cut.side_b}};
        } else if constexpr (std::is_same_v<T, UniversalVertexCert>) {
          j["vertex"] = c.v;
        } else if constexpr (std::is_same_v<T, ChordalLeafCert>) {
          j["elimination_order"] = c.order.order;
        } else if constexpr (std::is_same_v<T, BlowupCert>) {
          j["base"] = json{{"name", base_name_str(c.map.base.name)},
                           {"k", c.map.base.k},
                           {"l", c.map.base.l}};
          json bags = json::array();
          for (const VertexSet& b : c.map.bags) bags.push_back(b);
          j["bags"] = std::move(bags);
        } else if constexpr (std::is_same_v<T, BandCert> || std::is_same_v<T, BeltCert>) {
          j["q"] = sets(c.parts.q);
          j["r2"] = c.parts.r2;
          j["r3"] = c.parts.r3;
        } else {  // BoilerCert
          j["q"] = c.parts.q;
          j["a"] = c.parts.a;
          j["b"] = c.parts.b;
          j["l"] = c.parts.l;
          j["m"] = c.parts.m;
          json mb = json::array(), bb = json::array();
          for (const VertexSet& s : c.parts.m_block) mb.push_back(s);
          for (const VertexSet& s : c.parts.b_block) bb.push_back(s);
          j["m_blocks"] = std::move(mb);
          j["b_blocks"] = std::move(bb);
          j["b_star"] = c.parts.b_star;
          j["m_star"] = c.parts.m_star;
          j["a_prefix"] = c.parts.a_prefix;
          j["j"] = c.parts.j;
          j["a_l"] = c.parts.a_l;
          j["a_l_strict"] = c.parts.a_l_strict;
        }
      },
      cert.body);
  return j;
}

inline BaseName base_name_from_str(std::string s) {
  auto lower = [](std::string t) {
    for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return t;
  };
  s = lower(std::move(s));
  for (int i = 0; i <= static_cast<int>(BaseName::FKL); ++i)
    if (lower(base_name_str(static_cast<BaseName>(i))) == s)
      return static_cast<BaseName>(i);
  throw graph_error("unknown base graph: " + s);
}

inline StructureCertificate cert_from_json(const json& j) {
  try {
    if (j.value("schema", 0) != 1)
      throw graph_error("certificate: unsupported or missing schema version");
    std::string kind = j.at("kind").get<std::string>();
    std::string prov = j.value("provenance", "");
    auto vs = [&](const char* key) { return j.at(key).get<VertexSet>(); };
    if (kind == "clique-cutset") {
      const json& c = j.at("cutset");
      CliqueCutset cut{c.at("clique").get<VertexSet>(), c.at("side_a").get<VertexSet>(),
                       c.at("side_b").get<VertexSet>()};
      return {CliqueCutsetCert{std::move(cut)}, prov};
    }
    if (kind == "universal-vertex")
      return {UniversalVertexCert{j.at("vertex").get<int>()}, prov};
    if (kind == "chordal-leaf")
      return {ChordalLeafCert{EliminationOrder{j.at("elimination_order").get<std::vector<int>>()}},
              prov};
    if (kind == "blowup") {
      const json& b = j.at("base");
      BlowupMap map;
      map.base.name = base_name_from_str(b.at("name").get<std::string>());
      map.base.k = b.value("k", 0);
      map.base.l = b.value("l", 0);
      for (const json& bag : j.at("bags")) map.bags.push_back(bag.get<VertexSet>());
      return {BlowupCert{std::move(map)}, prov};
    }
    if (kind == "band" || kind == "belt") {
      std::array<VertexSet, 5> q;
      const json& qs = j.at("q");
      if (qs.size() != 5) throw graph_error("certificate: expected five q parts");
      for (int i = 0; i < 5; ++i) q[i] = qs[i].get<VertexSet>();
      if (kind == "band")
        return {BandCert{BandParts{q, vs("r2"), vs("r3")}}, prov};
      return {BeltCert{BeltParts{q, vs("r2"), vs("r3")}}, prov};
    }
    if (kind == "boiler") {
      BoilerParts p;
      p.q = vs("q"), p.a = vs("a"), p.b = vs("b"), p.l = vs("l"), p.m = vs("m");
      for (const json& s : j.at("m_blocks")) p.m_block.push_back(s.get<VertexSet>());
      for (const json& s : j.at("b_blocks")) p.b_block.push_back(s.get<VertexSet>());
      p.b_star = j.at("b_star").get<int>();
      p.m_star = j.at("m_star").get<int>();
      p.a_prefix = j.at("a_prefix").get<std::vector<int>>();
      p.j = j.at("j").get<int>();
      p.a_l = vs("a_l");
      p.a_l_strict = vs("a_l_strict");
      return {BoilerCert{std::move(p)}, prov};
    }
    throw graph_error("certificate: unknown kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    throw graph_error(std::string("certificate: malformed json: ") + e.what());
  }
}

inline Coloring coloring_from_json(const json& j_in) {
  // accept either a bare coloring object or a full color report around one
  const json& j = j_in.contains("coloring") ? j_in.at("coloring") : j_in;
  try {
    Coloring c;
    c.assignment = j.at("assignment").get<std::vector<int>>();
    c.num_colors = j.at("num_colors").get<int>();
    return c;
  } catch (const json::exception& e) {
    throw graph_error(std::string("coloring: malformed json: ") + e.what());
  }
}

// ---- plumbing ----

struct RunConfig {
  std::vector<std::string> inputs;  // files; "-" or empty means stdin
  GraphFormat format = GraphFormat::AUTO;
  std::string output;  // report destination; empty means stdout
  bool pretty = false;
  bool as_json = false;  // recognize/verify default to prose
  bool batch = false;    // inputs are json-lines manifests
  bool with_trace = false;
  bool want_exact = false;
  bool force = false;  // overrides the oracle size caps
  int count = 1;
  uint64_t seed = 0;
};

namespace detail {

inline std::string iso_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline void emit(std::ostream& out, const json& j, bool pretty) {
  out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

inline Graph load_graph(const std::string& path, GraphFormat fmt, std::istream& stdin_stream) {
  if (path.empty() || path == "-") return read_graph(stdin_stream, fmt);
  std::ifstream f(path);
  if (!f) throw graph_error("cannot open " + path);
  if (fmt == GraphFormat::AUTO) fmt = format_from_extension(path);
  try {
    return read_graph(f, fmt);
  } catch (const graph_error& e) {
    throw graph_error(path + ": " + e.what());
  }
}

inline Graph graph_from_manifest(const json& j) {
  if (j.contains("graph6")) return decode_graph6(j.at("graph6").get<std::string>());
  if (j.contains("graph")) return graph_from_manifest(j.at("graph"));
  if (j.contains("edges")) {
    std::vector<Edge> es;
    for (const json& e : j.at("edges")) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::build(j.at("n").get<int>(), es);
  }
  throw graph_error("manifest entry needs \"graph6\" or \"n\"+\"edges\"");
}

// Run `report` once per input graph.  Plain mode reads whole files; batch
// mode treats every input line as a json manifest entry and echoes its id.
// The worst per-graph exit code wins.
inline int for_each_graph(const RunConfig& cfg, std::istream& in, std::ostream& out,
                          const std::function<json(const Graph&, int&)>& report) {
  int code = 0;
  std::vector<std::string> inputs = cfg.inputs.empty() ? std::vector<std::string>{"-"} : cfg.inputs;
  const bool tag_input = inputs.size() > 1;
  for (const std::string& path : inputs) {
    if (cfg.batch) {
      std::ifstream file;
      std::istream* src = &in;
      if (path != "-" && !path.empty()) {
        file.open(path);
        if (!file) throw graph_error("cannot open " + path);
        src = &file;
      }
      std::string line;
      int lineno = 0;
      while (std::getline(*src, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json entry;
        try {
          entry = json::parse(line);
        } catch (const json::exception& e) {
          throw graph_error("batch line " + std::to_string(lineno) + ": " + e.what());
        }
        Graph g = graph_from_manifest(entry);
        json r = report(g, code);
        if (entry.contains("id")) r["id"] = entry.at("id");
        emit(out, r, false);  // one line per entry, order preserved
      }
    } else {
      Graph g = load_graph(path, cfg.format, in);
      json r = report(g, code);
      if (tag_input) r["input"] = path;
      emit(out, r, cfg.pretty);
    }
  }
  return code;
}

inline json recognize_report(const Graph& g) {
  json j{{"schema", 1}, {"n", g.n()}, {"m", g.m()}};
  P6C4Verdict v = is_p6c4_free(g);
  j["free"] = !v.witness.has_value();
  if (v.witness) j["witness"] = witness_json(*v.witness);
  return j;
}

inline json decompose_report(const Graph& g, int& code) {
  json j{{"schema", 1}, {"n", g.n()}, {"m", g.m()}};
  ClassifyResult r = classify(g);
  if (r.witness) {
    j["in_class"] = false;
    j["witness"] = witness_json(*r.witness);
    code = std::max(code, 2);
    return j;
  }
  j["in_class"] = true;
  if (!r.cert) {
    j["error"] = r.error ? *r.error : "no decomposition branch applied";
    code = std::max(code, 3);
    return j;
  }
  j["certificate"] = cert_json(*r.cert);
  j["validated"] = validate_certificate(g, *r.cert).ok();
  return j;
}

inline json color_report(const Graph& g, const RunConfig& cfg, std::ostream& err, int& code) {
  json j{{"schema", 1}, {"n", g.n()}, {"m", g.m()}};
  ColorResult r;
  try {
    r = color(g);
  } catch (const graph_error& e) {
    // the engine re-checks its own output; a throw here is a bug, not bad input
    throw std::runtime_error(e.what());
  }
  if (r.witness) {
    j["in_class"] = false;
    j["witness"] = witness_json(*r.witness);
    code = std::max(code, 2);
    return j;
  }
  if (cfg.want_exact) {
    OracleCaps caps = oracle_caps();
    if (g.n() <= caps.chi_cap || cfg.force)
      r.bounds.chi_exact = exact_chromatic(g).value;
    else
      err << "note: skipping exact chromatic number (n=" << g.n() << " over cap "
          << caps.chi_cap << "; pass --force to insist)\n";
  }
  j["in_class"] = true;
  j["coloring"] = coloring_json(r.coloring);
  j["bounds"] = bounds_json(r.bounds);
  j["verified"] = verify_coloring(g, r.coloring).ok;
  j["exact_uses"] = r.exact_uses;
  j["rescue_uses"] = r.rescue_uses;
  if (cfg.with_trace) j["trace"] = trace_json(r.trace);
  return j;
}

inline int run_recognize(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.as_json || cfg.batch)
    return for_each_graph(cfg, in, out, [](const Graph& g, int&) { return recognize_report(g); });
  std::vector<std::string> inputs = cfg.inputs.empty() ? std::vector<std::string>{"-"} : cfg.inputs;
  for (const std::string& path : inputs) {
    Graph g = load_graph(path, cfg.format, in);
    if (inputs.size() > 1) out << path << ": ";
    P6C4Verdict v = is_p6c4_free(g);
    if (!v.witness) {
      out << "(P6,C4)-free\n";
    } else {
      out << "contains induced " << witness_kind_str(v.witness->kind) << ":";
      for (int x : v.witness->vertices) out << ' ' << x;
      out << '\n';
    }
  }
  return 0;
}

inline int run_exact(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  int code = 0;
  auto report = [&](const Graph& g, int&) {
    OracleCaps caps = oracle_caps();
    if (!cfg.force && (g.n() > caps.chi_cap || g.n() > caps.omega_cap))
      throw graph_error("input has " + std::to_string(g.n()) +
                        " vertices, over the exact-oracle cap (chi " +
                        std::to_string(caps.chi_cap) + ", omega " +
                        std::to_string(caps.omega_cap) + "); pass --force to insist");
    OracleResult om = exact_clique(g);
    OracleResult ch = exact_chromatic(g);
    json j{{"schema", 1}, {"n", g.n()}, {"m", g.m()}};
    j["omega"] = json{{"value", om.value}, {"clique", om.clique}, {"nodes", om.nodes}};
    j["chi"] = json{{"value", ch.value},
                    {"assignment", ch.coloring.assignment},
                    {"nodes", ch.nodes}};
    return j;
  };
  return std::max(code, for_each_graph(cfg, in, out, report));
}

inline int run_verify(const RunConfig& cfg, std::istream& in, std::ostream& out,
                      const std::string& cert_path, const std::string& coloring_path) {
  if (cert_path.empty() && coloring_path.empty())
    throw graph_error("verify needs --cert and/or --coloring");
  std::string graph_path = cfg.inputs.empty() ? "-" : cfg.inputs.front();
  Graph g = load_graph(graph_path, cfg.format, in);
  auto slurp_json = [](const std::string& path) {
    std::ifstream f(path);
    if (!f) throw graph_error("cannot open " + path);
    try {
      return json::parse(f);
    } catch (const json::exception& e) {
      throw graph_error(path + ": " + e.what());
    }
  };
  json checks = json::array();
  bool all_ok = true;
  if (!cert_path.empty()) {
    StructureCertificate cert = cert_from_json(slurp_json(cert_path));
    Validation v = validate_certificate(g, cert);
    json c{{"check", "certificate"},
           {"kind", cert_kind_str(cert_kind(cert))},
           {"ok", v.ok()}};
    if (!v.ok()) c["violation"] = *v.violation;
    checks.push_back(std::move(c));
    all_ok = all_ok && v.ok();
  }
  if (!coloring_path.empty()) {
    Coloring col = coloring_from_json(slurp_json(coloring_path));
    ColorCheck chk = verify_coloring(g, col);
    json c{{"check", "coloring"}, {"ok", chk.ok}};
    if (!chk.ok) {
      c["violation"] = chk.message;
      if (chk.bad_edge.first >= 0)
        c["bad_edge"] = json::array({chk.bad_edge.first, chk.bad_edge.second});
    }
    checks.push_back(std::move(c));
    all_ok = all_ok && chk.ok;
  }
  if (cfg.as_json) {
    emit(out, json{{"schema", 1}, {"ok", all_ok}, {"checks", checks}}, cfg.pretty);
  } else {
    for (const json& c : checks) {
      out << c.at("check").get<std::string>() << ": ";
      if (c.at("ok").get<bool>())
        out << "pass\n";
      else
        out << "FAIL — " << c.at("violation").get<std::string>() << '\n';
    }
  }
  return all_ok ? 0 : 2;
}

inline int run_gen(const RunConfig& cfg, GenSpec spec, std::ostream& out) {
  for (int i = 0; i < cfg.count; ++i) {
    spec.seed = cfg.seed + static_cast<uint64_t>(i);
    GenOutput o = generate(spec);
    const bool g6 = cfg.format == GraphFormat::GRAPH6;
    if (cfg.output.empty()) {
      json j{{"schema", 1},
             {"family", gen_family_str(spec.family)},
             {"seed", spec.seed},
             {"graph", graph_json(o.graph)},
             {"graph6", encode_graph6(o.graph)},
             {"note", o.note}};
      j["certificate"] = o.cert ? cert_json(*o.cert) : json(nullptr);
      emit(out, j, cfg.pretty);
      continue;
    }
    std::string stem = cfg.output + (cfg.count > 1 ? "_" + std::to_string(i) : "");
    std::string gpath = stem + (g6 ? ".g6" : ".txt");
    std::ofstream gf(gpath);
    if (!gf) throw graph_error("cannot write " + gpath);
    if (g6)
      gf << encode_graph6(o.graph) << '\n';
    else
      write_edge_list(gf, o.graph);
    out << "wrote " << gpath << " (n=" << o.graph.n() << ", m=" << o.graph.m() << ")";
    if (o.cert) {
      std::string cpath = stem + ".cert.json";
      std::ofstream cf(cpath);
      if (!cf) throw graph_error("cannot write " + cpath);
      cf << cert_json(*o.cert).dump(2) << '\n';
      out << " + " << cpath;
    }
    out << '\n';
  }
  return 0;
}

inline int run_bench(const RunConfig& cfg, const std::vector<std::string>& wanted,
                     std::ostream& out) {
  // one fixed mid-size shape per family; seeds vary per instance
  struct Entry {
    std::string name;
    GenSpec spec;
  };
  std::vector<Entry> menu;
  for (BaseName b : {BaseName::C5, BaseName::H1, BaseName::H2, BaseName::H3, BaseName::H4,
                     BaseName::H5, BaseName::F3}) {
    GenSpec s;
    s.family = GenFamily::BLOWUP;
    s.base.name = b;
    s.sizes.assign(blowup_base_graph(s.base).n(), 2);
    menu.push_back({"blowup:" + base_name_str(b), s});
  }
  {
    GenSpec s;
    s.family = GenFamily::FKL;
    s.base.k = 2, s.base.l = 2;
    menu.push_back({"fkl", s});
  }
  {
    GenSpec s;
    s.family = GenFamily::TIGHT;
    s.q = 2;
    menu.push_back({"tight", s});
  }
  {
    GenSpec s;
    s.family = GenFamily::BAND;
    s.sizes = {2, 2, 2, 2, 2, 2, 2};
    menu.push_back({"band", s});
  }
  {
    GenSpec s;
    s.family = GenFamily::BELT;
    s.sizes = {2, 2, 3, 2, 2, 3, 2};
    menu.push_back({"belt", s});
  }
  {
    GenSpec s;
    s.family = GenFamily::BOILER;
    s.sizes = {2, 2, 4, 2, 2, 3, 0};
    menu.push_back({"boiler", s});
  }
  {
    GenSpec s;
    s.family = GenFamily::RANDOM_P6C4;
    s.n = 12;
    menu.push_back({"random", s});
  }
  {
    GenSpec s;
    s.family = GenFamily::GLUED;
    s.n = 10, s.depth = 2;
    menu.push_back({"glued", s});
  }
  json rows = json::array();
  int violations_total = 0;
  double grand_ms = 0;
  for (const Entry& e : menu) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), e.name) == wanted.end() &&
        std::find(wanted.begin(), wanted.end(),
                  gen_family_str(e.spec.family)) == wanted.end())
      continue;
    GenSpec spec = e.spec;
    double total_ms = 0, max_ms = 0;
    int max_n = 0, violations = 0;
    long exact_uses = 0, rescue_uses = 0;
    for (int i = 0; i < cfg.count; ++i) {
      spec.seed = cfg.seed + static_cast<uint64_t>(i);
      GenOutput o = generate(spec);
      auto t0 = std::chrono::steady_clock::now();
      ColorResult r = color(o.graph);
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      total_ms += ms;
      max_ms = std::max(max_ms, ms);
      max_n = std::max(max_n, o.graph.n());
      if (!r.ok() || r.bounds.chi_alg > r.bounds.bound54) ++violations;
      exact_uses += r.exact_uses;
      rescue_uses += r.rescue_uses;
    }
    rows.push_back(json{{"family", e.name},
                        {"instances", cfg.count},
                        {"total_ms", total_ms},
                        {"max_ms", max_ms},
                        {"max_n", max_n},
                        {"violations", violations},
                        {"exact_uses", exact_uses},
                        {"rescue_uses", rescue_uses}});
    violations_total += violations;
    grand_ms += total_ms;
  }
  emit(out,
       json{{"schema", 1},
            {"families", rows},
            {"total_ms", grand_ms},
            {"violations", violations_total}},
       cfg.pretty);
  return violations_total ? 3 : 0;
}

}  // namespace detail

inline int cli_main(std::vector<std::string> args, std::istream& in, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"(P6,C4)-free graphs: recognition, structure certificates, bounded coloring"};
  app.name("p6c4");
  app.require_subcommand(1);
  RunConfig cfg;
  GenSpec gspec;
  std::string cert_path, coloring_path;
  std::vector<std::string> bench_families;
  int exit_code = 0;

  const std::map<std::string, GraphFormat> fmt_names{{"auto", GraphFormat::AUTO},
                                                     {"edge-list", GraphFormat::EDGE_LIST},
                                                     {"graph6", GraphFormat::GRAPH6}};
  auto add_common = [&](CLI::App* sub, bool many_inputs) {
    if (many_inputs)
      sub->add_option("input", cfg.inputs, "graph file(s); \"-\" or none reads stdin");
    else
      sub->add_option("input", cfg.inputs, "graph file; \"-\" or none reads stdin")
          ->expected(0, 1);
    sub->add_option("--format", cfg.format,
                    "input format (default: by extension, sniffed on stdin)")
        ->transform(CLI::CheckedTransformer(fmt_names, CLI::ignore_case));
    sub->add_flag("--pretty", cfg.pretty, "indent JSON output");
  };
  // sink selection happens inside the callbacks so --output failures are IO errors
  auto with_sink = [&](const std::function<int(std::ostream&)>& body) {
    if (cfg.output.empty()) return body(out);
    std::ofstream f(cfg.output);
    if (!f) throw graph_error("cannot write " + cfg.output);
    return body(f);
  };

  CLI::App* rec = app.add_subcommand("recognize", "test (P6,C4)-freeness, reporting a witness");
  add_common(rec, true);
  rec->add_flag("--json", cfg.as_json, "machine-readable report");
  rec->add_flag("--batch", cfg.batch, "inputs are json-lines manifests");
  rec->add_option("-o,--output", cfg.output, "write the report to this file");
  rec->callback([&] {
    exit_code = with_sink([&](std::ostream& o) { return detail::run_recognize(cfg, in, o); });
  });

  CLI::App* dec = app.add_subcommand("decompose", "emit a structure certificate as JSON");
  add_common(dec, true);
  dec->add_flag("--batch", cfg.batch, "inputs are json-lines manifests");
  dec->add_option("-o,--output", cfg.output, "write the report to this file");
  dec->callback([&] {
    exit_code = with_sink([&](std::ostream& o) {
      return detail::for_each_graph(cfg, in, o, [&](const Graph& g, int& code) {
        json j = detail::decompose_report(g, code);
        if (!cfg.batch) j["meta"] = json{{"generated_at", detail::iso_now()}};
        return j;
      });
    });
  });

  CLI::App* col = app.add_subcommand("color", "color within ceil(5*omega/4) and report bounds");
  add_common(col, true);
  col->add_flag("--batch", cfg.batch, "inputs are json-lines manifests");
  col->add_flag("--trace", cfg.with_trace, "include the step-by-step derivation");
  col->add_flag("--exact", cfg.want_exact, "also run the exponential chromatic oracle");
  col->add_flag("--force", cfg.force, "override the oracle size cap");
  col->add_option("-o,--output", cfg.output, "write the report to this file");
  col->callback([&] {
    exit_code = with_sink([&](std::ostream& o) {
      return detail::for_each_graph(cfg, in, o, [&](const Graph& g, int& code) {
        json j = detail::color_report(g, cfg, err, code);
        if (!cfg.batch) j["meta"] = json{{"generated_at", detail::iso_now()}};
        return j;
      });
    });
  });

  CLI::App* exa = app.add_subcommand("exact", "exponential oracles: clique number and chromatic number");
  add_common(exa, true);
  exa->add_flag("--force", cfg.force, "override the oracle size caps");
  exa->add_option("-o,--output", cfg.output, "write the report to this file");
  exa->callback([&] {
    exit_code = with_sink([&](std::ostream& o) { return detail::run_exact(cfg, in, o); });
  });

  CLI::App* gen = app.add_subcommand("gen", "generate class members with certificates");
  const std::map<std::string, GenFamily> fam_names{
      {"blowup", GenFamily::BLOWUP}, {"fkl", GenFamily::FKL},
      {"tight", GenFamily::TIGHT},   {"band", GenFamily::BAND},
      {"belt", GenFamily::BELT},     {"boiler", GenFamily::BOILER},
      {"random", GenFamily::RANDOM_P6C4}, {"glued", GenFamily::GLUED}};
  const std::map<std::string, RandomStrategy> strat_names{
      {"structured", RandomStrategy::STRUCTURED}, {"rejection", RandomStrategy::REJECTION}};
  std::string base_s = "C5";
  gen->add_option("--family", gspec.family, "blowup|fkl|tight|band|belt|boiler|random|glued")
      ->transform(CLI::CheckedTransformer(fam_names, CLI::ignore_case));
  gen->add_option("--base", base_s, "blowup base: P3|dart|C5|C6|H1..H5|F1..F3|Fkl");
  gen->add_option("--k", gspec.base.k, "first parameter of the two-tab pentagon family");
  gen->add_option("--l", gspec.base.l, "second parameter of the two-tab pentagon family");
  gen->add_option("--sizes", gspec.sizes,
                  "family-specific sizes, comma separated (see README)")
      ->delimiter(',');
  gen->add_option("--q", gspec.q, "tight-example scale");
  gen->add_option("--n", gspec.n, "target order for random/glued");
  gen->add_option("--depth", gspec.depth, "number of gluings for the glued family");
  gen->add_option("--strategy", gspec.strategy, "random sampling: structured|rejection")
      ->transform(CLI::CheckedTransformer(strat_names, CLI::ignore_case));
  gen->add_option("--seed", cfg.seed, "RNG seed; instance i uses seed+i");
  gen->add_option("--count", cfg.count, "how many instances to produce");
  gen->add_option("-o,--output", cfg.output, "file stem; writes <stem>.txt/.g6 + <stem>.cert.json");
  gen->add_option("--format", cfg.format, "output graph format (edge-list|graph6)")
      ->transform(CLI::CheckedTransformer(fmt_names, CLI::ignore_case));
  gen->add_flag("--pretty", cfg.pretty, "indent JSON output");
  gen->callback([&] {
    gspec.base.name = base_name_from_str(base_s);
    exit_code = detail::run_gen(cfg, gspec, out);
  });

  CLI::App* ver = app.add_subcommand("verify", "check a certificate and/or coloring against a graph");
  add_common(ver, false);
  ver->add_option("--cert", cert_path, "certificate JSON to validate");
  ver->add_option("--coloring", coloring_path, "coloring JSON to validate");
  ver->add_flag("--json", cfg.as_json, "machine-readable report");
  ver->add_option("-o,--output", cfg.output, "write the report to this file");
  ver->callback([&] {
    exit_code = with_sink(
        [&](std::ostream& o) { return detail::run_verify(cfg, in, o, cert_path, coloring_path); });
  });

  CLI::App* ben = app.add_subcommand("bench", "time the pipeline over generated corpora");
  ben->add_option("--family", bench_families, "restrict to these families (e.g. band blowup:H1)");
  ben->add_option("--count", cfg.count, "instances per family");
  ben->add_option("--seed", cfg.seed, "base RNG seed");
  ben->add_flag("--pretty", cfg.pretty, "indent JSON output");
  ben->add_option("-o,--output", cfg.output, "write the report to this file");
  ben->callback([&] {
    cfg.count = std::max(cfg.count, 1);
    exit_code =
        with_sink([&](std::ostream& o) { return detail::run_bench(cfg, bench_families, o); });
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;  // help/version exit clean; usage trouble is 1
  } catch (const graph_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal invariant failure: " << e.what() << '\n';
    return 3;
  }
  return exit_code;
}

}  // namespace p6c4
