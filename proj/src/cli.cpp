#include "geodesy/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "geodesy/bounds.hpp"
#include "geodesy/entropy.hpp"
#include "geodesy/extremal.hpp"
#include "geodesy/filling.hpp"
#include "geodesy/geodesic.hpp"
#include "geodesy/multigraph.hpp"
#include "geodesy/search.hpp"
#include "geodesy/walk.hpp"

namespace geodesy {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file '" + path + "'");
  out << text;
}

MultiGraph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_file(path);
  if (format == "edge-list") return MultiGraph::parse_edge_list(text);
  if (format == "json") return MultiGraph::parse_json(text);
  auto first = text.find_first_not_of(" \t\r\n");
  bool looks_json = first != std::string::npos && text[first] == '{';
  return looks_json ? MultiGraph::parse_json(text) : MultiGraph::parse_edge_list(text);
}

Json tokens_json(const std::string& source, const PathSeq& path) {
  return Json(path_tokens(source, path));
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

Json graph_json(const MultiGraph& g, const std::string& x, const std::string& y) {
  return Json::parse(g.to_json({{"x", x}, {"y", y}}));
}

f2::ChainComplexF2 load_complex(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto dims = [&](size_t want) {
    std::vector<long> out;
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        out.push_back(std::stol(tok));
      } catch (...) {
        throw DomainError("bad complex spec '" + spec + "'");
      }
    }
    if (out.size() != want) throw DomainError("bad complex spec '" + spec + "'");
    return out;
  };
  if (kind == "grid2d") {
    auto d = dims(2);
    return f2::build_grid2d(d[0], d[1]);
  }
  if (kind == "grid3d") {
    auto d = dims(3);
    return f2::build_grid3d(d[0], d[1], d[2]);
  }
  if (kind == "cube-surface") return f2::build_cube_surface();
  if (kind == "file") return f2::build_simplicial(read_file(rest));
  throw DomainError("unknown complex spec '" + spec + "'");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(tok);
  return out;
}

int chain_dim_of(const f2::ChainComplexF2& x, const std::string& id) {
  for (int k = 0; k <= x.dimension(); ++k) {
    try {
      x.face_index(k, id);
      return k;
    } catch (const DomainError&) {
    }
  }
  throw DomainError("unknown face '" + id + "'");
}

f2::ChainF2 chain_from_ids(const f2::ChainComplexF2& x,
                           const std::vector<std::string>& ids) {
  if (ids.empty()) throw DomainError("empty chain");
  int k = chain_dim_of(x, ids[0]);
  return f2::make_chain(x, k, ids);
}

struct FillInputs {
  std::vector<std::string> cycle_ids;
  std::string cycle_file;
  std::vector<std::string> boundary_of;

  f2::ChainF2 resolve(const f2::ChainComplexF2& x) const {
    int given = !cycle_ids.empty() + !cycle_file.empty() + !boundary_of.empty();
    if (given != 1)
      throw DomainError(
          "give exactly one of --cycle-ids, --cycle-file, --boundary-of");
    if (!boundary_of.empty())
      return f2::boundary(x, chain_from_ids(x, boundary_of));
    std::vector<std::string> ids;
    if (!cycle_ids.empty()) {
      ids = cycle_ids;
    } else {
      Json doc;
      try {
        doc = Json::parse(read_file(cycle_file));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad chain JSON: ") + e.what());
      }
      if (!doc.is_array()) throw ParseError("chain file must be a JSON array of ids");
      for (const auto& v : doc) ids.push_back(v.get<std::string>());
    }
    return chain_from_ids(x, ids);
  }
};

void flatten(const Json& value, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (value.is_array()) {
    // arrays are dropped from CSV output
  } else if (value.is_string()) {
    out.emplace_back(prefix, value.get<std::string>());
  } else {
    out.emplace_back(prefix, value.dump());
  }
}

void emit(std::ostream& out, const Json& report, const std::string& format) {
  if (format == "csv") {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(report, "", cells);
    for (size_t i = 0; i < cells.size(); ++i)
      out << cells[i].first << (i + 1 < cells.size() ? "," : "\n");
    for (size_t i = 0; i < cells.size(); ++i)
      out << cells[i].second << (i + 1 < cells.size() ? "," : "\n");
    return;
  }
  out << report.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact shortest-path counting, certification and search for "
               "bounded-degree multigraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool timing = false;
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--timing", timing, "include wall-clock timing in the report");

  std::string graph_path, input_format = "auto", source, target;
  auto add_pair_opts = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "graph file")->required();
    cmd->add_option("--input-format", input_format, "graph file format")
        ->check(CLI::IsMember({"auto", "edge-list", "json"}));
    cmd->add_option("--source", source, "source vertex")->required();
    cmd->add_option("--target", target, "target vertex")->required();
  };

  auto* cmd_count = app.add_subcommand("count", "count shortest paths");
  add_pair_opts(cmd_count);

  unsigned long long cap = 1000000;
  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list all shortest paths explicitly");
  add_pair_opts(cmd_enumerate);
  cmd_enumerate->add_option("--cap", cap, "maximum number of paths");

  unsigned long seed = 0;
  auto* cmd_sample = app.add_subcommand("sample", "draw one uniform shortest path");
  add_pair_opts(cmd_sample);
  cmd_sample->add_option("--seed", seed, "RNG seed");

  auto* cmd_entropy =
      app.add_subcommand("entropy", "conditional-entropy decomposition");
  add_pair_opts(cmd_entropy);

  std::string claims = "theorem1";
  long declared_delta = 0;
  auto* cmd_certify = app.add_subcommand("certify", "check count against bounds");
  add_pair_opts(cmd_certify);
  cmd_certify->add_option("--claims", claims, "comma-separated bound kinds");
  cmd_certify->add_option("--delta", declared_delta,
                          "declared max degree (>= graph max degree)");

  auto* cmd_refine =
      app.add_subcommand("refine", "per-graph refined squared certificate");
  add_pair_opts(cmd_refine);

  auto* cmd_girth = app.add_subcommand("girth", "shortest cycle length");
  cmd_girth->add_option("--graph", graph_path, "graph file")->required();
  cmd_girth->add_option("--input-format", input_format, "graph file format")
      ->check(CLI::IsMember({"auto", "edge-list", "json"}));

  auto* cmd_gen = app.add_subcommand("gen", "generate a named family");
  cmd_gen->require_subcommand(1);
  long gen_delta = 0, gen_t = 0, gen_girth = 0;
  unsigned long long gen_budget = 100000;
  std::string gen_out, gen_mode = "even";
  bool gen_json = false;
  auto* gen_cycle = cmd_gen->add_subcommand("cycle", "alternating-bundle cycle");
  gen_cycle->add_option("--delta", gen_delta)->required();
  gen_cycle->add_option("--t", gen_t)->required();
  gen_cycle->add_option("--out", gen_out, "write the graph to this file");
  gen_cycle->add_flag("--json-out", gen_json, "write JSON instead of edge-list");
  auto* gen_blowup = cmd_gen->add_subcommand("blowup", "simple blowup ring");
  gen_blowup->add_option("--delta", gen_delta)->required();
  gen_blowup->add_option("--t", gen_t)->required();
  gen_blowup->add_option("--mode", gen_mode)
      ->check(CLI::IsMember({"even", "odd", "high-girth"}));
  gen_blowup->add_option("--girth", gen_girth, "girth target for high-girth mode");
  gen_blowup->add_option("--budget", gen_budget, "gadget search budget");
  gen_blowup->add_option("--out", gen_out, "write the graph to this file");
  gen_blowup->add_flag("--json-out", gen_json, "write JSON instead of edge-list");

  long search_delta = 0, search_t = 0, search_cap = 3;
  bool search_simple = false;
  int jobs = 1;
  unsigned long long node_limit = 100000000ULL;
  bool node_limit_given = false;
  auto* cmd_search =
      app.add_subcommand("search", "exhaustive layered-profile maximum");
  cmd_search->add_option("--delta", search_delta)->required();
  cmd_search->add_option("--t", search_t)->required();
  cmd_search->add_option("--cap", search_cap, "max interior layer size");
  cmd_search->add_flag("--simple", search_simple, "restrict to simple graphs");
  cmd_search->add_option("--jobs", jobs, "worker threads");
  cmd_search->add_option("--limit", node_limit, "node budget")
      ->each([&](const std::string&) { node_limit_given = true; });

  long walk_delta = 0;
  auto* cmd_walk = app.add_subcommand(
      "walk", "quantize a weighted graph and compute minimal arrival probability");
  cmd_walk->add_option("--graph", graph_path, "weighted edge-list file")->required();
  cmd_walk->add_option("--delta", walk_delta, "quantization denominator")->required();
  cmd_walk->add_option("--source", source)->required();
  cmd_walk->add_option("--target", target)->required();

  auto* cmd_fill = app.add_subcommand("fill", "F2 minimal fillings");
  cmd_fill->require_subcommand(1);
  std::string complex_spec;
  FillInputs fill_in;
  int kernel_cap = 24;
  unsigned long long list_cap = 16;
  auto add_fill_opts = [&](CLI::App* cmd) {
    cmd->add_option("--complex", complex_spec,
                    "grid2d:P,Q | grid3d:P,Q,R | cube-surface | file:PATH")
        ->required();
    cmd->add_option("--cycle-ids", fill_in.cycle_ids, "face ids of the cycle");
    cmd->add_option("--cycle-file", fill_in.cycle_file, "JSON array of face ids");
    cmd->add_option("--boundary-of", fill_in.boundary_of,
                    "take the boundary of these top faces as the cycle");
  };
  auto* fill_min = cmd_fill->add_subcommand("minimal-fillings",
                                            "minimum-support fillings of a cycle");
  add_fill_opts(fill_min);
  fill_min->add_option("--kernel-cap", kernel_cap, "max kernel dimension");
  fill_min->add_option("--list-cap", list_cap, "max witnesses listed");
  fill_min->add_option("--jobs", jobs, "worker threads");
  auto* fill_irr = cmd_fill->add_subcommand("irreducible",
                                            "test a cycle for irreducibility");
  add_fill_opts(fill_irr);

  std::vector<std::string> argv_like(args.begin(), args.end());
  try {
    std::vector<const char*> argv;
    argv.push_back("geodesy");
    for (const auto& a : argv_like) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (const char* env = std::getenv("GEODESY_PROFILE_LIMIT");
      env && !node_limit_given) {
    try {
      node_limit = std::stoull(env);
    } catch (...) {
      err << "bad GEODESY_PROFILE_LIMIT value\n";
      return 2;
    }
  }

  Json report;
  Json inputs = Json::object();
  Json warnings = Json::array();
  std::string command;
  const auto started = std::chrono::steady_clock::now();

  try {
    Json results = Json::object();

    if (cmd_count->parsed()) {
      command = "count";
      inputs = {{"graph", graph_path}, {"source", source}, {"target", target}};
      MultiGraph g = load_graph(graph_path, input_format);
      GeodesicDag dag = geodesic_dag(g, source, target);
      results["n"] = dag.total_count().get_str();
      results["t"] = dag.distance;
    } else if (cmd_enumerate->parsed()) {
      command = "enumerate";
      inputs = {{"graph", graph_path},
                {"source", source},
                {"target", target},
                {"cap", cap}};
      MultiGraph g = load_graph(graph_path, input_format);
      auto paths = enumerate_shortest_paths(g, source, target, cap);
      results["n"] = std::to_string(paths.size());
      results["t"] = paths.empty() ? 0 : static_cast<long>(paths.front().size());
      Json arr = Json::array();
      for (const auto& p : paths) arr.push_back(tokens_json(source, p));
      results["paths"] = std::move(arr);
    } else if (cmd_sample->parsed()) {
      command = "sample";
      inputs = {{"graph", graph_path},
                {"source", source},
                {"target", target},
                {"seed", seed}};
      MultiGraph g = load_graph(graph_path, input_format);
      GeodesicDag dag = geodesic_dag(g, source, target);
      PathSeq path = sample_shortest_path(dag, seed);
      results["path"] = tokens_json(source, path);
      results["probability"] = rational_str(path_probability(dag, path));
      results["t"] = dag.distance;
    } else if (cmd_entropy->parsed()) {
      command = "entropy";
      inputs = {{"graph", graph_path}, {"source", source}, {"target", target}};
      MultiGraph g = load_graph(graph_path, input_format);
      GeodesicDag dag = geodesic_dag(g, source, target);
      EntropyReport rep = entropy_decomposition(dag);
      results["n"] = dag.total_count().get_str();
      results["t"] = dag.distance;
      results["h_total"] = rep.h_total;
      results["forward"] = rep.forward;
      results["backward"] = rep.backward;
      results["paired"] = rep.paired;
      results["log2_delta"] = rep.log2_delta;
      results["log2_split"] = rep.log2_split;
      results["sum_forward"] = rep.sum_forward();
      results["sum_backward"] = rep.sum_backward();
      results["two_sided_sum"] = rep.two_sided_sum();
      DegreeSplitReport split = check_degree_split(dag);
      Json entries = Json::array();
      for (const auto& e : split.entries)
        entries.push_back({{"vertex", e.vertex},
                           {"deg_x", e.deg_toward_source.get_str()},
                           {"deg_y", e.deg_toward_target.get_str()},
                           {"disjoint", e.disjoint},
                           {"within_delta", e.within_delta}});
      results["degree_split"] = {{"all_pass", split.all_pass},
                                 {"entries", std::move(entries)}};
    } else if (cmd_certify->parsed()) {
      command = "certify";
      inputs = {{"graph", graph_path},
                {"source", source},
                {"target", target},
                {"claims", claims}};
      MultiGraph g = load_graph(graph_path, input_format);
      std::vector<BoundKind> kinds;
      for (const auto& name : split_commas(claims)) {
        auto kind = bound_kind_from_name(name);
        if (!kind) throw DomainError("unknown bound kind '" + name + "'");
        kinds.push_back(*kind);
      }
      std::optional<mpz_class> declared;
      if (declared_delta > 0) declared = mpz_class(declared_delta);
      CertReport rep = certify(g, source, target, kinds, declared);
      results["n"] = rep.n.get_str();
      results["t"] = rep.t;
      results["delta"] = rep.delta_used.get_str();
      Json verdicts = Json::object();
      for (const auto& [kind, v] : rep.verdicts) {
        Json one = {{"applicable", v.applicable}};
        if (v.applicable) {
          one["pass"] = v.pass;
          one["tight"] = v.tight;
          one["squared_bound"] = rational_str(v.squared_bound);
        }
        verdicts[bound_kind_name(kind)] = std::move(one);
      }
      results["verdicts"] = std::move(verdicts);
      results["refined_squared"] = rep.refined_squared.get_str();
      if (rep.triangulation_local_ok)
        results["triangulation_local_ok"] = *rep.triangulation_local_ok;
    } else if (cmd_refine->parsed()) {
      command = "refine";
      inputs = {{"graph", graph_path}, {"source", source}, {"target", target}};
      MultiGraph g = load_graph(graph_path, input_format);
      GeodesicDag dag = geodesic_dag(g, source, target);
      mpz_class refined = refined_certificate(dag);
      results["n"] = dag.total_count().get_str();
      results["t"] = dag.distance;
      results["refined_squared"] = refined.get_str();
      results["tight"] = dag.total_count() * dag.total_count() == refined;
    } else if (cmd_girth->parsed()) {
      command = "girth";
      inputs = {{"graph", graph_path}};
      MultiGraph g = load_graph(graph_path, input_format);
      auto girth = g.girth();
      if (girth)
        results["girth"] = *girth;
      else
        results["girth"] = "acyclic";
    } else if (gen_cycle->parsed() || gen_blowup->parsed()) {
      command = gen_cycle->parsed() ? "gen cycle" : "gen blowup";
      Generated gen;
      if (gen_cycle->parsed()) {
        inputs = {{"delta", gen_delta}, {"t", gen_t}};
        gen = gen_cycle_multigraph(gen_delta, gen_t);
        results["family"] = "cycle-multigraph";
        results["closed_form"] =
            closed_form_count(Family::cycle_multigraph, gen_delta, gen_t).get_str();
      } else {
        inputs = {{"delta", gen_delta}, {"t", gen_t}, {"mode", gen_mode}};
        BlowupMode mode = gen_mode == "even"  ? BlowupMode::even
                          : gen_mode == "odd" ? BlowupMode::odd_alternating
                                              : BlowupMode::high_girth;
        gen = gen_blowup_cycle(gen_delta, gen_t, mode, gen_girth, gen_budget);
        results["family"] = "blowup-cycle(" + gen_mode + ")";
        if (mode == BlowupMode::even)
          results["closed_form"] =
              closed_form_count(Family::blowup_cycle, gen_delta, gen_t).get_str();
      }
      results["delta"] = gen_delta;
      results["t"] = gen_t;
      results["x"] = gen.x;
      results["y"] = gen.y;
      results["vertices"] = gen.graph.num_vertices();
      results["edge_records"] = gen.graph.edges().size();
      std::string text = gen_json ? gen.graph.to_json({{"x", gen.x}, {"y", gen.y}})
                                  : gen.graph.to_edge_list();
      if (!gen_out.empty()) {
        write_file(gen_out, text);
        results["file"] = gen_out;
      } else {
        results["graph"] = text;
      }
    } else if (cmd_search->parsed()) {
      command = "search";
      inputs = {{"delta", search_delta},
                {"t", search_t},
                {"cap", search_cap},
                {"simple", search_simple},
                {"jobs", jobs}};
      SearchOptions opt;
      opt.layer_cap = search_cap;
      opt.simple = search_simple;
      opt.jobs = jobs;
      opt.node_limit = node_limit;
      SearchResult res = search_max_count(search_delta, search_t, opt);
      results["max_count"] = res.max_count.get_str();
      results["layer_cap"] = res.layer_cap;
      results["simple"] = res.simple_mode;
      results["profiles_explored"] = res.profiles_explored;
      results["witness_x"] = res.witness_x;
      results["witness_y"] = res.witness_y;
      results["witness"] = graph_json(res.witness, res.witness_x, res.witness_y);
    } else if (cmd_walk->parsed()) {
      command = "walk";
      inputs = {{"graph", graph_path},
                {"delta", walk_delta},
                {"source", source},
                {"target", target}};
      WeightedGraph w = WeightedGraph::parse_edge_list(read_file(graph_path));
      QuantizedWalk q = quantize_weights(w, walk_delta);
      for (const auto& dropped : q.dropped_edges)
        warnings.push_back("edge " + dropped + " rounded to multiplicity 0; dropped");
      ArrivalProbability arrival = minimal_arrival_probability(q, source, target);
      results["delta"] = walk_delta;
      results["t"] = arrival.t;
      results["n"] = arrival.n.get_str();
      results["probability"] = rational_str(arrival.probability);
      mpq_class bound(1, 1);
      if (arrival.t >= 1) {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(arrival.t - 1));
        bound = mpq_class(1, den);
      }
      results["bound"] = rational_str(bound);
      results["quantization_error"] = rational_str(q.quantization_error);
      Json pads = Json::object();
      for (const auto& [v, pad] : q.self_loop_pad) pads[v] = pad.get_str();
      results["self_loop_pad"] = std::move(pads);
    } else if (fill_min->parsed() || fill_irr->parsed()) {
      command = fill_min->parsed() ? "fill minimal-fillings" : "fill irreducible";
      inputs = {{"complex", complex_spec}};
      if (!fill_in.cycle_ids.empty()) inputs["cycle_ids"] = Json(fill_in.cycle_ids);
      if (!fill_in.cycle_file.empty()) inputs["cycle_file"] = fill_in.cycle_file;
      if (!fill_in.boundary_of.empty())
        inputs["boundary_of"] = Json(fill_in.boundary_of);
      f2::ChainComplexF2 complex = load_complex(complex_spec);
      f2::ChainF2 cycle = fill_in.resolve(complex);
      results["cycle_dim"] = cycle.dim;
      results["cycle_support"] = cycle.support.popcount();
      results["top_codegree"] = complex.top_codegree();
      if (fill_irr->parsed()) {
        results["irreducible"] = f2::is_irreducible(complex, cycle);
      } else {
        f2::FillingResult res = f2::minimal_fillings(
            complex, cycle, kernel_cap, static_cast<size_t>(list_cap), jobs);
        results["m"] = res.m;
        results["count"] = res.count.get_str();
        results["kernel_dim"] = res.kernel_dim;
        Json wits = Json::array();
        for (const auto& w : res.witnesses) {
          Json ids = Json::array();
          for (size_t j : w.support.ones())
            ids.push_back(complex.face_id(w.dim, j));
          wits.push_back(std::move(ids));
        }
        results["witnesses"] = std::move(wits);
      }
    }

    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    report["warnings"] = std::move(warnings);
    if (timing) {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - started);
      report["timing_ms"] = elapsed.count();
    }
    emit(out, report, format);
    return 0;
  } catch (const std::exception& e) {
    Json error_report;
    error_report["command"] = command;
    error_report["inputs"] = std::move(inputs);
    error_report["error"] = e.what();
    emit(out, error_report, format);
    return 1;
  }
}

}  // namespace geodesy
