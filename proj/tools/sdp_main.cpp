// Copyright 2026 The sdpaths Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: terrain I/O, generators, and the solve / query /
// verify / bench drivers.
//
// Exit codes: 0 success, 1 infeasible targets (or a failed verification),
// 2 input errors, 3 internal invariant violations.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdp/descend_graph.hpp"
#include "sdp/discretize.hpp"
#include "sdp/errors.hpp"
#include "sdp/generators.hpp"
#include "sdp/io.hpp"
#include "sdp/oracle.hpp"
#include "sdp/query.hpp"
#include "sdp/sssp.hpp"
#include "sdp/terrain.hpp"

namespace {

using nlohmann::json;
using namespace sdp;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct TerrainOptions {
  std::string path;
  std::string format = "json";
  std::string family;
  double param = 1.0;
  int rows = 4, cols = 4;
  std::uint64_t seed = 0;
};

void add_terrain_options(CLI::App* cmd, TerrainOptions& opt) {
  auto* path = cmd->add_option("--terrain", opt.path, "Terrain file to load");
  cmd->add_option("--format", opt.format, "Terrain file format")
      ->check(CLI::IsMember({"json", "off"}));
  auto* family =
      cmd->add_option("--family", opt.family, "Generate a terrain instead of loading one")
          ->check(CLI::IsMember({"ramp", "skinny", "nearlevel", "random"}));
  cmd->add_option("--param", opt.param, "Generator parameter (scale/aspect/tilt)");
  cmd->add_option("--rows", opt.rows, "Rows for the random family");
  cmd->add_option("--cols", opt.cols, "Columns for the random family");
  cmd->add_option("--seed", opt.seed, "Seed for the random family");
  path->excludes(family);
  family->excludes(path);
}

Terrain make_terrain(const TerrainOptions& opt) {
  if (!opt.path.empty()) {
    return load_terrain_file(opt.path, opt.format == "off" ? TerrainFormat::off
                                                           : TerrainFormat::json);
  }
  if (opt.family == "ramp") return make_ramp(opt.param);
  if (opt.family == "skinny") return make_skinny(opt.param);
  if (opt.family == "nearlevel") return make_nearlevel(opt.param);
  if (opt.family == "random") return make_random(opt.rows, opt.cols, opt.seed);
  throw DomainError("exactly one of --terrain or --family is required");
}

Terrain make_valid_terrain(const TerrainOptions& opt) {
  Terrain t = make_terrain(opt);
  const ValidationReport report = validate(t);
  if (!report.ok()) {
    throw DomainError("terrain failed validation:\n" + report.to_string());
  }
  return t;
}

// "v:ID" or "p:x,y[,z]".
struct PointSpec {
  bool is_vertex = false;
  int vertex = -1;
  Vec3 point;
  bool has_z = false;
  std::string text;
};

PointSpec parse_point_spec(const std::string& s) {
  PointSpec spec;
  spec.text = s;
  try {
    if (s.rfind("v:", 0) == 0) {
      spec.is_vertex = true;
      spec.vertex = std::stoi(s.substr(2));
      return spec;
    }
    if (s.rfind("p:", 0) != 0) {
      throw DomainError("point spec must look like v:ID or p:x,y[,z]: " + s);
    }
    std::istringstream is(s.substr(2));
    std::string tok;
    std::vector<double> nums;
    while (std::getline(is, tok, ',')) nums.push_back(std::stod(tok));
    if (nums.size() != 2 && nums.size() != 3) {
      throw DomainError("point spec needs 2 or 3 coordinates: " + s);
    }
    spec.point = {nums[0], nums[1], nums.size() == 3 ? nums[2] : 0.0};
    spec.has_z = nums.size() == 3;
    return spec;
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed point spec: " + s);
  } catch (const std::out_of_range&) {
    throw DomainError("malformed point spec: " + s);
  }
}

Vec3 resolve_point(const Terrain& t, const PointSpec& spec) {
  if (spec.is_vertex) {
    if (spec.vertex < 0 || spec.vertex >= t.vertex_count()) {
      throw IndexError("vertex " + std::to_string(spec.vertex) + " out of range");
    }
    return t.vertex(spec.vertex);
  }
  if (spec.has_z) return spec.point;
  return {spec.point.x, spec.point.y, surface_z(t, spec.point.x, spec.point.y)};
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot open " + out_path + " for writing");
  out << content;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct SolveSetup {
  Terrain terrain;
  GeomParams params;
  Discretization disc;
  int source_node = -1;
  double preprocess_ms = 0;
  std::vector<std::pair<std::string, QueryAnswer>> answers;  // target text -> answer
  std::vector<std::string> infeasible;
  ShortestPathTree tree;
};

json answer_to_json(const QueryAnswer& ans) {
  json j;
  j["points"] = json::array();
  for (const Vec3& p : ans.path.points) j["points"].push_back({p.x, p.y, p.z});
  j["length"] = ans.length;
  j["terminal_kind"] =
      ans.terminal == QueryAnswer::Terminal::tree_node ? "tree-node" : "interior-point";
  if (ans.last_hop >= 0) j["last_hop"] = ans.last_hop;
  return j;
}

int cmd_info(const TerrainOptions& topt, double epsilon, const std::string& out) {
  const Terrain t = make_valid_terrain(topt);
  const GeomParams gp = geometry_params(t);
  std::ostringstream os;
  os << "vertices " << t.vertex_count() << "\n"
     << "edges " << t.edge_count() << "\n"
     << "faces " << t.face_count() << "\n"
     << "longest_edge " << fmt17(gp.longest_edge) << "\n"
     << "clearance " << fmt17(gp.clearance) << "\n"
     << "steepness_rad " << fmt17(gp.steepness) << "\n"
     << "sec_steepness " << fmt17(gp.sec_steepness) << "\n"
     << "geometry_factor " << fmt17(gp.geometry_factor) << "\n";
  if (epsilon > 0) {
    const Discretization d = discretize(t, gp, epsilon);
    os << "epsilon " << fmt17(epsilon) << "\n"
       << "delta " << fmt17(d.delta) << "\n"
       << "node_count " << d.node_count() << "\n"
       << "node_bound_per_edge " << fmt17(d.node_bound) << "\n"
       << "node_bound_total " << fmt17(3.0 * t.vertex_count() * d.node_bound) << "\n";
  }
  write_output(out, os.str());
  return kExitOk;
}

int cmd_gen(const TerrainOptions& topt, const std::string& out, const std::string& out_format) {
  const Terrain t = make_valid_terrain(topt);
  std::ostringstream os;
  save_terrain(os, t, out_format == "off" ? TerrainFormat::off : TerrainFormat::json);
  write_output(out, os.str());
  return kExitOk;
}

int cmd_discretize(const TerrainOptions& topt, double epsilon, const std::string& out) {
  const Terrain t = make_valid_terrain(topt);
  const GeomParams gp = geometry_params(t);
  const Discretization d = discretize(t, gp, epsilon);
  json j;
  j["delta"] = d.delta;
  j["node_bound_per_edge"] = d.node_bound;
  j["node_bound_total"] = 3.0 * t.vertex_count() * d.node_bound;
  j["node_count"] = d.node_count();
  j["per_edge"] = json::array();
  for (int e = 0; e < t.edge_count(); ++e) {
    j["per_edge"].push_back({{"edge", {t.edges()[e].a, t.edges()[e].b}},
                             {"nodes", d.edge_nodes[e].size()}});
  }
  write_output(out, j.dump(2) + "\n");
  return kExitOk;
}

SolveSetup run_solve(const TerrainOptions& topt, const std::string& source_spec, double epsilon,
                     const std::vector<std::string>& target_specs, const std::string& solver,
                     bool edge_chords) {
  SolveSetup s;
  s.terrain = make_valid_terrain(topt);

  std::optional<PointSpec> source;
  if (!source_spec.empty()) source = parse_point_spec(source_spec);
  if (source && !source->is_vertex) {
    const Vec3 p = resolve_point(s.terrain, *source);
    auto [with_source, id] = insert_source(s.terrain, p);
    s.terrain = std::move(with_source);
    s.source_node = id;
  } else if (source) {
    if (source->vertex < 0 || source->vertex >= s.terrain.vertex_count()) {
      throw IndexError("source vertex out of range");
    }
    s.source_node = source->vertex;
  } else if (s.terrain.source()) {
    s.source_node = *s.terrain.source();
  } else {
    throw DomainError("no source: pass --source or set \"source\" in the terrain file");
  }

  const auto t0 = std::chrono::steady_clock::now();
  s.params = geometry_params(s.terrain);
  s.disc = discretize(s.terrain, s.params, epsilon);
  const DescendGraph graph(s.terrain, s.disc, edge_chords);
  s.tree = solver == "bushwhack" ? bushwhack(graph, s.source_node)
                                 : dijkstra(graph, s.source_node);
  s.preprocess_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  for (const std::string& text : target_specs) {
    const PointSpec spec = parse_point_spec(text);
    const Vec3 v = resolve_point(s.terrain, spec);
    try {
      s.answers.emplace_back(text, query(s.terrain, s.disc, s.tree, v));
    } catch (const NoDescendingPathError&) {
      s.infeasible.push_back(text);
    }
  }
  return s;
}

int cmd_solve(const TerrainOptions& topt, const std::string& source_spec, double epsilon,
              const std::vector<std::string>& target_specs, const std::string& solver,
              bool edge_chords, const std::string& out) {
  SolveSetup s = run_solve(topt, source_spec, epsilon, target_specs, solver, edge_chords);

  int settled = static_cast<int>(s.tree.settle_order.size());
  json j;
  j["summary"] = {{"vertices", s.terrain.vertex_count()},
                  {"epsilon", epsilon},
                  {"delta", s.disc.delta},
                  {"node_count", s.disc.node_count()},
                  {"settled", settled},
                  {"source_node", s.source_node},
                  {"solver", solver},
                  {"edge_chords", edge_chords},
                  {"geometry_factor", s.params.geometry_factor}};
  j["answers"] = json::array();
  for (const auto& [text, ans] : s.answers) {
    json a = answer_to_json(ans);
    a["target"] = text;
    a["status"] = "ok";
    j["answers"].push_back(std::move(a));
  }
  for (const std::string& text : s.infeasible) {
    j["answers"].push_back({{"target", text}, {"status", "no-descending-path"}});
  }
  write_output(out, j.dump(2) + "\n");
  return s.infeasible.empty() ? kExitOk : kExitInfeasible;
}

int cmd_query(const TerrainOptions& topt, const std::string& source_spec, double epsilon,
              const std::string& target_spec, const std::string& solver, bool edge_chords,
              const std::string& out) {
  SolveSetup s = run_solve(topt, source_spec, epsilon, {target_spec}, solver, edge_chords);
  if (!s.infeasible.empty()) {
    write_output(out, json({{"target", target_spec}, {"status", "no-descending-path"}}).dump(2) +
                          "\n");
    return kExitInfeasible;
  }
  write_output(out, answer_to_json(s.answers.front().second).dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const TerrainOptions& topt, const std::string& path_file,
               const std::string& out) {
  const Terrain t = make_valid_terrain(topt);
  std::ifstream in(path_file);
  if (!in) throw ParseError("cannot open " + path_file);
  const Path p = load_path_json(in);
  const DescendReport report = verify_descending(t, p);
  std::ostringstream os;
  if (report.pass) {
    os << "pass: descending path of length " << fmt17(p.length) << "\n";
  } else {
    os << "fail: " << report.reason << "\n";
  }
  write_output(out, os.str());
  return report.pass ? kExitOk : kExitInfeasible;
}

int cmd_bench(const TerrainOptions& topt, const std::string& source_spec,
              std::vector<double> epsilons, const std::vector<std::string>& target_specs,
              const std::string& solver, bool edge_chords, const std::string& out) {
  std::ostringstream os;
  os << "terrain,n,geometry_factor,epsilon,node_count,settled,preprocess_ms,"
        "query_node_us,query_interior_us,approx_ratio\n";
  if (target_specs.empty()) {
    write_output(out, os.str());
    return kExitOk;
  }
  std::sort(epsilons.begin(), epsilons.end());
  const double finest = epsilons.front();

  const std::string terrain_id = topt.path.empty() ? topt.family : topt.path;

  // The finest run provides the approximation baseline per target.
  std::vector<double> baseline;
  SolveSetup fine = run_solve(topt, source_spec, finest, target_specs, solver, edge_chords);
  baseline.assign(target_specs.size(), std::numeric_limits<double>::quiet_NaN());
  for (size_t i = 0; i < target_specs.size(); ++i) {
    for (const auto& [text, ans] : fine.answers) {
      if (text == target_specs[i]) baseline[i] = ans.length;
    }
  }

  for (double eps : epsilons) {
    SolveSetup s = run_solve(topt, source_spec, eps, target_specs, solver, edge_chords);
    // Mean query times, split by node vs interior terminals.
    double node_us = 0, interior_us = 0;
    int node_cnt = 0, interior_cnt = 0;
    for (const auto& [text, _] : s.answers) {
      const PointSpec spec = parse_point_spec(text);
      const Vec3 v = resolve_point(s.terrain, spec);
      const auto q0 = std::chrono::steady_clock::now();
      const QueryAnswer ans = query(s.terrain, s.disc, s.tree, v);
      const double us =
          std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - q0)
              .count();
      if (ans.terminal == QueryAnswer::Terminal::tree_node) {
        node_us += us;
        ++node_cnt;
      } else {
        interior_us += us;
        ++interior_cnt;
      }
    }
    double ratio_sum = 0;
    int ratio_cnt = 0;
    for (size_t i = 0; i < target_specs.size(); ++i) {
      for (const auto& [text, ans] : s.answers) {
        if (text == target_specs[i] && std::isfinite(baseline[i]) && baseline[i] > 0) {
          ratio_sum += ans.length / baseline[i];
          ++ratio_cnt;
        }
      }
    }
    os << terrain_id << "," << s.terrain.vertex_count() << ","
       << fmt17(s.params.geometry_factor) << "," << fmt17(eps) << "," << s.disc.node_count()
       << "," << s.tree.settle_order.size() << "," << fmt17(s.preprocess_ms) << ","
       << fmt17(node_cnt ? node_us / node_cnt : 0) << ","
       << fmt17(interior_cnt ? interior_us / interior_cnt : 0) << ","
       << fmt17(ratio_cnt ? ratio_sum / ratio_cnt : 1.0) << "\n";
  }
  write_output(out, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate shortest descending paths on triangulated terrains"};
  app.require_subcommand(1);

  TerrainOptions topt;
  double epsilon = 0.5;
  std::string source_spec, target_spec, out, out_format = "json", solver = "dijkstra";
  std::vector<std::string> target_specs;
  std::vector<double> epsilons;
  bool edge_chords = false;
  std::string path_file;

  auto* info = app.add_subcommand("info", "Terrain metrics and discretization size");
  add_terrain_options(info, topt);
  info->add_option("--epsilon", epsilon, "Approximation parameter in (0,1]");
  info->add_option("--out", out, "Output file (stdout when omitted)");

  auto* gen = app.add_subcommand("gen", "Generate a terrain");
  add_terrain_options(gen, topt);
  gen->add_option("--out", out, "Output file (stdout when omitted)");
  gen->add_option("--out-format", out_format, "Output format")
      ->check(CLI::IsMember({"json", "off"}));

  auto* disc = app.add_subcommand("discretize", "Steiner-point audit report");
  add_terrain_options(disc, topt);
  disc->add_option("--epsilon", epsilon, "Approximation parameter in (0,1]");
  disc->add_option("--out", out, "Output file (stdout when omitted)");

  auto* solve = app.add_subcommand("solve", "Build the tree and answer targets");
  add_terrain_options(solve, topt);
  solve->add_option("--epsilon", epsilon, "Approximation parameter in (0,1]");
  solve->add_option("--source", source_spec, "Source: v:ID or p:x,y[,z]");
  solve->add_option("--target", target_specs, "Targets: v:ID or p:x,y[,z]")->take_all();
  solve->add_option("--solver", solver, "Solver")->check(CLI::IsMember({"dijkstra", "bushwhack"}));
  solve->add_flag("--edge-chords", edge_chords, "Add links between consecutive edge nodes");
  solve->add_option("--out", out, "Output file (stdout when omitted)");

  auto* query_cmd = app.add_subcommand("query", "Answer one approximate-SDP query");
  add_terrain_options(query_cmd, topt);
  query_cmd->add_option("--epsilon", epsilon, "Approximation parameter in (0,1]");
  query_cmd->add_option("--source", source_spec, "Source: v:ID or p:x,y[,z]");
  query_cmd->add_option("--target", target_spec, "Target: v:ID or p:x,y[,z]")->required();
  query_cmd->add_option("--solver", solver, "Solver")
      ->check(CLI::IsMember({"dijkstra", "bushwhack"}));
  query_cmd->add_flag("--edge-chords", edge_chords, "Add links between consecutive edge nodes");
  query_cmd->add_option("--out", out, "Output file (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Check a path JSON against a terrain");
  add_terrain_options(verify, topt);
  verify->add_option("--path", path_file, "Path JSON file")->required();
  verify->add_option("--out", out, "Output file (stdout when omitted)");

  auto* bench = app.add_subcommand("bench", "CSV timings over an epsilon sweep");
  add_terrain_options(bench, topt);
  bench->add_option("--epsilon", epsilons, "Epsilon values (repeatable)")->take_all();
  bench->add_option("--source", source_spec, "Source: v:ID or p:x,y[,z]");
  bench->add_option("--target", target_specs, "Targets (repeatable)")->take_all();
  bench->add_option("--solver", solver, "Solver")->check(CLI::IsMember({"dijkstra", "bushwhack"}));
  bench->add_flag("--edge-chords", edge_chords, "Add links between consecutive edge nodes");
  bench->add_option("--out", out, "Output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(topt, info->count("--epsilon") ? epsilon : 0, out);
    if (*gen) return cmd_gen(topt, out, out_format);
    if (*disc) return cmd_discretize(topt, epsilon, out);
    if (*solve) return cmd_solve(topt, source_spec, epsilon, target_specs, solver, edge_chords, out);
    if (*query_cmd)
      return cmd_query(topt, source_spec, epsilon, target_spec, solver, edge_chords, out);
    if (*verify) return cmd_verify(topt, path_file, out);
    if (*bench) {
      if (epsilons.empty()) epsilons.push_back(epsilon);
      return cmd_bench(topt, source_spec, epsilons, target_specs, solver, edge_chords, out);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const OffSurfaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NoDescendingPathError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
