// pgblock: verify, search for, and classify double blocking sets of size
// 3q-1 with two (q-1)-secants in PG(2,q).
//
// Exit codes: 0 success, 1 a check failed / sets inequivalent, 2 usage
// error, 3 I/O or input-data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgblock/catalog.hpp"
#include "pgblock/hill.hpp"
#include "pgblock/hunt.hpp"
#include "pgblock/io.hpp"

using nlohmann::json;
using namespace pgblock;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

LoadedSet load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_pointset(in);
}

int default_threads() {
  if (const char* env = std::getenv("PGBLOCK_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void print_report(const VerifyReport& rep, bool as_json) {
  if (as_json) {
    json j;
    j["q"] = rep.q;
    if (rep.index) j["index"] = rep.index;
    j["pass"] = rep.all_pass();
    j["checks"] = json::array();
    for (const auto& c : rep.checks)
      j["checks"].push_back(
          {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& c : rep.checks)
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  expected=" << c.expected
              << "  actual=" << c.actual << "\n";
  std::cout << (rep.all_pass() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
}

int cmd_verify(const std::vector<int>& builtin_qi, const std::string& file, bool as_json) {
  VerifyReport rep;
  if (!builtin_qi.empty()) {
    rep = verify_entry(builtin_qi[0], builtin_qi[1]);
  } else {
    LoadedSet ls = load_file(file);
    rep = verify_set(ls.plane, ls.set);
  }
  print_report(rep, as_json);
  return rep.all_pass() ? 0 : kExitCheckFailed;
}

int cmd_search(int q, bool symmetric, std::optional<int> parameter, int threads,
               std::optional<std::uint64_t> node_limit, const std::string& out_path,
               bool as_json, bool progress) {
  SearchConfig cfg;
  cfg.q = q;
  cfg.symmetric_only = symmetric;
  if (parameter) {
    if (*parameter < 1 || *parameter >= q)
      throw std::invalid_argument("--parameter must lie in [1, q)");
    cfg.parameter = Fe(*parameter);
  }
  cfg.threads = threads;
  cfg.node_limit = node_limit;
  if (progress) cfg.progress = &std::cerr;

  Field f(q);
  PlaneIndex plane(f);
  SolutionSet sols = search(plane, cfg);

  std::vector<std::string> files;
  if (!out_path.empty()) {
    for (std::size_t i = 0; i < sols.orbits.size(); ++i) {
      std::string path = out_path + "." + std::to_string(i + 1);
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path);
      write_pointset(plane, sols.orbits[i], out);
      files.push_back(path);
    }
  }

  if (as_json) {
    json j;
    j["q"] = q;
    j["orbits"] = sols.orbits.size();
    j["exhaustive"] = sols.exhaustive;
    j["nodes"] = sols.nodes;
    j["status"] = sols.status;
    j["files"] = files;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << sols.orbits.size() << " orbit(s), status: " << sols.status
              << ", nodes: " << sols.nodes << "\n";
    for (const auto& path : files) std::cout << "wrote " << path << "\n";
  }
  return 0;
}

int cmd_hill(int q, bool as_json) {
  Field f(q);
  PlaneIndex plane(f);
  HillResult res = hill_search(plane);

  const char* class_names[4] = {"general_position", "one_triplet", "disjoint_triplets",
                                "sharing_triplets"};
  if (as_json) {
    json j;
    j["q"] = q;
    j["holds"] = res.hole_free();
    j["raw_configs"] = res.raw_configs;
    j["canonical_configs"] = res.canonical_configs;
    j["orbit_audit_ok"] = res.orbit_size_sum == res.raw_configs;
    j["nodes"] = res.nodes;
    for (int c = 0; c < 4; ++c)
      j["classes"][class_names[c]] = {{"configs", res.by_class[c].configs},
                                      {"completions", res.by_class[c].completions}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "hole configurations: " << res.canonical_configs << " canonical of "
              << res.raw_configs << " raw (orbit audit "
              << (res.orbit_size_sum == res.raw_configs ? "ok" : "FAILED") << ")\n";
    for (int c = 0; c < 4; ++c)
      std::cout << "  " << class_names[c] << ": " << res.by_class[c].configs << " configs, "
                << res.by_class[c].completions << " completions\n";
    if (res.counterexample) {
      std::cout << "COUNTEREXAMPLE FOUND: midpoints";
      for (int pi : res.counterexample->midpoints) {
        Point p = plane.point_at(pi);
        std::cout << " (" << int(p.x) << ":" << int(p.y) << ":" << int(p.z) << ")";
      }
      std::cout << "\n";
    } else {
      std::cout << "THEOREM HOLDS\n";
    }
  }
  return res.hole_free() ? 0 : kExitCheckFailed;
}

int cmd_export_ilp(int q, bool fix_frame, const std::string& out_path) {
  Field f(q);
  PlaneIndex plane(f);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  export_ilp(plane, fix_frame, out);
  if (!out) throw std::runtime_error("write failed: " + out_path);
  return 0;
}

int cmd_distribution(const std::string& file, bool as_json) {
  LoadedSet ls = load_file(file);
  SecantDistribution dist = secant_distribution(ls.plane, ls.set);
  if (as_json) {
    json j;
    j["q"] = ls.plane.q();
    j["size"] = ls.set.size();
    for (auto [t, n] : dist.nonzero()) j["distribution"][std::to_string(t)] = n;
    std::cout << j.dump(2) << "\n";
  } else {
    auto nz = dist.nonzero();
    std::cout << "t  n_t\n";
    for (auto it = nz.rbegin(); it != nz.rend(); ++it)
      std::cout << it->first << "  " << it->second << "\n";
  }
  return 0;
}

int cmd_equiv(const std::string& file1, const std::string& file2) {
  LoadedSet a = load_file(file1);
  LoadedSet b = load_file(file2);
  if (!(a.field == b.field)) throw std::runtime_error("sets live in different fields");
  FrameGroup g(a.field);
  bool eq = equivalent_in_frame(a.plane, g, a.set, b.set);
  std::cout << (eq ? "equivalent" : "inequivalent") << "\n";
  return eq ? 0 : kExitCheckFailed;
}

}  // namespace

static int cli_main(int argc, char** argv) {
  CLI::App app{"double blocking sets of size 3q-1 with two (q-1)-secants in PG(2,q)"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable summaries");

  auto* verify = app.add_subcommand("verify", "run the verification battery on a pointset");
  std::vector<int> builtin_qi;
  std::string verify_file;
  verify->add_option("--builtin", builtin_qi, "built-in entry: q index")->expected(2);
  verify->add_option("file", verify_file, "pointset file");

  auto* search_cmd = app.add_subcommand("search", "enumerate frame solutions up to equivalence");
  int q = 0, threads = default_threads();
  std::optional<int> parameter;
  std::optional<std::uint64_t> node_limit;
  bool symmetric = false, fix_frame = false;
  std::string out_path;
  bool progress = false;
  search_cmd->add_option("--q", q, "plane order")->required();
  search_cmd->add_flag("--symmetric", symmetric, "only sets fixed by the coordinate swap");
  search_cmd->add_option("--parameter", parameter, "restrict to one parameter value s^3");
  search_cmd->add_option("--threads", threads, "worker threads (default $PGBLOCK_THREADS or 1)");
  search_cmd->add_option("--node-limit", node_limit, "node budget per subtree task");
  search_cmd->add_option("--out", out_path, "write solutions to FILE.1, FILE.2, ...");
  search_cmd->add_flag("--progress", progress, "report per-task progress on stderr");

  auto* hill = app.add_subcommand("hill", "triangle surgery search: remove six, add five");
  int hill_q = 0;
  hill->add_option("--q", hill_q, "plane order")->required();

  auto* ilp = app.add_subcommand("export-ilp", "write the covering model in LP format");
  int ilp_q = 0;
  std::string ilp_out;
  ilp->add_option("--q", ilp_q, "plane order")->required();
  ilp->add_flag("--fix-frame", fix_frame, "pin the two-axis frame");
  ilp->add_option("--out", ilp_out, "output file")->required();

  auto* dist = app.add_subcommand("distribution", "print the secant distribution of a file");
  std::string dist_file;
  dist->add_option("file", dist_file, "pointset file")->required();

  auto* equiv = app.add_subcommand("equiv", "frame equivalence of two pointset files");
  std::string eq1, eq2;
  equiv->add_option("file1", eq1)->required();
  equiv->add_option("file2", eq2)->required();

  for (CLI::App* sc : {verify, search_cmd, hill, ilp, dist, equiv}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      if (builtin_qi.empty() == verify_file.empty()) {
        std::cerr << "verify: give exactly one of <file> or --builtin q index\n";
        return kExitUsage;
      }
      return cmd_verify(builtin_qi, verify_file, as_json);
    }
    if (*search_cmd)
      return cmd_search(q, symmetric, parameter, threads, node_limit, out_path, as_json, progress);
    if (*hill) return cmd_hill(hill_q, as_json);
    if (*ilp) return cmd_export_ilp(ilp_q, fix_frame, ilp_out);
    if (*dist) return cmd_distribution(dist_file, as_json);
    if (*equiv) return cmd_equiv(eq1, eq2);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

int main(int argc, char** argv) {
  try {
    return cli_main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (...) {
    std::cerr << "error: unknown failure\n";
    return kExitIo;
  }
}
