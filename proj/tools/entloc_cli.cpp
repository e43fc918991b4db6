// entloc command-line tool.  Everything below talks to the shared library
// through the C API in entloc/entloc.h; no core C++ headers are used.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entloc/entloc.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitValidation = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) {
  throw CliError{code, msg};
}

[[noreturn]] void fail_status(entloc_status st) {
  throw CliError{st == ENTLOC_ERR_VALIDATION ? kExitValidation : kExitNumeric,
                 entloc_last_error()};
}

void check(entloc_status st) {
  if (st != ENTLOC_OK) fail_status(st);
}

struct StatePtr {
  entloc_state* p = nullptr;
  ~StatePtr() { entloc_state_free(p); }
};
struct GraphPtr {
  entloc_graph* p = nullptr;
  ~GraphPtr() { entloc_graph_free(p); }
};
struct TablePtr {
  entloc_table* p = nullptr;
  ~TablePtr() { entloc_table_free(p); }
};

// Shared flags and the state/graph loading options.
struct Common {
  std::string state_file;
  std::string preset;  // name:N, e.g. ghz:4
  std::string graph_file;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c, bool with_state,
                bool with_graph = false) {
  if (with_state) {
    cmd->add_option("--state", c.state_file, "state JSON file");
    cmd->add_option("--preset", c.preset,
                    "built-in state name:N (ghz:4, w:5, line-graph:6, haar:3)");
  }
  if (with_graph)
    cmd->add_option("--graph", c.graph_file,
                    "graph file (vertex count, then 0-indexed 'u v' edges)");
  cmd->add_option("--seed", c.seed, "RNG seed (echoed in the output)");
  cmd->add_option("--threads", c.threads, "worker threads (default 1)");
  cmd->add_option("--out", c.out, "write the result to this file");
  cmd->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void load_state(const Common& c, StatePtr& s) {
  if (!c.state_file.empty() && !c.preset.empty())
    fail(kExitValidation, "give either --state or --preset, not both");
  if (!c.state_file.empty()) {
    check(entloc_state_from_json_file(c.state_file.c_str(), &s.p));
    return;
  }
  if (c.preset.empty()) fail(kExitValidation, "need --state or --preset");
  const auto colon = c.preset.find(':');
  if (colon == std::string::npos)
    fail(kExitValidation, "--preset must look like name:N");
  const std::string name = c.preset.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(c.preset.substr(colon + 1));
  } catch (...) {
    fail(kExitValidation, "--preset must look like name:N");
  }
  check(entloc_state_preset(name.c_str(), n, c.seed, &s.p));
}

void load_graph(const Common& c, GraphPtr& g) {
  if (c.graph_file.empty()) fail(kExitValidation, "need --graph");
  check(entloc_graph_from_file(c.graph_file.c_str(), &g.p));
}

void emit(const Common& c, const json& result) {
  std::string text;
  if (c.format == "csv") {
    // Flat key,value rendering of the scalar fields.
    std::ostringstream os;
    os << "key,value\n";
    for (auto it = result.begin(); it != result.end(); ++it) {
      if (it->is_structured()) continue;
      os << it.key() << "," << it->dump() << "\n";
    }
    text = os.str();
  } else {
    text = result.dump(2) + "\n";
  }
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f.good()) fail(kExitValidation, "cannot open --out file");
    f << text;
    std::cout << result["config"].dump() << "\n";
  }
}

std::string table_csv(const entloc_table* t) {
  std::ostringstream os;
  const size_t cols = entloc_table_cols(t);
  for (size_t c = 0; c < cols; ++c)
    os << (c ? "," : "") << entloc_table_column(t, c);
  os << "\n";
  char buf[64];
  for (size_t r = 0; r < entloc_table_rows(t); ++r) {
    for (size_t c = 0; c < cols; ++c) {
      std::snprintf(buf, sizeof buf, "%.12g", entloc_table_cell(t, r, c));
      os << (c ? "," : "") << buf;
    }
    os << "\n";
  }
  return os.str();
}

void emit_table(const Common& c, const json& config, const entloc_table* t) {
  std::string text;
  if (c.format == "json") {
    json j;
    j["config"] = config;
    json cols = json::array();
    for (size_t i = 0; i < entloc_table_cols(t); ++i)
      cols.push_back(entloc_table_column(t, i));
    j["columns"] = cols;
    json rows = json::array();
    for (size_t r = 0; r < entloc_table_rows(t); ++r) {
      json row = json::array();
      for (size_t i = 0; i < entloc_table_cols(t); ++i)
        row.push_back(entloc_table_cell(t, r, i));
      rows.push_back(row);
    }
    j["rows"] = rows;
    text = j.dump(2) + "\n";
  } else {
    text = table_csv(t);
  }
  if (c.out.empty()) {
    // Keep stdout machine-readable; the config echo goes to stderr.
    std::cerr << config.dump() << "\n";
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f.good()) fail(kExitValidation, "cannot open --out file");
    f << text;
    std::cout << config.dump() << "\n";
  }
}

entloc_pso_config make_pso(std::uint64_t seed, int threads, int swarm,
                           int iters, int restarts) {
  entloc_pso_config p;
  p.swarm_size = swarm;
  p.iterations = iters;
  p.inertia = -1;
  p.cognitive = -1;
  p.social = -1;
  p.restarts = restarts;
  p.velocity_clamp = -1;
  p.seed = seed;
  p.threads = threads;
  return p;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    double lo, hi;
    int k;
    char c1, c2;
    std::istringstream is(text);
    if (!(is >> lo >> c1 >> hi >> c2 >> k) || c1 != ':' || c2 != ':' || k < 1)
      fail(kExitValidation, "--grid must be lo:hi:points or a comma list");
    for (int i = 0; i < k; ++i)
      grid.push_back(k == 1 ? lo : lo + (hi - lo) * double(i) / double(k - 1));
    return grid;
  }
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      grid.push_back(std::stod(tok));
    } catch (...) {
      fail(kExitValidation, "--grid: bad number '" + tok + "'");
    }
  }
  if (grid.empty()) fail(kExitValidation, "--grid: empty");
  return grid;
}

int run(int argc, char** argv) {
  CLI::App app{
      "entloc: localizable multipartite entanglement for small qubit "
      "registers.\nQubit and vertex indices are 0-indexed except where a "
      "subcommand says otherwise."};
  app.require_subcommand(1);

  // ---- measure ----
  Common mc;
  std::string m_kind = "ntangle";
  std::vector<int> m_s;
  auto* measure = app.add_subcommand("measure", "evaluate a measure on a state");
  add_common(measure, mc, true);
  measure->add_option("--kind", m_kind, "ntangle|gme|ce|sqrtce");
  measure->add_option("--s", m_s, "target subset for ce/sqrtce")
      ->delimiter(',');

  // ---- localize ----
  Common lc;
  std::string l_kind = "ntangle";
  std::vector<int> l_s, l_a;
  int l_swarm = 0, l_iters = 0, l_restarts = 0;
  auto* localize =
      app.add_subcommand("localize", "PSO estimate of the localizable measure");
  add_common(localize, lc, true);
  localize->add_option("--measured", l_a, "measured qubits")
      ->delimiter(',')
      ->required();
  localize->add_option("--kind", l_kind, "ntangle|gme|ce|sqrtce");
  localize->add_option("--s", l_s, "target subset for ce/sqrtce")
      ->delimiter(',');
  localize->add_option("--swarm", l_swarm, "swarm size (default 50)");
  localize->add_option("--iters", l_iters, "iterations (default 200)");
  localize->add_option("--restarts", l_restarts, "restarts (default 3)");

  // ---- bounds ----
  Common bc;
  std::string b_kind = "ntangle";
  std::vector<int> b_s, b_a;
  auto* bounds =
      app.add_subcommand("bounds", "upper/lower bounds on the localizable measure");
  add_common(bounds, bc, true);
  bounds->add_option("--measured", b_a, "measured qubits")
      ->delimiter(',')
      ->required();
  bounds->add_option("--kind", b_kind, "ntangle|gme|ce|sqrtce");
  bounds->add_option("--s", b_s, "target subset for ce/sqrtce")
      ->delimiter(',');

  // ---- graph ----
  auto* graph = app.add_subcommand("graph", "graph-state tools");
  graph->require_subcommand(1);
  Common gcc_;
  std::vector<int> gc_a;
  auto* gcheck = graph->add_subcommand(
      "check", "GF(2) solvability of the tau criterion");
  add_common(gcheck, gcc_, false, true);
  gcheck->add_option("--measured", gc_a, "measured vertices")
      ->delimiter(',')
      ->required();
  Common gce_c;
  std::vector<int> gce_s;
  auto* gce = graph->add_subcommand("ce", "closed-form CE of a graph state");
  add_common(gce, gce_c, false, true);
  gce->add_option("--s", gce_s, "target subset")->delimiter(',')->required();

  // ---- weighted ----
  auto* weighted = app.add_subcommand("weighted", "weighted graph states");
  weighted->require_subcommand(1);
  Common wp_c;
  int wp_pairs = 1;
  double wp_phi = 3.141592653589793;
  auto* wproto = weighted->add_subcommand(
      "protocol", "rotated-X line protocol on 2*pairs+1 vertices");
  add_common(wproto, wp_c, false);
  wproto->add_option("--pairs", wp_pairs, "Bell-pair count N")->required();
  wproto->add_option("--phi", wp_phi, "edge phase");
  Common wd_c;
  double wd_phi = 0, wd_chi = 0;
  auto* wdist = weighted->add_subcommand(
      "distance", "trace distance between two edge phases");
  add_common(wdist, wd_c, false, true);
  wdist->add_option("--phi", wd_phi, "first phase")->required();
  wdist->add_option("--chi", wd_chi, "second phase")->required();

  // ---- haar sweep ----
  auto* haar = app.add_subcommand("haar", "Haar-random state studies");
  haar->require_subcommand(1);
  Common hs_c;
  hs_c.format = "csv";
  int hs_na = 1, hs_nb = 2, hs_samples = 100;
  std::string hs_kind = "ntangle";
  std::vector<int> hs_s;
  int hs_swarm = 0, hs_iters = 0, hs_restarts = 0;
  bool hs_notimings = false;
  auto* hsweep = haar->add_subcommand(
      "sweep", "per-sample lme/bound table over Haar states");
  add_common(hsweep, hs_c, false);
  hsweep->add_option("--na", hs_na, "measured qubits (first na)")->required();
  hsweep->add_option("--nb", hs_nb, "kept qubits")->required();
  hsweep->add_option("--samples", hs_samples, "sample count");
  hsweep->add_option("--kind", hs_kind, "ntangle|gme|ce|sqrtce");
  hsweep->add_option("--s", hs_s, "target subset (full-register labels)")
      ->delimiter(',');
  hsweep->add_option("--swarm", hs_swarm, "swarm size (default 50)");
  hsweep->add_option("--iters", hs_iters, "iterations (default 200)");
  hsweep->add_option("--restarts", hs_restarts, "restarts (default 3)");
  hsweep->add_flag("--no-timings", hs_notimings,
                   "write 0 in the seconds column (byte-stable output)");

  // ---- ising sweep ----
  auto* ising = app.add_subcommand("ising", "transverse-field Ising chain");
  ising->require_subcommand(1);
  Common is_c;
  is_c.format = "csv";
  int is_n = 9;
  std::vector<int> is_a;
  std::string is_grid = "0.1:5:25";
  double is_hx = 0.0;
  std::vector<int> is_s;
  int is_swarm = 0, is_iters = 0, is_restarts = 0;
  auto* isweep = ising->add_subcommand(
      "sweep", "ground-state localization across a J/h grid");
  add_common(isweep, is_c, false);
  isweep->add_option("--n", is_n, "chain length (<= 12)");
  isweep
      ->add_option("--measured", is_a,
                   "measured sites, 1-indexed (site 1 is the leftmost)")
      ->delimiter(',')
      ->required();
  isweep->add_option("--grid", is_grid, "J/h grid: lo:hi:points or comma list");
  isweep->add_option("--hx", is_hx, "longitudinal field h_x (h is fixed at 1)");
  isweep->add_option("--s", is_s, "CE target subset, 1-indexed sites")
      ->delimiter(',');
  isweep->add_option("--swarm", is_swarm, "swarm size (default 50)");
  isweep->add_option("--iters", is_iters, "iterations (default 200)");
  isweep->add_option("--restarts", is_restarts, "restarts (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (*measure) {
    StatePtr st;
    load_state(mc, st);
    double value = 0.0;
    check(entloc_measure(st.p, m_kind.c_str(), m_s.data(), m_s.size(), &value));
    json config = {{"command", "measure"},
                   {"kind", m_kind},
                   {"s", m_s},
                   {"seed", mc.seed},
                   {"n_qubits", entloc_state_nqubits(st.p)}};
    if (!mc.preset.empty()) config["preset"] = mc.preset;
    if (!mc.state_file.empty()) config["state"] = mc.state_file;
    emit(mc, json{{"value", value}, {"config", config}});
  } else if (*localize) {
    StatePtr st;
    load_state(lc, st);
    entloc_pso_config pso =
        make_pso(lc.seed, lc.threads, l_swarm, l_iters, l_restarts);
    double value = 0.0;
    std::vector<double> params(2 * l_a.size(), 0.0);
    check(entloc_lme(st.p, l_a.data(), l_a.size(), l_kind.c_str(), l_s.data(),
                     l_s.size(), &pso, &value, params.data()));
    json angles = json::array();
    for (size_t q = 0; q < l_a.size(); ++q)
      angles.push_back(
          {{"qubit", l_a[q]}, {"theta", params[2 * q]}, {"phi", params[2 * q + 1]}});
    json config = {{"command", "localize"}, {"kind", l_kind},
                   {"measured", l_a},       {"s", l_s},
                   {"seed", lc.seed},       {"threads", lc.threads},
                   {"swarm", l_swarm > 0 ? l_swarm : 50},
                   {"iters", l_iters > 0 ? l_iters : 200},
                   {"restarts", l_restarts > 0 ? l_restarts : 3}};
    emit(lc, json{{"value", value}, {"params", angles}, {"config", config}});
  } else if (*bounds) {
    StatePtr st;
    load_state(bc, st);
    double ub = 0.0, lb = 0.0;
    check(entloc_bounds(st.p, b_a.data(), b_a.size(), b_kind.c_str(),
                        b_s.data(), b_s.size(), &ub, &lb));
    json config = {{"command", "bounds"},
                   {"kind", b_kind},
                   {"measured", b_a},
                   {"s", b_s},
                   {"seed", bc.seed}};
    emit(bc, json{{"ub", ub}, {"lb", lb}, {"config", config}});
  } else if (*gcheck) {
    GraphPtr g;
    load_graph(gcc_, g);
    int solvable = 0, fast = 0;
    std::vector<int> x(gc_a.size(), 0);
    size_t x_len = 0;
    check(entloc_graph_check(g.p, gc_a.data(), gc_a.size(), &solvable,
                             x.data(), &x_len, &fast));
    json jx;
    if (solvable) {
      jx = json::array();
      for (size_t i = 0; i < x_len; ++i) jx.push_back(x[i]);
    }
    json config = {{"command", "graph check"},
                   {"graph", gcc_.graph_file},
                   {"measured", gc_a},
                   {"seed", gcc_.seed}};
    emit(gcc_, json{{"solvable", solvable != 0},
                    {"x", jx},
                    {"fast_path", fast ? json("cor10") : json()},
                    {"config", config}});
  } else if (*gce) {
    GraphPtr g;
    load_graph(gce_c, g);
    double value = 0.0;
    check(entloc_graph_ce(g.p, gce_s.data(), gce_s.size(), &value));
    json config = {{"command", "graph ce"},
                   {"graph", gce_c.graph_file},
                   {"s", gce_s},
                   {"seed", gce_c.seed}};
    emit(gce_c, json{{"value", value}, {"config", config}});
  } else if (*wproto) {
    double tau = 0.0, p_ghz = 0.0;
    check(entloc_line_protocol(wp_pairs, wp_phi, &tau, &p_ghz));
    json config = {{"command", "weighted protocol"},
                   {"pairs", wp_pairs},
                   {"phi", wp_phi},
                   {"seed", wp_c.seed}};
    emit(wp_c,
         json{{"avg_tau", tau}, {"p_ghz", p_ghz}, {"config", config}});
  } else if (*wdist) {
    GraphPtr g;
    load_graph(wd_c, g);
    double dist = 0.0;
    check(entloc_weighted_trace_distance(g.p, wd_phi, wd_chi, &dist));
    json config = {{"command", "weighted distance"},
                   {"graph", wd_c.graph_file},
                   {"phi", wd_phi},
                   {"chi", wd_chi},
                   {"seed", wd_c.seed}};
    emit(wd_c, json{{"value", dist}, {"config", config}});
  } else if (*hsweep) {
    entloc_haar_sweep_config cfg{};
    cfg.n_a = hs_na;
    cfg.n_b = hs_nb;
    cfg.samples = hs_samples;
    cfg.kind = hs_kind.c_str();
    cfg.s_idx = hs_s.data();
    cfg.s_len = hs_s.size();
    cfg.seed = hs_c.seed;
    cfg.pso = make_pso(hs_c.seed, 1, hs_swarm, hs_iters, hs_restarts);
    cfg.threads = hs_c.threads;
    cfg.timings = hs_notimings ? 0 : 1;
    TablePtr t;
    check(entloc_haar_sweep(&cfg, &t.p));
    json config = {{"command", "haar sweep"},
                   {"na", hs_na},
                   {"nb", hs_nb},
                   {"samples", hs_samples},
                   {"kind", hs_kind},
                   {"s", hs_s},
                   {"seed", hs_c.seed},
                   {"threads", hs_c.threads},
                   {"swarm", hs_swarm > 0 ? hs_swarm : 50},
                   {"iters", hs_iters > 0 ? hs_iters : 200},
                   {"restarts", hs_restarts > 0 ? hs_restarts : 3},
                   {"timings", !hs_notimings}};
    emit_table(hs_c, config, t.p);
  } else if (*isweep) {
    // Site labels arrive 1-indexed (leftmost site is 1); the library wants
    // 0-indexed qubits.
    std::vector<int> a0;
    for (int v : is_a) a0.push_back(v - 1);
    std::vector<int> s0;
    for (int v : is_s) s0.push_back(v - 1);
    std::vector<double> grid = parse_grid(is_grid);
    entloc_ising_sweep_config cfg{};
    cfg.n = is_n;
    cfg.a_idx = a0.data();
    cfg.a_len = a0.size();
    cfg.j_over_h = grid.data();
    cfg.n_grid = grid.size();
    cfg.h_x = is_hx;
    cfg.ce_s_idx = s0.empty() ? nullptr : s0.data();
    cfg.ce_s_len = s0.size();
    cfg.pso = make_pso(is_c.seed, 1, is_swarm, is_iters, is_restarts);
    cfg.threads = is_c.threads;
    TablePtr t;
    check(entloc_ising_sweep(&cfg, &t.p));
    json config = {{"command", "ising sweep"},
                   {"n", is_n},
                   {"measured_sites_1indexed", is_a},
                   {"measured_qubits", a0},
                   {"grid", is_grid},
                   {"hx", is_hx},
                   {"s_sites_1indexed", is_s},
                   {"seed", is_c.seed},
                   {"threads", is_c.threads},
                   {"swarm", is_swarm > 0 ? is_swarm : 50},
                   {"iters", is_iters > 0 ? is_iters : 200},
                   {"restarts", is_restarts > 0 ? is_restarts : 3}};
    emit_table(is_c, config, t.p);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
