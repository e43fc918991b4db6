#include "entloc/entloc.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "entloc/graphs.hpp"
#include "entloc/haar.hpp"
#include "entloc/ising.hpp"
#include "entloc/localize.hpp"
#include "entloc/measures.hpp"
#include "entloc/rng.hpp"
#include "entloc/state.hpp"
#include "entloc/table.hpp"

struct entloc_state {
  entloc::StateVector s;
};
struct entloc_graph {
  entloc::Graph g;
};
struct entloc_table {
  entloc::Table t;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

// Runs fn, translating exceptions to status codes: invalid_argument and
// friends are validation errors, everything else is numeric.
template <typename Fn>
entloc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ENTLOC_OK;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return ENTLOC_ERR_VALIDATION;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return ENTLOC_ERR_VALIDATION;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ENTLOC_ERR_NUMERIC;
  } catch (...) {
    set_error("unknown error");
    return ENTLOC_ERR_NUMERIC;
  }
}

std::vector<int> to_vec(const int* p, size_t len) {
  return p ? std::vector<int>(p, p + len) : std::vector<int>();
}

entloc::MeasureKind parse_kind(const char* kind, const int* s_idx,
                               size_t s_len) {
  if (!kind) throw std::invalid_argument("kind is null");
  const std::string k(kind);
  if (k == "ntangle") return entloc::MeasureKind::ntangle();
  if (k == "gme") return entloc::MeasureKind::gme();
  if (k == "ce") return entloc::MeasureKind::ce(to_vec(s_idx, s_len));
  if (k == "sqrtce") return entloc::MeasureKind::sqrt_ce(to_vec(s_idx, s_len));
  throw std::invalid_argument("unknown kind '" + k +
                              "' (ntangle|gme|ce|sqrtce)");
}

entloc::PsoConfig parse_pso(const entloc_pso_config* cfg) {
  entloc::PsoConfig p;
  if (!cfg) return p;
  if (cfg->swarm_size > 0) p.swarm_size = cfg->swarm_size;
  if (cfg->iterations > 0) p.iterations = cfg->iterations;
  if (cfg->inertia >= 0) p.inertia = cfg->inertia;
  if (cfg->cognitive >= 0) p.cognitive = cfg->cognitive;
  if (cfg->social >= 0) p.social = cfg->social;
  if (cfg->restarts > 0) p.restarts = cfg->restarts;
  if (cfg->velocity_clamp > 0) p.velocity_clamp = cfg->velocity_clamp;
  p.seed = cfg->seed;
  if (cfg->threads > 0) p.threads = cfg->threads;
  return p;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

extern "C" {

const char* entloc_version(void) { return "0.1.0"; }

int entloc_capacity(void) { return entloc::capacity(); }

const char* entloc_last_error(void) { return g_last_error.c_str(); }

entloc_status entloc_state_from_json(const char* json_text,
                                     entloc_state** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    *out = new entloc_state{entloc::read_state_json_string(json_text)};
  });
}

entloc_status entloc_state_from_json_file(const char* path,
                                          entloc_state** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::ifstream in(path);
    require(in.good(), "cannot open state file");
    *out = new entloc_state{entloc::read_state_json(in)};
  });
}

entloc_status entloc_state_preset(const char* name, int n_qubits,
                                  uint64_t seed, entloc_state** out) {
  return guarded([&] {
    require(name && out, "null argument");
    const std::string p(name);
    entloc::StateVector s;
    if (p == "ghz")
      s = entloc::StateVector::ghz(n_qubits);
    else if (p == "w")
      s = entloc::StateVector::w(n_qubits);
    else if (p == "plus")
      s = entloc::StateVector::plus(n_qubits);
    else if (p == "zeros")
      s = entloc::StateVector::basis_state(n_qubits, 0);
    else if (p == "line-graph")
      s = entloc::build_graph_state(entloc::Graph::path(n_qubits));
    else if (p == "haar") {
      auto rng = entloc::make_engine(seed, 0x4aa7);
      s = entloc::sample_haar(n_qubits, rng);
    } else
      throw std::invalid_argument(
          "unknown preset '" + p + "' (ghz|w|plus|zeros|line-graph|haar)");
    *out = new entloc_state{std::move(s)};
  });
}

entloc_status entloc_state_to_json(const entloc_state* s, char** out_text) {
  return guarded([&] {
    require(s && out_text, "null argument");
    const std::string text = entloc::write_state_json(s->s);
    *out_text = new char[text.size() + 1];
    std::memcpy(*out_text, text.c_str(), text.size() + 1);
  });
}

int entloc_state_nqubits(const entloc_state* s) {
  return s ? s->s.n_qubits() : 0;
}

void entloc_state_free(entloc_state* s) { delete s; }

void entloc_string_free(char* text) { delete[] text; }

entloc_status entloc_measure(const entloc_state* s, const char* kind,
                             const int* s_idx, size_t s_len, double* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = entloc::evaluate(parse_kind(kind, s_idx, s_len), s->s);
  });
}

entloc_status entloc_mea_tau(const entloc_state* s, const int* a_idx,
                             size_t a_len, double* out) {
  return guarded([&] {
    require(s && a_idx && out, "null argument");
    entloc::SubsystemMask a(s->s.n_qubits(), to_vec(a_idx, a_len));
    *out = entloc::mea_tau_exact(s->s, a);
  });
}

entloc_status entloc_bounds(const entloc_state* s, const int* a_idx,
                            size_t a_len, const char* kind, const int* s_idx,
                            size_t s_len, double* out_ub, double* out_lb) {
  return guarded([&] {
    require(s && a_idx && out_ub && out_lb, "null argument");
    const entloc::MeasureKind mk = parse_kind(kind, s_idx, s_len);
    const int n = s->s.n_qubits();
    entloc::SubsystemMask a(n, to_vec(a_idx, a_len));
    double ub = 0.0, lb = 0.0;
    switch (mk.variant) {
      case entloc::Measure::NTangle:
        ub = entloc::mea_tau_exact(s->s, a);
        break;
      case entloc::Measure::GmeConcurrence:
        ub = entloc::gme_upper_bound(s->s, a);
        break;
      case entloc::Measure::ConcentratableEntanglement:
      case entloc::Measure::SqrtConcentratableEntanglement: {
        entloc::SubsystemMask sm(n, mk.s);
        ub = entloc::ce_upper_bound(s->s, a, sm);
        const double corr =
            sm.size() >= 2 ? entloc::ce_lower_bound(s->s, sm) : 0.0;
        if (mk.variant == entloc::Measure::SqrtConcentratableEntanglement) {
          ub = std::sqrt(ub);
          lb = corr;
        } else {
          lb = corr * corr;
        }
        break;
      }
    }
    *out_ub = ub;
    *out_lb = lb;
  });
}

entloc_status entloc_lme(const entloc_state* s, const int* a_idx,
                         size_t a_len, const char* kind, const int* s_idx,
                         size_t s_len, const entloc_pso_config* cfg,
                         double* out_value, double* out_params) {
  return guarded([&] {
    require(s && a_idx && out_value, "null argument");
    entloc::SubsystemMask a(s->s.n_qubits(), to_vec(a_idx, a_len));
    const entloc::MeasureKind mk = parse_kind(kind, s_idx, s_len);
    entloc::LmeResult r =
        entloc::lme_estimate(s->s, a, mk, parse_pso(cfg));
    *out_value = r.value;
    if (out_params)
      for (size_t q = 0; q < a_len; ++q) {
        out_params[2 * q] = r.params.angles[q][0];
        out_params[2 * q + 1] = r.params.angles[q][1];
      }
  });
}

entloc_status entloc_graph_from_file(const char* path, entloc_graph** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::ifstream in(path);
    require(in.good(), "cannot open graph file");
    *out = new entloc_graph{entloc::read_graph(in)};
  });
}

entloc_status entloc_graph_from_edges(int n_vertices, const int* edges_uv,
                                      size_t n_edges, entloc_graph** out) {
  return guarded([&] {
    require(out && (n_edges == 0 || edges_uv), "null argument");
    entloc::Graph g(n_vertices);
    for (size_t e = 0; e < n_edges; ++e)
      g.add_edge(edges_uv[2 * e], edges_uv[2 * e + 1]);
    *out = new entloc_graph{std::move(g)};
  });
}

void entloc_graph_free(entloc_graph* g) { delete g; }

entloc_status entloc_graph_check(const entloc_graph* g, const int* a_idx,
                                 size_t a_len, int* out_solvable, int* out_x,
                                 size_t* out_x_len, int* out_fast_path) {
  return guarded([&] {
    require(g && a_idx && out_solvable, "null argument");
    entloc::SubsystemMask a(g->g.n, to_vec(a_idx, a_len));
    entloc::GraphCheckResult r = entloc::graph_check(g->g, a);
    *out_solvable = r.solvable ? 1 : 0;
    if (out_fast_path) *out_fast_path = r.used_fast_path ? 1 : 0;
    if (out_x_len) *out_x_len = 0;
    if (r.solvable && r.x && out_x && out_x_len) {
      for (int i = 0; i < r.x->size(); ++i) out_x[i] = r.x->get(i) ? 1 : 0;
      *out_x_len = size_t(r.x->size());
    }
  });
}

entloc_status entloc_graph_ce(const entloc_graph* g, const int* s_idx,
                              size_t s_len, double* out) {
  return guarded([&] {
    require(g && s_idx && out, "null argument");
    *out = entloc::graph_ce(g->g,
                            entloc::SubsystemMask(g->g.n, to_vec(s_idx, s_len)));
  });
}

entloc_status entloc_graph_state(const entloc_graph* g, entloc_state** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new entloc_state{entloc::build_graph_state(g->g)};
  });
}

entloc_status entloc_weighted_graph_state(const entloc_graph* g, double phase,
                                          entloc_state** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new entloc_state{
        entloc::build_weighted_graph_state({g->g, phase})};
  });
}

entloc_status entloc_weighted_trace_distance(const entloc_graph* g,
                                             double phi, double chi,
                                             double* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = entloc::weighted_trace_distance(g->g, phi, chi);
  });
}

entloc_status entloc_ghz_extraction_probability(int n_pairs, double phi,
                                                double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = entloc::ghz_extraction_probability(n_pairs, phi);
  });
}

entloc_status entloc_line_protocol(int n_pairs, double phi, double* out_tau,
                                   double* out_p_ghz) {
  return guarded([&] {
    require(out_tau != nullptr, "null argument");
    entloc::ProtocolResult r = entloc::rotated_x_line_protocol(n_pairs, phi);
    *out_tau = r.avg_tau;
    if (out_p_ghz) *out_p_ghz = entloc::ghz_extraction_probability(n_pairs, phi);
  });
}

entloc_status entloc_haar_sweep(const entloc_haar_sweep_config* cfg,
                                entloc_table** out) {
  return guarded([&] {
    require(cfg && out, "null argument");
    entloc::HaarSweepConfig c;
    c.n_a = cfg->n_a;
    c.n_b = cfg->n_b;
    c.samples = cfg->samples;
    c.kind = parse_kind(cfg->kind, cfg->s_idx, cfg->s_len);
    c.seed = cfg->seed;
    c.pso = parse_pso(&cfg->pso);
    c.threads = cfg->threads > 0 ? cfg->threads : 1;
    c.timings = cfg->timings != 0;
    *out = new entloc_table{entloc::haar_sweep(c)};
  });
}

entloc_status entloc_ising_sweep(const entloc_ising_sweep_config* cfg,
                                 entloc_table** out) {
  return guarded([&] {
    require(cfg && out && cfg->a_idx && cfg->j_over_h, "null argument");
    entloc::IsingSweepConfig c;
    c.n = cfg->n;
    c.measured = entloc::SubsystemMask(cfg->n, to_vec(cfg->a_idx, cfg->a_len));
    c.j_over_h.assign(cfg->j_over_h, cfg->j_over_h + cfg->n_grid);
    c.h_x = cfg->h_x;
    if (cfg->ce_s_idx && cfg->ce_s_len)
      c.ce_s = entloc::SubsystemMask(cfg->n, to_vec(cfg->ce_s_idx, cfg->ce_s_len));
    c.pso = parse_pso(&cfg->pso);
    c.threads = cfg->threads > 0 ? cfg->threads : 1;
    *out = new entloc_table{entloc::ising_sweep(c)};
  });
}

size_t entloc_table_rows(const entloc_table* t) {
  return t ? t->t.rows.size() : 0;
}

size_t entloc_table_cols(const entloc_table* t) {
  return t ? t->t.columns.size() : 0;
}

const char* entloc_table_column(const entloc_table* t, size_t c) {
  if (!t || c >= t->t.columns.size()) return "";
  return t->t.columns[c].c_str();
}

double entloc_table_cell(const entloc_table* t, size_t r, size_t c) {
  if (!t || r >= t->t.rows.size() || c >= t->t.rows[r].size()) return 0.0;
  return t->t.rows[r][c];
}

void entloc_table_free(entloc_table* t) { delete t; }

} // extern "C"
