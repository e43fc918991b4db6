#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "entloc/entloc.h"

TEST_CASE("version and capacity") {
  CHECK(entloc_version() != nullptr);
  CHECK(std::strlen(entloc_version()) > 0);
  CHECK(entloc_capacity() >= 2);
}

TEST_CASE("presets, JSON round trip and errors") {
  entloc_state* s = nullptr;
  REQUIRE(entloc_state_preset("ghz", 4, 0, &s) == ENTLOC_OK);
  CHECK(entloc_state_nqubits(s) == 4);

  char* text = nullptr;
  REQUIRE(entloc_state_to_json(s, &text) == ENTLOC_OK);
  entloc_state* back = nullptr;
  REQUIRE(entloc_state_from_json(text, &back) == ENTLOC_OK);
  CHECK(entloc_state_nqubits(back) == 4);
  entloc_string_free(text);
  entloc_state_free(back);
  entloc_state_free(s);

  entloc_state* bad = nullptr;
  CHECK(entloc_state_preset("nope", 3, 0, &bad) == ENTLOC_ERR_VALIDATION);
  CHECK(bad == nullptr);
  CHECK(std::strlen(entloc_last_error()) > 0);
  CHECK(entloc_state_from_json("{broken", &bad) == ENTLOC_ERR_VALIDATION);

  // Seeded presets reproduce.
  entloc_state* h1 = nullptr;
  entloc_state* h2 = nullptr;
  REQUIRE(entloc_state_preset("haar", 3, 9, &h1) == ENTLOC_OK);
  REQUIRE(entloc_state_preset("haar", 3, 9, &h2) == ENTLOC_OK);
  char* t1 = nullptr;
  char* t2 = nullptr;
  REQUIRE(entloc_state_to_json(h1, &t1) == ENTLOC_OK);
  REQUIRE(entloc_state_to_json(h2, &t2) == ENTLOC_OK);
  CHECK(std::string(t1) == std::string(t2));
  entloc_string_free(t1);
  entloc_string_free(t2);
  entloc_state_free(h1);
  entloc_state_free(h2);
}

TEST_CASE("measures through the C surface") {
  entloc_state* ghz4 = nullptr;
  REQUIRE(entloc_state_preset("ghz", 4, 0, &ghz4) == ENTLOC_OK);
  double v = 0.0;
  REQUIRE(entloc_measure(ghz4, "ntangle", nullptr, 0, &v) == ENTLOC_OK);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(entloc_measure(ghz4, "gme", nullptr, 0, &v) == ENTLOC_OK);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  const int s012[] = {1, 2, 3};
  REQUIRE(entloc_measure(ghz4, "ce", s012, 3, &v) == ENTLOC_OK);
  CHECK(v == doctest::Approx(0.4375).epsilon(1e-12));
  CHECK(entloc_measure(ghz4, "bogus", nullptr, 0, &v) ==
        ENTLOC_ERR_VALIDATION);
  CHECK(entloc_measure(ghz4, "ce", nullptr, 0, &v) == ENTLOC_ERR_VALIDATION);
  entloc_state_free(ghz4);
}

TEST_CASE("mea, bounds and lme") {
  entloc_state* ghz3 = nullptr;
  REQUIRE(entloc_state_preset("ghz", 3, 0, &ghz3) == ENTLOC_OK);
  const int a0[] = {0};
  double mea = 0.0;
  REQUIRE(entloc_mea_tau(ghz3, a0, 1, &mea) == ENTLOC_OK);
  CHECK(mea == doctest::Approx(1.0).epsilon(1e-10));

  double ub = 0.0, lb = 0.0;
  REQUIRE(entloc_bounds(ghz3, a0, 1, "ntangle", nullptr, 0, &ub, &lb) ==
          ENTLOC_OK);
  CHECK(ub == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(lb == 0.0);
  const int s12[] = {1, 2};
  REQUIRE(entloc_bounds(ghz3, a0, 1, "ce", s12, 2, &ub, &lb) == ENTLOC_OK);
  CHECK(ub == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(lb == doctest::Approx(0.25).epsilon(1e-10));

  entloc_pso_config pso;
  pso.swarm_size = 16;
  pso.iterations = 40;
  pso.inertia = -1;
  pso.cognitive = -1;
  pso.social = -1;
  pso.restarts = 1;
  pso.velocity_clamp = -1;
  pso.seed = 5;
  pso.threads = 1;
  double val = 0.0;
  double params[2] = {0, 0};
  REQUIRE(entloc_lme(ghz3, a0, 1, "ntangle", nullptr, 0, &pso, &val,
                     params) == ENTLOC_OK);
  CHECK(val == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(params[0] >= 0.0);

  // Odd kept-qubit counts are a validation error for the exact MEA.
  entloc_state* ghz4 = nullptr;
  REQUIRE(entloc_state_preset("ghz", 4, 0, &ghz4) == ENTLOC_OK);
  CHECK(entloc_mea_tau(ghz4, a0, 1, &mea) == ENTLOC_ERR_VALIDATION);
  entloc_state_free(ghz4);
  entloc_state_free(ghz3);
}

TEST_CASE("graphs through the C surface") {
  // Path on 7 vertices.
  std::vector<int> edges;
  for (int v = 0; v + 1 < 7; ++v) {
    edges.push_back(v);
    edges.push_back(v + 1);
  }
  entloc_graph* g = nullptr;
  REQUIRE(entloc_graph_from_edges(7, edges.data(), 6, &g) == ENTLOC_OK);

  const int a[] = {1, 3, 5};
  int solvable = 0, fast = 0;
  int x[3] = {9, 9, 9};
  size_t x_len = 0;
  REQUIRE(entloc_graph_check(g, a, 3, &solvable, x, &x_len, &fast) ==
          ENTLOC_OK);
  CHECK(solvable == 1);
  CHECK(fast == 0);
  REQUIRE(x_len == 3);
  CHECK(x[0] == 1);
  CHECK(x[1] == 0);
  CHECK(x[2] == 1);

  double ce = 0.0;
  const int s123[] = {1, 2, 3};
  REQUIRE(entloc_graph_ce(g, s123, 3, &ce) == ENTLOC_OK);
  CHECK(ce == doctest::Approx(0.5625).epsilon(1e-12));

  entloc_state* psi = nullptr;
  REQUIRE(entloc_graph_state(g, &psi) == ENTLOC_OK);
  CHECK(entloc_state_nqubits(psi) == 7);
  entloc_state_free(psi);

  double dist = 0.0;
  REQUIRE(entloc_weighted_trace_distance(g, 1.0, 1.0, &dist) == ENTLOC_OK);
  CHECK(dist == doctest::Approx(0.0).epsilon(1e-12));
  entloc_graph_free(g);

  double tau = 0.0, p_ghz = 0.0;
  REQUIRE(entloc_line_protocol(1, 3.14159265358979323846, &tau, &p_ghz) ==
          ENTLOC_OK);
  CHECK(tau == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(p_ghz == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("sweeps through the C surface") {
  entloc_pso_config pso;
  pso.swarm_size = 8;
  pso.iterations = 15;
  pso.inertia = -1;
  pso.cognitive = -1;
  pso.social = -1;
  pso.restarts = 1;
  pso.velocity_clamp = -1;
  pso.seed = 3;
  pso.threads = 1;

  entloc_haar_sweep_config hc;
  hc.n_a = 1;
  hc.n_b = 2;
  hc.samples = 3;
  hc.kind = "ntangle";
  hc.s_idx = nullptr;
  hc.s_len = 0;
  hc.seed = 17;
  hc.pso = pso;
  hc.threads = 1;
  hc.timings = 0;
  entloc_table* t = nullptr;
  REQUIRE(entloc_haar_sweep(&hc, &t) == ENTLOC_OK);
  CHECK(entloc_table_rows(t) == 3);
  CHECK(entloc_table_cols(t) == 6);
  CHECK(std::string(entloc_table_column(t, 0)) == "sample_index");
  CHECK(std::string(entloc_table_column(t, 5)) == "seconds");
  CHECK(entloc_table_cell(t, 2, 0) == 2.0);
  CHECK(entloc_table_cell(t, 0, 1) <= entloc_table_cell(t, 0, 2) + 1e-8);
  entloc_table_free(t);

  const int sites[] = {1};
  entloc_ising_sweep_config ic;
  ic.n = 3;
  ic.a_idx = sites;
  ic.a_len = 1;
  const double grid[] = {0.5, 2.0};
  ic.j_over_h = grid;
  ic.n_grid = 2;
  ic.h_x = 0.0;
  ic.ce_s_idx = nullptr;
  ic.ce_s_len = 0;
  ic.pso = pso;
  ic.threads = 1;
  entloc_table* it = nullptr;
  REQUIRE(entloc_ising_sweep(&ic, &it) == ENTLOC_OK);
  CHECK(entloc_table_rows(it) == 2);
  CHECK(entloc_table_cols(it) == 8);
  CHECK(std::string(entloc_table_column(it, 3)) == "lme_tau");
  CHECK(entloc_table_cell(it, 0, 0) == 0.5);
  entloc_table_free(it);
}
