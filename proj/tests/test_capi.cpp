#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "prx.h"

TEST_CASE("digraph lifecycle and error reporting through the C surface") {
  prx_digraph* g = nullptr;
  REQUIRE(prx_digraph_new(2, &g) == PRX_OK);
  CHECK(prx_digraph_order(g) == 2);
  CHECK(prx_digraph_add_arc(g, 0, 1) == PRX_OK);
  CHECK(prx_digraph_add_arc(g, 0, 1) == PRX_E_DUPLICATE_ARC);
  CHECK(std::string(prx_last_error()).find("duplicate") != std::string::npos);
  CHECK(prx_digraph_add_arc(g, 0, 7) == PRX_E_ARGUMENT);
  CHECK(prx_digraph_arc_count(g) == 1);
  CHECK(prx_digraph_has_arc(g, 0, 1) == 1);
  CHECK(prx_digraph_has_arc(g, 1, 0) == 0);
  int degree = -1;
  CHECK(prx_digraph_out_degree(g, 0, &degree) == PRX_OK);
  CHECK(degree == 1);
  CHECK(prx_digraph_is_weakly_connected(g) == 1);
  CHECK(prx_digraph_alpha1_valid(g) == 0);  // dangling sink without a cycle
  CHECK(prx_digraph_scc_count(g) == 2);
  CHECK(prx_digraph_sink_scc_count(g) == 1);
  prx_digraph_free(g);

  prx_digraph* bad = nullptr;
  CHECK(prx_digraph_new(0, &bad) == PRX_E_ARGUMENT);
  CHECK(bad == nullptr);
}

TEST_CASE("parse and serialize through the C surface") {
  prx_digraph* g = nullptr;
  REQUIRE(prx_digraph_parse("3\n0 1\n1 2\n2 2\n", &g) == PRX_OK);
  CHECK(prx_digraph_order(g) == 3);
  char* text = nullptr;
  REQUIRE(prx_digraph_serialize(g, &text) == PRX_OK);
  CHECK(std::string(text) == "3\n0 1\n1 2\n2 2\n");
  prx_string_free(text);
  prx_digraph_free(g);

  prx_digraph* bad = nullptr;
  CHECK(prx_digraph_parse("2\n0 5\n", &bad) == PRX_E_PARSE);
  CHECK(std::string(prx_last_error()).find("line 2") != std::string::npos);
}

TEST_CASE("solvers through the C surface") {
  prx_digraph* g = nullptr;
  REQUIRE(prx_digraph_parse("2\n0 1\n", &g) == PRX_OK);

  prx_vector* exact = nullptr;
  REQUIRE(prx_solve(g, 0.85, &exact) == PRX_OK);
  CHECK(prx_vector_size(exact) == 2);
  CHECK(prx_vector_value(exact, 0) == doctest::Approx(1.0 / 2.85).epsilon(1e-13));
  CHECK(prx_vector_alpha(exact) == 0.85);
  CHECK(std::strcmp(prx_vector_method(exact), "exact") == 0);

  prx_vector* power = nullptr;
  REQUIRE(prx_solve_power(g, 0.85, 1e-12, 100000, &power) == PRX_OK);
  CHECK(prx_vector_converged(power) == 1);
  CHECK(prx_vector_iterations(power) >= 1);
  double gap = 0.0;
  REQUIRE(prx_norm_diff(exact, power, INFINITY, &gap) == PRX_OK);
  CHECK(gap <= 1e-8);

  prx_vector* walk = nullptr;
  REQUIRE(prx_simulate_walk(g, 0.85, 200000, 11, &walk) == PRX_OK);
  REQUIRE(prx_norm_diff(exact, walk, INFINITY, &gap) == PRX_OK);
  CHECK(gap <= 0.02);
  CHECK(std::strcmp(prx_vector_method(walk), "walk") == 0);

  CHECK(prx_solve_alpha1(g, &walk) == PRX_E_ALPHA1);
  prx_vector* none = nullptr;
  CHECK(prx_solve(g, 1.5, &none) == PRX_E_ARGUMENT);

  double bad = 0.0;
  CHECK(prx_norm_diff(exact, power, 0.5, &bad) == PRX_E_ARGUMENT);

  char* csv = nullptr;
  REQUIRE(prx_vector_csv(exact, &csv) == PRX_OK);
  CHECK(std::string(csv).rfind("vertex,pi\n", 0) == 0);
  prx_string_free(csv);

  prx_vector_free(walk);
  prx_vector_free(power);
  prx_vector_free(exact);
  prx_digraph_free(g);
}

TEST_CASE("ladders and predictions through the C surface") {
  prx_gamma* gamma = nullptr;
  REQUIRE(prx_gamma_build(3, 2, &gamma) == PRX_OK);
  CHECK(prx_gamma_k(gamma) == 3);
  CHECK(prx_gamma_m(gamma) == 2);
  const prx_digraph* g = prx_gamma_graph(gamma);
  CHECK(prx_digraph_order(g) == 6);
  CHECK(prx_digraph_arc_count(g) == 15);
  CHECK(prx_digraph_alpha1_valid(g) == 1);

  int v = -1;
  REQUIRE(prx_gamma_vertex_c(gamma, 2, &v) == PRX_OK);
  CHECK(v == 1);
  REQUIRE(prx_gamma_vertex_b(gamma, 1, &v) == PRX_OK);
  CHECK(v == 2);
  CHECK(prx_gamma_vertex_a(gamma) == 5);
  CHECK(prx_gamma_vertex_b(gamma, 4, &v) == PRX_E_ARGUMENT);

  prx_vector* walk_limit = nullptr;
  REQUIRE(prx_solve_alpha1(g, &walk_limit) == PRX_OK);
  CHECK(prx_vector_value(walk_limit, prx_gamma_vertex_a(gamma)) == 1.0);
  prx_vector_free(walk_limit);
  prx_gamma_free(gamma);

  CHECK(prx_gamma_build(0, 2, &gamma) == PRX_E_ARGUMENT);

  CHECK(prx_predict_c_mass(2.0) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(prx_predict_discrepancy(2.0) ==
        doctest::Approx(std::sqrt(67.0 / 50.0)).epsilon(1e-15));
  double m = 0.0, f = 0.0;
  prx_predict_argmax(&m, &f);
  CHECK(std::abs(m - 1.445036) <= 1e-4);
  CHECK(prx_pi_a_upper_bound(1) == doctest::Approx(13.0 / 12.0).epsilon(1e-15));
  CHECK(prx_bi_lower_bound(10, 1, 0.4) ==
        doctest::Approx(0.4 * 0.9 / 3.0).epsilon(1e-13));

  char* table = nullptr;
  REQUIRE(prx_predict_table_csv(2.0, 1.0, &table) == PRX_OK);
  CHECK(std::string(table).rfind("m,f_m,c_mass\n", 0) == 0);
  prx_string_free(table);
}

TEST_CASE("sweep, limit and search through the C surface") {
  prx_gamma* gamma = nullptr;
  REQUIRE(prx_gamma_build(50, 2, &gamma) == PRX_OK);
  const prx_digraph* g = prx_gamma_graph(gamma);

  const double grid[] = {0.0, 0.5, 1.0 - 1.0 / 50, 1.0};
  prx_sweep* sweep = nullptr;
  REQUIRE(prx_sweep_run(g, 1.0, grid, 4, &sweep) == PRX_OK);
  REQUIRE(prx_sweep_size(sweep) == 4);
  CHECK(prx_sweep_alpha(sweep, 3) == 1.0);
  CHECK(prx_sweep_d2(sweep, 3) == 0.0);
  CHECK(prx_sweep_d2(sweep, 2) > 1.0);
  CHECK(prx_sweep_d1(sweep, 2) > 1.8);
  CHECK(prx_sweep_dinf(sweep, 2) > 0.8);
  char* csv = nullptr;
  REQUIRE(prx_sweep_csv(sweep, &csv) == PRX_OK);
  CHECK(std::string(csv).rfind("alpha,d1,d2,dinf\n", 0) == 0);
  prx_string_free(csv);
  prx_sweep_free(sweep);

  double a1 = 0.0, a2 = 0.0, d2 = 0.0;
  REQUIRE(prx_max_pair(g, grid, 4, 0, &a1, &a2, &d2) == PRX_OK);
  CHECK(a1 == 1.0 - 1.0 / 50);
  CHECK(a2 == 1.0);
  CHECK(d2 > 1.0);
  prx_gamma_free(gamma);

  const int ks[] = {2, 12};
  prx_limit* limit = nullptr;
  REQUIRE(prx_limit_run(ks, 2, 2, &limit) == PRX_OK);
  REQUIRE(prx_limit_size(limit) == 2);
  CHECK(prx_limit_k(limit, 1) == 12);
  CHECK(prx_limit_d2(limit, 0) < prx_limit_d2(limit, 1));
  CHECK(prx_limit_pi_c(limit, 1) > 0.2);
  CHECK(prx_limit_norm_sq(limit, 1) < 1.0);
  CHECK(prx_limit_pi_a(limit, 1) < prx_pi_a_upper_bound(12));
  CHECK(prx_limit_dinf(limit, 1) <= 1.0);
  CHECK(prx_limit_d1(limit, 1) <= 2.0);
  REQUIRE(prx_limit_csv(limit, &csv) == PRX_OK);
  CHECK(std::string(csv).rfind("k,pi_A,pi_C,norm_sq,d1,d2,dinf\n", 0) == 0);
  prx_string_free(csv);
  prx_limit_free(limit);

  const int bad_k[] = {1};
  CHECK(prx_limit_run(bad_k, 1, 2, &limit) == PRX_E_ARGUMENT);

  prx_search* search = nullptr;
  const double small_grid[] = {0.0, 0.5, 0.9, 1.0};
  REQUIRE(prx_search_run(2, small_grid, 4, 5, 0, &search) == PRX_OK);
  REQUIRE(prx_search_size(search) == 5);
  CHECK(prx_search_order(search) == 2);
  CHECK(prx_search_d2(search, 0) >= prx_search_d2(search, 1));
  CHECK(prx_search_d2(search, 0) < std::sqrt(67.0 / 50.0));
  CHECK(prx_search_mask(search, 0) < 16);
  CHECK(prx_search_alpha1(search, 0) < prx_search_alpha2(search, 0));
  REQUIRE(prx_search_csv(search, &csv) == PRX_OK);
  CHECK(std::string(csv).rfind("rank,bitmask,alpha1,alpha2,d2\n", 0) == 0);
  prx_string_free(csv);
  prx_search_free(search);

  CHECK(prx_search_run(5, small_grid, 4, 5, 0, &search) == PRX_E_ARGUMENT);

  const int grid_len = prx_default_grid(nullptr, 0);
  CHECK(grid_len == 26);
  std::vector<double> full(grid_len);
  CHECK(prx_default_grid(full.data(), grid_len) == grid_len);
  CHECK(full.front() == 0.0);
  CHECK(full.back() == 1.0);
}

TEST_CASE("status names") {
  CHECK(std::string(prx_status_name(PRX_OK)) == "ok");
  CHECK(std::string(prx_status_name(PRX_E_PARSE)) == "parse error");
  CHECK(std::string(prx_status_name(PRX_E_ALPHA1)).find("alpha") != std::string::npos);
}
