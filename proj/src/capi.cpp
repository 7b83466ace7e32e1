#include "prx.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "prx/digraph.hpp"
#include "prx/discrepancy.hpp"
#include "prx/gamma.hpp"
#include "prx/pagerank.hpp"

struct prx_digraph {
  prx::Digraph impl;
};

struct prx_vector {
  prx::PagerankVector impl;
};

struct prx_gamma {
  prx_digraph graph;
  prx::GammaLabels labels;
};

struct prx_sweep {
  prx::SweepResult impl;
};

struct prx_limit {
  std::vector<prx::LimitRow> rows;
};

struct prx_search {
  int order = 0;
  std::vector<prx::SearchRecord> records;
};

namespace {

thread_local std::string g_last_error;

prx_status map_code(prx::errc code) {
  switch (code) {
    case prx::errc::invalid_argument: return PRX_E_ARGUMENT;
    case prx::errc::out_of_range: return PRX_E_ARGUMENT;
    case prx::errc::duplicate_arc: return PRX_E_DUPLICATE_ARC;
    case prx::errc::parse: return PRX_E_PARSE;
    case prx::errc::alpha1_invalid: return PRX_E_ALPHA1;
    case prx::errc::numeric: return PRX_E_NUMERIC;
  }
  return PRX_E_INTERNAL;
}

template <typename Fn>
prx_status guarded(Fn&& fn) {
  try {
    fn();
    return PRX_OK;
  } catch (const prx::error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PRX_E_INTERNAL;
  }
}

prx_status require(bool ok, const char* message) {
  if (ok) return PRX_OK;
  g_last_error = message;
  return PRX_E_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

const char* prx_status_name(prx_status status) {
  switch (status) {
    case PRX_OK: return "ok";
    case PRX_E_ARGUMENT: return "invalid argument";
    case PRX_E_DUPLICATE_ARC: return "duplicate arc";
    case PRX_E_PARSE: return "parse error";
    case PRX_E_ALPHA1: return "alpha = 1 not well-defined";
    case PRX_E_NUMERIC: return "numeric failure";
    case PRX_E_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* prx_last_error(void) { return g_last_error.c_str(); }

void prx_string_free(char* text) { std::free(text); }

/* ---- directed graphs -------------------------------------------------- */

prx_status prx_digraph_new(int vertex_count, prx_digraph** out) {
  if (prx_status s = require(out != nullptr, "null output handle")) return s;
  return guarded([&] { *out = new prx_digraph{prx::Digraph(vertex_count)}; });
}

prx_status prx_digraph_parse(const char* text, prx_digraph** out) {
  if (prx_status s = require(text != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new prx_digraph{prx::parse_graph(text)}; });
}

void prx_digraph_free(prx_digraph* g) { delete g; }

prx_status prx_digraph_add_arc(prx_digraph* g, int u, int v) {
  if (prx_status s = require(g != nullptr, "null graph handle")) return s;
  return guarded([&] { g->impl.add_arc(u, v); });
}

int prx_digraph_order(const prx_digraph* g) { return g->impl.order(); }

int prx_digraph_arc_count(const prx_digraph* g) { return g->impl.arc_count(); }

int prx_digraph_has_arc(const prx_digraph* g, int u, int v) {
  if (u < 0 || v < 0 || u >= g->impl.order() || v >= g->impl.order()) return 0;
  return g->impl.has_arc(u, v) ? 1 : 0;
}

prx_status prx_digraph_out_degree(const prx_digraph* g, int u, int* out) {
  if (prx_status s = require(g != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = g->impl.out_degree(u); });
}

int prx_digraph_is_weakly_connected(const prx_digraph* g) {
  return prx::is_weakly_connected(g->impl) ? 1 : 0;
}

int prx_digraph_alpha1_valid(const prx_digraph* g) {
  return prx::alpha1_valid(g->impl) ? 1 : 0;
}

int prx_digraph_scc_count(const prx_digraph* g) {
  return static_cast<int>(prx::scc_report(g->impl).components.size());
}

int prx_digraph_sink_scc_count(const prx_digraph* g) {
  const prx::SccReport report = prx::scc_report(g->impl);
  int sinks = 0;
  for (bool s : report.is_sink) sinks += s ? 1 : 0;
  return sinks;
}

prx_status prx_digraph_serialize(const prx_digraph* g, char** out_text) {
  if (prx_status s = require(g != nullptr && out_text != nullptr, "null argument")) return s;
  return guarded([&] { *out_text = copy_string(prx::serialize_graph(g->impl)); });
}

/* ---- PageRank solvers -------------------------------------------------- */

prx_status prx_solve(const prx_digraph* g, double alpha, prx_vector** out) {
  if (prx_status s = require(g != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new prx_vector{prx::solve_exact(g->impl, alpha)}; });
}

prx_status prx_solve_power(const prx_digraph* g, double alpha, double tol, long long max_iter,
                           prx_vector** out) {
  if (prx_status s = require(g != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] {
    *out = new prx_vector{prx::solve_power(g->impl, alpha, tol, static_cast<long>(max_iter))};
  });
}

prx_status prx_solve_alpha1(const prx_digraph* g, prx_vector** out) {
  if (prx_status s = require(g != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new prx_vector{prx::solve_alpha1(g->impl)}; });
}

prx_status prx_simulate_walk(const prx_digraph* g, double alpha, long long steps,
                             unsigned long long seed, prx_vector** out) {
  if (prx_status s = require(g != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new prx_vector{prx::simulate_walk(g->impl, alpha, steps, seed)}; });
}

void prx_vector_free(prx_vector* v) { delete v; }

int prx_vector_size(const prx_vector* v) { return static_cast<int>(v->impl.values.size()); }

double prx_vector_value(const prx_vector* v, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(v->impl.values.size())) return 0.0;
  return v->impl.values[vertex];
}

double prx_vector_alpha(const prx_vector* v) { return v->impl.alpha; }

const char* prx_vector_method(const prx_vector* v) {
  return prx::method_name(v->impl.method).data();
}

int prx_vector_converged(const prx_vector* v) { return v->impl.converged ? 1 : 0; }

long long prx_vector_iterations(const prx_vector* v) { return v->impl.iterations; }

prx_status prx_vector_csv(const prx_vector* v, char** out_text) {
  if (prx_status s = require(v != nullptr && out_text != nullptr, "null argument")) return s;
  return guarded([&] { *out_text = copy_string(prx::to_csv(v->impl)); });
}

/* ---- ladder constructions and closed-form predictions ------------------ */

prx_status prx_gamma_build(int k, int m, prx_gamma** out) {
  if (prx_status s = require(out != nullptr, "null output handle")) return s;
  return guarded([&] {
    prx::GammaGraph built = prx::build_gamma_general(k, m);
    *out = new prx_gamma{prx_digraph{std::move(built.graph)}, std::move(built.labels)};
  });
}

void prx_gamma_free(prx_gamma* g) { delete g; }

const prx_digraph* prx_gamma_graph(const prx_gamma* g) { return &g->graph; }

int prx_gamma_k(const prx_gamma* g) { return g->labels.k; }

int prx_gamma_m(const prx_gamma* g) { return g->labels.m; }

int prx_gamma_vertex_a(const prx_gamma* g) { return g->labels.a; }

prx_status prx_gamma_vertex_b(const prx_gamma* g, int i, int* out) {
  if (prx_status s = require(g != nullptr && out != nullptr, "null argument")) return s;
  if (prx_status s = require(i >= 1 && i <= g->labels.k, "B index out of range")) return s;
  *out = g->labels.b[i - 1];
  return PRX_OK;
}

prx_status prx_gamma_vertex_c(const prx_gamma* g, int i, int* out) {
  if (prx_status s = require(g != nullptr && out != nullptr, "null argument")) return s;
  if (prx_status s = require(i >= 1 && i <= g->labels.m, "C index out of range")) return s;
  *out = g->labels.c[i - 1];
  return PRX_OK;
}

double prx_predict_c_mass(double m) { return prx::predict_c_mass(m); }

double prx_predict_discrepancy(double m) { return prx::predict_discrepancy(m); }

void prx_predict_argmax(double* m_out, double* value_out) {
  const prx::ArgmaxResult r = prx::predict_argmax();
  if (m_out) *m_out = r.m;
  if (value_out) *value_out = r.value;
}

double prx_pi_a_upper_bound(int k) { return prx::pi_a_upper_bound(k); }

double prx_bi_lower_bound(int k, int i, double pi_c2) { return prx::bi_lower_bound(k, i, pi_c2); }

prx_status prx_predict_table_csv(double m_max, double step, char** out_text) {
  if (prx_status s = require(out_text != nullptr, "null output handle")) return s;
  return guarded([&] { *out_text = copy_string(prx::predict_table_csv(m_max, step)); });
}

/* ---- discrepancy measurement ------------------------------------------- */

prx_status prx_norm_diff(const prx_vector* a, const prx_vector* b, double p, double* out) {
  if (prx_status s = require(a != nullptr && b != nullptr && out != nullptr, "null argument"))
    return s;
  return guarded([&] { *out = prx::norm_diff(a->impl, b->impl, p); });
}

int prx_default_grid(double* out, int capacity) {
  const std::vector<double> grid = prx::default_grid();
  if (out) {
    const int fill = std::min<int>(capacity, static_cast<int>(grid.size()));
    for (int i = 0; i < fill; ++i) out[i] = grid[i];
  }
  return static_cast<int>(grid.size());
}

prx_status prx_sweep_run(const prx_digraph* g, double alpha_ref, const double* grid,
                         int grid_len, prx_sweep** out) {
  if (prx_status s = require(g != nullptr && out != nullptr, "null argument")) return s;
  if (prx_status s = require(grid != nullptr && grid_len > 0, "grid must not be empty")) return s;
  return guarded([&] {
    *out = new prx_sweep{prx::sweep(g->impl, alpha_ref, {grid, static_cast<size_t>(grid_len)})};
  });
}

void prx_sweep_free(prx_sweep* s) { delete s; }

int prx_sweep_size(const prx_sweep* s) { return static_cast<int>(s->impl.samples.size()); }

double prx_sweep_alpha(const prx_sweep* s, int i) { return s->impl.samples[i].alpha; }

double prx_sweep_d1(const prx_sweep* s, int i) { return s->impl.samples[i].d1; }

double prx_sweep_d2(const prx_sweep* s, int i) { return s->impl.samples[i].d2; }

double prx_sweep_dinf(const prx_sweep* s, int i) { return s->impl.samples[i].dinf; }

prx_status prx_sweep_csv(const prx_sweep* s, char** out_text) {
  if (prx_status st = require(s != nullptr && out_text != nullptr, "null argument")) return st;
  return guarded([&] { *out_text = copy_string(prx::to_csv(s->impl)); });
}

prx_status prx_max_pair(const prx_digraph* g, const double* grid, int grid_len,
                        int refine_rounds, double* alpha1, double* alpha2, double* d2) {
  if (prx_status s = require(g != nullptr && grid != nullptr && grid_len > 0, "null argument"))
    return s;
  return guarded([&] {
    const prx::SearchRecord record =
        prx::max_pair(g->impl, {grid, static_cast<size_t>(grid_len)}, refine_rounds);
    if (alpha1) *alpha1 = record.alpha1;
    if (alpha2) *alpha2 = record.alpha2;
    if (d2) *d2 = record.d2;
  });
}

prx_status prx_limit_run(const int* k_values, int count, int m, prx_limit** out) {
  if (prx_status s = require(k_values != nullptr && count > 0 && out != nullptr,
                             "k list must not be empty"))
    return s;
  return guarded([&] {
    *out = new prx_limit{prx::limit_table({k_values, static_cast<size_t>(count)}, m)};
  });
}

void prx_limit_free(prx_limit* t) { delete t; }

int prx_limit_size(const prx_limit* t) { return static_cast<int>(t->rows.size()); }

int prx_limit_k(const prx_limit* t, int row) { return t->rows[row].k; }

double prx_limit_pi_a(const prx_limit* t, int row) { return t->rows[row].pi_a; }

double prx_limit_pi_c(const prx_limit* t, int row) { return t->rows[row].pi_c; }

double prx_limit_norm_sq(const prx_limit* t, int row) { return t->rows[row].norm_sq; }

double prx_limit_d1(const prx_limit* t, int row) { return t->rows[row].d1; }

double prx_limit_d2(const prx_limit* t, int row) { return t->rows[row].d2; }

double prx_limit_dinf(const prx_limit* t, int row) { return t->rows[row].dinf; }

prx_status prx_limit_csv(const prx_limit* t, char** out_text) {
  if (prx_status s = require(t != nullptr && out_text != nullptr, "null argument")) return s;
  return guarded([&] { *out_text = copy_string(prx::to_csv(t->rows)); });
}

prx_status prx_search_run(int n, const double* grid, int grid_len, int top, int allow_large,
                          prx_search** out) {
  if (prx_status s = require(grid != nullptr && grid_len > 0 && out != nullptr, "null argument"))
    return s;
  return guarded([&] {
    *out = new prx_search{
        n, prx::brute_search(n, {grid, static_cast<size_t>(grid_len)}, top, allow_large != 0)};
  });
}

void prx_search_free(prx_search* s) { delete s; }

int prx_search_size(const prx_search* s) { return static_cast<int>(s->records.size()); }

int prx_search_order(const prx_search* s) { return s->order; }

unsigned long long prx_search_mask(const prx_search* s, int i) { return s->records[i].mask; }

double prx_search_alpha1(const prx_search* s, int i) { return s->records[i].alpha1; }

double prx_search_alpha2(const prx_search* s, int i) { return s->records[i].alpha2; }

double prx_search_d2(const prx_search* s, int i) { return s->records[i].d2; }

prx_status prx_search_csv(const prx_search* s, char** out_text) {
  if (prx_status st = require(s != nullptr && out_text != nullptr, "null argument")) return st;
  return guarded([&] { *out_text = copy_string(prx::search_to_csv(s->records, s->order)); });
}
