#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prx.h"

namespace {

constexpr int kExitIo = 2;
constexpr int kExitData = 3;
constexpr int kExitUsage = 4;

int exit_code_for(prx_status status) {
  switch (status) {
    case PRX_OK: return 0;
    case PRX_E_ARGUMENT: return kExitUsage;
    case PRX_E_DUPLICATE_ARC:
    case PRX_E_PARSE:
    case PRX_E_ALPHA1: return kExitData;
    default: return 1;
  }
}

[[noreturn]] void die(prx_status status) {
  std::fprintf(stderr, "prx: %s: %s\n", prx_status_name(status), prx_last_error());
  std::exit(exit_code_for(status));
}

[[noreturn]] void die_usage(const std::string& message) {
  std::fprintf(stderr, "prx: %s\n", message.c_str());
  std::exit(kExitUsage);
}

[[noreturn]] void die_io(const std::string& path) {
  std::fprintf(stderr, "prx: cannot open %s\n", path.c_str());
  std::exit(kExitIo);
}

std::string read_file_or_die(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die_io(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) die_io(path);
  out << text;
  out.flush();
  if (!out) die_io(path);
}

prx_digraph* load_graph(const std::string& path) {
  const std::string text = read_file_or_die(path);
  prx_digraph* g = nullptr;
  if (prx_status s = prx_digraph_parse(text.c_str(), &g)) die(s);
  return g;
}

std::vector<double> parse_grid(const std::string& spec) {
  if (spec == "default") {
    std::vector<double> grid(prx_default_grid(nullptr, 0));
    prx_default_grid(grid.data(), static_cast<int>(grid.size()));
    return grid;
  }
  std::vector<double> grid;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double value = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0')
      die_usage("bad grid value '" + item + "'");
    if (!(value >= 0.0 && value <= 1.0))
      die_usage("grid value " + item + " outside [0, 1]");
    grid.push_back(value);
  }
  if (grid.empty()) die_usage("empty grid");
  return grid;
}

struct PagerankArgs {
  std::string graph_path;
  double alpha = 0.85;
  std::string solver = "auto";
  double tol = 1e-12;
  long long max_iter = 1000000;
  long long steps = 1000000;
  unsigned long long seed = 1;
};

int run_pagerank(const PagerankArgs& args) {
  prx_digraph* g = load_graph(args.graph_path);
  prx_vector* pi = nullptr;
  prx_status status;
  if (args.solver == "power")
    status = prx_solve_power(g, args.alpha, args.tol, args.max_iter, &pi);
  else if (args.solver == "walk")
    status = prx_simulate_walk(g, args.alpha, args.steps, args.seed, &pi);
  else  // auto and exact share the direct path; alpha = 1 takes the walk limit
    status = prx_solve(g, args.alpha, &pi);
  if (status) die(status);

  if (args.solver == "power" && !prx_vector_converged(pi))
    std::fprintf(stderr, "prx: power iteration did not converge within %lld iterations\n",
                 prx_vector_iterations(pi));

  char* csv = nullptr;
  if (prx_status s = prx_vector_csv(pi, &csv)) die(s);
  std::fputs(csv, stdout);
  prx_string_free(csv);
  prx_vector_free(pi);
  prx_digraph_free(g);
  return 0;
}

struct GammaArgs {
  int k = 1;
  int m = 2;
  std::string out_path;
};

int run_gamma(const GammaArgs& args) {
  prx_gamma* gamma = nullptr;
  if (prx_status s = prx_gamma_build(args.k, args.m, &gamma)) die(s);
  char* text = nullptr;
  if (prx_status s = prx_digraph_serialize(prx_gamma_graph(gamma), &text)) die(s);
  write_output(args.out_path, text);
  prx_string_free(text);

  // Role legend on stderr so stdout stays machine readable.
  for (int i = 1; i <= args.m; ++i) {
    int v = 0;
    prx_gamma_vertex_c(gamma, i, &v);
    std::fprintf(stderr, "C%d %d\n", i, v);
  }
  for (int i = 1; i <= args.k; ++i) {
    int v = 0;
    prx_gamma_vertex_b(gamma, i, &v);
    std::fprintf(stderr, "B%d %d\n", i, v);
  }
  std::fprintf(stderr, "A %d\n", prx_gamma_vertex_a(gamma));
  prx_gamma_free(gamma);
  return 0;
}

struct SweepArgs {
  std::string graph_path;
  double alpha_ref = 1.0;
  std::string grid_spec = "default";
  std::string out_path;
};

int run_sweep(const SweepArgs& args) {
  const std::vector<double> grid = parse_grid(args.grid_spec);
  prx_digraph* g = load_graph(args.graph_path);
  prx_sweep* sweep = nullptr;
  if (prx_status s = prx_sweep_run(g, args.alpha_ref, grid.data(),
                                   static_cast<int>(grid.size()), &sweep))
    die(s);
  char* csv = nullptr;
  if (prx_status s = prx_sweep_csv(sweep, &csv)) die(s);
  write_output(args.out_path, csv);
  prx_string_free(csv);
  prx_sweep_free(sweep);
  prx_digraph_free(g);
  return 0;
}

struct LimitArgs {
  std::vector<int> k_list;
  int m = 2;
};

int run_limit(const LimitArgs& args) {
  prx_limit* table = nullptr;
  if (prx_status s = prx_limit_run(args.k_list.data(), static_cast<int>(args.k_list.size()),
                                   args.m, &table))
    die(s);
  char* csv = nullptr;
  if (prx_status s = prx_limit_csv(table, &csv)) die(s);
  std::fputs(csv, stdout);
  prx_string_free(csv);
  prx_limit_free(table);
  return 0;
}

struct PredictArgs {
  double m_max = 10.0;
  double step = 0.01;
};

int run_predict(const PredictArgs& args) {
  char* csv = nullptr;
  if (prx_status s = prx_predict_table_csv(args.m_max, args.step, &csv)) die(s);
  std::fputs(csv, stdout);
  prx_string_free(csv);

  int best_m = 1;
  double best_f = 0.0;
  for (int m = 1; m <= static_cast<int>(args.m_max); ++m) {
    const double f = prx_predict_discrepancy(m);
    std::fprintf(stderr, "m=%d f=%.9f c_mass=%.9f\n", m, f, prx_predict_c_mass(m));
    if (f > best_f) {
      best_f = f;
      best_m = m;
    }
  }
  double argmax_m = 0.0, argmax_f = 0.0;
  prx_predict_argmax(&argmax_m, &argmax_f);
  std::fprintf(stderr, "continuous argmax: m=%.9f f=%.9f\n", argmax_m, argmax_f);
  std::fprintf(stderr, "best integer m: %d (f=%.9f)\n", best_m, best_f);
  return 0;
}

struct SearchArgs {
  int n = 3;
  std::string grid_spec = "default";
  int top = 10;
  bool allow_large = false;
};

int run_search(const SearchArgs& args) {
  const std::vector<double> grid = parse_grid(args.grid_spec);
  prx_search* search = nullptr;
  if (prx_status s = prx_search_run(args.n, grid.data(), static_cast<int>(grid.size()),
                                    args.top, args.allow_large ? 1 : 0, &search))
    die(s);
  char* csv = nullptr;
  if (prx_status s = prx_search_csv(search, &csv)) die(s);
  std::fputs(csv, stdout);
  prx_string_free(csv);
  prx_search_free(search);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PageRank jumping-parameter discrepancy toolkit"};
  app.require_subcommand(1);

  PagerankArgs pagerank_args;
  CLI::App* pagerank = app.add_subcommand("pagerank", "Solve one PageRank vector, CSV to stdout");
  pagerank->add_option("--graph", pagerank_args.graph_path, "graph file")->required();
  pagerank->add_option("--alpha", pagerank_args.alpha, "jumping parameter")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  pagerank->add_option("--solver", pagerank_args.solver, "auto|exact|power|walk")
      ->check(CLI::IsMember({"auto", "exact", "power", "walk"}));
  pagerank->add_option("--tol", pagerank_args.tol, "power iteration tolerance");
  pagerank->add_option("--max-iter", pagerank_args.max_iter, "power iteration cap");
  pagerank->add_option("--steps", pagerank_args.steps, "walk length");
  pagerank->add_option("--seed", pagerank_args.seed, "walk seed");

  GammaArgs gamma_args;
  CLI::App* gamma = app.add_subcommand("gamma", "Emit a ladder graph file; role legend on stderr");
  gamma->add_option("--k", gamma_args.k, "ladder length")->required();
  gamma->add_option("--m", gamma_args.m, "number of C vertices");
  gamma->add_option("--out", gamma_args.out_path, "output path (stdout when omitted)");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Discrepancy against a reference alpha, CSV");
  sweep->add_option("--graph", sweep_args.graph_path, "graph file")->required();
  sweep->add_option("--alpha-ref", sweep_args.alpha_ref, "reference alpha")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--grid", sweep_args.grid_spec, "comma list or 'default'");
  sweep->add_option("--out", sweep_args.out_path, "output path (stdout when omitted)");

  LimitArgs limit_args;
  CLI::App* limit = app.add_subcommand("limit", "Ladder limit table over k, CSV to stdout");
  limit->add_option("--k-list", limit_args.k_list, "comma-separated ladder lengths")
      ->required()
      ->delimiter(',');
  limit->add_option("--m", limit_args.m, "number of C vertices");

  PredictArgs predict_args;
  CLI::App* predict = app.add_subcommand("predict", "Closed-form discrepancy curve, CSV to stdout");
  predict->add_option("--m-max", predict_args.m_max, "largest m in the table");
  predict->add_option("--step", predict_args.step, "grid step");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "Exhaustive small-graph search, CSV to stdout");
  search->add_option("--n", search_args.n, "vertex count")->required();
  search->add_option("--grid", search_args.grid_spec, "comma list or 'default'");
  search->add_option("--top", search_args.top, "records to keep");
  search->add_flag("--allow-large", search_args.allow_large, "permit the 2^25-graph n = 5 run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (pagerank->parsed()) return run_pagerank(pagerank_args);
  if (gamma->parsed()) return run_gamma(gamma_args);
  if (sweep->parsed()) return run_sweep(sweep_args);
  if (limit->parsed()) return run_limit(limit_args);
  if (predict->parsed()) return run_predict(predict_args);
  if (search->parsed()) return run_search(search_args);
  return kExitUsage;
}
