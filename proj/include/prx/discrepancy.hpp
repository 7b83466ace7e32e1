#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prx/digraph.hpp"
#include "prx/gamma.hpp"
#include "prx/pagerank.hpp"

namespace prx {

// p-norm of the entrywise difference; p >= 1, infinity selects the max norm.
double norm_diff(std::span<const double> a, std::span<const double> b, double p);
double norm_diff(const PagerankVector& a, const PagerankVector& b, double p);

struct SweepSample {
  double alpha = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double dinf = 0.0;
};

struct SweepResult {
  double alpha_ref = 0.0;
  std::vector<SweepSample> samples;
};

// Distance of the ranking at each grid alpha from the ranking at alpha_ref,
// in all three norms. Exact solves throughout; alpha = 1 anywhere requires
// an alpha1-valid graph.
SweepResult sweep(const Digraph& g, double alpha_ref, std::span<const double> grid);

struct SearchRecord {
  Digraph graph;
  std::uint64_t mask = 0;  // row-major adjacency bits (u*n + v); 0 when order > 8
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double d2 = 0.0;
};

// Best 2-norm discrepancy over all grid pairs alpha1 < alpha2, followed by
// refine_rounds of step-halving around the incumbent. alpha = 1 is skipped
// on graphs where the pure walk has no limit. Deterministic: the grid is
// sorted internally and ties prefer the lexicographically smaller pair.
SearchRecord max_pair(const Digraph& g, std::span<const double> grid, int refine_rounds);

struct LimitRow {
  int k = 0;
  double pi_a = 0.0;     // rank of A at alpha = 1 - 1/k
  double pi_c = 0.0;     // rank of the distinguished C vertex
  double norm_sq = 0.0;  // squared 2-norm of the alpha = 1 - 1/k vector
  double d1 = 0.0;
  double d2 = 0.0;
  double dinf = 0.0;
};

// One row per k: the m-C ladder solved at alpha = 1 and alpha = 1 - 1/k.
std::vector<LimitRow> limit_table(std::span<const int> k_values, int m);

// Exhaustive sweep over every adjacency matrix on n vertices, ranked by the
// best pair found per graph. n = 5 costs 2^25 graphs and sits behind
// allow_large; larger n is rejected outright.
std::vector<SearchRecord> brute_search(int n, std::span<const double> grid, int top,
                                       bool allow_large = false);

// {0, 0.05, ..., 0.95} plus the boundary layer {1 - 10^-j : j = 1..6} and 1.
std::vector<double> default_grid();

std::string to_csv(const SweepResult& result);
std::string to_csv(std::span<const LimitRow> rows);
std::string search_to_csv(std::span<const SearchRecord> records, int n);

}  // namespace prx
