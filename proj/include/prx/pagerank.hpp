#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prx/digraph.hpp"

namespace prx {

// Column-stochastic walk operator: column j is the step distribution out of
// vertex j, alpha/deg on out-neighbors plus (1-alpha)/n everywhere. Dangling
// columns are uniformly 1/n regardless of alpha.
class TransitionMatrix {
 public:
  TransitionMatrix(const Digraph& g, double alpha);

  int order() const { return n_; }
  double alpha() const { return alpha_; }
  double entry(int i, int j) const { return entries_[static_cast<size_t>(j) * n_ + i]; }
  std::span<const double> column(int j) const {
    return {entries_.data() + static_cast<size_t>(j) * n_, static_cast<size_t>(n_)};
  }
  std::span<const double> entries() const { return entries_; }  // column-major

 private:
  int n_;
  double alpha_;
  std::vector<double> entries_;  // column-major
};

TransitionMatrix build_transition(const Digraph& g, double alpha);

enum class Method { exact, power, alpha1, walk };
std::string_view method_name(Method m);

struct PagerankVector {
  std::vector<double> values;
  double alpha = 0.0;
  Method method = Method::exact;
  bool converged = true;  // power iteration only
  long iterations = 0;    // power iteration only
};

// "Rate in" minus "rate out" at v; zero at the stationary distribution.
double delta_pi(const TransitionMatrix& R, std::span<const double> pi, int v);
double max_delta_pi(const TransitionMatrix& R, std::span<const double> pi);

// Direct solve of the stationarity system with the normalization row spliced
// in; reliable arbitrarily close to alpha = 1. alpha = 1 itself is routed to
// solve_alpha1.
PagerankVector solve_exact(const Digraph& g, double alpha);

PagerankVector solve_power(const Digraph& g, double alpha, double tol = 1e-12,
                           long max_iter = 1000000);

// Pure-walk limit: all mass sits on the unique sink component.
PagerankVector solve_alpha1(const Digraph& g);

// Empirical visit frequencies of a seeded random walk; the start vertex
// counts as the first of `steps` recorded positions.
PagerankVector simulate_walk(const Digraph& g, double alpha, std::int64_t steps,
                             std::uint64_t seed);

std::string to_csv(const PagerankVector& pi);

}  // namespace prx
