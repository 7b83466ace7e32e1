#pragma once

#include <string>
#include <vector>

#include "prx/digraph.hpp"
#include "prx/pagerank.hpp"

namespace prx {

// Vertex roles of a ladder construction. Layout: C_1..C_m at indices
// 0..m-1, B_1..B_k next, A last. c.back() is the distinguished C vertex
// carrying the arc into B_1.
struct GammaLabels {
  int k = 0;
  int m = 0;
  int a = 0;
  std::vector<int> b;  // b[i-1] is B_i
  std::vector<int> c;  // c[i-1] is C_i
};

struct GammaGraph {
  Digraph graph;
  GammaLabels labels;
};

// The two-C ladder: C_1 <-> C_2 with loops, C_2 feeding a chain B_1..B_k
// whose vertices all point back at C_1 and C_2, ending in a looped sink A.
GammaGraph build_gamma(int k);

// Generalization with m mutually connected looped C vertices; only the last
// of them feeds the chain. build_gamma_general(k, 2) equals build_gamma(k).
GammaGraph build_gamma_general(int k, int m);

// Limiting rank of each C vertex as the ladder grows: m / (1 + m^2).
double predict_c_mass(double m);

// Closed-form limit of the 2-norm discrepancy of the m-C ladder between the
// pure walk and the walk at alpha = 1 - 1/k, as k grows.
double predict_discrepancy(double m);

struct ArgmaxResult {
  double m = 0.0;
  double value = 0.0;
};

// Golden-section maximum of predict_discrepancy over real m.
ArgmaxResult predict_argmax();

// Upper bound k/3^k + 3/(2(k+1)) on the rank of A at alpha = 1 - 1/k.
double pi_a_upper_bound(int k);

// Lower bound (1 - 1/k)^i * pi_c2 / 3^i on the rank of B_i at alpha = 1 - 1/k.
double bi_lower_bound(int k, int i, double pi_c2);

// Largest absolute residual of the B-chain balance equations
// pi_{B_i} = (1-alpha)/n + alpha * pi_{B_{i-1}} / (m+1), with B_0 read as the
// distinguished C vertex. Requires pi solved at alpha = 1 - 1/k, k >= 2.
double check_b_recurrence(const Digraph& g, const GammaLabels& labels, const PagerankVector& pi);

// "m,f_m,c_mass" rows over the real grid step, 2*step, ..., m_max.
std::string predict_table_csv(double m_max, double step);

}  // namespace prx
