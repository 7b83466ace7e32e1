#include "prx/gamma.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"

namespace prx {

GammaGraph build_gamma_general(int k, int m) {
  if (k < 1) fail(errc::invalid_argument, "ladder length k must be positive");
  if (m < 1) fail(errc::invalid_argument, "C-vertex count m must be positive");

  const int n = k + m + 1;
  GammaGraph out{Digraph(n), GammaLabels{}};
  out.labels.k = k;
  out.labels.m = m;
  out.labels.a = m + k;
  for (int i = 0; i < m; ++i) out.labels.c.push_back(i);
  for (int i = 0; i < k; ++i) out.labels.b.push_back(m + i);

  Digraph& g = out.graph;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.add_arc(i, j);  // loops plus the full C clique
  g.add_arc(m - 1, m);                            // distinguished C feeds B_1
  for (int i = 0; i < k; ++i) {
    const int v = m + i;
    for (int j = 0; j < m; ++j) g.add_arc(v, j);
    g.add_arc(v, v + 1);  // B_k's forward arc lands on A at index m + k
  }
  g.add_arc(out.labels.a, out.labels.a);
  return out;
}

GammaGraph build_gamma(int k) { return build_gamma_general(k, 2); }

double predict_c_mass(double m) {
  if (!(m > 0.0)) fail(errc::invalid_argument, "m must be positive");
  return m / (1.0 + m * m);
}

double predict_discrepancy(double m) {
  if (!(m > 0.0)) fail(errc::invalid_argument, "m must be positive");
  const double num = m * (m * m * m + 2.0 * m * m + 1.0);
  const double den = (m + 2.0) * (m * m + 1.0) * (m * m + 1.0);
  return std::sqrt(1.0 + num / den);
}

ArgmaxResult predict_argmax() {
  // f rises from 1 at m -> 0, peaks below m = 2 and decays toward 1; a
  // bracket of [0.25, 8] comfortably contains the single interior maximum.
  double lo = 0.25, hi = 8.0;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = predict_discrepancy(x1);
  double f2 = predict_discrepancy(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = predict_discrepancy(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = predict_discrepancy(x1);
    }
  }
  const double m = 0.5 * (lo + hi);
  return {m, predict_discrepancy(m)};
}

double pi_a_upper_bound(int k) {
  if (k < 1) fail(errc::invalid_argument, "k must be positive");
  return k / std::pow(3.0, k) + 3.0 / (2.0 * (k + 1));
}

double bi_lower_bound(int k, int i, double pi_c2) {
  if (k < 1) fail(errc::invalid_argument, "k must be positive");
  if (i < 1 || i > k) fail(errc::invalid_argument, "index i must lie in [1, k]");
  if (pi_c2 < 0.0) fail(errc::invalid_argument, "pi_c2 must be nonnegative");
  const double alpha = 1.0 - 1.0 / k;
  return std::pow(alpha / 3.0, i) * pi_c2;
}

double check_b_recurrence(const Digraph& g, const GammaLabels& labels, const PagerankVector& pi) {
  const int n = g.order();
  if (labels.k < 1 || labels.m < 1 || static_cast<int>(labels.b.size()) != labels.k ||
      static_cast<int>(labels.c.size()) != labels.m || labels.k + labels.m + 1 != n)
    fail(errc::invalid_argument, "labels do not match the graph");
  if (static_cast<int>(pi.values.size()) != n)
    fail(errc::invalid_argument, "vector length does not match the graph");
  if (labels.k < 2)
    fail(errc::invalid_argument, "balance equations need k >= 2 so alpha = 1 - 1/k is in (0, 1)");
  const double alpha = 1.0 - 1.0 / labels.k;
  if (std::abs(pi.alpha - alpha) > 1e-12)
    fail(errc::invalid_argument, "vector was not solved at alpha = 1 - 1/k");

  const double teleport = (1.0 - alpha) / n;
  const double follow = alpha / (labels.m + 1);
  double prev = pi.values[labels.c.back()];
  double worst = 0.0;
  for (int i = 0; i < labels.k; ++i) {
    const double expected = teleport + follow * prev;
    worst = std::max(worst, std::abs(pi.values[labels.b[i]] - expected));
    prev = pi.values[labels.b[i]];
  }
  return worst;
}

std::string predict_table_csv(double m_max, double step) {
  if (!(m_max >= 1.0)) fail(errc::invalid_argument, "m_max must be at least 1");
  if (!(step > 0.0)) fail(errc::invalid_argument, "step must be positive");
  std::string out = "m,f_m,c_mass\n";
  for (int i = 1;; ++i) {
    const double m = i * step;
    if (m > m_max + 1e-12) break;
    out += detail::format_g17(m);
    out.push_back(',');
    out += detail::format_g17(predict_discrepancy(m));
    out.push_back(',');
    out += detail::format_g17(predict_c_mass(m));
    out.push_back('\n');
  }
  return out;
}

}  // namespace prx
