#include "prx/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "detail.hpp"

namespace prx {

namespace {

constexpr double kStationaryTol = 1e-9;

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail(errc::invalid_argument, "alpha must lie in [0, 1]");
}

// Dense LU with partial pivoting, column-major storage.
struct DenseLu {
  int n = 0;
  std::vector<double> a;
  std::vector<int> pivot;

  bool factor() {
    pivot.resize(n);
    for (int k = 0; k < n; ++k) {
      double* col = a.data() + static_cast<size_t>(k) * n;
      int piv = k;
      double best = std::abs(col[k]);
      for (int i = k + 1; i < n; ++i)
        if (std::abs(col[i]) > best) {
          best = std::abs(col[i]);
          piv = i;
        }
      if (best == 0.0) return false;
      pivot[k] = piv;
      if (piv != k)
        for (int j = 0; j < n; ++j)
          std::swap(a[static_cast<size_t>(j) * n + k], a[static_cast<size_t>(j) * n + piv]);
      const double inv = 1.0 / col[k];
      for (int i = k + 1; i < n; ++i) col[i] *= inv;
      for (int j = k + 1; j < n; ++j) {
        double* cj = a.data() + static_cast<size_t>(j) * n;
        const double m = cj[k];
        if (m != 0.0)
          for (int i = k + 1; i < n; ++i) cj[i] -= m * col[i];
      }
    }
    return true;
  }

  void solve(std::span<double> x) const {
    for (int k = 0; k < n; ++k)
      if (pivot[k] != k) std::swap(x[k], x[pivot[k]]);
    for (int k = 0; k < n; ++k) {
      const double xk = x[k];
      if (xk == 0.0) continue;
      const double* col = a.data() + static_cast<size_t>(k) * n;
      for (int i = k + 1; i < n; ++i) x[i] -= col[i] * xk;
    }
    for (int k = n - 1; k >= 0; --k) {
      const double* col = a.data() + static_cast<size_t>(k) * n;
      x[k] /= col[k];
      const double xk = x[k];
      if (xk == 0.0) continue;
      for (int i = 0; i < k; ++i) x[i] -= col[i] * xk;
    }
  }
};

double max_residual(int n, std::span<const double> m_colmajor, std::span<const double> x) {
  std::vector<double> y(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    const double* col = m_colmajor.data() + static_cast<size_t>(j) * n;
    for (int i = 0; i < n; ++i) y[i] += col[i] * xj;
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(y[i] - x[i]));
  return worst;
}

void clamp_and_normalize(std::vector<double>& x) {
  detail::KahanSum sum;
  for (double& v : x) {
    if (v < 0.0) {
      if (v < -1e-9) fail(errc::numeric, "solver produced a negative probability");
      v = 0.0;
    }
    sum.add(v);
  }
  if (sum.sum <= 0.0) fail(errc::numeric, "solver produced an all-zero vector");
  for (double& v : x) v /= sum.sum;
}

// Stationary vector of a column-stochastic matrix: solve (I - M) x = 0 with
// the last row of the system replaced by the normalization sum(x) = 1, then
// verify the stationarity residual, refining once if needed.
std::vector<double> stationary_of_columns(int n, std::span<const double> m_colmajor) {
  std::vector<double> system(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    const double* col = m_colmajor.data() + static_cast<size_t>(j) * n;
    double* out = system.data() + static_cast<size_t>(j) * n;
    for (int i = 0; i < n; ++i) out[i] = (i == j ? 1.0 : 0.0) - col[i];
    out[n - 1] = 1.0;
  }

  DenseLu lu{n, system, {}};
  if (!lu.factor()) fail(errc::numeric, "stationarity system is singular");

  std::vector<double> x(n, 0.0);
  x[n - 1] = 1.0;
  lu.solve(x);
  clamp_and_normalize(x);

  if (max_residual(n, m_colmajor, x) > kStationaryTol) {
    std::vector<double> r(n, 0.0);
    r[n - 1] = 1.0;
    for (int j = 0; j < n; ++j) {
      const double xj = x[j];
      const double* col = system.data() + static_cast<size_t>(j) * n;
      for (int i = 0; i < n; ++i) r[i] -= col[i] * xj;
    }
    lu.solve(r);
    for (int i = 0; i < n; ++i) x[i] += r[i];
    clamp_and_normalize(x);
    if (max_residual(n, m_colmajor, x) > kStationaryTol)
      fail(errc::numeric, "stationarity residual exceeds tolerance after refinement");
  }
  return x;
}

}  // namespace

TransitionMatrix::TransitionMatrix(const Digraph& g, double alpha)
    : n_(g.order()), alpha_(alpha) {
  check_alpha(alpha);
  entries_.resize(static_cast<size_t>(n_) * n_);
  for (int j = 0; j < n_; ++j) {
    double* col = entries_.data() + static_cast<size_t>(j) * n_;
    const int deg = g.out_degree(j);
    if (deg == 0) {
      std::fill(col, col + n_, 1.0 / n_);
      continue;
    }
    std::fill(col, col + n_, (1.0 - alpha) / n_);
    const double follow = alpha / deg;
    for (int v : g.out_neighbors(j)) col[v] += follow;
  }
}

TransitionMatrix build_transition(const Digraph& g, double alpha) {
  return TransitionMatrix(g, alpha);
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::power: return "power";
    case Method::alpha1: return "alpha1";
    case Method::walk: return "walk";
  }
  return "unknown";
}

double delta_pi(const TransitionMatrix& R, std::span<const double> pi, int v) {
  const int n = R.order();
  if (static_cast<int>(pi.size()) != n)
    fail(errc::invalid_argument, "vector length does not match the matrix");
  if (v < 0 || v >= n) fail(errc::out_of_range, "vertex out of range");
  double rate_in = 0.0;
  for (int u = 0; u < n; ++u) rate_in += R.entry(v, u) * pi[u];
  return rate_in - pi[v];
}

double max_delta_pi(const TransitionMatrix& R, std::span<const double> pi) {
  const int n = R.order();
  if (static_cast<int>(pi.size()) != n)
    fail(errc::invalid_argument, "vector length does not match the matrix");
  // One pass over the columns keeps this O(n^2) with unit-stride access.
  double worst = 0.0;
  std::vector<double> y(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const auto col = R.column(j);
    const double xj = pi[j];
    if (xj == 0.0) continue;
    for (int i = 0; i < n; ++i) y[i] += col[i] * xj;
  }
  for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(y[i] - pi[i]));
  return worst;
}

PagerankVector solve_exact(const Digraph& g, double alpha) {
  check_alpha(alpha);
  if (alpha == 1.0) return solve_alpha1(g);
  const TransitionMatrix R(g, alpha);
  PagerankVector result;
  result.values = stationary_of_columns(R.order(), R.entries());
  result.alpha = alpha;
  result.method = Method::exact;
  return result;
}

PagerankVector solve_power(const Digraph& g, double alpha, double tol, long max_iter) {
  check_alpha(alpha);
  if (alpha == 1.0) fail(errc::invalid_argument, "power iteration requires alpha < 1");
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tol must be positive");
  if (max_iter < 1) fail(errc::invalid_argument, "max_iter must be positive");

  const int n = g.order();
  std::vector<double> pi(n, 1.0 / n);
  std::vector<double> next(n);

  bool converged = false;
  long it = 0;
  while (it < max_iter) {
    ++it;
    double total = 0.0;
    double dangling = 0.0;
    for (int j = 0; j < n; ++j) {
      total += pi[j];
      if (g.out_degree(j) == 0) dangling += pi[j];
    }
    const double uniform = ((1.0 - alpha) * (total - dangling) + dangling) / n;
    std::fill(next.begin(), next.end(), uniform);
    for (int j = 0; j < n; ++j) {
      const int deg = g.out_degree(j);
      if (deg == 0) continue;
      const double w = alpha * pi[j] / deg;
      for (int v : g.out_neighbors(j)) next[v] += w;
    }
    double diff = 0.0;
    for (int i = 0; i < n; ++i) diff += std::abs(next[i] - pi[i]);
    pi.swap(next);
    if (diff < tol) {
      converged = true;
      break;
    }
  }

  double sum = 0.0;
  for (double v : pi) sum += v;
  for (double& v : pi) v /= sum;

  PagerankVector result;
  result.values = std::move(pi);
  result.alpha = alpha;
  result.method = Method::power;
  result.converged = converged;
  result.iterations = it;
  return result;
}

PagerankVector solve_alpha1(const Digraph& g) {
  if (!is_weakly_connected(g))
    fail(errc::alpha1_invalid, "alpha = 1 requires a weakly connected graph");
  const SccReport report = scc_report(g);
  int sink = -1;
  int sink_count = 0;
  for (size_t c = 0; c < report.components.size(); ++c)
    if (report.is_sink[c]) {
      ++sink_count;
      sink = static_cast<int>(c);
    }
  if (sink_count != 1)
    fail(errc::alpha1_invalid, "alpha = 1 requires exactly one sink component, found " +
                                   std::to_string(sink_count));
  if (!report.is_aperiodic[sink])
    fail(errc::alpha1_invalid, "alpha = 1 requires an aperiodic sink component");

  const auto& comp = report.components[sink];
  PagerankVector result;
  result.values.assign(g.order(), 0.0);
  result.alpha = 1.0;
  result.method = Method::alpha1;

  if (comp.size() == 1) {
    result.values[comp[0]] = 1.0;
    return result;
  }

  // Every out-arc of a sink-component vertex stays inside the component, so
  // the restricted pure-walk operator is column stochastic.
  const int s = static_cast<int>(comp.size());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < s; ++i) local[comp[i]] = i;
  std::vector<double> walk(static_cast<size_t>(s) * s, 0.0);
  for (int j = 0; j < s; ++j) {
    const double follow = 1.0 / g.out_degree(comp[j]);
    for (int v : g.out_neighbors(comp[j]))
      walk[static_cast<size_t>(j) * s + local[v]] += follow;
  }
  const std::vector<double> x = stationary_of_columns(s, walk);
  for (int i = 0; i < s; ++i) result.values[comp[i]] = x[i];
  return result;
}

PagerankVector simulate_walk(const Digraph& g, double alpha, std::int64_t steps,
                             std::uint64_t seed) {
  check_alpha(alpha);
  if (steps < 1) fail(errc::invalid_argument, "steps must be positive");

  std::mt19937_64 rng(seed);
  const auto draw_below = [&rng](std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
  };
  const auto draw_unit = [&rng] { return (rng() >> 11) * 0x1.0p-53; };

  const int n = g.order();
  std::vector<std::int64_t> visits(n, 0);
  int at = static_cast<int>(draw_below(n));
  for (std::int64_t t = 0; t < steps; ++t) {
    ++visits[at];
    const auto out = g.out_neighbors(at);
    if (out.empty() || draw_unit() >= alpha)
      at = static_cast<int>(draw_below(n));
    else
      at = out[draw_below(out.size())];
  }

  PagerankVector result;
  result.values.resize(n);
  for (int i = 0; i < n; ++i) result.values[i] = static_cast<double>(visits[i]) / steps;
  result.alpha = alpha;
  result.method = Method::walk;
  return result;
}

std::string to_csv(const PagerankVector& pi) {
  std::string out = "vertex,pi\n";
  for (size_t i = 0; i < pi.values.size(); ++i) {
    out += std::to_string(i);
    out.push_back(',');
    out += detail::format_g17(pi.values[i]);
    out.push_back('\n');
  }
  return out;
}

}  // namespace prx
