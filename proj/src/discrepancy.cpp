#include "prx/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <thread>

#include "detail.hpp"

namespace prx {

namespace {

std::vector<double> sorted_unit_grid(std::span<const double> grid) {
  if (grid.empty()) fail(errc::invalid_argument, "grid must not be empty");
  std::vector<double> sorted(grid.begin(), grid.end());
  for (double a : sorted)
    if (!(a >= 0.0 && a <= 1.0)) fail(errc::invalid_argument, "grid values must lie in [0, 1]");
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

struct PairChoice {
  double a1 = 0.0;
  double a2 = 0.0;
  double d2 = -1.0;
};

bool pair_better(const PairChoice& x, const PairChoice& y) {
  if (x.d2 != y.d2) return x.d2 > y.d2;
  if (x.a1 != y.a1) return x.a1 < y.a1;
  return x.a2 < y.a2;
}

// Best pair over a sorted alpha list; solves every alpha once. alpha = 1 is
// silently skipped when the pure walk has no limit on g.
PairChoice best_grid_pair(const Digraph& g, std::span<const double> alphas) {
  std::vector<std::vector<double>> solutions(alphas.size());
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] == 1.0 && !alpha1_valid(g)) continue;
    solutions[i] = solve_exact(g, alphas[i]).values;
  }
  PairChoice best;
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (solutions[i].empty()) continue;
    for (size_t j = i + 1; j < alphas.size(); ++j) {
      if (solutions[j].empty()) continue;
      const double d = norm_diff(solutions[i], solutions[j], 2.0);
      if (d > best.d2) best = {alphas[i], alphas[j], d};
    }
  }
  if (best.d2 < 0.0) best = {alphas.front(), alphas.front(), 0.0};
  return best;
}

std::uint64_t adjacency_mask(const Digraph& g) {
  const int n = g.order();
  if (n > 8) return 0;
  std::uint64_t mask = 0;
  for (int u = 0; u < n; ++u)
    for (int v : g.out_neighbors(u)) mask |= std::uint64_t{1} << (u * n + v);
  return mask;
}

Digraph graph_from_mask(int n, std::uint64_t mask) {
  Digraph g(n);
  for (int bit = 0; bit < n * n; ++bit)
    if (mask >> bit & 1) g.add_arc(bit / n, bit % n);
  return g;
}

}  // namespace

double norm_diff(std::span<const double> a, std::span<const double> b, double p) {
  if (a.size() != b.size()) fail(errc::invalid_argument, "vectors differ in length");
  if (!(p >= 1.0)) fail(errc::invalid_argument, "norm order p must be at least 1");
  if (std::isinf(p)) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
  }
  detail::KahanSum sum;
  if (p == 2.0) {
    for (size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      sum.add(d * d);
    }
    return std::sqrt(sum.sum);
  }
  if (p == 1.0) {
    for (size_t i = 0; i < a.size(); ++i) sum.add(std::abs(a[i] - b[i]));
    return sum.sum;
  }
  for (size_t i = 0; i < a.size(); ++i) sum.add(std::pow(std::abs(a[i] - b[i]), p));
  return std::pow(sum.sum, 1.0 / p);
}

double norm_diff(const PagerankVector& a, const PagerankVector& b, double p) {
  return norm_diff(std::span<const double>(a.values), std::span<const double>(b.values), p);
}

SweepResult sweep(const Digraph& g, double alpha_ref, std::span<const double> grid) {
  if (!(alpha_ref >= 0.0 && alpha_ref <= 1.0))
    fail(errc::invalid_argument, "alpha_ref must lie in [0, 1]");
  for (double a : grid)
    if (!(a >= 0.0 && a <= 1.0)) fail(errc::invalid_argument, "grid values must lie in [0, 1]");

  const PagerankVector reference = solve_exact(g, alpha_ref);
  SweepResult result;
  result.alpha_ref = alpha_ref;
  result.samples.reserve(grid.size());
  for (double a : grid) {
    const PagerankVector pi = solve_exact(g, a);
    result.samples.push_back({a, norm_diff(reference, pi, 1.0), norm_diff(reference, pi, 2.0),
                              norm_diff(reference, pi, std::numeric_limits<double>::infinity())});
  }
  return result;
}

SearchRecord max_pair(const Digraph& g, std::span<const double> grid, int refine_rounds) {
  if (refine_rounds < 0) fail(errc::invalid_argument, "refine_rounds must be nonnegative");
  const std::vector<double> sorted = sorted_unit_grid(grid);
  const bool valid1 = alpha1_valid(g);

  std::map<double, std::vector<double>> cache;
  const auto solution = [&](double alpha) -> const std::vector<double>* {
    if (alpha == 1.0 && !valid1) return nullptr;
    auto it = cache.find(alpha);
    if (it == cache.end()) it = cache.emplace(alpha, solve_exact(g, alpha).values).first;
    return &it->second;
  };

  PairChoice best;
  for (size_t i = 0; i < sorted.size(); ++i) {
    const auto* a = solution(sorted[i]);
    if (!a) continue;
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      const auto* b = solution(sorted[j]);
      if (!b) continue;
      const double d = norm_diff(*a, *b, 2.0);
      if (d > best.d2) best = {sorted[i], sorted[j], d};
    }
  }
  if (best.d2 < 0.0) best = {sorted.front(), sorted.front(), 0.0};

  if (best.d2 > 0.0 && refine_rounds > 0) {
    double gap = 0.0;
    for (size_t i = 1; i < sorted.size(); ++i) gap = std::max(gap, sorted[i] - sorted[i - 1]);
    double step = (gap > 0.0 ? gap : 0.5) / 2.0;
    for (int round = 0; round < refine_rounds; ++round, step /= 2.0) {
      PairChoice incumbent = best;
      for (int da = -1; da <= 1; ++da)
        for (int db = -1; db <= 1; ++db) {
          if (da == 0 && db == 0) continue;
          const double a1 = std::clamp(incumbent.a1 + da * step, 0.0, 1.0);
          const double a2 = std::clamp(incumbent.a2 + db * step, 0.0, 1.0);
          if (!(a1 < a2)) continue;
          const auto* a = solution(a1);
          const auto* b = solution(a2);
          if (!a || !b) continue;
          const PairChoice candidate{a1, a2, norm_diff(*a, *b, 2.0)};
          if (pair_better(candidate, best)) best = candidate;
        }
    }
  }

  return SearchRecord{g, adjacency_mask(g), best.a1, best.a2, best.d2};
}

std::vector<LimitRow> limit_table(std::span<const int> k_values, int m) {
  if (m < 1) fail(errc::invalid_argument, "C-vertex count m must be positive");
  std::vector<LimitRow> rows;
  rows.reserve(k_values.size());
  for (int k : k_values) {
    if (k < 2) fail(errc::invalid_argument, "limit rows need k >= 2 so alpha = 1 - 1/k is in (0, 1)");
    const GammaGraph gamma = build_gamma_general(k, m);
    const PagerankVector walk = solve_alpha1(gamma.graph);
    const PagerankVector near = solve_exact(gamma.graph, 1.0 - 1.0 / k);
    detail::KahanSum norm_sq;
    for (double v : near.values) norm_sq.add(v * v);
    rows.push_back({k, near.values[gamma.labels.a], near.values[gamma.labels.c.back()],
                    norm_sq.sum, norm_diff(walk, near, 1.0), norm_diff(walk, near, 2.0),
                    norm_diff(walk, near, std::numeric_limits<double>::infinity())});
  }
  return rows;
}

std::vector<SearchRecord> brute_search(int n, std::span<const double> grid, int top,
                                       bool allow_large) {
  if (n < 1) fail(errc::invalid_argument, "n must be positive");
  if (n > 5) fail(errc::invalid_argument, "exhaustive search supports at most 5 vertices");
  if (n == 5 && !allow_large)
    fail(errc::invalid_argument, "n = 5 enumerates 33554432 graphs; enable allow_large to run it");
  if (top < 1) fail(errc::invalid_argument, "top must be positive");
  const std::vector<double> sorted = sorted_unit_grid(grid);

  struct Candidate {
    std::uint64_t mask = 0;
    PairChoice pair;
  };
  const auto candidate_better = [](const Candidate& x, const Candidate& y) {
    if (x.pair.d2 != y.pair.d2) return x.pair.d2 > y.pair.d2;
    if (x.pair.a1 != y.pair.a1) return x.pair.a1 < y.pair.a1;
    if (x.pair.a2 != y.pair.a2) return x.pair.a2 < y.pair.a2;
    return x.mask < y.mask;
  };

  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const size_t keep = static_cast<size_t>(top);
  unsigned worker_count = std::max(1u, std::thread::hardware_concurrency());
  if (total < 4096) worker_count = 1;

  std::vector<std::vector<Candidate>> results(worker_count);
  std::vector<std::exception_ptr> errors(worker_count);
  const auto work = [&](unsigned w) {
    try {
      std::vector<Candidate>& best = results[w];
      const std::uint64_t begin = total * w / worker_count;
      const std::uint64_t end = total * (w + 1) / worker_count;
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        const Digraph g = graph_from_mask(n, mask);
        const Candidate candidate{mask, best_grid_pair(g, sorted)};
        if (best.size() == keep && !candidate_better(candidate, best.back())) continue;
        best.insert(std::upper_bound(best.begin(), best.end(), candidate, candidate_better),
                    candidate);
        if (best.size() > keep) best.pop_back();
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (worker_count == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<Candidate> merged;
  for (auto& part : results) merged.insert(merged.end(), part.begin(), part.end());
  std::sort(merged.begin(), merged.end(), candidate_better);
  if (merged.size() > keep) merged.resize(keep);

  std::vector<SearchRecord> records;
  records.reserve(merged.size());
  for (const Candidate& c : merged)
    records.push_back(
        {graph_from_mask(n, c.mask), c.mask, c.pair.a1, c.pair.a2, c.pair.d2});
  return records;
}

std::vector<double> default_grid() {
  std::vector<double> grid;
  for (int i = 0; i < 20; ++i) grid.push_back(i / 20.0);
  for (int j = 1; j <= 6; ++j) grid.push_back(1.0 - std::pow(10.0, -j));
  grid.push_back(1.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
             grid.end());
  return grid;
}

std::string to_csv(const SweepResult& result) {
  std::string out = "alpha,d1,d2,dinf\n";
  for (const SweepSample& s : result.samples) {
    out += detail::format_g17(s.alpha);
    out.push_back(',');
    out += detail::format_g17(s.d1);
    out.push_back(',');
    out += detail::format_g17(s.d2);
    out.push_back(',');
    out += detail::format_g17(s.dinf);
    out.push_back('\n');
  }
  return out;
}

std::string to_csv(std::span<const LimitRow> rows) {
  std::string out = "k,pi_A,pi_C,norm_sq,d1,d2,dinf\n";
  for (const LimitRow& r : rows) {
    out += std::to_string(r.k);
    for (double v : {r.pi_a, r.pi_c, r.norm_sq, r.d1, r.d2, r.dinf}) {
      out.push_back(',');
      out += detail::format_g17(v);
    }
    out.push_back('\n');
  }
  return out;
}

std::string search_to_csv(std::span<const SearchRecord> records, int n) {
  std::string out = "rank,bitmask,alpha1,alpha2,d2\n";
  for (size_t i = 0; i < records.size(); ++i) {
    out += std::to_string(i + 1);
    out.push_back(',');
    for (int bit = 0; bit < n * n; ++bit)
      out.push_back(records[i].mask >> bit & 1 ? '1' : '0');
    out.push_back(',');
    out += detail::format_g17(records[i].alpha1);
    out.push_back(',');
    out += detail::format_g17(records[i].alpha2);
    out.push_back(',');
    out += detail::format_g17(records[i].d2);
    out.push_back('\n');
  }
  return out;
}

}  // namespace prx
