#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "prx/discrepancy.hpp"
#include "test_support.hpp"

using prx::Digraph;
using prxtest::error_code_of;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLimit2C = std::sqrt(67.0 / 50.0);

}  // namespace

TEST_CASE("norm_diff basics") {
  const std::vector<double> a{0.2, 0.3, 0.5};
  for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) CHECK(prx::norm_diff(a, a, p) == 0.0);

  // mass concentrated on one vertex vs uniform on the other three
  const std::vector<double> spike{1.0, 0.0, 0.0, 0.0};
  const std::vector<double> spread{0.0, 1.0 / 3, 1.0 / 3, 1.0 / 3};
  CHECK(prx::norm_diff(spike, spread, 2.0) ==
        doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-14));
  CHECK(prx::norm_diff(spike, spread, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(prx::norm_diff(spike, spread, kInf) == 1.0);

  CHECK(error_code_of([&] { prx::norm_diff(spike, a, 2.0); }) == prx::errc::invalid_argument);
  CHECK(error_code_of([&] { prx::norm_diff(spike, spread, 0.5); }) ==
        prx::errc::invalid_argument);
}

TEST_CASE("norm_diff matches a plain-summation oracle") {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(40), b(40);
    for (size_t i = 0; i < a.size(); ++i) {
      a[i] = unit(rng);
      b[i] = unit(rng);
    }
    double sq = 0.0, abs_sum = 0.0, cube = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      const double d = std::abs(a[i] - b[i]);
      sq += d * d;
      abs_sum += d;
      cube += d * d * d;
    }
    CHECK(prx::norm_diff(a, b, 2.0) == doctest::Approx(std::sqrt(sq)).epsilon(1e-13));
    CHECK(prx::norm_diff(a, b, 1.0) == doctest::Approx(abs_sum).epsilon(1e-13));
    CHECK(prx::norm_diff(a, b, 3.0) == doctest::Approx(std::cbrt(cube)).epsilon(1e-13));
  }
}

TEST_CASE("norm_diff obeys the triangle inequality") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(12), b(12), c(12);
    for (size_t i = 0; i < a.size(); ++i) {
      a[i] = unit(rng);
      b[i] = unit(rng);
      c[i] = unit(rng);
    }
    for (double p : {1.0, 2.0, kInf})
      CHECK(prx::norm_diff(a, c, p) <=
            prx::norm_diff(a, b, p) + prx::norm_diff(b, c, p) + 1e-12);
  }
}

TEST_CASE("stochastic-vector norm bounds hold for solved pairs") {
  std::mt19937_64 rng(8080);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph g = prxtest::random_digraph(rng);
    const prx::PagerankVector pi1 = prx::solve_exact(g, unit(rng));
    const prx::PagerankVector pi2 = prx::solve_exact(g, unit(rng));
    CHECK(prx::norm_diff(pi1, pi2, 2.0) <= std::sqrt(2.0) + 1e-12);
    CHECK(prx::norm_diff(pi1, pi2, kInf) <= 1.0 + 1e-12);
    CHECK(prx::norm_diff(pi1, pi2, 1.0) <= 2.0 + 1e-12);
  }
}

TEST_CASE("sweep: the reference alpha reads as an exact zero row") {
  const prx::GammaGraph gamma = prx::build_gamma(8);
  const std::vector<double> grid{0.0, 0.3, 0.85};
  const prx::SweepResult result = prx::sweep(gamma.graph, 0.3, grid);
  REQUIRE(result.samples.size() == 3);
  CHECK(result.samples[1].alpha == 0.3);
  CHECK(result.samples[1].d1 == 0.0);
  CHECK(result.samples[1].d2 == 0.0);
  CHECK(result.samples[1].dinf == 0.0);
  CHECK(result.samples[2].d2 > 0.0);
}

TEST_CASE("sweep against the pure walk shows the boundary-layer spike") {
  const prx::GammaGraph gamma = prx::build_gamma(100);
  const std::vector<double> grid{0.0, 0.5, 1.0 - 1.0 / 100, 1.0};
  const prx::SweepResult result = prx::sweep(gamma.graph, 1.0, grid);
  CHECK(result.samples[3].d2 == 0.0);  // exactly zero at alpha = 1
  CHECK(result.samples[2].d2 > 1.1);   // and large just below it
  CHECK(result.samples[2].d2 < kLimit2C);
  CHECK(result.samples[2].d1 > 1.9);
  CHECK(result.samples[2].dinf > 0.9);
}

TEST_CASE("sweep rejects alpha = 1 when the walk has no limit") {
  Digraph cycle(2);
  cycle.add_arc(0, 1);
  cycle.add_arc(1, 0);
  CHECK(error_code_of([&] {
    prx::sweep(cycle, 1.0, std::vector<double>{0.5});
  }) == prx::errc::alpha1_invalid);
  CHECK(error_code_of([&] {
    prx::sweep(cycle, 0.5, std::vector<double>{1.5});
  }) == prx::errc::invalid_argument);
}

TEST_CASE("max_pair on symmetric graphs finds nothing") {
  Digraph single(1);
  single.add_arc(0, 0);
  const std::vector<double> grid = prx::default_grid();
  CHECK(prx::max_pair(single, grid, 0).d2 == 0.0);

  Digraph pair(2);
  pair.add_arc(0, 1);
  pair.add_arc(1, 0);
  CHECK(prx::max_pair(pair, grid, 0).d2 <= 1e-14);
}

TEST_CASE("max_pair picks the boundary pair on a long ladder") {
  const prx::GammaGraph gamma = prx::build_gamma(100);
  const std::vector<double> grid{0.0, 0.5, 0.9, 1.0 - 1.0 / 100, 1.0};
  const prx::SearchRecord record = prx::max_pair(gamma.graph, grid, 0);
  CHECK(record.alpha1 == 1.0 - 1.0 / 100);
  CHECK(record.alpha2 == 1.0);
  CHECK(record.d2 > 1.1);
  CHECK(record.d2 < kLimit2C);

  // the record is self-contained: re-solving it reproduces d2
  const prx::PagerankVector pi1 = prx::solve_exact(record.graph, record.alpha1);
  const prx::PagerankVector pi2 = prx::solve_exact(record.graph, record.alpha2);
  CHECK(prx::norm_diff(pi1, pi2, 2.0) == record.d2);
}

TEST_CASE("max_pair is invariant under grid permutation") {
  const prx::GammaGraph gamma = prx::build_gamma(12);
  std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 0.9, 1.0 - 1.0 / 12, 1.0};
  const prx::SearchRecord base = prx::max_pair(gamma.graph, grid, 1);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(grid.begin(), grid.end(), rng);
    const prx::SearchRecord shuffled = prx::max_pair(gamma.graph, grid, 1);
    CHECK(shuffled.alpha1 == base.alpha1);
    CHECK(shuffled.alpha2 == base.alpha2);
    CHECK(shuffled.d2 == base.d2);
  }
}

TEST_CASE("max_pair refinement never loses ground and skips invalid alpha = 1") {
  const prx::GammaGraph gamma = prx::build_gamma(20);
  const std::vector<double> coarse{0.0, 0.6, 1.0};
  const prx::SearchRecord plain = prx::max_pair(gamma.graph, coarse, 0);
  const prx::SearchRecord refined = prx::max_pair(gamma.graph, coarse, 6);
  CHECK(refined.d2 >= plain.d2);

  Digraph cycle(2);  // alpha = 1 in the grid is skipped, not an error
  cycle.add_arc(0, 1);
  cycle.add_arc(1, 0);
  const prx::SearchRecord skipped = prx::max_pair(cycle, std::vector<double>{0.2, 0.8, 1.0}, 2);
  CHECK(skipped.d2 <= 1e-14);
  CHECK(skipped.alpha2 < 1.0);

  CHECK(error_code_of([&] { prx::max_pair(cycle, std::vector<double>{}, 0); }) ==
        prx::errc::invalid_argument);
}

TEST_CASE("limit_table rows behave like the asymptotic story") {
  const std::vector<int> ks{2, 10, 60};
  const std::vector<prx::LimitRow> rows = prx::limit_table(ks, 2);
  REQUIRE(rows.size() == 3);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].k == ks[i]);
    CHECK(rows[i].d2 < kLimit2C);
    CHECK(rows[i].d2 <= std::sqrt(2.0));
    CHECK(rows[i].dinf <= 1.0);
    CHECK(rows[i].norm_sq <= 1.0);
  }
  CHECK(rows[0].d2 < rows[1].d2);
  CHECK(rows[1].d2 < rows[2].d2);
  CHECK(rows[2].pi_a < prx::pi_a_upper_bound(60));

  CHECK(error_code_of([] { prx::limit_table(std::vector<int>{1}, 2); }) ==
        prx::errc::invalid_argument);
  CHECK(error_code_of([] { prx::limit_table(std::vector<int>{5}, 0); }) ==
        prx::errc::invalid_argument);
}

TEST_CASE("brute_search: one vertex never separates") {
  const std::vector<double> grid = prx::default_grid();
  const std::vector<prx::SearchRecord> records = prx::brute_search(1, grid, 5);
  REQUIRE(records.size() == 2);  // with and without the loop
  for (const auto& r : records) CHECK(r.d2 == 0.0);
}

TEST_CASE("brute_search guards") {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  CHECK(error_code_of([&] { prx::brute_search(0, grid, 3); }) == prx::errc::invalid_argument);
  CHECK(error_code_of([&] { prx::brute_search(6, grid, 3); }) == prx::errc::invalid_argument);
  CHECK(error_code_of([&] { prx::brute_search(5, grid, 3); }) == prx::errc::invalid_argument);
  CHECK(error_code_of([&] { prx::brute_search(2, grid, 0); }) == prx::errc::invalid_argument);
}

TEST_CASE("brute_search ranks records and stays below the ladder limit") {
  const std::vector<double> grid = prx::default_grid();
  const std::vector<prx::SearchRecord> records = prx::brute_search(2, grid, 8);
  REQUIRE(records.size() == 8);
  for (size_t i = 1; i < records.size(); ++i) CHECK(records[i - 1].d2 >= records[i].d2);
  CHECK(records[0].d2 > 0.0);
  CHECK(records[0].d2 < kLimit2C);

  // records are self-contained
  const prx::SearchRecord& best = records[0];
  const prx::PagerankVector pi1 = prx::solve_exact(best.graph, best.alpha1);
  const prx::PagerankVector pi2 = best.alpha2 == 1.0 ? prx::solve_alpha1(best.graph)
                                                     : prx::solve_exact(best.graph, best.alpha2);
  CHECK(prx::norm_diff(pi1, pi2, 2.0) == best.d2);
}

TEST_CASE("default grid covers the unit interval plus the boundary layer") {
  const std::vector<double> grid = prx::default_grid();
  CHECK(grid.size() == 26);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.0);
  CHECK(std::count_if(grid.begin(), grid.end(), [](double a) { return a > 0.99; }) >= 5);
}

TEST_CASE("CSV emission") {
  const prx::GammaGraph gamma = prx::build_gamma(4);
  const prx::SweepResult sw = prx::sweep(gamma.graph, 1.0, std::vector<double>{0.5, 1.0});
  const std::string sweep_csv = prx::to_csv(sw);
  CHECK(sweep_csv.rfind("alpha,d1,d2,dinf\n", 0) == 0);
  CHECK(std::count(sweep_csv.begin(), sweep_csv.end(), '\n') == 3);

  const std::vector<prx::LimitRow> rows = prx::limit_table(std::vector<int>{3}, 2);
  const std::string limit_csv = prx::to_csv(rows);
  CHECK(limit_csv.rfind("k,pi_A,pi_C,norm_sq,d1,d2,dinf\n", 0) == 0);
  CHECK(limit_csv.find("\n3,") != std::string::npos);

  Digraph pair(2);
  pair.add_arc(0, 1);
  pair.add_arc(1, 0);
  const prx::SearchRecord record = prx::max_pair(pair, std::vector<double>{0.0, 0.5}, 0);
  const std::string search_csv = prx::search_to_csv(std::vector<prx::SearchRecord>{record}, 2);
  CHECK(search_csv.rfind("rank,bitmask,alpha1,alpha2,d2\n", 0) == 0);
  CHECK(search_csv.find("1,0110,") != std::string::npos);
}
