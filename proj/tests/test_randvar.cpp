#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lpspace/randvar.hpp"

using namespace lpspace;

TEST_CASE("three-valued variable with p = 4, w = 1/2") {
  const ThreeValuedRV rv = make_three_valued(4.0, 0.5);
  CHECK(rv.mu == doctest::Approx(1.0 / 16.0));
  CHECK(rv.alpha == doctest::Approx(2.0));
  CHECK(lp_norm(rv.fn, 4.0) == doctest::Approx(1.0));
  CHECK(lp_norm(rv.fn, 2.0) == doctest::Approx(0.5));
  CHECK(rv.fn.integrate() == doctest::Approx(0.0));
  // w = 1 degenerates to a Rademacher variable
  const ThreeValuedRV coin = make_three_valued(4.0, 1.0);
  CHECK(coin.fn.values().size() == 2);
  CHECK(lp_norm(coin.fn, 4.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(make_three_valued(2.0, 0.5), DomainError);
  CHECK_THROWS_AS(make_three_valued(4.0, 1.5), DomainError);
}

TEST_CASE("Khintchine fourth moment is exact") {
  // E|sum r_i|^4 = 3 (sum a^2)^2 - 2 sum a^4; for N = 4, a = 1 this is 40.
  const KhintchineReport r = khintchine_check({1.0, 1.0, 1.0, 1.0}, 4.0);
  CHECK(std::pow(r.norm, 4.0) == doctest::Approx(40.0).epsilon(1e-14));
  CHECK(r.l2 == doctest::Approx(2.0));
  const KhintchineReport r2 = khintchine_check({1.0, 1.0}, 4.0);
  CHECK(std::pow(r2.norm, 4.0) == doctest::Approx(8.0).epsilon(1e-14));
  // p = 2 is an equality
  const KhintchineReport r3 = khintchine_check({0.3, -1.2, 0.7}, 2.0);
  CHECK(r3.ratio == doctest::Approx(1.0).epsilon(1e-14));
  // lower bound for p > 2, upper for p < 2
  CHECK(khintchine_check({1.0, 2.0, 3.0}, 3.0).ratio >= 1.0 - 1e-14);
  CHECK(khintchine_check({1.0, 2.0, 3.0}, 1.0).ratio <= 1.0 + 1e-14);
}

TEST_CASE("exact norm of a Rademacher sum matches enumeration") {
  const RVFamily fam = rademacher_family(4);
  const std::vector<double> c{1.0, 1.0, 1.0, 1.0};
  CHECK(std::pow(exact_pnorm_of_sum(fam, c, 4.0), 4.0) == doctest::Approx(40.0).epsilon(1e-13));
  CHECK(exact_pnorm_of_sum(fam, c, 2.0) == doctest::Approx(2.0));
}

TEST_CASE("Rosenthal lower bound with constant one") {
  const RVFamily fam = rademacher_family(2);
  const RosenthalReport rep = rosenthal_check(fam, {1.0, 1.0}, 4.0);
  // lp sum = 2^{1/4}, l2 sum = sqrt(2): lower = sqrt(2)
  CHECK(rep.lower == doctest::Approx(std::sqrt(2.0)));
  CHECK(rep.sum_norm == doctest::Approx(std::pow(8.0, 0.25)));
  CHECK(rep.ratio >= 1.0 - 1e-12);

  const RVFamily tv = three_valued_family(4.0, {0.5, 0.25, 0.75});
  const RosenthalReport rep2 = rosenthal_check(tv, {1.0, -2.0, 0.5}, 4.0);
  CHECK(rep2.ratio >= 1.0 - 1e-12);
  CHECK_THROWS_AS(rosenthal_check(fam, {1.0, 1.0}, 2.0), DomainError);
}

TEST_CASE("q-triangle bound for q below 2") {
  const RVFamily fam = three_valued_family(3.0, {0.5, 0.8});
  const auto [lhs, rhs] = qtriangle_check(fam, {1.0, 1.0}, 1.5);
  CHECK(lhs <= rhs + 1e-12);
  CHECK_THROWS_AS(qtriangle_check(fam, {1.0, 1.0}, 2.0), DomainError);
}

TEST_CASE("Monte Carlo estimate is deterministic and agrees with exact") {
  const RVFamily fam = rademacher_family(6);
  const std::vector<double> c{1.0, 0.5, -0.25, 2.0, 1.0, -1.0};
  const McEstimate a = mc_pnorm_of_sum(fam, c, 4.0, 20000, 42);
  const McEstimate b = mc_pnorm_of_sum(fam, c, 4.0, 20000, 42);
  CHECK(a.estimate == b.estimate);
  const double exact = exact_pnorm_of_sum(fam, c, 4.0);
  CHECK(std::fabs(a.estimate - exact) / exact < 0.05);
  CHECK_THROWS_AS(mc_pnorm_of_sum(fam, c, 4.0, 0, 1), DomainError);
}

TEST_CASE("vector-valued second moment is exact at p = 2") {
  const std::vector<std::vector<double>> a{{1.0, 2.0}, {0.5, -1.5}, {0.0, 3.0}};
  const auto [lhs2, rhs2] = kahane_vector_check(a, 2.0);
  CHECK(lhs2 == doctest::Approx(rhs2).epsilon(1e-14));
  const auto [lhs4, rhs4] = kahane_vector_check(a, 4.0);
  CHECK(lhs4 >= rhs4 - 1e-12);
  CHECK_THROWS_AS(kahane_vector_check({}, 2.0), DomainError);
  CHECK_THROWS_AS(kahane_vector_check({{1.0}, {1.0, 2.0}}, 2.0), DomainError);
}

TEST_CASE("stable sampler determinism and Gaussian endpoint") {
  const std::vector<double> x = sample_stable(2.0, 50000, 7);
  const std::vector<double> y = sample_stable(2.0, 50000, 7);
  CHECK(x == y);
  double mean = 0.0, m2 = 0.0;
  for (double v : x) mean += v;
  mean /= double(x.size());
  for (double v : x) m2 += (v - mean) * (v - mean);
  m2 /= double(x.size());
  CHECK(std::fabs(mean) < 0.05);
  CHECK(m2 == doctest::Approx(2.0).epsilon(0.05));
  CHECK_THROWS_AS(sample_stable(1.0, 10, 0), DomainError);
  CHECK_THROWS_AS(sample_stable(2.5, 10, 0), DomainError);
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(rademacher_family(21), SizeCapError);
  CHECK_THROWS_AS(three_valued_family(4.0, std::vector<double>(13, 0.5)), SizeCapError);
  CHECK_THROWS_AS(khintchine_check(std::vector<double>(21, 1.0), 4.0), SizeCapError);
}
