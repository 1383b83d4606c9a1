#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lpspace/stepfn.hpp"

using namespace lpspace;

TEST_CASE("constants and single-coordinate functions integrate exactly") {
  CHECK(StepFunction::constant(CoordinateSpace{}, 3.5).integrate() == doctest::Approx(3.5));
  StepFunction f =
      StepFunction::on_coordinate(0, Coordinate::interval({0.25, 0.75}), {2.0, -1.0});
  CHECK(f.integrate() == doctest::Approx(0.25 * 2.0 - 0.75));
  CHECK(lp_norm(f, 2.0) == doctest::Approx(std::sqrt(0.25 * 4.0 + 0.75)));
}

TEST_CASE("coordinate validation") {
  CHECK_THROWS_AS(Coordinate::interval({0.5, 0.4}).validate(), DomainError);
  CHECK_THROWS_AS(Coordinate::interval({}).validate(), DomainError);
  CHECK_THROWS_AS(Coordinate::interval({1.5, -0.5}).validate(), DomainError);
  CHECK_NOTHROW(Coordinate::two_point().validate());
}

TEST_CASE("arithmetic refines mismatched partitions") {
  StepFunction f = StepFunction::on_coordinate(0, Coordinate::interval({0.5, 0.5}), {1.0, 3.0});
  StepFunction g =
      StepFunction::on_coordinate(0, Coordinate::interval({0.25, 0.75}), {10.0, 20.0});
  const StepFunction sum = f + g;
  CHECK(sum.values().size() == 3);  // breakpoints {0.25, 0.5} merge to 3 cells
  CHECK(sum.integrate() == doctest::Approx(f.integrate() + g.integrate()).epsilon(1e-15));
  const StepFunction prod = f * g;
  CHECK(prod.integrate() == doctest::Approx(0.25 * 10.0 + 0.25 * 20.0 + 0.5 * 3.0 * 20.0));
}

TEST_CASE("functions on different coordinates multiply independently") {
  StepFunction f = StepFunction::on_coordinate(0, Coordinate::two_point(), {1.0, -1.0});
  StepFunction g = StepFunction::on_coordinate(1, Coordinate::two_point(), {1.0, -1.0});
  CHECK(inner(f, g) == doctest::Approx(0.0));
  CHECK(integrate(f * f) == doctest::Approx(1.0));
}

TEST_CASE("conditional expectation onto coordinate subsets") {
  StepFunction r0 = StepFunction::on_coordinate(0, Coordinate::two_point(), {1.0, -1.0});
  StepFunction r1 = StepFunction::on_coordinate(1, Coordinate::two_point(), {1.0, -1.0});
  const StepFunction f = r0 + r0 * r1;   // support {0,1}
  const StepFunction e0 = cond_expect(f, {0});
  CHECK(max_abs_diff(e0, r0) == doctest::Approx(0.0));
  // averaging everything out gives the mean
  CHECK(max_abs_diff(cond_expect(f, {}), StepFunction::constant(CoordinateSpace{}, 0.0)) ==
        doctest::Approx(0.0));
  // idempotence and tower
  CHECK(max_abs_diff(cond_expect(e0, {0}), e0) == doctest::Approx(0.0));
  CHECK(max_abs_diff(cond_expect(cond_expect(f, {0, 1}), {0}), e0) == doctest::Approx(0.0));
}

TEST_CASE("squeeze norm identity on a concrete function") {
  const double p = 4.0;
  StepFunction one = StepFunction::on_coordinate(0, Coordinate::interval({1.0}), {1.0});
  const StepFunction t = squeeze(one, 0.25, p);
  CHECK(lp_norm(t, p) == doctest::Approx(1.0).epsilon(1e-15));       // r = p invariant
  CHECK(lp_norm(t, 1.0) == doctest::Approx(std::pow(0.25, 0.75)));   // k^{(p-1)/p}
  CHECK(lp_norm(t, 2.0) == doctest::Approx(std::pow(0.25, 0.25)));   // k^{(p-2)/(2p)}
  CHECK(squeeze(one, 1.0, p).values().size() == 1);
  CHECK_THROWS_AS(squeeze(one, 0.0, p), DomainError);
  CHECK_THROWS_AS(squeeze(one, 2.0, p), DomainError);
}

TEST_CASE("lift preserves the distribution") {
  StepFunction f =
      StepFunction::on_coordinate(0, Coordinate::interval({0.3, 0.7}), {2.0, -0.5});
  const StepFunction g = lift(f, 3);
  CHECK(g.support() == std::vector<std::size_t>{3});
  for (double r : {1.0, 2.0, 4.0}) CHECK(lp_norm(g, r) == doctest::Approx(lp_norm(f, r)));
}

TEST_CASE("disjoint sum adds p-th powers") {
  const double p = 3.0;
  StepFunction b0 =
      StepFunction::on_coordinate(0, Coordinate::interval({0.5, 0.5}), {1.0, -2.0});
  StepFunction b1 =
      StepFunction::on_coordinate(0, Coordinate::interval({0.5, 0.5}), {0.5, 3.0});
  const StepFunction s = disjoint_sum(b0, b1, p);
  CHECK(std::pow(lp_norm(s, p), p) ==
        doctest::Approx(std::pow(lp_norm(b0, p), p) + std::pow(lp_norm(b1, p), p))
            .epsilon(1e-14));
  // 1 (+) 1 = 2^{1/p} . 1
  StepFunction one = StepFunction::constant(CoordinateSpace{}, 1.0);
  const StepFunction oo = disjoint_sum(one, one, p);
  CHECK(max_abs_diff(oo, StepFunction::constant(oo.space(), std::pow(2.0, 1.0 / p))) ==
        doctest::Approx(0.0));
}

TEST_CASE("dyadic levels refine per the averaging identity") {
  const double p = 4.0;
  for (std::size_t k : {0, 1, 2}) {
    const std::vector<StepFunction> uk = dyadic_level(k, p);
    for (const StepFunction& u : uk) CHECK(lp_norm(u, p) == doctest::Approx(1.0));
    for (std::size_t d : {1, 2}) {
      const std::vector<StepFunction> ukd = dyadic_level(k + d, p);
      const double scale = std::pow(2.0, -double(d) / p);
      for (std::size_t t = 0; t < uk.size(); ++t) {
        StepFunction acc = StepFunction::constant(uk[t].space(), 0.0);
        for (std::size_t ss = 0; ss < (std::size_t(1) << d); ++ss)
          acc = acc + ukd[t * (std::size_t(1) << d) + ss];
        CHECK(max_abs_diff(uk[t], scale * acc) < 1e-12);
      }
    }
  }
}

TEST_CASE("haar ladder reconstructs and is orthogonal") {
  CoordinateSpace sp;
  sp.coords.assign(3, Coordinate::two_point());
  StepFunction f(sp, {0, 1, 2}, {1.0, 2.0, -0.5, 0.25, 3.0, -1.0, 0.75, 2.5});
  const std::vector<StepFunction> parts = haar_decompose(f);
  CHECK(parts.size() == 4);
  StepFunction sum = StepFunction::constant(sp, 0.0);
  for (const StepFunction& part : parts) sum = sum + part;
  CHECK(max_abs_diff(sum, f) < 1e-14);
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      CHECK(std::fabs(inner(parts[a], parts[b])) < 1e-14);
  // f_0 is the mean
  CHECK(max_abs_diff(parts[0], StepFunction::constant(sp, f.integrate())) < 1e-14);
}

TEST_CASE("s-projection onto an orthogonal designated family") {
  StepFunction one = StepFunction::constant(CoordinateSpace{}, 1.0);
  StepFunction r0 = StepFunction::on_coordinate(0, Coordinate::two_point(), {1.0, -1.0});
  StepFunction r1 = StepFunction::on_coordinate(1, Coordinate::two_point(), {1.0, -1.0});
  const StepFunction f = 2.0 * r0 + r1 + r0 * r1;
  const StepFunction proj = s_projection(f, {one, r0}, 0);
  CHECK(max_abs_diff(proj, 2.0 * r0) < 1e-14);
  CHECK_THROWS_AS(s_projection(f, {r0, 2.0 * r0 + 0.5 * one}, 0), DomainError);
  CHECK_THROWS_AS(s_projection(f, {}, 0), DomainError);
}

TEST_CASE("cell cap is enforced") {
  std::vector<double> probs(std::size_t(1) << 21, 1.0 / double(std::size_t(1) << 21));
  CHECK_THROWS_AS(StepFunction::on_coordinate(0, Coordinate::interval(probs),
                                              std::vector<double>(probs.size(), 1.0)),
                  SizeCapError);
}
