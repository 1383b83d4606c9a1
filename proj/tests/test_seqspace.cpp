#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lpspace/norms.hpp"
#include "lpspace/tensor.hpp"
#include "lpspace/weights.hpp"

using namespace lpspace;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("conjugate index") {
  CHECK(conjugate_index(4.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(conjugate_index(2.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(conjugate_index(1.0), DomainError);
  CHECK_THROWS_AS(conjugate_index(0.5), DomainError);
}

TEST_CASE("derived exponent s") {
  CHECK(WeightSequence(4.0, {1.0}).s() == doctest::Approx(4.0));
  CHECK(WeightSequence(3.0, {1.0}).s() == doctest::Approx(6.0));
  CHECK(WeightSequence(6.0, {1.0}).s() == doctest::Approx(3.0));
  CHECK_THROWS_AS(WeightSequence(2.0, {1.0}), DomainError);
  CHECK_THROWS_AS(WeightSequence(4.0, {1.0, -1.0}), DomainError);
  CHECK_THROWS_AS(WeightSequence(4.0, {}), DomainError);
}

TEST_CASE("xpw norm takes the larger branch") {
  WeightSequence w(4.0, {1.0, 1.0});
  const NormReport big = xpw_norm(w, CoefficientTensor::vector({1.0, 1.0}));
  CHECK(big.value == doctest::Approx(kSqrt2).epsilon(1e-15));
  CHECK(big.branch == "weighted_l2");
  CHECK(big.components.at("lp") == doctest::Approx(std::pow(2.0, 0.25)));

  const NormReport single = xpw_norm(w, CoefficientTensor::vector({1.0, 0.0}));
  CHECK(single.value == doctest::Approx(1.0));
  CHECK(single.branch == "lp");  // tie resolves to lp

  WeightSequence small(4.0, {0.5, 0.5});
  const NormReport lp_wins = xpw_norm(small, CoefficientTensor::vector({1.0, 1.0}));
  CHECK(lp_wins.branch == "lp");
  CHECK(lp_wins.value == doctest::Approx(std::pow(2.0, 0.25)));
}

TEST_CASE("xpw norm domain errors") {
  WeightSequence w(4.0, {1.0});
  CHECK_THROWS_AS(xpw_norm(w, CoefficientTensor::vector({1.0, 2.0})), DomainError);
  CHECK_THROWS_AS(xpw_norm(w, CoefficientTensor({1, 1}, {1.0})), DomainError);
}

TEST_CASE("weighted inner product") {
  WeightSequence w(4.0, {2.0, 3.0});
  CHECK(ell2w_inner(w, CoefficientTensor::vector({1.0, 1.0}),
                    CoefficientTensor::vector({1.0, 2.0})) == doctest::Approx(4.0 + 18.0));
}

TEST_CASE("classification follows the tail tag") {
  const std::vector<double> grid = {0.5, 0.1};
  for (double p : {2.5, 3.0, 4.0}) {
    CHECK(classify_weights(canonical_weights(p, WeightCase::a, 20), grid).decided ==
          WeightCase::a);
    CHECK(classify_weights(canonical_weights(p, WeightCase::b, 20), grid).decided ==
          WeightCase::b);
    CHECK(classify_weights(canonical_weights(p, WeightCase::star, 20), grid).decided ==
          WeightCase::star);
    CHECK(classify_weights(canonical_weights(p, WeightCase::c, 20), grid).decided ==
          WeightCase::c);
  }
  WeightSequence untagged(4.0, {1.0, 0.5, 0.25});
  CHECK(classify_weights(untagged, grid).decided == WeightCase::undetermined);
  CHECK_THROWS_AS(classify_weights(untagged, {}), DomainError);
  CHECK_THROWS_AS(classify_weights(untagged, {-1.0}), DomainError);
}

TEST_CASE("classification diagnostics count small weights") {
  WeightSequence w(4.0, {1.0, 0.4, 0.04});  // s = 4
  const ClassificationReport rep = classify_weights(w, {0.5, 0.1});
  CHECK(rep.inf_prefix == doctest::Approx(0.04));
  CHECK(rep.diagnostics[0].count == 2);
  CHECK(rep.diagnostics[0].partial_sum ==
        doctest::Approx(std::pow(0.4, 4.0) + std::pow(0.04, 4.0)));
  CHECK(rep.diagnostics[1].count == 1);
}

TEST_CASE("canonical star weights have divergent harmonic s-powers") {
  WeightSequence w = canonical_weights(4.0, WeightCase::star, 64);
  double acc = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) acc += w.weight_pow_s(n);
  // partial harmonic sum at 64 terms
  double harmonic = 0.0;
  for (int n = 1; n <= 64; ++n) harmonic += 1.0 / n;
  CHECK(acc == doctest::Approx(harmonic).epsilon(1e-12));
}

TEST_CASE("bp norm reduces to xpw on a single block") {
  const double p = 4.0;
  const NormReport rep = bp_norm(p, {{1, {3.0, -1.0}}});
  WeightSequence v(p, {1.0, 1.0});
  CHECK(rep.value ==
        doctest::Approx(xpw_norm(v, CoefficientTensor::vector({3.0, -1.0})).value));
}

TEST_CASE("bp norm adds p-th powers across blocks") {
  const double p = 4.0;
  // disjointly supported blocks with known branch values
  const NormReport one = bp_norm(p, {{1, {1.0, 0.0}}});
  const NormReport two = bp_norm(p, {{1, {1.0, 0.0}}, {1, {1.0, 0.0}}});
  CHECK(std::pow(two.value, p) == doctest::Approx(2.0 * std::pow(one.value, p)));
}

TEST_CASE("mixed sum norm on one block matches xpw") {
  WeightSequence v(4.0, {1.0, 1.0});
  const NormReport rep = mixed_p2w_norm(4.0, {v}, {{1.0, 1.0}});
  CHECK(rep.value == doctest::Approx(kSqrt2));
  CHECK(rep.branch == "weighted_l2");
}

TEST_CASE("tensor norm at rank 1 equals the sequence norm") {
  WeightSequence w(4.0, {1.0, 0.7, 0.3});
  const CoefficientTensor x = CoefficientTensor::vector({0.2, -1.1, 0.5});
  CHECK(tensor_norm(w, x).value == doctest::Approx(xpw_norm(w, x).value).epsilon(1e-14));
}

TEST_CASE("tensor norm rank 2 identity matrix") {
  WeightSequence w(4.0, {1.0, 1.0});
  const CoefficientTensor a({2, 2}, {1.0, 0.0, 0.0, 1.0});
  const NormReport rep = tensor_norm(w, a);
  // inner weighted-l2 over both axes gives 2, then the outer 1/p root
  CHECK(rep.value == doctest::Approx(kSqrt2).epsilon(1e-14));
  CHECK(rep.branch == "S={}");
  CHECK(rep.components.at("S={1,2}") == doctest::Approx(std::pow(2.0, 0.25)));
}

TEST_CASE("tensor norm rank cap") {
  WeightSequence w(4.0, {1.0});
  const CoefficientTensor tiny(std::vector<std::size_t>(13, 1), {1.0});
  CHECK_THROWS_AS(tensor_norm(w, tiny), SizeCapError);
}

TEST_CASE("coefficient tensor validation") {
  CHECK_THROWS_AS(CoefficientTensor({}, {}), DomainError);
  CHECK_THROWS_AS(CoefficientTensor({2}, {1.0}), DomainError);
  CHECK_THROWS_AS(CoefficientTensor({1}, {std::nan("")}), DomainError);
  const CoefficientTensor t({2, 3}, {0, 1, 2, 3, 4, 5});
  CHECK(t.offset({1, 2}) == 5);
}
