#ifndef LPSPACE_RANDVAR_HPP
#define LPSPACE_RANDVAR_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "lpspace/core.hpp"
#include "lpspace/stepfn.hpp"

namespace lpspace {

inline constexpr std::size_t kThreeValuedCap = 12;  // 3^12 cells
inline constexpr std::size_t kRademacherCap = 20;   // 2^20 cells

/// Symmetric three-valued variable taking {+alpha, 0, -alpha} with mass
/// (mu/2, 1-mu, mu/2), realized as a step function on its own coordinate.
struct ThreeValuedRV {
  double alpha;
  double mu;
  StepFunction fn;
};

/// Normalized-in-Lp three-valued variable with ||f||_2 = w: mu = w^{2p/(p-2)},
/// alpha = mu^{-1/p}.
inline ThreeValuedRV make_three_valued(double p, double w, std::size_t coord = 0) {
  if (!(p > 2.0)) throw DomainError("make_three_valued: requires p > 2");
  if (!(w > 0.0 && w <= 1.0)) throw DomainError("make_three_valued: requires 0 < w <= 1");
  const double mu = std::pow(w, 2.0 * p / (p - 2.0));
  const double alpha = std::pow(mu, -1.0 / p);
  StepFunction fn =
      mu >= 1.0 - 1e-15
          ? StepFunction::on_coordinate(coord, Coordinate::interval({0.5, 0.5}), {alpha, -alpha})
          : StepFunction::on_coordinate(coord, Coordinate::interval({mu / 2, 1.0 - mu, mu / 2}),
                                        {alpha, 0.0, -alpha});
  return ThreeValuedRV{alpha, mu, std::move(fn)};
}

enum class FamilyKind { three_valued, rademacher, stable, custom };

/// Independent family: each member lives on its own coordinate of the
/// ambient product space.
struct RVFamily {
  std::vector<StepFunction> members;
  FamilyKind kind = FamilyKind::custom;

  std::size_t size() const { return members.size(); }
};

inline RVFamily rademacher_family(std::size_t N) {
  if (N > kRademacherCap) throw SizeCapError("rademacher_family: N exceeds cap of 20");
  RVFamily fam;
  fam.kind = FamilyKind::rademacher;
  for (std::size_t n = 0; n < N; ++n)
    fam.members.push_back(StepFunction::on_coordinate(n, Coordinate::two_point(), {1.0, -1.0}));
  return fam;
}

inline RVFamily three_valued_family(double p, const std::vector<double>& ws) {
  if (ws.size() > kThreeValuedCap) throw SizeCapError("three_valued_family: N exceeds cap of 12");
  RVFamily fam;
  fam.kind = FamilyKind::three_valued;
  for (std::size_t n = 0; n < ws.size(); ++n)
    fam.members.push_back(make_three_valued(p, ws[n], n).fn);
  return fam;
}

inline StepFunction family_sum(const RVFamily& family, const std::vector<double>& c) {
  if (c.size() != family.size()) throw DomainError("family_sum: coefficient count mismatch");
  StepFunction acc = StepFunction::constant(CoordinateSpace{}, 0.0);
  for (std::size_t n = 0; n < family.size(); ++n) acc = acc + c[n] * family.members[n];
  return acc;
}

/// Exact r-norm of sum c_n f_n by total cell enumeration.
inline double exact_pnorm_of_sum(const RVFamily& family, const std::vector<double>& c, double r) {
  std::size_t cells = 1;
  for (const StepFunction& f : family.members) {
    for (std::size_t s : f.support()) cells *= f.space().coords[s].cells();
    if (cells > kCellCap) throw SizeCapError("exact_pnorm_of_sum: cell cap exceeded");
  }
  return lp_norm(family_sum(family, c), r);
}

struct McEstimate {
  double estimate;  // r-norm estimate: (sample mean of |sum|^r)^{1/r}
  double stderr_moment;
  std::size_t trials;
  std::uint64_t seed;
};

/// Monte Carlo r-norm estimate for sizes beyond the exact cap. Deterministic
/// for a fixed seed; members are sampled coordinatewise by inverse CDF.
inline McEstimate mc_pnorm_of_sum(const RVFamily& family, const std::vector<double>& c, double r,
                                  std::size_t trials, std::uint64_t seed) {
  if (c.size() != family.size()) throw DomainError("mc_pnorm_of_sum: coefficient count mismatch");
  if (trials == 0) throw DomainError("mc_pnorm_of_sum: trials >= 1 required");
  Rng rng(seed);
  double sum_m = 0.0, sum_m2 = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    double total = 0.0;
    for (std::size_t n = 0; n < family.size(); ++n) {
      const StepFunction& f = family.members[n];
      const std::size_t coord = f.support().empty() ? 0 : f.support()[0];
      double v = 0.0;
      if (f.support().empty()) {
        v = f.values()[0];
      } else {
        const Coordinate& part = f.space().coords[coord];
        double u = rng.uniform();
        double cum = 0.0;
        for (std::size_t cell = 0; cell < part.cells(); ++cell) {
          cum += part.probs[cell];
          if (u < cum || cell + 1 == part.cells()) {
            v = f.values()[cell];
            break;
          }
        }
      }
      total += c[n] * v;
    }
    const double m = pow_abs(total, r);
    sum_m += m;
    sum_m2 += m * m;
  }
  const double mean = sum_m / double(trials);
  const double var = std::max(0.0, sum_m2 / double(trials) - mean * mean);
  return McEstimate{std::pow(mean, 1.0 / r), std::sqrt(var / double(trials)), trials, seed};
}

struct RosenthalReport {
  double lower;  // L = max(lp sum of p-norms, l2 sum of 2-norms)
  double sum_norm;
  double ratio;  // sum_norm / lower
};

/// Two-sided Rosenthal data for an independent symmetric family: the exact
/// lower bound with constant 1 is checkable; the upper ratio is recorded as
/// an empirical sample of K_p.
inline RosenthalReport rosenthal_check(const RVFamily& family, const std::vector<double>& c,
                                       double p) {
  if (!(p > 2.0)) throw DomainError("rosenthal_check: requires p > 2");
  if (c.size() != family.size()) throw DomainError("rosenthal_check: coefficient count mismatch");
  double acc_p = 0.0, acc_2 = 0.0;
  for (std::size_t n = 0; n < family.size(); ++n) {
    if (std::fabs(family.members[n].integrate()) > 1e-12)
      throw DomainError("rosenthal_check: member is not mean zero");
    const double np = lp_norm(c[n] * family.members[n], p);
    const double n2 = lp_norm(c[n] * family.members[n], 2.0);
    acc_p += std::pow(np, p);
    acc_2 += n2 * n2;
  }
  const double lower = std::max(std::pow(acc_p, 1.0 / p), std::sqrt(acc_2));
  const double s = exact_pnorm_of_sum(family, c, p);
  return RosenthalReport{lower, s, lower > 0.0 ? s / lower : 1.0};
}

/// q-triangle bound for symmetric independent members, constant 1:
/// returns (||sum||_q, (sum of ||.||_q^q)^{1/q}).
inline std::pair<double, double> qtriangle_check(const RVFamily& family, const std::vector<double>& c,
                                               double q) {
  if (!(q >= 1.0 && q < 2.0)) throw DomainError("qtriangle_check: requires q in [1,2)");
  double acc = 0.0;
  for (std::size_t n = 0; n < family.size(); ++n)
    acc += std::pow(lp_norm(c[n] * family.members[n], q), q);
  return {exact_pnorm_of_sum(family, c, q), std::pow(acc, 1.0 / q)};
}

struct KhintchineReport {
  double norm;
  double l2;
  double ratio;
};

/// Exact p-norm of a Rademacher sum by sign-pattern enumeration, reported
/// against ||a||_2. Independent of the step-function path.
inline KhintchineReport khintchine_check(const std::vector<double>& a, double p) {
  const std::size_t N = a.size();
  if (N > kRademacherCap) throw SizeCapError("khintchine_check: N exceeds cap of 20");
  double acc = 0.0;
  const std::size_t patterns = std::size_t(1) << N;
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) sum += (mask & (std::size_t(1) << i)) ? a[i] : -a[i];
    acc += pow_abs(sum, p);
  }
  const double norm = std::pow(acc / double(patterns), 1.0 / p);
  double l2 = 0.0;
  for (double ai : a) l2 += ai * ai;
  l2 = std::sqrt(l2);
  return KhintchineReport{norm, l2, l2 > 0.0 ? norm / l2 : 1.0};
}

/// Vector-valued Rademacher moment: lhs = E (sum_i |sum_j a_{ij} r_j|^2)^{p/2}
/// by exact sign enumeration; rhs = (sum_{ij} a_{ij}^2)^{p/2}.
inline std::pair<double, double> kahane_vector_check(const std::vector<std::vector<double>>& a,
                                                     double p) {
  if (a.empty()) throw DomainError("kahane_vector_check: empty matrix");
  const std::size_t J = a[0].size();
  if (J > kRademacherCap) throw SizeCapError("kahane_vector_check: sign count exceeds cap");
  double frob2 = 0.0;
  for (const auto& row : a) {
    if (row.size() != J) throw DomainError("kahane_vector_check: ragged matrix");
    for (double v : row) frob2 += v * v;
  }
  double acc = 0.0;
  const std::size_t patterns = std::size_t(1) << J;
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    double sq = 0.0;
    for (const auto& row : a) {
      double s = 0.0;
      for (std::size_t j = 0; j < J; ++j) s += (mask & (std::size_t(1) << j)) ? row[j] : -row[j];
      sq += s * s;
    }
    acc += std::pow(sq, p / 2.0);
  }
  return {acc / double(patterns), std::pow(frob2, p / 2.0)};
}

/// Symmetric T-stable sampler (characteristic function e^{-|x|^T}) via the
/// classical uniform-exponential transform. T = 2 degenerates to a centered
/// Gaussian of variance 2. Heavy-tail convergence for T < 2 is slow; this is
/// a best-effort sampler, not a verified estimator.
inline std::vector<double> sample_stable(double T, std::size_t trials, std::uint64_t seed) {
  if (!(T > 1.0 && T <= 2.0)) throw DomainError("sample_stable: requires 1 < T <= 2");
  Rng rng(seed);
  std::vector<double> out;
  out.reserve(trials);
  const double half_pi = 1.5707963267948966;
  for (std::size_t i = 0; i < trials; ++i) {
    const double theta = rng.uniform(-half_pi, half_pi);
    const double w = rng.exponential();
    if (T == 2.0) {
      // exact Gaussian limit of the transform
      out.push_back(2.0 * std::sqrt(w) * std::sin(theta));
      continue;
    }
    const double x = std::sin(T * theta) / std::pow(std::cos(theta), 1.0 / T) *
                     std::pow(std::cos((1.0 - T) * theta) / w, (1.0 - T) / T);
    out.push_back(x);
  }
  return out;
}

}  // namespace lpspace

#endif  // LPSPACE_RANDVAR_HPP
