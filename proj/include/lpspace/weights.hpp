#ifndef LPSPACE_WEIGHTS_HPP
#define LPSPACE_WEIGHTS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lpspace/core.hpp"

namespace lpspace {

enum class TailKind { none, constant, power_law, block_harmonic };

struct Tail {
  TailKind kind = TailKind::none;
  double exponent = 0.0;  // only meaningful for power_law: w_n ~ n^exponent
};

/// Finite prefix of a positive weight sequence with exponent parameter p > 2,
/// optionally tagged with the analytic form of its tail.
class WeightSequence {
 public:
  WeightSequence(double p, std::vector<double> weights, Tail tail = {})
      : p_(p), weights_(std::move(weights)), tail_(tail) {
    if (!(p_ > 2.0)) throw DomainError("WeightSequence: requires p > 2");
    if (weights_.empty()) throw DomainError("WeightSequence: empty weight array");
    for (double w : weights_) {
      if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("WeightSequence: weights must be positive");
    }
  }

  double p() const { return p_; }
  /// Derived exponent s = 2p/(p-2), always > 2.
  double s() const { return 2.0 * p_ / (p_ - 2.0); }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t n) const { return weights_[n]; }
  const Tail& tail() const { return tail_; }

  double weight_pow_s(std::size_t n) const { return std::pow(weights_[n], s()); }

 private:
  double p_;
  std::vector<double> weights_;
  Tail tail_;
};

enum class WeightCase { a, b, c, star, undetermined };

inline std::string to_string(WeightCase c) {
  switch (c) {
    case WeightCase::a: return "a";
    case WeightCase::b: return "b";
    case WeightCase::c: return "c";
    case WeightCase::star: return "star";
    default: return "undetermined (finite prefix)";
  }
}

struct EpsilonDiagnostic {
  double epsilon;
  double partial_sum;  // sum of w_n^s over prefix indices with w_n < epsilon
  std::size_t count;   // how many prefix indices fall below epsilon
};

struct ClassificationReport {
  WeightCase decided;
  double inf_prefix;
  std::vector<EpsilonDiagnostic> diagnostics;
};

/// Asymptotic classification of the weight sequence. Exact only when a tail
/// tag is present; the four cases are not decidable from a finite prefix, so
/// an untagged sequence yields "undetermined" plus the epsilon diagnostics.
inline ClassificationReport classify_weights(const WeightSequence& w,
                                             const std::vector<double>& epsilon_grid) {
  if (epsilon_grid.empty()) throw DomainError("classify_weights: empty epsilon grid");
  ClassificationReport rep;
  rep.inf_prefix = *std::min_element(w.weights().begin(), w.weights().end());
  for (double eps : epsilon_grid) {
    if (!(eps > 0.0)) throw DomainError("classify_weights: epsilon must be positive");
    EpsilonDiagnostic d{eps, 0.0, 0};
    for (std::size_t n = 0; n < w.size(); ++n) {
      if (w[n] < eps) {
        d.partial_sum += w.weight_pow_s(n);
        ++d.count;
      }
    }
    rep.diagnostics.push_back(d);
  }
  switch (w.tail().kind) {
    case TailKind::none:
      rep.decided = WeightCase::undetermined;
      break;
    case TailKind::constant:
      // inf w_n > 0.
      rep.decided = WeightCase::a;
      break;
    case TailKind::block_harmonic:
      // Interleaving of a bounded-below subsequence with a summable-s one.
      rep.decided = WeightCase::c;
      break;
    case TailKind::power_law: {
      const double e = w.tail().exponent;
      if (e >= 0.0) {
        rep.decided = WeightCase::a;  // weights bounded below along the tail
      } else if (e * w.s() < -1.0) {
        rep.decided = WeightCase::b;  // sum of w_n^s converges
      } else {
        rep.decided = WeightCase::star;  // divergent small-weight tail: condition (*)
      }
      break;
    }
  }
  return rep;
}

/// Standard length-M witness for each classification case.
inline WeightSequence canonical_weights(double p, WeightCase which, std::size_t M) {
  if (M == 0) throw DomainError("canonical_weights: M >= 1 required");
  const double s = 2.0 * p / (p - 2.0);
  std::vector<double> w(M);
  switch (which) {
    case WeightCase::a:
      std::fill(w.begin(), w.end(), 1.0);
      return WeightSequence(p, std::move(w), Tail{TailKind::constant, 0.0});
    case WeightCase::b:
      // w_n^s = n^{-2}
      for (std::size_t n = 0; n < M; ++n) w[n] = std::pow(double(n + 1), -2.0 / s);
      return WeightSequence(p, std::move(w), Tail{TailKind::power_law, -2.0 / s});
    case WeightCase::star:
      // w_n^s = 1/n
      for (std::size_t n = 0; n < M; ++n) w[n] = std::pow(double(n + 1), -1.0 / s);
      return WeightSequence(p, std::move(w), Tail{TailKind::power_law, -1.0 / s});
    case WeightCase::c:
      // odd positions from case (a), even positions from case (b)
      for (std::size_t n = 0; n < M; ++n) {
        if (n % 2 == 0) {
          w[n] = 1.0;
        } else {
          const double k = double(n / 2 + 1);
          w[n] = std::pow(k, -2.0 / s);
        }
      }
      return WeightSequence(p, std::move(w), Tail{TailKind::block_harmonic, 0.0});
    default:
      throw DomainError("canonical_weights: invalid case tag");
  }
}

}  // namespace lpspace

#endif  // LPSPACE_WEIGHTS_HPP
