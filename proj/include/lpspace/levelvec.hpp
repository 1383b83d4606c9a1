#ifndef LPSPACE_LEVELVEC_HPP
#define LPSPACE_LEVELVEC_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "lpspace/core.hpp"
#include "lpspace/norms.hpp"
#include "lpspace/optimizer.hpp"
#include "lpspace/stepfn.hpp"
#include "lpspace/tensor.hpp"
#include "lpspace/weights.hpp"

namespace lpspace {

/// Level-k vector over L^p step-function carriers: 2^k entries indexed by
/// the dyadic strings of length k (most significant bit first).
struct LevelVector {
  std::size_t level;
  double p;
  std::vector<StepFunction> entries;

  void validate() const {
    if (!(p >= 1.0)) throw DomainError("LevelVector: requires p >= 1");
    if (entries.size() != (std::size_t(1) << level))
      throw DomainError("LevelVector: entry count must be 2^level");
  }
};

/// Sequence-carrier variant: rank-1 coefficient tensors measured in the
/// X_{p,w} norm of a shared weight sequence.
struct SeqLevelVector {
  std::size_t level;
  WeightSequence weights;
  std::vector<CoefficientTensor> entries;

  void validate() const {
    if (entries.size() != (std::size_t(1) << level))
      throw DomainError("SeqLevelVector: entry count must be 2^level");
    for (const CoefficientTensor& t : entries)
      if (t.rank() != 1 || t.shape() != entries[0].shape())
        throw DomainError("SeqLevelVector: entries must be rank-1 of a common length");
  }
};

inline StepFunction level_combination(const LevelVector& u, const std::vector<double>& c) {
  u.validate();
  if (c.size() != u.entries.size()) throw DomainError("level_combination: coefficient mismatch");
  StepFunction acc = StepFunction::constant(u.entries[0].space(), 0.0);
  for (std::size_t t = 0; t < c.size(); ++t) acc = acc + c[t] * u.entries[t];
  return acc;
}

/// The refinement order on level vectors: |u| < |v| and
/// u(t) = 2^{-k/p} sum_{s in D_k} v(t.s) with k = |v| - |u|, each entry
/// identity holding within tol in the carrier norm.
inline bool level_prec(const LevelVector& u, const LevelVector& v, double tol = 1e-9) {
  u.validate();
  v.validate();
  if (u.p != v.p) throw DomainError("level_prec: carrier exponent mismatch");
  if (u.level >= v.level) return false;
  const std::size_t k = v.level - u.level;
  const std::size_t block = std::size_t(1) << k;
  const double scale = std::pow(2.0, -double(k) / u.p);
  for (std::size_t t = 0; t < u.entries.size(); ++t) {
    StepFunction acc = StepFunction::constant(v.entries[0].space(), 0.0);
    for (std::size_t s = 0; s < block; ++s) acc = acc + v.entries[t * block + s];
    if (lp_norm(u.entries[t] - scale * acc, u.p) > tol) return false;
  }
  return true;
}

inline bool level_prec(const SeqLevelVector& u, const SeqLevelVector& v, double tol = 1e-9) {
  u.validate();
  v.validate();
  const double p = u.weights.p();
  if (p != v.weights.p()) throw DomainError("level_prec: carrier exponent mismatch");
  if (u.level >= v.level) return false;
  const std::size_t k = v.level - u.level;
  const std::size_t block = std::size_t(1) << k;
  const double scale = std::pow(2.0, -double(k) / p);
  const std::size_t len = u.entries[0].size();
  for (std::size_t t = 0; t < u.entries.size(); ++t) {
    std::vector<double> diff(u.entries[t].values().begin(), u.entries[t].values().end());
    for (std::size_t s = 0; s < block; ++s) {
      const CoefficientTensor& e = v.entries[t * block + s];
      if (e.size() != len) throw DomainError("level_prec: carrier length mismatch");
      for (std::size_t i = 0; i < len; ++i) diff[i] -= scale * e.values()[i];
    }
    if (xpw_norm(u.weights, CoefficientTensor::vector(diff)).value > tol) return false;
  }
  return true;
}

struct DeltaMembership {
  bool is_member;
  double worst_lower;  // estimated min of ||sum c(t) u(t)|| / ||c||_p on the sphere
  double worst_upper;  // estimated max
};

namespace detail {

inline DeltaMembership delta_verdict(std::size_t dim,
                                     const std::function<double(const std::vector<double>&)>& nrm,
                                     double p, double delta, double tol,
                                     const AscentOptions& opts) {
  const RatioBounds rb = ratio_bounds_on_sphere(dim, nrm, p, opts);
  DeltaMembership out{false, rb.lower, rb.upper};
  out.is_member = rb.lower >= delta - tol && rb.upper <= 1.0 + tol;
  return out;
}

}  // namespace detail

/// Numerical delta-band verdict: multi-start estimate of the extreme ratios
/// ||sum c(t) u(t)|| / ||c||_p over the lp unit sphere. A verdict, not a
/// proof: the lower/upper estimates bound the true band from inside.
inline DeltaMembership delta_membership(const LevelVector& u, double delta, double tol = 1e-6,
                                        AscentOptions opts = {}) {
  u.validate();
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("delta_membership: delta in (0,1]");
  // Materialize all entries on a common grid once; the optimizer then only
  // touches a dense matrix.
  StepFunction base = StepFunction::constant(u.entries[0].space(), 0.0);
  for (const StepFunction& e : u.entries) base = base + 0.0 * e;
  std::vector<std::vector<double>> table;  // entry -> cell values on the grid
  std::vector<double> cellprob;
  for (const StepFunction& e : u.entries) {
    detail::AlignedPair ap = detail::align(base, e);
    table.push_back(std::move(ap.b));
    if (cellprob.empty()) {
      cellprob.assign(ap.a.size(), 1.0);
      std::vector<std::size_t> idx(ap.dims.size(), 0);
      for (std::size_t flat = 0; flat < cellprob.size(); ++flat) {
        for (std::size_t k = 0; k < ap.dims.size(); ++k)
          cellprob[flat] *= ap.space.coords[ap.support[k]].probs[idx[k]];
        for (std::size_t k = ap.dims.size(); k-- > 0;) {
          if (++idx[k] < ap.dims[k]) break;
          idx[k] = 0;
        }
      }
    }
  }
  const double p = u.p;
  auto nrm = [&](const std::vector<double>& c) {
    double acc = 0.0;
    for (std::size_t cell = 0; cell < cellprob.size(); ++cell) {
      double v = 0.0;
      for (std::size_t t = 0; t < table.size(); ++t) v += c[t] * table[t][cell];
      acc += pow_abs(v, p) * cellprob[cell];
    }
    return std::pow(acc, 1.0 / p);
  };
  return detail::delta_verdict(u.entries.size(), nrm, p, delta, tol, opts);
}

inline DeltaMembership delta_membership(const SeqLevelVector& u, double delta, double tol = 1e-6,
                                        AscentOptions opts = {}) {
  u.validate();
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("delta_membership: delta in (0,1]");
  const std::size_t len = u.entries[0].size();
  auto nrm = [&](const std::vector<double>& c) {
    std::vector<double> x(len, 0.0);
    for (std::size_t t = 0; t < u.entries.size(); ++t)
      for (std::size_t i = 0; i < len; ++i) x[i] += c[t] * u.entries[t].values()[i];
    return xpw_norm(u.weights, CoefficientTensor::vector(x)).value;
  };
  return detail::delta_verdict(u.entries.size(), nrm, u.weights.p(), delta, tol, opts);
}

struct DisjointLift {
  LevelVector tau;  // level |e|+1 over the doubled space
  LevelVector bar;  // level |e| over the doubled space
};

/// Lift into the p-sum of two copies: tau interleaves
/// (e(t) + 0, ..., 0 + e(t)) blockwise at level k+1 and
/// bar(t) = 2^{-1/p}(tau(t.0) + tau(t.1)) recovers a level-k vector with
/// bar level_prec tau.
inline DisjointLift disjoint_lift(const LevelVector& e, double p) {
  e.validate();
  if (e.p != p) throw DomainError("disjoint_lift: exponent mismatch");
  const std::size_t half = e.entries.size();
  DisjointLift out{LevelVector{e.level + 1, p, {}}, LevelVector{e.level, p, {}}};
  const StepFunction zero = StepFunction::constant(e.entries[0].space(), 0.0);
  for (std::size_t t = 0; t < half; ++t)
    out.tau.entries.push_back(disjoint_sum(e.entries[t], zero, p));
  for (std::size_t t = 0; t < half; ++t)
    out.tau.entries.push_back(disjoint_sum(zero, e.entries[t], p));
  const double scale = std::pow(2.0, -1.0 / p);
  for (std::size_t t = 0; t < half; ++t)
    out.bar.entries.push_back(scale * (out.tau.entries[2 * t] + out.tau.entries[2 * t + 1]));
  return out;
}

/// The canonical dyadic levels as level vectors; u_j level_prec u_k for j < k.
inline LevelVector dyadic_level_vector(std::size_t k, double p, std::size_t coord = 0) {
  return LevelVector{k, p, dyadic_level(k, p, coord)};
}

}  // namespace lpspace

#endif  // LPSPACE_LEVELVEC_HPP
