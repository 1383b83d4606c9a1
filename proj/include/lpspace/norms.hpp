#ifndef LPSPACE_NORMS_HPP
#define LPSPACE_NORMS_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lpspace/core.hpp"
#include "lpspace/tensor.hpp"
#include "lpspace/weights.hpp"

namespace lpspace {

inline constexpr std::size_t kTensorRankCap = 12;

/// Value of a max-of-norms formula together with the branch that attained it.
struct NormReport {
  double value = 0.0;
  std::string branch;
  std::map<std::string, double> components;
};

inline double lp_norm(const std::vector<double>& x, double p) {
  double acc = 0.0;
  for (double v : x) acc += pow_abs(v, p);
  return std::pow(acc, 1.0 / p);
}

inline double weighted_l2_norm(const std::vector<double>& w, const std::vector<double>& x) {
  double acc = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) acc += (w[n] * x[n]) * (w[n] * x[n]);
  return std::sqrt(acc);
}

/// max( lp norm, w-weighted l2 norm ) of a rank-1 tensor.
inline NormReport xpw_norm(const WeightSequence& w, const CoefficientTensor& x) {
  if (x.rank() != 1) throw DomainError("xpw_norm: rank-1 tensor required");
  if (x.size() > w.size()) throw DomainError("xpw_norm: coefficient length exceeds weight length");
  const std::vector<double>& xs = x.values();
  const double lp = lp_norm(xs, w.p());
  const double wl2 = weighted_l2_norm(w.weights(), xs);
  NormReport rep;
  rep.components["lp"] = lp;
  rep.components["weighted_l2"] = wl2;
  if (lp >= wl2) {
    rep.value = lp;
    rep.branch = "lp";
  } else {
    rep.value = wl2;
    rep.branch = "weighted_l2";
  }
  return rep;
}

/// Inner product in the weighted Hilbert space: sum x_n y_n w_n^2.
inline double ell2w_inner(const WeightSequence& w, const CoefficientTensor& x,
                          const CoefficientTensor& y) {
  if (x.rank() != 1 || y.rank() != 1 || x.size() != y.size())
    throw DomainError("ell2w_inner: rank-1 tensors of equal length required");
  if (x.size() > w.size()) throw DomainError("ell2w_inner: length exceeds weight length");
  double acc = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) acc += x[n] * y[n] * w[n] * w[n];
  return acc;
}

struct BpBlock {
  std::size_t n;  // block index N >= 1; induced constant weight (1/N)^{(p-2)/(2p)}
  std::vector<double> coeffs;
};

/// lp-sum over blocks of X_{p,v^{(N)}} norms, v^{(N)} constant (1/N)^{(p-2)/(2p)}.
inline NormReport bp_norm(double p, const std::vector<BpBlock>& blocks) {
  if (!(p > 2.0)) throw DomainError("bp_norm: requires p > 2");
  NormReport rep;
  double acc = 0.0;
  for (const BpBlock& blk : blocks) {
    if (blk.n == 0) throw DomainError("bp_norm: block index N >= 1 required");
    if (blk.coeffs.empty()) continue;
    const double vn = std::pow(1.0 / double(blk.n), (p - 2.0) / (2.0 * p));
    WeightSequence v(p, std::vector<double>(blk.coeffs.size(), vn));
    const double term = xpw_norm(v, CoefficientTensor::vector(blk.coeffs)).value;
    rep.components["block_" + std::to_string(blk.n)] = term;
    acc += std::pow(term, p);
  }
  rep.value = std::pow(acc, 1.0 / p);
  rep.branch = "lp_sum";
  return rep;
}

/// Norm of the mixed (p,2,{v^(k)}) sum: max of the lp-sum of block lp norms
/// and the l2-sum of block weighted-l2 norms.
inline NormReport mixed_p2w_norm(double p, const std::vector<WeightSequence>& v_list,
                                 const std::vector<std::vector<double>>& blocks) {
  if (v_list.size() != blocks.size())
    throw DomainError("mixed_p2w_norm: one weight sequence per block required");
  double acc_p = 0.0;
  double acc_2 = 0.0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].size() > v_list[k].size())
      throw DomainError("mixed_p2w_norm: block longer than its weight sequence");
    acc_p += std::pow(lp_norm(blocks[k], p), p);
    const double wl2 = weighted_l2_norm(v_list[k].weights(), blocks[k]);
    acc_2 += wl2 * wl2;
  }
  NormReport rep;
  rep.components["lp"] = std::pow(acc_p, 1.0 / p);
  rep.components["weighted_l2"] = std::sqrt(acc_2);
  if (rep.components["lp"] >= rep.components["weighted_l2"]) {
    rep.value = rep.components["lp"];
    rep.branch = "lp";
  } else {
    rep.value = rep.components["weighted_l2"];
    rep.branch = "weighted_l2";
  }
  return rep;
}

namespace detail {

inline std::string subset_label(unsigned mask, std::size_t n) {
  std::string s = "S={";
  bool first = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (mask & (1u << k)) {
      if (!first) s += ",";
      s += std::to_string(k + 1);
      first = false;
    }
  }
  s += "}";
  return s;
}

}  // namespace detail

/// Tensor-power norm: max over the 2^n axis subsets S of the iterated
/// lp-outside / weighted-l2-inside expression. One weight array serves all
/// axes. Exponential in the rank; capped at kTensorRankCap.
inline NormReport tensor_norm(const WeightSequence& w, const CoefficientTensor& a) {
  const std::size_t n = a.rank();
  if (n == 0) throw DomainError("tensor_norm: rank 0 rejected");
  if (n > kTensorRankCap) throw SizeCapError("tensor_norm: rank exceeds cap of 12");
  for (std::size_t axis_len : a.shape()) {
    if (axis_len > w.size()) throw DomainError("tensor_norm: axis length exceeds weight length");
  }
  const double p = w.p();
  NormReport rep;
  rep.value = -1.0;
  std::vector<std::size_t> idx(n, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // Group multi-indices by their S-coordinates; accumulate the inner
    // weighted-l2 sums per group, then combine with the outer lp sum.
    std::map<std::vector<std::size_t>, double> inner;
    std::fill(idx.begin(), idx.end(), 0);
    for (std::size_t flat = 0; flat < a.size(); ++flat) {
      double term = a[flat] * a[flat];
      std::vector<std::size_t> key;
      key.reserve(n);
      for (std::size_t ax = 0; ax < n; ++ax) {
        if (mask & (1u << ax)) {
          key.push_back(idx[ax]);
        } else {
          term *= w[idx[ax]] * w[idx[ax]];
        }
      }
      inner[key] += term;
      // advance row-major multi-index
      for (std::size_t ax = n; ax-- > 0;) {
        if (++idx[ax] < a.shape()[ax]) break;
        idx[ax] = 0;
      }
    }
    double outer = 0.0;
    for (const auto& [key, v] : inner) outer += std::pow(v, p / 2.0);
    const double value = std::pow(outer, 1.0 / p);
    rep.components[detail::subset_label(mask, n)] = value;
    if (value > rep.value) {
      rep.value = value;
      rep.branch = detail::subset_label(mask, n);
    }
  }
  return rep;
}

}  // namespace lpspace

#endif  // LPSPACE_NORMS_HPP
