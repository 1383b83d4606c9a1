#ifndef LPSPACE_BLOCKS_HPP
#define LPSPACE_BLOCKS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "lpspace/core.hpp"
#include "lpspace/norms.hpp"
#include "lpspace/optimizer.hpp"
#include "lpspace/tensor.hpp"
#include "lpspace/weights.hpp"

namespace lpspace {

/// Disjoint non-empty index sets over the weight range.
struct BlockPartition {
  std::vector<std::vector<std::size_t>> sets;  // 0-based indices into the weights

  void validate(const WeightSequence& w) const {
    std::vector<char> seen(w.size(), 0);
    for (const auto& set : sets) {
      if (set.empty()) throw DomainError("BlockPartition: empty block");
      for (std::size_t n : set) {
        if (n >= w.size()) throw DomainError("BlockPartition: index out of weight range");
        if (seen[n]) throw DomainError("BlockPartition: overlapping blocks");
        seen[n] = 1;
      }
    }
  }
};

/// Block vectors b_j with entries w_n^{2/(p-2)} on E_j, their lp-normalized
/// versions, the common value sigma_j of ||b_j||_p^p and ||b_j||_{2,w}^2, the
/// induced weights v_j = sigma_j^{(p-2)/(2p)}, and the dual vectors d_j.
struct BlockSystem {
  WeightSequence source;
  BlockPartition partition;
  std::vector<double> sigma;
  std::vector<std::vector<double>> b;        // dense over the weight range
  std::vector<std::vector<double>> b_tilde;  // b_j / sigma_j^{1/p}
  std::vector<double> v;
  std::vector<std::vector<double>> d;  // b_j / ||b_j||_p^{p-1}

  std::size_t block_count() const { return partition.sets.size(); }
};

inline BlockSystem build_blocks(const WeightSequence& w, BlockPartition partition) {
  partition.validate(w);
  const double p = w.p();
  BlockSystem sys{w, std::move(partition), {}, {}, {}, {}, {}};
  const std::size_t M = w.size();
  for (const auto& set : sys.partition.sets) {
    std::vector<double> bj(M, 0.0);
    double sigma = 0.0;
    for (std::size_t n : set) {
      bj[n] = std::pow(w[n], 2.0 / (p - 2.0));
      sigma += w.weight_pow_s(n);
    }
    std::vector<double> bt(M, 0.0), dj(M, 0.0);
    const double bp_norm = std::pow(sigma, 1.0 / p);  // ||b_j||_p
    for (std::size_t n : set) {
      bt[n] = bj[n] / bp_norm;
      dj[n] = bj[n] / std::pow(bp_norm, p - 1.0);
    }
    sys.sigma.push_back(sigma);
    sys.v.push_back(std::pow(sigma, (p - 2.0) / (2.0 * p)));
    sys.b.push_back(std::move(bj));
    sys.b_tilde.push_back(std::move(bt));
    sys.d.push_back(std::move(dj));
  }
  return sys;
}

/// Both sides of the block-basis isometry: the ambient norm of
/// sum_j lambda_j b~_j against the X_{p,v} norm of lambda.
inline std::pair<double, double> block_isometry_check(const BlockSystem& sys,
                                                      const CoefficientTensor& lambda) {
  if (lambda.rank() != 1 || lambda.size() > sys.block_count())
    throw DomainError("block_isometry_check: lambda length exceeds block count");
  const std::size_t M = sys.source.size();
  std::vector<double> ambient(M, 0.0);
  for (std::size_t j = 0; j < lambda.size(); ++j)
    for (std::size_t n = 0; n < M; ++n) ambient[n] += lambda[j] * sys.b_tilde[j][n];
  const double lhs = xpw_norm(sys.source, CoefficientTensor::vector(std::move(ambient))).value;
  WeightSequence v(sys.source.p(), std::vector<double>(sys.v.begin(), sys.v.begin() + lambda.size()));
  const double rhs = xpw_norm(v, lambda).value;
  return {lhs, rhs};
}

/// Left-to-right packing of weight indices into blocks whose induced weights
/// bracket the requested targets: w'_j <= v_j <= 2 w'_j on success.
inline BlockPartition greedy_partition(const WeightSequence& w, const std::vector<double>& targets) {
  if (targets.empty()) throw DomainError("greedy_partition: no targets");
  const double s = w.s();
  BlockPartition part;
  std::size_t n = 0;
  for (double target : targets) {
    if (!(target > 0.0)) throw DomainError("greedy_partition: targets must be positive");
    const double lo = std::pow(target, s);
    const double hi = std::pow(2.0 * target, s);
    std::vector<std::size_t> set;
    double sigma = 0.0;
    while (sigma < lo) {
      if (n >= w.size()) throw SizeCapError("greedy_partition: weight supply exhausted");
      const double piece = w.weight_pow_s(n);
      if (set.empty() && piece > hi)
        throw DomainError("greedy_partition: single weight overshoots the bracket");
      sigma += piece;
      set.push_back(n++);
    }
    if (sigma > hi) throw DomainError("greedy_partition: accumulated block overshoots the bracket");
    part.sets.push_back(std::move(set));
  }
  return part;
}

/// Coefficients of the norm-one projection onto the block span:
/// lambda_j = sigma_j^{-1} sum_{n in E_j} x_n w_n^{2(p-1)/(p-2)}.
inline std::vector<double> projection_coefficients(const BlockSystem& sys,
                                                   const CoefficientTensor& x) {
  if (x.rank() != 1 || x.size() > sys.source.size())
    throw DomainError("projection_coefficients: x outside weight range");
  const double p = sys.source.p();
  std::vector<double> lambda(sys.block_count(), 0.0);
  for (std::size_t j = 0; j < sys.block_count(); ++j) {
    double acc = 0.0;
    for (std::size_t n : sys.partition.sets[j]) {
      if (n < x.size()) acc += x[n] * std::pow(sys.source[n], 2.0 * (p - 1.0) / (p - 2.0));
    }
    lambda[j] = acc / sys.sigma[j];
  }
  return lambda;
}

/// Applies the block projection P(x) = sum_j lambda_j b_j.
inline std::vector<double> apply_projection(const BlockSystem& sys, const CoefficientTensor& x) {
  const std::vector<double> lambda = projection_coefficients(sys, x);
  std::vector<double> out(sys.source.size(), 0.0);
  for (std::size_t j = 0; j < sys.block_count(); ++j)
    for (std::size_t n : sys.partition.sets[j]) out[n] += lambda[j] * sys.b[j][n];
  return out;
}

/// lp norms of x and of P(x); the projection contracts in both lp and the
/// weighted l2 norm.
inline std::pair<double, double> projection_contraction_check(const BlockSystem& sys,
                                                              const CoefficientTensor& x) {
  std::vector<double> px = apply_projection(sys, x);
  std::vector<double> xv = x.values();
  xv.resize(sys.source.size(), 0.0);
  return {lp_norm(xv, sys.source.p()), lp_norm(px, sys.source.p())};
}

/// Blocks with sigma_j in [(1/2N)^{2p/(p-2)}, 1/N], the design that makes J
/// distinct normalized blocks isometrically an lp^N basis for any N of them.
inline BlockSystem lpN_block_design(const WeightSequence& w, std::size_t N, std::size_t J) {
  if (N == 0 || J == 0) throw DomainError("lpN_block_design: N >= 1 and J >= 1 required");
  const double s = w.s();
  const double lo = std::pow(1.0 / (2.0 * double(N)), s);
  const double hi = 1.0 / double(N);
  BlockPartition part;
  std::size_t n = 0;
  for (std::size_t j = 0; j < J; ++j) {
    std::vector<std::size_t> set;
    double sigma = 0.0;
    while (sigma < lo) {
      if (n >= w.size()) throw SizeCapError("lpN_block_design: weight supply exhausted");
      const double piece = w.weight_pow_s(n);
      if (piece > hi || sigma + piece > hi) {
        ++n;  // piece too large for this bracket; skip it
        continue;
      }
      sigma += piece;
      set.push_back(n++);
    }
    part.sets.push_back(std::move(set));
  }
  return build_blocks(w, std::move(part));
}

/// lhs: ambient X_{p,w} norm of sum x_i b~_{j_i}; rhs: plain lp norm of x.
/// Under the design bound sigma_j <= 1/N the two agree exactly.
inline std::pair<double, double> lpN_isometry_check(const BlockSystem& sys, std::size_t N,
                                                    const std::vector<double>& x,
                                                    const std::vector<std::size_t>& block_idx) {
  if (block_idx.size() < x.size() || x.size() > N)
    throw DomainError("lpN_isometry_check: need N distinct block indices");
  for (std::size_t i = 0; i < block_idx.size(); ++i)
    for (std::size_t k = i + 1; k < block_idx.size(); ++k)
      if (block_idx[i] == block_idx[k]) throw DomainError("lpN_isometry_check: repeated block index");
  const std::size_t M = sys.source.size();
  std::vector<double> ambient(M, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& bt = sys.b_tilde.at(block_idx[i]);
    for (std::size_t n = 0; n < M; ++n) ambient[n] += x[i] * bt[n];
  }
  const double lhs = xpw_norm(sys.source, CoefficientTensor::vector(std::move(ambient))).value;
  const double rhs = lp_norm(x, sys.source.p());
  return {lhs, rhs};
}

enum class DualSupMode { head_sum, strip };

struct DualSupResult {
  double closed_form;
  double numeric;
};

/// Suprema of explicit linear functionals over the unit ball of X_{p,v^(n)}
/// with constant weight v_n = (1/n)^{(p-2)/(2p)}: the head sum of the first M
/// coordinates (closed form M^{1/q}) and the strip functional with row
/// weights lambda (closed form n^{1/q} ||lambda||_2). The numeric side runs
/// the seeded projected-ascent optimizer with the proof's explicit
/// maximizers as warm starts.
inline DualSupResult dual_sup_unit_ball(double p, std::size_t n, DualSupMode mode, std::size_t M,
                                        const std::vector<double>& lambda,
                                        const AscentOptions& opts = {}) {
  if (!(p > 2.0)) throw DomainError("dual_sup_unit_ball: requires p > 2");
  if (n == 0) throw DomainError("dual_sup_unit_ball: n >= 1 required");
  const double q = conjugate_index(p);
  const double vn = std::pow(1.0 / double(n), (p - 2.0) / (2.0 * p));

  if (mode == DualSupMode::head_sum) {
    if (M == 0 || M > n) throw DomainError("dual_sup_unit_ball: requires 1 <= M <= n");
    std::vector<double> c(n, 0.0);
    for (std::size_t m = 0; m < M; ++m) c[m] = 1.0;
    std::vector<double> witness(n, 0.0);
    for (std::size_t m = 0; m < M; ++m) witness[m] = std::pow(double(M), -1.0 / p);
    const double numeric =
        max_linear_on_unit_ball(c, p, std::vector<double>(n, vn), {witness}, opts);
    return {std::pow(double(M), 1.0 / q), numeric};
  }

  // strip: K rows of n columns, objective sum_k sum_l lambda_k d_{k,l}
  if (lambda.empty()) throw DomainError("dual_sup_unit_ball: strip requires lambda");
  const std::size_t K = lambda.size();
  double l2 = 0.0;
  for (double lk : lambda) l2 += lk * lk;
  l2 = std::sqrt(l2);
  if (l2 == 0.0) return {0.0, 0.0};
  std::vector<double> c(K * n), witness(K * n);
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      c[k * n + l] = lambda[k];
      witness[k * n + l] = std::pow(double(n), -1.0 / p) * lambda[k] / l2;
    }
  const double numeric =
      max_linear_on_unit_ball(c, p, std::vector<double>(K * n, vn), {witness}, opts);
  return {std::pow(double(n), 1.0 / q) * l2, numeric};
}

}  // namespace lpspace

#endif  // LPSPACE_BLOCKS_HPP
