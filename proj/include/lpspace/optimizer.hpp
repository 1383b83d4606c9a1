#ifndef LPSPACE_OPTIMIZER_HPP
#define LPSPACE_OPTIMIZER_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "lpspace/core.hpp"
#include "lpspace/norms.hpp"

namespace lpspace {

struct AscentOptions {
  int restarts = 32;
  int max_iters = 10000;
  std::uint64_t seed = 0x5EED;
  bool verbose = false;
  std::function<void(int restart, int iter, double best)> on_progress;
};

namespace detail {

// Gauge of the X_{p,v} unit ball: max of lp and v-weighted l2 norms.
inline double ball_gauge(const std::vector<double>& d, double p, const std::vector<double>& v) {
  double lp = 0.0, l2 = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    lp += pow_abs(d[i], p);
    l2 += (v[i] * d[i]) * (v[i] * d[i]);
  }
  return std::max(std::pow(lp, 1.0 / p), std::sqrt(l2));
}

}  // namespace detail

/// Maximize the linear functional c·d over the unit ball of X_{p,v} by
/// projected ascent (gradient step followed by radial projection back onto
/// the ball) with seeded multi-start. Caller-supplied warm starts are tried
/// first; every iterate is feasible after projection, so the returned value
/// is always a valid lower bound on the supremum.
inline double max_linear_on_unit_ball(const std::vector<double>& c, double p,
                                      const std::vector<double>& v,
                                      const std::vector<std::vector<double>>& warm_starts,
                                      const AscentOptions& opts = {}) {
  const std::size_t dim = c.size();
  if (dim == 0) return 0.0;
  double cnorm = 0.0;
  for (double ci : c) cnorm += ci * ci;
  cnorm = std::sqrt(cnorm);
  if (cnorm == 0.0) return 0.0;

  Rng rng(opts.seed);
  std::vector<std::vector<double>> starts = warm_starts;
  starts.push_back(c);  // gradient direction itself
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> d(dim);
    for (double& x : d) x = rng.normal();
    starts.push_back(std::move(d));
  }

  double best = 0.0;
  int restart_no = 0;
  for (std::vector<double> d : starts) {
    double g = detail::ball_gauge(d, p, v);
    if (g <= 0.0) continue;
    for (double& x : d) x /= g;
    double obj = 0.0;
    for (std::size_t i = 0; i < dim; ++i) obj += c[i] * d[i];
    if (obj > best) best = obj;
    // Backtracking ascent along the tangent of the gauge level set: the
    // update is stationary exactly when c is normal to the ball boundary
    // (the KKT condition), and the step is halved whenever it stops
    // improving, so the iterate contracts onto the maximizer.
    double eta = 0.5;
    for (int it = 0; it < opts.max_iters && eta > 1e-14; ++it) {
      // Gradient of the active branch of the gauge at d (where g(d) = 1).
      double lp = 0.0, l2 = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        lp += pow_abs(d[i], p);
        l2 += (v[i] * d[i]) * (v[i] * d[i]);
      }
      const double lpn = std::pow(lp, 1.0 / p);
      const double l2n = std::sqrt(l2);
      std::vector<double> gg(dim, 0.0);
      if (lpn >= l2n) {
        const double denom = std::pow(lpn, p - 1.0);
        for (std::size_t i = 0; i < dim; ++i)
          gg[i] = (d[i] >= 0.0 ? 1.0 : -1.0) * pow_abs(d[i], p - 1.0) / denom;
      } else {
        for (std::size_t i = 0; i < dim; ++i) gg[i] = v[i] * v[i] * d[i] / l2n;
      }
      double cg = 0.0, g2 = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        cg += c[i] * gg[i];
        g2 += gg[i] * gg[i];
      }
      std::vector<double> r(dim);
      double rn = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        r[i] = c[i] - (g2 > 0.0 ? cg / g2 : 0.0) * gg[i];
        rn += r[i] * r[i];
      }
      rn = std::sqrt(rn);
      if (rn <= 1e-14 * cnorm) break;  // stationary: KKT point reached
      std::vector<double> trial = d;
      for (std::size_t i = 0; i < dim; ++i) trial[i] += eta * r[i] / rn;
      g = detail::ball_gauge(trial, p, v);
      double trial_obj = 0.0;
      if (g > 0.0) {
        for (double& x : trial) x /= g;
        for (std::size_t i = 0; i < dim; ++i) trial_obj += c[i] * trial[i];
      }
      if (trial_obj > obj) {
        d = std::move(trial);
        obj = trial_obj;
        if (obj > best) best = obj;
      } else {
        eta *= 0.5;
      }
      if (opts.on_progress) opts.on_progress(restart_no, it, best);
    }
    ++restart_no;
  }
  return best;
}

/// Multi-start projected gradient on the homogeneous ratio
///   R(c) = norm(c) / ||c||_p
/// over the lp unit sphere, for a caller-supplied positively homogeneous
/// norm evaluator. Used for the two-sided lp-equivalence bounds of level
/// vectors. Coordinate starts are always included, so exactly attained
/// coordinate extrema are found exactly. Gradients are central differences;
/// the dimension is a small power of two.
struct RatioBounds {
  double lower;
  double upper;
};

inline RatioBounds ratio_bounds_on_sphere(std::size_t dim,
                                          const std::function<double(const std::vector<double>&)>& norm_fn,
                                          double p, const AscentOptions& opts = {}) {
  if (dim == 0) throw DomainError("ratio_bounds_on_sphere: empty dimension");
  Rng rng(opts.seed);

  auto normalize = [&](std::vector<double>& c) {
    const double g = lp_norm(c, p);
    if (g > 0.0)
      for (double& x : c) x /= g;
  };
  auto ratio = [&](const std::vector<double>& c) { return norm_fn(c); };

  std::vector<std::vector<double>> starts;
  for (std::size_t t = 0; t < dim; ++t) {
    std::vector<double> e(dim, 0.0);
    e[t] = 1.0;
    starts.push_back(e);
  }
  {
    std::vector<double> ones(dim, std::pow(double(dim), -1.0 / p));
    starts.push_back(ones);
  }
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> c(dim);
    for (double& x : c) x = rng.normal();
    normalize(c);
    starts.push_back(std::move(c));
  }

  RatioBounds bounds{std::numeric_limits<double>::infinity(), 0.0};
  const double h = 1e-6;
  for (int direction : {+1, -1}) {
    for (std::vector<double> c : starts) {
      double val = ratio(c);
      for (int it = 0; it < opts.max_iters; ++it) {
        std::vector<double> grad(dim);
        for (std::size_t t = 0; t < dim; ++t) {
          std::vector<double> cp = c, cm = c;
          cp[t] += h;
          cm[t] -= h;
          normalize(cp);
          normalize(cm);
          grad[t] = (ratio(cp) - ratio(cm)) / (2.0 * h);
        }
        double gn = 0.0;
        for (double g : grad) gn += g * g;
        gn = std::sqrt(gn);
        if (gn < 1e-14) break;
        const double eta = 0.2 / (1.0 + 0.1 * it);
        for (std::size_t t = 0; t < dim; ++t) c[t] += direction * eta * grad[t] / gn;
        normalize(c);
        const double nv = ratio(c);
        if ((direction > 0 && nv <= val + 1e-15) || (direction < 0 && nv >= val - 1e-15)) {
          val = direction > 0 ? std::max(val, nv) : std::min(val, nv);
          break;
        }
        val = nv;
      }
      bounds.lower = std::min(bounds.lower, val);
      bounds.upper = std::max(bounds.upper, val);
    }
  }
  return bounds;
}

}  // namespace lpspace

#endif  // LPSPACE_OPTIMIZER_HPP
