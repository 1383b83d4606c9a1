#ifndef LPSPACE_STEPFN_HPP
#define LPSPACE_STEPFN_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "lpspace/core.hpp"

namespace lpspace {

inline constexpr std::size_t kCellCap = std::size_t(1) << 20;
inline constexpr double kBreakpointTol = 1e-12;

/// One coordinate of a finite product probability space: a partition of the
/// unit interval by cell probabilities, or the fair two-point space.
struct Coordinate {
  enum class Kind { interval, two_point };
  Kind kind = Coordinate::Kind::interval;
  std::vector<double> probs = {1.0};

  static Coordinate two_point() { return Coordinate{Kind::two_point, {0.5, 0.5}}; }
  static Coordinate interval(std::vector<double> probs) {
    return Coordinate{Kind::interval, std::move(probs)};
  }
  static Coordinate trivial() { return Coordinate{Kind::interval, {1.0}}; }

  std::size_t cells() const { return probs.size(); }
  bool is_trivial() const { return probs.size() == 1; }

  void validate() const {
    if (probs.empty()) throw DomainError("Coordinate: empty partition");
    double total = 0.0;
    for (double q : probs) {
      if (!(q >= 0.0)) throw DomainError("Coordinate: negative cell probability");
      total += q;
    }
    if (std::fabs(total - 1.0) > 1e-15 * probs.size() + 1e-15)
      throw DomainError("Coordinate: probabilities do not sum to 1");
    if (kind == Kind::two_point && (probs.size() != 2 || std::fabs(probs[0] - 0.5) > 1e-15))
      throw DomainError("Coordinate: two-point space must be fair on two cells");
  }
};

struct CoordinateSpace {
  std::vector<Coordinate> coords;

  std::size_t size() const { return coords.size(); }
  void validate() const {
    for (const Coordinate& c : coords) c.validate();
  }
};

namespace detail {

struct CoordinateMerge {
  Coordinate merged;
  std::vector<std::size_t> map_a;  // merged cell -> cell of a
  std::vector<std::size_t> map_b;
};

inline CoordinateMerge merge_coordinates(const Coordinate& a, const Coordinate& b) {
  if (a.is_trivial()) {
    CoordinateMerge m{b, {}, {}};
    m.map_a.assign(b.cells(), 0);
    m.map_b.resize(b.cells());
    for (std::size_t i = 0; i < b.cells(); ++i) m.map_b[i] = i;
    return m;
  }
  if (b.is_trivial()) {
    CoordinateMerge m{a, {}, {}};
    m.map_a.resize(a.cells());
    for (std::size_t i = 0; i < a.cells(); ++i) m.map_a[i] = i;
    m.map_b.assign(a.cells(), 0);
    return m;
  }
  if (a.kind == Coordinate::Kind::two_point || b.kind == Coordinate::Kind::two_point) {
    // Two-point coordinates only merge with an identical partition.
    if (a.cells() != 2 || b.cells() != 2 || std::fabs(a.probs[0] - b.probs[0]) > kBreakpointTol)
      throw DomainError("merge_coordinates: incompatible two-point coordinate");
    CoordinateMerge m{a, {0, 1}, {0, 1}};
    m.merged.kind = Coordinate::Kind::two_point;
    return m;
  }
  // Interval coordinates: merge cumulative breakpoints with tolerance.
  CoordinateMerge m;
  m.merged.kind = Coordinate::Kind::interval;
  m.merged.probs.clear();
  std::size_t ia = 0, ib = 0;
  double cum = 0.0, cum_a = a.probs[0], cum_b = b.probs[0];
  while (ia < a.cells() && ib < b.cells()) {
    double next;
    bool step_a = false, step_b = false;
    if (std::fabs(cum_a - cum_b) <= kBreakpointTol) {
      next = 0.5 * (cum_a + cum_b);
      step_a = step_b = true;
    } else if (cum_a < cum_b) {
      next = cum_a;
      step_a = true;
    } else {
      next = cum_b;
      step_b = true;
    }
    m.merged.probs.push_back(next - cum);
    m.map_a.push_back(ia);
    m.map_b.push_back(ib);
    cum = next;
    if (step_a && ++ia < a.cells()) cum_a += a.probs[ia];
    if (step_b && ++ib < b.cells()) cum_b += b.probs[ib];
  }
  if (ia != a.cells() || ib != b.cells())
    throw DomainError("merge_coordinates: breakpoint walks did not close");
  return m;
}

}  // namespace detail

/// Exactly integrable piecewise constant function on a finite product
/// probability space. The dense value table runs over the cells of the
/// support coordinates only (row-major, ascending coordinate index); all
/// other coordinates are irrelevant to the function's value.
class StepFunction {
 public:
  StepFunction(CoordinateSpace space, std::vector<std::size_t> support, std::vector<double> values)
      : space_(std::move(space)), support_(std::move(support)), values_(std::move(values)) {
    space_.validate();
    std::size_t expected = 1;
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t c : support_) {
      if (c >= space_.size()) throw DomainError("StepFunction: support coordinate out of range");
      if (!first && c <= prev) throw DomainError("StepFunction: support must be strictly increasing");
      prev = c;
      first = false;
      expected *= space_.coords[c].cells();
    }
    if (expected != values_.size()) throw DomainError("StepFunction: value count mismatch");
    if (expected > kCellCap) throw SizeCapError("StepFunction: cell cap exceeded");
  }

  static StepFunction constant(CoordinateSpace space, double value) {
    return StepFunction(std::move(space), {}, {value});
  }

  /// Function of a single coordinate with the given partition and values.
  static StepFunction on_coordinate(std::size_t coord, Coordinate partition,
                                    std::vector<double> values, std::size_t ambient_coords = 0) {
    const std::size_t n = std::max(ambient_coords, coord + 1);
    CoordinateSpace sp;
    sp.coords.assign(n, Coordinate::trivial());
    sp.coords[coord] = std::move(partition);
    return StepFunction(std::move(sp), {coord}, std::move(values));
  }

  const CoordinateSpace& space() const { return space_; }
  const std::vector<std::size_t>& support() const { return support_; }
  const std::vector<double>& values() const { return values_; }

  StepFunction map_values(const std::function<double(double)>& fn) const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = fn(values_[i]);
    return StepFunction(space_, support_, std::move(out));
  }

  StepFunction scaled(double a) const {
    return map_values([a](double v) { return a * v; });
  }

  double integrate() const {
    // Product measure: coordinates outside the support integrate to 1.
    std::vector<std::size_t> dims;
    for (std::size_t c : support_) dims.push_back(space_.coords[c].cells());
    double acc = 0.0;
    std::vector<std::size_t> idx(dims.size(), 0);
    for (double v : values_) {
      double prob = 1.0;
      for (std::size_t k = 0; k < dims.size(); ++k) prob *= space_.coords[support_[k]].probs[idx[k]];
      acc += v * prob;
      for (std::size_t k = dims.size(); k-- > 0;) {
        if (++idx[k] < dims[k]) break;
        idx[k] = 0;
      }
    }
    return acc;
  }

 private:
  CoordinateSpace space_;
  std::vector<std::size_t> support_;
  std::vector<double> values_;
};

namespace detail {

/// Both operands materialized on a common refined grid with a shared layout.
struct AlignedPair {
  CoordinateSpace space;
  std::vector<std::size_t> support;
  std::vector<std::size_t> dims;
  std::vector<double> a;
  std::vector<double> b;
};

inline AlignedPair align(const StepFunction& f, const StepFunction& g) {
  const std::size_t nf = f.space().size(), ng = g.space().size();
  const std::size_t n = std::max(nf, ng);
  AlignedPair out;
  out.space.coords.resize(n);
  std::vector<CoordinateMerge> merges(std::min(nf, ng));
  for (std::size_t i = 0; i < n; ++i) {
    if (i < nf && i < ng) {
      merges[i] = merge_coordinates(f.space().coords[i], g.space().coords[i]);
      out.space.coords[i] = merges[i].merged;
    } else if (i < nf) {
      out.space.coords[i] = f.space().coords[i];
    } else {
      out.space.coords[i] = g.space().coords[i];
    }
  }
  std::set<std::size_t> sup(f.support().begin(), f.support().end());
  sup.insert(g.support().begin(), g.support().end());
  out.support.assign(sup.begin(), sup.end());
  std::size_t total = 1;
  for (std::size_t c : out.support) {
    out.dims.push_back(out.space.coords[c].cells());
    total *= out.dims.back();
    if (total > kCellCap) throw SizeCapError("step function combine: cell cap exceeded");
  }
  // per-support-coordinate cell maps back into each operand's grid
  auto eval = [&](const StepFunction& h, bool use_map_a, std::vector<double>& dst) {
    std::vector<std::size_t> h_strides(h.support().size());
    {
      std::size_t stride = 1;
      for (std::size_t k = h.support().size(); k-- > 0;) {
        h_strides[k] = stride;
        stride *= h.space().coords[h.support()[k]].cells();
      }
    }
    // position of each h support coordinate within out.support
    std::vector<std::size_t> pos(h.support().size());
    for (std::size_t k = 0; k < h.support().size(); ++k)
      pos[k] = std::size_t(std::lower_bound(out.support.begin(), out.support.end(), h.support()[k]) -
                           out.support.begin());
    std::size_t total_cells = 1;
    for (std::size_t d : out.dims) total_cells *= d;
    dst.resize(total_cells);
    std::vector<std::size_t> idx(out.dims.size(), 0);
    for (std::size_t flat = 0; flat < total_cells; ++flat) {
      std::size_t off = 0;
      for (std::size_t k = 0; k < h.support().size(); ++k) {
        const std::size_t coord = h.support()[k];
        std::size_t cell = idx[pos[k]];
        if (coord < merges.size()) {
          const CoordinateMerge& m = merges[coord];
          if (!m.map_a.empty()) cell = use_map_a ? m.map_a[cell] : m.map_b[cell];
        }
        off += cell * h_strides[k];
      }
      dst[flat] = h.values()[off];
      for (std::size_t k = out.dims.size(); k-- > 0;) {
        if (++idx[k] < out.dims[k]) break;
        idx[k] = 0;
      }
    }
  };
  eval(f, true, out.a);
  eval(g, false, out.b);
  return out;
}

}  // namespace detail

inline StepFunction zip(const StepFunction& f, const StepFunction& g,
                        const std::function<double(double, double)>& op) {
  detail::AlignedPair ap = detail::align(f, g);
  std::vector<double> out(ap.a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(ap.a[i], ap.b[i]);
  return StepFunction(std::move(ap.space), std::move(ap.support), std::move(out));
}

inline StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  return zip(f, g, [](double x, double y) { return x + y; });
}
inline StepFunction operator-(const StepFunction& f, const StepFunction& g) {
  return zip(f, g, [](double x, double y) { return x - y; });
}
inline StepFunction operator*(const StepFunction& f, const StepFunction& g) {
  return zip(f, g, [](double x, double y) { return x * y; });
}
inline StepFunction operator*(double a, const StepFunction& f) { return f.scaled(a); }

inline double integrate(const StepFunction& f) { return f.integrate(); }

inline double inner(const StepFunction& f, const StepFunction& g) { return (f * g).integrate(); }

inline double lp_norm(const StepFunction& f, double r) {
  if (!(r >= 1.0)) throw DomainError("lp_norm: requires r >= 1");
  return std::pow(f.map_values([r](double v) { return pow_abs(v, r); }).integrate(), 1.0 / r);
}

/// Largest pointwise difference after refinement to a common grid.
inline double max_abs_diff(const StepFunction& f, const StepFunction& g) {
  detail::AlignedPair ap = detail::align(f, g);
  double worst = 0.0;
  for (std::size_t i = 0; i < ap.a.size(); ++i)
    worst = std::max(worst, std::fabs(ap.a[i] - ap.b[i]));
  return worst;
}

/// Conditional expectation onto the coordinate subset A: averages out the
/// support coordinates not in A with their cell probabilities.
inline StepFunction cond_expect(const StepFunction& f, const std::vector<std::size_t>& A) {
  std::set<std::size_t> keep_set(A.begin(), A.end());
  std::vector<std::size_t> keep, drop;
  for (std::size_t c : f.support()) {
    if (keep_set.count(c))
      keep.push_back(c);
    else
      drop.push_back(c);
  }
  if (drop.empty()) return f;
  std::vector<std::size_t> dims;
  for (std::size_t c : f.support()) dims.push_back(f.space().coords[c].cells());
  std::size_t keep_total = 1;
  for (std::size_t c : keep) keep_total *= f.space().coords[c].cells();
  std::vector<double> out(keep_total, 0.0);
  std::vector<std::size_t> idx(dims.size(), 0);
  for (double v : f.values()) {
    double prob = 1.0;
    std::size_t off = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t c = f.support()[k];
      if (keep_set.count(c)) {
        off = off * f.space().coords[c].cells() + idx[k];
      } else {
        prob *= f.space().coords[c].probs[idx[k]];
      }
    }
    out[off] += v * prob;
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return StepFunction(f.space(), std::move(keep), std::move(out));
}

/// Named alias for the branch projection onto a coordinate subset.
inline StepFunction branch_project(const StepFunction& f, const std::vector<std::size_t>& S) {
  return cond_expect(f, S);
}

/// The measure-squeeze operator T on a single interval coordinate:
/// T(f)(s) = k^{-1/p} f(s/k) on [0,k), 0 beyond.
inline StepFunction squeeze(const StepFunction& f, double k, double p) {
  if (f.support().size() != 1)
    throw DomainError("squeeze: single-coordinate step function required");
  const std::size_t c = f.support()[0];
  const Coordinate& coord = f.space().coords[c];
  if (coord.kind != Coordinate::Kind::interval)
    throw DomainError("squeeze: interval coordinate required");
  if (!(k > 0.0 && k <= 1.0)) throw DomainError("squeeze: k in (0,1] required");
  const double scale = std::pow(k, -1.0 / p);
  std::vector<double> probs, values;
  for (std::size_t i = 0; i < coord.cells(); ++i) {
    probs.push_back(k * coord.probs[i]);
    values.push_back(scale * f.values()[i]);
  }
  if (1.0 - k > kBreakpointTol) {
    probs.push_back(1.0 - k);
    values.push_back(0.0);
  } else {
    // k == 1: renormalize the rounding residue away
    double total = 0.0;
    for (double q : probs) total += q;
    for (double& q : probs) q /= total;
  }
  CoordinateSpace sp = f.space();
  sp.coords[c] = Coordinate::interval(std::move(probs));
  return StepFunction(std::move(sp), {c}, std::move(values));
}

/// Coordinate lift: same one-dimensional distribution, placed on coordinate i
/// of the product space (an isometry for every r).
inline StepFunction lift(const StepFunction& f, std::size_t i, std::size_t ambient_coords = 0) {
  if (f.support().size() != 1) throw DomainError("lift: single-coordinate step function required");
  const Coordinate& coord = f.space().coords[f.support()[0]];
  return StepFunction::on_coordinate(i, coord, f.values(), ambient_coords);
}

/// L2-orthogonal projection of cond_expect(f, {i}) onto the span of a given
/// orthogonal family of step functions on coordinate i.
inline StepFunction s_projection(const StepFunction& f, const std::vector<StepFunction>& family,
                                 std::size_t i) {
  if (family.empty()) throw DomainError("s_projection: empty designated family");
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (std::fabs(inner(family[a], family[b])) > 1e-10)
        throw DomainError("s_projection: designated family is not orthogonal");
    }
  }
  StepFunction g = cond_expect(f, {i});
  StepFunction out = StepFunction::constant(g.space(), 0.0);
  for (const StepFunction& phi : family) {
    const double denom = inner(phi, phi);
    if (denom <= 0.0) throw DomainError("s_projection: zero vector in designated family");
    out = out + (inner(g, phi) / denom) * phi;
  }
  return out;
}

/// Lp-disjoint sum: adjoins a fresh fair coin epsilon and glues 2^{1/p} b0 on
/// epsilon=0 with 2^{1/p} b1 on epsilon=1. p-th power norms add exactly.
inline StepFunction disjoint_sum(const StepFunction& b0, const StepFunction& b1, double p) {
  detail::AlignedPair ap = detail::align(b0, b1);
  const std::size_t eps_coord = ap.space.coords.size();
  ap.space.coords.push_back(Coordinate::two_point());
  std::vector<std::size_t> support = ap.support;
  support.push_back(eps_coord);
  const double scale = std::pow(2.0, 1.0 / p);
  std::vector<double> values;
  values.reserve(2 * ap.a.size());
  for (std::size_t i = 0; i < ap.a.size(); ++i) {
    values.push_back(scale * ap.a[i]);  // epsilon = 0
    values.push_back(scale * ap.b[i]);  // epsilon = 1
  }
  return StepFunction(std::move(ap.space), std::move(support), std::move(values));
}

/// The 2^k normalized dyadic indicators at level k on one interval
/// coordinate: u_k(s) = 2^{k/p} on the s-th dyadic cell.
inline std::vector<StepFunction> dyadic_level(std::size_t k, double p, std::size_t coord = 0) {
  const std::size_t cells = std::size_t(1) << k;
  if (cells > kCellCap) throw SizeCapError("dyadic_level: cell cap exceeded");
  Coordinate c = Coordinate::interval(std::vector<double>(cells, 1.0 / double(cells)));
  const double height = std::pow(2.0, double(k) / p);
  std::vector<StepFunction> out;
  out.reserve(cells);
  for (std::size_t s = 0; s < cells; ++s) {
    std::vector<double> v(cells, 0.0);
    v[s] = height;
    out.push_back(StepFunction::on_coordinate(coord, c, std::move(v)));
  }
  return out;
}

/// Martingale-difference ladder over the two-point coordinates taken in the
/// given order: f_0 = E f, f_i = (E_{T_i} - E_{T_{i-1}}) f with T_i the first
/// i coordinates. Components sum back to f and are mutually orthogonal.
inline std::vector<StepFunction> haar_decompose(const StepFunction& f,
                                                std::vector<std::size_t> order = {}) {
  const std::size_t m = f.space().size();
  for (const Coordinate& c : f.space().coords) {
    if (c.kind != Coordinate::Kind::two_point && !c.is_trivial())
      throw DomainError("haar_decompose: two-point coordinates required");
  }
  if (order.empty()) {
    order.resize(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
  }
  std::vector<StepFunction> parts;
  std::vector<std::size_t> prefix;
  StepFunction prev = cond_expect(f, prefix);
  parts.push_back(prev);
  for (std::size_t i = 0; i < order.size(); ++i) {
    prefix.push_back(order[i]);
    StepFunction cur = cond_expect(f, prefix);
    parts.push_back(cur - prev);
    prev = cur;
  }
  return parts;
}

}  // namespace lpspace

#endif  // LPSPACE_STEPFN_HPP
