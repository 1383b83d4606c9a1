#ifndef LPSPACE_TENSOR_HPP
#define LPSPACE_TENSOR_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "lpspace/core.hpp"

namespace lpspace {

/// Dense multi-axis real array, row-major. Rank 1 covers the sequence-space
/// arguments; higher ranks feed the tensor-power norm.
class CoefficientTensor {
 public:
  CoefficientTensor(std::vector<std::size_t> shape, std::vector<double> values)
      : shape_(std::move(shape)), values_(std::move(values)) {
    if (shape_.empty()) throw DomainError("CoefficientTensor: rank 0 rejected");
    std::size_t n = 1;
    for (std::size_t axis : shape_) {
      if (axis == 0) throw DomainError("CoefficientTensor: zero axis length");
      n *= axis;
    }
    if (n != values_.size()) throw DomainError("CoefficientTensor: value count does not match shape");
    for (double v : values_) {
      if (!std::isfinite(v)) throw DomainError("CoefficientTensor: non-finite entry");
    }
  }

  static CoefficientTensor vector(std::vector<double> values) {
    const std::size_t n = values.size();
    return CoefficientTensor({n}, std::move(values));
  }

  std::size_t rank() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Row-major offset of a multi-index.
  std::size_t offset(const std::vector<std::size_t>& idx) const {
    std::size_t off = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a) off = off * shape_[a] + idx[a];
    return off;
  }

  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> values_;
};

}  // namespace lpspace

#endif  // LPSPACE_TENSOR_HPP
