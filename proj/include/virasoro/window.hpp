#pragma once

#include "virasoro/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace virasoro {

/// Exactness guarantee for truncated bivariate series: every coefficient of
/// z^a w^b with |a| <= bound and |b| <= bound is exact. Operations that
/// consume neighbouring coefficients shrink the bound accordingly, and
/// comparisons are only meaningful on the intersection of two guarantees.
class Window {
 public:
  explicit Window(int bound) : bound_(bound) {
    if (bound < 0) {
      throw InvalidInput("window bound must be non-negative");
    }
  }

  int bound() const { return bound_; }
  bool empty() const { return bound_ < 0; }

  bool contains(int z_exp, int w_exp) const {
    return std::abs(z_exp) <= bound_ && std::abs(w_exp) <= bound_;
  }

  /// Guarantee left after an operation that reads amount steps away.
  Window shrunk(int amount) const {
    Window result = *this;
    result.bound_ = std::max(bound_ - amount, -1);
    return result;
  }

  friend Window intersect(Window a, const Window& b) {
    a.bound_ = std::min(a.bound_, b.bound_);
    return a;
  }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  int bound_;
};

}  // namespace virasoro
