#pragma once

#include "virasoro/central_scalar.hpp"
#include "virasoro/window.hpp"
#include "virasoro/witt.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace virasoro {

/// Basis-index tuple in strictly increasing order.
using IndexTuple = std::vector<int>;

/// Alternating k-linear form (k <= 3) on the windowed mode basis. Values
/// are stored on ascending tuples; evaluation on any tuple resolves the
/// permutation sign, and repeated indices give zero. Tuples whose value was
/// lost to a window exit are tracked as undefined rather than zero.
class Cochain {
 public:
  Cochain(int degree, Window window);

  int degree() const { return degree_; }
  const Window& window() const { return window_; }

  Cochain& set_value(const IndexTuple& ascending, const CentralScalar& value);
  Cochain& mark_undefined(const IndexTuple& ascending);

  /// Signed value on an arbitrary tuple. Nullopt when the tuple reaches
  /// outside the window or was marked undefined.
  std::optional<CentralScalar> value(IndexTuple indices) const;
  bool is_defined(IndexTuple indices) const { return value(std::move(indices)).has_value(); }

  /// Multilinear extension; nullopt as soon as one needed tuple is.
  std::optional<CentralScalar> evaluate(const std::vector<WittElement>& args) const;

  const std::map<IndexTuple, CentralScalar>& values() const { return values_; }
  const std::set<IndexTuple>& undefined_tuples() const { return undefined_; }

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain scaled(const CentralScalar& factor) const;

  /// Equal where both are defined; tuples undefined on either side are
  /// ignored.
  bool equal_on_defined(const Cochain& other) const;

 private:
  int degree_;
  Window window_;
  std::map<IndexTuple, CentralScalar> values_;  // ascending keys, no zeros
  std::set<IndexTuple> undefined_;
};

/// All ascending in-window tuples of the given size.
std::vector<IndexTuple> ascending_tuples(int size, Window window);

/// Coboundary operator: degree k to k+1, supported for k <= 2. Output
/// tuples whose internal brackets leave the window are marked undefined,
/// never silently zeroed.
Cochain coboundary(const Cochain& omega);

/// Shuffle wedge product with unit coefficients; degrees must satisfy
/// p + q <= 3.
Cochain wedge(const Cochain& eta, const Cochain& theta);

}  // namespace virasoro
