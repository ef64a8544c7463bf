#include "virasoro/cochain.hpp"

#include "virasoro/errors.hpp"

#include <algorithm>

namespace virasoro {

namespace {

constexpr int kMaxDegree = 3;

// Sorts into ascending order, returning the permutation sign; 0 for a
// repeated index.
int normalize(IndexTuple& indices) {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t k = i; k > 0 && indices[k] < indices[k - 1]; --k) {
      std::swap(indices[k], indices[k - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] == indices[i - 1]) {
      return 0;
    }
  }
  return sign;
}

}  // namespace

Cochain::Cochain(int degree, Window window) : degree_(degree), window_(window) {
  if (degree < 0 || degree > kMaxDegree) {
    throw UnsupportedDegree("cochain degree must be between 0 and 3");
  }
}

Cochain& Cochain::set_value(const IndexTuple& ascending, const CentralScalar& value) {
  if (static_cast<int>(ascending.size()) != degree_) {
    throw InvalidInput("tuple size does not match the cochain degree");
  }
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    if (std::abs(ascending[i]) > window_.bound() ||
        (i > 0 && ascending[i] <= ascending[i - 1])) {
      throw InvalidInput("cochain keys are ascending in-window tuples");
    }
  }
  undefined_.erase(ascending);
  if (value.is_zero()) {
    values_.erase(ascending);
  } else {
    values_.insert_or_assign(ascending, value);
  }
  return *this;
}

Cochain& Cochain::mark_undefined(const IndexTuple& ascending) {
  values_.erase(ascending);
  undefined_.insert(ascending);
  return *this;
}

std::optional<CentralScalar> Cochain::value(IndexTuple indices) const {
  if (static_cast<int>(indices.size()) != degree_) {
    throw InvalidInput("tuple size does not match the cochain degree");
  }
  for (const int index : indices) {
    if (std::abs(index) > window_.bound()) {
      return std::nullopt;
    }
  }
  const int sign = normalize(indices);
  if (sign == 0) {
    return CentralScalar();
  }
  if (undefined_.contains(indices)) {
    return std::nullopt;
  }
  const auto it = values_.find(indices);
  const CentralScalar raw = it == values_.end() ? CentralScalar() : it->second;
  return sign > 0 ? raw : -raw;
}

std::optional<CentralScalar> Cochain::evaluate(
    const std::vector<WittElement>& args) const {
  if (static_cast<int>(args.size()) != degree_) {
    throw InvalidInput("argument count does not match the cochain degree");
  }
  CentralScalar total;
  IndexTuple tuple(args.size(), 0);
  CentralScalar product;
  // Expand multilinearly over the supports.
  std::function<bool(std::size_t, CentralScalar)> recurse =
      [&](std::size_t position, CentralScalar factor) {
        if (position == args.size()) {
          const auto cell = value(tuple);
          if (!cell.has_value()) {
            return false;
          }
          total += *cell * factor;
          return true;
        }
        for (const auto& [index, coeff] : args[position].modes()) {
          tuple[position] = index;
          if (!recurse(position + 1, factor * coeff)) {
            return false;
          }
        }
        return true;
      };
  if (!recurse(0, CentralScalar(1))) {
    return std::nullopt;
  }
  return total;
}

Cochain Cochain::operator+(const Cochain& other) const {
  if (degree_ != other.degree_) {
    throw InvalidInput("cochain degrees differ");
  }
  Cochain result(degree_, intersect(window_, other.window_));
  for (const auto& tuple : ascending_tuples(degree_, result.window_)) {
    const auto a = value(tuple);
    const auto b = other.value(tuple);
    if (!a.has_value() || !b.has_value()) {
      result.mark_undefined(tuple);
    } else {
      result.set_value(tuple, *a + *b);
    }
  }
  return result;
}

Cochain Cochain::operator-(const Cochain& other) const {
  return *this + other.scaled(CentralScalar(-1));
}

Cochain Cochain::scaled(const CentralScalar& factor) const {
  Cochain result(degree_, window_);
  for (const auto& [tuple, value] : values_) {
    result.set_value(tuple, value * factor);
  }
  for (const auto& tuple : undefined_) {
    result.mark_undefined(tuple);
  }
  return result;
}

bool Cochain::equal_on_defined(const Cochain& other) const {
  if (degree_ != other.degree_) {
    return false;
  }
  const Window shared = intersect(window_, other.window_);
  for (const auto& tuple : ascending_tuples(degree_, shared)) {
    const auto a = value(tuple);
    const auto b = other.value(tuple);
    if (a.has_value() && b.has_value() && *a != *b) {
      return false;
    }
  }
  return true;
}

std::vector<IndexTuple> ascending_tuples(int size, Window window) {
  std::vector<IndexTuple> result;
  if (size == 0) {
    result.push_back({});
    return result;
  }
  const int bound = window.bound();
  IndexTuple tuple(static_cast<std::size_t>(size), 0);
  std::function<void(int, int)> recurse = [&](int position, int from) {
    if (position == size) {
      result.push_back(tuple);
      return;
    }
    for (int index = from; index <= bound; ++index) {
      tuple[static_cast<std::size_t>(position)] = index;
      recurse(position + 1, index + 1);
    }
  };
  recurse(0, -bound);
  return result;
}

Cochain coboundary(const Cochain& omega) {
  const int k = omega.degree();
  if (k > 2) {
    throw UnsupportedDegree("coboundary is supported for degrees 0 to 2");
  }
  Cochain result(k + 1, omega.window());
  if (k == 0) {
    return result;  // the zero 1-cochain, defined everywhere
  }
  for (const auto& tuple : ascending_tuples(k + 1, omega.window())) {
    CentralScalar total;
    bool defined = true;
    for (std::size_t i = 0; i < tuple.size() && defined; ++i) {
      for (std::size_t j = i + 1; j < tuple.size() && defined; ++j) {
        IndexTuple inner;
        inner.push_back(tuple[i] + tuple[j]);
        for (std::size_t r = 0; r < tuple.size(); ++r) {
          if (r != i && r != j) {
            inner.push_back(tuple[r]);
          }
        }
        const auto cell = omega.value(std::move(inner));
        if (!cell.has_value()) {
          defined = false;
          break;
        }
        // (-1)^(i+j); the 1-based positions of the formula shift the parity
        // by two, so the 0-based sum keeps the sign. The structure constant
        // of the inner bracket rides along.
        const int sign = (i + j) % 2 == 0 ? 1 : -1;
        total += cell->scaled(Rational(sign * (tuple[i] - tuple[j])));
      }
    }
    if (defined) {
      result.set_value(tuple, total);
    } else {
      result.mark_undefined(tuple);
    }
  }
  return result;
}

Cochain wedge(const Cochain& eta, const Cochain& theta) {
  const int p = eta.degree();
  const int q = theta.degree();
  if (p + q > kMaxDegree) {
    throw UnsupportedDegree("wedge degree overflow");
  }
  Cochain result(p + q, intersect(eta.window(), theta.window()));
  std::vector<int> selector(static_cast<std::size_t>(p + q), 0);
  std::fill(selector.begin(), selector.begin() + p, 1);
  std::sort(selector.begin(), selector.end(), std::greater<int>());
  for (const auto& tuple : ascending_tuples(p + q, result.window())) {
    CentralScalar total;
    bool defined = true;
    std::vector<int> mask = selector;
    // Iterate (p, q)-shuffles as permutations of the selector mask.
    do {
      IndexTuple left;
      IndexTuple right;
      int inversions = 0;
      int seen_right = 0;
      for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i] == 1) {
          left.push_back(tuple[i]);
          inversions += seen_right;
        } else {
          right.push_back(tuple[i]);
          ++seen_right;
        }
      }
      const auto a = eta.value(std::move(left));
      const auto b = theta.value(std::move(right));
      if (!a.has_value() || !b.has_value()) {
        defined = false;
        break;
      }
      const CentralScalar product = *a * *b;
      total += inversions % 2 == 0 ? product : -product;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (defined) {
      result.set_value(tuple, total);
    } else {
      result.mark_undefined(tuple);
    }
  }
  return result;
}

}  // namespace virasoro
