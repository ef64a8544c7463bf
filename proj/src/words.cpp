#include "virasoro/words.hpp"

#include "virasoro/errors.hpp"

namespace virasoro {

WordSum& WordSum::add(const Word& word, const CentralScalar& value) {
  if (value.is_zero()) {
    return *this;
  }
  auto [it, inserted] = terms_.emplace(word, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
  return *this;
}

WordSum& WordSum::operator+=(const WordSum& other) {
  for (const auto& [word, value] : other.terms_) {
    add(word, value);
  }
  return *this;
}

WordSum& WordSum::operator-=(const WordSum& other) {
  for (const auto& [word, value] : other.terms_) {
    add(word, -value);
  }
  return *this;
}

WordSum WordSum::scaled(const CentralScalar& factor) const {
  WordSum result;
  for (const auto& [word, value] : terms_) {
    result.add(word, value * factor);
  }
  return result;
}

WordSum operator*(const WordSum& a, const WordSum& b) {
  WordSum result;
  for (const auto& [wa, va] : a.terms_) {
    for (const auto& [wb, vb] : b.terms_) {
      Word joined = wa;
      joined.insert(joined.end(), wb.begin(), wb.end());
      if (joined.size() > 2) {
        throw InvalidInput("free words longer than two letters");
      }
      result.add(joined, va * vb);
    }
  }
  return result;
}

WordSeries& WordSeries::set(int n, WordSum value) {
  if (!window_.contains(n, 0)) {
    return *this;
  }
  if (value.is_zero()) {
    entries_.erase(n);
  } else {
    entries_.insert_or_assign(n, std::move(value));
  }
  return *this;
}

WordSum WordSeries::at(int n) const {
  const auto it = entries_.find(n);
  return it == entries_.end() ? WordSum() : it->second;
}

WordSeries WordSeries::operator+(const WordSeries& other) const {
  WordSeries result(intersect(window_, other.window_));
  for (int n = -result.window_.bound(); n <= result.window_.bound(); ++n) {
    result.set(n, at(n) + other.at(n));
  }
  return result;
}

WordSeries whole_field(const std::string& symbol, Window window) {
  WordSeries result(window);
  for (int n = -window.bound(); n <= window.bound(); ++n) {
    WordSum sum;
    sum.add(Word{{symbol, n}}, CentralScalar(1));
    result.set(n, sum);
  }
  return result;
}

std::pair<WordSeries, WordSeries> split_field(const WordSeries& series) {
  WordSeries negative(series.window());
  WordSeries positive(series.window());
  for (const auto& [n, sum] : series.entries()) {
    (n >= 0 ? negative : positive).set(n, sum);
  }
  return {negative, positive};
}

WordSeries series_derivative(const WordSeries& series) {
  WordSeries result(series.window().shrunk(1));
  if (result.window().empty()) {
    throw WindowExhaustion("window exhausted by differentiation");
  }
  for (int n = -result.window().bound(); n <= result.window().bound(); ++n) {
    result.set(n, series.at(n - 1).scaled(CentralScalar(Rational(-n))));
  }
  return result;
}

WordTable& WordTable::add(int m, int n, const WordSum& value) {
  if (value.is_zero() || !window_.contains(m, n)) {
    return *this;
  }
  auto [it, inserted] = cells_.emplace(std::pair{m, n}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      cells_.erase(it);
    }
  }
  return *this;
}

WordSum WordTable::at(int m, int n) const {
  const auto it = cells_.find({m, n});
  return it == cells_.end() ? WordSum() : it->second;
}

WordTable WordTable::operator+(const WordTable& other) const {
  WordTable result(intersect(window_, other.window_));
  for (const auto& [key, value] : cells_) {
    result.add(key.first, key.second, value);
  }
  for (const auto& [key, value] : other.cells_) {
    result.add(key.first, key.second, value);
  }
  return result;
}

WordTable WordTable::operator-(const WordTable& other) const {
  WordTable result(intersect(window_, other.window_));
  for (const auto& [key, value] : cells_) {
    result.add(key.first, key.second, value);
  }
  for (const auto& [key, value] : other.cells_) {
    result.add(key.first, key.second, WordSum() - value);
  }
  return result;
}

bool WordTable::equal_on_shared_window(const WordTable& other) const {
  const Window shared = intersect(window_, other.window_);
  for (int m = -shared.bound(); m <= shared.bound(); ++m) {
    for (int n = -shared.bound(); n <= shared.bound(); ++n) {
      if (at(m, n) != other.at(m, n)) {
        return false;
      }
    }
  }
  return true;
}

WordTable series_product(const WordSeries& in_z, const WordSeries& in_w,
                         bool left_first) {
  WordTable result(intersect(in_z.window(), in_w.window()));
  for (const auto& [m, za] : in_z.entries()) {
    for (const auto& [n, wb] : in_w.entries()) {
      result.add(m, n, left_first ? za * wb : wb * za);
    }
  }
  return result;
}

bool verify_normal_order_identity(const std::string& a, const std::string& b,
                                  Window window) {
  const WordSeries a_series = whole_field(a, window);
  const WordSeries b_series = whole_field(b, window);
  const auto [a_minus, a_plus] = split_field(a_series);

  // :a(z)b(w): = a(z)_+ b(w) + b(w) a(z)_-
  const WordTable normal =
      series_product(a_plus, b_series, true) + series_product(a_minus, b_series, false);

  // [a(z)_-, b(w)] and [a(z)_+, b(w)]
  const WordTable minus_bracket = series_product(a_minus, b_series, true) -
                                  series_product(a_minus, b_series, false);
  const WordTable plus_bracket = series_product(a_plus, b_series, true) -
                                 series_product(a_plus, b_series, false);

  const WordTable product_ab = series_product(a_series, b_series, true);
  const WordTable product_ba = series_product(a_series, b_series, false);

  const bool first = product_ab.equal_on_shared_window(minus_bracket + normal);
  const WordTable empty(window);
  const bool second =
      product_ba.equal_on_shared_window((empty - plus_bracket) + normal);
  return first && second;
}

}  // namespace virasoro
