#pragma once

#include "virasoro/fields.hpp"
#include "virasoro/window.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace virasoro {

/// A word in the free algebra on field modes: an ordered list of letters
/// (symbol, mode index), length at most two. No relations are imposed;
/// identities proved by pure rearrangement hold here verbatim.
using WordLetter = std::pair<std::string, int>;
using Word = std::vector<WordLetter>;

/// Finite linear combination of words.
class WordSum {
 public:
  WordSum() = default;

  WordSum& add(const Word& word, const CentralScalar& value);
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, CentralScalar>& terms() const { return terms_; }

  WordSum& operator+=(const WordSum& other);
  WordSum& operator-=(const WordSum& other);
  friend WordSum operator+(WordSum a, const WordSum& b) { a += b; return a; }
  friend WordSum operator-(WordSum a, const WordSum& b) { a -= b; return a; }
  WordSum scaled(const CentralScalar& factor) const;
  /// Concatenation product.
  friend WordSum operator*(const WordSum& a, const WordSum& b);

  friend bool operator==(const WordSum&, const WordSum&) = default;

 private:
  std::map<Word, CentralScalar> terms_;  // no stored zeros
};

/// One-variable mode series with word coefficients: the coefficient of
/// x^(-n-1) is stored at key n, for |n| within the window.
class WordSeries {
 public:
  explicit WordSeries(Window window) : window_(window) {}

  const Window& window() const { return window_; }
  WordSeries& set(int n, WordSum value);
  WordSum at(int n) const;
  const std::map<int, WordSum>& entries() const { return entries_; }

  WordSeries operator+(const WordSeries& other) const;
  friend bool operator==(const WordSeries&, const WordSeries&) = default;

 private:
  Window window_;
  std::map<int, WordSum> entries_;
};

/// The mode series of a field symbol: coefficient a_n at every window mode.
WordSeries whole_field(const std::string& symbol, Window window);

/// Splits a series into its annihilation half (modes n >= 0) and creation
/// half (modes n < 0); the two halves sum back to the series.
std::pair<WordSeries, WordSeries> split_field(const WordSeries& series);

/// Derivative of a mode series: the mode-n coefficient of the derivative is
/// -n times the mode-(n-1) coefficient. Shrinks the window by one.
WordSeries series_derivative(const WordSeries& series);

/// Bivariate table of word sums: cell (m, n) is the coefficient of
/// z^(-m-1) w^(-n-1).
class WordTable {
 public:
  explicit WordTable(Window window) : window_(window) {}

  const Window& window() const { return window_; }
  WordTable& add(int m, int n, const WordSum& value);
  WordSum at(int m, int n) const;

  WordTable operator+(const WordTable& other) const;
  WordTable operator-(const WordTable& other) const;
  bool equal_on_shared_window(const WordTable& other) const;

 private:
  Window window_;
  std::map<std::pair<int, int>, WordSum> cells_;
};

/// Product of a z-series and a w-series; left_first controls the letter
/// order inside each cell.
WordTable series_product(const WordSeries& in_z, const WordSeries& in_w,
                         bool left_first);

/// Checks both rearrangement identities relating a product, the bracket
/// with one half, and the normally ordered product, coefficient-wise in the
/// free word algebra:
///   a(z) b(w) = [a(z)_-, b(w)] + :a(z)b(w):
///   b(w) a(z) = -[a(z)_+, b(w)] + :a(z)b(w):
bool verify_normal_order_identity(const std::string& a, const std::string& b,
                                  Window window);

}  // namespace virasoro
