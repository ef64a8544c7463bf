#include "virasoro/rational.hpp"

#include "virasoro/errors.hpp"

namespace virasoro {

Rational make_rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) {
    throw InvalidInput("rational with zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  return Rational(numerator, denominator);
}

std::string rational_to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string rational_to_display(const Rational& value) {
  if (denominator(value) == 1) {
    return numerator(value).str();
  }
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    return make_rational(BigInt(text.substr(0, slash)),
                         BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InvalidInput("malformed rational: " + text);
  }
}

Rational gen_binomial(int m, int j) {
  if (j < 0) {
    throw InvalidInput("gen_binomial with negative j");
  }
  BigInt numerator = 1;
  BigInt factorial = 1;
  for (int i = 0; i < j; ++i) {
    numerator *= BigInt(m) - i;
    factorial *= i + 1;
  }
  return make_rational(numerator, factorial);
}

}  // namespace virasoro
