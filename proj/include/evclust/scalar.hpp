#pragma once

// Scalar policy shared by every numerical module. Masses are either IEEE
// doubles (the CLI path) or exact GMP rationals (tests, exact identities).

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace evclust {

using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <class T>
struct Numeric;

template <>
struct Numeric<double> {
  static constexpr bool exact = false;
  /// Focal masses below this after combination are folded into the frame.
  static constexpr double prune_below = 1e-12;
  /// Normalization slack accepted when validating external masses.
  static constexpr double sum_tolerance = 1e-9;

  static double to_double(double x) { return x; }
  static double from_double(double x) { return x; }
  static bool is_total_conflict(double k) { return k >= 1.0 - 1e-12; }
  static bool negligible(double m) { return m < prune_below; }
  /// a <= b up to rounding noise.
  static bool leq(double a, double b) { return a <= b + 1e-12; }
  static bool sums_to_one(double s) { return s >= 1.0 - sum_tolerance && s <= 1.0 + sum_tolerance; }
  /// Parses "0.8", "1", "2/3", "1e-3".
  static double parse(std::string_view text);
  /// Shortest round-trip decimal form.
  static std::string format(double x);
};

template <>
struct Numeric<Rational> {
  static constexpr bool exact = true;

  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational from_double(double x) { return Rational(x); }
  static bool is_total_conflict(const Rational& k) { return k >= 1; }
  static bool negligible(const Rational& m) { return m == 0; }
  static bool leq(const Rational& a, const Rational& b) { return a <= b; }
  static bool sums_to_one(const Rational& s);
  static Rational parse(std::string_view text);
  /// Terminating decimal when the denominator allows it, "p/q" otherwise.
  static std::string format(const Rational& x);
};

template <class T>
double to_double(const T& x) {
  return Numeric<T>::to_double(x);
}

/// Rounds to 12 significant digits; the precision used in reports.
double round12(double x);

}  // namespace evclust
