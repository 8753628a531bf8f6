#include "evclust/scalar.hpp"

#include "evclust/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace evclust {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::schema: return "SchemaError";
    case Errc::mass: return "MassError";
    case Errc::unknown_atom: return "UnknownAtom";
    case Errc::total_conflict: return "TotalConflict";
    case Errc::no_feasible_r: return "NoFeasibleR";
    case Errc::domain: return "DomainError";
    case Errc::too_large: return "TooLarge";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io: return "IOError";
  }
  return "Error";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_number(std::string_view text) {
  fail(Errc::schema, "malformed mass value '" + std::string(text) + "'");
}

// Decimal literal "[-]digits[.digits][e[+-]digits]" as an exact rational.
Rational parse_decimal(std::string_view s) {
  std::string_view original = s;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) bad_number(original);
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') bad_number(original);
    std::string_view rest = s.substr(i + 1);
    long e = 0;
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) bad_number(original);
    exponent += e;
  }
  if (exponent > 400 || exponent < -400) bad_number(original);
  // leading zeros would be read as octal
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  boost::multiprecision::mpz_int numerator(digits);
  boost::multiprecision::mpz_int scale = boost::multiprecision::pow(
      boost::multiprecision::mpz_int(10), static_cast<unsigned>(std::labs(exponent)));
  Rational value = exponent >= 0 ? Rational(numerator * scale) : Rational(numerator, scale);
  return negative ? Rational(-value) : value;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);
  Rational num = parse_decimal(trim(s.substr(0, slash)));
  Rational den = parse_decimal(trim(s.substr(slash + 1)));
  if (den == 0) bad_number(text);
  return Rational(num / den);
}

}  // namespace

double Numeric<double>::parse(std::string_view text) {
  return parse_rational(text).convert_to<double>();
}

std::string Numeric<double>::format(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

bool Numeric<Rational>::sums_to_one(const Rational& s) {
  Rational diff = s - 1;
  if (diff < 0) diff = -diff;
  return diff <= Rational(1, 1000000000);
}

Rational Numeric<Rational>::parse(std::string_view text) { return parse_rational(text); }

std::string Numeric<Rational>::format(const Rational& x) {
  using boost::multiprecision::mpz_int;
  mpz_int num = boost::multiprecision::numerator(x);
  mpz_int den = boost::multiprecision::denominator(x);
  mpz_int rest = den;
  unsigned twos = 0;
  unsigned fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();
  unsigned places = std::max(twos, fives);
  if (places == 0) return num.str();
  // x = num/den = num * (10^places/den) / 10^places
  mpz_int scaled = num * (boost::multiprecision::pow(mpz_int(10), places) / den);
  bool negative = scaled < 0;
  std::string digits = (negative ? mpz_int(-scaled) : scaled).str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", x);
  return std::strtod(buf.data(), nullptr);
}

}  // namespace evclust
