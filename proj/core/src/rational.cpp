#include "bomc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bomc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Decimal digits only; GMP would read a leading zero as an octal prefix.
BigInt from_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return BigInt{std::string(s)};
}

BigInt parse_int(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  BigInt v = from_digits(s);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("malformed denominator in '" +
                                  std::string(text) + "'");
    }
    BigInt den = from_digits(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  }

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num = from_digits(digits);
  BigInt den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  Rat r(num, den);
  return negative ? Rat(-r) : r;
}

std::string to_fraction_string(const Rat& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string to_string(const Rat& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return to_fraction_string(r);
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn, sd);
}

}  // namespace bomc
