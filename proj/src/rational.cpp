#include "relpoly/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace relpoly {

std::string rat_to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

Rat parse_rat(const std::string& text) {
  std::string s = text;
  // trim
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(first, last - first + 1);

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw std::invalid_argument("rational literal mixes '/' and '.': " + text);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("malformed decimal literal: " + text);
    mpz_class num, den;
    if (num.set_str(digits, 10) != 0)
      throw std::invalid_argument("malformed decimal literal: " + text);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string rat_to_decimal(const Rat& x, int digits) {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class num = x.get_num() * scale * 2;
  mpz_class rounded = (num + (sgn(x) >= 0 ? x.get_den() : -x.get_den())) / (2 * x.get_den());
  const bool neg = rounded < 0;
  mpz_class mag = neg ? mpz_class(-rounded) : rounded;
  std::string body = mag.get_str();
  if (digits == 0) return (neg ? "-" : "") + body;
  if (body.size() <= static_cast<std::size_t>(digits))
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

}  // namespace relpoly
