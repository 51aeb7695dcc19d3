#include "exppairs/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace exppairs {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

namespace {

bool is_plain_int(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_plain_int(num) || !is_plain_int(den))
      throw std::invalid_argument("bad rational literal: " + text);
    return make_rational(Integer(num, 10), Integer(den, 10));
  }

  // Optional exponent part.
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string exps = s.substr(epos + 1);
    if (!is_plain_int(exps))
      throw std::invalid_argument("bad exponent in rational literal: " + text);
    exp10 = std::stol(exps);
    s = s.substr(0, epos);
  }

  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s = s.substr(1);
  }

  Integer num;
  Integer den = 1;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (head.empty()) head = "0";
    if (frac.empty()) frac = "0";
    if (!is_plain_int(head) || !is_plain_int(frac))
      throw std::invalid_argument("bad rational literal: " + text);
    num = Integer(head + frac, 10);  // base fixed: leading zeros are not octal
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!is_plain_int(s))
      throw std::invalid_argument("bad rational literal: " + text);
    num = Integer(s, 10);
  }
  if (negative) num = -num;

  if (exp10 > 0) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
    num *= p;
  } else if (exp10 < 0) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
    den *= p;
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * Rational(scale);
  // round half away from zero: floor(x + 1/2)
  scaled += Rational(1, 2);
  Integer units;
  mpz_fdiv_q(units.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string body = units.get_str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, std::string(digits + 1 - body.size(), '0'));
  std::string out;
  if (sgn(q) < 0 && units != 0) out += "-";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out += ".";
    out += body.substr(body.size() - digits);
  }
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational sqrt_upper(const Rational& s) {
  if (sgn(s) < 0) throw std::domain_error("sqrt of negative rational");
  if (sgn(s) == 0) return Rational(0);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 30);
  // ceil(s * scale^2)
  Integer t = (s.get_num() * scale * scale + s.get_den() - 1) / s.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());
  root += 1;  // isqrt truncates, so root^2 > t >= s*scale^2
  return make_rational(root, scale);
}

}  // namespace exppairs
