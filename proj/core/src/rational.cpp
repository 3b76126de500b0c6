#include "csc/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "csc/error.hpp"

namespace csc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// [+-]?digits -> (negative, magnitude digits)
std::pair<bool, std::string_view> split_sign(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  return {neg, s};
}

mpz_class parse_integer(std::string_view s) {
  auto [neg, digits] = split_sign(s);
  if (!all_digits(digits))
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  mpz_class v(std::string(digits), 10);
  return neg ? mpz_class(-v) : v;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto [neg, body] = split_sign(text);
    auto reldot = body.find('.');
    std::string_view ip = body.substr(0, reldot);
    std::string_view fp = body.substr(reldot + 1);
    if (!all_digits(ip) || !all_digits(fp))
      throw Error(ErrorCode::ParseError, "not a decimal: '" + std::string(text) + "'");
    mpz_class mag(std::string(ip) + std::string(fp), 10);
    if (neg) mag = -mag;
    return Rat(mag, pow10(static_cast<unsigned>(fp.size())));
  }
  return Rat(parse_integer(text));
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

mpz_class pow10(unsigned digits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

Rat round_to_decimals(const Rat& q, unsigned digits) {
  mpz_class scale = pow10(digits);
  mpz_class t = q.num() * scale;
  mpz_class quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), q.den().get_mpz_t());
  mpz_class twice = 2 * abs(rem);
  if (cmp(twice, q.den()) >= 0) quot += sgn(t) < 0 ? -1 : 1;
  return Rat(quot, scale);
}

int decimal_digits(const Rat& q) {
  mpz_class d = q.den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    ++fives;
  }
  if (d != 1) return -1;
  return twos > fives ? twos : fives;
}

std::string fixed_decimal(const Rat& q, unsigned digits) {
  Rat r = round_to_decimals(q, digits);
  mpz_class scaled = r.num() * (pow10(digits) / r.den());
  bool neg = sgn(scaled) < 0;
  mpz_class mag = abs(scaled);
  mpz_class ip, fp;
  mpz_class scale = pow10(digits);
  mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), mag.get_mpz_t(), scale.get_mpz_t());
  if (digits == 0) return (neg && ip != 0 ? "-" : "") + ip.get_str();
  std::string frac = fp.get_str();
  frac.insert(0, digits - frac.size(), '0');
  std::string out = ip.get_str() + "." + frac;
  if (neg && (ip != 0 || fp != 0)) out.insert(0, "-");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

}  // namespace csc
