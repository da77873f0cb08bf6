#include "exceptia/exactnum.hpp"

#include <cctype>

namespace exceptia {

std::string to_string(const BigInt& x) { return x.get_str(); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) fail(ErrorCode::kParse, "expected an integer, got '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      fail(ErrorCode::kParse, "expected an integer, got '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::kDivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt n = parse_bigint(text.substr(0, slash));
  BigInt d = parse_bigint(text.substr(slash + 1));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigInt Rational::round() const {
  return (*this + Rational(BigInt(1), BigInt(2))).floor();
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational rat_arith(const Rational& a, const Rational& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::kAdd: return a + b;
    case ArithKind::kSub: return a - b;
    case ArithKind::kMul: return a * b;
    case ArithKind::kDiv: return a / b;
  }
  fail(ErrorCode::kDomain, "unknown arithmetic kind");
}

Golden Golden::phi() { return Golden(Rational(1, 2), Rational(1, 2)); }
Golden Golden::phi_bar() { return Golden(Rational(1, 2), Rational(-1, 2)); }

Golden& Golden::operator*=(const Golden& o) {
  Rational u = u_ * o.u_ + Rational(5) * v_ * o.v_;
  Rational v = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

Golden& Golden::operator/=(const Golden& o) {
  Rational n = o.field_norm();
  if (n.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero in Q(sqrt5)");
  *this *= o.conj();
  u_ /= n;
  v_ /= n;
  return *this;
}

std::string Golden::str() const {
  if (v_.is_zero()) return u_.str();
  std::string rad = v_ == Rational(1) ? "sqrt5" : v_ == Rational(-1) ? "-sqrt5" : v_.str() + "*sqrt5";
  if (u_.is_zero()) return rad;
  if (v_.sign() < 0) {
    std::string mag = (-v_) == Rational(1) ? "sqrt5" : (-v_).str() + "*sqrt5";
    return "(" + u_.str() + "-" + mag + ")";
  }
  return "(" + u_.str() + "+" + rad + ")";
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t modulus) {
  require(modulus >= 1, ErrorCode::kDomain, "mod_pow: modulus must be >= 1");
  using u128 = unsigned __int128;
  std::uint64_t result = 1 % modulus;
  std::uint64_t b = base % modulus;
  while (exp != 0) {
    if (exp & 1U) result = static_cast<std::uint64_t>(u128(result) * b % modulus);
    b = static_cast<std::uint64_t>(u128(b) * b % modulus);
    exp >>= 1U;
  }
  return result;
}

BigInt isqrt(const BigInt& n) {
  require(n >= 0, ErrorCode::kDomain, "isqrt of a negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace exceptia
