#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "exceptia/error.hpp"

namespace exceptia {

using BigInt = mpz_class;

std::string to_string(const BigInt& x);
BigInt parse_bigint(std::string_view text);

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}                        // NOLINT
  Rational(int v) : q_(static_cast<long>(v)) {}      // NOLINT
  Rational(const BigInt& v) : q_(v) {}               // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  BigInt floor() const;
  // Nearest integer, halves rounded toward +infinity.
  BigInt round() const;
  double to_double() const { return q_.get_d(); }

  std::string str() const;

 private:
  mpq_class q_;
};

inline std::string to_string(const Rational& x) { return x.str(); }

enum class ArithKind { kAdd, kSub, kMul, kDiv };

// Field operation selected at runtime; kDiv by zero throws kDivisionByZero.
Rational rat_arith(const Rational& a, const Rational& b, ArithKind kind);

// u + v*sqrt(5) with rational u, v.
class Golden {
 public:
  Golden() = default;
  Golden(Rational u, Rational v = Rational()) : u_(std::move(u)), v_(std::move(v)) {}  // NOLINT
  Golden(long u) : u_(u) {}  // NOLINT

  static Golden phi();       // (1 + sqrt5)/2
  static Golden phi_bar();   // (1 - sqrt5)/2
  static Golden sqrt5() { return Golden(Rational(), Rational(1)); }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  Golden operator-() const { return Golden(-u_, -v_); }
  Golden& operator+=(const Golden& o) { u_ += o.u_; v_ += o.v_; return *this; }
  Golden& operator-=(const Golden& o) { u_ -= o.u_; v_ -= o.v_; return *this; }
  Golden& operator*=(const Golden& o);
  Golden& operator/=(const Golden& o);

  friend Golden operator+(Golden a, const Golden& b) { return a += b; }
  friend Golden operator-(Golden a, const Golden& b) { return a -= b; }
  friend Golden operator*(Golden a, const Golden& b) { return a *= b; }
  friend Golden operator/(Golden a, const Golden& b) { return a /= b; }
  friend bool operator==(const Golden&, const Golden&) = default;

  // Galois conjugate u - v*sqrt5.
  Golden conj() const { return Golden(u_, -v_); }
  // Field norm u^2 - 5 v^2 (product with the Galois conjugate).
  Rational field_norm() const { return u_ * u_ - Rational(5) * v_ * v_; }

  std::string str() const;

 private:
  Rational u_;
  Rational v_;
};

inline Golden golden_mul(const Golden& x, const Golden& y) { return x * y; }
inline Golden golden_conj(const Golden& x) { return x.conj(); }
inline std::string to_string(const Golden& x) { return x.str(); }

// base^exp mod modulus by square-and-multiply; modulus >= 1.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t modulus);

// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

}  // namespace exceptia
