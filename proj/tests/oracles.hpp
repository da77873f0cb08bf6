#pragma once

// Independent reference computations shared by the unit and acceptance
// tests. None of them call into the library beyond its number types.

#include <string>
#include <utility>
#include <vector>

#include "exceptia/exactnum.hpp"
#include "exceptia/intmat.hpp"

namespace oracle {

using namespace exceptia;

// Laplace expansion along the first row; fine up to rank 8.
inline Rational cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational sum;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Rational term = m(0, c) * cofactor_det(minor);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

// E8 vectors of norm 2 and 4 counted coordinate-wise: integer vectors with
// entries in [-2, 2] and half-integer vectors with entries in {+-1/2, +-3/2},
// even coordinate sum in both cases.
inline std::pair<long, long> e8_coordinate_counts() {
  long n2 = 0, n4 = 0;
  auto tally = [&](long four_norm) {
    if (four_norm == 8) ++n2;
    if (four_norm == 16) ++n4;
  };
  // Doubled coordinates: integers -> even values, half-integers -> odd values.
  for (int half = 0; half < 2; ++half) {
    const std::vector<long> vals = half ? std::vector<long>{-3, -1, 1, 3} : std::vector<long>{-4, -2, 0, 2, 4};
    std::vector<std::size_t> idx(8, 0);
    for (;;) {
      long sum = 0, sq = 0;
      for (auto t : idx) {
        sum += vals[t];
        sq += vals[t] * vals[t];
      }
      if (sum % 4 == 0) tally(sq);  // doubled sum divisible by 4 means even sum
      std::size_t t = 0;
      while (t < 8 && idx[t] == vals.size() - 1) idx[t++] = 0;
      if (t == 8) break;
      ++idx[t];
    }
  }
  return {n2, n4};
}

using Poly = std::vector<BigInt>;  // coefficients of q^0 .. q^(size-1)

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly c(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// j = E4^3 / Delta with E4 = 1 + 240 sum sigma_3(n) q^n and
// Delta = q prod (1 - q^n)^24, both built directly from their definitions.
// Returns coefficients of q^-1 .. q^(n).
inline Poly j_oracle(int n) {
  const std::size_t len = static_cast<std::size_t>(n) + 2;
  Poly e4(len, 0);
  e4[0] = 1;
  for (std::size_t m = 1; m < len; ++m) {
    BigInt s = 0;
    for (std::size_t d = 1; d <= m; ++d)
      if (m % d == 0) s += BigInt(d * d * d);
    e4[m] = 240 * s;
  }
  const Poly e4cubed = poly_mul(poly_mul(e4, e4, len), e4, len);
  // Delta / q = prod (1 - q^m)^24, one factor at a time.
  Poly p(len, 0);
  p[0] = 1;
  for (std::size_t m = 1; m < len; ++m)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t t = len; t-- > m;) p[t] -= p[t - m];
  // Long division e4cubed / p (p has constant term 1).
  Poly quot(len, 0), rem = e4cubed;
  for (std::size_t t = 0; t < len; ++t) {
    quot[t] = rem[t];
    for (std::size_t s = t; s < len; ++s) rem[s] -= quot[t] * p[s - t];
  }
  return quot;
}

// pi from the BBP sum over n <= terms in exact rationals, then the first
// `digits` hex digits of its fractional part.
inline std::string exact_pi_hex(int terms, int digits) {
  mpq_class pi = 0;
  mpz_class pow16 = 1;
  for (int n = 0; n <= terms; ++n) {
    mpq_class t = mpq_class(4, 8 * n + 1) - mpq_class(2, 8 * n + 4) - mpq_class(1, 8 * n + 5) -
                  mpq_class(1, 8 * n + 6);
    t /= pow16;
    pi += t;
    pow16 *= 16;
  }
  pi.canonicalize();
  mpq_class frac = pi - 3;
  std::string out;
  for (int d = 0; d < digits; ++d) {
    frac *= 16;
    const mpz_class digit = frac.get_num() / frac.get_den();
    out += "0123456789ABCDEF"[digit.get_ui()];
    frac -= digit;
  }
  return out;
}

}  // namespace oracle
