#pragma once

#include <string>
#include <vector>

#include "exceptia/exactnum.hpp"
#include "exceptia/lattices.hpp"

namespace exceptia {

// Truncated Laurent series in q with integer coefficients for exponents
// low() .. high(). Leading zeros are stripped, so a nonzero series has a
// nonzero coefficient at low().
class LaurentSeries {
 public:
  LaurentSeries() = default;
  // Coefficients for exponents low, low+1, ..., low+coeffs.size()-1.
  LaurentSeries(int low, std::vector<BigInt> coeffs);
  // The zero series known through exponent high.
  static LaurentSeries zero(int high);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return high_; }
  BigInt coeff(int exponent) const;  // 0 outside low..high
  std::vector<BigInt> coeffs_through(int from, int to) const;

  // "q^-1 + 744 + 196884 q + ..." ; "0" for the zero series.
  std::string str() const;

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  int low_ = 0;
  int high_ = -1;
  std::vector<BigInt> coeffs_;
};

constexpr int kDefaultJOrder = 5;

// q * prod_{n=1}^{N} (1 - q^n)^24 through exponent N+1, by repeated squaring.
LaurentSeries eta24(int n);
// Same series by 24 sequential multiplications (cross-check route).
LaurentSeries eta24_sequential(int n);

// Product known through min(n, what the factors determine).
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b, int n);
// Requires a leading coefficient of +-1; the inverse is exact in integers.
LaurentSeries series_inv(const LaurentSeries& a, int n);

// theta_L / eta^24 through exponent n for a rank-24 even unimodular lattice.
LaurentSeries j_from_lattice(const Lattice& l, int n = kDefaultJOrder, unsigned threads = 0);
// Same, from an already computed theta series (order >= n+1).
LaurentSeries j_from_theta(const ThetaSeries& theta, int n);

}  // namespace exceptia
