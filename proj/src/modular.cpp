#include "exceptia/modular.hpp"

#include <algorithm>

namespace exceptia {

namespace {

using Poly = std::vector<BigInt>;

// Product of two polynomials truncated to degree n.
Poly poly_mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly c(n + 1, BigInt(0));
  for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// prod_{m=1}^{n} (1 - q^m) through degree n.
Poly euler_product(int n) {
  const auto un = static_cast<std::size_t>(n);
  Poly p(un + 1, BigInt(0));
  p[0] = 1;
  for (std::size_t m = 1; m <= un; ++m)
    for (std::size_t d = un; d >= m; --d) p[d] -= p[d - m];
  return p;
}

}  // namespace

LaurentSeries::LaurentSeries(int low, std::vector<BigInt> coeffs)
    : low_(low), high_(low + static_cast<int>(coeffs.size()) - 1), coeffs_(std::move(coeffs)) {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

LaurentSeries LaurentSeries::zero(int high) { return LaurentSeries(high + 1, {}); }

BigInt LaurentSeries::coeff(int exponent) const {
  if (exponent < low_ || exponent > high_) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<BigInt> LaurentSeries::coeffs_through(int from, int to) const {
  std::vector<BigInt> out;
  for (int e = from; e <= to; ++e) out.push_back(coeff(e));
  return out;
}

std::string LaurentSeries::str() const {
  std::string out;
  for (int e = low_; e <= high_; ++e) {
    const BigInt c = coeff(e);
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    std::string power = e == 0 ? "" : e == 1 ? "q" : "q^" + std::to_string(e);
    std::string term;
    if (power.empty()) term = to_string(mag);
    else if (mag == 1) term = power;
    else term = to_string(mag) + " " + power;
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

LaurentSeries eta24(int n) {
  require(n >= 1, ErrorCode::kDomain, "eta24 needs N >= 1");
  const auto un = static_cast<std::size_t>(n);
  const Poly p = euler_product(n);
  const Poly p2 = poly_mul(p, p, un);
  const Poly p4 = poly_mul(p2, p2, un);
  const Poly p8 = poly_mul(p4, p4, un);
  const Poly p16 = poly_mul(p8, p8, un);
  return LaurentSeries(1, poly_mul(p16, p8, un));
}

LaurentSeries eta24_sequential(int n) {
  require(n >= 1, ErrorCode::kDomain, "eta24 needs N >= 1");
  const auto un = static_cast<std::size_t>(n);
  const Poly p = euler_product(n);
  Poly acc(un + 1, BigInt(0));
  acc[0] = 1;
  for (int k = 0; k < 24; ++k) acc = poly_mul(acc, p, un);
  return LaurentSeries(1, acc);
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b, int n) {
  const int hi = std::min({n, a.low() + b.high(), b.low() + a.high()});
  const int lo = a.low() + b.low();
  if (a.is_zero() || b.is_zero() || hi < lo) return LaurentSeries::zero(hi);
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
  for (int i = a.low(); i <= a.high() && i + b.low() <= hi; ++i) {
    const BigInt ai = a.coeff(i);
    if (ai == 0) continue;
    for (int j = b.low(); j <= b.high() && i + j <= hi; ++j)
      c[static_cast<std::size_t>(i + j - lo)] += ai * b.coeff(j);
  }
  return LaurentSeries(lo, std::move(c));
}

LaurentSeries series_inv(const LaurentSeries& a, int n) {
  require(!a.is_zero(), ErrorCode::kDivisionByZero, "inverse of the zero series");
  const BigInt lead = a.coeff(a.low());
  require(lead == 1 || lead == -1, ErrorCode::kDomain, "series inverse needs a leading coefficient of +-1");
  const int shift = a.low();
  const int hi = std::min(n, a.high() - 2 * shift);
  if (hi < -shift) return LaurentSeries::zero(hi);
  const auto terms = static_cast<std::size_t>(hi + shift + 1);
  std::vector<BigInt> d(terms, BigInt(0));
  d[0] = lead;  // 1/lead == lead for a unit
  for (std::size_t k = 1; k < terms; ++k) {
    BigInt s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += a.coeff(shift + static_cast<int>(i)) * d[k - i];
    d[k] = -lead * s;
  }
  return LaurentSeries(-shift, std::move(d));
}

LaurentSeries j_from_theta(const ThetaSeries& theta, int n) {
  require(n >= -1, ErrorCode::kDomain, "j order must be >= -1");
  require(theta.order >= n + 1, ErrorCode::kDomain, "theta series too short for the requested j order");
  require(!theta.counts.empty() && theta.counts[0] == 1, ErrorCode::kDomain,
          "theta series must start with 1");
  LaurentSeries th(0, std::vector<BigInt>(theta.counts.begin(), theta.counts.end()));
  LaurentSeries inv = series_inv(eta24(std::max(1, n + 1)), n);
  return series_mul(th, inv, n);
}

LaurentSeries j_from_lattice(const Lattice& l, int n, unsigned threads) {
  require(l.rank() == 24, ErrorCode::kDomain, "j from a lattice needs rank 24");
  require(is_even(l) && is_unimodular(l), ErrorCode::kDomain,
          "j from a lattice needs an even unimodular lattice");
  return j_from_theta(theta_series(l, n + 1, threads), n);
}

}  // namespace exceptia
