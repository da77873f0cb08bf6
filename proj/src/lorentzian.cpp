#include <numeric>

#include "exceptia/lattices.hpp"

namespace exceptia {

namespace {

bool supported_dim(std::size_t d) { return d == 10 || d == 18 || d == 26; }

}  // namespace

LorentzianVector LorentzianVector::from_doubled(std::vector<BigInt> doubled) {
  require(!doubled.empty(), ErrorCode::kDomain, "empty Lorentzian vector");
  const bool odd = mpz_odd_p(doubled[0].get_mpz_t()) != 0;
  BigInt sum = 0;
  for (const auto& d : doubled) {
    require((mpz_odd_p(d.get_mpz_t()) != 0) == odd, ErrorCode::kDomain,
            "coordinates must be all integers or all half-integers");
    sum += d;
  }
  // sum of coordinates = sum/2 must be even
  require(mpz_divisible_ui_p(sum.get_mpz_t(), 4) != 0, ErrorCode::kDomain,
          "coordinate sum must be an even integer");
  return LorentzianVector(std::move(doubled));
}

LorentzianVector LorentzianVector::from_coords(std::span<const Rational> x) {
  std::vector<BigInt> d;
  d.reserve(x.size());
  for (const auto& c : x) {
    Rational twice = c * Rational(2);
    require(twice.is_integer(), ErrorCode::kDomain, "coordinate is not a half-integer");
    d.push_back(twice.num());
  }
  return from_doubled(std::move(d));
}

std::vector<Rational> LorentzianVector::coords() const {
  std::vector<Rational> out;
  out.reserve(doubled_.size());
  for (const auto& d : doubled_) out.emplace_back(d, BigInt(2));
  return out;
}

bool LorentzianVector::half_integral() const { return mpz_odd_p(doubled_[0].get_mpz_t()) != 0; }

std::string LorentzianVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (i) out += ",";
    out += Rational(doubled_[i], BigInt(2)).str();
  }
  return out + ")";
}

Rational minkowski_dot(std::span<const Rational> u, std::span<const Rational> v) {
  require(u.size() == v.size(), ErrorCode::kMismatch, "Minkowski dot of different dimensions");
  require(!u.empty(), ErrorCode::kDomain, "Minkowski dot of empty vectors");
  Rational s = -(u[0] * v[0]);
  for (std::size_t i = 1; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Rational minkowski_dot(const LorentzianVector& u, const LorentzianVector& v) {
  require(u.dim() == v.dim(), ErrorCode::kMismatch, "Minkowski dot of different dimensions");
  BigInt s = -(u.doubled()[0] * v.doubled()[0]);
  for (std::size_t i = 1; i < u.dim(); ++i) s += u.doubled()[i] * v.doubled()[i];
  return Rational(s, BigInt(4));
}

bool ii_member(std::span<const Rational> v) {
  require(supported_dim(v.size()), ErrorCode::kUnsupported,
          "II membership is defined here for lengths 10, 18, 26");
  try {
    LorentzianVector::from_coords(v);
    return true;
  } catch (const Error&) {
    return false;
  }
}

LorentzianVector weyl_vector(int dim) {
  require(dim > 0 && supported_dim(static_cast<std::size_t>(dim)), ErrorCode::kUnsupported,
          "Weyl vectors are available for dimensions 10, 18, 26");
  const long first = dim == 10 ? 28 : dim == 18 ? 46 : 70;
  std::vector<BigInt> d;
  d.push_back(BigInt(2 * first));
  for (long i = 0; i + 1 < dim; ++i) d.push_back(BigInt(2 * i));
  return LorentzianVector::from_doubled(std::move(d));
}

bool is_fundamental_root(const LorentzianVector& r, int dim) {
  const LorentzianVector w = weyl_vector(dim);
  require(r.dim() == w.dim(), ErrorCode::kMismatch, "root dimension does not match");
  return minkowski_dot(r, r) == Rational(2) && minkowski_dot(r, w) == Rational(-1);
}

bool is_fundamental_root(std::span<const Rational> r, int dim) {
  require(dim > 0 && r.size() == static_cast<std::size_t>(dim), ErrorCode::kMismatch,
          "root dimension does not match");
  require(ii_member(r), ErrorCode::kDomain, "vector is not in the even unimodular Lorentzian lattice");
  return is_fundamental_root(LorentzianVector::from_coords(r), dim);
}

Lattice leech_from_ii26() {
  const Lattice ii = build_even_sum_half_integer(26, Signature::kLorentzian);
  const std::vector<Rational> w = weyl_vector(26).coords();

  // S = w-perp: kernel of the integer column (b_i . w).
  IntMatrix col(ii.rank(), 1);
  for (std::size_t i = 0; i < ii.rank(); ++i) {
    Rational d = minkowski_dot(ii.basis().row(i), w);
    require(d.is_integer(), ErrorCode::kInternal, "II is not integral against w");
    col(i, 0) = d.num();
  }
  const IntMatrix k = integer_kernel(col);
  require(k.rows() == 25, ErrorCode::kInternal, "w-perp does not have rank 25");
  const RatMatrix s_basis = to_rational(k) * ii.basis();

  // Coordinates of w in the basis of S; primitive since w is primitive in II.
  auto cw = solve_row_combination(s_basis, w);
  require(cw.has_value(), ErrorCode::kInternal, "w is not in its own orthogonal complement");
  IntMatrix c(25, 1);
  BigInt g = 0;
  for (std::size_t i = 0; i < 25; ++i) {
    require((*cw)[i].is_integer(), ErrorCode::kInternal, "w is not an integer combination in S");
    c(i, 0) = (*cw)[i].num();
    g = gcd(g, c(i, 0));
  }
  require(g == 1, ErrorCode::kInternal, "w is not primitive in S");

  // U c = e1 with U unimodular, so the rows of (U^-1)^T form a basis of Z^25
  // whose first row is c. Dropping that row leaves a complement of Zw.
  const HermiteResult h = hermite_rows(c);
  require(h.form(0, 0) == 1, ErrorCode::kInternal, "Hermite form of a primitive column is not e1");
  const IntMatrix completion = to_integer(inverse(to_rational(h.transform)).transpose());
  for (std::size_t i = 0; i < 25; ++i)
    require(completion(0, i) == c(i, 0), ErrorCode::kInternal, "completion does not start with w");

  const RatMatrix full = to_rational(completion) * s_basis;
  RatMatrix gram(24, 24);
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      gram(i, j) = minkowski_dot(full.row(i + 1), full.row(j + 1));
      gram(j, i) = gram(i, j);
    }
  return lll_reduce(Lattice::from_gram(std::move(gram)));
}

}  // namespace exceptia
