#include "doctest.h"
#include "oracles.hpp"

#include "exceptia/modular.hpp"

using namespace exceptia;
using oracle::Poly;
using oracle::j_oracle;

namespace {

LaurentSeries poly_series(int low, const Poly& p) { return LaurentSeries(low, p); }

}  // namespace

TEST_SUITE("modular") {

TEST_CASE("Laurent series basics") {
  const LaurentSeries s(-1, {1, 744, 196884});
  CHECK(s.low() == -1);
  CHECK(s.high() == 1);
  CHECK(s.coeff(0) == 744);
  CHECK(s.coeff(5) == 0);
  CHECK(s.str() == "q^-1 + 744 + 196884 q");
  CHECK(LaurentSeries(0, {0, 0, -3, 1}).str() == "-3 q^2 + q^3");
  CHECK(LaurentSeries(0, {0, 0, -3, 1}).low() == 2);
  CHECK(LaurentSeries::zero(4).str() == "0");
  CHECK(LaurentSeries::zero(4).high() == 4);
}

TEST_CASE("eta^24") {
  const LaurentSeries e = eta24(5);
  CHECK(e.low() == 1);
  CHECK(e.high() == 6);
  CHECK(e.coeffs_through(1, 6) == std::vector<BigInt>{1, -24, 252, -1472, 4830, -6048});
  for (int n : {1, 2, 7, 20, 50}) REQUIRE(eta24(n) == eta24_sequential(n));
  const Poly oracle = [] {
    // q prod (1 - q^m)^24 through q^11, one factor at a time.
    Poly p(11, 0);
    p[0] = 1;
    for (std::size_t m = 1; m < 11; ++m)
      for (int rep = 0; rep < 24; ++rep)
        for (std::size_t t = 11; t-- > m;) p[t] -= p[t - m];
    return p;
  }();
  CHECK(eta24(10).coeffs_through(1, 11) == oracle);
}

TEST_CASE("series multiplication and inversion") {
  const LaurentSeries a(0, {3, -1, 4, 1, -5});
  const LaurentSeries one(0, {1, 0, 0, 0, 0});
  CHECK(series_mul(a, one, 4) == a);
  const LaurentSeries inv = series_inv(LaurentSeries(0, {1, -1, 0, 0, 0, 0, 0}), 6);
  CHECK(inv.coeffs_through(0, 6) == std::vector<BigInt>(7, 1));
  const LaurentSeries e = eta24(50);
  const LaurentSeries ei = series_inv(e, 48);
  CHECK(ei.low() == -1);
  for (int t = -1; t <= 48; ++t) REQUIRE(ei.coeff(t) >= 0);
  const LaurentSeries prod = series_mul(e, ei, 49);
  CHECK(prod.coeff(0) == 1);
  for (int t = 1; t <= prod.high(); ++t) REQUIRE(prod.coeff(t) == 0);
  CHECK_THROWS_AS(series_inv(LaurentSeries(0, {2, 1}), 3), Error);
}

TEST_CASE("j from E8^3 against E4^3 / Delta") {
  const Poly oracle = j_oracle(5);
  const Lattice e8 = build_E8();
  const Lattice e24 = direct_sum(direct_sum(e8, e8), e8);
  const LaurentSeries j = j_from_lattice(e24, 5);
  CHECK(j == poly_series(-1, oracle));
  CHECK(j.coeffs_through(-1, 2) == std::vector<BigInt>{1, 744, 196884, 21493760});
  CHECK(j.coeff(3) == BigInt("864299970"));
  CHECK(j.coeff(5) == BigInt("333202640600"));
}

TEST_CASE("other even unimodular lattices shift only the constant") {
  const Lattice e8 = build_E8();
  const LaurentSeries j3 = j_from_lattice(direct_sum(direct_sum(e8, e8), e8), 5);
  const LaurentSeries jd = j_from_lattice(direct_sum(e8, build_D16plus()), 5);
  for (int t = -1; t <= 5; ++t)
    if (t != 0) REQUIRE(jd.coeff(t) == j3.coeff(t));
  CHECK(jd.coeff(0) == 744);

  // The constant is 24 plus the number of roots: 744 for E8^3, 24 for Leech.
  const LaurentSeries jl = j_from_lattice(leech_from_ii26(), 2);
  CHECK(jl.coeff(-1) == 1);
  CHECK(jl.coeff(0) == 24);
  CHECK(jl.coeff(1) == 196884);
  CHECK(jl.coeff(2) == j3.coeff(2));
}

TEST_CASE("j preconditions") {
  CHECK_THROWS_AS(j_from_lattice(build_E8(), 2), Error);
  CHECK_THROWS_AS(j_from_lattice(build_Dn(24), 2), Error);
  const ThetaSeries short_theta{1, {1, 0}};
  CHECK_THROWS_AS(j_from_theta(short_theta, 2), Error);
}

}  // TEST_SUITE
