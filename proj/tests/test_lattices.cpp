#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "exceptia/lattices.hpp"

using namespace exceptia;
using oracle::cofactor_det;
using oracle::e8_coordinate_counts;

namespace {

// Norm counts of sum c_i b_i over |c_i| <= bound, straight from the Gram.
std::map<long, std::uint64_t> brute_force_counts(const Lattice& l, long bound, long max_norm) {
  const std::size_t n = l.rank();
  std::vector<long> c(n, -bound);
  std::map<long, std::uint64_t> out;
  for (;;) {
    Rational norm;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += Rational(c[i] * c[j]) * l.gram()(i, j);
    const long v = norm.num().get_si();
    if (v > 0 && v <= max_norm) ++out[v];
    std::size_t t = 0;
    while (t < n && c[t] == bound) c[t++] = -bound;
    if (t == n) break;
    ++c[t];
  }
  return out;
}

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

RatMatrix scramble(const RatMatrix& basis) {
  const std::size_t n = basis.rows();
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 40; ++step) {
    const std::size_t a = testing_support::uniform(0, n - 1);
    std::size_t b = testing_support::uniform(0, n - 2);
    if (b >= a) ++b;
    const long k = testing_support::uniform(-2, 2);
    for (std::size_t j = 0; j < n; ++j) u(a, j) += k * u(b, j);
  }
  REQUIRE(is_unimodular(u));
  return to_rational(u) * basis;
}

}  // namespace

TEST_SUITE("lattices") {

TEST_CASE("determinant oracle agrees with elimination") {
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing_support::uniform(1, 6);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = testing_support::small_rational();
    REQUIRE(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("A_n") {
  CHECK(build_An(1).gram() == RatMatrix::from_rows({{Rational(2)}}));
  for (int n = 1; n <= 8; ++n) {
    const Lattice a = build_An(n);
    REQUIRE(a.rank() == static_cast<std::size_t>(n));
    REQUIRE(a.ambient_dim() == static_cast<std::size_t>(n + 1));
    REQUIRE(cofactor_det(a.gram()) == Rational(n + 1));
    REQUIRE(gram_determinant(a) == Rational(n + 1));
  }
  const Lattice a2 = build_An(2);
  CHECK(brute_force_counts(a2, 2, 2) == std::map<long, std::uint64_t>{{2, 6}});
  CHECK(short_vectors(a2, 2) == std::map<long, std::uint64_t>{{2, 6}});
  CHECK(is_integral(a2));
  CHECK(is_even(a2));
  CHECK_FALSE(is_unimodular(a2));
  CHECK(gram_determinant(a2) == Rational(3));
}

TEST_CASE("D_n") {
  for (int n = 2; n <= 16; ++n) {
    const Lattice d = build_Dn(n);
    if (n <= 8) REQUIRE(cofactor_det(d.gram()) == Rational(4));
    REQUIRE(gram_determinant(d) == Rational(4));
  }
  const Lattice d4 = build_Dn(4);
  CHECK(short_vectors(d4, 2).at(2) == 24);
  CHECK(brute_force_counts(d4, 2, 2).at(2) == 24);
}

TEST_CASE("D4 and the Hurwitz quaternions") {
  // Doubling a Hurwitz unit lands in D4.
  const Lattice d4 = build_Dn(4);
  for (const auto& u : hurwitz_units()) {
    std::vector<Rational> x(u.coords().begin(), u.coords().end());
    for (auto& c : x) c *= Rational(2);
    REQUIRE(contains(d4, x));
  }
  // With the norm doubled, the Hurwitz ring is D4 up to isometry.
  const Rational h(1, 2);
  const Lattice hurwitz(RatMatrix::from_rows({{h, h, h, h}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                        Signature::kEuclidean);
  const Lattice scaled = hurwitz.rescaled(Rational(2));
  CHECK(is_even(scaled));
  CHECK(gram_determinant(scaled) == gram_determinant(d4));
  CHECK(theta_series(scaled, 3) == theta_series(d4, 3));
  CHECK(minimal_norm(hurwitz) == Rational(1));
}

TEST_CASE("Z^n") {
  const Lattice z = build_Zn(5);
  CHECK(is_integral(z));
  CHECK_FALSE(is_even(z));
  CHECK(is_unimodular(z));
  CHECK(same_lattice(dual_lattice(z), z));
}

TEST_CASE("E8") {
  const Lattice e8 = build_E8();
  CHECK(is_even(e8));
  CHECK(is_unimodular(e8));
  CHECK(short_vectors(e8, 2) == std::map<long, std::uint64_t>{{2, 240}});
  const ThetaSeries th = theta_series(e8, 2);
  CHECK(th.counts == ints({1, 240, 2160}));
  const auto [n2, n4] = e8_coordinate_counts();
  CHECK(n2 == 240);
  CHECK(n4 == 2160);
  CHECK(theta_series(e8, 4).counts == ints({1, 240, 2160, 6720, 17520}));
  CHECK(same_lattice(dual_lattice(e8), e8));
  CHECK(minimal_norm(e8) == Rational(2));
}

TEST_CASE("E7 and E6") {
  const Lattice e8 = build_E8();
  const Lattice e7 = build_E7(e8);
  CHECK(e7.rank() == 7);
  CHECK(cofactor_det(e7.gram()) == Rational(2));
  CHECK(short_vectors(e7, 2).at(2) == 126);
  const Lattice e6 = build_E6(e8);
  CHECK(e6.rank() == 6);
  CHECK(cofactor_det(e6.gram()) == Rational(3));
  CHECK(short_vectors(e6, 2).at(2) == 72);
}

TEST_CASE("D16+") {
  const Lattice d = build_D16plus();
  CHECK(is_even(d));
  CHECK(is_unimodular(d));
  CHECK(short_vectors(d, 2).at(2) == 480);
  const Lattice e8 = build_E8();
  const Lattice e8e8 = direct_sum(e8, e8);
  CHECK(theta_series_direct(d, 5) == theta_series(e8e8, 5));
  CHECK(same_lattice(dual_lattice(d), d));
}

TEST_CASE("dual lattices") {
  const Lattice a2 = build_An(2);
  CHECK(gram_determinant(dual_lattice(a2)) == Rational(1, 3));
  for (const Lattice& l : {a2, build_Dn(4), build_E8()}) REQUIRE(same_lattice(dual_lattice(dual_lattice(l)), l));
  CHECK_FALSE(same_lattice(dual_lattice(a2), a2));
}

TEST_CASE("theta series") {
  CHECK(theta_series(build_An(1), 2).counts == ints({1, 2, 0}));
  const Lattice e8 = build_E8();
  const ThetaSeries t = theta_series(e8, 3);
  const Lattice e24 = direct_sum(direct_sum(e8, e8), e8);
  CHECK(theta_series(e24, 3) == theta_product(theta_product(t, t), t));
  const Lattice e16 = direct_sum(e8, e8);
  CHECK(theta_series(e16, 3) == theta_series_direct(e16, 3));
  for (const auto& [norm, count] : short_vectors(build_D16plus(), 6)) {
    REQUIRE(norm % 2 == 0);
    REQUIRE(count % 2 == 0);
  }
  CHECK_THROWS_AS(theta_series(build_Zn(3), 2), Error);
}

TEST_CASE("enumeration is deterministic across thread counts") {
  const Lattice e8 = build_E8();
  const auto one = short_vectors(e8, 6, 1);
  CHECK(short_vectors(e8, 6, 2) == one);
  CHECK(short_vectors(e8, 6, 5) == one);
  std::map<long, std::uint64_t> visited;
  for_each_short_vector(e8, 4, [&](std::span<const long> c, long norm) {
    Rational direct;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) direct += Rational(c[i] * c[j]) * e8.gram()(i, j);
    REQUIRE(direct == Rational(norm));
    ++visited[norm];
  });
  CHECK(visited == short_vectors(e8, 4));
}

TEST_CASE("minimal norm of a rational form") {
  const Lattice l = Lattice::from_gram(RatMatrix::from_rows({{Rational(3, 2), Rational(1, 2)}, {Rational(1, 2), Rational(5, 6)}}));
  // Brute force over small coefficients.
  Rational best(1000);
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      if (a == 0 && b == 0) continue;
      const Rational v = Rational(a * a) * Rational(3, 2) + Rational(2 * a * b) * Rational(1, 2) + Rational(b * b) * Rational(5, 6);
      if (v < best) best = v;
    }
  CHECK(minimal_norm(l) == best);
}

TEST_CASE("LLL reduction") {
  const Lattice e8 = build_E8();
  const Lattice r = lll_reduce(e8);
  CHECK(same_lattice(r, e8));
  CHECK(gram_determinant(r) == gram_determinant(e8));
  CHECK(is_lll_reduced(r));
  for (int trial = 0; trial < 5; ++trial) {
    const Lattice messy = e8.with_basis(scramble(e8.basis()));
    REQUIRE(same_lattice(messy, e8));
    const auto red = lll_reduce_with_transform(messy);
    REQUIRE(is_unimodular(red.transform));
    REQUIRE(to_rational(red.transform) * messy.basis() == red.lattice.basis());
    REQUIRE(is_lll_reduced(red.lattice));
    REQUIRE(gram_determinant(red.lattice) == Rational(1));
    for (std::size_t i = 0; i < 8; ++i) REQUIRE(red.lattice.gram()(i, i) <= Rational(4));
    REQUIRE(short_vectors(red.lattice, 4) == short_vectors(e8, 4));
  }
  CHECK_THROWS_AS(lll_reduce(e8, Rational(1, 5)), Error);
}

TEST_CASE("Minkowski form and II membership") {
  const LorentzianVector w26 = weyl_vector(26), w18 = weyl_vector(18), w10 = weyl_vector(10);
  CHECK(minkowski_dot(w26, w26) == Rational(0));
  CHECK(minkowski_dot(w10, w10) == Rational(-580));
  CHECK(minkowski_dot(w18, w18) != Rational(0));
  std::vector<Rational> null(26, Rational(0));
  null[0] = null[1] = Rational(1);
  CHECK(minkowski_dot(null, null) == Rational(0));
  CHECK(w26.str() == "(70,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24)");
  for (const auto& w : {w10, w18, w26}) CHECK(ii_member(w.coords()));
  std::vector<Rational> halves(26, Rational(1, 2));
  CHECK_FALSE(ii_member(halves));
  std::vector<Rational> mixed(10, Rational(0));
  mixed[0] = Rational(1, 2);
  CHECK_FALSE(ii_member(mixed));
  CHECK_THROWS_AS(ii_member(std::vector<Rational>(12, Rational(0))), Error);
  CHECK_THROWS_AS(weyl_vector(12), Error);

  auto random_member = [](std::size_t n) {
    std::vector<Rational> v(n);
    const bool half = testing_support::uniform(0, 1) == 1;
    BigInt doubled_sum = 0;
    for (std::size_t t = 0; t < n; ++t) {
      long d = 2 * testing_support::uniform(-5, 5) + (half ? 1 : 0);
      if (t + 1 == n) {
        // Fix the last coordinate so the doubled sum is divisible by 4.
        while ((doubled_sum + d) % 4 != 0) d += 2;
      }
      doubled_sum += d;
      v[t] = Rational(BigInt(d), BigInt(2));
    }
    return v;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = std::vector<std::size_t>{10, 18, 26}[trial % 3];
    const auto a = random_member(n), b = random_member(n);
    REQUIRE(ii_member(a));
    REQUIRE(ii_member(b));
    std::vector<Rational> s(n);
    for (std::size_t t = 0; t < n; ++t) s[t] = a[t] + b[t];
    REQUIRE(ii_member(s));
  }
}

TEST_CASE("fundamental roots") {
  // (0; 0, ..., 0, 1, -1) against w = (70, 0, 1, ..., 24): r.w = 23 - 24 = -1.
  std::vector<Rational> r(26, Rational(0));
  r[24] = Rational(1);
  r[25] = Rational(-1);
  CHECK(is_fundamental_root(r, 26));
  std::swap(r[24], r[25]);
  CHECK_FALSE(is_fundamental_root(r, 26));
  // Norm 1 vectors are not in II_{25,1}; even norm 4 vectors fail r.r == 2.
  std::vector<Rational> odd(26, Rational(0));
  odd[2] = Rational(1);
  CHECK_THROWS_AS(is_fundamental_root(odd, 26), Error);
  std::vector<Rational> four(26, Rational(0));
  four[2] = Rational(2);
  CHECK_FALSE(is_fundamental_root(four, 26));
  CHECK_FALSE(is_fundamental_root(weyl_vector(26), 26));
  // (0; 1, -1, 0, ..., 0) against (28, 0, 1, ..., 8): r.w = 0 - 1.
  std::vector<Rational> r10(10, Rational(0));
  r10[1] = Rational(1);
  r10[2] = Rational(-1);
  CHECK(is_fundamental_root(r10, 10));
}

TEST_CASE("Leech lattice from II_{25,1}") {
  const Lattice leech = leech_from_ii26();
  CHECK(leech.rank() == 24);
  CHECK(is_even(leech));
  CHECK(is_unimodular(leech));
  CHECK(short_vectors(leech, 2).empty());
  const auto counts = short_vectors(leech, 4);
  CHECK(counts == std::map<long, std::uint64_t>{{4, 196560}});
  CHECK(same_lattice(dual_lattice(leech), leech));
  const Lattice messy = leech.with_basis(scramble(leech.basis()));
  const Lattice red = lll_reduce(messy);
  CHECK(gram_determinant(red) == Rational(1));
  CHECK(short_vectors(red, 4) == counts);
}

TEST_CASE("E8 from icosians") {
  const auto coord = build_E8_from_icosians();
  CHECK(coord.lattice.rank() == 8);
  CHECK(coord.raw_minimal_norm == Rational(1, 2));
  CHECK(coord.scale == Rational(4));
  CHECK(coord.even_unimodular);
  CHECK(short_vectors(coord.lattice, 2).at(2) == 240);
  CHECK(theta_series(coord.lattice, 4) == theta_series(build_E8(), 4));
  const auto golden = build_E8_from_icosians(IcosianForm::kGoldenTrace);
  CHECK(golden.raw_minimal_norm == Rational(1));
  CHECK(golden.scale == Rational(2));
  CHECK(golden.even_unimodular);
  CHECK(theta_series(golden.lattice, 3) == theta_series(build_E8(), 3));
}

TEST_CASE("Leech lattice from icosian triples") {
  const Lattice ii = leech_from_ii26();
  const ThetaSeries reference = theta_series(ii, 2);
  for (auto cong : {IcosianCongruence::kRight, IcosianCongruence::kLeft}) {
    const auto r = leech_from_icosians(cong);
    CHECK(r.lattice.rank() == 24);
    CHECK(r.form == IcosianForm::kGoldenTrace);
    CHECK(r.scale == Rational(1));
    CHECK(r.even_unimodular);
    CHECK(theta_series(r.lattice, 2) == reference);
    CHECK(same_lattice(dual_lattice(r.lattice), r.lattice));
  }
  // Under the plain coordinate form the raw determinant is 2^-24 and no
  // single rescaling is even unimodular.
  const auto right = leech_from_icosians(IcosianCongruence::kRight, IcosianForm::kCoordinate);
  CHECK_FALSE(right.even_unimodular);
  CHECK(gram_determinant(right.raw) == Rational(BigInt(1), BigInt(1) << 24));
  CHECK(right.raw_minimal_norm == Rational(3, 2));
  const auto left = leech_from_icosians(IcosianCongruence::kLeft, IcosianForm::kCoordinate);
  CHECK_FALSE(left.even_unimodular);
  CHECK(left.raw_minimal_norm == Rational(1));
}

TEST_CASE("named lattices and the text format") {
  for (const char* name : {"A3", "D5", "Z4", "E6", "E7", "E8", "D16+", "3E8", "E8+D16+"}) {
    const Lattice l = named_lattice(name);
    const Lattice back = read_lattice_text(write_lattice_text(l));
    REQUIRE(back.gram() == l.gram());
    REQUIRE(same_lattice(back, l));
  }
  const Lattice g = read_lattice_text("2 2 gram\n2 -1\n-1 2\n");
  CHECK(short_vectors(g, 2).at(2) == 6);
  CHECK(read_lattice_text(write_lattice_text(g)).gram() == g.gram());
  const Lattice lor = read_lattice_text("1 2 lorentzian\n1 2\n");
  CHECK(lor.gram()(0, 0) == Rational(3));
  // A single null vector spans a degenerate lattice.
  CHECK_THROWS_AS(read_lattice_text("1 2 lorentzian\n1 1\n"), Error);
  CHECK_THROWS_AS(named_lattice("F4"), Error);
  CHECK_THROWS_AS(read_lattice_text("2 2 euclidean\n1 0\n"), Error);
  CHECK_THROWS_AS(read_lattice_text("1 2 euclidean\n1 x\n"), Error);
  CHECK_THROWS_AS(read_lattice_text("2 2 euclidean\n1 0\n2 0\n"), Error);
}

}  // TEST_SUITE
