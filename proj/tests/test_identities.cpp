#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "exceptia/identities.hpp"

using namespace exceptia;
using oracle::exact_pi_hex;

namespace {

PolyLoop square_xy(long cx, long cy, long z) {
  return {{{cx - 1, cy - 1, z}, {cx + 1, cy - 1, z}, {cx + 1, cy + 1, z}, {cx - 1, cy + 1, z}}};
}

PolyLoop translated(const PolyLoop& l, long dx, long dy, long dz) {
  PolyLoop out = l;
  for (auto& v : out.vertices) {
    v[0] += dx;
    v[1] += dy;
    v[2] += dz;
  }
  return out;
}

PolyLoop random_loop() {
  PolyLoop l;
  const long n = testing_support::uniform(3, 6);
  for (long t = 0; t < n; ++t)
    l.vertices.push_back({testing_support::uniform(-3, 3), testing_support::uniform(-3, 3), testing_support::uniform(-3, 3)});
  return l;
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("BBP digits against an exact rational series") {
  const std::string oracle = exact_pi_hex(40, 40);
  CHECK(oracle.substr(0, 10) == "243F6A8885");
  CHECK(bbp_pi_hex(1, 6) == "243F6A");
  CHECK(bbp_pi_hex(1, 10) == "243F6A8885");
  CHECK(bbp_pi_hex(1, 40) == oracle);
  const std::string first = bbp_pi_hex(1, 64);
  for (std::uint64_t k = 1; k <= 64; ++k) REQUIRE(bbp_pi_hex(k, 1)[0] == first[k - 1]);
  CHECK(bbp_pi_hex(29, 11) == first.substr(28, 11));
  CHECK_THROWS_AS(bbp_pi_hex(0, 1), Error);
  CHECK_THROWS_AS(bbp_pi_hex(kBbpPositionLimit, 2), Error);
}

TEST_CASE("square pyramids") {
  CHECK(square_pyramid(24) == 4900);
  CHECK(square_pyramid(24) == 70 * 70);
  CHECK(square_pyramid(0) == 0);
  CHECK(square_pyramid(3) == 14);
  for (long n = 1; n <= 1000; ++n) REQUIRE(square_pyramid(n) - square_pyramid(n - 1) == BigInt(n * n));
  CHECK_THROWS_AS(square_pyramid(-1), Error);
}

TEST_CASE("cannonball search") {
  CHECK(cannonball_search(100000) == std::vector<std::uint64_t>{1, 24});
  CHECK(cannonball_search(1) == std::vector<std::uint64_t>{1});
  CHECK(cannonball_search(23) == std::vector<std::uint64_t>{1});
}

TEST_CASE("spin network areas") {
  CHECK(spin_area(SpinList::parse("")).str() == "0");
  CHECK(spin_area(SpinList::parse("")).approx == 0);
  const SpinArea half = spin_area(SpinList::parse("1/2"));
  CHECK(half.str() == "sqrt(3)/2");
  CHECK(std::abs(half.approx - std::sqrt(3.0) / 2) < 1e-12);
  const SpinArea ones = spin_area(SpinList::parse("1 1"));
  CHECK(ones.str() == "2*sqrt(2)");
  CHECK(std::abs(ones.approx - 2 * std::sqrt(2.0)) < 1e-12);
  CHECK(spin_area(SpinList::parse("0 2")).str() == "sqrt(6)");
  CHECK(spin_area(SpinList::parse("1/2 1 1 3/2")).str() == "sqrt(3)/2 + 2*sqrt(2) + sqrt(15)/2");
  // Additive over unions, increasing in each spin.
  const SpinArea a = spin_area(SpinList::parse("1/2 3")), b = spin_area(SpinList::parse("1 5/2"));
  const SpinArea ab = spin_area(SpinList::parse("1/2 3 1 5/2"));
  CHECK(std::abs(ab.approx - (a.approx + b.approx)) < 1e-12);
  for (const auto& [k, m] : a.multiplicity) CHECK(ab.multiplicity.at(k) >= m);
  double last = -1;
  for (int twice = 0; twice <= 40; ++twice) {
    const double v = spin_area(SpinList{{static_cast<std::uint64_t>(twice)}}).approx;
    REQUIRE(v > last);
    last = v;
  }
  CHECK_THROWS_AS(SpinList::parse("1/3"), Error);
  CHECK_THROWS_AS(SpinList::parse("-1"), Error);
}

TEST_CASE("linking numbers") {
  const PolyLoop g = square_xy(0, 0, 0);
  // g runs counterclockwise seen from +z. The edge (0,0,1) -> (0,0,-1) of h
  // passes downward through the inside of g and the edge at x = 2 misses it,
  // so h crosses the disk of g once against its normal: L = -1.
  const PolyLoop h{{{0, 0, -1}, {2, 0, -1}, {2, 0, 1}, {0, 0, 1}}};
  CHECK(linking_number(g, h) == -1);
  CHECK(linking_number(h, g) == -1);
  CHECK(linking_number(g, reversed(h)) == 1);
  CHECK(linking_number(reversed(g), reversed(h)) == -1);
  // Parallel planes, laterally separated.
  CHECK(linking_number(square_xy(0, 0, 0), square_xy(10, 0, 5)) == 0);
  // Stacked squares: unlinked even though the projections overlap.
  CHECK(linking_number(square_xy(0, 0, 0), square_xy(0, 0, 5)) == 0);
  // Touching loops are rejected.
  const PolyLoop touching{{{1, 0, -1}, {3, 0, -1}, {3, 0, 1}, {1, 0, 1}}};
  CHECK(loops_intersect(g, touching));
  CHECK_THROWS_AS(linking_number(g, touching), Error);
  CHECK_THROWS_AS(validate_loop(PolyLoop{{{0, 0, 0}, {1, 0, 0}}}), Error);
  CHECK_THROWS_AS(validate_loop(PolyLoop{{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}}), Error);
}

TEST_CASE("linking number symmetries on random loops") {
  int tested = 0, linked = 0;
  while (tested < 50) {
    const PolyLoop a = random_loop(), b = random_loop();
    try {
      validate_loop(a);
      validate_loop(b);
    } catch (const Error&) {
      continue;
    }
    if (loops_intersect(a, b)) continue;
    const int l = linking_number(a, b);
    REQUIRE(linking_number(b, a) == l);
    REQUIRE(linking_number(a, reversed(b)) == -l);
    REQUIRE(linking_number(reversed(a), b) == -l);
    const long dx = testing_support::uniform(-20, 20), dy = testing_support::uniform(-20, 20);
    const long dz = testing_support::uniform(-20, 20);
    REQUIRE(linking_number(translated(a, dx, dy, dz), translated(b, dx, dy, dz)) == l);
    // Moving b far away unlinks it.
    REQUIRE(linking_number(a, translated(b, 100, 0, 0)) == 0);
    linked += l != 0 ? 1 : 0;
    ++tested;
  }
  MESSAGE("linked pairs among 50: " << linked);
}

TEST_CASE("loop pair text") {
  const auto [g, h] = parse_loop_pair("# hopf\n-1 -1 0\n1 -1 0\n1 1 0\n-1 1 0\n\n0 0 -1\n2 0 -1\n2 0 1\n0 0 1\n");
  CHECK(g.vertices.size() == 4);
  CHECK(h.vertices.size() == 4);
  CHECK(linking_number(g, h) == -1);
  CHECK_THROWS_AS(parse_loop_pair("0 0 0\n1 0 0\n0 1 0\n"), Error);
  CHECK_THROWS_AS(parse_loop_pair("0 0 0\n1 0 x\n0 1 0\n\n5 5 5\n6 5 5\n5 6 5\n"), Error);
}

}  // TEST_SUITE
