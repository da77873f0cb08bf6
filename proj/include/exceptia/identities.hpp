#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exceptia/exactnum.hpp"

namespace exceptia {

// --- pi in base 16 -------------------------------------------------------------

constexpr std::uint64_t kBbpPositionLimit = 1000000;
constexpr int kBbpGuardHexDigits = 12;

// Hex digits of frac(pi) at positions start .. start+count-1 (position 1 is
// the first digit after the point), uppercase.
std::string bbp_pi_hex(std::uint64_t start, std::uint64_t count);

// --- Square pyramids -----------------------------------------------------------

BigInt square_pyramid(const BigInt& n);
// All 1 <= n <= limit whose square pyramid number is a perfect square.
std::vector<std::uint64_t> cannonball_search(std::uint64_t limit);

// --- Area spectrum -------------------------------------------------------------

// Spins given as 2j.
struct SpinList {
  std::vector<std::uint64_t> twice_spins;
  static SpinList parse(const std::string& text);  // "1/2 1 3/2"
};

struct SpinArea {
  std::map<std::uint64_t, std::uint64_t> multiplicity;  // 2j -> count, j > 0 only
  double approx = 0;                                    // Planck-area units
  std::string str() const;  // "2*sqrt(2) + sqrt(3)/2", "0" when empty
};

SpinArea spin_area(const SpinList& spins);

// --- Linking number ------------------------------------------------------------

using Point3 = std::array<long, 3>;

struct PolyLoop {
  std::vector<Point3> vertices;  // closed: the last vertex connects to the first
};

constexpr long kLoopCoordinateLimit = 1L << 40;

void validate_loop(const PolyLoop& loop);
PolyLoop reversed(const PolyLoop& loop);
bool loops_intersect(const PolyLoop& g, const PolyLoop& h);
int linking_number(const PolyLoop& g, const PolyLoop& h);

// Two blocks of "x y z" lines separated by a blank line.
std::pair<PolyLoop, PolyLoop> parse_loop_pair(const std::string& text);

}  // namespace exceptia
