#include "exceptia/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace exceptia {

// --- BBP -----------------------------------------------------------------------

namespace {

using u128 = unsigned __int128;

constexpr int kChunkDigits = 8;
constexpr int kFracBits = 4 * (kChunkDigits + kBbpGuardHexDigits);  // 80
constexpr u128 kFracMask = (u128{1} << kFracBits) - 1;

// frac(sum_n 16^(d-n) / (8n+k)) as a fixed-point fraction of kFracBits bits.
u128 bbp_series(std::uint64_t d, std::uint64_t k) {
  u128 acc = 0;
  for (std::uint64_t n = 0; n <= d; ++n) {
    const std::uint64_t m = 8 * n + k;
    const std::uint64_t r = mod_pow(16, d - n, m);
    acc = (acc + (static_cast<u128>(r) << kFracBits) / m) & kFracMask;
  }
  for (std::uint64_t j = 1; 4 * static_cast<int>(j) < kFracBits; ++j) {
    const std::uint64_t m = 8 * (d + j) + k;
    acc = (acc + (u128{1} << (kFracBits - 4 * static_cast<int>(j))) / m) & kFracMask;
  }
  return acc;
}

}  // namespace

std::string bbp_pi_hex(std::uint64_t start, std::uint64_t count) {
  require(start >= 1 && count >= 1, ErrorCode::kDomain, "BBP positions start at 1 and count must be >= 1");
  require(start - 1 + count <= kBbpPositionLimit && count <= kBbpPositionLimit, ErrorCode::kDomain,
          "BBP position beyond the supported limit of 10^6");
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(count);
  for (std::uint64_t done = 0; done < count; done += kChunkDigits) {
    const std::uint64_t d = start - 1 + done;
    const u128 s1 = bbp_series(d, 1), s4 = bbp_series(d, 4), s5 = bbp_series(d, 5), s6 = bbp_series(d, 6);
    const u128 x = (4 * s1 - 2 * s4 - s5 - s6) & kFracMask;
    const std::uint64_t take = std::min<std::uint64_t>(kChunkDigits, count - done);
    for (std::uint64_t i = 0; i < take; ++i) {
      const int shift = kFracBits - 4 * static_cast<int>(i + 1);
      out += kHex[static_cast<unsigned>((x >> shift) & 0xF)];
    }
  }
  return out;
}

// --- Square pyramids -----------------------------------------------------------

BigInt square_pyramid(const BigInt& n) {
  require(n >= 0, ErrorCode::kDomain, "square pyramid needs n >= 0");
  return n * (n + 1) * (2 * n + 1) / 6;
}

std::vector<std::uint64_t> cannonball_search(std::uint64_t limit) {
  require(limit >= 1, ErrorCode::kDomain, "cannonball search needs limit >= 1");
  std::vector<std::uint64_t> out;
  BigInt sum = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const BigInt bn(static_cast<unsigned long>(n));
    sum += bn * bn;
    const BigInt r = isqrt(sum);
    if (r * r == sum) out.push_back(n);
  }
  return out;
}

// --- Area spectrum -------------------------------------------------------------

SpinList SpinList::parse(const std::string& text) {
  SpinList out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    for (char& c : tok)
      if (c == ',') c = ' ';
    std::istringstream inner(tok);
    std::string piece;
    while (inner >> piece) {
      const Rational twice = Rational::parse(piece) * Rational(2);
      require(twice.is_integer() && twice.sign() >= 0, ErrorCode::kDomain,
              "spins must be nonnegative half-integers");
      require(twice.num().fits_ulong_p(), ErrorCode::kDomain, "spin too large");
      out.twice_spins.push_back(twice.num().get_ui());
    }
  }
  return out;
}

namespace {

constexpr std::uint64_t kMaxTwiceSpin = std::uint64_t{1} << 32;

// Multiplies the prime factorization of x into exps.
void factor_into(std::uint64_t x, std::map<std::uint64_t, int>& exps) {
  for (std::uint64_t p = 2; p * p <= x; ++p)
    while (x % p == 0) {
      ++exps[p];
      x /= p;
    }
  if (x > 1) ++exps[x];
}

// sqrt(t(t+2)) = outside * sqrt(inside) with inside squarefree.
std::pair<BigInt, BigInt> sqrt_parts(std::uint64_t t) {
  std::map<std::uint64_t, int> exps;
  factor_into(t, exps);
  factor_into(t + 2, exps);
  BigInt outside = 1, inside = 1;
  for (const auto& [p, e] : exps) {
    const BigInt bp(static_cast<unsigned long>(p));
    for (int i = 0; i < e / 2; ++i) outside *= bp;
    if (e % 2) inside *= bp;
  }
  return {outside, inside};
}

}  // namespace

SpinArea spin_area(const SpinList& spins) {
  SpinArea a;
  for (std::uint64_t t : spins.twice_spins) {
    require(t <= kMaxTwiceSpin, ErrorCode::kDomain, "spin too large");
    if (t != 0) ++a.multiplicity[t];
  }
  long double sum = 0;
  for (const auto& [t, m] : a.multiplicity) {
    const long double lt = static_cast<long double>(t);
    sum += static_cast<long double>(m) * std::sqrt(lt * (lt + 2)) / 2;
  }
  a.approx = static_cast<double>(sum);
  return a;
}

std::string SpinArea::str() const {
  if (multiplicity.empty()) return "0";
  std::string out;
  for (const auto& [t, m] : multiplicity) {
    auto [outside, inside] = sqrt_parts(t);
    const Rational c = Rational(outside * BigInt(static_cast<unsigned long>(m)), BigInt(2));
    std::string root = "sqrt(" + to_string(inside) + ")";
    std::string term;
    if (c.num() != 1) term = to_string(c.num()) + "*";
    term += root;
    if (c.den() != 1) term += "/" + to_string(c.den());
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

// --- Linking number ------------------------------------------------------------

namespace {

using Vec3 = std::array<BigInt, 3>;
using Vec2 = std::array<BigInt, 2>;

Vec3 to_vec(const Point3& p) { return {BigInt(p[0]), BigInt(p[1]), BigInt(p[2])}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
BigInt dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
bool is_zero(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }
BigInt cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
Vec2 sub2(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
int sgn(const BigInt& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

bool in_box(const Vec2& p, const Vec2& q, const Vec2& r) {
  // r on the segment pq given collinearity
  for (int i = 0; i < 2; ++i)
    if (r[i] < std::min(p[i], q[i]) || r[i] > std::max(p[i], q[i])) return false;
  return true;
}

bool segments_meet_2d(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  const int o1 = sgn(cross2(sub2(p2, p1), sub2(q1, p1)));
  const int o2 = sgn(cross2(sub2(p2, p1), sub2(q2, p1)));
  const int o3 = sgn(cross2(sub2(q2, q1), sub2(p1, q1)));
  const int o4 = sgn(cross2(sub2(q2, q1), sub2(p2, q1)));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && in_box(p1, p2, q1)) return true;
  if (o2 == 0 && in_box(p1, p2, q2)) return true;
  if (o3 == 0 && in_box(q1, q2, p1)) return true;
  if (o4 == 0 && in_box(q1, q2, p2)) return true;
  return false;
}

bool segments_meet_3d(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2) {
  const Vec3 a = sub(p2, p1), b = sub(q1, p1), c = sub(q2, p1);
  if (dot(a, cross(b, c)) != 0) return false;
  Vec3 n = cross(a, b);
  if (is_zero(n)) n = cross(a, c);
  if (is_zero(n)) {
    // All four points on one line: compare parameter intervals along a.
    const BigInt len = dot(a, a);
    const BigInt t1 = dot(b, a), t2 = dot(c, a);
    return std::max(t1, t2) >= 0 && std::min(t1, t2) <= len;
  }
  // Drop a coordinate along which the plane projects injectively.
  const int k = n[0] != 0 ? 0 : n[1] != 0 ? 1 : 2;
  auto drop = [k](const Vec3& v) { return Vec2{v[(k + 1) % 3], v[(k + 2) % 3]}; };
  return segments_meet_2d(drop(p1), drop(p2), drop(q1), drop(q2));
}

std::vector<Vec3> vertices_of(const PolyLoop& l) {
  std::vector<Vec3> out;
  for (const auto& p : l.vertices) out.push_back(to_vec(p));
  return out;
}

enum class PairOutcome { kNone, kCrossing, kDegenerate };

}  // namespace

void validate_loop(const PolyLoop& loop) {
  require(loop.vertices.size() >= 3, ErrorCode::kDomain, "a loop needs at least 3 vertices");
  for (const auto& p : loop.vertices)
    for (long c : p)
      require(c > -kLoopCoordinateLimit && c < kLoopCoordinateLimit, ErrorCode::kDomain,
              "loop coordinate out of range");
  for (std::size_t i = 0; i < loop.vertices.size(); ++i)
    require(loop.vertices[i] != loop.vertices[(i + 1) % loop.vertices.size()], ErrorCode::kDomain,
            "consecutive loop vertices coincide");
}

PolyLoop reversed(const PolyLoop& loop) {
  PolyLoop r = loop;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

bool loops_intersect(const PolyLoop& g, const PolyLoop& h) {
  validate_loop(g);
  validate_loop(h);
  const auto gv = vertices_of(g), hv = vertices_of(h);
  for (std::size_t i = 0; i < gv.size(); ++i)
    for (std::size_t j = 0; j < hv.size(); ++j)
      if (segments_meet_3d(gv[i], gv[(i + 1) % gv.size()], hv[j], hv[(j + 1) % hv.size()])) return true;
  return false;
}

int linking_number(const PolyLoop& g, const PolyLoop& h) {
  require(!loops_intersect(g, h), ErrorCode::kDomain, "loops intersect");
  const auto gv = vertices_of(g), hv = vertices_of(h);
  const std::size_t ng = gv.size(), nh = hv.size();
  // Directions on the curve (1, m, m^2) meet any plane through the origin at
  // most twice, and every degeneracy confines the direction to a plane.
  const std::size_t conditions = ng * nh * 3 + ng + nh;
  const std::size_t max_tries = std::min<std::size_t>(2 * conditions + 3, 200000);
  for (std::size_t m = 1; m <= max_tries; ++m) {
    const BigInt bm(static_cast<unsigned long>(m));
    const Vec3 d = {BigInt(1), bm, bm * bm};
    const Vec3 u = cross(d, Vec3{BigInt(1), BigInt(0), BigInt(0)});
    const Vec3 v = cross(d, u);
    auto proj = [&](const Vec3& x) { return Vec2{dot(x, u), dot(x, v)}; };
    std::vector<Vec2> gp, hp;
    for (const auto& x : gv) gp.push_back(proj(x));
    for (const auto& x : hv) hp.push_back(proj(x));

    bool degenerate = false;
    int total = 0;
    for (std::size_t i = 0; i < ng && !degenerate; ++i) {
      const Vec2 &a = gp[i], &b = gp[(i + 1) % ng];
      if (a == b) { degenerate = true; break; }
      for (std::size_t j = 0; j < nh; ++j) {
        const Vec2 &c = hp[j], &e = hp[(j + 1) % nh];
        if (c == e) { degenerate = true; break; }
        const Vec2 ab = sub2(b, a), ce = sub2(e, c), ac = sub2(c, a);
        BigInt den = cross2(ab, ce);
        if (den == 0) {
          if (cross2(ac, ab) == 0 && segments_meet_2d(a, b, c, e)) { degenerate = true; break; }
          continue;
        }
        BigInt s = cross2(ac, ce), t = cross2(ac, ab);
        const int orient = sgn(den);
        if (den < 0) { den = -den; s = -s; t = -t; }
        if (s < 0 || s > den || t < 0 || t > den) continue;
        if (s == 0 || s == den || t == 0 || t == den) { degenerate = true; break; }
        // Heights along d, both scaled by den.
        const Vec3& A = gv[i];
        const Vec3& C = hv[j];
        const BigInt hg = den * dot(A, d) + s * dot(sub(gv[(i + 1) % ng], A), d);
        const BigInt hh = den * dot(C, d) + t * dot(sub(hv[(j + 1) % nh], C), d);
        require(hg != hh, ErrorCode::kInternal, "projection crossing at equal height on disjoint loops");
        if (hg > hh) total += orient;
      }
    }
    if (!degenerate) return total;
  }
  fail(ErrorCode::kDomain, "no generic projection direction found");
}

std::pair<PolyLoop, PolyLoop> parse_loop_pair(const std::string& text) {
  std::vector<PolyLoop> loops(1);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (!loops.back().vertices.empty()) loops.emplace_back();
      continue;
    }
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    Point3 p{};
    std::string extra;
    if (!(ls >> p[0] >> p[1] >> p[2]) || (ls >> extra))
      fail(ErrorCode::kParse, "expected three integers per line: " + line);
    loops.back().vertices.push_back(p);
  }
  if (loops.back().vertices.empty()) loops.pop_back();
  require(loops.size() == 2, ErrorCode::kParse, "expected two blank-line separated loops");
  return {loops[0], loops[1]};
}

}  // namespace exceptia
