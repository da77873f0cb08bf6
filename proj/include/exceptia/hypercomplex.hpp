#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exceptia/exactnum.hpp"
#include "exceptia/intmat.hpp"

namespace exceptia {

// A level-k Cayley-Dickson number: 2^k coordinates over the scalar field S
// (Rational or Golden). Coordinate t multiplies the basis element e_t, with
// e_0 = 1; level 2 uses (1, i, j, k) and level 3 the octonion units e_1..e_7.
template <class S>
class HyperNumber {
 public:
  HyperNumber() : HyperNumber(0) {}
  explicit HyperNumber(int level);
  HyperNumber(int level, std::vector<S> coords);

  static HyperNumber one(int level) { return basis(level, 0); }
  static HyperNumber basis(int level, std::size_t index, S coeff = S(1));

  int level() const { return level_; }
  std::size_t size() const { return coords_.size(); }
  std::span<const S> coords() const { return coords_; }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  S& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;

  HyperNumber& operator+=(const HyperNumber& o);
  HyperNumber& operator-=(const HyperNumber& o);
  HyperNumber operator-() const;
  HyperNumber scaled(const S& s) const;

  friend HyperNumber operator+(HyperNumber a, const HyperNumber& b) { return a += b; }
  friend HyperNumber operator-(HyperNumber a, const HyperNumber& b) { return a -= b; }
  friend bool operator==(const HyperNumber&, const HyperNumber&) = default;

  // Pair view: first and second halves as numbers one level down.
  HyperNumber first_half() const;
  HyperNumber second_half() const;
  static HyperNumber pair(const HyperNumber& a, const HyperNumber& b);

  std::string str() const;

 private:
  int level_ = 0;
  std::vector<S> coords_;
};

using RatHyper = HyperNumber<Rational>;
using GoldHyper = HyperNumber<Golden>;

// "1 + 2*e1 - 1/2*e4", "(e1,e4)" (a pair one level down), "(1 + sqrt5)*e2",
// "phi"; i, j, k name e1, e2, e3 at level >= 2.
GoldHyper parse_hyper(std::string_view text, int level);

// (a,b)(c,d) = (ac - d*b, da + bc*), scalar product at level 0.
template <class S>
HyperNumber<S> cd_mul(const HyperNumber<S>& x, const HyperNumber<S>& y);

// (a,b)* = (a*, -b).
template <class S>
HyperNumber<S> cd_conj(const HyperNumber<S>& x);

// Real part of x x*, i.e. the sum of squared coordinates.
template <class S>
S cd_norm(const HyperNumber<S>& x);

// x* / N(x); throws kDivisionByZero for zero norm.
template <class S>
HyperNumber<S> cd_inv(const HyperNumber<S>& x);

// --- Fano-plane octonions ----------------------------------------------------

struct FanoProduct {
  int index;  // 1..7, or 0 when i == j (e_i e_i = -1)
  int sign;   // +1 or -1
  friend bool operator==(const FanoProduct&, const FanoProduct&) = default;
};

// e_i e_j from the oriented lines {t, t+1, t+3} (mod 7) of the Fano plane.
FanoProduct fano_mul(int i, int j);

// Octonion product of level-3 numbers using the Fano table.
template <class S>
HyperNumber<S> fano_octonion_mul(const HyperNumber<S>& x, const HyperNumber<S>& y);

// b x c = (b a)(a* c), with Fano multiplication.
template <class S>
HyperNumber<S> xproduct(const HyperNumber<S>& a, const HyperNumber<S>& b,
                        const HyperNumber<S>& c);

// --- Permutations of {i, j, k} ----------------------------------------------

class PermutationIJK {
 public:
  // image[t] in {1,2,3} is where the t-th imaginary unit (i, j, k) goes.
  explicit PermutationIJK(std::array<int, 3> image);
  // Parses "ijk"-style image strings, e.g. "jki" sends i->j, j->k, k->i.
  static PermutationIJK parse(std::string_view images);
  static std::array<PermutationIJK, 6> all();

  const std::array<int, 3>& image() const { return image_; }
  bool is_even() const { return even_; }
  std::string str() const;

 private:
  std::array<int, 3> image_;
  bool even_;
};

template <class S>
HyperNumber<S> ijk_permute(const PermutationIJK& p, const HyperNumber<S>& q);

// All four coordinates integral or all four in Z + 1/2.
bool hurwitz_contains(const RatHyper& q);

// The 24 Hurwitz units, generated independently of the icosian closure.
std::vector<RatHyper> hurwitz_units();

// --- Icosians ----------------------------------------------------------------

struct IcosianElement {
  GoldHyper q;                        // quaternion over Q(sqrt5)
  std::array<BigInt, 8> certificate;  // coordinates in icosian_ring_basis()
};

// The binary icosahedral group as the multiplicative closure of
// {i, j, (phi^-1 + i + phi j)/2}; computed once, 120 elements.
const std::vector<IcosianElement>& icosian_units();

// Z-basis of the icosian ring (rank 8) obtained by Hermite reduction of the
// images of the 120 units.
const std::vector<GoldHyper>& icosian_ring_basis();

// Membership test: returns the element with its certificate, if q is an icosian.
std::optional<IcosianElement> icosian_from(const GoldHyper& q);

// (a + sqrt5 b) + (c + sqrt5 d) i + ... -> (a, b, c, d, e, f, g, h).
std::array<Rational, 8> icosian_to_r8(const GoldHyper& q);
GoldHyper icosian_from_r8(std::span<const Rational> x);
inline std::array<Rational, 8> icosian_to_r8(const IcosianElement& e) {
  return icosian_to_r8(e.q);
}

}  // namespace exceptia
