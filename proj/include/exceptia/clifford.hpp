#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "exceptia/exactnum.hpp"

namespace exceptia {

// C_{p,q}: the first p generators square to -1, the remaining q to +1.
struct CliffordSignature {
  int p = 0;
  int q = 0;
  int dim() const { return p + q; }
  friend bool operator==(const CliffordSignature&, const CliffordSignature&) = default;
};

// Multivector with exact coefficients, keyed by blade bitmask (bit t set means
// generator e_{t+1} is present, in ascending order).
class CliffordElement {
 public:
  static constexpr int kMaxGenerators = 24;

  explicit CliffordElement(CliffordSignature sig);
  static CliffordElement scalar(CliffordSignature sig, Rational c);
  static CliffordElement blade(CliffordSignature sig, std::uint32_t mask, Rational c = Rational(1));
  static CliffordElement generator(CliffordSignature sig, int index);  // 1-based

  const CliffordSignature& signature() const { return sig_; }
  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
  Rational coefficient(std::uint32_t mask) const;

  void add_term(std::uint32_t mask, const Rational& c);
  CliffordElement& operator+=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  std::string str() const;

 private:
  CliffordSignature sig_;
  std::map<std::uint32_t, Rational> terms_;
};

// "2*e1e2 - e3 + 1/2"; generators may appear in any order.
CliffordElement parse_clifford(CliffordSignature sig, std::string_view text);

// Product of two basis blades: sign * blade(a ^ b).
int blade_product_sign(CliffordSignature sig, std::uint32_t a, std::uint32_t b);

CliffordElement clif_mul(const CliffordElement& x, const CliffordElement& y);
CliffordElement clif_reverse(const CliffordElement& x);

// (e_1 ... e_n)^2 = +1 or -1 in C_{p,q}.
int gamma_square(CliffordSignature sig);

enum class DivisionRing { kR, kC, kH };

int real_dim(DivisionRing r);
std::string ring_name(DivisionRing r);

// summands copies of ring(size), e.g. H(2)+H(2) is {kH, 2, 2}.
struct MatrixAlgebraClass {
  DivisionRing ring;
  std::uint64_t size;
  int summands;
  friend bool operator==(const MatrixAlgebraClass&, const MatrixAlgebraClass&) = default;
  std::string str() const;
  // Real dimension of the smallest nonzero real representation.
  std::uint64_t smallest_real_rep() const { return size * static_cast<std::uint64_t>(real_dim(ring)); }
};

MatrixAlgebraClass classify(CliffordSignature sig);

// classify(p+8, q) is classify(p, q) with matrix size multiplied by 16.
bool periodicity_check(CliffordSignature sig);

enum class SpinorKind { kDirac, kMajorana, kWeyl, kMajoranaWeyl };

std::string spinor_kind_name(SpinorKind k);

struct SpinorProfile {
  int n = 0;
  std::uint64_t dirac_complex_dim = 0;
  bool majorana = false;
  bool weyl = false;
  bool majorana_weyl = false;
  std::uint64_t minimal_real_components = 0;
  // Smallest real representations of C_{n-1,1} and C_{1,n-1}.
  std::uint64_t real_rep_cn1 = 0;
  std::uint64_t real_rep_c1n = 0;

  // (kind, real component count) for every kind that exists in dimension n.
  std::vector<std::pair<SpinorKind, std::uint64_t>> admissible() const;
};

SpinorProfile spinor_taxonomy(int n);

// Dimensions n in [lo, hi] admitting a spinor with exactly 2(n-2) real components.
std::set<int> super_ym_dims(int lo, int hi);

}  // namespace exceptia
