#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exceptia/exactnum.hpp"
#include "exceptia/intmat.hpp"

namespace exceptia {

enum class Signature {
  kEuclidean,   // positive definite ambient metric (standard dot unless a metric is given)
  kLorentzian,  // diag(-1, +1, ..., +1), first coordinate timelike
};

// A Z-lattice given by basis rows in an ambient Q-space with a symmetric
// bilinear form. Lattices without a natural coordinate embedding (quotients,
// rescalings by non-squares) carry an explicit Euclidean metric matrix.
class Lattice {
 public:
  Lattice(RatMatrix basis, Signature sig);
  Lattice(RatMatrix basis, RatMatrix metric);
  // Abstract lattice with basis I and the given Gram matrix as metric.
  static Lattice from_gram(RatMatrix gram);

  std::size_t rank() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }
  Signature signature() const { return sig_; }
  bool has_standard_metric() const { return !metric_.has_value(); }
  // The ambient form: explicit metric, identity, or diag(-1,1,...,1).
  RatMatrix metric() const;
  const RatMatrix& gram() const { return gram_; }

  Rational inner(std::span<const Rational> a, std::span<const Rational> b) const;
  // Same ambient space and form, different basis rows.
  Lattice with_basis(RatMatrix basis) const;
  // Multiplies the form by s > 0 (basis rows are scaled instead when s is a square).
  Lattice rescaled(const Rational& s) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  RatMatrix basis_;
  Signature sig_;
  std::optional<RatMatrix> metric_;
  RatMatrix gram_;
};

// --- Named constructions -----------------------------------------------------

Lattice build_Zn(int n);
Lattice build_An(int n);
Lattice build_Dn(int n);
// All-integer or all-half-integer vectors with even coordinate sum in R^n (n even).
Lattice build_even_sum_half_integer(int n, Signature sig);
Lattice build_E8();
Lattice build_D16plus();
Lattice build_E7(const Lattice& e8);
Lattice build_E6(const Lattice& e8);
Lattice direct_sum(const Lattice& a, const Lattice& b);

// --- Predicates and invariants ----------------------------------------------

bool is_integral(const Lattice& l);
bool is_even(const Lattice& l);
bool is_unimodular(const Lattice& l);
bool is_positive_definite(const RatMatrix& gram);
Rational gram_determinant(const Lattice& l);

// Ambient vector membership (exact).
bool contains(const Lattice& l, std::span<const Rational> x);
// Equal as point sets: each basis is an integer combination of the other.
bool same_lattice(const Lattice& a, const Lattice& b);

Lattice dual_lattice(const Lattice& l);

// --- Reduction and enumeration ----------------------------------------------

struct LllResult {
  Lattice lattice;
  IntMatrix transform;  // unimodular; new basis = transform * old basis
};

Rational default_lll_delta();  // 99/100
LllResult lll_reduce_with_transform(const Lattice& l, const Rational& delta = default_lll_delta());
Lattice lll_reduce(const Lattice& l, const Rational& delta = default_lll_delta());
// Lovasz and size-reduction conditions on the current basis.
bool is_lll_reduced(const Lattice& l, const Rational& delta = default_lll_delta());

// Number of worker threads used by enumeration: EXCEPTIA_THREADS if set,
// otherwise the hardware concurrency.
unsigned enumeration_threads();

// Counts of nonzero vectors by norm x.x <= max_norm. Requires a Euclidean
// lattice with integral Gram. Deterministic for any thread count.
std::map<long, std::uint64_t> short_vectors(const Lattice& l, long max_norm,
                                            unsigned threads = 0);

// Calls visit(coefficients, norm) for every nonzero vector with norm <= max_norm,
// in a deterministic order. Coefficients are relative to l.basis().
void for_each_short_vector(const Lattice& l, long max_norm,
                           const std::function<void(std::span<const long>, long)>& visit);

// Smallest nonzero norm; works for rational Gram matrices.
Rational minimal_norm(const Lattice& l);

struct ThetaSeries {
  int order = 0;
  std::vector<BigInt> counts;  // counts[m] = #{x : x.x = 2m}
  friend bool operator==(const ThetaSeries&, const ThetaSeries&) = default;
};

// Requires an even Euclidean lattice. Orthogonal blocks of the Gram matrix
// are enumerated separately and combined by series multiplication.
ThetaSeries theta_series(const Lattice& l, int order, unsigned threads = 0);
// Full enumeration without block splitting.
ThetaSeries theta_series_direct(const Lattice& l, int order, unsigned threads = 0);
ThetaSeries theta_product(const ThetaSeries& a, const ThetaSeries& b);

// --- Lorentzian lattices II_{8k+1,1} -----------------------------------------

// A vector of II_{d-1,1}: coordinates all in Z or all in Z+1/2 with even sum,
// stored as doubled integers.
class LorentzianVector {
 public:
  static LorentzianVector from_coords(std::span<const Rational> x);
  static LorentzianVector from_doubled(std::vector<BigInt> doubled);

  std::size_t dim() const { return doubled_.size(); }
  const std::vector<BigInt>& doubled() const { return doubled_; }
  std::vector<Rational> coords() const;
  bool half_integral() const;
  std::string str() const;

 private:
  explicit LorentzianVector(std::vector<BigInt> d) : doubled_(std::move(d)) {}
  std::vector<BigInt> doubled_;
};

Rational minkowski_dot(std::span<const Rational> u, std::span<const Rational> v);
Rational minkowski_dot(const LorentzianVector& u, const LorentzianVector& v);

// Membership in II_{8k+1,1} for lengths 10, 18, 26.
bool ii_member(std::span<const Rational> v);

// (28,0,1,...,8), (46,0,1,...,16), (70,0,1,...,24).
LorentzianVector weyl_vector(int dim);

// r.r == 2 and r.w == -1 against weyl_vector(dim).
bool is_fundamental_root(const LorentzianVector& r, int dim);
// Throws kDomain when r is not in II of that dimension.
bool is_fundamental_root(std::span<const Rational> r, int dim);

// --- Leech lattice -----------------------------------------------------------

// w-perp / Zw inside II_{25,1} for the lightlike Weyl vector w, as an abstract
// rank-24 lattice with integer Gram (LLL-reduced).
Lattice leech_from_ii26();

enum class IcosianCongruence { kRight, kLeft };  // u - v in I*h, or in h*I

// How R^8 coordinates (a, b, ...) of a + sqrt5 b + ... are paired: the plain
// dot product, or the rational part plus the sqrt5 part of the quaternion
// inner product (per coordinate a a' + 5 b b' + a b' + b a').
enum class IcosianForm { kCoordinate, kGoldenTrace };

struct IcosianLatticeResult {
  Lattice raw;                  // plain coordinate form of icosian_to_r8 copies
  Lattice lattice;              // raw rescaled so the minimal norm is the target
  Rational scale;               // metric multiplier raw -> lattice
  Rational raw_minimal_norm;
  bool even_unimodular = false; // of the rescaled lattice
  IcosianCongruence congruence = IcosianCongruence::kRight;
  IcosianForm form = IcosianForm::kCoordinate;
};

// Z-span of the 120 unit icosians in R^8, rescaled to minimal norm 2.
IcosianLatticeResult build_E8_from_icosians(IcosianForm form = IcosianForm::kCoordinate);

// Triples (x,y,z) of icosians with x = y = z mod h and x+y+z = 0 mod h*,
// h = (-sqrt5 + i + j + k)/2, rescaled to minimal norm 4. Under the plain
// coordinate form no rescaling is even unimodular (raw det 2^-24), so the
// golden trace form is the default here.
IcosianLatticeResult leech_from_icosians(IcosianCongruence congruence = IcosianCongruence::kRight,
                                         IcosianForm form = IcosianForm::kGoldenTrace);

// --- Names and text format ---------------------------------------------------

// A<n>, D<n>, Z<n>, E6, E7, E8, D16+, 3E8, E8+D16+, LeechII, LeechIcosian.
Lattice named_lattice(const std::string& name);

// First line "rank ambient signature" (euclidean | lorentzian | gram), then
// one row per line of p/q entries: basis rows, or Gram rows for "gram".
std::string write_lattice_text(const Lattice& l);
Lattice read_lattice_text(const std::string& text);

}  // namespace exceptia
