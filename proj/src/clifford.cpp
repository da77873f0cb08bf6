#include "exceptia/clifford.hpp"

#include <bit>

namespace exceptia {

namespace {

void check_signature(CliffordSignature sig) {
  require(sig.p >= 0 && sig.q >= 0, ErrorCode::kDomain, "signature counts must be nonnegative");
  require(sig.dim() <= CliffordElement::kMaxGenerators, ErrorCode::kDomain,
          "Clifford elements support at most 24 generators");
}

constexpr int kMaxClassifyDim = 120;

}  // namespace

CliffordElement::CliffordElement(CliffordSignature sig) : sig_(sig) { check_signature(sig); }

CliffordElement CliffordElement::scalar(CliffordSignature sig, Rational c) {
  return blade(sig, 0, std::move(c));
}

CliffordElement CliffordElement::blade(CliffordSignature sig, std::uint32_t mask, Rational c) {
  CliffordElement e(sig);
  e.add_term(mask, c);
  return e;
}

CliffordElement CliffordElement::generator(CliffordSignature sig, int index) {
  require(index >= 1 && index <= sig.dim(), ErrorCode::kDomain, "generator index out of range");
  return blade(sig, std::uint32_t{1} << static_cast<unsigned>(index - 1));
}

Rational CliffordElement::coefficient(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CliffordElement::add_term(std::uint32_t mask, const Rational& c) {
  require(mask < (std::uint64_t{1} << sig_.dim()), ErrorCode::kDomain,
          "blade uses a generator outside the signature");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  require(sig_ == o.sig_, ErrorCode::kMismatch, "Clifford signature mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mask, c] : terms_) {
    std::string blade;
    for (int t = 0; t < sig_.dim(); ++t)
      if (mask >> static_cast<unsigned>(t) & 1U) blade += "e" + std::to_string(t + 1);
    bool neg = c.sign() < 0;
    Rational mag = c.abs();
    std::string term = blade.empty() ? mag.str()
                       : mag == Rational(1) ? blade
                                            : mag.str() + "*" + blade;
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

int blade_product_sign(CliffordSignature sig, std::uint32_t a, std::uint32_t b) {
  // Transpositions needed to merge the two ascending words.
  int swaps = 0;
  for (std::uint32_t s = a >> 1U; s != 0; s >>= 1U) swaps += std::popcount(s & b);
  int sign = swaps % 2 == 0 ? 1 : -1;
  std::uint32_t common = a & b;
  std::uint32_t negative_mask = sig.p >= 32 ? ~0U : ((std::uint32_t{1} << sig.p) - 1U);
  if (std::popcount(common & negative_mask) % 2 == 1) sign = -sign;
  return sign;
}

CliffordElement clif_mul(const CliffordElement& x, const CliffordElement& y) {
  require(x.signature() == y.signature(), ErrorCode::kMismatch, "Clifford signature mismatch");
  CliffordElement out(x.signature());
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) {
      int s = blade_product_sign(x.signature(), ma, mb);
      Rational c = ca * cb;
      out.add_term(ma ^ mb, s > 0 ? c : -c);
    }
  return out;
}

CliffordElement clif_reverse(const CliffordElement& x) {
  CliffordElement out(x.signature());
  for (const auto& [m, c] : x.terms()) {
    int g = std::popcount(m);
    bool flip = (g * (g - 1) / 2) % 2 == 1;
    out.add_term(m, flip ? -c : c);
  }
  return out;
}

int gamma_square(CliffordSignature sig) {
  require(sig.p >= 0 && sig.q >= 0, ErrorCode::kDomain, "signature counts must be nonnegative");
  const long n = sig.dim();
  // Reversing e_1...e_n costs n(n-1)/2 transpositions; then each e_i^2 contributes.
  long exponent = n * (n - 1) / 2 + sig.p;
  return exponent % 2 == 0 ? 1 : -1;
}

int real_dim(DivisionRing r) {
  switch (r) {
    case DivisionRing::kR: return 1;
    case DivisionRing::kC: return 2;
    case DivisionRing::kH: return 4;
  }
  return 0;
}

std::string ring_name(DivisionRing r) {
  switch (r) {
    case DivisionRing::kR: return "R";
    case DivisionRing::kC: return "C";
    case DivisionRing::kH: return "H";
  }
  return "?";
}

std::string MatrixAlgebraClass::str() const {
  std::string one = ring_name(ring) + (size == 1 ? "" : "(" + std::to_string(size) + ")");
  return summands == 2 ? one + "+" + one : one;
}

MatrixAlgebraClass classify(CliffordSignature sig) {
  require(sig.p >= 0 && sig.q >= 0, ErrorCode::kDomain, "signature counts must be nonnegative");
  require(sig.dim() <= kMaxClassifyDim, ErrorCode::kDomain, "signature too large to classify");
  // Indexed by (q - p) mod 8 with q counting the generators that square to +1.
  struct Row { DivisionRing ring; int summands; };
  static constexpr Row kTable[8] = {
      {DivisionRing::kR, 1}, {DivisionRing::kR, 2}, {DivisionRing::kR, 1}, {DivisionRing::kC, 1},
      {DivisionRing::kH, 1}, {DivisionRing::kH, 2}, {DivisionRing::kH, 1}, {DivisionRing::kC, 1},
  };
  const int idx = ((sig.q - sig.p) % 8 + 8) % 8;
  const Row& row = kTable[idx];
  // 2^(p+q) = summands * size^2 * dim_R(ring)
  const int denom_log = (row.summands == 2 ? 1 : 0) + std::countr_zero(static_cast<unsigned>(real_dim(row.ring)));
  const int size_sq_log = sig.dim() - denom_log;
  require(size_sq_log >= 0 && size_sq_log % 2 == 0, ErrorCode::kInternal,
          "classification table inconsistent with algebra dimension");
  const int size_log = size_sq_log / 2;
  require(size_log < 64, ErrorCode::kDomain, "matrix size overflows 64 bits");
  return {row.ring, std::uint64_t{1} << static_cast<unsigned>(size_log), row.summands};
}

bool periodicity_check(CliffordSignature sig) {
  require(sig.dim() + 8 <= CliffordElement::kMaxGenerators, ErrorCode::kDomain,
          "periodicity check needs p+q+8 <= 24");
  MatrixAlgebraClass base = classify(sig);
  MatrixAlgebraClass up = classify({sig.p + 8, sig.q});
  return up.ring == base.ring && up.summands == base.summands && up.size == base.size * 16;
}

std::string spinor_kind_name(SpinorKind k) {
  switch (k) {
    case SpinorKind::kDirac: return "Dirac";
    case SpinorKind::kMajorana: return "Majorana";
    case SpinorKind::kWeyl: return "Weyl";
    case SpinorKind::kMajoranaWeyl: return "Majorana-Weyl";
  }
  return "?";
}

std::vector<std::pair<SpinorKind, std::uint64_t>> SpinorProfile::admissible() const {
  std::vector<std::pair<SpinorKind, std::uint64_t>> out;
  out.emplace_back(SpinorKind::kDirac, 2 * dirac_complex_dim);
  if (majorana) out.emplace_back(SpinorKind::kMajorana, dirac_complex_dim);
  if (weyl) out.emplace_back(SpinorKind::kWeyl, dirac_complex_dim);
  if (majorana_weyl) out.emplace_back(SpinorKind::kMajoranaWeyl, dirac_complex_dim / 2);
  return out;
}

SpinorProfile spinor_taxonomy(int n) {
  require(n >= 1, ErrorCode::kDomain, "spacetime dimension must be >= 1");
  require(n <= 2 * 62, ErrorCode::kDomain, "spacetime dimension too large");
  SpinorProfile s;
  s.n = n;
  s.dirac_complex_dim = std::uint64_t{1} << static_cast<unsigned>(n / 2);
  s.weyl = n % 2 == 0;

  const CliffordSignature time_neg{n - 1, 1};
  const CliffordSignature space_neg{1, n - 1};
  s.real_rep_cn1 = classify(time_neg).smallest_real_rep();
  s.real_rep_c1n = classify(space_neg).smallest_real_rep();
  // Majorana: the smallest real representation complexifies to the Dirac spinor.
  const bool maj_a = s.real_rep_cn1 == s.dirac_complex_dim;
  const bool maj_b = s.real_rep_c1n == s.dirac_complex_dim;
  s.majorana = maj_a || maj_b;
  // Chiral real spinors need a real structure and Gamma^2 = +1 in the same algebra.
  s.majorana_weyl = s.weyl && ((maj_a && gamma_square(time_neg) == 1) ||
                               (maj_b && gamma_square(space_neg) == 1));
  std::uint64_t best = 0;
  for (const auto& [kind, comps] : s.admissible())
    if (best == 0 || comps < best) best = comps;
  s.minimal_real_components = best;
  return s;
}

std::set<int> super_ym_dims(int lo, int hi) {
  require(3 <= lo && lo <= hi, ErrorCode::kDomain, "super_ym_dims needs 3 <= lo <= hi");
  std::set<int> out;
  for (int n = lo; n <= hi; ++n) {
    const std::uint64_t target = 2 * static_cast<std::uint64_t>(n - 2);
    for (const auto& [kind, comps] : spinor_taxonomy(n).admissible())
      if (comps == target) {
        out.insert(n);
        break;
      }
  }
  return out;
}

}  // namespace exceptia
