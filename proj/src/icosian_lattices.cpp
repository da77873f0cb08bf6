#include "exceptia/hypercomplex.hpp"
#include "exceptia/lattices.hpp"

namespace exceptia {

namespace {

// h = (-sqrt5 + i + j + k)/2
GoldHyper icosian_h() {
  const Golden half(Rational(1, 2), Rational(0));
  return GoldHyper(2, {Golden(Rational(0), Rational(-1, 2)), half, half, half});
}

std::array<BigInt, 8> certificate_of(const GoldHyper& q) {
  auto e = icosian_from(q);
  require(e.has_value(), ErrorCode::kInternal, "product left the icosian ring");
  return e->certificate;
}

// Rows: coordinates (in the ring basis) of a Z-basis of I*m (right) or m*I (left).
IntMatrix ideal_rows(const GoldHyper& m, IcosianCongruence side) {
  const auto& basis = icosian_ring_basis();
  IntMatrix rows(8, 8);
  for (std::size_t a = 0; a < 8; ++a) {
    const GoldHyper p = side == IcosianCongruence::kRight ? cd_mul(basis[a], m) : cd_mul(m, basis[a]);
    auto cert = certificate_of(p);
    for (std::size_t t = 0; t < 8; ++t) rows(a, t) = cert[t];
  }
  return rows;
}

RatMatrix embed_blocks(const IntMatrix& coeffs, std::size_t blocks) {
  const auto& basis = icosian_ring_basis();
  RatMatrix out(coeffs.rows(), 8 * blocks);
  for (std::size_t r = 0; r < coeffs.rows(); ++r)
    for (std::size_t b = 0; b < blocks; ++b) {
      GoldHyper q(2);
      for (std::size_t a = 0; a < 8; ++a) {
        const BigInt& c = coeffs(r, 8 * b + a);
        if (c != 0) q = q + basis[a].scaled(Golden(Rational(c), Rational(0)));
      }
      const auto x = icosian_to_r8(q);
      for (std::size_t t = 0; t < 8; ++t) out(r, 8 * b + t) = x[t];
    }
  return out;
}

RatMatrix golden_trace_metric(std::size_t blocks) {
  RatMatrix m(8 * blocks, 8 * blocks);
  for (std::size_t t = 0; t < 4 * blocks; ++t) {
    m(2 * t, 2 * t) = Rational(1);
    m(2 * t, 2 * t + 1) = Rational(1);
    m(2 * t + 1, 2 * t) = Rational(1);
    m(2 * t + 1, 2 * t + 1) = Rational(5);
  }
  return m;
}

Lattice embedded(const RatMatrix& basis, IcosianForm form) {
  if (form == IcosianForm::kCoordinate) return Lattice(basis, Signature::kEuclidean);
  return Lattice(basis, golden_trace_metric(basis.cols() / 8));
}

IcosianLatticeResult finish(Lattice raw, const Rational& target_min, IcosianCongruence congruence,
                            IcosianForm form) {
  IcosianLatticeResult res{raw, raw, Rational(1), Rational(0), false, congruence, form};
  res.raw_minimal_norm = minimal_norm(raw);
  res.scale = target_min / res.raw_minimal_norm;
  Lattice scaled = raw.rescaled(res.scale);
  res.even_unimodular = is_even(scaled) && is_unimodular(scaled);
  // Without an even unimodular normalization the raw form is reported as is.
  if (res.even_unimodular) res.lattice = std::move(scaled);
  return res;
}

}  // namespace

IcosianLatticeResult build_E8_from_icosians(IcosianForm form) {
  const IntMatrix id = IntMatrix::identity(8);
  return finish(embedded(embed_blocks(id, 1), form), Rational(2), IcosianCongruence::kRight, form);
}

IcosianLatticeResult leech_from_icosians(IcosianCongruence congruence, IcosianForm form) {
  const GoldHyper h = icosian_h();
  require(icosian_from(h).has_value(), ErrorCode::kInternal, "h is not an icosian");
  const IntMatrix ih = ideal_rows(h, congruence);
  const IntMatrix ihs = ideal_rows(cd_conj(h), congruence);

  // Triples with x = y = z modulo the ideal generated by h.
  IntMatrix gen(24, 24);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 3; ++b) gen(a, 8 * b + a) = 1;
    for (std::size_t t = 0; t < 8; ++t) {
      gen(8 + a, 8 + t) = ih(a, t);
      gen(16 + a, 16 + t) = ih(a, t);
    }
  }

  // x + y + z in the ideal generated by h*: (sum of blocks) * ihs^-1 must be integral.
  RatMatrix ihs_inv = inverse(to_rational(ihs));
  const BigInt den = common_denominator(ihs_inv);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) ihs_inv(i, j) *= Rational(den);
  const IntMatrix n = to_integer(ihs_inv);
  IntMatrix sum_map(24, 8);
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t t = 0; t < 8; ++t) sum_map(8 * b + t, t) = 1;
  const IntMatrix residue = gen * sum_map * n;
  IntMatrix stacked(32, 8);
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t t = 0; t < 8; ++t) stacked(i, t) = residue(i, t);
  for (std::size_t t = 0; t < 8; ++t) stacked(24 + t, t) = den;
  const IntMatrix kernel = integer_kernel(stacked);
  IntMatrix proj(kernel.rows(), 24);
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    for (std::size_t i = 0; i < 24; ++i) proj(r, i) = kernel(r, i);
  const IntMatrix t = row_basis(proj);
  require(t.rows() == 24, ErrorCode::kInternal, "icosian triple lattice does not have rank 24");

  const IntMatrix coeffs = t * gen;
  return finish(embedded(embed_blocks(coeffs, 3), form), Rational(4), congruence, form);
}

}  // namespace exceptia
