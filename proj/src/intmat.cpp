#include "exceptia/intmat.hpp"

#include <utility>

namespace exceptia {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      require(m(i, j).is_integer(), ErrorCode::kDomain, "matrix entry is not an integer");
      r(i, j) = m(i, j).num();
    }
  return r;
}

BigInt common_denominator(const RatMatrix& m) {
  BigInt d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).den());
  return d;
}

namespace {

// rows a, b <- (p*a + q*b, u*b - v*a) where g = p*x + q*y, u = x/g, v = y/g.
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& p,
                  const BigInt& q, const BigInt& u, const BigInt& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    BigInt ra = m(a, j);
    BigInt rb = m(b, j);
    m(a, j) = p * ra + q * rb;
    m(b, j) = u * rb - v * ra;
  }
}

void sub_row_multiple(IntMatrix& m, std::size_t target, std::size_t source,
                      const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= factor * m(source, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteResult hermite_rows(const IntMatrix& a) {
  HermiteResult res{a, IntMatrix::identity(a.rows()), 0};
  IntMatrix& h = res.form;
  IntMatrix& u = res.transform;
  std::size_t pivot_row = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Find any nonzero entry at or below pivot_row.
    std::size_t first = h.rows();
    for (std::size_t i = pivot_row; i < h.rows(); ++i) {
      if (h(i, col) != 0) { first = i; break; }
    }
    if (first == h.rows()) continue;
    h.swap_rows(pivot_row, first);
    u.swap_rows(pivot_row, first);
    for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      BigInt x = h(pivot_row, col);
      BigInt y = h(i, col);
      BigInt g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      BigInt ux = x / g;
      BigInt vy = y / g;
      combine_rows(h, pivot_row, i, p, q, ux, vy);
      combine_rows(u, pivot_row, i, p, q, ux, vy);
    }
    if (h(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    const BigInt piv = h(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      BigInt f;
      mpz_fdiv_q(f.get_mpz_t(), h(i, col).get_mpz_t(), piv.get_mpz_t());
      sub_row_multiple(h, i, pivot_row, f);
      sub_row_multiple(u, i, pivot_row, f);
    }
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

IntMatrix row_basis(const IntMatrix& a) {
  HermiteResult r = hermite_rows(a);
  return r.form.row_block(0, r.rank);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  HermiteResult r = hermite_rows(a);
  std::size_t nullity = a.rows() - r.rank;
  IntMatrix k = r.transform.row_block(r.rank, nullity);
  // Hermite-reduce the kernel basis itself to keep its entries small.
  return nullity == 0 ? k : row_basis(k);
}

Rational determinant(RatMatrix m) {
  require(m.rows() == m.cols(), ErrorCode::kMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

BigInt determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.num();
}

RatMatrix inverse(RatMatrix m) {
  require(m.rows() == m.cols(), ErrorCode::kMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) fail(ErrorCode::kDomain, "singular matrix");
    m.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational s = Rational(1) / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rational>> solve_row_combination(const RatMatrix& b,
                                                           std::span<const Rational> x) {
  require(x.size() == b.cols(), ErrorCode::kMismatch, "vector length does not match basis");
  // Gaussian elimination on the augmented system b^T c^T = x^T.
  const std::size_t r = b.rows();
  const std::size_t d = b.cols();
  RatMatrix aug(d, r + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = b(j, i);
    aug(i, r) = x[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < d; ++c) {
    std::size_t p = row;
    while (p < d && aug(p, c).is_zero()) ++p;
    if (p == d) continue;
    aug.swap_rows(p, row);
    Rational s = Rational(1) / aug(row, c);
    for (std::size_t j = c; j <= r; ++j) aug(row, j) *= s;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || aug(i, c).is_zero()) continue;
      Rational f = aug(i, c);
      for (std::size_t j = c; j <= r; ++j) aug(i, j) -= f * aug(row, j);
    }
    pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < d; ++i) {
    if (!aug(i, r).is_zero()) return std::nullopt;
  }
  require(pivot_cols.size() == r, ErrorCode::kDomain, "basis rows are linearly dependent");
  std::vector<Rational> c(r);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) c[pivot_cols[k]] = aug(k, r);
  return c;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  BigInt d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace exceptia
