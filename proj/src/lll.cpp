#include "exceptia/lattices.hpp"

namespace exceptia {

namespace {

class LllState {
 public:
  LllState(const RatMatrix& gram, Rational delta)
      : n_(gram.rows()), g_(gram), u_(IntMatrix::identity(gram.rows())), mu_(n_, n_),
        b_(n_), delta_(std::move(delta)) {}

  void run() {
    if (n_ <= 1) return;
    b_[0] = g_(0, 0);
    std::size_t k = 1, kmax = 0;
    while (k < n_) {
      if (k > kmax) {
        kmax = k;
        for (std::size_t j = 0; j < k; ++j) {
          Rational s = g_(k, j);
          for (std::size_t i = 0; i < j; ++i) s -= mu_(j, i) * mu_(k, i) * b_[i];
          mu_(k, j) = s / b_[j];
        }
        Rational bk = g_(k, k);
        for (std::size_t j = 0; j < k; ++j) bk -= mu_(k, j) * mu_(k, j) * b_[j];
        require(bk.sign() > 0, ErrorCode::kDomain, "LLL input is not positive definite");
        b_[k] = bk;
      }
      reduce(k, k - 1);
      if (b_[k] < (delta_ - mu_(k, k - 1) * mu_(k, k - 1)) * b_[k - 1]) {
        swap(k, kmax);
        k = k > 1 ? k - 1 : 1;
      } else {
        for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
        ++k;
      }
    }
  }

  const IntMatrix& transform() const { return u_; }

 private:
  void reduce(std::size_t k, std::size_t l) {
    if (mu_(k, l).abs() * Rational(2) <= Rational(1)) return;
    const BigInt q = mu_(k, l).round();
    const Rational rq(q);
    for (std::size_t j = 0; j < n_; ++j) u_(k, j) -= q * u_(l, j);
    const Rational new_kk = g_(k, k) - Rational(2) * rq * g_(k, l) + rq * rq * g_(l, l);
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k) continue;
      g_(k, i) -= rq * g_(l, i);
      g_(i, k) = g_(k, i);
    }
    g_(k, k) = new_kk;
    mu_(k, l) -= rq;
    for (std::size_t i = 0; i < l; ++i) mu_(k, i) -= rq * mu_(l, i);
  }

  void swap(std::size_t k, std::size_t kmax) {
    u_.swap_rows(k, k - 1);
    g_.swap_rows(k, k - 1);
    for (std::size_t i = 0; i < n_; ++i) std::swap(g_(i, k), g_(i, k - 1));
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu_(k, j), mu_(k - 1, j));
    const Rational m = mu_(k, k - 1);
    const Rational bnew = b_[k] + m * m * b_[k - 1];
    mu_(k, k - 1) = m * b_[k - 1] / bnew;
    b_[k] = b_[k - 1] * b_[k] / bnew;
    b_[k - 1] = bnew;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Rational t = mu_(i, k);
      mu_(i, k) = mu_(i, k - 1) - m * t;
      mu_(i, k - 1) = t + mu_(k, k - 1) * mu_(i, k);
    }
  }

  std::size_t n_;
  RatMatrix g_;
  IntMatrix u_;
  RatMatrix mu_;
  std::vector<Rational> b_;
  Rational delta_;
};

}  // namespace

Rational default_lll_delta() { return Rational(99, 100); }

LllResult lll_reduce_with_transform(const Lattice& l, const Rational& delta) {
  require(l.signature() == Signature::kEuclidean, ErrorCode::kDomain, "LLL needs a Euclidean lattice");
  require(delta > Rational(1, 4) && delta < Rational(1), ErrorCode::kDomain,
          "LLL delta must lie in (1/4, 1)");
  LllState st(l.gram(), delta);
  st.run();
  const IntMatrix& u = st.transform();
  return {l.with_basis(to_rational(u) * l.basis()), u};
}

Lattice lll_reduce(const Lattice& l, const Rational& delta) {
  return lll_reduce_with_transform(l, delta).lattice;
}

bool is_lll_reduced(const Lattice& l, const Rational& delta) {
  const RatMatrix& g = l.gram();
  const std::size_t n = g.rows();
  RatMatrix mu(n, n);
  std::vector<Rational> b(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = g(k, j);
      for (std::size_t i = 0; i < j; ++i) s -= mu(j, i) * mu(k, i) * b[i];
      mu(k, j) = s / b[j];
      if (mu(k, j).abs() * Rational(2) > Rational(1)) return false;
    }
    Rational bk = g(k, k);
    for (std::size_t j = 0; j < k; ++j) bk -= mu(k, j) * mu(k, j) * b[j];
    b[k] = bk;
    if (k > 0 && b[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) return false;
  }
  return true;
}

}  // namespace exceptia
