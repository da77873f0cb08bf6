#include <algorithm>
#include <cctype>
#include <sstream>

#include "exceptia/lattices.hpp"

namespace exceptia {

namespace {

RatMatrix standard_metric(std::size_t d, Signature sig) {
  RatMatrix m = RatMatrix::identity(d);
  if (sig == Signature::kLorentzian && d > 0) m(0, 0) = Rational(-1);
  return m;
}

RatMatrix compute_gram(const RatMatrix& b, const RatMatrix& metric) {
  return b * metric * b.transpose();
}

bool perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Vectors orthogonal (under the lattice form) to every given ambient vector.
Lattice orthogonal_sublattice(const Lattice& l, const std::vector<std::vector<Rational>>& vs) {
  const RatMatrix metric = l.metric();
  IntMatrix cols(l.rank(), vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    std::vector<Rational> col(l.rank());
    BigInt den = 1;
    for (std::size_t i = 0; i < l.rank(); ++i) {
      col[i] = l.inner(l.basis().row(i), vs[k]);
      den = lcm(den, col[i].den());
    }
    for (std::size_t i = 0; i < l.rank(); ++i) cols(i, k) = (col[i] * Rational(den)).num();
  }
  IntMatrix kernel = integer_kernel(cols);
  return l.with_basis(to_rational(kernel) * l.basis());
}

std::vector<std::vector<Rational>> norm_two_vectors_sorted(const Lattice& l) {
  std::vector<std::vector<Rational>> out;
  for_each_short_vector(l, 2, [&](std::span<const long> c, long norm) {
    if (norm != 2) return;
    std::vector<Rational> x(l.ambient_dim());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += Rational(c[i]) * l.basis()(i, j);
    }
    out.push_back(std::move(x));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Lattice::Lattice(RatMatrix basis, Signature sig) : basis_(std::move(basis)), sig_(sig) {
  gram_ = compute_gram(basis_, standard_metric(basis_.cols(), sig_));
  require(!determinant(gram_).is_zero(), ErrorCode::kDomain, "lattice basis rows are dependent");
  if (sig_ == Signature::kEuclidean) {
    require(is_positive_definite(gram_), ErrorCode::kDomain, "Euclidean Gram is not positive definite");
  }
}

Lattice::Lattice(RatMatrix basis, RatMatrix metric)
    : basis_(std::move(basis)), sig_(Signature::kEuclidean), metric_(std::move(metric)) {
  require(metric_->rows() == basis_.cols() && metric_->cols() == basis_.cols(), ErrorCode::kMismatch,
          "metric does not match the ambient dimension");
  require(*metric_ == metric_->transpose(), ErrorCode::kDomain, "metric is not symmetric");
  gram_ = compute_gram(basis_, *metric_);
  require(is_positive_definite(gram_), ErrorCode::kDomain, "Gram matrix is not positive definite");
}

Lattice Lattice::from_gram(RatMatrix gram) {
  const std::size_t n = gram.rows();
  return Lattice(RatMatrix::identity(n), std::move(gram));
}

RatMatrix Lattice::metric() const {
  return metric_ ? *metric_ : standard_metric(basis_.cols(), sig_);
}

Rational Lattice::inner(std::span<const Rational> a, std::span<const Rational> b) const {
  require(a.size() == ambient_dim() && b.size() == ambient_dim(), ErrorCode::kMismatch,
          "vector length does not match the ambient dimension");
  Rational s;
  if (metric_) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      Rational t;
      for (std::size_t j = 0; j < b.size(); ++j) t += (*metric_)(i, j) * b[j];
      s += a[i] * t;
    }
    return s;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational t = a[i] * b[i];
    if (i == 0 && sig_ == Signature::kLorentzian) s -= t;
    else s += t;
  }
  return s;
}

Lattice Lattice::with_basis(RatMatrix basis) const {
  if (metric_) return Lattice(std::move(basis), *metric_);
  return Lattice(std::move(basis), sig_);
}

Lattice Lattice::rescaled(const Rational& s) const {
  require(s.sign() > 0, ErrorCode::kDomain, "rescaling factor must be positive");
  if (!metric_ && perfect_square(s.num()) && perfect_square(s.den())) {
    Rational root(isqrt(s.num()), isqrt(s.den()));
    RatMatrix b = basis_;
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) *= root;
    return Lattice(std::move(b), sig_);
  }
  require(sig_ == Signature::kEuclidean, ErrorCode::kUnsupported,
          "non-square rescaling of a Lorentzian lattice");
  RatMatrix m = metric();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
  return Lattice(basis_, std::move(m));
}

Lattice build_Zn(int n) {
  require(n >= 1, ErrorCode::kDomain, "Z^n needs n >= 1");
  return Lattice(RatMatrix::identity(static_cast<std::size_t>(n)), Signature::kEuclidean);
}

Lattice build_An(int n) {
  require(n >= 1, ErrorCode::kDomain, "A_n needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  RatMatrix b(un, un + 1);
  for (std::size_t i = 0; i < un; ++i) {
    b(i, i) = Rational(1);
    b(i, i + 1) = Rational(-1);
  }
  return Lattice(std::move(b), Signature::kEuclidean);
}

Lattice build_Dn(int n) {
  require(n >= 2, ErrorCode::kDomain, "D_n needs n >= 2");
  const auto un = static_cast<std::size_t>(n);
  RatMatrix b(un, un);
  b(0, 0) = Rational(1);
  b(0, 1) = Rational(1);
  for (std::size_t i = 1; i < un; ++i) {
    b(i, i - 1) = Rational(1);
    b(i, i) = Rational(-1);
  }
  return Lattice(std::move(b), Signature::kEuclidean);
}

Lattice build_even_sum_half_integer(int n, Signature sig) {
  require(n >= 2 && n % 2 == 0, ErrorCode::kDomain, "half-integer construction needs even n >= 2");
  const auto un = static_cast<std::size_t>(n);
  // Doubled coordinates: 2*D_n plus a half-integer glue vector with even sum.
  IntMatrix gens(un + 1, un);
  gens(0, 0) = 2;
  gens(0, 1) = 2;
  for (std::size_t i = 1; i < un; ++i) {
    gens(i, i - 1) = 2;
    gens(i, i) = -2;
  }
  for (std::size_t j = 0; j < un; ++j) gens(un, j) = 1;
  if ((n / 2) % 2 == 1) gens(un, 0) = -1;
  IntMatrix hb = row_basis(gens);
  require(hb.rows() == un, ErrorCode::kInternal, "half-integer lattice has wrong rank");
  RatMatrix b(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) b(i, j) = Rational(hb(i, j), BigInt(2));
  return Lattice(std::move(b), sig);
}

Lattice build_E8() { return build_even_sum_half_integer(8, Signature::kEuclidean); }

Lattice build_D16plus() { return build_even_sum_half_integer(16, Signature::kEuclidean); }

Lattice build_E7(const Lattice& e8) {
  require(e8.rank() == 8 && is_even(e8) && is_unimodular(e8), ErrorCode::kDomain,
          "E7 is built inside an even unimodular rank-8 lattice");
  auto roots = norm_two_vectors_sorted(e8);
  require(!roots.empty(), ErrorCode::kInternal, "no norm-2 vectors in E8");
  Lattice e7 = orthogonal_sublattice(e8, {roots.front()});
  require(e7.rank() == 7, ErrorCode::kInternal, "E7 kernel has wrong rank");
  return e7;
}

Lattice build_E6(const Lattice& e8) {
  require(e8.rank() == 8 && is_even(e8) && is_unimodular(e8), ErrorCode::kDomain,
          "E6 is built inside an even unimodular rank-8 lattice");
  auto roots = norm_two_vectors_sorted(e8);
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (e8.inner(roots[a], roots[b]) != Rational(-1)) continue;
      Lattice e6 = orthogonal_sublattice(e8, {roots[a], roots[b]});
      require(e6.rank() == 6, ErrorCode::kInternal, "E6 kernel has wrong rank");
      return e6;
    }
  fail(ErrorCode::kInternal, "no A2 pair of norm-2 vectors found");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  require(a.signature() == Signature::kEuclidean && b.signature() == Signature::kEuclidean,
          ErrorCode::kUnsupported, "direct sums are supported for Euclidean lattices");
  const std::size_t r = a.rank() + b.rank();
  const std::size_t d = a.ambient_dim() + b.ambient_dim();
  RatMatrix basis(r, d);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) basis(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.ambient_dim(); ++j)
      basis(a.rank() + i, a.ambient_dim() + j) = b.basis()(i, j);
  if (a.has_standard_metric() && b.has_standard_metric()) return Lattice(std::move(basis), Signature::kEuclidean);
  RatMatrix m(d, d);
  RatMatrix ma = a.metric(), mb = b.metric();
  for (std::size_t i = 0; i < ma.rows(); ++i)
    for (std::size_t j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
  for (std::size_t i = 0; i < mb.rows(); ++i)
    for (std::size_t j = 0; j < mb.cols(); ++j) m(ma.rows() + i, ma.cols() + j) = mb(i, j);
  return Lattice(std::move(basis), std::move(m));
}

bool is_integral(const Lattice& l) {
  const RatMatrix& g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!g(i, j).is_integer()) return false;
  return true;
}

bool is_even(const Lattice& l) {
  if (!is_integral(l)) return false;
  const RatMatrix& g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (g(i, i).num() % 2 != 0) return false;
  return true;
}

bool is_unimodular(const Lattice& l) { return gram_determinant(l).abs() == Rational(1); }

bool is_positive_definite(const RatMatrix& gram) {
  // All pivots of symmetric Gaussian elimination positive.
  RatMatrix m = gram;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (m(c, c).sign() <= 0) return false;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return true;
}

Rational gram_determinant(const Lattice& l) { return determinant(l.gram()); }

bool contains(const Lattice& l, std::span<const Rational> x) {
  auto c = solve_row_combination(l.basis(), x);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& t) { return t.is_integer(); });
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank() || a.ambient_dim() != b.ambient_dim()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!contains(b, a.basis().row(i))) return false;
  for (std::size_t i = 0; i < b.rank(); ++i)
    if (!contains(a, b.basis().row(i))) return false;
  return true;
}

Lattice dual_lattice(const Lattice& l) {
  RatMatrix ginv = inverse(l.gram());
  return l.with_basis(ginv * l.basis());
}

Lattice named_lattice(const std::string& name) {
  auto numeric_suffix = [&](std::size_t from) {
    std::string digits = name.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      fail(ErrorCode::kParse, "unknown lattice name '" + name + "'");
    }
    return std::stoi(digits);
  };
  if (name == "E8") return build_E8();
  if (name == "E7") return build_E7(build_E8());
  if (name == "E6") return build_E6(build_E8());
  if (name == "D16+") return build_D16plus();
  if (name == "3E8") {
    Lattice e8 = build_E8();
    return direct_sum(direct_sum(e8, e8), e8);
  }
  if (name == "E8+D16+") return direct_sum(build_E8(), build_D16plus());
  if (name == "LeechII") return leech_from_ii26();
  if (name == "LeechIcosian") return leech_from_icosians().lattice;
  if (name.size() >= 2 && name[0] == 'A') return build_An(numeric_suffix(1));
  if (name.size() >= 2 && name[0] == 'D') return build_Dn(numeric_suffix(1));
  if (name.size() >= 2 && name[0] == 'Z') return build_Zn(numeric_suffix(1));
  fail(ErrorCode::kParse, "unknown lattice name '" + name + "'");
}

std::string write_lattice_text(const Lattice& l) {
  std::ostringstream os;
  auto emit_rows = [&](const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
      os << "\n";
    }
  };
  if (!l.has_standard_metric()) {
    os << l.rank() << " " << l.rank() << " gram\n";
    emit_rows(l.gram());
    return os.str();
  }
  os << l.rank() << " " << l.ambient_dim() << " "
     << (l.signature() == Signature::kLorentzian ? "lorentzian" : "euclidean") << "\n";
  emit_rows(l.basis());
  return os.str();
}

Lattice read_lattice_text(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  while (std::getline(is, header)) {
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::istringstream hs(header);
  long rank = 0, ambient = 0;
  std::string sig;
  if (!(hs >> rank >> ambient >> sig) || rank <= 0 || ambient <= 0) {
    fail(ErrorCode::kParse, "lattice header must be 'rank ambient signature'");
  }
  const bool gram = sig == "gram";
  if (!gram && sig != "euclidean" && sig != "lorentzian") {
    fail(ErrorCode::kParse, "unknown signature '" + sig + "'");
  }
  if (gram && rank != ambient) fail(ErrorCode::kParse, "gram lattices need rank == ambient");
  if (rank > ambient) fail(ErrorCode::kParse, "rank exceeds ambient dimension");
  RatMatrix m(static_cast<std::size_t>(rank), static_cast<std::size_t>(ambient));
  std::string line;
  std::size_t r = 0;
  while (r < m.rows() && std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != m.cols()) {
      fail(ErrorCode::kParse, "row " + std::to_string(r + 1) + " has " + std::to_string(toks.size()) +
                                  " entries, expected " + std::to_string(m.cols()));
    }
    for (std::size_t j = 0; j < toks.size(); ++j) m(r, j) = Rational::parse(toks[j]);
    ++r;
  }
  if (r != m.rows()) fail(ErrorCode::kParse, "lattice file has too few rows");
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) fail(ErrorCode::kParse, "trailing data after lattice rows");
  }
  if (gram) return Lattice::from_gram(std::move(m));
  return Lattice(std::move(m), sig == "lorentzian" ? Signature::kLorentzian : Signature::kEuclidean);
}

}  // namespace exceptia
