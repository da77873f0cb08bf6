#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "exceptia/lattices.hpp"

namespace exceptia {

namespace {

constexpr long kMaxEntry = 1L << 40;

// Fincke-Pohst over an LLL-reduced integral Gram matrix. Pruning uses a
// long double Cholesky form with an additive slack, so the candidate set is a
// superset of the true ball; every candidate is then accepted or rejected on
// its exact integer norm.
struct EnumProblem {
  std::size_t n = 0;
  long max_norm = 0;
  std::vector<long> gram;         // n*n, exact
  std::vector<long double> q;     // n*n, q[i*n+i] diagonal, q[i*n+j] (j>i) mu-like
  long double slack = 0;
  IntMatrix transform;            // reduced basis = transform * original basis

  long g(std::size_t i, std::size_t j) const { return gram[i * n + j]; }
  long double qq(std::size_t i, std::size_t j) const { return q[i * n + j]; }
};

EnumProblem make_problem(const Lattice& l, long max_norm) {
  require(l.signature() == Signature::kEuclidean, ErrorCode::kDomain,
          "enumeration needs a Euclidean lattice");
  require(is_integral(l), ErrorCode::kDomain, "enumeration needs an integral Gram matrix");
  require(max_norm >= 0, ErrorCode::kDomain, "max_norm must be nonnegative");
  LllResult red = lll_reduce_with_transform(l);
  EnumProblem p;
  p.n = l.rank();
  p.max_norm = max_norm;
  p.transform = red.transform;
  p.gram.resize(p.n * p.n);
  const RatMatrix& g = red.lattice.gram();
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) {
      const BigInt& v = g(i, j).num();
      require(abs(v) < kMaxEntry, ErrorCode::kDomain, "reduced Gram entries too large for enumeration");
      p.gram[i * p.n + j] = v.get_si();
    }
  p.q.assign(p.n * p.n, 0.0L);
  for (std::size_t i = 0; i < p.n; ++i) {
    long double d = static_cast<long double>(p.g(i, i));
    for (std::size_t k = 0; k < i; ++k) d -= p.q[k * p.n + k] * p.q[k * p.n + i] * p.q[k * p.n + i];
    require(d > 0, ErrorCode::kDomain, "Gram matrix is not numerically positive definite");
    p.q[i * p.n + i] = d;
    for (std::size_t j = i + 1; j < p.n; ++j) {
      long double s = static_cast<long double>(p.g(i, j));
      for (std::size_t k = 0; k < i; ++k) s -= p.q[k * p.n + k] * p.q[k * p.n + i] * p.q[k * p.n + j];
      p.q[i * p.n + j] = s / d;
    }
  }
  p.slack = 1e-7L * (static_cast<long double>(max_norm) + 1.0L);
  return p;
}

// One worker's walk. Levels run from n-1 (fixed first) down to 0.
class Walker {
 public:
  explicit Walker(const EnumProblem& p)
      : p_(p), n_(p.n), x_(n_, 0), isum_((n_ + 1) * n_, 0), fsum_((n_ + 1) * n_, 0.0L),
        rem_(n_ + 1, 0.0L), norm_(n_ + 1, 0), zero_above_(n_ + 1, 1) {
    rem_[n_] = static_cast<long double>(p.max_norm);
  }

  // Fixes x[level] = v given the state at level+1; returns false when the
  // exact partial norm already exceeds the bound.
  void fix(std::size_t level, long v) {
    const std::size_t from = level + 1;
    const long double c = -fsum_[from * n_ + level];
    const long double d = static_cast<long double>(v) - c;
    rem_[level] = rem_[from] - p_.qq(level, level) * d * d;
    norm_[level] = norm_[from] + 2 * v * isum_[from * n_ + level] + p_.g(level, level) * v * v;
    zero_above_[level] = zero_above_[from] && v == 0;
    x_[level] = v;
    for (std::size_t k = 0; k < level; ++k) {
      isum_[level * n_ + k] = isum_[from * n_ + k] + p_.g(k, level) * v;
      fsum_[level * n_ + k] = fsum_[from * n_ + k] + p_.qq(k, level) * static_cast<long double>(v);
    }
  }

  // Integer range for x[level] given the state at level+1.
  std::pair<long, long> range(std::size_t level) const {
    const std::size_t from = level + 1;
    const long double c = -fsum_[from * n_ + level];
    const long double budget = std::max(0.0L, rem_[from] + p_.slack);
    const long double r = std::sqrt(budget / p_.qq(level, level));
    long lo = static_cast<long>(std::ceil(c - r - 1e-12L));
    long hi = static_cast<long>(std::floor(c + r + 1e-12L));
    if (zero_above_[from]) lo = std::max(lo, level == 0 ? 1L : 0L);
    return {lo, hi};
  }

  // Visits every half-space representative below the fixed prefix.
  template <class Leaf>
  void descend(std::size_t level, Leaf& leaf) {
    auto [lo, hi] = range(level);
    if (level == 0) {
      const long base = norm_[1];
      const long s = isum_[1 * n_ + 0];
      const long g00 = p_.g(0, 0);
      for (long v = lo; v <= hi; ++v) {
        const long nrm = base + 2 * v * s + g00 * v * v;
        if (nrm > 0 && nrm <= p_.max_norm) {
          x_[0] = v;
          leaf(x_, nrm);
        }
      }
      return;
    }
    for (long v = lo; v <= hi; ++v) {
      fix(level, v);
      descend(level - 1, leaf);
    }
  }

  const std::vector<long>& x() const { return x_; }

 private:
  const EnumProblem& p_;
  std::size_t n_;
  std::vector<long> x_;
  std::vector<long> isum_;         // [(level)*n + k] = sum_{j>=level} G[k][j] x_j
  std::vector<long double> fsum_;  // same with the float Cholesky coefficients
  std::vector<long double> rem_;
  std::vector<long> norm_;
  std::vector<char> zero_above_;
};

// Prefixes (x[n-1], ..., x[n-depth]) of the search tree, in walk order.
std::vector<std::vector<long>> collect_prefixes(const EnumProblem& p, std::size_t depth) {
  std::vector<std::vector<long>> out;
  Walker w(p);
  std::vector<long> prefix;
  auto rec = [&](auto&& self, std::size_t level) -> void {
    auto [lo, hi] = w.range(level);
    for (long v = lo; v <= hi; ++v) {
      w.fix(level, v);
      prefix.push_back(v);
      if (prefix.size() == depth) out.push_back(prefix);
      else self(self, level - 1);
      prefix.pop_back();
    }
  };
  rec(rec, p.n - 1);
  return out;
}

std::vector<std::uint64_t> count_norms(const EnumProblem& p, unsigned threads) {
  const auto bins = static_cast<std::size_t>(p.max_norm) + 1;
  if (p.n == 0) return std::vector<std::uint64_t>(bins, 0);
  if (p.n == 1) {
    std::vector<std::uint64_t> counts(bins, 0);
    Walker w(p);
    auto leaf = [&](const std::vector<long>&, long nrm) { counts[static_cast<std::size_t>(nrm)] += 2; };
    w.descend(0, leaf);
    return counts;
  }
  if (threads <= 1) {
    std::vector<std::uint64_t> counts(bins, 0);
    Walker w(p);
    auto leaf = [&](const std::vector<long>&, long nrm) { counts[static_cast<std::size_t>(nrm)] += 2; };
    w.descend(p.n - 1, leaf);
    return counts;
  }
  // Split the top of the tree into tasks until there are enough of them.
  std::size_t depth = 1;
  std::vector<std::vector<long>> tasks = collect_prefixes(p, depth);
  while (tasks.size() < 32U * threads && depth + 1 < p.n) {
    ++depth;
    tasks = collect_prefixes(p, depth);
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(bins, 0));
  auto worker = [&](unsigned id) {
    Walker w(p);
    auto& counts = partial[id];
    auto leaf = [&](const std::vector<long>&, long nrm) { counts[static_cast<std::size_t>(nrm)] += 2; };
    for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
      const auto& prefix = tasks[t];
      for (std::size_t d = 0; d < prefix.size(); ++d) w.fix(p.n - 1 - d, prefix[d]);
      w.descend(p.n - 1 - depth, leaf);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  for (auto& th : pool) th.join();
  std::vector<std::uint64_t> counts(bins, 0);
  for (const auto& part : partial)
    for (std::size_t b = 0; b < bins; ++b) counts[b] += part[b];
  return counts;
}

}  // namespace

unsigned enumeration_threads() {
  if (const char* env = std::getenv("EXCEPTIA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::map<long, std::uint64_t> short_vectors(const Lattice& l, long max_norm, unsigned threads) {
  EnumProblem p = make_problem(l, max_norm);
  if (threads == 0) threads = enumeration_threads();
  std::vector<std::uint64_t> counts = count_norms(p, threads);
  std::map<long, std::uint64_t> out;
  for (std::size_t b = 1; b < counts.size(); ++b)
    if (counts[b] != 0) out[static_cast<long>(b)] = counts[b];
  return out;
}

void for_each_short_vector(const Lattice& l, long max_norm,
                           const std::function<void(std::span<const long>, long)>& visit) {
  EnumProblem p = make_problem(l, max_norm);
  if (p.n == 0) return;
  Walker w(p);
  std::vector<long> orig(p.n), neg(p.n);
  auto leaf = [&](const std::vector<long>& x, long nrm) {
    // Coefficients relative to the caller's basis: x * transform.
    for (std::size_t j = 0; j < p.n; ++j) {
      BigInt s = 0;
      for (std::size_t i = 0; i < p.n; ++i)
        if (x[i] != 0) s += x[i] * p.transform(i, j);
      orig[j] = s.get_si();
      neg[j] = -orig[j];
    }
    visit(orig, nrm);
    visit(neg, nrm);
  };
  w.descend(p.n - 1, leaf);
}

Rational minimal_norm(const Lattice& l) {
  require(l.signature() == Signature::kEuclidean, ErrorCode::kDomain,
          "minimal norm needs a Euclidean lattice");
  const BigInt den = common_denominator(l.gram());
  RatMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= Rational(den);
  Lattice scaled = lll_reduce(Lattice::from_gram(g));
  BigInt bound = scaled.gram()(0, 0).num();
  for (std::size_t i = 1; i < scaled.rank(); ++i) bound = std::min(bound, scaled.gram()(i, i).num());
  require(bound < kMaxEntry, ErrorCode::kDomain, "minimal norm bound too large");
  auto counts = short_vectors(scaled, bound.get_si(), 1);
  require(!counts.empty(), ErrorCode::kInternal, "no vectors found below a basis norm");
  return Rational(BigInt(counts.begin()->first), den);
}

ThetaSeries theta_product(const ThetaSeries& a, const ThetaSeries& b) {
  ThetaSeries out;
  out.order = std::min(a.order, b.order);
  out.counts.assign(static_cast<std::size_t>(out.order) + 1, BigInt(0));
  for (int i = 0; i <= out.order; ++i)
    for (int j = 0; i + j <= out.order; ++j)
      out.counts[static_cast<std::size_t>(i + j)] += a.counts[static_cast<std::size_t>(i)] * b.counts[static_cast<std::size_t>(j)];
  return out;
}

ThetaSeries theta_series_direct(const Lattice& l, int order, unsigned threads) {
  require(order >= 0, ErrorCode::kDomain, "theta order must be nonnegative");
  require(is_even(l), ErrorCode::kDomain, "theta series needs an even lattice");
  auto counts = short_vectors(l, 2L * order, threads);
  ThetaSeries t;
  t.order = order;
  t.counts.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
  t.counts[0] = 1;
  for (const auto& [norm, c] : counts) {
    require(norm % 2 == 0, ErrorCode::kInternal, "odd norm in an even lattice");
    t.counts[static_cast<std::size_t>(norm / 2)] = BigInt(static_cast<unsigned long>(c));
  }
  return t;
}

ThetaSeries theta_series(const Lattice& l, int order, unsigned threads) {
  require(l.signature() == Signature::kEuclidean, ErrorCode::kDomain,
          "theta series needs a Euclidean lattice");
  require(is_even(l), ErrorCode::kDomain, "theta series needs an even lattice");
  const RatMatrix& g = l.gram();
  const std::size_t n = g.rows();
  // Connected components of the "nonzero inner product" graph on basis vectors.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack = {s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && !g(i, j).is_zero()) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  if (ncomp == 1) return theta_series_direct(l, order, threads);
  ThetaSeries acc;
  acc.order = order;
  acc.counts.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
  acc.counts[0] = 1;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) idx.push_back(i);
    RatMatrix sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = g(idx[a], idx[b]);
    acc = theta_product(acc, theta_series_direct(Lattice::from_gram(sub), order, threads));
  }
  return acc;
}

}  // namespace exceptia
