// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--slow] [--strict]
//
// --slow adds the Leech theta comparison through norm 8 (a few minutes).
// A criterion whose only failing check is a recorded deviation (the computed
// value is the independently verified one and the expected literal is not)
// prints FAIL with a "known deviation" note; these do not change the exit
// status unless --strict is given. Any other failure exits 1.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "exceptia/clifford.hpp"
#include "exceptia/hypercomplex.hpp"
#include "exceptia/identities.hpp"
#include "exceptia/lattices.hpp"
#include "exceptia/modular.hpp"
#include "oracles.hpp"

using namespace exceptia;

namespace {

struct Outcome {
  std::vector<std::string> failed;   // unexpected failures
  std::vector<std::string> known;    // recorded deviations
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
  // A deviation is "known" only when the computed value is the one the
  // independent oracle gives; anything else is an ordinary failure.
  void deviation(bool literal_ok, bool matches_oracle, const std::string& what) {
    if (literal_ok) return;
    (matches_oracle ? known : failed).push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

std::mt19937_64 rng(20260601);

Rational small_rational() {
  return Rational(BigInt(std::uniform_int_distribution<long>(-9, 9)(rng)),
                  BigInt(std::uniform_int_distribution<long>(1, 4)(rng)));
}

RatHyper random_hyper(int level) {
  RatHyper x(level);
  for (std::size_t t = 0; t < x.size(); ++t) x[t] = small_rational();
  return x;
}

RatHyper unit(int level, std::size_t t, long c = 1) { return RatHyper::basis(level, t, Rational(c)); }

int wrap7(int v) { return (v - 1) % 7 + 1; }

std::string counts_str(const std::vector<BigInt>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + to_string(c[i]);
  return s + ")";
}

bool slow_tier = false;

// --- criteria -----------------------------------------------------------------

void division_algebras(Outcome& o) {
  int bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int level = trial % 4;
    const RatHyper x = random_hyper(level), y = random_hyper(level);
    if (cd_norm(cd_mul(x, y)) != cd_norm(x) * cd_norm(y)) ++bad;
  }
  o.check(bad == 0, "norm multiplicativity failed in " + std::to_string(bad) + " of 1000 trials");

  const GoldHyper a = parse_hyper("(e1,e4)", 4), b = parse_hyper("(-1,e5)", 4);
  const GoldHyper p = cd_mul(a, b);
  // Under (a,b)(c,d) = (ac - d*b, da + bc*) the second half cancels and the
  // first half is e1 * (-1) - (-e5) e4 = -e1 + e5 e4 = -2 e1.
  const bool computed_by_hand = p == GoldHyper::basis(4, 1, Golden(-2));
  o.deviation(p.is_zero() && !a.is_zero() && !b.is_zero(), computed_by_hand,
              "(e1,e4)(-1,e5) = " + p.str() + ", not 0 (e5 e4 = -e1 under the product formula)");
  const RatHyper zx = unit(4, 1) + unit(4, 10), zy = unit(4, 4) - unit(4, 15);
  const bool witness = cd_mul(zx, zy).is_zero();
  o.check(witness, "zero divisor witness (e1 + e10)(e4 - e15) is not zero");
  if (witness) o.note("sedenion zero divisor witness (e1 + e10)(e4 - e15) = 0");
}

void fano_invariants(Outcome& o) {
  int pairs = 0, bad = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      ++pairs;
      const FanoProduct p = fano_mul(i, j);
      if (fano_mul(wrap7(i + 1), wrap7(j + 1)) != FanoProduct{wrap7(p.index + 1), p.sign}) ++bad;
      if (fano_mul(wrap7(2 * i), wrap7(2 * j)) != FanoProduct{wrap7(2 * p.index), p.sign}) ++bad;
    }
  o.check(pairs == 21 && bad == 0, "cycling/doubling violated " + std::to_string(bad) + " times");
  o.check(fano_mul(1, 2) == FanoProduct{4, 1}, "e1 e2 != e4");
  o.check(fano_mul(2, 4) == FanoProduct{1, 1}, "e2 e4 != e1");
  o.check(fano_mul(5, 2) == FanoProduct{3, 1}, "e5 e2 != e3");
  o.check(fano_mul(3, 7) == FanoProduct{1, 1}, "e3 e7 != e1");
}

void triality(Outcome& o) {
  int even = 0, odd = 0;
  for (const auto& p : PermutationIJK::all()) {
    (p.is_even() ? even : odd)++;
    for (int trial = 0; trial < 500; ++trial) {
      const RatHyper q = random_hyper(2), r = random_hyper(2);
      const RatHyper lhs = ijk_permute(p, cd_mul(q, r));
      const RatHyper pq = ijk_permute(p, q), pr = ijk_permute(p, r);
      if (lhs != (p.is_even() ? cd_mul(pq, pr) : cd_mul(pr, pq))) {
        o.check(false, "permutation " + p.str() + " breaks its product rule");
        break;
      }
    }
  }
  o.check(even == 3 && odd == 3, "expected 3 even and 3 odd permutations");
}

void clifford_tables(Outcome& o) {
  const char* cn[] = {"R", "C", "H", "H+H", "H(2)", "C(4)", "R(8)", "R(8)+R(8)", "R(16)"};
  const char* cn1[] = {"R+R", "R(2)", "C(2)", "H(2)", "H(2)+H(2)", "H(4)", "C(8)", "R(16)"};
  const char* c1n[] = {"C", "R(2)", "R(2)+R(2)", "R(4)", "C(4)", "H(4)", "H(4)+H(4)", "H(8)"};
  int rows = 0;
  for (int n = 0; n <= 8; ++n) {
    const std::string got = classify({n, 0}).str();
    o.check(got == cn[n], "C_" + std::to_string(n) + " = " + got);
    ++rows;
  }
  for (int n = 1; n <= 8; ++n) {
    const std::string a = classify({n - 1, 1}).str(), b = classify({1, n - 1}).str();
    o.check(a == cn1[n - 1], "C_{" + std::to_string(n - 1) + ",1} = " + a);
    o.check(b == c1n[n - 1], "C_{1," + std::to_string(n - 1) + "} = " + b);
    rows += 2;
  }
  int sigs = 0;
  for (int p = 0; p <= 8; ++p)
    for (int q = 0; p + q <= 8; ++q, ++sigs) o.check(periodicity_check({p, q}), "periodicity fails at (" + std::to_string(p) + "," + std::to_string(q) + ")");
  o.note(std::to_string(rows) + " table rows, " + std::to_string(sigs) + " signatures checked for period 8");
}

void spinors(Outcome& o) {
  // Real component counts per kind; 0 where the table is blank.
  struct Row { std::uint64_t dirac, majorana, weyl, mw; };
  const Row table[] = {{2, 1, 0, 0}, {4, 2, 2, 1}, {4, 2, 0, 0}, {8, 4, 4, 0},
                       {8, 0, 0, 0}, {16, 0, 8, 0}, {16, 0, 0, 0}, {32, 16, 16, 0}};
  for (int n = 1; n <= 8; ++n) {
    Row got{0, 0, 0, 0};
    for (const auto& [kind, comps] : spinor_taxonomy(n).admissible()) {
      switch (kind) {
        case SpinorKind::kDirac: got.dirac = comps; break;
        case SpinorKind::kMajorana: got.majorana = comps; break;
        case SpinorKind::kWeyl: got.weyl = comps; break;
        case SpinorKind::kMajoranaWeyl: got.mw = comps; break;
      }
    }
    const Row& want = table[n - 1];
    o.check(got.dirac == want.dirac && got.majorana == want.majorana && got.weyl == want.weyl && got.mw == want.mw,
            "spinor row n = " + std::to_string(n));
  }
  o.check(super_ym_dims(3, 12) == std::set<int>{3, 4, 6, 10}, "super_ym_dims(3,12) != {3,4,6,10}");
}

void e8(Outcome& o) {
  const Lattice l = build_E8();
  o.check(is_even(l) && is_unimodular(l), "E8 not even unimodular");
  const auto sv = short_vectors(l, 2);
  o.check(sv == std::map<long, std::uint64_t>{{2, 240}}, "norm-2 count is not 240");
  const ThetaSeries th = theta_series(l, 2);
  o.check(th.counts == std::vector<BigInt>{1, 240, 2160}, "theta " + counts_str(th.counts));
  const auto [n2, n4] = oracle::e8_coordinate_counts();
  o.check(n2 == 240 && n4 == 2160, "coordinate brute force gives " + std::to_string(n2) + ", " + std::to_string(n4));
  o.note("theta " + counts_str(th.counts) + ", brute force norm 4: " + std::to_string(n4));
}

void j_function(Outcome& o) {
  const Lattice e = build_E8();
  const Lattice e24 = direct_sum(direct_sum(e, e), e);
  const LaurentSeries j = j_from_lattice(e24, 2);
  const oracle::Poly ref = oracle::j_oracle(2);
  const bool matches_oracle = j == LaurentSeries(-1, ref);
  o.note("computed " + j.str());
  o.check(j.coeffs_through(-1, 1) == std::vector<BigInt>{1, 744, 196884}, "q^-1, q^0, q^1 coefficients differ");
  o.deviation(j.coeff(2) == 21493706, matches_oracle && j.coeff(2) == 21493760,
              "q^2 coefficient is " + to_string(j.coeff(2)) + " (E4^3/Delta gives " + to_string(ref[3]) + "), expected literal 21493706");
  const LaurentSeries jd = j_from_lattice(direct_sum(e, build_D16plus()), 2);
  bool only_constant = true;
  for (int t = -1; t <= 2; ++t)
    if (t != 0 && jd.coeff(t) != j.coeff(t)) only_constant = false;
  o.check(only_constant, "E8+D16+ differs outside the constant term");
  o.note("E8+D16+ constant difference " + to_string(jd.coeff(0) - j.coeff(0)));
}

void lorentzian(Outcome& o) {
  const LorentzianVector w = weyl_vector(26);
  o.check(w.str() == "(70,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24)",
          "unexpected Weyl vector " + w.str());
  o.check(ii_member(w.coords()), "w26 not in II_{25,1}");
  o.check(minkowski_dot(w, w).is_zero(), "w26 not lightlike");
  for (int dim : {10, 18}) {
    const LorentzianVector v = weyl_vector(dim);
    o.check(ii_member(v.coords()), "Weyl vector not a member in dim " + std::to_string(dim));
    o.check(!minkowski_dot(v, v).is_zero(), "Weyl vector lightlike in dim " + std::to_string(dim));
  }
  o.check(square_pyramid(24) == 70 * 70, "1^2 + ... + 24^2 != 70^2");
  o.check(cannonball_search(100000) == std::vector<std::uint64_t>{1, 24}, "cannonball search != {1, 24}");
}

void leech(Outcome& o) {
  const Lattice l = leech_from_ii26();
  o.check(l.rank() == 24 && is_even(l) && is_unimodular(l), "not an even unimodular rank-24 lattice");
  o.check(short_vectors(l, 2).empty(), "norm-2 vectors present");
  const auto a = short_vectors(l, 4, 1);
  const auto b = short_vectors(l, 4, 3);
  const auto c = short_vectors(leech_from_ii26(), 4);
  const bool stable = a == b && b == c;
  o.check(stable, "norm-4 counts differ between runs or thread counts");
  o.check(a.size() == 1 && a.count(4) && a.at(4) == 196560, "norm-4 count is not 196560");
  o.note("norm 4 count " + std::to_string(a.count(4) ? a.at(4) : 0) + " (1, 3 and " +
         std::to_string(enumeration_threads()) + " threads)");
  const auto ico = leech_from_icosians();
  o.check(ico.even_unimodular, "icosian Leech is not even unimodular after rescaling");
  const int order = slow_tier ? 4 : 2;
  const ThetaSeries t1 = theta_series(l, order), t2 = theta_series(ico.lattice, order);
  o.check(t1 == t2, "theta disagreement: " + counts_str(t1.counts) + " vs " + counts_str(t2.counts));
  o.note("theta through norm " + std::to_string(2 * order) + " " + counts_str(t1.counts) +
         " agrees with the icosian construction (scale " + ico.scale.str() + ")");
  if (!slow_tier) o.note("norm 8 comparison skipped; rerun with --slow");
}

void bbp(Outcome& o) {
  const std::string ref = oracle::exact_pi_hex(40, 40);
  const std::string got = bbp_pi_hex(1, 10);
  o.check(ref.substr(0, 10) == "243F6A8885", "exact oracle gives " + ref.substr(0, 10));
  o.check(got == "243F6A8885", "bbp_pi_hex(1,10) = " + got);
  o.check(bbp_pi_hex(1, 40) == ref, "first 40 digits disagree with the exact series");
  const std::string first = bbp_pi_hex(1, 64);
  for (std::uint64_t k = 1; k <= 64; ++k)
    if (bbp_pi_hex(k, 1)[0] != first[k - 1]) o.check(false, "position " + std::to_string(k) + " inconsistent");
}

void linking(Outcome& o) {
  const PolyLoop g{{{-1, -1, 0}, {1, -1, 0}, {1, 1, 0}, {-1, 1, 0}}};
  const PolyLoop h{{{0, 0, -1}, {2, 0, -1}, {2, 0, 1}, {0, 0, 1}}};
  const int l = linking_number(g, h);
  o.check(l == 1 || l == -1, "Hopf link gives " + std::to_string(l));
  o.check(linking_number(g, reversed(h)) == -l, "reversal does not flip the sign");
  const PolyLoop far{{{9, -1, 5}, {11, -1, 5}, {11, 1, 5}, {9, 1, 5}}};
  o.check(linking_number(g, far) == 0, "split loops are linked");
  std::uniform_int_distribution<long> coord(-3, 3), len(3, 6);
  int pairs = 0, nonzero = 0;
  while (pairs < 50) {
    PolyLoop a, b;
    for (long t = len(rng); t > 0; --t) a.vertices.push_back({coord(rng), coord(rng), coord(rng)});
    for (long t = len(rng); t > 0; --t) b.vertices.push_back({coord(rng), coord(rng), coord(rng)});
    try {
      validate_loop(a);
      validate_loop(b);
    } catch (const Error&) {
      continue;
    }
    if (loops_intersect(a, b)) continue;
    const int ab = linking_number(a, b);
    if (linking_number(b, a) != ab) o.check(false, "asymmetric pair found");
    nonzero += ab != 0;
    ++pairs;
  }
  o.note("Hopf L = " + std::to_string(l) + "; " + std::to_string(nonzero) + " of 50 random pairs linked");
}

void properties(Outcome& o) {
  for (int trial = 0; trial < 1000; ++trial) {
    const RatHyper x = random_hyper(3), y = random_hyper(3);
    if (cd_mul(x, cd_mul(x, y)) != cd_mul(cd_mul(x, x), y)) {
      o.check(false, "alternativity fails at level 3");
      break;
    }
  }
  const RatHyper ax = unit(4, 1) + unit(4, 10), ay = unit(4, 4);
  o.check(cd_mul(ax, cd_mul(ax, ay)) != cd_mul(cd_mul(ax, ax), ay), "stored level-4 alternativity witness holds");
  const RatHyper e1 = unit(3, 1), e2 = unit(3, 2), e4 = unit(3, 4);
  o.check(cd_mul(cd_mul(e1, e2), e4) != cd_mul(e1, cd_mul(e2, e4)), "stored level-3 associativity witness holds");
  o.note("witnesses: x = e1 + e10, y = e4 at level 4; (e1 e2) e4 at level 3");

  const Lattice e = build_E8();
  o.check(same_lattice(dual_lattice(e), e), "dual(E8) != E8");
  for (const Lattice& l : {e, leech_from_ii26()}) {
    // Scramble with a fixed unimodular matrix, then reduce.
    IntMatrix u = IntMatrix::identity(l.rank());
    for (std::size_t i = 0; i + 1 < l.rank(); ++i) {
      for (std::size_t j = 0; j < l.rank(); ++j) u(i, j) += 2 * u(i + 1, j);
    }
    const Lattice messy = l.with_basis(to_rational(u) * l.basis());
    const Lattice red = lll_reduce(messy);
    o.check(gram_determinant(red) == gram_determinant(l), "LLL changed the determinant");
    o.check(short_vectors(red, 4) == short_vectors(l, 4), "LLL changed norm counts up to 4");
    o.check(is_lll_reduced(red), "LLL output not reduced");
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow_tier = true;
    } else if (std::strcmp(argv[i], "--strict") == 0) {
      strict = true;
    } else {
      std::fprintf(stderr, "usage: %s [--slow] [--strict]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "division-algebra frontier", 1, division_algebras},
      {2, "Fano invariants", 1, fano_invariants},
      {3, "triality on quaternions", 1, triality},
      {4, "Clifford tables", 1, clifford_tables},
      {5, "spinor taxonomy", 1, spinors},
      {6, "E8", 5, e8},
      {7, "j-function", 60, j_function},
      {8, "Lorentzian Weyl vectors", 10, lorentzian},
      {9, "Leech lattice", 15 * 60, leech},
      {10, "BBP digits", 5, bbp},
      {11, "linking numbers", 5, linking},
      {12, "property suites", 120, properties},
  };

  int unexpected = 0, known = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.failed.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds)
      o.failed.push_back("runtime " + std::to_string(secs) + " s over budget");
    const bool pass = o.failed.empty() && o.known.empty();
    std::printf("[%s] %2d %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto& f : o.failed) std::printf("       failed: %s\n", f.c_str());
    for (const auto& k : o.known) std::printf("       known deviation: %s\n", k.c_str());
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
    unexpected += o.failed.empty() ? 0 : 1;
    known += (o.failed.empty() && !o.known.empty()) ? 1 : 0;
  }
  std::printf("%d of %zu criteria pass; %d unexpected failure(s), %d known deviation(s)\n",
              static_cast<int>(criteria.size()) - unexpected - known, criteria.size(), unexpected, known);
  if (known > 0) std::printf("known deviations are described in README.md\n");
  return (unexpected > 0 || (strict && known > 0)) ? 1 : 0;
}
