#include "exceptia/hypercomplex.hpp"

#include <map>
#include <mutex>
#include <set>

namespace exceptia {

namespace {

constexpr int kMaxLevel = 16;

std::size_t dim_of(int level) {
  require(level >= 0 && level <= kMaxLevel, ErrorCode::kDomain, "Cayley-Dickson level out of range");
  return std::size_t{1} << static_cast<unsigned>(level);
}

template <class S>
void check_same(const HyperNumber<S>& x, const HyperNumber<S>& y) {
  if (x.level() != y.level()) {
    fail(ErrorCode::kMismatch, "level mismatch: " + std::to_string(x.level()) + " vs " +
                                   std::to_string(y.level()));
  }
}

bool is_one(const Rational& s) { return s == Rational(1); }
bool is_one(const Golden& s) { return s == Golden(1); }
bool negative_lead(const Rational& s) { return s.sign() < 0; }
bool negative_lead(const Golden& s) { return s.v().is_zero() && s.u().sign() < 0; }

// Recursive Cayley-Dickson product on coordinate spans of equal power-of-two
// length.
template <class S>
void cd_mul_into(std::span<const S> x, std::span<const S> y, std::span<S> out) {
  const std::size_t n = x.size();
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  auto a = x.first(h), b = x.subspan(h);
  auto c = y.first(h), d = y.subspan(h);
  std::vector<S> dconj(d.begin(), d.end()), cconj(c.begin(), c.end());
  for (std::size_t t = 1; t < h; ++t) {
    dconj[t] = -dconj[t];
    cconj[t] = -cconj[t];
  }
  std::vector<S> t1(h, S(0)), t2(h, S(0));
  cd_mul_into<S>(a, c, out.first(h));
  cd_mul_into<S>(dconj, b, t1);
  for (std::size_t t = 0; t < h; ++t) out[t] -= t1[t];
  cd_mul_into<S>(d, a, out.subspan(h));
  cd_mul_into<S>(b, cconj, t2);
  for (std::size_t t = 0; t < h; ++t) out[h + t] += t2[t];
}

}  // namespace

template <class S>
HyperNumber<S>::HyperNumber(int level) : level_(level), coords_(dim_of(level), S(0)) {}

template <class S>
HyperNumber<S>::HyperNumber(int level, std::vector<S> coords)
    : level_(level), coords_(std::move(coords)) {
  require(coords_.size() == dim_of(level), ErrorCode::kMismatch,
          "coordinate count does not match 2^level");
}

template <class S>
HyperNumber<S> HyperNumber<S>::basis(int level, std::size_t index, S coeff) {
  HyperNumber h(level);
  require(index < h.size(), ErrorCode::kDomain, "basis index out of range");
  h.coords_[index] = std::move(coeff);
  return h;
}

template <class S>
bool HyperNumber<S>::is_zero() const {
  for (const S& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

template <class S>
HyperNumber<S>& HyperNumber<S>::operator+=(const HyperNumber& o) {
  check_same(*this, o);
  for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] += o.coords_[t];
  return *this;
}

template <class S>
HyperNumber<S>& HyperNumber<S>::operator-=(const HyperNumber& o) {
  check_same(*this, o);
  for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] -= o.coords_[t];
  return *this;
}

template <class S>
HyperNumber<S> HyperNumber<S>::operator-() const {
  HyperNumber r = *this;
  for (S& c : r.coords_) c = -c;
  return r;
}

template <class S>
HyperNumber<S> HyperNumber<S>::scaled(const S& s) const {
  HyperNumber r = *this;
  for (S& c : r.coords_) c *= s;
  return r;
}

template <class S>
HyperNumber<S> HyperNumber<S>::first_half() const {
  require(level_ >= 1, ErrorCode::kDomain, "level-0 number has no halves");
  const std::size_t h = coords_.size() / 2;
  return HyperNumber(level_ - 1, std::vector<S>(coords_.begin(), coords_.begin() + h));
}

template <class S>
HyperNumber<S> HyperNumber<S>::second_half() const {
  require(level_ >= 1, ErrorCode::kDomain, "level-0 number has no halves");
  const std::size_t h = coords_.size() / 2;
  return HyperNumber(level_ - 1, std::vector<S>(coords_.begin() + h, coords_.end()));
}

template <class S>
HyperNumber<S> HyperNumber<S>::pair(const HyperNumber& a, const HyperNumber& b) {
  check_same(a, b);
  std::vector<S> c(a.coords_);
  c.insert(c.end(), b.coords_.begin(), b.coords_.end());
  return HyperNumber(a.level_ + 1, std::move(c));
}

template <class S>
std::string HyperNumber<S>::str() const {
  std::string out;
  for (std::size_t t = 0; t < coords_.size(); ++t) {
    const S& c = coords_[t];
    if (c.is_zero()) continue;
    std::string unit = t == 0 ? "" : "e" + std::to_string(t);
    bool neg = negative_lead(c);
    S mag = neg ? -c : c;
    std::string term;
    if (t != 0 && is_one(mag)) {
      term = unit;
    } else {
      term = mag.str() + (unit.empty() ? "" : "*" + unit);
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

template <class S>
HyperNumber<S> cd_mul(const HyperNumber<S>& x, const HyperNumber<S>& y) {
  check_same(x, y);
  std::vector<S> out(x.size(), S(0));
  cd_mul_into<S>(x.coords(), y.coords(), out);
  return HyperNumber<S>(x.level(), std::move(out));
}

template <class S>
HyperNumber<S> cd_conj(const HyperNumber<S>& x) {
  HyperNumber<S> r = x;
  for (std::size_t t = 1; t < r.size(); ++t) r[t] = -r[t];
  return r;
}

template <class S>
S cd_norm(const HyperNumber<S>& x) {
  S n(0);
  for (const S& c : x.coords()) n += c * c;
  return n;
}

template <class S>
HyperNumber<S> cd_inv(const HyperNumber<S>& x) {
  S n = cd_norm(x);
  if (n.is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of a zero-norm element");
  HyperNumber<S> r = cd_conj(x);
  for (std::size_t t = 0; t < r.size(); ++t) r[t] = r[t] / n;
  return r;
}

FanoProduct fano_mul(int i, int j) {
  if (i < 1 || i > 7 || j < 1 || j > 7) {
    fail(ErrorCode::kDomain, "octonion unit index must be in 1..7");
  }
  if (i == j) return {0, -1};
  auto wrap = [](int t) { return ((t - 1) % 7 + 7) % 7 + 1; };
  for (int t = 1; t <= 7; ++t) {
    const int a = t, b = wrap(t + 1), c = wrap(t + 3);
    const int line[3] = {a, b, c};
    for (int r = 0; r < 3; ++r) {
      const int p = line[r], q = line[(r + 1) % 3], s = line[(r + 2) % 3];
      if (i == p && j == q) return {s, +1};
      if (i == q && j == p) return {s, -1};
    }
  }
  fail(ErrorCode::kInternal, "Fano table has no line through the pair");
}

template <class S>
HyperNumber<S> fano_octonion_mul(const HyperNumber<S>& x, const HyperNumber<S>& y) {
  require(x.level() == 3 && y.level() == 3, ErrorCode::kMismatch,
          "Fano multiplication needs two octonions (level 3)");
  static const auto table = [] {
    std::array<std::array<FanoProduct, 8>, 8> t{};
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        if (i == 0) t[i][j] = {j, +1};
        else if (j == 0) t[i][j] = {i, +1};
        else t[i][j] = fano_mul(i, j);
      }
    return t;
  }();
  std::vector<S> out(8, S(0));
  for (int i = 0; i < 8; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (y[j].is_zero()) continue;
      const FanoProduct& p = table[i][j];
      S term = x[i] * y[j];
      if (p.sign > 0) out[p.index] += term;
      else out[p.index] -= term;
    }
  }
  return HyperNumber<S>(3, std::move(out));
}

template <class S>
HyperNumber<S> xproduct(const HyperNumber<S>& a, const HyperNumber<S>& b,
                        const HyperNumber<S>& c) {
  require(a.level() == 3 && b.level() == 3 && c.level() == 3, ErrorCode::kMismatch,
          "x-product needs three octonions (level 3)");
  return fano_octonion_mul(fano_octonion_mul(b, a), fano_octonion_mul(cd_conj(a), c));
}

PermutationIJK::PermutationIJK(std::array<int, 3> image) : image_(image) {
  std::array<bool, 3> seen{};
  for (int v : image_) {
    require(v >= 1 && v <= 3, ErrorCode::kDomain, "permutation image must be in {1,2,3}");
    require(!seen[v - 1], ErrorCode::kDomain, "not a permutation of {i,j,k}");
    seen[v - 1] = true;
  }
  int inversions = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (image_[a] > image_[b]) ++inversions;
  even_ = inversions % 2 == 0;
}

PermutationIJK PermutationIJK::parse(std::string_view images) {
  if (images.size() != 3) fail(ErrorCode::kParse, "permutation must be three letters from {i,j,k}");
  std::array<int, 3> img{};
  for (std::size_t t = 0; t < 3; ++t) {
    switch (images[t]) {
      case 'i': img[t] = 1; break;
      case 'j': img[t] = 2; break;
      case 'k': img[t] = 3; break;
      default: fail(ErrorCode::kParse, "permutation must be three letters from {i,j,k}");
    }
  }
  return PermutationIJK(img);
}

std::array<PermutationIJK, 6> PermutationIJK::all() {
  return {PermutationIJK({1, 2, 3}), PermutationIJK({2, 3, 1}), PermutationIJK({3, 1, 2}),
          PermutationIJK({2, 1, 3}), PermutationIJK({1, 3, 2}), PermutationIJK({3, 2, 1})};
}

std::string PermutationIJK::str() const {
  std::string s;
  for (int v : image_) s += "ijk"[v - 1];
  return s;
}

template <class S>
HyperNumber<S> ijk_permute(const PermutationIJK& p, const HyperNumber<S>& q) {
  require(q.level() == 2, ErrorCode::kMismatch, "permutations of {i,j,k} act on quaternions");
  HyperNumber<S> r(2);
  r[0] = q[0];
  for (int t = 0; t < 3; ++t) r[static_cast<std::size_t>(p.image()[t])] = q[static_cast<std::size_t>(t) + 1];
  return r;
}

bool hurwitz_contains(const RatHyper& q) {
  require(q.level() == 2, ErrorCode::kMismatch, "Hurwitz membership is for quaternions");
  bool all_int = true, all_half = true;
  for (const Rational& c : q.coords()) {
    if (!c.is_integer()) all_int = false;
    if (!(c * Rational(2)).is_integer() || c.is_integer()) all_half = false;
  }
  return all_int || all_half;
}

std::vector<RatHyper> hurwitz_units() {
  std::vector<RatHyper> out;
  for (std::size_t t = 0; t < 4; ++t) {
    out.push_back(RatHyper::basis(2, t, Rational(1)));
    out.push_back(RatHyper::basis(2, t, Rational(-1)));
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Rational> c(4);
    for (int t = 0; t < 4; ++t) c[t] = Rational((mask >> t) & 1 ? -1 : 1, 2);
    out.emplace_back(2, std::move(c));
  }
  return out;
}

std::array<Rational, 8> icosian_to_r8(const GoldHyper& q) {
  require(q.level() == 2, ErrorCode::kMismatch, "icosians are quaternions (level 2)");
  std::array<Rational, 8> x;
  for (std::size_t t = 0; t < 4; ++t) {
    x[2 * t] = q[t].u();
    x[2 * t + 1] = q[t].v();
  }
  return x;
}

GoldHyper icosian_from_r8(std::span<const Rational> x) {
  require(x.size() == 8, ErrorCode::kMismatch, "icosian coordinates have length 8");
  std::vector<Golden> c;
  for (std::size_t t = 0; t < 4; ++t) c.emplace_back(x[2 * t], x[2 * t + 1]);
  return GoldHyper(2, std::move(c));
}

namespace {

struct IcosianData {
  std::vector<GoldHyper> basis;
  RatMatrix basis_r8;
  std::vector<IcosianElement> units;
};

std::string key_of(const GoldHyper& q) {
  std::string k;
  for (const Golden& g : q.coords()) k += g.u().str() + "," + g.v().str() + ";";
  return k;
}

IcosianData build_icosians() {
  const Golden half(Rational(1, 2));
  const Golden phi_inv = Golden::phi() - Golden(1);  // phi^-1 = phi - 1
  std::vector<GoldHyper> seeds = {
      GoldHyper::basis(2, 1), GoldHyper::basis(2, 2),
      GoldHyper(2, {phi_inv * half, half, Golden::phi() * half, Golden(0)})};

  std::map<std::string, GoldHyper> group;
  std::vector<GoldHyper> frontier = {GoldHyper::one(2)};
  group.emplace(key_of(frontier[0]), frontier[0]);
  constexpr std::size_t kClosureBound = 10000;
  while (!frontier.empty()) {
    std::vector<GoldHyper> next;
    for (const GoldHyper& a : frontier)
      for (const GoldHyper& s : seeds) {
        GoldHyper p = cd_mul(a, s);
        if (group.emplace(key_of(p), p).second) next.push_back(p);
      }
    if (group.size() > kClosureBound) {
      fail(ErrorCode::kInternal, "icosian closure exceeded its bound: wrong seed set");
    }
    frontier = std::move(next);
  }

  // Doubled-denominator integer images of the units; coordinates live in Z/4.
  IntMatrix img(group.size(), 8);
  std::size_t r = 0;
  for (const auto& [k, q] : group) {
    auto x = icosian_to_r8(q);
    for (std::size_t t = 0; t < 8; ++t) {
      Rational s = x[t] * Rational(4);
      require(s.is_integer(), ErrorCode::kInternal, "icosian coordinate outside Z/4");
      img(r, t) = s.num();
    }
    ++r;
  }
  IntMatrix hb = row_basis(img);
  require(hb.rows() == 8, ErrorCode::kInternal, "icosian ring does not have rank 8");

  IcosianData d;
  d.basis_r8 = RatMatrix(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    std::vector<Rational> row(8);
    for (std::size_t t = 0; t < 8; ++t) {
      row[t] = Rational(hb(i, t), BigInt(4));
      d.basis_r8(i, t) = row[t];
    }
    d.basis.push_back(icosian_from_r8(row));
  }
  for (const auto& [k, q] : group) {
    auto x = icosian_to_r8(q);
    auto c = solve_row_combination(d.basis_r8, x);
    require(c.has_value(), ErrorCode::kInternal, "unit outside its own span");
    IcosianElement e{q, {}};
    for (std::size_t t = 0; t < 8; ++t) {
      require((*c)[t].is_integer(), ErrorCode::kInternal, "non-integral unit certificate");
      e.certificate[t] = (*c)[t].num();
    }
    d.units.push_back(std::move(e));
  }
  return d;
}

const IcosianData& icosian_data() {
  static const IcosianData data = build_icosians();
  return data;
}

}  // namespace

const std::vector<IcosianElement>& icosian_units() { return icosian_data().units; }

const std::vector<GoldHyper>& icosian_ring_basis() { return icosian_data().basis; }

std::optional<IcosianElement> icosian_from(const GoldHyper& q) {
  const IcosianData& d = icosian_data();
  auto x = icosian_to_r8(q);
  auto c = solve_row_combination(d.basis_r8, x);
  if (!c) return std::nullopt;
  IcosianElement e{q, {}};
  for (std::size_t t = 0; t < 8; ++t) {
    if (!(*c)[t].is_integer()) return std::nullopt;
    e.certificate[t] = (*c)[t].num();
  }
  return e;
}

#define EXCEPTIA_INSTANTIATE(S)                                                          \
  template class HyperNumber<S>;                                                         \
  template HyperNumber<S> cd_mul(const HyperNumber<S>&, const HyperNumber<S>&);          \
  template HyperNumber<S> cd_conj(const HyperNumber<S>&);                                \
  template S cd_norm(const HyperNumber<S>&);                                             \
  template HyperNumber<S> cd_inv(const HyperNumber<S>&);                                 \
  template HyperNumber<S> fano_octonion_mul(const HyperNumber<S>&, const HyperNumber<S>&); \
  template HyperNumber<S> xproduct(const HyperNumber<S>&, const HyperNumber<S>&,         \
                                   const HyperNumber<S>&);                               \
  template HyperNumber<S> ijk_permute(const PermutationIJK&, const HyperNumber<S>&);

EXCEPTIA_INSTANTIATE(Rational)
EXCEPTIA_INSTANTIATE(Golden)

#undef EXCEPTIA_INSTANTIATE

}  // namespace exceptia
