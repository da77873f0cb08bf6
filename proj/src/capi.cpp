#include "exceptia/exceptia.h"

#include <cstring>
#include <new>
#include <sstream>

#include "exceptia/clifford.hpp"
#include "exceptia/hypercomplex.hpp"
#include "exceptia/identities.hpp"
#include "exceptia/lattices.hpp"
#include "exceptia/modular.hpp"

struct exc_hyper {
  exceptia::GoldHyper value;
};
struct exc_clifford {
  exceptia::CliffordElement value;
};
struct exc_lattice {
  exceptia::Lattice value;
};
struct exc_series {
  exceptia::LaurentSeries value;
};

namespace {

using namespace exceptia;

thread_local std::string g_last_error;

struct NullArgument {};
struct BufferTooSmall {};

template <class F>
exc_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return EXC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<exc_status>(static_cast<int>(e.code()));
  } catch (const NullArgument&) {
    g_last_error = "null argument";
    return EXC_ERR_NULL_ARGUMENT;
  } catch (const BufferTooSmall&) {
    g_last_error = "output buffer too small";
    return EXC_ERR_BUFFER_TOO_SMALL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return EXC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EXC_ERR_INTERNAL;
  }
}

template <class... P>
void need(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<Rational> parse_coords(const char* text) {
  std::istringstream is(text);
  std::vector<Rational> out;
  std::string tok;
  while (is >> tok) {
    for (char& c : tok)
      if (c == ',' || c == '(' || c == ')') c = ' ';
    std::istringstream inner(tok);
    std::string piece;
    while (inner >> piece) out.push_back(Rational::parse(piece));
  }
  return out;
}

std::string golden_text(const Golden& g) { return g.str(); }

}  // namespace

extern "C" {

const char* exc_version(void) { return "1.0.0"; }
const char* exc_last_error(void) { return g_last_error.c_str(); }
void exc_string_free(char* s) { std::free(s); }

// --- hypercomplex --------------------------------------------------------------

exc_status exc_hyper_parse(const char* text, int level, exc_hyper** out) {
  return guarded([&] {
    need(text, out);
    *out = new exc_hyper{parse_hyper(text, level)};
  });
}

void exc_hyper_free(exc_hyper* x) { delete x; }
int exc_hyper_level(const exc_hyper* x) { return x ? x->value.level() : -1; }
int exc_hyper_is_zero(const exc_hyper* x) { return x && x->value.is_zero() ? 1 : 0; }

exc_status exc_hyper_str(const exc_hyper* x, char** out) {
  return guarded([&] {
    need(x, out);
    *out = dup(x->value.str());
  });
}

exc_status exc_hyper_coeff(const exc_hyper* x, size_t index, char** out) {
  return guarded([&] {
    need(x, out);
    require(index < x->value.size(), ErrorCode::kDomain, "coordinate index out of range");
    *out = dup(golden_text(x->value[index]));
  });
}

exc_status exc_hyper_mul(const exc_hyper* a, const exc_hyper* b, exc_hyper** out) {
  return guarded([&] {
    need(a, b, out);
    *out = new exc_hyper{cd_mul(a->value, b->value)};
  });
}

exc_status exc_hyper_fano_mul(const exc_hyper* a, const exc_hyper* b, exc_hyper** out) {
  return guarded([&] {
    need(a, b, out);
    *out = new exc_hyper{fano_octonion_mul(a->value, b->value)};
  });
}

exc_status exc_hyper_conj(const exc_hyper* x, exc_hyper** out) {
  return guarded([&] {
    need(x, out);
    *out = new exc_hyper{cd_conj(x->value)};
  });
}

exc_status exc_hyper_norm(const exc_hyper* x, char** out) {
  return guarded([&] {
    need(x, out);
    *out = dup(golden_text(cd_norm(x->value)));
  });
}

exc_status exc_hyper_inv(const exc_hyper* x, exc_hyper** out) {
  return guarded([&] {
    need(x, out);
    *out = new exc_hyper{cd_inv(x->value)};
  });
}

exc_status exc_hyper_xprod(const exc_hyper* a, const exc_hyper* b, const exc_hyper* c, exc_hyper** out) {
  return guarded([&] {
    need(a, b, c, out);
    *out = new exc_hyper{xproduct(a->value, b->value, c->value)};
  });
}

exc_status exc_hyper_permute(const char* perm, const exc_hyper* q, exc_hyper** out, int* even) {
  return guarded([&] {
    need(perm, q, out);
    const PermutationIJK p = PermutationIJK::parse(perm);
    GoldHyper r = ijk_permute(p, q->value);
    if (even) *even = p.is_even() ? 1 : 0;
    *out = new exc_hyper{std::move(r)};
  });
}

exc_status exc_fano_mul(int i, int j, int* index, int* sign) {
  return guarded([&] {
    need(index, sign);
    const FanoProduct f = fano_mul(i, j);
    *index = f.index;
    *sign = f.sign;
  });
}

// --- Clifford -----------------------------------------------------------------

exc_status exc_clifford_parse(int p, int q, const char* text, exc_clifford** out) {
  return guarded([&] {
    need(text, out);
    *out = new exc_clifford{parse_clifford({p, q}, text)};
  });
}

void exc_clifford_free(exc_clifford* x) { delete x; }

exc_status exc_clifford_str(const exc_clifford* x, char** out) {
  return guarded([&] {
    need(x, out);
    *out = dup(x->value.str());
  });
}

exc_status exc_clifford_mul(const exc_clifford* a, const exc_clifford* b, exc_clifford** out) {
  return guarded([&] {
    need(a, b, out);
    *out = new exc_clifford{clif_mul(a->value, b->value)};
  });
}

exc_status exc_clifford_classify(int p, int q, exc_algebra_class* out, char** name) {
  return guarded([&] {
    need(out);
    const MatrixAlgebraClass c = classify({p, q});
    *out = {real_dim(c.ring), c.size, c.summands};
    if (name) *name = dup(c.str());
  });
}

exc_status exc_clifford_gamma_square(int p, int q, int* out) {
  return guarded([&] {
    need(out);
    *out = gamma_square({p, q});
  });
}

exc_status exc_spinor_taxonomy(int n, exc_spinor_profile* out) {
  return guarded([&] {
    need(out);
    const SpinorProfile s = spinor_taxonomy(n);
    *out = {s.n, s.dirac_complex_dim, s.majorana ? 1 : 0, s.weyl ? 1 : 0, s.majorana_weyl ? 1 : 0,
            s.minimal_real_components, s.real_rep_cn1, s.real_rep_c1n};
  });
}

exc_status exc_super_ym_dims(int lo, int hi, int* dims, size_t cap, size_t* count) {
  return guarded([&] {
    need(count);
    const std::set<int> s = super_ym_dims(lo, hi);
    *count = s.size();
    if (cap < s.size() || (s.size() > 0 && dims == nullptr)) throw BufferTooSmall{};
    std::size_t i = 0;
    for (int d : s) dims[i++] = d;
  });
}

// --- lattices -----------------------------------------------------------------

exc_status exc_lattice_named(const char* name, exc_lattice** out) {
  return guarded([&] {
    need(name, out);
    *out = new exc_lattice{named_lattice(name)};
  });
}

exc_status exc_lattice_read_text(const char* text, exc_lattice** out) {
  return guarded([&] {
    need(text, out);
    *out = new exc_lattice{read_lattice_text(text)};
  });
}

exc_status exc_lattice_write_text(const exc_lattice* l, char** out) {
  return guarded([&] {
    need(l, out);
    *out = dup(write_lattice_text(l->value));
  });
}

void exc_lattice_free(exc_lattice* l) { delete l; }

exc_status exc_lattice_summary_of(const exc_lattice* l, exc_lattice_summary* out) {
  return guarded([&] {
    need(l, out);
    const Lattice& v = l->value;
    *out = {v.rank(), v.ambient_dim(), v.signature() == Signature::kLorentzian ? 1 : 0,
            is_integral(v) ? 1 : 0, is_even(v) ? 1 : 0, is_unimodular(v) ? 1 : 0};
  });
}

exc_status exc_lattice_determinant(const exc_lattice* l, char** out) {
  return guarded([&] {
    need(l, out);
    *out = dup(gram_determinant(l->value).str());
  });
}

exc_status exc_lattice_minimal_norm(const exc_lattice* l, char** out) {
  return guarded([&] {
    need(l, out);
    *out = dup(minimal_norm(l->value).str());
  });
}

exc_status exc_lattice_short_vectors(const exc_lattice* l, long max_norm, unsigned threads, long* norms,
                                     uint64_t* counts, size_t cap, size_t* count) {
  return guarded([&] {
    need(l, count);
    const auto m = short_vectors(l->value, max_norm, threads);
    *count = m.size();
    if (cap < m.size() || (!m.empty() && (norms == nullptr || counts == nullptr))) throw BufferTooSmall{};
    std::size_t i = 0;
    for (const auto& [n, c] : m) {
      norms[i] = n;
      counts[i] = c;
      ++i;
    }
  });
}

exc_status exc_lattice_theta(const exc_lattice* l, int order, unsigned threads, exc_series** out) {
  return guarded([&] {
    need(l, out);
    const ThetaSeries t = theta_series(l->value, order, threads);
    *out = new exc_series{LaurentSeries(0, t.counts)};
  });
}

exc_status exc_lattice_dual(const exc_lattice* l, exc_lattice** out) {
  return guarded([&] {
    need(l, out);
    *out = new exc_lattice{dual_lattice(l->value)};
  });
}

exc_status exc_lattice_lll(const exc_lattice* l, const char* delta, exc_lattice** out) {
  return guarded([&] {
    need(l, out);
    const Rational d = delta ? Rational::parse(delta) : default_lll_delta();
    *out = new exc_lattice{lll_reduce(l->value, d)};
  });
}

exc_status exc_lattice_same(const exc_lattice* a, const exc_lattice* b, int* out) {
  return guarded([&] {
    need(a, b, out);
    *out = same_lattice(a->value, b->value) ? 1 : 0;
  });
}

exc_status exc_lattice_direct_sum(const exc_lattice* a, const exc_lattice* b, exc_lattice** out) {
  return guarded([&] {
    need(a, b, out);
    *out = new exc_lattice{direct_sum(a->value, b->value)};
  });
}

exc_status exc_lattice_leech_icosian(int left, int golden_trace, exc_lattice** out,
                                     exc_icosian_report* report, char** scale, char** raw_min) {
  return guarded([&] {
    need(out);
    IcosianLatticeResult r =
        leech_from_icosians(left ? IcosianCongruence::kLeft : IcosianCongruence::kRight,
                            golden_trace ? IcosianForm::kGoldenTrace : IcosianForm::kCoordinate);
    std::string s = r.scale.str(), m = r.raw_minimal_norm.str();
    if (report) *report = {r.even_unimodular ? 1 : 0, left ? 1 : 0, golden_trace ? 1 : 0};
    char* sc = scale ? dup(s) : nullptr;
    char* mn = nullptr;
    try {
      mn = raw_min ? dup(m) : nullptr;
    } catch (...) {
      std::free(sc);
      throw;
    }
    *out = new exc_lattice{std::move(r.lattice)};
    if (scale) *scale = sc;
    if (raw_min) *raw_min = mn;
  });
}

exc_status exc_weyl_vector(int dim, char** out) {
  return guarded([&] {
    need(out);
    std::string s;
    for (const auto& c : weyl_vector(dim).coords()) s += (s.empty() ? "" : " ") + c.str();
    *out = dup(s);
  });
}

exc_status exc_ii_member(const char* coords, int* out) {
  return guarded([&] {
    need(coords, out);
    *out = ii_member(parse_coords(coords)) ? 1 : 0;
  });
}

exc_status exc_minkowski_dot(const char* u, const char* v, char** out) {
  return guarded([&] {
    need(u, v, out);
    *out = dup(minkowski_dot(parse_coords(u), parse_coords(v)).str());
  });
}

exc_status exc_is_fundamental_root(const char* coords, int dim, int* out) {
  return guarded([&] {
    need(coords, out);
    *out = is_fundamental_root(parse_coords(coords), dim) ? 1 : 0;
  });
}

// --- series -------------------------------------------------------------------

void exc_series_free(exc_series* s) { delete s; }
int exc_series_low(const exc_series* s) { return s ? s->value.low() : 0; }
int exc_series_high(const exc_series* s) { return s ? s->value.high() : -1; }

exc_status exc_series_coeff(const exc_series* s, int exponent, char** out) {
  return guarded([&] {
    need(s, out);
    require(exponent <= s->value.high(), ErrorCode::kDomain, "exponent beyond the series precision");
    *out = dup(to_string(s->value.coeff(exponent)));
  });
}

exc_status exc_series_str(const exc_series* s, char** out) {
  return guarded([&] {
    need(s, out);
    *out = dup(s->value.str());
  });
}

exc_status exc_eta24(int n, exc_series** out) {
  return guarded([&] {
    need(out);
    *out = new exc_series{eta24(n)};
  });
}

exc_status exc_j_from_lattice(const exc_lattice* l, int n, unsigned threads, exc_series** out) {
  return guarded([&] {
    need(l, out);
    *out = new exc_series{j_from_lattice(l->value, n, threads)};
  });
}

// --- identities ---------------------------------------------------------------

exc_status exc_bbp_pi_hex(uint64_t start, uint64_t count, char** out) {
  return guarded([&] {
    need(out);
    *out = dup(bbp_pi_hex(start, count));
  });
}

exc_status exc_square_pyramid(const char* n, char** out) {
  return guarded([&] {
    need(n, out);
    *out = dup(to_string(square_pyramid(parse_bigint(n))));
  });
}

exc_status exc_cannonball_search(uint64_t limit, uint64_t* values, size_t cap, size_t* count) {
  return guarded([&] {
    need(count);
    const auto v = cannonball_search(limit);
    *count = v.size();
    if (cap < v.size() || (!v.empty() && values == nullptr)) throw BufferTooSmall{};
    std::copy(v.begin(), v.end(), values);
  });
}

exc_status exc_spin_area(const char* spins, char** exact, double* approx) {
  return guarded([&] {
    need(spins, exact, approx);
    const SpinArea a = spin_area(SpinList::parse(spins));
    *exact = dup(a.str());
    *approx = a.approx;
  });
}

exc_status exc_linking_number_text(const char* text, int* out) {
  return guarded([&] {
    need(text, out);
    auto [g, h] = parse_loop_pair(text);
    *out = linking_number(g, h);
  });
}

exc_status exc_linking_number(const long* g, size_t g_vertices, const long* h, size_t h_vertices,
                              int* out) {
  return guarded([&] {
    need(g, h, out);
    auto build = [](const long* c, std::size_t n) {
      PolyLoop l;
      for (std::size_t i = 0; i < n; ++i) l.vertices.push_back({c[3 * i], c[3 * i + 1], c[3 * i + 2]});
      return l;
    };
    *out = linking_number(build(g, g_vertices), build(h, h_vertices));
  });
}

}  // extern "C"
