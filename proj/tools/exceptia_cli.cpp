// Command-line front end. Talks to the library only through exceptia.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exceptia/exceptia.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct LibraryError {
  exc_status status;
  std::string message;
};

void check(exc_status s) {
  if (s != EXC_OK) throw LibraryError{s, exc_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { exc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return CString(s).get(); }

struct HyperDeleter { void operator()(exc_hyper* x) const { exc_hyper_free(x); } };
struct CliffordDeleter { void operator()(exc_clifford* x) const { exc_clifford_free(x); } };
struct LatticeDeleter { void operator()(exc_lattice* x) const { exc_lattice_free(x); } };
struct SeriesDeleter { void operator()(exc_series* x) const { exc_series_free(x); } };
using Hyper = std::unique_ptr<exc_hyper, HyperDeleter>;
using Clifford = std::unique_ptr<exc_clifford, CliffordDeleter>;
using LatticeH = std::unique_ptr<exc_lattice, LatticeDeleter>;
using Series = std::unique_ptr<exc_series, SeriesDeleter>;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw LibraryError{EXC_ERR_IO, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Integers print as JSON numbers when they fit in 64 bits, otherwise as strings.
Json big_number(const std::string& s) {
  if (s.find('/') != std::string::npos) return s;
  const bool neg = !s.empty() && s[0] == '-';
  const std::size_t digits = s.size() - (neg ? 1 : 0);
  if (digits < 19) return neg ? Json(std::stoll(s)) : Json(std::stoull(s));
  return s;
}

Hyper parse_hyper(const std::string& text, int level) {
  exc_hyper* h = nullptr;
  check(exc_hyper_parse(text.c_str(), level, &h));
  return Hyper(h);
}

std::string hyper_str(const exc_hyper* h) {
  char* s = nullptr;
  check(exc_hyper_str(h, &s));
  return take(s);
}

Json hyper_json(const exc_hyper* h) {
  Json coords = Json::array();
  const std::size_t n = std::size_t{1} << exc_hyper_level(h);
  for (std::size_t t = 0; t < n; ++t) {
    char* s = nullptr;
    check(exc_hyper_coeff(h, t, &s));
    coords.push_back(take(s));
  }
  return Json{{"level", exc_hyper_level(h)}, {"value", hyper_str(h)}, {"coords", coords}};
}

LatticeH load_lattice(const std::string& name, const std::string& input) {
  exc_lattice* l = nullptr;
  if (!input.empty()) {
    check(exc_lattice_read_text(read_file(input).c_str(), &l));
  } else {
    if (name.empty()) throw CLI::ValidationError("lattice", "give a lattice name or --input FILE");
    check(exc_lattice_named(name.c_str(), &l));
  }
  return LatticeH(l);
}

std::string lattice_text(const exc_lattice* l) {
  char* s = nullptr;
  check(exc_lattice_write_text(l, &s));
  return take(s);
}

std::string series_str(const exc_series* s) {
  char* out = nullptr;
  check(exc_series_str(s, &out));
  return take(out);
}

Json series_json(const exc_series* s) {
  Json coeffs = Json::object();
  for (int e = exc_series_low(s); e <= exc_series_high(s); ++e) {
    char* c = nullptr;
    check(exc_series_coeff(s, e, &c));
    coeffs[std::to_string(e)] = take(c);
  }
  return Json{{"low", exc_series_low(s)}, {"high", exc_series_high(s)}, {"text", series_str(s)},
              {"coefficients", coeffs}};
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

struct Output {
  bool json = false;
  void emit(const std::string& text, const Json& j) const {
    if (json) std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
  }
};

// --- hyper -----------------------------------------------------------------------

void add_hyper(CLI::App& app, Output& out) {
  auto* hyper = app.add_subcommand("hyper", "Cayley-Dickson numbers over Q(sqrt5)");
  hyper->require_subcommand(1);
  static int level = 3;
  static std::vector<std::string> args;
  static bool fano = false;
  static std::string perm;
  static int fi = 0, fj = 0;

  auto* mul = hyper->add_subcommand("mul", "product x*y");
  mul->add_option("--level", level, "Cayley-Dickson level (2 quaternions, 3 octonions, 4 sedenions)");
  mul->add_flag("--fano", fano, "multiply octonions with the Fano-plane table");
  mul->add_option("operands", args, "x y")->required()->expected(2);
  mul->callback([&] {
    Hyper x = parse_hyper(args[0], level), y = parse_hyper(args[1], level);
    exc_hyper* r = nullptr;
    check(fano ? exc_hyper_fano_mul(x.get(), y.get(), &r) : exc_hyper_mul(x.get(), y.get(), &r));
    Hyper res(r);
    out.emit(hyper_str(res.get()), hyper_json(res.get()));
  });

  auto unary = [&](const char* name, const char* help, auto op) {
    auto* c = hyper->add_subcommand(name, help);
    c->add_option("--level", level, "Cayley-Dickson level");
    c->add_option("x", args)->required()->expected(1);
    c->callback([&, op] {
      Hyper x = parse_hyper(args[0], level);
      op(x.get());
    });
  };
  unary("conj", "conjugate", [&](const exc_hyper* x) {
    exc_hyper* r = nullptr;
    check(exc_hyper_conj(x, &r));
    Hyper res(r);
    out.emit(hyper_str(res.get()), hyper_json(res.get()));
  });
  unary("inv", "inverse x*/N(x)", [&](const exc_hyper* x) {
    exc_hyper* r = nullptr;
    check(exc_hyper_inv(x, &r));
    Hyper res(r);
    out.emit(hyper_str(res.get()), hyper_json(res.get()));
  });
  unary("norm", "sum of squared coordinates", [&](const exc_hyper* x) {
    char* s = nullptr;
    check(exc_hyper_norm(x, &s));
    std::string n = take(s);
    out.emit(n, Json{{"norm", n}});
  });

  auto* f = hyper->add_subcommand("fano", "octonion unit product e_i e_j");
  f->add_option("i", fi)->required()->check(CLI::Range(1, 7));
  f->add_option("j", fj)->required()->check(CLI::Range(1, 7));
  f->callback([&] {
    int index = 0, sign = 0;
    check(exc_fano_mul(fi, fj, &index, &sign));
    std::string unit = index == 0 ? "1" : "e" + std::to_string(index);
    std::string text = "e" + std::to_string(fi) + " e" + std::to_string(fj) + " = " +
                       (sign < 0 ? "-" : "") + unit;
    out.emit(text, Json{{"i", fi}, {"j", fj}, {"index", index}, {"sign", sign}});
  });

  auto* xp = hyper->add_subcommand("xprod", "b x c = (b a)(a* c) on octonions");
  xp->add_option("operands", args, "a b c")->required()->expected(3);
  xp->callback([&] {
    Hyper a = parse_hyper(args[0], 3), b = parse_hyper(args[1], 3), c = parse_hyper(args[2], 3);
    exc_hyper* r = nullptr;
    check(exc_hyper_xprod(a.get(), b.get(), c.get(), &r));
    Hyper res(r);
    out.emit(hyper_str(res.get()), hyper_json(res.get()));
  });

  auto* pm = hyper->add_subcommand("permute", "apply a permutation of i, j, k to a quaternion");
  pm->add_option("perm", perm, "image string, e.g. jki sends i->j, j->k, k->i")->required();
  pm->add_option("q", args)->required()->expected(1);
  pm->callback([&] {
    Hyper q = parse_hyper(args[0], 2);
    exc_hyper* r = nullptr;
    int even = 0;
    check(exc_hyper_permute(perm.c_str(), q.get(), &r, &even));
    Hyper res(r);
    Json j = hyper_json(res.get());
    j["even"] = even == 1;
    out.emit(hyper_str(res.get()), j);
  });
}

// --- clifford --------------------------------------------------------------------

const char* ring_letter(int dim) { return dim == 1 ? "R" : dim == 2 ? "C" : "H"; }

void add_clifford(CLI::App& app, Output& out) {
  auto* cl = app.add_subcommand("clifford", "Clifford algebras C_{p,q}");
  cl->require_subcommand(1);
  static int p = 0, q = 0, n = 0, lo = 3, hi = 12;
  static std::vector<std::string> args;

  auto* mul = cl->add_subcommand("mul", "product of two multivectors");
  mul->add_option("--p", p, "generators squaring to -1")->required();
  mul->add_option("--q", q, "generators squaring to +1")->required();
  mul->add_option("operands", args, "x y")->required()->expected(2);
  mul->callback([&] {
    exc_clifford *x = nullptr, *y = nullptr, *r = nullptr;
    check(exc_clifford_parse(p, q, args[0].c_str(), &x));
    Clifford xh(x);
    check(exc_clifford_parse(p, q, args[1].c_str(), &y));
    Clifford yh(y);
    check(exc_clifford_mul(x, y, &r));
    Clifford rh(r);
    char* s = nullptr;
    check(exc_clifford_str(r, &s));
    std::string text = take(s);
    out.emit(text, Json{{"p", p}, {"q", q}, {"value", text}});
  });

  auto* cf = cl->add_subcommand("classify", "matrix algebra isomorphic to C_{p,q}");
  cf->add_option("p", p)->required();
  cf->add_option("q", q)->required();
  cf->callback([&] {
    exc_algebra_class c{};
    char* name = nullptr;
    check(exc_clifford_classify(p, q, &c, &name));
    std::string nm = take(name);
    int g = 0;
    check(exc_clifford_gamma_square(p, q, &g));
    std::string text = "C_{" + std::to_string(p) + "," + std::to_string(q) + "} = " + nm;
    out.emit(text, Json{{"p", p}, {"q", q}, {"algebra", nm}, {"ring", ring_letter(c.ring)},
                        {"size", c.size}, {"summands", c.summands}, {"gamma_square", g}});
  });

  auto* sp = cl->add_subcommand("spinors", "spinor types in n-dimensional spacetime");
  sp->add_option("n", n)->required();
  sp->callback([&] {
    exc_spinor_profile s{};
    check(exc_spinor_taxonomy(n, &s));
    std::ostringstream t;
    t << "n " << s.n << "\n"
      << "dirac_complex_dim " << s.dirac_complex_dim << "\n"
      << "majorana " << (s.majorana ? "yes" : "no") << "\n"
      << "weyl " << (s.weyl ? "yes" : "no") << "\n"
      << "majorana_weyl " << (s.majorana_weyl ? "yes" : "no") << "\n"
      << "minimal_real_components " << s.minimal_real_components << "\n"
      << "real_rep C_{n-1,1} " << s.real_rep_cn1 << "\n"
      << "real_rep C_{1,n-1} " << s.real_rep_c1n;
    out.emit(t.str(), Json{{"n", s.n}, {"dirac_complex_dim", s.dirac_complex_dim},
                           {"majorana", s.majorana == 1}, {"weyl", s.weyl == 1},
                           {"majorana_weyl", s.majorana_weyl == 1},
                           {"minimal_real_components", s.minimal_real_components},
                           {"real_rep_cn1", s.real_rep_cn1}, {"real_rep_c1n", s.real_rep_c1n}});
  });

  auto* sy = cl->add_subcommand("superym", "dimensions where a spinor has 2(n-2) real components");
  sy->add_option("--lo", lo, "lowest dimension")->capture_default_str();
  sy->add_option("--hi", hi, "highest dimension")->capture_default_str();
  sy->callback([&] {
    std::size_t count = 0;
    std::vector<int> dims(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
    check(exc_super_ym_dims(lo, hi, dims.data(), dims.size(), &count));
    dims.resize(count);
    std::string text;
    for (int d : dims) text += (text.empty() ? "" : " ") + std::to_string(d);
    out.emit(text, Json{{"lo", lo}, {"hi", hi}, {"dims", dims}});
  });
}

// --- lattice ---------------------------------------------------------------------

void add_lattice(CLI::App& app, Output& out) {
  auto* lat = app.add_subcommand("lattice", "integral lattices");
  lat->require_subcommand(1);
  static std::string name, input, delta, construction = "ii";
  static int order = 2, dim = 26;
  static long max_norm = 2;
  static bool left = false, coordinate = false;
  static std::vector<std::string> coords;

  auto source = [&](CLI::App* c) {
    c->add_option("name", name, "A<n>, D<n>, Z<n>, E6, E7, E8, D16+, 3E8, E8+D16+, LeechII, LeechIcosian");
    c->add_option("--input", input, "lattice file ('-' for stdin)");
  };

  auto* build = lat->add_subcommand("build", "print a lattice in the text format");
  source(build);
  build->callback([&] {
    LatticeH l = load_lattice(name, input);
    std::string text = lattice_text(l.get());
    if (!text.empty() && text.back() == '\n') text.pop_back();
    out.emit(text, Json{{"text", text + "\n"}});
  });

  auto* info = lat->add_subcommand("info", "rank, parity, unimodularity, minimum, kissing number (JSON)");
  source(info);
  info->callback([&] {
    LatticeH l = load_lattice(name, input);
    exc_lattice_summary s{};
    check(exc_lattice_summary_of(l.get(), &s));
    char* det = nullptr;
    check(exc_lattice_determinant(l.get(), &det));
    Json j{{"rank", s.rank}, {"ambient_dim", s.ambient_dim},
           {"signature", s.lorentzian ? "lorentzian" : "euclidean"}, {"integral", s.integral == 1},
           {"even", s.even == 1}, {"unimodular", s.unimodular == 1}, {"determinant", big_number(take(det))}};
    if (!s.lorentzian) {
      char* mn = nullptr;
      check(exc_lattice_minimal_norm(l.get(), &mn));
      std::string m = take(mn);
      j["min_norm"] = big_number(m);
      if (s.integral && m.find('/') == std::string::npos) {
        const long mnorm = std::stol(m);
        std::vector<long> norms(static_cast<std::size_t>(mnorm) + 1);
        std::vector<uint64_t> counts(norms.size());
        std::size_t count = 0;
        check(exc_lattice_short_vectors(l.get(), mnorm, 0, norms.data(), counts.data(), norms.size(), &count));
        j["kissing"] = count > 0 ? counts[0] : 0;
      } else {
        j["kissing"] = nullptr;
      }
    }
    std::cout << j.dump(2) << "\n";
  });

  auto* th = lat->add_subcommand("theta", "theta series sum over vectors of q^(x.x/2)");
  source(th);
  th->add_option("--order", order, "highest power of q")->capture_default_str();
  th->callback([&] {
    LatticeH l = load_lattice(name, input);
    exc_series* s = nullptr;
    check(exc_lattice_theta(l.get(), order, 0, &s));
    Series sh(s);
    Json counts = Json::array();
    for (int e = 0; e <= order; ++e) {
      char* c = nullptr;
      check(exc_series_coeff(s, e, &c));
      counts.push_back(take(c));
    }
    out.emit(series_str(s), Json{{"order", order}, {"counts", counts}});
  });

  auto* sv = lat->add_subcommand("shortvec", "counts of vectors by norm");
  source(sv);
  sv->add_option("--max-norm", max_norm, "largest norm x.x")->capture_default_str();
  sv->callback([&] {
    LatticeH l = load_lattice(name, input);
    std::size_t count = 0;
    const std::size_t cap = static_cast<std::size_t>(std::max(0L, max_norm)) + 1;
    std::vector<long> norms(cap);
    std::vector<uint64_t> counts(cap);
    check(exc_lattice_short_vectors(l.get(), max_norm, 0, norms.data(), counts.data(), cap, &count));
    std::string text;
    Json arr = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
      text += (text.empty() ? "" : "\n") + std::to_string(norms[i]) + " " + std::to_string(counts[i]);
      arr.push_back(Json{{"norm", norms[i]}, {"count", counts[i]}});
    }
    out.emit(text.empty() ? "none" : text, Json{{"max_norm", max_norm}, {"counts", arr}});
  });

  auto* du = lat->add_subcommand("dual", "dual lattice");
  source(du);
  du->callback([&] {
    LatticeH l = load_lattice(name, input);
    exc_lattice* d = nullptr;
    check(exc_lattice_dual(l.get(), &d));
    LatticeH dh(d);
    std::string text = lattice_text(d);
    out.emit(text.substr(0, text.size() - 1), Json{{"text", text}});
  });

  auto* ll = lat->add_subcommand("lll", "LLL-reduced basis");
  source(ll);
  ll->add_option("--delta", delta, "Lovasz parameter p/q in (1/4, 1), default 99/100");
  ll->callback([&] {
    LatticeH l = load_lattice(name, input);
    exc_lattice* r = nullptr;
    check(exc_lattice_lll(l.get(), delta.empty() ? nullptr : delta.c_str(), &r));
    LatticeH rh(r);
    std::string text = lattice_text(r);
    out.emit(text.substr(0, text.size() - 1), Json{{"text", text}});
  });

  auto* le = lat->add_subcommand("leech", "Leech lattice from II_{25,1} or from icosian triples");
  le->add_option("--construction", construction, "ii or icosian")
      ->check(CLI::IsMember({"ii", "icosian"}))->capture_default_str();
  le->add_flag("--left", left, "icosian congruence u - v in h*I instead of I*h");
  le->add_flag("--coordinate", coordinate, "pair icosian coordinates with the plain dot product");
  le->callback([&] {
    exc_lattice* l = nullptr;
    Json j{{"construction", construction}};
    if (construction == "ii") {
      check(exc_lattice_named("LeechII", &l));
    } else {
      exc_icosian_report rep{};
      char *scale = nullptr, *raw_min = nullptr;
      check(exc_lattice_leech_icosian(left ? 1 : 0, coordinate ? 0 : 1, &l, &rep, &scale, &raw_min));
      j["congruence"] = left ? "left" : "right";
      j["form"] = coordinate ? "coordinate" : "golden-trace";
      j["raw_min_norm"] = take(raw_min);
      j["scale"] = take(scale);
      j["even_unimodular"] = rep.even_unimodular == 1;
    }
    LatticeH lh(l);
    exc_lattice_summary s{};
    check(exc_lattice_summary_of(l, &s));
    j["rank"] = s.rank;
    j["even"] = s.even == 1;
    j["unimodular"] = s.unimodular == 1;
    std::ostringstream t;
    for (auto it = j.begin(); it != j.end(); ++it)
      t << it.key() << " " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    std::string text = lattice_text(l);
    j["text"] = text;
    t << text;
    std::string all = t.str();
    out.emit(all.substr(0, all.size() - 1), j);
  });

  auto* we = lat->add_subcommand("weyl", "Weyl vector of II_{9,1}, II_{17,1}, II_{25,1}");
  we->add_option("dim", dim, "10, 18 or 26")->required();
  we->callback([&] {
    char* v = nullptr;
    check(exc_weyl_vector(dim, &v));
    std::string vec = take(v);
    char* nrm = nullptr;
    check(exc_minkowski_dot(vec.c_str(), vec.c_str(), &nrm));
    std::string n = take(nrm);
    int member = 0;
    check(exc_ii_member(vec.c_str(), &member));
    std::istringstream is(vec);
    Json arr = Json::array();
    std::string tok, tuple;
    while (is >> tok) {
      arr.push_back(big_number(tok));
      tuple += (tuple.empty() ? "" : ",") + tok;
    }
    std::string text = "(" + tuple + ")\nnorm " + n + "\nlightlike " + (n == "0" ? "yes" : "no") +
                       "\nmember " + (member ? "yes" : "no");
    out.emit(text, Json{{"dim", dim}, {"vector", arr}, {"norm", big_number(n)},
                        {"lightlike", n == "0"}, {"member", member == 1}});
  });

  auto* ro = lat->add_subcommand("root", "is r a fundamental root: r.r = 2 and r.w = -1");
  ro->add_option("--dim", dim, "10, 18 or 26")->capture_default_str();
  ro->add_option("coords", coords, "coordinates of r (rationals, space or comma separated)")->required();
  ro->callback([&] {
    const std::string r = join(coords);
    int root = 0;
    check(exc_is_fundamental_root(r.c_str(), dim, &root));
    out.emit(root ? "yes" : "no", Json{{"dim", dim}, {"fundamental_root", root == 1}});
  });
}

// --- modular ---------------------------------------------------------------------

void add_modular(CLI::App& app, Output& out) {
  auto* mod = app.add_subcommand("modular", "q-series");
  mod->require_subcommand(1);
  static int order = 5;
  static std::string lattice, input;

  auto* et = mod->add_subcommand("eta24", "q prod (1 - q^n)^24");
  et->add_option("--order", order, "number of product factors")->capture_default_str();
  et->callback([&] {
    exc_series* s = nullptr;
    check(exc_eta24(order, &s));
    Series sh(s);
    out.emit(series_str(s), series_json(s));
  });

  auto* j = mod->add_subcommand("j", "theta_L / eta^24 for a rank-24 even unimodular lattice");
  j->add_option("--lattice", lattice, "lattice name");
  j->add_option("--input", input, "lattice file ('-' for stdin)");
  j->add_option("--order", order, "highest power of q")->capture_default_str();
  j->callback([&] {
    LatticeH l = load_lattice(lattice, input);
    exc_series* s = nullptr;
    check(exc_j_from_lattice(l.get(), order, 0, &s));
    Series sh(s);
    out.emit(series_str(s), series_json(s));
  });
}

// --- id --------------------------------------------------------------------------

void add_identities(CLI::App& app, Output& out) {
  auto* id = app.add_subcommand("id", "numeric identities");
  id->require_subcommand(1);
  static uint64_t start = 1, count = 10, limit = 100000;
  static std::vector<std::string> spins;
  static std::string input = "-";

  auto* pi = id->add_subcommand("pihex", "hexadecimal digits of pi after the point");
  pi->add_option("--start", start, "first position (1-based)")->capture_default_str();
  pi->add_option("--count", count, "number of digits")->capture_default_str();
  pi->callback([&] {
    char* s = nullptr;
    check(exc_bbp_pi_hex(start, count, &s));
    std::string d = take(s);
    out.emit(d, Json{{"start", start}, {"count", count}, {"digits", d}});
  });

  auto* cb = id->add_subcommand("cannonball", "n with 1^2 + ... + n^2 a perfect square");
  cb->add_option("--limit", limit, "largest n")->capture_default_str();
  cb->callback([&] {
    std::size_t n = 0;
    std::vector<uint64_t> vals(64);
    exc_status st = exc_cannonball_search(limit, vals.data(), vals.size(), &n);
    if (st == EXC_ERR_BUFFER_TOO_SMALL) {
      vals.resize(n);
      st = exc_cannonball_search(limit, vals.data(), vals.size(), &n);
    }
    check(st);
    vals.resize(n);
    std::string text;
    for (auto v : vals) text += (text.empty() ? "" : " ") + std::to_string(v);
    out.emit(text, Json{{"limit", limit}, {"values", vals}});
  });

  auto* ar = id->add_subcommand("area", "sum of sqrt(j(j+1)) over punctures, Planck-area units");
  ar->add_option("spins", spins, "spins j such as 1/2 1 3/2");
  ar->callback([&] {
    char* exact = nullptr;
    double approx = 0;
    check(exc_spin_area(join(spins).c_str(), &exact, &approx));
    std::string e = take(exact);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", approx);
    out.emit(e + " = " + buf, Json{{"exact", e}, {"approx", approx}});
  });

  auto* lk = id->add_subcommand("link", "Gauss linking number of two polygonal loops");
  lk->add_option("--input", input, "file with two blank-line separated blocks of x y z lines ('-' for stdin)")
      ->capture_default_str();
  lk->callback([&] {
    int l = 0;
    check(exc_linking_number_text(read_file(input).c_str(), &l));
    out.emit(std::to_string(l), Json{{"linking_number", l}});
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exceptia: exact computations with exceptional algebraic structures"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "machine-readable output");
  add_hyper(app, out);
  add_clifford(app, out);
  add_lattice(app, out);
  add_modular(app, out);
  add_identities(app, out);
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help("", CLI::AppFormatMode::All);
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitDomain;
  }
  return 0;
}
