// Text literals for hypercomplex numbers and multivectors.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := '-' factor | number | name | '(' expr ')' | '(' expr ',' expr ')'
//
// Numbers are p or p/q. Names: e<N>, and for hypercomplex literals also i, j,
// k (level >= 2), sqrt5 and phi. The pair form builds a Cayley-Dickson pair
// of two numbers one level down.

#include <cctype>
#include <functional>

#include "exceptia/clifford.hpp"
#include "exceptia/hypercomplex.hpp"

namespace exceptia {

namespace {

template <class Value>
class LiteralParser {
 public:
  struct Ops {
    std::function<Value(const Rational&)> scalar;
    // Name to value, or nullopt if unknown.
    std::function<std::optional<Value>(const std::string&)> name;
    std::function<Value(const Value&, const Value&)> add;
    std::function<Value(const Value&)> neg;
    std::function<Value(const Value&, const Value&)> mul;
    // Pair of two expressions parsed by the returned sub-parser; empty when unsupported.
    std::function<std::optional<Value>(LiteralParser&)> pair;
  };

  LiteralParser(std::string_view text, Ops ops) : s_(text), ops_(std::move(ops)) {}

  Value parse_all() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  Value expr() {
    skip();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = s_[pos_++] == '-';
    Value acc = term();
    if (neg) acc = ops_.neg(acc);
    for (;;) {
      skip();
      if (peek() != '+' && peek() != '-') break;
      const bool minus = s_[pos_++] == '-';
      Value t = term();
      acc = ops_.add(acc, minus ? ops_.neg(t) : t);
    }
    return acc;
  }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }
  std::string_view text() const { return s_; }

 private:
  Value term() {
    Value v = factor();
    for (;;) {
      skip();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = ops_.mul(v, factor());
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
        v = ops_.mul(v, factor());
      } else {
        break;
      }
    }
    return v;
  }

  Value factor() {
    skip();
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return ops_.neg(factor());
    }
    if (c == '(') {
      ++pos_;
      const std::size_t start = pos_;
      if (ops_.pair) {
        if (auto p = ops_.pair(*this)) return *p;
        pos_ = start;
      }
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ops_.scalar(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = identifier();
      auto v = ops_.name(id);
      if (!v) error("unknown name '" + id + "'");
      return *v;
    }
    error(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  // Letters followed by digits; "e1e2" lexes as e1 then e2.
  std::string identifier() {
    const std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kParse, "cannot parse '" + std::string(s_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  Ops ops_;
  std::size_t pos_ = 0;
};

std::optional<std::size_t> unit_index(const std::string& id) {
  if (id.size() < 2 || id[0] != 'e') return std::nullopt;
  for (std::size_t t = 1; t < id.size(); ++t)
    if (!std::isdigit(static_cast<unsigned char>(id[t]))) return std::nullopt;
  if (id.size() > 6) return std::nullopt;
  return static_cast<std::size_t>(std::stoul(id.substr(1)));
}

bool is_scalar(const GoldHyper& x) {
  for (std::size_t t = 1; t < x.size(); ++t)
    if (!x[t].is_zero()) return false;
  return true;
}

GoldHyper parse_hyper_at(std::string_view text, int level);

LiteralParser<GoldHyper>::Ops hyper_ops(int level) {
  LiteralParser<GoldHyper>::Ops ops;
  ops.scalar = [level](const Rational& r) { return GoldHyper::basis(level, 0, Golden(r, Rational(0))); };
  ops.name = [level](const std::string& id) -> std::optional<GoldHyper> {
    if (id == "sqrt5") return GoldHyper::basis(level, 0, Golden(Rational(0), Rational(1)));
    if (id == "phi") return GoldHyper::basis(level, 0, Golden(Rational(1, 2), Rational(1, 2)));
    if ((level >= 1 && id == "i") || (level >= 2 && (id == "j" || id == "k")))
      return GoldHyper::basis(level, static_cast<std::size_t>(id[0] - 'i' + 1));
    if (auto t = unit_index(id)) {
      require(*t < (std::size_t{1} << static_cast<unsigned>(level)), ErrorCode::kParse,
              "unit index exceeds the level");
      return GoldHyper::basis(level, *t);
    }
    return std::nullopt;
  };
  ops.add = [](const GoldHyper& a, const GoldHyper& b) { return a + b; };
  ops.neg = [](const GoldHyper& a) { return -a; };
  ops.mul = [](const GoldHyper& a, const GoldHyper& b) {
    if (is_scalar(a)) return b.scaled(a[0]);
    if (is_scalar(b)) return a.scaled(b[0]);
    fail(ErrorCode::kParse, "a literal term may contain at most one non-scalar factor");
  };
  if (level >= 1) {
    ops.pair = [level](LiteralParser<GoldHyper>& p) -> std::optional<GoldHyper> {
      // Try "(a, b)" with both halves one level down; give up on any failure.
      const std::size_t start = p.pos();
      try {
        LiteralParser<GoldHyper> sub(p.text().substr(start), hyper_ops(level - 1));
        GoldHyper a = sub.expr();
        if (!sub.accept(',')) return std::nullopt;
        GoldHyper b = sub.expr();
        sub.expect(')');
        p.reset(start + sub.pos());
        return GoldHyper::pair(a, b);
      } catch (const Error&) {
        return std::nullopt;
      }
    };
  }
  return ops;
}

GoldHyper parse_hyper_at(std::string_view text, int level) {
  LiteralParser<GoldHyper> p(text, hyper_ops(level));
  return p.parse_all();
}

}  // namespace

GoldHyper parse_hyper(std::string_view text, int level) {
  require(level >= 0 && level <= 16, ErrorCode::kDomain, "level must be between 0 and 16");
  return parse_hyper_at(text, level);
}

CliffordElement parse_clifford(CliffordSignature sig, std::string_view text) {
  LiteralParser<CliffordElement>::Ops ops;
  ops.scalar = [sig](const Rational& r) { return CliffordElement::scalar(sig, r); };
  ops.name = [sig](const std::string& id) -> std::optional<CliffordElement> {
    auto t = unit_index(id);
    if (!t) return std::nullopt;
    require(*t >= 1 && static_cast<int>(*t) <= sig.dim(), ErrorCode::kParse,
            "generator index outside the signature");
    return CliffordElement::generator(sig, static_cast<int>(*t));
  };
  ops.add = [](const CliffordElement& a, const CliffordElement& b) { return a + b; };
  ops.neg = [sig](const CliffordElement& a) { return clif_mul(CliffordElement::scalar(sig, Rational(-1)), a); };
  ops.mul = [](const CliffordElement& a, const CliffordElement& b) { return clif_mul(a, b); };
  LiteralParser<CliffordElement> p(text, std::move(ops));
  return p.parse_all();
}

}  // namespace exceptia
