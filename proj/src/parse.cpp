#include "pv/parse.hpp"

#include <cctype>
#include <optional>

#include "pv/errors.hpp"

namespace pv {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Recursive-descent parser generic over the value type. `Ops` supplies
// constants, identifiers, division and powers.
template <class V, class Ops>
class Parser {
 public:
  Parser(std::string_view text, const Ops& ops) : s_(text), ops_(ops) {}

  V parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                why + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    V v = term();
    for (;;) {
      if (accept('+')) v = ops_.add(v, term());
      else if (accept('-')) v = ops_.sub(v, term());
      else return v;
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (accept('*')) {
        v = ops_.mul(v, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        V d = unary();
        auto q = ops_.div(v, d);
        if (!q) {
          pos_ = at;
          fail("division by a non-scalar or zero");
        }
        v = std::move(*q);
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (accept('-')) return ops_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  V power() {
    V base = atom();
    if (!accept('^')) return base;
    skip();
    bool negative = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip();
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer exponent");
    long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + (s_[pos_++] - '0');
      if (e > 100000) fail("exponent too large");
    }
    auto r = ops_.pow(base, negative ? -e : e);
    if (!r) fail("negative power of a non-scalar or zero");
    return std::move(*r);
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      return ops_.integer(Rational(mpz_class(digits)));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto v = ops_.ident(name);
      if (!v) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      return std::move(*v);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Ops& ops_;
  std::size_t pos_ = 0;
};

struct RatOps {
  FieldPtr field;

  RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
  RatFunc sub(const RatFunc& a, const RatFunc& b) const { return a - b; }
  RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
  RatFunc neg(const RatFunc& a) const { return -a; }
  std::optional<RatFunc> div(const RatFunc& a, const RatFunc& b) const {
    if (b.is_zero()) return std::nullopt;
    return a / b;
  }
  std::optional<RatFunc> pow(const RatFunc& a, long e) const {
    if (e < 0 && a.is_zero()) return std::nullopt;
    return a.pow(static_cast<int>(e));
  }
  RatFunc integer(const Rational& q) const { return RatFunc(Scalar(q)); }
  std::optional<RatFunc> ident(const std::string& name) const {
    if (name == "t") return RatFunc::t();
    if (field && name == field->generator()) return RatFunc(Scalar::generator(field));
    return std::nullopt;
  }
};

struct PolyOps {
  RingPtr ring;
  RatOps scalars;

  MPoly add(const MPoly& a, const MPoly& b) const { return a + b; }
  MPoly sub(const MPoly& a, const MPoly& b) const { return a - b; }
  MPoly mul(const MPoly& a, const MPoly& b) const { return a * b; }
  MPoly neg(const MPoly& a) const { return -a; }
  std::optional<MPoly> div(const MPoly& a, const MPoly& b) const {
    auto c = b.as_constant();
    if (!c || c->is_zero()) return std::nullopt;
    return a * c->inverse();
  }
  std::optional<MPoly> pow(const MPoly& a, long e) const {
    if (e >= 0) return a.pow(static_cast<unsigned>(e));
    auto c = a.as_constant();
    if (!c || c->is_zero()) return std::nullopt;
    return MPoly(ring, c->pow(static_cast<int>(e)));
  }
  MPoly integer(const Rational& q) const { return MPoly(ring, RatFunc(Scalar(q))); }
  std::optional<MPoly> ident(const std::string& name) const {
    // Ring variables shadow the scalar names.
    if (auto idx = ring->index_of(name)) return MPoly::variable(ring, *idx);
    if (auto s = scalars.ident(name)) return MPoly(ring, *s);
    return std::nullopt;
  }
};

}  // namespace

MPoly parse_mpoly(std::string_view text, const RingPtr& ring, const FieldPtr& field) {
  PolyOps ops{ring, RatOps{field}};
  return Parser<MPoly, PolyOps>(text, ops).parse();
}

RatFunc parse_ratfunc(std::string_view text, const FieldPtr& field) {
  RatOps ops{field};
  return Parser<RatFunc, RatOps>(text, ops).parse();
}

std::vector<Rational> parse_rational_upoly(std::string_view text, const std::string& var) {
  // Read it as a polynomial over Q in a one-variable ring.
  auto ring = PolyRing::make({var});
  MPoly p = parse_mpoly(text, ring);
  std::vector<Rational> out;
  for (const auto& term : p.terms()) {
    if (!term.coef.is_constant() || !term.coef.constant_value().is_rational())
      throw Error(ErrorKind::ParseError, "polynomial \"" + std::string(text) + "\" must have rational coefficients");
    const std::size_t k = term.exp[0];
    if (out.size() <= k) out.resize(k + 1, Rational(0));
    out[k] = term.coef.constant_value().to_rational();
  }
  return out;
}

}  // namespace pv
