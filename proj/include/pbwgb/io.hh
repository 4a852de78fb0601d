#ifndef PBWGB_IO_HH
#define PBWGB_IO_HH

// Text formats. Polynomials use + - * ^ with no juxtaposition; scalars are
// signed rationals, I*sqrt2 (the theta with theta^2 = -2), or theta for a
// generic declared discriminant. Elements of an enveloping algebra are
// written with the infix tensor  f # g , which binds looser than * and
// tighter than + -. Vectors are parenthesized comma-separated tuples, one
// per line in generator files; // starts a comment line.

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hh"
#include "free_module.hh"
#include "order.hh"
#include "pbw.hh"
#include "scalar.hh"

namespace pbwgb {

namespace tok {

struct Token {
  enum Kind { num, ident, theta, plus, minus, star, caret, slash, lparen, rparen, comma, hash, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::num, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word = s.substr(i, j - i);
      if (word == "I" && s.compare(j, 6, "*sqrt2") == 0 &&
          (j + 6 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[j + 6])))) {
        out.push_back({Token::theta, "I*sqrt2", i});
        i = j + 6;
        continue;
      }
      if (word == "theta") {
        out.push_back({Token::theta, word, i});
        i = j;
        continue;
      }
      out.push_back({Token::ident, word, i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::plus; break;
      case '-': k = Token::minus; break;
      case '*': k = Token::star; break;
      case '^': k = Token::caret; break;
      case '/': k = Token::slash; break;
      case '(': k = Token::lparen; break;
      case ')': k = Token::rparen; break;
      case ',': k = Token::comma; break;
      case '#': k = Token::hash; break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

}  // namespace tok

// Recursive-descent evaluator into the polynomial ring. With an enveloping
// presentation supplied, values live on two levels; # combines two base
// values, and bare base values coerce to f (x) 1 when levels meet.
class PolyParser {
 public:
  PolyParser(const std::string& text, const Presentation& base, const Presentation* env = nullptr)
      : toks_(tok::tokenize(text)), base_(base), env_(env) {}

  Poly parse_poly() {
    Value v = expr();
    expect(tok::Token::end);
    return finish(v);
  }

  Vec parse_vec() {
    if (peek().kind == tok::Token::lparen) {
      std::size_t save = at_;
      next();
      std::vector<Poly> comps;
      comps.push_back(finish(expr()));
      bool tuple = peek().kind == tok::Token::comma;
      while (peek().kind == tok::Token::comma) {
        next();
        comps.push_back(finish(expr()));
      }
      expect(tok::Token::rparen);
      if (peek().kind == tok::Token::end) {
        Vec v;
        v.c = std::move(comps);
        return v;
      }
      if (tuple) throw parse_error("trailing input after vector", peek().pos);
      at_ = save;  // it was a parenthesized polynomial, reparse as such
    }
    Vec v;
    v.c.push_back(parse_poly());
    return v;
  }

 private:
  struct Value {
    bool env_level = false;
    Poly p;
  };

  const tok::Token& peek() const { return toks_[at_]; }
  const tok::Token& next() { return toks_[at_++]; }
  void expect(tok::Token::Kind k) {
    if (peek().kind != k) throw parse_error("unexpected token '" + peek().text + "'", peek().pos);
    ++at_;
  }

  const Presentation& ring(const Value& v) const { return v.env_level ? *env_ : base_; }

  Poly finish(Value v) {
    if (env_ && !v.env_level) return embed_left(*env_, v.p);
    return v.p;
  }

  void coerce(Value& a, Value& b) {
    if (a.env_level == b.env_level) return;
    if (!env_) throw parse_error("tensor level mismatch", peek().pos);
    if (!a.env_level) a = Value{true, embed_left(*env_, a.p)};
    if (!b.env_level) b = Value{true, embed_left(*env_, b.p)};
  }

  Value expr() {
    bool neg = false;
    if (peek().kind == tok::Token::minus) {
      next();
      neg = true;
    }
    Value acc = term();
    if (neg) acc.p = ring(acc).neg(acc.p);
    for (;;) {
      if (peek().kind == tok::Token::plus || peek().kind == tok::Token::minus) {
        bool minus = next().kind == tok::Token::minus;
        Value rhs = term();
        coerce(acc, rhs);
        acc.p = minus ? ring(acc).sub(acc.p, rhs.p) : ring(acc).add(acc.p, rhs.p);
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = tfactor();
    if (peek().kind == tok::Token::hash) {
      std::size_t pos = next().pos;
      if (!env_) throw parse_error("tensor notation outside an enveloping context", pos);
      Value rhs = tfactor();
      if (acc.env_level || rhs.env_level) throw parse_error("chained tensor", pos);
      return Value{true, tensor_poly(*env_, acc.p, rhs.p)};
    }
    return acc;
  }

  Value tfactor() {
    Value acc = factor();
    while (peek().kind == tok::Token::star) {
      next();
      Value rhs = factor();
      coerce(acc, rhs);
      acc.p = ring(acc).mul(acc.p, rhs.p);
    }
    return acc;
  }

  Value factor() {
    Value a = atom();
    for (;;) {
      if (peek().kind == tok::Token::caret) {
        std::size_t pos = next().pos;
        if (peek().kind != tok::Token::num) throw parse_error("exponent must be a number", pos);
        unsigned long e = std::stoul(next().text);
        Poly r = ring(a).one();
        for (unsigned long k = 0; k < e; ++k) r = ring(a).mul(r, a.p);
        a.p = std::move(r);
      } else if (peek().kind == tok::Token::slash) {
        // f/4 divides by an integer constant, as in I*sqrt2/4
        std::size_t pos = next().pos;
        if (peek().kind != tok::Token::num) throw parse_error("denominator expected", pos);
        mpz_class den(next().text);
        if (den == 0) throw parse_error("zero denominator", pos);
        mpq_class q(1, den);
        q.canonicalize();
        a.p = ring(a).smul(Scalar(q), a.p);
      } else {
        return a;
      }
    }
  }

  Value atom() {
    const tok::Token& t = peek();
    switch (t.kind) {
      case tok::Token::num: {
        next();
        mpq_class q(mpz_class(t.text), 1);
        if (peek().kind == tok::Token::slash) {
          std::size_t pos = next().pos;
          if (peek().kind != tok::Token::num) throw parse_error("denominator expected", pos);
          mpz_class den(next().text);
          if (den == 0) throw parse_error("zero denominator", pos);
          q = mpq_class(q.get_num(), den);
          q.canonicalize();
        }
        return Value{false, base_.constant(Scalar(q))};
      }
      case tok::Token::theta: {
        next();
        if (!base_.field().extension)
          throw parse_error("'" + t.text + "' needs a quadratic field", t.pos);
        if (t.text == "I*sqrt2" && base_.field().d != -2)
          throw parse_error("'I*sqrt2' means theta^2 = -2, but the field differs", t.pos);
        return Value{false, base_.constant(theta())};
      }
      case tok::Token::ident: {
        next();
        for (std::size_t i = 0; i < base_.names().size(); ++i)
          if (base_.names()[i] == t.text) return Value{false, base_.variable(i)};
        throw parse_error("unknown variable '" + t.text + "'", t.pos);
      }
      case tok::Token::minus: {
        next();
        Value v = factor();
        v.p = ring(v).neg(v.p);
        return v;
      }
      case tok::Token::lparen: {
        next();
        Value v = expr();
        expect(tok::Token::rparen);
        return v;
      }
      default:
        throw parse_error("unexpected token '" + t.text + "'", t.pos);
    }
  }

  std::vector<tok::Token> toks_;
  std::size_t at_ = 0;
  const Presentation& base_;
  const Presentation* env_;
};

inline Poly parse_poly(const std::string& text, const Presentation& base) {
  return PolyParser(text, base).parse_poly();
}

inline Poly parse_env_poly(const std::string& text, const Presentation& base,
                           const Presentation& env) {
  return PolyParser(text, base, &env).parse_poly();
}

inline Vec parse_vec(const std::string& text, const Presentation& base,
                     const Presentation* env = nullptr) {
  return PolyParser(text, base, env).parse_vec();
}

inline Scalar parse_scalar(const std::string& text, const Field& k) {
  Presentation trivial(k, {}, lex_order());
  Poly p = parse_poly(text, trivial);
  if (p.is_zero()) return Scalar(0);
  return p.t.front().c;
}

// One vector per nonblank non-comment line; ranks must agree.
inline std::vector<Vec> parse_vectors(const std::string& text, const Presentation& base,
                                      const Presentation* env = nullptr) {
  std::vector<Vec> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line.compare(first, 2, "//") == 0) continue;
    out.push_back(parse_vec(line, base, env));
    if (out.size() > 1 && out.back().size() != out.front().size())
      throw parse_error("vector rank differs from earlier lines", 0);
  }
  return out;
}

// --- formatting -------------------------------------------------------------

inline std::string format_monomial(const std::vector<std::string>& names, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string format_poly(const Presentation& p, const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < f.t.size(); ++k) {
    const Term& tm = f.t[k];
    std::string mono;
    bool constant_mono;
    if (p.tensor_info()) {
      auto [a, b] = split_env_exponent(p, tm.exp);
      mono = format_monomial(p.tensor_info()->left_names, a) + " # " +
             format_monomial(p.tensor_info()->right_names, b);
      constant_mono = false;  // tensor monomials always print
    } else {
      mono = format_monomial(p.names(), tm.exp);
      constant_mono = mono == "1";
    }
    Scalar c = tm.c;
    bool negative = formats_negative(c);
    if (negative) c = -c;
    std::string body;
    bool mixed = c.a != 0 && c.b != 0;
    if (constant_mono) {
      body = mixed ? "(" + format_scalar(p.field(), c) + ")" : format_scalar(p.field(), c);
    } else if (!mixed && c == Scalar(1)) {
      body = mono;
    } else if (mixed) {
      body = "(" + format_scalar(p.field(), c) + ")*" + mono;
    } else {
      body = format_scalar(p.field(), c) + "*" + mono;
    }
    if (k == 0)
      out += (negative ? "-" : "") + body;
    else
      out += (negative ? "-" : "+") + body;
  }
  return out;
}

inline std::string format_vec(const Presentation& p, const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_poly(p, v.c[i]);
  return out + ")";
}

inline std::string format_field(const Field& k) {
  if (!k.extension) return "Q";
  return "Q(theta^2=" + k.d.get_str() + ")";
}

inline std::string format_algebra(const Presentation& p) {
  std::string out = "generators";
  for (const auto& nm : p.names()) out += " " + nm;
  out += "\nfield " + format_field(p.field());
  out += "\norder " + format_order(p.order());
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j) {
      const Relation& r = p.rel(i, j);
      if (r.q == Scalar(1) && r.p.is_zero()) continue;
      Poly rhs = p.add(p.monomial(unit_exponent(p.n(), i) + unit_exponent(p.n(), j), r.q), r.p);
      out += "\nrelation " + p.names()[j] + "*" + p.names()[i] + " = " + format_poly(p, rhs);
    }
  return out + "\n";
}

// --- order names and algebra files ------------------------------------------

inline OrderSpec parse_base_order(const std::string& text) {
  if (text == "lex") return lex_order();
  if (text == "glex") return glex_order();
  if (text.rfind("wlex:", 0) == 0) {
    std::vector<long long> w;
    std::string rest = text.substr(5);
    std::size_t i = 0;
    while (i < rest.size()) {
      std::size_t j = rest.find(',', i);
      if (j == std::string::npos) j = rest.size();
      try {
        w.push_back(std::stoll(rest.substr(i, j - i)));
      } catch (const std::exception&) {
        throw parse_error("bad wlex weight '" + rest.substr(i, j - i) + "'", i);
      }
      i = j + 1;
    }
    if (w.empty()) throw parse_error("wlex needs weights", 0);
    return wlex_order(std::move(w));
  }
  throw parse_error("unknown order '" + text + "'", 0);
}

inline ModKind parse_mod_kind(const std::string& text) {
  if (text == "top") return ModKind::top;
  if (text == "pot") return ModKind::pot;
  throw parse_error("unknown module order '" + text + "' (expected top or pot)", 0);
}

inline EnvKind parse_env_kind(const std::string& text) {
  if (text == "comp-up") return EnvKind::comp_up;
  if (text == "comp-down") return EnvKind::comp_down;
  if (text == "elim-up") return EnvKind::elim_up;
  if (text == "elim-down") return EnvKind::elim_down;
  throw parse_error("unknown enveloping order '" + text + "'", 0);
}

inline std::string format_env_kind(EnvKind k) {
  switch (k) {
    case EnvKind::comp_up: return "comp-up";
    case EnvKind::comp_down: return "comp-down";
    case EnvKind::elim_up: return "elim-up";
    case EnvKind::elim_down: return "elim-down";
  }
  return "?";
}

inline Field parse_field_decl(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Q(theta^2=", 0) == 0 && text.back() == ')') {
    std::string num = text.substr(10, text.size() - 11);
    Presentation trivial(rationals(), {}, lex_order());
    Poly p = parse_poly(num, trivial);
    return quadratic(p.is_zero() ? mpq_class(0) : p.t.front().c.a);
  }
  throw parse_error("bad field declaration '" + text + "'", 0);
}

// Lines: generators, optionally field and order, then relation lines
// x_j*x_i = q*x_i*x_j + p. Pairs without a line commute. Without a field
// line, I*sqrt2 anywhere selects Q(theta^2=-2); bare theta requires an
// explicit declaration.
inline Presentation parse_algebra(const std::string& text) {
  std::vector<std::string> names;
  std::optional<Field> field;
  OrderSpec order = glex_order();
  std::vector<std::pair<std::string, std::string>> rel_lines;  // lhs, rhs

  std::istringstream in(text);
  std::string line;
  bool saw_theta = false, saw_isqrt2 = false;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line.compare(first, 2, "//") == 0) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "generators") {
      std::string nm;
      while (ls >> nm) names.push_back(nm);
    } else if (key == "field") {
      std::string rest;
      ls >> rest;
      field = parse_field_decl(rest);
    } else if (key == "order") {
      std::string rest;
      ls >> rest;
      order = parse_base_order(rest);
    } else if (key == "relation") {
      std::string rest;
      std::getline(ls, rest);
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) throw parse_error("relation without '='", 0);
      rel_lines.emplace_back(rest.substr(0, eq), rest.substr(eq + 1));
      if (rest.find("I*sqrt2") != std::string::npos) saw_isqrt2 = true;
      else if (rest.find("theta") != std::string::npos) saw_theta = true;
    } else {
      throw parse_error("unknown directive '" + key + "'", 0);
    }
  }
  if (names.empty()) throw parse_error("missing generators line", 0);
  if (!field) {
    if (saw_theta)
      throw parse_error("theta used without a field declaration", 0);
    field = saw_isqrt2 ? quadratic(-2) : rationals();
  }
  Presentation pres(*field, names, order);
  for (auto& [lhs, rhs] : rel_lines) {
    auto lt = tok::tokenize(lhs);
    if (lt.size() != 4 || lt[0].kind != tok::Token::ident || lt[1].kind != tok::Token::star ||
        lt[2].kind != tok::Token::ident)
      throw parse_error("relation left side must be xj*xi", lt.empty() ? 0 : lt[0].pos);
    auto index_of = [&](const std::string& nm, std::size_t pos) {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == nm) return i;
      throw parse_error("unknown generator '" + nm + "'", pos);
    };
    std::size_t j = index_of(lt[0].text, lt[0].pos);
    std::size_t i = index_of(lt[2].text, lt[2].pos);
    if (!(i < j))
      throw parse_error("relation must rewrite a larger generator past a smaller one",
                        lt[0].pos);
    Poly r = parse_poly(rhs, pres);
    Exponent lead = unit_exponent(names.size(), i) + unit_exponent(names.size(), j);
    Scalar q(0);
    std::vector<Term> tail;
    for (const auto& tm : r.t) {
      if (tm.exp == lead)
        q = tm.c;
      else
        tail.push_back(tm);
    }
    pres.set_relation(i, j, q, pres.canonical(std::move(tail)));
  }
  return pres;
}

// Shipped presets: qplane(q), mq2(q), weyl(n), poly(n).
inline Presentation make_preset(const std::string& name, const std::string& arg) {
  auto field_for = [&](const std::string& a) {
    if (a.find("I*sqrt2") != std::string::npos) return quadratic(-2);
    if (a.find("theta") != std::string::npos)
      throw parse_error("theta needs an explicit algebra file with a field declaration", 0);
    return rationals();
  };
  if (name == "qplane") {
    Field k = field_for(arg);
    Scalar q = parse_scalar(arg, k);
    Presentation p(k, {"x", "y"}, glex_order());
    p.set_relation(0, 1, q, p.zero());
    return p;
  }
  if (name == "mq2") {
    Field k = field_for(arg);
    Scalar q = parse_scalar(arg, k);
    Presentation p(k, {"x", "y", "z", "t"}, glex_order());
    Scalar qinv = inv(k, q);
    p.set_relation(0, 1, q, p.zero());
    p.set_relation(0, 2, q, p.zero());
    p.set_relation(0, 3, Scalar(1), p.monomial(Exponent{0, 1, 1, 0}, qinv - q));
    p.set_relation(1, 3, q, p.zero());
    p.set_relation(2, 3, q, p.zero());
    return p;
  }
  if (name == "weyl" || name == "poly") {
    unsigned long n = 0;
    try {
      n = std::stoul(arg);
    } catch (const std::exception&) {
      throw parse_error("preset " + name + " expects a positive integer", 0);
    }
    if (n == 0 || n > 64) throw parse_error("preset " + name + " expects 1..64", 0);
    std::vector<std::string> names;
    for (unsigned long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    if (name == "poly") return Presentation(rationals(), names, glex_order());
    for (unsigned long i = 1; i <= n; ++i) names.push_back("d" + std::to_string(i));
    Presentation p(rationals(), names, glex_order());
    for (unsigned long i = 0; i < n; ++i) p.set_relation(i, n + i, Scalar(1), p.one());
    return p;
  }
  throw parse_error("unknown preset '" + name + "'", 0);
}

}  // namespace pbwgb

#endif
