#include "homlie/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace homlie {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

struct Token {
  enum class Kind { Num, Ident, Sym, End };
  Kind kind = Kind::End;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Num, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i)});
      i = j;
    } else if (std::string("()+-*/^=,").find(c) != std::string::npos) {
      out.push_back({Token::Kind::Sym, std::string(1, c)});
      ++i;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, ""});
  return out;
}

int basis_index(const Token& t) {
  if (t.kind == Token::Kind::Ident && t.text.size() == 2 && t.text[0] == 'e' && t.text[1] >= '1' && t.text[1] <= '3')
    return t.text[1] - '1';
  return -1;
}

const std::set<std::string> kReserved = {"i", "rt", "sqrt", "s", "e1", "e2", "e3"};

struct Context {
  const Bindings* params = nullptr;
  std::optional<Rational> radicand;
  bool allow_s = false;
};

template <class T>
T lift(const Scalar& x) {
  return T(x);
}

template <class T>
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, size_t pos, const Context& ctx) : t_(toks), p_(pos), ctx_(ctx) {}

  size_t pos() const { return p_; }
  void advance() { ++p_; }
  const Token& peek() const { return t_[p_]; }
  bool at_sym(const char* s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }
  void expect_sym(const char* s) {
    if (!at_sym(s)) fail(std::string("expected '") + s + "' near '" + peek().text + "'");
    ++p_;
  }

  T expr() {
    T v = signed_term();
    while (at_sym("+") || at_sym("-")) {
      bool minus = peek().text == "-";
      ++p_;
      T w = term();
      v = minus ? v - w : v + w;
    }
    return v;
  }

  T signed_term() {
    if (at_sym("-")) {
      ++p_;
      return -term();
    }
    if (at_sym("+")) ++p_;
    return term();
  }

  bool starts_atom() const {
    const Token& k = peek();
    if (k.kind == Token::Kind::Num) return true;
    if (k.kind == Token::Kind::Ident) return basis_index(k) < 0;
    return k.kind == Token::Kind::Sym && k.text == "(";
  }

  T term() {
    T v = power();
    while (true) {
      if (at_sym("*")) {
        ++p_;
        v = v * power();
      } else if (at_sym("/")) {
        ++p_;
        T d = power();
        if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in expression");
        v = v / d;
      } else if (starts_atom()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  T power() {
    T base = atom();
    if (!at_sym("^")) return base;
    ++p_;
    bool neg = false;
    if (at_sym("-")) {
      neg = true;
      ++p_;
    }
    if (peek().kind != Token::Kind::Num) fail("exponent must be an integer");
    long long e = std::stoll(peek().text);
    ++p_;
    T out = lift<T>(Scalar(1));
    for (long long k = 0; k < e; ++k) out = out * base;
    if (neg) {
      if (out.is_zero()) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
      out = lift<T>(Scalar(1)) / out;
    }
    return out;
  }

  T atom() {
    const Token k = peek();
    if (k.kind == Token::Kind::Num) {
      ++p_;
      return lift<T>(Scalar(Rational::parse(k.text)));
    }
    if (at_sym("(")) {
      ++p_;
      T v = expr();
      expect_sym(")");
      return v;
    }
    if (at_sym("-")) {
      ++p_;
      return -atom();
    }
    if (k.kind != Token::Kind::Ident) fail("unexpected '" + k.text + "'");
    ++p_;
    if (k.text == "i") return lift<T>(Scalar::imag_unit());
    if (k.text == "rt") {
      if (!ctx_.radicand) fail("`rt` used without an adjoin line");
      return lift<T>(Scalar::sqrt_of(*ctx_.radicand));
    }
    if (k.text == "sqrt") {
      expect_sym("(");
      ExprParser<Scalar> inner(t_, p_, ctx_);
      Scalar q = inner.expr();
      p_ = inner.pos();
      expect_sym(")");
      if (!q.is_rational()) fail("sqrt argument must be rational");
      return lift<T>(Scalar::sqrt_of(q.re()));
    }
    if (k.text == "s") {
      if (!ctx_.allow_s) fail("variable s is only allowed in curve files");
      return sparam();
    }
    if (ctx_.params) {
      auto it = ctx_.params->find(k.text);
      if (it != ctx_.params->end()) return lift<T>(it->second);
    }
    fail("unknown name '" + k.text + "'");
  }

 private:
  T sparam();

  const std::vector<Token>& t_;
  size_t p_;
  const Context& ctx_;
};

template <>
Scalar ExprParser<Scalar>::sparam() {
  fail("variable s is only allowed in curve files");
}

template <>
RatFunc ExprParser<RatFunc>::sparam() {
  return RatFunc(Poly::s());
}

Scalar eval_scalar(const std::string& text, const Context& ctx) {
  std::vector<Token> toks = tokenize(text);
  ExprParser<Scalar> p(toks, 0, ctx);
  Scalar v = p.expr();
  if (p.peek().kind != Token::Kind::End) fail("trailing input '" + p.peek().text + "'");
  return v;
}


// SCALAR eK [+ SCALAR eK ...], or a bare 0.
Vec eval_vector(const std::vector<Token>& toks, size_t pos, const Context& ctx) {
  ExprParser<Scalar> p(toks, pos, ctx);
  Vec out(3);
  std::set<int> seen;
  bool first = true;
  while (p.peek().kind != Token::Kind::End) {
    bool minus = false;
    if (p.at_sym("-") || p.at_sym("+")) {
      minus = p.peek().text == "-";
      p.advance();
    } else if (!first) {
      fail("expected '+' or '-' near '" + p.peek().text + "'");
    }
    Scalar c(1);
    int k = basis_index(p.peek());
    if (k < 0) {
      c = p.term();
      k = basis_index(p.peek());
      if (k < 0) {
        if (first && !minus && c.is_zero() && p.peek().kind == Token::Kind::End) return out;
        fail("expected e1, e2 or e3 near '" + p.peek().text + "'");
      }
    }
    p.advance();
    if (!seen.insert(k).second) throw Error(ErrorCode::DuplicateAssignment, "e" + std::to_string(k + 1) + " repeated");
    out[k] = minus ? -c : c;
    first = false;
  }
  if (first) fail("empty right-hand side");
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({n, t});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string strip_code(const Error& e) {
  std::string w = e.what();
  size_t c = w.find(": ");
  return c == std::string::npos ? w : w.substr(c + 2);
}

// Runs f for each line, prefixing errors with the line number.
template <class F>
void for_lines(const std::vector<Line>& lines, F&& f) {
  for (const Line& l : lines) {
    try {
      f(l);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(l.number) + ": " + strip_code(e));
    }
  }
}

// Shared handling of the header, adjoin and param lines. Returns true if consumed.
bool common_line(const std::vector<Token>& toks, Context& ctx, Bindings& params) {
  const std::string& kw = toks[0].text;
  if (kw == "adjoin") {
    if (ctx.radicand) fail("duplicate adjoin line");
    std::vector<Token> rest(toks.begin() + 1, toks.end());
    Context plain;
    ExprParser<Scalar> p(rest, 0, plain);
    if (!(p.peek().kind == Token::Kind::Ident && p.peek().text == "sqrt")) fail("expected adjoin sqrt(RAT)");
    p.advance();
    p.expect_sym("(");
    Scalar arg = p.expr();
    p.expect_sym(")");
    if (p.peek().kind != Token::Kind::End) fail("trailing input after adjoin");
    if (!arg.is_rational()) fail("adjoin argument must be rational");
    if (Scalar::sqrt_of(arg.re()).is_gaussian()) fail("adjoined root is already in Q(i)");
    Rational q = arg.re();
    ctx.radicand = q;
    return true;
  }
  if (kw == "param") {
    if (toks.size() < 4 || toks[1].kind != Token::Kind::Ident || toks[2].text != "=")
      fail("expected param NAME = SCALAR");
    const std::string& name = toks[1].text;
    if (kReserved.count(name) || basis_index(toks[1]) >= 0) fail("reserved name '" + name + "'");
    if (params.count(name)) throw Error(ErrorCode::DuplicateAssignment, "param " + name + " assigned twice");
    std::vector<Token> rest(toks.begin() + 3, toks.end());
    ExprParser<Scalar> p(rest, 0, ctx);
    Scalar v = p.expr();
    if (p.peek().kind != Token::Kind::End) fail("trailing input '" + p.peek().text + "'");
    params[name] = v;
    return true;
  }
  return false;
}

template <class Body>
void parse_block(const std::string& text, const char* header, std::string& name, Context& ctx, Bindings& params,
                 Body&& body) {
  std::vector<Line> lines = content_lines(text);
  bool started = false, ended = false;
  for_lines(lines, [&](const Line& l) {
    if (ended) fail("content after end");
    std::vector<std::string> w = words(l.text);
    if (!started) {
      if (w[0] != header || w.size() != 2) fail(std::string("expected '") + header + " NAME'");
      name = w[1];
      started = true;
      return;
    }
    if (w[0] == "end") {
      if (w.size() != 1) fail("trailing input after end");
      ended = true;
      return;
    }
    if (w[0] == "source" || w[0] == "target") {
      body(l, std::vector<Token>{}, w);
      return;
    }
    std::vector<Token> toks = tokenize(l.text);
    ctx.params = &params;
    if (common_line(toks, ctx, params)) return;
    body(l, toks, w);
  });
  if (!started) fail(std::string("missing '") + header + "' line");
  if (!ended) fail("missing end");
}

std::string scalar_text(const Scalar& c) {
  std::string lit = c.to_literal();
  bool bare = lit.find(' ') == std::string::npos && lit.find('/') == std::string::npos && lit[0] != '-';
  return bare ? lit : "(" + lit + ")";
}

std::string vector_text(const Vec& v) {
  std::string out;
  for (int k = 0; k < 3; ++k) {
    const Scalar& c = v[k];
    if (c.is_zero()) continue;
    std::string basis = "e" + std::to_string(k + 1);
    std::string term;
    bool neg = false;
    if (c.is_rational()) {
      neg = c.re().sign() < 0;
      Rational mag = c.re().abs();
      term = mag.is_one() ? basis : mag.to_string() + " " + basis;
    } else {
      term = scalar_text(c) + " " + basis;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::optional<Rational> radicand_of(const std::vector<Scalar>& xs) {
  std::optional<Rational> r;
  for (const Scalar& x : xs) {
    if (!x.has_radicand()) continue;
    if (r && *r != x.radicand())
      throw Error(ErrorCode::IncompatibleRadicands, "scalars use different square roots");
    r = x.radicand();
  }
  return r;
}

std::string poly_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Scalar& c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string term = "(" + c.to_literal() + ")";
    if (k == 1) term += " s";
    if (k > 1) term += " s^" + std::to_string(k);
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text, const Bindings& params) {
  Context ctx;
  ctx.params = &params;
  for (const auto& [name, value] : params)
    if (value.has_radicand()) ctx.radicand = value.radicand();
  return eval_scalar(text, ctx);
}

AlgebraFile parse_algebra(const std::string& text) {
  AlgebraFile out;
  Context ctx;
  std::set<std::pair<int, int>> brackets;
  std::set<int> twists;
  parse_block(text, "algebra", out.name, ctx, out.params,
              [&](const Line&, const std::vector<Token>& toks, const std::vector<std::string>& w) {
                if (w[0] == "bracket") {
                  if (toks.size() < 5 || toks[3].text != "=") fail("expected bracket eI eJ = VECTOR");
                  int i = basis_index(toks[1]), j = basis_index(toks[2]);
                  if (i < 0 || j < 0) fail("bracket needs two basis vectors");
                  if (i >= j) throw Error(ErrorCode::IndexOrder, "bracket indices must satisfy I < J");
                  if (!brackets.insert({i, j}).second)
                    throw Error(ErrorCode::DuplicateAssignment, "bracket " + w[1] + " " + w[2] + " assigned twice");
                  out.structure.mu.set(i, j, eval_vector(toks, 4, ctx));
                } else if (w[0] == "twist") {
                  if (toks.size() < 4 || toks[2].text != "=") fail("expected twist eI = VECTOR");
                  int i = basis_index(toks[1]);
                  if (i < 0) fail("twist needs a basis vector");
                  if (!twists.insert(i).second)
                    throw Error(ErrorCode::DuplicateAssignment, "twist " + w[1] + " assigned twice");
                  Vec col = eval_vector(toks, 3, ctx);
                  for (int k = 0; k < 3; ++k) out.structure.twist(k, i) = col[k];
                } else {
                  fail("unknown keyword '" + w[0] + "'");
                }
              });
  out.radicand = ctx.radicand;
  return out;
}

std::string export_algebra(const std::string& name, const HomLieStructure& s, const Bindings& params) {
  std::vector<Scalar> all(s.twist.entries());
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (const Scalar& c : s.mu.on_basis(i, j)) all.push_back(c);
  for (const auto& [k, v] : params) all.push_back(v);
  std::ostringstream out;
  out << "algebra " << name << "\n";
  if (auto r = radicand_of(all)) out << "adjoin sqrt(" << r->to_string() << ")\n";
  for (const auto& [k, v] : params) out << "param " << k << " = " << v.to_literal() << "\n";
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Vec v = s.mu.on_basis(i, j);
      bool zero = true;
      for (const Scalar& c : v) zero = zero && c.is_zero();
      if (!zero) out << "bracket e" << i + 1 << " e" << j + 1 << " = " << vector_text(v) << "\n";
    }
  for (int i = 0; i < 3; ++i) {
    Vec col = s.twist.column(i);
    bool zero = true;
    for (const Scalar& c : col) zero = zero && c.is_zero();
    if (!zero) out << "twist e" << i + 1 << " = " << vector_text(col) << "\n";
  }
  out << "end\n";
  return out.str();
}

WitnessCurve parse_curve(const std::string& text) {
  WitnessCurve out;
  Context ctx;
  ctx.allow_s = true;
  Bindings params;
  std::string name;
  std::set<std::pair<int, int>> seen;
  parse_block(text, "curve", name, ctx, params,
              [&](const Line&, const std::vector<Token>& toks, const std::vector<std::string>& w) {
                if (w[0] == "source" || w[0] == "target") {
                  if (w.size() != 2) fail("expected " + w[0] + " LABEL");
                  (w[0] == "source" ? out.source : out.target) = w[1];
                  return;
                }
                if (w[0] != "entry") fail("unknown keyword '" + w[0] + "'");
                if (toks.size() < 5 || toks[1].kind != Token::Kind::Num || toks[2].kind != Token::Kind::Num ||
                    toks[3].text != "=")
                  fail("expected entry I J = EXPR");
                int i = std::stoi(toks[1].text), j = std::stoi(toks[2].text);
                if (i < 1 || i > 3 || j < 1 || j > 3) fail("entry indices must be in 1..3");
                if (!seen.insert({i, j}).second)
                  throw Error(ErrorCode::DuplicateAssignment, "entry " + toks[1].text + " " + toks[2].text + " assigned twice");
                ExprParser<RatFunc> p(toks, 4, ctx);
                RatFunc v = p.expr();
                if (p.peek().kind != Token::Kind::End) fail("trailing input '" + p.peek().text + "'");
                out.curve(i - 1, j - 1) = v;
              });
  out.notes = name;
  return out;
}

std::string export_curve(const std::string& name, const WitnessCurve& w) {
  std::vector<Scalar> all;
  for (const RatFunc& f : w.curve.entries()) {
    for (const Scalar& c : f.num().coeffs()) all.push_back(c);
    for (const Scalar& c : f.den().coeffs()) all.push_back(c);
  }
  std::ostringstream out;
  out << "curve " << name << "\n";
  if (auto r = radicand_of(all)) out << "adjoin sqrt(" << r->to_string() << ")\n";
  if (!w.source.empty()) out << "source " << w.source << "\n";
  if (!w.target.empty()) out << "target " << w.target << "\n";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const RatFunc& f = w.curve(i, j);
      if (f.is_zero()) continue;
      out << "entry " << i + 1 << " " << j + 1 << " = ";
      if (f.den().degree() == 0 && f.den().coeff(0).is_one())
        out << poly_text(f.num());
      else
        out << "(" << poly_text(f.num()) << ") / (" << poly_text(f.den()) << ")";
      out << "\n";
    }
  out << "end\n";
  return out.str();
}

std::vector<ClaimLine> parse_claims(const std::string& text) {
  std::vector<ClaimLine> out;
  for_lines(content_lines(text), [&](const Line& l) {
    std::vector<std::string> w = words(l.text);
    if (w[0] != "edge") fail("unknown keyword '" + w[0] + "'");
    if (w.size() == 3) {
      out.push_back({w[1], w[2], std::nullopt});
    } else if (w.size() == 5 && w[3] == "witness") {
      out.push_back({w[1], w[2], w[4]});
    } else {
      fail("expected edge FROM TO [witness PATH]");
    }
  });
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + path);
}

}  // namespace homlie
