#include "gbfam/session.hpp"

#include <algorithm>
#include <cctype>

#include "gbfam/poly_io.hpp"

namespace gbfam {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  char punct = 0;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at_punct(char c) const {
    return tok_.kind == Tok::Punct && tok_.punct == c;
  }
  bool at_ident(const char* word) const {
    return tok_.kind == Tok::Ident && tok_.text == word;
  }
  Token expect_punct(char c) {
    if (!at_punct(c))
      throw parse_error(std::string("expected '") + c + "'", tok_.line,
                        tok_.col);
    return next();
  }
  Token expect_ident() {
    if (tok_.kind != Tok::Ident)
      throw parse_error("expected an identifier", tok_.line, tok_.col);
    return next();
  }
  Token expect_int() {
    if (tok_.kind != Tok::Int)
      throw parse_error("expected an integer", tok_.line, tok_.col);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, tok_.line, tok_.col);
  }

private:
  void skip_blanks() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  char take() {
    char c = text_[pos_++];
    ++col_;
    return c;
  }

  void advance() {
    skip_blanks();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Tok::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        tok_.text += take();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Tok::Int;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        tok_.text += take();
    } else {
      tok_.kind = Tok::Punct;
      tok_.punct = take();
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

// Polynomial expressions: expr := ['-'] term {('+'|'-') term};
// term := factor {'*' factor}; factor := primary ['^' int];
// primary := int ['/' int] | var | '(' expr ')'.
class PolyParser {
public:
  PolyParser(Lexer& lex, std::shared_ptr<const Ring> ring)
      : lex_(lex), ring_(std::move(ring)) {}

  Polynomial parse_expr() {
    bool negate = false;
    if (lex_.at_punct('-')) {
      lex_.next();
      negate = true;
    } else if (lex_.at_punct('+')) {
      lex_.next();
    }
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    while (lex_.at_punct('+') || lex_.at_punct('-')) {
      bool minus = lex_.next().punct == '-';
      Polynomial t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

private:
  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (lex_.at_punct('*')) {
      lex_.next();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_primary();
    if (lex_.at_punct('^')) {
      lex_.next();
      Token e = lex_.expect_int();
      std::uint64_t k = parse_u64(e);
      Polynomial acc = Polynomial::constant(ring_, ring_->field.one());
      for (std::uint64_t i = 0; i < k; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial parse_primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Int) {
      Token num = lex_.next();
      if (lex_.at_punct('/')) {
        lex_.next();
        Token den = lex_.expect_int();
        mpq_class q(mpz_class(num.text), mpz_class(den.text));
        if (q.get_den() == 0)
          throw parse_error("zero denominator", den.line, den.col);
        try {
          return Polynomial::constant(ring_, ring_->field.from_rational(q));
        } catch (const analysis_error& e) {
          throw parse_error(e.what(), num.line, num.col);
        }
      }
      return Polynomial::constant(ring_,
                                  ring_->field.from_integer(mpz_class(num.text)));
    }
    if (t.kind == Tok::Ident) {
      Token v = lex_.next();
      int idx = ring_->index_of(v.text);
      if (idx < 0)
        throw parse_error("unknown variable '" + v.text + "'", v.line, v.col);
      return Polynomial::variable(ring_, idx);
    }
    if (lex_.at_punct('(')) {
      lex_.next();
      Polynomial inner = parse_expr();
      lex_.expect_punct(')');
      return inner;
    }
    lex_.fail("expected a number, variable, or parenthesized expression");
  }

  std::uint64_t parse_u64(const Token& t) {
    mpz_class v(t.text);
    if (!v.fits_ulong_p())
      throw parse_error("exponent out of range", t.line, t.col);
    return v.get_ui();
  }

  Lexer& lex_;
  std::shared_ptr<const Ring> ring_;
};

std::vector<Polynomial> parse_poly_list(Lexer& lex,
                                        const std::shared_ptr<const Ring>& ring) {
  std::vector<Polynomial> out;
  lex.expect_punct('(');
  if (lex.at_punct(')')) {
    lex.next();
    return out;
  }
  while (true) {
    PolyParser pp(lex, ring);
    out.push_back(pp.parse_expr());
    if (lex.at_punct(',')) {
      lex.next();
      continue;
    }
    lex.expect_punct(')');
    break;
  }
  return out;
}

Primitive primitive_from(const Token& t) {
  if (t.text == "lex") return Primitive::Lex;
  if (t.text == "grlex") return Primitive::GrLex;
  if (t.text == "grevlex") return Primitive::GrevLex;
  throw parse_error("unknown order '" + t.text + "'", t.line, t.col);
}

struct RingDecl {
  Field field;
  std::vector<std::string> params, mains;
  bool mono = false;  // Z or Z/n base
};

class SessionParser {
public:
  SessionParser(const std::string& text, const SessionOptions& opts)
      : lex_(text), opts_(opts) {}

  Session run() {
    while (lex_.peek().kind != Tok::End) statement();
    finalize_ring();
    return std::move(session_);
  }

private:
  void statement() {
    Token kw = lex_.expect_ident();
    if (kw.text == "ring")
      ring_stmt(kw);
    else if (kw.text == "order")
      order_stmt(kw);
    else if (kw.text == "base")
      base_stmt(kw);
    else if (kw.text == "ideal")
      ideal_stmt(kw);
    else if (kw.text == "point")
      point_stmt(kw);
    else if (kw.text == "prime")
      prime_stmt(kw);
    else
      throw parse_error("unknown statement '" + kw.text + "'", kw.line,
                        kw.col);
  }

  std::vector<std::string> var_list() {
    std::vector<std::string> names;
    lex_.expect_punct('[');
    if (lex_.at_punct(']')) {
      lex_.next();
      return names;
    }
    while (true) {
      names.push_back(lex_.expect_ident().text);
      if (lex_.at_punct(',')) {
        lex_.next();
        continue;
      }
      lex_.expect_punct(']');
      break;
    }
    return names;
  }

  void ring_stmt(const Token& kw) {
    if (decl_)
      throw parse_error("ring already declared", kw.line, kw.col);
    Token f = lex_.expect_ident();
    RingDecl decl;
    if (f.text == "Q") {
      decl.field = Field::rationals();
    } else if (f.text == "Fp") {
      std::uint64_t p = opts_.default_prime;
      if (lex_.at_punct('(')) {
        lex_.next();
        Token pt = lex_.expect_int();
        mpz_class v(pt.text);
        if (!v.fits_ulong_p())
          throw parse_error("characteristic out of range", pt.line, pt.col);
        p = v.get_ui();
        lex_.expect_punct(')');
      }
      try {
        decl.field = Field::prime_field(p);
      } catch (const analysis_error& e) {
        throw parse_error(e.what(), f.line, f.col);
      }
    } else if (f.text == "Z") {
      decl.field = Field::integers();
      decl.mono = true;
    } else if (f.text == "Zmod") {
      lex_.expect_punct('(');
      Token nt = lex_.expect_int();
      lex_.expect_punct(')');
      try {
        decl.field = Field::integers_mod(mpz_class(nt.text));
      } catch (const analysis_error& e) {
        throw parse_error(e.what(), nt.line, nt.col);
      }
      decl.mono = true;
    } else {
      throw parse_error("unknown field '" + f.text + "'", f.line, f.col);
    }

    std::vector<std::string> first = var_list();
    if (lex_.at_punct('[')) {
      decl.params = std::move(first);
      decl.mains = var_list();
    } else {
      // Single block: every variable is a main variable.
      decl.mains = std::move(first);
    }
    if (decl.mono && !decl.params.empty())
      throw parse_error("Z and Zmod bases take a single variable block",
                        kw.line, kw.col);
    if (decl.mains.empty())
      throw parse_error("ring needs at least one main variable", kw.line,
                        kw.col);
    lex_.expect_punct(';');
    decl_ = std::move(decl);
  }

  void order_stmt(const Token& kw) {
    require_decl(kw);
    if (finalized_ || !base_.empty())
      throw parse_error("order must precede base and ideal statements",
                        kw.line, kw.col);
    if (decl_->mono)
      throw parse_error("order statements apply to Q and Fp rings", kw.line,
                        kw.col);
    std::vector<std::pair<Primitive, std::vector<std::string>>> blocks;
    while (true) {
      Token name = lex_.expect_ident();
      Primitive prim = primitive_from(name);
      lex_.expect_punct('(');
      std::vector<std::string> vars;
      while (true) {
        vars.push_back(lex_.expect_ident().text);
        if (lex_.at_punct(',')) {
          lex_.next();
          continue;
        }
        lex_.expect_punct(')');
        break;
      }
      blocks.emplace_back(prim, std::move(vars));
      if (lex_.at_punct(',')) {
        lex_.next();
        continue;
      }
      lex_.expect_punct(';');
      break;
    }
    if (blocks.size() != (decl_->params.empty() ? 1u : 2u))
      throw parse_error("order needs one block per variable block", kw.line,
                        kw.col);
    order_blocks_ = std::move(blocks);
  }

  void base_stmt(const Token& kw) {
    require_decl(kw);
    if (finalized_)
      throw parse_error("base must precede ideal, point, and prime statements",
                        kw.line, kw.col);
    if (decl_->mono)
      throw parse_error("base relations apply to Q and Fp rings", kw.line,
                        kw.col);
    build_preliminary_ring();
    try {
      base_ = parse_poly_list(lex_, ring_);
    } catch (const analysis_error& e) {
      throw parse_error(e.what(), kw.line, kw.col);
    }
    for (const auto& g : base_)
      for (const auto& t : g.terms())
        if (!t.exp.supported_on(ring_->params))
          throw parse_error(
              "base relation " + poly_str(g) + " involves a main variable",
              kw.line, kw.col);
    lex_.expect_punct(';');
  }

  void ideal_stmt(const Token& kw) {
    finalize_ring_at(kw);
    Token name = lex_.expect_ident();
    lex_.expect_punct('=');
    auto ring = decl_->mono ? session_.mono_ring : session_.family->full();
    std::vector<Polynomial> gens = parse_poly_list(lex_, ring);
    lex_.expect_punct(';');
    if (session_.ideals.count(name.text) ||
        session_.mono_ideals.count(name.text))
      throw parse_error("ideal '" + name.text + "' already defined",
                        name.line, name.col);
    if (decl_->mono) {
      std::vector<std::pair<mpz_class, Exponent>> terms;
      for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.size() != 1)
          throw parse_error(
              "monomial-ideal generators must be single terms: " +
                  poly_str(g),
              name.line, name.col);
        terms.emplace_back(g.leading_term().coeff.integer(),
                           g.leading_term().exp);
      }
      session_.mono_ideals.emplace(name.text,
                                   MonomialIdeal(ring, std::move(terms)));
    } else {
      session_.ideals.emplace(name.text,
                              FamilyIdeal(*session_.family, std::move(gens)));
    }
    session_.ideal_names.push_back(name.text);
  }

  void point_stmt(const Token& kw) {
    finalize_ring_at(kw);
    if (decl_->mono)
      throw parse_error("points apply to Q and Fp rings", kw.line, kw.col);
    Token name = lex_.expect_ident();
    lex_.expect_punct(':');
    std::map<int, Coefficient> values;
    while (true) {
      Token var = lex_.expect_ident();
      int idx = session_.family->full()->index_of(var.text);
      if (idx < 0)
        throw parse_error("unknown variable '" + var.text + "'", var.line,
                          var.col);
      lex_.expect_punct('=');
      values[idx] = scalar_value(var);
      if (lex_.at_punct(',')) {
        lex_.next();
        continue;
      }
      lex_.expect_punct(';');
      break;
    }
    try {
      session_.points.emplace(name.text,
                              RationalPoint(*session_.family, std::move(values)));
    } catch (const analysis_error& e) {
      throw parse_error(e.what(), name.line, name.col);
    }
  }

  void prime_stmt(const Token& kw) {
    finalize_ring_at(kw);
    if (decl_->mono)
      throw parse_error("primes apply to Q and Fp rings", kw.line, kw.col);
    Token name = lex_.expect_ident();
    lex_.expect_punct('=');
    std::vector<Polynomial> gens =
        parse_poly_list(lex_, session_.family->full());
    lex_.expect_punct(';');
    std::vector<Polynomial> in_params;
    for (const auto& g : gens) {
      for (const auto& t : g.terms())
        if (!t.exp.supported_on(session_.family->full()->params))
          throw parse_error("prime generator " + poly_str(g) +
                                " involves a main variable",
                            name.line, name.col);
      in_params.push_back(transport(g, session_.family->params()));
    }
    try {
      session_.primes.emplace(name.text,
                              PrimeSpec(*session_.family, std::move(in_params)));
    } catch (const analysis_error& e) {
      throw parse_error(e.what(), name.line, name.col);
    }
  }

  Coefficient scalar_value(const Token& at) {
    bool negate = false;
    if (lex_.at_punct('-')) {
      lex_.next();
      negate = true;
    }
    Token num = lex_.expect_int();
    mpz_class n(num.text);
    mpz_class d(1);
    if (lex_.at_punct('/')) {
      lex_.next();
      d = mpz_class(lex_.expect_int().text);
    }
    try {
      Coefficient c = ring_->field.from_rational(mpq_class(n, d));
      return negate ? -c : c;
    } catch (const analysis_error& e) {
      throw parse_error(e.what(), at.line, at.col);
    }
  }

  void require_decl(const Token& at) {
    if (!decl_)
      throw parse_error("a ring must be declared first", at.line, at.col);
  }

  void build_preliminary_ring() {
    if (ring_) return;
    if (decl_->mono) {
      ring_ = Ring::plain(decl_->field, decl_->mains, Primitive::Lex);
      return;
    }
    Primitive main_prim = Primitive::Lex, param_prim = Primitive::Lex;
    std::vector<std::string> mains = decl_->mains, params = decl_->params;
    if (!order_blocks_.empty()) {
      auto check = [&](const std::vector<std::string>& listed,
                       const std::vector<std::string>& declared) {
        std::vector<std::string> a = listed, b = declared;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
          throw parse_error(
              "order block variables must match the ring declaration", 1, 1);
      };
      check(order_blocks_[0].second, decl_->mains);
      main_prim = order_blocks_[0].first;
      mains = order_blocks_[0].second;  // listed order is the priority
      if (order_blocks_.size() > 1) {
        check(order_blocks_[1].second, decl_->params);
        param_prim = order_blocks_[1].first;
        params = order_blocks_[1].second;
      }
    }
    // Index order follows the declaration; the order blocks carry the
    // listed priority.
    auto r = std::make_shared<Ring>();
    r->field = decl_->field;
    r->names = decl_->params;
    r->names.insert(r->names.end(), decl_->mains.begin(), decl_->mains.end());
    for (std::size_t i = 0; i < r->names.size(); ++i)
      for (std::size_t j = i + 1; j < r->names.size(); ++j)
        if (r->names[i] == r->names[j])
          throw parse_error("duplicate variable '" + r->names[i] + "'", 1, 1);
    for (std::size_t i = 0; i < decl_->params.size(); ++i)
      r->params.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < decl_->mains.size(); ++i)
      r->mains.push_back(static_cast<int>(decl_->params.size() + i));
    auto indices = [&](const std::vector<std::string>& names) {
      std::vector<int> idx;
      for (const auto& n : names) idx.push_back(r->index_of(n));
      return idx;
    };
    std::vector<OrderBlock> blocks;
    blocks.push_back({indices(mains), main_prim});
    if (!params.empty()) blocks.push_back({indices(params), param_prim});
    r->order = OrderSpec(r->names.size(), std::move(blocks));
    ring_ = r;
  }

  void finalize_ring_at(const Token& at) {
    require_decl(at);
    finalize_ring();
  }

  void finalize_ring() {
    if (!decl_ || finalized_) return;
    build_preliminary_ring();
    finalized_ = true;
    if (decl_->mono) {
      session_.mono_ring = ring_;
    } else {
      session_.family.emplace(ring_, base_);
    }
  }

  Lexer lex_;
  SessionOptions opts_;
  Session session_;
  std::optional<RingDecl> decl_;
  std::shared_ptr<const Ring> ring_;
  std::vector<Polynomial> base_;
  std::vector<std::pair<Primitive, std::vector<std::string>>> order_blocks_;
  bool finalized_ = false;
};

}  // namespace

Session parse_session(const std::string& text, const SessionOptions& opts) {
  SessionParser parser(text, opts);
  return parser.run();
}

Polynomial parse_polynomial_text(const std::string& text,
                                 const std::shared_ptr<const Ring>& ring) {
  Lexer lex(text);
  PolyParser pp(lex, ring);
  Polynomial p = pp.parse_expr();
  if (lex.peek().kind != Tok::End) lex.fail("trailing input after polynomial");
  return p;
}

std::vector<Polynomial> parse_ideal_text(const std::string& text,
                                         const std::shared_ptr<const Ring>& ring) {
  Lexer lex(text);
  if (lex.at_punct('(')) {
    std::vector<Polynomial> gens = parse_poly_list(lex, ring);
    if (lex.peek().kind != Tok::End) lex.fail("trailing input after ideal");
    return gens;
  }
  PolyParser pp(lex, ring);
  Polynomial p = pp.parse_expr();
  if (lex.peek().kind != Tok::End) lex.fail("trailing input after ideal");
  return {p};
}

std::map<int, Coefficient> parse_assignment_text(const std::string& text,
                                                 const Ring& ring) {
  Lexer lex(text);
  std::map<int, Coefficient> values;
  while (true) {
    Token var = lex.expect_ident();
    int idx = ring.index_of(var.text);
    if (idx < 0)
      throw parse_error("unknown variable '" + var.text + "'", var.line,
                        var.col);
    lex.expect_punct('=');
    bool negate = false;
    if (lex.at_punct('-')) {
      lex.next();
      negate = true;
    }
    Token num = lex.expect_int();
    mpz_class n(num.text), d(1);
    if (lex.at_punct('/')) {
      lex.next();
      d = mpz_class(lex.expect_int().text);
    }
    Coefficient c = ring.field.from_rational(mpq_class(n, d));
    values[idx] = negate ? -c : c;
    if (lex.at_punct(',')) {
      lex.next();
      continue;
    }
    break;
  }
  if (lex.peek().kind != Tok::End) lex.fail("trailing input after assignments");
  return values;
}

}  // namespace gbfam
