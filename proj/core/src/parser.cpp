// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/parser.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "omv/errors.hpp"

namespace omv {

namespace {

enum class Tok : uint8_t {
  Ident, KwTheory, KwLogic, KwQuant, KwConst, KwDef, KwAxiom, KwConjecture,
  KwAll, KwEx, KwBox, KwDia, KwTop, KwBot,
  LParen, RParen, Colon, Dot, Lambda, Gt, Eq, Neq, Not, And, Or, Arrow, Iff,
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::KwTheory: return "'theory'";
    case Tok::KwLogic: return "'logic'";
    case Tok::KwQuant: return "'quant'";
    case Tok::KwConst: return "'const'";
    case Tok::KwDef: return "'def'";
    case Tok::KwAxiom: return "'axiom'";
    case Tok::KwConjecture: return "'conjecture'";
    case Tok::KwAll: return "'all'";
    case Tok::KwEx: return "'ex'";
    case Tok::KwBox: return "'box'";
    case Tok::KwDia: return "'dia'";
    case Tok::KwTop: return "'top'";
    case Tok::KwBot: return "'bot'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Lambda: return "'\\'";
    case Tok::Gt: return "'>'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::optional<Tok> keyword(const std::string& s) {
  if (s == "theory") return Tok::KwTheory;
  if (s == "logic") return Tok::KwLogic;
  if (s == "quant") return Tok::KwQuant;
  if (s == "const") return Tok::KwConst;
  if (s == "def") return Tok::KwDef;
  if (s == "axiom") return Tok::KwAxiom;
  if (s == "conjecture") return Tok::KwConjecture;
  if (s == "all") return Tok::KwAll;
  if (s == "ex") return Tok::KwEx;
  if (s == "box") return Tok::KwBox;
  if (s == "dia") return Tok::KwDia;
  if (s == "top") return Tok::KwTop;
  if (s == "bot") return Tok::KwBot;
  return std::nullopt;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') { ++line; col = 1; } else ++col;
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
    int tl = line, tc = col;
    auto two = text.substr(i, 2);
    auto three = text.substr(i, 3);
    if (three == "<->") { out.push_back({Tok::Iff, three, tl, tc}); advance(3); continue; }
    if (two == "->") { out.push_back({Tok::Arrow, two, tl, tc}); advance(2); continue; }
    if (two == "!=") { out.push_back({Tok::Neq, two, tl, tc}); advance(2); continue; }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", tl, tc}); advance(1); continue;
      case ')': out.push_back({Tok::RParen, ")", tl, tc}); advance(1); continue;
      case ':': out.push_back({Tok::Colon, ":", tl, tc}); advance(1); continue;
      case '.': out.push_back({Tok::Dot, ".", tl, tc}); advance(1); continue;
      case '\\': out.push_back({Tok::Lambda, "\\", tl, tc}); advance(1); continue;
      case '>': out.push_back({Tok::Gt, ">", tl, tc}); advance(1); continue;
      case '=': out.push_back({Tok::Eq, "=", tl, tc}); advance(1); continue;
      case '~': out.push_back({Tok::Not, "~", tl, tc}); advance(1); continue;
      case '&': out.push_back({Tok::And, "&", tl, tc}); advance(1); continue;
      case '|': out.push_back({Tok::Or, "|", tl, tc}); advance(1); continue;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
              text[j] == '\''))
        ++j;
      std::string word = text.substr(i, j - i);
      Tok kind = keyword(word).value_or(Tok::Ident);
      out.push_back({kind, word, tl, tc});
      advance(j - i);
      continue;
    }
    throw SourceError(tl, tc, std::string("stray character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::optional<SortTag> default_sort(const std::string& name) {
  if (name.rfind("ph", 0) == 0 || name.rfind("ps", 0) == 0) return SortTag::Property;
  switch (name[0]) {
    case 'x': case 'y': case 'z': case 'u': case 'v': return SortTag::Indiv;
    default: return std::nullopt;
  }
}

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  const Token& get() { return toks[pos++]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) {
    throw SourceError(peek().line, peek().col, msg, std::move(expected));
  }

  Token expect(Tok k) {
    if (!at(k)) fail(std::string("found ") + tok_name(peek().kind), {tok_name(k)});
    return get();
  }

  std::string ident(const char* what) {
    if (!at(Tok::Ident)) fail(std::string("expected ") + what, {tok_name(Tok::Ident)});
    Token t = get();
    if (t.text == "R" || t.text == "E")
      throw SourceError(t.line, t.col, "'" + t.text + "' is reserved");
    return t.text;
  }

  // --- types -------------------------------------------------------------

  TypeRef parse_type() {
    TypeRef left = parse_type_atom();
    if (at(Tok::Gt)) {
      get();
      return Type::fun(left, parse_type());
    }
    return left;
  }

  TypeRef parse_type_atom() {
    if (at(Tok::LParen)) {
      get();
      TypeRef t = parse_type();
      expect(Tok::RParen);
      return t;
    }
    if (at(Tok::Ident)) {
      Token t = get();
      if (t.text == "i") return Type::indiv();
      if (t.text == "wo") return Type::lifted();
      if (t.text == "coll") return Type::property_collection();
      throw SourceError(t.line, t.col, "unknown type '" + t.text + "'",
                        {"'i'", "'wo'", "'coll'", "'('"});
    }
    fail("expected a type", {"'i'", "'wo'", "'coll'", "'('"});
  }

  static std::optional<SortTag> sort_of_type(TypeRef t) {
    if (t == Type::indiv()) return SortTag::Indiv;
    if (t == Type::lifted()) return SortTag::Proposition;
    if (t == Type::property()) return SortTag::Property;
    if (t == Type::property_collection()) return SortTag::PropertyCollection;
    return std::nullopt;
  }

  // Binder: IDENT with optional ':' type annotation; the sort comes from
  // the annotation or the name's default.
  std::pair<std::string, SortTag> parse_binder(bool lambda) {
    Token name_tok = peek();
    std::string name = ident("a bound variable");
    SortTag sort;
    if (at(Tok::Colon)) {
      get();
      TypeRef t = parse_type();
      auto s = sort_of_type(t);
      if (!s)
        throw SourceError(name_tok.line, name_tok.col,
                          "binders range over i, wo, i>wo or coll; found " + t->str());
      sort = *s;
    } else if (auto s = default_sort(name)) {
      sort = *s;
    } else {
      throw SourceError(name_tok.line, name_tok.col,
                        "cannot infer a sort for '" + name +
                            "'; annotate it, e.g. '" + name + ":wo'");
    }
    if (lambda && sort != SortTag::Indiv)
      throw SourceError(name_tok.line, name_tok.col,
                        "lambda abstraction binds individuals");
    return {name, sort};
  }

  // --- formulas ----------------------------------------------------------

  SurfaceRef parse_expr() {
    if (at(Tok::KwAll) || at(Tok::KwEx)) {
      bool is_all = get().kind == Tok::KwAll;
      auto [name, sort] = parse_binder(false);
      expect(Tok::Dot);
      SurfaceRef body = parse_expr();
      return SurfaceFormula::quant(is_all ? SurfaceKind::Forall : SurfaceKind::Exists,
                                   name, sort, std::move(body));
    }
    if (at(Tok::Lambda)) {
      get();
      auto [name, sort] = parse_binder(true);
      expect(Tok::Dot);
      SurfaceRef body = parse_expr();
      return SurfaceFormula::lam(name, sort, std::move(body));
    }
    return parse_iff();
  }

  SurfaceRef parse_iff() {
    SurfaceRef left = parse_implies();
    while (at(Tok::Iff)) {
      get();
      left = SurfaceFormula::binary(SurfaceKind::Iff, std::move(left), parse_implies());
    }
    return left;
  }

  SurfaceRef parse_implies() {
    SurfaceRef left = parse_or();
    if (at(Tok::Arrow)) {
      get();
      return SurfaceFormula::binary(SurfaceKind::Implies, std::move(left), parse_implies());
    }
    return left;
  }

  SurfaceRef parse_or() {
    SurfaceRef left = parse_and();
    while (at(Tok::Or)) {
      get();
      left = SurfaceFormula::binary(SurfaceKind::Or, std::move(left), parse_and());
    }
    return left;
  }

  SurfaceRef parse_and() {
    SurfaceRef left = parse_unary();
    while (at(Tok::And)) {
      get();
      left = SurfaceFormula::binary(SurfaceKind::And, std::move(left), parse_unary());
    }
    return left;
  }

  SurfaceRef parse_unary() {
    if (at(Tok::Not) || at(Tok::KwBox) || at(Tok::KwDia)) {
      Token op = get();
      SurfaceRef operand = parse_unary();
      SurfaceKind k = op.kind == Tok::Not    ? SurfaceKind::Not
                      : op.kind == Tok::KwBox ? SurfaceKind::Box
                                              : SurfaceKind::Dia;
      auto n = SurfaceFormula::unary(k, std::move(operand));
      return n;
    }
    return parse_cmp();
  }

  SurfaceRef parse_cmp() {
    SurfaceRef left = parse_app();
    if (at(Tok::Eq) || at(Tok::Neq)) {
      bool eq = get().kind == Tok::Eq;
      SurfaceRef right = parse_app();
      return SurfaceFormula::binary(eq ? SurfaceKind::Eq : SurfaceKind::Neq,
                                    std::move(left), std::move(right));
    }
    return left;
  }

  bool starts_atom() const {
    return at(Tok::Ident) || at(Tok::KwTop) || at(Tok::KwBot) || at(Tok::LParen);
  }

  SurfaceRef parse_app() {
    SurfaceRef f = parse_atom();
    while (starts_atom()) f = SurfaceFormula::app(std::move(f), parse_atom());
    return f;
  }

  SurfaceRef parse_atom() {
    if (at(Tok::KwTop)) { get(); return SurfaceFormula::leaf(SurfaceKind::Top); }
    if (at(Tok::KwBot)) { get(); return SurfaceFormula::leaf(SurfaceKind::Bot); }
    if (at(Tok::LParen)) {
      get();
      SurfaceRef e = parse_expr();
      expect(Tok::RParen);
      return e;
    }
    if (at(Tok::Ident)) {
      Token t = get();
      return SurfaceFormula::var(t.text, t.line, t.col);
    }
    fail("expected a formula",
         {tok_name(Tok::Ident), "'top'", "'bot'", "'('", "'all'", "'ex'", "'\\'"});
  }

  // --- theory files ------------------------------------------------------

  Theory parse_theory_file() {
    Theory th;
    expect(Tok::KwTheory);
    th.name = ident("a theory name");

    expect(Tok::KwLogic);
    Token logic_tok = peek();
    std::string logic = ident("a logic (K, KT, KB, S5)");
    if (auto f = frame_class_from(logic)) th.logic = *f;
    else throw SourceError(logic_tok.line, logic_tok.col, "unknown logic '" + logic + "'",
                           {"'K'", "'KT'", "'KB'", "'S5'"});

    expect(Tok::KwQuant);
    Token quant_tok = peek();
    std::string quant = ident("a quantifier mode");
    if (auto m = quant_mode_from(quant)) th.quant = *m;
    else throw SourceError(quant_tok.line, quant_tok.col, "unknown mode '" + quant + "'",
                           {"'possibilist'", "'actualist'"});

    std::set<std::string> term_names;  // constants and definitions
    std::set<std::string> axiom_names, conjecture_names;

    while (!at(Tok::End)) {
      if (at(Tok::KwConst)) {
        get();
        Token t = peek();
        std::string name = ident("a constant name");
        if (!term_names.insert(name).second)
          throw SourceError(t.line, t.col, "duplicate name '" + name + "'");
        expect(Tok::Colon);
        th.consts.push_back({name, parse_type()});
      } else if (at(Tok::KwDef)) {
        get();
        Token t = peek();
        std::string name = ident("a definition name");
        if (!term_names.insert(name).second)
          throw SourceError(t.line, t.col, "duplicate name '" + name + "'");
        DefDecl def;
        def.name = name;
        std::set<std::string> param_names;
        while (at(Tok::Ident) || at(Tok::LParen)) {
          std::pair<std::string, SortTag> p;
          if (at(Tok::LParen)) {
            get();
            Token pt = peek();
            std::string pn = ident("a parameter name");
            expect(Tok::Colon);
            TypeRef ty = parse_type();
            auto s = sort_of_type(ty);
            if (!s)
              throw SourceError(pt.line, pt.col,
                                "parameters range over i, wo, i>wo or coll");
            expect(Tok::RParen);
            p = {pn, *s};
          } else {
            Token pt = peek();
            std::string pn = ident("a parameter name");
            auto s = default_sort(pn);
            if (!s)
              throw SourceError(pt.line, pt.col,
                                "cannot infer a sort for parameter '" + pn +
                                    "'; write (" + pn + ":TYPE)");
            p = {pn, *s};
          }
          if (!param_names.insert(p.first).second)
            throw SourceError(t.line, t.col, "duplicate parameter '" + p.first + "'");
          def.params.push_back(std::move(p));
        }
        expect(Tok::Colon);
        Token body_tok = peek();
        def.body = parse_expr();
        check_def_references(def, th, body_tok);
        th.defs.push_back(std::move(def));
      } else if (at(Tok::KwAxiom) || at(Tok::KwConjecture)) {
        bool is_axiom = get().kind == Tok::KwAxiom;
        Token t = peek();
        std::string name = ident(is_axiom ? "an axiom name" : "a conjecture name");
        auto& names = is_axiom ? axiom_names : conjecture_names;
        if (!names.insert(name).second)
          throw SourceError(t.line, t.col, "duplicate name '" + name + "'");
        expect(Tok::Colon);
        SurfaceRef f = parse_expr();
        (is_axiom ? th.axioms : th.conjectures).push_back({name, std::move(f)});
      } else {
        fail(std::string("found ") + tok_name(peek().kind),
             {"'const'", "'def'", "'axiom'", "'conjecture'", "end of input"});
      }
    }

    // Sort discipline for every body, with positions intact.
    SurfaceContext ctx = th.context();
    for (const auto& d : th.defs) {
      SurfaceContext body_ctx = ctx;
      for (const auto& [pn, ps] : d.params) body_ctx.consts[pn] = sort_type(ps);
      surface_typecheck(d.body, body_ctx);
    }
    for (const auto& a : th.axioms) surface_typecheck(a.formula, ctx);
    for (const auto& c : th.conjectures) surface_typecheck(c.formula, ctx);
    return th;
  }

  // Definitions may use constants and earlier definitions only. A use of
  // the definition being introduced is recursion; report it as such.
  void check_def_references(const DefDecl& def, const Theory& so_far, const Token& where) {
    std::vector<std::string> bound;
    for (const auto& [pn, ps] : def.params) bound.push_back(pn);
    scan_refs(def.body, def, so_far, bound, where);
  }

  void scan_refs(const SurfaceRef& e, const DefDecl& def, const Theory& so_far,
                 std::vector<std::string>& bound, const Token& where) {
    if (!e) return;
    switch (e->kind) {
      case SurfaceKind::Var:
      case SurfaceKind::ConstRef: {
        for (auto it = bound.rbegin(); it != bound.rend(); ++it)
          if (*it == e->name) return;
        if (e->name == def.name)
          throw SourceError(e->line ? e->line : where.line, e->col ? e->col : where.col,
                            "recursive definition of '" + def.name + "'");
        (void)so_far;
        return;
      }
      case SurfaceKind::Lam:
      case SurfaceKind::Forall:
      case SurfaceKind::Exists: {
        bound.push_back(e->name);
        scan_refs(e->a, def, so_far, bound, where);
        bound.pop_back();
        return;
      }
      default:
        scan_refs(e->a, def, so_far, bound, where);
        scan_refs(e->b, def, so_far, bound, where);
    }
  }
};

}  // namespace

Theory parse_theory(const std::string& text) {
  Parser p{lex(text)};
  return p.parse_theory_file();
}

SurfaceRef parse_formula(const std::string& text, const SurfaceContext& context) {
  Parser p{lex(text)};
  SurfaceRef e = p.parse_expr();
  if (!p.at(Tok::End))
    throw SourceError(p.peek().line, p.peek().col,
                      "trailing input after formula", {"end of input"});
  surface_typecheck(e, context);
  return e;
}

}  // namespace omv
