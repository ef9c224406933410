#include "teamaut/parser.hpp"

#include <algorithm>
#include <map>

#include "teamaut/error.hpp"

namespace teamaut {

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> toks;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  static const char* two_char[] = {"->", "&&", "||"};
  static const std::string one_char = "{}()[],;:=!?*+-<>";
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      toks.push_back({Token::Kind::Ident, text.substr(i, j - i), line, col});
      advance(j - i);
      continue;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      toks.push_back({Token::Kind::Number, text.substr(i, j - i), line, col});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const char* s : two_char) {
      if (text.compare(i, 2, s) == 0) {
        toks.push_back({Token::Kind::Symbol, s, line, col});
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (one_char.find(c) != std::string::npos) {
      toks.push_back({Token::Kind::Symbol, std::string(1, c), line, col});
      advance(1);
      continue;
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }
  toks.push_back({Token::Kind::End, "", line, col});
  return toks;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ModelDocument parse_document() {
    ModelDocument doc;
    while (!at_end()) {
      if (accept_kw("system")) {
        if (doc.has_system) fail("more than one system block");
        doc.has_system = true;
        doc.system_name = expect_ident("system name");
        parse_system_body(doc);
      } else if (accept_kw("global")) {
        if (doc.has_global) fail("more than one global block");
        doc.has_global = true;
        doc.global_name = expect_ident("global model name");
        parse_global_body(doc);
      } else if (accept_kw("formula")) {
        std::string name = expect_ident("formula name");
        expect_sym("{");
        doc.formulas.emplace_back(name, parse_formula());
        expect_sym("}");
      } else {
        fail("expected 'system', 'global', or 'formula'");
      }
    }
    if (!doc.has_system && !doc.has_global) fail("no system declared");
    finish(doc);
    return doc;
  }

  pdl::Formula parse_formula_only() {
    auto f = parse_formula();
    if (!at_end()) fail("trailing input after formula");
    return f;
  }

  FeatureExpr parse_fexpr_only() {
    auto e = parse_fexpr();
    if (!at_end()) fail("trailing input after expression");
    return e;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  // Per-component state interning while a component body is parsed.
  std::map<std::string, int> comp_states_;
  std::vector<std::string> comp_state_names_;

  const Token& cur() const { return toks_[pos_]; }
  bool at_end() const { return cur().kind == Token::Kind::End; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur().line, cur().col, msg);
  }

  bool accept_sym(const std::string& s) {
    if (cur().kind == Token::Kind::Symbol && cur().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_sym(const std::string& s) {
    if (!accept_sym(s)) fail("expected '" + s + "'");
  }

  bool peek_kw(const std::string& s) const {
    return cur().kind == Token::Kind::Ident && cur().text == s;
  }

  bool accept_kw(const std::string& s) {
    if (peek_kw(s)) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string expect_ident(const std::string& what) {
    if (cur().kind != Token::Kind::Ident) fail("expected " + what);
    return toks_[pos_++].text;
  }

  std::string expect_name(const std::string& what) {
    if (cur().kind != Token::Kind::Ident && cur().kind != Token::Kind::Number)
      fail("expected " + what);
    return toks_[pos_++].text;
  }

  int expect_number(const std::string& what) {
    if (cur().kind != Token::Kind::Number) fail("expected " + what);
    return std::stoi(toks_[pos_++].text);
  }

  // ---- feature expressions ----

  FeatureExpr parse_fexpr() {
    FeatureExpr e = parse_fand();
    while (accept_sym("||")) e = FeatureExpr::disj(e, parse_fand());
    return e;
  }

  FeatureExpr parse_fand() {
    FeatureExpr e = parse_funary();
    while (accept_sym("&&")) e = FeatureExpr::conj(e, parse_funary());
    return e;
  }

  FeatureExpr parse_funary() {
    if (accept_sym("!")) return FeatureExpr::negate(parse_funary());
    if (accept_kw("true")) return FeatureExpr::top();
    if (accept_kw("false")) return FeatureExpr::bot();
    if (accept_sym("(")) {
      FeatureExpr e = parse_fexpr();
      expect_sym(")");
      return e;
    }
    return FeatureExpr::var(expect_ident("feature name"));
  }

  // ---- system blocks ----

  void parse_system_body(ModelDocument& doc) {
    expect_sym("{");
    while (!accept_sym("}")) {
      if (accept_kw("features")) {
        expect_sym("{");
        if (!accept_sym("}")) {
          do {
            doc.fsys.features.insert(expect_ident("feature name"));
          } while (accept_sym(","));
          expect_sym("}");
        }
      } else if (accept_kw("model")) {
        doc.fsys.feature_model = parse_fexpr();
        expect_sym(";");
      } else if (accept_kw("component")) {
        parse_component(doc);
      } else if (accept_kw("sync")) {
        parse_sync(doc);
      } else {
        fail("expected 'component', 'sync', 'features', or 'model'");
      }
    }
  }

  int state_id(const std::string& name) {
    auto [it, fresh] =
        comp_states_.emplace(name, static_cast<int>(comp_state_names_.size()));
    if (fresh) comp_state_names_.push_back(name);
    return it->second;
  }

  void parse_component(ModelDocument& doc) {
    std::string name = expect_ident("component name");
    for (const auto& n : doc.fsys.names)
      if (n == name) fail("duplicate component '" + name + "'");
    comp_states_.clear();
    comp_state_names_.clear();
    FeaturedCA fca;
    std::optional<int> init;
    expect_sym("{");
    while (!accept_sym("}")) {
      if (accept_kw("input") || accept_kw("output") || accept_kw("internal")) {
        const std::string& role = toks_[pos_ - 1].text;
        std::set<Action>& target = role == "input"    ? fca.ca.inputs
                                   : role == "output" ? fca.ca.outputs
                                                      : fca.ca.internals;
        do {
          target.insert(expect_ident("action name"));
        } while (accept_sym(","));
        expect_sym(";");
      } else if (accept_kw("init")) {
        init = state_id(expect_name("state"));
        expect_sym(";");
      } else {
        parse_transition(fca);
      }
    }
    fca.ca.states = comp_state_names_;
    if (fca.ca.states.empty()) fca.ca.states.push_back("0");
    fca.ca.initial = init.value_or(0);
    doc.fsys.names.push_back(name);
    doc.fsys.components.push_back(std::move(fca));
  }

  void parse_transition(FeaturedCA& fca) {
    int from = state_id(expect_name("state"));
    expect_sym("->");
    int to = state_id(expect_name("state"));
    expect_sym(":");
    const Token& at = cur();
    Action a = expect_ident("action name");
    bool out_marker = accept_sym("!");
    bool in_marker = !out_marker && accept_sym("?");
    if (!fca.ca.inputs.count(a) && !fca.ca.outputs.count(a) &&
        !fca.ca.internals.count(a))
      throw ParseError(at.line, at.col, "undeclared action '" + a + "'");
    if (out_marker && !fca.ca.outputs.count(a))
      throw ParseError(at.line, at.col, "'" + a + "!' but not an output");
    if (in_marker && !fca.ca.inputs.count(a))
      throw ParseError(at.line, at.col, "'" + a + "?' but not an input");
    FeatureExpr guard = FeatureExpr::top();
    if (accept_sym("[")) {
      guard = parse_fexpr();
      expect_sym("]");
    }
    fca.ca.transitions.push_back({from, a, to});
    fca.guards.push_back(std::move(guard));
    expect_sym(";");
  }

  Interval parse_interval() {
    expect_sym("[");
    Interval iv;
    iv.min = expect_number("interval lower bound");
    expect_sym(",");
    if (accept_sym("*"))
      iv.max = std::nullopt;
    else
      iv.max = expect_number("interval upper bound");
    expect_sym("]");
    return iv;
  }

  void parse_sync(ModelDocument& doc) {
    SyncDecl decl;
    decl.action = expect_ident("action name");
    if (accept_kw("when")) decl.when = parse_fexpr();
    expect_sym("=");
    if (cur().kind == Token::Kind::Symbol && cur().text == "[") {
      SyncType st;
      st.out_range = parse_interval();
      expect_sym("->");
      st.in_range = parse_interval();
      decl.type = st;
    } else {
      const Token& at = cur();
      std::string name = expect_ident("interval or pattern name");
      auto p = pattern_from_name(name);
      if (!p)
        throw ParseError(at.line, at.col, "unknown pattern '" + name + "'");
      decl.pattern = *p;
    }
    expect_sym(";");
    doc.syncs.push_back(std::move(decl));
  }

  // ---- global models ----

  std::vector<Name> parse_name_set() {
    std::vector<Name> ns;
    if (accept_sym("{")) {
      if (!accept_sym("}")) {
        do {
          ns.push_back(expect_ident("component name"));
        } while (accept_sym(","));
        expect_sym("}");
      }
    } else {
      ns.push_back(expect_ident("component name"));
    }
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return ns;
  }

  void parse_global_body(ModelDocument& doc) {
    comp_states_.clear();
    comp_state_names_.clear();
    std::optional<int> init;
    struct RawEdge {
      int from, to;
      Interaction label;
    };
    std::vector<RawEdge> edges;
    expect_sym("{");
    while (!accept_sym("}")) {
      if (accept_kw("init")) {
        init = state_id(expect_name("state"));
        expect_sym(";");
        continue;
      }
      int from = state_id(expect_name("state"));
      expect_sym("->");
      int to = state_id(expect_name("state"));
      expect_sym(":");
      Interaction l;
      l.senders = parse_name_set();
      expect_sym("->");
      l.receivers = parse_name_set();
      expect_sym(":");
      l.action = expect_ident("action name");
      expect_sym(";");
      edges.push_back({from, to, std::move(l)});
    }
    if (comp_state_names_.empty()) comp_state_names_.push_back("0");
    for (const auto& s : comp_state_names_) doc.global.lts.add_state(s);
    doc.global.lts.initial = init.value_or(0);
    for (const auto& e : edges)
      doc.global.lts.add_transition(e.from, e.label, e.to);
    doc.global.lts.sort_transitions();
  }

  // ---- PDL ----

  Interaction parse_interaction_atom() {
    Interaction l;
    l.senders = parse_name_set();
    expect_sym("->");
    l.receivers = parse_name_set();
    expect_sym(":");
    l.action = expect_ident("action name");
    return l;
  }

  bool at_interaction_start() const {
    return cur().kind == Token::Kind::Ident ||
           (cur().kind == Token::Kind::Symbol && cur().text == "{");
  }

  pdl::Program parse_prog() {
    pdl::Program p = parse_prog_seq();
    while (accept_sym("+")) p = pdl::Program::choice(p, parse_prog_seq());
    return p;
  }

  pdl::Program parse_prog_seq() {
    pdl::Program p = parse_prog_star();
    while (accept_sym(";")) p = pdl::Program::seq(p, parse_prog_star());
    return p;
  }

  pdl::Program parse_prog_star() {
    pdl::Program p = parse_prog_atom();
    while (accept_sym("*")) p = pdl::Program::star(p);
    return p;
  }

  pdl::Program parse_prog_atom() {
    if (accept_kw("some")) return pdl::Program::some();
    if (accept_sym("-")) {
      expect_sym("(");
      std::vector<Interaction> ls;
      ls.push_back(parse_interaction_atom());
      while (accept_sym("+")) ls.push_back(parse_interaction_atom());
      expect_sym(")");
      return pdl::Program::complement(std::move(ls));
    }
    if (accept_sym("(")) {
      pdl::Program p = parse_prog();
      expect_sym(")");
      return p;
    }
    if (at_interaction_start())
      return pdl::Program::atom(parse_interaction_atom());
    fail("expected a program");
  }

  pdl::Formula parse_formula() {
    pdl::Formula f = parse_formula_and();
    while (accept_sym("||")) f = pdl::Formula::disj(f, parse_formula_and());
    return f;
  }

  pdl::Formula parse_formula_and() {
    pdl::Formula f = parse_formula_unary();
    while (accept_sym("&&")) f = pdl::Formula::conj(f, parse_formula_unary());
    return f;
  }

  pdl::Formula parse_formula_unary() {
    if (accept_sym("!")) return pdl::Formula::negate(parse_formula_unary());
    if (accept_sym("[")) {
      pdl::Program p = parse_prog();
      expect_sym("]");
      return pdl::Formula::box(std::move(p), parse_formula_unary());
    }
    if (accept_sym("<")) {
      pdl::Program p = parse_prog();
      expect_sym(">");
      return pdl::Formula::diamond(std::move(p), parse_formula_unary());
    }
    if (accept_kw("true")) return pdl::Formula::truth();
    if (accept_kw("false")) return pdl::Formula::falsity();
    if (accept_sym("(")) {
      pdl::Formula f = parse_formula();
      expect_sym(")");
      return f;
    }
    fail("expected a formula");
  }

  // ---- semantic finish ----

  void finish(ModelDocument& doc) {
    if (doc.has_system) {
      try {
        doc.fsys.validate();
      } catch (const ModelError& e) {
        throw ParseError(1, 1, e.what());
      }
      if (doc.fsys.feature_model.variables().size() > 0 ||
          !doc.fsys.features.empty()) {
        for (const auto& v : doc.fsys.feature_model.variables())
          if (!doc.fsys.features.count(v))
            throw ParseError(1, 1, "feature model uses undeclared feature '" +
                                       v + "'");
      }
      System sys = doc.plain_system();
      // Compile the sync clauses against the declared components.
      for (const auto& decl : doc.syncs) {
        SyncType st = decl.pattern
                          ? pattern_type(*decl.pattern, sys, decl.action)
                          : *decl.type;
        if (decl.when) {
          doc.fst.rules[decl.action].push_back({*decl.when, st});
        } else {
          if (doc.fst.defaults.count(decl.action))
            throw ParseError(1, 1, "duplicate sync default for '" +
                                       decl.action + "'");
          doc.fst.defaults[decl.action] = st;
        }
      }
    } else {
      for (const auto& decl : doc.syncs)
        if (decl.type && !decl.when) doc.fst.defaults[decl.action] = *decl.type;
    }
    if (doc.has_global) {
      doc.global.sig = doc.signature();
      doc.global.spec = doc.plain_spec();
      if (doc.has_system) {
        for (const auto& l : doc.global.lts.alphabet) {
          for (const auto& n : l.senders)
            if (doc.plain_system().index_of(n) < 0)
              throw ParseError(1, 1, "global model uses unknown component '" +
                                         n + "'");
          for (const auto& n : l.receivers)
            if (doc.plain_system().index_of(n) < 0)
              throw ParseError(1, 1, "global model uses unknown component '" +
                                         n + "'");
        }
      }
    }
  }
};

}  // namespace

SyncTypeSpec ModelDocument::plain_spec() const {
  SyncTypeSpec spec;
  for (const auto& [a, st] : fst.defaults) spec.types[a] = st;
  return spec;
}

SystemSignature ModelDocument::signature() const {
  SystemSignature sig;
  sig.names = fsys.names;
  for (size_t i = 0; i < fsys.names.size(); ++i) {
    sig.inputs[fsys.names[i]] = fsys.components[i].ca.inputs;
    sig.outputs[fsys.names[i]] = fsys.components[i].ca.outputs;
  }
  return sig;
}

ModelDocument parse(const std::string& text) {
  return Parser(text).parse_document();
}

pdl::Formula parse_formula(const std::string& text) {
  return Parser(text).parse_formula_only();
}

FeatureExpr parse_feature_expr(const std::string& text) {
  return Parser(text).parse_fexpr_only();
}

}  // namespace teamaut
