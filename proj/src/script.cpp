#include "semicong/script.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "semicong/congruence.hpp"
#include "semicong/errors.hpp"

namespace semicong {

namespace {

struct Token {
  enum Kind { Word, Punct, String, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  Lexer(std::string_view text, int base_line = 1, int base_col = 1)
      : text_(text), line_(base_line), col_(base_col) {}

  Token peek() {
    if (!has_peeked_) {
      peeked_ = lex();
      has_peeked_ = true;
    }
    return peeked_;
  }

  Token next() {
    const Token t = peek();
    has_peeked_ = false;
    return t;
  }

  Token expect_word(const std::string& what) {
    const Token t = next();
    if (t.kind != Token::Word) throw ParseError("expected " + what, t.line, t.col);
    return t;
  }

  void expect_punct(char c) {
    const Token t = next();
    if (t.kind != Token::Punct || t.text[0] != c)
      throw ParseError(std::string("expected '") + c + "'", t.line, t.col);
  }

  bool accept_punct(char c) {
    const Token t = peek();
    if (t.kind == Token::Punct && t.text[0] == c) {
      next();
      return true;
    }
    return false;
  }

 private:
  Token lex() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      break;
    }
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (c == '"') {
      advance();
      std::string body;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        body.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated string", t.line, t.col);
      advance();
      t.kind = Token::String;
      t.text = std::move(body);
      return t;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word.push_back(text_[pos_]);
        advance();
      }
      t.kind = Token::Word;
      t.text = std::move(word);
      return t;
    }
    t.kind = Token::Punct;
    t.text = std::string(1, c);
    advance();
    return t;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_, col_;
  Token peeked_;
  bool has_peeked_ = false;
};

long long parse_nat(const Token& t, long long max_value) {
  if (t.kind != Token::Word || t.text.empty() ||
      !std::all_of(t.text.begin(), t.text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a number, got '" + t.text + "'", t.line, t.col);
  long long v = 0;
  for (char c : t.text) {
    v = v * 10 + (c - '0');
    if (v > max_value) throw ParseError("number too large", t.line, t.col);
  }
  return v;
}

// variable token: "x" (first variable) or "x<digits>"
int variable_index(const std::string& word) {
  if (word.empty() || word[0] != 'x') return -1;
  if (word.size() == 1) return 0;
  int idx = 0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(word[i]))) return -1;
    idx = idx * 10 + (word[i] - '0');
    if (idx > 64) return -1;
  }
  return idx - 1;
}

// Resolves an element token to an id (table semirings) or a literal natural
// (window mode, table == nullptr).
using CoeffResolver = std::function<int(const std::string&, int line, int col)>;

CoeffResolver table_coeffs(const Semiring& a) {
  return [&a](const std::string& name, int line, int col) {
    const int id = a.elem_by_name(name);
    if (id < 0) throw ParseError("unknown element '" + name + "' of " + a.name, line, col);
    return id;
  };
}

CoeffResolver nat_coeffs() {
  return [](const std::string& name, int line, int col) {
    Token t;
    t.kind = Token::Word;
    t.text = name;
    t.line = line;
    t.col = col;
    return static_cast<int>(parse_nat(t, 1000000));
  };
}

class ExprParser {
 public:
  ExprParser(Lexer& lex, const CoeffResolver& coeff, int num_vars, int zero_id, int one_id,
             const Semiring* table)
      : lex_(lex),
        coeff_(coeff),
        num_vars_(num_vars),
        zero_id_(zero_id),
        one_id_(one_id),
        table_(table) {}

  Polynomial expr() {
    Polynomial acc = term();
    while (lex_.accept_punct('+')) acc = add(acc, term());
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.accept_punct('*')) acc = mul(acc, factor());
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lex_.accept_punct('^')) {
      const Token t = lex_.next();
      const int e = static_cast<int>(parse_nat(t, 50));
      Polynomial acc = constant(one_id_);
      for (int i = 0; i < e; ++i) acc = mul(acc, base);
      return acc;
    }
    return base;
  }

  Polynomial atom() {
    if (lex_.accept_punct('(')) {
      Polynomial inner = expr();
      lex_.expect_punct(')');
      return inner;
    }
    const Token t = lex_.expect_word("an element name or variable");
    const int vi = variable_index(t.text);
    if (vi >= 0) {
      if (vi >= num_vars_)
        throw ParseError("variable x" + std::to_string(vi + 1) + " exceeds arity " +
                             std::to_string(num_vars_),
                         t.line, t.col);
      return Polynomial::variable(vi, num_vars_, one_id_);
    }
    return constant(coeff_(t.text, t.line, t.col));
  }

  Polynomial constant(int c) {
    Polynomial p = Polynomial::zero(num_vars_);
    if (c != zero_id_) p.terms[Monomial(num_vars_, 0)] = c;
    return p;
  }

  // window mode has no operation table; natural coefficients add directly
  Polynomial add(const Polynomial& f, const Polynomial& g) {
    if (table_) return poly_add(*table_, f, g);
    Polynomial out = f;
    for (const auto& [m, c] : g.terms) {
      const auto it = out.terms.find(m);
      const long long sum = (it == out.terms.end() ? 0LL : it->second) + c;
      if (sum > 1000000) throw DomainError("window coefficient too large");
      if (sum == 0)
        out.terms.erase(m);
      else
        out.terms[m] = static_cast<int>(sum);
    }
    return out;
  }

  Polynomial mul(const Polynomial& f, const Polynomial& g) {
    if (table_) return poly_mul(*table_, f, g);
    Polynomial out = Polynomial::zero(num_vars_);
    for (const auto& [mf, cf] : f.terms)
      for (const auto& [mg, cg] : g.terms) {
        Monomial m(num_vars_);
        for (int i = 0; i < num_vars_; ++i) m[i] = mf[i] + mg[i];
        const auto it = out.terms.find(m);
        const long long sum =
            (it == out.terms.end() ? 0LL : it->second) + static_cast<long long>(cf) * cg;
        if (sum > 1000000) throw DomainError("window coefficient too large");
        if (sum == 0)
          out.terms.erase(m);
        else
          out.terms[m] = static_cast<int>(sum);
      }
    return out;
  }

  Lexer& lex_;
  const CoeffResolver& coeff_;
  int num_vars_, zero_id_, one_id_;
  const Semiring* table_;
};

Polynomial parse_expr_with(Lexer& lex, const CoeffResolver& coeff, int num_vars, int zero_id,
                           int one_id, const Semiring* table) {
  ExprParser p(lex, coeff, num_vars, zero_id, one_id, table);
  return p.expr();
}

std::vector<PolyPair> parse_pairs_with(Lexer& lex, const CoeffResolver& coeff, int num_vars,
                                       int zero_id, int one_id, const Semiring* table) {
  std::vector<PolyPair> pairs;
  while (true) {
    Polynomial lhs = parse_expr_with(lex, coeff, num_vars, zero_id, one_id, table);
    lex.expect_punct('=');
    Polynomial rhs = parse_expr_with(lex, coeff, num_vars, zero_id, one_id, table);
    pairs.emplace_back(std::move(lhs), std::move(rhs));
    if (!lex.accept_punct(';')) break;
    if (lex.peek().kind == Token::End) break;  // tolerate a trailing ';'
  }
  const Token t = lex.peek();
  if (t.kind != Token::End)
    throw ParseError("unexpected trailing input in system: '" + t.text + "'", t.line, t.col);
  return pairs;
}

void expect_exhausted(Lexer& lex) {
  const Token t = lex.peek();
  if (t.kind != Token::End)
    throw ParseError("unexpected trailing input: '" + t.text + "'", t.line, t.col);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Semiring& a, int num_vars) {
  Lexer lex(text);
  Polynomial p = parse_expr_with(lex, table_coeffs(a), num_vars, a.zero, a.one, &a);
  expect_exhausted(lex);
  return p;
}

std::vector<PolyPair> parse_system(std::string_view text, const Semiring& a, int num_vars) {
  Lexer lex(text);
  return parse_pairs_with(lex, table_coeffs(a), num_vars, a.zero, a.one, &a);
}

Polynomial parse_nat_polynomial(std::string_view text, int num_vars) {
  Lexer lex(text);
  Polynomial p = parse_expr_with(lex, nat_coeffs(), num_vars, 0, 1, nullptr);
  expect_exhausted(lex);
  return p;
}

std::vector<PolyPair> parse_nat_system(std::string_view text, int num_vars) {
  Lexer lex(text);
  return parse_pairs_with(lex, nat_coeffs(), num_vars, 0, 1, nullptr);
}

const ScriptSemiring& WorkbenchScript::semiring(const std::string& name) const {
  for (const auto& s : semirings)
    if (s.name == name) return s;
  throw DomainError("undefined semiring '" + name + "'");
}

const ScriptCongruence& WorkbenchScript::congruence(const std::string& name) const {
  for (const auto& c : congruences)
    if (c.name == name) return c;
  throw DomainError("undefined congruence '" + name + "'");
}

const ScriptRelation& WorkbenchScript::relation(const std::string& name) const {
  for (const auto& r : relations)
    if (r.name == name) return r;
  throw DomainError("undefined relation '" + name + "'");
}

const ScriptSystem& WorkbenchScript::system(const std::string& name) const {
  for (const auto& s : systems)
    if (s.name == name) return s;
  throw DomainError("undefined system '" + name + "'");
}

namespace {

void check_fresh(const WorkbenchScript& ws, const std::string& name, const Token& t) {
  for (const auto& s : ws.semirings)
    if (s.name == name) throw ParseError("name '" + name + "' already declared", t.line, t.col);
  for (const auto& c : ws.congruences)
    if (c.name == name) throw ParseError("name '" + name + "' already declared", t.line, t.col);
  for (const auto& r : ws.relations)
    if (r.name == name) throw ParseError("name '" + name + "' already declared", t.line, t.col);
  for (const auto& s : ws.systems)
    if (s.name == name) throw ParseError("name '" + name + "' already declared", t.line, t.col);
}

const ScriptSemiring& resolve_semiring(const WorkbenchScript& ws, const Token& t) {
  for (const auto& s : ws.semirings)
    if (s.name == t.text) return s;
  throw ParseError("undefined semiring '" + t.text + "'", t.line, t.col);
}

ScriptSemiring parse_semiring_decl(Lexer& lex, const std::string& name) {
  ScriptSemiring out;
  out.name = name;
  Token t = lex.expect_word("'builtin' or 'elements'");
  if (t.text == "builtin") {
    const Token kind = lex.expect_word("a builtin kind");
    if (kind.text == "nat") {
      out.is_nat = true;
    } else if (kind.text == "boolean") {
      out.table = make_boolean();
    } else {
      const Token param = lex.next();
      const int v = static_cast<int>(parse_nat(param, 64));
      try {
        out.table = make_builtin(kind.text, v);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), kind.line, kind.col);
      }
    }
    const Token end = lex.expect_word("'end'");
    if (end.text != "end") throw ParseError("expected 'end'", end.line, end.col);
    return out;
  }
  if (t.text != "elements") throw ParseError("expected 'builtin' or 'elements'", t.line, t.col);

  Semiring s;
  while (lex.peek().kind == Token::Word && lex.peek().text != "zero")
    s.elem_names.push_back(lex.next().text);
  s.n = static_cast<int>(s.elem_names.size());
  if (s.n < 2) throw ParseError("a semiring needs at least two elements", t.line, t.col);
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      if (s.elem_names[i] == s.elem_names[j])
        throw ParseError("duplicate element name '" + s.elem_names[i] + "'", t.line, t.col);

  auto elem = [&s](const Token& tok) {
    const int id = s.elem_by_name(tok.text);
    if (id < 0) throw ParseError("unknown element '" + tok.text + "'", tok.line, tok.col);
    return id;
  };

  Token zw = lex.expect_word("'zero'");
  if (zw.text != "zero") throw ParseError("expected 'zero'", zw.line, zw.col);
  s.zero = elem(lex.expect_word("an element name"));
  Token ow = lex.expect_word("'one'");
  if (ow.text != "one") throw ParseError("expected 'one'", ow.line, ow.col);
  s.one = elem(lex.expect_word("an element name"));

  s.add_tab.assign(static_cast<std::size_t>(s.n) * s.n, -1);
  s.mul_tab.assign(static_cast<std::size_t>(s.n) * s.n, -1);
  while (true) {
    Token op = lex.next();
    if (op.kind != Token::Word) throw ParseError("expected 'add', 'mul' or 'end'", op.line, op.col);
    if (op.text == "end") break;
    if (op.text != "add" && op.text != "mul")
      throw ParseError("expected 'add', 'mul' or 'end'", op.line, op.col);
    const int a = elem(lex.expect_word("an element name"));
    const int b = elem(lex.expect_word("an element name"));
    lex.expect_punct('=');
    const int c = elem(lex.expect_word("an element name"));
    std::vector<int>& tab = op.text == "add" ? s.add_tab : s.mul_tab;
    for (int idx : {a * s.n + b, b * s.n + a}) {
      if (tab[idx] != -1 && tab[idx] != c)
        throw ParseError("conflicting entry for " + op.text, op.line, op.col);
      tab[idx] = c;
    }
  }
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) {
      if (s.add_tab[a * s.n + b] == -1)
        throw ParseError("missing add entry " + s.elem_names[a] + " " + s.elem_names[b], t.line,
                         t.col);
      if (s.mul_tab[a * s.n + b] == -1)
        throw ParseError("missing mul entry " + s.elem_names[a] + " " + s.elem_names[b], t.line,
                         t.col);
    }
  s.name = name;
  out.table = std::move(s);
  return out;
}

std::vector<std::pair<int, int>> parse_pair_literals(Lexer& lex, const Semiring& owner) {
  std::vector<std::pair<int, int>> pairs;
  auto elem = [&owner](const Token& tok) {
    const int id = owner.elem_by_name(tok.text);
    if (id < 0)
      throw ParseError("unknown element '" + tok.text + "' of " + owner.name, tok.line, tok.col);
    return id;
  };
  while (true) {
    const int a = elem(lex.expect_word("an element name"));
    lex.expect_punct('~');
    const int b = elem(lex.expect_word("an element name"));
    pairs.emplace_back(a, b);
    if (!lex.accept_punct(',')) break;
  }
  return pairs;
}

}  // namespace

WorkbenchScript parse_script(std::string_view text) {
  WorkbenchScript ws;
  Lexer lex(text);
  while (true) {
    const Token head = lex.next();
    if (head.kind == Token::End) break;
    if (head.kind != Token::Word)
      throw ParseError("expected a declaration keyword, got '" + head.text + "'", head.line,
                       head.col);

    if (head.text == "semiring") {
      const Token name = lex.expect_word("a semiring name");
      check_fresh(ws, name.text, name);
      ScriptSemiring s = parse_semiring_decl(lex, name.text);
      if (!s.is_nat) {
        const AxiomReport rep = validate_axioms(s.table);
        if (!rep.passed)
          throw ParseError("semiring '" + name.text + "' violates " + rep.violations[0].axiom,
                           name.line, name.col);
      }
      ws.semirings.push_back(std::move(s));
      continue;
    }

    if (head.text == "congruence" || head.text == "relation") {
      const bool is_congruence_decl = head.text == "congruence";
      const Token name = lex.expect_word("a name");
      check_fresh(ws, name.text, name);
      const Token on = lex.expect_word("'on'");
      if (on.text != "on") throw ParseError("expected 'on'", on.line, on.col);
      const ScriptSemiring& owner = resolve_semiring(ws, lex.expect_word("a semiring name"));
      lex.expect_punct('=');

      if (owner.is_nat) {
        if (!is_congruence_decl)
          throw ParseError("relations on the nat pseudo-carrier are not supported", name.line,
                           name.col);
        const Token mod = lex.expect_word("'mod'");
        if (mod.text != "mod")
          throw ParseError("congruences on the nat pseudo-carrier use 'mod p'", mod.line, mod.col);
        ScriptCongruence c;
        c.name = name.text;
        c.owner = owner.name;
        c.is_mod = true;
        c.mod_p = static_cast<std::uint64_t>(parse_nat(lex.next(), 1000000));
        if (c.mod_p < 2) throw ParseError("modulus must be >= 2", mod.line, mod.col);
        ws.congruences.push_back(std::move(c));
        continue;
      }

      const Semiring& table = owner.table;
      if (lex.peek().kind == Token::Punct && lex.peek().text[0] == '{') {
        if (!is_congruence_decl)
          throw ParseError("relation literals use 'pairs'", name.line, name.col);
        std::vector<std::vector<int>> classes;
        while (lex.accept_punct('{')) {
          std::vector<int> cls;
          while (!(lex.peek().kind == Token::Punct && lex.peek().text[0] == '}')) {
            const Token e = lex.expect_word("an element name");
            const int id = table.elem_by_name(e.text);
            if (id < 0) throw ParseError("unknown element '" + e.text + "'", e.line, e.col);
            cls.push_back(id);
          }
          lex.expect_punct('}');
          classes.push_back(std::move(cls));
        }
        ScriptCongruence c;
        c.name = name.text;
        c.owner = owner.name;
        try {
          c.value = Congruence::from_partition(table.n, classes);
        } catch (const DomainError& e) {
          throw ParseError(e.what(), name.line, name.col);
        }
        if (!is_congruence(table, c.value))
          throw ParseError("partition is not compatible with the operations of " + owner.name,
                           name.line, name.col);
        ws.congruences.push_back(std::move(c));
        continue;
      }

      const Token pairs_kw = lex.expect_word("'pairs' or a partition literal");
      if (pairs_kw.text != "pairs")
        throw ParseError("expected 'pairs' or a partition literal", pairs_kw.line, pairs_kw.col);
      const auto pairs = parse_pair_literals(lex, table);
      Relation r(table.n);
      for (const auto& [a, b] : pairs) r.insert(a, b);
      if (is_congruence_decl) {
        ScriptCongruence c;
        c.name = name.text;
        c.owner = owner.name;
        c.value = generated_congruence(table, r);
        c.enlarged = c.value.to_relation() != equivalence_closure(r);
        ws.congruences.push_back(std::move(c));
      } else {
        ws.relations.push_back({name.text, owner.name, std::move(r)});
      }
      continue;
    }

    if (head.text == "system") {
      const Token name = lex.expect_word("a system name");
      check_fresh(ws, name.text, name);
      const Token over = lex.expect_word("'over'");
      if (over.text != "over") throw ParseError("expected 'over'", over.line, over.col);
      const ScriptSemiring& coeff = resolve_semiring(ws, lex.expect_word("a semiring name"));
      const Token in = lex.expect_word("'in'");
      if (in.text != "in") throw ParseError("expected 'in'", in.line, in.col);
      const ScriptSemiring& target = resolve_semiring(ws, lex.expect_word("a semiring name"));
      if (coeff.is_nat != target.is_nat)
        throw ParseError("nat systems must be over and in the nat pseudo-carrier", name.line,
                         name.col);
      const Token vars = lex.expect_word("'vars'");
      if (vars.text != "vars") throw ParseError("expected 'vars'", vars.line, vars.col);
      const int n = static_cast<int>(parse_nat(lex.next(), 8));
      if (n < 1) throw ParseError("systems need at least one variable", vars.line, vars.col);
      lex.expect_punct('=');
      const Token body = lex.next();
      if (body.kind != Token::String)
        throw ParseError("expected a quoted system", body.line, body.col);
      if (body.text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw ParseError("a system of polynomial pair equations must be non-empty", body.line,
                         body.col);

      ScriptSystem sys;
      sys.name = name.text;
      sys.over = coeff.name;
      sys.in = target.name;
      sys.vars = n;
      sys.nat_coeffs = coeff.is_nat;
      Lexer body_lex(body.text, body.line, body.col + 1);
      std::vector<PolyPair> pairs =
          coeff.is_nat
              ? parse_pairs_with(body_lex, nat_coeffs(), n, 0, 1, nullptr)
              : parse_pairs_with(body_lex, table_coeffs(coeff.table), n, coeff.table.zero,
                                 coeff.table.one, &coeff.table);
      sys.system = make_pair_system(n, std::move(pairs));
      ws.systems.push_back(std::move(sys));
      continue;
    }

    throw ParseError("unknown declaration '" + head.text + "'", head.line, head.col);
  }
  return ws;
}

}  // namespace semicong
