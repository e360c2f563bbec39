#include "mualcq/parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "mualcq/errors.hpp"
#include "mualcq/syntax.hpp"

namespace mualcq {

namespace {

enum class Tok { Ident, Number, Dot, LParen, RParen, Star, Semi, Bar, Comma, Inverse, Le, EqEq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"top",     "bot",    "not", "and", "or", "exists", "forall",
                                       "atleast", "atmost", "mu",  "nu",  "free"};
  return k;
}

std::vector<Token> lex(std::string_view text, std::size_t first_line) {
  std::vector<Token> out;
  std::size_t line = first_line;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s, std::size_t c) { out.push_back({k, std::move(s), line, c}); };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start_col = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      push(Tok::Ident, std::string(text.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Number, std::string(text.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "^-" || two == "<=" || two == "==") {
      push(two == "^-" ? Tok::Inverse : two == "<=" ? Tok::Le : Tok::EqEq, std::string(two), start_col);
      i += 2;
      col += 2;
      continue;
    }
    Tok k;
    switch (ch) {
      case '.': k = Tok::Dot; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '*': k = Tok::Star; break;
      case ';': k = Tok::Semi; break;
      case '|': k = Tok::Bar; break;
      case ',': k = Tok::Comma; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    push(k, std::string(1, ch), start_col);
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

ExtConceptPtr make(ExtKind k, std::string name = {}, RoleExprPtr role = nullptr, std::uint32_t n = 0,
                   ExtConceptPtr first = nullptr, ExtConceptPtr second = nullptr) {
  auto c = std::make_shared<ExtConcept>();
  c->kind = k;
  c->name = std::move(name);
  c->role = std::move(role);
  c->number = n;
  c->first = std::move(first);
  c->second = std::move(second);
  return c;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {
    for (const auto& t : toks_)
      if (t.kind == Tok::Ident) taken_.insert(t.text);
  }

  void free_header() {
    if (!is_keyword("free")) return;
    advance();
    for (;;) {
      free_.insert(identifier("variable name"));
      if (peek().kind == Tok::Comma) {
        advance();
        continue;
      }
      expect(Tok::Semi, "';' after free variable list");
      break;
    }
  }

  ExtConceptPtr concept_expr() {
    auto left = and_expr();
    while (is_keyword("or")) {
      advance();
      left = make(ExtKind::Or, {}, nullptr, 0, left, and_expr());
    }
    return left;
  }

  const Token& peek() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " (found end of input)" : " (found '" + t.text + "')"), t.line,
                     t.column);
  }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what);
    advance();
  }

 private:
  void advance() {
    if (pos_ + 1 < toks_.size()) ++pos_;
  }
  bool is_keyword(std::string_view kw) const { return peek().kind == Tok::Ident && peek().text == kw; }
  bool next_is(Tok k) const { return pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == k; }

  std::string identifier(const std::string& what) {
    if (peek().kind != Tok::Ident || keywords().contains(peek().text)) fail("expected " + what);
    std::string s = peek().text;
    advance();
    return s;
  }

  ExtConceptPtr and_expr() {
    auto left = unary();
    while (is_keyword("and")) {
      advance();
      left = make(ExtKind::And, {}, nullptr, 0, left, unary());
    }
    return left;
  }

  ExtConceptPtr unary() {
    if (is_keyword("not")) {
      advance();
      return make(ExtKind::Not, {}, nullptr, 0, unary());
    }
    if (is_keyword("exists") || is_keyword("forall")) {
      ExtKind k = peek().text == "exists" ? ExtKind::Exists : ExtKind::Forall;
      advance();
      auto r = role();
      expect(Tok::Dot, "'.' after role");
      return make(k, {}, r, 0, unary());
    }
    if (is_keyword("atleast") || is_keyword("atmost")) {
      ExtKind k = peek().text == "atleast" ? ExtKind::AtLeast : ExtKind::AtMost;
      advance();
      if (peek().kind != Tok::Number) fail("expected a natural number");
      std::uint32_t n = 0;
      const auto& digits = peek().text;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc{}) fail("number out of range");
      advance();
      auto r = role();
      expect(Tok::Dot, "'.' after role");
      return make(k, {}, r, n, unary());
    }
    if (is_keyword("mu") || is_keyword("nu")) {
      ExtKind k = peek().text == "mu" ? ExtKind::Mu : ExtKind::Nu;
      advance();
      std::string source = identifier("variable name after binder");
      std::string internal = source;
      if (binders_.contains(source) || free_.contains(source)) {
        internal = fresh_name(source, taken_);
      }
      taken_.insert(internal);
      binders_.insert(internal);
      expect(Tok::Dot, "'.' after bound variable");
      scopes_.emplace_back(source, internal);
      auto body = concept_expr();
      scopes_.pop_back();
      return make(k, internal, nullptr, 0, body);
    }
    return atom();
  }

  ExtConceptPtr atom() {
    const auto& t = peek();
    if (t.kind == Tok::LParen) {
      advance();
      auto inner = concept_expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) fail("expected a concept");
    if (t.text == "top") {
      advance();
      return make(ExtKind::Top);
    }
    if (t.text == "bot") {
      advance();
      return make(ExtKind::Bot);
    }
    if (t.text == "wf" && next_is(Tok::LParen)) {
      advance();
      advance();
      auto r = role();
      expect(Tok::RParen, "')' after wf role");
      return make(ExtKind::Wf, {}, r);
    }
    std::string name = identifier("a concept");
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (it->first == name) return make(ExtKind::Var, it->second);
    if (free_.contains(name)) return make(ExtKind::Var, name);
    return make(ExtKind::Atomic, name);
  }

  RoleExprPtr role() {
    auto left = role_chain();
    while (peek().kind == Tok::Bar) {
      advance();
      left = RoleExpr::alt(left, role_chain());
    }
    return left;
  }

  RoleExprPtr role_chain() {
    auto left = role_post();
    while (peek().kind == Tok::Semi) {
      advance();
      left = RoleExpr::chain(left, role_post());
    }
    return left;
  }

  RoleExprPtr role_post() {
    auto r = role_atom();
    for (;;) {
      if (peek().kind == Tok::Star) {
        advance();
        r = RoleExpr::star(r);
      } else if (peek().kind == Tok::Inverse) {
        advance();
        r = RoleExpr::inverse(r);
      } else {
        return r;
      }
    }
  }

  RoleExprPtr role_atom() {
    if (peek().kind == Tok::LParen) {
      advance();
      auto r = role();
      expect(Tok::RParen, "')' after role");
      return r;
    }
    if (is_keyword("id") && next_is(Tok::LParen)) {
      advance();
      advance();
      auto c = concept_expr();
      expect(Tok::RParen, "')' after id test");
      return RoleExpr::id_test(c);
    }
    return RoleExpr::atomic(identifier("a role"));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> taken_;
  std::set<std::string> binders_;
  std::set<std::string> free_;
  std::vector<std::pair<std::string, std::string>> scopes_;
};

// Binding strength of the printed form.
enum Level { kOr = 0, kAnd = 1, kUnary = 2 };

Level level_of(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Or: return kOr;
    case ConceptKind::And: return kAnd;
    default: return kUnary;
  }
}

class Printer {
 public:
  explicit Printer(const Concept& root) : names_(all_names(root)) {}

  // `rightmost`: nothing follows in the enclosing text, so an unparenthesized
  // binder cannot swallow a trailing operand.
  void print(const Concept& c, Level required, bool rightmost) {
    bool parens = level_of(c) < required || (c.is_binder() && !rightmost);
    if (parens) {
      out_ << '(';
      rightmost = true;
    }
    switch (c.kind()) {
      case ConceptKind::Atomic: out_ << c.name(); break;
      case ConceptKind::Var: out_ << var_name(c.name()); break;
      case ConceptKind::Top: out_ << "top"; break;
      case ConceptKind::Bot: out_ << "bot"; break;
      case ConceptKind::Not:
        out_ << "not ";
        print(c.child(), kUnary, rightmost);
        break;
      case ConceptKind::And:
        print(c.lhs(), kAnd, false);
        out_ << " and ";
        print(c.rhs(), kUnary, rightmost);
        break;
      case ConceptKind::Or:
        print(c.lhs(), kOr, false);
        out_ << " or ";
        print(c.rhs(), kAnd, rightmost);
        break;
      case ConceptKind::Exists:
      case ConceptKind::Forall:
        out_ << (c.kind() == ConceptKind::Exists ? "exists " : "forall ") << c.role() << ". ";
        print(c.child(), kUnary, rightmost);
        break;
      case ConceptKind::AtMost:
      case ConceptKind::AtLeast:
        out_ << (c.kind() == ConceptKind::AtMost ? "atmost " : "atleast ") << c.number() << ' ' << c.role() << ". ";
        print(c.child(), kUnary, rightmost);
        break;
      case ConceptKind::Mu:
      case ConceptKind::Nu: {
        // Rename a binder whose variable would read back as an atomic
        // concept of the same name.
        std::string shown = c.name();
        if (atomic_concepts_in(c.body()).contains(shown) || keyword(shown)) {
          shown = fresh_name(keyword(shown) ? "X" : shown, names_);
          names_.insert(shown);
        }
        renames_.emplace_back(c.name(), shown);
        out_ << (c.kind() == ConceptKind::Mu ? "mu " : "nu ") << shown << ". ";
        print(c.body(), kOr, true);
        renames_.pop_back();
        break;
      }
    }
    if (parens) out_ << ')';
  }

  std::string str() const { return out_.str(); }

 private:
  static bool keyword(const std::string& s) { return keywords().contains(s); }

  static std::set<std::string> atomic_concepts_in(const Concept& c) { return atomic_concepts(c); }

  std::string var_name(const std::string& v) const {
    for (auto it = renames_.rbegin(); it != renames_.rend(); ++it)
      if (it->first == v) return it->second;
    return v;
  }

  std::ostringstream out_;
  std::set<std::string> names_;
  std::vector<std::pair<std::string, std::string>> renames_;
};

}  // namespace

ExtConceptPtr parse_extended_concept(std::string_view text) {
  Parser p(lex(text, 1));
  p.free_header();
  auto c = p.concept_expr();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
  return c;
}

Concept parse_concept(std::string_view text) {
  Concept c = desugar_pdl(*parse_extended_concept(text));
  check_well_formed(c);
  return c;
}

TBox parse_tbox(std::string_view text) {
  TBox k;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    auto toks = lex(line, line_no);
    if (toks.size() > 1) {
      std::size_t op = toks.size();
      for (std::size_t i = 0; i < toks.size(); ++i)
        if (toks[i].kind == Tok::Le || toks[i].kind == Tok::EqEq) {
          op = i;
          break;
        }
      if (op == toks.size()) {
        const auto& t = toks.back();
        throw ParseError("expected an assertion 'C <= D' or 'C == D'", t.line, t.column);
      }
      if (op == 0) throw ParseError("missing left-hand side", toks[0].line, toks[0].column);
      bool equivalence = toks[op].kind == Tok::EqEq;
      std::vector<Token> left(toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(op));
      left.push_back({Tok::End, "", toks[op].line, toks[op].column});
      std::vector<Token> right(toks.begin() + static_cast<std::ptrdiff_t>(op) + 1, toks.end());
      auto parse_side = [](std::vector<Token> side) {
        Parser p(std::move(side));
        auto c = p.concept_expr();
        if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
        Concept plain = desugar_pdl(*c);
        check_well_formed(plain);
        return plain;
      };
      Concept lhs = parse_side(std::move(left));
      Concept rhs = parse_side(std::move(right));
      for (const auto* side : {&lhs, &rhs}) {
        auto fv = free_variables(*side);
        if (!fv.empty())
          throw ClosednessError("line " + std::to_string(line_no) + ": free variable " + *fv.begin() +
                                " in assertion");
      }
      if (equivalence)
        k.add_equivalence(lhs, rhs);
      else
        k.add(lhs, rhs);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return k;
}

std::string print_concept(const Concept& c) {
  Printer p(c);
  std::string header;
  auto fv = free_variables(c);
  if (!fv.empty()) {
    header = "free ";
    bool first = true;
    for (const auto& v : fv) {
      header += (first ? "" : ", ") + v;
      first = false;
    }
    header += "; ";
  }
  p.print(c, kOr, true);
  return header + p.str();
}

std::string print_tbox(const TBox& k) {
  std::string out;
  for (const auto& a : k.assertions) out += print_concept(a.lhs) + " <= " + print_concept(a.rhs) + "\n";
  return out;
}

}  // namespace mualcq
