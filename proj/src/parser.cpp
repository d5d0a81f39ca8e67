#include "fibrecheck/parser.hpp"

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace fibrecheck {

ParseError::ParseError(int line, int column, const std::string& message,
                       std::vector<std::string> expected)
    : Error([&] {
        std::ostringstream out;
        out << "line " << line << ", column " << column << ": " << message;
        if (!expected.empty()) {
          out << " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
            out << (i == 0 ? "" : " or ") << expected[i];
          }
          out << ")";
        }
        return out.str();
      }()),
      line_(line),
      column_(column),
      message_(message),
      expected_(std::move(expected)) {}

namespace {

constexpr std::size_t kMaxTerms = 20000;
constexpr unsigned long kMaxExponent = 1000;
constexpr int kMaxNesting = 200;

enum class Tok { Ident, Int, Symbol, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (c == '\n') {
      out.push_back({Tok::Newline, "\\n", line, col});
      advance();
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance();
      continue;
    }
    int start_line = line, start_col = col;
    if (std::isalpha(c)) {
      std::string s;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        s += text[i];
        advance();
      }
      // Copy suffix as in x[2], used by the rings of fibred powers.
      if (i < text.size() && text[i] == '[') {
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i + 1 && j < text.size() && text[j] == ']') {
          while (i <= j) {
            s += text[i];
            advance();
          }
        }
      }
      out.push_back({Tok::Ident, s, start_line, start_col});
    } else if (std::isdigit(c)) {
      std::string s;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        s += text[i];
        advance();
      }
      out.push_back({Tok::Int, s, start_line, start_col});
    } else if (std::string_view(":,;()+-*^/").find(static_cast<char>(c)) !=
               std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, static_cast<char>(c)), start_line, start_col});
      advance();
    } else {
      std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c))
                                          : "byte " + std::to_string(static_cast<int>(c));
      throw ParseError(start_line, start_col, "unexpected character " + shown);
    }
  }
  out.push_back({Tok::End, "end of input", line, col});
  return out;
}

// Polynomial keyed by variable name, used until the layout is final.
using NamedMonomial = std::map<std::string, unsigned long>;
using NamedPoly = std::map<NamedMonomial, mpq_class>;

void add_into(NamedPoly& acc, const NamedMonomial& m, const mpq_class& c) {
  auto& slot = acc[m];
  slot += c;
  if (slot == 0) acc.erase(m);
}

NamedPoly add(const NamedPoly& a, const NamedPoly& b, int sign) {
  NamedPoly out = a;
  for (const auto& [m, c] : b) add_into(out, m, sign > 0 ? c : mpq_class(-c));
  return out;
}

struct Located {
  NamedPoly poly;
  int line;
  int column;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Polynomial parse_single(const RingPtr& ring) {
    for (const auto& name : ring->layout->names()) declared_.insert(name);
    while (peek().kind == Tok::Newline) ++pos_;
    Located e = located_expr();
    while (peek().kind == Tok::Newline) ++pos_;
    if (peek().kind != Tok::End) fail(peek(), "unexpected " + describe(peek()), {"end of input"});
    return materialize(e, ring);
  }

  Problem parse() {
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::Newline) {
        ++pos_;
        continue;
      }
      statement();
    }
    return build();
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& msg,
                         std::vector<std::string> expected = {}) {
    throw ParseError(at.line, at.column, msg, std::move(expected));
  }

  bool is_symbol(const char* s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }

  void expect_symbol(const char* s) {
    if (!is_symbol(s)) fail(peek(), "unexpected " + describe(peek()), {std::string("'") + s + "'"});
    ++pos_;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::Newline:
        return "end of line";
      case Tok::End:
        return "end of input";
      default:
        return "'" + t.text + "'";
    }
  }

  void end_of_statement() {
    if (peek().kind == Tok::Newline) {
      ++pos_;
    } else if (peek().kind != Tok::End) {
      fail(peek(), "unexpected " + describe(peek()), {"end of line"});
    }
  }

  void skip_continuation() {
    while (peek().kind == Tok::Newline) ++pos_;
  }

  void statement() {
    const Token& kw = take();
    if (kw.kind != Tok::Ident) {
      fail(kw, "unexpected " + describe(kw),
           {"field", "base", "vars", "ideal", "module", "check", "power"});
    }
    if (kw.text == "field") {
      field_statement(kw);
    } else if (kw.text == "base") {
      declare(kw, base_, base_seen_);
    } else if (kw.text == "vars") {
      declare(kw, fibre_, vars_seen_);
    } else if (kw.text == "ideal") {
      expect_symbol(":");
      do {
        skip_continuation();
        ideal_.push_back(located_expr());
      } while (consume_comma());
    } else if (kw.text == "module") {
      module_statement(kw);
    } else if (kw.text == "check") {
      const Token& what = take();
      if (what.kind == Tok::Ident && what.text == "open") {
        open_ = true;
      } else if (what.kind == Tok::Ident && what.text == "flat") {
        flat_ = true;
      } else if (what.kind == Tok::Ident && what.text == "both") {
        open_ = flat_ = true;
      } else {
        fail(what, "unexpected " + describe(what), {"open", "flat", "both"});
      }
    } else if (kw.text == "power") {
      const Token& k = take();
      if (k.kind != Tok::Int) fail(k, "unexpected " + describe(k), {"integer"});
      mpz_class value(k.text);
      if (value < 1 || value > 64) fail(k, "power must be between 1 and 64");
      power_ = static_cast<int>(value.get_si());
    } else {
      fail(kw, "unknown statement '" + kw.text + "'",
           {"field", "base", "vars", "ideal", "module", "check", "power"});
    }
    end_of_statement();
  }

  bool consume_comma() {
    if (!is_symbol(",")) return false;
    ++pos_;
    return true;
  }

  void field_statement(const Token& kw) {
    if (field_seen_) fail(kw, "field declared twice");
    field_seen_ = true;
    const Token& name = take();
    if (name.kind == Tok::Ident && name.text == "Q") {
      field_ = Field::rationals();
      return;
    }
    if (name.kind == Tok::Ident && name.text == "F") {
      const Token& p = take();
      if (p.kind != Tok::Int) fail(p, "unexpected " + describe(p), {"prime modulus"});
      mpz_class modulus(p.text);
      if (mpz_probab_prime_p(modulus.get_mpz_t(), 30) == 0) {
        fail(p, "non-prime modulus " + p.text);
      }
      if (!modulus.fits_ulong_p()) {
        throw UnsupportedInput("line " + std::to_string(p.line) + ", column " +
                               std::to_string(p.column) + ": prime modulus " + p.text +
                               " exceeds 2^31");
      }
      try {
        field_ = Field::prime(modulus.get_ui());
      } catch (const UnsupportedInput& e) {
        throw UnsupportedInput("line " + std::to_string(p.line) + ", column " +
                               std::to_string(p.column) + ": " + e.what());
      }
      return;
    }
    fail(name, "unexpected " + describe(name), {"Q", "F"});
  }

  void declare(const Token& kw, std::vector<std::string>& into, bool& seen) {
    if (seen) fail(kw, "'" + kw.text + "' declared twice");
    seen = true;
    while (peek().kind == Tok::Ident) {
      const Token& name = take();
      if (declared_.count(name.text) != 0) fail(name, "duplicate variable " + name.text);
      declared_.insert(name.text);
      into.push_back(name.text);
    }
    if (kw.text == "base" && into.empty()) fail(peek(), "no base variables", {"identifier"});
  }

  void module_statement(const Token& kw) {
    if (module_rank_) fail(kw, "module declared twice");
    const Token& rank = take();
    if (rank.kind != Tok::Int) fail(rank, "unexpected " + describe(rank), {"module rank"});
    mpz_class r(rank.text);
    if (r < 1 || r > 16) fail(rank, "module rank must be between 1 and 16");
    module_rank_ = static_cast<std::size_t>(r.get_ui());
    expect_symbol(":");
    if (peek().kind == Tok::Newline || peek().kind == Tok::End) return;
    do {
      skip_continuation();
      const Token& open = peek();
      expect_symbol("(");
      std::vector<Located> comps;
      comps.push_back(located_expr());
      while (is_symbol(";")) {
        ++pos_;
        comps.push_back(located_expr());
      }
      expect_symbol(")");
      if (comps.size() != *module_rank_) {
        fail(open, "module vector of length " + std::to_string(comps.size()) +
                       " in a module of rank " + std::to_string(*module_rank_));
      }
      relations_.push_back({std::move(comps), open.line, open.column});
    } while (consume_comma());
  }

  Located located_expr() {
    const Token& start = peek();
    depth_ = 0;
    return {expr(), start.line, start.column};
  }

  void check_size(const NamedPoly& p, const Token& at) {
    if (p.size() > kMaxTerms) {
      throw ResourceLimitError("expression-size", "line " + std::to_string(at.line) +
                                                      ", column " + std::to_string(at.column) +
                                                      ": expression expands past " +
                                                      std::to_string(kMaxTerms) + " terms");
    }
  }

  NamedPoly expr() {
    if (++depth_ > kMaxNesting) fail(peek(), "expression nested too deeply");
    NamedPoly acc;
    int sign = 1;
    if (is_symbol("+") || is_symbol("-")) sign = take().text == "-" ? -1 : 1;
    acc = add(acc, term(), sign);
    while (is_symbol("+") || is_symbol("-")) {
      const Token& op = take();
      acc = add(acc, term(), op.text == "-" ? -1 : 1);
      check_size(acc, op);
    }
    --depth_;
    return acc;
  }

  NamedPoly term() {
    NamedPoly acc = factor();
    while (is_symbol("*")) {
      const Token& op = take();
      acc = multiply(acc, factor(), op);
    }
    return acc;
  }

  NamedPoly multiply(const NamedPoly& a, const NamedPoly& b, const Token& at) {
    if (a.size() * b.size() > kMaxTerms * 8) check_size(NamedPoly(), at), check_size(a, at);
    NamedPoly out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        NamedMonomial m = ma;
        for (const auto& [v, e] : mb) m[v] += e;
        add_into(out, m, ca * cb);
      }
      check_size(out, at);
    }
    return out;
  }

  NamedPoly factor() {
    NamedPoly base = primary();
    if (is_symbol("^")) {
      const Token& op = take();
      const Token& e = take();
      if (e.kind != Tok::Int) fail(e, "unexpected " + describe(e), {"integer exponent"});
      mpz_class value(e.text);
      if (value > kMaxExponent) fail(e, "exponent larger than " + std::to_string(kMaxExponent));
      unsigned long k = value.get_ui();
      NamedPoly result{{NamedMonomial{}, mpq_class(1)}};
      for (unsigned long i = 0; i < k; ++i) result = multiply(result, base, op);
      return result;
    }
    return base;
  }

  NamedPoly primary() {
    const Token& t = take();
    if (t.kind == Tok::Int) {
      mpq_class value{mpz_class(t.text)};
      if (is_symbol("/")) {
        ++pos_;
        const Token& d = take();
        if (d.kind != Tok::Int) fail(d, "unexpected " + describe(d), {"integer denominator"});
        mpz_class den(d.text);
        if (den == 0) fail(d, "zero denominator");
        value = mpq_class(value.get_num(), den);
        value.canonicalize();
      }
      NamedPoly p;
      add_into(p, {}, value);
      return p;
    }
    if (t.kind == Tok::Ident) {
      if (declared_.count(t.text) == 0) fail(t, "undeclared variable " + t.text);
      return NamedPoly{{NamedMonomial{{t.text, 1}}, mpq_class(1)}};
    }
    if (t.kind == Tok::Symbol && t.text == "(") {
      NamedPoly inner = expr();
      expect_symbol(")");
      return inner;
    }
    fail(t, "unexpected " + describe(t), {"number", "variable", "'('"});
  }

  Polynomial materialize(const Located& src, const RingPtr& ring) {
    std::vector<Term> terms;
    for (const auto& [m, c] : src.poly) {
      std::vector<Monomial::Exponent> e(ring->num_vars(), 0);
      for (const auto& [v, k] : m) e[*ring->layout->find(v)] += static_cast<Monomial::Exponent>(k);
      try {
        terms.push_back({ring->field.from_rational(c), Monomial(std::move(e))});
      } catch (const InvalidArgument& err) {
        throw ParseError(src.line, src.column, err.what());
      }
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }

  Problem build() {
    const Token& end = peek();
    if (base_.empty()) throw ParseError(end.line, end.column, "no base variables declared");
    Problem problem;
    problem.field = field_;
    problem.base_vars = base_;
    problem.fibre_vars = fibre_;
    auto ring = problem.ring();
    for (const auto& g : ideal_) {
      auto p = materialize(g, ring);
      if (p.is_zero()) throw ParseError(g.line, g.column, "zero generator in the ideal");
      problem.ideal.push_back(std::move(p));
    }
    if (module_rank_) {
      ModuleSpec spec;
      spec.rank = *module_rank_;
      for (const auto& rel : relations_) {
        std::vector<Polynomial> comps;
        bool all_zero = true;
        for (const auto& c : rel.comps) {
          comps.push_back(materialize(c, ring));
          all_zero &= comps.back().is_zero();
        }
        if (all_zero) throw ParseError(rel.line, rel.column, "zero relation vector");
        spec.relations.push_back(std::move(comps));
      }
      problem.module = std::move(spec);
    }
    if (open_ || flat_) {
      problem.check_open = open_;
      problem.check_flat = flat_;
    }
    problem.max_power = power_;
    return problem;
  }

  struct Relation {
    std::vector<Located> comps;
    int line;
    int column;
  };

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  Field field_ = Field::rationals();
  bool field_seen_ = false;
  bool base_seen_ = false;
  bool vars_seen_ = false;
  std::vector<std::string> base_;
  std::vector<std::string> fibre_;
  std::set<std::string> declared_;
  std::vector<Located> ideal_;
  std::optional<std::size_t> module_rank_;
  std::vector<Relation> relations_;
  bool open_ = false;
  bool flat_ = false;
  std::optional<int> power_;
};

}  // namespace

Problem parse_problem(std::string_view text) { return Parser(text).parse(); }

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return Parser(text).parse_single(ring);
}

std::string render_problem(const Problem& problem) {
  std::ostringstream out;
  out << "field " << problem.field.to_string() << "\n";
  out << "base";
  for (const auto& y : problem.base_vars) out << " " << y;
  out << "\nvars";
  for (const auto& x : problem.fibre_vars) out << " " << x;
  out << "\n";
  if (!problem.ideal.empty()) {
    out << "ideal: ";
    for (std::size_t i = 0; i < problem.ideal.size(); ++i) {
      out << (i == 0 ? "" : ", ") << problem.ideal[i].to_string();
    }
    out << "\n";
  }
  if (problem.module) {
    out << "module " << problem.module->rank << ":";
    const auto& rels = problem.module->relations;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      out << (i == 0 ? " (" : ", (");
      for (std::size_t j = 0; j < rels[i].size(); ++j) {
        out << (j == 0 ? "" : "; ") << rels[i][j].to_string();
      }
      out << ")";
    }
    out << "\n";
  }
  if (problem.check_open && problem.check_flat) {
    out << "check both\n";
  } else if (problem.check_open) {
    out << "check open\n";
  } else if (problem.check_flat) {
    out << "check flat\n";
  }
  if (problem.max_power) out << "power " << *problem.max_power << "\n";
  return out.str();
}

}  // namespace fibrecheck
