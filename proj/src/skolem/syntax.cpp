// Copyright 2026 The Skolem Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skolem/syntax.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "skolem/error.hpp"

namespace skolem {
namespace {

enum class Tok {
  kEnd,
  kIdent,
  kNumber,
  kLParen,
  kRParen,
  kComma,
  kEq,
  kStar,
  kCaret,
  kTilde,
  kAnd,
  kOr,
  kArrow,
  kDot,
  kColon,
  kHashBracket,
  kRBracket,
  kGe,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "exists", "forall", "divides", "prime", "rad", "ppart", "true", "false"};
  return kw;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= text_.size()) {
        t.kind = Tok::kEnd;
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          advance();
        }
        t.kind = Tok::kIdent;
        t.text = std::string(text_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          advance();
        }
        t.kind = Tok::kNumber;
        t.text = std::string(text_.substr(start, pos_ - start));
      } else if (match("/\\")) {
        t.kind = Tok::kAnd;
      } else if (match("\\/")) {
        t.kind = Tok::kOr;
      } else if (match("->")) {
        t.kind = Tok::kArrow;
      } else if (match("#[")) {
        t.kind = Tok::kHashBracket;
      } else if (match(">=")) {
        t.kind = Tok::kGe;
      } else {
        switch (c) {
          case '(': t.kind = Tok::kLParen; break;
          case ')': t.kind = Tok::kRParen; break;
          case ',': t.kind = Tok::kComma; break;
          case '=': t.kind = Tok::kEq; break;
          case '*': t.kind = Tok::kStar; break;
          case '^': t.kind = Tok::kCaret; break;
          case '~': t.kind = Tok::kTilde; break;
          case '.': t.kind = Tok::kDot; break;
          case ':': t.kind = Tok::kColon; break;
          case ']': t.kind = Tok::kRBracket; break;
          default:
            throw SyntaxError(std::string("unexpected character '") + c + "'",
                              line_, col_);
        }
        advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  bool match(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    for (std::size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = formula();
    if (peek().kind != Tok::kEnd) fail("unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string what = t.kind == Tok::kEnd ? std::string("end of input")
                                           : "'" + describe(t) + "'";
    throw SyntaxError(msg + " (found " + what + ")", t.line, t.column);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::kIdent:
      case Tok::kNumber: return t.text;
      case Tok::kLParen: return "(";
      case Tok::kRParen: return ")";
      case Tok::kComma: return ",";
      case Tok::kEq: return "=";
      case Tok::kStar: return "*";
      case Tok::kCaret: return "^";
      case Tok::kTilde: return "~";
      case Tok::kAnd: return "/\\";
      case Tok::kOr: return "\\/";
      case Tok::kArrow: return "->";
      case Tok::kDot: return ".";
      case Tok::kColon: return ":";
      case Tok::kHashBracket: return "#[";
      case Tok::kRBracket: return "]";
      case Tok::kGe: return ">=";
      case Tok::kEnd: return "end of input";
    }
    return "?";
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }

  bool is_keyword(const char* kw) const {
    return peek().kind == Tok::kIdent && peek().text == kw;
  }

  std::string variable() {
    if (peek().kind != Tok::kIdent || keywords().count(peek().text)) {
      fail("expected a variable");
    }
    return take().text;
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::kArrow) {
      ++pos_;
      Formula rhs = formula();
      return Formula::implies(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> args{conjunction()};
    while (peek().kind == Tok::kOr) {
      ++pos_;
      args.push_back(conjunction());
    }
    return args.size() == 1 ? args.front() : Formula::disj(std::move(args));
  }

  Formula conjunction() {
    std::vector<Formula> args{unary()};
    while (peek().kind == Tok::kAnd) {
      ++pos_;
      args.push_back(unary());
    }
    return args.size() == 1 ? args.front() : Formula::conj(std::move(args));
  }

  Formula unary() {
    if (peek().kind == Tok::kTilde) {
      ++pos_;
      return Formula::negate(unary());
    }
    if (is_keyword("exists") || is_keyword("forall")) {
      bool ex = peek().text == "exists";
      ++pos_;
      std::string v = variable();
      expect(Tok::kDot, "'.' after quantified variable");
      Formula body = formula();
      return ex ? Formula::exists(v, std::move(body))
                : Formula::forall(v, std::move(body));
    }
    if (peek().kind == Tok::kLParen) {
      ++pos_;
      Formula f = formula();
      expect(Tok::kRParen, "')'");
      return f;
    }
    return atom();
  }

  Formula atom() {
    if (is_keyword("true") || is_keyword("false")) {
      return Formula::truth(take().text == "true");
    }
    if (is_keyword("divides")) {
      ++pos_;
      expect(Tok::kLParen, "'(' after divides");
      Term a = term();
      expect(Tok::kComma, "','");
      Term b = term();
      expect(Tok::kRParen, "')'");
      return Formula::divides(std::move(a), std::move(b));
    }
    if (is_keyword("prime") || is_keyword("rad")) {
      bool pr = peek().text == "prime";
      ++pos_;
      expect(Tok::kLParen, "'('");
      std::string v = variable();
      expect(Tok::kRParen, "')'");
      return pr ? Formula::prime(v) : Formula::rad(v);
    }
    if (is_keyword("ppart")) {
      ++pos_;
      expect(Tok::kLParen, "'(' after ppart");
      std::string v = variable();
      expect(Tok::kComma, "','");
      std::string u = variable();
      expect(Tok::kRParen, "')'");
      expect(Tok::kEq, "'=' after ppart(...)");
      Term t = term();
      return Formula::ppart_eq(v, u, std::move(t));
    }
    if (peek().kind == Tok::kHashBracket) {
      ++pos_;
      std::string v = variable();
      expect(Tok::kColon, "':'");
      std::size_t line = peek().line, col = peek().column;
      Formula body = formula();
      expect(Tok::kRBracket, "']'");
      expect(Tok::kGe, "'>='");
      if (peek().kind != Tok::kNumber) fail("expected a count");
      std::uint64_t n = count(take());
      if (body.has_counting()) {
        throw SyntaxError("counting atoms may not be nested", line, col);
      }
      return Formula::count_ge(n, v, std::move(body));
    }
    Term lhs = term();
    expect(Tok::kEq, "'='");
    Term rhs = term();
    return Formula::eq(std::move(lhs), std::move(rhs));
  }

  std::uint64_t count(const Token& t) {
    BigInt v = parse_bigint(t.text);
    if (v > std::numeric_limits<std::uint64_t>::max()) {
      throw SyntaxError("count too large", t.line, t.column);
    }
    return static_cast<std::uint64_t>(v);
  }

  Term term() {
    Term t = factor();
    while (peek().kind == Tok::kStar) {
      ++pos_;
      t = t * factor();
    }
    return t;
  }

  Term factor() {
    if (peek().kind == Tok::kNumber) {
      if (peek().text != "1") fail("the only numeral allowed in a term is 1");
      ++pos_;
      return Term();
    }
    std::string v = variable();
    if (peek().kind == Tok::kCaret) {
      ++pos_;
      if (peek().kind != Tok::kNumber) fail("expected an exponent");
      const Token& t = take();
      BigInt e = parse_bigint(t.text);
      if (e == 0) {
        throw SyntaxError("exponent 0 is not allowed", t.line, t.column);
      }
      return Term::power(v, e);
    }
    return Term::var(v);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print(const Formula& f, std::ostream& os);

// Operand of a connective: quantifiers need parentheses there because they
// extend to the right.
void print_operand(const Formula& f, std::ostream& os) {
  if (f.kind() == Kind::kExists || f.kind() == Kind::kForall) {
    os << '(';
    print(f, os);
    os << ')';
  } else {
    print(f, os);
  }
}

void print(const Formula& f, std::ostream& os) {
  switch (f.kind()) {
    case Kind::kConst:
      os << (f.value() ? "true" : "false");
      return;
    case Kind::kEq:
      os << f.lhs().to_string() << " = " << f.rhs().to_string();
      return;
    case Kind::kDivides:
      os << "divides(" << f.lhs().to_string() << ", " << f.rhs().to_string()
         << ')';
      return;
    case Kind::kPrime:
      os << "prime(" << f.var() << ')';
      return;
    case Kind::kRad:
      os << "rad(" << f.var() << ')';
      return;
    case Kind::kPPartEq:
      os << "ppart(" << f.var() << ", " << f.prime_var()
         << ") = " << f.rhs().to_string();
      return;
    case Kind::kCountGE:
      os << "#[" << f.var() << ": ";
      print(f.child(), os);
      os << "] >= " << f.count();
      return;
    case Kind::kNot:
      os << '~';
      print_operand(f.child(), os);
      return;
    case Kind::kAnd:
    case Kind::kOr: {
      const char* op = f.kind() == Kind::kAnd ? " /\\ " : " \\/ ";
      os << '(';
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) os << op;
        print_operand(f.children()[i], os);
      }
      os << ')';
      return;
    }
    case Kind::kImplies:
      os << '(';
      print_operand(f.child(0), os);
      os << " -> ";
      print_operand(f.child(1), os);
      os << ')';
      return;
    case Kind::kExists:
    case Kind::kForall:
      os << (f.kind() == Kind::kExists ? "exists " : "forall ") << f.var()
         << ". ";
      print(f.child(), os);
      return;
  }
}

// ------------------------------------------------------------ desugar

class Desugarer {
 public:
  explicit Desugarer(const Formula& f) { names_.reserve_all(f); }

  Formula run(const Formula& f) {
    if (!f.has_sugar()) return f;
    switch (f.kind()) {
      case Kind::kDivides:
        return divides(f.lhs(), f.rhs());
      case Kind::kPrime:
        return prime(f.var());
      case Kind::kRad:
        return rad(f.var());
      case Kind::kPPartEq:
        return ppart(f.var(), f.prime_var(), f.rhs());
      case Kind::kNot:
        return Formula::negate(run(f.child()));
      case Kind::kAnd:
      case Kind::kOr: {
        std::vector<Formula> kids;
        for (const auto& k : f.children()) kids.push_back(run(k));
        return f.kind() == Kind::kAnd ? Formula::conj(std::move(kids))
                                      : Formula::disj(std::move(kids));
      }
      case Kind::kImplies:
        return Formula::implies(run(f.child(0)), run(f.child(1)));
      case Kind::kExists:
        return Formula::exists(f.var(), run(f.child()));
      case Kind::kForall:
        return Formula::forall(f.var(), run(f.child()));
      case Kind::kCountGE:
        return Formula::count_ge(f.count(), f.var(), run(f.child()));
      default:
        return f;
    }
  }

 private:
  // s | t  ==  exists z (t = s*z)
  Formula divides(const Term& s, const Term& t) {
    std::string z = names_.fresh("z");
    return Formula::exists(z, Formula::eq(t, s * Term::var(z)));
  }

  // u != 1 /\ forall a forall b (u | a*b -> u | a \/ u | b)
  Formula prime(const std::string& u) {
    std::string a = names_.fresh("a");
    std::string b = names_.fresh("b");
    Term tu = Term::var(u), ta = Term::var(a), tb = Term::var(b);
    Formula body = Formula::implies(
        divides(tu, ta * tb),
        Formula::disj({divides(tu, ta), divides(tu, tb)}));
    return Formula::conj(
        {Formula::negate(Formula::eq(tu, Term())),
         Formula::forall(a, Formula::forall(b, std::move(body)))});
  }

  // forall u (prime(u) -> v_u = 1 \/ v_u = u)
  Formula rad(const std::string& v) {
    std::string u = names_.fresh("u");
    Formula body = Formula::implies(
        prime(u), Formula::disj({ppart(v, u, Term()), ppart(v, u, Term::var(u))}));
    return Formula::forall(u, std::move(body));
  }

  // pow_u(t) == prime(u) /\ forall y (prime(y) /\ y | t -> y = u)
  Formula pow(const std::string& u, const Term& t) {
    std::string y = names_.fresh("y");
    Formula body = Formula::implies(
        Formula::conj({prime(y), divides(Term::var(y), t)}),
        Formula::eq(Term::var(y), Term::var(u)));
    return Formula::conj({prime(u), Formula::forall(y, std::move(body))});
  }

  // t is the highest power of u dividing v:
  // pow_u(t) /\ t | v /\ forall z (pow_u(z) /\ z | v -> z | t)
  Formula ppart(const std::string& v, const std::string& u, const Term& t) {
    std::string z = names_.fresh("h");
    Term tv = Term::var(v), tz = Term::var(z);
    Formula highest = Formula::forall(
        z, Formula::implies(Formula::conj({pow(u, tz), divides(tz, tv)}),
                            divides(tz, t)));
    return Formula::conj({pow(u, t), divides(t, tv), std::move(highest)});
  }

  NameSupply names_;
};

}  // namespace

Formula parse(std::string_view text) {
  Lexer lex(text);
  Parser p(lex.run());
  return p.run();
}

std::string pretty(const Formula& f) {
  std::ostringstream os;
  print(f, os);
  return os.str();
}

Formula desugar(const Formula& f) {
  Desugarer d(f);
  return d.run(f);
}

std::vector<std::string> split_corpus(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string_view::npos) {
      std::size_t b = line.find_last_not_of(" \t\r");
      line = line.substr(a, b - a + 1);
      // "#[" opens a counting atom, not a comment.
      bool comment = line[0] == '#' && (line.size() < 2 || line[1] != '[');
      if (!comment) out.emplace_back(line);
    }
    pos = nl + 1;
  }
  return out;
}

Formula exists_unique(const std::string& w, const Formula& body) {
  NameSupply names(all_vars(body));
  names.reserve(w);
  const std::string z = names.fresh("z");
  Formula other = rename_free(body, {{w, z}});
  return Formula::exists(
      w, Formula::conj({body, Formula::forall(z, Formula::implies(
                                                     other, Formula::eq(
                                                                Term::var(z),
                                                                Term::var(w))))}));
}

}  // namespace skolem
