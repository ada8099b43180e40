#include "exalg/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

namespace exalg {

namespace {

enum class Tok {
  Number,
  Ident,
  Basis,
  Plus,
  Minus,
  Star,
  Wedge,
  LContr,
  RContr,
  Amp,
  LParen,
  RParen,
  Comma,
  End,
};

struct Token {
  Tok kind;
  std::size_t pos = 0;
  double number = 0;
  bool imaginary = false;
  std::string text;
  std::vector<int> indices;
};

class Lexer {
 public:
  Lexer(std::string_view src, int dimension) : src_(src), dim_(dimension) {}

  const Token& peek() {
    if (!has_) {
      tok_ = next();
      has_ = true;
    }
    return tok_;
  }

  Token take() {
    Token t = peek();
    has_ = false;
    return t;
  }

 private:
  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    Token t;
    t.pos = pos_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return lex_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return lex_word();
    // Unicode contraction hooks as aliases for << and >>.
    if (src_.substr(pos_).starts_with("⌋")) {
      pos_ += 3;
      t.kind = Tok::LContr;
      return t;
    }
    if (src_.substr(pos_).starts_with("⌟")) {
      pos_ += 3;
      t.kind = Tok::RContr;
      return t;
    }
    ++pos_;
    switch (c) {
      case '+':
        t.kind = Tok::Plus;
        return t;
      case '-':
        t.kind = Tok::Minus;
        return t;
      case '*':
        t.kind = Tok::Star;
        return t;
      case '^':
        t.kind = Tok::Wedge;
        return t;
      case '&':
        t.kind = Tok::Amp;
        return t;
      case '(':
        t.kind = Tok::LParen;
        return t;
      case ')':
        t.kind = Tok::RParen;
        return t;
      case ',':
        t.kind = Tok::Comma;
        return t;
      case '<':
        if (pos_ < src_.size() && src_[pos_] == '<') {
          ++pos_;
          t.kind = Tok::LContr;
          return t;
        }
        throw ParseError(t.pos, "expected '<<'");
      case '>':
        if (pos_ < src_.size() && src_[pos_] == '>') {
          ++pos_;
          t.kind = Tok::RContr;
          return t;
        }
        throw ParseError(t.pos, "expected '>>'");
      default:
        throw ParseError(t.pos, std::string("unexpected character '") + c + "'");
    }
  }

  Token lex_number() {
    Token t;
    t.pos = pos_;
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
    }
    // Exponent, careful not to eat a basis literal or identifier: accept
    // 'e'/'E' only when followed by (sign and) digits, and not when those
    // digits would themselves be followed by a letter, '{' or '.' (then the
    // 'e' starts a basis literal and there is a missing operator anyway).
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t probe = pos_ + 1;
      if (probe < src_.size() && (src_[probe] == '+' || src_[probe] == '-'))
        ++probe;
      std::size_t digits = probe;
      while (digits < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[digits])))
        ++digits;
      bool exponent = digits > probe;
      if (exponent && digits < src_.size()) {
        char after = src_[digits];
        if (after == '{' || after == '.' ||
            std::isalpha(static_cast<unsigned char>(after)))
          exponent = src_[pos_ + 1] == '+' || src_[pos_ + 1] == '-';
      }
      if (exponent) pos_ = digits;
    }
    double value = 0;
    auto res = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (res.ec != std::errc())
      throw ParseError(start, "invalid number literal");
    t.kind = Tok::Number;
    t.number = value;
    if (pos_ < src_.size() && src_[pos_] == 'i' &&
        (pos_ + 1 >= src_.size() ||
         !(std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])) ||
           src_[pos_ + 1] == '_'))) {
      ++pos_;
      t.imaginary = true;
    }
    return t;
  }

  Token lex_word() {
    Token t;
    t.pos = pos_;
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string word(src_.substr(start, pos_ - start));
    // e{...}: explicit index list.
    if (word == "e" && pos_ < src_.size() && src_[pos_] == '{') {
      ++pos_;
      t.kind = Tok::Basis;
      while (true) {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
          ++pos_;
        std::size_t nstart = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          ++pos_;
        if (pos_ == nstart) throw ParseError(pos_, "expected index in e{...}");
        int ix = 0;
        std::from_chars(src_.data() + nstart, src_.data() + pos_, ix);
        check_index(ix, nstart);
        t.indices.push_back(ix);
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
          ++pos_;
        if (pos_ < src_.size() && src_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < src_.size() && src_[pos_] == '}') {
          ++pos_;
          break;
        }
        throw ParseError(pos_, "expected ',' or '}' in e{...}");
      }
      return t;
    }
    // eDDD: single-digit indices.
    if (word.size() > 1 && word[0] == 'e' &&
        std::all_of(word.begin() + 1, word.end(),
                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      t.kind = Tok::Basis;
      for (std::size_t k = 1; k < word.size(); ++k) {
        int ix = word[k] - '0';
        check_index(ix, start + k);
        t.indices.push_back(ix);
      }
      return t;
    }
    t.kind = Tok::Ident;
    t.text = std::move(word);
    return t;
  }

  void check_index(int ix, std::size_t pos) const {
    if (ix < 1 || ix > dim_)
      throw ParseError(pos, "basis index " + std::to_string(ix) +
                                " out of range for dimension " +
                                std::to_string(dim_));
  }

  std::string_view src_;
  int dim_;
  std::size_t pos_ = 0;
  Token tok_;
  bool has_ = false;
};

// name -> arity
const std::map<std::string, int>& builtin_arities() {
  static const std::map<std::string, int> table = {
      {"lstar", 1},  {"rstar", 1},  {"rev", 1},    {"ginv", 1},
      {"cconj", 1},  {"check", 1},  {"grade", 2},  {"inner", 2},
      {"norm", 1},   {"isp", 1},    {"osp", 1},    {"igrade", 1},
      {"ograde", 1}, {"bgrade", 1}, {"tgrade", 1}, {"simple", 1},
      {"join", 2},   {"meet", 3},   {"proj", 2},   {"regr", 2},
      {"conv", 2},  // plus the leading convention selector
  };
  return table;
}

bool valid_convention(const std::string& name) {
  return name == "I_left" || name == "I_right" || name == "II_left" ||
         name == "II_right" || name == "III_left" || name == "III_right" ||
         name == "hestenes";
}

bool is_product(BinOp op) {
  return op == BinOp::Wedge || op == BinOp::LContr || op == BinOp::RContr ||
         op == BinOp::Regr;
}

class Parser {
 public:
  Parser(std::string_view src, const SessionConfig& cfg)
      : lexer_(src, cfg.dimension) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    const Token& t = lexer_.peek();
    if (t.kind != Tok::End)
      throw ParseError(t.pos, "unexpected trailing input");
    return e;
  }

  bool mixed_chain() const { return mixed_chain_; }

 private:
  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (true) {
      const Token& t = lexer_.peek();
      if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
        BinOp op = t.kind == Tok::Plus ? BinOp::Add : BinOp::Sub;
        lexer_.take();
        lhs = make_binary(op, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    // Distinct product operators chained at one level (no parentheses) are
    // legal but ambiguous to readers; remember the fact so callers can warn.
    int chained_products = 0;
    BinOp first_product = BinOp::Wedge;
    while (true) {
      const Token& t = lexer_.peek();
      BinOp op;
      switch (t.kind) {
        case Tok::Wedge:
          op = BinOp::Wedge;
          break;
        case Tok::LContr:
          op = BinOp::LContr;
          break;
        case Tok::RContr:
          op = BinOp::RContr;
          break;
        case Tok::Amp:
          op = BinOp::Regr;
          break;
        case Tok::Star:
          op = BinOp::ScalarMul;
          break;
        default:
          return lhs;
      }
      if (is_product(op)) {
        if (chained_products == 0) first_product = op;
        else if (op != first_product) mixed_chain_ = true;
        ++chained_products;
      }
      lexer_.take();
      lhs = make_binary(op, lhs, parse_unary());
    }
  }

  ExprPtr parse_unary() {
    const Token& t = lexer_.peek();
    if (t.kind == Tok::Minus) {
      lexer_.take();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Neg;
      e->operand = parse_unary();
      return e;
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    Token t = lexer_.take();
    switch (t.kind) {
      case Tok::Number: {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Number;
        e->number = t.number;
        e->imaginary = t.imaginary;
        return e;
      }
      case Tok::Basis: {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Basis;
        e->basis_indices = t.indices;
        return e;
      }
      case Tok::LParen: {
        ExprPtr e = parse_expr();
        expect(Tok::RParen, "expected ')'");
        return e;
      }
      case Tok::Ident:
        return parse_call(std::move(t));
      default:
        throw ParseError(t.pos, "expected a number, basis element, function "
                                "call or parenthesized expression");
    }
  }

  ExprPtr parse_call(Token name) {
    auto arity = builtin_arities().find(name.text);
    if (arity == builtin_arities().end())
      throw ParseError(name.pos, "unknown identifier '" + name.text + "'");
    expect(Tok::LParen, "expected '(' after '" + name.text + "'");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Call;
    e->callee = name.text;
    if (name.text == "conv") {
      Token selector = lexer_.take();
      if (selector.kind != Tok::Ident || !valid_convention(selector.text))
        throw ParseError(selector.pos,
                         "conv() expects a convention selector (I_left, "
                         "I_right, II_left, II_right, III_left, III_right, "
                         "hestenes)");
      e->convention = selector.text;
      expect(Tok::Comma, "expected ',' after the convention selector");
    }
    e->args.push_back(parse_expr());
    while (lexer_.peek().kind == Tok::Comma) {
      lexer_.take();
      e->args.push_back(parse_expr());
    }
    Token close = lexer_.take();
    if (close.kind != Tok::RParen)
      throw ParseError(close.pos, "expected ')' in call to '" + name.text + "'");
    if (static_cast<int>(e->args.size()) != arity->second)
      throw ParseError(close.pos,
                       "'" + name.text + "' expects " +
                           std::to_string(arity->second) + " argument(s), got " +
                           std::to_string(e->args.size()));
    return e;
  }

  void expect(Tok kind, const std::string& msg) {
    Token t = lexer_.take();
    if (t.kind != kind) throw ParseError(t.pos, msg);
  }

  static ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Binary;
    e->op = op;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  Lexer lexer_;
  bool mixed_chain_ = false;
};

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

const char* op_token(BinOp op) {
  switch (op) {
    case BinOp::Add:
      return " + ";
    case BinOp::Sub:
      return " - ";
    case BinOp::Wedge:
      return " ^ ";
    case BinOp::LContr:
      return " << ";
    case BinOp::RContr:
      return " >> ";
    case BinOp::Regr:
      return " & ";
    case BinOp::ScalarMul:
      return " * ";
  }
  return "?";
}

}  // namespace

ExprPtr parse(std::string_view src, const SessionConfig& cfg,
              bool* mixed_chain_warning) {
  Parser parser(src, cfg);
  ExprPtr e = parser.parse_all();
  if (mixed_chain_warning) *mixed_chain_warning = parser.mixed_chain();
  return e;
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return format_number(e.number) + (e.imaginary ? "i" : "");
    case Expr::Kind::Basis: {
      bool single = true;
      for (int ix : e.basis_indices) single = single && ix <= 9;
      std::string out = "e";
      if (single && !e.basis_indices.empty()) {
        for (int ix : e.basis_indices) out += static_cast<char>('0' + ix);
      } else {
        out += "{";
        for (std::size_t k = 0; k < e.basis_indices.size(); ++k) {
          if (k) out += ",";
          out += std::to_string(e.basis_indices[k]);
        }
        out += "}";
      }
      return out;
    }
    case Expr::Kind::Neg:
      return "-" + print_expr(*e.operand);
    case Expr::Kind::Binary:
      return "(" + print_expr(*e.lhs) + op_token(e.op) + print_expr(*e.rhs) +
             ")";
    case Expr::Kind::Call: {
      std::string out = e.callee + "(";
      if (!e.convention.empty()) out += e.convention + ", ";
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        if (k) out += ", ";
        out += print_expr(*e.args[k]);
      }
      return out + ")";
    }
  }
  return "?";
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number:
      return a.number == b.number && a.imaginary == b.imaginary;
    case Expr::Kind::Basis:
      return a.basis_indices == b.basis_indices;
    case Expr::Kind::Neg:
      return structurally_equal(*a.operand, *b.operand);
    case Expr::Kind::Binary:
      return a.op == b.op && structurally_equal(*a.lhs, *b.lhs) &&
             structurally_equal(*a.rhs, *b.rhs);
    case Expr::Kind::Call: {
      if (a.callee != b.callee || a.convention != b.convention ||
          a.args.size() != b.args.size())
        return false;
      for (std::size_t k = 0; k < a.args.size(); ++k)
        if (!structurally_equal(*a.args[k], *b.args[k])) return false;
      return true;
    }
  }
  return false;
}

}  // namespace exalg
