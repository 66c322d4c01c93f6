#include "lsurf/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "lsurf/error.hpp"

namespace lsurf {

namespace {

enum class Var { A, AHat, S, T, U, V };
enum class Fn { Sin, Cos, Sinh, Cosh, Exp, Hat };
enum class Op { Add, Sub, Mul, Div, Neg, Pow };

struct NameEntry {
  std::string_view name;
  Var var;
};
constexpr std::array<NameEntry, 6> kVars{{{"a", Var::A},
                                          {"ahat", Var::AHat},
                                          {"s", Var::S},
                                          {"t", Var::T},
                                          {"u", Var::U},
                                          {"v", Var::V}}};

struct FnEntry {
  std::string_view name;
  Fn fn;
};
constexpr std::array<FnEntry, 6> kFns{{{"sin", Fn::Sin},
                                       {"cos", Fn::Cos},
                                       {"sinh", Fn::Sinh},
                                       {"cosh", Fn::Cosh},
                                       {"exp", Fn::Exp},
                                       {"hat", Fn::Hat}}};

}  // namespace

struct Expr::Node {
  enum class Kind { Const, Variable, Call, Unary, Binary } kind = Kind::Const;
  LorentzNum value{};
  Var var = Var::A;
  Fn fn = Fn::Sin;
  Op op = Op::Add;
  int exponent = 1;
  std::shared_ptr<const Node> lhs, rhs;

  LorentzNum eval(const LorentzNum& a) const {
    switch (kind) {
      case Kind::Const:
        return value;
      case Kind::Variable: {
        const SplitRep st = to_split(a);
        switch (var) {
          case Var::A: return a;
          case Var::AHat: return hat(a);
          case Var::S: return LorentzNum{st.plus};
          case Var::T: return LorentzNum{st.minus};
          case Var::U: return LorentzNum{a.u};
          case Var::V: return LorentzNum{a.v};
        }
        break;
      }
      case Kind::Call: {
        const LorentzNum x = lhs->eval(a);
        switch (fn) {
          case Fn::Sin: return apply_split(x, [](double y) { return std::sin(y); });
          case Fn::Cos: return apply_split(x, [](double y) { return std::cos(y); });
          case Fn::Sinh: return apply_split(x, [](double y) { return std::sinh(y); });
          case Fn::Cosh: return apply_split(x, [](double y) { return std::cosh(y); });
          case Fn::Exp: return apply_split(x, [](double y) { return std::exp(y); });
          case Fn::Hat: return hat(x);
        }
        break;
      }
      case Kind::Unary:
        return op == Op::Neg ? -lhs->eval(a) : pow(lhs->eval(a), exponent);
      case Kind::Binary: {
        const LorentzNum x = lhs->eval(a), y = rhs->eval(a);
        switch (op) {
          case Op::Add: return x + y;
          case Op::Sub: return x - y;
          case Op::Mul: return x * y;
          case Op::Div: return x / y;
          default: break;
        }
        break;
      }
    }
    return {};
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "expression '" + std::string(text_) + "', column " + std::to_string(pos_ + 1) +
                                           ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(Op op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Expr::Node::Kind::Binary;
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (accept('+')) n = binary(Op::Add, n, term());
      else if (accept('-')) n = binary(Op::Sub, n, term());
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (accept('*')) n = binary(Op::Mul, n, unary());
      else if (accept('/')) n = binary(Op::Div, n, unary());
      else return n;
    }
  }

  NodePtr unary() {
    if (accept('+')) return unary();
    if (accept('-')) {
      auto n = std::make_shared<Expr::Node>();
      n->kind = Expr::Node::Kind::Unary;
      n->op = Op::Neg;
      n->lhs = unary();
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer literal");
    int e = 0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, e);
    if (res.ec != std::errc{}) fail("exponent out of range");
    auto n = std::make_shared<Expr::Node>();
    n->kind = Expr::Node::Kind::Unary;
    n->op = Op::Pow;
    n->exponent = negative ? -e : e;
    n->lhs = std::move(base);
    return n;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      if (!accept(')')) fail("missing ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    double x = 0.0;
    const auto res = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), x);
    if (res.ec != std::errc{}) fail("malformed number");
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    auto n = std::make_shared<Expr::Node>();
    n->value = LorentzNum{x};
    return n;
  }

  NodePtr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view id = text_.substr(start, pos_ - start);

    for (const auto& f : kFns)
      if (f.name == id) {
        if (!accept('(')) fail("function '" + std::string(id) + "' needs an argument in parentheses");
        auto n = std::make_shared<Expr::Node>();
        n->kind = Expr::Node::Kind::Call;
        n->fn = f.fn;
        n->lhs = expr();
        if (!accept(')')) fail("missing ')'");
        return n;
      }
    auto n = std::make_shared<Expr::Node>();
    if (id == "sigma") {
      n->value = kSigma;
      return n;
    }
    if (id == "pi") {
      n->value = LorentzNum{std::numbers::pi};
      return n;
    }
    for (const auto& v : kVars)
      if (v.name == id) {
        n->kind = Expr::Node::Kind::Variable;
        n->var = v.var;
        return n;
      }
    pos_ = start;
    fail("unknown name '" + std::string(id) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.root_ = Parser(text).parse();
  e.source_ = std::string(text);
  return e;
}

LorentzNum Expr::at(const LorentzNum& a) const { return root_->eval(a); }

LorentzNum Expr::operator()(double s, double t) const { return root_->eval(from_split(s, t)); }

}  // namespace lsurf
