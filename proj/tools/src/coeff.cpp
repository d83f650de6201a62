#include "coeff.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <utility>

#include "leibcoh/catalog.hpp"
#include "leibcoh/errors.hpp"

namespace leibcoh::cli {

namespace {

struct Signature {
  std::vector<ExprType> args;
  std::size_t min_literals = 0;
  std::size_t max_literals = 0;  // SIZE_MAX for any number
  ExprType result = ExprType::left;
};

const std::map<std::string, Signature>& signatures() {
  using T = ExprType;
  static const std::map<std::string, Signature> s = {
      {"trivial", {{}, 0, 1, T::left}},
      {"F_lambda", {{}, 1, 1, T::left}},
      {"weights", {{}, 1, SIZE_MAX, T::left}},
      {"adjoint_left", {{}, 0, 0, T::left}},
      {"dual", {{}, 0, 0, T::left}},
      {"L", {{}, 1, 1, T::left}},
      {"weyl", {{}, 0, 0, T::left}},
      {"companion", {{}, 0, 0, T::left}},
      {"hom", {{T::left, T::left}, 0, 0, T::left}},
      {"hom_L", {{T::left}, 0, 0, T::left}},
      {"tensor", {{T::left, T::left}, 0, 0, T::left}},
      {"left", {{T::bimodule}, 0, 0, T::left}},
      {"adjoint", {{}, 0, 0, T::bimodule}},
      {"symmetrize", {{T::left}, 0, 0, T::bimodule}},
      {"antisymmetrize", {{T::left}, 0, 0, T::bimodule}},
  };
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr expr() {
    Expr e;
    e.head = name();
    skip();
    if (eat(':')) {
      e.literals.push_back(literal());
    } else if (eat('(')) {
      do {
        skip();
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          e.args.push_back(expr());
        else
          e.literals.push_back(literal());
        skip();
      } while (eat(','));
      if (!eat(')')) error("expected ')'");
    }
    return e;
  }

  bool at_end() {
    skip();
    return pos_ == s_.size();
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string name() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (b == pos_) error("expected a name");
    return std::string(s_.substr(b, pos_ - b));
  }
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError("coefficient \"" + std::string(s_) + "\" at " + std::to_string(pos_) + ": " + what);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string literal() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                s_[pos_] == '/' || s_[pos_] == '.'))
      ++pos_;
    if (b == pos_) error("expected a number");
    return std::string(s_.substr(b, pos_ - b));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

ExprType type_of(const Expr& e) {
  auto it = signatures().find(e.head);
  if (it == signatures().end()) throw ParseError("unknown coefficient constructor \"" + e.head + "\"");
  const Signature& sig = it->second;
  if (e.literals.size() < sig.min_literals || e.literals.size() > sig.max_literals)
    throw ParseError(e.head + ": wrong number of numeric parameters");
  if (e.args.size() != sig.args.size()) throw ParseError(e.head + ": expects " + std::to_string(sig.args.size()) + " module arguments");
  for (std::size_t i = 0; i < e.args.size(); ++i)
    if (type_of(e.args[i]) != sig.args[i])
      throw ParseError(e.head + ": argument " + std::to_string(i + 1) + " must be a " +
                       (sig.args[i] == ExprType::left ? "left module" : "bimodule"));
  return sig.result;
}

std::size_t natural(const std::string& lit, const std::string& where) {
  if (lit.empty() || lit.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(where + ": expected a non-negative integer, got \"" + lit + "\"");
  return std::stoul(lit);
}

std::size_t need_basis(const LeibnizAlgebra& l, const std::string& name, const std::string& who) {
  try {
    return l.index_of(name);
  } catch (const std::out_of_range&) {
    throw ValidationError(who + " needs a basis element named " + name);
  }
}

LeftModule build_left(const Expr& e, const LeibnizAlgebra& l);

Bimodule build_bi(const Expr& e, const LeibnizAlgebra& l) {
  if (e.head == "adjoint") return adjoint_bimodule(l);
  if (e.head == "symmetrize") return symmetrize(build_left(e.args[0], l));
  return antisymmetrize(build_left(e.args[0], l));
}

LeftModule build_left(const Expr& e, const LeibnizAlgebra& l) {
  FieldSpec f = l.field();
  const std::string& h = e.head;
  if (h == "trivial") return trivial_module(l, e.literals.empty() ? 1 : natural(e.literals[0], h));
  if (h == "F_lambda") {
    std::vector<Scalar> w(l.dim(), Scalar::zero(f));
    w[need_basis(l, "h", h)] = Scalar::parse(f, e.literals[0]);
    return weight_module(l, w);
  }
  if (h == "weights") {
    if (e.literals.size() != l.dim()) throw ValidationError("weights: needs one weight per basis element");
    std::vector<Scalar> w;
    for (const auto& s : e.literals) w.push_back(Scalar::parse(f, s));
    return weight_module(l, w);
  }
  if (h == "adjoint_left") return adjoint_left(l);
  if (h == "dual") return dual_module(l);
  if (h == "L") {
    for (const char* b : {"e", "h", "f"}) need_basis(l, b, "L(n)");
    if (l.dim() != 3) throw ValidationError("L(n) is defined over sl2 only");
    return sl2_irreducible(l, natural(e.literals[0], h));
  }
  if (h == "weyl") return truncated_weyl_module(l);
  if (h == "companion") return companion_module(l);
  if (h == "hom") return hom_module(build_left(e.args[0], l), build_left(e.args[1], l));
  if (h == "hom_L") return hom_module(l, build_left(e.args[0], l));
  if (h == "tensor") return tensor_modules(build_left(e.args[0], l), build_left(e.args[1], l));
  return build_bi(e.args[0], l).left_module();  // "left"
}

}  // namespace

CoeffSpec parse_coeff(std::string_view text) {
  Parser p(text);
  CoeffSpec spec;
  spec.text = std::string(text);
  spec.expr = p.expr();
  spec.type = type_of(spec.expr);
  if (p.eat(',')) {
    std::string kind = p.name();
    if (kind == "sym" || kind == "s")
      spec.anti = false;
    else if (kind == "anti" || kind == "a")
      spec.anti = true;
    else
      p.error("expected sym or anti");
    if (spec.type == ExprType::bimodule) p.error("a bimodule takes no sym/anti suffix");
  }
  if (!p.at_end()) p.error("trailing input");
  return spec;
}

Bimodule build_coeff(const CoeffSpec& spec, const LeibnizAlgebra& l) {
  if (spec.type == ExprType::bimodule) return build_bi(spec.expr, l);
  LeftModule m = build_left(spec.expr, l);
  return spec.anti ? antisymmetrize(m) : symmetrize(m);
}

}  // namespace leibcoh::cli
