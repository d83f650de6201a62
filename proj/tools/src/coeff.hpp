#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/bimodule.hpp"

namespace leibcoh::cli {

// Coefficient expressions:
//
//   coeff := expr [ "," ("sym" | "s" | "anti" | "a") ]
//   expr  := name [ ":" literal ] | name "(" arg { "," arg } ")"
//
// Left modules:  trivial, trivial(n), F_lambda(l) = F_lambda:l (h acts by l,
//                the rest by 0), weights(w_1, ..., w_d), adjoint_left, dual,
//                L(n) (sl2 only), weyl (heisenberg over F_p), companion (a),
//                hom(X, Y), hom_L(X), tensor(X, Y), left(B)
// Bimodules:     adjoint, symmetrize(X), antisymmetrize(X)
//
// A left module at the top is symmetrized unless ",anti" is given.
struct Expr {
  std::string head;
  std::vector<std::string> literals;
  std::vector<Expr> args;
};

enum class ExprType { left, bimodule };

struct CoeffSpec {
  std::string text;
  Expr expr;
  ExprType type = ExprType::left;
  bool anti = false;
};

// Parses and type-checks; ParseError on failure.
CoeffSpec parse_coeff(std::string_view text);
// ValidationError when the algebra does not support a constructor.
Bimodule build_coeff(const CoeffSpec& spec, const LeibnizAlgebra& l);

}  // namespace leibcoh::cli
