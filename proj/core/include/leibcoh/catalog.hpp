#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/bimodule.hpp"

namespace leibcoh {

struct CatalogInfo {
  std::string name;
  std::string parameters;
  std::string basis;
  std::string products;
  std::string notes;
};

// Built-in algebras and modules.
std::vector<CatalogInfo> catalog_list();

// Accepts "abelian(n)", "a", "heisenberg", "N", "A", "sl2", "borel_sl2" and
// "hemi_sl2_L(n)".  Throws std::invalid_argument for unknown names.
LeibnizAlgebra catalog(std::string_view name, FieldSpec field);

// (x, m)(y, n) = (xy, x.n) on g (+) M.  g must be a Lie algebra.  Module basis
// vectors are named by `prefix` followed by their index.
LeibnizAlgebra hemi_semidirect(const LeftModule& m, const std::string& prefix = "v");

// Irreducible sl2-module of highest weight n on v_0..v_n:
// h v_j = (n-2j) v_j, f v_j = v_{j+1}, e v_j = j(n-j+1) v_{j-1}.
// sl2 must be the catalog sl2 (basis e, h, f).  Over F_p requires n < p.
LeftModule sl2_irreducible(const LeibnizAlgebra& sl2, std::size_t n);

// True when every weight vector v_j generates the whole module; for distinct
// weights this certifies irreducibility.
bool weight_vectors_generate(const LeftModule& m);

// Heisenberg algebra acting on F_p[t]/(t^p): x -> d/dt, y -> t, z -> 1.
LeftModule truncated_weyl_module(const LeibnizAlgebra& heisenberg);

// Two-dimensional module of the algebra a over Q: h -> [[0,2],[1,0]], e -> 0.
LeftModule companion_module(const LeibnizAlgebra& a);

}  // namespace leibcoh
