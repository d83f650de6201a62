#include "leibcoh/catalog.hpp"

#include <charconv>
#include <stdexcept>

#include "leibcoh/errors.hpp"
#include "leibcoh/linalg.hpp"

namespace leibcoh {

namespace {

using Products = std::vector<std::tuple<std::string, std::string, std::vector<std::pair<std::string, long>>>>;

LeibnizAlgebra build(FieldSpec field, std::vector<std::string> names, const Products& products) {
  StructureConstants c(field, std::move(names));
  for (const auto& [a, b, terms] : products) c.set_product(a, b, terms);
  return LeibnizAlgebra(std::move(c));
}

LeibnizAlgebra sl2(FieldSpec f) {
  return build(f, {"e", "h", "f"},
               {{"h", "e", {{"e", 2}}},
                {"e", "h", {{"e", -2}}},
                {"h", "f", {{"f", -2}}},
                {"f", "h", {{"f", 2}}},
                {"e", "f", {{"h", 1}}},
                {"f", "e", {{"h", -1}}}});
}

// "name(n)" -> ("name", n); plain names give n = -1.
std::pair<std::string, long> split_param(std::string_view s) {
  auto open = s.find('(');
  if (open == std::string_view::npos) return {std::string(s), -1};
  if (s.back() != ')') throw std::invalid_argument("malformed catalog name: " + std::string(s));
  std::string_view digits = s.substr(open + 1, s.size() - open - 2);
  long n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 0)
    throw std::invalid_argument("malformed catalog parameter: " + std::string(s));
  return {std::string(s.substr(0, open)), n};
}

SparseMatrix from_entries(FieldSpec f, std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, long>>& e) {
  std::vector<SparseMatrix::Triplet> t;
  for (const auto& [r, c, v] : e) t.push_back({r, c, Scalar(f, v)});
  return SparseMatrix::from_triplets(f, n, n, t);
}

}  // namespace

std::vector<CatalogInfo> catalog_list() {
  return {
      {"abelian", "n >= 0", "x1..xn", "all products zero", "abelian Lie algebra"},
      {"a", "", "h, e", "he = e, eh = -e", "non-abelian two-dimensional Lie algebra"},
      {"heisenberg", "", "x, y, z", "xy = z, yx = -z", "three-dimensional Heisenberg algebra"},
      {"N", "", "e, f", "ff = e", "two-dimensional nilpotent non-Lie Leibniz algebra"},
      {"A", "", "h, e", "he = e", "two-dimensional supersolvable non-Lie Leibniz algebra"},
      {"sl2", "", "e, h, f", "he = 2e, hf = -2f, ef = h and negatives", "simple Lie algebra sl2"},
      {"borel_sl2", "", "h, e", "he = 2e, eh = -2e", "Borel subalgebra of sl2"},
      {"hemi_sl2_L", "n >= 0", "e, h, f, v0..vn", "sl2 products and x.v from L(n)",
       "hemi-semidirect product of sl2 with its irreducible module L(n)"},
  };
}

LeibnizAlgebra catalog(std::string_view spec, FieldSpec field) {
  auto [name, n] = split_param(spec);
  auto needs_param = [&, name = name, n = n](bool wanted) {
    if (wanted != (n >= 0)) throw std::invalid_argument("catalog entry " + name + (wanted ? " needs" : " takes no") + " parameter");
  };
  if (name == "abelian") {
    needs_param(true);
    std::vector<std::string> names;
    for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return build(field, names, {});
  }
  if (name == "hemi_sl2_L") {
    needs_param(true);
    return hemi_semidirect(sl2_irreducible(sl2(field), static_cast<std::size_t>(n)));
  }
  needs_param(false);
  if (name == "a") return build(field, {"h", "e"}, {{"h", "e", {{"e", 1}}}, {"e", "h", {{"e", -1}}}});
  if (name == "heisenberg")
    return build(field, {"x", "y", "z"}, {{"x", "y", {{"z", 1}}}, {"y", "x", {{"z", -1}}}});
  if (name == "N") return build(field, {"e", "f"}, {{"f", "f", {{"e", 1}}}});
  if (name == "A") return build(field, {"h", "e"}, {{"h", "e", {{"e", 1}}}});
  if (name == "sl2") return sl2(field);
  if (name == "borel_sl2") return build(field, {"h", "e"}, {{"h", "e", {{"e", 2}}}, {"e", "h", {{"e", -2}}}});
  throw std::invalid_argument("unknown catalog entry: " + std::string(spec));
}

LeibnizAlgebra hemi_semidirect(const LeftModule& m, const std::string& prefix) {
  const LeibnizAlgebra& g = m.algebra();
  if (!is_lie(g)) throw ValidationError("hemi_semidirect: the acting algebra must be a Lie algebra");
  std::size_t d = g.dim();
  std::vector<std::string> names = g.basis_names();
  for (std::size_t b = 0; b < m.dim(); ++b) names.push_back(prefix + std::to_string(b));
  StructureConstants c(g.field(), names);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) c.set_product(i, j, g.product(i, j));
    const SparseMatrix& a = m.left(i);
    for (std::size_t b = 0; b < m.dim(); ++b) {
      std::vector<Term> terms;
      for (std::size_t k = a.col_begin(b); k < a.col_end(b); ++k) terms.push_back({d + a.row_of(k), a.value(k)});
      c.set_product(i, d + b, std::move(terms));
    }
  }
  return LeibnizAlgebra(std::move(c));
}

LeftModule sl2_irreducible(const LeibnizAlgebra& sl2_alg, std::size_t n) {
  FieldSpec f = sl2_alg.field();
  if (sl2_alg.basis_names() != std::vector<std::string>{"e", "h", "f"})
    throw std::invalid_argument("sl2_irreducible: expected the catalog sl2 basis e, h, f");
  if (!f.is_rationals() && n >= f.p())
    throw std::invalid_argument("sl2_irreducible: highest weight must be below the characteristic");
  std::size_t dim = n + 1;
  std::vector<std::tuple<std::size_t, std::size_t, long>> e, h, fm;
  long nn = static_cast<long>(n);
  for (std::size_t j = 0; j <= n; ++j) {
    long jj = static_cast<long>(j);
    h.push_back({j, j, nn - 2 * jj});
    if (j < n) fm.push_back({j + 1, j, 1});
    if (j > 0) e.push_back({j - 1, j, jj * (nn - jj + 1)});
  }
  return LeftModule(sl2_alg, dim, {from_entries(f, dim, e), from_entries(f, dim, h), from_entries(f, dim, fm)});
}

bool weight_vectors_generate(const LeftModule& m) {
  SparseMatrix id = SparseMatrix::identity(m.field(), m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    std::vector<std::size_t> col{j};
    if (generated_submodule(m, id.select_columns(col)).dim() != m.dim()) return false;
  }
  return true;
}

LeftModule truncated_weyl_module(const LeibnizAlgebra& heis) {
  FieldSpec f = heis.field();
  if (f.is_rationals()) throw std::invalid_argument("truncated_weyl_module: needs a prime field");
  if (heis.basis_names() != std::vector<std::string>{"x", "y", "z"})
    throw std::invalid_argument("truncated_weyl_module: expected the catalog Heisenberg basis x, y, z");
  std::size_t p = f.p();
  std::vector<std::tuple<std::size_t, std::size_t, long>> dx, ty, one;
  for (std::size_t k = 0; k < p; ++k) {
    if (k > 0) dx.push_back({k - 1, k, static_cast<long>(k)});
    if (k + 1 < p) ty.push_back({k + 1, k, 1});
    one.push_back({k, k, 1});
  }
  return LeftModule(heis, p, {from_entries(f, p, dx), from_entries(f, p, ty), from_entries(f, p, one)});
}

LeftModule companion_module(const LeibnizAlgebra& a) {
  if (a.basis_names() != std::vector<std::string>{"h", "e"})
    throw std::invalid_argument("companion_module: expected the catalog basis h, e");
  FieldSpec f = a.field();
  return LeftModule(a, 2, {from_entries(f, 2, {{0, 1, 2}, {1, 0, 1}}), SparseMatrix(f, 2, 2)});
}

}  // namespace leibcoh
