#include "cases.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "leibcoh/catalog.hpp"
#include "leibcoh/linalg.hpp"
#include "leibcoh/spectral.hpp"

namespace leibcoh::cli {

namespace {

using Dims = std::vector<std::size_t>;

constexpr const char* kPublished = "published";
constexpr const char* kDerived = "derived";

std::string join(const Dims& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

Dims hl(const Bimodule& m, std::size_t n_max, const Budget& b) {
  return cohomology(m, n_max, Variant::leibniz_bimodule, b).dims;
}

LeftModule f_lambda(const LeibnizAlgebra& l, long lambda) {
  std::vector<Scalar> w(l.dim(), Scalar::zero(l.field()));
  w[l.index_of("h")] = Scalar(l.field(), lambda);
  return weight_module(l, w);
}

Dims fibonacci(std::size_t count, std::size_t offset) {
  Dims f{0, 1};
  while (f.size() < count + offset + 1) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return Dims(f.begin() + static_cast<long>(offset), f.begin() + static_cast<long>(offset + count));
}

struct Builder {
  Report r;
  const Budget& budget;

  void eq(const std::string& name, const Dims& expected, const Dims& actual, const char* prov = kPublished) {
    r.checks.push_back({name, join(expected), join(actual), prov, expected == actual});
  }
  void eq(const std::string& name, std::size_t expected, std::size_t actual, const char* prov = kPublished) {
    r.checks.push_back({name, std::to_string(expected), std::to_string(actual), prov, expected == actual});
  }
  void at_least(const std::string& name, std::size_t bound, std::size_t actual, const char* prov = kPublished) {
    r.checks.push_back({name, ">= " + std::to_string(bound), std::to_string(actual), prov, actual >= bound});
  }
  void holds(const std::string& name, bool ok, const std::string& detail, const char* prov = kPublished) {
    r.checks.push_back({name, "true", ok ? "true" : "false (" + detail + ")", prov, ok});
  }
};

// Symmetric and anti-symmetric tables of F_lambda; a null predicate skips that table.
void weight_tables(Builder& b, const LeibnizAlgebra& l, const std::vector<long>& lambdas, std::size_t n_max,
                   const std::function<std::size_t(long, std::size_t)>& sym,
                   const std::function<std::size_t(long, std::size_t)>& anti) {
  for (long lam : lambdas) {
    Dims es, ea;
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (sym) es.push_back(sym(lam, n));
      if (anti) ea.push_back(anti(lam, n));
    }
    if (sym) b.eq("HL(L,(F_" + std::to_string(lam) + ")_s)", es, hl(symmetrize(f_lambda(l, lam)), n_max, b.budget));
    if (anti)
      b.eq("HL(L,(F_" + std::to_string(lam) + ")_a)", ea, hl(antisymmetrize(f_lambda(l, lam)), n_max, b.budget));
  }
}

void example_a_char0(Builder& b) {
  LeibnizAlgebra a = catalog("a", FieldSpec::rationals());
  b.eq("HL(a,F), n <= 8", Dims(9, 1), hl(trivial_bimodule(a), 8, b.budget));
  b.eq("HL(a,(F_1)_s), n <= 6", Dims{0, 1, 1, 1, 1, 1, 1}, hl(symmetrize(f_lambda(a, 1)), 6, b.budget));
  b.eq("HL(a,(F_3)_s), n <= 6", Dims(7, 0), hl(symmetrize(f_lambda(a, 3)), 6, b.budget));
  weight_tables(b, a, {0, 1, 2, 3}, 6, nullptr, [](long lam, std::size_t n) -> std::size_t {
    return lam == 0 || (lam == 2 && n >= 2) || n == 0;
  });
}

void example_a_char2(Builder& b) {
  LeibnizAlgebra a = catalog("a", FieldSpec::prime(2));
  b.eq("HL(a,(F_0)_s) = f_{n+1}, n <= 10", fibonacci(11, 1), hl(symmetrize(f_lambda(a, 0)), 10, b.budget));
  b.eq("HL(a,(F_1)_s) = f_n, n <= 10", fibonacci(11, 0), hl(symmetrize(f_lambda(a, 1)), 10, b.budget));
  b.eq("HR(a), n <= 3", Dims{2, 1, 0, 0}, cr_complex(a, 3, b.budget).table.dims);
  b.eq("HL(a,(F_0)_a) = f_{n+1}, n <= 10", fibonacci(11, 1), hl(antisymmetrize(f_lambda(a, 0)), 10, b.budget));
}

void example_b(Builder& b) {
  FieldSpec q = FieldSpec::rationals();
  LeibnizAlgebra h = catalog("heisenberg", q);
  b.eq("H(h,F)", Dims{1, 2, 2, 1, 0},
       cohomology(trivial_bimodule(h), 4, Variant::chevalley_eilenberg, b.budget).dims);
  b.eq("H(h,h*)", Dims{2, 5, 4, 1},
       cohomology(symmetrize(dual_module(h)), 3, Variant::chevalley_eilenberg, b.budget).dims);
  b.eq("HR(h)", Dims{3, 3, 1}, cr_complex(h, 2, b.budget).table.dims);
  Dims t = hl(trivial_bimodule(h), 3, b.budget);
  b.eq("HL^2(h,F)", 5, t[2]);
  b.eq("HL^3(h,F)", 10, t[3]);
  BilinearForms forms = invariant_bilinear_forms(h);
  b.eq("invariant symmetric bilinear forms", 3, forms.dim);
  b.eq("Cartan-Koszul rank", 0, forms.cartan_koszul_rank);
  auto ps = pages(filtration_rel(trivial_module(h), 2, b.budget), 3, 2);
  b.eq("rank d_2^{0,1}", 0, ps[2].at(0, 1)->d_rank);
}

void example_c(Builder& b) {
  FieldSpec q = FieldSpec::rationals();
  LeibnizAlgebra n = catalog("N", q);
  QuotientAlgebra lie = canonical_lie(n);
  b.eq("HL(N,F), n <= 8", Dims{1, 1, 1, 2, 4, 8, 16, 32, 64}, hl(trivial_bimodule(n), 8, b.budget));
  Dims rel{1};
  for (std::size_t k = 1; k <= 7; ++k) rel.push_back((std::size_t{1} << (k - 1)) + 1);
  b.eq("HL(N|N_Lie,F), n <= 7", rel,
       relative_epi_complex(lie.projection, trivial_bimodule(lie.algebra), 7, b.budget).table.dims);

  auto ps = pages(filtration_ideal(trivial_bimodule(n), leibniz_kernel(n), 5, b.budget), 4, 5);
  std::size_t worst = 0;
  for (std::size_t r = 2; r < ps.size(); ++r)
    for (const auto& e : ps[r].entries) worst = std::max(worst, e.d_rank);
  b.eq("max rank d_r, r >= 2 (ideal filtration)", 0, worst);

  ComplexMap i = epi_inclusion(lie.projection, trivial_bimodule(lie.algebra), 8, b.budget);
  LesReport les = les_exactness(i, projection_map(i, cokernel(i)), 6);
  Dims target = hl(trivial_bimodule(lie.algebra), 7, b.budget);
  bool onto = les.exact();
  std::string detail;
  for (std::size_t k = 1; k <= 6; ++k)
    if (les.connecting_ranks[k] != target[k + 1]) {
      onto = false;
      detail = "degree " + std::to_string(k);
    }
  b.holds("connecting map surjective, degrees 1..6", onto, detail.empty() ? "not exact" : detail);
}

void example_d(Builder& b) {
  FieldSpec q = FieldSpec::rationals();
  LeibnizAlgebra a = catalog("A", q);
  weight_tables(
      b, a, {0, 1, 2}, 6, [](long lam, std::size_t) -> std::size_t { return lam == 0; },
      [](long lam, std::size_t n) -> std::size_t { return lam == 0 || lam == 1 || n == 0; });
  QuotientAlgebra lie = canonical_lie(a);
  for (long lam : {0L, 1L, 2L})
    b.eq("HL(A|A_Lie,(F_" + std::to_string(lam) + ")_s)", Dims(7, 0),
         relative_epi_complex(lie.projection, symmetrize(f_lambda(lie.algebra, lam)), 6, b.budget).table.dims);
  for (long lam : {0L, 1L, 2L}) {
    FilteredComplex fc = filtration_ideal(antisymmetrize(f_lambda(a, lam)), leibniz_kernel(a), 4, b.budget);
    auto ps = pages(fc, 4, 4);
    PageTable inf = infinity_page(fc, 4);
    bool collapse = true;
    for (std::size_t r = 2; r < ps.size(); ++r)
      for (const auto& e : ps[r].entries) collapse = collapse && e.d_rank == 0;
    for (const auto& e : inf.entries) collapse = collapse && ps[2].dim(e.p, e.q) == e.dim;
    b.holds("ideal filtration of (F_" + std::to_string(lam) + ")_a collapses at E_2", collapse, "nonzero d_r");
  }
}

void example_e(Builder& b, std::uint32_t p) {
  FieldSpec f = FieldSpec::prime(p);
  LeibnizAlgebra g = catalog("sl2", f);
  Dims s = hl(symmetrize(sl2_irreducible(g, p - 2)), 2, b.budget);
  b.eq("HL^1(sl2,L(p-2)_s)", 2, s[1]);
  b.at_least("HL^2(sl2,L(p-2)_s)", 2, s[2]);
  Dims a2 = hl(antisymmetrize(sl2_irreducible(g, 2)), 2, b.budget);
  b.eq("HL^1(sl2,L(2)_a)", 1, a2[1]);
  if (p == 3) b.eq("HL^2(sl2,L(2)_a)", 3, a2[2]);
  if (p == 5) b.eq("HL^2(sl2,L(1)_a)", 2, hl(antisymmetrize(sl2_irreducible(g, 1)), 2, b.budget)[2]);
}

void theorem_adj(Builder& b) {
  LeibnizAlgebra l = catalog("hemi_sl2_L(2)", FieldSpec::rationals());
  LeftModule ad = adjoint_left(l);
  b.eq("HL(L,L_s), n <= 3", Dims{3, 0, 0, 0}, hl(symmetrize(ad), 3, b.budget));
  b.eq("HL(L,L_ad), n <= 3", Dims{3, 2, 0, 0}, hl(adjoint_bimodule(l), 3, b.budget), kDerived);
  b.eq("HL^1(L,L_ad) against dim Hom_L(L, Leib(L))", hom_space(ad, sub_module(ad, leibniz_kernel(l))),
       hl(adjoint_bimodule(l), 1, b.budget)[1], kDerived);
  std::size_t direct = hl(antisymmetrize(ad), 1, b.budget)[1];
  b.eq("HL^1(L,L_a) against dim End_L(L)", hom_space(ad, ad), direct, kDerived);
}

void whitehead_sl2(Builder& b) {
  LeibnizAlgebra g = catalog("sl2", FieldSpec::rationals());
  b.eq("HL(sl2,F), n <= 4", Dims{1, 0, 0, 0, 0}, hl(trivial_bimodule(g), 4, b.budget));
  for (std::size_t n : {2, 4})
    b.eq("HL(sl2,L(" + std::to_string(n) + ")_s), n <= 4", Dims(5, 0), hl(symmetrize(sl2_irreducible(g, n)), 4, b.budget));
}

void borel(Builder& b) {
  for (const char* name : {"a", "borel_sl2"}) {
    LeibnizAlgebra l = catalog(name, FieldSpec::rationals());
    b.eq(std::string("HL(") + name + ",ad_s), n <= 5", Dims(6, 0), hl(symmetrize(adjoint_left(l)), 5, b.budget));
  }
}

void vannilp_p3(Builder& b) {
  LeibnizAlgebra h = catalog("heisenberg", FieldSpec::prime(3));
  LeftModule m = truncated_weyl_module(h);
  // Every nonzero submodule meets ker(x) = F 1, and 1 generates M.
  SparseMatrix one = SparseMatrix::identity(h.field(), 3).select_columns(std::vector<std::size_t>{0});
  bool irreducible = kernel_basis(m.left(0)).dim() == 1 && generated_submodule(m, one).dim() == 3;
  b.holds("truncated Weyl module is irreducible", irreducible, "reducible", kDerived);
  b.eq("HL(h,M_s), n <= 4", Dims(5, 0), hl(symmetrize(m), 4, b.budget), kDerived);
  Dims a = hl(antisymmetrize(m), 4, b.budget);
  b.eq("HL(h,M_a), 1 <= n <= 4", Dims(4, 0), Dims(a.begin() + 1, a.end()), kDerived);
}

void vansupsolv_q(Builder& b) {
  LeibnizAlgebra a = catalog("a", FieldSpec::rationals());
  b.eq("HL(a,M_s), n <= 5", Dims(6, 0), hl(symmetrize(companion_module(a)), 5, b.budget), kDerived);
}

struct Case {
  const char* summary;
  const char* field;
  std::size_t degrees;
  void (*run)(Builder&);
};

const std::map<std::string, Case>& cases() {
  static const std::map<std::string, Case> c = {
      {"exampleA_char0", {"a over Q with one-dimensional coefficients", "Q", 8, example_a_char0}},
      {"exampleA_char2", {"a over F_2: Fibonacci dimensions", "F2", 10, example_a_char2}},
      {"exampleB", {"Heisenberg algebra over Q", "Q", 4, example_b}},
      {"exampleC", {"nilpotent N (ff = e) over Q", "Q", 8, example_c}},
      {"exampleD", {"supersolvable A (he = e) over Q", "Q", 6, example_d}},
      {"exampleE_p3", {"sl2 over F_3", "F3", 2, [](Builder& b) { example_e(b, 3); }}},
      {"exampleE_p5", {"sl2 over F_5", "F5", 2, [](Builder& b) { example_e(b, 5); }}},
      {"theorem_adj", {"sl2 hemi-semidirect L(2): adjoint coefficients", "Q", 3, theorem_adj}},
      {"whitehead_sl2", {"sl2 over Q: vanishing in degrees 1..4", "Q", 4, whitehead_sl2}},
      {"borel", {"Borel subalgebra, adjoint coefficients", "Q", 5, borel}},
      {"vannilp_p3", {"Heisenberg over F_3, truncated Weyl module", "F3", 4, vannilp_p3}},
      {"vansupsolv_Q", {"a over Q, two-dimensional companion module", "Q", 5, vansupsolv_q}},
  };
  return c;
}

}  // namespace

std::vector<CaseInfo> case_list() {
  std::vector<CaseInfo> out;
  for (const auto& [id, c] : cases()) out.push_back({id, c.summary});
  return out;
}

Report run_case(const std::string& id, const Budget& budget) {
  auto it = cases().find(id);
  if (it == cases().end()) throw std::invalid_argument("unknown case id: " + id);
  Builder b{Report{}, budget};
  b.r.command = "reproduce";
  b.r.job = {{"case", id}, {"summary", it->second.summary}};
  b.r.field = it->second.field;
  b.r.degrees = it->second.degrees;
  it->second.run(b);
  return b.r;
}

}  // namespace leibcoh::cli
