#pragma once

#include <cstddef>
#include <vector>

#include "leibcoh/cochain.hpp"

namespace leibcoh {

// A cochain complex with a finite decreasing filtration in every degree.
// levels[n][p] = F^p C^n for p = 0..levels[n].size()-1; F^p is zero beyond
// the stored levels and everything for p < 0.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  // Throws ValidationError naming (p, n) when a level is not contained in the
  // previous one, F^0 is not everything, or D_n(F^p C^n) is not in F^p C^{n+1}.
  FilteredComplex(CochainComplex complex, std::vector<std::vector<Subspace>> levels);

  const CochainComplex& complex() const noexcept { return complex_; }
  std::size_t top() const noexcept { return complex_.top(); }
  std::size_t length(std::size_t n) const { return levels_.at(n).size(); }
  Subspace level(std::size_t n, long p) const;

 private:
  CochainComplex complex_;
  std::vector<std::vector<Subspace>> levels_;
};

struct PageEntry {
  long p;
  long q;
  std::size_t dim;
  std::size_t d_rank;  // rank of d_r^{p,q}; always 0 on the E_inf table
};

struct PageTable {
  std::size_t r = 0;
  bool infinite = false;
  std::vector<PageEntry> entries;  // ordered by total degree, then p
  // Entry (p, q), or nullptr when it is not tabulated.
  const PageEntry* at(long p, long q) const;
  std::size_t dim(long p, long q) const;
};

// E_0..E_{r_max} for p + q <= n_max.  Needs top() >= n_max + 2.  Each d_r rank
// is recomputed with the complement chosen in reverse order and the page
// recurrence dim E_{r+1} = dim E_r - rank out - rank in is asserted;
// violations throw std::logic_error.
std::vector<PageTable> pages(const FilteredComplex& fc, std::size_t r_max, std::size_t n_max);
// E_inf from F^p ∩ Ker D and F^p ∩ Im D.
PageTable infinity_page(const FilteredComplex& fc, std::size_t n_max);

// C_rel(g, M) in relative degrees 0..n_max+2 filtered by vanishing whenever
// two adjacent arguments among the first p+1 coincide.
FilteredComplex filtration_rel(const LeftModule& m, std::size_t n_max, const Budget& budget = {});

// CL(L|L/I, M) in relative degrees 0..n_max+2 filtered by vanishing whenever
// one of the first p arguments lies in I.  I must be a two-sided ideal in the
// left center acting trivially on M from both sides; each condition is
// reported separately.
FilteredComplex filtration_ideal(const Bimodule& m, const Subspace& ideal, std::size_t n_max,
                                 const Budget& budget = {});

struct E2Entry {
  long p;
  long q;
  std::size_t computed;
  std::size_t formula;
};
struct E2Report {
  std::vector<E2Entry> entries;  // p + q <= n_max
  bool ok = true;
};
// E_2^{p,q} of filtration_rel against dim HR^p(g) * dim HL^q(g, M_s).
E2Report e2_check_rel(const LeftModule& m, std::size_t n_max, const Budget& budget = {});
// E_2^{p,q} of filtration_ideal against dim HL^p(L/I, (I*)_s) * dim HL^q(L, M).
E2Report e2_check_ideal(const Bimodule& m, const Subspace& ideal, std::size_t n_max, const Budget& budget = {});

struct ConvergenceReport {
  std::vector<std::size_t> sums;    // sum over p + q = n of dim E_inf
  std::vector<std::size_t> target;  // dims of the target table
  bool ok = true;
};
ConvergenceReport convergence_check(const FilteredComplex& fc, const CohomologyTable& target, std::size_t n_max);

// The L/I-bimodule induced by M when I acts trivially from both sides.
Bimodule descend_bimodule(const Bimodule& m, const QuotientAlgebra& q);

}  // namespace leibcoh
