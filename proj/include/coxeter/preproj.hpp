#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coxeter/system.hpp"

namespace coxeter {

// A preprojective root together with its least negating word W_alpha, which
// is the principal word W_{size, apex}.
struct PreprojectiveRecord {
  RootVec root;
  int size = 0;
  Vertex apex = -1;
  PrincipalWord principal;
};

// A finite set of preprojective roots with the least word negating all of
// them.  independent records whether the members' principal words form the
// minimal join decomposition of w_psi.
struct PsiSet {
  std::vector<PreprojectiveRecord> roots;
  bool independent = true;
  AdmissibleWord w_psi;
};

// rho(x) sends the positive root to a negative one.
// Errors: NumericalAmbiguity.
bool negates(const CoxeterSystem& sys, const TraceWord& x, const RootVec& alpha);

// Least r <= r_max with c^r alpha < 0, all earlier powers positive; nullopt
// when the bound is exhausted (a semi-decision, not a negative answer).
std::optional<int> preprojective_size(const CoxeterSystem& sys,
                                      const RootVec& alpha, int r_max);

// pi_s(c) per vertex, computed independently by the transpose formula and the
// path-sum formula; the two must agree and the map must be injective.
// Errors: FormulaMismatch.
std::vector<RootVec> projective_roots(const CoxeterSystem& sys);

// Pairs (pi_s(c), pi_s(c^{-1})) verifying that -c and -c^{-1} are mutually
// inverse bijections between the projective roots of c and of c^{-1}.
// Errors: FormulaMismatch.
std::vector<std::pair<RootVec, RootVec>> minus_c_image(const CoxeterSystem& sys);

// W_alpha for a preprojective root: size from Coxeter powers, apex from the
// projective-root match of c^{r-1} alpha, then validated against the
// transpose formula.  Errors: NotPreprojectiveWithinBound, NoProjectiveMatch.
PreprojectiveRecord w_alpha(const CoxeterSystem& sys, const RootVec& alpha,
                            int r_max);

// W_Psi: join of the members' W_alpha when that joint word already negates
// everything (always the case for independent sets); otherwise exhaustive
// search by increasing length, verified minimal against every negating word
// up to the bound.  Errors: NotPreprojectiveWithinBound, SearchBoundExceeded.
PsiSet w_psi(const CoxeterSystem& sys, const std::vector<RootVec>& theta,
             int r_max, std::optional<int> length_bound = std::nullopt);

// All preprojective roots of size r for r = 1..r_max, via the transpose
// formula, cross-checked against inverse Coxeter powers of the projectives.
std::map<int, std::vector<PreprojectiveRecord>> enumerate_preprojective(
    const CoxeterSystem& sys, int r_max);

// Finite iff every simple root is preprojective within r_max; otherwise
// unknown (no bound exists in general).
enum class Probe { finite, unknown };
Probe finiteness_probe(const CoxeterSystem& sys, int r_max);

// True iff every simple root is projective (iff the group has order 2).
bool order_two_check(const CoxeterSystem& sys);

// Table-driven recognition of the finite types A, B, D, E6-E8, F4, H3, H4,
// I2(m).  Independent of the probe; used as a test oracle.
enum class TypeClass { finite, infinite };
TypeClass finite_type_oracle(const CoxeterMatrix& m);

// Default probe bound 2n(n+1), covering the Coxeter numbers of the catalog
// finite types.
int default_r_max(int n);

}  // namespace coxeter
