#pragma once

#include <optional>

#include "coxeter/preproj.hpp"
#include "coxeter/system.hpp"

namespace coxeter {

// A group element with its length and a reduced witness word.
struct LengthedElement {
  GroupElement element;
  int length = 0;
  TraceWord witness;
};

// Greedy right-descent: while w is not the identity, multiply by the
// smallest-index generator whose simple root w sends negative.
// Errors: NoDescent (signals numerical failure on a genuine element).
LengthedElement length_of(const CoxeterGraph& g, const FormMatrix& form,
                          const GroupElement& w);

// Letter count equals the group length; tested incrementally letter by
// letter.  Errors: NumericalAmbiguity.
bool is_reduced(const CoxeterGraph& g, const FormMatrix& form, const TraceWord& x);

// Left weak order via length additivity: u <=_L v iff l(v) = l(u) + l(v u^-1).
bool leq_L(const CoxeterGraph& g, const FormMatrix& form, const GroupElement& u,
           const GroupElement& v);

// s_alpha is a right associated reflection of w, i.e. w(alpha) < 0.
bool in_TR(const GroupElement& w, const RootVec& alpha);

// For admissible x: reduced words are exactly the W_Psi of independent sets;
// the decomposition recovers Psi with w_psi = x.
struct Classification {
  bool reduced = false;
  std::optional<PsiSet> psi;
};
Classification classify_admissible(const CoxeterSystem& sys, const TraceWord& x);

// The unique independent set with the same least negating word as theta.
PsiSet approximate(const CoxeterSystem& sys, const std::vector<RootVec>& theta,
                   int r_max);

}  // namespace coxeter
