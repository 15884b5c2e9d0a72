#include "coxeter/weakorder.hpp"

#include <algorithm>

namespace coxeter {

namespace {

// Sign of column s of the matrix, i.e. of w(alpha_s).
Sign column_sign(const Matrix& m, Vertex s) {
  RootVec col(m.n);
  for (int i = 0; i < m.n; ++i) col[i] = m.at(i, s);
  return sign_of(col);
}

constexpr int descent_guard = 1 << 20;

}  // namespace

LengthedElement length_of(const CoxeterGraph& g, const FormMatrix& form,
                          const GroupElement& w) {
  Matrix cur = w.m;
  std::vector<Vertex> descents;
  while (!is_identity(GroupElement{cur})) {
    Vertex pick = -1;
    for (Vertex s = 0; s < g.rank(); ++s) {
      Sign sg = column_sign(cur, s);
      require(sg == Sign::positive || sg == Sign::negative, fail::numeric,
              "NumericalAmbiguity", "descent sign test is ambiguous");
      if (sg == Sign::negative) {
        pick = s;
        break;
      }
    }
    require(pick >= 0, fail::numeric, "NoDescent",
            "non-identity element with no descent");
    cur = cur * reflection_matrix(form, pick).m;
    descents.push_back(pick);
    require(static_cast<int>(descents.size()) < descent_guard, fail::numeric,
            "NoDescent", "descent iteration failed to terminate");
  }
  // w = s_{t_L} ... s_{t_1} for the descent sequence t_1, ..., t_L.
  std::vector<Vertex> stored(descents.rbegin(), descents.rend());
  int len = static_cast<int>(stored.size());
  return LengthedElement{w, len, TraceWord(std::move(stored))};
}

bool is_reduced(const CoxeterGraph& g, const FormMatrix& form,
                const TraceWord& x) {
  // Track u = (running element)^{-1}; prepending s keeps the word reduced
  // exactly when u(alpha_s) > 0.
  Matrix u = Matrix::identity(g.rank());
  const auto& seq = x.letters();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    Sign sg = column_sign(u, *it);
    require(sg == Sign::positive || sg == Sign::negative, fail::numeric,
            "NumericalAmbiguity", "prefix sign test is ambiguous");
    if (sg == Sign::negative) return false;
    u = u * reflection_matrix(form, *it).m;
  }
  return true;
}

bool leq_L(const CoxeterGraph& g, const FormMatrix& form, const GroupElement& u,
           const GroupElement& v) {
  LengthedElement lu = length_of(g, form, u);
  LengthedElement lv = length_of(g, form, v);
  GroupElement u_inv = element_of_word(form, transpose(lu.witness));
  GroupElement vu_inv{v.m * u_inv.m};
  LengthedElement lw = length_of(g, form, vu_inv);
  return lv.length == lu.length + lw.length;
}

bool in_TR(const GroupElement& w, const RootVec& alpha) {
  require(sign_of(alpha) == Sign::positive, fail::domain, "NotAPositiveRoot",
          "expected a positive root");
  Sign sg = sign_of(w.m.apply(alpha));
  require(sg == Sign::positive || sg == Sign::negative, fail::numeric,
          "NumericalAmbiguity", "reflection sign test is ambiguous");
  return sg == Sign::negative;
}

Classification classify_admissible(const CoxeterSystem& sys, const TraceWord& x) {
  AdmissibleWord adm = admit(sys.graph, x, sys.orientation);
  if (!is_reduced(sys.graph, sys.form, x)) return Classification{false, {}};

  std::vector<PrincipalWord> parts = independent_decomposition(sys.graph, adm);
  std::vector<PreprojectiveRecord> roots;
  roots.reserve(parts.size());
  for (PrincipalWord& p : parts) {
    RootVec root = apply_word(sys.form, transpose(p.word.word),
                              negated(simple_root(sys.rank(), p.apex)));
    require(sign_of(root) == Sign::positive, fail::domain, "FormulaMismatch",
            "principal factor of a reduced word yielded a non-positive root");
    roots.push_back(PreprojectiveRecord{std::move(root), p.size, p.apex,
                                        std::move(p)});
  }
  PsiSet psi{std::move(roots), true, std::move(adm)};
  return Classification{true, std::move(psi)};
}

PsiSet approximate(const CoxeterSystem& sys, const std::vector<RootVec>& theta,
                   int r_max) {
  PsiSet joint = w_psi(sys, theta, r_max);
  Classification c = classify_admissible(sys, joint.w_psi.word);
  require(c.reduced, fail::domain, "FormulaMismatch",
          "least negating word is not reduced");
  return std::move(*c.psi);
}

}  // namespace coxeter
