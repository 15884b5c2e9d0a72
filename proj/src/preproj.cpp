#include "coxeter/preproj.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace coxeter {

namespace {

Sign classify_or_raise(const RootVec& v, const char* where) {
  Sign s = sign_of(v);
  require(s == Sign::positive || s == Sign::negative, fail::numeric,
          "NumericalAmbiguity",
          std::string(where) + ": vector sign is ambiguous at tolerance");
  return s;
}

void require_positive_root(const RootVec& alpha) {
  require(sign_of(alpha) == Sign::positive, fail::domain, "NotAPositiveRoot",
          "expected a positive root");
}

}  // namespace

int default_r_max(int n) { return 2 * n * (n + 1); }

bool negates(const CoxeterSystem& sys, const TraceWord& x, const RootVec& alpha) {
  require_positive_root(alpha);
  RootVec image = apply_word(sys.form, x, alpha);
  return classify_or_raise(image, "negates") == Sign::negative;
}

std::optional<int> preprojective_size(const CoxeterSystem& sys,
                                      const RootVec& alpha, int r_max) {
  require_positive_root(alpha);
  RootVec cur = alpha;
  for (int r = 1; r <= r_max; ++r) {
    cur = sys.c.m.apply(cur);
    if (classify_or_raise(cur, "preprojective_size") == Sign::negative) return r;
  }
  return std::nullopt;
}

std::vector<RootVec> projective_roots(const CoxeterSystem& sys) {
  const int n = sys.rank();
  std::vector<RootVec> out(n);
  for (Vertex x = 0; x < n; ++x) {
    PrincipalWord w1 = principal_word(sys.graph, 1, x, sys.orientation);
    RootVec by_word = apply_word(sys.form, transpose(w1.word.word),
                                 negated(simple_root(n, x)));
    // Path-sum formula: the coordinate at y is the total weight of the paths
    // from x to y, zero when y is not above x.
    RootVec by_paths(n, 0.0);
    for (Vertex y = 0; y < n; ++y) {
      if (!poset_leq(sys.graph, x, y, sys.orientation)) continue;
      double total = 0.0;
      for (const Path& p : all_paths(sys.graph, sys.orientation, x, y))
        total += path_weight(sys.graph, sys.form, sys.orientation, p);
      by_paths[y] = total;
    }
    require(approx_equal(by_word, by_paths), fail::domain, "FormulaMismatch",
            "transpose and path-sum formulas disagree for vertex " +
                std::to_string(x + 1));
    out[x] = std::move(by_word);
  }
  std::set<std::vector<long long>> distinct;
  for (const RootVec& v : out) distinct.insert(grid_key(v));
  require(static_cast<int>(distinct.size()) == n, fail::domain,
          "FormulaMismatch", "projective roots are not pairwise distinct");
  return out;
}

std::vector<std::pair<RootVec, RootVec>> minus_c_image(const CoxeterSystem& sys) {
  CoxeterSystem inv = inverse_system(sys);
  std::vector<RootVec> pc = projective_roots(sys);
  std::vector<RootVec> pci = projective_roots(inv);
  std::vector<std::pair<RootVec, RootVec>> out;
  out.reserve(sys.rank());
  for (Vertex s = 0; s < sys.rank(); ++s) {
    RootVec fwd = negated(sys.c.m.apply(pc[s]));
    RootVec bwd = negated(sys.c_inv.m.apply(pci[s]));
    require(approx_equal(fwd, pci[s]), fail::domain, "FormulaMismatch",
            "-c pi_s(c) differs from pi_s(c^-1)");
    require(approx_equal(bwd, pc[s]), fail::domain, "FormulaMismatch",
            "-c^-1 pi_s(c^-1) differs from pi_s(c)");
    out.emplace_back(pc[s], pci[s]);
  }
  return out;
}

PreprojectiveRecord w_alpha(const CoxeterSystem& sys, const RootVec& alpha,
                            int r_max) {
  auto size = preprojective_size(sys, alpha, r_max);
  require(size.has_value(), fail::bound, "NotPreprojectiveWithinBound",
          "root is not negated by the first " + std::to_string(r_max) +
              " Coxeter powers");
  const int r = *size;

  // c^{r-1} alpha must be a projective root; its vertex is the apex.
  RootVec shifted = alpha;
  for (int i = 1; i < r; ++i) shifted = sys.c.m.apply(shifted);
  std::vector<RootVec> projs = projective_roots(sys);
  Vertex apex = -1;
  for (Vertex x = 0; x < sys.rank(); ++x)
    if (approx_equal(shifted, projs[x])) {
      apex = x;
      break;
    }
  require(apex >= 0, fail::domain, "NoProjectiveMatch",
          "c^{r-1} alpha matches no projective root");

  PrincipalWord principal = principal_word(sys.graph, r, apex, sys.orientation);
  RootVec neg_simple = negated(simple_root(sys.rank(), apex));
  RootVec image = apply_word(sys.form, principal.word.word, alpha);
  require(approx_equal(image, neg_simple), fail::domain, "FormulaMismatch",
          "rho(W_{r,x}) alpha is not -alpha_s");
  for (int i = 1; i < r; ++i) {
    PrincipalWord wi = principal_word(sys.graph, i, apex, sys.orientation);
    RootVec v = apply_word(sys.form, transpose(wi.word.word), neg_simple);
    require(classify_or_raise(v, "w_alpha") == Sign::positive, fail::domain,
            "FormulaMismatch", "intermediate transpose image is not positive");
  }
  return PreprojectiveRecord{alpha, r, apex, std::move(principal)};
}

PsiSet w_psi(const CoxeterSystem& sys, const std::vector<RootVec>& theta,
             int r_max, std::optional<int> length_bound) {
  if (theta.empty()) {
    AdmissibleWord one = admit(sys.graph, TraceWord{}, sys.orientation);
    return PsiSet{{}, true, std::move(one)};
  }

  // Deduplicate the input set by coordinates.
  std::vector<RootVec> roots;
  std::set<std::vector<long long>> seen;
  for (const RootVec& a : theta)
    if (seen.insert(grid_key(a)).second) roots.push_back(a);

  std::vector<PreprojectiveRecord> records;
  records.reserve(roots.size());
  for (const RootVec& a : roots) records.push_back(w_alpha(sys, a, r_max));

  AdmissibleWord joint = records.front().principal.word;
  for (size_t i = 1; i < records.size(); ++i)
    joint = join(sys.graph, joint, records[i].principal.word);

  auto negates_all = [&](const TraceWord& x) {
    for (const RootVec& a : roots)
      if (!negates(sys, x, a)) return false;
    return true;
  };

  AdmissibleWord least = joint;
  if (!negates_all(joint.word)) {
    // The least negating word still divides everything that negates, so it
    // sits above the join; scan admissible words by length.
    int max_size = 0;
    for (const auto& rec : records) max_size = std::max(max_size, rec.size);
    int bound = length_bound.value_or(sys.rank() * (max_size + 2));
    auto jm = multiplicity(sys.graph, joint.word);
    std::vector<TraceWord> words =
        enumerate_admissible(sys.graph, sys.orientation, bound);
    std::vector<const TraceWord*> negating;
    for (const TraceWord& w : words) {
      if (w.length() < joint.word.length()) continue;
      auto wm = multiplicity(sys.graph, w);
      bool above = true;
      for (int v = 0; v < sys.rank(); ++v)
        if (wm[v] < jm[v]) {
          above = false;
          break;
        }
      if (above && negates_all(w)) negating.push_back(&w);
    }
    require(!negating.empty(), fail::bound, "SearchBoundExceeded",
            "no negating admissible word within length " + std::to_string(bound));
    const TraceWord* best = negating.front();  // words are length-sorted
    for (const TraceWord* w : negating)
      require(divides(sys.graph, *best, *w), fail::domain, "FormulaMismatch",
              "found a negating word the candidate least element misses");
    least = admit(sys.graph, *best, sys.orientation);
  }

  // The set is independent exactly when its principal words are the minimal
  // join decomposition of the least word.
  bool independent = false;
  std::vector<PrincipalWord> decomp = independent_decomposition(sys.graph, least);
  if (decomp.size() == records.size()) {
    std::multiset<std::pair<int, Vertex>> a, b;
    for (const auto& p : decomp) a.insert({p.size, p.apex});
    for (const auto& rec : records) b.insert({rec.size, rec.apex});
    independent = a == b;
  }
  return PsiSet{std::move(records), independent, std::move(least)};
}

std::map<int, std::vector<PreprojectiveRecord>> enumerate_preprojective(
    const CoxeterSystem& sys, int r_max) {
  std::map<int, std::vector<PreprojectiveRecord>> out;
  std::vector<RootVec> projs = projective_roots(sys);
  for (Vertex x = 0; x < sys.rank(); ++x) {
    RootVec neg_simple = negated(simple_root(sys.rank(), x));
    RootVec by_inverse = projs[x];
    for (int r = 1; r <= r_max; ++r) {
      PrincipalWord wr = principal_word(sys.graph, r, x, sys.orientation);
      RootVec root = apply_word(sys.form, transpose(wr.word.word), neg_simple);
      if (r > 1) {
        by_inverse = sys.c_inv.m.apply(by_inverse);  // c^{-r+1} pi_s(c)
        require(approx_equal(root, by_inverse), fail::domain, "FormulaMismatch",
                "transpose and inverse-power descriptions disagree");
        if (classify_or_raise(root, "enumerate_preprojective") !=
            Sign::positive)
          break;  // later sizes are excluded once the chain leaves the cone
      }
      out[r].push_back(PreprojectiveRecord{root, r, x, std::move(wr)});
    }
  }
  for (auto& [r, recs] : out)
    std::sort(recs.begin(), recs.end(),
              [](const PreprojectiveRecord& a, const PreprojectiveRecord& b) {
                return a.apex < b.apex;
              });
  return out;
}

Probe finiteness_probe(const CoxeterSystem& sys, int r_max) {
  for (Vertex s = 0; s < sys.rank(); ++s)
    if (!preprojective_size(sys, simple_root(sys.rank(), s), r_max).has_value())
      return Probe::unknown;
  return Probe::finite;
}

bool order_two_check(const CoxeterSystem& sys) {
  for (Vertex s = 0; s < sys.rank(); ++s) {
    RootVec image = sys.c.m.apply(simple_root(sys.rank(), s));
    if (classify_or_raise(image, "order_two_check") != Sign::negative)
      return false;
  }
  return true;
}

TypeClass finite_type_oracle(const CoxeterMatrix& m) {
  CoxeterGraph g(m);  // validates irreducibility
  const int n = g.rank();
  if (n == 1) return TypeClass::finite;
  for (const Edge& e : g.edges())
    if (e.m.infinite()) return TypeClass::infinite;
  if (static_cast<int>(g.edges().size()) != n - 1)
    return TypeClass::infinite;  // connected with a cycle

  int branch = -1;
  for (Vertex v = 0; v < n; ++v) {
    int d = static_cast<int>(g.neighbors(v).size());
    if (d >= 4) return TypeClass::infinite;
    if (d == 3) {
      if (branch >= 0) return TypeClass::infinite;
      branch = v;
    }
  }

  if (branch >= 0) {
    for (const Edge& e : g.edges())
      if (e.m.value() != 3) return TypeClass::infinite;
    std::vector<int> arms;
    for (Vertex u : g.neighbors(branch)) {
      int len = 1;
      Vertex prev = branch, cur = u;
      while (g.neighbors(cur).size() == 2) {
        Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                  : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return TypeClass::finite;  // D
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4)
      return TypeClass::finite;  // E6, E7, E8
    return TypeClass::infinite;
  }

  // A path; read the labels end to end.
  Vertex end = -1;
  for (Vertex v = 0; v < n && end < 0; ++v)
    if (g.neighbors(v).size() == 1) end = v;
  std::vector<int> labels;
  Vertex prev = -1, cur = end;
  while (true) {
    Vertex next = -1;
    for (Vertex u : g.neighbors(cur))
      if (u != prev) next = u;
    if (next < 0) break;
    labels.push_back(g.label(cur, next).value());
    prev = cur;
    cur = next;
  }
  int bigs = 0, big_pos = -1, big_val = 0;
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] > 3) {
      ++bigs;
      big_pos = static_cast<int>(i);
      big_val = labels[i];
    }
  if (bigs == 0) return TypeClass::finite;  // A
  if (bigs > 1) return TypeClass::infinite;
  bool at_end = big_pos == 0 || big_pos == static_cast<int>(labels.size()) - 1;
  if (big_val == 4) {
    if (at_end) return TypeClass::finite;            // B
    if (n == 4) return TypeClass::finite;            // F4
    return TypeClass::infinite;
  }
  if (big_val == 5) {
    if (n == 2) return TypeClass::finite;            // I2(5)
    if (at_end && (n == 3 || n == 4)) return TypeClass::finite;  // H3, H4
    return TypeClass::infinite;
  }
  return n == 2 ? TypeClass::finite : TypeClass::infinite;  // I2(m >= 6)
}

}  // namespace coxeter
