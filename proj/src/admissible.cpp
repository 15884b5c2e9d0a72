#include "coxeter/admissible.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace coxeter {

bool is_admissible(const CoxeterGraph& g, const TraceWord& x, const Orientation& base) {
  Orientation cur = base;
  const auto& seq = x.letters();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (!is_sink(g, *it, cur)) return false;
    cur = reflect_orientation(g, *it, cur);
  }
  return true;
}

Orientation act(const CoxeterGraph& g, const TraceWord& x, const Orientation& base) {
  Orientation cur = base;
  const auto& seq = x.letters();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    cur = reflect_orientation(g, *it, cur);
  return cur;
}

AdmissibleWord admit(const CoxeterGraph& g, TraceWord x, Orientation base) {
  require(is_admissible(g, x, base), fail::domain, "NotAdmissible",
          "word is not admissible over this orientation");
  Orientation final = act(g, x, base);
  return AdmissibleWord{std::move(x), std::move(base), std::move(final)};
}

AdmissibleWord complete_word(const CoxeterGraph& g, const Orientation& base) {
  const int n = g.rank();
  std::vector<char> used(n, 0);
  Orientation cur = base;
  std::vector<Vertex> app;
  app.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!used[v] && is_sink(g, v, cur)) {
        pick = v;
        break;
      }
    require(pick >= 0, fail::domain, "CyclicOrientation",
            "no sink available; orientation is not acyclic");
    used[pick] = 1;
    app.push_back(pick);
    cur = reflect_orientation(g, pick, cur);
  }
  std::vector<Vertex> stored(app.rbegin(), app.rend());
  return AdmissibleWord{TraceWord(std::move(stored)), base, std::move(cur)};
}

bool is_filter(const CoxeterGraph& g, const std::vector<Vertex>& set,
               const Orientation& o) {
  std::vector<char> in(g.rank(), 0);
  for (Vertex v : set) {
    if (v < 0 || v >= g.rank()) return false;
    in[v] = 1;
  }
  for (Vertex v : set)
    for (Vertex u : g.neighbors(v))
      if (arrow_from(g, v, u, o) && !in[u]) return false;
  return true;
}

TraceWord mf_word_of_filter(const CoxeterGraph& g, const std::vector<Vertex>& filter,
                            const Orientation& base) {
  require(is_filter(g, filter, base), fail::domain, "NotAFilter",
          "the set is not a filter of the vertex poset");
  std::vector<char> remaining(g.rank(), 0);
  int left = 0;
  for (Vertex v : filter)
    if (!remaining[v]) {
      remaining[v] = 1;
      ++left;
    }
  Orientation cur = base;
  std::vector<Vertex> app;
  app.reserve(left);
  while (left > 0) {
    Vertex pick = -1;
    for (Vertex v = 0; v < g.rank(); ++v)
      if (remaining[v] && is_sink(g, v, cur)) {
        pick = v;
        break;
      }
    // Unreachable once the filter check passed: the maximal remaining
    // vertices are always sinks of the running orientation.
    require(pick >= 0, fail::domain, "NotAFilter", "peeling stalled");
    remaining[pick] = 0;
    --left;
    app.push_back(pick);
    cur = reflect_orientation(g, pick, cur);
  }
  std::vector<Vertex> stored(app.rbegin(), app.rend());
  return TraceWord(std::move(stored));
}

std::vector<Vertex> hull(const CoxeterGraph& g, const std::vector<Vertex>& filter,
                         const Orientation& o) {
  require(is_filter(g, filter, o), fail::domain, "NotAFilter",
          "the set is not a filter of the vertex poset");
  std::vector<char> in(g.rank(), 0);
  for (Vertex v : filter) in[v] = 1;
  for (Vertex v : filter)
    for (Vertex u : g.neighbors(v)) in[u] = 1;
  // upward closure
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex v = 0; v < g.rank(); ++v) {
      if (!in[v]) continue;
      for (Vertex u : g.neighbors(v))
        if (arrow_from(g, v, u, o) && !in[u]) {
          in[u] = 1;
          grew = true;
        }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.rank(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

PrincipalWord principal_word(const CoxeterGraph& g, int r, Vertex x,
                             const Orientation& base) {
  require(r >= 1, fail::domain, "ConstructionFailed", "size must be >= 1");
  require(x >= 0 && x < g.rank(), fail::domain, "ConstructionFailed",
          "apex out of range");
  // Support chain in the base poset: S_r = <x>, S_j = hull(S_{j+1}).
  std::vector<std::vector<Vertex>> supp(r);
  supp[r - 1] = principal_filter(g, x, base);
  for (int j = r - 2; j >= 0; --j) supp[j] = hull(g, supp[j + 1], base);

  Orientation cur = base;
  std::vector<TraceWord> blocks(r);
  std::vector<Vertex> stored;
  for (int j = 0; j < r; ++j) {  // X_1 first, over the running orientation
    TraceWord xj;
    try {
      xj = mf_word_of_filter(g, supp[j], cur);
    } catch (const error&) {
      raise(fail::domain, "ConstructionFailed",
            "support level " + std::to_string(j + 1) +
                " is not a filter of the running orientation");
    }
    cur = act(g, xj, cur);
    blocks[r - 1 - j] = xj;  // blocks.front() ends up X_r
  }
  for (const auto& b : blocks)
    stored.insert(stored.end(), b.letters().begin(), b.letters().end());

  TraceWord word(std::move(stored));
  require(is_admissible(g, word, base), fail::domain, "ConstructionFailed",
          "principal word failed the admissibility check");
  require(multiplicity(g, word)[x] == r, fail::domain, "ConstructionFailed",
          "apex multiplicity does not equal the size");
  require(word.letters().front() == x, fail::domain, "ConstructionFailed",
          "leftmost letter is not the apex");
  AdmissibleWord adm{word, base, cur};
  return PrincipalWord{std::move(adm), r, x, std::move(blocks)};
}

std::optional<PrincipalMatch> is_principal(const CoxeterGraph& g,
                                           const AdmissibleWord& x) {
  if (x.word.empty()) return PrincipalMatch{0, std::nullopt};
  auto mult = multiplicity(g, x.word);
  for (Vertex y : support(x.word)) {
    int r = mult[y];
    PrincipalWord cand = principal_word(g, r, y, x.base);
    if (trace_equal(g, cand.word.word, x.word))
      return PrincipalMatch{r, y};
  }
  return std::nullopt;
}

namespace {

void require_same_base(const AdmissibleWord& x, const AdmissibleWord& y) {
  require(x.base == y.base, fail::domain, "DifferentBase",
          "admissible words live over different orientations");
}

std::string state_key(const Orientation& o, const std::vector<int>& left) {
  std::string k(o.bits().begin(), o.bits().end());
  k.push_back('|');
  for (int c : left) {
    k += std::to_string(c);
    k.push_back(',');
  }
  return k;
}

bool realize_dfs(const CoxeterGraph& g, const Orientation& cur,
                 std::vector<int>& left, int remaining,
                 std::vector<Vertex>& app, std::set<std::string>& dead) {
  if (remaining == 0) return true;
  std::string key = state_key(cur, left);
  if (dead.contains(key)) return false;
  for (Vertex v = 0; v < g.rank(); ++v) {
    if (left[v] == 0 || !is_sink(g, v, cur)) continue;
    --left[v];
    app.push_back(v);
    if (realize_dfs(g, reflect_orientation(g, v, cur), left, remaining - 1, app,
                    dead))
      return true;
    app.pop_back();
    ++left[v];
  }
  dead.insert(std::move(key));
  return false;
}

}  // namespace

TraceWord realize_vector(const CoxeterGraph& g, const std::vector<int>& mult,
                         const Orientation& base) {
  require(static_cast<int>(mult.size()) == g.rank(), fail::domain,
          "RealizationFailed", "multiplicity vector has wrong size");
  int total = 0;
  for (int c : mult) {
    require(c >= 0, fail::domain, "RealizationFailed", "negative multiplicity");
    total += c;
  }
  std::vector<int> left = mult;
  std::vector<Vertex> app;
  std::set<std::string> dead;
  require(realize_dfs(g, base, left, total, app, dead), fail::domain,
          "RealizationFailed",
          "no admissible word realizes this multiplicity vector");
  std::vector<Vertex> stored(app.rbegin(), app.rend());
  return TraceWord(std::move(stored));
}

bool admissible_leq(const CoxeterGraph& g, const AdmissibleWord& x,
                    const AdmissibleWord& y) {
  require_same_base(x, y);
  auto mx = multiplicity(g, x.word), my = multiplicity(g, y.word);
  for (int v = 0; v < g.rank(); ++v)
    if (mx[v] > my[v]) return false;
  return true;
}

AdmissibleWord meet(const CoxeterGraph& g, const AdmissibleWord& x,
                    const AdmissibleWord& y) {
  require_same_base(x, y);
  auto mx = multiplicity(g, x.word), my = multiplicity(g, y.word);
  std::vector<int> m(g.rank());
  for (int v = 0; v < g.rank(); ++v) m[v] = std::min(mx[v], my[v]);
  return admit(g, realize_vector(g, m, x.base), x.base);
}

AdmissibleWord join(const CoxeterGraph& g, const AdmissibleWord& x,
                    const AdmissibleWord& y) {
  require_same_base(x, y);
  auto mx = multiplicity(g, x.word), my = multiplicity(g, y.word);
  std::vector<int> m(g.rank());
  for (int v = 0; v < g.rank(); ++v) m[v] = std::max(mx[v], my[v]);
  return admit(g, realize_vector(g, m, x.base), x.base);
}

LatticeFactor lattice_factor(const CoxeterGraph& g, const AdmissibleWord& x,
                             const AdmissibleWord& y) {
  AdmissibleWord mw = meet(g, x, y);
  TraceWord v = quotient(g, x.word, mw.word);
  TraceWord w = quotient(g, y.word, mw.word);
  AdmissibleWord jw = join(g, x, y);
  return LatticeFactor{std::move(v), std::move(w), std::move(mw), std::move(jw)};
}

std::vector<PrincipalWord> independent_decomposition(const CoxeterGraph& g,
                                                     const AdmissibleWord& x) {
  if (x.word.empty()) return {};
  auto mx = multiplicity(g, x.word);

  // For each vertex, the largest principal word with that apex dividing x.
  std::vector<PrincipalWord> cands;
  for (Vertex y : support(x.word)) {
    for (int r = mx[y]; r >= 1; --r) {
      PrincipalWord p = principal_word(g, r, y, x.base);
      auto mp = multiplicity(g, p.word.word);
      bool below = true;
      for (int v = 0; v < g.rank(); ++v)
        if (mp[v] > mx[v]) {
          below = false;
          break;
        }
      if (below) {
        cands.push_back(std::move(p));
        break;
      }
    }
  }

  // Keep the divisibility-maximal candidates.
  std::vector<PrincipalWord> maximal;
  for (size_t i = 0; i < cands.size(); ++i) {
    bool dominated = false;
    auto mi = multiplicity(g, cands[i].word.word);
    for (size_t j = 0; j < cands.size() && !dominated; ++j) {
      if (i == j) continue;
      auto mj = multiplicity(g, cands[j].word.word);
      bool le = true, eq = true;
      for (int v = 0; v < g.rank(); ++v) {
        if (mi[v] > mj[v]) le = false;
        if (mi[v] != mj[v]) eq = false;
      }
      if (le && !eq) dominated = true;
    }
    if (!dominated) maximal.push_back(cands[i]);
  }

  auto join_equals_x = [&](const std::vector<PrincipalWord>& parts) {
    std::vector<int> m(g.rank(), 0);
    for (const auto& p : parts) {
      auto mp = multiplicity(g, p.word.word);
      for (int v = 0; v < g.rank(); ++v) m[v] = std::max(m[v], mp[v]);
    }
    return m == mx;
  };

  if (join_equals_x(maximal)) return maximal;

  // Fallback: exhaustive search over all principal divisors for a
  // minimum-cardinality join decomposition.
  std::vector<PrincipalWord> divisors;
  for (Vertex y : support(x.word))
    for (int r = 1; r <= mx[y]; ++r) {
      PrincipalWord p = principal_word(g, r, y, x.base);
      auto mp = multiplicity(g, p.word.word);
      bool below = true;
      for (int v = 0; v < g.rank(); ++v)
        if (mp[v] > mx[v]) below = false;
      if (below) divisors.push_back(std::move(p));
    }
  const int dn = static_cast<int>(divisors.size());
  for (int m = 1; m <= dn; ++m) {
    std::vector<int> idx(m);
    std::vector<PrincipalWord> pick;
    auto search = [&](auto&& self, int depth, int from) -> bool {
      if (depth == m) return join_equals_x(pick);
      for (int i = from; i < dn; ++i) {
        pick.push_back(divisors[i]);
        if (self(self, depth + 1, i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (search(search, 0, 0)) return pick;
  }
  raise(fail::domain, "DecompositionFailed",
        "no set of principal divisors joins to the word");
}

std::vector<TraceWord> enumerate_admissible(const CoxeterGraph& g,
                                            const Orientation& base, int max_len,
                                            const std::vector<int>* mult_cap) {
  std::map<std::vector<int>, TraceWord> found;
  std::vector<int> used(g.rank(), 0);
  std::vector<Vertex> app;

  auto record = [&](const std::vector<Vertex>& app_seq) {
    std::vector<Vertex> stored(app_seq.rbegin(), app_seq.rend());
    TraceWord w(std::move(stored));
    auto key = normal_form(g, w).key();
    auto [it, fresh] = found.emplace(std::move(key), std::move(w));
    (void)it;
    return fresh;
  };

  auto dfs = [&](auto&& self, const Orientation& cur) -> void {
    if (static_cast<int>(app.size()) == max_len) return;
    for (Vertex v : sinks(g, cur)) {
      if (mult_cap && used[v] == (*mult_cap)[v]) continue;
      ++used[v];
      app.push_back(v);
      // A repeated trace has a previously explored subtree; skip it.
      if (record(app)) self(self, reflect_orientation(g, v, cur));
      app.pop_back();
      --used[v];
    }
  };
  record(app);
  dfs(dfs, base);

  std::vector<TraceWord> out;
  out.reserve(found.size());
  for (auto& [k, w] : found) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), [](const TraceWord& a, const TraceWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters() < b.letters();
  });
  return out;
}

}  // namespace coxeter
