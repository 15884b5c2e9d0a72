#pragma once

#include <optional>
#include <vector>

#include "coxeter/graph.hpp"
#include "coxeter/trace.hpp"

namespace coxeter {

// Word applicable as successive sink reflections: with letters x_l ... x_1
// (x_1 applied first), x_1 is a sink of base, x_2 a sink of x_1*base, and so
// on.  final is the orientation word*base.
struct AdmissibleWord {
  TraceWord word;
  Orientation base;
  Orientation final;
};

bool is_admissible(const CoxeterGraph& g, const TraceWord& x, const Orientation& base);

// Validating constructor.  Errors: NotAdmissible.
AdmissibleWord admit(const CoxeterGraph& g, TraceWord x, Orientation base);

// Fold of reflect_orientation over the letters, rightmost first.
Orientation act(const CoxeterGraph& g, const TraceWord& x, const Orientation& base);

// The complete word K: multiplicity-free, admissible, full support; built by
// peeling sinks smallest-index-first, so rho(K) is the Coxeter element of the
// orientation and K*base = base.
AdmissibleWord complete_word(const CoxeterGraph& g, const Orientation& base);

bool is_filter(const CoxeterGraph& g, const std::vector<Vertex>& set,
               const Orientation& o);

// The unique multiplicity-free admissible word with the given support.
// Errors: NotAFilter.
TraceWord mf_word_of_filter(const CoxeterGraph& g, const std::vector<Vertex>& filter,
                            const Orientation& base);

// Smallest filter containing the given one together with every vertex joined
// to it by an edge.  Errors: NotAFilter.
std::vector<Vertex> hull(const CoxeterGraph& g, const std::vector<Vertex>& filter,
                         const Orientation& o);

// Principal word W_{r,x}: blocks X_r ... X_1 with Supp X_r = <x>, each next
// support the hull of the previous (taken in the base poset), each block the
// multiplicity-free word of its support over the running orientation.
// blocks.front() is X_r (leftmost, applied last).
struct PrincipalWord {
  AdmissibleWord word;
  int size = 0;
  Vertex apex = -1;
  std::vector<TraceWord> blocks;
};

// Errors: ConstructionFailed (would indicate a bug; the construction is
// guaranteed to go through).
PrincipalWord principal_word(const CoxeterGraph& g, int r, Vertex x,
                             const Orientation& base);

// Size/apex of a principal word.  The empty word matches with size 0 and no
// apex; a nonempty non-principal word yields nullopt.
struct PrincipalMatch {
  int size = 0;
  std::optional<Vertex> apex;
};
std::optional<PrincipalMatch> is_principal(const CoxeterGraph& g,
                                           const AdmissibleWord& x);

// Order, meet and join on admissible words over one base: pointwise
// comparison / min / max of multiplicity vectors (which determine admissible
// words uniquely).  Errors: DifferentBase; RealizationFailed.
bool admissible_leq(const CoxeterGraph& g, const AdmissibleWord& x,
                    const AdmissibleWord& y);
AdmissibleWord meet(const CoxeterGraph& g, const AdmissibleWord& x,
                    const AdmissibleWord& y);
AdmissibleWord join(const CoxeterGraph& g, const AdmissibleWord& x,
                    const AdmissibleWord& y);

// Reconstruct the admissible word with the given multiplicity vector by
// depth-first search over sink applications, backtracking on dead ends.
// Errors: RealizationFailed.
TraceWord realize_vector(const CoxeterGraph& g, const std::vector<int>& mult,
                         const Orientation& base);

// x = v*(x^y), y = w*(x^y); supports of v and w are disjoint with no edge
// between them, and join = w*x = v*y.
struct LatticeFactor {
  TraceWord v, w;
  AdmissibleWord meet_word, join_word;
};
LatticeFactor lattice_factor(const CoxeterGraph& g, const AdmissibleWord& x,
                             const AdmissibleWord& y);

// The unique minimal set of principal words whose join is x: the maximal
// principal divisors.  Falls back to exhaustive search over principal
// divisors if the maximal-divisor join misses x.  Errors: DecompositionFailed.
std::vector<PrincipalWord> independent_decomposition(const CoxeterGraph& g,
                                                     const AdmissibleWord& x);

// All admissible traces with length <= max_len (and per-vertex multiplicity
// <= mult_cap[v] when given), deduplicated, sorted by length then normal form.
std::vector<TraceWord> enumerate_admissible(const CoxeterGraph& g,
                                            const Orientation& base, int max_len,
                                            const std::vector<int>* mult_cap = nullptr);

}  // namespace coxeter
