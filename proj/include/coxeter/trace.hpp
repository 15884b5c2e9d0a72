#pragma once

#include <vector>

#include "coxeter/graph.hpp"

namespace coxeter {

// Element of the graph monoid of the Coxeter graph: a word over the vertices
// up to commutation of letters not joined by an edge.
//
// Storage convention, fixed repo-wide: letters() holds the word left-to-right
// as written, x_l ... x_1, so letters().back() is x_1 and is applied FIRST
// under rho, while letters().front() is applied last.  Equality of traces is
// trace_equal(), never raw sequence comparison; the type deliberately has no
// operator==.
class TraceWord {
 public:
  TraceWord() = default;
  explicit TraceWord(std::vector<Vertex> letters) : letters_(std::move(letters)) {}
  static TraceWord letter(Vertex v) { return TraceWord({v}); }

  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<Vertex>& letters() const { return letters_; }

 private:
  std::vector<Vertex> letters_;
};

// Canonical block decomposition: blocks[0] holds the letters applied first;
// within a block letters are pairwise non-adjacent, distinct and sorted; every
// letter of block k+1 is equal or adjacent to some letter of block k.
struct FoataForm {
  std::vector<std::vector<Vertex>> blocks;
  bool operator==(const FoataForm&) const = default;
  // flat encoding usable as a hash/map key
  std::vector<int> key() const;
};

FoataForm normal_form(const CoxeterGraph& g, const TraceWord& x);

// Deterministic representative of the trace of x: the Foata blocks flattened
// in application order and re-stored leftmost-last-applied.
TraceWord canonical(const CoxeterGraph& g, const TraceWord& x);

bool trace_equal(const CoxeterGraph& g, const TraceWord& x, const TraceWord& y);

// u applied after y: the product u*y, stored as u's letters then y's.
TraceWord product(const TraceWord& u, const TraceWord& y);

TraceWord transpose(const TraceWord& x);

// y <= x in the divisibility order: x = u*y for some u.
bool divides(const CoxeterGraph& g, const TraceWord& y, const TraceWord& x);

// The unique u with x = u*y.  Errors: NotADivisor.
TraceWord quotient(const CoxeterGraph& g, const TraceWord& x, const TraceWord& y);

std::vector<int> multiplicity(const CoxeterGraph& g, const TraceWord& x);
std::vector<Vertex> support(const TraceWord& x);  // sorted, distinct

}  // namespace coxeter
