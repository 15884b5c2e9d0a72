#pragma once

#include "coxeter/admissible.hpp"
#include "coxeter/graph.hpp"
#include "coxeter/rootsys.hpp"

namespace coxeter {

// An irreducible Coxeter system with a chosen Coxeter element: the graph, the
// bilinear form, the generator order, the matching acyclic orientation, the
// complete word K and the matrices of c and its inverse.
struct CoxeterSystem {
  CoxeterGraph graph;
  FormMatrix form;
  VertexOrder order;
  Orientation orientation;
  TraceWord complete;  // K, with rho(K) = c
  GroupElement c;
  GroupElement c_inv;

  int rank() const { return graph.rank(); }
};

CoxeterSystem make_system(CoxeterGraph g, VertexOrder order);
CoxeterSystem make_system(CoxeterGraph g, const Orientation& orientation);

// The same system seen through c^{-1}: reversed order, opposite orientation.
CoxeterSystem inverse_system(const CoxeterSystem& sys);

}  // namespace coxeter
