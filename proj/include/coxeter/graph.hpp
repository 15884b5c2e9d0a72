#pragma once

#include <string>
#include <vector>

#include "coxeter/error.hpp"

namespace coxeter {

// Vertices are 0-based indices; vertex v corresponds to the generator s = rho(v).
// The CLI speaks 1-based.
using Vertex = int;

inline constexpr int max_rank = 64;

// Entry of a Coxeter matrix: an integer >= 1, or infinity.
// Infinity is a tagged value, never a large integer.
class CoxEntry {
 public:
  CoxEntry() : m_(2) {}
  static CoxEntry finite(int m) {
    require(m >= 1, fail::domain, "BadEntry", "Coxeter matrix entry must be >= 1");
    CoxEntry e;
    e.m_ = m;
    return e;
  }
  static CoxEntry inf() {
    CoxEntry e;
    e.m_ = 0;
    return e;
  }
  bool infinite() const { return m_ == 0; }
  int value() const {
    require(!infinite(), fail::domain, "BadEntry", "entry is infinite");
    return m_;
  }
  std::string str() const { return infinite() ? "inf" : std::to_string(m_); }
  bool operator==(const CoxEntry&) const = default;

 private:
  int m_;  // 0 encodes infinity
};

// Symmetric matrix with m(i,i) = 1 and m(i,j) >= 2 off the diagonal.
class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(std::vector<std::vector<CoxEntry>> rows);
  int rank() const { return n_; }
  CoxEntry at(Vertex i, Vertex j) const { return e_[i * n_ + j]; }

 private:
  int n_;
  std::vector<CoxEntry> e_;  // row-major
};

struct Edge {
  Vertex a, b;  // a < b
  CoxEntry m;   // label, 3 <= m <= inf
};

// Coxeter graph: an edge joins i and j exactly when m(i,j) > 2.
// Construction enforces connectivity (the system must be irreducible).
class CoxeterGraph {
 public:
  explicit CoxeterGraph(CoxeterMatrix m);

  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  CoxEntry label(Vertex i, Vertex j) const { return matrix_.at(i, j); }
  bool adjacent(Vertex i, Vertex j) const {
    return i != j && edge_id_[i * rank() + j] >= 0;
  }
  int edge_id(Vertex i, Vertex j) const { return edge_id_[i * rank() + j]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbr_[v]; }

 private:
  CoxeterMatrix matrix_;
  std::vector<Edge> edges_;
  std::vector<int> edge_id_;  // n*n, -1 where no edge
  std::vector<std::vector<Vertex>> nbr_;
};

// validate_matrix: raw square table -> graph.
// Errors: Asymmetric, BadDiagonal, OffDiagonalBelow2, Disconnected.
CoxeterGraph validate_matrix(const std::vector<std::vector<CoxEntry>>& raw);

// Direction assignment per edge.  dir[k] true means the arrow runs
// edges()[k].a -> edges()[k].b.  Factories that build orientations from user
// input check acyclicity; reflect_orientation does not, since reflecting at a
// vertex that is neither sink nor source may legitimately create a cycle.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<unsigned char> dir) : dir_(std::move(dir)) {}
  bool toward_b(int edge) const { return dir_[edge] != 0; }
  int num_edges() const { return static_cast<int>(dir_.size()); }
  bool operator==(const Orientation&) const = default;
  const std::vector<unsigned char>& bits() const { return dir_; }

 private:
  std::vector<unsigned char> dir_;
};

// Permutation of the vertices; seq.front() is applied first, so the Coxeter
// element is c = rho(seq[n-1]) ... rho(seq[0]).
struct VertexOrder {
  std::vector<Vertex> seq;
};

VertexOrder make_order(const CoxeterGraph& g, std::vector<Vertex> seq);

Vertex arrow_source(const CoxeterGraph& g, int edge, const Orientation& o);
Vertex arrow_target(const CoxeterGraph& g, int edge, const Orientation& o);
// true when the arrow on edge {u,v} points u -> v
bool arrow_from(const CoxeterGraph& g, Vertex u, Vertex v, const Orientation& o);

bool is_acyclic(const CoxeterGraph& g, const Orientation& o);
bool is_sink(const CoxeterGraph& g, Vertex v, const Orientation& o);
bool is_source(const CoxeterGraph& g, Vertex v, const Orientation& o);
std::vector<Vertex> sinks(const CoxeterGraph& g, const Orientation& o);
std::vector<Vertex> sources(const CoxeterGraph& g, const Orientation& o);

// Each edge is directed from the vertex appearing later in the order to the
// one appearing earlier; the result is acyclic by construction and the first
// vertex of the order is a sink.
Orientation orientation_from_order(const CoxeterGraph& g, const VertexOrder& o);

// Inverse of the above: peel sinks of the remaining subquiver, smallest
// vertex index first.  Errors: CyclicOrientation.
VertexOrder order_from_orientation(const CoxeterGraph& g, const Orientation& o);

// Reverse every arrow incident to x and keep the rest.
Orientation reflect_orientation(const CoxeterGraph& g, Vertex x,
                                const Orientation& o);

Orientation opposite(const CoxeterGraph& g, const Orientation& o);

// x <= y in the vertex poset: some directed path runs from x to y.
bool poset_leq(const CoxeterGraph& g, Vertex x, Vertex y, const Orientation& o);

// Principal filter <x> = { y : y >= x }.
std::vector<Vertex> principal_filter(const CoxeterGraph& g, Vertex x,
                                     const Orientation& o);

// Catalog of standard systems.  Names (case-insensitive, '-'/'_' ignored):
//   A B D          with rank parameter
//   E6 E7 E8 F4 H3 H4   (or E/H with the rank as parameter)
//   I2             with parameter m >= 3 or "inf"
//   affineA        with parameter n >= 2 (cycle on n+1 vertices)
//   affineC2
//   infinitedihedral
// Errors: UnknownPreset, BadParams.
CoxeterMatrix preset(const std::string& name,
                     const std::vector<std::string>& params = {});
CoxeterGraph preset_graph(const std::string& name,
                          const std::vector<std::string>& params = {});

}  // namespace coxeter
