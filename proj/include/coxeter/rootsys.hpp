#pragma once

#include <vector>

#include "coxeter/graph.hpp"
#include "coxeter/trace.hpp"

namespace coxeter {

// Global tolerance for sign tests and matrix/vector comparison.
inline constexpr double eps = 1e-8;

// Coordinate vector in the simple-root basis.
using RootVec = std::vector<double>;

struct Matrix {
  int n = 0;
  std::vector<double> a;  // row-major

  static Matrix identity(int n);
  double& at(int i, int j) { return a[i * n + j]; }
  double at(int i, int j) const { return a[i * n + j]; }
  Matrix operator*(const Matrix& rhs) const;
  RootVec apply(const RootVec& v) const;
  Matrix transposed() const;
};

double max_abs_diff(const Matrix& x, const Matrix& y);
bool approx_equal(const RootVec& x, const RootVec& y, double tol = eps);
RootVec negated(const RootVec& v);

// Rounded coordinates usable as an exact dedup key (1e-6 grid).
std::vector<long long> grid_key(const RootVec& v);

// B(alpha_s, alpha_t) = -2 cos(pi / m(s,t)); diagonal 2, zero when m = 2,
// exactly -2 when m is infinite.
struct FormMatrix {
  Matrix b;
};
FormMatrix form_matrix(const CoxeterGraph& g);

RootVec simple_root(int n, Vertex s);

// s(v) = v - B(alpha_s, v) alpha_s
RootVec reflect(const FormMatrix& form, Vertex s, const RootVec& v);

// rho(x) applied to v: letters folded rightmost first.
RootVec apply_word(const FormMatrix& form, const TraceWord& x, const RootVec& v);

// n x n matrix acting on V in the simple-root basis.
struct GroupElement {
  Matrix m;
};
GroupElement reflection_matrix(const FormMatrix& form, Vertex s);
// Product of reflection matrices, the rightmost letter acting first.
GroupElement element_of_word(const FormMatrix& form, const TraceWord& x);
GroupElement coxeter_element(const FormMatrix& form, const VertexOrder& order);
bool is_identity(const GroupElement& w, double tol = eps);

enum class Sign { positive, negative, zero, mixed };
Sign sign_of(const RootVec& v, double tol = eps);

// Vertex sequence p[0], p[1], ..., each consecutive pair an arrow of the
// orientation; a single vertex is the trivial path.
using Path = std::vector<Vertex>;

// B(e_x) = 1; otherwise the product of -B(alpha_target, alpha_source) over the
// arrows.  Strictly positive, multiplicative under composition.
// Errors: InvalidPath.
double path_weight(const CoxeterGraph& g, const FormMatrix& form,
                   const Orientation& o, const Path& p);

std::vector<Path> all_paths(const CoxeterGraph& g, const Orientation& o,
                            Vertex from, Vertex to);

// Positive part of the orbit of the simple roots under simple reflections,
// breadth-first up to `depth` reflection steps.  depth 0 yields the simple
// roots; for a finite type and depth >= l(w0) this is all positive roots.
std::vector<RootVec> enumerate_roots(const CoxeterGraph& g, int depth);

bool root_support_connected(const CoxeterGraph& g, const RootVec& v);

}  // namespace coxeter
