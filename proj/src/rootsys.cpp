#include "coxeter/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace coxeter {

Matrix Matrix::identity(int n) {
  Matrix m{n, std::vector<double>(n * n, 0.0)};
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  Matrix out{n, std::vector<double>(n * n, 0.0)};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double x = at(i, k);
      if (x == 0.0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

RootVec Matrix::apply(const RootVec& v) const {
  RootVec out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out{n, std::vector<double>(n * n, 0.0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(j, i) = at(i, j);
  return out;
}

double max_abs_diff(const Matrix& x, const Matrix& y) {
  double d = 0.0;
  for (size_t i = 0; i < x.a.size(); ++i)
    d = std::max(d, std::fabs(x.a[i] - y.a[i]));
  return d;
}

bool approx_equal(const RootVec& x, const RootVec& y, double tol) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (std::fabs(x[i] - y[i]) > tol) return false;
  return true;
}

RootVec negated(const RootVec& v) {
  RootVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::vector<long long> grid_key(const RootVec& v) {
  std::vector<long long> k(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    k[i] = static_cast<long long>(std::llround(v[i] * 1e6));
  return k;
}

FormMatrix form_matrix(const CoxeterGraph& g) {
  const int n = g.rank();
  Matrix b{n, std::vector<double>(n * n, 0.0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CoxEntry m = g.label(i, j);
      // pi/inf = 0 by convention, so an infinite bond gives exactly -2
      b.at(i, j) = m.infinite() ? -2.0
                                : -2.0 * std::cos(std::numbers::pi / m.value());
    }
  return FormMatrix{std::move(b)};
}

RootVec simple_root(int n, Vertex s) {
  RootVec v(n, 0.0);
  v[s] = 1.0;
  return v;
}

RootVec reflect(const FormMatrix& form, Vertex s, const RootVec& v) {
  const int n = form.b.n;
  double c = 0.0;
  for (int j = 0; j < n; ++j) c += form.b.at(s, j) * v[j];
  RootVec out = v;
  out[s] -= c;
  return out;
}

RootVec apply_word(const FormMatrix& form, const TraceWord& x, const RootVec& v) {
  RootVec cur = v;
  const auto& seq = x.letters();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    cur = reflect(form, *it, cur);
  return cur;
}

GroupElement reflection_matrix(const FormMatrix& form, Vertex s) {
  const int n = form.b.n;
  Matrix m = Matrix::identity(n);
  for (int j = 0; j < n; ++j) m.at(s, j) -= form.b.at(s, j);
  return GroupElement{std::move(m)};
}

GroupElement element_of_word(const FormMatrix& form, const TraceWord& x) {
  Matrix m = Matrix::identity(form.b.n);
  for (Vertex v : x.letters()) m = m * reflection_matrix(form, v).m;
  return GroupElement{std::move(m)};
}

GroupElement coxeter_element(const FormMatrix& form, const VertexOrder& order) {
  std::vector<Vertex> stored(order.seq.rbegin(), order.seq.rend());
  return element_of_word(form, TraceWord(std::move(stored)));
}

bool is_identity(const GroupElement& w, double tol) {
  return max_abs_diff(w.m, Matrix::identity(w.m.n)) <= tol;
}

Sign sign_of(const RootVec& v, double tol) {
  bool has_pos = false, has_neg = false;
  for (double c : v) {
    if (c > tol) has_pos = true;
    if (c < -tol) has_neg = true;
  }
  if (has_pos && has_neg) return Sign::mixed;
  if (has_pos) return Sign::positive;
  if (has_neg) return Sign::negative;
  return Sign::zero;
}

double path_weight(const CoxeterGraph& g, const FormMatrix& form,
                   const Orientation& o, const Path& p) {
  require(!p.empty(), fail::domain, "InvalidPath", "empty vertex sequence");
  for (Vertex v : p)
    require(v >= 0 && v < g.rank(), fail::domain, "InvalidPath",
            "vertex out of range");
  double w = 1.0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    require(arrow_from(g, p[i], p[i + 1], o), fail::domain, "InvalidPath",
            "consecutive vertices are not joined by an arrow");
    w *= -form.b.at(p[i + 1], p[i]);
  }
  return w;
}

std::vector<Path> all_paths(const CoxeterGraph& g, const Orientation& o,
                            Vertex from, Vertex to) {
  std::vector<Path> out;
  Path cur{from};
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (v == to) out.push_back(cur);
    for (Vertex u : g.neighbors(v))
      if (arrow_from(g, v, u, o)) {
        cur.push_back(u);
        self(self, u);
        cur.pop_back();
      }
  };
  dfs(dfs, from);
  return out;
}

std::vector<RootVec> enumerate_roots(const CoxeterGraph& g, int depth) {
  const int n = g.rank();
  FormMatrix form = form_matrix(g);
  std::set<std::vector<long long>> seen;
  std::vector<RootVec> found, frontier;
  for (Vertex s = 0; s < n; ++s) {
    RootVec a = simple_root(n, s);
    seen.insert(grid_key(a));
    found.push_back(a);
    frontier.push_back(std::move(a));
  }
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<RootVec> next;
    for (const RootVec& v : frontier)
      for (Vertex s = 0; s < n; ++s) {
        RootVec w = reflect(form, s, v);
        Sign sg = sign_of(w);
        require(sg != Sign::mixed && sg != Sign::zero, fail::numeric,
                "NumericalAmbiguity", "orbit vector failed to classify");
        if (sg == Sign::negative) continue;
        auto key = grid_key(w);
        if (seen.insert(std::move(key)).second) {
          found.push_back(w);
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(),
            [](const RootVec& a, const RootVec& b) {
              return grid_key(a) < grid_key(b);
            });
  return found;
}

bool root_support_connected(const CoxeterGraph& g, const RootVec& v) {
  std::vector<Vertex> supp;
  for (Vertex i = 0; i < g.rank(); ++i)
    if (std::fabs(v[i]) > eps) supp.push_back(i);
  if (supp.empty()) return true;
  std::set<Vertex> in(supp.begin(), supp.end());
  std::set<Vertex> seen{supp[0]};
  std::vector<Vertex> stack{supp[0]};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(x))
      if (in.contains(u) && !seen.contains(u)) {
        seen.insert(u);
        stack.push_back(u);
      }
  }
  return seen.size() == in.size();
}

}  // namespace coxeter
