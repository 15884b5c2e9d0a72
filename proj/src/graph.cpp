#include "coxeter/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace coxeter {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<CoxEntry>> rows) {
  n_ = static_cast<int>(rows.size());
  require(n_ >= 1, fail::domain, "BadShape", "empty matrix");
  require(n_ <= max_rank, fail::domain, "BadShape",
          "rank exceeds " + std::to_string(max_rank));
  for (const auto& r : rows)
    require(static_cast<int>(r.size()) == n_, fail::domain, "BadShape",
            "matrix is not square");
  e_.reserve(n_ * n_);
  for (const auto& r : rows)
    for (auto v : r) e_.push_back(v);
  for (int i = 0; i < n_; ++i) {
    require(at(i, i) == CoxEntry::finite(1), fail::domain, "BadDiagonal",
            "m(i,i) must be 1 at i=" + std::to_string(i + 1));
    for (int j = 0; j < n_; ++j) {
      require(at(i, j) == at(j, i), fail::domain, "Asymmetric",
              "m(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                  ") differs from its transpose");
      if (i != j)
        require(at(i, j).infinite() || at(i, j).value() >= 2, fail::domain,
                "OffDiagonalBelow2",
                "m(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") must be >= 2");
    }
  }
}

CoxeterGraph::CoxeterGraph(CoxeterMatrix m) : matrix_(std::move(m)) {
  const int n = matrix_.rank();
  edge_id_.assign(n * n, -1);
  nbr_.assign(n, {});
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      CoxEntry e = matrix_.at(a, b);
      if (e.infinite() || e.value() > 2) {
        int id = static_cast<int>(edges_.size());
        edges_.push_back({a, b, e});
        edge_id_[a * n + b] = edge_id_[b * n + a] = id;
        nbr_[a].push_back(b);
        nbr_[b].push_back(a);
      }
    }
  // connectivity = irreducibility
  std::vector<char> seen(n, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex u : nbr_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  require(reached == n, fail::domain, "Disconnected",
          "Coxeter graph is disconnected (reducible system)");
}

CoxeterGraph validate_matrix(const std::vector<std::vector<CoxEntry>>& raw) {
  return CoxeterGraph(CoxeterMatrix(raw));
}

VertexOrder make_order(const CoxeterGraph& g, std::vector<Vertex> seq) {
  const int n = g.rank();
  require(static_cast<int>(seq.size()) == n, fail::domain, "BadOrder",
          "order must list every vertex exactly once");
  std::vector<char> seen(n, 0);
  for (Vertex v : seq) {
    require(v >= 0 && v < n, fail::domain, "BadOrder", "vertex out of range");
    require(!seen[v], fail::domain, "BadOrder", "repeated vertex in order");
    seen[v] = 1;
  }
  return VertexOrder{std::move(seq)};
}

Vertex arrow_source(const CoxeterGraph& g, int edge, const Orientation& o) {
  const Edge& e = g.edges()[edge];
  return o.toward_b(edge) ? e.a : e.b;
}

Vertex arrow_target(const CoxeterGraph& g, int edge, const Orientation& o) {
  const Edge& e = g.edges()[edge];
  return o.toward_b(edge) ? e.b : e.a;
}

bool arrow_from(const CoxeterGraph& g, Vertex u, Vertex v, const Orientation& o) {
  int id = g.edge_id(u, v);
  if (id < 0) return false;
  return arrow_source(g, id, o) == u;
}

static int out_degree(const CoxeterGraph& g, Vertex v, const Orientation& o) {
  int d = 0;
  for (Vertex u : g.neighbors(v))
    if (arrow_from(g, v, u, o)) ++d;
  return d;
}

bool is_sink(const CoxeterGraph& g, Vertex v, const Orientation& o) {
  return out_degree(g, v, o) == 0;
}

bool is_source(const CoxeterGraph& g, Vertex v, const Orientation& o) {
  for (Vertex u : g.neighbors(v))
    if (!arrow_from(g, v, u, o)) return false;
  return true;
}

std::vector<Vertex> sinks(const CoxeterGraph& g, const Orientation& o) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.rank(); ++v)
    if (is_sink(g, v, o)) out.push_back(v);
  return out;
}

std::vector<Vertex> sources(const CoxeterGraph& g, const Orientation& o) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.rank(); ++v)
    if (is_source(g, v, o)) out.push_back(v);
  return out;
}

bool is_acyclic(const CoxeterGraph& g, const Orientation& o) {
  const int n = g.rank();
  std::vector<int> outdeg(n, 0);
  for (Vertex v = 0; v < n; ++v) outdeg[v] = out_degree(g, v, o);
  // Kahn over reversed arrows: repeatedly delete sinks.
  std::vector<char> gone(n, 0);
  int removed = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v] || outdeg[v] != 0) continue;
      gone[v] = 1;
      ++removed;
      progress = true;
      for (Vertex u : g.neighbors(v))
        if (!gone[u] && arrow_from(g, u, v, o)) --outdeg[u];
    }
  }
  return removed == n;
}

Orientation orientation_from_order(const CoxeterGraph& g, const VertexOrder& o) {
  const int n = g.rank();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[o.seq[i]] = i;
  std::vector<unsigned char> dir(g.edges().size());
  for (size_t k = 0; k < g.edges().size(); ++k) {
    const Edge& e = g.edges()[k];
    // arrow runs from the later vertex in the order to the earlier
    dir[k] = pos[e.a] > pos[e.b] ? 1 : 0;
  }
  return Orientation(std::move(dir));
}

VertexOrder order_from_orientation(const CoxeterGraph& g, const Orientation& o) {
  const int n = g.rank();
  std::vector<int> outdeg(n, 0);
  for (Vertex v = 0; v < n; ++v) outdeg[v] = out_degree(g, v, o);
  std::vector<char> gone(n, 0);
  std::vector<Vertex> seq;
  seq.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && outdeg[v] == 0) {
        pick = v;
        break;
      }
    require(pick >= 0, fail::domain, "CyclicOrientation",
            "orientation has a directed cycle");
    gone[pick] = 1;
    seq.push_back(pick);
    for (Vertex u : g.neighbors(pick))
      if (!gone[u] && arrow_from(g, u, pick, o)) --outdeg[u];
  }
  return VertexOrder{std::move(seq)};
}

Orientation reflect_orientation(const CoxeterGraph& g, Vertex x,
                                const Orientation& o) {
  std::vector<unsigned char> dir = o.bits();
  for (Vertex u : g.neighbors(x)) {
    int id = g.edge_id(x, u);
    dir[id] ^= 1;
  }
  return Orientation(std::move(dir));
}

Orientation opposite(const CoxeterGraph&, const Orientation& o) {
  std::vector<unsigned char> dir = o.bits();
  for (auto& d : dir) d ^= 1;
  return Orientation(std::move(dir));
}

bool poset_leq(const CoxeterGraph& g, Vertex x, Vertex y, const Orientation& o) {
  if (x == y) return true;
  std::vector<char> seen(g.rank(), 0);
  std::vector<Vertex> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (arrow_from(g, v, u, o) && !seen[u]) {
        if (u == y) return true;
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  return false;
}

std::vector<Vertex> principal_filter(const CoxeterGraph& g, Vertex x,
                                     const Orientation& o) {
  std::vector<char> seen(g.rank(), 0);
  std::vector<Vertex> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (arrow_from(g, v, u, o) && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.rank(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

namespace {

std::string canon_name(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return s;
}

int parse_rank(const std::vector<std::string>& params, const char* who) {
  require(params.size() == 1, fail::domain, "BadParams",
          std::string(who) + " takes exactly one parameter");
  try {
    size_t pos = 0;
    int n = std::stoi(params[0], &pos);
    require(pos == params[0].size(), fail::domain, "BadParams",
            "bad integer parameter '" + params[0] + "'");
    return n;
  } catch (const error&) {
    throw;
  } catch (...) {
    raise(fail::domain, "BadParams", "bad integer parameter '" + params[0] + "'");
  }
}

std::vector<std::vector<CoxEntry>> blank(int n) {
  std::vector<std::vector<CoxEntry>> t(n, std::vector<CoxEntry>(n, CoxEntry::finite(2)));
  for (int i = 0; i < n; ++i) t[i][i] = CoxEntry::finite(1);
  return t;
}

void set_bond(std::vector<std::vector<CoxEntry>>& t, int i, int j, CoxEntry m) {
  t[i][j] = t[j][i] = m;
}

CoxeterMatrix path_type(int n, const std::vector<std::pair<int, CoxEntry>>& special) {
  auto t = blank(n);
  for (int i = 0; i + 1 < n; ++i) set_bond(t, i, i + 1, CoxEntry::finite(3));
  for (auto [pos, m] : special) set_bond(t, pos, pos + 1, m);
  return CoxeterMatrix(std::move(t));
}

}  // namespace

CoxeterMatrix preset(const std::string& name,
                     const std::vector<std::string>& params) {
  const std::string id = canon_name(name);

  if (id == "a") {
    int n = parse_rank(params, "A");
    require(n >= 1, fail::domain, "BadParams", "A requires rank >= 1");
    return path_type(n, {});
  }
  if (id == "b" || id == "c") {
    int n = parse_rank(params, "B");
    require(n >= 2, fail::domain, "BadParams", "B requires rank >= 2");
    return path_type(n, {{n - 2, CoxEntry::finite(4)}});
  }
  if (id == "d") {
    int n = parse_rank(params, "D");
    require(n >= 4, fail::domain, "BadParams", "D requires rank >= 4");
    auto t = blank(n);
    for (int i = 0; i + 1 < n - 1; ++i) set_bond(t, i, i + 1, CoxEntry::finite(3));
    set_bond(t, n - 3, n - 1, CoxEntry::finite(3));
    return CoxeterMatrix(std::move(t));
  }
  if (id == "e" || id == "e6" || id == "e7" || id == "e8") {
    int n;
    if (id == "e")
      n = parse_rank(params, "E");
    else
      n = id[1] - '0';
    require(n >= 6 && n <= 8, fail::domain, "BadParams", "E requires rank 6..8");
    auto t = blank(n);
    for (int i = 0; i + 1 < n - 1; ++i) set_bond(t, i, i + 1, CoxEntry::finite(3));
    set_bond(t, 2, n - 1, CoxEntry::finite(3));  // branch at the third node
    return CoxeterMatrix(std::move(t));
  }
  if (id == "f4") return path_type(4, {{1, CoxEntry::finite(4)}});
  if (id == "h" || id == "h3" || id == "h4") {
    int n;
    if (id == "h")
      n = parse_rank(params, "H");
    else
      n = id[1] - '0';
    require(n == 3 || n == 4, fail::domain, "BadParams", "H requires rank 3 or 4");
    return path_type(n, {{0, CoxEntry::finite(5)}});
  }
  if (id == "i2") {
    require(params.size() == 1, fail::domain, "BadParams",
            "I2 takes exactly one parameter");
    if (canon_name(params[0]) == "inf") {
      auto t = blank(2);
      set_bond(t, 0, 1, CoxEntry::inf());
      return CoxeterMatrix(std::move(t));
    }
    int m = parse_rank(params, "I2");
    require(m >= 3, fail::domain, "BadParams", "I2 requires m >= 3 or inf");
    auto t = blank(2);
    set_bond(t, 0, 1, CoxEntry::finite(m));
    return CoxeterMatrix(std::move(t));
  }
  if (id == "affinea" || id == "atilde") {
    int n = parse_rank(params, "affineA");
    require(n >= 2, fail::domain, "BadParams",
            "affine A requires n >= 2 (cycle on n+1 vertices)");
    auto t = blank(n + 1);
    for (int i = 0; i <= n; ++i) set_bond(t, i, (i + 1) % (n + 1), CoxEntry::finite(3));
    return CoxeterMatrix(std::move(t));
  }
  if (id == "affinec2" || id == "ctilde2")
    return path_type(3, {{0, CoxEntry::finite(4)}, {1, CoxEntry::finite(4)}});
  if (id == "infinitedihedral" || id == "infdihedral" || id == "dihedralinf")
    return preset("I2", {"inf"});

  raise(fail::domain, "UnknownPreset", "unknown preset '" + name + "'");
}

CoxeterGraph preset_graph(const std::string& name,
                          const std::vector<std::string>& params) {
  return CoxeterGraph(preset(name, params));
}

}  // namespace coxeter
