#include "coxeter/trace.hpp"

#include <algorithm>

namespace coxeter {

std::vector<int> FoataForm::key() const {
  std::vector<int> k;
  for (const auto& b : blocks) {
    for (Vertex v : b) k.push_back(v);
    k.push_back(-1);  // block separator
  }
  return k;
}

FoataForm normal_form(const CoxeterGraph& g, const TraceWord& x) {
  // Heap-of-pieces heights: a letter lands one level above the highest
  // previously placed letter it depends on (itself or a neighbor).
  std::vector<int> top(g.rank(), 0);
  std::vector<std::vector<Vertex>> blocks;
  const auto& seq = x.letters();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {  // application order
    Vertex v = *it;
    int h = top[v];
    for (Vertex u : g.neighbors(v)) h = std::max(h, top[u]);
    if (static_cast<int>(blocks.size()) <= h) blocks.resize(h + 1);
    blocks[h].push_back(v);
    top[v] = h + 1;
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  return FoataForm{std::move(blocks)};
}

TraceWord canonical(const CoxeterGraph& g, const TraceWord& x) {
  FoataForm nf = normal_form(g, x);
  std::vector<Vertex> app;
  app.reserve(x.length());
  for (const auto& b : nf.blocks)
    for (Vertex v : b) app.push_back(v);
  std::reverse(app.begin(), app.end());
  return TraceWord(std::move(app));
}

bool trace_equal(const CoxeterGraph& g, const TraceWord& x, const TraceWord& y) {
  if (x.length() != y.length()) return false;
  return normal_form(g, x) == normal_form(g, y);
}

TraceWord product(const TraceWord& u, const TraceWord& y) {
  std::vector<Vertex> seq = u.letters();
  seq.insert(seq.end(), y.letters().begin(), y.letters().end());
  return TraceWord(std::move(seq));
}

TraceWord transpose(const TraceWord& x) {
  std::vector<Vertex> seq = x.letters();
  std::reverse(seq.begin(), seq.end());
  return TraceWord(std::move(seq));
}

namespace {

// Remove one occurrence of y that can be commuted to the first-applied end of
// seq: scanning from the right, the first occurrence of y must be reached
// before any letter adjacent to y.
bool try_strip(const CoxeterGraph& g, std::vector<Vertex>& seq, Vertex y) {
  for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
    if (seq[i] == y) {
      seq.erase(seq.begin() + i);
      return true;
    }
    if (g.adjacent(seq[i], y)) return false;
  }
  return false;
}

}  // namespace

bool divides(const CoxeterGraph& g, const TraceWord& y, const TraceWord& x) {
  if (y.length() > x.length()) return false;
  std::vector<Vertex> rest = x.letters();
  const auto& ys = y.letters();
  for (auto it = ys.rbegin(); it != ys.rend(); ++it)
    if (!try_strip(g, rest, *it)) return false;
  return true;
}

TraceWord quotient(const CoxeterGraph& g, const TraceWord& x, const TraceWord& y) {
  std::vector<Vertex> rest = x.letters();
  const auto& ys = y.letters();
  for (auto it = ys.rbegin(); it != ys.rend(); ++it)
    require(try_strip(g, rest, *it), fail::domain, "NotADivisor",
            "the second word does not divide the first");
  return TraceWord(std::move(rest));
}

std::vector<int> multiplicity(const CoxeterGraph& g, const TraceWord& x) {
  std::vector<int> m(g.rank(), 0);
  for (Vertex v : x.letters()) ++m[v];
  return m;
}

std::vector<Vertex> support(const TraceWord& x) {
  std::vector<Vertex> s = x.letters();
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace coxeter
