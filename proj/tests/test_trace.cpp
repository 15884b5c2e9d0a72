#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "coxeter/trace.hpp"
#include "oracles.hpp"

using namespace coxeter;

namespace {

TraceWord w(std::initializer_list<Vertex> letters) {
  return TraceWord(std::vector<Vertex>(letters));
}

}  // namespace

TEST_CASE("normal_form merges commuting letters into blocks") {
  CoxeterGraph a3 = preset_graph("A", {"3"});

  // vertices 0 and 2 commute in A3
  FoataForm nf1 = normal_form(a3, w({2, 0}));
  FoataForm nf2 = normal_form(a3, w({0, 2}));
  CHECK(nf1 == nf2);
  REQUIRE(nf1.blocks.size() == 1);
  CHECK(nf1.blocks[0] == std::vector<Vertex>{0, 2});

  CHECK(normal_form(a3, TraceWord{}).blocks.empty());

  CoxeterGraph a2 = preset_graph("A", {"2"});
  FoataForm nf3 = normal_form(a2, w({0, 1, 0}));
  REQUIRE(nf3.blocks.size() == 3);
  CHECK(nf3.blocks[0] == std::vector<Vertex>{0});
  CHECK(nf3.blocks[1] == std::vector<Vertex>{1});
  CHECK(nf3.blocks[2] == std::vector<Vertex>{0});
}

TEST_CASE("foata blocks satisfy their structural invariants") {
  CoxeterGraph d4 = preset_graph("D", {"4"});
  for (const auto& seq : oracles::all_sequences(4, 4)) {
    FoataForm nf = normal_form(d4, TraceWord(seq));
    for (size_t k = 0; k < nf.blocks.size(); ++k) {
      const auto& b = nf.blocks[k];
      for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) {
          CHECK(b[i] < b[j]);
          CHECK(!d4.adjacent(b[i], b[j]));
        }
      if (k == 0) continue;
      for (Vertex v : b) {
        bool supported = false;
        for (Vertex u : nf.blocks[k - 1])
          if (u == v || d4.adjacent(u, v)) supported = true;
        CHECK(supported);
      }
    }
  }
}

TEST_CASE("trace equality agrees with the commutation-closure oracle") {
  CoxeterGraph a3 = preset_graph("A", {"3"});
  auto words = oracles::all_sequences(3, 4);
  for (const auto& a : words)
    for (const auto& b : words) {
      bool lib = trace_equal(a3, TraceWord(a), TraceWord(b));
      bool ref = oracles::closure_equal(a3, a, b);
      CHECK(lib == ref);
    }
}

TEST_CASE("normal form is invariant under random legal interchanges") {
  CoxeterGraph d4 = preset_graph("D", {"4"});
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vertex> seq(8);
    for (auto& v : seq) v = letter(rng);
    FoataForm nf = normal_form(d4, TraceWord(seq));
    std::vector<Vertex> shuffled = seq;
    for (int k = 0; k < 50; ++k) {
      std::uniform_int_distribution<size_t> pos(0, shuffled.size() - 2);
      size_t i = pos(rng);
      if (shuffled[i] != shuffled[i + 1] &&
          !d4.adjacent(shuffled[i], shuffled[i + 1]))
        std::swap(shuffled[i], shuffled[i + 1]);
    }
    CHECK(normal_form(d4, TraceWord(shuffled)) == nf);
  }
}

TEST_CASE("divides follows the strip algorithm") {
  CoxeterGraph a3 = preset_graph("A", {"3"});
  CoxeterGraph a2 = preset_graph("A", {"2"});

  CHECK(divides(a3, TraceWord{}, w({2, 0})));  // 1 divides everything
  CHECK(divides(a3, w({0}), w({2, 0})));
  CHECK(trace_equal(a3, quotient(a3, w({2, 0}), w({0})), w({2})));

  // blocked by the adjacent letter applied after it
  CHECK(!divides(a2, w({0}), w({0, 1})));

  CHECK(divides(a2, TraceWord{}, TraceWord{}));
  CHECK(!divides(a2, w({0, 1}), w({0})));
}

TEST_CASE("quotient round trips and rejects non-divisors") {
  CoxeterGraph a2 = preset_graph("A", {"2"});
  TraceWord x = w({0, 1, 0});
  CHECK(trace_equal(a2, quotient(a2, x, TraceWord{}), x));
  CHECK(quotient(a2, x, x).empty());
  CHECK_THROWS_WITH_AS(quotient(a2, w({0}), w({1})),
                       doctest::Contains("NotADivisor"), error);
}

TEST_CASE("divisibility is a partial order with cancellation") {
  CoxeterGraph a3 = preset_graph("A", {"3"});
  auto seqs = oracles::all_sequences(3, 5);
  std::vector<TraceWord> words;
  words.reserve(seqs.size());
  for (auto& s : seqs) words.emplace_back(std::move(s));

  for (const auto& x : words)
    for (const auto& y : words) {
      bool yx = divides(a3, y, x);
      if (yx) {
        // cancellation: x = quotient * y
        TraceWord u = quotient(a3, x, y);
        CHECK(trace_equal(a3, product(u, y), x));
        // monotone in length and multiplicity
        CHECK(y.length() <= x.length());
        auto mx = multiplicity(a3, x), my = multiplicity(a3, y);
        for (int v = 0; v < 3; ++v) CHECK(my[v] <= mx[v]);
      }
      // antisymmetry
      if (yx && divides(a3, x, y)) CHECK(trace_equal(a3, x, y));
    }
}

TEST_CASE("quotient is unique over traces of length up to 5") {
  CoxeterGraph a3 = preset_graph("A", {"3"});
  // one representative per trace class
  std::map<std::vector<int>, TraceWord> classes;
  for (const auto& s : oracles::all_sequences(3, 5)) {
    TraceWord x(s);
    classes.emplace(normal_form(a3, x).key(), x);
  }
  std::vector<TraceWord> reps;
  for (auto& [k, x] : classes) reps.push_back(std::move(x));

  for (const auto& x : reps)
    for (const auto& y : reps) {
      if (!divides(a3, y, x)) continue;
      int found = 0;
      for (const auto& u : reps) {
        if (u.length() + y.length() != x.length()) continue;
        if (trace_equal(a3, product(u, y), x)) ++found;
      }
      CHECK(found == 1);
      TraceWord q = quotient(a3, x, y);
      CHECK(trace_equal(a3, product(q, y), x));
    }
}

TEST_CASE("support, multiplicity, length, transpose") {
  CoxeterGraph a2 = preset_graph("A", {"2"});
  TraceWord x = w({0, 1, 0});
  CHECK(multiplicity(a2, x) == std::vector<int>{2, 1});
  CHECK(support(x) == std::vector<Vertex>{0, 1});
  CHECK(x.length() == 3);
  CHECK(transpose(transpose(x)).letters() == x.letters());
  CHECK(support(TraceWord{}).empty());
  CHECK(TraceWord{}.length() == 0);

  // congruence invariance across representatives
  CoxeterGraph a3 = preset_graph("A", {"3"});
  TraceWord r1 = w({2, 0}), r2 = w({0, 2});
  CHECK(multiplicity(a3, r1) == multiplicity(a3, r2));
  CHECK(support(r1) == support(r2));
  CHECK(trace_equal(a3, transpose(r1), transpose(r2)));
}

TEST_CASE("canonical returns a stable representative of the trace") {
  CoxeterGraph a3 = preset_graph("A", {"3"});
  for (const auto& seq : oracles::all_sequences(3, 5)) {
    TraceWord x(seq);
    TraceWord c = canonical(a3, x);
    CHECK(trace_equal(a3, c, x));
    CHECK(canonical(a3, c).letters() == c.letters());
  }
}
