#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxeter/graph.hpp"

using namespace coxeter;

namespace {

CoxEntry f(int m) { return CoxEntry::finite(m); }

// All acyclic orientations of a graph, brute force over direction bitmasks.
std::vector<Orientation> acyclic_orientations(const CoxeterGraph& g) {
  std::vector<Orientation> out;
  const int e = static_cast<int>(g.edges().size());
  for (int mask = 0; mask < (1 << e); ++mask) {
    std::vector<unsigned char> dir(e);
    for (int k = 0; k < e; ++k) dir[k] = (mask >> k) & 1;
    Orientation o(std::move(dir));
    if (is_acyclic(g, o)) out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

TEST_CASE("validate_matrix accepts A2 and rejects bad tables") {
  CoxeterGraph a2 = validate_matrix({{f(1), f(3)}, {f(3), f(1)}});
  CHECK(a2.rank() == 2);
  REQUIRE(a2.edges().size() == 1);
  CHECK(a2.edges()[0].m == f(3));
  CHECK(a2.adjacent(0, 1));

  CHECK_THROWS_WITH_AS(validate_matrix({{f(1), f(2)}, {f(2), f(1)}}),
                       doctest::Contains("Disconnected"), error);
  CHECK_THROWS_WITH_AS(validate_matrix({{f(1), f(3)}, {f(4), f(1)}}),
                       doctest::Contains("Asymmetric"), error);
  CHECK_THROWS_WITH_AS(validate_matrix({{f(2), f(3)}, {f(3), f(1)}}),
                       doctest::Contains("BadDiagonal"), error);
  CHECK_THROWS_WITH_AS(validate_matrix({{f(1), f(1)}, {f(1), f(1)}}),
                       doctest::Contains("OffDiagonalBelow2"), error);
  CHECK_THROWS_AS(validate_matrix({{f(1), f(3)}}), error);

  // the dense-matrix rank cap is enforced
  std::vector<std::vector<CoxEntry>> big(65, std::vector<CoxEntry>(65, f(3)));
  for (int i = 0; i < 65; ++i) big[i][i] = f(1);
  CHECK_THROWS_WITH_AS(validate_matrix(big), doctest::Contains("BadShape"),
                       error);
}

TEST_CASE("orientation_from_order directs edges later-to-earlier") {
  CoxeterGraph a2 = preset_graph("A", {"2"});
  Orientation o12 = orientation_from_order(a2, make_order(a2, {0, 1}));
  CHECK(arrow_from(a2, 1, 0, o12));  // arrow v2 -> v1
  Orientation o21 = orientation_from_order(a2, make_order(a2, {1, 0}));
  CHECK(arrow_from(a2, 0, 1, o21));

  CoxeterGraph a3 = preset_graph("A", {"3"});
  Orientation o = orientation_from_order(a3, make_order(a3, {1, 0, 2}));
  CHECK(arrow_from(a3, 0, 1, o));
  CHECK(arrow_from(a3, 2, 1, o));
  CHECK(sinks(a3, o) == std::vector<Vertex>{1});
}

TEST_CASE("order_from_orientation peels sinks, smallest index first") {
  CoxeterGraph a2 = preset_graph("A", {"2"});
  Orientation o = orientation_from_order(a2, make_order(a2, {0, 1}));
  CHECK(order_from_orientation(a2, o).seq == std::vector<Vertex>{0, 1});

  CoxeterGraph a3 = preset_graph("A", {"3"});
  Orientation in2 = orientation_from_order(a3, make_order(a3, {1, 0, 2}));
  CHECK(order_from_orientation(a3, in2).seq == std::vector<Vertex>{1, 0, 2});

  // cyclic triangle has no sink
  CoxeterGraph tri = preset_graph("affineA", {"2"});
  REQUIRE(tri.edges().size() == 3);
  std::vector<unsigned char> dir(3);
  for (size_t k = 0; k < 3; ++k) {
    const Edge& e = tri.edges()[k];
    dir[k] = (e.b == (e.a + 1) % 3) ? 1 : 0;  // 0->1->2->0
  }
  Orientation cyc{std::move(dir)};
  CHECK(!is_acyclic(tri, cyc));
  CHECK_THROWS_WITH_AS(order_from_orientation(tri, cyc),
                       doctest::Contains("CyclicOrientation"), error);
}

TEST_CASE("round trip between orders and acyclic orientations") {
  for (auto [name, param] : {std::pair{"A", "3"}, {"A", "4"}, {"D", "4"}}) {
    CoxeterGraph g = preset_graph(name, {param});
    for (const Orientation& o : acyclic_orientations(g)) {
      VertexOrder ord = order_from_orientation(g, o);
      CHECK(orientation_from_order(g, ord) == o);
    }
  }
  // triangle: 6 of 8 orientations are acyclic
  CoxeterGraph tri = preset_graph("affineA", {"2"});
  CHECK(acyclic_orientations(tri).size() == 6);
}

TEST_CASE("reflect_orientation flips arrows at one vertex") {
  CoxeterGraph a2 = preset_graph("A", {"2"});
  Orientation o = orientation_from_order(a2, make_order(a2, {0, 1}));
  Orientation r = reflect_orientation(a2, 0, o);
  CHECK(arrow_from(a2, 0, 1, r));
  CHECK(reflect_orientation(a2, 0, r) == o);  // involution

  // reflecting a sink or source of an acyclic orientation stays acyclic
  for (auto [name, param] : {std::pair{"A", "4"}, {"D", "4"}}) {
    CoxeterGraph g = preset_graph(name, {param});
    for (const Orientation& ori : acyclic_orientations(g)) {
      for (Vertex v : sinks(g, ori))
        CHECK(is_acyclic(g, reflect_orientation(g, v, ori)));
      for (Vertex v : sources(g, ori))
        CHECK(is_acyclic(g, reflect_orientation(g, v, ori)));
    }
  }
}

TEST_CASE("sinks and sources") {
  CoxeterGraph a2 = preset_graph("A", {"2"});
  Orientation o = orientation_from_order(a2, make_order(a2, {0, 1}));
  CHECK(sinks(a2, o) == std::vector<Vertex>{0});
  CHECK(sources(a2, o) == std::vector<Vertex>{1});

  // on a connected graph with n >= 2 no vertex is both sink and source
  for (auto [name, param] : {std::pair{"A", "3"}, {"B", "3"}}) {
    CoxeterGraph g = preset_graph(name, {param});
    for (const Orientation& ori : acyclic_orientations(g)) {
      auto sk = sinks(g, ori);
      auto sc = sources(g, ori);
      for (Vertex v : sk)
        CHECK(std::find(sc.begin(), sc.end(), v) == sc.end());
    }
  }
}

TEST_CASE("poset_leq is reachability") {
  CoxeterGraph a2 = preset_graph("A", {"2"});
  Orientation o = orientation_from_order(a2, make_order(a2, {0, 1}));
  CHECK(poset_leq(a2, 0, 0, o));
  CHECK(poset_leq(a2, 1, 0, o));
  CHECK(!poset_leq(a2, 0, 1, o));
  CHECK(principal_filter(a2, 1, o) == std::vector<Vertex>{0, 1});
  CHECK(principal_filter(a2, 0, o) == std::vector<Vertex>{0});
}

TEST_CASE("opposite reverses the quiver") {
  CoxeterGraph a2 = preset_graph("A", {"2"});
  Orientation o = orientation_from_order(a2, make_order(a2, {0, 1}));
  Orientation op = opposite(a2, o);
  CHECK(opposite(a2, op) == o);
  CHECK(sinks(a2, o) == sources(a2, op));
  // the opposite of the c-orientation is the c^{-1}-orientation
  CHECK(order_from_orientation(a2, op).seq == std::vector<Vertex>{1, 0});
}

TEST_CASE("preset catalog") {
  CoxeterMatrix a2 = preset("A", {"2"});
  CHECK(a2.at(0, 1) == f(3));

  CoxeterMatrix i2inf = preset("I2", {"inf"});
  CHECK(i2inf.at(0, 1).infinite());

  CoxeterMatrix b3 = preset("B", {"3"});
  CHECK(b3.at(0, 1) == f(3));
  CHECK(b3.at(1, 2) == f(4));

  CoxeterMatrix h4 = preset("H4");
  CHECK(h4.at(0, 1) == f(5));
  CHECK(h4.rank() == 4);

  CoxeterGraph d4 = preset_graph("D", {"4"});
  CHECK(d4.neighbors(1).size() == 3);  // the hub

  CoxeterGraph e8 = preset_graph("E8");
  CHECK(e8.edges().size() == 7);

  CoxeterGraph aff = preset_graph("affineA", {"2"});
  CHECK(aff.rank() == 3);
  CHECK(aff.edges().size() == 3);

  CoxeterMatrix c2t = preset("affineC2");
  CHECK(c2t.at(0, 1) == f(4));
  CHECK(c2t.at(1, 2) == f(4));

  CHECK(preset("infinite-dihedral").at(0, 1).infinite());

  CHECK_THROWS_WITH_AS(preset("Z", {"3"}), doctest::Contains("UnknownPreset"),
                       error);
  CHECK_THROWS_WITH_AS(preset("A", {"0"}), doctest::Contains("BadParams"),
                       error);
  CHECK_THROWS_WITH_AS(preset("I2", {"2"}), doctest::Contains("BadParams"),
                       error);
  CHECK_THROWS_WITH_AS(preset("D", {"3"}), doctest::Contains("BadParams"),
                       error);
}
