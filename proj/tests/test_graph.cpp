#include <doctest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "chromhom/errors.hpp"
#include "chromhom/graph.hpp"

using namespace chromhom;

namespace {

bool boost_planar(const Graph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(g.vertex_count());
  for (const auto& e : g.edges()) boost::add_edge(e.u - 1, e.v - 1, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

TEST_CASE("edge list parsing keeps multiplicities and comments") {
  const auto m = parse_graph("# triangle with extras\n3 5\n1 2\n2 3\n3 1\n1 2 # again\n2 2\n", GraphFormat::EdgeList);
  CHECK(m.n == 3);
  CHECK(m.edges.size() == 5);
  const auto [g, report] = normalize(m);
  CHECK(g.edge_count() == 3);
  CHECK(report.had_loop);
  CHECK(report.collapsed_multiedges == 1);
  CHECK_FALSE(report.all_clear());
}

TEST_CASE("malformed edge lists are rejected") {
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n", GraphFormat::EdgeList), Error);
  CHECK_THROWS_AS(parse_graph("3 1\n1 4\n", GraphFormat::EdgeList), Error);
  CHECK_THROWS_AS(parse_graph("x y\n", GraphFormat::EdgeList), Error);
  try {
    parse_graph("3 1\n0 1\n", GraphFormat::EdgeList);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("graph6 of standard graphs") {
  CHECK(encode_graph6(complete_graph(5)) == "D~{");
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  const auto k5 = normalize(parse_graph("D~{", GraphFormat::Graph6)).first;
  CHECK(k5 == complete_graph(5));
  CHECK_THROWS_AS(parse_graph("D~", GraphFormat::Graph6), Error);
}

TEST_CASE("graph6 round trip over all connected graphs up to six vertices") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : connected_graphs(n)) {
      const auto back = normalize(parse_graph(encode_graph6(g), GraphFormat::Graph6)).first;
      CHECK(back == g);
      const auto again = normalize(parse_graph(to_edge_list(g), GraphFormat::EdgeList)).first;
      CHECK(again == g);
    }
}

TEST_CASE("connected graph counts up to isomorphism") {
  // OEIS A001349
  const int expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto gs = connected_graphs(n);
    CHECK(static_cast<int>(gs.size()) == expected[n - 1]);
    for (const auto& g : gs) CHECK(is_connected(g));
  }
}

TEST_CASE("edge pairs split by shared vertices") {
  const auto p = edge_pairs_by_type(complete_graph(4));
  CHECK(p.nonconsecutive.size() == 3);
  CHECK(p.consecutive.size() == 12);
  const auto k5 = edge_pairs_by_type(complete_graph(5));
  CHECK(k5.nonconsecutive.size() == 15);
}

TEST_CASE("subdivide and relabel") {
  const auto g = subdivide(complete_graph(3), Edge::make(1, 2));
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(1, 4));
  CHECK(g.has_edge(2, 4));
  CHECK_FALSE(g.has_edge(1, 2));
  const int perm[] = {4, 3, 2, 1};
  const auto r = relabel(g, perm);
  CHECK(r.has_edge(4, 1));
  CHECK(r.has_edge(3, 1));
  CHECK(r.has_edge(4, 2));
}

TEST_CASE("planarity agrees with Boyer-Myrvold on all connected graphs up to seven vertices") {
  int nonplanar = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : connected_graphs(n)) {
      const bool planar = is_planar(g);
      CHECK(planar == boost_planar(g));
      if (!planar) {
        ++nonplanar;
        const auto w = find_kuratowski_subdivision(g);
        REQUIRE(w.has_value());
        CHECK(verify_witness(g, *w));
      }
    }
  // connected planar graphs: 20, 99, 646 on 5, 6, 7 vertices (OEIS A003094)
  CHECK(nonplanar == (21 - 20) + (112 - 99) + (853 - 646));
}

TEST_CASE("Kuratowski witnesses on named graphs") {
  const auto w5 = find_kuratowski_subdivision(complete_graph(5));
  REQUIRE(w5);
  CHECK(w5->kind == KuratowskiKind::K5);
  const int l[] = {1, 2, 3}, r[] = {4, 5, 6};
  const auto w33 = find_kuratowski_subdivision(complete_bipartite(l, r));
  REQUIRE(w33);
  CHECK(w33->kind == KuratowskiKind::K33);
  const auto pw = find_kuratowski_subdivision(petersen_graph());
  REQUIRE(pw);
  CHECK(verify_witness(petersen_graph(), *pw));
  CHECK_FALSE(find_kuratowski_subdivision(cycle_graph(6)));
  CHECK(is_planar(path_graph(4)));
}
