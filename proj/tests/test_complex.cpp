#include <doctest.h>

#include <string>

#include "chromhom/errors.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/specht_complex.hpp"
#include "chromhom/tabloid_oracle.hpp"

using namespace chromhom;

namespace {

struct Frozen {
  const char* graph6;
  const char* group;
  std::size_t dim1, dim2;
};

// k = 2 restricted homology, computed from the group-algebra matrices.
const Frozen kFrozenN4N5[] = {
    {"Cs", "Z", 3, 0},    {"Ck", "0", 3, 1},    {"C{", "Z", 4, 1},    {"C]", "0", 4, 2},
    {"C}", "Z", 5, 2},    {"C~", "Z", 6, 3},    {"Ds_", "Z^3", 8, 0}, {"Dk_", "Z", 8, 2},
    {"DY_", "0", 8, 3},   {"D{_", "Z^3", 10, 2}, {"Dy_", "Z^2", 10, 3}, {"D]_", "Z", 10, 4},
    {"Dj_", "Z", 10, 4},  {"DLo", "0", 10, 5},  {"D}_", "Z^3", 12, 4}, {"D]o", "Z", 12, 6},
    {"Dz_", "Z^2", 12, 5}, {"Dto", "Z^2", 12, 5}, {"Dlo", "Z", 12, 6},  {"D}o", "Z^3", 14, 6},
    {"D~_", "Z^3", 14, 6}, {"D|o", "Z^2", 14, 7}, {"D^o", "Z", 14, 8},  {"D~o", "Z^2", 16, 9},
    {"Dvw", "Z", 16, 10}, {"D~w", "Z", 18, 12}, {"D~{", "Z/2", 20, 15},
};

Graph from_graph6(const char* s) { return normalize(parse_graph(s, GraphFormat::Graph6)).first; }

}  // namespace

TEST_CASE("restricted bases for K5") {
  const auto b = restricted_bases(complete_graph(5), Partition::two_column(5, 2));
  CHECK(b.basis0.size() == 5);
  CHECK(b.basis1.size() == 20);
  CHECK(b.basis2.size() == 15);
  CHECK(b.copies1 == 2);
  CHECK(b.copies2 == 1);
  CHECK(b.pairs.size() == 15);
}

TEST_CASE("restricted homology matches frozen values on four and five vertices") {
  for (const auto& f : kFrozenN4N5) {
    CAPTURE(f.graph6);
    const Graph g = from_graph6(f.graph6);
    const auto c = RestrictedComplex::build(g, Partition::two_column(g.vertex_count(), 2));
    CHECK(c.basis1().size() == f.dim1);
    CHECK(c.basis2().size() == f.dim2);
    CHECK(homology_group(c.d1(), c.d2()).to_string() == std::string(f.group));
  }
}

TEST_CASE("symbolic differentials equal the group-algebra oracle") {
  for (const char* s : {"D~{", "D~w", "Dvw", "C~", "E~~w", "E{Sw"}) {
    CAPTURE(s);
    const Graph g = from_graph6(s);
    const auto shape = Partition::two_column(g.vertex_count(), 2);
    const auto c = RestrictedComplex::build(g, shape);
    const auto [d1, d2] = oracle::oracle_restricted_matrices(g, shape);
    CHECK(d1 == c.d1());
    CHECK(d2 == c.d2());
  }
}

TEST_CASE("whole-complex oracle sees torsion for K5 and none for K4") {
  const auto h5 = oracle::full_h1_small(complete_graph(5));
  CHECK(h5.betti == 24);
  CHECK(h5.invariant_factors == std::vector<mpz_class>(5, 2));
  const auto h4 = oracle::full_h1_small(complete_graph(4));
  CHECK(h4.betti == 11);
  CHECK_FALSE(h4.has_torsion());
  CHECK_THROWS_AS(oracle::full_h1_small(complete_graph(6)), Error);
}

TEST_CASE("flipping the edge sign convention negates d2") {
  ComplexOptions opts;
  opts.flip_edge_signs = true;
  const auto shape = Partition::two_column(5, 2);
  const auto flipped = RestrictedComplex::build(complete_graph(5), shape, opts);
  const auto plain = RestrictedComplex::build(complete_graph(5), shape);
  IntMatrix neg = plain.d2();
  for (std::size_t r = 0; r < neg.rows(); ++r) neg.negate_row(r);
  CHECK(flipped.d2() == neg);
  CHECK(flipped.d1() == plain.d1());
}

TEST_CASE("index lookups") {
  const auto c = RestrictedComplex::build(complete_graph(5), Partition::two_column(5, 2));
  CHECK(c.index1(0, 0) == 0);
  CHECK(c.index1(0, 1) == 1);
  CHECK(c.index1(1, 0) == 2);
  // edges 12 and 13 share vertex 1
  CHECK_THROWS_AS(c.index2(0, 1, 0), Error);
  CHECK_NOTHROW(c.index2(0, 7, 0));
}

TEST_CASE("exactness for k = 3 on six and seven vertices") {
  for (int n = 6; n <= 7; ++n) {
    const auto c = RestrictedComplex::build(complete_graph(n), Partition::two_column(n, 3));
    CHECK((c.d1() * c.d2()).is_zero());
  }
}
