#include <doctest.h>

#include <random>

#include "chromhom/errors.hpp"
#include "chromhom/integer_homology.hpp"

using namespace chromhom;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_unimodular(const IntMatrix& m) {
  const mpz_class d = determinant(m);
  return d == 1 || d == -1;
}

bool is_smith(const IntMatrix& s) {
  mpz_class prev = 1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i != j && s(i, j) != 0) return false;
      if (i != j) continue;
      const mpz_class& x = s(i, i);
      if (x < 0) return false;
      if (x == 0) {
        zero_seen = true;
        continue;
      }
      if (zero_seen || x % prev != 0) return false;
      prev = x;
    }
  return true;
}

}  // namespace

TEST_CASE("determinant by fraction-free elimination") {
  CHECK(determinant(IntMatrix::from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(determinant(IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == 4);
}

TEST_CASE("Smith form of small known matrices") {
  const auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto f = smith_normal_form(m);
  CHECK(f.diagonal() == std::vector<mpz_class>{2, 6, 12});
  CHECK(f.U * m * f.V == f.S);
  CHECK(is_unimodular(f.U));
  CHECK(is_unimodular(f.V));

  CHECK(invariant_factors(IntMatrix::from_rows({{2, 0}, {0, 3}})) == std::vector<mpz_class>{1, 6});
  CHECK(invariant_factors(IntMatrix::from_rows({{1, 1}, {1, -1}})) == std::vector<mpz_class>{1, 2});
  CHECK(invariant_factors(IntMatrix(3, 2)).empty());
}

TEST_CASE("Smith form transforms on random rectangular matrices") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto m = random_matrix(rng, r, c, 5);
    if (t % 4 == 0 && r > 1)  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);
    const auto f = smith_normal_form(m);
    CHECK(is_smith(f.S));
    CHECK(f.U * m * f.V == f.S);
    CHECK(is_unimodular(f.U));
    CHECK(is_unimodular(f.V));
  }
}

TEST_CASE("Hermite form, kernel and rank") {
  const auto m = IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(rank(m) == 2);
  const auto k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  const auto col = k.column(0);
  CHECK(((col[0] == 1 && col[1] == -2 && col[2] == 1) || (col[0] == -1 && col[1] == 2 && col[2] == -1)));

  const auto f = column_hermite_form(m);
  CHECK(m * f.V == f.H);
  CHECK(f.V * f.V_inverse == IntMatrix::identity(3));
  CHECK(f.rank() == 2);
}

TEST_CASE("integer solutions exist only when the lattice allows") {
  const auto m = IntMatrix::from_rows({{2, 0}, {0, 2}});
  CHECK_FALSE(solve_integer(m, {1, 0}).has_value());
  const auto x = solve_integer(m, {4, -2});
  REQUIRE(x);
  CHECK(m * *x == IntVector{4, -2});
  const auto n = IntMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(solve_integer(n, {1, 2}).has_value());
  CHECK(solve_integer(n, {3, 3}).has_value());
}

TEST_CASE("homology of small complexes") {
  // Z --2--> Z --0--> Z: H_1 = Z/2 in the middle
  const auto d1 = IntMatrix(1, 1);
  const auto d2 = IntMatrix::from_rows({{2}});
  const auto h = homology_group(d1, d2);
  CHECK(h.betti == 0);
  CHECK(h.has_z2());
  CHECK(h.to_string() == "Z/2");

  const auto a = IntMatrix::from_rows({{1, -1, 0}});
  const auto b = IntMatrix::from_rows({{1}, {1}, {3}});
  const auto h2 = homology_group(a, b);
  CHECK(h2.betti == 1);
  CHECK(h2.invariant_factors.empty());
  CHECK(h2.to_string() == "Z");

  CHECK(homology_group(IntMatrix(1, 2), IntMatrix(2, 0)).to_string() == "Z^2");
  CHECK_THROWS_AS(homology_group(IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})), Error);
  CHECK_THROWS_AS(homology_group(IntMatrix(1, 2), IntMatrix(3, 1)), Error);

  HomologyResult odd{0, {3, 9}};
  CHECK_FALSE(odd.has_z2());
  HomologyResult even{0, {3, 6}};
  CHECK(even.has_z2());
}
