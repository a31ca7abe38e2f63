#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "chromhom/errors.hpp"
#include "chromhom/tableaux.hpp"
#include "chromhom/tabloid_oracle.hpp"

using namespace chromhom;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long hook_length_count(const std::vector<int>& parts) {
  std::vector<int> conj(parts.empty() ? 0 : parts[0], 0);
  for (int p : parts)
    for (int c = 0; c < p; ++c) ++conj[c];
  long hooks = 1;
  int n = 0;
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (int c = 0; c < parts[r]; ++c) {
      hooks *= (parts[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
      ++n;
    }
  return factorial(n) / hooks;
}

void partitions(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

bool is_standard(const Numbering& t) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] > rows[r + 1][c]) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("partition validation and two-column shapes") {
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  const auto p = Partition::two_column(7, 3);
  CHECK(std::vector<int>(p.parts().begin(), p.parts().end()) == std::vector<int>{2, 2, 2, 1});
  CHECK(p.size() == 7);
  CHECK(p.two_column_k() == 3);
  CHECK(Partition({3, 1}).two_column_k() == -1);
}

TEST_CASE("standard tableau counts match the hook length formula up to n = 7") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> cur;
    std::vector<std::vector<int>> all;
    partitions(n, n, cur, all);
    long total_sq = 0;
    for (const auto& parts : all) {
      const auto syt = enumerate_syt(Partition(parts));
      CHECK(static_cast<long>(syt.size()) == hook_length_count(parts));
      for (std::size_t i = 0; i < syt.size(); ++i) {
        CHECK(is_standard(syt[i]));
        if (i) CHECK(total_order_less(syt[i - 1], syt[i]));
      }
      total_sq += static_cast<long>(syt.size()) * static_cast<long>(syt.size());
    }
    CHECK(total_sq == factorial(n));
  }
}

TEST_CASE("Kostka numbers") {
  CHECK(enumerate_ssyt(Partition({2, 2, 1}), Partition({2, 1, 1, 1})).size() == 2);
  CHECK(enumerate_ssyt(Partition({2, 2, 1}), Partition({2, 2, 1})).size() == 1);
  CHECK(enumerate_ssyt(Partition({3, 2, 1}), Partition({1, 1, 1, 1, 1, 1})).size() == 16);
  CHECK(enumerate_ssyt(Partition({3, 2}), Partition({2, 2, 1})).size() == 2);
  CHECK(enumerate_ssyt(Partition({2, 2}), Partition({3, 1})).empty());
  // K_{(2,2,2),(2,2,1,1)} = 1, K_{(2,2,1,1),(2,1,1,1,1)} = 3
  CHECK(enumerate_ssyt(Partition({2, 2, 2}), Partition({2, 2, 1, 1})).size() == 1);
  CHECK(enumerate_ssyt(Partition({2, 2, 1, 1}), Partition({2, 1, 1, 1, 1})).size() == 3);
}

TEST_CASE("total order compares the topmost differing row at its rightmost differing column") {
  const Numbering a({{1, 3}, {2, 4}, {5}});
  const Numbering b({{1, 2}, {3, 4}, {5}});
  CHECK(total_order_less(b, a));
  CHECK_FALSE(total_order_less(a, b));
  const Numbering c({{1, 4}, {2, 3}, {5}});
  const Numbering d({{2, 3}, {1, 4}, {5}});
  CHECK(total_order_less(d, c));  // top row differs in both columns; rightmost decides
}

TEST_CASE("canonical form signs") {
  auto s = canonicalize(Numbering({{4, 3}, {1, 2}, {5}}));
  CHECK(s.sign == 1);
  CHECK(s.numbering == Numbering({{1, 2}, {3, 4}, {5}}));
  s = canonicalize(Numbering({{1, 2}, {5}, {3}, {4}}));
  CHECK(s.sign == 1);  // a 3-cycle of single boxes
  CHECK(s.numbering == Numbering({{1, 2}, {3}, {4}, {5}}));
  s = canonicalize(Numbering({{1, 2}, {4}, {3}, {5}}));
  CHECK(s.sign == -1);
  CHECK(s.numbering == Numbering({{1, 2}, {3}, {4}, {5}}));
  s = canonicalize(Numbering({{3, 4}, {1, 2}, {5}}), 1);
  CHECK(s.sign == 1);
  CHECK(s.numbering == Numbering({{3, 4}, {1, 2}, {5}}));
  s = canonicalize(Numbering({{3, 4}, {5}, {1}, {2}}), 1);
  CHECK(s.sign == 1);
  CHECK(s.numbering == Numbering({{3, 4}, {1}, {2}, {5}}));
  s = canonicalize(Numbering({{3, 4}, {2, 5}, {1}}), 1);
  CHECK(s.sign == 1);
  CHECK(s.numbering == Numbering({{3, 4}, {2, 5}, {1}}));
}

TEST_CASE("subgraph numbering and standardization") {
  const Graph g = complete_graph(5);
  const Edge e[] = {Edge{2, 4}};
  const auto t = numbering_of_subgraph(g, e);
  CHECK(t == Numbering({{2, 4}, {1}, {3}, {5}}));
  const auto x = standardize(Filling({{1, 1}, {2, 3}, {4}}), t);
  CHECK(x == Numbering({{2, 4}, {1, 3}, {5}}));
  CHECK_THROWS_AS(standardize(Filling({{1, 1}, {2, 2}, {3}}), t), Error);
}

TEST_CASE("pi terms carry (-1)^j") {
  const auto terms = pi_terms(Numbering({{1, 4}, {2, 3}, {5}}), 1, 2);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].sign == 1);
  CHECK(terms[0].numbering.rows()[0] == std::vector<int>{2, 3});
  const auto one = pi_terms(Numbering({{1, 4}, {2, 3}, {5}}), 1, 1);
  CHECK(one.size() == 2);
  for (const auto& t : one) CHECK(t.sign == -1);
}

namespace {

// The Specht vector indexed by t, written against a fixed reference numbering.
oracle::GroupAlgebraVector indexed(const Numbering& t, const Numbering& ref) { return oracle::specht_vector(t, ref); }

void compare_with_oracle(const Partition& shape, bool fallback, std::mt19937& rng) {
  const auto syt = enumerate_syt(shape);
  const Numbering& ref = syt.front();
  std::vector<oracle::GroupAlgebraVector> basis;
  for (const auto& b : syt) basis.push_back(indexed(b, ref));
  std::vector<int> perm(shape.size());
  std::iota(perm.begin(), perm.end(), 1);
  StraightenOptions opts;
  opts.oracle_fallback = fallback;
  for (int trial = 0; trial < 12; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const Numbering t = syt[trial % syt.size()].relabeled(perm);
    CAPTURE(t.to_string());
    NumberingVector v;
    v.add(t, 1);
    const auto got = straighten(v, StraighteningBasis(syt, 0), opts);
    CHECK(got == oracle::expand_in_basis(indexed(t, ref), basis));
  }
}

}  // namespace

TEST_CASE("two-column straightening agrees with group-algebra expansion") {
  std::mt19937 rng(20261019);
  for (const auto& parts : std::vector<std::vector<int>>{{2, 2, 1}, {2, 2}, {2, 2, 1, 1}, {2, 2, 2}, {2, 2, 2, 1}})
    compare_with_oracle(Partition(parts), false, rng);
}

TEST_CASE("wider shapes straighten through the oracle fallback") {
  std::mt19937 rng(5);
  for (const auto& parts : std::vector<std::vector<int>>{{3, 2}, {3, 2, 1}})
    compare_with_oracle(Partition(parts), true, rng);
}
