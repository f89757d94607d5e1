#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "schubert/combinatorics.hpp"

using namespace schubert;

namespace {

// brute force P(I,h): all compositions of h into k parts, filtered by the
// interlacing constraints
std::set<std::vector<int>> pieri_brute(const IndexSeq& I, int h) {
  int k = I.k();
  std::set<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j == k) {
      if (rem != 0) return;
      bool ok = true;
      for (int t = 0; t + 1 < k && ok; ++t) ok = I.at(t) + cur[t] < I.at(t + 1);
      if (ok) out.insert(cur);
      return;
    }
    for (int t = 0; t <= rem; ++t) {
      cur[j] = t;
      self(self, j + 1, rem - t);
    }
  };
  rec(rec, 0, h);
  return out;
}

}  // namespace

TEST_CASE("index sequence validation and parsing") {
  CHECK_THROWS_AS(IndexSeq({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSeq({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSeq(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSeq({0, 1}), std::invalid_argument);
  CHECK(IndexSeq::parse("1,3") == IndexSeq({1, 3}));
  CHECK(IndexSeq::parse(" 2 , 5 ") == IndexSeq({2, 5}));
  CHECK_THROWS_AS(IndexSeq::parse("1,x"), std::invalid_argument);
  CHECK(IndexSeq({1, 3}).to_string() == "1,3");
}

TEST_CASE("weight") {
  CHECK(weight(IndexSeq({1, 2, 3})) == 0);
  CHECK(weight(IndexSeq({2, 3, 5})) == 4);
  CHECK(weight(IndexSeq({1, 3})) == 1);
}

TEST_CASE("pieri support examples") {
  CHECK(pieri_support(IndexSeq({2, 5}), 0) == std::vector<std::vector<int>>{{0, 0}});
  CHECK(pieri_support(IndexSeq({1, 2}), 1) == std::vector<std::vector<int>>{{0, 1}});
  auto p13 = pieri_support(IndexSeq({1, 3}), 1);
  std::set<std::vector<int>> got(p13.begin(), p13.end());
  CHECK(got == std::set<std::vector<int>>{{1, 0}, {0, 1}});
}

TEST_CASE("pieri support agrees with the brute-force composition scan") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (const IndexSeq& I : index_set(n, k))
        for (int h = 0; h <= 2 * n; ++h) {
          auto fast = pieri_support(I, h);
          std::set<std::vector<int>> fset(fast.begin(), fast.end());
          CHECK(fset.size() == fast.size());  // distinct H
          CHECK(fset == pieri_brute(I, h));
          std::set<IndexSeq> shifts;
          for (const auto& H : fast) {
            IndexSeq J = shifted(I, H);  // throws unless strictly increasing
            CHECK(weight(J) == weight(I) + h);
            shifts.insert(J);
          }
          CHECK(shifts.size() == fast.size());  // distinct I+H
        }
}

TEST_CASE("bitstring encoding") {
  CHECK(to_bitstring(IndexSeq({1, 3}), 4).to_string() == "0101");
  CHECK(to_bitstring(IndexSeq({1, 2, 3}), 5).to_string() == "00011");
  CHECK_THROWS_AS(to_bitstring(IndexSeq({1, 5}), 4), std::invalid_argument);
  CHECK(from_bitstring(Bitstring::parse("0101")) == IndexSeq({1, 3}));
  for (const IndexSeq& I : index_set(4, 2)) CHECK(from_bitstring(to_bitstring(I, 4)) == I);
}

TEST_CASE("index set ordering is weight then lexicographic") {
  auto basis = index_set(4, 2);
  std::vector<IndexSeq> expect = {IndexSeq({1, 2}), IndexSeq({1, 3}), IndexSeq({1, 4}),
                                  IndexSeq({2, 3}), IndexSeq({2, 4}), IndexSeq({3, 4})};
  CHECK(basis == expect);
  CHECK(binomial(6, 3) == 20);
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) CHECK(long(index_set(n, k).size()) == binomial(n, k));
}
