#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "cplstab/index_triple.hpp"
#include "cplstab/partition.hpp"
#include "cplstab/set_partition.hpp"

using namespace cplstab;

namespace {

long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// all set partitions of [r] via restricted growth strings; the independent
// oracle for the typed enumeration
std::vector<SetPartition> all_set_partitions(int r) {
  std::vector<SetPartition> out;
  if (r == 0) {
    out.push_back(SetPartition({}));
    return out;
  }
  std::vector<int> rgs(static_cast<std::size_t>(r), 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == r) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(maxb) + 1);
      for (int t = 0; t < r; ++t) {
        blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(t)])].push_back(t + 1);
      }
      out.push_back(SetPartition(blocks));
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace

TEST_CASE("partition accessors and validation") {
  Partition lam({3, 2, 2, 1});
  CHECK(lam.weight() == 8);
  CHECK(lam.support() == 4);
  CHECK(lam.mult(2) == 2);
  CHECK(lam.mult(5) == 0);
  CHECK(lam.part(1) == 3);
  CHECK(lam.part(9) == 0);
  CHECK(lam.str() == "3,2,2,1");
  CHECK(Partition{}.str() == "");
  CHECK(Partition::parse("3,2,2,1") == lam);
  CHECK(Partition::parse("") == Partition{});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
}

TEST_CASE("partitions in a box") {
  auto empty_box = partitions_in_box(0, 5);
  REQUIRE(empty_box.size() == 1);
  CHECK(empty_box[0].empty());

  auto one_one = partitions_in_box(1, 1);
  REQUIRE(one_one.size() == 2);
  CHECK(one_one[0].empty());
  CHECK(one_one[1] == Partition({1}));

  auto two_two = partitions_in_box(2, 2);
  std::vector<Partition> want{Partition{},       Partition({1}),    Partition({2}),
                              Partition({1, 1}), Partition({2, 1}), Partition({2, 2})};
  CHECK(two_two == want);

  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      auto all = partitions_in_box(a, b);
      CHECK(static_cast<long long>(all.size()) == binom_ll(a + b, a));
      std::set<std::vector<int>> seen;
      for (const auto& lam : all) {
        CHECK(lam.fits_in_box(a, b));
        CHECK(seen.insert(lam.parts()).second);
      }
      CHECK(std::is_sorted(all.begin(), all.end(), canonical_less));
    }
  }
}

TEST_CASE("exact-weight partition lists and the pentagonal count") {
  for (int d = 0; d <= 20; ++d) {
    CHECK(static_cast<long long>(partitions_of(d).size()) == partition_count(d));
    for (const Partition& p : partitions_of(d)) CHECK(p.weight() == d);
  }
  CHECK(partition_count(3) == 3);
  CHECK(partition_count(6) == 11);
}

TEST_CASE("set partitions of a given type") {
  auto three_21 = set_partitions_of_type(3, Partition({2, 1}));
  REQUIRE(three_21.size() == 3);
  CHECK(std::find(three_21.begin(), three_21.end(), SetPartition({{1, 2}, {3}})) != three_21.end());
  CHECK(std::find(three_21.begin(), three_21.end(), SetPartition({{1, 3}, {2}})) != three_21.end());
  CHECK(std::find(three_21.begin(), three_21.end(), SetPartition({{2, 3}, {1}})) != three_21.end());

  auto two_11 = set_partitions_of_type(2, Partition({1, 1}));
  REQUIRE(two_11.size() == 1);
  CHECK(two_11[0] == SetPartition({{1}, {2}}));

  auto three_3 = set_partitions_of_type(3, Partition({3}));
  REQUIRE(three_3.size() == 1);
  CHECK(three_3[0] == SetPartition({{1, 2, 3}}));

  CHECK_THROWS_AS(set_partitions_of_type(4, Partition({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition({{1, 2}, {2}}), std::invalid_argument);

  // cross-check against the naive enumeration for r <= 7
  for (int r = 0; r <= 7; ++r) {
    auto everything = all_set_partitions(r);
    for (const Partition& pi : partitions_of(r)) {
      auto typed = set_partitions_of_type(r, pi);
      long long expect = 1;
      for (int i = 2; i <= r; ++i) expect *= i;
      for (int part : pi.parts()) {
        for (int i = 2; i <= part; ++i) expect /= i;
      }
      for (int j = 1; j <= r; ++j) {
        int m = pi.mult(j);
        for (int i = 2; i <= m; ++i) expect /= i;
      }
      CHECK(static_cast<long long>(typed.size()) == expect);

      long long naive = 0;
      for (const SetPartition& sp : everything) {
        if (sp.type() == pi) {
          ++naive;
          CHECK(std::find(typed.begin(), typed.end(), sp) != typed.end());
        }
      }
      CHECK(naive == static_cast<long long>(typed.size()));
    }
  }
}

TEST_CASE("index triples: membership, complement, embedding, stability") {
  IndexTriple xi = IndexTriple::parse("4:2:2,1");
  CHECK(xi.n == 4);
  CHECK(xi.k == 2);
  CHECK(xi.lam == Partition({2, 1}));
  CHECK(xi.valid());
  CHECK(xi.str() == "4:2:2,1");
  CHECK(IndexTriple::parse("4:2:").lam.empty());
  CHECK_THROWS_AS(IndexTriple::parse("4:2"), std::invalid_argument);
  CHECK_FALSE(IndexTriple::parse("4:2:3,1").valid());
  CHECK_FALSE(IndexTriple{2, 1, Partition({2})}.valid());
  CHECK_THROWS_AS(complement(IndexTriple{2, 1, Partition({2})}), std::invalid_argument);

  CHECK(complement(xi) == IndexTriple{4, 2, Partition({1})});
  for (int n = 0; n <= 6; ++n) {
    for (const IndexTriple& t : enum_triples(n)) {
      IndexTriple c = complement(t);
      CHECK(c.valid());
      CHECK(complement(c) == t);
    }
  }
  IndexTriple full = complement(IndexTriple{5, 2, Partition{}});
  CHECK(full.lam == Partition({2, 2, 2}));

  CHECK(embed_next(xi) == IndexTriple{6, 3, Partition({2, 1})});
  CHECK(embed_next(IndexTriple{0, 0, Partition{}}) == IndexTriple{2, 1, Partition{}});

  CHECK_FALSE(is_stable(xi));
  CHECK(is_stable(IndexTriple{6, 3, Partition({2, 1})}));
  CHECK(is_stable(IndexTriple{1, 1, Partition{}}));
  for (int n = 0; n <= 8; ++n) {
    for (const IndexTriple& t : enum_triples(n)) {
      if (is_stable(t)) CHECK(is_stable(embed_next(t)));
    }
  }
}

TEST_CASE("triple enumerations") {
  for (int n = 0; n <= 10; ++n) {
    auto all = enum_triples(n);
    CHECK(static_cast<long long>(all.size()) == (1LL << n));
    for (const auto& t : all) CHECK(t.valid());
  }
  CHECK(enum_triples_mu(0, 3, 8).size() == 3);
  CHECK(enum_triples_mu(0, 3, 6).size() == 3);
  CHECK(enum_triples_mu(5, 1, 8).empty());
  CHECK(enum_triples_mu(-4, 0, 8).size() == 1);
  CHECK_THROWS_AS(enum_triples_mu(0, 1, 7), std::invalid_argument);
}
