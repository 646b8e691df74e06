#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "quatdirac/chains.hpp"

using namespace quatdirac;

namespace {

ChainSet worked_example() {
  return ChainSet({Chain::s(15, 13), Chain::s(14, 6), Chain::s(2), Chain::u(4)});
}

}  // namespace

TEST_CASE("chain construction") {
  const Chain c = Chain::s(14, 6);
  CHECK(c.length() == 5);
  CHECK(c.entries() == std::vector<Int>{14, 12, 10, 8, 6});
  CHECK(c.contains(10));
  CHECK_FALSE(c.contains(11));
  CHECK(c.to_string() == "[14,12,10,8,6]_s");
  CHECK(Chain::u(4).to_string() == "[7,5,3,1]_u");
  CHECK_THROWS_AS(Chain(3, 5, ChainKind::s), std::invalid_argument);
  CHECK_THROWS_AS(Chain(5, 2, ChainKind::s), std::invalid_argument);
  CHECK_THROWS_AS(Chain(5, 3, ChainKind::u), std::invalid_argument);
  CHECK_THROWS_AS(Chain(2, 0, ChainKind::s), std::invalid_argument);
}

TEST_CASE("chain sets") {
  CHECK_THROWS_AS(ChainSet({Chain::s(5, 3), Chain::u(2)}), std::invalid_argument);
  CHECK_THROWS_AS(ChainSet({Chain::u(1), Chain::u(1)}), std::invalid_argument);
  const ChainSet a({Chain::s(2), Chain::s(15, 13), Chain::u(4), Chain::s(14, 6)});
  CHECK(a == worked_example());
  CHECK(a.rank() == 12);
  CHECK(a.chain_count() == 4);
  CHECK(a.to_string() == "{[15,13]_s, [14,12,10,8,6]_s, [2]_s, [7,5,3,1]_u}");
  CHECK(ChainSet().to_string() == "{}");
}

TEST_CASE("linking") {
  CHECK(linked(Chain::s(15, 13), Chain::s(14, 6)));
  CHECK_FALSE(linked(Chain::s(3), Chain::u(1)));
  // even u-chains belong to GL(n,R); the {[2k..2]_u, [1]_s} clause is unreachable
  CHECK_THROWS_AS(Chain(4, 2, ChainKind::u), std::invalid_argument);
  CHECK(link_rule(Chain::s(4, 2), Chain::s(1)) == LinkRule::none);
  CHECK(linked(Chain::s(14, 6), Chain::u(4)));
  CHECK(linked(Chain::u(4), Chain::s(2)));
  CHECK_FALSE(linked(Chain::s(9, 7), Chain::u(2)));
  // overlapping entries never link
  CHECK_FALSE(linked(Chain::s(5, 3), Chain::s(3, 1)));
}

TEST_CASE("interlacing") {
  CHECK(interlaced(worked_example()));
  CHECK(u_interlaced(worked_example()));
  CHECK(interlaced(ChainSet({Chain::s(9, 7)})));
  CHECK_FALSE(interlaced(ChainSet({Chain::s(9, 7), Chain::u(2)})));
  CHECK(u_interlaced(ChainSet({Chain::u(2), Chain::s(2)})));
  CHECK_FALSE(u_interlaced(ChainSet({Chain::s(3, 1)})));
  CHECK(u_interlaced(ChainSet({Chain::u(2)})));
}

TEST_CASE("chain <-> parameter dictionary") {
  const RepParams p = rep_of_chains(worked_example());
  REQUIRE(p.aq.size() == 3);
  CHECK(p.aq[0] == AqFactor{2, 12});
  CHECK(p.aq[1] == AqFactor{5, 5});
  CHECK(p.aq[2] == AqFactor{1, 1});
  CHECK(p.r == 4);
  CHECK(chains_of_rep(p) == worked_example());
  CHECK(chains_of_rep(RepParams{{{2, 12}}, 0}) == ChainSet({Chain::s(15, 13)}));
  CHECK(chains_of_rep(RepParams{{{1, 1}}, 0}) == ChainSet({Chain::s(2)}));
  CHECK(chains_of_rep(RepParams{{}, 4}) == ChainSet({Chain::u(4)}));
  CHECK_THROWS(chains_of_rep(RepParams{{{2, 0}, {1, 2}}, 0}));  // [3,1] and [3] overlap
  CHECK_THROWS_AS(RepParams({{{0, 1}}, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(RepParams({{{1, -1}}, 0}).validate(), std::invalid_argument);

  CHECK(infchar(worked_example()).restricted() == Weight{15, 14, 13, 12, 10, 8, 7, 6, 5, 3, 2, 1});
  CHECK(infchar(ChainSet({Chain::u(1)})).restricted() == Weight{1});
  CHECK(infchar(ChainSet({Chain::u(2), Chain::s(2)})).restricted() == Weight{3, 2, 1});
}

TEST_CASE("decompositions") {
  const auto d31 = decompositions(InfChar::from_restricted(Weight{3, 1}));
  const std::set<ChainSet> expected{ChainSet({Chain::u(2)}), ChainSet({Chain::s(3, 1)}),
                                    ChainSet({Chain::s(3), Chain::u(1)}),
                                    ChainSet({Chain::s(3), Chain::s(1)})};
  CHECK(d31.size() == 4);
  CHECK(std::set<ChainSet>(d31.begin(), d31.end()) == expected);
  CHECK(decompositions(InfChar::from_restricted(Weight{1})).size() == 2);
  CHECK(decompositions(InfChar::from_restricted(Weight{})).size() == 1);

  // Exhaustive over small infinitesimal characters: every output reproduces
  // Lambda, round-trips through parameters, and the list is sorted and unique.
  for (unsigned mask = 1; mask < (1U << 9); ++mask) {
    std::vector<Int> lam;
    for (int v = 9; v >= 1; --v) {
      if (mask >> (v - 1) & 1U) lam.push_back(v);
    }
    const InfChar L = InfChar::from_restricted(Weight(lam));
    const auto sets = decompositions(L);
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
    for (const ChainSet& cs : sets) {
      CHECK(infchar(cs) == L);
      CHECK(chains_of_rep(rep_of_chains(cs)) == cs);
      CHECK(ChainSet(cs.all()) == cs);
    }
  }
}

TEST_CASE("FS-scattered enumeration") {
  CHECK(enumerate_fs_scattered(2) == std::vector<ChainSet>{ChainSet({Chain::u(2)})});
  const auto s3 = enumerate_fs_scattered(3);
  CHECK(std::set<ChainSet>(s3.begin(), s3.end()) ==
        std::set<ChainSet>{ChainSet({Chain::u(3)}), ChainSet({Chain::u(2), Chain::s(2)})});
  const auto s4 = enumerate_fs_scattered(4);
  CHECK(std::set<ChainSet>(s4.begin(), s4.end()) ==
        std::set<ChainSet>{ChainSet({Chain::u(4)}), ChainSet({Chain::u(3), Chain::s(2)}),
                           ChainSet({Chain::u(3), Chain::s(4)}), ChainSet({Chain::u(2), Chain::s(4, 2)})});
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto sets = enumerate_fs_scattered(n);
    CHECK(sets.size() == (std::size_t{1} << (n - 2)));
    for (const ChainSet& cs : sets) {
      CHECK(cs.rank() == n);
      CHECK(u_interlaced(cs));
    }
  }
  CHECK_THROWS_AS(enumerate_fs_scattered(1), std::invalid_argument);
}

TEST_CASE("FS-scattered enumeration agrees with filtering all decompositions") {
  // Independent of the entry bound used inside enumerate_fs_scattered: scan
  // every infinitesimal character with entries up to 2n + 3.
  for (std::size_t n = 2; n <= 6; ++n) {
    const int max_entry = static_cast<int>(2 * n + 3);
    std::set<ChainSet> expected;
    for (unsigned mask = 0; mask < (1U << max_entry); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
      std::vector<Int> lam;
      for (int v = max_entry; v >= 1; --v) {
        if (mask >> (v - 1) & 1U) lam.push_back(v);
      }
      for (const ChainSet& cs : decompositions(InfChar::from_restricted(Weight(lam)))) {
        if (u_interlaced(cs)) expected.insert(cs);
      }
    }
    const auto got = enumerate_fs_scattered(n);
    CHECK(std::set<ChainSet>(got.begin(), got.end()) == expected);
  }
}
