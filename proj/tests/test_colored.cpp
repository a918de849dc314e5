#include "kcpart/colored.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "kcpart/counts.hpp"

using namespace kcpart;

namespace {

std::vector<std::string> enumerate_texts(int k, long n,
                                         const ConstraintProfile& profile) {
  std::vector<std::string> out;
  for (const auto& p : collect_partitions(k, n, profile))
    out.push_back(to_text(p));
  return out;
}

}  // namespace

TEST_CASE("canonical form") {
  SUBCASE("sorting and weight") {
    ColoredPartition p = canonicalize(
        {{1, 1}, {4, 2}, {2, 1}, {2, 3}, {2, 3}, {1, 2}}, 3);
    CHECK(to_text(p) == "4_2+2_3+2_3+2_1+1_2+1_1");
    CHECK(p.weight == 12);
    CHECK(p.count() == 6);
    CHECK(is_canonical(p));
  }

  SUBCASE("misordered parts are detected") {
    ColoredPartition p;
    p.parts = {{2, 1}, {2, 2}};
    p.weight = 4;
    CHECK_FALSE(is_canonical(p));
    p.parts = {{2, 2}, {2, 1}};
    CHECK(is_canonical(p));
  }

  SUBCASE("invalid parts are rejected") {
    CHECK_THROWS_AS(canonicalize({{0, 1}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({{2, 0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({{2, 3}}, 2), std::invalid_argument);
  }

  SUBCASE("empty partition") {
    ColoredPartition p = canonicalize({}, 2);
    CHECK(p.empty());
    CHECK(p.weight == 0);
    CHECK(is_canonical(p));
  }
}

TEST_CASE("text grammar") {
  SUBCASE("round trip") {
    const char* text = "4_2+2_3+2_3+2_1+1_2+1_1";
    CHECK(to_text(parse_partition(text, 3)) == text);
  }

  SUBCASE("whitespace and ordering are normalized") {
    CHECK(to_text(parse_partition(" 1_1 + 2_1 ", 2)) == "2_1+1_1");
    CHECK(to_text(parse_partition("", 2)) == "");
    CHECK(parse_partition("  ", 2).empty());
  }

  SUBCASE("rejects malformed text") {
    CHECK_THROWS_AS(parse_partition("4", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4_", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("_1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4_3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0_1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4_1+", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("+4_1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4_1 2_1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4_1x", 2), std::invalid_argument);
  }
}

TEST_CASE("constraint checks on partitions") {
  auto p = parse_partition("2_1+1_2", 2);
  CHECK(satisfies(p, ConstraintProfile{}));
  CHECK(satisfies(p, ConstraintProfile::forbid({1})));  // 2_1 is not a unit
  CHECK_FALSE(satisfies(p, ConstraintProfile::forbid({2})));
  CHECK(satisfies(p, ConstraintProfile::require({2})));
  CHECK_FALSE(satisfies(p, ConstraintProfile::require({1})));
  CHECK(satisfies(parse_partition("1_1+1_2", 2),
                  ConstraintProfile::require({1, 2})));
}

TEST_CASE("enumeration") {
  SUBCASE("two colors, weight two, written out") {
    CHECK(enumerate_texts(2, 2, {}) ==
          std::vector<std::string>{"2_2", "2_1", "1_2+1_2", "1_2+1_1",
                                   "1_1+1_1"});
  }

  SUBCASE("forbidding both unit colors at weight four") {
    CHECK(enumerate_texts(2, 4, ConstraintProfile::forbid({1, 2})) ==
          std::vector<std::string>{"4_2", "4_1", "2_2+2_2", "2_2+2_1",
                                   "2_1+2_1"});
  }

  SUBCASE("forbidding one unit color at weight three") {
    CHECK(enumerate_texts(2, 3, ConstraintProfile::forbid({1})) ==
          std::vector<std::string>{"3_2", "3_1", "2_2+1_2", "2_1+1_2",
                                   "1_2+1_2+1_2"});
  }

  SUBCASE("order is strictly decreasing, no duplicates") {
    auto all = collect_partitions(3, 6, {});
    for (std::size_t i = 1; i < all.size(); ++i)
      CHECK(all[i].parts < all[i - 1].parts);
  }

  SUBCASE("every emitted partition is canonical and in weight") {
    ConstraintProfile profile({1}, {2});
    long visited = 0;
    enumerate(3, 7, profile, [&](const ColoredPartition& p) {
      ++visited;
      CHECK(is_canonical(p));
      CHECK(p.weight == 7);
      CHECK(satisfies(p, profile));
    });
    CHECK(visited == oracle_count(3, 7, profile));
  }

  SUBCASE("a bool visitor can stop early") {
    long visited = 0;
    enumerate(2, 5, {}, [&](const ColoredPartition&) {
      ++visited;
      return false;
    });
    CHECK(visited == 1);
  }

  SUBCASE("counts match the closed-form table") {
    CountStore store;
    CHECK(oracle_count(3, 4, {}) == 51);
    for (int k = 1; k <= 3; ++k)
      for (long n = 0; n <= 8; ++n)
        CHECK(oracle_count(k, n, {}) == store.colored_count(k, n));
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(oracle_count(0, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(oracle_count(2, -1, {}), std::invalid_argument);
    CHECK_THROWS_AS(oracle_count(2, 3, ConstraintProfile::forbid({3})),
                    std::invalid_argument);
  }

  SUBCASE("weight zero has exactly the empty partition") {
    auto all = collect_partitions(2, 0, {});
    REQUIRE(all.size() == 1);
    CHECK(all[0].empty());
    // ...unless a unit is required, which weight zero cannot supply.
    CHECK(oracle_count(2, 0, ConstraintProfile::require({1})) == 0);
  }
}
