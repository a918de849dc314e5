#include "kcpart/theorems.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "kcpart/counts.hpp"

using namespace kcpart;

namespace {

long get(const ScanParams& ps, const char* name) {
  for (const auto& [n, v] : ps)
    if (n == name) return v;
  REQUIRE_MESSAGE(false, "missing scan parameter");
  return 0;
}

}  // namespace

TEST_CASE("pointwise classifiers") {
  CountStore store;

  SUBCASE("products of colored counts") {
    auto o = classify_product(store, 2, 1, 1);
    CHECK(o.relation == Relation::StrictLess);
    CHECK(o.lhs == 4);
    CHECK(o.rhs == 5);
    CHECK(classify_product(store, 2, 3, 1).relation == Relation::Equal);
    o = classify_product(store, 3, 2, 2);
    CHECK(o.relation == Relation::StrictGreater);
    CHECK(o.lhs == 81);
    CHECK(o.rhs == 51);
  }

  SUBCASE("unit-split comparison") {
    auto o = classify_unit_split(store, 2, 1, 1);
    CHECK(o.relation == Relation::StrictLess);
    CHECK(o.lhs == 1);
    CHECK(o.rhs == 2);
    o = classify_unit_split(store, 2, 3, 1);
    CHECK(o.relation == Relation::Equal);
    CHECK(o.lhs == 5);
    o = classify_unit_split(store, 3, 1, 1);
    CHECK(o.relation == Relation::Equal);
    CHECK(o.lhs == 4);
  }

  SUBCASE("appending one unit") {
    auto o = classify_unit_last(store, 2, 1);
    CHECK(o.relation == Relation::StrictLess);
    CHECK(o.lhs == 2);
    CHECK(o.rhs == 3);
    o = classify_unit_last(store, 2, 3);
    CHECK(o.relation == Relation::Equal);
    CHECK(o.lhs == 10);
    CHECK(classify_unit_last(store, 3, 1).relation == Relation::Equal);
  }

  SUBCASE("free right factor") {
    auto o = classify_unit_pair(store, 2, 2, 2);
    CHECK(o.relation == Relation::StrictGreater);
    CHECK(o.lhs == 15);
    CHECK(o.rhs == 10);
  }

  SUBCASE("ratio steps") {
    auto o = classify_ratio_step(store, 2, 6, 4);
    CHECK(o.relation == Relation::StrictLess);
    CHECK(o.lhs == 1296);
    CHECK(o.rhs == 1300);
    // m = n-1 compares a product with itself.
    for (int k = 2; k <= 5; ++k)
      for (long n = 2; n <= 12; ++n)
        CHECK(classify_ratio_step(store, k, n, n - 1).relation ==
              Relation::Equal);
  }

  SUBCASE("log-concavity of p") {
    CHECK(classify_log_concavity(store, 26, 1).relation ==
          Relation::StrictGreater);
    CHECK(classify_log_concavity(store, 6, 2).relation ==
          Relation::StrictGreater);
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(classify_product(store, 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(classify_unit_split(store, 1, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_ratio_step(store, 2, 4, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_log_concavity(store, 3, 3),
                    std::invalid_argument);
  }
}

TEST_CASE("product inequality scan") {
  CountStore store;
  ScanReport rep = scan_theorem2(store, 3, 12);
  CHECK(rep.id == "theorem2");
  CHECK(rep.total_checked == 72);

  std::set<std::tuple<long, long, long>> found;
  for (const auto& cell : rep.exceptions)
    found.insert({get(cell.params, "a"), get(cell.params, "b"),
                  get(cell.params, "k")});
  CHECK(found == std::set<std::tuple<long, long, long>>{
                     {1, 1, 2}, {2, 1, 2}, {3, 1, 2}, {1, 1, 3}});
  CHECK(rep.stated_exceptions.size() == 4);
  CHECK(rep.discrepancies.empty());

  SUBCASE("the stated list is filtered to the scanned box") {
    ScanReport narrow = scan_theorem2(store, 2, 12);
    CHECK(narrow.stated_exceptions.size() == 3);  // k=3 entry out of range
    CHECK(narrow.exceptions.size() == 3);
    CHECK(narrow.discrepancies.empty());
  }

  SUBCASE("parallel runs render identically") {
    ScanReport parallel = scan_theorem2(store, 3, 12, 4);
    CHECK(to_text(parallel) == to_text(rep));
    CHECK(to_json(parallel).dump() == to_json(rep).dump());
    CHECK(to_csv(parallel) == to_csv(rep));
  }
}

TEST_CASE("ordinary product scan with appendix") {
  CountStore store;
  ScanReport rep = scan_bessenrodt_ono(store, 20);
  CHECK(rep.exceptions.empty());
  CHECK(rep.discrepancies.empty());
  REQUIRE(rep.appendix.size() == 12);

  // The full small-sum landscape, in scan order.
  std::vector<std::tuple<long, long, Relation>> expected{
      {2, 2, Relation::StrictLess},    {3, 2, Relation::StrictLess},
      {3, 3, Relation::StrictLess},    {4, 2, Relation::StrictLess},
      {4, 3, Relation::Equal},         {4, 4, Relation::StrictGreater},
      {5, 2, Relation::StrictLess},    {5, 3, Relation::StrictLess},
      {5, 4, Relation::StrictGreater}, {6, 2, Relation::Equal},
      {6, 3, Relation::StrictGreater}, {7, 2, Relation::Equal},
  };
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& cell = rep.appendix[i];
    CHECK(get(cell.params, "a") == std::get<0>(expected[i]));
    CHECK(get(cell.params, "b") == std::get<1>(expected[i]));
    CHECK(cell.outcome.relation == std::get<2>(expected[i]));
  }

  CHECK_THROWS_AS(scan_bessenrodt_ono(store, 9), std::invalid_argument);
}

TEST_CASE("unit-split scan") {
  CountStore store;
  ScanReport rep = scan_lemma_key(store, 3, 10);
  REQUIRE(rep.exceptions.size() == 1);
  CHECK(get(rep.exceptions[0].params, "c") == 1);
  CHECK(get(rep.exceptions[0].params, "d") == 1);
  CHECK(get(rep.exceptions[0].params, "k") == 2);
  CHECK(rep.exceptions[0].outcome.relation == Relation::StrictLess);
  CHECK(rep.discrepancies.empty());
}

TEST_CASE("unit-append scans and their discrepancy flags") {
  CountStore store;

  SUBCASE("single appended unit") {
    ScanReport rep = scan_lemma_g(store, 4, 12);
    std::set<std::pair<long, long>> found;
    for (const auto& cell : rep.exceptions)
      found.insert({get(cell.params, "a"), get(cell.params, "k")});
    CHECK(found == std::set<std::pair<long, long>>{{1, 2}, {3, 2}, {1, 3}});
    CHECK(rep.stated_exceptions.size() == 2);
    REQUIRE(rep.discrepancies.size() == 1);
    CHECK(rep.discrepancies[0] ==
          "found but not stated: a=3 k=2 (Equal 10 vs 10)");
  }

  SUBCASE("free right factor") {
    ScanReport rep = scan_lemma_ab(store, 3, 10);
    std::set<std::tuple<long, long, long>> found;
    for (const auto& cell : rep.exceptions)
      found.insert({get(cell.params, "a"), get(cell.params, "b"),
                    get(cell.params, "k")});
    CHECK(found == std::set<std::tuple<long, long, long>>{
                       {1, 1, 2}, {3, 1, 2}, {1, 1, 3}});
    REQUIRE(rep.discrepancies.size() == 1);
    CHECK(rep.discrepancies[0] ==
          "found but not stated: a=3 b=1 k=2 (Equal 10 vs 10)");
  }
}

TEST_CASE("base identity") {
  CountStore store;
  CHECK(verify_base_identity(store, 2, 10));
  CHECK(verify_base_identity(store, 2, 2));
  CHECK_THROWS_AS(verify_base_identity(store, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_base_identity(store, 3, 2), std::invalid_argument);
}

TEST_CASE("ratio-step scan") {
  CountStore store;
  ScanReport rep = scan_conjecture(store, 4, 12);
  REQUIRE(rep.exceptions.size() == 1);
  const auto& cell = rep.exceptions[0];
  CHECK(get(cell.params, "k") == 2);
  CHECK(get(cell.params, "n") == 6);
  CHECK(get(cell.params, "m") == 4);
  CHECK(cell.outcome.lhs == 1296);
  CHECK(cell.outcome.rhs == 1300);
  CHECK(rep.stated_exceptions.size() == 1);
  CHECK(rep.discrepancies.empty());
}

TEST_CASE("log-concavity scans") {
  CountStore store;

  SUBCASE("weak scan is clean past the small exceptions") {
    ScanReport rep = scan_log_concavity_p(store, 100, false);
    CHECK(rep.total_checked == 75);
    CHECK(rep.exceptions.empty());
  }

  SUBCASE("strong scan is clean") {
    ScanReport rep = scan_log_concavity_p(store, 60, true);
    CHECK(rep.exceptions.empty());
    CHECK(rep.total_checked > 0);
  }

  SUBCASE("m cap restricts the strong scan") {
    ScanReport all = scan_log_concavity_p(store, 60, true);
    ScanReport capped = scan_log_concavity_p(store, 60, true, 2);
    CHECK(capped.total_checked < all.total_checked);
    for (const auto& cell : capped.exceptions)
      CHECK(get(cell.params, "m") <= 2);
  }

  SUBCASE("range validation") {
    CHECK_THROWS_AS(scan_log_concavity_p(store, 26, false),
                    std::invalid_argument);
  }
}

TEST_CASE("reference exception lists") {
  CHECK(reference_exceptions("theorem2").size() == 4);
  CHECK(reference_exceptions("lemma-key").size() == 1);
  CHECK(reference_exceptions("lemma-g").size() == 2);
  CHECK(reference_exceptions("lemma-ab").size() == 2);
  CHECK(reference_exceptions("conjecture").size() == 1);
  CHECK(reference_exceptions("bo").empty());
  CHECK(reference_exceptions("logconcave").empty());
  CHECK_THROWS_AS(reference_exceptions("nope"), std::invalid_argument);
}

TEST_CASE("maximal products") {
  CountStore store;

  SUBCASE("two colors") {
    MaxResult r = max_product(store, 2, 1, MaxMode::ClosedForm);
    CHECK(r.value == 2);
    CHECK(r.maximizers == std::vector<std::vector<long>>{{1}});
    r = max_product(store, 2, 2, MaxMode::ClosedForm);
    CHECK(r.value == 5);
    CHECK(r.maximizers == std::vector<std::vector<long>>{{2}});
    r = max_product(store, 2, 3, MaxMode::ClosedForm);
    CHECK(r.value == 10);
    CHECK(r.maximizers == std::vector<std::vector<long>>{{3}, {2, 1}});
    r = max_product(store, 2, 6, MaxMode::ClosedForm);
    CHECK(r.value == 125);
    CHECK(r.maximizers == std::vector<std::vector<long>>{{2, 2, 2}});
    r = max_product(store, 2, 7, MaxMode::BruteForce);
    CHECK(r.value == 250);
    CHECK(r.maximizers ==
          std::vector<std::vector<long>>{{3, 2, 2}, {2, 2, 2, 1}});
  }

  SUBCASE("three colors maximize at 3^n over the 2-1 family") {
    MaxResult r = max_product(store, 3, 4, MaxMode::ClosedForm);
    CHECK(r.value == 81);
    CHECK(r.maximizers ==
          std::vector<std::vector<long>>{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  }

  SUBCASE("four or more colors maximize at all units") {
    MaxResult r = max_product(store, 4, 3, MaxMode::ClosedForm);
    CHECK(r.value == 64);
    CHECK(r.maximizers == std::vector<std::vector<long>>{{1, 1, 1}});
  }

  SUBCASE("brute force matches the closed form on a small box") {
    for (int k = 2; k <= 6; ++k)
      for (long n = 1; n <= 12; ++n) {
        MaxResult brute = max_product(store, k, n, MaxMode::BruteForce);
        MaxResult closed = max_product(store, k, n, MaxMode::ClosedForm);
        CHECK(brute.value == closed.value);
        CHECK(brute.maximizers == closed.maximizers);
      }
  }

  SUBCASE("maximizer lists are in descending lexicographic order") {
    MaxResult r = max_product(store, 3, 10, MaxMode::BruteForce);
    for (std::size_t i = 1; i < r.maximizers.size(); ++i)
      CHECK(r.maximizers[i] < r.maximizers[i - 1]);
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(max_product(store, 1, 5, MaxMode::BruteForce),
                    std::invalid_argument);
    CHECK_THROWS_AS(max_product(store, 2, 0, MaxMode::ClosedForm),
                    std::invalid_argument);
  }
}

TEST_CASE("scan reports render in all formats") {
  CountStore store;
  ScanReport rep = scan_conjecture(store, 2, 8);

  std::string text = to_text(rep);
  CHECK(text.find("scan conjecture") == 0);
  CHECK(text.find("k=2 n=6 m=4  StrictLess  1296 < 1300") !=
        std::string::npos);

  auto j = to_json(rep);
  CHECK(j["schema"] == 1);
  CHECK(j["id"] == "conjecture");
  REQUIRE(j["exceptions"].size() == 1);
  CHECK(j["exceptions"][0]["k"] == 2);
  CHECK(j["exceptions"][0]["lhs"] == "1296");

  std::string csv = to_csv(rep);
  CHECK(csv.rfind("section,cell,relation,lhs,rhs", 0) == 0);
  CHECK(csv.find("exception,k=2 n=6 m=4,StrictLess,1296,1300") !=
        std::string::npos);

  MaxResult r = max_product(store, 2, 7, MaxMode::ClosedForm);
  CHECK(to_text(r).find("value: 250") != std::string::npos);
  CHECK(to_csv(r) == "value,maximizer\n250,3+2+2\n250,2+2+2+1\n");
  auto mj = to_json(r);
  CHECK(mj["value"] == "250");
  CHECK(mj["maximizers"].size() == 2);
}
