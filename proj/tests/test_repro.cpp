#include <doctest.h>

#include "csplab/repro.hpp"

using namespace csplab;

TEST_SUITE("repro") {
  TEST_CASE("criteria table") {
    const auto& all = acceptance_criteria();
    REQUIRE(all.size() == 11);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].id == static_cast<int>(i) + 1);
    CHECK(all[8].key == "g2");
  }

  TEST_CASE("subset execution") {
    ReproOptions only_g2;
    only_g2.only = {"g2"};
    const auto res = run_acceptance(only_g2);
    REQUIRE(res.size() == 1);
    CHECK(res[0].key == "g2");
    CHECK(res[0].pass);
    ReproOptions by_id;
    by_id.only = {"3", "spin"};
    const auto two = run_acceptance(by_id);
    REQUIRE(two.size() == 2);
    CHECK(two[0].key == "riordan");
    CHECK(two[1].key == "spin");
    ReproOptions unknown;
    unknown.only = {"nope"};
    CHECK_THROWS_AS(run_acceptance(unknown), std::invalid_argument);
  }

  TEST_CASE("sabotaged twist fails the TL rows with a coefficient diff") {
    ReproOptions opt;
    opt.only = {"tl-fakedeg", "tl-csp"};
    opt.sabotage_twist = true;
    const auto res = run_acceptance(opt);
    REQUIRE(res.size() == 2);
    for (const auto& r : res) {
      CHECK_FALSE(r.pass);
      bool has_diff = false;
      for (const auto& f : r.failures) has_diff = has_diff || f.find("(q^") != std::string::npos;
      CHECK(has_diff);
    }
    opt.sabotage_twist = false;
    CHECK(run_acceptance(opt)[1].pass);
  }

  TEST_CASE("reports are deterministic and parallel runs keep order") {
    ReproOptions opt;
    opt.only = {"riordan", "matchings", "rencontre"};
    std::string a, b;
    for (const auto& r : run_acceptance(opt)) a += format_result(r);
    opt.parallel = true;
    for (const auto& r : run_acceptance(opt)) b += format_result(r);
    CHECK(a == b);
    CHECK(a.rfind("PASS  [ 3] riordan", 0) == 0);
  }

  TEST_CASE("conjecture rows carry their label") {
    ReproOptions opt;
    opt.only = {"riordan-conjecture"};
    const auto res = run_acceptance(opt);
    REQUIRE(res.size() == 1);
    CHECK(res[0].pass);
    CHECK(format_result(res[0]).find("CONJECTURE-CONFIRMED") != std::string::npos);
    CHECK(to_json(res[0])["label"] == "CONJECTURE-CONFIRMED");
  }
}
