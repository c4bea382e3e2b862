#include <algorithm>
#include <set>

#include "doctest.h"
#include "netclique/cliques.hpp"
#include "netclique/suites.hpp"

using namespace netclique;

namespace {

SuiteReport run(const std::string& name, std::vector<std::uint32_t> rs) {
  SuiteOptions o;
  o.rs = std::move(rs);
  return run_suite(name, o);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

}  // namespace

TEST_SUITE("suites") {
  TEST_CASE("names") {
    const auto& names = suite_names();
    for (const char* s : {"netcliq", "sizes", "realize", "goryainov", "baker", "stabilizers", "cyn", "delsarte",
                          "blokhuis", "nonline"}) {
      CHECK(std::find(names.begin(), names.end(), s) != names.end());
    }
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  }

  TEST_CASE("small runs pass") {
    struct Case {
      const char* name;
      std::vector<std::uint32_t> rs;
    };
    for (const Case& c : {Case{"netcliq", {5}}, Case{"sizes", {7}}, Case{"realize", {7}}, Case{"goryainov", {7, 9}},
                          Case{"baker", {7, 9}}, Case{"stabilizers", {9}}, Case{"cyn", {11}}, Case{"delsarte", {4, 5}},
                          Case{"blokhuis", {5, 7}}, Case{"nonline", {5}}}) {
      INFO(c.name);
      const SuiteReport rep = run(c.name, c.rs);
      CHECK(rep.passed());
      CHECK(rep.checks > 0);
      const auto j = rep.to_json();
      CHECK(j["schema"] == "netclique.verify/1");
      CHECK(j["suite"] == c.name);
      CHECK(j["passed"] == true);
      CHECK(j["witness"].is_null());
    }
  }

  TEST_CASE("bad parameters") {
    CHECK_THROWS_AS(run("cyn", {9}), std::invalid_argument);
    CHECK_THROWS_AS(run("goryainov", {8}), std::invalid_argument);
    CHECK_THROWS_AS(run("netcliq", {6}), std::invalid_argument);
  }

  TEST_CASE("direction sets") {
    SuiteOptions o;
    // C(8, 3) = 56 <= 64: everything
    const auto all = direction_sets(7, 3, o);
    CHECK(all.size() == binomial(8, 3));
    CHECK(std::set(all.begin(), all.end()).size() == all.size());
    // C(12, 6) = 924: canonical plus samples
    const auto some = direction_sets(11, 6, o);
    CHECK(some.front() == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
    CHECK(some.size() <= 1 + o.random_sets);
    for (const auto& d : some) {
      CHECK(d.size() == 6);
      CHECK(std::is_sorted(d.begin(), d.end()));
      CHECK(d.back() < 12);
    }
    CHECK(direction_sets(11, 6, o) == some);
    o.seed = 2;
    CHECK(direction_sets(11, 6, o) != some);
  }

  TEST_CASE("deadline is a cap") {
    SuiteOptions o;
    o.rs = {13};
    o.all_m = true;
    o.deadline = std::chrono::steady_clock::now();
    CHECK_THROWS_AS(run_suite("netcliq", o), CapExceeded);
  }
}
