// Verification suites behind `netclique verify`. Each suite walks a
// parameter range, checks the structural claims on concrete graphs and
// returns a JSON report.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace netclique {

struct SuiteOptions {
  std::vector<std::uint32_t> rs;          // explicit orders; empty means the suite default
  std::optional<std::uint32_t> r_max;     // all applicable r up to this bound
  std::optional<std::uint32_t> m;         // single degree
  bool all_m = false;
  std::vector<std::uint32_t> directions;  // explicit net (needs one r)
  std::size_t random_sets = 24;           // sampled direction sets per (r, m) when not exhaustive
  std::size_t exhaustive_limit = 64;      // enumerate all direction sets when C(r+1, m) is at most this
  std::uint64_t seed = 1;
  std::uint64_t max_cliques = 50'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  bool falsified = false;  // a TheoremFalsified witness was raised
  nlohmann::json cases = nlohmann::json::array();
  nlohmann::json failure_list = nlohmann::json::array();
  std::optional<nlohmann::json> witness;

  bool passed() const { return failures == 0 && !falsified; }
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite or bad parameters and
// CapExceeded when a resource cap is hit.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

// Direction sets used for (r, m): all of them when there are at most
// `exhaustive_limit`, otherwise {0..m-1} plus `random_sets` seeded samples.
std::vector<std::vector<std::uint32_t>> direction_sets(std::uint32_t r, std::uint32_t m, const SuiteOptions& opts);

}  // namespace netclique
