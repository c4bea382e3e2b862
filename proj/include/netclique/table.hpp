// Table rows of maximal-clique orbits ("7^3, 11^1"), their text/JSON/TSV
// forms, and the drivers that compute them for each graph family.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "netclique/autgroup.hpp"
#include "netclique/graph.hpp"

namespace netclique {

struct TableEntry {
  std::size_t size = 0;
  std::optional<std::uint64_t> count;  // nullopt for sizes-only rows
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct TableRow {
  std::string family;
  std::uint32_t r = 0;  // 0 when the row is not indexed by r
  std::uint64_t vertices = 0;
  std::vector<TableEntry> entries;  // strictly increasing sizes
  // False when counts are orbits of a group not known to be the full
  // automorphism group; rendered as a "?" after each count.
  bool certified = true;
  std::vector<std::string> flags;
  std::string group;  // how the acting group was obtained
  std::uint64_t group_order = 0;
  std::uint64_t total_cliques = 0;

  std::string to_paper() const;
  nlohmann::json to_json() const;
  std::string to_tsv() const;
  static std::string tsv_header();
};

// Inverse of to_paper (entries and the certified marker only). Throws
// std::invalid_argument on malformed text, non-increasing sizes or zero counts.
TableRow parse_paper_row(std::string_view text);
TableRow row_from_json(const nlohmann::json& j);

// Counts would come from a group not certified to be the full group.
class SubgroupRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GroupMode { automatic, closed_form, brute, file };

struct TableOptions {
  unsigned jobs = 1;
  std::uint64_t max_cliques = 1'000'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  GroupMode group = GroupMode::automatic;
  std::string generators_path;  // GroupMode::file
  bool allow_subgroup = false;
  std::vector<std::uint32_t> directions;  // net family
  std::optional<std::uint32_t> m;         // net family, canonical directions {0..m-1}
  std::size_t brute_vertex_cap = 100;
};

// family: paley, peisert, taylor-paley, net. Paley with q set uses P(q).
TableRow make_table_row(const std::string& family, std::uint32_t r, const TableOptions& opts,
                        std::optional<std::uint32_t> q = std::nullopt);

// Row for an ingested graph; sizes only unless a group is supplied.
TableRow make_file_row(const Graph& g, const TableOptions& opts);

// Sizes of maximal cliques of the Taylor cover, from those through one
// vertex (the cover's group is vertex-transitive).
std::vector<std::size_t> taylor_clique_sizes(std::uint32_t r, const TableOptions& opts);

// Smallest maximal cliques of P(r^2) or P*(r^2): bounded-size search with
// growing bound; one entry.
TableRow smallest_row(const std::string& family, std::uint32_t r, const TableOptions& opts);

// Orbit table of all maximal cliques under an explicit group (union-find).
OrbitTable classify_all(const Graph& g, const GroupSpec& grp, const TableOptions& opts);

}  // namespace netclique
