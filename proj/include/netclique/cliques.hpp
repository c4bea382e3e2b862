// Maximal clique enumeration (pivoting Bron-Kerbosch over bitrows) and
// clique predicates.
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "netclique/gf.hpp"
#include "netclique/graph.hpp"
#include "netclique/netgraph.hpp"

namespace netclique {

// Strictly increasing vertex list.
struct Clique {
  std::vector<Vertex> vertices;

  Clique() = default;
  explicit Clique(std::vector<Vertex> v);  // sorts and removes duplicates

  std::size_t size() const { return vertices.size(); }
  bool contains(Vertex v) const;
  friend auto operator<=>(const Clique&, const Clique&) = default;
};

struct CliqueHash {
  std::size_t operator()(const Clique& c) const noexcept;
};

// Raised when an explicit resource cap is hit; never a silent truncation.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  std::uint64_t max_cliques = 1'000'000'000;
  std::size_t min_size = 0;  // report only maximal cliques with at least this many vertices
  std::size_t max_size = std::numeric_limits<std::size_t>::max();
  unsigned jobs = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Called once per maximal clique. With jobs > 1 calls are serialised by the
// enumerator, so the sink does not need its own locking.
using CliqueSink = std::function<void(const Clique&)>;

// Emits every maximal clique containing `seed` exactly once (seed may be
// empty). Returns the number of cliques emitted. A seed that is not a
// clique yields nothing.
std::uint64_t enumerate_maximal_cliques(const Graph& g, std::span<const Vertex> seed, const CliqueSink& sink,
                                        const EnumerationOptions& opts = {});

inline std::uint64_t enumerate_maximal_cliques(const Graph& g, const CliqueSink& sink,
                                               const EnumerationOptions& opts = {}) {
  return enumerate_maximal_cliques(g, {}, sink, opts);
}

// Collected and sorted, so the result does not depend on worker count.
std::vector<Clique> collect_maximal_cliques(const Graph& g, std::span<const Vertex> seed = {},
                                            const EnumerationOptions& opts = {});

using SizeHistogram = std::map<std::size_t, std::uint64_t>;

SizeHistogram size_histogram(std::span<const Clique> cliques);

bool is_clique(const Graph& g, std::span<const Vertex> s);
bool is_maximal_clique(const Graph& g, std::span<const Vertex> s);

// S^perp: vertices equal or adjacent to every member of S (all vertices when S is empty).
std::vector<Vertex> common_neighbors(const Graph& g, std::span<const Vertex> s);

// True when the vertex set is a coset beta^i F_r + b of the subfield in GF(r^2).
bool is_line(const FieldSpec& f, std::span<const Vertex> s);

struct DelsarteReport {
  std::size_t bound = 0;             // r
  std::size_t max_clique = 0;
  bool within_bound = false;
  bool attained = false;
  std::uint64_t maximum_cliques = 0;
  std::uint64_t maximum_cliques_that_are_lines = 0;
  bool all_maximum_are_lines = false;
};

DelsarteReport delsarte_check(const FieldSpec& f, const Graph& g, const NetSpec& net, std::span<const Clique> cliques);

}  // namespace netclique
