// Collinearity graphs of Desarguesian nets over GF(r^2) and related
// constructions (Paley, Peisert, Taylor double covers), parameter checks and
// the edge-list file format.
#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netclique/gf.hpp"
#include "netclique/graph.hpp"

namespace netclique {

// A net of order r and degree m: the m parallel classes are identified by
// their coset class i mod (r+1) of beta^i F_r^* in GF(r^2)^*.
struct NetSpec {
  std::uint32_t r = 0;
  std::vector<std::uint32_t> directions;  // sorted, distinct, each < r+1

  std::size_t m() const { return directions.size(); }
  bool has_direction(std::uint32_t c) const;
  friend bool operator==(const NetSpec&, const NetSpec&) = default;
};

NetSpec make_net_spec(std::uint32_t r, std::vector<std::uint32_t> directions);
// Directions {0, 1, ..., m-1}.
NetSpec canonical_net(std::uint32_t r, std::uint32_t m);

// Coset class of a nonzero z: log(z) mod (r+1).
std::uint32_t direction_class(const FieldSpec& f, FieldElement z);

Graph build_net_graph(const FieldSpec& f, const NetSpec& net);

struct PaleyGraph {
  Graph graph;
  std::optional<NetSpec> net;  // present when q is a square
};
PaleyGraph build_paley(const FieldSpec& f);

Graph build_peisert(const FieldSpec& f);
// For r = 3 mod 4 the Peisert graph of order r^2 is a net graph; these are its classes.
std::optional<NetSpec> peisert_as_net(const FieldSpec& f);

struct SrgParams {
  std::size_t v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

SrgParams net_srg_params(std::uint32_t n, std::uint32_t m);

struct SrgCheck {
  enum class Kind { strongly_regular, complete, empty, not_regular, not_strongly_regular };
  Kind kind = Kind::empty;
  SrgParams params;                  // valid for strongly_regular; v and k for complete
  Vertex witness_u = 0, witness_v = 0;  // violating pair on failure
  std::string message;

  bool ok() const { return kind == Kind::strongly_regular; }
};

SrgCheck check_srg(const Graph& g);

// Taylor double cover of a strongly regular graph with k = 2 mu.
namespace taylor {
inline constexpr Vertex kInfPlus = 0;
inline constexpr Vertex kInfMinus = 1;
inline Vertex plus(std::size_t base_n, Vertex x) { (void)base_n; return 2 + x; }
inline Vertex minus(std::size_t base_n, Vertex x) { return static_cast<Vertex>(2 + base_n + x); }
}  // namespace taylor

Graph build_taylor(const Graph& gamma);

struct IntersectionArray {
  std::vector<std::size_t> b;  // b_0 .. b_{d-1}
  std::vector<std::size_t> c;  // c_1 .. c_d
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// Exhaustive distance-distribution count; nullopt unless distance-regular.
std::optional<IntersectionArray> intersection_array(const Graph& g);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph ingest_graph(std::istream& in);
Graph ingest_graph_file(const std::string& path);
void export_graph(const Graph& g, std::ostream& out);

}  // namespace netclique
