// Clique constructions in net graphs over GF(r^2): lines, Baker cliques,
// conic (co)cliques, the closure cliques C_{x,L} and their sizes, and the
// subsets A of F_r that realise prescribed sizes.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netclique/autgroup.hpp"
#include "netclique/cliques.hpp"
#include "netclique/gf.hpp"
#include "netclique/graph.hpp"
#include "netclique/netgraph.hpp"

namespace netclique {

struct LinePointConfig {
  NetSpec net;
  std::uint32_t line_direction = 0;  // class in D
  FieldElement line_offset;
  FieldElement x;
  std::vector<Vertex> L;  // sorted
  std::vector<Vertex> A;  // x^perp n L, sorted
};

// Self-contained failure record; `to_json` gives
// {r, m, directions, L:{dir,offset}, x, A, clique, assertion}.
struct Witness {
  NetSpec net;
  std::uint32_t line_direction = 0;
  std::uint32_t line_offset = 0;
  std::uint32_t x = 0;
  std::vector<Vertex> A;
  std::vector<Vertex> clique;
  std::string assertion;

  std::string to_json() const;
};

Witness make_witness(const LinePointConfig& cfg, std::vector<Vertex> clique, std::string assertion);

// A structural claim failed on a concrete configuration.
class TheoremFalsified : public std::runtime_error {
 public:
  explicit TheoremFalsified(Witness w) : std::runtime_error(w.assertion), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

// beta^dir * F_r + offset. Throws std::invalid_argument unless dir is in D.
Clique line(const FieldSpec& f, const NetSpec& net, std::uint32_t direction, FieldElement offset);

// Throws std::invalid_argument when x lies on the line.
LinePointConfig make_config(const FieldSpec& f, const NetSpec& net, std::uint32_t direction, FieldElement offset,
                            FieldElement x);

// {x} u A.
Clique baker_clique(const LinePointConfig& cfg);
// {x, x^r} u A; needs L = F_r.
Clique baker_conjugate_clique(const FieldSpec& f, const LinePointConfig& cfg);

// {0} u {c^-1 : c in C \ {0}}; throws unless 0 is in C and the result is a clique.
Clique inverse_companion(const FieldSpec& f, const Graph& g, const Clique& c);

bool is_coclique(const Graph& g, std::span<const Vertex> s);
bool is_maximal_coclique(const Graph& g, std::span<const Vertex> s);

struct GoryainovSet {
  Clique set;
  bool is_clique = false;  // clique for r = 3 mod 4, coclique for r = 1 mod 4
  bool maximal = false;
  bool norm_identity = false;
};

// With omega = beta^(r-1), Q = <omega^2>: Q u {0} (r = 3 mod 4) or Q (r = 1 mod 4).
GoryainovSet goryainov_set(const FieldSpec& f, const Graph& paley);

struct MobiusCheck {
  std::vector<std::pair<Vertex, Vertex>> images;  // z -> image
  Clique image;
  Clique expected;  // {x} u A or {x, x^r} u A with x = eps^-1, L = F_r
  bool matches = false;
  bool zero_image_ok = false;  // 0 -> -eps^-1
};

// z -> eps^-1 (1 + 2/(z-1)) with 1 -> eps^-1.
FieldElement mobius_image(const FieldSpec& f, FieldElement z);
MobiusCheck goryainov_mobius_map(const FieldSpec& f, const Graph& paley);

// ({x} u A)^perp; throws TheoremFalsified unless it is a maximal clique.
Clique cxl_closure(const Graph& g, const LinePointConfig& cfg);

struct UniquenessReport {
  std::uint64_t maximal_cliques = 0;
  Clique closure;
  bool unique = false;
};

// Seeded enumeration through {x} u A; throws TheoremFalsified unless
// there is exactly one maximal clique and it equals the closure.
UniquenessReport verify_unique_maximal(const Graph& g, const LinePointConfig& cfg);

struct SizeCertificate {
  std::uint32_t r = 0, m = 0, h = 0, f = 0;
  std::uint64_t pf = 1;  // p^f

  std::uint64_t clique_size() const { return m - 1 + h * pf; }
  friend auto operator<=>(const SizeCertificate&, const SizeCertificate&) = default;
};

// All (h, f) allowed by the divisibility conditions and, when p | (m-1),
// by the three exclusions. Needs 2 < m < r-1.
std::vector<SizeCertificate> cxl_size_candidates(std::uint32_t r, std::uint32_t m);

// True when (h, f) satisfies the divisibility conditions (no exclusions).
bool satisfies_divisibility(std::uint32_t r, std::uint32_t m, std::uint32_t h, std::uint32_t f);
// True when one of the exclusions rules the pair out (only meaningful for p | (m-1)).
bool excluded_pattern(std::uint32_t r, std::uint32_t m, std::uint32_t h, std::uint32_t f);

// Maps z -> c z + d of AGL(1, r) over the small field.
struct LinearMap {
  FieldElement c{1};
  FieldElement d{0};
  friend auto operator<=>(const LinearMap&, const LinearMap&) = default;
};

// Elements of AGL(1,r) preserving A whose unique fixed point (if any) lies in A.
std::vector<LinearMap> admissible_group(const FieldSpec& small, std::span<const FieldElement> A);

struct Construction {
  SizeCertificate cert;
  std::vector<FieldElement> A;   // subset of the small field, sorted by code
  std::vector<LinearMap> group;  // the prescribed group G of order h p^f
  std::uint64_t admissible_order = 0;
  std::string recipe;
};

// Throws std::invalid_argument for an invalid certificate and
// TheoremFalsified when no admissible A is found.
Construction construct_A(const FieldSpec& small, const SizeCertificate& cert);

// Net over GF(r^2) with L = F_r (class 0), x = beta and x^perp n L equal to
// the image of A.
LinePointConfig net_for_subset(const FieldSpec& big, const FieldSpec& small, std::span<const FieldElement> A);

struct StabilizerReport {
  std::vector<LinearMap> group;  // G_{x,L} after normalising L to F_r, as maps on GF(r^2)
  std::uint64_t translations = 0;  // p^f
  std::uint64_t h = 0;
  bool closed = false;
  bool transitive = false;
  bool fixed_points_single_orbit = false;
  bool fixed_points_in_A = false;
  bool preserves_clique = false;
  std::size_t clique_size = 0;
};

// Normalises L to F_r (rebuilding the net graph) and checks the group claims.
StabilizerReport verify_stabilizer_structure(const FieldSpec& f, const LinePointConfig& cfg);

// Same configuration moved so that L = F_r.
LinePointConfig normalise_config(const FieldSpec& f, const LinePointConfig& cfg);

struct CynReport {
  std::uint32_t r = 0;
  NetSpec net;
  std::size_t clique_size = 0;      // |C|, C = {0} u xH u yH
  bool clique_is_cyl = false;       // C = C_{y,L}
  std::size_t cyl_size = 0;
  std::size_t cyn_size = 0;
  std::size_t expected_cyn = 0;
  bool reflection_preserves_n0 = false;  // z -> w - z on y^perp n N
};

// Needs r odd, r > 9.
CynReport cyn_example(const FieldSpec& f);

struct NonlineResult {
  std::uint32_t r = 0, m = 0;
  std::uint64_t direction_sets = 0;
  std::uint64_t sets_with_nonlines = 0;
  std::vector<Clique> nonline_cliques;  // distinct vertex sets over all direction sets
  std::uint64_t orbits = 0;             // under AGammaL(2, r)
};

// All direction sets of size m; r-cliques that are not lines.
NonlineResult search_nonline_max_cliques(const FieldSpec& f, std::uint32_t m, bool classify = false);

// Generators of AGammaL(2,r) acting on GF(r^2).
std::vector<Permutation> agaml2_generators(const FieldSpec& f);

}  // namespace netclique
