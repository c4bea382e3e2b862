// Automorphism groups of the Cayley graphs over GF(q): affine semilinear
// maps x -> a*x^(p^i) + b, explicit permutation groups, orbit classification
// of clique sets and stabilizer orders.
#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netclique/cliques.hpp"
#include "netclique/gf.hpp"
#include "netclique/graph.hpp"
#include "netclique/netgraph.hpp"

namespace netclique {

using Permutation = std::vector<Vertex>;

// x -> a * x^(p^frob) + b with a != 0.
struct AffineMap {
  FieldElement a{1};
  FieldElement b{0};
  std::uint32_t frob = 0;

  friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
};

FieldElement apply(const FieldSpec& f, const AffineMap& g, FieldElement x);
// (g o h)(x) = g(h(x)).
AffineMap compose(const FieldSpec& f, const AffineMap& g, const AffineMap& h);
AffineMap inverse(const FieldSpec& f, const AffineMap& g);
Permutation to_permutation(const FieldSpec& f, const AffineMap& g);

// Generator file: one "a_code b_code frob_index" per line, '#' comments.
std::vector<AffineMap> read_affine_generators(const FieldSpec& f, std::istream& in);

struct GroupSpec {
  enum class Kind { paley, peisert, net_linear, affine, taylor, explicit_perm };

  Kind kind = Kind::explicit_perm;
  std::size_t degree = 0;                // number of points acted on
  std::uint64_t order = 0;
  std::vector<Permutation> generators;   // always populated

  // Known index of this group in the full automorphism group (Peisert
  // exceptions); 1 when unknown or none.
  std::uint32_t missing_factor = 1;
  // True when the group is known to be the full automorphism group.
  bool certified_full = false;

  // Affine groups only.
  FieldPtr field;
  std::vector<AffineMap> affine_generators;
  bool all_translations = false;

  bool is_affine() const { return field != nullptr; }
  // (a, i) is the linear part of some element; valid for affine groups.
  bool has_multiplier(FieldElement a, std::uint32_t frob) const;
  std::uint64_t multiplier_count() const;
  std::string kind_name() const;

  std::vector<std::uint8_t> multiplier_mask;  // index log(a) * e + frob
};

GroupSpec make_affine_group(FieldPtr f, std::vector<AffineMap> gens, GroupSpec::Kind kind);

GroupSpec paley_group(FieldPtr f);
GroupSpec peisert_group(FieldPtr f);
GroupSpec net_linear_group(FieldPtr f, const NetSpec& net);
GroupSpec affine_group_from_generators(FieldPtr f, std::vector<AffineMap> gens);

// Full group of the Taylor double cover of P(q), q = 1 mod 4.
GroupSpec taylor_paley_group(FieldPtr f);

// Exhaustive search. Throws std::invalid_argument above vertex_cap vertices
// and std::overflow_error when the order does not fit in 64 bits.
GroupSpec brute_force_automorphisms(const Graph& g, std::size_t vertex_cap = 100);

bool is_automorphism(const Graph& g, const Permutation& perm);
// Index of the first generator that is not an automorphism.
std::optional<std::size_t> find_bad_generator(const Graph& g, const GroupSpec& grp);

std::vector<Vertex> point_orbit(std::span<const Permutation> gens, Vertex v, std::size_t degree);

Clique act_on_clique(const Permutation& perm, const Clique& c);
Clique act_on_clique(const FieldSpec& f, const AffineMap& g, const Clique& c);

// Orbit of a vertex set under the generators. Throws CapExceeded past `cap`.
std::vector<Clique> orbit_by_closure(const GroupSpec& grp, const Clique& c, std::size_t cap = 50'000'000);

// |G| / |orbit| computed by closure.
std::uint64_t stabilizer_order_by_closure(const GroupSpec& grp, const Clique& c);
// Direct count of g with g(C) = C; needs an affine group with all
// translations and |C| >= 2. Falls back to closure otherwise.
std::uint64_t stabilizer_order(const GroupSpec& grp, const Clique& c);

struct Orbit {
  Clique representative;
  std::uint64_t size = 0;
  std::uint64_t stabilizer = 0;
};

struct OrbitTable {
  std::vector<Orbit> orbits;  // sorted by (size of representative, representative)

  std::map<std::size_t, std::uint64_t> counts() const;   // clique size -> number of orbits
  std::uint64_t total_cliques() const;
};

// Union-find over a G-invariant clique set. Throws std::invalid_argument
// when some image is missing from the set.
OrbitTable classify_orbits(std::span<const Clique> cliques, const GroupSpec& grp);

// Representatives of the orbits of the linear part on the neighbours of 0.
std::vector<Vertex> anchor_vertices(const Graph& g, const GroupSpec& grp);

// For affine groups with all translations: enumerates only maximal cliques
// through {0, t} for anchors t and reduces each to a canonical image.
OrbitTable classify_orbits_anchored(const Graph& g, const GroupSpec& grp, const EnumerationOptions& opts = {});

// Canonical image used by the anchored route, with the number of group
// elements sending c onto it.
struct CanonicalImage {
  Clique image;
  std::uint64_t stabilizer = 0;
};
CanonicalImage canonical_image(const GroupSpec& grp, std::span<const Vertex> anchors, const Clique& c);

}  // namespace netclique
