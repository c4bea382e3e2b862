// Finite field arithmetic over GF(p^e) using Zech logarithm tables.
//
// Elements are stored as small integer codes: code 0 is the zero element and
// code k (1 <= k < q) is beta^(k-1), where beta is the class of the polynomial
// variable modulo the defining polynomial. The defining polynomial is always
// chosen so that beta is primitive, which makes multiplication exponent
// arithmetic and addition a single Zech table lookup.
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace netclique {

struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class FieldSpec {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  // Field of order p^e defined by the smallest admissible polynomial.
  // For e = 1 this is x - g with g the smallest primitive root mod p; for
  // e >= 2 it is the lexicographically smallest (low degree coefficient
  // first) monic irreducible polynomial whose variable class is primitive.
  static FieldSpec make(std::uint32_t p, std::uint32_t e);

  // Field defined by an explicit monic polynomial (ascending coefficients).
  // Throws std::invalid_argument unless the polynomial is irreducible and
  // the variable class is primitive.
  static FieldSpec with_polynomial(std::uint32_t p, std::vector<std::uint32_t> poly);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& poly() const { return poly_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement primitive() const { return from_log(1); }
  FieldElement from_log(std::int64_t k) const;
  std::uint32_t log(FieldElement a) const;
  FieldElement from_int(std::int64_t n) const;
  bool contains(FieldElement a) const { return a.code < q_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::int64_t k) const;

  // a^(p^i), 0 <= i < e.
  FieldElement frobenius(FieldElement a, std::uint32_t i) const;

  // a^(r+1) where r^2 = q; lands in the index-2 subfield GF(r).
  FieldElement norm_to_subfield(FieldElement a) const;

  // i mod d where a = beta^i; requires a != 0 and d | q-1.
  std::uint32_t power_class(FieldElement a, std::uint32_t d) const;

  // True when a lies in the subfield of order p^d (d must divide e).
  bool in_subfield(FieldElement a, std::uint32_t d) const;

  // Coordinates in the polynomial basis 1, x, ..., x^(e-1).
  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> c) const;

  std::vector<FieldElement> elements() const;

 private:
  FieldSpec() = default;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> poly_;
  std::vector<std::uint32_t> packed_of_log_;  // base-p packed coefficients of beta^k
  std::vector<std::uint32_t> code_of_packed_;
  std::vector<std::int32_t> zech_;            // 1 + beta^k = beta^zech_[k], -1 when zero
  std::uint32_t half_ = 0;                    // log of -1
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

// make_field with optional memoisation of the defining polynomial in
// $NETCLIQUE_CACHE_DIR.
FieldPtr make_field(std::uint32_t p, std::uint32_t e);

bool is_prime(std::uint64_t n);

// (p, e) with p^e = n, or nullopt-like {0,0} when n is not a prime power.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
};
PrimePower factor_prime_power(std::uint64_t n);

// Smallest monic polynomial/irreducibility helpers over GF(p), exposed for tests.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

// Canonical injection GF(r) -> GF(r^2): sends the primitive element of the
// small field to a root of its defining polynomial inside <beta^(r+1)>.
// Image table indexed by small-field code. Throws on incompatible orders.
std::vector<FieldElement> subfield_embedding(const FieldSpec& small, const FieldSpec& big);

// Elements of the index-2 subfield GF(r) of GF(r^2), in code order.
std::vector<FieldElement> subfield_elements(const FieldSpec& big);

std::uint32_t subfield_order(const FieldSpec& big);

}  // namespace netclique
