#include "netclique/gf.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace netclique {

namespace {

using Poly = std::vector<std::uint32_t>;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (std::uint64_t{lead} * m[i]) % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod_x(std::uint64_t k, const Poly& m, std::uint32_t p) {
  Poly result{1};
  Poly base = poly_mod(Poly{0, 1}, m, p);
  while (k) {
    if (k & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Order of x modulo m is exactly q-1.
bool variable_is_primitive(std::uint32_t p, const Poly& m, std::uint64_t q) {
  const Poly one{1};
  if (poly_powmod_x(q - 1, m, p) != one) return false;
  for (std::uint64_t ell : prime_factors(q - 1)) {
    if (poly_powmod_x((q - 1) / ell, m, p) == one) return false;
  }
  return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t ell : factors) {
      std::uint64_t acc = 1, b = g, k = (p - 1) / ell;
      while (k) {
        if (k & 1) acc = acc * b % p;
        b = b * b % p;
        k >>= 1;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

std::filesystem::path cache_path(std::uint32_t p, std::uint32_t e) {
  const char* dir = std::getenv("NETCLIQUE_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / ("gf-" + std::to_string(p) + "-" + std::to_string(e) + ".poly");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower factor_prime_power(std::uint64_t n) {
  if (n < 2) return {};
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  std::uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return {};
  return {static_cast<std::uint32_t>(p), e};
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  // Trial division by every monic polynomial of degree 1 .. deg/2.
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t t = n;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::with_polynomial(std::uint32_t p, std::vector<std::uint32_t> poly) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (poly.size() < 2 || poly.back() != 1) throw std::invalid_argument("defining polynomial must be monic of degree >= 1");
  for (auto c : poly) {
    if (c >= p) throw std::invalid_argument("polynomial coefficient out of range");
  }
  const auto e = static_cast<std::uint32_t>(poly.size() - 1);
  const std::uint64_t q = ipow(p, e);
  if (q > kMaxOrder) throw std::invalid_argument("field order " + std::to_string(q) + " exceeds 2^20");
  if (!is_irreducible(p, poly)) throw std::invalid_argument("defining polynomial is reducible");

  FieldSpec f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.poly_ = std::move(poly);

  const std::uint32_t n = f.q_ - 1;
  f.packed_of_log_.assign(n, 0);
  f.code_of_packed_.assign(f.q_, 0);
  std::vector<std::uint32_t> digits(e, 0);
  digits[0] = 1;
  auto pack = [&] {
    std::uint64_t v = 0;
    for (std::uint32_t i = e; i-- > 0;) v = v * p + digits[i];
    return static_cast<std::uint32_t>(v);
  };
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::uint32_t v = pack();
    if (k > 0 && v == 1) throw std::invalid_argument("variable class is not primitive");
    f.packed_of_log_[k] = v;
    f.code_of_packed_[v] = k + 1;
    // multiply by x and reduce with x^e = -(c_0 + ... + c_{e-1} x^{e-1})
    const std::uint32_t top = digits[e - 1];
    for (std::uint32_t i = e - 1; i > 0; --i) digits[i] = digits[i - 1];
    digits[0] = 0;
    for (std::uint32_t i = 0; i < e; ++i) {
      digits[i] = static_cast<std::uint32_t>((digits[i] + p - (std::uint64_t{top} * f.poly_[i]) % p) % p);
    }
  }
  if (pack() != 1) throw std::invalid_argument("variable class is not primitive");

  f.zech_.assign(n, -1);
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::uint32_t v = f.packed_of_log_[k];
    const std::uint32_t low = v % p;
    const std::uint32_t w = v - low + (low + 1) % p;
    const std::uint32_t code = f.code_of_packed_[w];
    f.zech_[k] = (w == 0) ? -1 : static_cast<std::int32_t>(code - 1);
  }
  f.half_ = (p == 2) ? 0 : n / 2;
  return f;
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20");
  }
  if (e == 1) {
    const std::uint32_t g = smallest_primitive_root(p);
    return with_polynomial(p, {(p - g) % p, 1});
  }
  // Enumerate (c_0, ..., c_{e-1}) with c_0 most significant.
  Poly poly(e + 1, 0);
  poly[e] = 1;
  for (std::uint64_t n = 0; n < q; ++n) {
    std::uint64_t t = n;
    for (std::uint32_t i = e; i-- > 0;) {
      poly[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (poly[0] == 0) continue;
    if (!variable_is_primitive(p, poly, q)) continue;
    if (!is_irreducible(p, poly)) continue;
    return with_polynomial(p, poly);
  }
  throw std::logic_error("no primitive polynomial found");
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e) {
  const auto path = cache_path(p, e);
  if (!path.empty()) {
    std::ifstream in(path);
    Poly poly;
    std::uint32_t c;
    while (in >> c) poly.push_back(c);
    if (!poly.empty()) {
      try {
        return std::make_shared<const FieldSpec>(FieldSpec::with_polynomial(p, poly));
      } catch (const std::invalid_argument&) {
        // stale or corrupt cache entry; recompute below
      }
    }
  }
  auto field = std::make_shared<const FieldSpec>(FieldSpec::make(p, e));
  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    for (auto c : field->poly()) out << c << ' ';
    out << '\n';
  }
  return field;
}

FieldElement FieldSpec::from_log(std::int64_t k) const {
  const std::int64_t n = q_ - 1;
  std::int64_t r = k % n;
  if (r < 0) r += n;
  return {static_cast<std::uint32_t>(r + 1)};
}

std::uint32_t FieldSpec::log(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("logarithm of zero");
  return a.code - 1;
}

FieldElement FieldSpec::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {code_of_packed_[static_cast<std::uint32_t>(r)]};
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint32_t n = q_ - 1;
  const std::uint32_t i = a.code - 1;
  const std::uint32_t j = b.code - 1;
  const std::uint32_t k = (j >= i) ? j - i : j + n - i;
  const std::int32_t z = zech_[k];
  if (z < 0) return {0};
  return {(i + static_cast<std::uint32_t>(z)) % n + 1};
}

FieldElement FieldSpec::neg(FieldElement a) const {
  if (a.code == 0 || half_ == 0) return a;
  return {(a.code - 1 + half_) % (q_ - 1) + 1};
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  if (a.code == 0 || b.code == 0) return {0};
  return {(a.code - 1 + b.code - 1) % (q_ - 1) + 1};
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t n = q_ - 1;
  return {(n - (a.code - 1)) % n + 1};
}

FieldElement FieldSpec::pow(FieldElement a, std::int64_t k) const {
  if (a.code == 0) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return k == 0 ? one() : zero();
  }
  const std::int64_t n = q_ - 1;
  std::int64_t km = k % n;
  if (km < 0) km += n;
  const std::uint64_t l = (std::uint64_t{a.code - 1} * static_cast<std::uint64_t>(km)) % static_cast<std::uint64_t>(n);
  return {static_cast<std::uint32_t>(l + 1)};
}

FieldElement FieldSpec::frobenius(FieldElement a, std::uint32_t i) const {
  if (i >= e_) throw std::invalid_argument("Frobenius index out of range");
  if (a.code == 0) return a;
  const std::uint64_t n = q_ - 1;
  const std::uint64_t l = ((a.code - 1) * (ipow(p_, i) % n)) % n;
  return {static_cast<std::uint32_t>(l + 1)};
}

FieldElement FieldSpec::norm_to_subfield(FieldElement a) const {
  const std::uint32_t r = subfield_order(*this);
  const FieldElement out = pow(a, r + 1);
  if (out.code != 0 && (out.code - 1) % (r + 1) != 0) {
    throw std::logic_error("norm left the subfield");
  }
  return out;
}

std::uint32_t FieldSpec::power_class(FieldElement a, std::uint32_t d) const {
  if (a.code == 0) throw std::domain_error("power class of zero");
  if (d == 0 || (q_ - 1) % d != 0) throw std::invalid_argument("d must divide q-1");
  return (a.code - 1) % d;
}

bool FieldSpec::in_subfield(FieldElement a, std::uint32_t d) const {
  if (d == 0 || e_ % d != 0) throw std::invalid_argument("subfield degree must divide e");
  if (a.code == 0) return true;
  const std::uint32_t sub = static_cast<std::uint32_t>((q_ - 1) / (ipow(p_, d) - 1));
  return (a.code - 1) % sub == 0;
}

std::vector<std::uint32_t> FieldSpec::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> c(e_, 0);
  if (a.code == 0) return c;
  std::uint32_t v = packed_of_log_[a.code - 1];
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElement FieldSpec::from_coefficients(std::span<const std::uint32_t> c) const {
  if (c.size() != e_) throw std::invalid_argument("coefficient vector has wrong length");
  std::uint32_t v = 0;
  for (std::uint32_t i = e_; i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v = v * p_ + c[i];
  }
  if (v == 0) return {0};
  return {code_of_packed_[v]};
}

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

std::uint32_t subfield_order(const FieldSpec& big) {
  if (big.e() % 2 != 0) throw std::invalid_argument("field has odd degree; no index-2 subfield");
  return static_cast<std::uint32_t>(ipow(big.p(), big.e() / 2));
}

std::vector<FieldElement> subfield_elements(const FieldSpec& big) {
  const std::uint32_t r = subfield_order(big);
  std::vector<FieldElement> out;
  out.reserve(r);
  out.push_back(big.zero());
  for (std::uint32_t k = 0; k + 1 < r; ++k) out.push_back(big.from_log(std::int64_t{k} * (r + 1)));
  return out;
}

std::vector<FieldElement> subfield_embedding(const FieldSpec& small, const FieldSpec& big) {
  if (small.p() != big.p() || std::uint64_t{small.q()} * small.q() != big.q()) {
    throw std::invalid_argument("subfield embedding needs |big| = |small|^2");
  }
  const std::uint32_t r = small.q();
  // Find a root of the small field's polynomial among primitive elements of <beta^(r+1)>.
  const auto& poly = small.poly();
  auto eval = [&](FieldElement z) {
    FieldElement acc = big.zero();
    for (std::size_t i = poly.size(); i-- > 0;) acc = big.add(big.mul(acc, z), big.from_int(poly[i]));
    return acc;
  };
  for (std::uint32_t k = 1; k < r - 1 || (r == 2 && k == 1); ++k) {
    if (std::gcd(k, r - 1) != 1) continue;
    const FieldElement gamma = big.from_log(std::int64_t{k} * (r + 1));
    if (eval(gamma).code != 0) continue;
    std::vector<FieldElement> image(r);
    image[0] = big.zero();
    for (std::uint32_t c = 1; c < r; ++c) image[c] = big.pow(gamma, c - 1);
    return image;
  }
  if (r == 2) return {big.zero(), big.one()};
  throw std::logic_error("no root of the subfield polynomial found");
}

}  // namespace netclique
