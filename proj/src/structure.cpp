#include "netclique/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "json.hpp"

namespace netclique {

std::string Witness::to_json() const {
  nlohmann::json j;
  j["r"] = net.r;
  j["m"] = net.m();
  j["directions"] = net.directions;
  j["L"] = {{"dir", line_direction}, {"offset", line_offset}};
  j["x"] = x;
  j["A"] = A;
  j["clique"] = clique;
  j["assertion"] = assertion;
  return j.dump();
}

Witness make_witness(const LinePointConfig& cfg, std::vector<Vertex> clique, std::string assertion) {
  Witness w;
  w.net = cfg.net;
  w.line_direction = cfg.line_direction;
  w.line_offset = cfg.line_offset.code;
  w.x = cfg.x.code;
  w.A = cfg.A;
  w.clique = std::move(clique);
  w.assertion = std::move(assertion);
  return w;
}

Clique line(const FieldSpec& f, const NetSpec& net, std::uint32_t direction, FieldElement offset) {
  if (!net.has_direction(direction)) {
    throw std::invalid_argument("direction " + std::to_string(direction) + " is not a class of the net");
  }
  const FieldElement scale = f.from_log(direction);
  std::vector<Vertex> pts;
  for (FieldElement s : subfield_elements(f)) pts.push_back(f.add(f.mul(scale, s), offset).code);
  return Clique{std::move(pts)};
}

LinePointConfig make_config(const FieldSpec& f, const NetSpec& net, std::uint32_t direction, FieldElement offset,
                            FieldElement x) {
  LinePointConfig cfg;
  cfg.net = net;
  cfg.line_direction = direction;
  cfg.line_offset = offset;
  cfg.x = x;
  cfg.L = line(f, net, direction, offset).vertices;
  if (std::binary_search(cfg.L.begin(), cfg.L.end(), x.code)) throw std::invalid_argument("x lies on L");
  for (Vertex a : cfg.L) {
    if (net.has_direction(direction_class(f, f.sub(x, FieldElement{a})))) cfg.A.push_back(a);
  }
  return cfg;
}

Clique baker_clique(const LinePointConfig& cfg) {
  std::vector<Vertex> v = cfg.A;
  v.push_back(cfg.x.code);
  return Clique{std::move(v)};
}

Clique baker_conjugate_clique(const FieldSpec& f, const LinePointConfig& cfg) {
  std::vector<Vertex> sub;
  for (FieldElement s : subfield_elements(f)) sub.push_back(s.code);
  std::sort(sub.begin(), sub.end());
  if (sub != cfg.L) throw std::invalid_argument("conjugate Baker clique needs L = F_r");
  std::vector<Vertex> v = cfg.A;
  v.push_back(cfg.x.code);
  v.push_back(f.frobenius(cfg.x, f.e() / 2).code);
  return Clique{std::move(v)};
}

Clique inverse_companion(const FieldSpec& f, const Graph& g, const Clique& c) {
  if (!c.contains(0)) throw std::invalid_argument("clique does not contain 0");
  std::vector<Vertex> v{0};
  for (Vertex x : c.vertices) {
    if (x != 0) v.push_back(f.inv(FieldElement{x}).code);
  }
  Clique out{std::move(v)};
  if (out.size() != c.size() || !is_clique(g, out.vertices)) throw std::logic_error("inverted set is not a clique");
  return out;
}

bool is_coclique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.size()) throw std::out_of_range("vertex out of range");
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_maximal_coclique(const Graph& g, std::span<const Vertex> s) {
  if (!is_coclique(g, s)) return false;
  std::vector<std::uint8_t> in(g.size(), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (in[v]) continue;
    bool touches = false;
    for (Vertex u : s) touches = touches || g.adjacent(u, v);
    if (!touches) return false;
  }
  return true;
}

GoryainovSet goryainov_set(const FieldSpec& f, const Graph& paley) {
  const std::uint32_t r = subfield_order(f);
  if (r % 2 == 0) throw std::invalid_argument("needs odd r");
  const FieldElement omega = f.from_log(r - 1);
  std::vector<Vertex> q;
  for (std::uint32_t i = 0; i < (r + 1) / 2; ++i) q.push_back(f.pow(omega, 2 * i).code);
  GoryainovSet out;
  out.is_clique = r % 4 == 3;
  if (out.is_clique) q.push_back(0);
  out.set = Clique{q};
  out.maximal = out.is_clique ? is_maximal_clique(paley, out.set.vertices) : is_maximal_coclique(paley, out.set.vertices);

  // omega^i = x + y eps with x, y in F_r; N(omega^(2i) - 1) = -4 d y^2.
  const FieldElement eps = f.from_log((r + 1) / 2);
  const FieldElement d = f.mul(eps, eps);
  const FieldElement two = f.from_int(2), four = f.from_int(4);
  const std::uint32_t half = f.e() / 2;
  bool ok = f.in_subfield(d, half);
  for (std::uint32_t i = 0; i <= r && ok; ++i) {
    const FieldElement z = f.pow(omega, i);
    const FieldElement zr = f.frobenius(z, half);
    const FieldElement x = f.div(f.add(z, zr), two);
    const FieldElement y = f.div(f.sub(z, zr), f.mul(two, eps));
    ok = f.in_subfield(x, half) && f.in_subfield(y, half) && f.add(x, f.mul(y, eps)) == z;
    const FieldElement lhs = f.pow(f.sub(f.mul(z, z), f.one()), r + 1);
    const FieldElement rhs = f.neg(f.mul(four, f.mul(d, f.mul(y, y))));
    ok = ok && lhs == rhs;
  }
  out.norm_identity = ok;
  return out;
}

FieldElement mobius_image(const FieldSpec& f, FieldElement z) {
  const std::uint32_t r = subfield_order(f);
  const FieldElement inv_eps = f.inv(f.from_log((r + 1) / 2));
  if (z == f.one()) return inv_eps;
  const FieldElement t = f.add(f.one(), f.div(f.from_int(2), f.sub(z, f.one())));
  return f.mul(inv_eps, t);
}

MobiusCheck goryainov_mobius_map(const FieldSpec& f, const Graph& paley) {
  const std::uint32_t r = subfield_order(f);
  const GoryainovSet gs = goryainov_set(f, paley);
  MobiusCheck out;
  std::vector<Vertex> img;
  for (Vertex z : gs.set.vertices) {
    const Vertex w = mobius_image(f, FieldElement{z}).code;
    out.images.emplace_back(z, w);
    img.push_back(w);
  }
  out.image = Clique{img};
  const FieldElement x = f.inv(f.from_log((r + 1) / 2));
  std::vector<std::uint32_t> even;
  for (std::uint32_t c = 0; c <= r; c += 2) even.push_back(c);
  const LinePointConfig cfg = make_config(f, make_net_spec(r, even), 0, f.zero(), x);
  out.expected = gs.is_clique ? baker_conjugate_clique(f, cfg) : baker_clique(cfg);
  out.matches = out.image == out.expected && img.size() == out.image.size();
  out.zero_image_ok = mobius_image(f, f.zero()) == f.neg(x);
  return out;
}

Clique cxl_closure(const Graph& g, const LinePointConfig& cfg) {
  std::vector<Vertex> seed = cfg.A;
  seed.push_back(cfg.x.code);
  Clique c{common_neighbors(g, seed)};
  if (!is_clique(g, c.vertices)) throw TheoremFalsified(make_witness(cfg, c.vertices, "({x} u A)^perp is not a clique"));
  if (!is_maximal_clique(g, c.vertices)) throw TheoremFalsified(make_witness(cfg, c.vertices, "closure is not maximal"));
  return c;
}

UniquenessReport verify_unique_maximal(const Graph& g, const LinePointConfig& cfg) {
  UniquenessReport rep;
  rep.closure = cxl_closure(g, cfg);
  std::vector<Vertex> seed = cfg.A;
  seed.push_back(cfg.x.code);
  std::vector<Clique> found;
  rep.maximal_cliques = enumerate_maximal_cliques(g, seed, [&](const Clique& c) { found.push_back(c); });
  rep.unique = rep.maximal_cliques == 1 && found.front() == rep.closure;
  if (!rep.unique) {
    throw TheoremFalsified(make_witness(cfg, found.empty() ? std::vector<Vertex>{} : found.front().vertices,
                                        "{x} u A lies in " + std::to_string(rep.maximal_cliques) + " maximal cliques"));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Sizes.

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t v = 1;
  while (e--) v *= b;
  return v;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

PrimePower checked_power(std::uint32_t r) {
  const PrimePower pp = factor_prime_power(r);
  if (pp.p == 0) throw std::invalid_argument("r must be a prime power");
  return pp;
}

}  // namespace

bool satisfies_divisibility(std::uint32_t r, std::uint32_t m, std::uint32_t h, std::uint32_t f) {
  const PrimePower pp = checked_power(r);
  if (f > pp.e || h == 0 || m < 2) return false;
  const std::uint64_t pf = ipow(pp.p, f);
  if (r % pf != 0 || (m - 1) % pf != 0) return false;
  const std::uint64_t g = std::gcd(std::gcd(std::uint64_t{r} - 1, std::uint64_t{m} - 2), pf - 1);
  return g % h == 0;
}

bool excluded_pattern(std::uint32_t r, std::uint32_t m, std::uint32_t h, std::uint32_t f) {
  const PrimePower pp = checked_power(r);
  const std::uint64_t pf = ipow(pp.p, f);
  const std::uint64_t n = m - 1;
  if (n == pf && !is_power_of(h + 1, pp.p)) return true;
  if (n == (std::uint64_t{h} + 1) * pf && is_power_of(h + 1, pp.p)) return true;
  if (n + 2 * pf == r && h != 2) return true;
  return false;
}

std::vector<SizeCertificate> cxl_size_candidates(std::uint32_t r, std::uint32_t m) {
  const PrimePower pp = checked_power(r);
  if (!(2 < m && m + 1 < r)) throw std::invalid_argument("size candidates need 2 < m < r-1");
  std::vector<SizeCertificate> out;
  const bool p_divides = (m - 1) % pp.p == 0;
  for (std::uint32_t f = 0; f <= pp.e; ++f) {
    const std::uint64_t pf = ipow(pp.p, f);
    if (r % pf != 0 || (m - 1) % pf != 0) continue;
    const std::uint64_t g = std::gcd(std::gcd(std::uint64_t{r} - 1, std::uint64_t{m} - 2), pf - 1);
    for (std::uint64_t h = 1; h <= g; ++h) {
      if (g % h != 0) continue;
      const auto hh = static_cast<std::uint32_t>(h);
      if (p_divides && excluded_pattern(r, m, hh, f)) continue;
      out.push_back({r, m, hh, f, pf});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Realisation of certificates by subsets of F_r.

std::vector<LinearMap> admissible_group(const FieldSpec& small, std::span<const FieldElement> A) {
  std::vector<std::uint8_t> in(small.q(), 0);
  for (FieldElement a : A) in[a.code] = 1;
  std::vector<LinearMap> out;
  for (std::uint32_t c = 1; c < small.q(); ++c) {
    for (std::uint32_t d = 0; d < small.q(); ++d) {
      const FieldElement cc{c}, dd{d};
      bool keeps = true;
      for (FieldElement a : A) {
        if (!in[small.add(small.mul(cc, a), dd).code]) {
          keeps = false;
          break;
        }
      }
      if (!keeps) continue;
      if (cc != small.one()) {
        const FieldElement fixed = small.div(dd, small.sub(small.one(), cc));
        if (!in[fixed.code]) continue;
      }
      out.push_back({cc, dd});
    }
  }
  return out;
}

namespace {

constexpr std::uint64_t kSearchBudget = 2'000'000;

struct Builder {
  const FieldSpec& F;
  SizeCertificate cert;
  std::uint64_t order;  // h p^f
  std::uint64_t attempts = 0;

  bool admissible(const std::vector<FieldElement>& A) {
    ++attempts;
    return admissible_group(F, A).size() == order;
  }

  // G-orbits on F \ core, ordered by their smallest code; picks a
  // lexicographically first union reaching the target size that passes.
  std::optional<std::vector<FieldElement>> orbit_union(const std::vector<LinearMap>& G,
                                                       const std::vector<FieldElement>& core, std::size_t target) {
    std::vector<std::uint8_t> used(F.q(), 0);
    for (FieldElement a : core) used[a.code] = 1;
    std::vector<std::vector<FieldElement>> orbits;
    for (std::uint32_t z = 0; z < F.q(); ++z) {
      if (used[z]) continue;
      std::vector<FieldElement> orb;
      for (const auto& g : G) {
        const FieldElement w = F.add(F.mul(g.c, FieldElement{z}), g.d);
        if (!used[w.code]) {
          used[w.code] = 1;
          orb.push_back(w);
        }
      }
      orbits.push_back(std::move(orb));
    }
    if (core.size() > target) return std::nullopt;
    std::vector<FieldElement> current = core;
    std::optional<std::vector<FieldElement>> found;
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
      if (current.size() == target) {
        if (attempts >= kSearchBudget) return true;
        auto sorted = current;
        std::sort(sorted.begin(), sorted.end());
        if (admissible(sorted)) {
          found = std::move(sorted);
          return true;
        }
        return false;
      }
      for (std::size_t k = from; k < orbits.size(); ++k) {
        if (current.size() + orbits[k].size() > target) continue;
        current.insert(current.end(), orbits[k].begin(), orbits[k].end());
        const bool stop = dfs(k + 1);
        current.resize(current.size() - orbits[k].size());
        if (stop) return true;
      }
      return false;
    };
    dfs(0);
    return found;
  }
};

std::vector<FieldElement> subfield_of(const FieldSpec& F, std::uint32_t d) {
  std::vector<FieldElement> out;
  for (FieldElement z : F.elements()) {
    if (F.in_subfield(z, d)) out.push_back(z);
  }
  return out;
}

// Span over K of `vectors` (as additive closure of K-multiples).
std::vector<FieldElement> k_span(const FieldSpec& F, const std::vector<FieldElement>& K,
                                 const std::vector<FieldElement>& vectors) {
  std::vector<std::uint8_t> in(F.q(), 0);
  std::vector<FieldElement> span{F.zero()};
  in[0] = 1;
  for (FieldElement v : vectors) {
    const std::vector<FieldElement> base = span;
    for (FieldElement k : K) {
      if (k == F.zero()) continue;
      const FieldElement kv = F.mul(k, v);
      for (FieldElement s : base) {
        const FieldElement t = F.add(s, kv);
        if (!in[t.code]) {
          in[t.code] = 1;
          span.push_back(t);
        }
      }
    }
  }
  std::sort(span.begin(), span.end());
  return span;
}

// Degree over F_p of the smallest subfield containing c.
std::uint32_t generated_degree(const FieldSpec& F, FieldElement c) {
  for (std::uint32_t d = 1; d <= F.e(); ++d) {
    if (F.e() % d == 0 && F.in_subfield(c, d)) return d;
  }
  return F.e();
}

}  // namespace

Construction construct_A(const FieldSpec& small, const SizeCertificate& cert) {
  const std::uint32_t r = small.q();
  if (cert.r != r) throw std::invalid_argument("certificate is for another field");
  bool listed = false;
  for (const auto& c : cxl_size_candidates(r, cert.m)) listed = listed || c == cert;
  if (!listed) throw std::invalid_argument("certificate is not among the size candidates");

  const std::uint32_t p = small.p();
  const std::size_t n = cert.m - 1;
  Builder b{small, cert, std::uint64_t{cert.h} * cert.pf};
  Construction out;
  out.cert = cert;
  auto finish = [&](std::vector<FieldElement> A, std::vector<LinearMap> G, std::string recipe) {
    std::sort(A.begin(), A.end());
    out.A = std::move(A);
    out.group = std::move(G);
    out.admissible_order = admissible_group(small, out.A).size();
    out.recipe = std::move(recipe);
    return out;
  };
  auto fail = [&](const std::string& why) -> Construction {
    Witness w;
    w.net.r = r;
    w.assertion = "no admissible A for r=" + std::to_string(r) + " m=" + std::to_string(cert.m) +
                  " h=" + std::to_string(cert.h) + " f=" + std::to_string(cert.f) + ": " + why;
    throw TheoremFalsified(std::move(w));
  };

  const FieldElement c = small.from_log((r - 1) / cert.h);  // order h

  if (n % p != 0 && cert.h == 1) {
    // n distinct nonzero elements summing to zero (or the complement of such a set).
    const bool complement = 2 * n > r - 1;
    const std::size_t k = complement ? r - 1 - n : n;
    std::vector<FieldElement> prefix;
    std::optional<std::vector<FieldElement>> found;
    std::function<bool(std::uint32_t)> choose = [&](std::uint32_t from) -> bool {
      if (prefix.size() + 2 == k) {
        if (b.attempts >= kSearchBudget) return true;
        FieldElement s = small.zero();
        for (FieldElement a : prefix) s = small.add(s, a);
        if (p == 2 && s == small.zero()) return false;
        std::vector<std::uint8_t> bad(r, 0);
        bad[0] = 1;
        bad[small.neg(s).code] = 1;
        for (FieldElement a : prefix) {
          bad[a.code] = 1;
          bad[small.sub(small.neg(s), a).code] = 1;
        }
        for (std::uint32_t z = 1; z < r; ++z) {
          const FieldElement bb{z};
          if (bad[z] || small.add(bb, bb) == small.neg(s)) continue;
          std::vector<FieldElement> A = prefix;
          A.push_back(bb);
          A.push_back(small.sub(small.neg(s), bb));
          if (complement) {
            std::vector<std::uint8_t> in(r, 0);
            for (FieldElement a : A) in[a.code] = 1;
            A.clear();
            for (std::uint32_t w = 1; w < r; ++w) {
              if (!in[w]) A.push_back(FieldElement{w});
            }
          }
          std::sort(A.begin(), A.end());
          if (b.admissible(A)) {
            found = std::move(A);
            return true;
          }
        }
        return false;
      }
      for (std::uint32_t z = from; z < r; ++z) {
        prefix.push_back(FieldElement{z});
        if (choose(z + 1)) return true;
        prefix.pop_back();
      }
      return false;
    };
    if (k >= 2) choose(1);
    if (found) return finish(*found, {LinearMap{}}, "sum-zero");
    if (auto A = b.orbit_union({LinearMap{}}, {}, n)) return finish(*A, {LinearMap{}}, "search");
    return fail("sum-zero selection exhausted");
  }

  if (n == cert.pf && n % p == 0) {
    // F_{p^d}-subspace with p^d = h+1 containing no larger subfield.
    std::uint32_t d = 0;
    for (std::uint64_t v = 1; v < cert.h + 1; v *= p) ++d;
    const std::vector<FieldElement> K = subfield_of(small, d);
    const std::uint32_t dim = cert.f / d;
    std::vector<FieldElement> basis;
    std::set<std::vector<FieldElement>> tried;
    std::optional<std::vector<FieldElement>> found;
    std::function<bool(std::uint32_t)> grow = [&](std::uint32_t from) -> bool {
      if (basis.size() == dim) {
        auto span = k_span(small, K, basis);
        if (!tried.insert(span).second) return false;
        if (b.attempts >= kSearchBudget) return true;
        if (b.admissible(span)) {
          found = std::move(span);
          return true;
        }
        return false;
      }
      const auto span = k_span(small, K, basis);
      for (std::uint32_t z = from; z < r; ++z) {
        if (std::binary_search(span.begin(), span.end(), FieldElement{z})) continue;
        basis.push_back(FieldElement{z});
        if (grow(z + 1)) return true;
        basis.pop_back();
      }
      return false;
    };
    grow(1);
    if (!found) return fail("no subspace avoids larger subfields");
    std::vector<LinearMap> G;
    for (FieldElement k : K) {
      if (k == small.zero()) continue;
      for (FieldElement t : *found) G.push_back({k, t});
    }
    return finish(*found, std::move(G), "subspace");
  }

  // B: greedy span of size p^f over K = F_p(c); G = <z -> cz, translations by B>.
  const std::vector<FieldElement> K = subfield_of(small, generated_degree(small, c));
  std::vector<FieldElement> B{small.zero()};
  std::vector<FieldElement> basis;
  for (std::uint32_t z = 1; B.size() < cert.pf && z < r; ++z) {
    if (std::binary_search(B.begin(), B.end(), FieldElement{z})) continue;
    basis.push_back(FieldElement{z});
    B = k_span(small, K, basis);
  }
  if (B.size() != cert.pf) return fail("translation subgroup of the wrong size");
  std::vector<LinearMap> G;
  FieldElement ci = small.one();
  for (std::uint32_t i = 0; i < cert.h; ++i, ci = small.mul(ci, c)) {
    for (FieldElement t : B) G.push_back({ci, t});
  }
  if (auto A = b.orbit_union(G, B, n)) return finish(*A, std::move(G), cert.h > 1 ? "orbits" : "cosets");
  return fail("orbit unions exhausted");
}

LinePointConfig net_for_subset(const FieldSpec& big, const FieldSpec& small, std::span<const FieldElement> A) {
  const std::uint32_t r = subfield_order(big);
  if (small.q() != r) throw std::invalid_argument("small field does not match");
  const auto emb = subfield_embedding(small, big);
  const FieldElement x = big.primitive();
  std::vector<std::uint32_t> dirs{0};
  for (FieldElement a : A) dirs.push_back(direction_class(big, big.sub(x, emb[a.code])));
  const NetSpec net = make_net_spec(r, std::move(dirs));
  LinePointConfig cfg = make_config(big, net, 0, big.zero(), x);
  std::vector<Vertex> expect;
  for (FieldElement a : A) expect.push_back(emb[a.code].code);
  std::sort(expect.begin(), expect.end());
  if (expect != cfg.A) throw std::logic_error("net does not realise the prescribed trace");
  return cfg;
}

LinePointConfig normalise_config(const FieldSpec& f, const LinePointConfig& cfg) {
  const std::uint32_t r = cfg.net.r;
  const FieldElement scale = f.from_log(-static_cast<std::int64_t>(cfg.line_direction));
  auto move = [&](FieldElement z) { return f.mul(f.sub(z, cfg.line_offset), scale); };
  std::vector<std::uint32_t> dirs;
  for (auto k : cfg.net.directions) dirs.push_back((k + r + 1 - cfg.line_direction) % (r + 1));
  return make_config(f, make_net_spec(r, std::move(dirs)), 0, f.zero(), move(cfg.x));
}

StabilizerReport verify_stabilizer_structure(const FieldSpec& f, const LinePointConfig& cfg0) {
  const LinePointConfig cfg = normalise_config(f, cfg0);
  const Graph g = build_net_graph(f, cfg.net);
  const Clique C = cxl_closure(g, cfg);
  StabilizerReport rep;
  rep.clique_size = C.size();
  std::vector<std::uint8_t> inC(f.q(), 0), inL(f.q(), 0), inA(f.q(), 0);
  for (Vertex v : C.vertices) inC[v] = 1;
  for (Vertex v : cfg.L) inL[v] = 1;
  for (Vertex v : cfg.A) inA[v] = 1;
  const auto sub = subfield_elements(f);
  for (FieldElement c : sub) {
    if (c == f.zero()) continue;
    for (FieldElement d : sub) {
      const FieldElement img = f.add(f.mul(c, cfg.x), d);
      if (inC[img.code] && !inL[img.code]) rep.group.push_back({c, d});
    }
  }
  std::sort(rep.group.begin(), rep.group.end());
  auto apply_map = [&](const LinearMap& m, FieldElement z) { return f.add(f.mul(m.c, z), m.d); };

  rep.closed = true;
  for (const auto& a : rep.group) {
    for (const auto& b : rep.group) {
      const LinearMap ab{f.mul(a.c, b.c), f.add(f.mul(a.c, b.d), a.d)};
      if (!std::binary_search(rep.group.begin(), rep.group.end(), ab)) rep.closed = false;
    }
  }
  std::vector<Vertex> orbit;
  for (const auto& m : rep.group) orbit.push_back(apply_map(m, cfg.x).code);
  std::sort(orbit.begin(), orbit.end());
  std::vector<Vertex> outside;
  for (Vertex v : C.vertices) {
    if (!inL[v]) outside.push_back(v);
  }
  rep.transitive = orbit == outside && orbit.size() == rep.group.size();

  rep.preserves_clique = true;
  for (const auto& m : rep.group) {
    for (Vertex v : C.vertices) rep.preserves_clique = rep.preserves_clique && inC[apply_map(m, FieldElement{v}).code];
  }

  std::set<Vertex> fixed;
  for (const auto& m : rep.group) {
    if (m.c == f.one()) {
      ++rep.translations;
    } else {
      fixed.insert(f.div(m.d, f.sub(f.one(), m.c)).code);
    }
  }
  rep.h = rep.translations ? rep.group.size() / rep.translations : 0;
  rep.fixed_points_in_A = std::all_of(fixed.begin(), fixed.end(), [&](Vertex v) { return inA[v] != 0; });
  if (fixed.empty()) {
    rep.fixed_points_single_orbit = true;
  } else {
    std::set<Vertex> orb;
    for (const auto& m : rep.group) orb.insert(apply_map(m, FieldElement{*fixed.begin()}).code);
    rep.fixed_points_single_orbit = orb == fixed;
  }
  return rep;
}

CynReport cyn_example(const FieldSpec& f) {
  const std::uint32_t r = subfield_order(f);
  if (r % 2 == 0 || r <= 9) throw std::invalid_argument("the C_{y,N} example needs odd r > 9");
  CynReport rep;
  rep.r = r;
  const FieldElement x = f.one(), y = f.primitive();
  std::vector<FieldElement> H;
  for (std::uint32_t k = 0; k + 1 < f.q(); k += 2 * (r + 1)) H.push_back(f.from_log(k));
  std::vector<std::uint32_t> dirs{0, 1};
  for (FieldElement u : H) dirs.push_back(direction_class(f, f.sub(u, y)));
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  rep.net = make_net_spec(r, dirs);
  const Graph g = build_net_graph(f, rep.net);

  std::vector<Vertex> cv{0};
  for (FieldElement u : H) {
    cv.push_back(f.mul(x, u).code);
    cv.push_back(f.mul(y, u).code);
  }
  const Clique C{cv};
  rep.clique_size = is_clique(g, C.vertices) ? C.size() : 0;

  const LinePointConfig yl = make_config(f, rep.net, 0, f.zero(), y);
  const Clique cyl = verify_unique_maximal(g, yl).closure;
  rep.cyl_size = cyl.size();
  rep.clique_is_cyl = cyl == C;

  const FieldElement w = f.sub(y, x);
  const LinePointConfig yn = make_config(f, rep.net, direction_class(f, w), f.zero(), y);
  rep.cyn_size = verify_unique_maximal(g, yn).closure.size();
  rep.expected_cyn = r % 4 == 1 ? (r + 5) / 2 : (r + 3) / 2;

  std::vector<Vertex> reflected;
  for (Vertex a : yn.A) reflected.push_back(f.sub(w, FieldElement{a}).code);
  std::sort(reflected.begin(), reflected.end());
  rep.reflection_preserves_n0 = reflected == yn.A;
  return rep;
}

std::vector<Permutation> agaml2_generators(const FieldSpec& f) {
  const std::uint32_t half = f.e() / 2;
  const FieldElement beta = f.primitive();
  const FieldElement denom = f.sub(beta, f.frobenius(beta, half));
  std::vector<AffineMap> maps;
  for (std::uint32_t k = 0; k < f.e(); ++k) maps.push_back({f.one(), f.from_log(k), 0});
  maps.push_back({beta, f.zero(), 0});
  maps.push_back({f.one(), f.zero(), half});
  maps.push_back({f.one(), f.zero(), 1 % f.e()});
  std::vector<Permutation> out;
  for (const auto& m : maps) out.push_back(to_permutation(f, m));
  // u + v beta -> (u + v) + v beta
  Permutation t(f.q());
  for (std::uint32_t z = 0; z < f.q(); ++z) {
    const FieldElement zz{z};
    const FieldElement v = f.div(f.sub(zz, f.frobenius(zz, half)), denom);
    t[z] = f.add(zz, v).code;
  }
  out.push_back(std::move(t));
  return out;
}

NonlineResult search_nonline_max_cliques(const FieldSpec& f, std::uint32_t m, bool classify) {
  const std::uint32_t r = subfield_order(f);
  if (m > r + 1) throw std::invalid_argument("degree exceeds r+1");
  NonlineResult res;
  res.r = r;
  res.m = m;
  std::set<Clique> nonlines;
  std::vector<std::uint32_t> dirs;
  EnumerationOptions opts;
  opts.min_size = r;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t from) {
    if (dirs.size() == m) {
      ++res.direction_sets;
      const NetSpec net = make_net_spec(r, dirs);
      const Graph g = build_net_graph(f, net);
      bool any = false;
      enumerate_maximal_cliques(
          g,
          [&](const Clique& c) {
            if (c.size() == r && !is_line(f, c.vertices)) {
              any = true;
              nonlines.insert(c);
            }
          },
          opts);
      res.sets_with_nonlines += any;
      return;
    }
    for (std::uint32_t c = from; c <= r; ++c) {
      if (r + 1 - c < m - dirs.size()) break;
      dirs.push_back(c);
      walk(c + 1);
      dirs.pop_back();
    }
  };
  walk(0);
  res.nonline_cliques.assign(nonlines.begin(), nonlines.end());
  if (classify && !res.nonline_cliques.empty()) {
    const auto gens = agaml2_generators(f);
    const auto& all = res.nonline_cliques;
    std::vector<std::size_t> parent(all.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t k = 0; k < all.size(); ++k) {
      for (const auto& p : gens) {
        const Clique img = act_on_clique(p, all[k]);
        const auto it = std::lower_bound(all.begin(), all.end(), img);
        if (it == all.end() || *it != img) throw std::logic_error("non-line cliques are not closed under AGammaL(2,r)");
        parent[find(k)] = find(static_cast<std::size_t>(it - all.begin()));
      }
    }
    for (std::size_t k = 0; k < all.size(); ++k) res.orbits += find(k) == k;
  }
  return res;
}

}  // namespace netclique
