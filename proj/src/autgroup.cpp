#include "netclique/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace netclique {

FieldElement apply(const FieldSpec& f, const AffineMap& g, FieldElement x) {
  return f.add(f.mul(g.a, f.frobenius(x, g.frob)), g.b);
}

AffineMap compose(const FieldSpec& f, const AffineMap& g, const AffineMap& h) {
  // g(h(x)) = a_g (a_h x^s + b_h)^t + b_g with s = p^(i_h), t = p^(i_g).
  AffineMap out;
  out.a = f.mul(g.a, f.frobenius(h.a, g.frob));
  out.b = f.add(f.mul(g.a, f.frobenius(h.b, g.frob)), g.b);
  out.frob = (g.frob + h.frob) % f.e();
  return out;
}

AffineMap inverse(const FieldSpec& f, const AffineMap& g) {
  if (g.a.code == 0) throw std::invalid_argument("affine map with a = 0 is not invertible");
  const std::uint32_t j = (f.e() - g.frob) % f.e();
  AffineMap out;
  out.frob = j;
  out.a = f.frobenius(f.inv(g.a), j);
  out.b = f.neg(f.frobenius(f.div(g.b, g.a), j));
  return out;
}

Permutation to_permutation(const FieldSpec& f, const AffineMap& g) {
  Permutation perm(f.q());
  for (std::uint32_t x = 0; x < f.q(); ++x) perm[x] = apply(f, g, FieldElement{x}).code;
  return perm;
}

std::vector<AffineMap> read_affine_generators(const FieldSpec& f, std::istream& in) {
  std::vector<AffineMap> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long a = -1, b = -1, i = -1;
    std::string rest;
    if (!(ls >> a >> b >> i) || (ls >> rest)) throw ParseError(lineno, "expected \"a_code b_code frob_index\"");
    if (a <= 0 || a >= f.q()) throw ParseError(lineno, "a must be a nonzero field code");
    if (b < 0 || b >= f.q()) throw ParseError(lineno, "b out of range");
    if (i < 0 || i >= f.e()) throw ParseError(lineno, "Frobenius index out of range");
    out.push_back({FieldElement{static_cast<std::uint32_t>(a)}, FieldElement{static_cast<std::uint32_t>(b)},
                   static_cast<std::uint32_t>(i)});
  }
  return out;
}

bool GroupSpec::has_multiplier(FieldElement a, std::uint32_t frob) const {
  if (!field) throw std::logic_error("not an affine group");
  if (a.code == 0) return false;
  return multiplier_mask[std::size_t{field->log(a)} * field->e() + frob] != 0;
}

std::uint64_t GroupSpec::multiplier_count() const {
  return static_cast<std::uint64_t>(std::count(multiplier_mask.begin(), multiplier_mask.end(), 1));
}

std::string GroupSpec::kind_name() const {
  switch (kind) {
    case Kind::paley: return "paley";
    case Kind::peisert: return "peisert";
    case Kind::net_linear: return "net-linear";
    case Kind::affine: return "affine";
    case Kind::taylor: return "taylor";
    case Kind::explicit_perm: return "explicit";
  }
  return "unknown";
}

namespace {

// Linear part (log a, i) packed as log a * e + i.
struct LinearOps {
  const FieldSpec& f;
  std::uint64_t qm1;
  std::uint32_t e;
  std::vector<std::uint64_t> ppow;  // p^i mod (q-1)

  explicit LinearOps(const FieldSpec& field) : f(field), qm1(field.q() - 1), e(field.e()) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      ppow.push_back(v % qm1);
      v = v * f.p();
    }
  }
  std::size_t size() const { return static_cast<std::size_t>(qm1) * e; }
  std::size_t pack(std::uint64_t la, std::uint32_t i) const { return static_cast<std::size_t>(la * e + i); }
  // (la, i) o (lc, j) = (la + lc p^i, i + j).
  std::size_t mul(std::size_t x, std::size_t y) const {
    const std::uint64_t la = x / e, lc = y / e;
    const std::uint32_t i = static_cast<std::uint32_t>(x % e), j = static_cast<std::uint32_t>(y % e);
    return pack((la + lc * ppow[i]) % qm1, (i + j) % e);
  }
};

std::vector<std::uint8_t> linear_closure(const LinearOps& ops, const std::vector<std::size_t>& gens) {
  std::vector<std::uint8_t> in(ops.size(), 0);
  std::vector<std::size_t> stack{ops.pack(0, 0)};
  in[stack.back()] = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t g : gens) {
      const std::size_t y = ops.mul(x, g);
      if (!in[y]) {
        in[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return in;
}

// Greedy generating set for a linear group given as a membership mask.
std::vector<std::size_t> linear_generators(const LinearOps& ops, const std::vector<std::uint8_t>& mask) {
  std::vector<std::size_t> gens;
  std::vector<std::uint8_t> have = linear_closure(ops, gens);
  for (std::size_t x = 0; x < mask.size(); ++x) {
    if (mask[x] && !have[x]) {
      gens.push_back(x);
      have = linear_closure(ops, gens);
    }
  }
  return gens;
}

std::vector<AffineMap> translation_generators(const FieldSpec& f) {
  std::vector<AffineMap> out;
  for (std::uint32_t k = 0; k < f.e(); ++k) out.push_back({f.one(), f.from_log(k), 0});
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("group order exceeds 64 bits");
  return out;
}

GroupSpec affine_from_mask(FieldPtr f, const std::vector<std::uint8_t>& mask, GroupSpec::Kind kind);

}  // namespace

GroupSpec make_affine_group(FieldPtr f, std::vector<AffineMap> gens, GroupSpec::Kind kind) {
  const FieldSpec& F = *f;
  const LinearOps ops(F);
  GroupSpec g;
  g.kind = kind;
  g.degree = F.q();
  g.field = f;
  g.affine_generators = std::move(gens);

  // Closure over full elements (log a, i, b).
  const std::size_t q = F.q();
  std::vector<std::uint8_t> seen(ops.size() * q, 0);
  auto key = [&](const AffineMap& m) { return ops.pack(F.log(m.a), m.frob) * q + m.b.code; };
  std::vector<AffineMap> stack{AffineMap{}};
  seen[key(stack.back())] = 1;
  std::uint64_t count = 1;
  while (!stack.empty()) {
    const AffineMap x = stack.back();
    stack.pop_back();
    for (const auto& gen : g.affine_generators) {
      const AffineMap y = compose(F, gen, x);
      const std::size_t k = key(y);
      if (!seen[k]) {
        seen[k] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  g.order = count;
  g.multiplier_mask.assign(ops.size(), 0);
  std::size_t translations = 0;
  for (std::size_t lin = 0; lin < ops.size(); ++lin) {
    for (std::size_t b = 0; b < q; ++b) {
      if (seen[lin * q + b]) g.multiplier_mask[lin] = 1;
    }
  }
  for (std::size_t b = 0; b < q; ++b) translations += seen[ops.pack(0, 0) * q + b];
  g.all_translations = translations == q;
  for (const auto& m : g.affine_generators) g.generators.push_back(to_permutation(F, m));
  return g;
}

namespace {

GroupSpec affine_from_mask(FieldPtr f, const std::vector<std::uint8_t>& mask, GroupSpec::Kind kind) {
  const FieldSpec& F = *f;
  const LinearOps ops(F);
  GroupSpec g;
  g.kind = kind;
  g.degree = F.q();
  g.field = f;
  g.affine_generators = translation_generators(F);
  for (std::size_t x : linear_generators(ops, mask)) {
    g.affine_generators.push_back({F.from_log(static_cast<std::int64_t>(x / ops.e)), F.zero(),
                                   static_cast<std::uint32_t>(x % ops.e)});
  }
  g.multiplier_mask = mask;
  g.all_translations = true;
  g.order = checked_mul(F.q(), g.multiplier_count());
  for (const auto& m : g.affine_generators) g.generators.push_back(to_permutation(F, m));
  return g;
}

}  // namespace

GroupSpec paley_group(FieldPtr f) {
  if (f->q() % 4 != 1) throw std::invalid_argument("Paley group needs q = 1 mod 4");
  const LinearOps ops(*f);
  std::vector<std::uint8_t> mask(ops.size(), 0);
  for (std::uint64_t la = 0; la < ops.qm1; la += 2) {
    for (std::uint32_t i = 0; i < ops.e; ++i) mask[ops.pack(la, i)] = 1;
  }
  GroupSpec g = affine_from_mask(f, mask, GroupSpec::Kind::paley);
  const std::uint64_t expected = std::uint64_t{f->e()} * f->q() * (f->q() - 1) / 2;
  if (g.order != expected) throw std::logic_error("Paley group order mismatch");
  g.certified_full = true;
  return g;
}

GroupSpec peisert_group(FieldPtr f) {
  if (f->p() % 4 != 3 || f->e() % 2 != 0) throw std::invalid_argument("Peisert group needs q = p^(2e) with p = 3 mod 4");
  const LinearOps ops(*f);
  const std::vector<std::uint8_t> mask = linear_closure(ops, {ops.pack(4 % ops.qm1, 0), ops.pack(1, 1 % ops.e)});
  GroupSpec g = affine_from_mask(f, mask, GroupSpec::Kind::peisert);
  const std::uint64_t expected = std::uint64_t{f->e()} * f->q() * (f->q() - 1) / 4;
  if (g.order != expected) throw std::logic_error("Peisert group order mismatch");
  switch (f->q()) {
    case 9: g.missing_factor = 2; break;
    case 49: g.missing_factor = 3; break;
    case 81: g.missing_factor = 6; break;
    default: break;
  }
  g.certified_full = g.missing_factor == 1;
  return g;
}

GroupSpec net_linear_group(FieldPtr f, const NetSpec& net) {
  const std::uint32_t r = subfield_order(*f);
  if (r != net.r) throw std::invalid_argument("field does not match net order");
  const LinearOps ops(*f);
  std::vector<std::uint8_t> mask(ops.size(), 0);
  for (std::uint64_t j = 0; j < ops.qm1; ++j) {
    for (std::uint32_t i = 0; i < ops.e; ++i) {
      bool keeps = true;
      for (auto k : net.directions) {
        if (!net.has_direction(static_cast<std::uint32_t>((k * ops.ppow[i] + j) % (r + 1)))) {
          keeps = false;
          break;
        }
      }
      if (keeps) mask[ops.pack(j, i)] = 1;
    }
  }
  return affine_from_mask(f, mask, GroupSpec::Kind::net_linear);
}

GroupSpec affine_group_from_generators(FieldPtr f, std::vector<AffineMap> gens) {
  for (const auto& m : gens) {
    if (m.a.code == 0 || m.a.code >= f->q() || m.b.code >= f->q() || m.frob >= f->e()) {
      throw std::invalid_argument("malformed affine generator");
    }
  }
  return make_affine_group(std::move(f), std::move(gens), GroupSpec::Kind::affine);
}

GroupSpec taylor_paley_group(FieldPtr f) {
  const FieldSpec& F = *f;
  const GroupSpec base = paley_group(f);
  const std::size_t q = F.q();
  const std::size_t n = 2 * (q + 1);
  using taylor::kInfMinus;
  using taylor::kInfPlus;
  auto vertex = [&](std::uint32_t x, int sign) { return sign > 0 ? taylor::plus(q, x) : taylor::minus(q, x); };

  GroupSpec g;
  g.kind = GroupSpec::Kind::taylor;
  g.degree = n;
  for (const auto& m : base.affine_generators) {
    Permutation p(n);
    p[kInfPlus] = kInfPlus;
    p[kInfMinus] = kInfMinus;
    for (std::uint32_t x = 0; x < q; ++x) {
      const std::uint32_t y = apply(F, m, FieldElement{x}).code;
      p[vertex(x, 1)] = vertex(y, 1);
      p[vertex(x, -1)] = vertex(y, -1);
    }
    g.generators.push_back(std::move(p));
  }
  Permutation swap(n);
  swap[kInfPlus] = kInfMinus;
  swap[kInfMinus] = kInfPlus;
  for (std::uint32_t x = 0; x < q; ++x) {
    swap[vertex(x, 1)] = vertex(x, -1);
    swap[vertex(x, -1)] = vertex(x, 1);
  }
  g.generators.push_back(std::move(swap));
  // inf^s <-> 0^s, x^s -> (-1/x)^(s chi(x)).
  Permutation phi(n);
  phi[kInfPlus] = vertex(0, 1);
  phi[kInfMinus] = vertex(0, -1);
  phi[vertex(0, 1)] = kInfPlus;
  phi[vertex(0, -1)] = kInfMinus;
  for (std::uint32_t x = 1; x < q; ++x) {
    const FieldElement y = F.neg(F.inv(FieldElement{x}));
    const int chi = F.power_class(FieldElement{x}, 2) == 0 ? 1 : -1;
    phi[vertex(x, 1)] = vertex(y.code, chi);
    phi[vertex(x, -1)] = vertex(y.code, -chi);
  }
  g.generators.push_back(std::move(phi));

  const std::size_t orbit = point_orbit(g.generators, kInfPlus, n).size();
  g.order = checked_mul(orbit, base.order);
  g.certified_full = orbit == n;
  return g;
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) return false;
  std::vector<std::uint8_t> hit(n, 0);
  for (Vertex v : perm) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != g.degree(perm[u])) return false;
    const auto img = g.row(perm[u]);
    bool ok = true;
    for_each_bit(g.row(u), [&](Vertex v) { ok = ok && test_bit(img, perm[v]); });
    if (!ok) return false;
  }
  return true;
}

std::optional<std::size_t> find_bad_generator(const Graph& g, const GroupSpec& grp) {
  for (std::size_t i = 0; i < grp.generators.size(); ++i) {
    if (!is_automorphism(g, grp.generators[i])) return i;
  }
  return std::nullopt;
}

std::vector<Vertex> point_orbit(std::span<const Permutation> gens, Vertex v, std::size_t degree) {
  std::vector<std::uint8_t> seen(degree, 0);
  std::vector<Vertex> out{v};
  seen[v] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& p : gens) {
      const Vertex w = p[out[k]];
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force search: individualisation and joint colour refinement on two
// copies of the graph, with a stabiliser tower over a refinement base.

namespace {

class PairRefiner {
 public:
  explicit PairRefiner(const Graph& g) : g_(g), n_(g.size()) {}

  // Colours over 2n points (left copy then right copy), ranks 0..C-1.
  // Returns false when the two sides stop being compatible.
  bool refine(std::vector<std::uint32_t>& col) const {
    std::size_t classes = count_classes(col);
    std::vector<std::vector<std::uint32_t>> sig(2 * n_);
    std::vector<std::uint32_t> order(2 * n_);
    for (;;) {
      for (std::size_t x = 0; x < 2 * n_; ++x) {
        auto& s = sig[x];
        s.assign(classes + 1, 0);
        s[0] = col[x];
        const std::size_t side = x < n_ ? 0 : n_;
        for_each_bit(g_.row(static_cast<Vertex>(x - side)), [&](Vertex w) { ++s[1 + col[side + w]]; });
      }
      std::iota(order.begin(), order.end(), 0u);
      std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
      std::uint32_t rank = 0;
      std::vector<std::uint32_t> next(2 * n_);
      std::vector<std::int64_t> balance;
      balance.push_back(0);
      for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) {
          if (balance.back() != 0) return false;
          ++rank;
          balance.push_back(0);
        }
        next[order[k]] = rank;
        balance.back() += order[k] < n_ ? 1 : -1;
      }
      if (balance.back() != 0) return false;
      const std::size_t now = static_cast<std::size_t>(rank) + 1;
      col.swap(next);
      if (now == classes) return true;
      classes = now;
    }
  }

  static std::size_t count_classes(const std::vector<std::uint32_t>& col) {
    std::uint32_t mx = 0;
    for (auto c : col) mx = std::max(mx, c);
    return col.empty() ? 0 : static_cast<std::size_t>(mx) + 1;
  }

  static void individualise(std::vector<std::uint32_t>& col, std::size_t n, Vertex u, Vertex v) {
    const auto fresh = static_cast<std::uint32_t>(count_classes(col));
    col[u] = fresh;
    col[n + v] = fresh;
  }

  // Smallest non-singleton class on the left (ties: lowest colour), or -1.
  std::int64_t target_cell(const std::vector<std::uint32_t>& col) const {
    std::vector<std::size_t> sizes(count_classes(col), 0);
    for (std::size_t x = 0; x < n_; ++x) ++sizes[col[x]];
    std::int64_t best = -1;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      if (sizes[c] > 1 && (best < 0 || sizes[c] < sizes[static_cast<std::size_t>(best)])) best = static_cast<std::int64_t>(c);
    }
    return best;
  }

  std::optional<Permutation> search(std::vector<std::uint32_t> col) const {
    if (!refine(col)) return std::nullopt;
    const std::int64_t cell = target_cell(col);
    if (cell < 0) {
      std::vector<Vertex> right_of(n_);
      for (std::size_t x = n_; x < 2 * n_; ++x) right_of[col[x]] = static_cast<Vertex>(x - n_);
      Permutation perm(n_);
      for (std::size_t x = 0; x < n_; ++x) perm[x] = right_of[col[x]];
      if (is_automorphism(g_, perm)) return perm;
      return std::nullopt;
    }
    Vertex u = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      if (col[x] == static_cast<std::uint32_t>(cell)) {
        u = static_cast<Vertex>(x);
        break;
      }
    }
    for (std::size_t y = 0; y < n_; ++y) {
      if (col[n_ + y] != static_cast<std::uint32_t>(cell)) continue;
      auto next = col;
      individualise(next, n_, u, static_cast<Vertex>(y));
      if (auto found = search(std::move(next))) return found;
    }
    return std::nullopt;
  }

 private:
  const Graph& g_;
  std::size_t n_;
};

}  // namespace

GroupSpec brute_force_automorphisms(const Graph& g, std::size_t vertex_cap) {
  const std::size_t n = g.size();
  if (n > vertex_cap) {
    throw std::invalid_argument("brute-force automorphism search is capped at " + std::to_string(vertex_cap) +
                                " vertices");
  }
  GroupSpec out;
  out.kind = GroupSpec::Kind::explicit_perm;
  out.degree = n;
  out.certified_full = true;
  out.order = 1;
  if (n <= 1) return out;

  const PairRefiner refiner(g);
  // Base: individualise the first vertex of the target cell until discrete.
  std::vector<Vertex> base;
  std::vector<std::vector<Vertex>> cells;
  std::vector<std::uint32_t> col(2 * n, 0);
  for (;;) {
    if (!refiner.refine(col)) throw std::logic_error("refinement disagrees with itself");
    const std::int64_t cell = refiner.target_cell(col);
    if (cell < 0) break;
    std::vector<Vertex> members;
    for (std::size_t x = 0; x < n; ++x) {
      if (col[x] == static_cast<std::uint32_t>(cell)) members.push_back(static_cast<Vertex>(x));
    }
    base.push_back(members.front());
    cells.push_back(std::move(members));
    PairRefiner::individualise(col, n, base.back(), base.back());
  }

  std::vector<Permutation> gens;
  std::uint64_t order = 1;
  for (std::size_t level = base.size(); level-- > 0;) {
    std::vector<std::uint8_t> in_orbit(n, 0);
    auto mark = [&] {
      std::fill(in_orbit.begin(), in_orbit.end(), 0);
      for (Vertex w : point_orbit(gens, base[level], n)) in_orbit[w] = 1;
    };
    mark();
    for (Vertex w : cells[level]) {
      if (in_orbit[w]) continue;
      std::vector<std::uint32_t> start(2 * n, 0);
      for (std::size_t j = 0; j < level; ++j) {
        if (!refiner.refine(start)) break;
        PairRefiner::individualise(start, n, base[j], base[j]);
      }
      PairRefiner::individualise(start, n, base[level], w);
      if (auto perm = refiner.search(std::move(start))) {
        gens.push_back(std::move(*perm));
        mark();
      }
    }
    order = checked_mul(order, static_cast<std::uint64_t>(std::count(in_orbit.begin(), in_orbit.end(), 1)));
  }
  out.order = order;
  out.generators = std::move(gens);
  return out;
}

// ---------------------------------------------------------------------------

Clique act_on_clique(const Permutation& perm, const Clique& c) {
  std::vector<Vertex> img;
  img.reserve(c.size());
  for (Vertex v : c.vertices) img.push_back(perm.at(v));
  return Clique{std::move(img)};
}

Clique act_on_clique(const FieldSpec& f, const AffineMap& g, const Clique& c) {
  std::vector<Vertex> img;
  img.reserve(c.size());
  for (Vertex v : c.vertices) img.push_back(apply(f, g, FieldElement{v}).code);
  return Clique{std::move(img)};
}

std::vector<Clique> orbit_by_closure(const GroupSpec& grp, const Clique& c, std::size_t cap) {
  std::unordered_set<Clique, CliqueHash> seen{c};
  std::vector<Clique> out{c};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& p : grp.generators) {
      Clique img = act_on_clique(p, out[k]);
      if (seen.insert(img).second) {
        if (out.size() >= cap) throw CapExceeded("orbit exceeds cap of " + std::to_string(cap));
        out.push_back(std::move(img));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t stabilizer_order_by_closure(const GroupSpec& grp, const Clique& c) {
  const std::uint64_t len = orbit_by_closure(grp, c).size();
  if (grp.order % len != 0) throw std::logic_error("orbit length does not divide the group order");
  return grp.order / len;
}

std::uint64_t stabilizer_order(const GroupSpec& grp, const Clique& c) {
  if (!grp.is_affine() || !grp.all_translations || c.size() < 2) return stabilizer_order_by_closure(grp, c);
  const FieldSpec& f = *grp.field;
  std::vector<std::uint8_t> member(f.q(), 0);
  for (Vertex v : c.vertices) member[v] = 1;
  const FieldElement c0{c.vertices[0]}, c1{c.vertices[1]};
  const FieldElement d = f.sub(c1, c0);
  std::uint64_t count = 0;
  for (Vertex u : c.vertices) {
    for (Vertex v : c.vertices) {
      if (u == v) continue;
      const FieldElement duv = f.sub(FieldElement{v}, FieldElement{u});
      for (std::uint32_t i = 0; i < f.e(); ++i) {
        const FieldElement a = f.div(duv, f.frobenius(d, i));
        if (!grp.has_multiplier(a, i)) continue;
        const AffineMap g{a, f.sub(FieldElement{u}, f.mul(a, f.frobenius(c0, i))), i};
        bool fixes = true;
        for (Vertex x : c.vertices) {
          if (!member[apply(f, g, FieldElement{x}).code]) {
            fixes = false;
            break;
          }
        }
        count += fixes;
      }
    }
  }
  return count;
}

std::map<std::size_t, std::uint64_t> OrbitTable::counts() const {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& o : orbits) ++out[o.representative.size()];
  return out;
}

std::uint64_t OrbitTable::total_cliques() const {
  std::uint64_t t = 0;
  for (const auto& o : orbits) t += o.size;
  return t;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent, size;
  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

void sort_table(OrbitTable& t) {
  std::sort(t.orbits.begin(), t.orbits.end(), [](const Orbit& a, const Orbit& b) {
    if (a.representative.size() != b.representative.size()) return a.representative.size() < b.representative.size();
    return a.representative < b.representative;
  });
}

}  // namespace

OrbitTable classify_orbits(std::span<const Clique> cliques, const GroupSpec& grp) {
  std::vector<Clique> all(cliques.begin(), cliques.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  UnionFind uf(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (const auto& p : grp.generators) {
      const Clique img = act_on_clique(p, all[k]);
      const auto it = std::lower_bound(all.begin(), all.end(), img);
      if (it == all.end() || *it != img) throw std::invalid_argument("clique set is not closed under the group");
      uf.unite(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(it - all.begin()));
    }
  }
  OrbitTable table;
  std::vector<std::int64_t> slot(all.size(), -1);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const std::uint32_t root = uf.find(static_cast<std::uint32_t>(k));
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(table.orbits.size());
      table.orbits.push_back({all[k], 0, 0});
    }
    ++table.orbits[static_cast<std::size_t>(slot[root])].size;
  }
  for (auto& o : table.orbits) {
    if (grp.order % o.size != 0) throw std::logic_error("orbit length does not divide the group order");
    o.stabilizer = grp.order / o.size;
  }
  sort_table(table);
  return table;
}

std::vector<Vertex> anchor_vertices(const Graph& g, const GroupSpec& grp) {
  if (!grp.is_affine()) throw std::invalid_argument("anchors need an affine group");
  const FieldSpec& f = *grp.field;
  std::vector<std::uint8_t> seen(f.q(), 0);
  std::vector<Vertex> out;
  for_each_bit(g.row(0), [&](Vertex s) {
    if (seen[s]) return;
    out.push_back(s);
    for (std::uint32_t la = 0; la + 1 < f.q(); ++la) {
      const FieldElement a = f.from_log(la);
      for (std::uint32_t i = 0; i < f.e(); ++i) {
        if (grp.has_multiplier(a, i)) seen[f.mul(a, f.frobenius(FieldElement{s}, i)).code] = 1;
      }
    }
  });
  return out;
}

CanonicalImage canonical_image(const GroupSpec& grp, std::span<const Vertex> anchors, const Clique& c) {
  const FieldSpec& f = *grp.field;
  const std::size_t k = c.size();
  const std::uint32_t e = f.e();
  // frob[i][x] = c_x^(p^i)
  std::vector<std::vector<FieldElement>> frob(e, std::vector<FieldElement>(k));
  for (std::uint32_t i = 0; i < e; ++i) {
    for (std::size_t x = 0; x < k; ++x) frob[i][x] = f.frobenius(FieldElement{c.vertices[x]}, i);
  }
  std::vector<Vertex> best, img(k);
  std::uint64_t hits = 0;
  for (std::size_t ui = 0; ui < k; ++ui) {
    for (std::size_t vi = 0; vi < k; ++vi) {
      if (ui == vi) continue;
      for (std::uint32_t i = 0; i < e; ++i) {
        const FieldElement diff = f.sub(frob[i][vi], frob[i][ui]);
        for (Vertex t : anchors) {
          const FieldElement a = f.div(FieldElement{t}, diff);
          if (!grp.has_multiplier(a, i)) continue;
          const FieldElement b = f.neg(f.mul(a, frob[i][ui]));
          for (std::size_t x = 0; x < k; ++x) img[x] = f.add(f.mul(a, frob[i][x]), b).code;
          std::sort(img.begin(), img.end());
          if (best.empty() || img < best) {
            best = img;
            hits = 1;
          } else if (img == best) {
            ++hits;
          }
        }
      }
    }
  }
  if (best.empty()) throw std::invalid_argument("clique has no pair mapping onto an anchor");
  std::uint64_t anchors_in = 0;
  for (Vertex t : anchors) anchors_in += std::binary_search(best.begin(), best.end(), t);
  return {Clique{std::move(best)}, hits / anchors_in};
}

OrbitTable classify_orbits_anchored(const Graph& g, const GroupSpec& grp, const EnumerationOptions& opts) {
  if (!grp.is_affine() || !grp.all_translations) {
    throw std::invalid_argument("anchored classification needs an affine group containing all translations");
  }
  if (g.size() != grp.degree) throw std::invalid_argument("group and graph sizes differ");
  const std::vector<Vertex> anchors = anchor_vertices(g, grp);
  std::map<Clique, std::uint64_t> found;
  if (anchors.empty() && g.size() > 0) found.emplace(Clique{{0}}, grp.order / g.size());
  for (Vertex t : anchors) {
    const Vertex seed[2] = {0, t};
    enumerate_maximal_cliques(
        g, seed,
        [&](const Clique& c) {
          auto canon = canonical_image(grp, anchors, c);
          found.emplace(std::move(canon.image), canon.stabilizer);
        },
        opts);
  }
  OrbitTable table;
  for (auto& [rep, stab] : found) {
    if (stab == 0 || grp.order % stab != 0) throw std::logic_error("stabilizer does not divide the group order");
    table.orbits.push_back({rep, grp.order / stab, stab});
  }
  sort_table(table);
  return table;
}

}  // namespace netclique
