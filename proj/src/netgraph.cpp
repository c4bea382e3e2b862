#include "netclique/netgraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace netclique {

bool NetSpec::has_direction(std::uint32_t c) const {
  return std::binary_search(directions.begin(), directions.end(), c);
}

NetSpec make_net_spec(std::uint32_t r, std::vector<std::uint32_t> directions) {
  if (r < 2 || factor_prime_power(r).p == 0) throw std::invalid_argument("net order must be a prime power");
  std::sort(directions.begin(), directions.end());
  if (std::adjacent_find(directions.begin(), directions.end()) != directions.end()) {
    throw std::invalid_argument("duplicate direction class");
  }
  for (auto d : directions) {
    if (d > r) throw std::invalid_argument("direction class " + std::to_string(d) + " out of range");
  }
  return {r, std::move(directions)};
}

NetSpec canonical_net(std::uint32_t r, std::uint32_t m) {
  if (m > r + 1) throw std::invalid_argument("net degree exceeds r+1");
  std::vector<std::uint32_t> d(m);
  for (std::uint32_t i = 0; i < m; ++i) d[i] = i;
  return make_net_spec(r, std::move(d));
}

std::uint32_t direction_class(const FieldSpec& f, FieldElement z) {
  return f.log(z) % (subfield_order(f) + 1);
}

namespace {

Graph cayley_graph(const FieldSpec& f, const std::vector<FieldElement>& connection) {
  GraphBuilder b(f.q());
  for (std::uint32_t u = 0; u < f.q(); ++u) {
    for (FieldElement s : connection) {
      const FieldElement v = f.add({u}, s);
      if (u < v.code) b.add_edge(u, v.code);
    }
  }
  return std::move(b).build();
}

}  // namespace

Graph build_net_graph(const FieldSpec& f, const NetSpec& net) {
  if (subfield_order(f) != net.r) throw std::invalid_argument("field order is not r^2 for this net");
  std::vector<FieldElement> s;
  for (std::uint32_t k = 0; k + 1 < f.q(); ++k) {
    if (net.has_direction(k % (net.r + 1))) s.push_back(f.from_log(k));
  }
  return cayley_graph(f, s);
}

PaleyGraph build_paley(const FieldSpec& f) {
  if (f.q() % 4 != 1) throw std::invalid_argument("Paley graph needs q = 1 mod 4");
  std::vector<FieldElement> squares;
  for (std::uint32_t k = 0; k + 1 < f.q(); k += 2) squares.push_back(f.from_log(k));
  PaleyGraph out{cayley_graph(f, squares), std::nullopt};
  if (f.e() % 2 == 0) {
    const std::uint32_t r = subfield_order(f);
    std::vector<std::uint32_t> even;
    for (std::uint32_t c = 0; c <= r; c += 2) even.push_back(c);
    out.net = make_net_spec(r, std::move(even));
  }
  return out;
}

Graph build_peisert(const FieldSpec& f) {
  if (f.p() % 4 != 3 || f.e() % 2 != 0) throw std::invalid_argument("Peisert graph needs q = p^(2e) with p = 3 mod 4");
  if (f.power_class(f.neg(f.one()), 4) != 0) throw std::logic_error("-1 is not a fourth power");
  std::vector<FieldElement> s;
  for (std::uint32_t k = 0; k + 1 < f.q(); ++k) {
    if (k % 4 <= 1) s.push_back(f.from_log(k));
  }
  return cayley_graph(f, s);
}

std::optional<NetSpec> peisert_as_net(const FieldSpec& f) {
  const std::uint32_t r = subfield_order(f);
  if (r % 4 != 3) return std::nullopt;
  std::vector<std::uint32_t> d;
  for (std::uint32_t c = 0; c <= r; ++c) {
    if (c % 4 <= 1) d.push_back(c);
  }
  return make_net_spec(r, std::move(d));
}

SrgParams net_srg_params(std::uint32_t n, std::uint32_t m) {
  return {std::size_t{n} * n, std::size_t{m} * (n - 1), std::size_t{m - 1} * (m - 2) + n - 2, std::size_t{m} * (m - 1)};
}

SrgCheck check_srg(const Graph& g) {
  SrgCheck out;
  const std::size_t n = g.size();
  out.params.v = n;
  if (n == 0) {
    out.kind = SrgCheck::Kind::empty;
    return out;
  }
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != k) {
      out.kind = SrgCheck::Kind::not_regular;
      out.witness_u = 0;
      out.witness_v = v;
      out.message = "degrees differ";
      return out;
    }
  }
  out.params.k = k;
  if (k == 0) {
    out.kind = SrgCheck::Kind::empty;
    return out;
  }
  if (k == n - 1) {
    out.kind = SrgCheck::Kind::complete;
    return out;
  }
  std::optional<std::size_t> lambda, mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = and_popcount(g.row(u), g.row(v));
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        out.kind = SrgCheck::Kind::not_strongly_regular;
        out.witness_u = u;
        out.witness_v = v;
        out.message = g.adjacent(u, v) ? "adjacent pairs disagree on common neighbours"
                                       : "non-adjacent pairs disagree on common neighbours";
        return out;
      }
    }
  }
  out.kind = SrgCheck::Kind::strongly_regular;
  out.params.lambda = lambda.value_or(0);
  out.params.mu = mu.value_or(0);
  return out;
}

Graph build_taylor(const Graph& gamma) {
  const SrgCheck srg = check_srg(gamma);
  if (!srg.ok()) throw std::invalid_argument("Taylor extension needs a strongly regular graph");
  if (srg.params.k != 2 * srg.params.mu) throw std::invalid_argument("Taylor extension needs k = 2 mu");
  const std::size_t v = gamma.size();
  GraphBuilder b(2 * (v + 1));
  b.set_label(taylor::kInfPlus, "inf+");
  b.set_label(taylor::kInfMinus, "inf-");
  for (Vertex x = 0; x < v; ++x) {
    b.set_label(taylor::plus(v, x), std::to_string(x) + "+");
    b.set_label(taylor::minus(v, x), std::to_string(x) + "-");
    b.add_edge(taylor::kInfPlus, taylor::plus(v, x));
    b.add_edge(taylor::kInfMinus, taylor::minus(v, x));
    for (Vertex y = x + 1; y < v; ++y) {
      if (gamma.adjacent(x, y)) {
        b.add_edge(taylor::plus(v, x), taylor::plus(v, y));
        b.add_edge(taylor::minus(v, x), taylor::minus(v, y));
      } else {
        b.add_edge(taylor::plus(v, x), taylor::minus(v, y));
        b.add_edge(taylor::minus(v, x), taylor::plus(v, y));
      }
    }
  }
  Graph sigma = std::move(b).build();
  for (Vertex x = 0; x < v; ++x) {
    for (Vertex y = 0; y < v; ++y) {
      if (sigma.adjacent(taylor::plus(v, x), taylor::plus(v, y)) != gamma.adjacent(x, y)) {
        throw std::logic_error("local graph at inf+ differs from the base graph");
      }
    }
  }
  return sigma;
}

std::optional<IntersectionArray> intersection_array(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<std::int32_t>> dist(n, std::vector<std::int32_t>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    auto& d = dist[s];
    std::deque<Vertex> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for_each_bit(g.row(u), [&](Vertex w) {
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          queue.push_back(w);
        }
      });
    }
  }
  std::int32_t diameter = 0;
  for (const auto& row : dist) {
    for (auto x : row) {
      if (x < 0) return std::nullopt;
      diameter = std::max(diameter, x);
    }
  }
  std::vector<std::optional<std::size_t>> b(diameter + 1), c(diameter + 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const std::int32_t i = dist[u][v];
      std::size_t bi = 0, ci = 0;
      for_each_bit(g.row(v), [&](Vertex w) {
        if (dist[u][w] == i + 1) ++bi;
        if (dist[u][w] == i - 1) ++ci;
      });
      if (!b[i]) b[i] = bi;
      if (!c[i]) c[i] = ci;
      if (*b[i] != bi || *c[i] != ci) return std::nullopt;
    }
  }
  IntersectionArray out;
  for (std::int32_t i = 0; i < diameter; ++i) out.b.push_back(*b[i]);
  for (std::int32_t i = 1; i <= diameter; ++i) out.c.push_back(*c[i]);
  return out;
}

Graph ingest_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<GraphBuilder> builder;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!builder) {
      long long count = -1;
      std::string rest;
      if (!(ls >> count) || count < 0 || (ls >> rest)) throw ParseError(lineno, "expected vertex count");
      n = static_cast<std::size_t>(count);
      builder.emplace(n);
      continue;
    }
    long long u = -1, v = -1;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest)) throw ParseError(lineno, "expected \"u v\"");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ParseError(lineno, "vertex out of range");
    }
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    builder->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!builder) throw ParseError(lineno, "missing vertex count");
  return std::move(*builder).build();
}

Graph ingest_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ingest_graph(in);
}

void export_graph(const Graph& g, std::ostream& out) {
  out << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace netclique
