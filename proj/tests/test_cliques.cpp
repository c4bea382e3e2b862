#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "netclique/cliques.hpp"
#include "netclique/netgraph.hpp"
#include "oracles.hpp"

using namespace netclique;

namespace {

std::set<std::vector<Vertex>> as_set(const std::vector<Clique>& cs) {
  std::set<std::vector<Vertex>> out;
  for (const auto& c : cs) out.insert(c.vertices);
  return out;
}

}  // namespace

TEST_SUITE("cliques") {
  TEST_CASE("enumeration matches the subset oracle on random graphs") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + t % 14;
      const Graph g = oracle::random_graph(n, 0.2 + 0.1 * (t % 7), rng);
      const auto expect = oracle::maximal_cliques(g);
      const auto got = collect_maximal_cliques(g);
      CHECK(as_set(got) == expect);
      CHECK(got.size() == expect.size());  // no duplicates
    }
  }

  TEST_CASE("empty graph has the empty maximal clique") {
    const Graph g = GraphBuilder(0).build();
    const auto got = collect_maximal_cliques(g);
    REQUIRE(got.size() == 1);
    CHECK(got[0].vertices.empty());
    CHECK(as_set(got) == oracle::maximal_cliques(g));
  }

  TEST_CASE("worker count does not change the result") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 10; ++t) {
      const Graph g = oracle::random_graph(40, 0.5, rng);
      EnumerationOptions par;
      par.jobs = 3;
      CHECK(collect_maximal_cliques(g) == collect_maximal_cliques(g, {}, par));
    }
  }

  TEST_CASE("seeded enumeration returns exactly the cliques through the seed") {
    std::mt19937_64 rng(5);
    const Graph g = oracle::random_graph(14, 0.6, rng);
    const auto all = collect_maximal_cliques(g);
    for (Vertex u = 0; u < 4; ++u) {
      for (Vertex v : g.neighbors(u)) {
        const Vertex seed[2] = {u, v};
        std::vector<Clique> want;
        for (const auto& c : all) {
          if (c.contains(u) && c.contains(v)) want.push_back(c);
        }
        CHECK(collect_maximal_cliques(g, seed) == want);
      }
    }
    std::vector<Vertex> not_clique;
    for (Vertex v = 0; v < g.size() && not_clique.empty(); ++v) {
      for (Vertex w = v + 1; w < g.size(); ++w) {
        if (!g.adjacent(v, w)) {
          not_clique = {v, w};
          break;
        }
      }
    }
    CHECK(collect_maximal_cliques(g, not_clique).empty());
  }

  TEST_CASE("size filters") {
    std::mt19937_64 rng(11);
    const Graph g = oracle::random_graph(16, 0.55, rng);
    const auto all = collect_maximal_cliques(g);
    for (std::size_t lo = 1; lo <= 6; ++lo) {
      EnumerationOptions o;
      o.min_size = lo;
      o.max_size = lo + 1;
      std::vector<Clique> want;
      for (const auto& c : all) {
        if (c.size() >= lo && c.size() <= lo + 1) want.push_back(c);
      }
      CHECK(collect_maximal_cliques(g, {}, o) == want);
    }
  }

  TEST_CASE("caps raise instead of truncating") {
    const Graph g = build_paley(*make_field(13, 2)).graph;
    EnumerationOptions o;
    o.max_cliques = 5;
    CHECK_THROWS_AS(collect_maximal_cliques(g, {}, o), CapExceeded);
    o.max_cliques = 1'000'000'000;
    o.deadline = std::chrono::steady_clock::now();
    CHECK_THROWS_AS(collect_maximal_cliques(g, {}, o), CapExceeded);
    o.deadline.reset();
    o.jobs = 2;
    o.max_cliques = 5;
    CHECK_THROWS_AS(collect_maximal_cliques(g, {}, o), CapExceeded);
  }

  TEST_CASE("histogram, predicates and closure") {
    const FieldPtr f = make_field(3, 2);
    const Graph g = build_paley(*f).graph;
    const auto cl = collect_maximal_cliques(g);
    CHECK(size_histogram(cl) == SizeHistogram{{3, 6}});
    for (const auto& c : cl) {
      CHECK(is_maximal_clique(g, c.vertices));
      CHECK(is_line(*f, c.vertices));
    }
    const Vertex edge[2] = {0, 1};
    CHECK(is_clique(g, edge));
    CHECK_FALSE(is_maximal_clique(g, edge));
    const auto perp = common_neighbors(g, edge);
    CHECK(perp.size() == 3);
    CHECK(common_neighbors(g, {}).size() == 9);
  }

  TEST_CASE("Delsarte bound on nets is attained by the lines") {
    const FieldPtr f = make_field(5, 2);
    for (std::uint32_t m = 2; m <= 3; ++m) {
      const NetSpec net = canonical_net(5, m);
      const Graph g = build_net_graph(*f, net);
      const auto cl = collect_maximal_cliques(g);
      const DelsarteReport d = delsarte_check(*f, g, net, cl);
      CHECK(d.bound == 5);
      CHECK(d.max_clique == 5);
      CHECK(d.within_bound);
      CHECK(d.all_maximum_are_lines);
      CHECK(d.maximum_cliques == 5 * m);
    }
    CHECK_THROWS(delsarte_check(*f, build_net_graph(*f, canonical_net(5, 6)), canonical_net(5, 6), {}));
  }

  TEST_CASE("is_line recognises cosets of the subfield only") {
    const FieldPtr f = make_field(2, 4);
    std::vector<Vertex> sub;
    for (FieldElement s : subfield_elements(*f)) sub.push_back(f->add(f->mul(s, f->primitive()), f->from_log(3)).code);
    CHECK(is_line(*f, sub));
    Vertex other = 0;
    while (std::find(sub.begin(), sub.end(), other) != sub.end()) ++other;
    sub[0] = other;
    CHECK_FALSE(is_line(*f, sub));
  }
}
