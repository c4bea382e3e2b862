#include <random>
#include <sstream>

#include "doctest.h"
#include "netclique/autgroup.hpp"
#include "netclique/structure.hpp"
#include "oracles.hpp"

using namespace netclique;

namespace {

FieldPtr field(std::uint32_t q) {
  const PrimePower pp = factor_prime_power(q);
  return make_field(pp.p, pp.e);
}

AffineMap random_map(const FieldSpec& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> nz(1, f.q() - 1), any(0, f.q() - 1), fr(0, f.e() - 1);
  return {FieldElement{nz(rng)}, FieldElement{any(rng)}, fr(rng)};
}

}  // namespace

TEST_SUITE("autgroup") {
  TEST_CASE("composition and inversion agree with pointwise evaluation") {
    std::mt19937_64 rng(3);
    for (std::uint32_t q : {8u, 25u, 27u, 81u}) {
      const FieldPtr f = field(q);
      for (int t = 0; t < 20; ++t) {
        const AffineMap g = random_map(*f, rng), h = random_map(*f, rng);
        const AffineMap gh = compose(*f, g, h), gi = inverse(*f, g);
        for (FieldElement x : f->elements()) {
          CHECK(apply(*f, gh, x) == apply(*f, g, apply(*f, h, x)));
          CHECK(apply(*f, gi, apply(*f, g, x)) == x);
        }
        const Permutation p = to_permutation(*f, g);
        std::vector<Vertex> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (Vertex v = 0; v < q; ++v) CHECK(sorted[v] == v);
      }
    }
  }

  TEST_CASE("identity fixes every vertex") {
    const FieldPtr f = field(9);
    for (FieldElement x : f->elements()) CHECK(apply(*f, AffineMap{}, x) == x);
  }

  TEST_CASE("Paley group orders and generators") {
    for (std::uint32_t q : {5u, 9u, 13u, 25u, 49u, 81u, 125u}) {
      const FieldPtr f = field(q);
      const GroupSpec g = paley_group(f);
      CHECK(g.order == std::uint64_t{f->e()} * q * (q - 1) / 2);
      CHECK(g.certified_full);
      CHECK_FALSE(find_bad_generator(build_paley(*f).graph, g).has_value());
    }
    CHECK_THROWS(paley_group(field(7)));
  }

  TEST_CASE("Peisert group orders and the flagged exceptions") {
    CHECK(peisert_group(field(49)).order == 1176);
    CHECK(peisert_group(field(49)).missing_factor == 3);
    CHECK_FALSE(peisert_group(field(49)).certified_full);
    CHECK(peisert_group(field(9)).missing_factor == 2);
    CHECK(peisert_group(field(81)).missing_factor == 6);
    const GroupSpec g = peisert_group(field(121));
    CHECK(g.order == 7260);
    CHECK(g.certified_full);
    CHECK_FALSE(find_bad_generator(build_peisert(*field(121)), g).has_value());
    CHECK_THROWS(peisert_group(field(25)));
  }

  TEST_CASE("net-linear group") {
    for (std::uint32_t r : {3u, 5u, 7u}) {
      const FieldPtr f = field(r * r);
      const PaleyGraph pg = build_paley(*f);
      CHECK(net_linear_group(f, *pg.net).order == paley_group(f).order);
      const GroupSpec full = net_linear_group(f, canonical_net(r, r + 1));
      CHECK(full.order == std::uint64_t{f->e()} * f->q() * (f->q() - 1));
      const NetSpec net = canonical_net(r, 2);
      const GroupSpec g = net_linear_group(f, net);
      CHECK_FALSE(find_bad_generator(build_net_graph(*f, net), g).has_value());
      // F_r^* acts on every net.
      for (FieldElement s : subfield_elements(*f)) {
        if (s != f->zero()) CHECK(g.has_multiplier(s, 0));
      }
    }
  }

  TEST_CASE("brute force agrees with the permutation oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
      const Graph g = oracle::random_graph(1 + t % 7, 0.5, rng);
      CHECK(brute_force_automorphisms(g).order == oracle::automorphism_count(g));
    }
    GraphBuilder c5(5);
    for (Vertex v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    CHECK(brute_force_automorphisms(std::move(c5).build()).order == 10);
    CHECK_THROWS_AS(brute_force_automorphisms(build_paley(*field(121)).graph), std::invalid_argument);
  }

  TEST_CASE("brute force recovers the known groups") {
    CHECK(brute_force_automorphisms(build_paley(*field(9)).graph).order == 72);
    CHECK(brute_force_automorphisms(build_paley(*field(25)).graph).order == 600);
    CHECK(brute_force_automorphisms(build_peisert(*field(49))).order == 3528);
    const GroupSpec t = taylor_paley_group(field(9));
    CHECK(t.certified_full);
    CHECK(brute_force_automorphisms(build_taylor(build_paley(*field(9)).graph)).order == t.order);
  }

  TEST_CASE("orbit-stabilizer on random cliques of P(25) and P(81)") {
    std::mt19937_64 rng(8);
    for (std::uint32_t q : {25u, 81u}) {
      const FieldPtr f = field(q);
      const Graph g = build_paley(*f).graph;
      const GroupSpec grp = paley_group(f);
      const auto cl = collect_maximal_cliques(g);
      std::uniform_int_distribution<std::size_t> pick(0, cl.size() - 1);
      for (int t = 0; t < 30; ++t) {
        const Clique& c = cl[pick(rng)];
        const auto orbit = orbit_by_closure(grp, c);
        CHECK(orbit.size() * stabilizer_order(grp, c) == grp.order);
        CHECK(stabilizer_order_by_closure(grp, c) == stabilizer_order(grp, c));
        for (const auto& img : orbit) CHECK(is_maximal_clique(g, img.vertices));
      }
    }
  }

  TEST_CASE("act_on_clique") {
    const FieldPtr f = field(25);
    const Clique sub{[&] {
      std::vector<Vertex> v;
      for (FieldElement s : subfield_elements(*f)) v.push_back(s.code);
      return v;
    }()};
    CHECK(act_on_clique(*f, AffineMap{}, sub) == sub);
    const AffineMap t{f->one(), f->primitive(), 0};
    const Clique moved = act_on_clique(*f, t, sub);
    for (Vertex v : sub.vertices) CHECK(moved.contains(f->add(FieldElement{v}, f->primitive()).code));
    CHECK(act_on_clique(to_permutation(*f, t), sub) == moved);
  }

  TEST_CASE("orbit tables: union-find and anchored routes agree") {
    for (std::uint32_t q : {9u, 25u, 49u, 81u, 121u}) {
      const FieldPtr f = field(q);
      const Graph g = build_paley(*f).graph;
      const GroupSpec grp = paley_group(f);
      const OrbitTable a = classify_orbits(collect_maximal_cliques(g), grp);
      const OrbitTable b = classify_orbits_anchored(g, grp);
      CHECK(a.counts() == b.counts());
      CHECK(a.total_cliques() == b.total_cliques());
      for (std::size_t i = 0; i < a.orbits.size(); ++i) {
        CHECK(a.orbits[i].size * a.orbits[i].stabilizer == grp.order);
        CHECK(b.orbits[i].size * b.orbits[i].stabilizer == grp.order);
      }
    }
    const FieldPtr f9 = field(9);
    CHECK(classify_orbits_anchored(build_paley(*f9).graph, paley_group(f9)).counts() ==
          std::map<std::size_t, std::uint64_t>{{3, 1}});
    const FieldPtr f25 = field(25);
    CHECK(classify_orbits_anchored(build_paley(*f25).graph, paley_group(f25)).counts() ==
          std::map<std::size_t, std::uint64_t>{{3, 1}, {5, 1}});
    const FieldPtr f81 = field(81);
    CHECK(classify_orbits_anchored(build_paley(*f81).graph, paley_group(f81)).counts() ==
          std::map<std::size_t, std::uint64_t>{{5, 3}, {9, 1}});
  }

  TEST_CASE("classification is independent of input order") {
    const FieldPtr f = field(49);
    const Graph g = build_paley(*f).graph;
    const GroupSpec grp = paley_group(f);
    auto cl = collect_maximal_cliques(g);
    const auto first = classify_orbits(cl, grp).counts();
    std::mt19937_64 rng(1);
    std::shuffle(cl.begin(), cl.end(), rng);
    CHECK(classify_orbits(cl, grp).counts() == first);
    cl.pop_back();
    CHECK_THROWS_AS(classify_orbits(cl, grp), std::invalid_argument);
  }

  TEST_CASE("inversion is an automorphism of the neighbourhood of 0") {
    for (std::uint32_t q : {9u, 13u, 25u, 49u, 81u}) {
      const FieldPtr f = field(q);
      const Graph g = build_paley(*f).graph;
      const auto nb = g.neighbors(0);
      for (Vertex u : nb) {
        for (Vertex v : nb) {
          if (u == v) continue;
          const Vertex iu = f->inv(FieldElement{u}).code, iv = f->inv(FieldElement{v}).code;
          CHECK(g.adjacent(0, iu));
          CHECK(g.adjacent(u, v) == g.adjacent(iu, iv));
        }
      }
    }
  }

  TEST_CASE("stabilizers of the small Baker and conic cliques") {
    {
      const FieldPtr f = field(81);
      const PaleyGraph pg = build_paley(*f);
      const LinePointConfig cfg = make_config(*f, *pg.net, 0, f->zero(), f->primitive());
      CHECK(stabilizer_order(paley_group(f), baker_clique(cfg)) == 4);
    }
    {
      const FieldPtr f = field(49);
      const PaleyGraph pg = build_paley(*f);
      const LinePointConfig cfg = make_config(*f, *pg.net, 0, f->zero(), f->primitive());
      const Clique c = baker_conjugate_clique(*f, cfg);
      std::uint64_t same_size = 0;
      for (const Clique& k : collect_maximal_cliques(pg.graph)) same_size += k.size() == c.size();
      // one orbit of 5-cliques in P(49)
      CHECK(stabilizer_order(paley_group(f), c) * same_size == paley_group(f).order);
    }
    {
      const FieldPtr f = field(25);
      const PaleyGraph pg = build_paley(*f);
      CHECK(stabilizer_order(paley_group(f), goryainov_set(*f, pg.graph).set) == 6);
    }
  }

  TEST_CASE("generator files") {
    const FieldPtr f = field(9);
    std::istringstream ok("# translations and squares\n2 0 0\n1 1 0\n1 0 1\n");
    const auto gens = read_affine_generators(*f, ok);
    REQUIRE(gens.size() == 3);
    CHECK(affine_group_from_generators(f, gens).order == 144);
    std::istringstream bad("1 0 0\n0 1 0\n");
    try {
      read_affine_generators(*f, bad);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream frob("1 0 2\n");
    CHECK_THROWS_AS(read_affine_generators(*f, frob), ParseError);
  }
}
