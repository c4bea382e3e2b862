#include "netclique/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "netclique/autgroup.hpp"
#include "netclique/cliques.hpp"
#include "netclique/gf.hpp"
#include "netclique/netgraph.hpp"
#include "netclique/structure.hpp"

namespace netclique {

using nlohmann::json;

json SuiteReport::to_json() const {
  json j;
  j["schema"] = "netclique.verify/1";
  j["suite"] = suite;
  j["passed"] = passed();
  j["checks"] = checks;
  j["failures"] = failures;
  j["falsified"] = falsified;
  j["cases"] = cases;
  j["failure_list"] = failure_list;
  j["witness"] = witness ? *witness : json(nullptr);
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"netcliq", "sizes",   "realize",  "goryainov", "baker", "stabilizers",
                                              "cyn",     "delsarte", "blokhuis", "nonline"};
  return names;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t v = 1;
  for (std::uint64_t i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

struct Fields {
  FieldPtr small, big;
};

Fields fields_for(std::uint32_t r) {
  const PrimePower pp = factor_prime_power(r);
  if (pp.p == 0) throw std::invalid_argument(std::to_string(r) + " is not a prime power");
  return {make_field(pp.p, pp.e), make_field(pp.p, 2 * pp.e)};
}

bool odd_prime_power(std::uint32_t r) {
  return r % 2 == 1 && factor_prime_power(r).p != 0;
}

class Runner {
 public:
  Runner(std::string name, const SuiteOptions& opts) : opts_(opts) { rep_.suite = std::move(name); }

  void check(bool ok, const std::string& what, json detail = json::object()) {
    ++rep_.checks;
    if (ok) return;
    ++rep_.failures;
    detail["assertion"] = what;
    rep_.failure_list.push_back(std::move(detail));
  }
  void add_case(json c) { rep_.cases.push_back(std::move(c)); }
  void tick() const {
    if (opts_.deadline && std::chrono::steady_clock::now() > *opts_.deadline) {
      throw CapExceeded("verification exceeded its time budget");
    }
  }
  EnumerationOptions enum_opts() const {
    EnumerationOptions e;
    e.max_cliques = opts_.max_cliques;
    e.deadline = opts_.deadline;
    return e;
  }

  // Orders from --r / --r-max, else the defaults filtered by `accept`.
  std::vector<std::uint32_t> orders(std::vector<std::uint32_t> defaults,
                                    const std::function<bool(std::uint32_t)>& accept) const {
    std::vector<std::uint32_t> out;
    if (!opts_.rs.empty()) {
      out = opts_.rs;
    } else if (opts_.r_max) {
      for (std::uint32_t r = 2; r <= *opts_.r_max; ++r) {
        if (factor_prime_power(r).p != 0) out.push_back(r);
      }
    } else {
      out = std::move(defaults);
    }
    for (std::uint32_t r : out) {
      if (factor_prime_power(r).p == 0) throw std::invalid_argument(std::to_string(r) + " is not a prime power");
    }
    if (!opts_.rs.empty()) {
      for (std::uint32_t r : out) {
        if (!accept(r)) throw std::invalid_argument("r=" + std::to_string(r) + " is outside this suite's range");
      }
      return out;
    }
    std::erase_if(out, [&](std::uint32_t r) { return !accept(r); });
    return out;
  }

  std::vector<std::uint32_t> degrees(std::uint32_t r, std::uint32_t lo, std::uint32_t hi) const {
    if (opts_.m) {
      if (*opts_.m < lo || *opts_.m > hi) {
        throw std::invalid_argument("m=" + std::to_string(*opts_.m) + " is outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "] for r=" + std::to_string(r));
      }
      return {*opts_.m};
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  }

  std::vector<std::vector<std::uint32_t>> nets(std::uint32_t r, std::uint32_t m) const {
    if (!opts_.directions.empty()) {
      if (opts_.directions.size() != m) return {};
      return {make_net_spec(r, opts_.directions).directions};
    }
    return direction_sets(r, m, opts_);
  }

  SuiteReport finish() { return std::move(rep_); }
  void falsified(const TheoremFalsified& e) {
    rep_.falsified = true;
    rep_.witness = json::parse(e.witness().to_json());
    rep_.failure_list.push_back({{"assertion", e.what()}});
  }

  const SuiteOptions& opts_;

 private:
  SuiteReport rep_;
};

// Configurations (L, x) with L through 0 and x one point per parallel coset.
std::vector<LinePointConfig> all_configs(const FieldSpec& f, const NetSpec& net) {
  std::vector<LinePointConfig> out;
  const auto sub = subfield_elements(f);
  for (std::uint32_t d : net.directions) {
    const FieldElement off = f.from_log(d + 1);
    for (FieldElement t : sub) {
      if (t == f.zero()) continue;
      out.push_back(make_config(f, net, d, f.zero(), f.mul(t, off)));
    }
  }
  return out;
}

json net_json(const NetSpec& net) { return {{"r", net.r}, {"m", net.m()}, {"directions", net.directions}}; }

void suite_netcliq(Runner& run) {
  for (std::uint32_t r : run.orders({5, 7, 8, 9, 11, 13}, [](std::uint32_t) { return true; })) {
    const FieldPtr F = fields_for(r).big;
    for (std::uint32_t m : run.degrees(r, 1, r + 1)) {
      std::uint64_t configs = 0, nets = 0;
      std::map<std::size_t, std::uint64_t> sizes;
      for (const auto& dirs : run.nets(r, m)) {
        run.tick();
        const NetSpec net = make_net_spec(r, dirs);
        const Graph g = build_net_graph(*F, net);
        ++nets;
        for (const auto& cfg : all_configs(*F, net)) {
          const UniquenessReport u = verify_unique_maximal(g, cfg);
          run.check(u.unique, "unique maximal clique through {x} u A", net_json(net));
          ++configs;
          ++sizes[u.closure.size()];
          if (m == r + 1) run.check(u.closure.size() == F->q(), "closure of the complete graph is everything");
          if (m <= 2) run.check(u.closure.size() == r, "|C_{x,L}| = r for m <= 2", net_json(net));
        }
      }
      json sz = json::object();
      for (auto [s, c] : sizes) sz[std::to_string(s)] = c;
      run.add_case({{"r", r}, {"m", m}, {"nets", nets}, {"configurations", configs}, {"closure_sizes", sz}});
    }
  }
}

void suite_sizes(Runner& run) {
  for (std::uint32_t r : run.orders({5, 7, 8, 9, 11, 13}, [](std::uint32_t r) { return r >= 5; })) {
    const FieldPtr F = fields_for(r).big;
    const std::uint32_t p = F->p();
    for (std::uint32_t m : run.degrees(r, 3, r - 2)) {
      const auto cands = cxl_size_candidates(r, m);
      std::set<std::pair<std::uint32_t, std::uint64_t>> seen;  // (h, p^f)
      std::uint64_t configs = 0;
      for (const auto& dirs : run.nets(r, m)) {
        run.tick();
        const NetSpec net = make_net_spec(r, dirs);
        const Graph g = build_net_graph(*F, net);
        std::map<std::uint32_t, std::set<std::size_t>> per_line;
        for (const auto& cfg : all_configs(*F, net)) {
          ++configs;
          const Clique C = cxl_closure(g, cfg);
          const StabilizerReport st = verify_stabilizer_structure(*F, cfg);
          json where = net_json(net);
          where["line_direction"] = cfg.line_direction;
          where["x"] = cfg.x.code;
          where["size"] = C.size();
          run.check(st.clique_size == C.size(), "normalised closure has the same size", where);
          run.check(st.closed && st.transitive && st.preserves_clique, "G_{x,L} is a group transitive on C \\ L", where);
          run.check(st.fixed_points_in_A && st.fixed_points_single_orbit, "fixed points form one orbit inside A",
                    where);
          const std::uint64_t hpf = C.size() - (m - 1);
          run.check(st.translations * st.h == hpf, "|C \\ L| = h p^f", where);
          bool listed = false;
          for (const auto& c : cands) listed = listed || (c.h == st.h && c.pf == st.translations);
          run.check(listed, "observed (h, p^f) is an admissible certificate", where);
          seen.insert({static_cast<std::uint32_t>(st.h), st.translations});
          per_line[cfg.line_direction].insert(C.size());

          if ((m - 1) % p != 0 && C.size() > m) {
            // C \ L lies on a single line through x.
            std::set<std::uint32_t> classes;
            for (Vertex v : C.vertices) {
              if (v != cfg.x.code && !std::binary_search(cfg.L.begin(), cfg.L.end(), v)) {
                classes.insert(direction_class(*F, F->sub(FieldElement{v}, cfg.x)));
              }
            }
            run.check(classes.size() == 1 && net.has_direction(*classes.begin()), "C_{x,L} lies in L u M", where);
          }
        }
        for (const auto& [d, s] : per_line) {
          json where = net_json(net);
          where["line_direction"] = d;
          run.check(s.size() == 1, "|C_{x,L}| does not depend on x", where);
        }
      }
      json obs = json::array();
      for (auto [h, pf] : seen) obs.push_back({{"h", h}, {"pf", pf}, {"size", m - 1 + h * pf}});
      run.add_case({{"r", r}, {"m", m}, {"configurations", configs}, {"observed", obs}});
    }
  }
}

void suite_realize(Runner& run) {
  for (std::uint32_t r : run.orders({7, 8, 9, 11, 13}, [](std::uint32_t r) { return r >= 5; })) {
    const Fields fs = fields_for(r);
    for (std::uint32_t m : run.degrees(r, 3, r - 2)) {
      for (const auto& cert : cxl_size_candidates(r, m)) {
        run.tick();
        const Construction con = construct_A(*fs.small, cert);
        const LinePointConfig cfg = net_for_subset(*fs.big, *fs.small, con.A);
        const Graph g = build_net_graph(*fs.big, cfg.net);
        const UniquenessReport u = verify_unique_maximal(g, cfg);
        const StabilizerReport st = verify_stabilizer_structure(*fs.big, cfg);
        json c{{"r", r},
               {"m", m},
               {"h", cert.h},
               {"f", cert.f},
               {"predicted", cert.clique_size()},
               {"measured", u.closure.size()},
               {"recipe", con.recipe},
               {"directions", cfg.net.directions}};
        std::vector<std::uint32_t> A;
        for (auto a : con.A) A.push_back(a.code);
        c["A"] = A;
        run.check(con.admissible_order == std::uint64_t{cert.h} * cert.pf, "admissible group has order h p^f", c);
        run.check(u.closure.size() == cert.clique_size(), "measured size equals the certified size", c);
        run.check(st.h == cert.h && st.translations == cert.pf, "stabilizer realises (h, p^f)", c);
        run.add_case(std::move(c));
      }
    }
  }
}

void suite_goryainov(Runner& run) {
  std::vector<std::uint32_t> def;
  for (std::uint32_t r = 3; r <= 47; r += 2) {
    if (odd_prime_power(r)) def.push_back(r);
  }
  for (std::uint32_t r : run.orders(def, odd_prime_power)) {
    run.tick();
    const FieldPtr F = fields_for(r).big;
    const Graph P = build_paley(*F).graph;
    const GoryainovSet gs = goryainov_set(*F, P);
    const std::size_t expect = r % 4 == 3 ? (r + 3) / 2 : (r + 1) / 2;
    json c{{"r", r}, {"kind", gs.is_clique ? "clique" : "coclique"}, {"size", gs.set.size()}};
    run.check(gs.is_clique == (r % 4 == 3), "clique iff r = 3 mod 4", c);
    run.check(gs.set.size() == expect, "size (r+3)/2 or (r+1)/2", c);
    run.check(gs.maximal, "maximal", c);
    run.check(gs.norm_identity, "N(omega^(2i) - 1) = -4 d y^2", c);
    if (r <= 13) {
      const MobiusCheck mc = goryainov_mobius_map(*F, P);
      c["mobius"] = mc.matches;
      run.check(mc.matches, "Mobius image is {x} u A or {x, x^r} u A", c);
      run.check(mc.zero_image_ok, "0 -> -eps^-1", c);
    }
    run.add_case(std::move(c));
  }
}

void suite_baker(Runner& run) {
  std::vector<std::uint32_t> def;
  for (std::uint32_t r = 5; r <= 27; r += 2) {
    if (odd_prime_power(r)) def.push_back(r);
  }
  for (std::uint32_t r : run.orders(def, [](std::uint32_t r) { return odd_prime_power(r) && r >= 5; })) {
    run.tick();
    const FieldPtr F = fields_for(r).big;
    const PaleyGraph pal = build_paley(*F);
    const Graph& P = pal.graph;
    const auto sub = subfield_elements(*F);
    std::vector<FieldElement> xs;
    if (r <= 13) {
      for (FieldElement z : F->elements()) {
        if (!F->in_subfield(z, F->e() / 2)) xs.push_back(z);
      }
    } else {
      for (FieldElement t : sub) {
        if (t != F->zero()) xs.push_back(F->mul(t, F->primitive()));
      }
    }
    std::uint64_t maximal = 0, companions = 0;
    for (FieldElement x : xs) {
      const LinePointConfig cfg = make_config(*F, *pal.net, 0, F->zero(), x);
      json where{{"r", r}, {"x", x.code}};
      run.check(cfg.A.size() == (r - 1) / 2, "|x^perp n L| = (r-1)/2", where);
      const Clique c = r % 4 == 1 ? baker_clique(cfg) : baker_conjugate_clique(*F, cfg);
      const bool ok = is_maximal_clique(P, c.vertices);
      maximal += ok;
      run.check(ok, r % 4 == 1 ? "{x} u A is maximal" : "{x, x^r} u A is maximal", where);
      if (c.contains(0)) {
        const Clique inv = inverse_companion(*F, P, c);
        run.check(inv.size() == c.size(), "inverse companion has the same size", where);
        ++companions;
      }
    }
    run.add_case({{"r", r},
                  {"points", xs.size()},
                  {"form", r % 4 == 1 ? "{x} u A" : "{x, x^r} u A"},
                  {"size", r % 4 == 1 ? (r + 1) / 2 : (r + 3) / 2},
                  {"maximal", maximal},
                  {"inverse_companions", companions}});
  }
}

void suite_stabilizers(Runner& run) {
  for (std::uint32_t r :
       run.orders({9, 11, 13, 25, 27}, [](std::uint32_t r) { return odd_prime_power(r) && r >= 9; })) {
    run.tick();
    const PrimePower pp = factor_prime_power(r);
    const FieldPtr F = fields_for(r).big;
    const PaleyGraph pal = build_paley(*F);
    const GroupSpec grp = paley_group(F);
    const LinePointConfig cfg = make_config(*F, *pal.net, 0, F->zero(), F->inv(F->from_log((r + 1) / 2)));
    const Clique bk = r % 4 == 1 ? baker_clique(cfg) : baker_conjugate_clique(*F, cfg);
    const Clique gor = goryainov_set(*F, pal.graph).set;
    const std::uint64_t bk_direct = stabilizer_order(grp, bk), bk_closure = stabilizer_order_by_closure(grp, bk);
    const std::uint64_t g_direct = stabilizer_order(grp, gor), g_closure = stabilizer_order_by_closure(grp, gor);
    const std::uint64_t bk_expect = (r % 4 == 1 ? 2 : 4) * std::uint64_t{pp.e};
    const std::uint64_t g_expect = std::uint64_t{pp.e} * (r + 1);
    json c{{"r", r},
           {"baker", bk_direct},
           {"baker_expected", bk_expect},
           {"goryainov", g_direct},
           {"goryainov_expected", g_expect}};
    run.check(bk_direct == bk_closure && g_direct == g_closure, "direct count agrees with orbit-stabilizer", c);
    run.check(bk_direct == bk_expect, "Baker stabilizer order", c);
    run.check(g_direct == g_expect, "Goryainov stabilizer order", c);
    run.add_case(std::move(c));
  }
}

void suite_cyn(Runner& run) {
  for (std::uint32_t r :
       run.orders({11, 13, 17, 19, 23}, [](std::uint32_t r) { return odd_prime_power(r) && r > 9; })) {
    run.tick();
    const FieldPtr F = fields_for(r).big;
    const CynReport rep = cyn_example(*F);
    json c{{"r", r},
           {"m", rep.net.m()},
           {"C", rep.clique_size},
           {"C_yL", rep.cyl_size},
           {"C_yN", rep.cyn_size},
           {"expected_C_yN", rep.expected_cyn}};
    run.check(rep.net.m() == (r + 3) / 2, "net degree (r+3)/2", c);
    run.check(rep.clique_size == r && rep.clique_is_cyl, "C = C_{y,L} has size r", c);
    run.check(rep.cyn_size == rep.expected_cyn, "|C_{y,N}| formula", c);
    run.check(rep.cyn_size < rep.cyl_size, "|C_{y,N}| < |C_{y,L}|", c);
    run.check(rep.reflection_preserves_n0, "z -> w - z preserves N_0", c);
    run.add_case(std::move(c));
  }
}

void suite_delsarte(Runner& run) {
  for (std::uint32_t r : run.orders({3, 4, 5, 7, 8, 9}, [](std::uint32_t r) { return r >= 2; })) {
    const FieldPtr F = fields_for(r).big;
    for (std::uint32_t m : run.degrees(r, 2, r)) {
      run.tick();
      const NetSpec net = canonical_net(r, m);
      const Graph g = build_net_graph(*F, net);
      EnumerationOptions eo = run.enum_opts();
      eo.min_size = r;
      const auto cliques = collect_maximal_cliques(g, {}, eo);
      const DelsarteReport d = delsarte_check(*F, g, net, cliques);
      const bool bruen = (m - 1) * (m - 1) < r;
      json c{{"r", r},
             {"m", m},
             {"max_clique", d.max_clique},
             {"maximum_cliques", d.maximum_cliques},
             {"lines", d.maximum_cliques_that_are_lines}};
      run.check(d.within_bound && d.attained, "clique number equals r", c);
      run.check(d.maximum_cliques_that_are_lines == std::uint64_t{m} * r, "every line is a maximum clique", c);
      if (bruen) run.check(d.all_maximum_are_lines, "(m-1)^2 < r: only lines", c);
      run.add_case(std::move(c));
    }
  }
}

void suite_blokhuis(Runner& run) {
  std::vector<std::uint32_t> def;
  for (std::uint32_t r = 3; r <= 13; r += 2) {
    if (odd_prime_power(r)) def.push_back(r);
  }
  for (std::uint32_t r : run.orders(def, odd_prime_power)) {
    run.tick();
    const FieldPtr F = fields_for(r).big;
    const PaleyGraph pal = build_paley(*F);
    EnumerationOptions eo = run.enum_opts();
    eo.min_size = r;
    const auto cliques = collect_maximal_cliques(pal.graph, {}, eo);
    const DelsarteReport d = delsarte_check(*F, pal.graph, *pal.net, cliques);
    json c{{"r", r}, {"r_cliques", d.maximum_cliques}, {"lines", d.maximum_cliques_that_are_lines}};
    run.check(d.within_bound && d.attained, "clique number of P(r^2) is r", c);
    run.check(d.all_maximum_are_lines, "every r-clique is a line", c);
    run.check(d.maximum_cliques == std::uint64_t{r} * (r + 1) / 2, "r(r+1)/2 lines", c);
    run.add_case(std::move(c));
  }
}

// (r+3)/2 for prime r; s^(e-1)+1 for r = s^e with s maximal and e > 1.
std::uint32_t nonline_threshold(std::uint32_t r) {
  const PrimePower pp = factor_prime_power(r);
  if (pp.e == 1) return (r + 3) / 2;
  std::uint32_t e = 2;
  while (pp.e % e != 0) ++e;
  std::uint32_t s = 1;
  for (std::uint32_t i = 0; i < pp.e / e; ++i) s *= pp.p;
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i + 1 < e; ++i) v *= s;
  return v + 1;
}

void suite_nonline(Runner& run) {
  for (std::uint32_t r : run.orders({5, 7, 8, 9}, [](std::uint32_t r) { return r >= 3 && r <= 9; })) {
    const FieldPtr F = fields_for(r).big;
    const std::uint32_t t = nonline_threshold(r);
    const PrimePower pp = factor_prime_power(r);
    run.tick();
    const NonlineResult below = search_nonline_max_cliques(*F, t - 1, false);
    run.tick();
    const NonlineResult at = search_nonline_max_cliques(*F, t, true);
    json c{{"r", r},
           {"threshold", t},
           {"below_direction_sets", below.direction_sets},
           {"below_nonlines", below.nonline_cliques.size()},
           {"at_direction_sets", at.direction_sets},
           {"at_sets_with_nonlines", at.sets_with_nonlines},
           {"at_nonlines", at.nonline_cliques.size()},
           {"orbits", at.orbits}};
    run.check(below.nonline_cliques.empty(), "no non-line r-clique below the threshold", c);
    run.check(!at.nonline_cliques.empty(), "non-line r-cliques at the threshold", c);
    if (pp.e > 1 && pp.e <= 3) run.check(at.orbits == 1, "unique example up to equivalence", c);
    run.add_case(std::move(c));
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> direction_sets(std::uint32_t r, std::uint32_t m, const SuiteOptions& opts) {
  if (m == 0 || m > r + 1) throw std::invalid_argument("degree out of range");
  std::vector<std::vector<std::uint32_t>> out;
  if (binomial(r + 1, m) <= opts.exhaustive_limit) {
    std::vector<std::uint32_t> cur;
    std::function<void(std::uint32_t)> walk = [&](std::uint32_t from) {
      if (cur.size() == m) {
        out.push_back(cur);
        return;
      }
      for (std::uint32_t c = from; c + (m - cur.size()) <= r + 1; ++c) {
        cur.push_back(c);
        walk(c + 1);
        cur.pop_back();
      }
    };
    walk(0);
    return out;
  }
  std::set<std::vector<std::uint32_t>> chosen;
  std::vector<std::uint32_t> canon(m);
  std::iota(canon.begin(), canon.end(), 0u);
  chosen.insert(canon);
  out.push_back(canon);
  std::mt19937_64 rng(opts.seed ^ (std::uint64_t{r} << 32) ^ m);
  std::vector<std::uint32_t> all(r + 1);
  std::iota(all.begin(), all.end(), 0u);
  for (std::size_t tries = 0; out.size() < opts.random_sets + 1 && tries < 100 * (opts.random_sets + 1); ++tries) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::uint32_t> pick(all.begin(), all.begin() + m);
    std::sort(pick.begin(), pick.end());
    if (chosen.insert(pick).second) out.push_back(pick);
  }
  return out;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (!opts.directions.empty() && opts.rs.size() != 1) throw std::invalid_argument("--directions needs a single --r");
  Runner run(name, opts);
  static const std::map<std::string, void (*)(Runner&)> table{
      {"netcliq", suite_netcliq},     {"sizes", suite_sizes},       {"realize", suite_realize},
      {"goryainov", suite_goryainov}, {"baker", suite_baker},       {"stabilizers", suite_stabilizers},
      {"cyn", suite_cyn},             {"delsarte", suite_delsarte}, {"blokhuis", suite_blokhuis},
      {"nonline", suite_nonline}};
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  try {
    it->second(run);
  } catch (const TheoremFalsified& e) {
    run.falsified(e);
  }
  return run.finish();
}

}  // namespace netclique
