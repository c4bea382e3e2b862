// netclique: maximal cliques in Paley, Peisert, Taylor and net graphs.
//
//   netclique table paley 11
//   netclique table peisert --r 23 --jobs 4 --format json
//   netclique verify netcliq --r 7 --all-m
//   netclique smallest paley --r-max 23
//   netclique export paley --r 3 --out p9.txt
//   netclique ingest p9.txt
//
// Exit status: 0 pass, 1 falsification, 2 usage, 3 resource cap.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netclique/cliques.hpp"
#include "netclique/gf.hpp"
#include "netclique/netgraph.hpp"
#include "netclique/structure.hpp"
#include "netclique/suites.hpp"
#include "netclique/table.hpp"

namespace {

using namespace netclique;

constexpr int kPass = 0, kFalsified = 1, kUsage = 2, kResource = 3;

std::vector<std::uint32_t> parse_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    const auto comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + tok + "' in list '" + s + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad number '" + tok + "' in list '" + s + "'");
    out.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct Common {
  unsigned jobs = 1;
  std::uint64_t max_cliques = 1'000'000'000;
  double max_seconds = 0;
  std::string format = "paper";

  std::optional<std::chrono::steady_clock::time_point> deadline() const {
    if (max_seconds <= 0) return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(max_seconds));
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app->add_option("--max-cliques", c.max_cliques, "cap on enumerated maximal cliques");
  app->add_option("--max-seconds", c.max_seconds, "wall-clock budget (0 = none)");
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"paper", "json", "tsv"}));
}

void print_rows(const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(r.to_json());
    std::cout << (rows.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else if (format == "tsv") {
    std::cout << TableRow::tsv_header() << "\n";
    for (const auto& r : rows) std::cout << r.to_tsv();
  } else {
    for (const auto& r : rows) {
      if (rows.size() > 1 || r.family.ends_with("-smallest")) std::cout << r.r << "\t";
      std::cout << r.to_paper() << "\n";
      for (const auto& f : r.flags) {
        if (f == "subgroup") std::cerr << "warning: orbit counts are for a subgroup of the full group\n";
      }
    }
  }
}

GroupMode parse_group(const std::string& g, const std::string& generators) {
  if (!generators.empty()) {
    if (!g.empty() && g != "file") throw std::invalid_argument("--generators needs --group file");
    return GroupMode::file;
  }
  if (g.empty()) return GroupMode::automatic;
  if (g == "closed-form") return GroupMode::closed_form;
  if (g == "brute") return GroupMode::brute;
  if (g == "file") throw std::invalid_argument("--group file needs --generators");
  throw std::invalid_argument("unknown group mode " + g);
}

Graph family_graph(const std::string& family, std::optional<std::uint32_t> r, std::optional<std::uint32_t> q,
                   const std::vector<std::uint32_t>& dirs, std::optional<std::uint32_t> m) {
  auto field_r2 = [&]() {
    if (!r) throw std::invalid_argument("--r is required");
    const PrimePower pp = factor_prime_power(*r);
    if (pp.p == 0) throw std::invalid_argument("r must be a prime power");
    return make_field(pp.p, 2 * pp.e);
  };
  if (family == "paley") {
    if (q) {
      const PrimePower pp = factor_prime_power(*q);
      if (pp.p == 0) throw std::invalid_argument("q must be a prime power");
      return build_paley(*make_field(pp.p, pp.e)).graph;
    }
    return build_paley(*field_r2()).graph;
  }
  if (family == "peisert") return build_peisert(*field_r2());
  if (family == "taylor-paley") return build_taylor(build_paley(*field_r2()).graph);
  if (family == "net") {
    const FieldPtr f = field_r2();
    if (!dirs.empty()) return build_net_graph(*f, make_net_spec(*r, dirs));
    if (m) return build_net_graph(*f, canonical_net(*r, *m));
    throw std::invalid_argument("net graphs need --directions or --m");
  }
  throw std::invalid_argument("unknown family " + family);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal cliques in Paley, Peisert, Taylor and Desarguesian net graphs"};
  app.require_subcommand(1);

  // table
  Common tc;
  std::string t_family, t_group, t_generators, t_graph, t_dirs;
  std::optional<std::uint32_t> t_r, t_q, t_m;
  bool t_allow = false;
  auto* table = app.add_subcommand("table", "orbit table row of maximal cliques");
  table->add_option("family", t_family, "paley | peisert | taylor-paley | net | file")
      ->required()
      ->check(CLI::IsMember({"paley", "peisert", "taylor-paley", "net", "file"}));
  table->add_option("order", t_r, "r (same as --r)");
  table->add_option("--r", t_r, "order of the subfield; graphs live on GF(r^2)");
  table->add_option("--q", t_q, "Paley graph P(q) directly");
  table->add_option("--m", t_m, "net degree (directions 0..m-1)");
  table->add_option("--directions", t_dirs, "net direction classes, comma list");
  table->add_option("--group", t_group, "closed-form | brute | file");
  table->add_option("--generators", t_generators, "generator file: 'a_code b_code frob_index' per line");
  table->add_option("--graph", t_graph, "edge-list file (family file)");
  table->add_flag("--allow-subgroup", t_allow, "accept orbit counts under a group not known to be full");
  add_common(table, tc);

  // verify
  Common vc;
  std::string v_suite, v_rs, v_dirs;
  std::optional<std::uint32_t> v_rmax, v_m;
  bool v_all_m = false;
  std::uint64_t v_seed = 1;
  std::size_t v_random = 24;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", v_suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--r", v_rs, "orders, comma list");
  verify->add_option("--r-max", v_rmax, "all prime powers up to this bound");
  verify->add_option("--m", v_m, "single degree");
  verify->add_flag("--all-m", v_all_m, "every degree in range (default)");
  verify->add_option("--directions", v_dirs, "explicit net direction classes (needs one --r)");
  verify->add_option("--seed", v_seed, "seed for sampled direction sets");
  verify->add_option("--random-sets", v_random, "sampled direction sets per (r, m)");
  add_common(verify, vc);

  // smallest
  Common sc;
  std::string s_family = "paley", s_rs;
  std::optional<std::uint32_t> s_rmin, s_rmax;
  auto* smallest = app.add_subcommand("smallest", "smallest maximal cliques with orbit counts");
  smallest->add_option("family", s_family, "paley | peisert")->check(CLI::IsMember({"paley", "peisert"}));
  smallest->add_option("--r", s_rs, "orders, comma list");
  smallest->add_option("--r-min", s_rmin, "lower bound on r");
  smallest->add_option("--r-max", s_rmax, "upper bound on r");
  add_common(smallest, sc);

  // export
  std::string e_family, e_out, e_dirs;
  std::optional<std::uint32_t> e_r, e_q, e_m;
  auto* exportc = app.add_subcommand("export", "write a graph as an edge list");
  exportc->add_option("family", e_family, "paley | peisert | taylor-paley | net")
      ->required()
      ->check(CLI::IsMember({"paley", "peisert", "taylor-paley", "net"}));
  exportc->add_option("--r", e_r, "order of the subfield");
  exportc->add_option("--q", e_q, "Paley graph P(q) directly");
  exportc->add_option("--m", e_m, "net degree");
  exportc->add_option("--directions", e_dirs, "net direction classes");
  exportc->add_option("--out", e_out, "output path (default stdout)");

  // ingest
  std::string i_path, i_out;
  auto* ingest = app.add_subcommand("ingest", "read an edge-list graph and describe it");
  ingest->add_option("path", i_path, "edge-list file")->required();
  ingest->add_option("--out", i_out, "re-export the parsed graph here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*table) {
      TableOptions opts;
      opts.jobs = tc.jobs;
      opts.max_cliques = tc.max_cliques;
      opts.deadline = tc.deadline();
      opts.group = parse_group(t_group, t_generators);
      opts.generators_path = t_generators;
      opts.allow_subgroup = t_allow;
      opts.m = t_m;
      if (!t_dirs.empty()) opts.directions = parse_list(t_dirs);
      TableRow row;
      if (t_family == "file") {
        if (t_graph.empty()) throw std::invalid_argument("family file needs --graph");
        row = make_file_row(ingest_graph_file(t_graph), opts);
      } else {
        if (!t_r && !(t_q && t_family == "paley")) throw std::invalid_argument("--r is required");
        row = make_table_row(t_family, t_r.value_or(0), opts, t_q);
      }
      print_rows({row}, tc.format);
      return kPass;
    }
    if (*verify) {
      SuiteOptions opts;
      if (!v_rs.empty()) opts.rs = parse_list(v_rs);
      opts.r_max = v_rmax;
      opts.m = v_m;
      opts.all_m = v_all_m;
      if (v_all_m && v_m) throw std::invalid_argument("--all-m and --m are exclusive");
      if (!v_dirs.empty()) opts.directions = parse_list(v_dirs);
      opts.seed = v_seed;
      opts.random_sets = v_random;
      opts.max_cliques = vc.max_cliques;
      opts.deadline = vc.deadline();
      const SuiteReport rep = run_suite(v_suite, opts);
      if (vc.format == "json") {
        std::cout << rep.to_json().dump(2) << "\n";
      } else {
        std::cout << rep.suite << ": " << (rep.passed() ? "pass" : "FAIL") << " (" << rep.checks << " checks, "
                  << rep.failures << " failures, " << rep.cases.size() << " cases)\n";
        for (const auto& f : rep.failure_list) std::cout << "  " << f.dump() << "\n";
      }
      if (rep.witness) std::cerr << "witness: " << rep.witness->dump() << "\n";
      return rep.passed() ? kPass : kFalsified;
    }
    if (*smallest) {
      std::vector<std::uint32_t> rs;
      if (!s_rs.empty()) {
        rs = parse_list(s_rs);
      } else {
        if (!s_rmax) throw std::invalid_argument("smallest needs --r or --r-max");
        for (std::uint32_t r = s_rmin.value_or(3); r <= *s_rmax; ++r) {
          const PrimePower pp = factor_prime_power(r);
          if (pp.p == 0 || pp.p == 2) continue;
          if (s_family == "peisert" && pp.p % 4 != 3) continue;
          rs.push_back(r);
        }
      }
      TableOptions opts;
      opts.jobs = sc.jobs;
      opts.max_cliques = sc.max_cliques;
      opts.deadline = sc.deadline();
      std::vector<TableRow> rows;
      for (auto r : rs) rows.push_back(smallest_row(s_family, r, opts));
      print_rows(rows, sc.format);
      return kPass;
    }
    if (*exportc) {
      const Graph g = family_graph(e_family, e_r, e_q, e_dirs.empty() ? std::vector<std::uint32_t>{} : parse_list(e_dirs),
                                   e_m);
      if (e_out.empty()) {
        export_graph(g, std::cout);
      } else {
        std::ofstream out(e_out);
        if (!out) throw std::runtime_error("cannot write " + e_out);
        export_graph(g, out);
      }
      return kPass;
    }
    if (*ingest) {
      const Graph g = ingest_graph_file(i_path);
      const SrgCheck srg = check_srg(g);
      nlohmann::json j{{"vertices", g.size()}, {"edges", g.edge_count()}};
      if (srg.kind == SrgCheck::Kind::strongly_regular) {
        j["srg"] = {srg.params.v, srg.params.k, srg.params.lambda, srg.params.mu};
      }
      std::cout << j.dump() << "\n";
      if (!i_out.empty()) {
        std::ofstream out(i_out);
        if (!out) throw std::runtime_error("cannot write " + i_out);
        export_graph(g, out);
      }
      return kPass;
    }
  } catch (const TheoremFalsified& e) {
    std::cerr << "falsified: " << e.what() << "\nwitness: " << e.witness().to_json() << "\n";
    return kFalsified;
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::overflow_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const SubgroupRefused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
