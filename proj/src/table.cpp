#include "netclique/table.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "netclique/cliques.hpp"
#include "netclique/gf.hpp"
#include "netclique/netgraph.hpp"

namespace netclique {

using nlohmann::json;

std::string TableRow::to_paper() const {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += ", ";
    out += std::to_string(e.size);
    if (e.count) {
      out += "^" + std::to_string(*e.count);
      if (!certified) out += "?";
    }
  }
  return out;
}

json TableRow::to_json() const {
  json ents = json::array();
  for (const auto& e : entries) {
    ents.push_back({{"size", e.size}, {"orbits", e.count ? json(*e.count) : json(nullptr)}});
  }
  return {{"schema", "netclique.table/1"},
          {"family", family},
          {"r", r},
          {"vertices", vertices},
          {"entries", ents},
          {"certified", certified},
          {"flags", flags},
          {"group", group},
          {"group_order", group_order},
          {"total_cliques", total_cliques},
          {"row", to_paper()}};
}

std::string TableRow::tsv_header() { return "family\tr\tsize\torbits\tcertified"; }

std::string TableRow::to_tsv() const {
  std::string out;
  for (const auto& e : entries) {
    out += family + "\t" + std::to_string(r) + "\t" + std::to_string(e.size) + "\t" +
           (e.count ? std::to_string(*e.count) : std::string("-")) + "\t" + (certified ? "yes" : "no") + "\n";
  }
  return out;
}

namespace {

std::uint64_t parse_number(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("malformed row entry in '" + std::string(whole) + "'");
  }
  std::uint64_t v = 0;
  for (char c : s) {
    if (v > (~std::uint64_t{0} - 9) / 10) throw std::invalid_argument("number too large in row");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_row(const TableRow& row) {
  for (std::size_t i = 0; i < row.entries.size(); ++i) {
    if (i > 0 && row.entries[i].size <= row.entries[i - 1].size) {
      throw std::invalid_argument("row sizes must be strictly increasing");
    }
    if (row.entries[i].count && *row.entries[i].count == 0) throw std::invalid_argument("row counts must be positive");
  }
}

}  // namespace

TableRow parse_paper_row(std::string_view text) {
  TableRow row;
  bool any_marked = false, any_plain = false;
  std::string_view rest = trim(text);
  if (rest.empty()) throw std::invalid_argument("empty row");
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view tok = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (comma != std::string_view::npos && trim(rest).empty()) throw std::invalid_argument("trailing comma in row");
    TableEntry e;
    const auto caret = tok.find('^');
    if (caret == std::string_view::npos) {
      e.size = parse_number(tok, text);
    } else {
      e.size = parse_number(tok.substr(0, caret), text);
      std::string_view cnt = tok.substr(caret + 1);
      if (!cnt.empty() && cnt.back() == '?') {
        cnt.remove_suffix(1);
        any_marked = true;
      } else {
        any_plain = true;
      }
      e.count = parse_number(cnt, text);
    }
    row.entries.push_back(e);
  }
  if (any_marked && any_plain) throw std::invalid_argument("row mixes certified and uncertified counts");
  row.certified = !any_marked;
  check_row(row);
  return row;
}

TableRow row_from_json(const json& j) {
  if (j.value("schema", "") != "netclique.table/1") throw std::invalid_argument("unknown table schema");
  TableRow row;
  row.family = j.at("family").get<std::string>();
  row.r = j.at("r").get<std::uint32_t>();
  row.vertices = j.at("vertices").get<std::uint64_t>();
  for (const auto& e : j.at("entries")) {
    TableEntry te;
    te.size = e.at("size").get<std::size_t>();
    if (!e.at("orbits").is_null()) te.count = e.at("orbits").get<std::uint64_t>();
    row.entries.push_back(te);
  }
  row.certified = j.at("certified").get<bool>();
  row.flags = j.at("flags").get<std::vector<std::string>>();
  row.group = j.at("group").get<std::string>();
  row.group_order = j.at("group_order").get<std::uint64_t>();
  row.total_cliques = j.at("total_cliques").get<std::uint64_t>();
  check_row(row);
  return row;
}

namespace {

EnumerationOptions enum_options(const TableOptions& opts) {
  EnumerationOptions e;
  e.max_cliques = opts.max_cliques;
  e.jobs = opts.jobs;
  e.deadline = opts.deadline;
  return e;
}

void fill_from_table(TableRow& row, const OrbitTable& t, const GroupSpec& grp) {
  for (auto [size, count] : t.counts()) row.entries.push_back({size, count});
  row.total_cliques = t.total_cliques();
  row.group_order = grp.order;
}

FieldPtr field_of_order(std::uint64_t q) {
  const PrimePower pp = factor_prime_power(q);
  if (pp.p == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make_field(pp.p, pp.e);
}

// r -> GF(r^2).
FieldPtr square_field(std::uint32_t r) {
  const PrimePower pp = factor_prime_power(r);
  if (pp.p == 0) throw std::invalid_argument("r=" + std::to_string(r) + " is not a prime power");
  return make_field(pp.p, 2 * pp.e);
}

GroupSpec load_generators(const FieldPtr& f, const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file " + path);
  GroupSpec grp = affine_group_from_generators(f, read_affine_generators(*f, in));
  if (auto bad = find_bad_generator(g, grp)) {
    throw std::invalid_argument("generator " + std::to_string(*bad + 1) + " is not an automorphism of the graph");
  }
  return grp;
}

void require_full(const GroupSpec& grp, const TableOptions& opts, TableRow& row, const std::string& what) {
  if (grp.certified_full) return;
  if (!opts.allow_subgroup) {
    throw SubgroupRefused(what + " is not known to be the full automorphism group; orbit counts may merge "
                                 "(use --group brute or --allow-subgroup)");
  }
  row.certified = false;
  row.flags.push_back("subgroup");
}

// Affine groups with translations use the anchored route; anything else is
// classified over the full clique list.
OrbitTable classify(const Graph& g, const GroupSpec& grp, const TableOptions& opts) {
  if (grp.is_affine() && grp.all_translations) return classify_orbits_anchored(g, grp, enum_options(opts));
  return classify_all(g, grp, opts);
}

TableRow paley_row(std::uint32_t r, std::optional<std::uint32_t> q, const TableOptions& opts) {
  TableRow row;
  row.family = "paley";
  const FieldPtr F = q ? field_of_order(*q) : square_field(r);
  if (F->q() % 4 != 1) throw std::invalid_argument("Paley graphs need q = 1 mod 4");
  row.r = q ? 0 : r;
  if (q) {
    const PrimePower pp = factor_prime_power(*q);
    if (pp.e % 2 == 0) row.r = subfield_order(*F);
  }
  const Graph g = build_paley(*F).graph;
  row.vertices = g.size();
  GroupSpec grp;
  if (opts.group == GroupMode::brute) {
    grp = brute_force_automorphisms(g, opts.brute_vertex_cap);
    row.group = "brute-force";
  } else if (opts.group == GroupMode::file) {
    grp = load_generators(F, g, opts.generators_path);
    row.group = "generator-file";
    require_full(grp, opts, row, "the supplied group");
  } else {
    grp = paley_group(F);
    row.group = "closed-form";
  }
  fill_from_table(row, classify(g, grp, opts), grp);
  return row;
}

TableRow peisert_row(std::uint32_t r, const TableOptions& opts) {
  TableRow row;
  row.family = "peisert";
  row.r = r;
  const FieldPtr F = square_field(r);
  if (F->p() % 4 != 3) throw std::invalid_argument("Peisert graphs need p = 3 mod 4");
  const Graph g = build_peisert(*F);
  row.vertices = g.size();
  GroupSpec closed = peisert_group(F);
  GroupMode mode = opts.group;
  if (mode == GroupMode::automatic) mode = closed.certified_full ? GroupMode::closed_form : GroupMode::brute;
  if (mode == GroupMode::brute) {
    GroupSpec grp = brute_force_automorphisms(g, opts.brute_vertex_cap);
    row.group = "brute-force";
    if (!closed.certified_full) {
      row.flags.push_back("brute-force augmentation x" + std::to_string(grp.order / closed.order));
    }
    fill_from_table(row, classify_all(g, grp, opts), grp);
    return row;
  }
  GroupSpec grp = mode == GroupMode::file ? load_generators(F, g, opts.generators_path) : std::move(closed);
  row.group = mode == GroupMode::file ? "generator-file" : "closed-form";
  require_full(grp, opts, row, mode == GroupMode::file ? "the supplied group" : "the closed-form Peisert group");
  fill_from_table(row, classify(g, grp, opts), grp);
  return row;
}

TableRow taylor_row(std::uint32_t r, const TableOptions& opts) {
  TableRow row;
  row.family = "taylor-paley";
  row.r = r;
  const FieldPtr F = square_field(r);
  if (F->p() == 2) throw std::invalid_argument("Taylor covers need odd r");
  const Graph g = build_taylor(build_paley(*F).graph);
  row.vertices = g.size();
  GroupMode mode = opts.group;
  if (mode == GroupMode::automatic) mode = g.size() <= opts.brute_vertex_cap ? GroupMode::brute : GroupMode::closed_form;
  if (mode == GroupMode::file) throw std::invalid_argument("generator files describe affine groups, not Taylor covers");
  GroupSpec grp;
  if (mode == GroupMode::brute) {
    grp = brute_force_automorphisms(g, opts.brute_vertex_cap);
    row.group = "brute-force";
  } else {
    grp = taylor_paley_group(F);
    row.group = "constructed";
    require_full(grp, opts, row, "the constructed Taylor group");
  }
  fill_from_table(row, classify_all(g, grp, opts), grp);
  return row;
}

TableRow net_row(std::uint32_t r, const TableOptions& opts) {
  TableRow row;
  row.family = "net";
  row.r = r;
  const FieldPtr F = square_field(r);
  NetSpec net;
  if (!opts.directions.empty()) {
    net = make_net_spec(r, opts.directions);
  } else if (opts.m) {
    net = canonical_net(r, *opts.m);
  } else {
    throw std::invalid_argument("net rows need --directions or --m");
  }
  const Graph g = build_net_graph(*F, net);
  row.vertices = g.size();
  std::string dirs;
  for (auto d : net.directions) dirs += (dirs.empty() ? "" : ",") + std::to_string(d);
  row.flags.push_back("directions=" + dirs);
  GroupSpec grp;
  if (opts.group == GroupMode::brute) {
    grp = brute_force_automorphisms(g, opts.brute_vertex_cap);
    row.group = "brute-force";
  } else if (opts.group == GroupMode::file) {
    grp = load_generators(F, g, opts.generators_path);
    row.group = "generator-file";
    require_full(grp, opts, row, "the supplied group");
  } else {
    grp = net_linear_group(F, net);
    row.group = "net-linear";
    require_full(grp, opts, row, "the semilinear stabilizer of the net");
  }
  fill_from_table(row, classify(g, grp, opts), grp);
  return row;
}

}  // namespace

OrbitTable classify_all(const Graph& g, const GroupSpec& grp, const TableOptions& opts) {
  const auto cliques = collect_maximal_cliques(g, {}, enum_options(opts));
  return classify_orbits(cliques, grp);
}

TableRow make_table_row(const std::string& family, std::uint32_t r, const TableOptions& opts,
                        std::optional<std::uint32_t> q) {
  if (family == "paley") return paley_row(r, q, opts);
  if (q) throw std::invalid_argument("--q applies to the paley family only");
  if (family == "peisert") return peisert_row(r, opts);
  if (family == "taylor-paley") return taylor_row(r, opts);
  if (family == "net") return net_row(r, opts);
  throw std::invalid_argument("unknown family '" + family + "'");
}

TableRow make_file_row(const Graph& g, const TableOptions& opts) {
  TableRow row;
  row.family = "file";
  row.vertices = g.size();
  if (opts.group == GroupMode::brute) {
    const GroupSpec grp = brute_force_automorphisms(g, opts.brute_vertex_cap);
    row.group = "brute-force";
    fill_from_table(row, classify_all(g, grp, opts), grp);
    return row;
  }
  if (opts.group == GroupMode::file) {
    const FieldPtr F = field_of_order(g.size());
    const GroupSpec grp = load_generators(F, g, opts.generators_path);
    row.group = "generator-file";
    require_full(grp, opts, row, "the supplied group");
    fill_from_table(row, classify(g, grp, opts), grp);
    return row;
  }
  SizeHistogram h;
  row.total_cliques = enumerate_maximal_cliques(g, [&](const Clique& c) { ++h[c.size()]; }, enum_options(opts));
  for (auto [s, c] : h) row.entries.push_back({s, std::nullopt});
  row.group = "none";
  row.flags.push_back("sizes-only");
  return row;
}

std::vector<std::size_t> taylor_clique_sizes(std::uint32_t r, const TableOptions& opts) {
  const FieldPtr F = square_field(r);
  const Graph g = build_taylor(build_paley(*F).graph);
  const GroupSpec grp = taylor_paley_group(F);
  if (point_orbit(grp.generators, taylor::kInfPlus, g.size()).size() != g.size()) {
    throw std::logic_error("Taylor group is not vertex-transitive");
  }
  std::set<std::size_t> sizes;
  const Vertex seed[1] = {taylor::kInfPlus};
  enumerate_maximal_cliques(g, seed, [&](const Clique& c) { sizes.insert(c.size()); }, enum_options(opts));
  return {sizes.begin(), sizes.end()};
}

TableRow smallest_row(const std::string& family, std::uint32_t r, const TableOptions& opts) {
  const FieldPtr F = square_field(r);
  Graph g;
  GroupSpec grp;
  if (family == "paley") {
    if (F->p() == 2) throw std::invalid_argument("Paley graphs need odd r");
    g = build_paley(*F).graph;
    grp = paley_group(F);
  } else if (family == "peisert") {
    if (F->p() % 4 != 3) throw std::invalid_argument("Peisert graphs need p = 3 mod 4");
    g = build_peisert(*F);
    grp = peisert_group(F);
    if (!grp.certified_full) {
      if (g.size() > opts.brute_vertex_cap) throw std::invalid_argument("group too large for brute force");
      grp = brute_force_automorphisms(g, opts.brute_vertex_cap);
    }
  } else {
    throw std::invalid_argument("smallest supports the paley and peisert families");
  }
  TableRow row;
  row.family = family + "-smallest";
  row.r = r;
  row.vertices = g.size();
  row.group = grp.kind == GroupSpec::Kind::explicit_perm ? "brute-force" : "closed-form";
  row.group_order = grp.order;
  EnumerationOptions eo = enum_options(opts);
  for (std::size_t bound = 2; bound <= g.size(); ++bound) {
    eo.max_size = bound;
    const OrbitTable t = grp.is_affine() ? classify_orbits_anchored(g, grp, eo) : [&] {
      return classify_orbits(collect_maximal_cliques(g, {}, eo), grp);
    }();
    if (t.orbits.empty()) continue;
    const auto counts = t.counts();
    row.entries.push_back({counts.begin()->first, counts.begin()->second});
    row.total_cliques = 0;
    for (const auto& o : t.orbits) {
      if (o.representative.size() == counts.begin()->first) row.total_cliques += o.size;
    }
    return row;
  }
  throw std::logic_error("graph has no maximal cliques");
}

}  // namespace netclique
