// stickforge command-line tool.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stickforge/stickforge.hpp"

namespace sf = stickforge;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kCeiling = 3, kMissing = 4 };

struct MissingData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string catalog;
  std::string format = "json";
  int jobs = 1;
};

void progress(const std::string& msg) { std::cerr << "# " << msg << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingData("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A PD given as a file path or inline text.
sf::PDCode load_pd(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return sf::parse_pd(read_file(arg));
  if (arg.find('(') == std::string::npos && arg.find('[') == std::string::npos) throw MissingData("no such PD file " + arg);
  return sf::parse_pd(arg);
}

sf::Catalog load_catalog(const Globals& g) {
  std::string path = g.catalog;
  if (path.empty())
    if (const char* env = std::getenv("STICKFORGE_CATALOG")) path = env;
  if (path.empty()) path = "catalog.json";
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw MissingData("catalog not found: " + path);
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") return sf::build_catalog(path);
  return sf::load_catalog(path);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::string join(const std::set<std::string>& names, const std::string& sep) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : sep) + n;
  return s;
}

json counts_json(const sf::SweepResult& r) {
  json j;
  j["assignments"] = r.total;
  j["unknown"] = r.unknown();
  j["counts"] = r.counts;
  j["names"] = r.names();
  return j;
}

/// Knot names reached by every assignment of a shadow; constituents for graphs.
std::set<std::string> shadow_names(const sf::Shadow& s, const sf::Catalog& c, int ceiling, int jobs) {
  if (s.code.kind == sf::GraphType::Kind::Cycle) {
    sf::SweepOptions opt;
    opt.ceiling = ceiling;
    opt.jobs = jobs;
    return sf::sweep_assignments(s, c, opt).names();
  }
  const int n = s.crossing_count();
  if (n > ceiling) throw sf::CeilingExceeded(std::to_string(n) + " crossings exceeds the sweep ceiling");
  std::set<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    for (const auto& k : sf::constituent_knots(sf::assign_crossings(s, sf::bits_of(mask, n))))
      for (const auto& name : sf::identify(k, c).names) out.insert(name);
  return out;
}

json invariants_json(const sf::PDCode& p) {
  json j;
  if (p.is_knot()) {
    j["jones"] = sf::jones_in_t(p).to_string("t");
    j["alexander"] = sf::alexander(p).to_string("t");
    j["det"] = sf::determinant(p);
  }
  json col;
  for (int q : {3, 5, 7}) col[std::to_string(q)] = sf::fox_colorings(p, q);
  j["colorings"] = col;
  j["tricolorable"] = sf::tricolorable(p);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar stick diagrams of knots and spatial graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");
  Globals g;
  app.add_option("--catalog", g.catalog, "catalog JSON (or CSV source); defaults to $STICKFORGE_CATALOG, then catalog.json");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

  // catalog build
  auto* cat = app.add_subcommand("catalog", "catalog maintenance");
  cat->require_subcommand(1);
  auto* build = cat->add_subcommand("build", "fingerprint a knot table");
  std::string source, cat_out;
  build->add_option("--source", source, "CSV with columns name,crossings,bridge,stick3d,pd")->required();
  build->add_option("--out", cat_out, "catalog JSON to write")->required();

  // enumerate
  auto* en = app.add_subcommand("enumerate", "enumerate shadows of stick diagrams");
  std::string graph_kind, loops, edges, enum_out;
  int sticks = 0, grid = 0, stick_ceiling = sf::kDefaultStickCeiling;
  std::uint64_t samples = sf::EnumerationOptions{}.samples, seed = sf::EnumerationOptions{}.seed;
  bool emit_coords = false;
  en->add_option("--graph", graph_kind, "graph type")->required()->check(CLI::IsMember({"cycle", "bouquet", "theta"}));
  en->add_option("--sticks", sticks, "total number of sticks")->required();
  en->add_option("--loops", loops, "bouquet loop lengths p,q");
  en->add_option("--edges", edges, "theta edge lengths a,b,c");
  en->add_option("--grid", grid, "grid size G (default 12 up to 6 sticks, 16 above)");
  en->add_option("--out", enum_out, "JSONL output file (default standard output)");
  en->add_option("--samples", samples, "random placements on the full grid");
  en->add_option("--seed", seed, "random seed");
  en->add_option("--ceiling", stick_ceiling, "largest stick count accepted");
  en->add_flag("--emit-coords", emit_coords, "include witness vertex coordinates");

  // classify
  auto* cl = app.add_subcommand("classify", "name the knots each shadow carries");
  std::string shadows_in;
  int sweep_ceiling = 16;
  cl->add_option("--shadows", shadows_in, "JSONL from enumerate")->required();
  cl->add_option("--ceiling", sweep_ceiling, "largest crossing count swept");

  // assignments
  auto* as = app.add_subcommand("assignments", "identify every crossing assignment of a PD's shadow");
  std::string pd_arg;
  as->add_option("--pd", pd_arg, "PD file or inline PD")->required();
  as->add_option("--ceiling", sweep_ceiling, "largest crossing count swept");

  // invariants
  auto* inv = app.add_subcommand("invariants", "knot invariants of a PD");
  inv->add_option("--pd", pd_arg, "PD file or inline PD")->required();

  // bounds
  auto* bd = app.add_subcommand("bounds", "planar stick index bounds");
  std::string knot, profile;
  std::vector<std::string> knot_list;
  int crossing_number = -1, pl = 0;
  bool all = false;
  bd->add_option("--knot", knot, "catalog knot name");
  bd->add_option("--knots", knot_list, "several catalog knot names (CSV table)")->delimiter(',');
  bd->add_flag("--all", all, "table for every catalog knot with bridge and stick data");
  bd->add_option("--crossing-number", crossing_number, "crossing number for LB1");
  bd->add_option("--profile", profile, "degree profile d:n,... for the crossing ceiling");
  bd->add_option("--pl", pl, "stick count for the crossing ceiling (default: edges in the profile)");

  // tricolor
  auto* tc = app.add_subcommand("tricolor", "tricolorability of a knot or bouquet diagram");
  std::string tc_graph = "knot";
  tc->add_option("--pd", pd_arg, "PD file or inline PD")->required();
  tc->add_option("--graph", tc_graph, "diagram kind")->check(CLI::IsMember({"knot", "bouquet", "theta"}));

  // constituents
  auto* co = app.add_subcommand("constituents", "constituent knots of a bouquet or theta diagram");
  co->add_option("--pd", pd_arg, "PD file or inline PD")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const bool csv = g.format == "csv";

    if (build->parsed()) {
      const auto c = sf::build_catalog(source);
      for (const auto& set : c.ambiguity_sets()) {
        std::string s;
        for (const auto& n : set) s += (s.empty() ? "" : " ") + n;
        progress("warning: shared fingerprint: " + s);
      }
      sf::save_catalog(c, cat_out);
      std::cout << c.size() << " records, " << c.ambiguity_sets().size() << " ambiguity sets\n";
      return kOk;
    }

    if (en->parsed()) {
      sf::GraphType gt = sf::GraphType::cycle(3);
      try {
        if (graph_kind == "cycle") {
          gt = sf::GraphType::cycle(sticks);
        } else if (graph_kind == "bouquet") {
          const auto v = loops.empty() ? std::vector<int>{3, sticks - 3} : parse_ints(loops);
          if (v.size() != 2 || v[0] + v[1] != sticks) throw Usage("--loops must be p,q with p + q = --sticks");
          gt = sf::GraphType::bouquet(v[0], v[1]);
        } else {
          std::vector<int> v = edges.empty() ? std::vector<int>{sticks / 3 + (sticks % 3 > 0), sticks / 3 + (sticks % 3 > 1), sticks / 3}
                                             : parse_ints(edges);
          if (v.size() != 3 || v[0] + v[1] + v[2] != sticks) throw Usage("--edges must be a,b,c with a + b + c = --sticks");
          gt = sf::GraphType::theta(v[0], v[1], v[2]);
        }
      } catch (const std::invalid_argument& e) {
        throw Usage(e.what());
      }
      sf::EnumerationOptions opt;
      opt.grid = grid > 0 ? grid : (gt.total_sticks() <= 6 ? 12 : 16);
      opt.samples = samples;
      opt.seed = seed;
      opt.jobs = g.jobs;
      opt.stick_ceiling = stick_ceiling;
      opt.progress = progress;
      const auto records = sf::enumerate_shadows(gt, opt);
      std::ofstream file;
      if (!enum_out.empty()) {
        file.open(enum_out);
        if (!file) throw MissingData("cannot write " + enum_out);
      }
      std::ostream& out = enum_out.empty() ? std::cout : file;
      int irreducible = 0;
      for (const auto& r : records) {
        json j;
        j["graph"] = gt.to_string();
        j["code"] = r.shadow.text;
        j["crossings"] = r.shadow.crossing_count();
        j["pattern"] = r.pattern.to_string();
        j["reducible"] = r.reducible;
        j["realized_at"] = r.grid;
        if (emit_coords) {
          json pts = json::array();
          for (const auto& p : r.coords) pts.push_back({p.x, p.y});
          j["coords"] = pts;
        }
        out << j.dump() << "\n";
        if (!r.reducible && r.shadow.crossing_count() > 0) ++irreducible;
      }
      std::ostringstream summary;
      summary << gt.to_string() << " grid " << opt.grid << ": " << records.size() << " shadows, " << irreducible
              << " irreducible nontrivial, max crossings " << sf::max_crossings(records);
      if (enum_out.empty()) progress(summary.str());
      else std::cout << summary.str() << "\n";
      return kOk;
    }

    if (cl->parsed()) {
      const auto c = load_catalog(g);
      std::ifstream in(shadows_in);
      if (!in) throw MissingData("cannot read " + shadows_in);
      std::string line;
      std::set<std::string> all_names;
      json rows = json::array();
      if (csv) std::cout << "shadow_code,crossings,names\n";
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = json::parse(line);
        const auto s = sf::parse_shadow(j.at("code").get<std::string>());
        const auto names = shadow_names(s, c, sweep_ceiling, g.jobs);
        all_names.insert(names.begin(), names.end());
        if (csv) std::cout << '"' << s.text << "\"," << s.crossing_count() << ",\"" << join(names, " ") << "\"\n";
        else rows.push_back({{"shadow_code", s.text}, {"crossings", s.crossing_count()}, {"names", names}});
      }
      if (csv) std::cout << "\"*\",," << '"' << join(all_names, " ") << "\"\n";
      else std::cout << json{{"shadows", rows}, {"union", all_names}}.dump(1) << "\n";
      return kOk;
    }

    if (as->parsed()) {
      const auto c = load_catalog(g);
      const auto p = load_pd(pd_arg);
      sf::SweepOptions opt;
      opt.ceiling = sweep_ceiling;
      opt.jobs = g.jobs;
      const auto r = sf::sweep_assignments(p, c, opt);
      if (csv) {
        std::cout << "name,count\n";
        for (const auto& [label, n] : r.counts) std::cout << label << "," << n << "\n";
      } else {
        auto j = counts_json(r);
        j["input"] = sf::identify(p, c).label();
        std::cout << j.dump(1) << "\n";
      }
      return kOk;
    }

    if (inv->parsed()) {
      const auto p = load_pd(pd_arg);
      const auto j = invariants_json(p);
      if (csv) {
        std::cout << "jones,alexander,det,colorings3,colorings5,colorings7,tricolorable\n";
        std::cout << '"' << j.value("jones", "") << "\",\"" << j.value("alexander", "") << "\"," << j.value("det", 0) << ","
                  << j["colorings"]["3"] << "," << j["colorings"]["5"] << "," << j["colorings"]["7"] << ","
                  << (j["tricolorable"].get<bool>() ? "true" : "false") << "\n";
      } else {
        std::cout << j.dump(1) << "\n";
      }
      return kOk;
    }

    if (bd->parsed()) {
      if (!knot.empty() || !knot_list.empty() || all) {
        const auto c = load_catalog(g);
        std::vector<sf::BoundsReport> rows;
        if (!knot.empty()) knot_list.insert(knot_list.begin(), knot);
        for (const auto& name : knot_list) {
          if (!c.find(name)) throw MissingData("no catalog record for " + name);
          rows.push_back(sf::bounds_report(name, c));
        }
        if (all)
          for (const auto& r : c.records())
            if (r.bridge_number && r.stick_number_3d) rows.push_back(sf::bounds_report(r));
        const auto floors = sf::default_classification();
        if (csv) {
          sf::write_bounds_csv(std::cout, rows);
        } else {
          json arr = json::array();
          for (const auto& r : rows) {
            auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
            const auto pl_value = sf::pl_conclusion(r, std::nullopt, floors.floor(r.name));
            arr.push_back({{"knot", r.name}, {"lb1", opt(r.lb1)}, {"lb2", opt(r.lb2)}, {"ub", opt(r.ub)}, {"pl", opt(pl_value)}});
          }
          std::cout << (arr.size() == 1 ? arr[0] : arr).dump(1) << "\n";
        }
        return kOk;
      }
      if (crossing_number < 0 && profile.empty()) throw Usage("bounds needs --knot, --knots, --all, --crossing-number or --profile");
      json j;
      if (crossing_number >= 0) j["lb1"] = sf::lb1(crossing_number);
      if (!profile.empty()) {
        sf::DegreeProfile dp;
        try {
          dp = sf::DegreeProfile::parse(profile);
        } catch (const std::exception& e) {
          throw Usage(e.what());
        }
        const int sticks_used = pl > 0 ? pl : dp.edge_count();
        j["pl"] = sticks_used;
        j["crossing_ceiling"] = sf::crossing_ceiling(dp, sticks_used);
      }
      if (csv) {
        std::cout << "lb1,pl,crossing_ceiling\n"
                  << (j.contains("lb1") ? j["lb1"].dump() : "") << "," << (j.contains("pl") ? j["pl"].dump() : "") << ","
                  << (j.contains("crossing_ceiling") ? j["crossing_ceiling"].dump() : "") << "\n";
      } else {
        std::cout << j.dump(1) << "\n";
      }
      return kOk;
    }

    if (tc->parsed()) {
      const auto p = load_pd(pd_arg);
      if (tc_graph == "theta") throw Usage("tricolorability with the vertex condition needs even-degree vertices; theta-curves have degree 3");
      if ((tc_graph == "knot") != p.is_knot()) throw Usage("PD does not match --graph " + tc_graph);
      const auto n = sf::fox_colorings(p, 3);
      if (csv) std::cout << "colorings,tricolorable\n" << n << "," << (n > 3 ? "true" : "false") << "\n";
      else std::cout << json{{"colorings", n}, {"tricolorable", n > 3}}.dump() << "\n";
      return kOk;
    }

    if (co->parsed()) {
      const auto p = load_pd(pd_arg);
      std::optional<sf::Catalog> c;
      try {
        c = load_catalog(g);
      } catch (const MissingData&) {
      }
      json arr = json::array();
      for (const auto& k : sf::constituent_knots(p)) {
        json j{{"pd", sf::emit_pd(k)}, {"jones", sf::jones_in_t(k).to_string("t")}};
        if (c) j["name"] = sf::identify(k, *c).label();
        arr.push_back(j);
      }
      if (csv) {
        std::cout << "pd,jones,name\n";
        for (const auto& j : arr)
          std::cout << '"' << j["pd"].get<std::string>() << "\",\"" << j["jones"].get<std::string>() << "\"," << j.value("name", "") << "\n";
      } else {
        std::cout << arr.dump(1) << "\n";
      }
      return kOk;
    }
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sf::CeilingExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCeiling;
  } catch (const MissingData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMissing;
  } catch (const sf::CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMissing;
  } catch (const sf::MalformedPD& e) {
    std::cerr << "error: malformed PD: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
