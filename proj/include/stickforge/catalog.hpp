#ifndef STICKFORGE_CATALOG_HPP
#define STICKFORGE_CATALOG_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "invariants.hpp"
#include "moves.hpp"
#include "pd_code.hpp"
#include "shadow.hpp"

namespace stickforge {

class MalformedRow : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DuplicateName : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Loaded catalog file is unreadable or its stored fingerprints do not
/// match a recomputation.
class CatalogError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  std::optional<int> bridge_number;
  std::optional<int> stick_number_3d;
  PDCode reference_pd;
  Fingerprint fingerprint;
};

class Catalog {
public:
  static constexpr int kVersion = 1;

  Catalog() = default;

  /// Computes nothing: records must carry their fingerprints.
  explicit Catalog(std::vector<KnotRecord> records) : records_(std::move(records)) { index(); }

  const std::vector<KnotRecord>& records() const noexcept { return records_; }
  const std::vector<std::vector<std::string>>& ambiguity_sets() const noexcept { return ambiguity_sets_; }
  std::size_t size() const noexcept { return records_.size(); }

  const KnotRecord* find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &records_[it->second];
  }

  /// Records sharing a fingerprint, in catalog order.
  std::vector<const KnotRecord*> lookup(const Fingerprint& f) const {
    std::vector<const KnotRecord*> out;
    auto it = by_key_.find(f.key());
    if (it != by_key_.end())
      for (std::size_t i : it->second) out.push_back(&records_[i]);
    return out;
  }

private:
  void index() {
    by_name_.clear();
    by_key_.clear();
    ambiguity_sets_.clear();
    std::vector<std::string> keys;
    for (std::size_t i = 0; i < records_.size(); ++i) {
      if (!by_name_.emplace(records_[i].name, i).second) throw DuplicateName("duplicate knot name " + records_[i].name);
      const auto key = records_[i].fingerprint.key();
      auto& slot = by_key_[key];
      if (slot.empty()) keys.push_back(key);
      slot.push_back(i);
    }
    for (const auto& key : keys) {
      const auto& idx = by_key_[key];
      if (idx.size() < 2) continue;
      std::vector<std::string> names;
      for (std::size_t i : idx) names.push_back(records_[i].name);
      ambiguity_sets_.push_back(std::move(names));
    }
  }

  std::vector<KnotRecord> records_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_key_;
  std::vector<std::vector<std::string>> ambiguity_sets_;
};

namespace catalog_detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw MalformedRow("unterminated quote in row: " + line);
  out.push_back(cur);
  return out;
}

inline std::optional<int> optional_int(const std::string& field, const std::string& what, int row) {
  if (field.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(field, &used);
    if (used != field.size() || v < 0) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw MalformedRow("row " + std::to_string(row) + ": bad " + what + " '" + field + "'");
  }
}

}  // namespace catalog_detail

/// Builds a catalog from CSV with columns name,crossings,bridge,stick3d,pd.
/// Blank lines and lines starting with '#' are skipped.
inline Catalog build_catalog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw MalformedRow("empty catalog source");
  const auto header = catalog_detail::split_csv_line(line);
  const std::vector<std::string> want{"name", "crossings", "bridge", "stick3d", "pd"};
  if (header != want) throw MalformedRow("catalog header must be name,crossings,bridge,stick3d,pd");
  std::vector<KnotRecord> records;
  std::set<std::string> names;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    const auto f = catalog_detail::split_csv_line(line);
    if (f.size() != 5) throw MalformedRow("row " + std::to_string(row) + ": expected 5 fields, got " + std::to_string(f.size()));
    KnotRecord r;
    r.name = f[0];
    if (r.name.empty()) throw MalformedRow("row " + std::to_string(row) + ": empty name");
    const auto cr = catalog_detail::optional_int(f[1], "crossing number", row);
    if (!cr) throw MalformedRow("row " + std::to_string(row) + ": missing crossing number");
    r.crossing_number = *cr;
    r.bridge_number = catalog_detail::optional_int(f[2], "bridge number", row);
    r.stick_number_3d = catalog_detail::optional_int(f[3], "stick number", row);
    try {
      r.reference_pd = parse_pd(f[4]);
    } catch (const MalformedPD& e) {
      throw MalformedRow("row " + std::to_string(row) + ": " + e.what());
    }
    if (!r.reference_pd.is_knot()) throw MalformedRow("row " + std::to_string(row) + ": PD is not a knot");
    if (!names.insert(r.name).second) throw DuplicateName("duplicate knot name " + r.name);
    r.fingerprint = fingerprint(r.reference_pd);
    records.push_back(std::move(r));
  }
  return Catalog(std::move(records));
}

inline Catalog build_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog source " + path);
  return build_catalog(in);
}

inline nlohmann::json to_json(const Catalog& c) {
  nlohmann::json j;
  j["version"] = Catalog::kVersion;
  j["records"] = nlohmann::json::array();
  for (const auto& r : c.records()) {
    nlohmann::json o;
    o["name"] = r.name;
    o["crossing_number"] = r.crossing_number;
    o["bridge_number"] = r.bridge_number ? nlohmann::json(*r.bridge_number) : nlohmann::json(nullptr);
    o["stick_number_3d"] = r.stick_number_3d ? nlohmann::json(*r.stick_number_3d) : nlohmann::json(nullptr);
    o["reference_pd"] = emit_pd(r.reference_pd);
    o["fingerprint"] = {{"jones", r.fingerprint.jones.serialize()},
                        {"alexander", r.fingerprint.alexander.serialize()},
                        {"determinant", r.fingerprint.determinant}};
    j["records"].push_back(o);
  }
  j["ambiguity_sets"] = c.ambiguity_sets();
  return j;
}

/// Reads a catalog JSON document and recomputes the fingerprints of
/// `recheck` records chosen with the given seed.
inline Catalog catalog_from_json(const nlohmann::json& j, int recheck = 3, std::uint64_t seed = 0) {
  std::vector<KnotRecord> records;
  try {
    if (j.at("version").get<int>() != Catalog::kVersion) throw CatalogError("unsupported catalog version");
    for (const auto& o : j.at("records")) {
      KnotRecord r;
      r.name = o.at("name").get<std::string>();
      r.crossing_number = o.at("crossing_number").get<int>();
      if (!o.at("bridge_number").is_null()) r.bridge_number = o.at("bridge_number").get<int>();
      if (!o.at("stick_number_3d").is_null()) r.stick_number_3d = o.at("stick_number_3d").get<int>();
      r.reference_pd = parse_pd(o.at("reference_pd").get<std::string>());
      const auto& f = o.at("fingerprint");
      r.fingerprint.jones = LaurentPoly::deserialize(f.at("jones").get<std::string>());
      r.fingerprint.alexander = LaurentPoly::deserialize(f.at("alexander").get<std::string>());
      r.fingerprint.determinant = f.at("determinant").get<std::int64_t>();
      records.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("malformed catalog JSON: ") + e.what());
  } catch (const MalformedPD& e) {
    throw CatalogError(std::string("malformed PD in catalog: ") + e.what());
  }
  if (!records.empty() && recheck > 0) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < recheck; ++k) {
      const auto& r = records[rng() % records.size()];
      if (!(fingerprint(r.reference_pd) == r.fingerprint)) throw CatalogError("stored fingerprint of " + r.name + " does not match its PD");
    }
  }
  Catalog c(std::move(records));
  if (j.contains("ambiguity_sets") && j["ambiguity_sets"].get<std::vector<std::vector<std::string>>>() != c.ambiguity_sets())
    throw CatalogError("stored ambiguity sets do not match the fingerprints");
  return c;
}

inline void save_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CatalogError("cannot write " + path);
  out << to_json(c).dump(1) << "\n";
}

inline Catalog load_catalog(const std::string& path, std::uint64_t seed = std::random_device{}()) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("malformed catalog JSON: ") + e.what());
  }
  return catalog_from_json(j, 3, seed);
}

struct Identification {
  enum class Kind { Named, Ambiguous, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<std::string> names;  // one for Named, several for Ambiguous

  /// "8_19", "5_1|10_132" or "unknown".
  std::string label() const {
    if (kind == Kind::Unknown) return "unknown";
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "|" : "") + names[i];
    return s;
  }

  bool contains(const std::string& name) const { return std::find(names.begin(), names.end(), name) != names.end(); }
  friend bool operator==(const Identification&, const Identification&) = default;
};

/// Reduces the diagram, then looks its fingerprint up. Knots whose crossing
/// number exceeds the reduced diagram's crossing count are dropped from the
/// match, since they cannot have such a diagram.
inline Identification identify(const PDCode& p, const Catalog& c) {
  if (!p.is_knot()) throw std::invalid_argument("identify needs a knot PD");
  const PDCode r = reduce_knot(p);
  Identification id;
  for (const auto* rec : c.lookup(fingerprint(r)))
    if (rec->crossing_number <= r.crossing_count()) id.names.push_back(rec->name);
  if (id.names.size() == 1) id.kind = Identification::Kind::Named;
  else if (id.names.size() > 1) id.kind = Identification::Kind::Ambiguous;
  return id;
}

struct SweepOptions {
  int ceiling = 16;
  int jobs = 1;
};

struct SweepResult {
  std::map<std::string, std::uint64_t> counts;  // by Identification::label()
  std::uint64_t total = 0;

  std::uint64_t unknown() const {
    auto it = counts.find("unknown");
    return it == counts.end() ? 0 : it->second;
  }

  /// Every catalog name that appears, alone or inside an ambiguity.
  std::set<std::string> names() const {
    std::set<std::string> out;
    for (const auto& [label, n] : counts) {
      if (label == "unknown") continue;
      std::stringstream ss(label);
      std::string part;
      while (std::getline(ss, part, '|')) out.insert(part);
    }
    return out;
  }

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

namespace catalog_detail {

inline SweepResult sweep(int n, const std::function<PDCode(std::uint64_t)>& make, const Catalog& c, const SweepOptions& opt) {
  if (n > opt.ceiling)
    throw CeilingExceeded(std::to_string(n) + " crossings exceeds the sweep ceiling of " + std::to_string(opt.ceiling));
  const std::uint64_t total = std::uint64_t{1} << n;
  const int jobs = static_cast<int>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::max(opt.jobs, 1), total)));
  std::vector<SweepResult> parts(jobs);
  auto work = [&](int j) {
    for (std::uint64_t mask = j; mask < total; mask += jobs) {
      ++parts[j].counts[identify(make(mask), c).label()];
      ++parts[j].total;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  SweepResult out;
  for (const auto& p : parts) {
    out.total += p.total;
    for (const auto& [k, v] : p.counts) out.counts[k] += v;
  }
  return out;
}

}  // namespace catalog_detail

/// Identifies all 2^n over/under assignments of a knot shadow.
inline SweepResult sweep_assignments(const Shadow& s, const Catalog& c, const SweepOptions& opt = {}) {
  if (s.code.kind != GraphType::Kind::Cycle) throw std::invalid_argument("sweep_assignments needs a knot shadow");
  const int n = s.crossing_count();
  return catalog_detail::sweep(n, [&](std::uint64_t mask) { return assign_crossings(s, bits_of(mask, n)); }, c, opt);
}

/// Same, using the crossings of a knot PD as the shadow.
inline SweepResult sweep_assignments(const PDCode& p, const Catalog& c, const SweepOptions& opt = {}) {
  if (!p.is_knot()) throw std::invalid_argument("sweep_assignments needs a knot PD");
  const int n = p.crossing_count();
  const auto signs = crossing_signs(p);
  return catalog_detail::sweep(n,
                               [&](std::uint64_t mask) {
                                 PDCode q = p;
                                 for (int k = 0; k < n; ++k)
                                   if (mask >> k & 1) switch_crossing(q, k, signs[k]);
                                 return q;
                               },
                               c, opt);
}

}  // namespace stickforge

#endif  // STICKFORGE_CATALOG_HPP
