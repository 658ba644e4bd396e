#pragma once

// Small-group catalog: a versioned plain-text list of permutation
// presentations. The bundled catalog covers every group of order 1..24,
// numbered as in the SmallGroups library.
//
// File format:
//   xmod-catalog 1
//   <order> <index> <name> | <cycles> | <cycles> ...
// Blank lines and lines starting with '#' are ignored.

#include <fstream>
#include <mutex>
#include <sstream>

#include "xmod/catalog_data.hpp"
#include "xmod/homs.hpp"

namespace xmod {

inline constexpr int kCatalogFormatVersion = 1;

struct CatalogEntry {
  CatalogId id;
  std::string name;
  std::vector<std::string> generators;  // cycle notation
};

namespace detail {
inline std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}
}  // namespace detail

inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<CatalogEntry> out;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      std::istringstream h(line);
      std::string magic;
      int version = 0;
      if (!(h >> magic >> version) || magic != "xmod-catalog")
        throw Error("catalog: missing 'xmod-catalog <version>' header");
      if (version != kCatalogFormatVersion)
        throw Error("catalog: unsupported format version " + std::to_string(version));
      header = true;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      auto bar = line.find('|', start);
      cells.push_back(detail::trim(line.substr(start, bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    std::istringstream head(cells[0]);
    CatalogEntry e;
    if (!(head >> e.id.order >> e.id.index) || e.id.order == 0 || e.id.index == 0)
      throw Error("catalog line " + std::to_string(lineno) + ": expected '<order> <index> <name>'");
    std::getline(head, e.name);
    e.name = detail::trim(e.name);
    for (std::size_t i = 1; i < cells.size(); ++i) e.generators.push_back(cells[i]);
    out.push_back(std::move(e));
  }
  if (!header) throw Error("catalog: empty input");
  return out;
}

inline std::string format_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out = "xmod-catalog " + std::to_string(kCatalogFormatVersion) + "\n";
  for (const auto& e : entries) {
    out += std::to_string(e.id.order) + " " + std::to_string(e.id.index) + " " + e.name;
    for (const auto& g : e.generators) out += " | " + g;
    out += "\n";
  }
  return out;
}

inline GroupPtr build_catalog_group(const CatalogEntry& e) {
  std::vector<Perm> gens;
  for (const auto& s : e.generators) gens.push_back(parse_cycles(s));
  FiniteGroup g = group_from_generators(gens, std::max<std::size_t>(e.id.order, 1));
  if (g.order() != e.id.order)
    throw Error("catalog entry " + e.id.str() + " generates a group of order " +
                std::to_string(g.order()));
  return make_group(g.with_label(e.id, e.name));
}

class GroupCatalog {
 public:
  GroupCatalog() = default;
  explicit GroupCatalog(const std::string& text) { merge(parse_catalog(text)); }

  /// Adds entries. Re-adding an existing id is allowed only with identical
  /// generators.
  void merge(const std::vector<CatalogEntry>& entries) {
    for (const auto& e : entries) {
      auto it = by_id_.find(e.id);
      if (it != by_id_.end()) {
        if (entries_[it->second].generators != e.generators)
          throw Error("catalog: conflicting entries for " + e.id.str());
        continue;
      }
      GroupPtr g = build_catalog_group(e);
      by_id_.emplace(e.id, entries_.size());
      entries_.push_back(e);
      groups_.push_back(g);
      fingerprints_.push_back(fingerprint(g));
    }
  }

  void import_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    merge(parse_catalog(ss.str()));
  }

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  bool contains(CatalogId id) const { return by_id_.contains(id); }

  GroupPtr group(CatalogId id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw Error("unknown catalog id " + id.str());
    return groups_[it->second];
  }
  GroupPtr group(unsigned order, unsigned index) const { return group(CatalogId{order, index}); }

  const CatalogEntry& entry(CatalogId id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw Error("unknown catalog id " + id.str());
    return entries_[it->second];
  }

  std::vector<GroupPtr> groups_of_order(unsigned order) const {
    std::vector<GroupPtr> out;
    for (const auto& [id, pos] : by_id_)
      if (id.order == order) out.push_back(groups_[pos]);
    return out;
  }

  bool covers_order(unsigned order) const { return !groups_of_order(order).empty(); }

  /// Catalog id of the group isomorphic to `g`, if present.
  std::optional<CatalogId> identify(const GroupPtr& g) const {
    GroupFingerprint f = fingerprint(g);
    for (const auto& [id, pos] : by_id_) {
      if (id.order != g->order() || fingerprints_[pos] != f) continue;
      if (are_isomorphic(g, groups_[pos])) return id;
    }
    return std::nullopt;
  }

  /// Checks that no two entries of one order are isomorphic. Returns the
  /// first offending pair.
  std::optional<std::pair<CatalogId, CatalogId>> find_duplicate_isomorphism_type() const {
    for (std::size_t a = 0; a < entries_.size(); ++a)
      for (std::size_t b = a + 1; b < entries_.size(); ++b) {
        if (entries_[a].id.order != entries_[b].id.order) continue;
        if (fingerprints_[a] != fingerprints_[b]) continue;
        if (are_isomorphic(groups_[a], groups_[b])) return std::pair{entries_[a].id, entries_[b].id};
      }
    return std::nullopt;
  }

  std::string version_stamp() const {
    std::size_t h = 1469598103934665603ULL;
    for (char c : format_catalog(entries_)) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    std::ostringstream s;
    s << std::hex << h;
    return s.str();
  }

 private:
  std::vector<CatalogEntry> entries_;
  std::vector<GroupPtr> groups_;
  std::vector<GroupFingerprint> fingerprints_;
  std::map<CatalogId, std::size_t> by_id_;
};

/// The bundled catalog, built once on first use.
inline const GroupCatalog& bundled_catalog() {
  static const GroupCatalog catalog(detail::kBundledCatalog);
  return catalog;
}

inline GroupPtr catalog_group(unsigned order, unsigned index) {
  return bundled_catalog().group(order, index);
}

inline CatalogId parse_catalog_id(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw Error("");
    std::size_t p1 = 0, p2 = 0;
    unsigned long o = std::stoul(text.substr(0, colon), &p1);
    unsigned long i = std::stoul(text.substr(colon + 1), &p2);
    if (p1 != colon || p2 != text.size() - colon - 1 || o == 0 || i == 0) throw Error("");
    return CatalogId{static_cast<unsigned>(o), static_cast<unsigned>(i)};
  } catch (const std::exception&) {
    throw Error("malformed catalog id '" + text + "', expected order:index");
  }
}

}  // namespace xmod
