#pragma once

// Census of crossed modules of a given order: raw enumeration, reduction to
// isomorphism classes, isoclinism families and per-family invariants.

#include <filesystem>

#include "xmod/isoclinism.hpp"
#include "xmod/parallel.hpp"
#include "xmod/report_table.hpp"
#include "xmod/serialize.hpp"

namespace xmod {

inline constexpr const char* kEngineVersion = "xmod-engine 1";

// ---------------------------------------------------------------------------
// Raw enumeration

struct RawCensus {
  std::size_t n = 0, m = 0;
  std::vector<XModPtr> xmods;
};

namespace detail {

/// Every crossed module on the fixed pair (g1, g0) with the given action.
inline std::vector<XModPtr> xmods_with_action(const GroupPtr& g1, const GroupPtr& g0, const AutomorphismGroup& aut,
                                              const std::vector<Elem>& phi) {
  const std::size_t n1 = g1->order(), n0 = g0->order();
  std::vector<Elem> act(n0 * n1);
  for (std::size_t b = 0; b < n0; ++b)
    for (std::size_t a = 0; a < n1; ++a) act[b * n1 + a] = aut.maps[phi[b]](Elem(a));
  // CM2 on a generator g: the image d(g) must act as conjugation by g.
  const auto gens1 = generating_set(g1);
  const auto gens0 = generating_set(g0);
  std::vector<std::vector<Elem>> cand(gens1.size());
  for (std::size_t i = 0; i < gens1.size(); ++i) {
    const Elem inner = aut.inner(gens1[i]);
    for (std::size_t y = 0; y < n0; ++y)
      if (phi[y] == inner) cand[i].push_back(Elem(y));
    if (cand[i].empty()) return {};
  }
  std::vector<XModPtr> out;
  auto emit = [&](const std::vector<Elem>& d) {
    // CM1 on generators of both groups.
    for (Elem b : gens0)
      for (Elem a : gens1)
        if (d[act[b * n1 + a]] != g0->conj(b, d[a])) return true;
    out.push_back(make_xmod_unchecked(g1, g0, d, act));
    return true;
  };
  if (gens1.empty()) {
    emit(std::vector<Elem>{0});
  } else {
    for_each_hom(g1, g0, emit, HomSearch{}, cand);
  }
  return out;
}

}  // namespace detail

/// All crossed modules G1 -> G0 with |G1| = n, |G0| = m, over one catalog
/// representative per group isomorphism class. Order: source index, range
/// index, action homomorphism, boundary homomorphism.
inline RawCensus all_xmods(std::size_t n, std::size_t m, unsigned workers = 1,
                           const GroupCatalog& cat = bundled_catalog()) {
  if (!cat.covers_order(unsigned(n)) || !cat.covers_order(unsigned(m)))
    throw Error("catalog does not cover order [" + std::to_string(n) + "," + std::to_string(m) + "]");
  struct Task {
    GroupPtr g1, g0;
    std::shared_ptr<const AutomorphismGroup> aut;
    std::vector<Elem> phi;
  };
  std::vector<Task> tasks;
  for (const auto& g1 : cat.groups_of_order(unsigned(n))) {
    auto aut = std::make_shared<const AutomorphismGroup>(automorphisms_for_search(g1));
    for (const auto& g0 : cat.groups_of_order(unsigned(m)))
      for_each_action_hom(g0, *aut, [&](const std::vector<Elem>& phi) {
        tasks.push_back(Task{g1, g0, aut, phi});
        return true;
      });
  }
  auto parts = parallel_map(tasks.size(), workers, [&](std::size_t i) {
    return detail::xmods_with_action(tasks[i].g1, tasks[i].g0, *tasks[i].aut, tasks[i].phi);
  });
  RawCensus r{n, m, {}};
  for (auto& p : parts)
    for (auto& x : p) r.xmods.push_back(std::move(x));
  return r;
}

// ---------------------------------------------------------------------------
// Isomorphism reduction

enum class ReductionMode {
  orbit,     // orbits of Aut(G1) x Aut(G0) on structures over one group pair
  bucketed,  // pairwise isomorphism tests inside invariant buckets
  brute,     // pairwise unfiltered tests against every representative
};

inline const char* to_string(ReductionMode m) {
  switch (m) {
    case ReductionMode::orbit: return "orbit";
    case ReductionMode::bucketed: return "bucketed";
    case ReductionMode::brute: return "brute";
  }
  return "?";
}

inline ReductionMode parse_reduction_mode(const std::string& s) {
  if (s == "orbit") return ReductionMode::orbit;
  if (s == "bucketed") return ReductionMode::bucketed;
  if (s == "brute") return ReductionMode::brute;
  throw Error("unknown reduction mode '" + s + "'");
}

struct Reduction {
  std::vector<std::size_t> reps;       // raw indices, increasing
  std::vector<std::size_t> class_map;  // raw index -> position in reps
};

namespace detail {

inline std::vector<Elem> structure_key(const CrossedModule& x) {
  std::vector<Elem> k = x.boundary_table();
  k.insert(k.end(), x.action_table().begin(), x.action_table().end());
  return k;
}

/// Image of X under (alpha, beta): d' = beta d alpha^-1,
/// act'(h0, h1) = alpha(act(beta^-1 h0, alpha^-1 h1)).
inline std::vector<Elem> transformed_key(const CrossedModule& x, const GroupHom& alpha, const GroupHom& alpha_inv,
                                         const GroupHom& beta, const GroupHom& beta_inv) {
  const std::size_t n1 = x.source()->order(), n0 = x.range()->order();
  std::vector<Elem> k(n1 + n0 * n1);
  for (std::size_t h = 0; h < n1; ++h) k[h] = beta(x.boundary(alpha_inv(Elem(h))));
  for (std::size_t b = 0; b < n0; ++b)
    for (std::size_t h = 0; h < n1; ++h) k[n1 + b * n1 + h] = alpha(x.act(beta_inv(Elem(b)), alpha_inv(Elem(h))));
  return k;
}

inline Reduction reduce_orbit(const std::vector<XModPtr>& raw) {
  Reduction r;
  r.class_map.assign(raw.size(), SIZE_MAX);
  // Raw structures grouped by their (source, range) group objects.
  std::map<std::pair<const FiniteGroup*, const FiniteGroup*>, std::vector<std::size_t>> by_pair;
  for (std::size_t i = 0; i < raw.size(); ++i) by_pair[{raw[i]->source().get(), raw[i]->range().get()}].push_back(i);
  struct Gen {
    GroupHom alpha, alpha_inv, beta, beta_inv;
  };
  std::vector<std::size_t> class_leader(raw.size(), SIZE_MAX);
  for (auto& [key, members] : by_pair) {
    const GroupPtr g1 = raw[members.front()]->source();
    const GroupPtr g0 = raw[members.front()]->range();
    AutomorphismGroup a1 = automorphisms_for_search(g1);
    AutomorphismGroup a0 = automorphisms_for_search(g0);
    std::vector<Gen> gens;
    for (Elem e : automorphism_generators(a1)) {
      const GroupHom& f = a1.maps[e];
      gens.push_back(Gen{f, f.inverse(), GroupHom::identity(g0), GroupHom::identity(g0)});
    }
    for (Elem e : automorphism_generators(a0)) {
      const GroupHom& f = a0.maps[e];
      gens.push_back(Gen{GroupHom::identity(g1), GroupHom::identity(g1), f, f.inverse()});
    }
    std::map<std::vector<Elem>, std::size_t> index;
    for (std::size_t i : members) index.emplace(structure_key(*raw[i]), i);
    for (std::size_t i : members) {
      if (class_leader[i] != SIZE_MAX) continue;
      class_leader[i] = i;
      std::vector<std::size_t> queue{i};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const auto& x = *raw[queue[q]];
        for (const auto& g : gens) {
          auto it = index.find(transformed_key(x, g.alpha, g.alpha_inv, g.beta, g.beta_inv));
          if (it == index.end()) throw Error("orbit reduction: transformed structure missing from the raw list");
          if (class_leader[it->second] == SIZE_MAX) {
            class_leader[it->second] = i;
            queue.push_back(it->second);
          }
        }
      }
    }
  }
  std::map<std::size_t, std::size_t> rep_pos;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (class_leader[i] == i) {
      rep_pos[i] = r.reps.size();
      r.reps.push_back(i);
    }
  for (std::size_t i = 0; i < raw.size(); ++i) r.class_map[i] = rep_pos.at(class_leader[i]);
  return r;
}

inline Reduction reduce_pairwise(const std::vector<XModPtr>& raw, bool brute_force, unsigned workers) {
  Reduction r;
  r.class_map.assign(raw.size(), SIZE_MAX);
  std::vector<XModKey> keys;
  if (!brute_force) keys = parallel_map(raw.size(), workers, [&](std::size_t i) { return xmod_key(raw[i]); });
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t p = 0; p < r.reps.size(); ++p) {
      const std::size_t j = r.reps[p];
      bool iso = brute_force ? brute::is_isomorphic_xmod(raw[j], raw[i])
                             : keys[j] == keys[i] && is_isomorphic_xmod(raw[j], raw[i]).has_value();
      if (iso) {
        r.class_map[i] = p;
        break;
      }
    }
    if (r.class_map[i] == SIZE_MAX) {
      r.class_map[i] = r.reps.size();
      r.reps.push_back(i);
    }
  }
  return r;
}

}  // namespace detail

inline Reduction reduce_by_isomorphism(const std::vector<XModPtr>& raw, ReductionMode mode = ReductionMode::orbit,
                                       unsigned workers = 1) {
  switch (mode) {
    case ReductionMode::orbit: return detail::reduce_orbit(raw);
    case ReductionMode::bucketed: return detail::reduce_pairwise(raw, false, workers);
    case ReductionMode::brute: return detail::reduce_pairwise(raw, true, workers);
  }
  throw Error("unknown reduction mode");
}

// ---------------------------------------------------------------------------
// Families

struct FamilyReport {
  std::size_t family_index = 0;  // 1-based
  std::size_t member_count = 0;
  RankValue rank;
  RankValue middle_length;
  ClassValue nilpotency;
  std::array<std::size_t, 2> central_quotient_size{1, 1};
  std::vector<std::array<std::size_t, 2>> gamma_sizes;
  /// Every member reproduced the leader's invariants.
  bool consistent = true;
};

struct MemberInvariants {
  RankValue rank;
  RankValue middle_length;
  ClassValue nilpotency;
  ClassValue derived_length;
  std::array<std::size_t, 2> central_quotient_size{};
  std::vector<std::array<std::size_t, 2>> gamma_sizes;
  friend bool operator==(const MemberInvariants&, const MemberInvariants&) = default;
};

inline MemberInvariants member_invariants(const XModPtr& x) {
  return MemberInvariants{rank_of_xmod(x),         middle_length_of_xmod(x),   nilpotency_class(x),
                          derived_length(x),       central_quotient_size(x), gamma_sizes(x)};
}

struct CensusOptions {
  unsigned workers = 1;
  ReductionMode mode = ReductionMode::orbit;
  bool slow_families = false;
  std::string cache_dir;  // empty: no persistence
};

struct CensusResult {
  std::array<std::size_t, 2> order_pair{};
  std::size_t raw_count = 0;
  std::vector<XModPtr> representatives;
  std::vector<std::size_t> rep_raw_index;
  std::vector<std::size_t> class_map;
  std::vector<std::vector<std::size_t>> families;  // indices into representatives
  std::vector<FamilyReport> reports;
  std::string catalog_version;
  std::string engine_version = kEngineVersion;
};

inline std::vector<FamilyReport> family_reports(const std::vector<XModPtr>& reps,
                                                const std::vector<std::vector<std::size_t>>& families,
                                                unsigned workers = 1) {
  auto inv = parallel_map(reps.size(), workers, [&](std::size_t i) { return member_invariants(reps[i]); });
  std::vector<FamilyReport> out;
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& lead = inv[families[f].front()];
    FamilyReport r;
    r.family_index = f + 1;
    r.member_count = families[f].size();
    r.rank = lead.rank;
    r.middle_length = lead.middle_length;
    r.nilpotency = lead.nilpotency;
    r.central_quotient_size = lead.central_quotient_size;
    r.gamma_sizes = lead.gamma_sizes;
    for (std::size_t i : families[f]) r.consistent = r.consistent && inv[i] == lead;
    out.push_back(std::move(r));
  }
  return out;
}

/// Families of the representatives, with per-family invariant rows.
inline void classify_families(CensusResult& c, const CensusOptions& opts = {}) {
  auto pairings = parallel_map(c.representatives.size(), opts.workers,
                               [&](std::size_t i) { return commutator_pairing(c.representatives[i]); });
  c.families = xmod_family_partition(pairings, FamilyOptions{.slow = opts.slow_families});
  c.reports = family_reports(c.representatives, c.families, opts.workers);
}

// ---------------------------------------------------------------------------
// Family tables

inline std::string size_pair(const std::array<std::size_t, 2>& s) {
  return "[" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "]";
}

/// One row per family: Num., rank, middle length, class, |XM/Z|, γ2.. .
/// Log2 columns print as integers when every order in the table is a power
/// of two.
inline ReportTable family_table(const CensusResult& c) {
  ReportTable t;
  t.title.push_back("Crossed modules of order " + size_pair(c.order_pair) + ": " + std::to_string(c.raw_count) +
                    " structures, " + std::to_string(c.representatives.size()) + " isomorphism classes, " +
                    std::to_string(c.families.size()) + " isoclinism families");
  bool integer = true;
  std::size_t gammas = 0;
  for (const auto& r : c.reports) {
    integer = integer && r.rank.integral() && r.middle_length.integral();
    gammas = std::max(gammas, r.gamma_sizes.size());
  }
  t.headers = {"Num.", "Rank", "Middle Length", "Class", "|XM/Z(XM)|"};
  for (std::size_t i = 0; i < gammas; ++i) t.headers.push_back("γ" + std::to_string(i + 2) + "(XM)");
  for (const auto& r : c.reports) {
    std::vector<std::string> row{std::to_string(r.member_count), r.rank.render(integer),
                                 r.middle_length.render(integer), render_class(r.nilpotency),
                                 size_pair(r.central_quotient_size)};
    for (const auto& g : r.gamma_sizes) row.push_back(size_pair(g));
    t.add_row(std::move(row));
  }
  t.meta = {{"order", size_pair(c.order_pair)},
            {"raw", std::to_string(c.raw_count)},
            {"classes", std::to_string(c.representatives.size())},
            {"families", std::to_string(c.families.size())},
            {"catalog", c.catalog_version},
            {"engine", c.engine_version}};
  return t;
}

// ---------------------------------------------------------------------------
// Persistence

namespace detail {

inline std::string census_meta(const CensusResult& c, ReductionMode mode) {
  std::ostringstream s;
  s << "xmod-census 1\n"
    << "engine " << c.engine_version << "\n"
    << "catalog " << c.catalog_version << "\n"
    << "mode " << to_string(mode) << "\n"
    << "order " << c.order_pair[0] << ' ' << c.order_pair[1] << "\n"
    << "raw " << c.raw_count << "\n"
    << "classes " << c.representatives.size() << "\n"
    << "families " << c.families.size() << "\n";
  return s.str();
}

inline std::string census_indices(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

inline std::vector<std::size_t> parse_indices(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::size_t> v;
  std::size_t x;
  while (in >> x) v.push_back(x);
  return v;
}

inline std::filesystem::path census_dir(const std::string& root, std::size_t n, std::size_t m, ReductionMode mode) {
  return std::filesystem::path(root) /
         ("census-" + std::to_string(n) + "-" + std::to_string(m) + "-" + to_string(mode));
}

}  // namespace detail

/// Writes meta, reps/, class_map, families and report under `dir`.
inline void save_census(const CensusResult& c, const std::filesystem::path& dir, ReductionMode mode,
                        const GroupCatalog& cat = bundled_catalog()) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "reps");
  for (std::size_t i = 0; i < c.representatives.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "%05zu.xmod", i + 1);
    write_text_file((dir / "reps" / name).string(), serialize_xmod(*c.representatives[i], cat));
  }
  write_text_file((dir / "rep_raw_index").string(), detail::census_indices(c.rep_raw_index) + "\n");
  write_text_file((dir / "class_map").string(), detail::census_indices(c.class_map) + "\n");
  std::string fams;
  for (const auto& f : c.families) fams += detail::census_indices(f) + "\n";
  write_text_file((dir / "families").string(), fams);
  write_text_file((dir / "report").string(), render_text(family_table(c)));
  // meta last: its presence marks a complete cache entry
  write_text_file((dir / "meta").string(), detail::census_meta(c, mode));
}

/// Loads a cached census when its version stamps match; otherwise nothing.
inline std::optional<CensusResult> load_census(const std::filesystem::path& dir, std::size_t n, std::size_t m,
                                               ReductionMode mode, const GroupCatalog& cat = bundled_catalog()) {
  namespace fs = std::filesystem;
  if (!fs::exists(dir / "meta")) return std::nullopt;
  try {
    std::istringstream meta(read_text_file((dir / "meta").string()));
    std::map<std::string, std::string> kv;
    std::string line;
    std::getline(meta, line);
    if (line != "xmod-census 1") return std::nullopt;
    while (std::getline(meta, line)) {
      auto sp = line.find(' ');
      if (sp != std::string::npos) kv[line.substr(0, sp)] = line.substr(sp + 1);
    }
    if (kv["engine"] != kEngineVersion || kv["catalog"] != cat.version_stamp() || kv["mode"] != to_string(mode) ||
        kv["order"] != std::to_string(n) + " " + std::to_string(m))
      return std::nullopt;
    CensusResult c;
    c.order_pair = {n, m};
    c.raw_count = std::stoull(kv.at("raw"));
    c.catalog_version = kv["catalog"];
    const std::size_t classes = std::stoull(kv.at("classes"));
    for (std::size_t i = 0; i < classes; ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "%05zu.xmod", i + 1);
      c.representatives.push_back(read_xmod_file((dir / "reps" / name).string(), cat));
    }
    c.rep_raw_index = detail::parse_indices(read_text_file((dir / "rep_raw_index").string()));
    c.class_map = detail::parse_indices(read_text_file((dir / "class_map").string()));
    std::istringstream fams(read_text_file((dir / "families").string()));
    while (std::getline(fams, line))
      if (!line.empty()) c.families.push_back(detail::parse_indices(line));
    if (c.families.size() != std::stoull(kv.at("families")) || c.rep_raw_index.size() != classes ||
        c.class_map.size() != c.raw_count)
      return std::nullopt;
    c.reports = family_reports(c.representatives, c.families);
    return c;
  } catch (const std::exception&) {
    return std::nullopt;  // damaged cache entries are rebuilt
  }
}

/// The full pipeline: raw enumeration, reduction, families. Uses and
/// refreshes the cache when `opts.cache_dir` is set.
inline CensusResult census(std::size_t n, std::size_t m, const CensusOptions& opts = {},
                           const GroupCatalog& cat = bundled_catalog()) {
  std::filesystem::path dir;
  if (!opts.cache_dir.empty()) {
    dir = detail::census_dir(opts.cache_dir, n, m, opts.mode);
    if (auto cached = load_census(dir, n, m, opts.mode, cat)) return *cached;
  }
  RawCensus raw = all_xmods(n, m, opts.workers, cat);
  Reduction red = reduce_by_isomorphism(raw.xmods, opts.mode, opts.workers);
  CensusResult c;
  c.order_pair = {n, m};
  c.raw_count = raw.xmods.size();
  c.rep_raw_index = red.reps;
  c.class_map = red.class_map;
  for (std::size_t i : red.reps) c.representatives.push_back(raw.xmods[i]);
  c.catalog_version = cat.version_stamp();
  classify_families(c, opts);
  if (!dir.empty()) save_census(c, dir, opts.mode, cat);
  return c;
}

// ---------------------------------------------------------------------------
// Stem members

struct StemSearch {
  bool found = false;
  bool within_family = false;  // a listed member is already stem
  std::array<std::size_t, 2> searched_order{};
  XModPtr member;
};

/// A stem crossed module isoclinic to `x`. A stem member Y has Z(Y) inside
/// [Y,Y], so its order equals its rank orders; rank is shared across the
/// family, so the search runs over the crossed modules of that one order.
inline StemSearch find_stem_member(const XModPtr& x, const std::vector<XModPtr>& family_members,
                                   unsigned workers = 1, const GroupCatalog& cat = bundled_catalog()) {
  StemSearch s;
  for (const auto& y : family_members)
    if (is_stem_xmod(y)) {
      s.found = s.within_family = true;
      s.member = y;
      s.searched_order = y->order();
      return s;
    }
  RankValue r = rank_of_xmod(x);
  s.searched_order = {r.level1_order, r.level0_order};
  if (!cat.covers_order(unsigned(r.level1_order)) || !cat.covers_order(unsigned(r.level0_order))) return s;
  CommutatorPairing px = commutator_pairing(x);
  IsoclinismKey kx = isoclinism_key(px);
  RawCensus raw = all_xmods(r.level1_order, r.level0_order, workers, cat);
  Reduction red = reduce_by_isomorphism(raw.xmods, ReductionMode::orbit);
  for (std::size_t i : red.reps) {
    const XModPtr& y = raw.xmods[i];
    if (!is_stem_xmod(y)) continue;
    CommutatorPairing py = commutator_pairing(y);
    if (isoclinism_key(py) != kx) continue;
    if (is_isoclinic_xmod(px, py)) {
      s.found = true;
      s.member = y;
      return s;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Groups

struct GroupFamilyRow {
  std::size_t family_index = 0;
  std::size_t member_count = 0;
  std::vector<CatalogId> members;
  CatalogId representative;
  std::size_t rank_order = 1;
  std::size_t middle_length_order = 1;
  ClassValue nilpotency;
  std::optional<CatalogId> central_quotient;  // G/Z
  std::size_t central_quotient_order = 1;
  std::vector<std::optional<CatalogId>> gamma;  // γ2, γ3, ... nontrivial, no repeats
  std::vector<std::size_t> gamma_orders;
};

inline std::vector<GroupFamilyRow> group_census(unsigned order, const GroupCatalog& cat = bundled_catalog(),
                                                bool slow = false) {
  if (!cat.covers_order(order)) throw Error("catalog does not cover order " + std::to_string(order));
  auto groups = cat.groups_of_order(order);
  auto families = group_family_partition(groups, slow);
  std::vector<GroupFamilyRow> rows;
  for (std::size_t f = 0; f < families.size(); ++f) {
    GroupFamilyRow r;
    r.family_index = f + 1;
    r.member_count = families[f].size();
    for (std::size_t i : families[f]) r.members.push_back(*groups[i]->catalog_id());
    const GroupPtr& g = groups[families[f].front()];
    r.representative = *g->catalog_id();
    r.rank_order = group_rank_order(g);
    r.middle_length_order = group_middle_length_order(g);
    r.nilpotency = group_nilpotency_class(g);
    Quotient q = quotient_group(center(g));
    r.central_quotient = cat.identify(q.group);
    r.central_quotient_order = q.group->order();
    auto lcs = group_lower_central_series(g);
    for (std::size_t i = 1; i < lcs.size(); ++i) {
      if (lcs[i].is_trivial()) continue;
      r.gamma.push_back(cat.identify(subgroup_as_group(lcs[i]).group));
      r.gamma_orders.push_back(lcs[i].size());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace xmod
