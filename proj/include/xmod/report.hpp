#pragma once

// Census tables: groups of orders 8 and 18, crossed modules of orders
// [8,8] and [18,18].

#include "xmod/enumeration.hpp"

namespace xmod {

inline std::string render_catalog_id(const std::optional<CatalogId>& id, std::size_t order) {
  return id ? id->bracket() : "[" + std::to_string(order) + ",?]";
}

inline ReportTable group_family_table(unsigned order, const std::vector<GroupFamilyRow>& rows) {
  ReportTable t;
  std::size_t total = 0, gammas = 0;
  bool integer = true;
  for (const auto& r : rows) {
    total += r.member_count;
    gammas = std::max(gammas, r.gamma.size());
    integer = integer && is_power_of_two(r.rank_order) && is_power_of_two(r.middle_length_order);
  }
  t.title.push_back("Groups of order " + std::to_string(order) + ": " + std::to_string(total) + " groups, " +
                    std::to_string(rows.size()) + " isoclinism families");
  t.headers = {"Num.", "Group", "Rank", "Middle Length", "Class", "G/Z(G)"};
  for (std::size_t i = 0; i < gammas; ++i) t.headers.push_back("γ" + std::to_string(i + 2) + "(G)");
  for (const auto& r : rows) {
    std::vector<std::string> row{std::to_string(r.member_count),
                                 r.representative.bracket(),
                                 render_log2(r.rank_order, integer),
                                 render_log2(r.middle_length_order, integer),
                                 render_class(r.nilpotency),
                                 render_catalog_id(r.central_quotient, r.central_quotient_order)};
    for (std::size_t i = 0; i < r.gamma.size(); ++i) row.push_back(render_catalog_id(r.gamma[i], r.gamma_orders[i]));
    t.add_row(std::move(row));
  }
  std::string members;
  for (const auto& r : rows) {
    if (!members.empty()) members += "; ";
    for (std::size_t i = 0; i < r.members.size(); ++i) members += (i ? " " : "") + r.members[i].str();
  }
  t.meta = {{"order", std::to_string(order)}, {"families", std::to_string(rows.size())}, {"members", members}};
  return t;
}

struct ReportOptions {
  CensusOptions census;
  bool slow = false;  // group isoclinism by brute force
};

/// table1: groups of order 8; table2: crossed modules [8,8];
/// table3: groups of order 18; table4: crossed modules [18,18].
inline ReportTable named_table(const std::string& name, const ReportOptions& opts = {},
                               const GroupCatalog& cat = bundled_catalog()) {
  if (name == "table1" || name == "table3") {
    unsigned order = name == "table1" ? 8 : 18;
    return group_family_table(order, group_census(order, cat, opts.slow));
  }
  if (name == "table2" || name == "table4") {
    std::size_t n = name == "table2" ? 8 : 18;
    return family_table(census(n, n, opts.census, cat));
  }
  throw Error("unknown report '" + name + "' (table1, table2, table3, table4)");
}

}  // namespace xmod
