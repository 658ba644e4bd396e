// xmod: command-line front end.
//
// Exit codes: 0 success, 1 a predicate answered false, 2 usage or data error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "xmod/report.hpp"

namespace {

using namespace xmod;

constexpr int kOk = 0, kFalse = 1, kError = 2;

struct Globals {
  std::string format = "text";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string cache_dir;
  std::vector<std::string> catalogs;
  bool slow = false;
  std::string mode = "orbit";
};

GroupCatalog load_catalog(const Globals& g) {
  GroupCatalog cat = bundled_catalog();
  for (const auto& f : g.catalogs) cat.import_file(f);
  return cat;
}

CensusOptions census_options(const Globals& g) {
  CensusOptions o;
  o.workers = g.workers;
  o.mode = parse_reduction_mode(g.mode);
  o.slow_families = g.slow;
  o.cache_dir = g.cache_dir;
  return o;
}

void emit(const ReportTable& t, const Globals& g) { std::cout << render(t, parse_report_format(g.format)); }

int emit_bool(bool v) {
  std::cout << (v ? "true" : "false") << "\n";
  return v ? kOk : kFalse;
}

std::size_t parse_order(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || v == 0) throw Error("malformed order '" + s + "'");
  return v;
}

ReportTable invariants_table(const XModPtr& x, const GroupCatalog& cat) {
  ReportTable t;
  t.title.push_back("Invariants");
  t.headers = {"Invariant", "Value"};
  auto id = [&](const GroupPtr& g) { return render_catalog_id(cat.identify(g), g->order()); };
  SubXMod z = center_xmod(x), c = derived_subxmod(x);
  GroupHom d = x->boundary_hom();
  RankValue r = rank_of_xmod(x), ml = middle_length_of_xmod(x);
  const bool integer = r.integral() && ml.integral();
  std::string gam;
  for (const auto& s : gamma_sizes(x)) gam += (gam.empty() ? "" : " ") + size_pair(s);
  t.add_row({"order", size_pair(x->order())});
  t.add_row({"source", id(x->source())});
  t.add_row({"range", id(x->range())});
  t.add_row({"|ker d|", std::to_string(d.kernel().size())});
  t.add_row({"|im d|", std::to_string(d.image().size())});
  t.add_row({"|Z(XM)|", size_pair(z.order())});
  t.add_row({"|[XM,XM]|", size_pair(c.order())});
  t.add_row({"|XM/Z(XM)|", size_pair(central_quotient_size(x))});
  t.add_row({"rank", r.render(integer)});
  t.add_row({"middle length", ml.render(integer)});
  t.add_row({"class", render_class(nilpotency_class(x))});
  t.add_row({"derived length", render_class(derived_length(x))});
  t.add_row({"gamma sizes", gam});
  t.add_row({"abelian", is_abelian_xmod(x) ? "true" : "false"});
  t.add_row({"stem", is_stem_xmod(x) ? "true" : "false"});
  t.add_row({"aspherical", is_aspherical(x) ? "true" : "false"});
  t.add_row({"simply connected", is_simply_connected(x) ? "true" : "false"});
  return t;
}

ReportTable census_summary(const CensusResult& c) {
  ReportTable t;
  t.title.push_back("Census " + size_pair(c.order_pair));
  t.headers = {"Order", "Raw", "Classes", "Families", "Family sizes"};
  std::string sizes;
  for (const auto& f : c.families) sizes += (sizes.empty() ? "" : " ") + std::to_string(f.size());
  t.add_row({size_pair(c.order_pair), std::to_string(c.raw_count), std::to_string(c.representatives.size()),
             std::to_string(c.families.size()), sizes});
  t.meta = {{"catalog", c.catalog_version}, {"engine", c.engine_version}};
  return t;
}

ReportTable catalog_table(const GroupCatalog& cat, unsigned order) {
  ReportTable t;
  t.title.push_back("Catalog " + cat.version_stamp());
  t.headers = {"Id", "Order", "Index", "Name", "Generators"};
  for (const auto& e : cat.entries()) {
    if (order && e.id.order != order) continue;
    t.add_row({e.id.str(), std::to_string(e.id.order), std::to_string(e.id.index), e.name,
               std::to_string(e.generators.size())});
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"Finite crossed modules: enumeration, isoclinism and census tables"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--workers", g.workers, "Worker threads")->envname("XMOD_WORKERS")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "Census cache directory")->envname("XMOD_CACHE_DIR");
  app.add_option("--catalog", g.catalogs, "Extra catalog file merged into the bundled one");
  app.add_flag("--slow", g.slow, "Use the unfiltered brute-force isoclinism search");
  app.add_option("--mode", g.mode, "Isomorphism reduction: orbit, bucketed, brute")
      ->check(CLI::IsMember({"orbit", "bucketed", "brute"}));

  int code = kOk;
  std::function<int()> action;

  auto* groups = app.add_subcommand("groups", "Group isoclinism");
  groups->require_subcommand(1);
  std::string id1, id2, order_s;
  auto* gi = groups->add_subcommand("isoclinic", "Are two catalog groups isoclinic?");
  gi->add_option("id1", id1, "Catalog id order:index")->required();
  gi->add_option("id2", id2, "Catalog id order:index")->required();
  gi->callback([&] {
    action = [&] {
      auto cat = load_catalog(g);
      return emit_bool(is_isoclinic_group(cat.group(parse_catalog_id(id1)), cat.group(parse_catalog_id(id2)),
                                          g.slow)
                           .has_value());
    };
  });
  auto* gf = groups->add_subcommand("families", "Isoclinism families of one order");
  gf->add_option("order", order_s)->required();
  gf->callback([&] {
    action = [&] {
      auto cat = load_catalog(g);
      unsigned n = unsigned(parse_order(order_s));
      emit(group_family_table(n, group_census(n, cat, g.slow)), g);
      return kOk;
    };
  });

  auto* xmods = app.add_subcommand("xmods", "Crossed modules");
  xmods->require_subcommand(1);
  std::string n_s, m_s, file_a, file_b;
  auto* xc = xmods->add_subcommand("census", "Count crossed modules, classes and families");
  xc->add_option("n", n_s)->required();
  xc->add_option("m", m_s)->required();
  xc->callback([&] {
    action = [&] {
      auto cat = load_catalog(g);
      emit(census_summary(census(parse_order(n_s), parse_order(m_s), census_options(g), cat)), g);
      return kOk;
    };
  });
  auto* xf = xmods->add_subcommand("families", "Family table of a census");
  xf->add_option("n", n_s)->required();
  xf->add_option("m", m_s)->required();
  xf->callback([&] {
    action = [&] {
      auto cat = load_catalog(g);
      emit(family_table(census(parse_order(n_s), parse_order(m_s), census_options(g), cat)), g);
      return kOk;
    };
  });
  auto* xi = xmods->add_subcommand("invariants", "Invariants of a serialized crossed module");
  xi->add_option("file", file_a)->required();
  xi->callback([&] {
    action = [&] {
      auto cat = load_catalog(g);
      emit(invariants_table(read_xmod_file(file_a, cat), cat), g);
      return kOk;
    };
  });
  auto* xs = xmods->add_subcommand("isoclinic", "Are two serialized crossed modules isoclinic?");
  xs->add_option("fileA", file_a)->required();
  xs->add_option("fileB", file_b)->required();
  xs->callback([&] {
    action = [&] {
      auto cat = load_catalog(g);
      auto a = read_xmod_file(file_a, cat), b = read_xmod_file(file_b, cat);
      return emit_bool(is_isoclinic_xmod(a, b, IsoclinismOptions{.slow = g.slow}).has_value());
    };
  });

  auto* report = app.add_subcommand("report", "Census tables");
  std::string table;
  report->add_option("table", table, "table1, table2, table3 or table4")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3", "table4"}));
  report->callback([&] {
    action = [&] {
      auto cat = load_catalog(g);
      ReportOptions o{census_options(g), g.slow};
      emit(named_table(table, o, cat), g);
      return kOk;
    };
  });

  auto* catalog = app.add_subcommand("catalog", "Group catalog");
  catalog->require_subcommand(1);
  unsigned list_order = 0;
  auto* cl = catalog->add_subcommand("list", "List catalog entries");
  cl->add_option("--order", list_order, "Only this order");
  cl->callback([&] {
    action = [&] {
      emit(catalog_table(load_catalog(g), list_order), g);
      return kOk;
    };
  });
  std::string import_file, import_out;
  auto* ci = catalog->add_subcommand("import", "Validate a catalog file and print it normalized");
  ci->add_option("file", import_file)->required();
  ci->add_option("-o,--output", import_out, "Write the normalized catalog here");
  ci->callback([&] {
    action = [&] {
      GroupCatalog extra(read_text_file(import_file));
      if (auto dup = extra.find_duplicate_isomorphism_type())
        throw Error("catalog entries " + dup->first.str() + " and " + dup->second.str() + " are isomorphic");
      GroupCatalog merged = load_catalog(g);
      merged.merge(extra.entries());
      std::string text = format_catalog(extra.entries());
      if (import_out.empty())
        std::cout << text;
      else
        write_text_file(import_out, text);
      std::cerr << extra.entries().size() << " entries imported, catalog " << merged.version_stamp() << "\n";
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }
  try {
    if (action) code = action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return code;
}
