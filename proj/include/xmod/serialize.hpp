#pragma once

// Versioned plain-text record for a crossed module. Groups are written by
// catalog id when their table is exactly the catalog's, otherwise as a raw
// multiplication table.
//
//   xmod-record 1
//   source catalog 8:3            or   source table 4 0 1 2 3 1 0 3 2 ...
//   range catalog 8:1
//   boundary <|G1| entries>
//   action <|G0|*|G1| entries, row g0>
//   end

#include <fstream>
#include <sstream>

#include "xmod/catalog.hpp"
#include "xmod/xmod.hpp"

namespace xmod {

inline constexpr int kRecordFormatVersion = 1;

namespace detail {

inline void write_group(std::ostream& out, const char* tag, const FiniteGroup& g, const GroupCatalog& cat) {
  if (const auto& id = g.catalog_id(); id && cat.contains(*id) && *cat.group(*id) == g) {
    out << tag << " catalog " << id->str() << "\n";
    return;
  }
  out << tag << " table " << g.order();
  for (Elem v : g.table()) out << ' ' << v;
  out << "\n";
}

inline std::vector<Elem> read_elems(std::istream& in, std::size_t count, const std::string& what) {
  std::vector<Elem> v(count);
  for (auto& e : v) {
    long long x;
    if (!(in >> x) || x < 0 || x > 0xFFFF) throw Error("xmod record: malformed " + what);
    e = static_cast<Elem>(x);
  }
  std::string extra;
  if (in >> extra) throw Error("xmod record: trailing data in " + what);
  return v;
}

inline GroupPtr read_group(const std::string& line, const char* tag, const GroupCatalog& cat) {
  std::istringstream in(line);
  std::string t, kind;
  in >> t >> kind;
  if (t != tag) throw Error(std::string("xmod record: expected '") + tag + "' line");
  if (kind == "catalog") {
    std::string id;
    in >> id;
    return cat.group(parse_catalog_id(id));
  }
  if (kind == "table") {
    std::size_t n = 0;
    if (!(in >> n) || n == 0 || n > 0xFFFF) throw Error("xmod record: malformed group order");
    auto table = read_elems(in, n * n, "group table");
    FiniteGroup g(n, std::move(table));
    if (!g.is_associative()) throw Error("xmod record: group table is not associative");
    return make_group(std::move(g));
  }
  throw Error("xmod record: unknown group kind '" + kind + "'");
}

inline std::string next_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    return line;
  }
  throw Error("xmod record: unexpected end of input");
}

}  // namespace detail

inline std::string serialize_xmod(const CrossedModule& x, const GroupCatalog& cat = bundled_catalog()) {
  std::ostringstream out;
  out << "xmod-record " << kRecordFormatVersion << "\n";
  detail::write_group(out, "source", *x.source(), cat);
  detail::write_group(out, "range", *x.range(), cat);
  out << "boundary";
  for (Elem v : x.boundary_table()) out << ' ' << v;
  out << "\naction";
  for (Elem v : x.action_table()) out << ' ' << v;
  out << "\nend\n";
  return out.str();
}

/// Parses one record and validates every crossed-module axiom.
inline XModPtr parse_xmod(std::istream& in, const GroupCatalog& cat = bundled_catalog()) {
  {
    std::istringstream h(detail::next_line(in));
    std::string magic;
    int version = 0;
    if (!(h >> magic >> version) || magic != "xmod-record")
      throw Error("xmod record: missing 'xmod-record <version>' header");
    if (version != kRecordFormatVersion) throw Error("xmod record: unsupported version " + std::to_string(version));
  }
  GroupPtr g1 = detail::read_group(detail::next_line(in), "source", cat);
  GroupPtr g0 = detail::read_group(detail::next_line(in), "range", cat);
  std::vector<Elem> d, act;
  {
    std::istringstream l(detail::next_line(in));
    std::string tag;
    if (!(l >> tag) || tag != "boundary") throw Error("xmod record: expected 'boundary' line");
    d = detail::read_elems(l, g1->order(), "boundary");
  }
  {
    std::istringstream l(detail::next_line(in));
    std::string tag;
    if (!(l >> tag) || tag != "action") throw Error("xmod record: expected 'action' line");
    act = detail::read_elems(l, g1->order() * g0->order(), "action");
  }
  if (detail::trim(detail::next_line(in)) != "end") throw Error("xmod record: expected 'end'");
  return make_xmod(std::move(g1), std::move(g0), std::move(d), std::move(act));
}

inline XModPtr parse_xmod(const std::string& text, const GroupCatalog& cat = bundled_catalog()) {
  std::istringstream in(text);
  return parse_xmod(in, cat);
}

inline XModPtr read_xmod_file(const std::string& path, const GroupCatalog& cat = bundled_catalog()) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_xmod(in, cat);
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace xmod
