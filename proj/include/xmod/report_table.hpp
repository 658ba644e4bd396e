#pragma once

// Rectangular report tables rendered as aligned text, CSV (RFC 4180
// quoting, header row always present) or JSON ({"meta": ..., "rows": ...}).

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "xmod/group.hpp"

namespace xmod {

enum class ReportFormat { text, csv, json };

inline ReportFormat parse_report_format(const std::string& s) {
  if (s == "text") return ReportFormat::text;
  if (s == "csv") return ReportFormat::csv;
  if (s == "json") return ReportFormat::json;
  throw Error("unknown format '" + s + "' (text, csv, json)");
}

struct ReportTable {
  std::vector<std::string> title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::map<std::string, std::string> meta;

  /// Pads short rows with empty cells; rejects rows wider than the header.
  void add_row(std::vector<std::string> row) {
    if (row.size() > headers.size()) throw Error("report row wider than header");
    row.resize(headers.size());
    rows.push_back(std::move(row));
  }

  bool rectangular() const {
    for (const auto& r : rows)
      if (r.size() != headers.size()) return false;
    return true;
  }

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < headers.size(); ++i)
      if (headers[i] == name) return i;
    throw Error("report has no column '" + name + "'");
  }

  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

// ---------------------------------------------------------------------------
// CSV

namespace detail {

inline std::string csv_cell(const std::string& s) {
  bool quote = s.find_first_of(",\"\r\n") != std::string::npos || (!s.empty() && (s.front() == ' ' || s.back() == ' '));
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline void csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
  out << "\r\n";
}

}  // namespace detail

/// Records of an RFC 4180 document. Accepts LF or CRLF line ends.
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> rec;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      if (!cell.empty()) throw Error("csv: quote inside an unquoted field");
      quoted = any = true;
    } else if (c == ',') {
      rec.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !cell.empty()) {
        rec.push_back(std::move(cell));
        out.push_back(std::move(rec));
      }
      rec.clear();
      cell.clear();
      any = false;
    } else {
      cell += c;
      any = true;
    }
  }
  if (quoted) throw Error("csv: unterminated quoted field");
  if (any || !cell.empty()) {
    rec.push_back(std::move(cell));
    out.push_back(std::move(rec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string render_text(const ReportTable& t) {
  std::vector<std::size_t> width(t.headers.size());
  auto cells = [](const std::string& s) {
    // column width in code points, so "γ2" aligns like "g2"
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  };
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = cells(t.headers[i]);
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], cells(r[i]));
  std::ostringstream out;
  for (const auto& l : t.title) out << l << "\n";
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += "  ";
      s += r[i];
      s.append(width[i] - cells(r[i]), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

inline std::string render_csv(const ReportTable& t) {
  std::ostringstream out;
  detail::csv_line(out, t.headers);
  for (const auto& r : t.rows) detail::csv_line(out, r);
  return out.str();
}

inline nlohmann::ordered_json report_json(const ReportTable& t) {
  nlohmann::ordered_json meta;
  meta["title"] = t.title;
  meta["columns"] = t.headers;
  for (const auto& [k, v] : t.meta) meta[k] = v;
  nlohmann::ordered_json j;
  j["meta"] = std::move(meta);
  j["rows"] = t.rows;
  return j;
}

inline std::string render_json(const ReportTable& t) { return report_json(t).dump(2) + "\n"; }

inline std::string render(const ReportTable& t, ReportFormat f) {
  switch (f) {
    case ReportFormat::text: return render_text(t);
    case ReportFormat::csv: return render_csv(t);
    case ReportFormat::json: return render_json(t);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parsing back (CSV carries no title or meta)

inline ReportTable parse_report_csv(const std::string& text) {
  auto recs = parse_csv(text);
  if (recs.empty()) throw Error("csv report: missing header row");
  ReportTable t;
  t.headers = recs.front();
  for (std::size_t i = 1; i < recs.size(); ++i) {
    if (recs[i].size() != t.headers.size()) throw Error("csv report: ragged row " + std::to_string(i));
    t.rows.push_back(recs[i]);
  }
  return t;
}

inline ReportTable parse_report_json(const std::string& text) {
  ReportTable t;
  try {
    auto j = nlohmann::json::parse(text);
    const auto& meta = j.at("meta");
    t.title = meta.at("title").get<std::vector<std::string>>();
    t.headers = meta.at("columns").get<std::vector<std::string>>();
    for (auto it = meta.begin(); it != meta.end(); ++it)
      if (it.key() != "title" && it.key() != "columns") t.meta[it.key()] = it.value().get<std::string>();
    t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("json report: ") + e.what());
  }
  if (!t.rectangular()) throw Error("json report: ragged rows");
  return t;
}

}  // namespace xmod
