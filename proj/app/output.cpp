#include "output.hpp"

#include "hopflab/errors.hpp"

namespace hopflab::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md") return Format::Md;
  throw HopflabError(ErrorKind::Input, "unknown format " + s);
}

namespace {

std::string plain(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

bool is_table_key(const std::string& k) { return k == "table" || k == "basis" || k == "columns"; }

nlohmann::json columns_of(const nlohmann::json& r) { return r.contains("columns") ? r["columns"] : r["basis"]; }

bool is_header_key(const std::string& k) { return k == "command" || k == "instance" || k == "q12"; }

bool is_record_list(const nlohmann::json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

void emit_md(std::ostream& os, const nlohmann::json& r) {
  os << "## " << plain(r["command"]) << " — " << plain(r["instance"]);
  if (r.contains("q12")) os << " (q12 = " << plain(r["q12"]) << ")";
  os << "\n\n";
  if (r.contains("verdict")) os << r["verdict"].get<std::string>() << "\n\n";
  for (const auto& [k, v] : r.items()) {
    if (is_table_key(k) || is_header_key(k) || k == "verdict") continue;
    if (is_record_list(v)) {
      os << "- " << k << ":\n";
      for (const auto& item : v) {
        os << "  -";
        for (const auto& [ik, iv] : item.items()) os << " " << ik << "=" << plain(iv);
        os << "\n";
      }
    } else {
      os << "- " << k << ": " << plain(v) << "\n";
    }
  }
  if (!r.contains("table")) return;
  const auto cols = columns_of(r);
  os << "\n|   |";
  for (const auto& c : cols) os << " " << plain(c) << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
  os << "\n";
  for (std::size_t i = 0; i < r["table"].size(); ++i) {
    os << "| " << plain(r["basis"][i]) << " |";
    for (const auto& cell : r["table"][i]) os << " " << plain(cell) << " |";
    os << "\n";
  }
}

void emit_csv(std::ostream& os, const nlohmann::json& r) {
  if (r.contains("table")) {
    os << "";
    for (const auto& c : columns_of(r)) os << "," << csv_cell(plain(c));
    os << "\n";
    for (std::size_t i = 0; i < r["table"].size(); ++i) {
      os << csv_cell(plain(r["basis"][i]));
      for (const auto& cell : r["table"][i]) os << "," << csv_cell(plain(cell));
      os << "\n";
    }
    return;
  }
  os << "key,value\n";
  for (const auto& [k, v] : r.items())
    if (!is_record_list(v)) os << csv_cell(k) << "," << csv_cell(plain(v)) << "\n";
  // Lists of records follow as their own blocks.
  for (const auto& [k, v] : r.items()) {
    if (!is_record_list(v)) continue;
    os << "\n" << csv_cell(k);
    for (const auto& [ik, iv] : v.front().items()) os << "," << csv_cell(ik);
    os << "\n";
    for (const auto& item : v) {
      for (const auto& [ik, iv] : item.items()) os << "," << csv_cell(plain(iv));
      os << "\n";
    }
  }
}

}  // namespace

void emit(std::ostream& os, const nlohmann::json& report, Format f) {
  switch (f) {
    case Format::Json: os << report.dump(2) << "\n"; break;
    case Format::Csv: emit_csv(os, report); break;
    case Format::Md: emit_md(os, report); break;
  }
}

}  // namespace hopflab::cli
