#include "semidelta/table_io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "semidelta/errors.hpp"

namespace semidelta {

ParsedTable parse_table_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long order;
  if (!(in >> order)) throw ParseError("expected the table order on the first line");
  if (order < 1 || order > ElemSet::max_order)
    throw ParseError("unsupported table order " + std::to_string(order));
  int n = static_cast<int>(order);
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  long long v;
  while (static_cast<int>(entries.size()) < n * n && (in >> v)) entries.push_back(static_cast<int>(v));
  if (static_cast<int>(entries.size()) < n * n)
    throw ParseError("expected " + std::to_string(n * n) + " entries, found " + std::to_string(entries.size()));
  std::string rest;
  if (in >> rest) throw ParseError("trailing content after the table: '" + rest + "'");
  return ParsedTable{CayleyTable(n, std::move(entries)), {}};
}

ParsedTable parse_table_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw ParseError("expected an object with 'order' and 'table'");
  int n = j.at("order").get<int>();
  if (n < 1 || n > ElemSet::max_order) throw ParseError("unsupported table order " + std::to_string(n));
  const auto& rows = j.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("'table' must hold n rows");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("each row must hold n entries");
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) throw ParseError("table entries must be integers");
      entries.push_back(cell.get<int>());
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j.at("names").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != n) throw ParseError("'names' must list one name per element");
  }
  return ParsedTable{CayleyTable(n, std::move(entries)), std::move(names)};
}

ParsedTable parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_table_json(text) : parse_table_text(text);
  }
  throw ParseError(path + " is empty");
}

std::string table_to_text(const CayleyTable& t) {
  std::string out = std::to_string(t.order());
  out += '\n';
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(t.at(a, b));
    }
    out += '\n';
  }
  return out;
}

std::string table_to_json(const CayleyTable& t, const std::vector<std::string>& names) {
  nlohmann::json j;
  j["order"] = t.order();
  auto rows = nlohmann::json::array();
  for (int a = 0; a < t.order(); ++a) {
    auto row = nlohmann::json::array();
    for (int b = 0; b < t.order(); ++b) row.push_back(t.at(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (!names.empty()) j["names"] = names;
  return j.dump();
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace semidelta
