#ifndef SEMIDELTA_TABLE_IO_HPP_
#define SEMIDELTA_TABLE_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "semidelta/cayley_table.hpp"
#include "semidelta/partition.hpp"

namespace semidelta {

struct ParsedTable {
  CayleyTable table;
  std::vector<std::string> names;  // optional, empty when absent
};

/// Text format: first line the order n, then n rows of n space-separated
/// entries (row = left factor). Rejects malformed input with ParseError
/// and non-semigroup tables with the closure/associativity witness.
ParsedTable parse_table_text(std::string_view text);

/// JSON format: {"order": n, "table": [[...], ...], "names": [... ]}.
ParsedTable parse_table_json(std::string_view text);

/// Reads a file in either format (JSON when the first significant byte
/// is '{').
ParsedTable parse_table_file(const std::string& path);

std::string table_to_text(const CayleyTable& t);
std::string table_to_json(const CayleyTable& t, const std::vector<std::string>& names = {});

/// FNV-1a digest of raw input bytes, for report provenance.
std::string content_digest(std::string_view bytes);

}  // namespace semidelta

#endif  // SEMIDELTA_TABLE_IO_HPP_
