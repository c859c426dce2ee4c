#pragma once

#include <optional>
#include <string>
#include <vector>

namespace quadra {

// Shortest round-trip decimal form (std::to_chars), so distinct doubles map
// to distinct strings and output files are byte-stable.
std::string format_double(double value);

// Empty string for an undefined value.
std::string format_optional(const std::optional<double>& value);

// Quotes a field only when it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

std::string csv_row(const std::vector<std::string>& fields);

// Minimal reader for our own header-line CSV outputs (quoted fields
// supported). Returns one vector of fields per line, header included.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace quadra
