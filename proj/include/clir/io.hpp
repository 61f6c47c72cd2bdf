#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace clir::io {

// Reads a whole file; throws data_error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

// Splits into lines, dropping the trailing '\r' of CRLF files.
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

std::vector<std::string> split(std::string_view line, char sep);

std::string_view trim(std::string_view s);

// Shortest round-trippable decimal form of a double.
std::string format_double(double value);

// Fixed-point formatting used by run files and reports.
std::string format_fixed(double value, int decimals);

}  // namespace clir::io
