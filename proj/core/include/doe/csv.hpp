#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "doe/design.hpp"

namespace doe {

/// Shortest decimal string that round-trips to the same double ('.' decimal
/// separator, no locale).
std::string format_double(double x);

/// Reads a design file: one point per row, comma-separated coordinates in
/// [0,1], no header, LF line endings. Throws ParseError with the 1-based
/// line number on malformed rows, range violations, or ragged columns.
DesignMatrix load_design(const std::filesystem::path& path);
DesignMatrix read_design(std::istream& in, const std::string& source = "<stream>");

/// Writes the design in the same format.
void save_design(const DesignMatrix& design, const std::filesystem::path& path);
void write_design(const DesignMatrix& design, std::ostream& out);

}  // namespace doe
