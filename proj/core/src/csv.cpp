#include "doe/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace doe {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

double parse_coordinate(std::string_view token, std::size_t line) {
  // trim ASCII whitespace and a trailing CR from CRLF input
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) {
    token.remove_prefix(1);
  }
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' ||
                            token.back() == '\r')) {
    token.remove_suffix(1);
  }
  double value = 0.0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) +
                         ": cannot parse coordinate '" + std::string(token) +
                         "'",
                     line);
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParseError("line " + std::to_string(line) + ": coordinate " +
                         std::string(token) + " outside [0,1]",
                     line);
  }
  return value;
}

}  // namespace

DesignMatrix read_design(std::istream& in, const std::string& source) {
  std::vector<double> coords;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::size_t cols = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view token(line.data() + start,
                                   (comma == std::string::npos ? line.size()
                                                               : comma) -
                                       start);
      coords.push_back(parse_coordinate(token, line_no));
      ++cols;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (dim == 0) {
      dim = cols;
    } else if (cols != dim) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(dim) + " columns, got " +
                           std::to_string(cols),
                       line_no);
    }
  }
  if (dim == 0) {
    throw ParseError(source + ": no data rows", 0);
  }
  return DesignMatrix(dim, std::move(coords));
}

DesignMatrix load_design(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open design file: " + path.string());
  return read_design(in, path.string());
}

void write_design(const DesignMatrix& design, std::ostream& out) {
  for (std::size_t i = 0; i < design.size(); ++i) {
    const auto p = design.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) out << ',';
      out << format_double(p[k]);
    }
    out << '\n';
  }
}

void save_design(const DesignMatrix& design,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // LF endings on every platform
  if (!out) throw Error("cannot open output file: " + path.string());
  write_design(design, out);
  if (!out.flush()) throw Error("write failed: " + path.string());
}

}  // namespace doe
