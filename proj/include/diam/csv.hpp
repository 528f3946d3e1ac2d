#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "diam/geometry.hpp"

namespace diam {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One point per line, comma separated. Blank lines and lines starting with
/// '#' are skipped. Every data line must have the same number of columns.
PointSet parse_points_csv(std::istream& in, const std::string& source = "<stream>");
PointSet read_points_csv(const std::string& path);

/// Shortest decimal that reads back to the same double.
void write_points_csv(const PointSet& s, std::ostream& out);
void write_points_csv(const PointSet& s, const std::string& path);

}  // namespace diam
