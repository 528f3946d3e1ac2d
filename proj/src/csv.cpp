#include "diam/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace diam {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

PointSet parse_points_csv(std::istream& in, const std::string& source) {
  std::vector<double> coords;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::size_t columns = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      std::string_view token =
          trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
      if (!token.empty() && token.front() == '+') token.remove_prefix(1);
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(source, line_no, "not a number: '" + std::string(token) + "'");
      if (!std::isfinite(value))
        throw ParseError(source, line_no, "non-finite coordinate '" + std::string(token) + "'");
      coords.push_back(value);
      ++columns;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (dim == 0) {
      dim = columns;
    } else if (columns != dim) {
      throw ParseError(source, line_no,
                       "expected " + std::to_string(dim) + " columns, found " + std::to_string(columns));
    }
  }
  if (dim == 0) throw ParseError(source, line_no, "no points found");
  return PointSet(dim, std::move(coords));
}

PointSet read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_points_csv(in, path);
}

void write_points_csv(const PointSet& s, std::ostream& out) {
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    const PointView p = s[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out.put(',');
      const auto res = std::to_chars(buf, buf + sizeof buf, p[k]);
      out.write(buf, res.ptr - buf);
    }
    out.put('\n');
  }
}

void write_points_csv(const PointSet& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_points_csv(s, out);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace diam
