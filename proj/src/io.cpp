#include "bmat/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <fmt/core.h>

#include "bmat/error.hpp"

namespace bmat {
namespace {

struct DataLine {
  int number;
  std::string text;
};

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<DataLine> ReadDataLines(std::istream& in) {
  std::vector<DataLine> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string_view t = Trim(raw);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back({number, std::string(t)});
  }
  return lines;
}

double ParseNumber(std::string_view token, int line) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, fmt::format("line {}: '{}' is not a decimal number", line, token));
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, fmt::format("line {}: '{}' is not finite", line, token));
  }
  return value;
}

std::vector<double> SplitNumbers(std::string_view text, int line, bool csv) {
  std::vector<double> values;
  if (csv) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string_view field =
          Trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                  : comma - start));
      values.push_back(ParseNumber(field, line));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return values;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    pos = text.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    const std::size_t end = std::min(text.find_first_of(" \t", pos), text.size());
    values.push_back(ParseNumber(text.substr(pos, end - pos), line));
    pos = end;
  }
  return values;
}

SquareMatrix ParseRows(const std::vector<DataLine>& rows, std::size_t n, bool csv) {
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    const auto values = SplitNumbers(row.text, row.number, csv);
    if (values.size() != n) {
      throw ParseError(row.number, fmt::format("line {}: expected {} values, found {}", row.number,
                                               n, values.size()));
    }
    entries.insert(entries.end(), values.begin(), values.end());
  }
  return SquareMatrix(n, std::move(entries));
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, fmt::format("cannot open '{}'", path.string()));
  return in;
}

}  // namespace

SquareMatrix read_matrix(std::istream& in) {
  const auto lines = ReadDataLines(in);
  if (lines.empty()) throw ParseError(0, "no matrix data found");

  if (lines.front().text.find(',') != std::string::npos) {
    const std::size_t n = SplitNumbers(lines.front().text, lines.front().number, true).size();
    if (lines.size() != n) {
      const int at = lines.size() > n ? lines[n].number : lines.back().number;
      throw ParseError(at, fmt::format("line {}: CSV matrix with {} columns needs {} rows, found {}",
                                       at, n, n, lines.size()));
    }
    return ParseRows(lines, n, true);
  }

  const DataLine& header = lines.front();
  std::size_t n = 0;
  const auto [ptr, ec] =
      std::from_chars(header.text.data(), header.text.data() + header.text.size(), n);
  if (ec != std::errc() || ptr != header.text.data() + header.text.size() || n == 0) {
    throw ParseError(header.number, fmt::format("line {}: expected a positive dimension, found '{}'",
                                                header.number, header.text));
  }
  if (lines.size() - 1 != n) {
    const int at = lines.size() - 1 > n ? lines[n + 1].number : lines.back().number;
    throw ParseError(at, fmt::format("line {}: header declares {} rows, found {}", at, n,
                                     lines.size() - 1));
  }
  return ParseRows({lines.begin() + 1, lines.end()}, n, false);
}

SquareMatrix read_matrix_file(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const SquareMatrix& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      out << (j == 0 ? "" : " ") << fmt::format("{}", m(i, j));
    }
    out << '\n';
  }
}

Vector read_vector(std::istream& in) {
  const auto lines = ReadDataLines(in);
  if (lines.empty()) throw ParseError(0, "no vector data found");
  if (lines.size() > 1) {
    throw ParseError(lines[1].number,
                     fmt::format("line {}: vector must be a single line", lines[1].number));
  }
  auto values = SplitNumbers(lines.front().text, lines.front().number, false);
  if (values.empty()) throw ParseError(lines.front().number, "empty vector");
  return values;
}

Vector read_vector_file(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return read_vector(in);
}

}  // namespace bmat
