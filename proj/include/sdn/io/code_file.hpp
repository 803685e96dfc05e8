#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sdn/error.hpp"
#include "sdn/gf2/bit_matrix.hpp"
#include "sdn/gf2/bit_vector.hpp"

namespace sdn::io {

/// Parses the text generator format: one row per line, ASCII '0'/'1', all
/// rows the same length. Lines starting with '#' are comments; a trailing
/// newline and CRLF line ends are accepted. Errors carry 1-based line/column.
inline BitMatrix parse_code(std::string_view text) {
  std::vector<BitVector> rows;
  std::size_t width = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    const bool last = end == std::string_view::npos;
    if (last) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) throw ParseError("empty line", line_no);

    for (std::size_t c = 0; c < line.size(); ++c)
      if (line[c] != '0' && line[c] != '1')
        throw ParseError("unexpected character '" + std::string(1, line[c]) + "'", line_no, c + 1);
    if (width == 0) {
      if (line.size() > BitVector::kMaxLength)
        throw ParseError("row longer than " + std::to_string(BitVector::kMaxLength), line_no);
      width = line.size();
    } else if (line.size() != width) {
      throw ParseError("row has " + std::to_string(line.size()) + " columns, expected " + std::to_string(width),
                       line_no, std::min(line.size(), width) + 1);
    }
    rows.push_back(BitVector::from_string(line));
  }
  if (rows.empty()) throw ParseError("no generator rows");
  return BitMatrix(width, std::move(rows));
}

inline std::string serialize_code(const BitMatrix& m) {
  std::string out;
  out.reserve(m.num_rows() * (m.num_cols() + 1));
  for (const auto& r : m) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline BitMatrix read_code_file(const std::string& path) { return parse_code(read_text_file(path)); }

/// Parses a neighbor vector for a code of length n. A string of n/2 bits is
/// placed on coordinates n/2+1..n with the first half zero; a string of n
/// bits is taken as is.
inline BitVector parse_neighbor_vector(std::string_view bits, std::size_t n) {
  for (std::size_t c = 0; c < bits.size(); ++c)
    if (bits[c] != '0' && bits[c] != '1')
      throw ParseError("vector: unexpected character '" + std::string(1, bits[c]) + "' at position " +
                       std::to_string(c + 1));
  if (bits.size() == n) return BitVector::from_string(bits);
  if (n % 2 == 0 && bits.size() == n / 2) return BitVector::from_string(bits).embedded(n, n / 2);
  throw ParseError("vector has " + std::to_string(bits.size()) + " bits; expected " + std::to_string(n) + " or " +
                   std::to_string(n / 2));
}

/// One vector per line; '#' comments and blank lines are skipped.
inline std::vector<std::string> parse_vector_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace sdn::io
