#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace planarch {

// graph6 codec. Layout: N(n) header, then the upper triangle of the
// adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
// zero-padded to a multiple of 6 bits, each 6-bit group emitted
// MSB-first as ASCII (value + 63).
//
// The short header (one byte) covers n < 63; the 4-byte '~' header
// covers n up to 2^18 - 1. The 8-byte '~~' header is rejected.

namespace g6_detail {

inline int payload_value(char c, std::size_t at) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126)
    throw FormatError("character out of graph6 range", at);
  return u - 63;
}

}  // namespace g6_detail

inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw FormatError("empty input", 0);

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] == '~') {
    if (text.size() < 2) throw FormatError("truncated extended header", 1);
    if (text[1] == '~')
      throw FormatError("8-byte extended form not supported", 1);
    if (text.size() < 4) throw FormatError("truncated extended header", text.size());
    n = 0;
    for (pos = 1; pos < 4; ++pos)
      n = (n << 6) | g6_detail::payload_value(text[pos], pos);
    if (n < 63)
      throw FormatError("extended header used for n < 63", 1);
  } else {
    n = g6_detail::payload_value(text[0], 0);
    pos = 1;
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < groups)
    throw FormatError("payload shorter than n requires", text.size());
  if (text.size() - pos > groups)
    throw FormatError("trailing bytes after payload", pos + groups);

  std::vector<VertexPair> edges;
  long long bit = 0;
  int col = 1, row = 0;
  for (std::size_t i = 0; i < groups; ++i) {
    int val = g6_detail::payload_value(text[pos + i], pos + i);
    for (int b = 5; b >= 0; --b, ++bit) {
      bool set = (val >> b) & 1;
      if (bit < bits) {
        if (set) edges.emplace_back(row, col);
        if (++row == col) {
          row = 0;
          ++col;
        }
      } else if (set) {
        throw FormatError("nonzero padding bit", pos + i);
      }
    }
  }
  return graph_from_edges(static_cast<int>(n), std::move(edges));
}

inline std::string emit_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  if (n >= (1 << 18))
    throw Unsupported("graph too large for the 4-byte graph6 header");

  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }

  const long long bits = n * (n - 1) / 2;
  std::vector<bool> x(static_cast<std::size_t>(bits), false);
  for (const auto& e : g.edges()) {
    // bit index of x(u,v), v > u: all columns before v, then position u
    long long idx = static_cast<long long>(e.v) * (e.v - 1) / 2 + e.u;
    x[static_cast<std::size_t>(idx)] = true;
  }
  for (long long i = 0; i < bits; i += 6) {
    int val = 0;
    for (int b = 0; b < 6; ++b)
      val = (val << 1) | ((i + b < bits && x[static_cast<std::size_t>(i + b)]) ? 1 : 0);
    out.push_back(static_cast<char>(val + 63));
  }
  return out;
}

}  // namespace planarch
