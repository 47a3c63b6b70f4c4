#ifndef SEIDEL_GRAPH6_HPP
#define SEIDEL_GRAPH6_HPP

// graph6 text format for n <= 64:
//   N(n) = n + 63 for n <= 62, otherwise '~' followed by three 6-bit groups (18 bits).
//   Then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte,
//   most significant bit first, zero padded, each byte offset by 63.

#include "errors.hpp"
#include "graph.hpp"

#include <string>
#include <string_view>

namespace seidel {

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  auto value_at = [&](std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw parse_error("non-graph6 byte " + std::to_string(static_cast<int>(c)), pos);
    return static_cast<int>(c) - 63;
  };

  if (text.empty())
    throw parse_error("empty graph6 string", 0);

  int n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    if (text.size() < 4)
      throw parse_error("truncated graph6 size header", text.size());
    if (text[1] == '~')
      throw parse_error("graph6 order above 258047 not supported", 1);
    n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
    if (n <= 62)
      throw parse_error("non-canonical graph6 size header", 0);
    pos = 4;
  } else {
    n = value_at(0);
    pos = 1;
  }
  if (n == 0)
    throw parse_error("graph6 order 0 not supported", 0);
  if (n > max_order)
    throw parse_error("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(max_order), 0);

  const std::size_t bits = static_cast<std::size_t>(pair_count(n));
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body)
    throw parse_error("truncated graph6 body", text.size());
  if (text.size() > pos + body)
    throw parse_error("trailing bytes after graph6 body", pos + body);

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = value_at(pos + k / 6);
      if ((group >> (5 - static_cast<int>(k % 6))) & 1)
        g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((value_at(last) & ((1 << pad) - 1)) != 0)
      throw parse_error("nonzero graph6 padding bits", last);
  }
  return g;
}

} // namespace seidel

#endif
