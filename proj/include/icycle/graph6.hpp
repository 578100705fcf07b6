#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "icycle/graph.hpp"

namespace icycle {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest order representable without the 8-byte size header, which is not supported.
inline constexpr int kGraph6MaxOrder = 258047;

struct Graph6Decoded {
  Graph graph;
  bool nonzero_padding = false;
};

namespace detail {

inline std::string_view trim_graph6_line(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

inline int graph6_value(char c, std::size_t pos) {
  const int b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) {
    throw Graph6Error("graph6: byte " + std::to_string(b) + " at offset " + std::to_string(pos) +
                      " outside 63..126");
  }
  return b - 63;
}

}  // namespace detail

/// Decodes one graph6 line. Nonzero padding bits are accepted and flagged.
inline Graph6Decoded graph6_decode_checked(std::string_view text) {
  text = detail::trim_graph6_line(text);
  if (text.empty()) throw Graph6Error("graph6: empty line");

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
      throw Graph6Error("graph6: orders above 258047 are not supported");
    }
    if (text.size() < 4) throw Graph6Error("graph6: truncated size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | detail::graph6_value(text[i], i);
    if (n < 63) throw Graph6Error("graph6: long size header used for order below 63");
    pos = 4;
  } else {
    n = detail::graph6_value(text[0], 0);
    pos = 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos < body) {
    throw Graph6Error("graph6: truncated body, expected " + std::to_string(body) + " bytes, found " +
                      std::to_string(text.size() - pos));
  }
  if (text.size() - pos > body) throw Graph6Error("graph6: trailing bytes after body");

  GraphBuilder builder(static_cast<int>(n));
  Graph6Decoded out;
  std::size_t k = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t byte = 0; byte < body; ++byte) {
    const int value = detail::graph6_value(text[pos + byte], pos + byte);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool set = (value >> shift) & 1;
      if (k >= bits) {
        if (set) out.nonzero_padding = true;
        continue;
      }
      if (set) builder.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  out.graph = builder.build();
  return out;
}

inline Graph graph6_decode(std::string_view text) { return graph6_decode_checked(text).graph; }

/// Encodes without a trailing newline. Padding bits are zero.
inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw Graph6Error("graph6: order above 258047 is not supported");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    const VertexSet& row = g.neighbours(j);
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (row.contains(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace icycle
