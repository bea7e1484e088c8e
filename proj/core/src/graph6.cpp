#include "siglab/graph6.hpp"

#include <string>

#include "siglab/error.hpp"

namespace siglab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("character " + std::to_string(c) + " outside graph6 range 63..126", pos);
  }
  return c - 63;
}

}  // namespace

Graph from_graph6(std::string_view text, std::size_t max_order) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("missing size header", pos);

  std::size_t n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("8-byte size form not supported", pos);
    }
    if (pos + 4 > text.size()) throw ParseError("truncated long size header", text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos + i));
    if (n < 63) throw ParseError("non-canonical long size header", pos);
    pos += 4;
  } else {
    n = static_cast<std::size_t>(sextet(text, pos));
    pos += 1;
  }
  if (n > max_order) {
    throw ParseError("order " + std::to_string(n) + " exceeds limit " + std::to_string(max_order),
                     pos - 1);
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos < chars) throw ParseError("truncated adjacency data", text.size());
  if (text.size() - pos > chars) throw ParseError("trailing bytes after adjacency data", pos + chars);

  std::vector<VertexMask> rows(n, 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int value = sextet(text, pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) {
        rows[i] |= bit(static_cast<Vertex>(j));
        rows[j] |= bit(static_cast<Vertex>(i));
      }
    }
  }
  if (chars > 0) {
    const std::size_t last = pos + chars - 1;
    const int value = sextet(text, last);
    const std::size_t pad = chars * 6 - bits;
    if (value & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", last);
  }
  return Graph::from_masks(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
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

}  // namespace siglab
