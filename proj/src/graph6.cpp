#include "abcmax/graph6.hpp"

#include <cstdint>

namespace abcmax {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kPrefix = ">>graph6<<";

void put_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  out.push_back('~');
  for (int shift = 12; shift >= 0; shift -= 6) {
    out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw Graph6Error("graph6: byte outside 63..126");
  return v;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(kPrefix)) text.remove_prefix(kPrefix.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw Graph6Error("graph6: truncated size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
    if (n <= 258047) throw Graph6Error("graph6: non-minimal size header");
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
    if (n <= 62) throw Graph6Error("graph6: non-minimal size header");
  }
  if (n < 1 || n > Graph::kMaxOrder) {
    throw Graph6Error("graph6: order " + std::to_string(n) + " unsupported");
  }

  const std::size_t bits = Graph::max_edges(static_cast<int>(n));
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) throw Graph6Error("graph6: length mismatch");

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.insert_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(text.back());
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace abcmax
