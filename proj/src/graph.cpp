#include "abcmax/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace abcmax {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxOrder) + "]");
  }
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (std::uint64_t w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(n_) + ")");
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (row(u)[v / 64] >> (v % 64)) & 1U;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

void Graph::set_bit(int u, int v, bool value) noexcept {
  const std::uint64_t mask_v = std::uint64_t{1} << (v % 64);
  const std::uint64_t mask_u = std::uint64_t{1} << (u % 64);
  auto& a = bits_[static_cast<std::size_t>(u) * words_ + v / 64];
  auto& b = bits_[static_cast<std::size_t>(v) * words_ + u / 64];
  if (value) {
    a |= mask_v;
    b |= mask_u;
  } else {
    a &= ~mask_v;
    b &= ~mask_u;
  }
}

void Graph::insert_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} already present");
  }
  set_bit(u, v, true);
}

void Graph::erase_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (!adjacent(u, v)) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} not present");
  }
  set_bit(u, v, false);
}

bool Graph::audit() const {
  if (n_ < 1 || n_ > kMaxOrder || words_ != words_for(n_)) return false;
  if (bits_.size() != static_cast<std::size_t>(n_) * words_) return false;
  const int tail = n_ % 64;
  for (int u = 0; u < n_; ++u) {
    const auto r = row(u);
    if (tail != 0 && (r[words_ - 1] >> tail) != 0) return false;
    if ((r[u / 64] >> (u % 64)) & 1U) return false;
    for (int v = u + 1; v < n_; ++v) {
      const bool uv = (r[v / 64] >> (v % 64)) & 1U;
      const bool vu = (row(v)[u / 64] >> (u % 64)) & 1U;
      if (uv != vu) return false;
    }
  }
  return true;
}

Graph empty_graph(int n) { return Graph(n); }

Graph add_edge(Graph g, int u, int v) {
  g.insert_edge(u, v);
  return g;
}

Graph remove_edge(Graph g, int u, int v) {
  g.erase_edge(u, v);
  return g;
}

namespace {

Graph union_with_cross(const Graph& g, const Graph& h, bool cross) {
  const int ng = g.order();
  const int nh = h.order();
  if (ng + nh > Graph::kMaxOrder) {
    throw std::invalid_argument("combined order " + std::to_string(ng + nh) +
                                " exceeds " + std::to_string(Graph::kMaxOrder));
  }
  Graph out(ng + nh);
  g.for_each_edge([&](int u, int v) { out.insert_edge(u, v); });
  h.for_each_edge([&](int u, int v) { out.insert_edge(ng + u, ng + v); });
  if (cross) {
    for (int u = 0; u < ng; ++u) {
      for (int v = 0; v < nh; ++v) out.insert_edge(u, ng + v);
    }
  }
  return out;
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return union_with_cross(g, h, false); }

Graph join(const Graph& g, const Graph& h) { return union_with_cross(g, h, true); }

int component_count(const Graph& g) {
  const int n = g.order();
  const int words = g.words_per_row();
  std::vector<std::uint64_t> seen(words, 0);
  std::vector<int> stack;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen[s / 64] >> (s % 64)) & 1U) continue;
    ++components;
    seen[s / 64] |= std::uint64_t{1} << (s % 64);
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      const auto r = g.row(u);
      for (int w = 0; w < words; ++w) {
        std::uint64_t fresh = r[w] & ~seen[w];
        seen[w] |= fresh;
        for (; fresh != 0; fresh &= fresh - 1) {
          stack.push_back(w * 64 + std::countr_zero(fresh));
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation length does not match graph order");
  }
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) throw std::invalid_argument("not a permutation");
    hit[p] = 1;
  }
  Graph out(n);
  g.for_each_edge([&](int u, int v) { out.insert_edge(perm[u], perm[v]); });
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace abcmax
