#include "abcmax/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace abcmax {

namespace detail {

namespace {

using u128 = unsigned __int128;

// Bit index of pair (i, j), i < j, in column-major upper-triangle order.
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

constexpr u128 top_mask(int bits) {
  if (bits <= 0) return 0;
  if (bits >= 128) return ~u128{0};
  return ~u128{0} << (128 - bits);
}

// Ordered partition of the vertex set; each cell is a vertex mask.
struct Partition {
  std::array<std::uint32_t, kMaxCanonicalOrder> cells{};
  int count = 0;

  void split(int at, std::span<const std::uint32_t> parts) {
    const int extra = static_cast<int>(parts.size()) - 1;
    for (int i = count - 1; i > at; --i) cells[i + extra] = cells[i];
    for (std::size_t i = 0; i < parts.size(); ++i) cells[at + i] = parts[i];
    count += extra;
  }
};

// Splits cells by neighbour counts into splitter cells until equitable.
// Sub-cells are ordered by increasing count, so the result depends only on
// the graph and the input partition.
void refine(const SmallGraph& g, Partition& p) {
  bool changed = true;
  while (changed && p.count < g.n) {
    changed = false;
    for (int s = 0; s < p.count && !changed; ++s) {
      const std::uint32_t splitter = p.cells[s];
      for (int c = 0; c < p.count; ++c) {
        const std::uint32_t cell = p.cells[c];
        if (std::has_single_bit(cell)) continue;
        std::array<std::uint32_t, kMaxCanonicalOrder + 1> by_count{};
        std::uint32_t seen_counts = 0;
        for (std::uint32_t m = cell; m != 0; m &= m - 1) {
          const int v = std::countr_zero(m);
          const int k = std::popcount(g.adj[v] & splitter);
          by_count[k] |= std::uint32_t{1} << v;
          seen_counts |= std::uint32_t{1} << k;
        }
        if (std::has_single_bit(seen_counts)) continue;
        std::array<std::uint32_t, kMaxCanonicalOrder> parts{};
        int np = 0;
        for (std::uint32_t m = seen_counts; m != 0; m &= m - 1) {
          parts[np++] = by_count[std::countr_zero(m)];
        }
        p.split(c, std::span(parts.data(), np));
        changed = true;
        break;
      }
    }
  }
}

class Search {
 public:
  explicit Search(const SmallGraph& g) : g_(g) {}

  SmallCanonical run(Partition start) {
    descend(start);
    return best_;
  }

 private:
  u128 prefix_string(const Partition& p, int lead) const {
    u128 s = 0;
    for (int j = 1; j < lead; ++j) {
      const int vj = std::countr_zero(p.cells[j]);
      for (int i = 0; i < j; ++i) {
        const int vi = std::countr_zero(p.cells[i]);
        if ((g_.adj[vi] >> vj) & 1U) s |= u128{1} << (127 - pair_index(i, j));
      }
    }
    return s;
  }

  void descend(Partition p) {
    refine(g_, p);
    int lead = 0;
    while (lead < p.count && std::has_single_bit(p.cells[lead])) ++lead;

    const u128 partial = prefix_string(p, lead);
    if (have_best_) {
      const u128 mask = top_mask(pair_index(0, lead));
      if (partial > (best_.bits & mask)) return;
    }
    if (lead == g_.n) {
      if (!have_best_ || partial < best_.bits) {
        have_best_ = true;
        best_.bits = partial;
        for (int i = 0; i < g_.n; ++i) {
          best_.order_to_vertex[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
        }
      }
      return;
    }

    // Branch on the first non-singleton cell. Twins inside the cell are
    // swapped by an automorphism that fixes p, so one per twin class suffices.
    const std::uint32_t cell = p.cells[lead];
    std::array<int, kMaxCanonicalOrder> tried{};
    int ntried = 0;
    for (std::uint32_t m = cell; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      bool twin = false;
      for (int t = 0; t < ntried && !twin; ++t) {
        const int u = tried[t];
        twin = (g_.adj[u] & ~(std::uint32_t{1} << v)) == (g_.adj[v] & ~(std::uint32_t{1} << u));
      }
      if (twin) continue;
      tried[ntried++] = v;
      Partition q = p;
      const std::array<std::uint32_t, 2> parts{std::uint32_t{1} << v, cell & ~(std::uint32_t{1} << v)};
      q.split(lead, parts);
      descend(q);
    }
  }

  const SmallGraph& g_;
  SmallCanonical best_;
  bool have_best_ = false;
};

}  // namespace

SmallGraph SmallGraph::from(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical forms support order <= " +
                                std::to_string(kMaxCanonicalOrder) + ", got " +
                                std::to_string(g.order()));
  }
  SmallGraph s;
  s.n = g.order();
  for (int v = 0; v < s.n; ++v) s.adj[v] = static_cast<std::uint32_t>(g.row(v)[0]);
  return s;
}

Graph SmallGraph::to_graph() const {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (std::uint32_t m = adj[u] >> (u + 1); m != 0; m &= m - 1) {
      g.insert_edge(u, u + 1 + std::countr_zero(m));
    }
  }
  return g;
}

SmallCanonical canonicalize(const SmallGraph& g, int marked) {
  Partition start;
  const std::uint32_t all = g.n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.n) - 1;
  if (marked >= 0 && g.n > 1) {
    const std::uint32_t mark = std::uint32_t{1} << marked;
    start.cells[0] = mark;
    start.cells[1] = all & ~mark;
    start.count = 2;
  } else {
    start.cells[0] = all;
    start.count = 1;
  }
  return Search(g).run(start);
}

CanonicalForm to_form(int n, unsigned __int128 bits) {
  CanonicalForm f;
  f.order = n;
  f.bits[0] = static_cast<std::uint64_t>(bits >> 64);
  f.bits[1] = static_cast<std::uint64_t>(bits);
  return f;
}

SmallGraph relabel(const SmallGraph& g, const SmallCanonical& c) {
  std::array<int, kMaxCanonicalOrder> pos{};
  for (int i = 0; i < g.n; ++i) pos[c.order_to_vertex[i]] = i;
  SmallGraph out;
  out.n = g.n;
  for (int u = 0; u < g.n; ++u) {
    for (std::uint32_t m = g.adj[u]; m != 0; m &= m - 1) {
      out.adj[pos[u]] |= std::uint32_t{1} << pos[std::countr_zero(m)];
    }
  }
  return out;
}

}  // namespace detail

std::vector<std::uint8_t> CanonicalForm::bytes() const {
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(order));
  const int nbits = order * (order - 1) / 2;
  for (int b = 0; b < (nbits + 7) / 8; ++b) {
    const std::uint64_t word = bits[b / 8];
    out.push_back(static_cast<std::uint8_t>(word >> (56 - 8 * (b % 8))));
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const auto s = detail::SmallGraph::from(g);
  const auto c = detail::canonicalize(s);
  CanonicalLabeling out;
  out.form = detail::to_form(s.n, c.bits);
  out.order_to_vertex.assign(c.order_to_vertex.begin(), c.order_to_vertex.begin() + s.n);
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
  const auto s = detail::SmallGraph::from(g);
  return detail::relabel(s, detail::canonicalize(s)).to_graph();
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace abcmax
