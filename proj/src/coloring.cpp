#include "abcmax/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace abcmax {

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

bool test(const Bits& b, int v) { return (b[v / 64] >> (v % 64)) & 1U; }

Bits row_bits(const Graph& g, int v) {
  const auto r = g.row(v);
  return Bits(r.begin(), r.end());
}

void intersect(Bits& a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
}

template <typename F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    for (std::uint64_t x = b[w]; x != 0; x &= x - 1) {
      f(static_cast<int>(w * 64 + std::countr_zero(x)));
    }
  }
}

// Extends clique (with common-neighbour set cand) greedily by highest degree.
void grow_clique(const Graph& g, const std::vector<int>& deg, std::vector<int>& clique,
                 Bits& cand) {
  while (true) {
    int pick = -1;
    for_each_bit(cand, [&](int v) {
      if (pick < 0 || deg[v] > deg[pick]) pick = v;
    });
    if (pick < 0) return;
    clique.push_back(pick);
    intersect(cand, g.row(pick));
  }
}

Bits common_neighbours(const Graph& g, const std::vector<int>& clique, int skip) {
  Bits c(g.words_per_row(), ~std::uint64_t{0});
  for (int v : clique) {
    if (v != skip) intersect(c, g.row(v));
  }
  const int n = g.order();
  if (n % 64 != 0) c.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  for (int v : clique) c[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  return c;
}

// Replace one clique vertex by two adjacent vertices when possible.
bool improve_once(const Graph& g, const std::vector<int>& deg, std::vector<int>& clique) {
  for (std::size_t i = 0; i < clique.size(); ++i) {
    const int out = clique[i];
    Bits cand = common_neighbours(g, clique, out);
    cand[out / 64] &= ~(std::uint64_t{1} << (out % 64));
    bool done = false;
    for_each_bit(cand, [&](int a) {
      if (done) return;
      Bits rest = cand;
      intersect(rest, g.row(a));
      if (popcount(rest) == 0) return;
      clique.erase(clique.begin() + static_cast<std::ptrdiff_t>(i));
      clique.push_back(a);
      grow_clique(g, deg, clique, rest);
      done = true;
    });
    if (done) return true;
  }
  return false;
}

class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, int k)
      : g_(g),
        k_(k),
        n_(g.order()),
        deg_(g.degrees()),
        colour_(n_, -1),
        count_(static_cast<std::size_t>(n_) * k, 0),
        sat_(n_, 0) {
    for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
  }

  std::optional<std::vector<int>> run() {
    if (extend(0, -1)) return colour_;
    return std::nullopt;
  }

 private:
  int select() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && deg_[v] > deg_[best])) {
        best = v;
      }
    }
    return best;
  }

  void assign(int v, int c) {
    colour_[v] = c;
    for (int u : adj_[v]) {
      if (count_[static_cast<std::size_t>(u) * k_ + c]++ == 0) ++sat_[u];
    }
  }

  void unassign(int v, int c) {
    colour_[v] = -1;
    for (int u : adj_[v]) {
      if (--count_[static_cast<std::size_t>(u) * k_ + c] == 0) --sat_[u];
    }
  }

  // max_used: highest colour index used so far.
  bool extend(int coloured, int max_used) {
    if (coloured == n_) return true;
    const int v = select();
    if (sat_[v] >= k_) return false;
    // A fresh colour is interchangeable with every other unused one.
    const int top = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
      if (count_[static_cast<std::size_t>(v) * k_ + c] != 0) continue;
      assign(v, c);
      if (extend(coloured + 1, std::max(max_used, c))) return true;
      unassign(v, c);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int n_;
  std::vector<int> deg_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> colour_;
  std::vector<int> count_;
  std::vector<int> sat_;
};

}  // namespace

int greedy_clique_size(const Graph& g) {
  const int n = g.order();
  const auto deg = g.degrees();
  std::vector<int> seeds(n);
  std::iota(seeds.begin(), seeds.end(), 0);
  if (n > 64) {
    std::stable_sort(seeds.begin(), seeds.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    seeds.resize(32);
  }
  int best = 1;
  for (int s : seeds) {
    std::vector<int> clique{s};
    Bits cand = row_bits(g, s);
    grow_clique(g, deg, clique, cand);
    while (improve_once(g, deg, clique)) {
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

std::vector<int> dsatur_greedy(const Graph& g) {
  const int n = g.order();
  const auto deg = g.degrees();
  std::vector<int> colour(n, -1);
  std::vector<Bits> seen(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      const int s = popcount(seen[v]);
      if (s > best_sat || (s == best_sat && deg[v] > deg[best])) {
        best = v;
        best_sat = s;
      }
    }
    int c = 0;
    while (c / 64 < static_cast<int>(seen[best].size()) && test(seen[best], c)) ++c;
    colour[best] = c;
    for (int u : g.neighbors(best)) {
      if (seen[u].size() <= static_cast<std::size_t>(c / 64)) seen[u].resize(c / 64 + 1, 0);
      seen[u][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  return colour;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colours) {
  if (static_cast<int>(colours.size()) != g.order()) return false;
  if (std::any_of(colours.begin(), colours.end(), [](int c) { return c < 0; })) return false;
  bool ok = true;
  g.for_each_edge([&](int u, int v) { ok = ok && colours[u] != colours[v]; });
  return ok;
}

int colours_used(const std::vector<int>& colours) {
  std::vector<int> c = colours;
  std::sort(c.begin(), c.end());
  return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

std::optional<std::vector<int>> k_coloring(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k_coloring: k must be >= 0");
  const int n = g.order();
  if (k == 0) return std::nullopt;
  if (k >= n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  auto greedy = dsatur_greedy(g);
  if (colours_used(greedy) <= k) return greedy;
  if (greedy_clique_size(g) > k) return std::nullopt;
  return ColouringSearch(g, k).run();
}

bool is_k_colorable(const Graph& g, int k) { return k_coloring(g, k).has_value(); }

ColoringResult chromatic_number(const Graph& g) {
  ColoringResult r;
  r.clique_lower = greedy_clique_size(g);
  auto greedy = dsatur_greedy(g);
  r.greedy_upper = colours_used(greedy);
  for (int k = r.clique_lower; k < r.greedy_upper; ++k) {
    if (auto w = ColouringSearch(g, k).run()) {
      r.chi = k;
      r.witness = std::move(*w);
      return r;
    }
  }
  r.chi = r.greedy_upper;
  r.witness = std::move(greedy);
  return r;
}

}  // namespace abcmax
