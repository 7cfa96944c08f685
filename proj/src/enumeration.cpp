#include "abcmax/enumeration.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

#include "abcmax/canonical.hpp"

namespace abcmax {

namespace {

using detail::SmallGraph;

bool connected_without(const SmallGraph& g, int removed) {
  const std::uint32_t alive = ((std::uint32_t{1} << g.n) - 1) & ~(std::uint32_t{1} << removed);
  if (alive == 0) return true;
  std::uint32_t seen = alive & (~alive + 1);
  std::uint32_t frontier = seen;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m != 0; m &= m - 1) next |= g.adj[std::countr_zero(m)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

// Canonical deletion candidates are ranked by (degree, neighbour degree sum).
int deletion_key(const SmallGraph& g, const std::array<int, kMaxCanonicalOrder>& deg, int u) {
  int nds = 0;
  for (std::uint32_t m = g.adj[u]; m != 0; m &= m - 1) nds += deg[std::countr_zero(m)];
  return (deg[u] << 8) | nds;
}

}  // namespace

void check_enumeration_order(int n, bool allow_long) {
  const int cap = allow_long ? kLongEnumerationLimit : kDefaultEnumerationLimit;
  if (n < 1 || n > cap) {
    throw std::invalid_argument("enumeration order " + std::to_string(n) + " outside [1, " +
                                std::to_string(cap) + "]" +
                                (allow_long ? "" : " (order 10 needs the long-run flag)"));
  }
}

void for_each_child(const Graph& parent, const std::function<void(const Graph&)>& visit) {
  const SmallGraph p = SmallGraph::from(parent);
  if (p.n + 1 > kMaxCanonicalOrder) throw std::invalid_argument("parent order too large");
  const int n = p.n + 1;
  const int v = n - 1;
  std::array<int, kMaxCanonicalOrder> parent_deg{};
  for (int u = 0; u < p.n; ++u) parent_deg[u] = std::popcount(p.adj[u]);

  std::vector<unsigned __int128> kept;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << p.n); ++subset) {
    SmallGraph c = p;
    c.n = n;
    c.adj[v] = subset;
    std::array<int, kMaxCanonicalOrder> deg = parent_deg;
    deg[v] = std::popcount(subset);
    for (std::uint32_t m = subset; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      c.adj[u] |= std::uint32_t{1} << v;
      ++deg[u];
    }

    // The new vertex is never a cut vertex: removing it leaves the parent.
    const int key_v = deletion_key(c, deg, v);
    std::uint32_t ties = std::uint32_t{1} << v;
    bool reject = false;
    for (int u = 0; u < v && !reject; ++u) {
      if ((deg[u] << 8) > key_v) continue;
      const int key_u = deletion_key(c, deg, u);
      if (key_u > key_v) continue;
      const bool non_cut = deg[u] == 1 || connected_without(c, u);
      if (!non_cut) continue;
      if (key_u < key_v) reject = true;
      ties |= std::uint32_t{1} << u;
    }
    if (reject) continue;

    const detail::SmallCanonical canon = detail::canonicalize(c);
    if (!std::has_single_bit(ties)) {
      int chosen = -1;
      for (int pos = n - 1; pos >= 0 && chosen < 0; --pos) {
        const int w = canon.order_to_vertex[pos];
        if ((ties >> w) & 1U) chosen = w;
      }
      if (chosen != v &&
          detail::canonicalize(c, v).bits != detail::canonicalize(c, chosen).bits) {
        continue;
      }
    }
    if (std::find(kept.begin(), kept.end(), canon.bits) != kept.end()) continue;
    kept.push_back(canon.bits);
    visit(detail::relabel(c, canon).to_graph());
  }
}

void parallel_chunks(std::size_t count, int jobs,
                     const std::function<void(int, std::size_t, std::size_t)>& visit_chunk) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1))));
  if (workers == 1) {
    visit_chunk(0, 0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t first = count * w / workers;
    const std::size_t last = count * (w + 1) / workers;
    threads.emplace_back([&, w, first, last] {
      try {
        visit_chunk(static_cast<int>(w), first, last);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<Graph> connected_graphs(int n, const EnumerationOptions& opts) {
  check_enumeration_order(n, opts.allow_long);
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    std::vector<std::vector<Graph>> children(level.size());
    parallel_chunks(level.size(), opts.jobs, [&](int, std::size_t first, std::size_t last) {
      for (std::size_t i = first; i < last; ++i) {
        for_each_child(level[i], [&](const Graph& g) { children[i].push_back(g); });
      }
    });
    std::vector<Graph> next;
    for (auto& batch : children) {
      for (auto& g : batch) next.push_back(std::move(g));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> all_graphs(int n, const EnumerationOptions& opts) {
  check_enumeration_order(n, opts.allow_long);
  std::vector<std::vector<Graph>> by_order(n + 1);
  for (int k = 1; k <= n; ++k) by_order[k] = connected_graphs(k, opts);

  // Components as (order, index) pairs in non-increasing order, so each
  // multiset of component classes is produced once.
  std::vector<Graph> out;
  std::vector<std::pair<int, std::size_t>> parts;
  std::function<void(int, int, std::size_t)> extend = [&](int remaining, int max_order,
                                                         std::size_t max_index) {
    if (remaining == 0) {
      Graph g = by_order[parts.front().first][parts.front().second];
      for (std::size_t i = 1; i < parts.size(); ++i) {
        g = disjoint_union(g, by_order[parts[i].first][parts[i].second]);
      }
      out.push_back(canonical_graph(g));
      return;
    }
    for (int k = std::min(remaining, max_order); k >= 1; --k) {
      const std::size_t limit = k == max_order ? max_index : by_order[k].size() - 1;
      for (std::size_t i = 0; i <= limit; ++i) {
        parts.emplace_back(k, i);
        extend(remaining - k, k, i);
        parts.pop_back();
      }
    }
  };
  extend(n, n, by_order[n].size() - 1);
  return out;
}

}  // namespace abcmax
