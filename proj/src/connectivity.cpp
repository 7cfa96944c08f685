#include "abcmax/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace abcmax {

namespace {

// Residual network with paired arcs; augmenting paths by BFS.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : arcs_(nodes) {}

  void add_pair(int u, int v, int cap_uv, int cap_vu) {
    arcs_[u].push_back({v, cap_uv, cap_uv, static_cast<int>(arcs_[v].size())});
    arcs_[v].push_back({u, cap_vu, cap_vu, static_cast<int>(arcs_[u].size()) - 1});
  }

  void reset() {
    for (auto& out : arcs_) {
      for (auto& a : out) a.cap = a.initial;
    }
  }

  // Max flow from s to t, stopping once it reaches limit.
  int max_flow(int s, int t, int limit) {
    int flow = 0;
    const int nodes = static_cast<int>(arcs_.size());
    std::vector<int> parent_node(nodes), parent_arc(nodes);
    while (flow < limit) {
      std::fill(parent_node.begin(), parent_node.end(), -1);
      parent_node[s] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && parent_node[t] < 0) {
        const int u = q.front();
        q.pop();
        for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
          const Arc& a = arcs_[u][i];
          if (a.cap > 0 && parent_node[a.to] < 0) {
            parent_node[a.to] = u;
            parent_arc[a.to] = i;
            q.push(a.to);
          }
        }
      }
      if (parent_node[t] < 0) break;
      int push = limit - flow;
      for (int v = t; v != s; v = parent_node[v]) {
        push = std::min(push, arcs_[parent_node[v]][parent_arc[v]].cap);
      }
      for (int v = t; v != s; v = parent_node[v]) {
        Arc& a = arcs_[parent_node[v]][parent_arc[v]];
        a.cap -= push;
        arcs_[v][a.rev].cap += push;
      }
      flow += push;
    }
    return flow;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(arcs_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const Arc& a : arcs_[u]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int initial;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs_;
};

int min_degree_vertex(const Graph& g) {
  const auto deg = g.degrees();
  return static_cast<int>(std::min_element(deg.begin(), deg.end()) - deg.begin());
}

int edge_connectivity_impl(const Graph& g, std::vector<std::pair<int, int>>* cut) {
  const int n = g.order();
  if (n == 1 || !is_connected(g)) return 0;

  const int v_min = min_degree_vertex(g);
  int best = g.degree(v_min);
  if (cut) {
    cut->clear();
    for (int u : g.neighbors(v_min)) cut->emplace_back(std::min(u, v_min), std::max(u, v_min));
  }

  FlowNetwork net(n);
  g.for_each_edge([&](int u, int v) { net.add_pair(u, v, 1, 1); });
  for (int t = 1; t < n && best > 1; ++t) {
    net.reset();
    const int f = net.max_flow(0, t, best);
    if (f < best) {
      best = f;
      if (cut) {
        const auto side = net.reachable(0);
        cut->clear();
        g.for_each_edge([&](int u, int v) {
          if (side[u] != side[v]) cut->emplace_back(u, v);
        });
      }
    }
  }
  return best;
}

int vertex_connectivity_impl(const Graph& g, std::vector<int>* cut) {
  const int n = g.order();
  if (cut) cut->clear();
  if (n == 1 || !is_connected(g)) return 0;
  if (g.is_complete()) return n - 1;

  const int v_min = min_degree_vertex(g);
  int best = g.degree(v_min);
  if (cut) *cut = g.neighbors(v_min);

  // v_in = 2v, v_out = 2v + 1.
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add_pair(2 * v, 2 * v + 1, 1, 0);
  g.for_each_edge([&](int u, int v) {
    net.add_pair(2 * u + 1, 2 * v, n, 0);
    net.add_pair(2 * v + 1, 2 * u, n, 0);
  });

  for (int s = 0; s < n && best > 0; ++s) {
    // Some minimum separator avoids one of the first best+1 vertices.
    if (s > best) break;
    for (int t = s + 1; t < n && best > 0; ++t) {
      if (g.adjacent(s, t)) continue;
      net.reset();
      const int f = net.max_flow(2 * s + 1, 2 * t, best);
      if (f < best) {
        best = f;
        if (cut) {
          const auto side = net.reachable(2 * s + 1);
          cut->clear();
          for (int v = 0; v < n; ++v) {
            if (side[2 * v] && !side[2 * v + 1]) cut->push_back(v);
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

int edge_connectivity(const Graph& g) { return edge_connectivity_impl(g, nullptr); }

int vertex_connectivity(const Graph& g) { return vertex_connectivity_impl(g, nullptr); }

ConnectivityResult connectivity(const Graph& g) {
  ConnectivityResult r;
  r.lambda = edge_connectivity_impl(g, &r.edge_cut);
  r.kappa = vertex_connectivity_impl(g, &r.vertex_cut);
  return r;
}

}  // namespace abcmax
