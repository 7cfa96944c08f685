#include "abcmax/families.hpp"

#include <stdexcept>

namespace abcmax {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void check_order(int n, int lo, const char* family) {
  if (n < lo || n > Graph::kMaxOrder) {
    bad(std::string(family) + ": order " + std::to_string(n) + " out of range");
  }
}

}  // namespace

std::string GraphFamily::name() const {
  switch (kind) {
    case FamilyKind::complete: return "K_" + std::to_string(n);
    case FamilyKind::kn_k: return "K_" + std::to_string(n) + "(" + std::to_string(k) + ")";
    case FamilyKind::turan: return "T_{" + std::to_string(n) + "," + std::to_string(l) + "}";
    case FamilyKind::bridge_cliques:
      return "B(" + std::to_string(x) + "," + std::to_string(y) + ")";
    case FamilyKind::cycle: return "C_" + std::to_string(n);
    case FamilyKind::path: return "P_" + std::to_string(n);
    case FamilyKind::star: return "S_" + std::to_string(n);
    case FamilyKind::empty: return "E_" + std::to_string(n);
  }
  return {};
}

void validate(const GraphFamily& f) {
  switch (f.kind) {
    case FamilyKind::complete:
    case FamilyKind::path:
    case FamilyKind::star:
    case FamilyKind::empty: check_order(f.n, 1, "family"); break;
    case FamilyKind::cycle: check_order(f.n, 3, "cycle"); break;
    case FamilyKind::kn_k:
      check_order(f.n, 2, "kn_k");
      if (f.k < 1 || f.k > f.n - 1) bad("kn_k: k must satisfy 1 <= k <= n-1");
      break;
    case FamilyKind::turan:
      check_order(f.n, 1, "turan");
      if (f.l < 1 || f.l > f.n) bad("turan: l must satisfy 1 <= l <= n");
      break;
    case FamilyKind::bridge_cliques:
      if (f.x < 1 || f.y < 1) bad("bridge_cliques: x and y must be >= 1");
      check_order(f.x + f.y, 2, "bridge_cliques");
      break;
  }
}

Graph construct(const GraphFamily& f) {
  validate(f);
  switch (f.kind) {
    case FamilyKind::complete: return complete_graph(f.n);
    case FamilyKind::kn_k: return kn_k(f.n, f.k);
    case FamilyKind::turan: return turan(f.n, f.l);
    case FamilyKind::bridge_cliques: return bridge_cliques(f.x, f.y);
    case FamilyKind::cycle: return cycle_graph(f.n);
    case FamilyKind::path: return path_graph(f.n);
    case FamilyKind::star: return star_graph(f.n);
    case FamilyKind::empty: return empty_graph(f.n);
  }
  bad("unknown family");
}

Graph complete_graph(int n) {
  check_order(n, 1, "complete");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.insert_edge(u, v);
  }
  return g;
}

Graph kn_k(int n, int k) {
  validate({.kind = FamilyKind::kn_k, .n = n, .k = k});
  if (k == n - 1) return complete_graph(n);
  return join(complete_graph(k), disjoint_union(complete_graph(1), complete_graph(n - k - 1)));
}

std::vector<int> turan_parts(int n, int l) {
  validate({.kind = FamilyKind::turan, .n = n, .l = l});
  std::vector<int> parts(l, n / l);
  for (int i = 0; i < n % l; ++i) ++parts[i];
  return parts;
}

Graph turan(int n, int l) {
  const auto parts = turan_parts(n, l);
  std::vector<int> part_of(n);
  int v = 0;
  for (int p = 0; p < l; ++p) {
    for (int i = 0; i < parts[p]; ++i) part_of[v++] = p;
  }
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (part_of[a] != part_of[b]) g.insert_edge(a, b);
    }
  }
  return g;
}

Graph bridge_cliques(int x, int y) {
  validate({.kind = FamilyKind::bridge_cliques, .x = x, .y = y});
  Graph g = disjoint_union(complete_graph(x), complete_graph(y));
  g.insert_edge(0, x);
  return g;
}

Graph cycle_graph(int n) {
  check_order(n, 3, "cycle");
  Graph g = path_graph(n);
  g.insert_edge(0, n - 1);
  return g;
}

Graph path_graph(int n) {
  check_order(n, 1, "path");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.insert_edge(v, v + 1);
  return g;
}

Graph star_graph(int n) {
  check_order(n, 1, "star");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.insert_edge(0, v);
  return g;
}

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "complete") return FamilyKind::complete;
  if (text == "knk" || text == "kn_k") return FamilyKind::kn_k;
  if (text == "turan") return FamilyKind::turan;
  if (text == "bridge" || text == "bridge_cliques") return FamilyKind::bridge_cliques;
  if (text == "cycle") return FamilyKind::cycle;
  if (text == "path") return FamilyKind::path;
  if (text == "star") return FamilyKind::star;
  if (text == "empty") return FamilyKind::empty;
  bad("unknown family '" + std::string(text) + "'");
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::kn_k: return "knk";
    case FamilyKind::turan: return "turan";
    case FamilyKind::bridge_cliques: return "bridge";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::path: return "path";
    case FamilyKind::star: return "star";
    case FamilyKind::empty: return "empty";
  }
  return "?";
}

}  // namespace abcmax
