#include <algorithm>
#include <functional>

#include "immcensus/census.hpp"

namespace immcensus {

namespace {

struct Adj {
  int to;
  int edge;
};

std::vector<std::vector<Adj>> adjacency(int nodes, const std::vector<std::pair<int, int>>& edges, int skip = -1) {
  std::vector<std::vector<Adj>> adj(static_cast<std::size_t>(nodes));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (e == skip) continue;
    auto [u, v] = edges[e];
    adj[u].push_back({v, e});
    if (u != v) adj[v].push_back({u, e});
  }
  return adj;
}

// Lowlink DFS on a multigraph; parallel edges are told apart by edge id.
struct Lowlink {
  const std::vector<std::vector<Adj>>& adj;
  std::vector<int> disc, low;
  std::vector<bool> cut;
  std::vector<int> bridges;
  int timer = 0;

  explicit Lowlink(const std::vector<std::vector<Adj>>& a)
      : adj(a), disc(a.size(), -1), low(a.size(), 0), cut(a.size(), false) {}

  void run(int root) {
    // iterative to stay safe on long paths
    struct Frame {
      int v, parent_edge;
      std::size_t next;
      int children;
    };
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [to, e] = adj[f.v][f.next++];
        if (e == f.parent_edge || to == f.v) continue;
        if (disc[to] >= 0) {
          low[f.v] = std::min(low[f.v], disc[to]);
        } else {
          disc[to] = low[to] = timer++;
          ++f.children;
          stack.push_back({to, e, 0, 0});
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) cut[done.v] = true;
        break;
      }
      auto& p = stack.back();
      low[p.v] = std::min(low[p.v], low[done.v]);
      if (low[done.v] > disc[p.v]) bridges.push_back(done.parent_edge);
      if (stack.size() > 1 && low[done.v] >= disc[p.v]) cut[p.v] = true;
    }
  }
};

}  // namespace

CurveGraph curve_graph(Method m, int n, const Perm& rep) {
  CurveGraph g;
  g.vertices = n;
  auto r = rep.raw();
  switch (m) {
    case Method::X: {
      for (int h = 0; h < 4 * n; ++h)
        if (h < r[h]) g.edges.emplace_back(h / 4, r[h] / 4);
      break;
    }
    case Method::Y:
    case Method::UDihedral:
    case Method::UCyclic: {
      Perm inv = inverse(rep);
      for (int e = 0; e < 2 * n; ++e) g.edges.emplace_back(inv.raw()[e] / 2, e / 2);
      break;
    }
    case Method::Z: {
      Perm inv = inverse(rep);
      for (int e = 0; e < 2 * n; ++e) g.edges.emplace_back(inv.raw()[e] / 2, e / 2);
      break;
    }
  }
  return g;
}

bool has_cut_vertex(const CurveGraph& g) {
  // subdivide every edge so that loops and parallel edges count
  const int n = g.vertices;
  std::vector<std::pair<int, int>> sub;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    sub.emplace_back(g.edges[e].first, n + e);
    sub.emplace_back(n + e, g.edges[e].second);
  }
  auto adj = adjacency(n + static_cast<int>(g.edges.size()), sub);
  Lowlink ll(adj);
  ll.run(0);
  for (int v = 0; v < n; ++v)
    if (ll.cut[v]) return true;
  return false;
}

bool has_separating_edge_pair(const CurveGraph& g) {
  const int edges = static_cast<int>(g.edges.size());
  for (int e = 0; e < edges; ++e) {
    auto adj = adjacency(g.vertices, g.edges, e);
    Lowlink ll(adj);
    ll.run(0);
    // a bridge of G - e, together with e, cuts G into two parts with crossings
    if (!ll.bridges.empty()) return true;
    if (std::find(ll.disc.begin(), ll.disc.end(), -1) != ll.disc.end()) return true;  // e was a bridge itself
  }
  return false;
}

bool filter_kink_free(const ImmersionClass& c) {
  const int n = c.n;
  auto r = c.rep.raw();
  switch (c.method) {
    case Method::X: {
      Perm faces = compose(x_sigma(n), c.rep);
      for (int i = 0; i < 4 * n; ++i)
        if (faces.raw()[i] == i) return false;
      return true;
    }
    case Method::Y:
    case Method::UDihedral:
    case Method::UCyclic: {
      for (int i = 0; i < 2 * n; ++i)
        if (r[i] == i || r[i ^ 1] == i) return false;
      return true;
    }
    case Method::Z: {
      Perm psi = psi_of(ZCode{n, c.rep});
      for (int i = 0; i < 4 * n; ++i)
        if (psi.raw()[i] == i) return false;
      return true;
    }
  }
  return false;
}

PrimeFlags filter_prime(const ImmersionClass& c) {
  CurveGraph g = curve_graph(c.method, c.n, c.rep);
  return {!has_cut_vertex(g), !has_separating_edge_pair(g)};
}

}  // namespace immcensus
