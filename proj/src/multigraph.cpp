#include "tuttekit/multigraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tk {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smaller label as representative
    return true;
  }
};

}  // namespace

void Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw guard_error("add_edge: endpoint out of range");
  if (u > v) std::swap(u, v);
  edges.emplace_back(u, v);
}

Multigraph Multigraph::delete_edge(int e) const {
  if (e < 0 || e >= num_edges()) throw guard_error("delete_edge: no such edge");
  Multigraph g(n);
  g.edges.reserve(edges.size() - 1);
  for (int i = 0; i < num_edges(); ++i)
    if (i != e) g.edges.push_back(edges[i]);
  return g;
}

Multigraph Multigraph::contract_edge(int e) const {
  if (e < 0 || e >= num_edges()) throw guard_error("contract_edge: no such edge");
  if (is_loop(e)) throw guard_error("contract_edge: cannot contract a loop");
  const int a = edges[e].first, b = edges[e].second;  // a < b; b disappears
  Multigraph g(n - 1);
  g.edges.reserve(edges.size() - 1);
  auto relabel = [&](int v) {
    if (v == b) return a;
    return v > b ? v - 1 : v;
  };
  for (int i = 0; i < num_edges(); ++i) {
    if (i == e) continue;
    g.add_edge(relabel(edges[i].first), relabel(edges[i].second));
  }
  return g;
}

std::vector<int> Multigraph::component_labels() const {
  UnionFind uf(n);
  for (const auto& [u, v] : edges) uf.unite(u, v);
  std::vector<int> label(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (label[r] < 0) label[r] = next++;
    label[v] = label[r];
  }
  return label;
}

int Multigraph::components() const {
  if (n == 0) return 0;
  auto lab = component_labels();
  return 1 + *std::max_element(lab.begin(), lab.end());
}

bool Multigraph::is_bridge(int e) const {
  if (is_loop(e)) return false;
  return delete_edge(e).components() > components();
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(n, 0);
  for (const auto& [u, v] : edges) {
    d[u]++;
    d[v]++;
  }
  return d;
}

std::vector<std::vector<Int>> Multigraph::laplacian() const {
  std::vector<std::vector<Int>> q(n, std::vector<Int>(n, 0));
  for (const auto& [u, v] : edges) {
    if (u == v) continue;  // loop: +2 degree, +2 adjacency diagonal, net zero
    q[u][u] += 1;
    q[v][v] += 1;
    q[u][v] -= 1;
    q[v][u] -= 1;
  }
  return q;
}

std::vector<Multigraph> Multigraph::split_components() const {
  auto lab = component_labels();
  int k = n == 0 ? 0 : 1 + *std::max_element(lab.begin(), lab.end());
  std::vector<int> local(n), count(k, 0);
  for (int v = 0; v < n; ++v) local[v] = count[lab[v]]++;
  std::vector<Multigraph> parts;
  parts.reserve(k);
  for (int c = 0; c < k; ++c) parts.emplace_back(count[c]);
  for (const auto& [u, v] : edges) parts[lab[u]].add_edge(local[u], local[v]);
  return parts;
}

Multigraph Multigraph::read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw parse_error("edge list: expected header \"n m\"");
  if (n < 0 || m < 0) throw parse_error("edge list: negative counts");
  Multigraph g(n);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw parse_error("edge list: truncated edge line");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      std::ostringstream os;
      os << "edge list: endpoint out of range on edge " << i << " (" << u << " " << v
         << ", n=" << n << ")";
      throw parse_error(os.str());
    }
    g.add_edge(u, v);
  }
  return g;
}

void Multigraph::write_edge_list(std::ostream& out) const {
  out << n << " " << num_edges() << "\n";
  for (const auto& [u, v] : edges) out << u << " " << v << "\n";
}

}  // namespace tk
