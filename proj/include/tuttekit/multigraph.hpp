#pragma once
// Finite undirected multigraphs with loops, the substrate for all the
// polynomial machinery.  Vertices are 0..n-1.  Edges form an indexed sequence
// so that deletion/contraction can address one specific parallel copy.

#include <iosfwd>
#include <utility>
#include <vector>

#include "tuttekit/common.hpp"

namespace tk {

struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // endpoints stored with u <= v

  Multigraph() = default;
  explicit Multigraph(int n_) : n(n_) {}

  int num_vertices() const { return n; }
  int num_edges() const { return (int)edges.size(); }

  void add_edge(int u, int v);

  bool is_loop(int e) const { return edges[e].first == edges[e].second; }
  bool is_bridge(int e) const;

  // Both return a new graph; remaining edges keep their relative order.
  Multigraph delete_edge(int e) const;
  // Merges the two endpoints into the smaller label; labels above the removed
  // vertex shift down by one.  Contracting a loop is rejected.
  Multigraph contract_edge(int e) const;

  std::vector<int> component_labels() const;
  int components() const;
  bool connected() const { return components() == 1; }

  // c(G) = |E| + k(G) - |V|, the cycle rank.
  int corank() const { return num_edges() + components() - n; }

  // Loops count twice, the graph-theoretic degree.
  std::vector<int> degrees() const;

  // Q = D - A.  A loop adds 2 to both the degree and the adjacency diagonal,
  // so loops cancel; a single vertex with a loop yields [[0]].
  std::vector<std::vector<Int>> laplacian() const;

  // Sub-multigraphs per component; vertex labels densified preserving order.
  std::vector<Multigraph> split_components() const;

  // Format: first line "n m", then m lines "u v" (0-based; loops as "u u").
  static Multigraph read_edge_list(std::istream& in);
  void write_edge_list(std::ostream& out) const;
};

}  // namespace tk
