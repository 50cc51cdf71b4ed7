#include "tuttekit/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tk {

namespace {

// Individualization-refinement canonicalization.  Colors are refined by the
// multiset of (neighbor color, multiplicity) pairs; while some color class
// has more than one vertex, each member is tried as a distinguished vertex
// and the lexicographically smallest resulting edge code wins.  Exhaustive
// over all branches, so isomorphic graphs always agree; a work cap guards
// against fully symmetric worst cases.
struct Canon {
  int n;
  std::vector<std::vector<int>> mult;  // mult[u][v]; loops on the diagonal
  std::vector<int> loops;
  long budget = 20000;
  std::string best;

  explicit Canon(const Multigraph& g) : n(g.n), mult(g.n, std::vector<int>(g.n, 0)), loops(g.n, 0) {
    for (const auto& [u, v] : g.edges) {
      if (u == v) {
        loops[u]++;
        mult[u][u]++;
      } else {
        mult[u][v]++;
        mult[v][u]++;
      }
    }
  }

  // Refine to a stable coloring; returns number of colors.
  int refine(std::vector<int>& color) const {
    int ncolors = 1 + *std::max_element(color.begin(), color.end());
    for (;;) {
      // Signature: own color, loop count, sorted (neighbor color, mult) list.
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.push_back(color[v]);
        s.push_back(loops[v]);
        std::vector<std::pair<int, int>> nb;
        for (int u = 0; u < n; ++u)
          if (u != v && mult[v][u] > 0) nb.emplace_back(color[u], mult[v][u]);
        std::sort(nb.begin(), nb.end());
        for (auto& [c, m] : nb) {
          s.push_back(c);
          s.push_back(m);
        }
        sig[v] = {std::move(s), v};
      }
      std::map<std::vector<int>, int> ids;
      for (auto& [s, v] : sig) ids.emplace(s, 0);
      int next = 0;
      for (auto& [s, id] : ids) id = next++;
      std::vector<int> nc(n);
      for (auto& [s, v] : sig) nc[v] = ids[s];
      if (next == ncolors && nc == color) return ncolors;
      color = std::move(nc);
      ncolors = next;
    }
  }

  std::string encode(const std::vector<int>& color) const {
    // Discrete coloring: color is a permutation rank; order vertices by it.
    std::vector<int> pos(n);
    for (int v = 0; v < n; ++v) pos[color[v]] = v;
    std::string out;
    out.reserve((size_t)n * n * 2);
    out += std::to_string(n);
    out += ':';
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        out += std::to_string(mult[pos[i]][pos[j]]);
        out += ',';
      }
    return out;
  }

  void search(std::vector<int> color) {
    if (--budget < 0) throw guard_error("canonical_key: refinement search cap exceeded");
    int ncolors = refine(color);
    if (ncolors == n) {
      std::string code = encode(color);
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    // Smallest non-singleton color class, by color id.
    std::vector<int> count(ncolors, 0);
    for (int v = 0; v < n; ++v) count[color[v]]++;
    int target = -1;
    for (int c = 0; c < ncolors; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      auto child = color;
      for (int u = 0; u < n; ++u)
        if (child[u] >= target && u != v) child[u]++;  // v keeps `target`, rest shift up
      search(std::move(child));
    }
  }
};

}  // namespace

std::string canonical_key(const Multigraph& g) {
  if (g.n > 16) throw guard_error("canonical_key: supported for n <= 16 only");
  if (g.n == 0) return "0:";
  Canon c(g);
  // Initial colors from (degree, loop count) so refinement starts sharp.
  std::vector<std::pair<std::pair<int, int>, int>> init(g.n);
  auto deg = g.degrees();
  for (int v = 0; v < g.n; ++v) init[v] = {{deg[v], c.loops[v]}, v};
  std::map<std::pair<int, int>, int> ids;
  for (auto& [k, v] : init) ids.emplace(k, 0);
  int next = 0;
  for (auto& [k, id] : ids) id = next++;
  std::vector<int> color(g.n);
  for (auto& [k, v] : init) color[v] = ids[k];
  c.search(std::move(color));
  return c.best;
}

}  // namespace tk
