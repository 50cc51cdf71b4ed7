#include "tuttekit/specializations.hpp"

#include <omp.h>

#include <algorithm>
#include <vector>

namespace tk {

namespace {

// T(1-q, 0) style partial substitutions: keep one axis of the coefficient
// grid, substitute a linear polynomial on the other.
UniPoly substitute_axis(const BiPoly& t, bool x_axis, const UniPoly& repl) {
  // x_axis: substitute x := repl(q), keep only terms with j == 0 (y = 0).
  UniPoly acc(repl.var());
  int maxdeg = 0;
  for (const auto& [k, c] : t.terms()) maxdeg = std::max(maxdeg, x_axis ? k.first : k.second);
  std::vector<UniPoly> powers(maxdeg + 1, UniPoly::constant(repl.var(), 1));
  for (int i = 1; i <= maxdeg; ++i) powers[i] = powers[i - 1] * repl;
  for (const auto& [k, c] : t.terms()) {
    auto [i, j] = k;
    if (x_axis) {
      if (j != 0) continue;
      acc = acc + powers[i].scaled(Rat(c));
    } else {
      if (i != 0) continue;
      acc = acc + powers[j].scaled(Rat(c));
    }
  }
  return acc;
}

}  // namespace

UniPoly chromatic_from_tutte(const TutteResult& t) {
  UniPoly one_minus_q("q", {Rat(1), Rat(-1)});
  UniPoly body = substitute_axis(t.polynomial, true, one_minus_q);
  // (-1)^{n-k} q^k * body
  UniPoly qk = UniPoly::monomial("q", t.k, Rat(1));
  UniPoly p = qk * body;
  if ((t.n - t.k) % 2) p = -p;
  return p;
}

UniPoly chromatic(const Multigraph& g) {
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) return UniPoly("q");  // loop: no proper colorings at all
  return chromatic_from_tutte(tutte_dc(g));
}

UniPoly flow_from_tutte(const TutteResult& t) {
  UniPoly one_minus_q("q", {Rat(1), Rat(-1)});
  UniPoly body = substitute_axis(t.polynomial, false, one_minus_q);
  if ((t.e - t.n + t.k) % 2) body = -body;
  return body;
}

UniPoly flow_poly(const Multigraph& g) { return flow_from_tutte(tutte_dc(g)); }

UniPoly reliability_from_tutte(const TutteResult& t) {
  if (t.k != 1) throw guard_error("reliability: graph must be connected");
  // R = p^{n-1} sum_j d_j (1-p)^{c - j} with d_j = sum_i coeff(i, j), where the
  // y-degree of T is at most the cycle rank c = |E| - n + 1.
  int c = t.e - t.n + 1;
  std::vector<Rat> d(c + 1, Rat(0));
  for (const auto& [k, coeff] : t.polynomial.terms()) {
    if (k.second > c)
      throw guard_error("reliability: y-degree exceeds cycle rank (not a graph?)");
    d[k.second] += Rat(coeff);
  }
  UniPoly one_minus_p("p", {Rat(1), Rat(-1)});
  UniPoly acc("p");
  for (int j = 0; j <= c; ++j) {
    if (d[j] == 0) continue;
    acc = acc + one_minus_p.pow(c - j).scaled(d[j]);
  }
  return UniPoly::monomial("p", t.n - 1, Rat(1)) * acc;
}

UniPoly reliability(const Multigraph& g) {
  if (!g.connected()) throw guard_error("reliability: graph must be connected");
  return reliability_from_tutte(tutte_dc(g));
}

Valuations valuations(const Multigraph& g, long s) {
  TutteResult t = tutte_dc(g);
  Valuations v;
  auto ev = [&](long x0, long y0) {
    Rat r = t.polynomial.eval_exact(Rat(x0), Rat(y0));
    return r.get_num();  // integer by construction
  };
  v.n_st = ev(1, 1);
  v.n_sf = ev(2, 1);
  v.n_cssg = ev(1, 2);
  v.n_ssg = pow_int(Int(2), g.num_edges());
  v.a = ev(2, 0);
  v.s = s;
  UniPoly p = chromatic_from_tutte(t);
  Rat as = p.eval_exact(Rat(-s));
  if (g.n % 2) as = -as;
  v.a_s = as.get_num();
  return v;
}

// ----------------------------------------------------------------- oracles

namespace {

long long chromatic_count_rec(const Multigraph& g,
                              const std::vector<std::vector<int>>& adj_earlier, int v,
                              int q0, std::vector<int>& color) {
  if (v == g.n) return 1;
  long long total = 0;
  for (int c = 0; c < q0; ++c) {
    bool ok = true;
    for (int u : adj_earlier[v])
      if (color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    total += chromatic_count_rec(g, adj_earlier, v + 1, q0, color);
  }
  color[v] = -1;
  return total;
}

std::vector<std::vector<int>> earlier_neighbors(const Multigraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;  // loops handled by the caller
    adj[std::max(u, v)].push_back(std::min(u, v));
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

}  // namespace

Int chromatic_oracle_serial(const Multigraph& g, int q0) {
  if (g.n > 10) throw guard_error("chromatic oracle: n <= 10 required");
  if (q0 < 0 || q0 > 6) throw guard_error("chromatic oracle: 0 <= q0 <= 6 required");
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) return 0;
  if (g.n == 0) return 1;
  auto adj = earlier_neighbors(g);
  std::vector<int> color(g.n, -1);
  return Int((long)chromatic_count_rec(g, adj, 0, q0, color));
}

Int chromatic_oracle(const Multigraph& g, int q0) {
  if (g.n > 10) throw guard_error("chromatic oracle: n <= 10 required");
  if (q0 < 0 || q0 > 6) throw guard_error("chromatic oracle: 0 <= q0 <= 6 required");
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) return 0;
  if (g.n == 0) return 1;
  if (g.n == 1) return Int((long)q0);
  auto adj = earlier_neighbors(g);
  // Parallelize over the joint colors of the first two vertices.
  long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (int cc = 0; cc < q0 * q0; ++cc) {
    int c0 = cc / q0, c1 = cc % q0;
    std::vector<int> color(g.n, -1);
    color[0] = c0;
    bool ok = true;
    for (int u : adj[1])
      if (color[u] == c1) ok = false;
    if (!ok) continue;
    color[1] = c1;
    total += chromatic_count_rec(g, adj, 2, q0, color);
  }
  return Int((long)total);
}

namespace {

long long flow_count_rec(const Multigraph& g, const std::vector<int>& done_at,
                         const std::vector<int>& dir, int e, int q0,
                         std::vector<int>& net) {
  if (e == g.num_edges()) return 1;
  auto [u, v] = g.edges[e];
  if (u == v) return 0;  // loops are factored out by the caller
  long long total = 0;
  for (int f = 1; f < q0; ++f) {
    int s = dir[e] ? -f : f;
    net[u] += s;
    net[v] -= s;
    bool ok = true;
    if (done_at[u] == e && net[u] % q0 != 0) ok = false;
    if (ok && done_at[v] == e && net[v] % q0 != 0) ok = false;
    if (ok) total += flow_count_rec(g, done_at, dir, e + 1, q0, net);
    net[u] -= s;
    net[v] += s;
  }
  return total;
}

}  // namespace

Int flow_oracle_oriented(const Multigraph& g, int q0, unsigned flip_mask) {
  if (g.num_edges() > 14) throw guard_error("flow oracle: |E| <= 14 required");
  if (q0 < 1 || q0 > 5) throw guard_error("flow oracle: 1 <= q0 <= 5 required");
  // Loops admit any of the q0-1 nonzero values independently.
  Multigraph core(g.n);
  int nloops = 0;
  std::vector<int> dir;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) {
      nloops++;
    } else {
      core.add_edge(g.edges[e].first, g.edges[e].second);
      dir.push_back(flip_mask >> e & 1U);
    }
  }
  std::vector<int> done_at(core.n, -1);
  for (int e = 0; e < core.num_edges(); ++e) {
    done_at[core.edges[e].first] = e;
    done_at[core.edges[e].second] = e;
  }
  // A vertex no edge touches imposes nothing; a touched vertex must balance.
  std::vector<int> net(core.n, 0);
  long long count = core.num_edges() == 0
                        ? 1
                        : flow_count_rec(core, done_at, dir, 0, q0, net);
  // Isolated-in-core vertices with degree 0 are fine; but the zero-edge case
  // above already counts exactly one (empty) flow.
  return Int((long)count) * pow_int(Int(q0 - 1), nloops);
}

Int flow_oracle(const Multigraph& g, int q0) { return flow_oracle_oriented(g, q0, 0); }

Rat reliability_oracle_serial(const Multigraph& g, const Rat& p0) {
  if (g.num_edges() > 16) throw guard_error("reliability oracle: |E| <= 16 required");
  if (!g.connected()) throw guard_error("reliability oracle: graph must be connected");
  const int m = g.num_edges();
  std::vector<Rat> pk(m + 1, Rat(1)), qk(m + 1, Rat(1));
  for (int i = 1; i <= m; ++i) {
    pk[i] = pk[i - 1] * p0;
    qk[i] = qk[i - 1] * (Rat(1) - p0);
  }
  Rat total(0);
  int parent[24];
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    int k = g.n;
    for (int e = 0; e < m; ++e) {
      if (!(mask >> e & 1U)) continue;
      int a = parent[g.edges[e].first], b = parent[g.edges[e].second];
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      while (parent[b] != b) b = parent[b] = parent[parent[b]];
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        k--;
      }
    }
    if (k == 1) total += pk[__builtin_popcount(mask)] * qk[m - __builtin_popcount(mask)];
  }
  return total;
}

Rat reliability_oracle(const Multigraph& g, const Rat& p0) {
  if (g.num_edges() > 16) throw guard_error("reliability oracle: |E| <= 16 required");
  if (!g.connected()) throw guard_error("reliability oracle: graph must be connected");
  const int m = g.num_edges();
  std::vector<Rat> pk(m + 1, Rat(1)), qk(m + 1, Rat(1));
  for (int i = 1; i <= m; ++i) {
    pk[i] = pk[i - 1] * p0;
    qk[i] = qk[i - 1] * (Rat(1) - p0);
  }
  const unsigned total_masks = 1U << m;
  int nth = omp_get_max_threads();
  std::vector<Rat> partial(nth, Rat(0));
#pragma omp parallel num_threads(nth)
  {
    int id = omp_get_thread_num();
    int used = omp_get_num_threads();
    unsigned chunk = (total_masks + used - 1) / used;
    unsigned lo = (unsigned)std::min<unsigned long long>((unsigned long long)id * chunk,
                                                         total_masks);
    unsigned hi =
        (unsigned)std::min<unsigned long long>((unsigned long long)lo + chunk, total_masks);
    int parent[24];
    Rat local(0);
    for (unsigned mask = lo; mask < hi; ++mask) {
      for (int v = 0; v < g.n; ++v) parent[v] = v;
      int k = g.n;
      for (int e = 0; e < m; ++e) {
        if (!(mask >> e & 1U)) continue;
        int a = parent[g.edges[e].first], b = parent[g.edges[e].second];
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        while (parent[b] != b) b = parent[b] = parent[parent[b]];
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
          k--;
        }
      }
      if (k == 1)
        local += pk[__builtin_popcount(mask)] * qk[m - __builtin_popcount(mask)];
    }
    partial[id] = local;
  }
  Rat result(0);
  for (const auto& r : partial) result += r;  // fixed order
  return result;
}

namespace {

// Orientation given by mask bit per edge; cycle detection by iterative DFS.
bool orientation_acyclic(const Multigraph& g, unsigned mask) {
  const int n = g.n;
  std::vector<std::vector<int>> out(n);
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) return false;  // a loop is a cycle under any orientation
    if (mask >> e & 1U)
      out[v].push_back(u);
    else
      out[u].push_back(v);
  }
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<int, size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < out[v].size()) {
        int w = out[v][idx++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

Int acyclic_oracle_serial(const Multigraph& g) {
  if (g.num_edges() > 16) throw guard_error("acyclic oracle: |E| <= 16 required");
  long long count = 0;
  for (unsigned mask = 0; mask < (1U << g.num_edges()); ++mask)
    if (orientation_acyclic(g, mask)) count++;
  return Int((long)count);
}

Int acyclic_oracle(const Multigraph& g) {
  if (g.num_edges() > 16) throw guard_error("acyclic oracle: |E| <= 16 required");
  const unsigned total = 1U << g.num_edges();
  long long count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (unsigned mask = 0; mask < total; ++mask)
    if (orientation_acyclic(g, mask)) count++;
  return Int((long)count);
}

}  // namespace tk
