#include "tuttekit/tutte_engine.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "tuttekit/canonical.hpp"

namespace tk {

namespace {

// ------------------------------------------------------------ subset kernel

// Tally over all edge subsets of (k(A) - k(G), c(A)) as a count matrix.
// Union-find over a fixed-size array; |E| <= 20 so masks fit in a uint32.
struct SubsetTally {
  // tally[dk][c]
  std::vector<std::vector<long long>> t;
  SubsetTally(int n, int m) : t(n + 1, std::vector<long long>(m + 1, 0)) {}
  void merge(const SubsetTally& o) {
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = 0; j < t[i].size(); ++j) t[i][j] += o.t[i][j];
  }
};

inline int uf_find(int* parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

int subset_components(const Multigraph& g, unsigned mask, int* parent) {
  for (int v = 0; v < g.n; ++v) parent[v] = v;
  int k = g.n;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!(mask >> e & 1U)) continue;
    int a = uf_find(parent, g.edges[e].first), b = uf_find(parent, g.edges[e].second);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      k--;
    }
  }
  return k;
}

void tally_range(const Multigraph& g, unsigned lo, unsigned hi, int kg, SubsetTally& out) {
  int parent[24];
  for (unsigned mask = lo; mask < hi; ++mask) {
    int k = subset_components(g, mask, parent);
    int c = __builtin_popcount(mask) + k - g.n;
    out.t[k - kg][c]++;
  }
}

SubsetTally subset_tally(const Multigraph& g, bool parallel) {
  if (g.num_edges() > 20) throw guard_error("subset oracle: |E| <= 20 required");
  const int kg = g.components();
  const unsigned total = 1U << g.num_edges();
  SubsetTally tally(g.n, g.num_edges());
  if (!parallel || g.num_edges() < 12) {
    tally_range(g, 0, total, kg, tally);
    return tally;
  }
  int nth = omp_get_max_threads();
  std::vector<SubsetTally> partial(nth, SubsetTally(g.n, g.num_edges()));
#pragma omp parallel num_threads(nth)
  {
    int id = omp_get_thread_num();
    int used = omp_get_num_threads();
    unsigned chunk = (total + used - 1) / used;
    unsigned lo = std::min<unsigned long long>((unsigned long long)id * chunk, total);
    unsigned hi = std::min<unsigned long long>((unsigned long long)lo + chunk, total);
    tally_range(g, lo, hi, kg, partial[id]);
  }
  for (const auto& p : partial) tally.merge(p);  // fixed order: deterministic
  return tally;
}

BiPoly tutte_from_tally(const SubsetTally& tally) {
  // T = sum tally[dk][c] (x-1)^dk (y-1)^c, expanded to the monomial basis.
  BiPoly t("x", "y");
  for (size_t dk = 0; dk < tally.t.size(); ++dk)
    for (size_t c = 0; c < tally.t[dk].size(); ++c) {
      long long cnt = tally.t[dk][c];
      if (cnt == 0) continue;
      for (size_t a = 0; a <= dk; ++a)
        for (size_t b = 0; b <= c; ++b) {
          Int coeff = Int((long)cnt) * binom_int(dk, a) * binom_int(c, b);
          if ((dk - a + c - b) % 2) coeff = -coeff;
          t.add_term((int)a, (int)b, coeff);
        }
    }
  return t;
}

BiPoly potts_from_tally(const SubsetTally& tally, int kg, int n) {
  // Z = sum tally[dk][c] q^{dk+kg} v^{c+n-dk-kg}   (since |A| = c + n - k(A)).
  BiPoly z("q", "v");
  for (size_t dk = 0; dk < tally.t.size(); ++dk)
    for (size_t c = 0; c < tally.t[dk].size(); ++c) {
      long long cnt = tally.t[dk][c];
      if (cnt == 0) continue;
      z.add_term((int)dk + kg, (int)(c + n - dk) - kg, Int((long)cnt));
    }
  return z;
}

// --------------------------------------------------- deletion-contraction

struct DcContext {
  std::unordered_map<std::string, BiPoly> memo;
  long long nodes = 0;
};

BiPoly dc_connected(const Multigraph& g, DcContext& ctx);

BiPoly dc_graph(const Multigraph& g, DcContext& ctx) {
  BiPoly prod = BiPoly::constant(1, "x", "y");
  for (const auto& part : g.split_components()) prod = prod * dc_connected(part, ctx);
  return prod;
}

BiPoly dc_connected(const Multigraph& g, DcContext& ctx) {
  ctx.nodes++;
  // Peel loops (factor y each) and bridges (factor x each, contracting).
  int nloops = 0;
  Multigraph core(g.n);
  for (const auto& [u, v] : g.edges) {
    if (u == v)
      nloops++;
    else
      core.add_edge(u, v);
  }
  int nbridges = 0;
  for (;;) {
    // Contracting a bridge neither creates loops nor changes other bridges,
    // but relabels: restart the scan after each contraction.
    bool found = false;
    for (int e = 0; e < core.num_edges() && !found; ++e) {
      if (core.is_bridge(e)) {
        core = core.contract_edge(e);
        nbridges++;
        found = true;
      }
    }
    if (!found) break;
  }
  BiPoly factor =
      BiPoly::monomial(nbridges, nloops, 1, "x", "y");  // x^bridges y^loops
  if (core.num_edges() == 0) return factor;

  std::string key;
  bool memoize = core.n <= 16;
  if (memoize) {
    try {
      key = canonical_key(core);
    } catch (const guard_error&) {
      memoize = false;  // symmetric blowup: press on without the memo
    }
  }
  if (memoize) {
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return factor * it->second;
  }

  // Every remaining edge is a non-loop non-bridge; take the highest index.
  int e = core.num_edges() - 1;
  BiPoly result = dc_graph(core.delete_edge(e), ctx) + dc_graph(core.contract_edge(e), ctx);
  if (memoize) ctx.memo.emplace(std::move(key), result);
  return factor * result;
}

// ------------------------------------------------------------- frontier DP

// State: set partition of the active vertices, encoded in restricted-growth
// form over the frontier ordered by vertex label.  Weights live in the ring R.
template <class R>
struct FkOps {
  R q, v, one;
};

template <class R>
R fk_run(const Multigraph& g, const FkOps<R>& ops) {
  const int n = g.n, m = g.num_edges();
  std::vector<int> first(n, -1), last(n, -1);
  for (int e = 0; e < m; ++e) {
    auto [u, w] = g.edges[e];
    if (first[u] < 0) first[u] = e;
    if (first[w] < 0) first[w] = e;
    last[u] = e;
    last[w] = e;
  }
  int isolated = 0;
  for (int v = 0; v < n; ++v)
    if (first[v] < 0) isolated++;

  using Key = std::vector<int>;  // blocks[i] = block id of active[i], RGF-normalized
  std::vector<int> active;       // ascending vertex labels
  std::map<Key, R> states;
  states.emplace(Key{}, ops.one);

  auto normalize = [](Key k) {
    std::map<int, int> remap;
    int next = 0;
    for (int& b : k) {
      auto [it, fresh] = remap.emplace(b, next);
      if (fresh) next++;
      b = it->second;
    }
    return k;
  };

  for (int e = 0; e < m; ++e) {
    auto [u, w] = g.edges[e];
    // Introduce endpoints new to the frontier as singleton blocks.
    for (int v : {u, w}) {
      if (first[v] != e) continue;
      int pos = (int)(std::lower_bound(active.begin(), active.end(), v) - active.begin());
      if (pos < (int)active.size() && active[pos] == v) continue;  // loop: second visit
      active.insert(active.begin() + pos, v);
      std::map<Key, R> next;
      for (auto& [key, wt] : states) {
        Key nk = key;
        int fresh = 0;
        for (int b : key) fresh = std::max(fresh, b + 1);
        nk.insert(nk.begin() + pos, fresh);
        nk = normalize(std::move(nk));
        auto [it, ins] = next.emplace(std::move(nk), wt);
        if (!ins) it->second = it->second + wt;
      }
      states = std::move(next);
    }

    std::map<Key, R> next;
    if (u == w) {
      // Loop: skip or take; taking cannot merge blocks, so weight (1 + v).
      R f = ops.one + ops.v;
      for (auto& [key, wt] : states) {
        auto [it, ins] = next.emplace(key, wt * f);
        if (!ins) it->second = it->second + wt * f;
      }
    } else {
      int pu = (int)(std::lower_bound(active.begin(), active.end(), u) - active.begin());
      int pw = (int)(std::lower_bound(active.begin(), active.end(), w) - active.begin());
      for (auto& [key, wt] : states) {
        {  // skip
          auto [it, ins] = next.emplace(key, wt);
          if (!ins) it->second = it->second + wt;
        }
        {  // take: multiply by v, merge the two blocks
          Key nk = key;
          int bu = nk[pu], bw = nk[pw];
          if (bu != bw) {
            int keep = std::min(bu, bw), drop = std::max(bu, bw);
            for (int& b : nk)
              if (b == drop) b = keep;
            nk = normalize(std::move(nk));
          }
          R tw = wt * ops.v;
          auto [it, ins] = next.emplace(std::move(nk), tw);
          if (!ins) it->second = it->second + tw;
        }
      }
    }
    states = std::move(next);

    // Retire endpoints whose last incident edge this was.
    for (int v : {u, w}) {
      if (last[v] != e) continue;
      auto pos_it = std::lower_bound(active.begin(), active.end(), v);
      if (pos_it == active.end() || *pos_it != v) continue;  // loop second pass
      int pos = (int)(pos_it - active.begin());
      active.erase(pos_it);
      std::map<Key, R> next2;
      for (auto& [key, wt] : states) {
        int b = key[pos];
        bool alone = std::count(key.begin(), key.end(), b) == 1;
        Key nk = key;
        nk.erase(nk.begin() + pos);
        nk = normalize(std::move(nk));
        R nw = alone ? wt * ops.q : wt;  // a block dying means a finished component
        auto [it, ins] = next2.emplace(std::move(nk), nw);
        if (!ins) it->second = it->second + nw;
      }
      states = std::move(next2);
    }
    if (states.size() > 2000000) throw guard_error("frontier DP: state explosion");
  }

  R acc = ops.one - ops.one;  // additive zero of the ring
  for (auto& [key, wt] : states) {
    if (!key.empty()) throw guard_error("frontier DP: dangling frontier state");
    acc = acc + wt;
  }
  for (int i = 0; i < isolated; ++i) acc = acc * ops.q;
  return acc;
}

}  // namespace

// ------------------------------------------------------------- public API

TutteResult tutte_oracle_serial(const Multigraph& g) {
  auto tally = subset_tally(g, false);
  return {tutte_from_tally(tally), g.n, g.num_edges(), g.components(), "oracle"};
}

TutteResult tutte_oracle(const Multigraph& g) {
  auto tally = subset_tally(g, true);
  return {tutte_from_tally(tally), g.n, g.num_edges(), g.components(), "oracle"};
}

PottsResult potts_oracle_serial(const Multigraph& g) {
  auto tally = subset_tally(g, false);
  return {potts_from_tally(tally, g.components(), g.n), g.n, g.num_edges(),
          g.components()};
}

PottsResult potts_oracle(const Multigraph& g) {
  auto tally = subset_tally(g, true);
  return {potts_from_tally(tally, g.components(), g.n), g.n, g.num_edges(),
          g.components()};
}

TutteResult tutte_dc(const Multigraph& g) {
  DcContext ctx;
  BiPoly t = dc_graph(g, ctx);
  return {std::move(t), g.n, g.num_edges(), g.components(), "recursion"};
}

PottsResult z_from_t(const BiPoly& t, int k, int n) {
  if (t.var_x() != "x" || t.var_y() != "y")
    throw guard_error("z_from_t: expected a polynomial in (x, y)");
  // Rewrite T in the shifted basis (x-1)^s (y-1)^t:
  //   a_st = sum_{i>=s, j>=t} c_ij C(i,s) C(j,t).
  // Then Z = sum a_st q^{s+k} v^{t+n-s-k}.
  std::map<BiPoly::Key, Int> shifted;
  for (const auto& [key, c] : t.terms()) {
    auto [i, j] = key;
    for (int s = 0; s <= i; ++s)
      for (int tt = 0; tt <= j; ++tt) {
        Int add = c * binom_int(i, s) * binom_int(j, tt);
        auto [it, fresh] = shifted.emplace(BiPoly::Key{s, tt}, add);
        if (!fresh) it->second += add;
      }
  }
  BiPoly z("q", "v");
  for (const auto& [key, a] : shifted) {
    if (a == 0) continue;
    auto [s, tt] = key;
    int qe = s + k, ve = tt + n - s - k;
    if (qe < 0 || ve < 0)
      throw guard_error("z_from_t: inexact division (negative exponent), "
                        "inputs do not describe a graph polynomial");
    z.add_term(qe, ve, a);
  }
  return {std::move(z), n, -1, k};
}

TutteResult t_from_z(const BiPoly& z, int k, int n) {
  if (z.var_x() != "q" || z.var_y() != "v")
    throw guard_error("t_from_z: expected a polynomial in (q, v)");
  // Z = sum b_uw q^u v^w  ->  a_st with s = u - k, t = w - n + u; then expand
  // T = sum a_st (x-1)^s (y-1)^t into monomials.
  BiPoly t("x", "y");
  for (const auto& [key, b] : z.terms()) {
    auto [u, w] = key;
    int s = u - k, tt = w - n + u;
    if (s < 0 || tt < 0)
      throw guard_error("t_from_z: inexact division (negative exponent), "
                        "input is not a graph partition function for these (k, n)");
    for (int a = 0; a <= s; ++a)
      for (int bb = 0; bb <= tt; ++bb) {
        Int coeff = b * binom_int(s, a) * binom_int(tt, bb);
        if ((s - a + tt - bb) % 2) coeff = -coeff;
        t.add_term(a, bb, coeff);
      }
  }
  return {std::move(t), n, -1, k, "recursion"};
}

PottsResult z_from_t(const TutteResult& t) {
  auto r = z_from_t(t.polynomial, t.k, t.n);
  r.e = t.e;
  return r;
}

TutteResult t_from_z(const PottsResult& z) {
  auto r = t_from_z(z.polynomial, z.k, z.n);
  r.e = z.e;
  return r;
}

PottsResult potts_frontier(const Multigraph& g) {
  FkOps<BiPoly> ops{BiPoly::monomial(1, 0, 1, "q", "v"),
                    BiPoly::monomial(0, 1, 1, "q", "v"),
                    BiPoly::constant(1, "q", "v")};
  BiPoly z = fk_run(g, ops);
  return {std::move(z), g.n, g.num_edges(), g.components()};
}

Rat potts_frontier_value(const Multigraph& g, const Rat& q0, const Rat& v0) {
  FkOps<Rat> ops{q0, v0, Rat(1)};
  return fk_run(g, ops);
}

Int acyclic_count_frontier(const Multigraph& g) {
  // a(G) = (-1)^n Z(G; -1, -1).
  Rat z = potts_frontier_value(g, Rat(-1), Rat(-1));
  Rat a = (g.n % 2) ? Rat(-z) : z;
  if (a.get_den() != 1) throw guard_error("acyclic count: non-integer result");
  return a.get_num();
}

}  // namespace tk
