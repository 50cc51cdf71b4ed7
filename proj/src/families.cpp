#include "tuttekit/families.hpp"

#include <map>
#include <sstream>

namespace tk {

namespace {

void check_clan_args(int r, int m) {
  if (r < 1 || m < 1) throw guard_error("clan family: r >= 1 and m >= 1 required");
}

Multigraph clan_ring(int r, int m, bool join_all, bool twist_last) {
  check_clan_args(r, m);
  Multigraph g(r * m);
  for (int b = 0; b < m; ++b) {
    int base = b * r;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) g.add_edge(base + i, base + j);
    int nb = ((b + 1) % m) * r;
    bool rev = twist_last && b == m - 1;
    if (join_all) {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g.add_edge(base + i, nb + (rev ? r - 1 - j : j));
    } else {
      for (int i = 0; i < r; ++i) g.add_edge(base + i, nb + (rev ? r - 1 - i : i));
    }
  }
  return g;
}

}  // namespace

Multigraph clan_cyclic(int r, int m) { return clan_ring(r, m, true, false); }
Multigraph clan_cyclic_twisted(int r, int m) { return clan_ring(r, m, true, true); }
Multigraph clan_identity(int r, int m) { return clan_ring(r, m, false, false); }

namespace {

Multigraph strip(int ly, int lx, Bc bcy, Bc bcx, bool diagonals) {
  if (ly < 1 || lx < 1) throw guard_error("strip: Ly >= 1 and Lx >= 1 required");
  if (bcy == Bc::Twisted) throw guard_error("strip: transverse boundary must be F or P");
  Multigraph g(ly * lx);
  auto at = [&](int col, int row) { return col * ly + row; };
  for (int j = 0; j < lx; ++j) {
    // Vertical (transverse) edges of column j; periodic adds the wrap edge,
    // which for Ly = 2 duplicates the rung and for Ly = 1 is a loop.
    for (int i = 0; i + 1 < ly; ++i) g.add_edge(at(j, i), at(j, i + 1));
    if (bcy == Bc::Periodic) g.add_edge(at(j, ly - 1), at(j, 0));
    if (j + 1 < lx) {
      for (int i = 0; i < ly; ++i) g.add_edge(at(j, i), at(j + 1, i));
      if (diagonals) {
        for (int i = 0; i + 1 < ly; ++i) g.add_edge(at(j, i + 1), at(j + 1, i));
        // Wrap face between rows Ly-1 and 0 gets its diagonal too.
        if (bcy == Bc::Periodic) g.add_edge(at(j, 0), at(j + 1, ly - 1));
      }
    }
  }
  if (bcx != Bc::Free) {
    auto sigma = [&](int i) { return bcx == Bc::Twisted ? ly - 1 - i : i; };
    for (int i = 0; i < ly; ++i) g.add_edge(at(lx - 1, i), at(0, sigma(i)));
    if (diagonals) {
      for (int i = 0; i + 1 < ly; ++i) g.add_edge(at(lx - 1, i + 1), at(0, sigma(i)));
      if (bcy == Bc::Periodic) g.add_edge(at(lx - 1, 0), at(0, sigma(ly - 1)));
    }
  }
  return g;
}

}  // namespace

Multigraph sq_strip(int ly, int lx, Bc bcy, Bc bcx) {
  return strip(ly, lx, bcy, bcx, false);
}

Multigraph tri_strip(int ly, int lx, Bc bcy, Bc bcx) {
  return strip(ly, lx, bcy, bcx, true);
}

Multigraph circuit(int m) {
  if (m < 3) throw guard_error("circuit: m >= 3 required");
  Multigraph g(m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  g.add_edge(m - 1, 0);
  return g;
}

Multigraph tree_path(int n) {
  if (n < 1) throw guard_error("tree: n >= 1 required");
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph complete(int r) {
  if (r < 1) throw guard_error("complete: r >= 1 required");
  Multigraph g(r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) g.add_edge(i, j);
  return g;
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw parse_error("family parameters: expected key=value, got \"" + item + "\"");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

int need_int(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw parse_error("family parameters: missing " + key);
  try {
    size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw parse_error("family parameters: bad integer for " + key + ": " + it->second);
  }
}

Bc need_bc(const std::map<std::string, std::string>& kv, const std::string& key,
           bool allow_twist) {
  auto it = kv.find(key);
  if (it == kv.end()) throw parse_error("family parameters: missing " + key);
  if (it->second == "F") return Bc::Free;
  if (it->second == "P") return Bc::Periodic;
  if (it->second == "T" && allow_twist) return Bc::Twisted;
  throw parse_error("family parameters: " + key + " must be F, P" +
                    (allow_twist ? ", or T" : "") + " (got " + it->second + ")");
}

std::string bc_text(Bc b) {
  return b == Bc::Free ? "F" : (b == Bc::Periodic ? "P" : "T");
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  FamilySpec fs;
  auto c1 = text.find(':');
  std::string head = text.substr(0, c1);
  std::string rest = c1 == std::string::npos ? "" : text.substr(c1 + 1);
  if (head == "clan") {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos)
      throw parse_error("clan family: expected clan:jn:... or clan:id:...");
    std::string link = rest.substr(0, c2);
    auto kv = parse_kv(rest.substr(c2 + 1));
    fs.r = need_int(kv, "r");
    fs.m = need_int(kv, "m");
    if (link == "jn") {
      fs.kind = "clan-jn";
      fs.graph = clan_cyclic(fs.r, fs.m);
    } else if (link == "id") {
      fs.kind = "clan-id";
      fs.graph = clan_identity(fs.r, fs.m);
    } else {
      throw parse_error("clan family: linkage must be jn or id (got " + link + ")");
    }
    fs.canonical_text = "clan:" + link + ":r=" + std::to_string(fs.r) +
                        ",m=" + std::to_string(fs.m);
  } else if (head == "sq" || head == "tri") {
    auto kv = parse_kv(rest);
    fs.kind = head;
    fs.ly = need_int(kv, "Ly");
    fs.lx = need_int(kv, "Lx");
    fs.bcy = need_bc(kv, "BCy", false);
    fs.bcx = need_bc(kv, "BCx", true);
    fs.graph = head == "sq" ? sq_strip(fs.ly, fs.lx, fs.bcy, fs.bcx)
                            : tri_strip(fs.ly, fs.lx, fs.bcy, fs.bcx);
    fs.canonical_text = head + ":Ly=" + std::to_string(fs.ly) +
                        ",Lx=" + std::to_string(fs.lx) + ",BCy=" + bc_text(fs.bcy) +
                        ",BCx=" + bc_text(fs.bcx);
  } else if (head == "circuit") {
    auto kv = parse_kv(rest);
    fs.kind = "circuit";
    fs.m = need_int(kv, "m");
    fs.graph = circuit(fs.m);
    fs.canonical_text = "circuit:m=" + std::to_string(fs.m);
  } else if (head == "tree") {
    auto kv = parse_kv(rest);
    fs.kind = "tree";
    fs.n = need_int(kv, "n");
    fs.graph = tree_path(fs.n);
    fs.canonical_text = "tree:n=" + std::to_string(fs.n);
  } else if (head == "complete") {
    auto kv = parse_kv(rest);
    fs.kind = "complete";
    fs.r = need_int(kv, "r");
    fs.graph = complete(fs.r);
    fs.canonical_text = "complete:r=" + std::to_string(fs.r);
  } else {
    throw parse_error("unknown family \"" + head +
                      "\" (expected clan, sq, tri, circuit, tree, or complete)");
  }
  fs.n = fs.graph.n;
  return fs;
}

}  // namespace tk
