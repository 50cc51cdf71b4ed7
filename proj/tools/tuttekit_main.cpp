// Command-line front end: exact Tutte/Potts polynomials, specializations,
// counts, growth constants, zero sets and dominant-eigenvalue boundaries for
// the built-in recursive graph families.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input,
// 3 guarded-domain refusal.

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tuttekit/asymptotics.hpp"
#include "tuttekit/clan_closedforms.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/loci.hpp"
#include "tuttekit/multigraph.hpp"
#include "tuttekit/spanning_trees.hpp"
#include "tuttekit/specializations.hpp"
#include "tuttekit/tutte_engine.hpp"
#include "tuttekit/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fmt6(double v) {
  std::ostringstream o;
  o << std::setprecision(6) << v;
  return o.str();
}

std::string fmt3(double v) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << v;
  return o.str();
}

struct Common {
  std::string format = "text";
  std::string out;
  int threads = 0;

  void add_to(CLI::App* sub, bool default_csv = false) {
    if (default_csv) format = "csv";
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", out, "write output to a file instead of stdout");
    sub->add_option("--threads", threads, "OpenMP thread count (output is identical for any value)");
  }

  void apply_threads() const {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
  }

  template <class Fn>
  void emit(Fn&& write) const {
    apply_threads();
    if (out.empty()) {
      write(std::cout);
    } else {
      std::ofstream f(out);
      if (!f) throw tk::parse_error("cannot open output file '" + out + "'");
      write(f);
    }
  }
};

struct GraphOpt {
  std::string family;
  std::string edges_file;

  void add_to(CLI::App* sub) {
    sub->add_option("--graph", family,
                    "family spec, e.g. clan:jn:r=3,m=4 | sq:Ly=2,Lx=5,BCy=F,BCx=P | circuit:m=7");
    sub->add_option("--edges", edges_file, "edge-list file (\"n m\" header, one edge per line)");
  }

  bool is_family() const { return !family.empty(); }

  tk::FamilySpec spec() const {
    if (!family.empty()) return tk::parse_family(family);
    if (edges_file.empty()) throw tk::parse_error("provide --graph or --edges");
    std::ifstream f(edges_file);
    if (!f) throw tk::parse_error("cannot open edge file '" + edges_file + "'");
    tk::FamilySpec fs;
    fs.kind = "edges";
    fs.graph = tk::Multigraph::read_edge_list(f);
    fs.canonical_text = edges_file;
    return fs;
  }
};

json bi_terms_json(const tk::BiPoly& p) {
  json terms = json::array();
  for (const auto& [ij, c] : p.sorted_terms())
    terms.push_back(json::array({ij.first, ij.second, c.get_str()}));
  return terms;
}

json uni_coeffs_json(const tk::UniPoly& p) {
  json terms = json::array();
  for (int k = p.degree(); k >= 0; --k) {
    if (p.coeff(k) == 0) continue;
    terms.push_back(json::array({k, tk::rat_to_string(p.coeff(k))}));
  }
  return terms;
}

void write_bipoly(std::ostream& os, const std::string& format, const tk::BiPoly& p,
                  const char* key, int n, int e, int k) {
  if (format == "text") {
    os << p.str() << "\n";
  } else if (format == "csv") {
    os << "i, j, coeff\n";
    for (const auto& [ij, c] : p.sorted_terms())
      os << ij.first << ", " << ij.second << ", " << c.get_str() << "\n";
  } else {
    json j;
    j["n"] = n;
    j["e"] = e;
    j["k"] = k;
    j[key] = bi_terms_json(p);
    os << j.dump(2) << "\n";
  }
}

void write_unipoly(std::ostream& os, const std::string& format, const tk::UniPoly& p,
                   const char* key) {
  if (format == "text") {
    os << p.str() << "\n";
  } else if (format == "csv") {
    os << "k, coeff\n";
    for (int k = p.degree(); k >= 0; --k)
      if (!(p.coeff(k) == 0))
        os << k << ", " << tk::rat_to_string(p.coeff(k)) << "\n";
  } else {
    json j;
    j["var"] = p.var();
    j[key] = uni_coeffs_json(p);
    os << j.dump(2) << "\n";
  }
}

void write_value(std::ostream& os, const std::string& format, const tk::Rat& v) {
  if (format == "json") {
    json j;
    j["value"] = tk::rat_to_string(v);
    os << j.dump(2) << "\n";
  } else {
    os << tk::rat_to_string(v) << "\n";
  }
}

std::pair<int, int> parse_range(const std::string& text, int lo_default, int hi_default) {
  if (text.empty()) return {lo_default, hi_default};
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw tk::parse_error("bad range '" + text + "', expected N or LO..HI");
  }
}

tk::Bc parse_bc(const std::string& s) {
  if (s == "F" || s == "f") return tk::Bc::Free;
  if (s == "P" || s == "p") return tk::Bc::Periodic;
  if (s == "T" || s == "t") return tk::Bc::Twisted;
  throw tk::parse_error("bad boundary condition '" + s + "', expected F, P or T");
}

// The univariate specialization named by `which`, using the family closed
// form when one applies and the general engine otherwise.
tk::UniPoly specialized_poly(const std::string& which, const tk::FamilySpec& fs,
                             const std::string& route) {
  bool closed_ok = fs.kind == "clan-jn";
  if (route == "closed" && !closed_ok)
    throw tk::guard_error("closed route: only clan:jn families have one");
  bool use_closed = closed_ok && route != "engine";
  if (which == "chromatic") {
    if (use_closed) return tk::chromatic_clan_poly(fs.r, fs.m);
    return tk::potts_frontier(fs.graph).polynomial.eval_partial_y(tk::Rat(-1));
  }
  if (which == "flow") {
    if (use_closed && fs.r == 2) return tk::flow_clan_poly(fs.m);
    if (route == "closed") throw tk::guard_error("closed flow route: r = 2 only");
    return tk::flow_from_tutte(tk::tutte_dc(fs.graph));
  }
  if (which == "reliability") {
    if (use_closed && fs.r == 2) return tk::reliability_clan_poly(fs.m);
    if (route == "closed") throw tk::guard_error("closed reliability route: r = 2 only");
    return tk::reliability_from_tutte(tk::tutte_dc(fs.graph));
  }
  throw tk::parse_error("unknown polynomial '" + which + "'");
}

// ---- locus provider selection -------------------------------------------

struct LocusFamily {
  tk::LambdaProvider provider;
  std::function<std::string(int)> label;  // identity index -> label
  tk::Window window;                      // default window
  std::vector<tk::LocusPoint> extra;      // pre-known special points
  std::vector<std::string> extra_kind;
};

LocusFamily make_locus_family(const std::string& family, const std::string& fix) {
  LocusFamily lf;
  if (family.rfind("clan:jn", 0) == 0) {
    int r = 0;
    auto pos = family.find("r=");
    if (pos != std::string::npos) r = std::atoi(family.c_str() + pos + 2);
    if (r < 1) throw tk::parse_error("locus family needs r>=1, e.g. clan:jn:r=3");
    if (fix.rfind("v=", 0) != 0)
      throw tk::parse_error("clan locus needs --fix v=<rational>, e.g. --fix v=-1");
    tk::Rat v = tk::rat_from_string(fix.substr(2));
    double vd = tk::to_double(v);
    if (v == -1) {
      lf.provider = [r](tk::Cx q) { return tk::clan_chromatic_lambda_values(r, q); };
    } else {
      if (r > 3) throw tk::guard_error("clan locus with v != -1: r <= 3 only");
      tk::Cx y(1 + vd, 0);
      lf.provider = [r, vd, y](tk::Cx q) {
        std::vector<tk::Cx> flat;
        for (const auto& blk : tk::clan_lambda_values(r, tk::Cx(1, 0) + q / vd, y))
          for (const auto& z : blk) flat.push_back(z);
        return flat;
      };
    }
    // identity index -> d level
    std::vector<int> level;
    if (v == -1) {
      for (int d = 0; d <= r; ++d) level.push_back(d);
    } else {
      auto counts = tk::structure_counts(r);
      for (int d = 0; d <= r; ++d)
        for (tk::Int c = 0; c < counts.n_by_level[d]; ++c) level.push_back(d);
    }
    lf.label = [level](int i) {
      if (i < 0 || i >= (int)level.size()) return std::string("?");
      return "d" + std::to_string(level[i]);
    };
    lf.window = {-1.0, 2.0 * r + 1.0, -(double)r - 0.5, (double)r + 0.5};
    return lf;
  }
  if (family.rfind("flow", 0) == 0) {
    lf.provider = [](tk::Cx q) { return tk::flow_lambda_values_r2(q); };
    static const char* names[5] = {"F201", "F202", "F211", "F212", "F22"};
    lf.label = [](int i) {
      return i >= 0 && i < 5 ? std::string(names[i]) : std::string("?");
    };
    lf.window = {-2.0, 6.0, -4.0, 4.0};
    tk::FlowLocusInfo fi = tk::flow_locus_info();
    for (double t : fi.real_crossings) {
      lf.extra.push_back({tk::Cx(t, 0), -1, -1});
      lf.extra_kind.push_back("crossing");
    }
    return lf;
  }
  if (family.rfind("reliability", 0) == 0) {
    lf.provider = [](tk::Cx p) { return tk::reliability_alpha_values(p); };
    static const char* names[3] = {"a1", "a2", "a3"};
    lf.label = [](int i) {
      return i >= 0 && i < 3 ? std::string(names[i]) : std::string("?");
    };
    lf.window = {0.4, 1.8, -0.8, 0.8};
    tk::ReliabilityArcs ra = tk::reliability_arcs();
    for (const auto& z : ra.endpoints) {
      lf.extra.push_back({z, -1, -1});
      lf.extra_kind.push_back("endpoint");
    }
    lf.extra.push_back({tk::Cx(ra.real_crossing, 0), -1, -1});
    lf.extra_kind.push_back("crossing");
    return lf;
  }
  throw tk::parse_error("unknown locus family '" + family +
                        "'; use clan:jn:r=N, flow:r=2 or reliability:r=2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph-polynomial toolkit for recursive families"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- tutte / potts ----
  auto* c_tutte = app.add_subcommand("tutte", "Tutte polynomial T(x, y)");
  auto* c_potts = app.add_subcommand("potts", "partition function Z(q, v)");
  Common tutte_common, potts_common;
  GraphOpt tutte_graph, potts_graph;
  std::string tutte_eval, potts_eval;
  std::string tutte_engine_name = "dc";
  tutte_common.add_to(c_tutte);
  tutte_graph.add_to(c_tutte);
  c_tutte->add_option("--eval", tutte_eval, "evaluate at rational \"x,y\"");
  c_tutte->add_option("--engine", tutte_engine_name, "dc | subset | frontier")
      ->check(CLI::IsMember({"dc", "subset", "frontier"}));
  potts_common.add_to(c_potts);
  potts_graph.add_to(c_potts);
  c_potts->add_option("--eval", potts_eval, "evaluate at rational \"q,v\"");

  auto parse_point = [](const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
      throw tk::parse_error("--eval expects \"a,b\", got '" + s + "'");
    return std::pair<tk::Rat, tk::Rat>{tk::rat_from_string(s.substr(0, comma)),
                                       tk::rat_from_string(s.substr(comma + 1))};
  };

  c_tutte->callback([&] {
    tk::FamilySpec fs = tutte_graph.spec();
    tk::TutteResult t = tutte_engine_name == "subset" ? tk::tutte_oracle(fs.graph)
                        : tutte_engine_name == "frontier"
                            ? tk::t_from_z(tk::potts_frontier(fs.graph))
                            : tk::tutte_dc(fs.graph);
    tutte_common.emit([&](std::ostream& os) {
      if (!tutte_eval.empty()) {
        auto [x, y] = parse_point(tutte_eval);
        write_value(os, tutte_common.format, t.polynomial.eval_exact(x, y));
      } else {
        write_bipoly(os, tutte_common.format, t.polynomial, "tutte", t.n, t.e, t.k);
      }
    });
  });

  c_potts->callback([&] {
    tk::FamilySpec fs = potts_graph.spec();
    tk::PottsResult z = tk::potts_frontier(fs.graph);
    potts_common.emit([&](std::ostream& os) {
      if (!potts_eval.empty()) {
        auto [q, v] = parse_point(potts_eval);
        write_value(os, potts_common.format, z.polynomial.eval_exact(q, v));
      } else {
        write_bipoly(os, potts_common.format, z.polynomial, "potts", z.n, z.e, z.k);
      }
    });
  });

  // ---- univariate specializations ----
  struct SpecCmd {
    const char* name;
    const char* help;
    Common common;
    GraphOpt graph;
    std::string route = "auto";
    std::string eval;
  };
  static SpecCmd specs[3] = {
      {"chromatic", "chromatic polynomial P(q)", {}, {}, "auto", ""},
      {"flow", "flow polynomial F(q)", {}, {}, "auto", ""},
      {"reliability", "all-terminal reliability R(p)", {}, {}, "auto", ""},
  };
  for (auto& sc : specs) {
    auto* cmd = app.add_subcommand(sc.name, sc.help);
    sc.common.add_to(cmd);
    sc.graph.add_to(cmd);
    cmd->add_option("--route", sc.route, "auto | closed | engine")
        ->check(CLI::IsMember({"auto", "closed", "engine"}));
    cmd->add_option("--eval", sc.eval, "evaluate at a rational point");
    cmd->callback([&sc] {
      tk::FamilySpec fs = sc.graph.spec();
      tk::UniPoly p = specialized_poly(sc.name, fs, sc.route);
      sc.common.emit([&](std::ostream& os) {
        if (!sc.eval.empty())
          write_value(os, sc.common.format, p.eval_exact(tk::rat_from_string(sc.eval)));
        else
          write_unipoly(os, sc.common.format, p, sc.name);
      });
    });
  }

  // ---- counts ----
  auto* c_counts = app.add_subcommand("counts", "spanning-structure and orientation counts");
  Common counts_common;
  GraphOpt counts_graph;
  int counts_s = 1;
  counts_common.add_to(c_counts);
  counts_graph.add_to(c_counts);
  c_counts->add_option("--s", counts_s, "also report |P(-s)| for this integer s");
  c_counts->callback([&] {
    tk::FamilySpec fs = counts_graph.spec();
    tk::Valuations v = tk::valuations(fs.graph, counts_s);
    counts_common.emit([&](std::ostream& os) {
      auto rows = std::vector<std::pair<const char*, tk::Int>>{
          {"spanning_trees", v.n_st},
          {"spanning_forests", v.n_sf},
          {"connected_spanning_subgraphs", v.n_cssg},
          {"spanning_subgraphs", v.n_ssg},
          {"acyclic_orientations", v.a},
          {"acyclic_orientation_weight_s", v.a_s},
      };
      if (counts_common.format == "json") {
        json j;
        j["n"] = fs.graph.n;
        j["e"] = (int)fs.graph.edges.size();
        j["s"] = v.s;
        for (const auto& [k2, val] : rows) j[k2] = val.get_str();
        os << j.dump(2) << "\n";
      } else if (counts_common.format == "csv") {
        os << "key, value\n";
        for (const auto& [k2, val] : rows) os << k2 << ", " << val.get_str() << "\n";
      } else {
        for (const auto& [k2, val] : rows) os << k2 << ": " << val.get_str() << "\n";
      }
    });
  });

  // ---- spanning-trees ----
  auto* c_nst = app.add_subcommand("spanning-trees", "spanning-tree counts (matrix-tree or closed form)");
  Common nst_common;
  GraphOpt nst_graph;
  std::string nst_family;
  int nst_r = 0, nst_m = 0;
  nst_common.add_to(c_nst);
  nst_graph.add_to(c_nst);
  c_nst->add_option("--family", nst_family, "closed form: jn | id (with --r, --m)")
      ->check(CLI::IsMember({"jn", "id"}));
  c_nst->add_option("--r", nst_r, "clique size for --family");
  c_nst->add_option("--m", nst_m, "ring length for --family");
  c_nst->callback([&] {
    tk::Int count;
    if (!nst_family.empty()) {
      if (nst_r < 1 || nst_m < 1)
        throw tk::parse_error("spanning-trees --family needs --r and --m");
      count = nst_family == "jn" ? tk::nst_clan_jn(nst_r, nst_m)
                                 : tk::nst_clan_id(nst_r, nst_m);
    } else {
      count = tk::kirchhoff_count(nst_graph.spec().graph);
    }
    nst_common.emit([&](std::ostream& os) {
      if (nst_common.format == "json") {
        json j;
        j["spanning_trees"] = count.get_str();
        os << j.dump(2) << "\n";
      } else {
        os << count.get_str() << "\n";
      }
    });
  });

  // ---- alpha ----
  auto* c_alpha = app.add_subcommand("alpha", "acyclic-orientation growth constant per site");
  Common alpha_common;
  std::string alpha_lattice, alpha_bcy = "F", alpha_route = "auto";
  int alpha_ly = 0, alpha_terms = 0, alpha_clan_r = 0;
  alpha_common.add_to(c_alpha);
  c_alpha->add_option("--lattice", alpha_lattice, "sq | tri")
      ->check(CLI::IsMember({"sq", "tri"}));
  c_alpha->add_option("--ly", alpha_ly, "strip width");
  c_alpha->add_option("--bcy", alpha_bcy, "transverse boundary, F | P");
  c_alpha->add_option("--route", alpha_route, "auto | fit | closed")
      ->check(CLI::IsMember({"auto", "fit", "closed"}));
  c_alpha->add_option("--terms", alpha_terms, "sequence length for the fit route");
  c_alpha->add_option("--clan-r", alpha_clan_r, "clan family instead of a lattice strip");
  c_alpha->callback([&] {
    tk::AlphaValue av;
    if (alpha_clan_r > 0) {
      av.lattice = "clan";
      av.ly = alpha_clan_r;
      av.alpha = tk::alpha_clan(alpha_clan_r);
      av.route = "closed";
    } else {
      if (alpha_lattice.empty() || alpha_ly < 1)
        throw tk::parse_error("alpha needs --lattice and --ly (or --clan-r)");
      tk::Bc bcy = parse_bc(alpha_bcy);
      if (alpha_route == "fit") {
        int M = alpha_terms > 0 ? alpha_terms : std::min(10 + 6 * alpha_ly, 36);
        av = tk::alpha_strip(alpha_lattice, alpha_ly, bcy, M);
      } else if (alpha_route == "closed") {
        av = tk::alpha_closed_form(alpha_lattice, alpha_ly, bcy);
      } else {
        try {
          av = tk::alpha_closed_form(alpha_lattice, alpha_ly, bcy);
        } catch (const tk::guard_error&) {
          int M = alpha_terms > 0 ? alpha_terms : std::min(10 + 6 * alpha_ly, 36);
          av = tk::alpha_strip(alpha_lattice, alpha_ly, bcy, M);
        }
      }
    }
    alpha_common.emit([&](std::ostream& os) {
      if (alpha_common.format == "json") {
        json j;
        j["lattice"] = av.lattice;
        j["ly"] = av.ly;
        j["bcy"] = av.bcy == tk::Bc::Periodic ? "P" : "F";
        j["alpha"] = av.alpha;
        j["route"] = av.route;
        os << j.dump(2) << "\n";
      } else if (alpha_common.format == "csv") {
        os << "lattice, Ly, BCy, alpha, route\n"
           << av.lattice << ", " << av.ly << ", "
           << (av.bcy == tk::Bc::Periodic ? "P" : "F") << ", " << fmt6(av.alpha)
           << ", " << av.route << "\n";
      } else {
        os << "alpha = " << fmt6(av.alpha) << " (" << av.route << ")\n";
      }
    });
  });

  // ---- zeros ----
  auto* c_zeros = app.add_subcommand("zeros", "zero set of a specialization");
  Common zeros_common;
  GraphOpt zeros_graph;
  std::string zeros_poly = "chromatic", zeros_route = "auto";
  zeros_common.add_to(c_zeros, /*default_csv=*/true);
  zeros_graph.add_to(c_zeros);
  c_zeros->add_option("--poly", zeros_poly, "chromatic | flow | reliability")
      ->check(CLI::IsMember({"chromatic", "flow", "reliability"}));
  c_zeros->add_option("--route", zeros_route, "auto | closed | engine")
      ->check(CLI::IsMember({"auto", "closed", "engine"}));
  c_zeros->callback([&] {
    tk::FamilySpec fs = zeros_graph.spec();
    tk::UniPoly p = specialized_poly(zeros_poly, fs, zeros_route);
    auto zs = tk::finite_zeros(p);
    zeros_common.emit([&](std::ostream& os) {
      if (zeros_common.format == "json") {
        json j;
        json arr = json::array();
        for (const auto& z : zs) arr.push_back(json::array({z.real(), z.imag()}));
        j["poly"] = zeros_poly;
        j["zeros"] = arr;
        os << j.dump(2) << "\n";
      } else {
        os << "re, im\n";
        for (const auto& z : zs)
          os << fmt6(z.real()) << ", " << fmt6(z.imag()) << "\n";
      }
    });
  });

  // ---- locus ----
  auto* c_locus = app.add_subcommand("locus", "dominant-eigenvalue equimodularity boundary");
  Common locus_common;
  std::string locus_family, locus_fix, locus_window;
  int locus_res = 400;
  locus_common.add_to(c_locus, /*default_csv=*/true);
  c_locus->add_option("--family", locus_family, "clan:jn:r=N | flow:r=2 | reliability:r=2")
      ->required();
  c_locus->add_option("--fix", locus_fix, "fixed parameter, e.g. v=-0.9");
  c_locus->add_option("--window", locus_window, "xlo:xhi:ylo:yhi");
  c_locus->add_option("--res", locus_res, "grid cells per axis");
  c_locus->callback([&] {
    LocusFamily lf = make_locus_family(locus_family, locus_fix);
    tk::Window w = lf.window;
    if (!locus_window.empty()) {
      std::vector<double> parts;
      std::stringstream ss(locus_window);
      std::string tok;
      while (std::getline(ss, tok, ':')) {
        try {
          parts.push_back(std::stod(tok));
        } catch (const std::exception&) {
          throw tk::parse_error("bad window component '" + tok + "'");
        }
      }
      if (parts.size() != 4)
        throw tk::parse_error("window must be xlo:xhi:ylo:yhi");
      w = {parts[0], parts[1], parts[2], parts[3]};
    }
    locus_common.apply_threads();
    tk::LocusOptions opt;
    opt.res = locus_res;
    auto pts = tk::equimodular_locus(lf.provider, w, opt);
    locus_common.emit([&](std::ostream& os) {
      if (locus_common.format == "json") {
        json arr = json::array();
        for (const auto& p : pts) {
          json row;
          row["re"] = p.q.real();
          row["im"] = p.q.imag();
          row["kind"] = "boundary";
          row["label"] = lf.label(p.id_a) + "|" + lf.label(p.id_b);
          arr.push_back(row);
        }
        for (size_t i = 0; i < lf.extra.size(); ++i) {
          json row;
          row["re"] = lf.extra[i].q.real();
          row["im"] = lf.extra[i].q.imag();
          row["kind"] = lf.extra_kind[i];
          row["label"] = "";
          arr.push_back(row);
        }
        os << arr.dump(2) << "\n";
      } else {
        os << "re, im, kind, label\n";
        for (const auto& p : pts)
          os << fmt6(p.q.real()) << ", " << fmt6(p.q.imag()) << ", boundary, "
             << lf.label(p.id_a) << "|" << lf.label(p.id_b) << "\n";
        for (size_t i = 0; i < lf.extra.size(); ++i)
          os << fmt6(lf.extra[i].q.real()) << ", " << fmt6(lf.extra[i].q.imag())
             << ", " << lf.extra_kind[i] << ", \n";
      }
    });
  });

  // ---- tables ----
  auto* c_tables = app.add_subcommand("tables", "published reference tables, regenerated");
  c_tables->require_subcommand(1);
  auto* t_span = c_tables->add_subcommand("spanning", "spanning-tree growth and bounds");
  auto* t_struct = c_tables->add_subcommand("structure", "eigenvalue structure counts");
  auto* t_alpha = c_tables->add_subcommand("alpha", "growth-constant catalog");
  Common span_common, struct_common, alpha_tab_common;
  std::string span_family = "jn", span_range, struct_range, alpha_tab_lattice = "sq";
  span_common.add_to(t_span, true);
  t_span->add_option("--family", span_family, "jn | id")->check(CLI::IsMember({"jn", "id"}));
  t_span->add_option("--r", span_range, "row range, e.g. 2..10");
  struct_common.add_to(t_struct, true);
  t_struct->add_option("--r", struct_range, "row range, e.g. 1..8");
  alpha_tab_common.add_to(t_alpha, true);
  t_alpha->add_option("--lattice", alpha_tab_lattice, "sq | tri")
      ->check(CLI::IsMember({"sq", "tri"}));

  t_span->callback([&] {
    auto [lo, hi] = parse_range(span_range, 2, 10);
    span_common.emit([&](std::ostream& os) {
      os << "r, ez, R1, R2\n";
      for (int r = lo; r <= hi; ++r) {
        tk::GrowthReport g = tk::growth_and_bounds(span_family, r);
        os << r << ", " << fmt3(g.ez) << ", " << fmt3(g.bound_deg) << ", "
           << fmt3(g.bound_c) << "\n";
      }
    });
  });
  t_struct->callback([&] {
    auto [lo, hi] = parse_range(struct_range, 1, 8);
    struct_common.emit([&](std::ostream& os) {
      for (int r = lo; r <= hi; ++r) {
        tk::StructureCounts sc = tk::structure_counts(r);
        os << r;
        for (const auto& v : sc.n_by_level) os << ", " << v.get_str();
        os << ", " << sc.total.get_str() << "\n";
      }
    });
  });
  t_alpha->callback([&] {
    alpha_tab_common.emit([&](std::ostream& os) {
      os << "Ly, BCy, alpha, route\n";
      for (const auto& av : tk::alpha_catalog(alpha_tab_lattice)) {
        if (av.ly == 0)
          os << "inf, P, " << fmt6(av.alpha) << ", " << av.route << "\n";
        else
          os << av.ly << ", " << (av.bcy == tk::Bc::Periodic ? "P" : "F") << ", "
             << fmt6(av.alpha) << ", " << av.route << "\n";
      }
    });
  });

  // ---- verify ----
  auto* c_verify = app.add_subcommand("verify", "cross-route consistency suites");
  std::string verify_suite = "all";
  int verify_threads = 0;
  c_verify->add_option("--suite", verify_suite, "suite name, or 'all'");
  c_verify->add_option("--threads", verify_threads, "OpenMP thread count");
  c_verify->callback([&] {
#ifdef _OPENMP
    if (verify_threads > 0) omp_set_num_threads(verify_threads);
#endif
    if (tk::run_verify_suite(verify_suite, std::cout) > 0) exit_code = 1;
  });

  // A value like "-1:7:-3.5:3.5" or "-0.9" given as a separate token would be
  // taken for an option name; glue such values onto their option with '='.
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  std::vector<std::string> merged;
  for (size_t i = 0; i < args.size(); ++i) {
    bool takes_value = args[i].rfind("--", 0) == 0 && args[i].find('=') == std::string::npos;
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 &&
        args[i + 1][0] == '-' &&
        (std::isdigit((unsigned char)args[i + 1][1]) || args[i + 1][1] == '.')) {
      merged.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      merged.push_back(args[i]);
    }
  }
  std::vector<const char*> cargv;
  cargv.push_back(argv[0]);
  for (const auto& a : merged) cargv.push_back(a.c_str());

  try {
    app.parse((int)cargv.size(), cargv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const tk::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n"
              << "run 'tuttekit --help' or 'tuttekit <subcommand> --help' for usage\n";
    return 2;
  } catch (const tk::convergence_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const tk::guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
