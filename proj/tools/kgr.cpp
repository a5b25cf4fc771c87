#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "kgr/cnp.hpp"
#include "kgr/exel.hpp"
#include "kgr/oracle.hpp"
#include "kgr/parse.hpp"

using namespace kgr;

namespace {

struct Common {
  std::string graph_path;
  std::string cap_text;
  std::string bound_text;
  std::string format = "text";
  int s_extent = 1;
  size_t fmax = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_caps = true) {
  cmd->add_option("graph", c.graph_path, "graph definition file")->required();
  if (with_caps) {
    cmd->add_option("--cap", c.cap_text, "degree cap, e.g. 1,1");
    cmd->add_option("--bound", c.bound_text, "exhaustiveness/emptiness degree bound");
    cmd->add_option("--fmax", c.fmax, "max size of avoidance sets in test families");
    cmd->add_option("--s-range", c.s_extent, "extent of the large-s scan box");
  }
  cmd->add_option("--format", c.format, "text | records")->check(CLI::IsMember({"text", "records"}));
}

DegreeVector cap_of(const KGraph& g, const Common& c, int dflt = 1) {
  if (c.cap_text.empty()) return DegreeVector(std::vector<int>(g.rank(), dflt));
  return parse_degree(c.cap_text, g.rank());
}

std::optional<DegreeVector> bound_of(const KGraph& g, const Common& c) {
  if (c.bound_text.empty()) return std::nullopt;
  return parse_degree(c.bound_text, g.rank());
}

CheckOptions options_of(const KGraph& g, const Common& c) {
  return CheckOptions{cap_of(g, c), c.fmax, c.s_extent, bound_of(g, c)};
}

int emit(const Report& rep, const Common& c) {
  std::cout << (c.format == "records" ? render_records(rep) : render_text(rep));
  return rep.ok() ? 0 : 1;
}

std::vector<PathId> parse_path_list(const KGraph& g, const std::string& text) {
  std::vector<PathId> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(g.parse_path(cur));
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else if (!isspace(static_cast<unsigned char>(ch)))
      cur += ch;
  }
  flush();
  return out;
}

// set literal: [lambda] or [lambda - nu1,nu2]
BasicSet parse_basic_literal(const KGraph& g, std::string text) {
  auto strip = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  text = strip(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
    text = strip(text.substr(1, text.size() - 2));
  std::string base = text, avoid;
  auto dash = text.find(" - ");
  if (dash != std::string::npos) {
    base = strip(text.substr(0, dash));
    avoid = text.substr(dash + 3);
  }
  auto b = make_basic(g, g.parse_path(base), parse_path_list(g, avoid));
  if (!b) throw Error(Errc::bad_argument, "set literal '" + text + "' denotes the empty set");
  return *b;
}

int find_vertex(const KGraph& g, const std::string& id) {
  auto v = g.vertex_index(id);
  if (!v) throw Error(Errc::bad_argument, "unknown vertex '" + id + "'");
  return *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic calculus on finitely-aligned k-graph boundary-path spaces"};
  app.require_subcommand(1);

  Common c;

  auto* validate = app.add_subcommand("validate", "check the factorization data of a graph file");
  add_common(validate, c, false);

  auto* mce = app.add_subcommand("mce", "minimal common extensions of two paths");
  std::string path1, path2;
  add_common(mce, c, false);
  mce->add_option("lambda", path1)->required();
  mce->add_option("mu", path2)->required();

  auto* extc = app.add_subcommand("ext", "extension set Ext(lambda; E)");
  std::string ext_path, ext_set;
  add_common(extc, c, false);
  extc->add_option("lambda", ext_path)->required();
  extc->add_option("set", ext_set, "comma-separated paths")->required();

  auto* exh = app.add_subcommand("exhaustive", "test a finite set for exhaustiveness");
  std::string exh_vertex, exh_set;
  add_common(exh, c);
  exh->add_option("--vertex", exh_vertex)->required();
  exh->add_option("--set", exh_set, "comma-separated paths")->required();

  auto* setalg = app.add_subcommand("set-algebra", "cylinder-set operations and law checks");
  std::string op, lit_a, lit_b, slice_text;
  int avoid_color = 0;
  bool check_laws = false;
  add_common(setalg, c);
  setalg->add_option(
      "--op", op,
      "intersect|union|difference|symdiff|complement|refine|image|preimage|empty|in-slice|avoids");
  setalg->add_option("--n", slice_text, "degree for refine/image/preimage/in-slice");
  setalg->add_option("--color", avoid_color, "color for the avoids query");
  setalg->add_option("A", lit_a, "set literal [lambda - nu1,nu2]");
  setalg->add_option("B", lit_b, "second set literal");
  setalg->add_flag("--check-laws", check_laws, "run the boolean/lemma law suite");

  auto* ck = app.add_subcommand("ck-check", "Cuntz-Krieger relations CK1-CK4");
  add_common(ck, c);

  auto* nica = app.add_subcommand("nica-check", "Nica covariance via both routes");
  add_common(nica, c);

  auto* ck4 = app.add_subcommand("ck4-check", "CK4 for one finite exhaustive set");
  std::string ck4_vertex, ck4_set;
  add_common(ck4, c);
  ck4->add_option("--vertex", ck4_vertex)->required();
  ck4->add_option("--set", ck4_set)->required();

  auto* cp = app.add_subcommand("cp-check", "Cuntz-Pimsner direct-sum annihilation");
  add_common(cp, c);

  auto* align = app.add_subcommand("compact-align-check", "appendix alignment vs sequential iota");
  add_common(align, c);

  auto* exel = app.add_subcommand("exel-check", "partial endomorphisms and transfer operators");
  std::string exel_n, weights = "uniform";
  add_common(exel, c);
  exel->add_option("--n", exel_n, "shift degree, e.g. 1,0")->required();
  exel->add_option("--weights", weights)->check(CLI::IsMember({"uniform", "normalized", "regular"}));

  auto* orc = app.add_subcommand("oracle-check", "prefix-semantics cross-check suite");
  std::string degree_text;
  add_common(orc, c);
  orc->add_option("--degree", degree_text, "prefix degree of the oracle universe");

  auto* rpt = app.add_subcommand("report", "run every applicable check suite");
  add_common(rpt, c);

  CLI11_PARSE(app, argc, argv);

  try {
    KGraph g = load_graph_file(c.graph_path);

    if (validate->parsed()) {
      std::cout << "valid kgraph: k=" << g.rank() << " vertices=" << g.vertex_count()
                << " edges=" << g.edge_count() << "\n";
      return 0;
    }
    if (mce->parsed()) {
      for (const auto& [a, b] : g.lambda_min(g.parse_path(path1), g.parse_path(path2)))
        std::cout << "(" << g.path_str(a) << "," << g.path_str(b) << ")\n";
      return 0;
    }
    if (extc->parsed()) {
      auto e = g.ext(g.parse_path(ext_path), parse_path_list(g, ext_set));
      for (PathId p : e) std::cout << g.path_str(p) << "\n";
      return 0;
    }
    if (exh->parsed()) {
      auto res = g.is_exhaustive(find_vertex(g, exh_vertex), parse_path_list(g, exh_set),
                                 bound_of(g, c));
      if (res.exhaustive) {
        std::cout << "exhaustive (bound " << res.bound.str() << ")\n";
        return 0;
      }
      std::cout << "not exhaustive: witness " << g.path_str(*res.witness) << " (bound "
                << res.bound.str() << ")\n";
      return 1;
    }
    if (setalg->parsed()) {
      if (check_laws) {
        DegreeVector cap = cap_of(g, c);
        Report rep;
        auto basics = enumerate_basics(g, cap, cap, c.fmax);
        bool ok = true;
        std::string witness;
        for (const auto& a : basics) {
          for (const auto& b : basics) {
            auto x = singleton(g, a), y = singleton(g, b);
            if (!sets_equal(g, intersect(g, x, y), intersect(g, y, x), bound_of(g, c)) ||
                !sets_equal(g, unite(g, x, y), unite(g, y, x), bound_of(g, c)) ||
                !sets_equal(g, unite(g, x, intersect(g, x, y)), x, bound_of(g, c))) {
              ok = false;
              witness = basic_str(g, a) + " vs " + basic_str(g, b);
              break;
            }
          }
          if (!ok) break;
        }
        rep.add("set-laws", "basics=" + std::to_string(basics.size()), ok, witness);
        bool kok = true;
        std::string kw;
        for (const auto& a : basics) {
          bool empty = is_empty(g, a, bound_of(g, c));
          for (int i = 1; i <= g.rank(); ++i) {
            bool kroute = avoids_slice_k(g, a, i, bound_of(g, c));
            bool ext = avoids_slice_extensional(g, a, i, bound_of(g, c));
            if ((kroute && !ext) || (ext && !empty && !kroute)) {
              kok = false;
              kw = basic_str(g, a) + " color " + std::to_string(i);
              break;
            }
          }
          if (!kok) break;
        }
        rep.add("kernel-criterion", "basics=" + std::to_string(basics.size()), kok, kw);
        return emit(rep, c);
      }
      auto A = singleton(g, parse_basic_literal(g, lit_a));
      CylinderSet out;
      if (op == "intersect")
        out = intersect(g, A, singleton(g, parse_basic_literal(g, lit_b)));
      else if (op == "union")
        out = unite(g, A, singleton(g, parse_basic_literal(g, lit_b)));
      else if (op == "difference")
        out = difference(g, A, singleton(g, parse_basic_literal(g, lit_b)));
      else if (op == "symdiff")
        out = symmetric_difference(g, A, singleton(g, parse_basic_literal(g, lit_b)));
      else if (op == "complement")
        out = complement_within(g, A, parse_basic_literal(g, lit_b), bound_of(g, c));
      else if (op == "refine")
        out = refine_to_slice(g, A.parts.at(0), parse_degree(slice_text, g.rank()), bound_of(g, c));
      else if (op == "image")
        out = singleton(g, sigma_image(g, A.parts.at(0), parse_degree(slice_text, g.rank())));
      else if (op == "preimage")
        out = sigma_preimage(g, A.parts.at(0), parse_degree(slice_text, g.rank()));
      else if (op == "empty") {
        auto res = emptiness(g, A.parts.at(0), bound_of(g, c));
        std::cout << (res.empty ? "empty" : "nonempty") << " (bound " << res.bound.str() << ")\n";
        return 0;
      } else if (op == "in-slice") {
        bool in = contained_in_slice(g, A, parse_degree(slice_text, g.rank()), bound_of(g, c));
        std::cout << (in ? "contained" : "not contained") << "\n";
        return in ? 0 : 1;
      } else if (op == "avoids") {
        bool k = avoids_slice_k(g, A.parts.at(0), avoid_color, bound_of(g, c));
        bool ext = avoids_slice_extensional(g, A.parts.at(0), avoid_color, bound_of(g, c));
        std::cout << "kernel-criterion: " << (k ? "avoids" : "meets") << ", extensional: "
                  << (ext ? "avoids" : "meets") << "\n";
        return 0;
      } else
        throw Error(Errc::bad_argument, "unknown set operation '" + op + "'");
      std::cout << set_str(g, out) << "\n";
      return 0;
    }
    if (ck->parsed()) return emit(check_ck_suite(g, options_of(g, c)), c);
    if (nica->parsed()) return emit(check_nica(g, options_of(g, c)), c);
    if (ck4->parsed()) {
      auto fe = certify_exhaustive(g, find_vertex(g, ck4_vertex), parse_path_list(g, ck4_set),
                                   bound_of(g, c));
      auto opt = options_of(g, c);
      auto rep = check_ck4(g, fe, opt);
      DegreeVector joined = g.zero();
      for (PathId mu : fe.members) joined = join(joined, g.degree(mu));
      DegreeVector n = join(opt.cap, joined);
      for (const auto& m : degrees_upto(n)) rep.append(check_extension_lemma(g, fe, m, n, opt));
      return emit(rep, c);
    }
    if (cp->parsed()) return emit(check_cp(g, options_of(g, c)), c);
    if (align->parsed()) return emit(check_compact_align(g, options_of(g, c)), c);
    if (exel->parsed()) {
      Weight w = weights == "uniform"      ? uniform_weight()
                 : weights == "normalized" ? normalized_weight()
                                           : regular_weight(g);
      CheckOptionsLite opt{cap_of(g, c), c.fmax, bound_of(g, c)};
      return emit(check_exel(g, parse_degree(exel_n, g.rank()), w, opt), c);
    }
    if (orc->parsed()) {
      DegreeVector cap = cap_of(g, c);
      DegreeVector m = degree_text.empty() ? cap + cap : parse_degree(degree_text, g.rank());
      return emit(oracle_suite(g, m, cap, c.fmax), c);
    }
    if (rpt->parsed()) {
      Report rep;
      auto opt = options_of(g, c);
      rep.append(check_ck_suite(g, opt));
      rep.append(check_nica(g, opt));
      rep.append(check_cp(g, opt));
      for (int v = 0; v < g.vertex_count(); ++v)
        for (auto& members : enumerate_fe_sets(g, v, opt.cap, opt.bound)) {
          auto fe = certify_exhaustive(g, v, members, opt.bound);
          DegreeVector joined = g.zero();
          for (PathId mu : fe.members) joined = join(joined, g.degree(mu));
          DegreeVector n = join(opt.cap, joined);
          for (const auto& m : degrees_upto(n))
            rep.append(check_extension_lemma(g, fe, m, n, opt));
        }
      rep.append(check_compact_align(g, opt));
      CheckOptionsLite lite{opt.cap, opt.fmax, opt.bound};
      std::vector<Weight> kinds{uniform_weight(), normalized_weight()};
      if (detect_regularity(g)) kinds.push_back(regular_weight(g));
      for (const auto& n : degrees_upto(opt.cap))
        for (const auto& w : kinds) rep.append(check_transfer_identity(g, n, w, lite));
      for (const auto& n : degrees_upto(opt.cap)) rep.append(check_exel_consistency(g, n, lite));
      if (detect_regularity(g)) rep.append(check_omega(g, opt.cap));
      if (!has_sources(g)) rep.append(oracle_suite(g, opt.cap + opt.cap, opt.cap, opt.fmax));
      return emit(rep, c);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
