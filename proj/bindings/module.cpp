#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kgr/cnp.hpp"
#include "kgr/exel.hpp"
#include "kgr/oracle.hpp"
#include "kgr/parse.hpp"

namespace py = pybind11;
using namespace kgr;

namespace {

DegreeVector deg(const KGraph& g, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != g.rank())
    throw Error(Errc::bad_argument, "degree has wrong rank");
  return DegreeVector(v);
}

std::pair<long long, long long> ratio(const Rational& r) {
  return {r.numerator(), r.denominator()};
}

std::vector<std::pair<std::string, std::pair<long long, long long>>> fun_terms(
    const KGraph& g, const CylinderFunction& f) {
  std::vector<std::pair<std::string, std::pair<long long, long long>>> out;
  for (const auto& [b, c] : f.terms) out.emplace_back(basic_str(g, b), ratio(c));
  return out;
}

std::vector<std::map<std::string, std::string>> report_rows(const Report& rep) {
  std::vector<std::map<std::string, std::string>> rows;
  for (const auto& l : rep.lines) {
    std::map<std::string, std::string> row{{"identity", l.identity},
                                           {"instance", l.instance},
                                           {"status", l.ok ? "OK" : "FAIL"}};
    if (!l.ok) row["witness"] = l.witness;
    rows.push_back(std::move(row));
  }
  return rows;
}

Weight weight_of(const KGraph& g, const std::string& kind) {
  if (kind == "uniform") return uniform_weight();
  if (kind == "normalized") return normalized_weight();
  if (kind == "regular") return regular_weight(g);
  throw Error(Errc::bad_argument, "unknown weight kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(kgrcalc, m) {
  m.doc() = "exact boundary-path calculus for finitely-aligned k-graphs";

  py::register_exception<Error>(m, "KgrError");

  py::class_<BasicSet>(m, "BasicSet");
  py::class_<CylinderSet>(m, "CylinderSet")
      .def("__len__", [](const CylinderSet& x) { return x.parts.size(); });
  py::class_<CylinderFunction>(m, "CylinderFunction")
      .def_property_readonly("slice",
                             [](const CylinderFunction& f) { return f.slice.coords(); });
  py::class_<CompactOp>(m, "CompactOp")
      .def_property_readonly("slice", [](const CompactOp& t) { return t.slice.coords(); })
      .def("__len__", [](const CompactOp& t) { return t.terms.size(); });

  py::class_<KGraph>(m, "KGraph")
      .def_property_readonly("rank", &KGraph::rank)
      .def_property_readonly("vertex_count", &KGraph::vertex_count)
      .def_property_readonly("edge_count", &KGraph::edge_count)
      .def("vertices",
           [](const KGraph& g) {
             std::vector<std::string> out;
             for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.vertex_name(v));
             return out;
           })
      .def("path", &KGraph::parse_path, "parse a path literal such as 'v' or 'a.b'")
      .def("path_str", &KGraph::path_str)
      .def("degree",
           [](const KGraph& g, const std::string& lit) {
             return g.degree(g.parse_path(lit)).coords();
           })
      .def("range_vertex",
           [](const KGraph& g, const std::string& lit) {
             return g.vertex_name(g.range_of(g.parse_path(lit)));
           })
      .def("source_vertex",
           [](const KGraph& g, const std::string& lit) {
             return g.vertex_name(g.source_of(g.parse_path(lit)));
           })
      .def("compose",
           [](const KGraph& g, const std::string& a, const std::string& b) {
             return g.path_str(g.compose(g.parse_path(a), g.parse_path(b)));
           })
      .def("segment",
           [](const KGraph& g, const std::string& lit, const std::vector<int>& a,
              const std::vector<int>& b) {
             return g.path_str(g.segment(g.parse_path(lit), deg(g, a), deg(g, b)));
           })
      .def("paths_from",
           [](const KGraph& g, const std::string& vertex, const std::vector<int>& n) {
             auto v = g.vertex_index(vertex);
             if (!v) throw Error(Errc::bad_argument, "unknown vertex '" + vertex + "'");
             std::vector<std::string> out;
             for (PathId p : g.paths_from(*v, deg(g, n))) out.push_back(g.path_str(p));
             return out;
           })
      .def("lambda_min",
           [](const KGraph& g, const std::string& a, const std::string& b) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [x, y] : g.lambda_min(g.parse_path(a), g.parse_path(b)))
               out.emplace_back(g.path_str(x), g.path_str(y));
             return out;
           })
      .def("ext",
           [](const KGraph& g, const std::string& lam, const std::vector<std::string>& e) {
             std::vector<PathId> members;
             for (const auto& s : e) members.push_back(g.parse_path(s));
             std::vector<std::string> out;
             for (PathId p : g.ext(g.parse_path(lam), members)) out.push_back(g.path_str(p));
             return out;
           })
      .def(
          "is_exhaustive",
          [](const KGraph& g, const std::string& vertex, const std::vector<std::string>& e,
             std::optional<std::vector<int>> bound) {
            auto v = g.vertex_index(vertex);
            if (!v) throw Error(Errc::bad_argument, "unknown vertex '" + vertex + "'");
            std::vector<PathId> members;
            for (const auto& s : e) members.push_back(g.parse_path(s));
            std::optional<DegreeVector> b;
            if (bound) b = deg(g, *bound);
            auto res = g.is_exhaustive(*v, members, b);
            py::dict d;
            d["exhaustive"] = res.exhaustive;
            d["bound"] = res.bound.coords();
            if (res.witness) d["witness"] = g.path_str(*res.witness);
            return d;
          },
          py::arg("vertex"), py::arg("members"), py::arg("bound") = py::none())
      // --- set algebra ---
      .def(
          "basic",
          [](const KGraph& g, const std::string& base, const std::vector<std::string>& avoid) {
            std::vector<PathId> f;
            for (const auto& s : avoid) f.push_back(g.parse_path(s));
            auto b = make_basic(g, g.parse_path(base), std::move(f));
            if (!b) throw Error(Errc::bad_argument, "the pair denotes the empty set");
            return *b;
          },
          py::arg("base"), py::arg("avoid") = std::vector<std::string>{})
      .def("basic_str", [](const KGraph& g, const BasicSet& b) { return basic_str(g, b); })
      .def("set_str", [](const KGraph& g, const CylinderSet& x) { return set_str(g, x); })
      .def("intersect",
           [](const KGraph& g, const BasicSet& a, const BasicSet& b) {
             return intersect_basic(g, a, b);
           })
      .def("unite", [](const KGraph& g, const BasicSet& a,
                       const BasicSet& b) { return unite(g, singleton(g, a), singleton(g, b)); })
      .def("difference",
           [](const KGraph& g, const BasicSet& a, const BasicSet& b) {
             return difference(g, singleton(g, a), singleton(g, b));
           })
      .def("symmetric_difference",
           [](const KGraph& g, const BasicSet& a, const BasicSet& b) {
             return symmetric_difference(g, singleton(g, a), singleton(g, b));
           })
      .def("refine_to_slice",
           [](const KGraph& g, const BasicSet& a, const std::vector<int>& n) {
             return refine_to_slice(g, a, deg(g, n));
           })
      .def("is_empty",
           [](const KGraph& g, const BasicSet& a) { return is_empty(g, a); })
      .def("condition_K",
           [](const KGraph& g, const BasicSet& a, int color) { return condition_K(g, a, color); })
      .def("contained_in_slice",
           [](const KGraph& g, const BasicSet& a, const std::vector<int>& n) {
             return contained_in_slice(g, singleton(g, a), deg(g, n));
           })
      .def("avoids_slice",
           [](const KGraph& g, const BasicSet& a, int color, const std::string& route) {
             if (route == "kernel") return avoids_slice_k(g, a, color);
             if (route == "extensional") return avoids_slice_extensional(g, a, color);
             throw Error(Errc::bad_argument, "route must be 'kernel' or 'extensional'");
           },
           py::arg("a"), py::arg("color"), py::arg("route") = "kernel")
      .def("sigma_image",
           [](const KGraph& g, const BasicSet& a, const std::vector<int>& n) {
             return sigma_image(g, a, deg(g, n));
           })
      .def("sigma_preimage",
           [](const KGraph& g, const BasicSet& a, const std::vector<int>& n) {
             return sigma_preimage(g, a, deg(g, n));
           })
      // --- module operations ---
      .def("indicator",
           [](const KGraph& g, const std::vector<int>& slice, const BasicSet& a) {
             return indicator(g, deg(g, slice), a);
           })
      .def("inner_product",
           [](const KGraph& g, const CylinderFunction& f, const CylinderFunction& h) {
             return inner_product(g, f, h);
           })
      .def("multiply",
           [](const KGraph& g, const CylinderFunction& f, const CylinderFunction& h) {
             return multiply(g, f, h);
           })
      .def("left_action",
           [](const KGraph& g, const CylinderFunction& a, const CylinderFunction& f) {
             return left_action(g, a, f);
           })
      .def("right_action",
           [](const KGraph& g, const CylinderFunction& f, const CylinderFunction& a) {
             return right_action(g, f, a);
           })
      .def("func_equal",
           [](const KGraph& g, const CylinderFunction& f, const CylinderFunction& h) {
             return func_equal(g, f, h);
           })
      .def("terms", &fun_terms)
      .def("spanning_X",
           [](const KGraph& g, const std::vector<int>& n, const std::vector<int>& cap,
              size_t fmax) { return spanning_X(g, deg(g, n), deg(g, cap), fmax); },
           py::arg("n"), py::arg("cap"), py::arg("fmax") = SIZE_MAX)
      .def("spanning_I",
           [](const KGraph& g, const std::vector<int>& n, const std::vector<int>& cap,
              size_t fmax) { return spanning_I(g, deg(g, n), deg(g, cap), fmax); },
           py::arg("n"), py::arg("cap"), py::arg("fmax") = SIZE_MAX)
      .def("spanning_XI",
           [](const KGraph& g, const std::vector<int>& m, const std::vector<int>& n,
              const std::vector<int>& cap, size_t fmax) {
             return spanning_XI(g, deg(g, m), deg(g, n), deg(g, cap), fmax);
           },
           py::arg("m"), py::arg("n"), py::arg("cap"), py::arg("fmax") = SIZE_MAX)
      .def("iota",
           [](const KGraph& g, const CompactOp& s, const std::vector<int>& q,
              const CylinderFunction& f) { return iota(g, s, deg(g, q), f); })
      .def("theta",
           [](const KGraph& g, const std::vector<int>& slice, const BasicSet& ket,
              const BasicSet& bra) { return theta(g, deg(g, slice), ket, bra); })
      .def("apply_compact",
           [](const KGraph& g, const CompactOp& t, const CylinderFunction& f) {
             return apply_compact(g, t, f);
           })
      .def("compact_align",
           [](const KGraph& g, const CompactOp& s, const CompactOp& t) {
             return compact_align(g, s, t);
           })
      .def("op_str", [](const KGraph& g, const CompactOp& t) { return op_str(g, t); })
      .def("alpha",
           [](const KGraph& g, const std::vector<int>& n, const CylinderFunction& f) {
             return alpha(g, deg(g, n), f);
           })
      .def("transfer",
           [](const KGraph& g, const std::vector<int>& n, const CylinderFunction& f,
              const std::string& kind) { return transfer(g, deg(g, n), f, weight_of(g, kind)); },
           py::arg("n"), py::arg("f"), py::arg("weights") = "uniform")
      .def("detect_regularity", [](const KGraph& g) { return detect_regularity(g); })
      // --- verification suites ---
      .def(
          "ck_check",
          [](const KGraph& g, const std::vector<int>& cap, size_t fmax, int s_range) {
            return report_rows(check_ck_suite(g, CheckOptions{deg(g, cap), fmax, s_range, {}}));
          },
          py::arg("cap"), py::arg("fmax") = 1, py::arg("s_range") = 1)
      .def(
          "nica_check",
          [](const KGraph& g, const std::vector<int>& cap, size_t fmax) {
            return report_rows(check_nica(g, CheckOptions{deg(g, cap), fmax, 1, {}}));
          },
          py::arg("cap"), py::arg("fmax") = 1)
      .def(
          "ck4_check",
          [](const KGraph& g, const std::string& vertex, const std::vector<std::string>& members,
             const std::vector<int>& cap, int s_range) {
            auto v = g.vertex_index(vertex);
            if (!v) throw Error(Errc::bad_argument, "unknown vertex '" + vertex + "'");
            std::vector<PathId> e;
            for (const auto& s : members) e.push_back(g.parse_path(s));
            auto fe = certify_exhaustive(g, *v, e);
            return report_rows(check_ck4(g, fe, CheckOptions{deg(g, cap), 1, s_range, {}}));
          },
          py::arg("vertex"), py::arg("members"), py::arg("cap"), py::arg("s_range") = 1)
      .def(
          "exel_check",
          [](const KGraph& g, const std::vector<int>& n, const std::string& kind,
             const std::vector<int>& cap, size_t fmax) {
            CheckOptionsLite opt{deg(g, cap), fmax, {}};
            return report_rows(check_exel(g, deg(g, n), weight_of(g, kind), opt));
          },
          py::arg("n"), py::arg("weights"), py::arg("cap"), py::arg("fmax") = 1)
      .def(
          "oracle_check",
          [](const KGraph& g, const std::vector<int>& degree, const std::vector<int>& cap,
             size_t fmax) {
            return report_rows(oracle_suite(g, deg(g, degree), deg(g, cap), fmax));
          },
          py::arg("degree"), py::arg("cap"), py::arg("fmax") = 1);

  m.def("load_graph", [](const std::string& text) { return parse_graph(text); },
        "parse and validate a graph definition text");
  m.def("load_graph_file", &load_graph_file, "parse and validate a graph definition file");
}
