#include "kgr/kgraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kgr {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_skeleton: return "InvalidSkeleton";
    case Errc::missing_square: return "MissingSquare";
    case Errc::duplicate_square: return "DuplicateSquare";
    case Errc::non_bijective_squares: return "NonBijectiveSquares";
    case Errc::cube_condition_failure: return "CubeConditionFailure";
    case Errc::not_composable: return "NotComposable";
    case Errc::degree_out_of_range: return "DegreeOutOfRange";
    case Errc::range_mismatch: return "RangeMismatch";
    case Errc::invalid_color: return "InvalidColor";
    case Errc::not_in_slice: return "NotInSlice";
    case Errc::not_contained: return "NotContained";
    case Errc::slice_mismatch: return "SliceMismatch";
    case Errc::degree_order: return "DegreeOrder";
    case Errc::degree_too_small: return "DegreeTooSmall";
    case Errc::not_exhaustive: return "NotExhaustive";
    case Errc::regularity_required: return "RegularityRequired";
    case Errc::insufficient_degree: return "InsufficientDegree";
    case Errc::source_present: return "SourcePresent";
    case Errc::parse_error: return "ParseError";
    case Errc::bad_argument: return "BadArgument";
  }
  return "Error";
}

namespace {

std::int64_t degree_key(const DegreeVector& d) {
  std::int64_t k = 0;
  for (int i = 0; i < d.size(); ++i) k = (k << 8) | static_cast<std::int64_t>(d[i] & 0xff);
  return k;
}

}  // namespace

std::optional<int> KGraph::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> KGraph::edge_index(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

KGraph KGraph::validate(const Skeleton& skel) {
  KGraph g;
  g.k_ = skel.rank;
  if (g.k_ < 1) throw Error(Errc::invalid_skeleton, "rank must be at least 1");
  if (skel.vertices.empty()) throw Error(Errc::invalid_skeleton, "no vertices declared");

  for (const auto& v : skel.vertices) {
    if (g.vertex_index_.count(v)) throw Error(Errc::invalid_skeleton, "duplicate vertex id '" + v + "'");
    g.vertex_index_[v] = static_cast<int>(g.vertex_names_.size());
    g.vertex_names_.push_back(v);
  }

  for (const auto& e : skel.edges) {
    if (g.edge_index_.count(e.id) || g.vertex_index_.count(e.id))
      throw Error(Errc::invalid_skeleton, "duplicate id '" + e.id + "'");
    if (e.color < 1 || e.color > g.k_)
      throw Error(Errc::invalid_skeleton, "edge '" + e.id + "' has color outside 1.." + std::to_string(g.k_));
    auto r = g.vertex_index_.find(e.range);
    auto s = g.vertex_index_.find(e.source);
    if (r == g.vertex_index_.end())
      throw Error(Errc::invalid_skeleton, "edge '" + e.id + "' references unknown vertex '" + e.range + "'");
    if (s == g.vertex_index_.end())
      throw Error(Errc::invalid_skeleton, "edge '" + e.id + "' references unknown vertex '" + e.source + "'");
    g.edge_index_[e.id] = static_cast<int>(g.edge_names_.size());
    g.edge_names_.push_back(e.id);
    g.edge_color_.push_back(e.color);
    g.edge_range_.push_back(r->second);
    g.edge_source_.push_back(s->second);
  }

  const int nv = g.vertex_count();
  g.out_edges_.assign(nv, std::vector<std::vector<int>>(g.k_));
  g.in_edges_.assign(nv, std::vector<std::vector<int>>(g.k_));
  for (int e = 0; e < g.edge_count(); ++e) {
    g.out_edges_[g.edge_range_[e]][g.edge_color_[e] - 1].push_back(e);
    g.in_edges_[g.edge_source_[e]][g.edge_color_[e] - 1].push_back(e);
  }

  auto edge_of = [&](const std::string& id, int line) {
    auto it = g.edge_index_.find(id);
    if (it == g.edge_index_.end())
      throw Error(Errc::invalid_skeleton,
                  "square on line " + std::to_string(line) + " references unknown edge '" + id + "'");
    return it->second;
  };

  for (const auto& sq : skel.squares) {
    int a = edge_of(sq.a, sq.line), b = edge_of(sq.b, sq.line);
    int c = edge_of(sq.c, sq.line), d = edge_of(sq.d, sq.line);
    std::string where = "square " + sq.a + " " + sq.b + " = " + sq.c + " " + sq.d;
    if (!(g.edge_color_[a] < g.edge_color_[b]))
      throw Error(Errc::invalid_skeleton, where + ": left pair must have increasing colors");
    if (g.edge_color_[c] != g.edge_color_[b] || g.edge_color_[d] != g.edge_color_[a])
      throw Error(Errc::invalid_skeleton, where + ": right pair must swap the colors of the left pair");
    if (g.edge_source_[a] != g.edge_range_[b] || g.edge_source_[c] != g.edge_range_[d])
      throw Error(Errc::invalid_skeleton, where + ": pairs are not composable");
    if (g.edge_range_[a] != g.edge_range_[c] || g.edge_source_[b] != g.edge_source_[d])
      throw Error(Errc::invalid_skeleton, where + ": sides disagree on range or source");
    auto fk = pair_key(a, b);
    if (g.fwd_.count(fk))
      throw Error(Errc::duplicate_square, "two squares declared for pair (" + sq.a + "," + sq.b + ")");
    auto bk = pair_key(c, d);
    if (g.bwd_.count(bk))
      throw Error(Errc::non_bijective_squares,
                  "two squares share the right-hand pair (" + sq.c + "," + sq.d + ")");
    g.fwd_[fk] = {c, d};
    g.bwd_[bk] = {a, b};
  }

  // completeness of the square relation
  for (int a = 0; a < g.edge_count(); ++a)
    for (int color = g.edge_color_[a] + 1; color <= g.k_; ++color)
      for (int b : g.out_edges_[g.edge_source_[a]][color - 1])
        if (!g.fwd_.count(pair_key(a, b)))
          throw Error(Errc::missing_square,
                      "no square for composable pair (" + g.edge_names_[a] + "," + g.edge_names_[b] + ")");
  // surjectivity onto composable decreasing-color pairs
  for (int c = 0; c < g.edge_count(); ++c)
    for (int color = 1; color < g.edge_color_[c]; ++color)
      for (int d : g.out_edges_[g.edge_source_[c]][color - 1])
        if (!g.bwd_.count(pair_key(c, d)))
          throw Error(Errc::non_bijective_squares,
                      "no square rewrites the pair (" + g.edge_names_[c] + "," + g.edge_names_[d] + ")");

  for (int v = 0; v < nv; ++v) {
    PathData pd;
    pd.range = v;
    pd.source = v;
    pd.degree = DegreeVector::zero(g.k_);
    g.intern_table_[{v, {}}] = static_cast<PathId>(g.paths_.size());
    g.paths_.push_back(std::move(pd));
  }

  if (g.k_ >= 3) {
    for (int x = 0; x < g.edge_count(); ++x)
      for (int y : [&] {
             std::vector<int> ys;
             for (int col = 1; col <= g.k_; ++col)
               if (col != g.edge_color_[x])
                 for (int e : g.out_edges_[g.edge_source_[x]][col - 1]) ys.push_back(e);
             return ys;
           }())
        for (int col = 1; col <= g.k_; ++col) {
          if (col == g.edge_color_[x] || col == g.edge_color_[y]) continue;
          for (int z : g.out_edges_[g.edge_source_[y]][col - 1]) {
            std::vector<std::vector<std::int32_t>> nfs;
            g.all_normal_forms({x, y, z}, nfs);
            if (nfs.size() != 1)
              throw Error(Errc::cube_condition_failure,
                          "word " + g.edge_names_[x] + "." + g.edge_names_[y] + "." + g.edge_names_[z] +
                              " rewrites to " + std::to_string(nfs.size()) + " distinct normal forms");
          }
        }
  }

  return g;
}

void KGraph::all_normal_forms(const std::vector<std::int32_t>& w,
                              std::vector<std::vector<std::int32_t>>& out) const {
  std::set<std::vector<std::int32_t>> seen, terminal;
  std::vector<std::vector<std::int32_t>> stack{w};
  seen.insert(w);
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    bool reduced = false;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (edge_color_[cur[i]] > edge_color_[cur[i + 1]]) {
        reduced = true;
        auto it = bwd_.find(pair_key(cur[i], cur[i + 1]));
        if (it == bwd_.end())
          throw Error(Errc::invalid_skeleton, "missing backward square during rewrite");
        auto next = cur;
        next[i] = it->second.first;
        next[i + 1] = it->second.second;
        if (seen.insert(next).second) stack.push_back(std::move(next));
      }
    }
    if (!reduced) terminal.insert(cur);
  }
  out.assign(terminal.begin(), terminal.end());
}

PathId KGraph::intern(std::vector<std::int32_t> word, int range) const {
  auto it = intern_table_.find({range, word});
  if (it != intern_table_.end()) return it->second;
  PathData pd;
  pd.range = range;
  pd.source = word.empty() ? range : edge_source_[word.back()];
  std::vector<int> c(k_, 0);
  for (auto e : word) c[edge_color_[e] - 1]++;
  pd.degree = DegreeVector(std::move(c));
  pd.word = word;
  PathId id = static_cast<PathId>(paths_.size());
  intern_table_[{range, std::move(word)}] = id;
  paths_.push_back(std::move(pd));
  return id;
}

void KGraph::append_edge(std::vector<std::int32_t>& w, int e) const {
  int c = edge_color_[e];
  w.push_back(e);
  int i = static_cast<int>(w.size()) - 1;
  while (i > 0 && edge_color_[w[i - 1]] > c) {
    auto it = bwd_.find(pair_key(w[i - 1], w[i]));
    if (it == bwd_.end()) throw Error(Errc::invalid_skeleton, "missing backward square during rewrite");
    w[i - 1] = it->second.first;
    w[i] = it->second.second;
    --i;
  }
}

PathId KGraph::path_from_edges(std::span<const int> edges) const {
  if (edges.empty()) throw Error(Errc::bad_argument, "empty edge word");
  std::vector<std::int32_t> w;
  int range = edge_range_[edges[0]];
  int cur = range;
  for (int e : edges) {
    if (edge_range_[e] != cur)
      throw Error(Errc::not_composable,
                  "edge '" + edge_names_[e] + "' does not compose at vertex '" + vertex_names_[cur] + "'");
    append_edge(w, e);
    cur = edge_source_[e];
  }
  return intern(std::move(w), range);
}

PathId KGraph::compose(PathId lam, PathId mu) const {
  if (source_of(lam) != range_of(mu))
    throw Error(Errc::not_composable, "s(" + path_str(lam) + ") != r(" + path_str(mu) + ")");
  std::int64_t key = pair_key(lam, mu);
  auto it = compose_memo_.find(key);
  if (it != compose_memo_.end()) return it->second;
  std::vector<std::int32_t> w = paths_[lam].word;
  const std::vector<std::int32_t> mu_word = paths_[mu].word;
  const int lam_range = range_of(lam);
  for (auto e : mu_word) append_edge(w, e);
  PathId out = intern(std::move(w), lam_range);
  compose_memo_[key] = out;
  return out;
}

std::pair<PathId, PathId> KGraph::split(PathId lam, const DegreeVector& m) const {
  if (!leq(m, degree(lam)))
    throw Error(Errc::degree_out_of_range, "prefix degree " + m.str() + " exceeds d(" + path_str(lam) + ")");
  std::string key = std::to_string(lam) + ":" + m.str();
  auto it = segment_memo_.find(key);
  if (it != segment_memo_.end()) {
    PathId p1 = it->second;
    auto it2 = segment_memo_.find(key + "#s");
    return {p1, it2->second};
  }
  const int lam_range = range_of(lam);
  std::vector<std::int32_t> w = paths_[lam].word;
  std::vector<std::int32_t> pre;
  for (int color = 1; color <= k_; ++color) {
    for (int t = 0; t < m[color - 1]; ++t) {
      int pos = -1;
      for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (edge_color_[w[i]] == color) {
          pos = i;
          break;
        }
      for (int i = pos; i > 0; --i) {
        auto itf = fwd_.find(pair_key(w[i - 1], w[i]));
        if (itf == fwd_.end()) throw Error(Errc::invalid_skeleton, "missing forward square during rewrite");
        w[i - 1] = itf->second.first;
        w[i] = itf->second.second;
      }
      pre.push_back(w[0]);
      w.erase(w.begin());
    }
  }
  PathId p1 = intern(std::move(pre), lam_range);
  PathId p2 = intern(std::move(w), paths_[p1].source);
  segment_memo_[key] = p1;
  segment_memo_[key + "#s"] = p2;
  return {p1, p2};
}

PathId KGraph::segment(PathId lam, const DegreeVector& m, const DegreeVector& n) const {
  const DegreeVector& d = degree(lam);
  if (!leq(m, n) || !leq(n, d))
    throw Error(Errc::degree_out_of_range,
                "segment bounds " + m.str() + ".." + n.str() + " invalid for degree " + d.str());
  auto [pre, rest] = split(lam, m);
  (void)pre;
  auto [mid, tail] = split(rest, n - m);
  (void)tail;
  return mid;
}

bool KGraph::extends(PathId lam, PathId mu) const {
  if (range_of(lam) != range_of(mu)) return false;
  if (!leq(degree(mu), degree(lam))) return false;
  return prefix(lam, degree(mu)) == mu;
}

const std::vector<PathId>& KGraph::paths_from(int v, const DegreeVector& n) const {
  std::string key = "F" + std::to_string(v) + ":" + std::to_string(degree_key(n));
  auto it = enum_memo_.find(key);
  if (it != enum_memo_.end()) return it->second;
  std::vector<PathId> out;
  std::vector<std::int32_t> w;
  // depth-first over color-sorted words
  auto rec = [&](auto&& self, int color, int left, int cur) -> void {
    if (color > k_) {
      out.push_back(intern(w, v));
      return;
    }
    if (left == 0) {
      self(self, color + 1, color + 1 <= k_ ? n[color] : 0, cur);
      return;
    }
    for (int e : out_edges_[cur][color - 1]) {
      w.push_back(e);
      self(self, color, left - 1, edge_source_[e]);
      w.pop_back();
    }
  };
  rec(rec, 1, n[0], v);
  sort_paths(out);
  return enum_memo_[key] = std::move(out);
}

const std::vector<PathId>& KGraph::paths_into(int v, const DegreeVector& n) const {
  std::string key = "I" + std::to_string(v) + ":" + std::to_string(degree_key(n));
  auto it = enum_memo_.find(key);
  if (it != enum_memo_.end()) return it->second;
  std::vector<PathId> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (PathId p : paths_from(u, n))
      if (source_of(p) == v) out.push_back(p);
  sort_paths(out);
  return enum_memo_[key] = std::move(out);
}

std::vector<PathId> KGraph::paths_from_upto(int v, const DegreeVector& cap) const {
  std::vector<PathId> out;
  for (const auto& p : degrees_upto(cap)) {
    const auto& ps = paths_from(v, p);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  sort_paths(out);
  return out;
}

std::vector<PathId> KGraph::all_paths_of_degree(const DegreeVector& n) const {
  std::vector<PathId> out;
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& ps = paths_from(v, n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  sort_paths(out);
  return out;
}

std::vector<PathId> KGraph::all_paths_upto(const DegreeVector& cap) const {
  std::vector<PathId> out;
  for (const auto& p : degrees_upto(cap)) {
    auto ps = all_paths_of_degree(p);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  sort_paths(out);
  return out;
}

const std::vector<std::pair<PathId, PathId>>& KGraph::lambda_min(PathId lam, PathId mu) const {
  if (range_of(lam) != range_of(mu))
    throw Error(Errc::range_mismatch, "r(" + path_str(lam) + ") != r(" + path_str(mu) + ")");
  std::int64_t key = pair_key(lam, mu);
  auto it = mce_memo_.find(key);
  if (it != mce_memo_.end()) return it->second;
  DegreeVector big = join(degree(lam), degree(mu));
  std::vector<std::pair<PathId, PathId>> out;
  for (PathId alpha : paths_from(source_of(lam), big - degree(lam))) {
    PathId la = compose(lam, alpha);
    if (extends(la, mu)) out.emplace_back(alpha, segment(la, degree(mu), big));
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return path_less(x.first, y.first);
    return path_less(x.second, y.second);
  });
  return mce_memo_[key] = std::move(out);
}

std::vector<std::pair<PathId, PathId>> KGraph::lambda_min_or_empty(PathId lam, PathId mu) const {
  if (range_of(lam) != range_of(mu)) return {};
  return lambda_min(lam, mu);
}

std::vector<PathId> KGraph::ext(PathId lam, std::span<const PathId> E) const {
  std::vector<PathId> out;
  for (PathId nu : E) {
    if (range_of(nu) != range_of(lam))
      throw Error(Errc::range_mismatch, "Ext member " + path_str(nu) + " has range != r(" + path_str(lam) + ")");
    for (const auto& [alpha, beta] : lambda_min(lam, nu)) {
      (void)beta;
      out.push_back(alpha);
    }
  }
  std::sort(out.begin(), out.end(), [&](PathId a, PathId b) { return path_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExhaustivenessResult KGraph::is_exhaustive(int v, std::span<const PathId> E,
                                           std::optional<DegreeVector> bound) const {
  DegreeVector joined = zero();
  for (PathId lam : E) {
    if (range_of(lam) != v)
      throw Error(Errc::range_mismatch, "member " + path_str(lam) + " is not in v-Lambda");
    joined = join(joined, degree(lam));
  }
  DegreeVector b = bound.value_or(joined);
  if (!leq(joined, b))
    throw Error(Errc::bad_argument, "exhaustiveness bound " + b.str() + " below join of member degrees");
  for (const auto& p : degrees_upto(b)) {
    for (PathId mu : paths_from(v, p)) {
      bool met = false;
      for (PathId lam : E)
        if (!lambda_min(lam, mu).empty()) {
          met = true;
          break;
        }
      if (!met) return {false, mu, b};
    }
  }
  return {true, std::nullopt, b};
}

bool KGraph::path_less(PathId a, PathId b) const {
  const PathData& pa = paths_[a];
  const PathData& pb = paths_[b];
  if (pa.degree != pb.degree) return lex_less(pa.degree, pb.degree);
  if (pa.word != pb.word) return pa.word < pb.word;
  return pa.range < pb.range;
}

void KGraph::sort_paths(std::vector<PathId>& ps) const {
  std::sort(ps.begin(), ps.end(), [&](PathId a, PathId b) { return path_less(a, b); });
}

std::string KGraph::path_str(PathId p) const {
  const PathData& pd = paths_[p];
  if (pd.word.empty()) return vertex_names_[pd.range];
  std::string s;
  for (size_t i = 0; i < pd.word.size(); ++i) {
    if (i) s += '.';
    s += edge_names_[pd.word[i]];
  }
  return s;
}

PathId KGraph::parse_path(const std::string& literal) const {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : literal) {
    if (ch == '.') {
      toks.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  toks.push_back(cur);
  if (toks.size() == 1) {
    if (auto v = vertex_index(toks[0])) return vertex_path(*v);
  }
  std::vector<int> edges;
  for (const auto& t : toks) {
    auto e = edge_index(t);
    if (!e) throw Error(Errc::parse_error, "unknown edge '" + t + "' in path literal '" + literal + "'");
    edges.push_back(*e);
  }
  return path_from_edges(edges);
}

void KGraph::inject_backward_square_fault(int edge_c1, int edge_d1, int edge_c2, int edge_d2) {
  auto k1 = pair_key(edge_c1, edge_d1);
  auto k2 = pair_key(edge_c2, edge_d2);
  auto i1 = bwd_.find(k1);
  auto i2 = bwd_.find(k2);
  if (i1 == bwd_.end() || i2 == bwd_.end())
    throw Error(Errc::bad_argument, "fault injection targets are not square right-hand pairs");
  std::swap(i1->second, i2->second);
  compose_memo_.clear();
  segment_memo_.clear();
  enum_memo_.clear();
  mce_memo_.clear();
}

std::vector<std::pair<PathId, PathId>> brute_force_lambda_min(const KGraph& g, PathId lam, PathId mu) {
  if (g.range_of(lam) != g.range_of(mu)) throw Error(Errc::range_mismatch, "brute force needs a common range");
  DegreeVector big = join(g.degree(lam), g.degree(mu));
  std::vector<std::pair<PathId, PathId>> out;
  for (PathId alpha : g.paths_from(g.source_of(lam), big - g.degree(lam)))
    for (PathId beta : g.paths_from(g.source_of(mu), big - g.degree(mu)))
      if (g.compose(lam, alpha) == g.compose(mu, beta)) out.emplace_back(alpha, beta);
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return g.path_less(x.first, y.first);
    return g.path_less(x.second, y.second);
  });
  return out;
}

}  // namespace kgr
