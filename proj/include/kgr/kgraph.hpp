#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgr/degree.hpp"
#include "kgr/error.hpp"
#include "kgr/skeleton.hpp"

namespace kgr {

// Paths are interned per graph; a PathId is only meaningful together with the
// KGraph that produced it.
using PathId = std::int32_t;

struct PathData {
  std::vector<std::int32_t> word;  // edge indices in color-sorted normal form
  std::int32_t range = -1;         // vertex index
  std::int32_t source = -1;
  DegreeVector degree;
};

struct ExhaustivenessResult {
  bool exhaustive = false;
  std::optional<PathId> witness;  // a path missed by every member, when not exhaustive
  DegreeVector bound;             // the degree bound actually scanned
};

class KGraph {
 public:
  // Checks the factorization data: squares form a complete bijection between
  // composable bicolored pairs, and for rank >= 3 every tricolored word
  // rewrites to a unique color-sorted normal form.
  static KGraph validate(const Skeleton& skel);

  int rank() const { return k_; }
  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edge_names_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::string& edge_name(int e) const { return edge_names_[e]; }
  int edge_color(int e) const { return edge_color_[e]; }
  int edge_range(int e) const { return edge_range_[e]; }
  int edge_source(int e) const { return edge_source_[e]; }
  std::optional<int> vertex_index(const std::string& id) const;
  std::optional<int> edge_index(const std::string& id) const;
  const std::vector<int>& edges_with_range(int v, int color) const {
    return out_edges_[v][color - 1];
  }
  const std::vector<int>& edges_with_source(int v, int color) const {
    return in_edges_[v][color - 1];
  }

  DegreeVector zero() const { return DegreeVector::zero(k_); }
  DegreeVector basis(int color) const { return DegreeVector::basis(k_, color); }

  // --- paths -------------------------------------------------------------
  PathId vertex_path(int v) const { return static_cast<PathId>(v); }
  // paths_ may reallocate while new paths are interned, so degree is returned
  // by value and PathData references must not be held across path operations
  const PathData& path(PathId p) const { return paths_[p]; }
  DegreeVector degree(PathId p) const { return paths_[p].degree; }
  int range_of(PathId p) const { return paths_[p].range; }
  int source_of(PathId p) const { return paths_[p].source; }
  bool is_vertex(PathId p) const { return paths_[p].word.empty(); }

  // Builds a path from an arbitrary composable edge word; normalizes.
  PathId path_from_edges(std::span<const int> edges) const;

  PathId compose(PathId lam, PathId mu) const;                          // s(lam) = r(mu)
  PathId segment(PathId lam, const DegreeVector& m, const DegreeVector& n) const;
  PathId prefix(PathId lam, const DegreeVector& m) const { return segment(lam, zero(), m); }
  PathId suffix(PathId lam, const DegreeVector& m) const { return segment(lam, m, degree(lam)); }
  int vertex_at(PathId lam, const DegreeVector& m) const { return range_of(suffix(lam, m)); }

  // mu is a prefix of lam
  bool extends(PathId lam, PathId mu) const;

  // all paths with range v and degree n, in canonical order
  const std::vector<PathId>& paths_from(int v, const DegreeVector& n) const;
  // all paths with source v and degree n (the set Lambda^n v), in canonical order
  const std::vector<PathId>& paths_into(int v, const DegreeVector& n) const;
  // all paths with range v and degree <= cap
  std::vector<PathId> paths_from_upto(int v, const DegreeVector& cap) const;
  // all paths of degree n from every vertex
  std::vector<PathId> all_paths_of_degree(const DegreeVector& n) const;
  std::vector<PathId> all_paths_upto(const DegreeVector& cap) const;

  // Lambda^min(lam, mu); throws range_mismatch when r(lam) != r(mu).
  const std::vector<std::pair<PathId, PathId>>& lambda_min(PathId lam, PathId mu) const;
  // Empty set when the ranges differ (used where the math reads as an empty sum).
  std::vector<std::pair<PathId, PathId>> lambda_min_or_empty(PathId lam, PathId mu) const;

  // Ext(lam; E) per the minimal-common-extension calculus.
  std::vector<PathId> ext(PathId lam, std::span<const PathId> E) const;

  // E subset of v-Lambda; scans mu with d(mu) <= bound (default: join of d(E)).
  ExhaustivenessResult is_exhaustive(int v, std::span<const PathId> E,
                                     std::optional<DegreeVector> bound = {}) const;

  // canonical order: (degree lex, word, range)
  bool path_less(PathId a, PathId b) const;
  void sort_paths(std::vector<PathId>& ps) const;

  std::string path_str(PathId p) const;
  PathId parse_path(const std::string& literal) const;

  // Fault injection for sensitivity testing: swaps the images of two entries
  // of the backward square table, leaving the forward table untouched.
  void inject_backward_square_fault(int edge_c1, int edge_d1, int edge_c2, int edge_d2);

 private:
  KGraph() = default;

  static std::int64_t pair_key(int a, int b) { return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b); }

  // moves one edge into a normal-form word at the source end
  void append_edge(std::vector<std::int32_t>& w, int e) const;
  PathId intern(std::vector<std::int32_t> word, int range) const;
  std::pair<PathId, PathId> split(PathId lam, const DegreeVector& m) const;

  // exhaustive rewriting used by the cube check
  void all_normal_forms(const std::vector<std::int32_t>& w,
                        std::vector<std::vector<std::int32_t>>& out) const;

  int k_ = 0;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::vector<int> edge_color_, edge_range_, edge_source_;
  std::unordered_map<std::int64_t, std::pair<int, int>> fwd_;  // (a,b) -> (c,d), color(a) < color(b)
  std::unordered_map<std::int64_t, std::pair<int, int>> bwd_;  // (c,d) -> (a,b), color(c) > color(d)
  std::vector<std::vector<std::vector<int>>> out_edges_;  // [v][color-1]: edges with range v
  std::vector<std::vector<std::vector<int>>> in_edges_;   // [v][color-1]: edges with source v

  struct WordHash {
    size_t operator()(const std::pair<std::int32_t, std::vector<std::int32_t>>& k) const {
      size_t h = std::hash<std::int32_t>()(k.first);
      for (auto x : k.second) h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
      return h;
    }
  };

  mutable std::vector<PathData> paths_;
  mutable std::unordered_map<std::pair<std::int32_t, std::vector<std::int32_t>>, PathId, WordHash>
      intern_table_;
  mutable std::unordered_map<std::int64_t, PathId> compose_memo_;
  mutable std::unordered_map<std::string, PathId> segment_memo_;
  mutable std::unordered_map<std::string, std::vector<PathId>> enum_memo_;
  mutable std::unordered_map<std::int64_t, std::vector<std::pair<PathId, PathId>>> mce_memo_;
};

// Test-oracle route, independent of the engine's prefix/segment route: the
// full double enumeration of candidate extension pairs.
std::vector<std::pair<PathId, PathId>> brute_force_lambda_min(const KGraph& g, PathId lam,
                                                              PathId mu);

}  // namespace kgr
