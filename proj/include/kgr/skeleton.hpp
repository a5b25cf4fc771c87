#pragma once

#include <string>
#include <vector>

namespace kgr {

struct SkeletonEdge {
  std::string id;
  int color = 0;  // 1..k
  std::string range;
  std::string source;
  int line = 0;
};

// a.b = c.d with color(a) = color(d) < color(b) = color(c)
struct SkeletonSquare {
  std::string a, b, c, d;
  int line = 0;
};

struct Skeleton {
  int rank = 0;
  std::vector<std::string> vertices;
  std::vector<SkeletonEdge> edges;
  std::vector<SkeletonSquare> squares;
};

}  // namespace kgr
