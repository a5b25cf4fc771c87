#pragma once

#include <string>
#include <string_view>

#include "kgr/kgraph.hpp"
#include "kgr/skeleton.hpp"

namespace kgr {

// Graph definition text format, one declaration per line, '#' comments:
//   kgraph 1
//   k <int>
//   vertex <id>
//   edge <id> color=<i> range=<v> source=<w>
//   square <a> <b> = <c> <d>
Skeleton parse_skeleton(std::string_view text);

// parse + validate
KGraph parse_graph(std::string_view text);
KGraph load_graph_file(const std::string& path);

}  // namespace kgr
