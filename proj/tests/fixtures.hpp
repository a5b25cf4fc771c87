#pragma once

#include <string>

#include "kgr/parse.hpp"

namespace fixtures {

// Omega_{2,(2,2)} grid
inline const char* G1 = R"(kgraph 1
k 2
vertex v00
vertex v10
vertex v20
vertex v01
vertex v11
vertex v21
vertex v02
vertex v12
vertex v22
edge h00 color=1 range=v00 source=v10
edge h10 color=1 range=v10 source=v20
edge h01 color=1 range=v01 source=v11
edge h11 color=1 range=v11 source=v21
edge h02 color=1 range=v02 source=v12
edge h12 color=1 range=v12 source=v22
edge u00 color=2 range=v00 source=v01
edge u10 color=2 range=v10 source=v11
edge u20 color=2 range=v20 source=v21
edge u01 color=2 range=v01 source=v02
edge u11 color=2 range=v11 source=v12
edge u21 color=2 range=v21 source=v22
square h00 u10 = u00 h01
square h10 u20 = u10 h11
square h01 u11 = u01 h02
square h11 u21 = u11 h12
)";

// one vertex, one square ef = fe
inline const char* G2 = R"(kgraph 1
k 2
vertex v
edge e color=1 range=v source=v
edge f color=2 range=v source=v
square e f = f e
)";

// one vertex, 2+2 edges, non-trivial bijection
inline const char* G3 = R"(kgraph 1
k 2
vertex v
edge a1 color=1 range=v source=v
edge a2 color=1 range=v source=v
edge b1 color=2 range=v source=v
edge b2 color=2 range=v source=v
square a1 b1 = b1 a1
square a1 b2 = b2 a2
square a2 b1 = b2 a1
square a2 b2 = b1 a2
)";

// two-vertex 1-graph u <- v
inline const char* G4 = R"(kgraph 1
k 1
vertex u
vertex v
edge e color=1 range=u source=v
)";

// one-vertex 3-graph, one edge per color
inline const char* G5 = R"(kgraph 1
k 3
vertex v
edge e color=1 range=v source=v
edge f color=2 range=v source=v
edge g color=3 range=v source=v
square e f = f e
square e g = g e
square f g = g f
)";

// 1-graph with two loops
inline const char* GA = R"(kgraph 1
k 1
vertex v
edge a color=1 range=v source=v
edge b color=1 range=v source=v
)";

// rank-2 graph whose only edges have color 2
inline const char* GB = R"(kgraph 1
k 2
vertex v
edge f color=2 range=v source=v
edge g color=2 range=v source=v
)";

// Omega_{2,(1,1)} unit grid
inline const char* OMEGA11 = R"(kgraph 1
k 2
vertex v00
vertex v10
vertex v01
vertex v11
edge h0 color=1 range=v00 source=v10
edge h1 color=1 range=v01 source=v11
edge u0 color=2 range=v00 source=v01
edge u1 color=2 range=v10 source=v11
square h0 u1 = u0 h1
)";

// complete bijective squares whose pairwise permutations do not commute,
// so the rank-3 cube condition fails
inline const char* CUBE_FAIL = R"(kgraph 1
k 3
vertex v
edge a1 color=1 range=v source=v
edge a2 color=1 range=v source=v
edge a3 color=1 range=v source=v
edge b color=2 range=v source=v
edge c color=3 range=v source=v
square a1 b = b a2
square a2 b = b a1
square a3 b = b a3
square a1 c = c a3
square a2 c = c a2
square a3 c = c a1
square b c = c b
)";

inline kgr::KGraph graph(const char* text) { return kgr::parse_graph(text); }

}  // namespace fixtures
