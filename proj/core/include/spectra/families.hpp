#pragma once

#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

/// Path on n >= 1 vertices, 0-1-...-(n-1).
Graph path_graph(int n);

/// Cycle on n >= 3 vertices in circular order 0-1-...-(n-1)-0.
Graph cycle_graph(int n);

/// Complete multipartite graph; parts[i] is the size of part i (each >= 1,
/// at least one part). Vertices are numbered part by part.
Graph complete_multipartite(const std::vector<int>& parts);

/// Adds one new vertex (index n) adjacent to v only.
Graph attach_leaf(const Graph& g, int v);

/// Adds a path on k >= 1 new vertices n..n+k-1; the first is adjacent to v.
Graph attach_path(const Graph& g, int v, int k);

/// Cycle of order g >= 3 with a pendant leaf at every cycle vertex, plus a
/// tail: a path on 2t-3 vertices attached to cycle vertex 0, carrying two
/// pendant leaves at each odd tail position and one at each even position
/// (t >= 2). Order 2g+5t-7, girth g, and the spectrum is an interval of
/// exactly t sizes.
///
/// Vertex layout: cycle 0..g-1, cycle leaves g..2g-1 (leaf g+i on cycle
/// vertex i), tail vertices 2g..2g+2t-4 in path order, then tail leaves in
/// path order.
Graph decorated_cycle(int g, int t);

/// Two branch vertices 0 and 1 joined by three internally disjoint paths
/// with a, b, c edges. Lengths must be >= 1 with at most one equal to 1.
/// Internal vertices are numbered arm by arm.
Graph theta_graph(int a, int b, int c);

/// Disjoint union; h's vertices are shifted up by g.vertex_count().
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace spectra
