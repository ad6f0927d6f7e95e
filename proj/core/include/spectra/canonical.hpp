#pragma once

#include <string>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

/// Canonical relabeling map (vertex v becomes label[v]): isomorphic graphs
/// produce identical relabeled graphs. Computed per connected component by
/// iterated neighborhood refinement plus backtracking individualization;
/// components are ordered by size, then by their canonical adjacency.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

/// graph6 encoding of the canonical form; equal exactly for isomorphic
/// graphs, so it serves as an isomorphism-class key.
std::string canonical_graph6(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace spectra
