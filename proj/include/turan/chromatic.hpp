#pragma once

#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Size of a largest clique.
int clique_number(const Graph& g);

/// Exact chromatic number by backtracking k-coloring, k ascending from the
/// clique number.
int chromatic_number(const Graph& g);

/// True when g admits a proper coloring with `colors` colors.
bool is_colorable(const Graph& g, int colors);

/// Edges whose deletion lowers the chromatic number. Throws
/// std::invalid_argument on an edgeless graph.
std::vector<Edge> color_critical_edges(const Graph& g);

}  // namespace turan
