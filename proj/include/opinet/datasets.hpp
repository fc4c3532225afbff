#pragma once

#include <string_view>

#include "opinet/graph.hpp"

namespace opinet {

/// Built-in benchmark graphs:
///   "karate"          34-node unweighted Zachary karate club (78 edges)
///   "southern_women"  18 women, weights = co-attended-event counts from the
///                     Davis et al. 18x14 attendance table (A = B*B^T, zero diagonal)
///   "path3"           3-node path 1-2-3
///   "star4"           star K_{1,3} with center node 1
///   "complete(k)"     complete graph on k >= 2 nodes with unit weights
/// Unknown names raise errc::unknown_dataset.
Graph builtin_dataset(std::string_view name);

/// Complete graph on k nodes, unit weights, labels "1".."k".
Graph complete_graph(int k);

/// The karate edge list exactly as embedded (edge-list text resource).
std::string_view karate_edge_list();

/// Davis southern-women attendance incidence, row-major 18x14 zeros/ones,
/// women in the canonical order (Evelyn ... Flora).
const int* southern_women_incidence();

} // namespace opinet
