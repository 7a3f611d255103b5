#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mdc/graph.hpp"

namespace mdc {

// Partition of the edges of a cartesian product of p-vertex circulants into
// its n coordinate directions, recovered from adjacency alone.  Edges are
// keyed as (min,max) pairs of the undirected support; for a directed input
// both arc orientations share the direction of their support edge.
struct DirectionPartition {
    std::size_t direction_count = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> direction_of_edge;
    // copies[d][v] = sorted vertex set of the factor copy in direction d
    // through vertex v (the component of v in the direction-d subgraph).
    std::vector<std::vector<std::vector<std::size_t>>> copies;
};

// Recovers the coordinate directions of a product of connected circulants on
// p vertices (p odd) given without its labeling.  Directions are grown from
// shortest odd cycles through a root vertex -- such a cycle lies in a single
// factor copy -- and carried to the remaining vertices through shortest
// cycles (length 4) spanning two adjacent edges of different directions.
// Throws NotAProductInstance when the procedure cannot complete; factors of
// equal odd girth (cycle powers, complete-graph powers) are always resolved.
DirectionPartition detect_directions(const Graph& g, unsigned long p);

// Connected components of the neighborhood of u, as sorted vertex sets.  For
// products of complete graphs these classes are exactly the directions at u.
std::vector<std::vector<std::size_t>> neighborhood_direction_classes(const Graph& g, std::size_t u);

}  // namespace mdc
