#pragma once

// Windowed enumeration of a block: E-alcoves around a base facet, folded by W_{x/m}(E),
// with the eigenvalue point of each class.

#include "spiral/cuspidal.hpp"
#include "spiral/daha.hpp"
#include "spiral/relweyl.hpp"

#include <vector>

namespace spiral {

struct BlockClass {
    std::vector<int> members;  // indices into Block::alcoves
    std::vector<Vec> eigen_points;  // one per member, in the span of the base
    Vec eigen_point;                // of the first member
};

struct Block {
    CuspidalDatum datum;
    RelevantSubspace E;
    std::vector<Facet> alcoves;  // BFS order from the base
    OrbitPartition partition;
    std::vector<BlockClass> classes;
};

/// Throws NoCuspidalDatum if no registry entry has the type of span(base).
Block block_facets(const RootDatum& d, const GradingDatum& g, const Facet& base, int depth,
                   const std::vector<CuspidalDatum>& registry, std::uint64_t seed = 0);

}  // namespace spiral
