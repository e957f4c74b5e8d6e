#include "spiral/block.hpp"

#include "spiral/errors.hpp"

namespace spiral {

Block block_facets(const RootDatum& d, const GradingDatum& g, const Facet& base, int depth,
                   const std::vector<CuspidalDatum>& registry, std::uint64_t seed) {
    if (depth < 0) fail(ErrorCode::InvalidArgument, "depth must be non-negative");
    Block b;
    b.E = span_of_facet(d, base);
    auto type = pseudo_levi(d, b.E).type;
    auto datum = find_datum(registry, type);
    if (!datum) fail(ErrorCode::NoCuspidalDatum, "no cuspidal datum of type " + type + " in the registry");
    b.datum = *datum;
    auto cert = validate_datum(d, b.datum, b.E, seed);
    if (b.E.dim() == 0) {
        b.alcoves = {base};
    } else {
        auto G = rel_weyl_group(d, b.E, base, &cert.representative);
        b.alcoves = enumerate_E_alcoves(d, G, depth);
    }
    b.partition = wx_subgroup_orbits(d, g, b.E, b.alcoves);
    for (const auto& orbit : b.partition.orbits) {
        BlockClass c;
        c.members = orbit;
        for (int i : orbit) c.eigen_points.push_back(eigen_point(d, g, b.alcoves[i], base));
        c.eigen_point = c.eigen_points.front();
        b.classes.push_back(std::move(c));
    }
    return b;
}

}  // namespace spiral
