#pragma once

// Relevant affine subspaces E, the root subsystem R_E and the pseudo-Levi data.

#include "spiral/affine.hpp"
#include "spiral/chevalley.hpp"
#include "spiral/rootsystem.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spiral {

struct RelevantSubspace {
    Facet spanning;
    Vec base;                     // the facet witness
    std::vector<Vec> directions;  // basis of the direction space
    std::vector<GradedLabel> R_E;

    int dim() const { return static_cast<int>(directions.size()); }
};

struct PseudoLevi {
    std::vector<GradedLabel> R_E;
    std::vector<int> positive;  // indices into R_E
    std::vector<int> simple;    // indices into R_E, canonical component order then Bourbaki order
    CartanMatrix cartan;        // on simple, same order
    std::vector<TypeComponent> components;  // nodes index into simple
    std::string type;
    int semisimple_rank = 0;
    std::vector<AffineIsometry> generators;  // W_E, one reflection per simple root
    std::uint64_t order = 1;
    int ell = 0;
};

RelevantSubspace span_of_facet(const RootDatum& d, const Facet& f);
std::vector<GradedLabel> restricted_system(const RootDatum& d, const Vec& base, const std::vector<Vec>& directions);
PseudoLevi pseudo_levi(const RootDatum& d, const RelevantSubspace& E);
PseudoLevi pseudo_levi_of(const RootDatum& d, const Facet& f);

struct WeylStabilizer {
    std::vector<AffineIsometry> generators;
    std::uint64_t order = 1;
    int ell = 0;
};
WeylStabilizer stabilizer_WE(const RootDatum& d, const RelevantSubspace& E);

/// Killing-orthogonal projection onto E.
Vec project_to_subspace(const RootDatum& d, const RelevantSubspace& E, const Vec& z);
/// Projection of the origin: the base point trivializing E.
Vec origin_projection(const RootDatum& d, const RelevantSubspace& E);
/// Coordinates s with y = origin_projection + sum_i s_i directions_i.
Vec subspace_coordinates(const RootDatum& d, const RelevantSubspace& E, const Vec& y);
bool contains_point(const RootDatum& d, const RelevantSubspace& E, const Vec& y);

/// The Levi subalgebra of the untwisted algebra spanned by R_E and the sigma-fixed Cartan.
LeviSubalgebra levi_subalgebra(const RootDatum& d, const PseudoLevi& levi);
/// The eigenvector spanning g^i(alpha) for a label of the graded support.
const AlgebraElement& root_vector(const RootDatum& d, const GradedLabel& label);

}  // namespace spiral
