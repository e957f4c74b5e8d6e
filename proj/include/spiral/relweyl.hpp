#pragma once

// Relative affine Weyl groups W_a(E): walls of an E-alcove, Coxeter data, parameters c_H,
// the sets Xi_F and W_{x/m}(E)-orbits of E-alcoves.

#include "spiral/grading.hpp"
#include "spiral/pseudolevi.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace spiral {

/// E with coordinates s: y = origin + sum_i s_i directions_i, origin the projection of 0.
struct SubspaceGeometry {
    RelevantSubspace E;
    Vec origin;
    Arrangement arr;  // hyperplanes of E in s coordinates

    int dim() const { return E.dim(); }
    Vec to_apartment(const Vec& s) const;
    /// Throws InvalidArgument if y is not on E.
    Vec to_coords(const Vec& y) const;
};

SubspaceGeometry subspace_geometry(const RootDatum& d, const RelevantSubspace& E);

struct WallData {
    Arrangement::Wall wall;  // in s coordinates
    Vec alpha;               // alpha_H as a covector in s coordinates
    Rational alpha_constant;  // affine alpha_H(s) = alpha . s + alpha_constant
    Vec coroot;              // alpha_H^vee in s coordinates
    Vec point;               // apartment point of H generic in H
    std::vector<GradedLabel> R_H;
    std::vector<GradedLabel> n_plus;
    std::vector<int> weight_ratios;  // weight of each n_plus label over alpha_H
    std::optional<int> c;

    int ell() const { return static_cast<int>(R_H.size()) / 2; }
    Rational affine_value(const Vec& s) const { return dot(alpha, s) + alpha_constant; }
};

/// Walls of the E-alcove A (an apartment facet spanning E), without parameters.
std::vector<WallData> walls_of_alcove_in_E(const RootDatum& d, const SubspaceGeometry& geom, const Facet& A);

/// c_H = 1 + largest Jordan block of ad(nilpotent) on n^+.
int wall_parameter(const RootDatum& d, const WallData& w, const AlgebraElement& nilpotent);

constexpr int kInfiniteOrder = 0;

/// Order of r_H r_H' by iterating the isometry; kInfiniteOrder for parallel walls, -1 if not found by 12.
int coxeter_order_direct(const Arrangement& arr, const Arrangement::Wall& h, const Arrangement::Wall& hp);
/// Order from the lengths of R_{H cap H'}, R_H, R_H', R_E.
int coxeter_order_formula(const RootDatum& d, const SubspaceGeometry& geom, const WallData& h, const WallData& hp);

struct RelWeylGroup {
    SubspaceGeometry geom;
    Facet base;
    Vec base_coords;
    std::vector<WallData> walls;
    std::vector<std::vector<int>> coxeter;         // from the length formula
    std::vector<std::vector<int>> coxeter_direct;  // from isometries
    std::vector<int> params;                       // empty without a nilpotent element
    std::vector<AffineIsometry> generators;        // s coordinates
    int ell_E = 0;
};

/// Throws ZeroDimensional, OrderMismatch, ParameterMismatch.
RelWeylGroup rel_weyl_group(const RootDatum& d, const RelevantSubspace& E, const Facet& A,
                            const AlgebraElement* nilpotent);

/// Reduced word (indices of simple walls) of an element of W_a(E); nullopt if w is not in the group.
std::optional<std::vector<int>> reduced_word(const RelWeylGroup& G, const AffineIsometry& w);

/// Gallery-window E-alcoves as apartment facets, BFS order from the base.
std::vector<Facet> enumerate_E_alcoves(const RootDatum& d, const RelWeylGroup& G, int depth);

/// Alcoves of the W_F-orbit of ref whose closure contains F. Checks the count |W_F| / |W_A|.
std::vector<Facet> xi_F(const RootDatum& d, const Facet& F, const Facet& ref);

struct OrbitPartition {
    std::vector<std::vector<int>> orbits;  // indices into the alcove list, each sorted, ordered by first index
    std::size_t group_order = 1;           // |W_{x/m}|
    std::size_t stabilizer_order = 1;      // elements preserving E
};

/// Partition of E-alcoves under W_{x/m} intersected with the stabilizer of E. Throws GroupTooLarge.
OrbitPartition wx_subgroup_orbits(const RootDatum& d, const GradingDatum& g, const RelevantSubspace& E,
                                  const std::vector<Facet>& alcoves, std::size_t max_order = 200000);

/// Closure of a set of apartment isometries under composition. Throws GroupTooLarge.
std::vector<AffineIsometry> group_closure(const std::vector<AffineIsometry>& gens, int dim, std::size_t max_order);

}  // namespace spiral
