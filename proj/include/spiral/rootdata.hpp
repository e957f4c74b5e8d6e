#pragma once

// Restricted root data of (G, sigma) and the real affine roots on the apartment.
// Apartment coordinates: y_j = <alpha_j, y> for the restricted simple roots alpha_j,
// so a root with simple-root coefficients c pairs with y as sum_j c_j y_j.

#include "spiral/chevalley.hpp"
#include "spiral/linalg.hpp"
#include "spiral/rational.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace spiral {

/// The affine function <alpha, y> + level/e.
struct AffineRoot {
    int root = 0;
    int level = 0;
    friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
    friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

/// (root index, class mod e).
using GradedLabel = std::pair<int, int>;

/// Hyperplanes {<beta, y> = k/denom : k mod denom in residues} for one positive indivisible beta.
struct HyperplaneFamily {
    int root = 0;
    int denom = 1;
    std::vector<int> residues;
};

struct RootDatum {
    char series = 'A';
    int rank = 0;  // rank of the untwisted algebra
    int e = 1;
    int dim = 0;   // dimension of the apartment
    std::shared_ptr<const ChevalleyAlgebra> algebra;
    FoldResult fold;

    std::vector<IntVec> roots;  // positives by (height, lex), then negatives in the same order
    int num_positive = 0;
    std::vector<GradedLabel> graded_support;  // sorted
    std::vector<int> cartan_graded_dims;
    linalg::QMatrix killing;
    linalg::QMatrix killing_inv;
    std::vector<Vec> coroots;
    std::vector<HyperplaneFamily> families;

    int root_index(const IntVec& coeffs) const;
    int negative(int a) const { return a < num_positive ? a + num_positive : a - num_positive; }
    bool in_support(int root, int cls) const;
    std::vector<int> classes_of(int root) const;
    /// Index of the family containing root or its negative/half, -1 never happens for valid roots.
    int family_of(int root) const;
    Vec covector(int root) const { return to_vec(roots[root]); }
    /// Linear coordinates of rho^vee: pairs to 1 with every simple root.
    Vec rho_vee() const { return Vec(dim, Rational(1)); }
    int ambient_dim() const { return algebra->dim(); }

private:
    std::map<IntVec, int> index_;
    friend RootDatum build_root_datum(char series, int rank, int e);
};

/// Throws InvalidType or InvalidTwist.
RootDatum build_root_datum(char series, int rank, int e);

Rational killing_pairing(const RootDatum& d, const Vec& x, const Vec& y);
Rational eval_affine_root(const RootDatum& d, const AffineRoot& a, const Vec& y);
/// Dual form on covectors, used for root lengths.
Rational dual_pairing(const RootDatum& d, const Vec& a, const Vec& b);

/// One affine root per hyperplane through y, sorted.
std::vector<AffineRoot> vanishing_roots(const RootDatum& d, const Vec& y);

bool is_family_level(const RootDatum& d, const HyperplaneFamily& f, const Rational& value);
/// Affine root with zero set {<beta, y> = value}; prefers beta over 2 beta.
AffineRoot family_affine_root(const RootDatum& d, const HyperplaneFamily& f, const Rational& value);

}  // namespace spiral
