#pragma once

// Facets of the affine hyperplane arrangement, alcove walks and affine isometries.
// Arrangement is coordinate-agnostic so the same code serves the apartment and
// the relevant affine subspaces E.

#include "spiral/linalg.hpp"
#include "spiral/rootdata.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace spiral {

/// y -> linear * y + translation.
struct AffineIsometry {
    linalg::QMatrix linear;
    Vec translation;

    static AffineIsometry identity(int dim);
    Vec apply(const Vec& y) const;
    /// (this o other)(y) = this(other(y)).
    AffineIsometry compose(const AffineIsometry& other) const;
    AffineIsometry inverse() const;
    bool is_identity() const;
    friend bool operator==(const AffineIsometry& a, const AffineIsometry& b) {
        return a.linear == b.linear && a.translation == b.translation;
    }
    friend bool operator<(const AffineIsometry& a, const AffineIsometry& b) {
        return std::tie(a.linear, a.translation) < std::tie(b.linear, b.translation);
    }
};

/// Normalized hyperplane: leading nonzero coefficient of the linear part is 1.
using HyperplaneKey = std::pair<Vec, Rational>;

/// Families of parallel hyperplanes {value_f(y) = level} with periodic level sets.
class Arrangement {
public:
    struct Family {
        Vec linear;
        Rational offset = 0;
        int denom = 1;
        std::vector<int> residues;  // sorted, in [0, denom)
        int root = -1;              // source root of the datum
    };

    struct Wall {
        int family = 0;
        Rational level;
        int orientation = 1;  // sign of value - level on the alcove
        HyperplaneKey key;
    };

    Arrangement() = default;
    Arrangement(int dim, linalg::QMatrix gram, std::vector<Family> families);

    /// The apartment with one family per positive indivisible root.
    static Arrangement of_datum(const RootDatum& d);

    int dim() const { return dim_; }
    const linalg::QMatrix& gram() const { return gram_; }
    const std::vector<Family>& families() const { return families_; }

    Rational value(int f, const Vec& p) const { return dot(families_[f].linear, p) + families_[f].offset; }
    bool is_level(int f, const Rational& v) const;
    /// Largest level < v, smallest level > v.
    Rational level_below(int f, const Rational& v) const;
    Rational level_above(int f, const Rational& v) const;
    /// Levels l with lo < l <= hi.
    std::vector<Rational> levels_in(int f, const Rational& lo, const Rational& hi) const;
    HyperplaneKey key(int f, const Rational& level) const;
    /// Hyperplanes met by the segment (p, q]; a hyperplane through p never counts.
    std::set<HyperplaneKey> separating(const Vec& p, const Vec& q) const;
    /// Hyperplanes through p as (family, level), one per key.
    std::vector<std::pair<int, Rational>> through(const Vec& p) const;
    bool same_facet(const Vec& p, const Vec& q) const;
    AffineIsometry reflection(int f, const Rational& level) const;
    AffineIsometry reflection(const Wall& w) const { return reflection(w.family, w.level); }
    /// Walls of the open alcove containing p (p must avoid all hyperplanes), in family order.
    std::vector<Wall> walls(const Vec& p) const;
    bool is_generic(const Vec& p) const;
    Rational wall_value(const Wall& w, const Vec& p) const { return w.orientation * (value(w.family, p) - w.level); }

private:
    int dim_ = 0;
    linalg::QMatrix gram_;
    linalg::QMatrix gram_inv_;
    std::vector<Family> families_;
};

/// Base alcove of a walk: witness and its walls.
struct AlcoveChamber {
    Vec witness;
    std::vector<Arrangement::Wall> walls;
};

struct Reduction {
    AffineIsometry w;        // w(y) = reduced
    Vec reduced;
    std::vector<int> word;   // wall indices, first applied first
};

/// Greedy reflection across the first violated wall until the point lies in the closed chamber.
Reduction reduce_to_chamber(const Arrangement& arr, const AlcoveChamber& chamber, const Vec& y);

struct AlcoveRecord {
    AffineIsometry w;  // alcove = w(base)
    Vec witness;
    int distance = 0;
    std::vector<int> word;
};

/// BFS over galleries of length <= depth, deduplicated by witness.
std::vector<AlcoveRecord> enumerate_chambers(const Arrangement& arr, const AlcoveChamber& base, int depth);

/// Barycenter of the vertices of the chamber lying on the walls in J; nullopt if there are none.
std::optional<Vec> face_point(const Arrangement& arr, const AlcoveChamber& chamber, const std::vector<int>& J);

// ---- apartment-level operations ----

struct FacetKey {
    std::vector<int> face;  // walls of the fundamental alcove through the reduced point
    std::vector<int> word;
    friend bool operator==(const FacetKey&, const FacetKey&) = default;
};

struct Facet {
    Vec witness;
    std::vector<AffineRoot> vanishing;
    FacetKey key;
};

/// The alcove anchored at t rho^vee for small t.
const AlcoveChamber& fundamental_alcove(const RootDatum& d);
const Arrangement& apartment(const RootDatum& d);

Facet facet_of(const RootDatum& d, const Vec& y);
bool same_facet(const RootDatum& d, const Vec& y, const Vec& z);
bool same_facet(const RootDatum& d, const Facet& a, const Facet& b);
Reduction reduce_to_fundamental(const RootDatum& d, const Vec& y);
std::vector<Facet> enumerate_alcoves(const RootDatum& d, int depth);
/// Face of the closure of an alcove cut out by the walls J (indices into its walls). Throws EmptyFace.
Facet boundary_face(const RootDatum& d, const Facet& alcove, const std::vector<int>& J);
/// Walls of an alcove of the apartment, ordered as the corresponding walls of A_0.
std::vector<Arrangement::Wall> alcove_walls(const RootDatum& d, const Facet& alcove);
/// w with w(F) = F'. Throws NotConjugate.
AffineIsometry conjugating_element(const RootDatum& d, const Facet& from, const Facet& to);
bool is_alcove(const Facet& f);

}  // namespace spiral
