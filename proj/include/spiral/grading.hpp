#pragma once

// Z/mZ-gradings theta_x from an integral cocharacter, spirals and splittings of facets.

#include "spiral/pseudolevi.hpp"

#include <map>
#include <optional>
#include <vector>

namespace spiral {

struct GradingDatum {
    Vec x;  // integral, in the coweight coordinates of the apartment
    int m = 1;
    int eta = 1;
    int epsilon = 1;

    /// Validates integrality of x, m > 0, e | m and eta != 0.
    static GradingDatum make(const RootDatum& d, Vec x, int m, int eta);
    Vec x_over_m() const;
};

struct GradedPiece {
    int n = 0;  // class representative in [0, m)
    std::vector<GradedLabel> roots;
    int cartan_dim = 0;
};

/// Labels (alpha, i) with <alpha, x>/m + i/e in n/m + Z.
GradedPiece graded_piece(const RootDatum& d, const GradingDatum& g, int n);
bool in_graded_piece(const RootDatum& d, const GradingDatum& g, const GradedLabel& label, int n);
/// Cartan classes i with i/e in n/m + Z.
bool cartan_in_piece(const RootDatum& d, const GradingDatum& g, int cls, int n);

struct SpiralDegree {
    std::vector<GradedLabel> roots;
    int cartan = 0;
    friend bool operator==(const SpiralDegree&, const SpiralDegree&) = default;
};

struct Spiral {
    Facet facet;
    GradingDatum datum;
    Vec lambda;  // epsilon (x - m y)
    std::map<int, SpiralDegree> degrees;  // |n| <= window
};

Vec spiral_lambda(const GradingDatum& g, const Vec& y);
Spiral spiral_of_facet(const RootDatum& d, const GradingDatum& g, const Facet& f, int window);
Spiral spiral_of_point(const RootDatum& d, const GradingDatum& g, const Vec& y, int window);

struct GradingElement {
    Vec j;  // x - m p_E(x/m)
    std::vector<std::pair<GradedLabel, Rational>> pairings;  // one per label of R_E
};

/// Throws IntegralityFailure if some pairing with R_E is not an integer.
GradingElement grading_element(const RootDatum& d, const GradingDatum& g, const RelevantSubspace& E);

struct SplittingDatum {
    PseudoLevi levi;
    GradingElement grading;
    Vec lambda;
    std::map<int, std::vector<GradedLabel>> graded_roots;  // labels with <alpha, lambda> = epsilon n
    int cartan_degree_zero = 0;
};

SplittingDatum splitting_of_facet(const RootDatum& d, const GradingDatum& g, const Facet& f, int window);

/// Combined weight of a label of the spiral at degree n; root = nullopt means a Cartan class.
/// Throws LabelNotInSpiral.
Rational s_weight(const RootDatum& d, const GradingDatum& g, const Facet& f, std::optional<int> root, int cls,
                  int n);

/// Largest |<alpha, lambda>| over the roots; windows at least this large see every splitting degree.
int natural_window(const RootDatum& d, const Vec& lambda);

}  // namespace spiral
