#pragma once

// The graded double affine Hecke algebra H_c attached to a relative affine Weyl group,
// in PBW normal form u^a * p * w, with its specialization u -> -nu, delta -> 1.

#include "spiral/grading.hpp"
#include "spiral/relweyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace spiral {

/// Exponents of delta, d1..dk.
using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Rational>;

struct DahaKey {
    int u = 0;
    Monomial mono;
    AffineIsometry w;
    friend bool operator<(const DahaKey& a, const DahaKey& b) {
        return std::tie(a.u, a.mono, a.w) < std::tie(b.u, b.mono, b.w);
    }
    friend bool operator==(const DahaKey& a, const DahaKey& b) {
        return a.u == b.u && a.mono == b.mono && a.w == b.w;
    }
};

struct DahaElement {
    std::map<DahaKey, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const DahaKey& key, const Rational& c);
    DahaElement& operator+=(const DahaElement& other);
    DahaElement& operator-=(const DahaElement& other);
    friend DahaElement operator+(DahaElement a, const DahaElement& b) { return a += b; }
    friend DahaElement operator-(DahaElement a, const DahaElement& b) { return a -= b; }
    friend DahaElement operator*(const Rational& c, const DahaElement& a);
    friend bool operator==(const DahaElement& a, const DahaElement& b) { return a.terms == b.terms; }
    /// u exponent plus total polynomial degree, maximized over terms; -1 for zero.
    int degree() const;
};

class DahaAlgebra {
public:
    /// Requires the parameters of G. Throws InvalidArgument.
    explicit DahaAlgebra(RelWeylGroup group);

    const RelWeylGroup& group() const { return group_; }
    int num_variables() const { return k_ + 1; }
    int num_simple() const { return static_cast<int>(roots_.size()); }
    /// Homogenized simple root: delta coefficient alpha_i(b_E), then the linear part.
    const Vec& simple_root(int i) const { return roots_[i]; }
    const Vec& coroot(int i) const { return group_.walls[i].coroot; }
    int param(int i) const { return group_.params[i]; }

    DahaElement scalar(const Rational& c) const;
    DahaElement u() const;
    DahaElement delta() const;
    DahaElement coordinate(int j) const;  // d_j, 1-based
    DahaElement linear(const Vec& form) const;  // delta coefficient first
    DahaElement simple(int i) const;            // s_i, 0-based
    /// Throws NotInGroup.
    DahaElement group_element(const AffineIsometry& w) const;
    DahaElement translation(const Vec& v) const;
    DahaElement polynomial(const Polynomial& p) const;

    DahaElement multiply(const DahaElement& a, const DahaElement& b) const;
    DahaElement power(const DahaElement& a, int n) const;
    /// ^w p: (^w f)(s) = f(w^{-1} s) on affine functions, delta fixed.
    Polynomial act(const AffineIsometry& w, const Polynomial& p) const;
    /// (p - ^{s_i} p) / alpha_i; throws DivisionFailure if the remainder is nonzero.
    Polynomial divided_difference(int i, const Polynomial& p) const;

    /// u -> -nu, delta -> 1.
    DahaElement specialize(const DahaElement& a, const Rational& nu) const;
    DahaElement multiply_specialized(const DahaElement& a, const DahaElement& b, const Rational& nu) const;

    std::vector<int> word(const AffineIsometry& w) const;
    std::string to_string(const DahaElement& a) const;
    /// Grammar: numbers (p/q), u, delta, d1..dk, s1..sn, t[v], + - * ^ and parentheses.
    DahaElement parse(const std::string& text) const;

private:
    RelWeylGroup group_;
    int k_ = 0;
    std::vector<Vec> roots_;

    mutable std::mutex mutex_;
    mutable std::map<AffineIsometry, std::vector<int>> words_;
    mutable std::map<std::pair<AffineIsometry, Monomial>, DahaElement> moves_;

    DahaElement left_simple(int i, const DahaElement& x) const;
    DahaElement move_past(const AffineIsometry& w, const Monomial& m) const;
};

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b);
/// p / l for a linear form l; returns quotient and remainder.
std::pair<Polynomial, Polynomial> poly_divide_linear(const Polynomial& p, const Vec& l);

/// Projection of x/m onto the span of A, moved to the span of base by a conjugating element.
/// Throws NotConjugate.
Vec eigen_point(const RootDatum& d, const GradingDatum& g, const Facet& A, const Facet& base);

}  // namespace spiral
