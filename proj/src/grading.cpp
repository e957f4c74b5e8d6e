#include "spiral/grading.hpp"

#include "spiral/errors.hpp"

#include <algorithm>

namespace spiral {

GradingDatum GradingDatum::make(const RootDatum& d, Vec x, int m, int eta) {
    if (static_cast<int>(x.size()) != d.dim)
        fail(ErrorCode::InvalidArgument, "x has " + std::to_string(x.size()) + " coordinates, expected " +
                                             std::to_string(d.dim));
    for (const auto& v : x)
        if (!is_integer(v)) fail(ErrorCode::InvalidArgument, "x must be integral");
    if (m <= 0) fail(ErrorCode::InvalidArgument, "m must be positive");
    if (m % d.e != 0) fail(ErrorCode::InvalidArgument, "m must be a multiple of the twist order");
    if (eta == 0) fail(ErrorCode::InvalidArgument, "eta must be nonzero");
    GradingDatum g;
    g.x = std::move(x);
    g.m = m;
    g.eta = eta;
    g.epsilon = eta > 0 ? 1 : -1;
    return g;
}

Vec GradingDatum::x_over_m() const {
    Vec out = x;
    for (auto& v : out) v /= m;
    return out;
}

bool in_graded_piece(const RootDatum& d, const GradingDatum& g, const GradedLabel& label, int n) {
    Rational v = dot(d.roots[label.first], g.x) / g.m + make_rational(label.second, d.e) - make_rational(n, g.m);
    return is_integer(v);
}

bool cartan_in_piece(const RootDatum& d, const GradingDatum& g, int cls, int n) {
    return is_integer(make_rational(cls, d.e) - make_rational(n, g.m));
}

GradedPiece graded_piece(const RootDatum& d, const GradingDatum& g, int n) {
    GradedPiece p;
    p.n = ((n % g.m) + g.m) % g.m;
    for (const auto& lab : d.graded_support)
        if (in_graded_piece(d, g, lab, n)) p.roots.push_back(lab);
    for (int i = 0; i < d.e; ++i)
        if (cartan_in_piece(d, g, i, n)) p.cartan_dim += d.cartan_graded_dims[i];
    return p;
}

Vec spiral_lambda(const GradingDatum& g, const Vec& y) {
    Vec out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = g.epsilon * (g.x[i] - g.m * y[i]);
    return out;
}

Spiral spiral_of_point(const RootDatum& d, const GradingDatum& g, const Vec& y, int window) {
    if (window < 0) fail(ErrorCode::InvalidArgument, "window must be non-negative");
    Spiral s;
    s.datum = g;
    s.lambda = spiral_lambda(g, y);
    for (int n = -window; n <= window; ++n) {
        SpiralDegree deg;
        for (const auto& lab : d.graded_support)
            if (in_graded_piece(d, g, lab, n) && dot(d.roots[lab.first], s.lambda) >= g.epsilon * n)
                deg.roots.push_back(lab);
        if (0 >= g.epsilon * n)
            for (int i = 0; i < d.e; ++i)
                if (cartan_in_piece(d, g, i, n)) deg.cartan += d.cartan_graded_dims[i];
        s.degrees.emplace(n, std::move(deg));
    }
    return s;
}

Spiral spiral_of_facet(const RootDatum& d, const GradingDatum& g, const Facet& f, int window) {
    Spiral s = spiral_of_point(d, g, f.witness, window);
    s.facet = f;
    return s;
}

GradingElement grading_element(const RootDatum& d, const GradingDatum& g, const RelevantSubspace& E) {
    GradingElement out;
    Vec p = project_to_subspace(d, E, g.x_over_m());
    out.j.resize(d.dim);
    for (int i = 0; i < d.dim; ++i) out.j[i] = g.x[i] - g.m * p[i];
    for (const auto& lab : E.R_E) {
        Rational v = dot(d.roots[lab.first], out.j);
        if (!is_integer(v))
            fail(ErrorCode::IntegralityFailure, "grading element pairs to " + to_string(v) + " with a root of R_E");
        out.pairings.emplace_back(lab, v);
    }
    return out;
}

int natural_window(const RootDatum& d, const Vec& lambda) {
    Rational best = 0;
    for (int a = 0; a < d.num_positive; ++a) best = std::max(best, abs(dot(d.roots[a], lambda)));
    return static_cast<int>(to_int64(Rational(ceil_of(best))));
}

SplittingDatum splitting_of_facet(const RootDatum& d, const GradingDatum& g, const Facet& f, int window) {
    SplittingDatum s;
    auto E = span_of_facet(d, f);
    s.levi = pseudo_levi(d, E);
    s.grading = grading_element(d, g, E);
    s.lambda = spiral_lambda(g, f.witness);
    for (int n = -window; n <= window; ++n) {
        std::vector<GradedLabel> labs;
        for (const auto& lab : d.graded_support)
            if (in_graded_piece(d, g, lab, n) && dot(d.roots[lab.first], s.lambda) == g.epsilon * n)
                labs.push_back(lab);
        s.graded_roots.emplace(n, std::move(labs));
    }
    s.cartan_degree_zero = d.cartan_graded_dims[0];
    return s;
}

Rational s_weight(const RootDatum& d, const GradingDatum& g, const Facet& f, std::optional<int> root, int cls,
                  int n) {
    Vec lambda = spiral_lambda(g, f.witness);
    Rational pairing_x = 0;
    if (root) {
        GradedLabel lab{*root, cls};
        if (!d.in_support(*root, cls) || !in_graded_piece(d, g, lab, n) ||
            dot(d.roots[*root], lambda) < g.epsilon * n)
            fail(ErrorCode::LabelNotInSpiral, "label is not in the spiral at degree " + std::to_string(n));
        pairing_x = dot(d.roots[*root], g.x);
    } else {
        if (cls < 0 || cls >= d.e || d.cartan_graded_dims[cls] == 0 || !cartan_in_piece(d, g, cls, n) ||
            0 < g.epsilon * n)
            fail(ErrorCode::LabelNotInSpiral, "Cartan class is not in the spiral at degree " + std::to_string(n));
    }
    // T weight + rotation weight (m/e) * e (n - <alpha,x>) / m + dilation weight -eta
    Rational rot = Rational(d.e) * (n - pairing_x) / g.m;
    return pairing_x + Rational(g.m, d.e) * rot - g.eta;
}

}  // namespace spiral
