#include "spiral/pseudolevi.hpp"

#include "spiral/errors.hpp"

#include <algorithm>
#include <numeric>

namespace spiral {

using linalg::QMatrix;

std::vector<GradedLabel> restricted_system(const RootDatum& d, const Vec& base, const std::vector<Vec>& directions) {
    std::vector<GradedLabel> out;
    for (const auto& [r, i] : d.graded_support) {
        bool flat = std::all_of(directions.begin(), directions.end(),
                                [&](const Vec& v) { return dot(d.roots[r], v) == 0; });
        if (!flat) continue;
        if (is_integer(dot(d.roots[r], base) + make_rational(i, d.e))) out.emplace_back(r, i);
    }
    return out;
}

RelevantSubspace span_of_facet(const RootDatum& d, const Facet& f) {
    RelevantSubspace E;
    E.spanning = f;
    E.base = f.witness;
    QMatrix rows;
    for (const auto& a : f.vanishing) rows.push_back(d.covector(a.root));
    if (rows.empty()) {
        for (int i = 0; i < d.dim; ++i) {
            Vec v(d.dim, Rational(0));
            v[i] = 1;
            E.directions.push_back(v);
        }
    } else {
        E.directions = linalg::nullspace(rows, d.dim);
    }
    E.R_E = restricted_system(d, E.base, E.directions);
    return E;
}

PseudoLevi pseudo_levi(const RootDatum& d, const RelevantSubspace& E) {
    PseudoLevi L;
    L.R_E = E.R_E;
    std::vector<int> seen;
    for (const auto& [r, i] : L.R_E) seen.push_back(r);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        fail(ErrorCode::InvalidArgument, "R_E does not project injectively to the roots");

    Vec z(d.dim);
    Rational p = 1;
    for (int j = 0; j < d.dim; ++j, p *= 13) z[j] = p;
    for (int k = 0; k < static_cast<int>(L.R_E.size()); ++k)
        if (dot(d.roots[L.R_E[k].first], z) > 0) L.positive.push_back(k);
    std::vector<int> raw_simple;
    for (int k : L.positive) {
        const IntVec& g = d.roots[L.R_E[k].first];
        bool decomposable = false;
        for (int a : L.positive) {
            IntVec rest(g.size());
            for (std::size_t j = 0; j < g.size(); ++j) rest[j] = g[j] - d.roots[L.R_E[a].first][j];
            for (int b : L.positive)
                if (d.roots[L.R_E[b].first] == rest) decomposable = true;
            if (decomposable) break;
        }
        if (!decomposable) raw_simple.push_back(k);
    }
    const int n = static_cast<int>(raw_simple.size());
    CartanMatrix raw(n, IntVec(n));
    std::vector<Rational> lengths(n);
    for (int a = 0; a < n; ++a) {
        Vec ga = d.covector(L.R_E[raw_simple[a]].first);
        lengths[a] = dual_pairing(d, ga, ga);
        for (int b = 0; b < n; ++b) {
            Vec gb = d.covector(L.R_E[raw_simple[b]].first);
            Rational c = 2 * dual_pairing(d, ga, gb) / lengths[a];
            raw[a][b] = static_cast<int>(to_int64(c));
        }
    }
    auto comps = classify(raw, lengths);
    std::vector<int> order;
    for (const auto& c : comps) order.insert(order.end(), c.nodes.begin(), c.nodes.end());
    std::vector<int> where(n);
    for (int k = 0; k < n; ++k) where[order[k]] = k;
    for (int k : order) L.simple.push_back(raw_simple[k]);
    L.cartan.assign(n, IntVec(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) L.cartan[a][b] = raw[order[a]][order[b]];
    for (auto c : comps) {
        for (auto& node : c.nodes) node = where[node];
        L.components.push_back(c);
    }
    L.type = type_label(L.components);
    L.semisimple_rank = n;
    L.order = weyl_group_order(L.components);
    L.ell = static_cast<int>(L.positive.size());
    for (int k : L.simple) {
        int r = L.R_E[k].first;
        Rational c0 = dot(d.roots[r], E.base);
        AffineIsometry w = AffineIsometry::identity(d.dim);
        for (int i = 0; i < d.dim; ++i) {
            for (int j = 0; j < d.dim; ++j) w.linear[i][j] -= d.coroots[r][i] * d.roots[r][j];
            w.translation[i] = c0 * d.coroots[r][i];
        }
        L.generators.push_back(w);
    }
    return L;
}

PseudoLevi pseudo_levi_of(const RootDatum& d, const Facet& f) { return pseudo_levi(d, span_of_facet(d, f)); }

WeylStabilizer stabilizer_WE(const RootDatum& d, const RelevantSubspace& E) {
    auto L = pseudo_levi(d, E);
    return {L.generators, L.order, L.ell};
}

Vec project_to_subspace(const RootDatum& d, const RelevantSubspace& E, const Vec& z) {
    if (E.directions.empty()) return E.base;
    const int k = E.dim();
    Vec diff(d.dim);
    for (int i = 0; i < d.dim; ++i) diff[i] = z[i] - E.base[i];
    QMatrix gram(k, Vec(k));
    Vec rhs(k);
    for (int a = 0; a < k; ++a) {
        Vec ka = linalg::apply(d.killing, E.directions[a]);
        rhs[a] = dot(ka, diff);
        for (int b = 0; b < k; ++b) gram[a][b] = dot(ka, E.directions[b]);
    }
    auto s = linalg::solve(gram, rhs, k);
    Vec out = E.base;
    for (int a = 0; a < k; ++a)
        for (int i = 0; i < d.dim; ++i) out[i] += (*s)[a] * E.directions[a][i];
    return out;
}

Vec origin_projection(const RootDatum& d, const RelevantSubspace& E) {
    return project_to_subspace(d, E, Vec(d.dim, Rational(0)));
}

Vec subspace_coordinates(const RootDatum& d, const RelevantSubspace& E, const Vec& y) {
    Vec b = origin_projection(d, E);
    Vec diff(d.dim);
    for (int i = 0; i < d.dim; ++i) diff[i] = y[i] - b[i];
    QMatrix cols = linalg::from_columns(E.directions, d.dim);
    auto s = linalg::solve(cols, diff, E.dim());
    if (!s) fail(ErrorCode::NotInGroup, "point " + to_string(y) + " is not on E");
    return *s;
}

bool contains_point(const RootDatum& d, const RelevantSubspace& E, const Vec& y) {
    return project_to_subspace(d, E, y) == y;
}

const AlgebraElement& root_vector(const RootDatum& d, const GradedLabel& label) {
    const auto& fr = d.fold.roots[label.first];
    for (std::size_t k = 0; k < fr.classes.size(); ++k)
        if (fr.classes[k] == label.second) return fr.vectors[k];
    fail(ErrorCode::InvalidArgument, "label not in the graded support");
}

LeviSubalgebra levi_subalgebra(const RootDatum& d, const PseudoLevi& levi) {
    LeviSubalgebra out;
    for (const auto& lab : levi.R_E) out.roots.push_back({d.roots[lab.first], root_vector(d, lab)});
    out.cartan = d.fold.cartan_vectors[0];
    out.semisimple_rank = levi.semisimple_rank;
    return out;
}

}  // namespace spiral
