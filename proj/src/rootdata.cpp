#include "spiral/rootdata.hpp"

#include "spiral/errors.hpp"

#include <algorithm>

namespace spiral {

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

int RootDatum::root_index(const IntVec& coeffs) const {
    auto it = index_.find(coeffs);
    return it == index_.end() ? -1 : it->second;
}

bool RootDatum::in_support(int root, int cls) const {
    return std::binary_search(graded_support.begin(), graded_support.end(), GradedLabel{root, mod(cls, e)});
}

std::vector<int> RootDatum::classes_of(int root) const {
    std::vector<int> out;
    for (const auto& [r, c] : graded_support)
        if (r == root) out.push_back(c);
    return out;
}

int RootDatum::family_of(int root) const {
    int pos = root < num_positive ? root : negative(root);
    for (std::size_t f = 0; f < families.size(); ++f) {
        const IntVec& b = roots[families[f].root];
        if (families[f].root == pos) return static_cast<int>(f);
        IntVec twice(b.size());
        std::transform(b.begin(), b.end(), twice.begin(), [](int v) { return 2 * v; });
        if (twice == roots[pos]) return static_cast<int>(f);
    }
    return -1;
}

RootDatum build_root_datum(char series, int rank, int e) {
    if (e < 1 || e > 3) fail(ErrorCode::InvalidTwist, "twist order must be 1, 2 or 3");
    RootDatum d;
    d.series = series;
    d.rank = rank;
    d.e = e;
    auto alg = std::make_shared<ChevalleyAlgebra>(ChevalleyAlgebra::build(series, rank));
    d.fold = fold_by_pinned_auto(*alg, e);
    d.algebra = alg;
    d.dim = static_cast<int>(d.fold.node_orbits.size());
    d.num_positive = static_cast<int>(d.fold.roots.size()) / 2;
    for (std::size_t a = 0; a < d.fold.roots.size(); ++a) {
        d.roots.push_back(d.fold.roots[a].coeffs);
        d.index_.emplace(d.fold.roots[a].coeffs, static_cast<int>(a));
        for (int c : d.fold.roots[a].classes) d.graded_support.emplace_back(static_cast<int>(a), c);
    }
    std::sort(d.graded_support.begin(), d.graded_support.end());
    d.cartan_graded_dims = d.fold.cartan_graded_dims;

    const int k = d.dim;
    d.killing.assign(k, Vec(k, Rational(0)));
    for (const auto& [r, c] : d.graded_support)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) d.killing[i][j] += d.roots[r][i] * d.roots[r][j];
    auto inv = linalg::inverse(d.killing);
    if (!inv) fail(ErrorCode::InvalidType, "degenerate Killing form");
    d.killing_inv = *inv;

    for (const auto& r : d.roots) {
        Vec c = to_vec(r);
        Vec kc = linalg::apply(d.killing_inv, c);
        Rational len = dot(c, kc);
        for (auto& v : kc) v = 2 * v / len;
        d.coroots.push_back(kc);
    }

    for (int b = 0; b < d.num_positive; ++b) {
        const IntVec& beta = d.roots[b];
        bool divisible = std::all_of(beta.begin(), beta.end(), [](int v) { return v % 2 == 0; });
        if (divisible) {
            IntVec half(beta.size());
            std::transform(beta.begin(), beta.end(), half.begin(), [](int v) { return v / 2; });
            if (d.root_index(half) >= 0) continue;
        }
        IntVec twice(beta.size());
        std::transform(beta.begin(), beta.end(), twice.begin(), [](int v) { return 2 * v; });
        HyperplaneFamily f;
        f.root = b;
        f.denom = d.root_index(twice) >= 0 ? 2 * e : e;
        d.families.push_back(f);
        HyperplaneFamily& fam = d.families.back();
        for (int r = 0; r < fam.denom; ++r)
            if (is_family_level(d, fam, make_rational(r, fam.denom))) fam.residues.push_back(r);
    }
    return d;
}

Rational killing_pairing(const RootDatum& d, const Vec& x, const Vec& y) {
    return dot(x, linalg::apply(d.killing, y));
}

Rational dual_pairing(const RootDatum& d, const Vec& a, const Vec& b) {
    return dot(a, linalg::apply(d.killing_inv, b));
}

Rational eval_affine_root(const RootDatum& d, const AffineRoot& a, const Vec& y) {
    return dot(d.roots[a.root], y) + make_rational(a.level, d.e);
}

bool is_family_level(const RootDatum& d, const HyperplaneFamily& f, const Rational& value) {
    // <beta, y> = value is the zero set of beta - value, or of 2 beta - 2 value
    Rational n = -value * d.e;
    if (is_integer(n) && d.in_support(f.root, static_cast<int>(mod(to_int64(n), d.e)))) return true;
    if (f.denom == d.e) return false;
    IntVec twice = d.roots[f.root];
    for (auto& v : twice) v *= 2;
    int t = d.root_index(twice);
    Rational n2 = 2 * n;
    return is_integer(n2) && d.in_support(t, mod(to_int64(n2), d.e));
}

AffineRoot family_affine_root(const RootDatum& d, const HyperplaneFamily& f, const Rational& value) {
    Rational n = -value * d.e;
    if (is_integer(n) && d.in_support(f.root, mod(to_int64(n), d.e))) return {f.root, static_cast<int>(to_int64(n))};
    IntVec twice = d.roots[f.root];
    for (auto& v : twice) v *= 2;
    return {d.root_index(twice), static_cast<int>(to_int64(2 * n))};
}

std::vector<AffineRoot> vanishing_roots(const RootDatum& d, const Vec& y) {
    std::vector<AffineRoot> out;
    for (const auto& f : d.families) {
        Rational v = dot(d.roots[f.root], y);
        if (is_family_level(d, f, v)) out.push_back(family_affine_root(d, f, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spiral
