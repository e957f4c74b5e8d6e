#include "spiral/relweyl.hpp"

#include "spiral/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace spiral {

using linalg::QMatrix;

Vec SubspaceGeometry::to_apartment(const Vec& s) const {
    Vec y = origin;
    for (std::size_t a = 0; a < E.directions.size(); ++a)
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += s[a] * E.directions[a][i];
    return y;
}

Vec SubspaceGeometry::to_coords(const Vec& y) const {
    Vec diff(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - origin[i];
    auto s = linalg::solve(linalg::from_columns(E.directions, y.size()), diff, E.directions.size());
    if (!s) fail(ErrorCode::InvalidArgument, "point " + to_string(y) + " is not on E");
    return *s;
}

SubspaceGeometry subspace_geometry(const RootDatum& d, const RelevantSubspace& E) {
    SubspaceGeometry g;
    g.E = E;
    g.origin = origin_projection(d, E);
    const int k = E.dim();
    QMatrix gram(k, Vec(k));
    for (int a = 0; a < k; ++a) {
        Vec ka = linalg::apply(d.killing, E.directions[a]);
        for (int b = 0; b < k; ++b) gram[a][b] = dot(ka, E.directions[b]);
    }
    std::vector<Arrangement::Family> fams;
    for (const auto& hf : d.families) {
        Arrangement::Family f;
        f.linear.resize(k);
        bool zero = true;
        for (int a = 0; a < k; ++a) {
            f.linear[a] = dot(d.roots[hf.root], E.directions[a]);
            if (f.linear[a] != 0) zero = false;
        }
        if (zero) continue;
        f.offset = dot(d.roots[hf.root], g.origin);
        f.denom = hf.denom;
        f.residues = hf.residues;
        f.root = hf.root;
        fams.push_back(std::move(f));
    }
    g.arr = Arrangement(k, std::move(gram), std::move(fams));
    return g;
}

namespace {

Vec restrict_to(const SubspaceGeometry& geom, const IntVec& root) {
    Vec out(geom.dim());
    for (int a = 0; a < geom.dim(); ++a) out[a] = dot(root, geom.E.directions[a]);
    return out;
}

std::vector<Vec> directions_in(const SubspaceGeometry& geom, const QMatrix& rows) {
    std::vector<Vec> out;
    for (const auto& v : linalg::nullspace(rows, geom.dim())) {
        Vec y(geom.origin.size(), Rational(0));
        for (int a = 0; a < geom.dim(); ++a)
            for (std::size_t i = 0; i < y.size(); ++i) y[i] += v[a] * geom.E.directions[a][i];
        out.push_back(std::move(y));
    }
    return out;
}

bool parallel(const Vec& a, const Vec& b) { return linalg::rank(QMatrix{a, b}) < 2; }

}  // namespace

std::vector<WallData> walls_of_alcove_in_E(const RootDatum& d, const SubspaceGeometry& geom, const Facet& A) {
    if (geom.dim() == 0) return {};
    const auto& arr = geom.arr;
    Vec sp = geom.to_coords(A.witness);
    if (!arr.is_generic(sp)) fail(ErrorCode::GenericityFailure, "facet does not span E");
    auto ginv = linalg::inverse(arr.gram());
    std::set<GradedLabel> in_E(geom.E.R_E.begin(), geom.E.R_E.end());
    std::vector<WallData> out;
    for (const auto& wall : arr.walls(sp)) {
        WallData wd;
        wd.wall = wall;
        Vec lin = arr.families()[wall.family].linear;
        for (auto& v : lin) v *= wall.orientation;
        Vec mirror = arr.reflection(wall).apply(sp);
        Vec mid(sp.size());
        for (std::size_t a = 0; a < sp.size(); ++a) mid[a] = (sp[a] + mirror[a]) / 2;
        wd.point = geom.to_apartment(mid);
        wd.R_H = restricted_system(d, wd.point, directions_in(geom, QMatrix{lin}));

        int pivot = 0;
        while (lin[pivot] == 0) ++pivot;
        std::vector<Rational> scale;
        for (const auto& lab : wd.R_H) {
            if (in_E.count(lab)) continue;
            const IntVec& g = d.roots[lab.first];
            if (dot(g, A.witness) - dot(g, wd.point) <= 0) continue;
            wd.n_plus.push_back(lab);
            scale.push_back(restrict_to(geom, g)[pivot] / lin[pivot]);
        }
        if (wd.n_plus.empty()) fail(ErrorCode::InvalidArgument, "wall without roots on the positive side");
        Rational smallest = *std::min_element(scale.begin(), scale.end());
        if (smallest <= 0) fail(ErrorCode::IntegralityFailure, "weights on n+ are not positive multiples");
        wd.alpha = lin;
        for (auto& v : wd.alpha) v *= smallest;
        for (const auto& t : scale) {
            Rational ratio = t / smallest;
            if (!is_integer(ratio)) fail(ErrorCode::IntegralityFailure, "weight on n+ is not a multiple of alpha_H");
            wd.weight_ratios.push_back(static_cast<int>(to_int64(ratio)));
        }
        wd.alpha_constant = -dot(wd.alpha, mid);
        Vec u = linalg::apply(*ginv, wd.alpha);
        Rational norm = dot(wd.alpha, u);
        wd.coroot = u;
        for (auto& v : wd.coroot) v = 2 * v / norm;
        out.push_back(std::move(wd));
    }
    return out;
}

int wall_parameter(const RootDatum& d, const WallData& w, const AlgebraElement& nilpotent) {
    std::vector<AlgebraElement> sub;
    for (const auto& lab : w.n_plus) sub.push_back(root_vector(d, lab));
    auto profile = jordan_profile(*d.algebra, nilpotent, sub);
    if (profile.empty()) fail(ErrorCode::InvalidArgument, "empty n+");
    return 1 + profile.front();
}

int coxeter_order_direct(const Arrangement& arr, const Arrangement::Wall& h, const Arrangement::Wall& hp) {
    if (h.key == hp.key) return 1;
    if (parallel(arr.families()[h.family].linear, arr.families()[hp.family].linear)) return kInfiniteOrder;
    AffineIsometry w = arr.reflection(h).compose(arr.reflection(hp));
    AffineIsometry p = w;
    for (int k = 1; k <= 12; ++k, p = w.compose(p))
        if (p.is_identity()) return k;
    return -1;
}

int coxeter_order_formula(const RootDatum& d, const SubspaceGeometry& geom, const WallData& h, const WallData& hp) {
    const auto& arr = geom.arr;
    if (h.wall.key == hp.wall.key) return 1;
    const auto& fh = arr.families()[h.wall.family];
    const auto& fhp = arr.families()[hp.wall.family];
    if (parallel(fh.linear, fhp.linear)) return kInfiniteOrder;
    QMatrix rows{fh.linear, fhp.linear};
    auto s0 = linalg::solve(rows, Vec{h.wall.level - fh.offset, hp.wall.level - fhp.offset}, geom.dim());
    if (!s0) fail(ErrorCode::OrderMismatch, "walls do not meet");
    auto R_X = restricted_system(d, geom.to_apartment(*s0), directions_in(geom, rows));
    int lX = static_cast<int>(R_X.size()) / 2, lE = static_cast<int>(geom.E.R_E.size()) / 2;
    int num = 2 * (lX - lE), den = h.ell() + hp.ell() - 2 * lE;
    if (den <= 0 || num % den != 0)
        fail(ErrorCode::OrderMismatch, "length formula gives " + std::to_string(num) + "/" + std::to_string(den));
    return num / den;
}

RelWeylGroup rel_weyl_group(const RootDatum& d, const RelevantSubspace& E, const Facet& A,
                            const AlgebraElement* nilpotent) {
    if (E.dim() == 0) fail(ErrorCode::ZeroDimensional, "E is a point");
    RelWeylGroup G;
    G.geom = subspace_geometry(d, E);
    if (span_of_facet(d, A).dim() != E.dim()) fail(ErrorCode::InvalidArgument, "facet does not span E");
    G.base = A;
    G.base_coords = G.geom.to_coords(A.witness);
    G.walls = walls_of_alcove_in_E(d, G.geom, A);
    G.ell_E = static_cast<int>(E.R_E.size()) / 2;
    const int n = static_cast<int>(G.walls.size());
    G.coxeter.assign(n, std::vector<int>(n));
    G.coxeter_direct.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            G.coxeter[i][j] = coxeter_order_formula(d, G.geom, G.walls[i], G.walls[j]);
            G.coxeter_direct[i][j] = coxeter_order_direct(G.geom.arr, G.walls[i].wall, G.walls[j].wall);
            if (G.coxeter[i][j] != G.coxeter_direct[i][j])
                fail(ErrorCode::OrderMismatch, "walls " + std::to_string(i) + "," + std::to_string(j) +
                                                   ": formula " + std::to_string(G.coxeter[i][j]) + ", direct " +
                                                   std::to_string(G.coxeter_direct[i][j]));
        }
    for (const auto& w : G.walls) G.generators.push_back(G.geom.arr.reflection(w.wall));
    if (nilpotent) {
        for (auto& w : G.walls) {
            w.c = wall_parameter(d, w, *nilpotent);
            G.params.push_back(*w.c);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && G.coxeter[i][j] % 2 == 1 && G.params[i] != G.params[j])
                    fail(ErrorCode::ParameterMismatch, "walls " + std::to_string(i) + " and " + std::to_string(j) +
                                                           " are conjugate but c differs");
    }
    return G;
}

std::optional<std::vector<int>> reduced_word(const RelWeylGroup& G, const AffineIsometry& w) {
    std::vector<int> word;
    AffineIsometry cur = w;
    for (int step = 0; step < 100000; ++step) {
        Vec p = cur.apply(G.base_coords);
        int violated = -1;
        for (int i = 0; i < static_cast<int>(G.walls.size()) && violated < 0; ++i)
            if (G.walls[i].affine_value(p) < 0) violated = i;
        if (violated < 0) {
            if (!cur.is_identity()) return std::nullopt;
            return word;
        }
        cur = G.generators[violated].compose(cur);
        word.push_back(violated);
    }
    return std::nullopt;
}

std::vector<Facet> enumerate_E_alcoves(const RootDatum& d, const RelWeylGroup& G, int depth) {
    AlcoveChamber chamber{G.base_coords, {}};
    for (const auto& w : G.walls) chamber.walls.push_back(w.wall);
    std::vector<Facet> out;
    for (const auto& rec : enumerate_chambers(G.geom.arr, chamber, depth))
        out.push_back(facet_of(d, G.geom.to_apartment(rec.witness)));
    return out;
}

std::vector<AffineIsometry> group_closure(const std::vector<AffineIsometry>& gens, int dim, std::size_t max_order) {
    std::set<AffineIsometry> seen{AffineIsometry::identity(dim)};
    std::deque<AffineIsometry> queue{AffineIsometry::identity(dim)};
    std::vector<AffineIsometry> out;
    while (!queue.empty()) {
        auto w = queue.front();
        queue.pop_front();
        out.push_back(w);
        for (const auto& g : gens) {
            auto next = g.compose(w);
            if (seen.insert(next).second) {
                if (seen.size() > max_order)
                    fail(ErrorCode::GroupTooLarge, "group exceeds " + std::to_string(max_order) + " elements");
                queue.push_back(std::move(next));
            }
        }
    }
    return out;
}

std::vector<Facet> xi_F(const RootDatum& d, const Facet& F, const Facet& ref) {
    if (!is_alcove(ref)) fail(ErrorCode::InvalidArgument, "reference facet is not an alcove");
    const auto& arr = apartment(d);
    for (const auto& w : alcove_walls(d, ref))
        if (arr.wall_value(w, F.witness) < 0) fail(ErrorCode::InvalidArgument, "F is not in the closure of the alcove");
    std::vector<AffineIsometry> gens;
    for (const auto& [f, level] : arr.through(F.witness)) gens.push_back(arr.reflection(f, level));
    std::set<Vec> seen{ref.witness};
    std::vector<Vec> order{ref.witness};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& g : gens) {
            Vec next = g.apply(order[i]);
            if (seen.insert(next).second) {
                if (seen.size() > 1000000) fail(ErrorCode::GroupTooLarge, "W_F orbit too large");
                order.push_back(next);
            }
        }
    std::uint64_t expected = pseudo_levi_of(d, F).order;
    if (order.size() != expected)
        fail(ErrorCode::OrderMismatch, "|Xi_F| = " + std::to_string(order.size()) + " but |W_F| = " +
                                           std::to_string(expected));
    std::vector<Facet> out;
    for (const auto& p : order) out.push_back(facet_of(d, p));
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

bool preserves(const RootDatum& d, const RelevantSubspace& E, const AffineIsometry& w) {
    if (!contains_point(d, E, w.apply(E.base))) return false;
    QMatrix rows = E.directions;
    for (const auto& v : E.directions) rows.push_back(linalg::apply(w.linear, v));
    return linalg::rank(rows) == static_cast<std::size_t>(E.dim());
}

}  // namespace

OrbitPartition wx_subgroup_orbits(const RootDatum& d, const GradingDatum& g, const RelevantSubspace& E,
                                  const std::vector<Facet>& alcoves, std::size_t max_order) {
    const auto& arr = apartment(d);
    std::vector<AffineIsometry> gens;
    for (const auto& [f, level] : arr.through(g.x_over_m())) gens.push_back(arr.reflection(f, level));
    auto group = group_closure(gens, d.dim, max_order);
    OrbitPartition out;
    out.group_order = group.size();
    out.stabilizer_order = 0;
    const int n = static_cast<int>(alcoves.size());
    UnionFind uf(n);
    for (const auto& w : group) {
        if (!preserves(d, E, w)) continue;
        ++out.stabilizer_order;
        for (int i = 0; i < n; ++i) {
            Vec image = w.apply(alcoves[i].witness);
            for (int j = 0; j < n; ++j)
                if (uf.find(i) != uf.find(j) && same_facet(d, image, alcoves[j].witness)) {
                    uf.unite(i, j);
                    break;
                }
        }
    }
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < n; ++i) classes[uf.find(i)].push_back(i);
    for (auto& [root, members] : classes) out.orbits.push_back(std::move(members));
    return out;
}

}  // namespace spiral
