#include "spiral/affine.hpp"

#include "spiral/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace spiral {

namespace {

using linalg::QMatrix;

int mod(const BigInt& a, int n) {
    BigInt r = a % n;
    if (r < 0) r += n;
    return r.convert_to<int>();
}

}  // namespace

AffineIsometry AffineIsometry::identity(int dim) {
    return {linalg::identity<Rational>(dim), Vec(dim, Rational(0))};
}

Vec AffineIsometry::apply(const Vec& y) const {
    Vec out = linalg::apply(linear, y);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += translation[i];
    return out;
}

AffineIsometry AffineIsometry::compose(const AffineIsometry& other) const {
    AffineIsometry out;
    out.linear = linalg::multiply(linear, other.linear);
    out.translation = apply(other.translation);
    return out;
}

AffineIsometry AffineIsometry::inverse() const {
    auto inv = linalg::inverse(linear);
    if (!inv) fail(ErrorCode::InvalidArgument, "singular isometry");
    AffineIsometry out;
    out.linear = *inv;
    out.translation = linalg::apply(out.linear, translation);
    for (auto& v : out.translation) v = -v;
    return out;
}

bool AffineIsometry::is_identity() const { return *this == identity(static_cast<int>(translation.size())); }

Arrangement::Arrangement(int dim, QMatrix gram, std::vector<Family> families)
    : dim_(dim), gram_(std::move(gram)), families_(std::move(families)) {
    if (dim_ > 0) {
        auto inv = linalg::inverse(gram_);
        if (!inv) fail(ErrorCode::InvalidArgument, "degenerate form on the arrangement");
        gram_inv_ = *inv;
    }
}

Arrangement Arrangement::of_datum(const RootDatum& d) {
    std::vector<Family> fams;
    for (const auto& hf : d.families) {
        Family f;
        f.linear = d.covector(hf.root);
        f.denom = hf.denom;
        f.residues = hf.residues;
        f.root = hf.root;
        fams.push_back(std::move(f));
    }
    return Arrangement(d.dim, d.killing, std::move(fams));
}

bool Arrangement::is_level(int f, const Rational& v) const {
    const auto& fam = families_[f];
    Rational k = v * fam.denom;
    if (!is_integer(k)) return false;
    int r = mod(boost::multiprecision::numerator(k), fam.denom);
    return std::binary_search(fam.residues.begin(), fam.residues.end(), r);
}

Rational Arrangement::level_below(int f, const Rational& v) const {
    const auto& fam = families_[f];
    BigInt k = ceil_of(v * fam.denom) - 1;
    for (int step = 0; step <= fam.denom; ++step, --k)
        if (std::binary_search(fam.residues.begin(), fam.residues.end(), mod(k, fam.denom)))
            return Rational(k) / fam.denom;
    fail(ErrorCode::InvalidArgument, "family without levels");
}

Rational Arrangement::level_above(int f, const Rational& v) const {
    const auto& fam = families_[f];
    BigInt k = floor_of(v * fam.denom) + 1;
    for (int step = 0; step <= fam.denom; ++step, ++k)
        if (std::binary_search(fam.residues.begin(), fam.residues.end(), mod(k, fam.denom)))
            return Rational(k) / fam.denom;
    fail(ErrorCode::InvalidArgument, "family without levels");
}

std::vector<Rational> Arrangement::levels_in(int f, const Rational& lo, const Rational& hi) const {
    const auto& fam = families_[f];
    std::vector<Rational> out;
    for (BigInt k = floor_of(lo * fam.denom) + 1, end = floor_of(hi * fam.denom); k <= end; ++k)
        if (std::binary_search(fam.residues.begin(), fam.residues.end(), mod(k, fam.denom)))
            out.push_back(Rational(k) / fam.denom);
    return out;
}

HyperplaneKey Arrangement::key(int f, const Rational& level) const {
    const auto& fam = families_[f];
    Vec lin = fam.linear;
    Rational c = level - fam.offset;
    auto lead = std::find_if(lin.begin(), lin.end(), [](const Rational& v) { return v != 0; });
    Rational s = *lead;
    for (auto& v : lin) v /= s;
    return {lin, c / s};
}

std::set<HyperplaneKey> Arrangement::separating(const Vec& p, const Vec& q) const {
    std::set<HyperplaneKey> out;
    for (int f = 0; f < static_cast<int>(families_.size()); ++f) {
        Rational vp = value(f, p), vq = value(f, q);
        if (vp == vq) continue;
        if (vp < vq) {
            for (const auto& l : levels_in(f, vp, vq)) out.insert(key(f, l));
        } else {
            // levels l with vq <= l < vp
            const auto& fam = families_[f];
            for (BigInt k = ceil_of(vq * fam.denom), end = ceil_of(vp * fam.denom) - 1; k <= end; ++k)
                if (std::binary_search(fam.residues.begin(), fam.residues.end(), mod(k, fam.denom)))
                    out.insert(key(f, Rational(k) / fam.denom));
        }
    }
    return out;
}

std::vector<std::pair<int, Rational>> Arrangement::through(const Vec& p) const {
    std::vector<std::pair<int, Rational>> out;
    std::set<HyperplaneKey> seen;
    for (int f = 0; f < static_cast<int>(families_.size()); ++f) {
        Rational v = value(f, p);
        if (is_level(f, v) && seen.insert(key(f, v)).second) out.emplace_back(f, v);
    }
    return out;
}

bool Arrangement::same_facet(const Vec& p, const Vec& q) const {
    for (int f = 0; f < static_cast<int>(families_.size()); ++f) {
        Rational vp = value(f, p), vq = value(f, q);
        if (vp == vq) continue;
        Rational lo = std::min(vp, vq), hi = std::max(vp, vq);
        if (is_level(f, lo) || !levels_in(f, lo, hi).empty()) return false;
    }
    return true;
}

bool Arrangement::is_generic(const Vec& p) const {
    for (int f = 0; f < static_cast<int>(families_.size()); ++f)
        if (is_level(f, value(f, p))) return false;
    return true;
}

AffineIsometry Arrangement::reflection(int f, const Rational& level) const {
    const auto& fam = families_[f];
    Vec u = linalg::apply(gram_inv_, fam.linear);
    Rational norm = dot(fam.linear, u);
    AffineIsometry r = AffineIsometry::identity(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) r.linear[i][j] -= 2 * u[i] * fam.linear[j] / norm;
        r.translation[i] = -2 * (fam.offset - level) * u[i] / norm;
    }
    return r;
}

std::vector<Arrangement::Wall> Arrangement::walls(const Vec& p) const {
    std::vector<Wall> out;
    std::set<HyperplaneKey> seen;
    for (int f = 0; f < static_cast<int>(families_.size()); ++f) {
        Rational v = value(f, p);
        for (const Rational& level : {level_below(f, v), level_above(f, v)}) {
            HyperplaneKey k = key(f, level);
            if (seen.count(k)) continue;
            Vec mirror = reflection(f, level).apply(p);
            auto sep = separating(p, mirror);
            if (sep.size() != 1 || *sep.begin() != k) continue;
            seen.insert(k);
            out.push_back({f, level, v > level ? 1 : -1, k});
        }
    }
    return out;
}

Reduction reduce_to_chamber(const Arrangement& arr, const AlcoveChamber& chamber, const Vec& y) {
    Reduction red{AffineIsometry::identity(arr.dim()), y, {}};
    for (;;) {
        int violated = -1;
        for (int j = 0; j < static_cast<int>(chamber.walls.size()) && violated < 0; ++j)
            if (arr.wall_value(chamber.walls[j], red.reduced) < 0) violated = j;
        if (violated < 0) return red;
        auto r = arr.reflection(chamber.walls[violated]);
        red.reduced = r.apply(red.reduced);
        red.w = r.compose(red.w);
        red.word.push_back(violated);
    }
}

std::vector<AlcoveRecord> enumerate_chambers(const Arrangement& arr, const AlcoveChamber& base, int depth) {
    if (depth < 0) fail(ErrorCode::InvalidArgument, "depth must be non-negative");
    std::vector<AlcoveRecord> out{{AffineIsometry::identity(arr.dim()), base.witness, 0, {}}};
    std::set<Vec> seen{base.witness};
    std::vector<AffineIsometry> refl;
    for (const auto& w : base.walls) refl.push_back(arr.reflection(w));
    for (std::size_t head = 0; head < out.size(); ++head) {
        if (out[head].distance >= depth) continue;
        for (std::size_t j = 0; j < refl.size(); ++j) {
            AffineIsometry w = out[head].w.compose(refl[j]);
            Vec p = w.apply(base.witness);
            if (!seen.insert(p).second) continue;
            auto word = out[head].word;
            word.push_back(static_cast<int>(j));
            out.push_back({std::move(w), std::move(p), out[head].distance + 1, std::move(word)});
        }
    }
    return out;
}

std::optional<Vec> face_point(const Arrangement& arr, const AlcoveChamber& chamber, const std::vector<int>& J) {
    if (J.empty()) return chamber.witness;
    const int n = arr.dim();
    const int m = static_cast<int>(chamber.walls.size());
    auto eq = [&](int j) {
        const auto& w = chamber.walls[j];
        const auto& fam = arr.families()[w.family];
        return std::make_pair(fam.linear, w.level - fam.offset);
    };
    std::set<Vec> vertices;
    std::vector<int> pick(n);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            linalg::QMatrix a;
            Vec b;
            for (int j : pick) {
                auto [lin, c] = eq(j);
                a.push_back(lin);
                b.push_back(c);
            }
            if (linalg::rank(a) != static_cast<std::size_t>(n)) return;
            auto sol = linalg::solve(a, b, n);
            if (!sol) return;
            for (int j = 0; j < m; ++j)
                if (arr.wall_value(chamber.walls[j], *sol) < 0) return;
            vertices.insert(*sol);
            return;
        }
        for (int j = start; j < m; ++j) {
            pick[depth] = j;
            rec(j + 1, depth + 1);
        }
    };
    rec(0, 0);
    Vec sum(n, Rational(0));
    int count = 0;
    for (const auto& v : vertices) {
        bool on = std::all_of(J.begin(), J.end(), [&](int j) { return arr.wall_value(chamber.walls[j], v) == 0; });
        if (!on) continue;
        for (int i = 0; i < n; ++i) sum[i] += v[i];
        ++count;
    }
    if (count == 0) return std::nullopt;
    for (auto& v : sum) v /= count;
    return sum;
}

namespace {

struct DatumGeometry {
    Arrangement arr;
    AlcoveChamber alcove;
};

const DatumGeometry& geometry(const RootDatum& d) {
    static std::mutex mu;
    static std::map<std::tuple<char, int, int>, DatumGeometry> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto k = std::make_tuple(d.series, d.rank, d.e);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    DatumGeometry g;
    g.arr = Arrangement::of_datum(d);
    int height = 0;
    for (int a = 0; a < d.num_positive; ++a) {
        int h = 0;
        for (int c : d.roots[a]) h += c;
        height = std::max(height, h);
    }
    int h = height + 1;
    Rational t = make_rational(1, std::max(2, d.e) * h + 1);
    g.alcove.witness = d.rho_vee();
    for (auto& v : g.alcove.witness) v *= t;
    if (!g.arr.is_generic(g.alcove.witness)) fail(ErrorCode::InvalidArgument, "alcove anchor lies on a wall");
    g.alcove.walls = g.arr.walls(g.alcove.witness);
    return cache.emplace(k, std::move(g)).first->second;
}

}  // namespace

const AlcoveChamber& fundamental_alcove(const RootDatum& d) { return geometry(d).alcove; }
const Arrangement& apartment(const RootDatum& d) { return geometry(d).arr; }

Reduction reduce_to_fundamental(const RootDatum& d, const Vec& y) {
    return reduce_to_chamber(apartment(d), fundamental_alcove(d), y);
}

Facet facet_of(const RootDatum& d, const Vec& y) {
    if (static_cast<int>(y.size()) != d.dim)
        fail(ErrorCode::InvalidArgument, "point has " + std::to_string(y.size()) + " coordinates, expected " +
                                             std::to_string(d.dim));
    Facet f;
    f.witness = y;
    f.vanishing = vanishing_roots(d, y);
    auto red = reduce_to_fundamental(d, y);
    const auto& a0 = fundamental_alcove(d);
    for (int j = 0; j < static_cast<int>(a0.walls.size()); ++j)
        if (apartment(d).wall_value(a0.walls[j], red.reduced) == 0) f.key.face.push_back(j);
    f.key.word = red.word;
    return f;
}

bool same_facet(const RootDatum& d, const Vec& y, const Vec& z) { return apartment(d).same_facet(y, z); }

bool same_facet(const RootDatum& d, const Facet& a, const Facet& b) { return same_facet(d, a.witness, b.witness); }

bool is_alcove(const Facet& f) { return f.vanishing.empty(); }

std::vector<Facet> enumerate_alcoves(const RootDatum& d, int depth) {
    std::vector<Facet> out;
    for (const auto& rec : enumerate_chambers(apartment(d), fundamental_alcove(d), depth))
        out.push_back(facet_of(d, rec.witness));
    return out;
}

std::vector<Arrangement::Wall> alcove_walls(const RootDatum& d, const Facet& alcove) {
    if (!is_alcove(alcove)) fail(ErrorCode::InvalidArgument, "facet is not an alcove");
    const auto& arr = apartment(d);
    const auto& a0 = fundamental_alcove(d);
    auto red = reduce_to_fundamental(d, alcove.witness);
    AffineIsometry back = red.w.inverse();
    auto mine = arr.walls(alcove.witness);
    std::vector<Arrangement::Wall> out;
    for (const auto& w0 : a0.walls) {
        Vec mirror = arr.reflection(w0).apply(a0.witness);
        Vec mid(d.dim);
        for (int i = 0; i < d.dim; ++i) mid[i] = (mirror[i] + a0.witness[i]) / 2;
        Vec q = back.apply(mid);
        auto it = std::find_if(mine.begin(), mine.end(),
                               [&](const Arrangement::Wall& w) { return arr.value(w.family, q) == w.level; });
        if (it == mine.end()) fail(ErrorCode::InvalidArgument, "wall transport failed");
        out.push_back(*it);
    }
    return out;
}

Facet boundary_face(const RootDatum& d, const Facet& alcove, const std::vector<int>& J) {
    AlcoveChamber ch{alcove.witness, alcove_walls(d, alcove)};
    for (int j : J)
        if (j < 0 || j >= static_cast<int>(ch.walls.size())) fail(ErrorCode::InvalidArgument, "wall index out of range");
    auto p = face_point(apartment(d), ch, J);
    if (!p) fail(ErrorCode::EmptyFace, "wall equations have no common point on the closed alcove");
    return facet_of(d, *p);
}

AffineIsometry conjugating_element(const RootDatum& d, const Facet& from, const Facet& to) {
    auto r1 = reduce_to_fundamental(d, from.witness);
    auto r2 = reduce_to_fundamental(d, to.witness);
    if (!same_facet(d, r1.reduced, r2.reduced)) fail(ErrorCode::NotConjugate, "facets lie in different orbits");
    return r2.w.inverse().compose(r1.w);
}

}  // namespace spiral
