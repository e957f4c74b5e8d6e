#include "doctest.h"

#include "spiral/affine.hpp"
#include "spiral/errors.hpp"

#include <random>

using namespace spiral;

namespace {

Vec pt(std::initializer_list<Rational> xs) { return Vec(xs); }
Rational q(long long a, long long b = 1) { return make_rational(a, b); }

// Sign vector oracle: for each family of the datum and every level in a window, the sign of
// value - level. Two points lie in one facet iff all signs agree.
bool same_facet_oracle(const RootDatum& d, const Vec& y, const Vec& z, int window) {
    for (const auto& f : d.families)
        for (int k = -window * f.denom; k <= window * f.denom; ++k) {
            if (!std::binary_search(f.residues.begin(), f.residues.end(), ((k % f.denom) + f.denom) % f.denom))
                continue;
            Rational level = q(k, f.denom);
            if (sign(dot(d.roots[f.root], y) - level) != sign(dot(d.roots[f.root], z) - level)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("facet_of in A1 and A2") {
    auto a1 = build_root_datum('A', 1, 1);
    auto f0 = facet_of(a1, pt({0}));
    REQUIRE(f0.vanishing.size() == 1);
    CHECK(f0.vanishing[0] == AffineRoot{0, 0});
    CHECK(facet_of(a1, pt({q(1, 3)})).vanishing.empty());

    auto a2 = build_root_datum('A', 2, 1);
    auto edge = facet_of(a2, pt({q(1, 2), 0}));
    REQUIRE(edge.vanishing.size() == 1);
    CHECK(a2.roots[edge.vanishing[0].root] == IntVec{0, 1});
}

TEST_CASE("same_facet examples") {
    auto a1 = build_root_datum('A', 1, 1);
    CHECK(same_facet(a1, pt({q(1, 4)}), pt({q(1, 2)})));
    CHECK_FALSE(same_facet(a1, pt({q(1, 2)}), pt({q(3, 2)})));
    auto a2 = build_root_datum('A', 2, 1);
    CHECK_FALSE(same_facet(a2, pt({q(1, 2), 0}), pt({0, q(1, 2)})));
}

TEST_CASE("same_facet agrees with the sign-vector oracle") {
    std::mt19937 rng(7);
    for (auto [s, r, e] : {std::tuple{'A', 2, 1}, std::tuple{'C', 2, 1}, std::tuple{'G', 2, 1},
                           std::tuple{'A', 2, 2}, std::tuple{'D', 4, 3}}) {
        auto d = build_root_datum(s, r, e);
        for (int t = 0; t < 200; ++t) {
            Vec y, z;
            for (int i = 0; i < d.dim; ++i) {
                y.push_back(q(static_cast<int>(rng() % 13) - 6, 1 + rng() % 4));
                z.push_back(t % 2 ? y.back() + q(static_cast<int>(rng() % 3) - 1, 12)
                                  : q(static_cast<int>(rng() % 13) - 6, 1 + rng() % 4));
            }
            bool a = same_facet(d, y, z);
            CHECK(a == same_facet_oracle(d, y, z, 40));
            if (a) CHECK(facet_of(d, y).key == facet_of(d, z).key);
        }
    }
}

TEST_CASE("fundamental alcove walls") {
    auto a1 = build_root_datum('A', 1, 1);
    CHECK(fundamental_alcove(a1).walls.size() == 2);
    auto a2 = build_root_datum('A', 2, 1);
    CHECK(fundamental_alcove(a2).walls.size() == 3);
    auto g2 = build_root_datum('G', 2, 1);
    CHECK(fundamental_alcove(g2).walls.size() == 3);
    auto bc1 = build_root_datum('A', 2, 2);
    CHECK(fundamental_alcove(bc1).walls.size() == 2);
    auto tg2 = build_root_datum('D', 4, 3);
    CHECK(fundamental_alcove(tg2).walls.size() == 3);
    auto c2 = build_root_datum('A', 3, 2);
    CHECK(fundamental_alcove(c2).walls.size() == 3);
}

TEST_CASE("reduce_to_fundamental") {
    auto a1 = build_root_datum('A', 1, 1);
    auto r = reduce_to_fundamental(a1, pt({q(7, 3)}));
    CHECK(r.reduced == pt({q(1, 3)}));
    CHECK(r.word.size() == 2);
    CHECK(r.w.apply(pt({q(7, 3)})) == r.reduced);
    auto r0 = reduce_to_fundamental(a1, pt({q(1, 5)}));
    CHECK(r0.w.is_identity());
    auto rn = reduce_to_fundamental(a1, pt({q(-1, 2)}));
    CHECK(rn.reduced == pt({q(1, 2)}));
    CHECK(rn.word.size() == 1);

    // invariance under W_a and idempotence
    auto g2 = build_root_datum('G', 2, 1);
    Vec y = pt({q(13, 7), q(-5, 3)});
    auto ry = reduce_to_fundamental(g2, y);
    CHECK(reduce_to_fundamental(g2, ry.reduced).w.is_identity());
    const auto& arr = apartment(g2);
    const auto& a0 = fundamental_alcove(g2);
    AffineIsometry w = AffineIsometry::identity(2);
    for (int j : {0, 2, 1, 0, 2, 2, 1}) w = arr.reflection(a0.walls[j]).compose(w);
    CHECK(reduce_to_fundamental(g2, w.apply(y)).reduced == ry.reduced);
}

TEST_CASE("enumerate_alcoves") {
    auto a1 = build_root_datum('A', 1, 1);
    for (int depth = 0; depth < 6; ++depth) CHECK(enumerate_alcoves(a1, depth).size() == 2u * depth + 1);
    auto a2 = build_root_datum('A', 2, 1);
    CHECK(enumerate_alcoves(a2, 0).size() == 1);
    CHECK(enumerate_alcoves(a2, 1).size() == 4);
    auto small = enumerate_alcoves(a2, 2);
    auto big = enumerate_alcoves(a2, 3);
    for (const auto& f : small) {
        bool found = false;
        for (const auto& g : big) found = found || same_facet(a2, f, g);
        CHECK(found);
    }
}

TEST_CASE("boundary_face") {
    auto a1 = build_root_datum('A', 1, 1);
    auto a0 = facet_of(a1, fundamental_alcove(a1).witness);
    auto v = boundary_face(a1, a0, {0});
    CHECK(v.witness == pt({0}));
    CHECK_THROWS_AS(boundary_face(a1, a0, {0, 1}), Error);

    auto a2 = build_root_datum('A', 2, 1);
    auto b0 = facet_of(a2, fundamental_alcove(a2).witness);
    const auto& walls = fundamental_alcove(a2).walls;
    std::vector<int> finite;
    for (int j = 0; j < 3; ++j)
        if (walls[j].level == 0) finite.push_back(j);
    REQUIRE(finite.size() == 2);
    CHECK(boundary_face(a2, b0, finite).witness == pt({0, 0}));
    for (int j = 0; j < 3; ++j) {
        auto edge = boundary_face(a2, b0, {j});
        CHECK(edge.vanishing.size() == 1);
        CHECK(apartment(a2).wall_value(walls[j], edge.witness) == 0);
    }
    // a non-fundamental alcove
    auto alcoves = enumerate_alcoves(a2, 2);
    for (const auto& A : alcoves)
        for (int j = 0; j < 3; ++j) {
            auto face = boundary_face(a2, A, {j});
            CHECK(face.vanishing.size() == 1);
        }
}

TEST_CASE("conjugating_element") {
    auto a1 = build_root_datum('A', 1, 1);
    auto f = facet_of(a1, pt({q(1, 3)}));
    CHECK(conjugating_element(a1, f, f).is_identity());
    auto g = facet_of(a1, pt({q(3, 2)}));
    auto w = conjugating_element(a1, f, g);
    CHECK(same_facet(a1, w.apply(f.witness), g.witness));

    auto a2 = build_root_datum('A', 2, 1);
    CHECK_THROWS_AS(conjugating_element(a2, facet_of(a2, pt({0, 0})), facet_of(a2, pt({q(1, 2), 0}))), Error);
    // distinct vertices of A_0 lie in distinct orbits
    CHECK_THROWS_AS(conjugating_element(a2, facet_of(a2, pt({1, 0})), facet_of(a2, pt({0, 0}))), Error);
    auto v0 = facet_of(a2, pt({0, 0}));
    auto v2 = facet_of(a2, pt({2, -1}));
    auto w2 = conjugating_element(a2, v2, v0);
    CHECK(w2.apply(v2.witness) == v0.witness);
}
