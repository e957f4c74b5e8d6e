#include "doctest.h"

#include "spiral/pseudolevi.hpp"

#include <random>

using namespace spiral;

namespace {

Rational q(long long a, long long b = 1) { return make_rational(a, b); }

Vec random_point(std::mt19937_64& rng, int dim) {
    Vec y(dim);
    for (auto& v : y) v = q(static_cast<long long>(rng() % 25) - 12, static_cast<long long>(rng() % 6) + 1);
    return y;
}

}  // namespace

TEST_CASE("span_of_facet in A1 and A2") {
    auto a1 = build_root_datum('A', 1, 1);
    auto E0 = span_of_facet(a1, facet_of(a1, {q(0)}));
    CHECK(E0.dim() == 0);
    CHECK(E0.R_E.size() == 2);
    auto Ea = span_of_facet(a1, facet_of(a1, {q(1, 2)}));
    CHECK(Ea.dim() == 1);
    CHECK(Ea.R_E.empty());
    CHECK(pseudo_levi(a1, Ea).type == "T");

    auto a2 = build_root_datum('A', 2, 1);
    auto E = span_of_facet(a2, facet_of(a2, {q(1, 2), 0}));
    REQUIRE(E.dim() == 1);
    CHECK(dot(a2.roots[a2.root_index({0, 1})], E.directions[0]) == 0);
    int b = a2.root_index({0, 1});
    CHECK(E.R_E == std::vector<GradedLabel>{{b, 0}, {a2.negative(b), 0}});
    CHECK(pseudo_levi(a2, E).type == "A1");
}

TEST_CASE("pseudo-Levi types at vertices") {
    auto a2 = build_root_datum('A', 2, 1);
    auto L = pseudo_levi_of(a2, facet_of(a2, {q(1), 0}));
    CHECK(L.type == "A2");
    CHECK(L.order == 6);
    CHECK(L.ell == 3);

    auto c2 = build_root_datum('C', 2, 1);
    auto f = facet_of(c2, {q(1, 2), 0});
    CHECK(f.vanishing.size() == 2);
    auto M = pseudo_levi_of(c2, f);
    CHECK(M.type == "A1+A1");
    CHECK(M.order == 4);

    auto g2 = build_root_datum('G', 2, 1);
    CHECK(pseudo_levi_of(g2, facet_of(g2, {q(0), q(0)})).type == "G2");
}

TEST_CASE("stabilizer of E") {
    auto a1 = build_root_datum('A', 1, 1);
    auto s = stabilizer_WE(a1, span_of_facet(a1, facet_of(a1, {q(0)})));
    CHECK(s.order == 2);
    CHECK(s.ell == 1);
    auto t = stabilizer_WE(a1, span_of_facet(a1, facet_of(a1, {q(1, 3)})));
    CHECK(t.order == 1);
    CHECK(t.generators.empty());
}

TEST_CASE("pseudo-Levi properties on samples") {
    std::mt19937_64 rng(7);
    for (auto [series, rank, e] : {std::tuple{'A', 2, 1}, {'C', 2, 1}, {'G', 2, 1}, {'A', 2, 2}, {'B', 3, 1}}) {
        auto d = build_root_datum(series, rank, e);
        for (int sample = 0; sample < 60; ++sample) {
            Vec y = random_point(rng, d.dim);
            auto f = facet_of(d, y);
            auto E = span_of_facet(d, f);
            auto L = pseudo_levi(d, E);
            CHECK(L.ell * 2 == static_cast<int>(L.R_E.size()));
            CHECK(static_cast<int>(L.positive.size()) * 2 == static_cast<int>(L.R_E.size()));
            for (const auto& w : L.generators) {
                CHECK(w.apply(E.base) == E.base);
                for (const auto& v : E.directions) CHECK(linalg::apply(w.linear, v) == v);
            }
            // R_E at base and at base + each direction
            for (const auto& [r, i] : E.R_E) {
                CHECK(is_integer(dot(d.roots[r], E.base) + q(i, d.e)));
                for (const auto& v : E.directions) {
                    Vec z = E.base;
                    for (int k = 0; k < d.dim; ++k) z[k] += v[k];
                    CHECK(is_integer(dot(d.roots[r], z) + q(i, d.e)));
                }
            }
            // Another witness of the same facet gives the same datum
            auto red = reduce_to_fundamental(d, y);
            auto g = facet_of(d, red.reduced);
            CHECK(pseudo_levi_of(d, g).type == L.type);
            CHECK(project_to_subspace(d, E, E.base) == E.base);
            CHECK(contains_point(d, E, origin_projection(d, E)));
        }
    }
}

TEST_CASE("subspace coordinates") {
    auto a2 = build_root_datum('A', 2, 1);
    auto E = span_of_facet(a2, facet_of(a2, {q(1, 2), 0}));
    Vec s = subspace_coordinates(a2, E, E.base);
    REQUIRE(s.size() == 1);
    CHECK_THROWS(subspace_coordinates(a2, E, {q(0), q(1)}));
}
