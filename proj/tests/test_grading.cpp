#include "doctest.h"

#include "spiral/errors.hpp"
#include "spiral/grading.hpp"

#include <random>
#include <set>

using namespace spiral;

namespace {

Rational q(long long a, long long b = 1) { return make_rational(a, b); }

Vec random_point(std::mt19937_64& rng, int dim) {
    Vec y(dim);
    for (auto& v : y) v = q(static_cast<long long>(rng() % 25) - 12, static_cast<long long>(rng() % 6) + 1);
    return y;
}

Vec random_x(std::mt19937_64& rng, int dim) {
    Vec x(dim);
    for (auto& v : x) v = static_cast<long long>(rng() % 7) - 3;
    return x;
}

}  // namespace

TEST_CASE("graded pieces of A1") {
    auto d = build_root_datum('A', 1, 1);
    auto g = GradingDatum::make(d, {q(1)}, 2, 1);
    auto p0 = graded_piece(d, g, 0);
    CHECK(p0.roots.empty());
    CHECK(p0.cartan_dim == 1);
    auto p1 = graded_piece(d, g, 1);
    CHECK(p1.roots.size() == 2);
    CHECK(p1.cartan_dim == 0);
    auto all = graded_piece(d, GradingDatum::make(d, {q(0)}, 1, 1), 0);
    CHECK(all.roots.size() == 2);
    CHECK(all.cartan_dim == 1);
}

TEST_CASE("grading datum validation") {
    auto d = build_root_datum('A', 2, 2);
    CHECK_THROWS_AS(GradingDatum::make(d, {q(1), q(1)}, 2, 1), Error);
    CHECK_THROWS_AS(GradingDatum::make(d, {q(1, 2)}, 2, 1), Error);
    CHECK_THROWS_AS(GradingDatum::make(d, {q(1)}, 3, 1), Error);
    CHECK_THROWS_AS(GradingDatum::make(d, {q(1)}, 2, 0), Error);
    CHECK(GradingDatum::make(d, {q(1)}, 4, -2).epsilon == -1);
}

TEST_CASE("dimension conservation") {
    std::mt19937_64 rng(3);
    for (auto [series, rank, e] : {std::tuple{'A', 2, 1}, {'G', 2, 1}, {'A', 3, 2}, {'D', 4, 3}, {'E', 6, 2}}) {
        auto d = build_root_datum(series, rank, e);
        for (int s = 0; s < 5; ++s) {
            int m = d.e * static_cast<int>(rng() % 4 + 1);
            auto g = GradingDatum::make(d, random_x(rng, d.dim), m, 1);
            int total = 0;
            for (int n = 0; n < m; ++n) {
                auto p = graded_piece(d, g, n);
                total += static_cast<int>(p.roots.size()) + p.cartan_dim;
            }
            CHECK(total == d.ambient_dim());
        }
    }
}

TEST_CASE("spiral of the A1 alcove") {
    auto d = build_root_datum('A', 1, 1);
    auto g = GradingDatum::make(d, {q(1)}, 2, 1);
    auto s = spiral_of_facet(d, g, facet_of(d, {q(1, 4)}), 3);
    CHECK(dot(d.roots[0], s.lambda) == q(1, 2));
    CHECK(s.degrees.at(1).roots.empty());
    CHECK(s.degrees.at(-1).roots == std::vector<GradedLabel>{{0, 0}, {1, 0}});
    CHECK(s.degrees.at(0).cartan == 1);
    CHECK(s.degrees.at(0).roots.empty());
    auto t = spiral_of_facet(d, g, facet_of(d, {q(1, 3)}), 3);
    CHECK(t.degrees == s.degrees);

    auto zero = GradingDatum::make(d, {q(0)}, 1, 1);
    auto z = spiral_of_facet(d, zero, facet_of(d, {q(0)}), 2);
    CHECK(z.degrees.at(0).roots.size() == 2);
    CHECK(z.degrees.at(0).cartan == 1);
    CHECK(z.degrees.at(1).roots.empty());
}

TEST_CASE("splittings and grading elements in A1") {
    auto d = build_root_datum('A', 1, 1);
    auto g = GradingDatum::make(d, {q(1)}, 2, 1);
    auto sp = splitting_of_facet(d, g, facet_of(d, {q(1, 4)}), 3);
    CHECK(sp.levi.type == "T");
    for (const auto& [n, labs] : sp.graded_roots) CHECK(labs.empty());
    CHECK(sp.grading.pairings.empty());

    auto g0 = GradingDatum::make(d, {q(0)}, 2, 1);
    auto sv = splitting_of_facet(d, g0, facet_of(d, {q(0)}), 2);
    CHECK(sv.levi.type == "A1");
    CHECK(sv.graded_roots.at(0).size() == 2);
    CHECK(sv.cartan_degree_zero == 1);

    auto je = grading_element(d, g, span_of_facet(d, facet_of(d, {q(0)})));
    REQUIRE(je.pairings.size() == 2);
    CHECK(je.pairings[0].second == 1);
    auto jv = grading_element(d, g, span_of_facet(d, facet_of(d, {q(1, 2)})));
    CHECK(jv.pairings.empty());
    // The vertex alpha^vee / 2 is the point <alpha, y> = 1.
    auto jw = grading_element(d, g, span_of_facet(d, facet_of(d, {q(1)})));
    REQUIRE(jw.pairings.size() == 2);
    CHECK(jw.pairings[0].second == -1);
}

TEST_CASE("s_weight examples") {
    auto d = build_root_datum('A', 1, 1);
    auto g = GradingDatum::make(d, {q(1)}, 2, 1);
    auto f = facet_of(d, {q(1, 4)});
    CHECK(s_weight(d, g, f, 0, 0, -1) == -2);
    CHECK(s_weight(d, g, f, std::nullopt, 0, 0) == -1);
    CHECK_THROWS_AS(s_weight(d, g, f, 0, 0, 1), Error);
    CHECK_THROWS_AS(s_weight(d, g, f, std::nullopt, 0, 1), Error);
}

TEST_CASE("spiral and splitting properties on samples") {
    std::mt19937_64 rng(11);
    for (auto [series, rank, e] : {std::tuple{'A', 2, 1}, {'C', 2, 1}, {'G', 2, 1}, {'A', 2, 2}}) {
        auto d = build_root_datum(series, rank, e);
        for (int sample = 0; sample < 40; ++sample) {
            int m = d.e * static_cast<int>(rng() % 3 + 1);
            int eta = (rng() % 2 ? 1 : -1) * static_cast<int>(rng() % 3 + 1);
            auto g = GradingDatum::make(d, random_x(rng, d.dim), m, eta);
            auto f = facet_of(d, random_point(rng, d.dim));
            const int window = std::max(4, natural_window(d, spiral_lambda(g, f.witness)));
            auto s = spiral_of_facet(d, g, f, window);
            auto sp = splitting_of_facet(d, g, f, window);
            auto E = span_of_facet(d, f);
            std::set<GradedLabel> seen;
            for (const auto& [n, labs] : sp.graded_roots)
                for (const auto& lab : labs) {
                    CHECK(in_graded_piece(d, g, lab, n));
                    const auto& deg = s.degrees.at(n).roots;
                    CHECK(std::find(deg.begin(), deg.end(), lab) != deg.end());
                    seen.insert(lab);
                }
            CHECK(seen == std::set<GradedLabel>(E.R_E.begin(), E.R_E.end()));
            for (const auto& [lab, v] : sp.grading.pairings) CHECK(is_integer(v));
            for (const auto& [n, deg] : s.degrees) {
                for (const auto& [r, i] : deg.roots) CHECK(s_weight(d, g, f, r, i, n) == n - eta);
                if (deg.cartan > 0)
                    for (int i = 0; i < d.e; ++i)
                        if (d.cartan_graded_dims[i] > 0 && cartan_in_piece(d, g, i, n))
                            CHECK(s_weight(d, g, f, std::nullopt, i, n) == n - eta);
            }
        }
    }
}
