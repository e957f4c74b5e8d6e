#include "doctest.h"

#include "spiral/daha.hpp"
#include "spiral/errors.hpp"

#include <memory>
#include <random>

using namespace spiral;

namespace {

Rational q(long long a, long long b = 1) { return make_rational(a, b); }

std::unique_ptr<DahaAlgebra> principal(char s, int r, std::vector<int> params) {
    auto d = build_root_datum(s, r, 1);
    auto A = facet_of(d, fundamental_alcove(d).witness);
    AlgebraElement zero;
    auto G = rel_weyl_group(d, span_of_facet(d, A), A, &zero);
    G.params = std::move(params);
    return std::make_unique<DahaAlgebra>(std::move(G));
}

DahaElement random_element(const DahaAlgebra& H, std::mt19937_64& rng, int terms = 2) {
    DahaElement out;
    for (int t = 0; t < terms; ++t) {
        DahaElement x = H.scalar(static_cast<long long>(rng() % 7) - 3);
        if (rng() % 3 == 0) x = H.multiply(x, H.u());
        int deg = static_cast<int>(rng() % 3);
        for (int k = 0; k < deg; ++k) {
            int v = static_cast<int>(rng() % H.num_variables());
            x = H.multiply(x, v == 0 ? H.delta() : H.coordinate(v));
        }
        int len = static_cast<int>(rng() % 3);
        for (int k = 0; k < len; ++k) x = H.multiply(x, H.simple(static_cast<int>(rng() % H.num_simple())));
        out += x;
    }
    return out;
}

Vec random_form(std::mt19937_64& rng, int n) {
    Vec f(n);
    for (auto& v : f) v = q(static_cast<long long>(rng() % 9) - 4, static_cast<long long>(rng() % 3) + 1);
    return f;
}

}  // namespace

TEST_CASE("build and basic relations in the A1 block") {
    auto H = principal('A', 1, {2, 2});
    CHECK(H->num_variables() == 2);
    for (int i = 0; i < H->num_simple(); ++i) {
        const Vec& a = H->simple_root(i);
        Vec lin(a.begin() + 1, a.end());
        CHECK(dot(lin, H->coroot(i)) == 2);
        DahaElement ai = H->linear(a);
        DahaElement lhs = H->multiply(H->simple(i), ai);
        DahaElement rhs = Rational(-1) * H->multiply(ai, H->simple(i)) + Rational(2 * H->param(i)) * H->u();
        CHECK(lhs == rhs);
        CHECK(H->multiply(H->simple(i), H->delta()) == H->multiply(H->delta(), H->simple(i)));
        CHECK(H->multiply(H->simple(i), H->simple(i)) == H->scalar(1));
    }
}

TEST_CASE("commutation relation on degree-one elements") {
    std::mt19937_64 rng(5);
    for (auto [s, r, params] : {std::tuple{'A', 1, std::vector<int>{2, 3}}, {'A', 2, {2, 2, 2}}, {'C', 2, {2, 3, 2}}}) {
        auto H = principal(s, r, params);
        for (int sample = 0; sample < 30; ++sample) {
            Vec v = random_form(rng, H->num_variables());
            for (int i = 0; i < H->num_simple(); ++i) {
                Vec lin(v.begin() + 1, v.end());
                Rational pairing = dot(lin, H->coroot(i));
                DahaElement V = H->linear(v);
                Vec reflected = v;
                for (std::size_t k = 0; k < v.size(); ++k) reflected[k] -= pairing * H->simple_root(i)[k];
                DahaElement lhs = H->multiply(H->simple(i), V) - H->multiply(H->linear(reflected), H->simple(i));
                CHECK(lhs == Rational(H->param(i)) * pairing * H->u());
            }
        }
    }
}

TEST_CASE("centrality, associativity and braid independence") {
    std::mt19937_64 rng(9);
    for (auto [s, r, params] : {std::tuple{'A', 1, std::vector<int>{2, 3}}, {'A', 2, {3, 3, 3}}, {'C', 2, {2, 3, 2}}}) {
        auto H = principal(s, r, params);
        for (int sample = 0; sample < 15; ++sample) {
            auto a = random_element(*H, rng), b = random_element(*H, rng), c = random_element(*H, rng);
            CHECK(H->multiply(H->multiply(a, b), c) == H->multiply(a, H->multiply(b, c)));
            CHECK(H->multiply(a, H->u()) == H->multiply(H->u(), a));
            CHECK(H->multiply(a, H->delta()) == H->multiply(H->delta(), a));
        }
        const auto& G = H->group();
        for (int i = 0; i < H->num_simple(); ++i)
            for (int j = i + 1; j < H->num_simple(); ++j) {
                int m = G.coxeter[i][j];
                if (m == kInfiniteOrder) continue;
                auto p = random_element(*H, rng);
                DahaElement x = p, y = p;
                for (int k = 0; k < m; ++k) {
                    x = H->multiply(H->simple(k % 2 ? j : i), x);
                    y = H->multiply(H->simple(k % 2 ? i : j), y);
                }
                CHECK(x == y);
            }
    }
}

TEST_CASE("specialization") {
    std::mt19937_64 rng(13);
    auto H = principal('A', 2, {2, 2, 2});
    Rational nu = q(3, 2);
    CHECK(H->specialize(H->u() + nu * H->scalar(1), nu).is_zero());
    CHECK(H->specialize(H->delta(), nu) == H->scalar(1));
    for (int sample = 0; sample < 15; ++sample) {
        auto a = random_element(*H, rng), b = random_element(*H, rng);
        auto lhs = H->specialize(H->multiply(a, b), nu);
        auto rhs = H->multiply_specialized(H->specialize(a, nu), H->specialize(b, nu), nu);
        CHECK(lhs == rhs);
        if (!lhs.is_zero()) CHECK(lhs.degree() <= a.degree() + b.degree());
    }
}

TEST_CASE("text grammar") {
    auto H = principal('A', 1, {2, 2});
    CHECK(H->parse("s1*d1") == H->multiply(H->simple(0), H->coordinate(1)));
    CHECK(H->parse("(u + 1/2)^2") == H->multiply(H->u() + q(1, 2) * H->scalar(1), H->u() + q(1, 2) * H->scalar(1)));
    CHECK(H->parse("-delta + 3") == H->scalar(3) - H->delta());
    auto t = H->parse("t[2]");
    CHECK(t == H->multiply(H->simple(1), H->simple(0)));
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        auto a = random_element(*H, rng, 3);
        CHECK(H->parse(H->to_string(a)) == a);
    }
    auto code = [&](const std::string& text) {
        try {
            H->parse(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code("t[1]") == ErrorCode::NotInGroup);
    CHECK(code("s1 *") == ErrorCode::ParseError);
    CHECK(code("x") == ErrorCode::ParseError);
    CHECK(H->to_string(H->scalar(0)) == "0");
}

TEST_CASE("exact division") {
    Polynomial p{{{1, 1}, q(1)}, {{0, 2}, q(2)}};  // delta*d1 + 2 d1^2 = d1 (delta + 2 d1)
    auto [quot, rest] = poly_divide_linear(p, {q(1), q(2)});
    CHECK(rest.empty());
    CHECK(quot == Polynomial{{{0, 1}, q(1)}});
    auto [q2, r2] = poly_divide_linear(Polynomial{{{0, 0}, q(1)}}, {q(0), q(1)});
    CHECK_FALSE(r2.empty());
}

TEST_CASE("eigenvalue points in the A1 block") {
    auto d = build_root_datum('A', 1, 1);
    auto g = GradingDatum::make(d, {q(1)}, 2, 1);
    auto base = facet_of(d, fundamental_alcove(d).witness);
    CHECK(eigen_point(d, g, base, base) == Vec{q(1, 2)});
    CHECK(eigen_point(d, g, facet_of(d, {q(3, 2)}), base) == Vec{q(3, 2)});
    CHECK(eigen_point(d, g, facet_of(d, {q(-1, 2)}), base) == Vec{q(-1, 2)});
    auto vertex = facet_of(d, {q(0)});
    CHECK_THROWS_AS(eigen_point(d, g, vertex, base), Error);
}
