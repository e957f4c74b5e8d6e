#pragma once

#include "spiral/rational.hpp"

#include <string>

namespace spiral {

/// Element a + b·w of Q(w), w a primitive cube root of unity (w² = −1 − w).
/// Order-3 foldings have eigenvalues w, w²; for e ≤ 2 every value has b = 0.
class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Eisenstein omega() { return {Rational(0), Rational(1)}; }
    /// w^k for any integer k.
    static Eisenstein omega_power(int k);

    const Rational& real_part() const { return a_; }
    const Rational& omega_part() const { return b_; }
    bool is_rational() const { return b_ == 0; }

    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    Eisenstein conjugate() const { return {a_ - b_, -b_}; }

    friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend Eisenstein operator-(const Eisenstein& x) { return {-x.a_, -x.b_}; }
    friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
        Rational bd = x.b_ * y.b_;
        return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
    }
    friend Eisenstein operator/(const Eisenstein& x, const Eisenstein& y);
    Eisenstein& operator+=(const Eisenstein& y) { return *this = *this + y; }
    Eisenstein& operator-=(const Eisenstein& y) { return *this = *this - y; }
    Eisenstein& operator*=(const Eisenstein& y) { return *this = *this * y; }

    friend bool operator==(const Eisenstein& x, const Eisenstein& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Eisenstein& x, const Eisenstein& y) { return !(x == y); }

    std::string str() const;

private:
    Rational a_ = 0;
    Rational b_ = 0;
};

}  // namespace spiral
