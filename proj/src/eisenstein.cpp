#include "spiral/eisenstein.hpp"

#include "spiral/errors.hpp"

namespace spiral {

Eisenstein Eisenstein::omega_power(int k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        default: return {Rational(-1), Rational(-1)};
    }
}

Eisenstein operator/(const Eisenstein& x, const Eisenstein& y) {
    Rational n = y.norm();
    if (n == 0) fail(ErrorCode::InvalidArgument, "division by zero");
    Eisenstein p = x * y.conjugate();
    return {p.a_ / n, p.b_ / n};
}

std::string Eisenstein::str() const {
    if (b_ == 0) return to_string(a_);
    std::string out;
    if (a_ != 0) out = to_string(a_) + (b_ > 0 ? "+" : "");
    if (b_ == 1) return out + "w";
    if (b_ == -1) return out + "-w";
    return out + to_string(b_) + "w";
}

}  // namespace spiral
