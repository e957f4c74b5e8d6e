#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spiral {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

using Vec = std::vector<Rational>;
using IntVec = std::vector<int>;

inline Rational make_rational(long long num, long long den) { return Rational(num) / Rational(den); }

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
long long to_int64(const Rational& r);

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& r);
/// Accepts "p", "-p", "p/q"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Vec& v);
Vec parse_vector(std::string_view text);

int sign(const Rational& r);

Vec to_vec(const IntVec& v);
Rational dot(const IntVec& a, const Vec& b);
Rational dot(const Vec& a, const Vec& b);

}  // namespace spiral
