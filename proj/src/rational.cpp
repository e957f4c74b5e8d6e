#include "spiral/rational.hpp"

#include "spiral/errors.hpp"

#include <cctype>

namespace spiral {

BigInt floor_of(const Rational& r) {
    BigInt n = boost::multiprecision::numerator(r);
    BigInt d = boost::multiprecision::denominator(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

BigInt ceil_of(const Rational& r) {
    BigInt f = floor_of(r);
    return Rational(f) == r ? f : f + 1;
}

long long to_int64(const Rational& r) {
    if (!is_integer(r)) fail(ErrorCode::InvalidArgument, "expected an integer, got " + to_string(r));
    return boost::multiprecision::numerator(r).convert_to<long long>();
}

std::string to_string(const Rational& r) { return r.str(); }

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) fail(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            fail(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    BigInt v(std::string(s.substr(i)));
    return neg ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num) / Rational(den);
}

std::string to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

Vec parse_vector(std::string_view text) {
    Vec out;
    std::string_view s = trim(text);
    if (!s.empty() && (s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
    if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
    if (trim(s).empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(parse_rational(s.substr(start, comma == std::string_view::npos ? s.size() - start : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Vec to_vec(const IntVec& v) {
    Vec out;
    out.reserve(v.size());
    for (int x : v) out.emplace_back(x);
    return out;
}

Rational dot(const IntVec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * b[i];
    return s;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace spiral
