#include "spiral/daha.hpp"

#include "spiral/errors.hpp"

#include <cctype>
#include <sstream>

namespace spiral {

void DahaElement::add(const DahaKey& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

DahaElement& DahaElement::operator+=(const DahaElement& other) {
    for (const auto& [k, c] : other.terms) add(k, c);
    return *this;
}

DahaElement& DahaElement::operator-=(const DahaElement& other) {
    for (const auto& [k, c] : other.terms) add(k, -c);
    return *this;
}

DahaElement operator*(const Rational& c, const DahaElement& a) {
    DahaElement out;
    if (c == 0) return out;
    for (const auto& [k, v] : a.terms) out.terms.emplace(k, c * v);
    return out;
}

int DahaElement::degree() const {
    int best = -1;
    for (const auto& [k, c] : terms) {
        int deg = k.u;
        for (int e : k.mono) deg += e;
        best = std::max(best, deg);
    }
    return best;
}

namespace {

void poly_add(Polynomial& p, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

Polynomial linear_poly(const Vec& form) {
    Polynomial p;
    for (std::size_t v = 0; v < form.size(); ++v) {
        Monomial m(form.size(), 0);
        m[v] = 1;
        poly_add(p, m, form[v]);
    }
    return p;
}

Polynomial one(int nvars) { return Polynomial{{Monomial(nvars, 0), Rational(1)}}; }

}  // namespace

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
            poly_add(out, m, ca * cb);
        }
    return out;
}

std::pair<Polynomial, Polynomial> poly_divide_linear(const Polynomial& p, const Vec& l) {
    int pivot = -1;
    for (int v = static_cast<int>(l.size()) - 1; v >= 0; --v)
        if (l[v] != 0) pivot = v;
    if (pivot < 0) fail(ErrorCode::DivisionFailure, "division by zero form");
    Polynomial quotient, rest = p;
    for (;;) {
        const Monomial* lead = nullptr;
        for (const auto& [m, c] : rest)
            if (m[pivot] > 0 && (!lead || m[pivot] > (*lead)[pivot])) lead = &m;
        if (!lead) break;
        Monomial t = *lead;
        Rational c = rest.at(t) / l[pivot];
        --t[pivot];
        poly_add(quotient, t, c);
        for (std::size_t v = 0; v < l.size(); ++v) {
            if (l[v] == 0) continue;
            Monomial m = t;
            ++m[v];
            poly_add(rest, m, -c * l[v]);
        }
    }
    return {quotient, rest};
}

DahaAlgebra::DahaAlgebra(RelWeylGroup group) : group_(std::move(group)) {
    if (group_.params.size() != group_.walls.size())
        fail(ErrorCode::InvalidArgument, "relative Weyl group has no parameters");
    k_ = group_.geom.dim();
    for (const auto& w : group_.walls) {
        Vec r{w.alpha_constant};
        r.insert(r.end(), w.alpha.begin(), w.alpha.end());
        if (dot(w.alpha, w.coroot) != 2) fail(ErrorCode::InvalidArgument, "root and coroot do not pair to 2");
        roots_.push_back(std::move(r));
    }
}

DahaElement DahaAlgebra::polynomial(const Polynomial& p) const {
    DahaElement out;
    for (const auto& [m, c] : p) out.add({0, m, AffineIsometry::identity(k_)}, c);
    return out;
}

DahaElement DahaAlgebra::scalar(const Rational& c) const { return polynomial({{Monomial(k_ + 1, 0), c}}); }

DahaElement DahaAlgebra::u() const {
    DahaElement out;
    out.add({1, Monomial(k_ + 1, 0), AffineIsometry::identity(k_)}, 1);
    return out;
}

DahaElement DahaAlgebra::delta() const {
    Vec f(k_ + 1, Rational(0));
    f[0] = 1;
    return linear(f);
}

DahaElement DahaAlgebra::coordinate(int j) const {
    if (j < 1 || j > k_) fail(ErrorCode::InvalidArgument, "no coordinate d" + std::to_string(j));
    Vec f(k_ + 1, Rational(0));
    f[j] = 1;
    return linear(f);
}

DahaElement DahaAlgebra::linear(const Vec& form) const { return polynomial(linear_poly(form)); }

DahaElement DahaAlgebra::simple(int i) const {
    if (i < 0 || i >= num_simple()) fail(ErrorCode::InvalidArgument, "no simple reflection s" + std::to_string(i + 1));
    DahaElement out;
    out.add({0, Monomial(k_ + 1, 0), group_.generators[i]}, 1);
    return out;
}

DahaElement DahaAlgebra::group_element(const AffineIsometry& w) const {
    word(w);
    DahaElement out;
    out.add({0, Monomial(k_ + 1, 0), w}, 1);
    return out;
}

DahaElement DahaAlgebra::translation(const Vec& v) const {
    if (static_cast<int>(v.size()) != k_)
        fail(ErrorCode::InvalidArgument, "translation needs " + std::to_string(k_) + " coordinates");
    AffineIsometry t = AffineIsometry::identity(k_);
    t.translation = v;
    return group_element(t);
}

std::vector<int> DahaAlgebra::word(const AffineIsometry& w) const {
    {
        std::lock_guard lock(mutex_);
        auto it = words_.find(w);
        if (it != words_.end()) return it->second;
    }
    auto found = reduced_word(group_, w);
    if (!found) fail(ErrorCode::NotInGroup, "isometry is not in the relative affine Weyl group");
    std::lock_guard lock(mutex_);
    words_.emplace(w, *found);
    return *found;
}

Polynomial DahaAlgebra::act(const AffineIsometry& w, const Polynomial& p) const {
    AffineIsometry inv = w.inverse();
    std::vector<Polynomial> images;
    {
        Vec f(k_ + 1, Rational(0));
        f[0] = 1;
        images.push_back(linear_poly(f));
    }
    for (int j = 0; j < k_; ++j) {
        Vec f(k_ + 1);
        f[0] = inv.translation[j];
        for (int l = 0; l < k_; ++l) f[l + 1] = inv.linear[j][l];
        images.push_back(linear_poly(f));
    }
    Polynomial out;
    for (const auto& [m, c] : p) {
        Polynomial term = one(k_ + 1);
        for (int v = 0; v <= k_; ++v)
            for (int e = 0; e < m[v]; ++e) term = poly_multiply(term, images[v]);
        for (const auto& [mm, cc] : term) poly_add(out, mm, c * cc);
    }
    return out;
}

Polynomial DahaAlgebra::divided_difference(int i, const Polynomial& p) const {
    Polynomial diff = p;
    for (const auto& [m, c] : act(group_.generators[i], p)) poly_add(diff, m, -c);
    auto [quot, rest] = poly_divide_linear(diff, roots_[i]);
    if (!rest.empty()) fail(ErrorCode::DivisionFailure, "p - s_i(p) is not divisible by alpha_i");
    return quot;
}

DahaElement DahaAlgebra::left_simple(int i, const DahaElement& x) const {
    DahaElement out;
    const auto& s = group_.generators[i];
    const Rational c = group_.params[i];
    for (const auto& [key, coeff] : x.terms) {
        Polynomial p{{key.mono, Rational(1)}};
        AffineIsometry sw = s.compose(key.w);
        for (const auto& [m, v] : act(s, p)) out.add({key.u, m, sw}, coeff * v);
        for (const auto& [m, v] : divided_difference(i, p)) out.add({key.u + 1, m, key.w}, coeff * c * v);
    }
    return out;
}

DahaElement DahaAlgebra::move_past(const AffineIsometry& w, const Monomial& m) const {
    auto cache_key = std::make_pair(w, m);
    {
        std::lock_guard lock(mutex_);
        auto it = moves_.find(cache_key);
        if (it != moves_.end()) return it->second;
    }
    auto wd = word(w);
    DahaElement y;
    y.add({0, m, AffineIsometry::identity(k_)}, 1);
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) y = left_simple(*it, y);
    std::lock_guard lock(mutex_);
    moves_.emplace(cache_key, y);
    return y;
}

DahaElement DahaAlgebra::multiply(const DahaElement& a, const DahaElement& b) const {
    DahaElement out;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            DahaElement y = move_past(ka.w, kb.mono);
            for (const auto& [ky, cy] : y.terms) {
                Monomial m(ka.mono.size());
                for (std::size_t v = 0; v < m.size(); ++v) m[v] = ka.mono[v] + ky.mono[v];
                out.add({ka.u + kb.u + ky.u, m, ky.w.compose(kb.w)}, ca * cb * cy);
            }
        }
    return out;
}

DahaElement DahaAlgebra::power(const DahaElement& a, int n) const {
    if (n < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
    DahaElement out = scalar(1);
    for (int i = 0; i < n; ++i) out = multiply(out, a);
    return out;
}

DahaElement DahaAlgebra::specialize(const DahaElement& a, const Rational& nu) const {
    DahaElement out;
    for (const auto& [k, c] : a.terms) {
        Rational f = c;
        for (int i = 0; i < k.u; ++i) f *= -nu;
        Monomial m = k.mono;
        m[0] = 0;
        out.add({0, m, k.w}, f);
    }
    return out;
}

DahaElement DahaAlgebra::multiply_specialized(const DahaElement& a, const DahaElement& b, const Rational& nu) const {
    return specialize(multiply(a, b), nu);
}

std::string DahaAlgebra::to_string(const DahaElement& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : a.terms) {
        std::vector<std::string> factors;
        auto pw = [](const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); };
        if (k.u > 0) factors.push_back(pw("u", k.u));
        if (k.mono[0] > 0) factors.push_back(pw("delta", k.mono[0]));
        for (int j = 1; j <= k_; ++j)
            if (k.mono[j] > 0) factors.push_back(pw("d" + std::to_string(j), k.mono[j]));
        for (int i : word(k.w)) factors.push_back("s" + std::to_string(i + 1));
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string body;
        if (mag != 1 || factors.empty()) body = spiral::to_string(mag);
        for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const DahaAlgebra& alg, const std::string& text) : alg_(alg), s_(text) {}

    DahaElement run() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    const DahaAlgebra& alg_;
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& msg) {
        fail(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer");
        if (pos_ - start > 9) error("integer too large");
        return std::stoi(s_.substr(start, pos_ - start));
    }
    Rational number() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        try {
            return parse_rational(s_.substr(start, pos_ - start));
        } catch (const Error&) {
            error("malformed number");
        }
    }

    DahaElement expr() {
        DahaElement e = term();
        for (;;) {
            if (accept('+'))
                e += term();
            else if (accept('-'))
                e -= term();
            else
                return e;
        }
    }
    DahaElement term() {
        DahaElement e = factor();
        while (accept('*')) e = alg_.multiply(e, factor());
        return e;
    }
    DahaElement factor() {
        if (accept('-')) return Rational(-1) * factor();
        DahaElement base = primary();
        if (accept('^')) return alg_.power(base, integer());
        return base;
    }
    DahaElement primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!accept(')')) error("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
                ++pos_;
            try {
                return alg_.scalar(parse_rational(s_.substr(start, pos_ - start)));
            } catch (const Error&) {
                error("malformed number");
            }
        }
        if (s_.compare(pos_, 5, "delta") == 0) {
            pos_ += 5;
            return alg_.delta();
        }
        if (c == 'u') {
            ++pos_;
            return alg_.u();
        }
        if (c == 'd') {
            ++pos_;
            return alg_.coordinate(integer());
        }
        if (c == 's') {
            ++pos_;
            return alg_.simple(integer() - 1);
        }
        if (c == 't') {
            ++pos_;
            if (!accept('[')) error("expected '['");
            Vec v{number()};
            while (accept(',')) v.push_back(number());
            if (!accept(']')) error("expected ']'");
            return alg_.translation(v);
        }
        error("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

DahaElement DahaAlgebra::parse(const std::string& text) const { return Parser(*this, text).run(); }

Vec eigen_point(const RootDatum& d, const GradingDatum& g, const Facet& A, const Facet& base) {
    auto E = span_of_facet(d, A);
    Vec p = project_to_subspace(d, E, g.x_over_m());
    return conjugating_element(d, A, base).apply(p);
}

}  // namespace spiral
