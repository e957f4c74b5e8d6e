#include "spiral/chevalley.hpp"

#include "spiral/errors.hpp"
#include "spiral/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace spiral {

AlgebraElement AlgebraElement::basis(int index, Eisenstein c) {
    AlgebraElement x;
    x.add(index, c);
    return x;
}

void AlgebraElement::add(int index, const Eisenstein& c) {
    if (c == Eisenstein(0)) return;
    auto it = coeffs.find(index);
    if (it == coeffs.end()) {
        coeffs.emplace(index, c);
        return;
    }
    it->second += c;
    if (it->second == Eisenstein(0)) coeffs.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    for (const auto& [i, c] : other.coeffs) add(i, c);
    return *this;
}

AlgebraElement operator*(const Eisenstein& c, const AlgebraElement& x) {
    AlgebraElement out;
    if (c == Eisenstein(0)) return out;
    for (const auto& [i, v] : x.coeffs) out.coeffs.emplace(i, c * v);
    return out;
}

ChevalleyAlgebra ChevalleyAlgebra::build(char series, int rank) {
    ChevalleyAlgebra alg;
    alg.series_ = series;
    alg.rank_ = rank;
    alg.cartan_ = cartan_matrix(series, rank);
    alg.sym_ = symmetrizer(alg.cartan_);
    auto pos = positive_roots(alg.cartan_);
    alg.roots_ = pos;
    for (const auto& r : pos) {
        IntVec neg(r.size());
        std::transform(r.begin(), r.end(), neg.begin(), [](int v) { return -v; });
        alg.roots_.push_back(neg);
    }
    for (int a = 0; a < alg.num_roots(); ++a) alg.index_.emplace(alg.roots_[a], a);
    int nr = alg.num_roots();
    alg.sum_.assign(nr, IntVec(nr, -1));
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            if (b == alg.negative(a)) {
                alg.sum_[a][b] = -2;
                continue;
            }
            IntVec s(rank);
            for (int i = 0; i < rank; ++i) s[i] = alg.roots_[a][i] + alg.roots_[b][i];
            alg.sum_[a][b] = alg.root_index(s);
        }
    alg.coroots_.resize(nr);
    for (int a = 0; a < nr; ++a) {
        int len = alg.inner(alg.roots_[a], alg.roots_[a]);
        IntVec h(rank);
        for (int j = 0; j < rank; ++j) h[j] = 2 * alg.roots_[a][j] * alg.sym_[j] / len;
        alg.coroots_[a] = h;
    }
    alg.compute_structure_constants();
    return alg;
}

int ChevalleyAlgebra::root_index(const IntVec& coeffs) const {
    auto it = index_.find(coeffs);
    return it == index_.end() ? -1 : it->second;
}

int ChevalleyAlgebra::inner(const IntVec& x, const IntVec& y) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) s += x[i] * y[j] * sym_[i] * cartan_[i][j];
    }
    return s;
}

int ChevalleyAlgebra::cartan_pairing(int a, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += roots_[a][j] * cartan_[i][j];
    return s;
}

void ChevalleyAlgebra::compute_structure_constants() {
    const int nr = num_roots();
    const int np = num_positive();
    std::vector<IntVec> pos_n(np, IntVec(np, 0));
    std::vector<std::vector<bool>> known(np, std::vector<bool>(np, false));

    auto len = [&](int a) { return inner(roots_[a], roots_[a]); };
    // Resolve N_{a,b} for arbitrary roots from positive pairs already fixed.
    std::function<int(int, int)> resolve = [&](int a, int b) -> int {
        int s = sum_[a][b];
        if (s < 0) return 0;
        bool pa = a < np, pb = b < np;
        if (pa && pb) {
            if (!known[a][b]) fail(ErrorCode::InvalidType, "structure constant requested out of order");
            return pos_n[a][b];
        }
        if (!pa && !pb) return -resolve(negative(a), negative(b));
        int c = negative(s);
        bool pc = c < np;
        long num;
        int den;
        if (pb == pc) {
            num = static_cast<long>(resolve(b, c)) * len(c);
            den = len(a);
        } else {
            num = static_cast<long>(resolve(c, a)) * len(c);
            den = len(b);
        }
        if (num % den != 0) fail(ErrorCode::InvalidType, "non-integral structure constant");
        return static_cast<int>(num / den);
    };

    for (int xi = 0; xi < np; ++xi) {
        int height = std::accumulate(roots_[xi].begin(), roots_[xi].end(), 0);
        if (height == 1) continue;
        int alpha = -1;
        for (int g = 0; g < np && alpha < 0; ++g) {
            int d = sum_[xi][negative(g)];
            if (d >= 0 && d < np) alpha = g;
        }
        int beta = sum_[xi][negative(alpha)];
        int p = 0;
        for (int cur = beta;;) {
            int down = sum_[cur][negative(alpha)];
            if (down < 0) break;
            ++p;
            cur = down;
        }
        pos_n[alpha][beta] = p + 1;
        pos_n[beta][alpha] = -(p + 1);
        known[alpha][beta] = known[beta][alpha] = true;
        for (int g = 0; g < np; ++g) {
            int d = sum_[xi][negative(g)];
            if (d < 0 || d >= np || g == alpha || g == beta || g > d) continue;
            Rational t = 0;
            int bg = sum_[beta][negative(g)];
            if (bg >= 0) t += Rational(resolve(beta, negative(g)) * resolve(alpha, negative(d))) / len(bg);
            int ag = sum_[alpha][negative(g)];
            if (ag >= 0) t += Rational(resolve(negative(g), alpha) * resolve(beta, negative(d))) / len(ag);
            Rational val = t * len(xi) / pos_n[alpha][beta];
            int v = static_cast<int>(to_int64(val));
            pos_n[g][d] = v;
            pos_n[d][g] = -v;
            known[g][d] = known[d][g] = true;
        }
    }
    n_.assign(nr, IntVec(nr, 0));
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) n_[a][b] = resolve(a, b);
}

std::vector<SparseTerm> ChevalleyAlgebra::bracket_basis(int x, int y) const {
    std::vector<SparseTerm> out;
    const int nr = num_roots();
    bool rx = x < nr, ry = y < nr;
    if (rx && ry) {
        int s = sum_[x][y];
        if (s == -2) {
            for (int i = 0; i < rank_; ++i)
                if (coroots_[x][i] != 0) out.push_back({nr + i, coroots_[x][i]});
        } else if (s >= 0) {
            out.push_back({s, n_[x][y]});
        }
    } else if (rx) {
        int c = cartan_pairing(x, y - nr);
        if (c != 0) out.push_back({x, -c});
    } else if (ry) {
        int c = cartan_pairing(y, x - nr);
        if (c != 0) out.push_back({y, c});
    }
    return out;
}

std::string ChevalleyAlgebra::basis_label(int index) const {
    if (index >= num_roots()) return "h" + std::to_string(index - num_roots() + 1);
    std::string out = "e[";
    for (int i = 0; i < rank_; ++i) {
        if (i) out += ",";
        out += std::to_string(roots_[index][i]);
    }
    return out + "]";
}

std::vector<int> ChevalleyAlgebra::diagram_permutation(int e) const {
    std::vector<int> perm(rank_);
    std::iota(perm.begin(), perm.end(), 0);
    if (e == 1) return perm;
    auto bad = [&] {
        fail(ErrorCode::InvalidTwist, std::string("no pinned automorphism of order ") + std::to_string(e) + " for " +
                                          series_ + std::to_string(rank_));
    };
    if (e == 2) {
        if (series_ == 'A' && rank_ >= 2) {
            for (int i = 0; i < rank_; ++i) perm[i] = rank_ - 1 - i;
        } else if (series_ == 'D') {
            std::swap(perm[rank_ - 2], perm[rank_ - 1]);
        } else if (series_ == 'E' && rank_ == 6) {
            std::swap(perm[0], perm[5]);
            std::swap(perm[2], perm[4]);
        } else {
            bad();
        }
        return perm;
    }
    if (e == 3 && series_ == 'D' && rank_ == 4) {
        perm[0] = 2;
        perm[2] = 3;
        perm[3] = 0;
        return perm;
    }
    bad();
    return perm;
}

ChevalleyAlgebra::SignedPermutation ChevalleyAlgebra::pinned_automorphism(int e) const {
    auto perm = diagram_permutation(e);
    const int nr = num_roots(), np = num_positive();
    SignedPermutation out;
    out.target.assign(dim(), 0);
    out.sign.assign(dim(), 1);
    auto image = [&](int a) {
        IntVec c(rank_, 0);
        for (int i = 0; i < rank_; ++i) c[perm[i]] = roots_[a][i];
        return root_index(c);
    };
    for (int a = 0; a < nr; ++a) out.target[a] = image(a);
    for (int i = 0; i < rank_; ++i) out.target[nr + i] = nr + perm[i];
    for (int xi = 0; xi < np; ++xi) {
        int height = std::accumulate(roots_[xi].begin(), roots_[xi].end(), 0);
        if (height == 1) continue;
        int simple = -1, beta = -1;
        for (int i = 0; i < rank_ && simple < 0; ++i) {
            IntVec c = roots_[xi];
            c[i] -= 1;
            int b = root_index(c);
            if (b >= 0 && b < np) {
                IntVec s(rank_, 0);
                s[i] = 1;
                simple = root_index(s);
                beta = b;
            }
        }
        int num = n_[out.target[simple]][out.target[beta]];
        int den = n_[simple][beta];
        out.sign[xi] = out.sign[beta] * num / den;
        out.sign[negative(xi)] = out.sign[xi];
    }
    return out;
}

AlgebraElement bracket(const ChevalleyAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (const auto& [i, a] : x.coeffs)
        for (const auto& [j, b] : y.coeffs) {
            auto terms = alg.bracket_basis(i, j);
            if (terms.empty()) continue;
            Eisenstein ab = a * b;
            for (const auto& t : terms) out.add(t.index, ab * Eisenstein(t.coeff));
        }
    return out;
}

namespace {

using IntMap = std::map<int, long>;

void add_into(IntMap& acc, int index, long c) {
    if (c == 0) return;
    long& v = acc[index];
    v += c;
    if (v == 0) acc.erase(index);
}

IntMap nested(const ChevalleyAlgebra& alg, int a, int b, int c) {
    IntMap out;
    for (const auto& t : alg.bracket_basis(b, c))
        for (const auto& u : alg.bracket_basis(a, t.index)) add_into(out, u.index, static_cast<long>(t.coeff) * u.coeff);
    return out;
}

}  // namespace

std::optional<std::string> check_jacobi(const ChevalleyAlgebra& alg) {
    const int n = alg.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            IntMap s;
            for (const auto& t : alg.bracket_basis(a, b)) add_into(s, t.index, t.coeff);
            for (const auto& t : alg.bracket_basis(b, a)) add_into(s, t.index, t.coeff);
            if (!s.empty()) return "antisymmetry fails for " + alg.basis_label(a) + ", " + alg.basis_label(b);
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                IntMap s = nested(alg, a, b, c);
                for (const auto& [k, v] : nested(alg, b, c, a)) add_into(s, k, v);
                for (const auto& [k, v] : nested(alg, c, a, b)) add_into(s, k, v);
                if (!s.empty())
                    return "Jacobi fails for " + alg.basis_label(a) + ", " + alg.basis_label(b) + ", " +
                           alg.basis_label(c);
            }
    return std::nullopt;
}

std::optional<std::string> check_automorphism(const ChevalleyAlgebra& alg, int e) {
    auto sigma = alg.pinned_automorphism(e);
    const int n = alg.dim();
    bool is_identity = true;
    for (int b = 0; b < n; ++b) {
        int cur = b, sgn = 1;
        for (int k = 0; k < e; ++k) {
            sgn *= sigma.sign[cur];
            cur = sigma.target[cur];
        }
        if (cur != b || sgn != 1) return "sigma^e moves " + alg.basis_label(b);
        if (sigma.target[b] != b || sigma.sign[b] != 1) is_identity = false;
    }
    if (e > 1 && is_identity) return std::string("automorphism is trivial");
    for (int i = 0; i < alg.rank(); ++i) {
        IntVec s(alg.rank(), 0);
        s[i] = 1;
        int a = alg.root_index(s);
        if (sigma.sign[a] != 1 || sigma.sign[alg.negative(a)] != 1) return std::string("pinning not preserved");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            IntMap lhs, rhs;
            for (const auto& t : alg.bracket_basis(a, b))
                add_into(lhs, sigma.target[t.index], static_cast<long>(t.coeff) * sigma.sign[t.index]);
            long sab = static_cast<long>(sigma.sign[a]) * sigma.sign[b];
            for (const auto& t : alg.bracket_basis(sigma.target[a], sigma.target[b]))
                add_into(rhs, t.index, t.coeff * sab);
            if (lhs != rhs) return "bracket not preserved on " + alg.basis_label(a) + ", " + alg.basis_label(b);
        }
    return std::nullopt;
}

FoldResult fold_by_pinned_auto(const ChevalleyAlgebra& alg, int e) {
    auto perm = alg.diagram_permutation(e);
    auto sigma = alg.pinned_automorphism(e);
    const int r = alg.rank();
    FoldResult out;
    out.e = e;
    std::vector<int> orbit_of(r, -1);
    for (int i = 0; i < r; ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<int> orb;
        for (int j = i; orbit_of[j] < 0; j = perm[j]) {
            orbit_of[j] = static_cast<int>(out.node_orbits.size());
            orb.push_back(j);
        }
        std::sort(orb.begin(), orb.end());
        out.node_orbits.push_back(orb);
    }
    const int k = static_cast<int>(out.node_orbits.size());
    auto restrict_root = [&](const IntVec& c) {
        IntVec rc(k, 0);
        for (int i = 0; i < r; ++i) rc[orbit_of[i]] += c[i];
        return rc;
    };
    Eisenstein zeta = e == 1 ? Eisenstein(1) : (e == 2 ? Eisenstein(-1) : Eisenstein::omega_power(1));
    std::vector<Eisenstein> powers(e);
    powers[0] = 1;
    for (int i = 1; i < e; ++i) powers[i] = powers[i - 1] * zeta;

    // cycle decomposition of a signed permutation restricted to a set of basis indices
    auto eigen_split = [&](const std::vector<int>& members, std::vector<int>& classes,
                           std::vector<AlgebraElement>& vectors) {
        std::set<int> done;
        for (int start : members) {
            if (done.count(start)) continue;
            std::vector<int> cyc;
            std::vector<int> signs;  // sign of sigma^j(e_start) coefficient
            int cur = start, acc = 1;
            while (!done.count(cur)) {
                done.insert(cur);
                cyc.push_back(cur);
                signs.push_back(acc);
                acc *= sigma.sign[cur];
                cur = sigma.target[cur];
            }
            Eisenstein eps(acc);
            int len = static_cast<int>(cyc.size());
            for (int cls = 0; cls < e; ++cls) {
                Eisenstein lam = powers[cls];
                Eisenstein lk = 1;
                for (int j = 0; j < len; ++j) lk *= lam;
                if (lk != eps) continue;
                AlgebraElement v;
                Eisenstein inv = Eisenstein(1) / lam, w = 1;
                for (int j = 0; j < len; ++j) {
                    v.add(cyc[j], w * Eisenstein(signs[j]));
                    w *= inv;
                }
                if (std::find(classes.begin(), classes.end(), cls) != classes.end())
                    fail(ErrorCode::InvalidTwist, "graded root space of dimension > 1");
                classes.push_back(cls);
                vectors.push_back(v);
            }
        }
    };

    std::map<IntVec, std::vector<int>> groups;
    for (int a = 0; a < alg.num_roots(); ++a) groups[restrict_root(alg.roots()[a])].push_back(a);
    std::vector<IntVec> pos;
    for (const auto& [rc, members] : groups)
        if (std::accumulate(rc.begin(), rc.end(), 0) > 0) pos.push_back(rc);
    std::sort(pos.begin(), pos.end(), [](const IntVec& x, const IntVec& y) {
        int hx = std::accumulate(x.begin(), x.end(), 0);
        int hy = std::accumulate(y.begin(), y.end(), 0);
        return std::tie(hx, x) < std::tie(hy, y);
    });
    std::vector<IntVec> order = pos;
    for (const auto& p : pos) {
        IntVec n(p.size());
        std::transform(p.begin(), p.end(), n.begin(), [](int v) { return -v; });
        order.push_back(n);
    }
    for (const auto& rc : order) {
        FoldedRoot fr;
        fr.coeffs = rc;
        std::vector<int> classes;
        std::vector<AlgebraElement> vectors;
        eigen_split(groups[rc], classes, vectors);
        std::vector<int> idx(classes.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return classes[a] < classes[b]; });
        for (int i : idx) {
            fr.classes.push_back(classes[i]);
            fr.vectors.push_back(vectors[i]);
        }
        out.roots.push_back(std::move(fr));
    }
    out.cartan_graded_dims.assign(e, 0);
    out.cartan_vectors.assign(e, {});
    std::vector<bool> seen(r, false);
    for (int i = 0; i < r; ++i) {
        if (seen[i]) continue;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
        std::vector<int> classes;
        std::vector<AlgebraElement> vectors;
        eigen_split({alg.cartan_index(i)}, classes, vectors);
        for (std::size_t c = 0; c < classes.size(); ++c) {
            out.cartan_graded_dims[classes[c]] += 1;
            out.cartan_vectors[classes[c]].push_back(vectors[c]);
        }
    }
    return out;
}

}  // namespace spiral

namespace spiral {

namespace {

using linalg::Matrix;

std::vector<Eisenstein> dense(const AlgebraElement& x, int dim) {
    std::vector<Eisenstein> v(dim, Eisenstein(0));
    for (const auto& [i, c] : x.coeffs) v[i] = c;
    return v;
}

std::size_t rank_of(const std::vector<AlgebraElement>& xs, int dim) {
    Matrix<Eisenstein> m;
    for (const auto& x : xs)
        if (!x.is_zero()) m.push_back(dense(x, dim));
    return linalg::rank(std::move(m));
}

}  // namespace

std::vector<int> jordan_profile(const ChevalleyAlgebra& alg, const AlgebraElement& x,
                                const std::vector<AlgebraElement>& subspace) {
    const int n = alg.dim();
    // ad(x)-stable span generated by the subspace, kept in echelon form
    Matrix<Eisenstein> echelon;
    std::vector<AlgebraElement> basis, queue(subspace.begin(), subspace.end());
    std::size_t head = 0;
    while (head < queue.size()) {
        AlgebraElement v = queue[head++];
        if (v.is_zero()) continue;
        Matrix<Eisenstein> trial = echelon;
        trial.push_back(dense(v, n));
        auto piv = linalg::rref(trial, n);
        if (piv.size() == echelon.size()) continue;
        trial.resize(piv.size());
        echelon = std::move(trial);
        basis.push_back(v);
        queue.push_back(bracket(alg, x, v));
    }
    std::vector<std::size_t> ranks{basis.size()};
    std::vector<AlgebraElement> cur = basis;
    while (ranks.back() > 0) {
        if (ranks.size() > basis.size() + 1) fail(ErrorCode::NotNilpotent, "ad(x) is not nilpotent on the span");
        for (auto& v : cur) v = bracket(alg, x, v);
        ranks.push_back(rank_of(cur, n));
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    std::vector<int> blocks;
    for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
        std::size_t at_least = ranks[k - 1] - ranks[k];
        std::size_t longer = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = 0; c < at_least - longer; ++c) blocks.push_back(static_cast<int>(k));
    }
    return blocks;
}

namespace {

struct DegreeSplit {
    std::vector<const LeviRootSpace*> zero, two;
};

DegreeSplit split_degrees(const LeviSubalgebra& levi, const Vec& h) {
    DegreeSplit out;
    for (const auto& r : levi.roots) {
        Rational d = dot(r.covector, h);
        if (!is_integer(d) || to_int64(d) % 2 != 0)
            fail(ErrorCode::OddGrading, "pairing " + to_string(d) + " is not an even integer");
        if (d == 0) out.zero.push_back(&r);
        if (d == 2) out.two.push_back(&r);
    }
    return out;
}

}  // namespace

bool is_distinguished(const ChevalleyAlgebra&, const LeviSubalgebra& levi, const Vec& h) {
    auto s = split_degrees(levi, h);
    return s.zero.size() + static_cast<std::size_t>(levi.semisimple_rank) == s.two.size();
}

bool is_distinguished(const CartanMatrix& cartan, const IntVec& marks) {
    if (marks.size() != cartan.size())
        fail(ErrorCode::InvalidArgument, "expected " + std::to_string(cartan.size()) + " marks");
    for (int v : marks) {
        if (v < 0) fail(ErrorCode::InvalidArgument, "marks must be non-negative");
        if (v % 2 != 0) fail(ErrorCode::OddGrading, "odd mark " + std::to_string(v));
    }
    std::size_t zero = 0, two = 0;
    for (const auto& r : positive_roots(cartan)) {
        int d = 0;
        for (std::size_t j = 0; j < r.size(); ++j) d += r[j] * marks[j];
        if (d == 0) zero += 2;
        if (d == 2) ++two;
    }
    return zero + cartan.size() == two;
}

OrbitCertificate orbit_representative(const ChevalleyAlgebra& alg, const LeviSubalgebra& levi, const Vec& h,
                                      std::uint64_t seed) {
    auto s = split_degrees(levi, h);
    if (s.zero.size() + static_cast<std::size_t>(levi.semisimple_rank) != s.two.size())
        fail(ErrorCode::NotDistinguished, "grading is not distinguished");
    std::vector<AlgebraElement> degree_zero = levi.cartan;
    for (const auto* r : s.zero) degree_zero.push_back(r->vector);
    constexpr int kAttempts = 16;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
        AlgebraElement x;
        for (const auto* r : s.two) {
            int c = attempt == 0 ? 1 : static_cast<int>(rng() % 9) + 1;
            x += Eisenstein(c) * r->vector;
        }
        std::vector<AlgebraElement> images;
        for (const auto& v : degree_zero) images.push_back(bracket(alg, v, x));
        std::size_t rk = rank_of(images, alg.dim());
        if (rk == s.two.size()) return {x, rk, s.two.size(), attempt + 1};
    }
    fail(ErrorCode::GenericityFailure, "no representative of the dense orbit found");
}

}  // namespace spiral
