#include "spiral/rootsystem.hpp"

#include "spiral/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace spiral {

CartanMatrix cartan_matrix(char series, int rank) {
    auto bad = [&] { fail(ErrorCode::InvalidType, std::string("no simple type ") + series + std::to_string(rank)); };
    if (rank < 1) bad();
    CartanMatrix a(rank, IntVec(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (series) {
        case 'A':
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            break;
        case 'B':
            if (rank < 2) bad();
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            a[rank - 1][rank - 2] = -2;  // alpha_n short
            break;
        case 'C':
            if (rank < 2) bad();
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            a[rank - 2][rank - 1] = -2;  // alpha_n long
            break;
        case 'D':
            if (rank < 4) bad();
            for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
            link(rank - 3, rank - 1);
            break;
        case 'E':
            if (rank < 6 || rank > 8) bad();
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < rank; ++i) link(i, i + 1);
            break;
        case 'F':
            if (rank != 4) bad();
            link(0, 1);
            link(2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
            break;
        case 'G':
            if (rank != 2) bad();
            a[0][1] = -3;  // alpha_1 short
            a[1][0] = -1;
            break;
        default:
            bad();
    }
    return a;
}

IntVec symmetrizer(const CartanMatrix& a) {
    int n = static_cast<int>(a.size());
    std::vector<Rational> d(n, Rational(0));
    for (int s = 0; s < n; ++s) {
        if (d[s] != 0) continue;
        std::vector<int> comp;
        std::queue<int> q;
        d[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            comp.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (j == i || a[i][j] == 0 || d[j] != 0) continue;
                // d_i a_ij = d_j a_ji
                d[j] = d[i] * a[i][j] / a[j][i];
                q.push(j);
            }
        }
        Rational mn = d[comp.front()];
        for (int i : comp) mn = std::min(mn, d[i]);
        BigInt lcm = 1;
        for (int i : comp) {
            d[i] /= mn;
            lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(d[i])));
        }
        for (int i : comp) d[i] *= Rational(lcm);
    }
    IntVec out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<int>(to_int64(d[i]));
    return out;
}

std::vector<IntVec> positive_roots(const CartanMatrix& a) {
    int n = static_cast<int>(a.size());
    std::vector<IntVec> roots;
    std::set<IntVec> known;
    for (int i = 0; i < n; ++i) {
        IntVec r(n, 0);
        r[i] = 1;
        roots.push_back(r);
        known.insert(r);
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        IntVec r = roots[k];
        for (int i = 0; i < n; ++i) {
            int p = 0;
            IntVec down = r;
            while (true) {
                down[i] -= 1;
                if (!known.count(down)) break;
                ++p;
            }
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += r[j] * a[i][j];
            if (p - pairing > 0) {
                IntVec up = r;
                up[i] += 1;
                if (known.insert(up).second) roots.push_back(up);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const IntVec& x, const IntVec& y) {
        int hx = std::accumulate(x.begin(), x.end(), 0);
        int hy = std::accumulate(y.begin(), y.end(), 0);
        return std::tie(hx, x) < std::tie(hy, y);
    });
    return roots;
}

namespace {

int bond(const CartanMatrix& a, int i, int j) { return a[i][j] * a[j][i]; }

std::vector<int> neighbours(const CartanMatrix& a, const std::vector<int>& comp, int i) {
    std::vector<int> out;
    for (int j : comp)
        if (j != i && a[i][j] != 0) out.push_back(j);
    return out;
}

std::vector<int> walk_chain(const CartanMatrix& a, const std::vector<int>& comp, int start, int from) {
    std::vector<int> out{start};
    int prev = from, cur = start;
    while (true) {
        int next = -1;
        for (int j : neighbours(a, comp, cur))
            if (j != prev) next = j;
        if (next < 0) break;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

TypeComponent classify_component(const CartanMatrix& a, std::vector<int> comp, const std::vector<Rational>& len) {
    TypeComponent t;
    t.rank = static_cast<int>(comp.size());
    std::sort(comp.begin(), comp.end());
    auto finish = [&](char letter, std::vector<int> nodes) {
        t.letter = letter;
        t.nodes = std::move(nodes);
        for (int i : t.nodes) t.lengths.push_back(len[i]);
        return t;
    };
    if (comp.size() == 1) return finish('A', comp);

    int branch = -1;
    bool triple = false;
    std::vector<std::pair<int, int>> doubles;
    for (int i : comp) {
        if (neighbours(a, comp, i).size() >= 3) branch = i;
        for (int j : comp) {
            if (j <= i) continue;
            if (bond(a, i, j) == 3) triple = true;
            if (bond(a, i, j) == 2) doubles.emplace_back(i, j);
        }
    }
    auto invalid = [] { fail(ErrorCode::InvalidType, "Cartan matrix is not of finite type"); };

    if (triple) {
        if (comp.size() != 2) invalid();
        int s = len[comp[0]] < len[comp[1]] ? comp[0] : comp[1];
        int l = s == comp[0] ? comp[1] : comp[0];
        return finish('G', {s, l});
    }
    if (branch >= 0) {
        if (!doubles.empty()) invalid();
        std::vector<std::vector<int>> arms;
        for (int j : neighbours(a, comp, branch)) arms.push_back(walk_chain(a, comp, j, branch));
        if (arms.size() != 3) invalid();
        std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
            return std::make_pair(x.size(), x.front()) < std::make_pair(y.size(), y.front());
        });
        std::size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
        if (l0 == 1 && l1 == 1) {
            std::vector<int> nodes(arms[2].rbegin(), arms[2].rend());
            nodes.push_back(branch);
            nodes.push_back(arms[0][0]);
            nodes.push_back(arms[1][0]);
            return finish('D', nodes);
        }
        if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
            std::vector<int> nodes{arms[1][1], arms[0][0], arms[1][0], branch};
            for (int j : arms[2]) nodes.push_back(j);
            return finish('E', nodes);
        }
        invalid();
    }
    std::vector<int> ends;
    for (int i : comp)
        if (neighbours(a, comp, i).size() == 1) ends.push_back(i);
    if (ends.size() != 2) invalid();
    if (doubles.empty()) return finish('A', walk_chain(a, comp, ends[0], -1));
    if (doubles.size() != 1) invalid();
    auto [p, q] = doubles.front();
    std::vector<int> chain = walk_chain(a, comp, ends[0], -1);
    auto pos = [&](int v) { return static_cast<int>(std::find(chain.begin(), chain.end(), v) - chain.begin()); };
    int n = static_cast<int>(chain.size());
    int lo = std::min(pos(p), pos(q));
    if (n == 4 && lo == 1) {
        // F4: start from the long end
        if (len[chain[0]] < len[chain[3]]) std::reverse(chain.begin(), chain.end());
        return finish('F', chain);
    }
    if (lo == 0) std::reverse(chain.begin(), chain.end());
    else if (lo != n - 2) invalid();
    if (n == 2) {
        if (len[chain[0]] < len[chain[1]]) std::reverse(chain.begin(), chain.end());
        return finish('B', chain);
    }
    bool last_short = len[chain[n - 1]] < len[chain[0]];
    return finish(last_short ? 'B' : 'C', chain);
}

}  // namespace

std::vector<TypeComponent> classify(const CartanMatrix& a, const std::vector<Rational>& lengths) {
    int n = static_cast<int>(a.size());
    std::vector<Rational> len = lengths;
    if (len.empty()) {
        IntVec d = symmetrizer(a);
        for (int x : d) len.emplace_back(2 * x);
    }
    std::vector<bool> seen(n, false);
    std::vector<TypeComponent> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            comp.push_back(i);
            for (int j = 0; j < n; ++j)
                if (!seen[j] && a[i][j] != 0) {
                    seen[j] = true;
                    q.push(j);
                }
        }
        out.push_back(classify_component(a, comp, len));
    }
    std::stable_sort(out.begin(), out.end(), [](const TypeComponent& x, const TypeComponent& y) {
        return std::tie(x.rank, x.letter, x.lengths) < std::tie(y.rank, y.letter, y.lengths);
    });
    return out;
}

std::string type_label(const std::vector<TypeComponent>& components) {
    if (components.empty()) return "T";
    std::string out;
    for (const auto& c : components) {
        if (!out.empty()) out += "+";
        out += c.letter + std::to_string(c.rank);
    }
    return out;
}

std::uint64_t weyl_group_order(const std::vector<TypeComponent>& components) {
    std::uint64_t total = 1;
    for (const auto& c : components) {
        std::uint64_t fact = 1;
        for (int i = 2; i <= c.rank; ++i) fact *= static_cast<std::uint64_t>(i);
        std::uint64_t w = 1;
        switch (c.letter) {
            case 'A': w = fact * static_cast<std::uint64_t>(c.rank + 1); break;
            case 'B':
            case 'C': w = fact << c.rank; break;
            case 'D': w = fact << (c.rank - 1); break;
            case 'E': w = c.rank == 6 ? 51840ULL : (c.rank == 7 ? 2903040ULL : 696729600ULL); break;
            case 'F': w = 1152; break;
            case 'G': w = 12; break;
        }
        total *= w;
    }
    return total;
}

AbstractType parse_type_label(const std::string& label) {
    AbstractType out;
    std::string s;
    for (char ch : label)
        if (ch != ' ') s += ch;
    if (s.empty() || s == "T") {
        out.label = "T";
        return out;
    }
    std::vector<std::pair<char, int>> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto plus = s.find('+', start);
        std::string part = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        if (part.size() < 2 || part[0] < 'A' || part[0] > 'G')
            fail(ErrorCode::InvalidType, "malformed type label '" + label + "'");
        int r = 0;
        for (std::size_t i = 1; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') fail(ErrorCode::InvalidType, "malformed type label '" + label + "'");
            r = r * 10 + (part[i] - '0');
        }
        char letter = part[0];
        if (letter == 'C' && r == 2) letter = 'B';
        parts.emplace_back(letter, r);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    int total = 0;
    for (auto [l, r] : parts) total += static_cast<int>(cartan_matrix(l, r).size());
    out.cartan.assign(total, IntVec(total, 0));
    std::vector<Rational> lengths;
    int offset = 0;
    for (auto [l, r] : parts) {
        CartanMatrix block = cartan_matrix(l, r);
        IntVec d = symmetrizer(block);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) out.cartan[offset + i][offset + j] = block[i][j];
            lengths.emplace_back(2 * d[i]);
        }
        offset += r;
    }
    out.components = classify(out.cartan, lengths);
    out.label = type_label(out.components);
    return out;
}

}  // namespace spiral
