#include "vck/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vck {

namespace {

std::string cell(int x, int y) {
    return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
}

std::string triple(int x, int y, int z) {
    return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "," +
           std::to_string(z + 1) + ")";
}

}  // namespace

SolutionTable SolutionTable::relabel(const std::vector<int>& phi) const {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[phi[i]] = i;
    SolutionTable out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [z, w] = at(inv[x], inv[y]);
            out.set(x, y, phi[z], phi[w]);
        }
    return out;
}

bool check_bijective(const SolutionTable& s, std::string* witness) {
    std::vector<char> seen(s.n * s.n, 0);
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            auto [z, w] = s.at(x, y);
            if (z >= s.n || w >= s.n) {
                if (witness) *witness = "out-of-range entry at " + cell(x, y);
                return false;
            }
            int idx = z * s.n + w;
            if (seen[idx]) {
                if (witness) *witness = "duplicate output pair at " + cell(x, y);
                return false;
            }
            seen[idx] = 1;
        }
    return true;
}

bool check_yb(const SolutionTable& s, std::string* witness) {
    if (!check_bijective(s, witness)) return false;
    const int n = s.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // left side: (1 x s)(s x 1)(1 x s)
                auto [b1, c1] = s.at(y, z);
                auto [a2, b2] = s.at(x, b1);
                auto [b3, c3] = s.at(b2, c1);
                // right side: (s x 1)(1 x s)(s x 1)
                auto [p1, q1] = s.at(x, y);
                auto [q2, r2] = s.at(q1, z);
                auto [p3, q3] = s.at(p1, q2);
                if (a2 != p3 || b3 != q3 || c3 != r2) {
                    if (witness) *witness = "YB fails at " + triple(x, y, z);
                    return false;
                }
            }
    return true;
}

bool check_left_invertible(const SolutionTable& s, std::string* witness) {
    for (int x = 0; x < s.n; ++x) {
        std::vector<char> seen(s.n, 0);
        for (int y = 0; y < s.n; ++y) {
            int z = s.out1(x, y);
            if (seen[z]) {
                if (witness)
                    *witness = "left invertibility fails: row " + std::to_string(x + 1) +
                               " repeats first output " + std::to_string(z + 1);
                return false;
            }
            seen[z] = 1;
        }
    }
    return true;
}

bool check_right_invertible(const SolutionTable& s, std::string* witness) {
    for (int y = 0; y < s.n; ++y) {
        std::vector<char> seen(s.n, 0);
        for (int x = 0; x < s.n; ++x) {
            int w = s.out2(x, y);
            if (seen[w]) {
                if (witness)
                    *witness = "right invertibility fails: column " + std::to_string(y + 1) +
                               " repeats second output " + std::to_string(w + 1);
                return false;
            }
            seen[w] = 1;
        }
    }
    return true;
}

std::optional<Biquandle> try_biquandle(const SolutionTable& s) {
    std::string w;
    if (!check_yb(s, &w) || !check_left_invertible(s, &w) || !check_right_invertible(s, &w))
        return std::nullopt;
    Biquandle b;
    b.table = s;
    b.s.assign(s.n, 0);
    std::vector<char> used(s.n, 0);
    for (int x = 0; x < s.n; ++x) {
        int found = -1;
        for (int y = 0; y < s.n; ++y)
            if (s.out1(x, y) == x && s.out2(x, y) == y) {
                if (found >= 0) return std::nullopt;
                found = y;
            }
        if (found < 0 || used[found]) return std::nullopt;
        used[found] = 1;
        b.s[x] = (Color)found;
    }
    return b;
}

Biquandle as_biquandle(const SolutionTable& s) {
    std::string w;
    if (!check_yb(s, &w)) throw std::runtime_error("not a YB solution: " + w);
    if (!check_left_invertible(s, &w)) throw std::runtime_error(w);
    if (!check_right_invertible(s, &w)) throw std::runtime_error(w);
    Biquandle b;
    b.table = s;
    b.s.assign(s.n, 0);
    std::vector<char> used(s.n, 0);
    for (int x = 0; x < s.n; ++x) {
        int found = -1;
        for (int y = 0; y < s.n; ++y)
            if (s.out1(x, y) == x && s.out2(x, y) == y) {
                if (found >= 0)
                    throw std::runtime_error("fixed partner of " + std::to_string(x + 1) +
                                             " is not unique: " + std::to_string(found + 1) +
                                             " and " + std::to_string(y + 1));
                found = y;
            }
        if (found < 0)
            throw std::runtime_error("no fixed partner for " + std::to_string(x + 1));
        if (used[found])
            throw std::runtime_error("fixed-partner map is not a bijection at " +
                                     std::to_string(found + 1));
        used[found] = 1;
        b.s[x] = (Color)found;
    }
    return b;
}

bool check_involutive(const SolutionTable& beta, std::string* witness) {
    for (int x = 0; x < beta.n; ++x)
        for (int y = 0; y < beta.n; ++y) {
            auto [z, w] = beta.at(x, y);
            auto [x2, y2] = beta.at(z, w);
            if (x2 != x || y2 != y) {
                if (witness) *witness = "beta^2 != id at " + cell(x, y);
                return false;
            }
        }
    return true;
}

bool check_mixed_relation(const SolutionTable& S, const SolutionTable& beta,
                          std::string* witness) {
    const int n = S.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // (1 x b)(S x 1)(1 x b)
                auto [b1, c1] = beta.at(y, z);
                auto [a2, b2] = S.at(x, b1);
                auto [b3, c3] = beta.at(b2, c1);
                // (b x 1)(1 x S)(b x 1)
                auto [p1, q1] = beta.at(x, y);
                auto [q2, r2] = S.at(q1, z);
                auto [p3, q3] = beta.at(p1, q2);
                if (a2 != p3 || b3 != q3 || c3 != r2) {
                    if (witness) *witness = "mixed relation fails at " + triple(x, y, z);
                    return false;
                }
            }
    return true;
}

bool check_virtual_pair(const Biquandle& S, const Biquandle& beta, std::string* witness) {
    if (S.n() != beta.n()) {
        if (witness) *witness = "size mismatch";
        return false;
    }
    if (!check_involutive(beta.table, witness)) return false;
    return check_mixed_relation(S.table, beta.table, witness);
}

VirtualPair make_virtual_pair(const SolutionTable& S, const SolutionTable& beta) {
    if (S.n != beta.n) throw std::runtime_error("size mismatch between S and beta");
    VirtualPair vp{as_biquandle(S), as_biquandle(beta)};
    std::string w;
    if (!check_involutive(beta, &w)) throw std::runtime_error(w);
    if (!check_mixed_relation(S, beta, &w)) throw std::runtime_error(w);
    return vp;
}

bool is_automorphism(const SolutionTable& S, const std::vector<int>& a) {
    for (int x = 0; x < S.n; ++x)
        for (int y = 0; y < S.n; ++y) {
            auto [z, w] = S.at(x, y);
            if (S.out1(a[x], a[y]) != a[z] || S.out2(a[x], a[y]) != a[w]) return false;
        }
    return true;
}

std::vector<std::vector<int>> automorphisms(const Biquandle& S) {
    std::vector<int> perm(S.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (is_automorphism(S.table, perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SolutionTable beta_from_aut(const Biquandle& S, const std::vector<int>& a) {
    if (!is_automorphism(S.table, a))
        throw std::runtime_error("map is not an automorphism of S");
    int n = S.n();
    std::vector<int> ainv(n);
    for (int i = 0; i < n; ++i) ainv[a[i]] = i;
    SolutionTable beta(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) beta.set(x, y, ainv[y], a[x]);
    return beta;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int root(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[root(a)] = root(b); }
};

Partition partition_from(UnionFind& uf, int n) {
    Partition p;
    p.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        int r = uf.root(x);
        if (p.class_of[r] < 0) p.class_of[r] = p.num_classes++;
        p.class_of[x] = p.class_of[r];
    }
    return p;
}

void add_strand_relations(UnionFind& uf, const SolutionTable& s) {
    // each incoming strand is identified with its outgoing continuation:
    // x ~ out2(x,y), y ~ out1(x,y)
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            uf.join(x, s.out2(x, y));
            uf.join(y, s.out1(x, y));
        }
}

}  // namespace

Partition connected_components(const SolutionTable& s) {
    UnionFind uf(s.n);
    add_strand_relations(uf, s);
    return partition_from(uf, s.n);
}

Partition connected_components(const VirtualPair& vp) {
    UnionFind uf(vp.n());
    add_strand_relations(uf, vp.S.table);
    add_strand_relations(uf, vp.beta.table);
    return partition_from(uf, vp.n());
}

SolutionTable quandle_solution(const std::vector<std::vector<int>>& right_translation) {
    int n = (int)right_translation.size();
    SolutionTable s(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s.set(x, y, y, right_translation[y][x]);
    return s;
}

namespace {

SolutionTable flip_table(int n) {
    SolutionTable s(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s.set(x, y, y, x);
    return s;
}

SolutionTable antiflip_table(int n) {
    SolutionTable s(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s.set(x, y, (y + 1) % n, (x + 1) % n);
    return s;
}

SolutionTable dihedral_table(int n) {
    SolutionTable s(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s.set(x, y, y, ((2 * y - x) % n + n) % n);
    return s;
}

SolutionTable z4_s_table() {
    SolutionTable s(4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) s.set(x, y, (4 - y) % 4, (x + 2 * y) % 4);
    return s;
}

SolutionTable z4_beta_table() {
    SolutionTable s(4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            if (x % 2 == 0 && y % 2 == 0)
                s.set(x, y, (y + 2) % 4, (x + 2) % 4);
            else
                s.set(x, y, y, x);
        }
    return s;
}

// The 4-element solution used for the K3 coloring count (1-based in the
// source table, stored 0-based).
SolutionTable kishino4_table() {
    static const int raw[4][4][2] = {
        {{1, 1}, {2, 4}, {4, 2}, {3, 3}},
        {{3, 4}, {4, 1}, {2, 3}, {1, 2}},
        {{4, 3}, {3, 2}, {1, 4}, {2, 1}},
        {{2, 2}, {1, 3}, {3, 1}, {4, 4}},
    };
    SolutionTable s(4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) s.set(x, y, raw[x][y][0] - 1, raw[x][y][1] - 1);
    return s;
}

// Right-translation data of the pair-248 quandle: x |> 1 = x |> 2 = (3 4),
// x |> 3 = x |> 4 = (1 2)  (1-based cycles).
std::vector<std::vector<int>> pair248_translations() {
    std::vector<int> t34 = {0, 1, 3, 2};
    std::vector<int> t12 = {1, 0, 2, 3};
    return {t34, t34, t12, t12};
}

// S for pair 248: the quandle solution composed with (sigma x sigma) for
// sigma = (1 2)(3 4); this is the form whose universal group matches the
// known three-generator quotient structure.
SolutionTable pair248_s_table() {
    SolutionTable q = quandle_solution(pair248_translations());
    static const int sigma[4] = {1, 0, 3, 2};
    SolutionTable s(4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            auto [z, w] = q.at(x, y);
            s.set(x, y, sigma[z], sigma[w]);
        }
    return s;
}

SolutionTable pair248_beta_table() {
    // beta(x,y) = (l_x(y), l_y(x)) with l_1 = l_2 = (1 2), l_3 = l_4 = (1 2)(3 4)
    static const int l12[4] = {1, 0, 2, 3};
    static const int l1234[4] = {1, 0, 3, 2};
    auto l = [&](int i) { return (i < 2) ? l12 : l1234; };
    SolutionTable s(4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) s.set(x, y, l(x)[y], l(y)[x]);
    return s;
}

// beta(x,y) = (y-1, x+1) on Z/2: swap colors at virtual crossings.
SolutionTable selflink_beta_table() {
    SolutionTable s(2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) s.set(x, y, (y + 1) % 2, (x + 1) % 2);
    return s;
}

}  // namespace

SolutionTable make_named(const std::string& name, int n) {
    if (name == "flip") return flip_table(n);
    if (name == "antiflip") return antiflip_table(n);
    if (name == "dihedral") return dihedral_table(n);
    if (name == "z4") return z4_s_table();
    if (name == "z4-beta") return z4_beta_table();
    if (name == "kishino4") return kishino4_table();
    if (name == "pair248-s") return pair248_s_table();
    if (name == "pair248-beta") return pair248_beta_table();
    if (name == "selflink-beta") return selflink_beta_table();
    throw std::runtime_error("unknown solution name '" + name + "'");
}

VirtualPair make_named_pair(const std::string& name) {
    auto dih3_pair = [&](const std::vector<int>& a) {
        Biquandle S = as_biquandle(dihedral_table(3));
        return make_virtual_pair(S.table, beta_from_aut(S, a));
    };
    if (name == "flip2-flip2") return make_virtual_pair(flip_table(2), flip_table(2));
    if (name == "antiflip2-flip2") return make_virtual_pair(antiflip_table(2), flip_table(2));
    if (name == "z4") return make_virtual_pair(z4_s_table(), z4_beta_table());
    if (name == "dih3-id") return dih3_pair({0, 1, 2});
    if (name == "dih3-s23") return dih3_pair({0, 2, 1});
    if (name == "dih3-c123") return dih3_pair({1, 2, 0});
    if (name == "kishino4-flip") return make_virtual_pair(kishino4_table(), flip_table(4));
    if (name == "pair248") return make_virtual_pair(pair248_s_table(), pair248_beta_table());
    if (name == "selflink-z2") return make_virtual_pair(flip_table(2), selflink_beta_table());
    throw std::runtime_error("unknown pair name '" + name + "'");
}

std::vector<std::string> named_pair_list() {
    return {"flip2-flip2", "antiflip2-flip2", "z4",         "dih3-id",
            "dih3-s23",    "dih3-c123",       "kishino4-flip", "pair248",
            "selflink-z2"};
}

}  // namespace vck
