#include "vck/finite_group.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace vck {

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

void FiniteGroup::finish() {
    if (order <= 0 || (int)mul.size() != order * order)
        throw std::runtime_error("group table: bad size");
    for (int x : mul)
        if (x < 0 || x >= order) throw std::runtime_error("group table: entry out of range");
    for (int a = 0; a < order; ++a)
        if (op(0, a) != a || op(a, 0) != a)
            throw std::runtime_error("group table: element 0 is not an identity");
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw std::runtime_error("group table: not associative");
    if (inv.empty()) {
        inv.assign(order, -1);
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                if (op(a, b) == 0) inv[a] = b;
    }
    for (int a = 0; a < order; ++a)
        if (inv[a] < 0 || op(a, inv[a]) != 0 || op(inv[a], a) != 0)
            throw std::runtime_error("group table: missing inverse");

    class_of.assign(order, -1);
    num_classes = 0;
    for (int a = 0; a < order; ++a) {
        if (class_of[a] >= 0) continue;
        int cls = num_classes++;
        for (int g = 0; g < order; ++g) class_of[op(op(g, a), inv[g])] = cls;
    }
}

FiniteGroup cyclic_group(int k) {
    FiniteGroup g;
    g.name = "Z" + std::to_string(k);
    g.order = k;
    g.mul.resize(k * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) g.mul[a * k + b] = (a + b) % k;
    g.finish();
    return g;
}

namespace {

// Build a group table from permutation generators acting on points.
FiniteGroup from_permutations(std::string name, std::vector<std::vector<int>> gens) {
    size_t deg = gens[0].size();
    std::vector<std::vector<int>> elems;
    std::vector<int> ident(deg);
    for (size_t i = 0; i < deg; ++i) ident[i] = (int)i;
    elems.push_back(ident);
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            std::vector<int> prod(deg);
            for (size_t p = 0; p < deg; ++p) prod[p] = g[elems[i][p]];
            bool found = false;
            for (const auto& e : elems)
                if (e == prod) {
                    found = true;
                    break;
                }
            if (!found) elems.push_back(prod);
        }
    }
    int n = (int)elems.size();
    FiniteGroup out;
    out.name = std::move(name);
    out.order = n;
    out.mul.resize(n * n);
    auto index_of = [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i)
            if (elems[i] == p) return i;
        throw std::logic_error("permutation closure failure");
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(deg);
            for (size_t p = 0; p < deg; ++p) prod[p] = elems[a][elems[b][p]];
            out.mul[a * n + b] = index_of(prod);
        }
    out.finish();
    return out;
}

}  // namespace

FiniteGroup symmetric3() {
    return from_permutations("S3", {{1, 0, 2}, {1, 2, 0}});
}

FiniteGroup dihedral4() {
    return from_permutations("D4", {{1, 2, 3, 0}, {3, 2, 1, 0}});
}

FiniteGroup quaternion8() {
    // elements 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto negate = [](int a) { return a ^ 1; };
    FiniteGroup g;
    g.name = "Q8";
    g.order = 8;
    g.mul.assign(64, -1);
    // base products on {1, i, j, k} with sign tracking
    // encode: unit u in 0..3 (1,i,j,k), element = 2*u + (sign<0)
    auto unit_mul = [](int a, int b, int& sign) -> int {
        static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{+1, +1, +1, +1},
                                      {+1, -1, +1, -1},
                                      {+1, -1, -1, +1},
                                      {+1, +1, -1, -1}};
        sign = sgn[a][b];
        return tbl[a][b];
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a >> 1, ub = b >> 1;
            int s;
            int uc = unit_mul(ua, ub, s);
            int neg = ((a & 1) ^ (b & 1)) ^ (s < 0 ? 1 : 0);
            g.mul[a * 8 + b] = 2 * uc + neg;
        }
    (void)negate;
    g.finish();
    return g;
}

const std::vector<FiniteGroup>& default_battery() {
    static const std::vector<FiniteGroup> battery = [] {
        std::vector<FiniteGroup> v;
        for (int k = 2; k <= 6; ++k) v.push_back(cyclic_group(k));
        v.push_back(symmetric3());
        v.push_back(dihedral4());
        v.push_back(quaternion8());
        return v;
    }();
    return battery;
}

FiniteGroup parse_group_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    FiniteGroup g;
    int row = 0;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("order=", 0) == 0) {
            g.order = std::stoi(line.substr(6));
            g.mul.assign(g.order * g.order, 0);
            continue;
        }
        if (line.rfind("inv:", 0) == 0) {
            std::istringstream ss(line.substr(4));
            int x;
            while (ss >> x) g.inv.push_back(x);
            continue;
        }
        if (g.order == 0) throw std::runtime_error("group file must start with order=");
        if (row >= g.order) throw std::runtime_error("group file: too many rows");
        std::istringstream ss(line);
        for (int c = 0; c < g.order; ++c)
            if (!(ss >> g.mul[row * g.order + c]))
                throw std::runtime_error("group file: short row " + std::to_string(row));
        ++row;
    }
    if (row != g.order) throw std::runtime_error("group file: missing rows");
    g.finish();
    return g;
}

std::string format_group_table(const FiniteGroup& g) {
    std::ostringstream out;
    out << "order=" << g.order << "\n";
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b) out << (b ? " " : "") << g.op(a, b);
        out << "\n";
    }
    return out.str();
}

int evaluate(const Homomorphism& hom, const Word& w) {
    int acc = 0;
    for (Letter l : w.letters()) {
        int g = letter_gen(l);
        if (g >= (int)hom.images.size()) throw std::runtime_error("evaluate: generator out of range");
        int img = hom.images[g];
        acc = hom.target->op(acc, l > 0 ? img : hom.target->inv[img]);
    }
    return acc;
}

std::vector<Homomorphism> find_homs(const Presentation& p, const FiniteGroup& g, int max_gens) {
    int n = (int)p.gens.size();
    if (n > max_gens) throw std::runtime_error("find_homs: too many generators (" +
                                               std::to_string(n) + ")");
    // relators checkable once all their generators are assigned
    std::vector<int> needed(p.relators.size(), 0);
    for (size_t i = 0; i < p.relators.size(); ++i) needed[i] = p.relators[i].max_gen();

    std::vector<Homomorphism> out;
    Homomorphism cur{&g, std::vector<int>(n, 0)};
    std::vector<int> images(n, 0);

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            out.push_back(Homomorphism{&g, images});
            return;
        }
        for (int img = 0; img < g.order; ++img) {
            images[depth] = img;
            bool ok = true;
            Homomorphism h{&g, images};
            for (size_t i = 0; i < p.relators.size() && ok; ++i)
                if (needed[i] == depth && evaluate(h, p.relators[i]) != 0) ok = false;
            if (ok) self(self, depth + 1);
        }
    };
    if (n == 0) {
        // trivial group maps uniquely
        bool ok = true;
        for (const Word& r : p.relators)
            if (!r.empty()) ok = false;
        if (ok) out.push_back(Homomorphism{&g, {}});
        return out;
    }
    rec(rec, 0);
    (void)cur;
    return out;
}

}  // namespace vck
