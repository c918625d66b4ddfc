#include "vck/invariant.hpp"

#include <algorithm>
#include <stdexcept>

namespace vck {

std::vector<std::vector<WeightFactor>> weight_factors(const LinkDiagram& d,
                                                      const VirtualPair& vp,
                                                      const Coloring& c) {
    CrossingRules rules(vp);
    std::vector<std::vector<WeightFactor>> out(d.num_components());
    for (int comp = 0; comp < d.num_components(); ++comp) {
        for (int pos = 0; pos < (int)d.comps[comp].size(); ++pos) {
            const Passage& pa = d.comps[comp][pos];
            const CrossingInfo& info = d.crossings.at(pa.crossing);
            Color in_l = c.colors[info.left.comp][info.left.pos];
            Color in_r = c.colors[info.right.comp][info.right.pos];
            WeightFactor w;
            w.pos = pos;
            if (pa.kind == PassageKind::Virtual) {
                w.is_g = true;
                w.x = in_l;
                w.y = in_r;
                out[comp].push_back(w);
            } else if (pa.kind == PassageKind::Under) {
                if (info.sign > 0) {
                    w.x = in_l;
                    w.y = in_r;
                } else {
                    auto [x, y] = rules.s_inv(in_l, in_r);
                    w.x = x;
                    w.y = y;
                    w.inverted = true;
                }
                out[comp].push_back(w);
            }
        }
    }
    return out;
}

namespace {

Word word_of_factors(const std::vector<WeightFactor>& factors, const UniversalPair& up) {
    Word w;
    for (const WeightFactor& f : factors) {
        const Word& cell = f.is_g ? up.pg(f.x, f.y) : up.pf(f.x, f.y);
        w = w * (f.inverted ? cell.inverse() : cell);
    }
    return w;
}

int elem_of_factors(const std::vector<WeightFactor>& factors, const FiniteCocyclePair& cp) {
    const FiniteGroup& G = *cp.target;
    int acc = 0;
    for (const WeightFactor& f : factors) {
        int v = f.is_g ? cp.gv(f.x, f.y) : cp.fv(f.x, f.y);
        acc = G.op(acc, f.inverted ? G.inv[v] : v);
    }
    return acc;
}

Word word_class_rep(const Word& w) { return min_rotation(cyclic_reduce(w)); }

}  // namespace

std::vector<Word> universal_weight_product(const LinkDiagram& d, const UniversalPair& up,
                                           const Coloring& c) {
    auto factors = weight_factors(d, up.vp, c);
    std::vector<Word> out;
    out.reserve(factors.size());
    for (auto& fs : factors) out.push_back(word_of_factors(fs, up));
    return out;
}

WordInvariant universal_invariant(const LinkDiagram& d, const UniversalPair& up) {
    WordInvariant inv;
    inv.up = &up;
    inv.cols = colorings(d, up.vp);
    for (const Coloring& c : inv.cols) {
        inv.products.push_back(universal_weight_product(d, up, c));
        std::vector<Word> reps;
        for (const Word& w : inv.products.back()) reps.push_back(word_class_rep(w));
        inv.class_reps.push_back(std::move(reps));
    }
    return inv;
}

std::vector<int> finite_weight_product(const LinkDiagram& d, const FiniteCocyclePair& cp,
                                       const Coloring& c) {
    auto factors = weight_factors(d, cp.vp, c);
    std::vector<int> out;
    out.reserve(factors.size());
    for (auto& fs : factors) out.push_back(elem_of_factors(fs, cp));
    return out;
}

FiniteInvariant finite_invariant(const LinkDiagram& d, const FiniteCocyclePair& cp) {
    FiniteInvariant inv;
    inv.target = cp.target;
    inv.cols = colorings(d, cp.vp);
    for (const Coloring& c : inv.cols) {
        inv.products.push_back(finite_weight_product(d, cp, c));
        std::vector<int> cls;
        for (int v : inv.products.back()) cls.push_back(cp.target->class_of[v]);
        inv.class_ids.push_back(std::move(cls));
    }
    return inv;
}

std::vector<std::vector<Word>> word_class_multiset(const WordInvariant& inv,
                                                   bool unordered_tuples) {
    std::vector<std::vector<Word>> out = inv.class_reps;
    if (unordered_tuples)
        for (auto& tuple : out) std::sort(tuple.begin(), tuple.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> finite_class_multiset(const FiniteInvariant& inv,
                                                    bool unordered_tuples) {
    std::vector<std::vector<int>> out = inv.class_ids;
    if (unordered_tuples)
        for (auto& tuple : out) std::sort(tuple.begin(), tuple.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::vector<long long>>> abelian_multiset(const WordInvariant& inv,
                                                                  const Abelianization& ab,
                                                                  bool unordered_tuples) {
    std::vector<std::vector<std::vector<long long>>> out;
    for (const auto& tuple : inv.products) {
        std::vector<std::vector<long long>> row;
        for (const Word& w : tuple) row.push_back(ab.project(w));
        if (unordered_tuples) std::sort(row.begin(), row.end());
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, long long> state_sum(const LinkDiagram& d, const VirtualPair& vp,
                                   const FiniteGroup& target, const std::vector<int>& f,
                                   const std::vector<int>& g) {
    AxiomReport rep = check_state_sum_pair(vp, target, f, g);
    if (!rep.ok())
        throw std::runtime_error("state sum: coefficient pair violates conditions: " +
                                 rep.str());
    CrossingRules rules(vp);
    const int n = vp.n();
    std::map<int, long long> out;
    for (const Coloring& c : colorings(d, vp)) {
        int acc = 0;
        for (auto& [id, info] : d.crossings) {
            Color in_l = c.colors[info.left.comp][info.left.pos];
            Color in_r = c.colors[info.right.comp][info.right.pos];
            int v;
            if (info.is_virtual) {
                v = g[in_l * n + in_r];
            } else if (info.sign > 0) {
                v = f[in_l * n + in_r];
            } else {
                auto [x, y] = rules.s_inv(in_l, in_r);
                v = target.inv[f[x * n + y]];
            }
            acc = target.op(acc, v);
        }
        out[acc]++;
    }
    return out;
}

SeparationReport separate(const LinkDiagram& d1, const LinkDiagram& d2, const VirtualPair& vp,
                          const std::vector<FiniteGroup>& battery) {
    SeparationReport rep;
    long long c1 = count_colorings(d1, vp), c2 = count_colorings(d2, vp);
    if (c1 != c2) {
        rep.distinguished = true;
        rep.witness = "coloring counts " + std::to_string(c1) + " vs " + std::to_string(c2);
        return rep;
    }
    UniversalPair up = universal_presentation(vp);
    WordInvariant i1 = universal_invariant(d1, up);
    WordInvariant i2 = universal_invariant(d2, up);
    Abelianization ab = abelianize(up.simplified);
    if (abelian_multiset(i1, ab, true) != abelian_multiset(i2, ab, true)) {
        rep.distinguished = true;
        rep.witness = "abelianized invariant multisets differ";
        return rep;
    }
    for (const FiniteGroup& G : battery) {
        std::vector<Homomorphism> homs;
        try {
            homs = find_homs(up.simplified, G);
        } catch (const std::runtime_error&) {
            continue;
        }
        for (size_t hi = 0; hi < homs.size(); ++hi) {
            FiniteCocyclePair cp = specialize(up, homs[hi]);
            FiniteInvariant f1 = finite_invariant(d1, cp);
            FiniteInvariant f2 = finite_invariant(d2, cp);
            if (finite_class_multiset(f1, true) != finite_class_multiset(f2, true)) {
                rep.distinguished = true;
                rep.witness = "class tuples differ in " + G.name + " (hom " +
                              std::to_string(hi) + ")";
                return rep;
            }
        }
    }
    rep.witness = "not distinguished by counts, abelianization or battery classes";
    return rep;
}

LinkingNumbers linking_numbers(const LinkDiagram& d) {
    if (d.num_components() != 2)
        throw std::runtime_error("linking numbers need exactly 2 components");
    LinkingNumbers out;

    VirtualPair ff = make_named_pair("flip2-flip2");
    UniversalPair up = universal_presentation(ff);
    // the coloring with the first component colored 0 and the second 1
    Coloring two;
    two.colors.resize(2);
    two.colors[0].assign(d.arc_count(0), 0);
    two.colors[1].assign(d.arc_count(1), 1);
    if (!coloring_valid(d, ff, two))
        throw std::logic_error("two-coloring unexpectedly invalid for flip/flip");
    auto prods = universal_weight_product(d, up, two);

    auto exponent_of = [&](const Word& w, const Word& gen) {
        if (gen.size() != 1) throw std::logic_error("generator alias is not a single letter");
        int g = letter_gen(gen.letters()[0]);
        long long e = 0;
        for (Letter l : w.letters())
            if (letter_gen(l) == g) e += letter_sign(l);
        return letter_sign(gen.letters()[0]) > 0 ? e : -e;
    };
    out.lk21 = exponent_of(prods[0], up.pf(0, 1));
    out.lk12 = exponent_of(prods[1], up.pf(1, 0));
    out.h_exp = exponent_of(prods[1], up.pg(0, 1));

    VirtualPair af = make_named_pair("antiflip2-flip2");
    UniversalPair aup = universal_presentation(af);
    for (const Coloring& c : colorings(d, af)) {
        if (c.colors[0][0] == 0 && c.colors[1][0] == 1) {
            auto aprods = universal_weight_product(d, aup, c);
            out.self_c = exponent_of(aprods[1], aup.pf(0, 0));
            break;
        }
    }
    return out;
}

}  // namespace vck
