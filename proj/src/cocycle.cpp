#include "vck/cocycle.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "vck/solution_io.hpp"

namespace vck {

namespace {

// One multiplicative factor of an axiom side: a table entry f(x,y) or g(x,y).
struct Factor {
    bool is_g;
    int x, y;
};

struct AxiomInstance {
    const char* axiom;
    std::vector<int> where;
    std::vector<Factor> lhs, rhs;
};

// Enumerate all axiom instances in the fixed order f1, f2, f3, g1, g2, g3,
// g4, g5, m1, m2, m3, triples lexicographic.
template <typename Visit>
void for_each_axiom_instance(const VirtualPair& vp, Visit&& visit) {
    const int n = vp.n();
    const Biquandle& S = vp.S;
    const Biquandle& B = vp.beta;
    auto S1 = [&](int x, int y) { return S.out1(x, y); };
    auto S2 = [&](int x, int y) { return S.out2(x, y); };
    auto b1 = [&](int x, int y) { return B.out1(x, y); };
    auto b2 = [&](int x, int y) { return B.out2(x, y); };
    auto F = [](int x, int y) { return Factor{false, x, y}; };
    auto G = [](int x, int y) { return Factor{true, x, y}; };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                visit(AxiomInstance{"f1",
                                    {x, y, z},
                                    {F(x, y), F(S2(x, y), z)},
                                    {F(x, S1(y, z)), F(S2(x, S1(y, z)), S2(y, z))}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                visit(AxiomInstance{"f2",
                                    {x, y, z},
                                    {F(S1(x, y), S1(S2(x, y), z))},
                                    {F(y, z)}});
    for (int x = 0; x < n; ++x) visit(AxiomInstance{"f3", {x}, {F(x, S.s[x])}, {}});
    for (int x = 0; x < n; ++x) visit(AxiomInstance{"g1", {x}, {G(x, B.s[x])}, {}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            visit(AxiomInstance{"g2", {x, y}, {G(x, y), G(b1(x, y), b2(x, y))}, {}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                visit(AxiomInstance{"g3",
                                    {x, y, z},
                                    {G(x, y), G(b2(x, y), z)},
                                    {G(x, b1(y, z)), G(b2(x, b1(y, z)), b2(y, z))}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                visit(AxiomInstance{"g4",
                                    {x, y, z},
                                    {G(y, z), G(b2(x, b1(y, z)), b2(y, z))},
                                    {G(x, y), G(b1(x, y), b1(b2(x, y), z))}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                visit(AxiomInstance{"g5",
                                    {x, y, z},
                                    {G(y, z), G(x, b1(y, z))},
                                    {G(b2(x, y), z), G(b1(x, y), b1(b2(x, y), z))}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                visit(AxiomInstance{"m1",
                                    {x, y, z},
                                    {G(y, z)},
                                    {G(S1(x, y), b1(S2(x, y), z))}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                visit(AxiomInstance{"m2",
                                    {x, y, z},
                                    {G(y, z), G(x, b1(y, z))},
                                    {G(S2(x, y), z), G(S1(x, y), b1(S2(x, y), z))}});
    // m3 pairs the classical weight of the sliding strand with the virtual
    // weights on either side of the move. The published statement of this
    // axiom disagrees with the published example tables and universal-group
    // computations; the form below is the one those computations satisfy.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                visit(AxiomInstance{"m3",
                                    {x, y, z},
                                    {G(x, b1(y, z)), F(b2(x, b1(y, z)), z)},
                                    {F(x, b1(S2(x, y), z)), G(S2(x, y), z)}});
}

}  // namespace

std::string AxiomReport::str() const {
    if (violations.empty()) return "ok";
    std::ostringstream out;
    for (const auto& v : violations) {
        out << v.axiom << " fails at (";
        for (size_t i = 0; i < v.where.size(); ++i) out << (i ? "," : "") << v.where[i] + 1;
        out << ")\n";
    }
    return out.str();
}

AxiomReport check_pair(const FiniteCocyclePair& cp) {
    AxiomReport report;
    const FiniteGroup& G = *cp.target;
    auto eval = [&](const std::vector<Factor>& side) {
        int acc = 0;
        for (const Factor& f : side) acc = G.op(acc, f.is_g ? cp.gv(f.x, f.y) : cp.fv(f.x, f.y));
        return acc;
    };
    for_each_axiom_instance(cp.vp, [&](const AxiomInstance& inst) {
        if (eval(inst.lhs) != eval(inst.rhs))
            report.violations.push_back({inst.axiom, inst.where});
    });
    std::sort(report.violations.begin(), report.violations.end(),
              [](const AxiomViolation& a, const AxiomViolation& b) {
                  if (std::string(a.axiom) != b.axiom) return std::string(a.axiom) < b.axiom;
                  return a.where < b.where;
              });
    return report;
}

UniversalPair universal_presentation(const VirtualPair& vp, int budget) {
    const int n = vp.n();
    UniversalPair up;
    up.vp = vp;

    std::vector<std::string> gens;
    gens.reserve(2 * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            gens.push_back("f" + std::to_string(x + 1) + std::to_string(y + 1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            gens.push_back("g" + std::to_string(x + 1) + std::to_string(y + 1));

    auto gen_id = [n](const Factor& f) { return (f.is_g ? n * n : 0) + f.x * n + f.y; };
    std::vector<Word> relators;
    for_each_axiom_instance(vp, [&](const AxiomInstance& inst) {
        std::vector<Letter> letters;
        for (const Factor& f : inst.lhs) letters.push_back(pos_letter(gen_id(f)));
        for (auto it = inst.rhs.rbegin(); it != inst.rhs.rend(); ++it)
            letters.push_back(neg_letter(gen_id(*it)));
        Word r = reduce(std::move(letters));
        if (!r.empty()) relators.push_back(std::move(r));
    });

    up.full = make_presentation(gens, relators);
    up.simplified = tietze_simplify(up.full, budget);

    up.pi_f.resize(n * n);
    up.pi_g.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            up.pi_f[x * n + y] = up.simplified.apply_aliases(Word::gen(x * n + y));
            up.pi_g[x * n + y] = up.simplified.apply_aliases(Word::gen(n * n + x * n + y));
        }
    return up;
}

FiniteCocyclePair specialize(const UniversalPair& up, const Homomorphism& hom) {
    if ((int)hom.images.size() != (int)up.simplified.gens.size())
        throw std::runtime_error("specialize: homomorphism does not match the presentation");
    FiniteCocyclePair cp;
    cp.vp = up.vp;
    cp.target = hom.target;
    const int n = up.n();
    cp.f.resize(n * n);
    cp.g.resize(n * n);
    for (int i = 0; i < n * n; ++i) {
        cp.f[i] = evaluate(hom, up.pi_f[i]);
        cp.g[i] = evaluate(hom, up.pi_g[i]);
    }
    return cp;
}

WordPairReport check_universal_pair(const UniversalPair& up,
                                    const std::vector<FiniteGroup>& battery) {
    WordPairReport report;
    const int n = up.n();
    auto side_word = [&](const std::vector<Factor>& side) {
        Word w;
        for (const Factor& f : side) {
            int id = (f.is_g ? n * n : 0) + f.x * n + f.y;
            w = w * up.simplified.apply_aliases(Word::gen(id));
        }
        return w;
    };

    std::vector<std::pair<std::string, Word>> instance_words;
    for_each_axiom_instance(up.vp, [&](const AxiomInstance& inst) {
        Word w = side_word(inst.lhs) * side_word(inst.rhs).inverse();
        if (!w.empty()) {
            std::string tag = inst.axiom;
            tag += " at (";
            for (size_t i = 0; i < inst.where.size(); ++i)
                tag += (i ? "," : "") + std::to_string(inst.where[i] + 1);
            tag += ")";
            instance_words.push_back({tag, std::move(w)});
        }
    });

    if (up.simplified.relators.empty()) {
        // free target: syntactic verification is exact
        for (auto& [tag, w] : instance_words) {
            report.ok = false;
            report.failures.push_back(tag + ": nontrivial word " + w.str(up.simplified.gens));
        }
        return report;
    }

    report.battery_verified = true;
    for (const FiniteGroup& G : battery) {
        std::vector<Homomorphism> homs;
        try {
            homs = find_homs(up.simplified, G);
        } catch (const std::runtime_error&) {
            continue;  // generator guard exceeded; other groups still checked
        }
        for (const Homomorphism& h : homs)
            for (auto& [tag, w] : instance_words)
                if (evaluate(h, w) != 0) {
                    report.ok = false;
                    report.failures.push_back(tag + ": nontrivial in " + G.name);
                }
    }
    return report;
}

std::pair<FiniteCocyclePair, LambdaReport> lambda_transform(const FiniteCocyclePair& cp,
                                                            const std::vector<int>& lambda) {
    const int n = cp.vp.n();
    if ((int)lambda.size() != n) throw std::runtime_error("lambda_transform: bad lambda size");
    const FiniteGroup& G = *cp.target;
    const Biquandle& S = cp.vp.S;
    const Biquandle& B = cp.vp.beta;

    FiniteCocyclePair out = cp;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            out.f[x * n + y] = G.op(G.op(lambda[x], cp.fv(x, y)), G.inv[lambda[S.out2(x, y)]]);
            out.g[x * n + y] = G.op(G.op(lambda[x], cp.gv(x, y)), G.inv[lambda[B.out2(x, y)]]);
        }

    LambdaReport rep;
    rep.f2_condition = rep.f3_condition = rep.g1_condition = true;
    rep.beta1_condition = rep.beta2_condition = rep.commute_condition = true;
    for (int x = 0; x < n; ++x) {
        if (lambda[x] != lambda[S.s[x]]) rep.f3_condition = false;
        if (lambda[x] != lambda[B.s[x]]) rep.g1_condition = false;
        for (int y = 0; y < n; ++y) {
            if (lambda[y] != lambda[S.out1(x, y)]) rep.f2_condition = false;
            if (lambda[y] != lambda[B.out1(x, y)]) rep.beta1_condition = false;
            if (lambda[x] != lambda[B.out2(x, y)]) rep.beta2_condition = false;
            if (G.op(lambda[x], cp.gv(x, y)) != G.op(cp.gv(x, y), lambda[x]))
                rep.commute_condition = false;
        }
    }
    rep.cohomologous = rep.f3_condition && rep.f2_condition && rep.beta1_condition &&
                       rep.commute_condition;
    rep.transformed_report = check_pair(out);
    return {std::move(out), std::move(rep)};
}

AxiomReport check_state_sum_pair(const VirtualPair& vp, const FiniteGroup& target,
                                 const std::vector<int>& f, const std::vector<int>& g) {
    if (!target.is_abelian())
        throw std::runtime_error("state-sum conditions need an abelian target");
    const int n = vp.n();
    const Biquandle& S = vp.S;
    const Biquandle& B = vp.beta;
    auto fv = [&](int x, int y) { return f[x * n + y]; };
    auto gv = [&](int x, int y) { return g[x * n + y]; };
    auto S1 = [&](int x, int y) { return S.out1(x, y); };
    auto S2 = [&](int x, int y) { return S.out2(x, y); };
    auto b1 = [&](int x, int y) { return B.out1(x, y); };
    auto b2 = [&](int x, int y) { return B.out2(x, y); };
    auto mul = [&](std::initializer_list<int> xs) {
        int acc = 0;
        for (int v : xs) acc = target.op(acc, v);
        return acc;
    };

    AxiomReport rep;
    auto add = [&](const char* ax, std::vector<int> w) {
        rep.violations.push_back({ax, std::move(w)});
    };
    for (int x = 0; x < n; ++x) {
        if (fv(x, S.s[x]) != 0) add("ss-f1", {x});
        if (gv(x, B.s[x]) != 0) add("ss-g1", {x});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (mul({gv(x, y), gv(b1(x, y), b2(x, y))}) != 0) add("ss-g2", {x, y});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (mul({fv(x, y), fv(S2(x, y), z), fv(S1(x, y), S1(S2(x, y), z))}) !=
                    mul({fv(x, S1(y, z)), fv(S2(x, S1(y, z)), S2(y, z)), fv(y, z)}))
                    add("ss-f2", {x, y, z});
                if (mul({gv(x, y), gv(b2(x, y), z), gv(b1(x, y), b1(b2(x, y), z))}) !=
                    mul({gv(x, b1(y, z)), gv(b2(x, b1(y, z)), b2(y, z)), gv(y, z)}))
                    add("ss-g3", {x, y, z});
                if (mul({gv(y, z), gv(x, b1(y, z)), fv(b2(x, b1(y, z)), z)}) !=
                    mul({gv(S1(x, y), b1(S2(x, y), z)), gv(S2(x, y), z),
                         fv(x, b1(S2(x, y), z))}))
                    add("ss-m", {x, y, z});
            }
    return rep;
}

CocycleFile parse_cocycle_file(const std::string& text, const std::string& target_text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> solution_lines, f_lines, g_lines;
    int stage = 0;  // 0 = solution blocks, 1 = f block, 2 = g block
    std::string target_ref;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (line.rfind("target:", 0) == 0) {
            target_ref = line.substr(7);
            stage = 1;
            continue;
        }
        if (stage == 0) {
            solution_lines.push_back(line);
        } else if (line.empty()) {
            if (stage == 1 && !f_lines.empty()) stage = 2;
        } else {
            (stage == 1 ? f_lines : g_lines).push_back(line);
        }
    }
    if (target_ref.empty()) throw std::runtime_error("cocycle file: missing target line");

    std::string sol_text;
    for (const auto& l : solution_lines) sol_text += l + "\n";
    SolutionFile sf = parse_solution_file(sol_text);
    if (!sf.beta) throw std::runtime_error("cocycle file: needs both S and beta blocks");

    CocycleFile out;
    out.vp = make_virtual_pair(sf.S, *sf.beta);
    const int n = out.vp.n();
    if ((int)f_lines.size() != n || (int)g_lines.size() != n)
        throw std::runtime_error("cocycle file: f/g blocks must each have n rows");

    bool group_target = target_text.rfind("order=", 0) == 0;
    if (group_target)
        out.group_target = parse_group_table(target_text);
    else
        out.word_target = parse_presentation(target_text);

    auto parse_block = [&](const std::vector<std::string>& lines, std::vector<int>& elems,
                           std::vector<Word>& words) {
        for (int x = 0; x < n; ++x) {
            std::istringstream ss(lines[x]);
            std::string tok;
            for (int y = 0; y < n; ++y) {
                if (!(ss >> tok))
                    throw std::runtime_error("cocycle file: short row " + std::to_string(x + 1));
                if (group_target) {
                    int v = std::stoi(tok);
                    if (v < 0 || v >= out.group_target->order)
                        throw std::runtime_error("cocycle file: element out of range");
                    elems.push_back(v);
                } else {
                    std::string expanded;
                    for (char c : tok) expanded += (c == '*') ? ' ' : c;
                    words.push_back(parse_word(expanded, out.word_target->gens));
                }
            }
        }
    };
    parse_block(f_lines, out.f_elems, out.f_words);
    parse_block(g_lines, out.g_elems, out.g_words);
    return out;
}

}  // namespace vck
