#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vck/abelian.hpp"
#include "vck/algebra.hpp"
#include "vck/finite_group.hpp"
#include "vck/presentation.hpp"
#include "vck/word.hpp"

namespace vck {

// A cocycle pair with values in a finite group: two n x n tables of elements.
struct FiniteCocyclePair {
    VirtualPair vp;
    const FiniteGroup* target = nullptr;
    std::vector<int> f;  // n x n, row-major
    std::vector<int> g;

    int fv(int x, int y) const { return f[x * vp.n() + y]; }
    int gv(int x, int y) const { return g[x * vp.n() + y]; }
};

struct AxiomViolation {
    std::string axiom;       // "f1", ..., "m3"
    std::vector<int> where;  // witness (x[,y[,z]]), 0-based colors
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

// Full scan of the thirteen axiom families f1-f3, g1-g5, m1-m3.
AxiomReport check_pair(const FiniteCocyclePair& cp);

// The universal coefficient group of a virtual pair: generators (x,y)_f and
// (x,y)_g with the axiom instances as relators, simplified.
struct UniversalPair {
    VirtualPair vp;
    Presentation full;        // 2 n^2 generators, raw relators
    Presentation simplified;  // with aliases back to the full generators
    // word of original generator (x,y)_f / (x,y)_g over the simplified gens:
    std::vector<Word> pi_f;  // n x n, row-major
    std::vector<Word> pi_g;

    int n() const { return vp.n(); }
    const Word& pf(int x, int y) const { return pi_f[x * n() + y]; }
    const Word& pg(int x, int y) const { return pi_g[x * n() + y]; }
};

UniversalPair universal_presentation(const VirtualPair& vp, int budget = 200000);

// Specialize the universal pair along a homomorphism of its simplified
// presentation into a finite group. The result always passes check_pair.
FiniteCocyclePair specialize(const UniversalPair& up, const Homomorphism& hom);

// Axiom-instance verification for the word-valued universal pair itself:
// exact when the simplified presentation is free (syntactic equality after
// alias rewriting); otherwise each instance is checked in every battery
// quotient and the report is flagged battery_verified.
struct WordPairReport {
    bool ok = true;
    bool battery_verified = false;  // semantic check only (non-free presentation)
    std::vector<std::string> failures;
};
WordPairReport check_universal_pair(const UniversalPair& up,
                                    const std::vector<FiniteGroup>& battery);

// Cohomologous transform: f_l(x,y) = l(x) f(x,y) l(S2(x,y))^-1,
// g_l(x,y) = l(x) g(x,y) l(b2(x,y))^-1, plus the per-condition report.
struct LambdaReport {
    bool f2_condition = false;      // l(y) = l(S1(x,y)) for all x,y
    bool f3_condition = false;      // l(x) = l(s_S(x))
    bool g1_condition = false;      // l(x) = l(s_beta(x))
    bool beta1_condition = false;   // l(y) = l(beta1(x,y)) for all x,y
    bool beta2_condition = false;   // l(x) = l(beta2(x,y)) for all x,y
    bool commute_condition = false; // l(x) commutes with g(x,y) for all x,y
    bool cohomologous = false;      // all side conditions of the definition hold
    AxiomReport transformed_report;
};

std::pair<FiniteCocyclePair, LambdaReport> lambda_transform(const FiniteCocyclePair& cp,
                                                            const std::vector<int>& lambda);

// State-sum conditions over an abelian target: ss-f1, ss-f2, ss-g1, ss-g2,
// ss-g3, ss-m.
AxiomReport check_state_sum_pair(const VirtualPair& vp, const FiniteGroup& target,
                                 const std::vector<int>& f, const std::vector<int>& g);

// Cocycle-pair file: solution block, "target: <file>" line, f table, blank
// line, g table (entries are element indices for group-table targets or
// words for presentation targets).
struct CocycleFile {
    VirtualPair vp;
    std::optional<FiniteGroup> group_target;
    std::optional<Presentation> word_target;
    std::vector<int> f_elems, g_elems;   // finite target
    std::vector<Word> f_words, g_words;  // word target
};
CocycleFile parse_cocycle_file(const std::string& text,
                               const std::string& target_text);

}  // namespace vck
