#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vck/cocycle.hpp"
#include "vck/coloring.hpp"
#include "vck/diagram.hpp"

namespace vck {

// One Boltzmann factor with provenance: f(x,y)^(+-1) at a classical
// under-passage, g(x,y) at a virtual passage.
struct WeightFactor {
    bool is_g = false;
    Color x = 0, y = 0;
    bool inverted = false;
    int pos = 0;  // passage index within the component
};

// Factors in traversal order for each component (classical weights only at
// under-passages, one virtual weight at every virtual passage).
std::vector<std::vector<WeightFactor>> weight_factors(const LinkDiagram& d,
                                                      const VirtualPair& vp,
                                                      const Coloring& c);

// Word-valued products over the universal pair's simplified generators.
struct WordInvariant {
    const UniversalPair* up = nullptr;
    std::vector<Coloring> cols;
    std::vector<std::vector<Word>> products;    // per coloring, per component
    std::vector<std::vector<Word>> class_reps;  // cyclically reduced, minimal rotation
};

WordInvariant universal_invariant(const LinkDiagram& d, const UniversalPair& up);
std::vector<Word> universal_weight_product(const LinkDiagram& d, const UniversalPair& up,
                                           const Coloring& c);

// Element-valued products for a finite cocycle pair.
struct FiniteInvariant {
    const FiniteGroup* target = nullptr;
    std::vector<Coloring> cols;
    std::vector<std::vector<int>> products;
    std::vector<std::vector<int>> class_ids;  // conjugacy classes of the products
};

FiniteInvariant finite_invariant(const LinkDiagram& d, const FiniteCocyclePair& cp);
std::vector<int> finite_weight_product(const LinkDiagram& d, const FiniteCocyclePair& cp,
                                       const Coloring& c);

// Canonical multiset of per-coloring tuples: each tuple's entries are class
// representatives; the multiset is sorted. Tuples are kept in component
// order; the unordered comparison used against published tables treats each
// tuple as a multiset too.
std::vector<std::vector<Word>> word_class_multiset(const WordInvariant& inv,
                                                   bool unordered_tuples = false);
std::vector<std::vector<int>> finite_class_multiset(const FiniteInvariant& inv,
                                                    bool unordered_tuples = false);

// Abelianized invariant: per coloring, per component, exponent vector of the
// product in the abelianization of the universal group; canonical multiset.
std::vector<std::vector<std::vector<long long>>> abelian_multiset(
    const WordInvariant& inv, const Abelianization& ab, bool unordered_tuples = false);

// State sum over an abelian target: sum over colorings of the one-factor-per
// -crossing product; returns element -> multiplicity.
std::map<int, long long> state_sum(const LinkDiagram& d, const VirtualPair& vp,
                                   const FiniteGroup& target, const std::vector<int>& f,
                                   const std::vector<int>& g);

// Separation verdict for two diagrams under a virtual pair and battery.
struct SeparationReport {
    bool distinguished = false;
    std::string witness;  // which comparison separated them
};

SeparationReport separate(const LinkDiagram& d1, const LinkDiagram& d2, const VirtualPair& vp,
                          const std::vector<FiniteGroup>& battery);

// Generalized linking data of a 2-component diagram: the classical linking
// numbers recovered from the two-color flip/flip invariant, the virtual
// h-exponent witnessing virtuality, and the antiflip c-exponent (absent when
// the diagram has no antiflip coloring with distinct base colors).
struct LinkingNumbers {
    long long lk12 = 0;
    long long lk21 = 0;
    long long h_exp = 0;
    std::optional<long long> self_c;
};

LinkingNumbers linking_numbers(const LinkDiagram& d);

}  // namespace vck
