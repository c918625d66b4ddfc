#pragma once

#include <vector>

#include "vck/presentation.hpp"
#include "vck/word.hpp"

namespace vck {

// Smith normal form of an integer matrix: returns D with U*A*V = D diagonal,
// each diagonal entry dividing the next. Only V is tracked (needed for
// coordinates in the quotient).
struct SmithResult {
    std::vector<std::vector<long long>> d;  // diagonal matrix, r x g
    std::vector<std::vector<long long>> v;  // g x g unimodular
};

SmithResult smith_normal_form(std::vector<std::vector<long long>> a);

// The abelianization of a presented group: invariant factors d1 | d2 | ...
// (0 for a free factor, torsion factors > 1 first), with a projection of
// words to coordinates in prod Z/d_i x Z^rank.
struct Abelianization {
    std::vector<long long> factors;           // per retained coordinate; 0 = free
    std::vector<std::vector<long long>> v;    // g x g coordinate transform
    std::vector<int> coord;                   // retained coordinate columns
    int num_gens = 0;

    std::vector<long long> project(const Word& w) const;
};

Abelianization abelianize(const Presentation& p);

}  // namespace vck
