#pragma once

#include <string>
#include <vector>

#include "vck/presentation.hpp"
#include "vck/word.hpp"

namespace vck {

// A finite group given by its multiplication table. Element 0 is the
// identity; conjugacy classes are computed on construction.
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<int> mul;       // order x order, row-major
    std::vector<int> inv;
    std::vector<int> class_of;  // element -> conjugacy class index
    int num_classes = 0;

    int op(int a, int b) const { return mul[a * order + b]; }
    bool is_abelian() const;

    // Validates associativity, identity, inverses; fills inv/class_of.
    void finish();
};

FiniteGroup cyclic_group(int k);
FiniteGroup symmetric3();
FiniteGroup dihedral4();   // order 8
FiniteGroup quaternion8();

// Default battery: Z/2..Z/6, S3, D4, Q8.
const std::vector<FiniteGroup>& default_battery();

// File format: "order=<k>", then k lines of k 0-based entries; optional
// "inv:" line with k entries (derived when absent).
FiniteGroup parse_group_table(const std::string& text);
std::string format_group_table(const FiniteGroup& g);

struct Homomorphism {
    const FiniteGroup* target = nullptr;
    std::vector<int> images;  // generator id -> element
};

int evaluate(const Homomorphism& hom, const Word& w);

// All homomorphisms from the presented group to G, exhaustively over
// generator images with relator pruning. Throws if the presentation has more
// than `max_gens` generators.
std::vector<Homomorphism> find_homs(const Presentation& p, const FiniteGroup& g,
                                    int max_gens = 8);

}  // namespace vck
