#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vck/word.hpp"

namespace vck {

using Color = uint8_t;

// An n x n table encoding a map X x X -> X x X on X = {0..n-1}:
// t[x][y] = (out1, out2) = (sigma^1(x,y), sigma^2(x,y)).
struct SolutionTable {
    int n = 0;
    std::vector<std::pair<Color, Color>> t;  // row-major, index x*n+y

    SolutionTable() = default;
    SolutionTable(int n_) : n(n_), t(n_ * n_) {}

    std::pair<Color, Color> at(int x, int y) const { return t[x * n + y]; }
    void set(int x, int y, int z, int w) { t[x * n + y] = {(Color)z, (Color)w}; }
    int out1(int x, int y) const { return t[x * n + y].first; }
    int out2(int x, int y) const { return t[x * n + y].second; }

    bool operator==(const SolutionTable& o) const { return n == o.n && t == o.t; }
    bool operator<(const SolutionTable& o) const { return t < o.t; }

    // Relabel colors by the permutation phi: (phi x phi) o S o (phi^-1 x phi^-1).
    SolutionTable relabel(const std::vector<int>& phi) const;
};

struct TableError {
    std::string message;
    explicit operator bool() const { return !message.empty(); }
};

// The induced map X^2 -> X^2 is a bijection.
bool check_bijective(const SolutionTable& s, std::string* witness = nullptr);

// Yang-Baxter equation on all n^3 triples (plus bijectivity).
bool check_yb(const SolutionTable& s, std::string* witness = nullptr);

// Left invertibility: for fixed x, y -> out1(x,y) is a bijection.
// Right invertibility: for fixed y, x -> out2(x,y) is a bijection.
bool check_left_invertible(const SolutionTable& s, std::string* witness = nullptr);
bool check_right_invertible(const SolutionTable& s, std::string* witness = nullptr);

struct Biquandle {
    SolutionTable table;
    std::vector<Color> s;  // the unique fixed-partner map: sigma(x, s(x)) = (x, s(x))

    int n() const { return table.n; }
    int out1(int x, int y) const { return table.out1(x, y); }
    int out2(int x, int y) const { return table.out2(x, y); }
};

// Validates all birack/biquandle axioms and computes the s-map; throws
// std::runtime_error with a witness description on failure.
Biquandle as_biquandle(const SolutionTable& s);
std::optional<Biquandle> try_biquandle(const SolutionTable& s);

struct VirtualPair {
    Biquandle S;
    Biquandle beta;

    int n() const { return S.n(); }
};

// beta is involutive and the mixed relation
// (1 x b)(S x 1)(1 x b) = (b x 1)(1 x S)(b x 1) holds on all triples.
bool check_virtual_pair(const Biquandle& S, const Biquandle& beta,
                        std::string* witness = nullptr);
bool check_mixed_relation(const SolutionTable& S, const SolutionTable& beta,
                          std::string* witness = nullptr);
bool check_involutive(const SolutionTable& beta, std::string* witness = nullptr);

VirtualPair make_virtual_pair(const SolutionTable& S, const SolutionTable& beta);

// All permutations a with S(a x, a y) = (a x a) S(x,y), as image vectors.
std::vector<std::vector<int>> automorphisms(const Biquandle& S);
bool is_automorphism(const SolutionTable& S, const std::vector<int>& a);

// beta(x,y) = (a^-1(y), a(x)) for an automorphism a of S.
SolutionTable beta_from_aut(const Biquandle& S, const std::vector<int>& a);

struct Partition {
    std::vector<int> class_of;  // color -> class index, indices 0..k-1 all used
    int num_classes = 0;
};

// Finest partition with x ~ out2(x,y) and y ~ out1(x,y) for both S and beta.
Partition connected_components(const VirtualPair& vp);
// Same relations for a single solution table.
Partition connected_components(const SolutionTable& s);

// Named constructors: flip, antiflip, dihedral, z4 (and z4-beta), kishino4
// (the 4-element table used for the K3 coloring example), pair248-s /
// pair248-beta, selflink-beta.
SolutionTable make_named(const std::string& name, int n);

// Named virtual pairs: "flip2-flip2", "antiflip2-flip2", "z4",
// "dih3-id" / "dih3-s23" / "dih3-c123", "kishino4-flip", "pair248",
// "selflink-z2".
VirtualPair make_named_pair(const std::string& name);
std::vector<std::string> named_pair_list();

// Quandle solution S(x,y) = (y, x |> y) from right-translation permutations.
SolutionTable quandle_solution(const std::vector<std::vector<int>>& right_translation);

}  // namespace vck
