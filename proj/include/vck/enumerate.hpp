#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vck/algebra.hpp"

namespace vck {

using CanonicalKey = std::vector<uint8_t>;

// Lexicographically least serialization of the table(s) over all relabelings.
CanonicalKey canonical_key(const SolutionTable& s);
CanonicalKey canonical_key(const SolutionTable& s, const SolutionTable& beta);
CanonicalKey canonical_key(const VirtualPair& vp);

std::string key_to_hex(const CanonicalKey& k);

// Witnessing bijection phi with (phi x phi) S = S' (phi x phi) and same for
// beta, or nullopt.
std::optional<std::vector<int>> are_isomorphic(const VirtualPair& p, const VirtualPair& q);

// All biquandles on n elements (2 <= n <= 5), by backtracking with
// invertibility constraints. The raw variant returns every labeled table;
// the plain variant dedupes canonically.
std::vector<SolutionTable> enumerate_biquandles(int n, int jobs = 0);
std::vector<SolutionTable> enumerate_biquandles_raw(int n, int jobs = 0);

// All involutive non-degenerate solutions up to isomorphism (2 <= n <= 7;
// n >= 6 is long-running). With flip_compatible, keeps only those beta for
// which (flip, beta) is compatible.
std::vector<SolutionTable> enumerate_involutive(int n, bool flip_compatible = false,
                                                int jobs = 0);
std::vector<SolutionTable> enumerate_involutive_raw(int n, int jobs = 0);

enum class PairMode { All, AutInduced };

// An isomorphism class of compatible pairs: S and beta are biquandles on the
// same set and the mixed relation holds. beta need not be involutive here;
// the census tables this reproduces count all mixed-compatible biquandle
// pairs, and the involutive ones are exactly the virtual pairs in the strict
// sense. The flag records which.
struct PairClass {
    SolutionTable S;
    SolutionTable beta;
    CanonicalKey key;
    bool beta_involutive = false;
};

// Compatible pairs up to simultaneous relabeling. Mode AutInduced restricts
// to beta = i_a with a in Aut(X,S), one per conjugacy class of Aut(X,S).
// 2 <= n <= 4; n = 5 only when allow_long.
std::vector<PairClass> enumerate_virtual_pairs(int n, PairMode mode,
                                               bool allow_long = false, int jobs = 0);

struct CensusRow {
    int n = 0;
    long long all_pairs = 0;
    long long aut_induced_pairs = 0;
    long long connected_pairs = 0;
    long long connected_with_both_disconnected = 0;
};

CensusRow census(int n, bool allow_long = false, int jobs = 0);

// Reference values from the previously published table, for diffing; the
// census command flags rather than hides any disagreement.
std::optional<CensusRow> reference_census(int n);

// Connectivity of a pair of tables (strand relations of both).
Partition pair_components(const SolutionTable& S, const SolutionTable& beta);

// Keys-file persistence: one hex key per line, sorted.
void write_keys_file(const std::string& path, const std::vector<CanonicalKey>& keys);
std::vector<CanonicalKey> read_keys_file(const std::string& path);

// Conjugacy-class representatives of a permutation group given by its
// element list (closed under products).
std::vector<std::vector<int>> conjugacy_class_reps(const std::vector<std::vector<int>>& group);

}  // namespace vck
