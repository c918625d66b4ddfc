#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vck/word.hpp"

namespace vck {

// A finitely presented group. After tietze_simplify, `gens`/`relators` hold
// the reduced presentation and `aliases[i]` rewrites original generator i as
// a word in the surviving generators.
struct Presentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;

    std::vector<std::string> original_gens;  // empty means == gens
    std::vector<Word> aliases;               // indexed by original generator id

    bool budget_exhausted = false;

    int gen_id(const std::string& name) const;
    int original_id(const std::string& name) const;

    // Rewrite a word over the original generators into the surviving ones.
    Word apply_aliases(const Word& w) const;

    // Canonicalize relators (cyclic reduction, rotation/inversion minimum),
    // drop trivial ones, sort by (length, lex), dedupe.
    void normalize_relators();

    std::string str() const;
};

Presentation make_presentation(std::vector<std::string> gens, std::vector<Word> relators);

// Tietze simplification: repeated generator elimination (via relators
// containing a generator exactly once, shortest defining relator first),
// Dehn-style relator shortening against the other relators, and deletion of
// relators derivable from the rest by a bounded rewriting search. Preserves
// the isomorphism class of the group. `budget` caps the number of rewrite
// events; on exhaustion the best-so-far presentation is returned with
// budget_exhausted set.
Presentation tietze_simplify(const Presentation& p, int budget = 100000);

// True if some generator bijection (allowing generator inversion) carries one
// relator multiset onto the other. Both must already be normalized small
// presentations; intended for <= 5 generators.
bool presentations_match(const Presentation& a, const Presentation& b);

// Weaker but still sound: some renaming (with inversion) makes the two
// relator sets mutually derivable by a bounded rewriting search, so the
// presentations define the same group on identified generators. A negative
// answer only means the bounded search failed.
bool presentations_equivalent(const Presentation& a, const Presentation& b);

// Text format: line "gens: a b h", then one relator per line as
// space-separated letters with optional ^-1 suffix.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

Word parse_word(const std::string& line, const std::vector<std::string>& gens);

}  // namespace vck
