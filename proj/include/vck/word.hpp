#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vck {

// A letter is a signed generator reference: +(g+1) for g, -(g+1) for g^-1,
// with generator ids g >= 0. The empty word is the identity.
using Letter = int32_t;

inline Letter pos_letter(int gen) { return gen + 1; }
inline Letter neg_letter(int gen) { return -(gen + 1); }
inline int letter_gen(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int letter_sign(Letter l) { return l > 0 ? +1 : -1; }

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word gen(int g) { return Word({pos_letter(g)}); }
    static Word gen_inv(int g) { return Word({neg_letter(g)}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }

    Word inverse() const;
    Word operator*(const Word& rhs) const;  // concatenate, then freely reduce
    bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
    bool operator<(const Word& rhs) const { return letters_ < rhs.letters_; }

    // Largest generator id that occurs, or -1 for the empty word.
    int max_gen() const;
    // Number of occurrences of generator g (either sign).
    int count_gen(int g) const;

    // Substitute: every occurrence of generator g becomes `image` (inverted for
    // g^-1), all in one pass, then freely reduce.
    Word substitute(int g, const Word& image) const;
    // Apply a generator renumbering; ids mapped to -1 must not occur.
    Word renumber(const std::vector<int>& new_id) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<Letter> letters_;
};

// Free reduction: cancel adjacent g g^-1 pairs.
Word reduce(std::vector<Letter> letters);
inline Word reduce(const Word& w) { return reduce(w.letters()); }

// Cyclically reduced representative (conjugate of w in the free group).
Word cyclic_reduce(const Word& w);

// Canonical form of a cyclic word: lexicographically least rotation.
Word min_rotation(const Word& w);

// Canonical form of a relator: least among rotations of its cyclic reduction
// and rotations of the inverse.
Word relator_canonical(const Word& w);

Word commutator(const Word& a, const Word& b);

}  // namespace vck
