#include <doctest.h>

#include <random>

#include "vck/word.hpp"

using namespace vck;

namespace {

Word random_word(std::mt19937& rng, int gens, int len) {
    std::vector<Letter> v;
    for (int i = 0; i < len; ++i) {
        int g = (int)(rng() % gens);
        v.push_back(rng() % 2 ? pos_letter(g) : neg_letter(g));
    }
    return Word(std::move(v));
}

}  // namespace

TEST_CASE("free reduction") {
    Word a = Word::gen(0), b = Word::gen(1);
    CHECK((a * a.inverse()).empty());
    CHECK(a * b * b.inverse() * a == a * a);
    Word hchc = Word::gen(2) * Word::gen(1) * Word::gen_inv(2) * Word::gen_inv(1);
    CHECK(reduce(hchc) == hchc);  // already reduced
}

TEST_CASE("reduce is idempotent and kills w w^-1") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 3, (int)(rng() % 12));
        Word r = reduce(w);
        CHECK(reduce(r) == r);
        CHECK((r * r.inverse()).empty());
    }
}

TEST_CASE("cyclic reduction") {
    Word a = Word::gen(0), b = Word::gen(1);
    CHECK(cyclic_reduce(a * b * a.inverse()) == b);
    CHECK(cyclic_reduce(Word()).empty());
    // rotations share a canonical form
    Word ab = a * b, ba = b * a;
    CHECK(min_rotation(cyclic_reduce(ab)) == min_rotation(cyclic_reduce(ba)));
}

TEST_CASE("relator canonical identifies inverse and rotation") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Word w = reduce(random_word(rng, 3, 8));
        CHECK(relator_canonical(w) == relator_canonical(w.inverse()));
        if (!w.empty()) {
            std::vector<Letter> v = w.letters();
            std::rotate(v.begin(), v.begin() + (rng() % v.size()), v.end());
            CHECK(relator_canonical(w) == relator_canonical(cyclic_reduce(Word(v))));
        }
    }
}

TEST_CASE("substitute rewrites both signs") {
    Word w = Word::gen(0) * Word::gen_inv(1) * Word::gen(0);
    Word image = Word::gen(2) * Word::gen(3);
    Word got = w.substitute(1, image);
    Word expect = Word::gen(0) * Word::gen_inv(3) * Word::gen_inv(2) * Word::gen(0);
    CHECK(got == expect);
}
