#include <doctest.h>

#include <algorithm>
#include <random>

#include "vck/finite_group.hpp"

using namespace vck;

TEST_CASE("battery groups are valid") {
    for (const auto& g : default_battery()) {
        CHECK(g.order > 1);
        CHECK(g.num_classes >= 1);
    }
}

TEST_CASE("Q8 structure") {
    FiniteGroup q8 = quaternion8();
    CHECK(q8.order == 8);
    CHECK(q8.num_classes == 5);
    CHECK(!q8.is_abelian());
    // i * j = k, j * i = -k  (elements: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k)
    CHECK(q8.op(2, 4) == 6);
    CHECK(q8.op(4, 2) == 7);
    CHECK(q8.op(2, 2) == 1);
    // [i, j] = i j i^-1 j^-1 = -1
    int c = q8.op(q8.op(q8.op(2, 4), q8.inv[2]), q8.inv[4]);
    CHECK(c == 1);
}

TEST_CASE("find_homs on Z2") {
    Presentation p = make_presentation({"a"}, {Word::gen(0) * Word::gen(0)});
    FiniteGroup z2 = cyclic_group(2);
    auto homs = find_homs(p, z2);
    CHECK(homs.size() == 2);  // a -> 0 and a -> 1
    for (const auto& h : homs)
        for (const Word& r : p.relators) CHECK(evaluate(h, r) == 0);
}

TEST_CASE("trivial hom always exists") {
    Word r1 = commutator(Word::gen(0), Word::gen(2));
    Presentation p = make_presentation({"a", "b", "h"}, {r1});
    for (const auto& g : default_battery()) {
        auto homs = find_homs(p, g);
        bool trivial = false;
        for (const auto& h : homs) {
            bool all_id = true;
            for (int img : h.images) all_id &= (img == 0);
            trivial |= all_id;
        }
        CHECK(trivial);
    }
}

TEST_CASE("group table file round trip") {
    FiniteGroup s3 = symmetric3();
    FiniteGroup back = parse_group_table(format_group_table(s3));
    CHECK(back.order == s3.order);
    CHECK(back.mul == s3.mul);
    CHECK(back.num_classes == 3);
}

TEST_CASE("conjugacy classes are conjugation invariant") {
    FiniteGroup d4 = dihedral4();
    for (int a = 0; a < d4.order; ++a)
        for (int g = 0; g < d4.order; ++g) {
            int conj = d4.op(d4.op(g, a), d4.inv[g]);
            CHECK(d4.class_of[a] == d4.class_of[conj]);
        }
}

TEST_CASE("conjugacy classes are rotation invariant under homs") {
    std::mt19937 rng(12);
    Presentation p = make_presentation({"a", "b"}, {});
    for (const FiniteGroup& g : default_battery()) {
        auto homs = find_homs(p, g);
        for (size_t hi = 0; hi < homs.size(); hi += std::max<size_t>(1, homs.size() / 6)) {
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<Letter> letters;
                for (int i = 0; i < 6; ++i) {
                    int gen = (int)(rng() % 2);
                    letters.push_back(rng() % 2 ? pos_letter(gen) : neg_letter(gen));
                }
                Word w = reduce(letters);
                if (w.empty()) continue;
                std::vector<Letter> rot = w.letters();
                std::rotate(rot.begin(), rot.begin() + rng() % rot.size(), rot.end());
                Word wr(rot);
                CHECK(g.class_of[evaluate(homs[hi], w)] ==
                      g.class_of[evaluate(homs[hi], wr)]);
            }
        }
    }
}
