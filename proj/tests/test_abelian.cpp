#include <doctest.h>

#include "vck/abelian.hpp"

using namespace vck;

TEST_CASE("cyclic factors") {
    // < a | a^2 >
    Presentation p = make_presentation({"a"}, {Word::gen(0) * Word::gen(0)});
    auto ab = abelianize(p);
    CHECK(ab.factors == std::vector<long long>{2});
    CHECK(ab.project(Word::gen(0)) == std::vector<long long>{1});
    CHECK(ab.project(Word::gen(0) * Word::gen(0)) == std::vector<long long>{0});
}

TEST_CASE("commutators vanish: free abelian rank 3") {
    Word r1 = commutator(Word::gen(0), Word::gen(2));
    Word r2 = commutator(Word::gen(1), Word::gen(2));
    Presentation p = make_presentation({"a", "b", "h"}, {r1, r2});
    auto ab = abelianize(p);
    CHECK(ab.factors == std::vector<long long>{0, 0, 0});
}

TEST_CASE("mixed torsion and free") {
    // < a, b | a^4, a^2 b^2 >  -> Z/2 x Z/4? compute: matrix [[4,0],[2,2]]
    // SNF of [[4,0],[2,2]] = diag(2,4)
    Word r1 = Word::gen(0) * Word::gen(0) * Word::gen(0) * Word::gen(0);
    Word r2 = Word::gen(0) * Word::gen(0) * Word::gen(1) * Word::gen(1);
    Presentation p = make_presentation({"a", "b"}, {r1, r2});
    auto ab = abelianize(p);
    CHECK(ab.factors == std::vector<long long>{2, 4});
}

TEST_CASE("projection is a homomorphism mod factors") {
    Word r1 = Word::gen(0) * Word::gen(0) * Word::gen(0);
    Presentation p = make_presentation({"a", "b"}, {r1});
    auto ab = abelianize(p);
    REQUIRE(ab.factors.size() == 2);
    CHECK(ab.factors[0] == 3);
    CHECK(ab.factors[1] == 0);
    auto x = ab.project(Word::gen(0) * Word::gen(1));
    auto y = ab.project(Word::gen(1) * Word::gen(0));
    CHECK(x == y);
    // relator projects to zero
    CHECK(ab.project(r1) == std::vector<long long>{0, 0});
}
