#include <doctest.h>

#include "vck/abelian.hpp"
#include "vck/finite_group.hpp"
#include "vck/presentation.hpp"

using namespace vck;

TEST_CASE("trivial relators collapse the presentation") {
    Presentation p = make_presentation({"a", "b"}, {Word::gen(0), Word::gen(1)});
    Presentation q = tietze_simplify(p);
    CHECK(q.gens.empty());
    CHECK(q.relators.empty());
    CHECK(q.apply_aliases(Word::gen(0)).empty());
}

TEST_CASE("single-occurrence elimination records aliases") {
    // < a, b | a b^-1 >  ==  Z with a = b
    Presentation p = make_presentation({"a", "b"}, {Word::gen(0) * Word::gen_inv(1)});
    Presentation q = tietze_simplify(p);
    CHECK(q.gens.size() == 1);
    CHECK(q.relators.empty());
    CHECK(q.apply_aliases(Word::gen(0)) == q.apply_aliases(Word::gen(1)));
}

TEST_CASE("free product with commuting factor") {
    // < a, b, h | [a,h], [b,h] > stays 3 generators, 2 commutators
    Word r1 = commutator(Word::gen(0), Word::gen(2));
    Word r2 = commutator(Word::gen(1), Word::gen(2));
    Presentation p = make_presentation({"a", "b", "h"}, {r1, r2});
    Presentation q = tietze_simplify(p);
    CHECK(q.gens.size() == 3);
    CHECK(q.relators.size() == 2);
}

TEST_CASE("presentations_match finds renamings") {
    Word r1 = commutator(Word::gen(0), Word::gen(2));
    Word r2 = commutator(Word::gen(1), Word::gen(2));
    Presentation p = make_presentation({"a", "b", "h"}, {r1, r2});
    // same group with h in first position
    Word s1 = commutator(Word::gen(1), Word::gen(0));
    Word s2 = commutator(Word::gen(2), Word::gen(0));
    Presentation q = make_presentation({"h", "a", "b"}, {s1, s2});
    p.normalize_relators();
    q.normalize_relators();
    CHECK(presentations_match(p, q));

    Presentation r = make_presentation({"x", "y", "z"}, {Word::gen(0) * Word::gen(0)});
    r.normalize_relators();
    CHECK(!presentations_match(p, r));
}

TEST_CASE("tietze preserves abelianization") {
    // < a, b, c | a^2 b^-1, [b, c] >
    Word r1 = Word::gen(0) * Word::gen(0) * Word::gen_inv(1);
    Word r2 = commutator(Word::gen(1), Word::gen(2));
    Presentation p = make_presentation({"a", "b", "c"}, {r1, r2});
    auto before = abelianize(p).factors;
    Presentation q = tietze_simplify(p);
    auto after = abelianize(q).factors;
    CHECK(before == after);
}

TEST_CASE("presentation text round trip") {
    Presentation p = parse_presentation("gens: a b h\na h a^-1 h^-1\nb h b^-1 h^-1\n");
    CHECK(p.gens.size() == 3);
    CHECK(p.relators.size() == 2);
    Presentation q = parse_presentation(format_presentation(p));
    CHECK(q.gens == p.gens);
    CHECK(q.relators == p.relators);
}

TEST_CASE("budget exhaustion flags the result") {
    std::vector<Word> rels;
    for (int i = 0; i < 6; ++i) rels.push_back(Word::gen(i) * Word::gen_inv((i + 1) % 7));
    Presentation p = make_presentation({"a", "b", "c", "d", "e", "f", "g"}, rels);
    Presentation q = tietze_simplify(p, 2);
    CHECK(q.budget_exhausted);
}

TEST_CASE("aliases compose correctly through homomorphisms") {
    // simplify a presentation with redundant generators and verify that
    // evaluating an original generator through its alias matches evaluating
    // the corresponding image directly in every finite quotient
    Word r1 = Word::gen(0) * Word::gen(1) * Word::gen_inv(2);           // c = a b
    Word r2 = commutator(Word::gen(0), Word::gen(1));                   // [a,b]
    Word r3 = Word::gen(0) * Word::gen(0) * Word::gen(0);               // a^3
    Presentation p = make_presentation({"a", "b", "c"}, {r1, r2, r3});
    Presentation q = tietze_simplify(p);
    REQUIRE(q.aliases.size() == 3);
    for (const FiniteGroup& g : default_battery()) {
        for (const auto& hom : find_homs(q, g)) {
            // the alias of c must equal alias(a) * alias(b)
            int ca = evaluate(hom, q.apply_aliases(Word::gen(0)));
            int cb = evaluate(hom, q.apply_aliases(Word::gen(1)));
            int cc = evaluate(hom, q.apply_aliases(Word::gen(2)));
            CHECK(g.op(ca, cb) == cc);
        }
    }
}
