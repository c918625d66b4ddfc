#include <doctest.h>

#include <stdexcept>

#include "vck/algebra.hpp"
#include "vck/solution_io.hpp"

using namespace vck;

TEST_CASE("flip satisfies YB; constant map does not") {
    CHECK(check_yb(make_named("flip", 2)));
    CHECK(check_yb(make_named("flip", 4)));
    SolutionTable bad(2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) bad.set(x, y, x, x);
    CHECK(!check_yb(bad));  // not bijective
}

TEST_CASE("z4 example is a virtual pair") {
    SolutionTable s = make_named("z4", 4);
    CHECK(check_yb(s));
    Biquandle S = as_biquandle(s);
    // fixed partner of x is -x mod 4
    CHECK(S.s == std::vector<Color>{0, 3, 2, 1});
    Biquandle beta = as_biquandle(make_named("z4-beta", 4));
    CHECK(check_virtual_pair(S, beta));
}

TEST_CASE("antiflip s-map shifts by one") {
    Biquandle b = as_biquandle(make_named("antiflip", 2));
    CHECK(b.s == std::vector<Color>{1, 0});
}

TEST_CASE("flip s-map is the identity") {
    Biquandle b = as_biquandle(make_named("flip", 2));
    CHECK(b.s == std::vector<Color>{0, 1});
}

TEST_CASE("virtual pair examples") {
    Biquandle flip2 = as_biquandle(make_named("flip", 2));
    CHECK(check_virtual_pair(flip2, flip2));
    // beta(x,y) = (y+1, x-1) mod 3 is involutive; the 27-triple scan decides
    Biquandle flip3 = as_biquandle(make_named("flip", 3));
    SolutionTable b3(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) b3.set(x, y, (y + 1) % 3, (x + 2) % 3);
    CHECK(check_involutive(b3));
    Biquandle beta3 = as_biquandle(b3);
    CHECK(check_virtual_pair(flip3, beta3));
}

TEST_CASE("beta_from_aut") {
    Biquandle dih = as_biquandle(make_named("dihedral", 3));
    SUBCASE("identity gives flip") {
        SolutionTable beta = beta_from_aut(dih, {0, 1, 2});
        CHECK(beta == make_named("flip", 3));
    }
    SUBCASE("3-cycle") {
        SolutionTable beta = beta_from_aut(dih, {1, 2, 0});
        Biquandle b = as_biquandle(beta);
        CHECK(check_virtual_pair(dih, b));
    }
    SUBCASE("transposition on flip") {
        Biquandle flip2 = as_biquandle(make_named("flip", 2));
        SolutionTable beta = beta_from_aut(flip2, {1, 0});
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                CHECK(beta.out1(x, y) == 1 - y);
                CHECK(beta.out2(x, y) == 1 - x);
            }
    }
    SUBCASE("non-automorphism is rejected") {
        SolutionTable z4 = make_named("z4", 4);
        Biquandle S = as_biquandle(z4);
        CHECK(!is_automorphism(z4, {1, 0, 2, 3}));
        CHECK_THROWS(beta_from_aut(S, {1, 0, 2, 3}));
    }
}

TEST_CASE("automorphism groups") {
    CHECK(automorphisms(as_biquandle(make_named("dihedral", 3))).size() == 6);
    CHECK(automorphisms(as_biquandle(make_named("flip", 2))).size() == 2);
    CHECK(automorphisms(as_biquandle(make_named("flip", 4))).size() == 24);
}

TEST_CASE("automorphisms closed under composition and inverse") {
    for (const char* name : {"dihedral", "flip"}) {
        Biquandle S = as_biquandle(make_named(name, 3));
        auto auts = automorphisms(S);
        auto member = [&](const std::vector<int>& p) {
            return std::find(auts.begin(), auts.end(), p) != auts.end();
        };
        for (const auto& a : auts) {
            std::vector<int> inv(a.size());
            for (size_t i = 0; i < a.size(); ++i) inv[a[i]] = (int)i;
            CHECK(member(inv));
            for (const auto& b : auts) {
                std::vector<int> ab(a.size());
                for (size_t i = 0; i < a.size(); ++i) ab[i] = a[b[i]];
                CHECK(member(ab));
            }
        }
    }
}

TEST_CASE("connected components") {
    auto classes = [](const VirtualPair& vp) { return connected_components(vp).num_classes; };
    CHECK(classes(make_named_pair("flip2-flip2")) == 2);
    CHECK(classes(make_virtual_pair(make_named("antiflip", 2), make_named("flip", 2))) == 1);
    // the z4 pair: strand relations link x ~ x+2 and y ~ -y only
    CHECK(classes(make_named_pair("z4")) == 2);
    // a pair with connected S is connected
    Biquandle dih = as_biquandle(make_named("dihedral", 3));
    CHECK(connected_components(dih.table).num_classes == 1);
    for (const auto& a : automorphisms(dih)) {
        VirtualPair vp = make_virtual_pair(dih.table, beta_from_aut(dih, a));
        CHECK(classes(vp) == 1);
    }
}

TEST_CASE("beta_from_aut always yields virtual pairs (named solutions n<=4)") {
    for (auto [name, n] : std::vector<std::pair<const char*, int>>{
             {"flip", 2}, {"flip", 3}, {"flip", 4}, {"antiflip", 2},
             {"dihedral", 3}, {"dihedral", 4}, {"z4", 4}, {"kishino4", 4}}) {
        Biquandle S = as_biquandle(make_named(name, n));
        for (const auto& a : automorphisms(S)) {
            Biquandle beta = as_biquandle(beta_from_aut(S, a));
            CHECK(check_virtual_pair(S, beta));
        }
    }
}

TEST_CASE("s-map uniqueness holds for accepted biquandles") {
    for (const char* name : {"flip2-flip2", "z4", "pair248", "kishino4-flip"}) {
        VirtualPair vp = make_named_pair(name);
        for (const Biquandle* b : {&vp.S, &vp.beta}) {
            int n = b->n();
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    bool fixed = b->out1(x, y) == x && b->out2(x, y) == y;
                    CHECK(fixed == (y == b->s[x]));
                }
        }
    }
}

TEST_CASE("malformed table errors name the cell") {
    std::string text = "n=2 base=0\n0,0 1,9\n1,1 0,1\n";
    bool threw = false;
    try {
        parse_solution_file(text);
    } catch (const std::runtime_error& e) {
        threw = true;
        CHECK(std::string(e.what()).find("cell (1,2)") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("solution file round trip") {
    SolutionTable s = make_named("z4", 4);
    SolutionTable b = make_named("z4-beta", 4);
    std::string text = format_solution_file(s, &b, 0);
    SolutionFile f = parse_solution_file(text);
    CHECK(f.S == s);
    REQUIRE(f.beta.has_value());
    CHECK(*f.beta == b);
}

TEST_CASE("pair248 is a virtual pair with the expected fixed maps") {
    VirtualPair vp = make_named_pair("pair248");
    CHECK(vp.S.s == std::vector<Color>{1, 0, 3, 2});
    CHECK(vp.beta.s == std::vector<Color>{1, 0, 3, 2});
}
