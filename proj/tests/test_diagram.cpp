#include <doctest.h>

#include <stdexcept>

#include "vck/catalog.hpp"
#include "vck/diagram.hpp"

using namespace vck;

TEST_CASE("parse simple codes") {
    LinkDiagram kink = parse_gauss("O1+ U1+");
    CHECK(kink.num_components() == 1);
    CHECK(kink.comps[0].size() == 2);
    CHECK(!kink.crossings.at(1).is_virtual);
    CHECK(kink.crossings.at(1).sign == +1);

    LinkDiagram v = parse_gauss("V1l ; V1r");
    CHECK(v.num_components() == 2);
    CHECK(v.crossings.at(1).is_virtual);
    CHECK(v.crossings.at(1).left.comp == 0);
    CHECK(v.crossings.at(1).right.comp == 1);

    LinkDiagram two = parse_gauss("U1+ V2r ; O1+ V2l");
    CHECK(two.num_components() == 2);
    CHECK(two.crossings.at(2).left.comp == 1);
    // at a positive crossing the under strand enters on the left
    CHECK(two.crossings.at(1).left.comp == 0);
}

TEST_CASE("negative crossing geometry: over enters left") {
    LinkDiagram d = parse_gauss("U1- O2- ; O1- U2-");
    CHECK(d.crossings.at(1).left.comp == 1);   // the over passage of crossing 1
    CHECK(d.crossings.at(1).right.comp == 0);
    CHECK(d.crossings.at(2).left.comp == 0);
    CHECK(d.crossings.at(2).right.comp == 1);
}

TEST_CASE("pairing violations are rejected") {
    CHECK_THROWS_AS(parse_gauss("O1+ U1-"), std::runtime_error);      // sign mismatch
    CHECK_THROWS_AS(parse_gauss("O1+ O1+"), std::runtime_error);      // two overs
    CHECK_THROWS_AS(parse_gauss("O1+"), std::runtime_error);          // unpaired
    CHECK_THROWS_AS(parse_gauss("V1l V1l"), std::runtime_error);      // two lefts
    CHECK_THROWS_AS(parse_gauss("O1+ V1r"), std::runtime_error);      // mixed kinds
    CHECK_THROWS_AS(parse_gauss("X1+ U1+"), std::runtime_error);      // bad token
}

TEST_CASE("serialize round trip") {
    for (const char* code : {"O1+ U1+", "U1+ V2r ; O1+ V2l", "O1+ U2+ O3+ U1+ O2+ U3+",
                             "U1- O2- ; O1- U2-"}) {
        LinkDiagram d = parse_gauss(code);
        LinkDiagram back = parse_gauss(serialize_gauss(d));
        CHECK(serialize_gauss(back) == serialize_gauss(d));
        CHECK(back.num_components() == d.num_components());
    }
}

TEST_CASE("catalog entries validate") {
    for (const auto& name : catalog_list()) {
        LinkDiagram d = catalog(name);
        for (auto& [id, info] : d.crossings) {
            CHECK(info.left.comp >= 0);
            CHECK(info.right.comp >= 0);
        }
    }
    CHECK(catalog("unknot").comps[0].empty());
    CHECK(catalog("trefoil").comps[0].size() == 6);
    CHECK_THROWS(catalog("no-such-link"));
}

TEST_CASE("insertions produce valid diagrams") {
    LinkDiagram kink = parse_gauss("O1+ U1+");
    LinkDiagram r2 = insert_r2(kink, 0, 0, 0, 1);
    CHECK(r2.comps[0].size() == 6);
    LinkDiagram vr2 = insert_vr2(kink, 0, 1, 0, 0);
    CHECK(vr2.comps[0].size() == 6);
    // inserting into a crossing-free unknot gives a 2-crossing diagram
    LinkDiagram unknot = parse_gauss("");
    CHECK_THROWS(insert_vr2(unknot, 0, 0, 0, 0));  // same arc: rejected
    LinkDiagram two = parse_gauss(";");
    LinkDiagram poked = insert_vr2(two, 0, 0, 1, 0);
    CHECK(poked.comps[0].size() == 2);
    CHECK(poked.comps[1].size() == 2);
}

TEST_CASE("rotation keeps the diagram valid") {
    LinkDiagram tre = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    LinkDiagram rot = tre.rotated(0, 2);
    CHECK(rot.comps[0][0].crossing == 3);
    CHECK(rot.crossings.size() == 3);
}
