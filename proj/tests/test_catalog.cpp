#include <doctest.h>

#include <map>
#include <string>

#include "peelkit/catalog.hpp"
#include "peelkit/graph.hpp"

using namespace peelkit;

TEST_CASE("catalog has 31 solids in three families") {
    std::map<Family, int> by_family;
    for (const SolidRecord& rec : catalog()) ++by_family[rec.family];
    CHECK(catalog().size() == 31);
    CHECK(by_family[Family::Platonic] == 5);
    CHECK(by_family[Family::Archimedean] == 13);
    CHECK(by_family[Family::Catalan] == 13);
}

TEST_CASE("classical counts spot checks") {
    struct Row {
        const char* name;
        int v, e, f;
    };
    for (const Row& r : {Row{"Tetrahedron", 4, 6, 4}, Row{"Cube", 8, 12, 6},
                         Row{"Icosahedron", 12, 30, 20},
                         Row{"Truncated Icosahedron", 60, 90, 32},
                         Row{"Snub Cube", 24, 60, 38},
                         Row{"Snub Dodecahedron", 60, 150, 92},
                         Row{"Rhombic Triacontahedron", 32, 60, 30},
                         Row{"Disdyakis Triacontahedron", 62, 180, 120},
                         Row{"Pentakis Dodecahedron", 32, 90, 60}}) {
        const Polyhedron& p = lookup(r.name).poly;
        CHECK(p.vertex_count() == r.v);
        CHECK(p.edge_count() == r.e);
        CHECK(p.face_count() == r.f);
        CHECK(p.vertex_count() - p.edge_count() + p.face_count() == 2);
    }
}

TEST_CASE("lookup accepts names and bracket indices") {
    CHECK(lookup("cube").name == "Cube");
    CHECK(lookup("TRUNCATED OCTAHEDRON").name == "Truncated Octahedron");
    CHECK(lookup("{5,6,6}").name == "Truncated Icosahedron");
    CHECK(lookup("[3,4,3,4]").name == "Rhombic Dodecahedron");
    CHECK(lookup("{3,3,3,3,5}").name == "Snub Dodecahedron");
    CHECK_THROWS_AS(lookup("hexadodecathing"), UnknownSolidError);
    CHECK_THROWS_AS(lookup("{9,9}"), UnknownSolidError);
}

TEST_CASE("mirrored lookup flips chirality only geometrically") {
    SolidRecord plain = lookup("Snub Cube");
    SolidRecord flipped = lookup("Snub Cube", true);
    CHECK(plain.chiral);
    CHECK(flipped.poly.vertex_count() == plain.poly.vertex_count());
    CHECK(flipped.poly.vertices[0].y() == -plain.poly.vertices[0].y());
}

TEST_CASE("chirality flags") {
    for (const SolidRecord& rec : catalog()) {
        bool expect = rec.name == "Snub Cube" || rec.name == "Snub Dodecahedron" ||
                      rec.name == "Pentagonal Icositetrahedron" ||
                      rec.name == "Pentagonal Hexecontahedron";
        CHECK(rec.chiral == expect);
    }
}

TEST_CASE("dual partners pair Archimedean with Catalan") {
    CHECK(dual_partner_name("Cuboctahedron") == "Rhombic Dodecahedron");
    CHECK(dual_partner_name("Rhombic Dodecahedron") == "Cuboctahedron");
    CHECK(dual_partner_name("Truncated Icosahedron") == "Pentakis Dodecahedron");
    CHECK(lookup("Cuboctahedron").index == "{3,4,3,4}");
    CHECK(lookup("Rhombic Dodecahedron").index == "[3,4,3,4]");
}

TEST_CASE("verify_catalog passes every check") {
    CatalogReport report = verify_catalog();
    CHECK(report.all_pass());
    if (!report.all_pass()) {
        for (const CatalogCheck& c : report.checks)
            if (!c.pass) MESSAGE(c.solid, " / ", c.check, ": ", c.detail);
    }
}

TEST_CASE("OFF round trip preserves the solid") {
    const Polyhedron& p = lookup("Deltoidal Hexecontahedron").poly;
    Polyhedron q = ingest_off(to_off(p));
    REQUIRE(q.vertex_count() == p.vertex_count());
    REQUIRE(q.face_count() == p.face_count());
    for (int i = 0; i < p.vertex_count(); ++i)
        CHECK((q.vertices[i] - p.vertices[i]).norm() < 1e-12);
    for (int f = 0; f < p.face_count(); ++f) CHECK(q.faces[f] == p.faces[f]);
}

TEST_CASE("OFF parser rejects malformed input with line info") {
    CHECK_THROWS_AS(ingest_off(""), std::runtime_error);
    CHECK_THROWS_AS(ingest_off("NOTOFF\n1 1 1\n"), std::runtime_error);
    CHECK_THROWS_AS(ingest_off("OFF\n4 1\n"), std::runtime_error);  // counts line
    CHECK_THROWS_AS(ingest_off("OFF\n1 1 1\n0 0\n1 0\n"), std::runtime_error);
    // face with wrong index count
    CHECK_THROWS_AS(
        ingest_off("OFF\n3 1 3\n0 0 0\n1 0 0\n0 1 0\n3 0 1\n"),
        std::runtime_error);
}

TEST_CASE("JSON round trip keeps full precision") {
    // the text carries round-trip-exact doubles; the only change on re-ingest
    // is build() recentering on the (almost-zero) vertex mean
    const Polyhedron& p = lookup("Pentagonal Hexecontahedron").poly;
    Polyhedron q = ingest_json(to_json(p));
    REQUIRE(q.vertex_count() == p.vertex_count());
    for (int i = 0; i < p.vertex_count(); ++i)
        CHECK((q.vertices[i] - p.vertices[i]).norm() < 1e-15);
    CHECK(q.name == p.name);
}

TEST_CASE("ingested OFF solids build full combinatorics") {
    // a plain tetrahedron written by hand
    const char* off =
        "OFF\n"
        "4 4 6\n"
        "1 1 1\n"
        "1 -1 -1\n"
        "-1 1 -1\n"
        "-1 -1 1\n"
        "3 0 1 2\n"
        "3 0 3 1\n"
        "3 0 2 3\n"
        "3 1 3 2\n";
    Polyhedron p = ingest_off(off);
    CHECK(p.vertex_count() == 4);
    CHECK(p.edge_count() == 6);
    CHECK(p.face_count() == 4);
    for (int f = 0; f < 4; ++f) CHECK(p.face_normal(f).dot(p.centroids[f]) > 0);
}
