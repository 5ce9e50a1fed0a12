#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "peelkit/catalog.hpp"
#include "peelkit/net.hpp"

using namespace peelkit;

namespace {

double shoelace(const std::vector<Vec2>& poly) {
    double a = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % poly.size()];
        a += p.x() * q.y() - q.x() * p.y();
    }
    return a / 2;
}

double face_area(const Polyhedron& p, int f) {
    // fan from the centroid; faces are convex
    double a = 0;
    const Vec3 c = p.centroids[f];
    const auto& cyc = p.faces[f];
    for (size_t i = 0; i < cyc.size(); ++i) {
        Vec3 u = p.vertices[cyc[i]] - c;
        Vec3 v = p.vertices[cyc[(i + 1) % cyc.size()]] - c;
        a += 0.5 * u.cross(v).norm();
    }
    return a;
}

PeelSequence complete_run(const Polyhedron& p, int f1 = 0) {
    for (int f2 : p.neighbors[f1]) {
        PeelSequence seq = peel(p, f1, f2);
        if (seq.outcome == PeelOutcome::Complete) return seq;
    }
    throw std::runtime_error("no complete run from face " + std::to_string(f1));
}

}  // namespace

TEST_CASE("cube net is six isometric squares") {
    const Polyhedron& cube = lookup("Cube").poly;
    PeelSequence seq = complete_run(cube);
    Net net = unfold(cube, seq);
    REQUIRE(net.faces.size() == 6);
    CHECK(net.solid == "Cube");

    double area2 = 0, area3 = 0;
    for (const NetFace& nf : net.faces) {
        REQUIRE(nf.poly.size() == 4);
        CHECK(nf.step == static_cast<int>(&nf - net.faces.data()));
        CHECK(nf.face == seq.order[nf.step]);
        // flattening keeps the first face's viewer-facing orientation
        CHECK(shoelace(nf.poly) < 0);
        area2 += std::abs(shoelace(nf.poly));
        area3 += face_area(cube, nf.face);
    }
    CHECK(area2 == doctest::Approx(area3).epsilon(1e-9));
    CHECK(net.faces.front().hinge == std::pair<int, int>(-1, -1));
    CHECK(net.faces.front().gray == doctest::Approx(0.25));
    CHECK(net.faces.back().gray == doctest::Approx(0.90));
    CHECK(check_overlap(net).empty());
}

TEST_CASE("flattened faces are isometric to the originals") {
    for (const char* name : {"Dodecahedron", "Truncated Icosahedron", "Snub Cube"}) {
        const Polyhedron& p = lookup(name).poly;
        PeelSequence seq = peel(p, 0, p.neighbors[0][0]);  // complete or not
        Net net = unfold(p, seq);
        REQUIRE(net.faces.size() == seq.order.size());
        for (const NetFace& nf : net.faces) {
            const auto& cyc = p.faces[nf.face];
            REQUIRE(nf.poly.size() == cyc.size());
            for (size_t i = 0; i < cyc.size(); ++i)
                for (size_t j = i + 1; j < cyc.size(); ++j) {
                    double d3 = (p.vertices[cyc[i]] - p.vertices[cyc[j]]).norm();
                    double d2 = (nf.poly[i] - nf.poly[j]).norm();
                    CHECK(std::abs(d3 - d2) < 1e-6);
                }
        }
    }
}

TEST_CASE("consecutive net faces share their hinge edge exactly") {
    const Polyhedron& p = lookup("Truncated Icosahedron").poly;
    PeelSequence seq = peel(p, 0, 1);
    REQUIRE(seq.outcome == PeelOutcome::Complete);
    Net net = unfold(p, seq);
    REQUIRE(net.faces.size() == 32);

    auto placed = [&](const NetFace& nf, int vertex_id) {
        const auto& cyc = p.faces[nf.face];
        auto it = std::find(cyc.begin(), cyc.end(), vertex_id);
        REQUIRE(it != cyc.end());
        return nf.poly[it - cyc.begin()];
    };
    for (size_t k = 1; k < net.faces.size(); ++k) {
        auto [a, b] = net.faces[k].hinge;
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        CHECK((placed(net.faces[k], a) - placed(net.faces[k - 1], a)).norm() < 1e-6);
        CHECK((placed(net.faces[k], b) - placed(net.faces[k - 1], b)).norm() < 1e-6);
    }
}

TEST_CASE("single-face net reproduces the face") {
    const Polyhedron& cube = lookup("Cube").poly;
    PeelSequence seq;
    seq.solid = cube.name;
    seq.order = {2};
    seq.rules = {StepRule::Start};
    Net net = unfold(cube, seq);
    REQUIRE(net.faces.size() == 1);
    CHECK(std::abs(std::abs(shoelace(net.faces[0].poly)) - face_area(cube, 2)) < 1e-9);
}

TEST_CASE("overlap pairs are non-consecutive step indices") {
    const Polyhedron& p = lookup("Truncated Icosahedron").poly;
    Net net = unfold(p, peel(p, 0, 1));
    for (auto [i, j] : check_overlap(net)) {
        CHECK(i >= 0);
        CHECK(j >= i + 2);
        CHECK(j < static_cast<int>(net.faces.size()));
    }
}

TEST_CASE("overlap detector flags coincident faces and spares hinge contact") {
    Net net;
    net.solid = "synthetic";
    auto square_at = [](double x, int face, int step) {
        NetFace nf;
        nf.face = face;
        nf.step = step;
        nf.poly = {Vec2(x, 0), Vec2(x + 1, 0), Vec2(x + 1, 1), Vec2(x, 1)};
        return nf;
    };
    net.faces.push_back(square_at(0, 0, 0));
    net.faces.push_back(square_at(1, 1, 1));  // shares an edge with both others
    net.faces.push_back(square_at(0, 2, 2));  // sits exactly on face 0
    auto overlaps = check_overlap(net);
    REQUIRE(overlaps.size() == 1);
    CHECK(overlaps[0] == std::pair<int, int>(0, 2));
}

TEST_CASE("partial unfold flattens a prefix into the pivot plane") {
    const Polyhedron& p = lookup("Truncated Icosahedron").poly;
    PeelSequence seq = peel(p, 0, 1);
    REQUIRE(seq.length() == 32);
    const int i = 18;
    PartialUnfoldState st = partial_unfold(p, seq, i);
    CHECK(st.step == i);

    int unfolded = 0, last = 0, untouched = 0;
    for (UnfoldRole r : st.roles) {
        if (r == UnfoldRole::Unfolded) ++unfolded;
        if (r == UnfoldRole::LastSelected) ++last;
        if (r == UnfoldRole::NotUnfolded) ++untouched;
    }
    CHECK(unfolded == i - 1);
    CHECK(last == 1);
    CHECK(untouched == 32 - i);
    CHECK(st.roles[seq.order[i - 1]] == UnfoldRole::LastSelected);

    // the moved prefix lies in the plane of the pivot face seq.order[i]
    const Vec3 n = p.face_normal(seq.order[i]);
    const double offset = n.dot(p.centroids[seq.order[i]]);
    for (int k = 0; k < i; ++k)
        for (const Vec3& v : st.face_coords[seq.order[k]])
            CHECK(std::abs(n.dot(v) - offset) < 1e-9);

    // everything else still has its original coordinates, bit for bit
    std::vector<char> moved(p.face_count(), 0);
    for (int k = 0; k < i; ++k) moved[seq.order[k]] = 1;
    for (int f = 0; f < p.face_count(); ++f) {
        if (moved[f]) continue;
        for (size_t j = 0; j < p.faces[f].size(); ++j)
            CHECK(st.face_coords[f][j] == p.vertices[p.faces[f][j]]);
    }
}

TEST_CASE("partial unfold at the first step moves only the start face") {
    const Polyhedron& cube = lookup("Cube").poly;
    PeelSequence seq = complete_run(cube);
    PartialUnfoldState st = partial_unfold(cube, seq, 1);
    CHECK(st.roles[seq.order[0]] == UnfoldRole::LastSelected);
    for (int f = 0; f < 6; ++f)
        if (f != seq.order[0]) CHECK(st.roles[f] == UnfoldRole::NotUnfolded);
    const Vec3 n = cube.face_normal(seq.order[1]);
    const double offset = n.dot(cube.centroids[seq.order[1]]);
    for (const Vec3& v : st.face_coords[seq.order[0]])
        CHECK(std::abs(n.dot(v) - offset) < 1e-9);
}

TEST_CASE("partial unfold at the last step matches the flat net") {
    const Polyhedron& p = lookup("Dodecahedron").poly;
    PeelSequence seq = complete_run(p);
    const int i = seq.length() - 1;
    PartialUnfoldState st = partial_unfold(p, seq, i);
    Net net = unfold(p, seq);

    // same strip up to a rigid motion: compare pairwise distances between
    // corresponding placed vertices (prefix faces only; the pivot face of the
    // state has no net counterpart in the same pose)
    auto coord3 = [&](int step, int j) { return st.face_coords[seq.order[step]][j]; };
    auto coord2 = [&](int step, int j) { return net.faces[step].poly[j]; };
    for (int s = 0; s < i; s += 3)
        for (int t = s; t < i; t += 3) {
            double d3 = (coord3(s, 0) - coord3(t, 1)).norm();
            Vec2 a = coord2(s, 0), b = coord2(t, 1);
            CHECK(std::abs(d3 - (a - b).norm()) < 1e-6);
        }
}

TEST_CASE("partial unfold rejects out-of-range steps") {
    const Polyhedron& cube = lookup("Cube").poly;
    PeelSequence seq = complete_run(cube);
    CHECK_THROWS_AS(partial_unfold(cube, seq, 0), std::out_of_range);
    CHECK_THROWS_AS(partial_unfold(cube, seq, seq.length()), std::out_of_range);
}

TEST_CASE("net SVG carries one polygon per face with data attributes") {
    const Polyhedron& p = lookup("Truncated Icosahedron").poly;
    Net net = unfold(p, peel(p, 0, 1));
    std::string svg = to_svg(net);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("viewBox=\"") != std::string::npos);
    size_t polys = 0;
    for (size_t pos = svg.find("<polygon"); pos != std::string::npos;
         pos = svg.find("<polygon", pos + 1))
        ++polys;
    CHECK(polys == 32);
    CHECK(svg.find("data-face=\"0\"") != std::string::npos);
    CHECK(svg.find("data-step=\"31\"") != std::string::npos);
    CHECK(to_svg(net) == svg);  // byte stable
}

TEST_CASE("intermediate-state OBJ triangulates every face with role comments") {
    const Polyhedron& p = lookup("Truncated Icosahedron").poly;
    PeelSequence seq = peel(p, 0, 1);
    std::string obj = to_obj(p, partial_unfold(p, seq, 18));

    int expect_v = 0, expect_f = 0;
    for (int f = 0; f < p.face_count(); ++f) {
        expect_v += p.gon(f) + 1;  // cycle plus centroid
        expect_f += p.gon(f);
    }
    int nv = 0, nf = 0;
    size_t pos = 0;
    for (std::string::size_type e; pos < obj.size(); pos = e + 1) {
        e = obj.find('\n', pos);
        if (e == std::string::npos) break;
        if (obj.compare(pos, 2, "v ") == 0) ++nv;
        if (obj.compare(pos, 2, "f ") == 0) ++nf;
    }
    CHECK(nv == expect_v);
    CHECK(nf == expect_f);
    CHECK(obj.find("# face 0 role ") != std::string::npos);
    CHECK(obj.find("role unfolded") != std::string::npos);
    CHECK(obj.find("role last-selected") != std::string::npos);
    CHECK(obj.find("role not-unfolded") != std::string::npos);
}
