#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "peelkit/catalog.hpp"
#include "peelkit/classify.hpp"
#include "peelkit/graph.hpp"

using namespace peelkit;

namespace {

SkeletonGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SkeletonGraph g;
    g.n = n;
    g.adj.resize(n);
    for (auto [a, b] : edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

bool valid_ham_path(const SkeletonGraph& g, const std::vector<int>& path) {
    if (static_cast<int>(path.size()) != g.n) return false;
    std::set<int> seen(path.begin(), path.end());
    if (static_cast<int>(seen.size()) != g.n) return false;
    for (size_t i = 1; i < path.size(); ++i)
        if (!g.has_edge(path[i - 1], path[i])) return false;
    return true;
}

SkeletonGraph relabel(const SkeletonGraph& g, std::mt19937& rng) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (v < w) edges.emplace_back(perm[v], perm[w]);
    return from_edges(g.n, edges);
}

}  // namespace

TEST_CASE("skeleton of the cube") {
    SkeletonGraph g = skeleton(lookup("Cube").poly);
    CHECK(g.n == 8);
    CHECK(g.edge_count() == 12);
    for (const auto& a : g.adj) CHECK(a.size() == 3);
    CHECK(g.has_edge(0, g.adj[0][0]));
    CHECK_FALSE(g.has_edge(0, 0));
}

TEST_CASE("face graph equals the dual's skeleton") {
    for (const char* name : {"Cube", "Truncated Tetrahedron", "Rhombic Dodecahedron"}) {
        const Polyhedron& p = lookup(name).poly;
        SkeletonGraph a = face_graph(p);
        SkeletonGraph b = skeleton(dual(p));
        REQUIRE(a.n == b.n);
        CHECK(a.adj == b.adj);
    }
}

TEST_CASE("face graph identities") {
    // tetrahedron: every face touches every other
    SkeletonGraph k4 = face_graph(lookup("Tetrahedron").poly);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(k4.has_edge(i, j) == (i != j));

    CHECK(isomorphic(face_graph(lookup("Cube").poly),
                     skeleton(lookup("Octahedron").poly)));
    CHECK(isomorphic(face_graph(lookup("Cuboctahedron").poly),
                     skeleton(lookup("Rhombic Dodecahedron").poly)));
}

TEST_CASE("dual swaps counts and pairs the families") {
    const Polyhedron& cube = lookup("Cube").poly;
    Polyhedron d = dual(cube);
    CHECK(d.vertex_count() == cube.face_count());
    CHECK(d.face_count() == cube.vertex_count());
    CHECK(d.edge_count() == cube.edge_count());

    CHECK(isomorphic(skeleton(dual(lookup("Truncated Icosahedron").poly)),
                     skeleton(lookup("Pentakis Dodecahedron").poly)));
    CHECK(isomorphic(skeleton(dual(lookup("Snub Cube").poly)),
                     skeleton(lookup("Pentagonal Icositetrahedron").poly)));
}

TEST_CASE("double dual restores the solid combinatorially") {
    for (const SolidRecord& rec : catalog()) {
        const Polyhedron& p = rec.poly;
        Polyhedron dd = dual(dual(p));
        REQUIRE(dd.vertex_count() == p.vertex_count());
        REQUIRE(dd.face_count() == p.face_count());
        CHECK(dd.edges == p.edges);  // indices survive both hops
        for (int f = 0; f < p.face_count(); ++f) {
            std::vector<int> a = p.faces[f], b = dd.faces[f];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }
}

TEST_CASE("bipartition") {
    CHECK_FALSE(bipartition(skeleton(lookup("Octahedron").poly)).has_value());  // triangles
    auto cube_parts = bipartition(skeleton(lookup("Cube").poly));
    REQUIRE(cube_parts.has_value());
    CHECK(cube_parts->first.size() == 4);
    CHECK(cube_parts->second.size() == 4);
    auto rd_parts = bipartition(skeleton(lookup("Rhombic Dodecahedron").poly));
    REQUIRE(rd_parts.has_value());
    size_t lo = std::min(rd_parts->first.size(), rd_parts->second.size());
    size_t hi = std::max(rd_parts->first.size(), rd_parts->second.size());
    CHECK(lo == 6);
    CHECK(hi == 8);
}

TEST_CASE("hamiltonian path on hand-built graphs") {
    // path on three vertices
    HamiltonianReport p3 = hamiltonian_path(from_edges(3, {{0, 1}, {1, 2}}));
    CHECK(p3.status == HamiltonianStatus::PathFound);
    CHECK(valid_ham_path(from_edges(3, {{0, 1}, {1, 2}}), p3.witness));

    HamiltonianReport k4 =
        hamiltonian_path(from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(k4.status == HamiltonianStatus::PathFound);

    // star: parts of size 1 and 3, so parity alone settles it
    HamiltonianReport star = hamiltonian_path(from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.status == HamiltonianStatus::NoPath);
    CHECK(star.proof == NoPathProof::BipartiteParity);

    // triangle with a pendant on every corner: three degree-1 vertices but
    // only two path endpoints, and the odd cycle blocks the parity shortcut
    HamiltonianReport net = hamiltonian_path(
        from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}}));
    CHECK(net.status == HamiltonianStatus::NoPath);
    CHECK(net.proof == NoPathProof::Exhaustive);
}

TEST_CASE("hamiltonian path on catalog skeletons") {
    SUBCASE("cube") {
        SkeletonGraph g = skeleton(lookup("Cube").poly);
        HamiltonianReport r = hamiltonian_path(g);
        REQUIRE(r.status == HamiltonianStatus::PathFound);
        CHECK(valid_ham_path(g, r.witness));
    }
    SUBCASE("truncated icosahedron") {
        SkeletonGraph g = skeleton(lookup("Truncated Icosahedron").poly);
        HamiltonianReport r = hamiltonian_path(g);
        REQUIRE(r.status == HamiltonianStatus::PathFound);
        CHECK(valid_ham_path(g, r.witness));
    }
    SUBCASE("rhombic dodecahedron fails by parity") {
        HamiltonianReport r =
            hamiltonian_path(skeleton(lookup("Rhombic Dodecahedron").poly));
        CHECK(r.status == HamiltonianStatus::NoPath);
        CHECK(r.proof == NoPathProof::BipartiteParity);
    }
    SUBCASE("triakis octahedron fails only by exhaustion") {
        HamiltonianReport r = hamiltonian_path(skeleton(lookup("Triakis Octahedron").poly));
        CHECK(r.status == HamiltonianStatus::NoPath);
        CHECK(r.proof == NoPathProof::Exhaustive);
    }
}

TEST_CASE("budget exhaustion reports a timeout, never a proof") {
    SkeletonGraph g = skeleton(lookup("Truncated Dodecahedron").poly);
    HamiltonianReport r = hamiltonian_path(g, 1);
    CHECK(r.status == HamiltonianStatus::TimedOut);
    CHECK(r.elapsed_steps >= 1);
}

TEST_CASE("peel order as face-graph path") {
    const Polyhedron& cube = lookup("Cube").poly;
    SkeletonGraph g = face_graph(cube);
    PeelSequence seq = peel(cube, 0, cube.neighbors[0][0]);
    REQUIRE(seq.outcome == PeelOutcome::Complete);
    CHECK(peel_implies_path(seq, g));

    // the cube's face graph is dense enough that swapping entries can leave a
    // valid path, so corrupt the order in ways that cannot be one
    PeelSequence broken = seq;
    broken.order[2] = broken.order[3];  // duplicate face
    CHECK_FALSE(peel_implies_path(broken, g));
    PeelSequence shortened = seq;
    shortened.order.pop_back();
    CHECK_FALSE(peel_implies_path(shortened, g));

    const Polyhedron& cb = lookup("Cuboctahedron").poly;
    PeelSequence failed = peel(cb, 0, 1);
    REQUIRE(failed.outcome != PeelOutcome::Complete);
    CHECK_THROWS_AS(peel_implies_path(failed, face_graph(cb)), std::invalid_argument);
}

TEST_CASE("canonical form sees through relabeling") {
    std::mt19937 rng(7);
    for (const char* name : {"Snub Cube", "Icosidodecahedron", "Pentakis Dodecahedron"}) {
        SkeletonGraph g = skeleton(lookup(name).poly);
        SkeletonGraph h = relabel(g, rng);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(isomorphic(g, h));
    }
    CHECK_FALSE(isomorphic(skeleton(lookup("Cube").poly),
                           skeleton(lookup("Octahedron").poly)));
    // both 3-regular on 24 vertices, still different graphs
    CHECK_FALSE(isomorphic(skeleton(lookup("Truncated Cube").poly),
                           skeleton(lookup("Truncated Octahedron").poly)));
}

TEST_CASE("analysis JSON schema") {
    SkeletonGraph g = skeleton(lookup("Cube").poly);
    nlohmann::json doc = nlohmann::json::parse(to_json("Cube", g, hamiltonian_path(g)));
    std::set<std::string> keys;
    for (auto& [k, v] : doc.items()) keys.insert(k);
    CHECK(keys == std::set<std::string>{"solid", "skeleton_vertices", "hamiltonian",
                                        "witness"});
    CHECK(doc["solid"] == "Cube");
    CHECK(doc["skeleton_vertices"] == 8);
    CHECK(doc["hamiltonian"] == "found");
    CHECK(doc["witness"].size() == 8);

    SkeletonGraph rd = skeleton(lookup("Rhombic Dodecahedron").poly);
    nlohmann::json none =
        nlohmann::json::parse(to_json("Rhombic Dodecahedron", rd, hamiltonian_path(rd)));
    CHECK(none["hamiltonian"] == "none(parity)");
    CHECK(none["witness"].empty());
}
