#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "peelkit/geometry.hpp"
#include "peelkit/peeling.hpp"

namespace peelkit {

// Simple undirected graph; adjacency lists sorted ascending.
struct SkeletonGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int edge_count() const;
    bool has_edge(int a, int b) const;
};

// Vertex-edge graph of a polyhedron.
SkeletonGraph skeleton(const Polyhedron& p);

// Graph on the faces with face-adjacency edges; identical to the skeleton
// of the dual.
SkeletonGraph face_graph(const Polyhedron& p);

// Combinatorial dual: one vertex per face (placed at the face centroid),
// one face per vertex (the incident faces in cyclic order). The placement
// is only approximate geometry -- downstream use is combinatorial.
Polyhedron dual(const Polyhedron& p);

// Two-coloring; nullopt when an odd cycle exists.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const SkeletonGraph& g);

enum class HamiltonianStatus { PathFound, NoPath, TimedOut };
enum class NoPathProof { BipartiteParity, Exhaustive };

struct HamiltonianReport {
    HamiltonianStatus status = HamiltonianStatus::NoPath;
    NoPathProof proof = NoPathProof::Exhaustive;  // meaningful when NoPath
    std::vector<int> witness;                     // nonempty when PathFound
    long long elapsed_steps = 0;
};

// Backtracking search over all start vertices with connectivity and
// forced-endpoint pruning; a bipartite part-size gap of 2 or more proves
// absence without searching. TimedOut is reported honestly at the budget,
// never converted to NoPath.
HamiltonianReport hamiltonian_path(const SkeletonGraph& g, long long budget = 100'000'000);

// True iff a Complete peel order is a Hamiltonian path of the face graph.
// Throws std::invalid_argument for incomplete runs (precondition).
bool peel_implies_path(const PeelSequence& seq, const SkeletonGraph& g);

// Canonical certificate: equal iff the graphs are isomorphic. Refinement
// plus individualization backtracking; intended for graphs up to ~120
// vertices with lots of symmetry.
std::vector<std::uint64_t> canonical_form(const SkeletonGraph& g);

bool isomorphic(const SkeletonGraph& a, const SkeletonGraph& b);

std::string to_json(const std::string& solid, const SkeletonGraph& g,
                    const HamiltonianReport& r);

}  // namespace peelkit
