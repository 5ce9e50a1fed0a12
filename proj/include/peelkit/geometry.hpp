#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

namespace peelkit {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

inline constexpr double kDefaultTolerance = 1e-9;

// Convex polyhedron with derived combinatorics. Immutable after build();
// all operations below are pure functions, so values can be shared freely.
struct Polyhedron {
    std::string name;
    std::vector<Vec3> vertices;            // centered: mean(vertices) == 0
    std::vector<std::vector<int>> faces;   // vertex cycles, CCW seen from outside

    // Derived by build(). Edge slot j of face f is the edge from cycle
    // vertex j to j+1; neighbors[f][j] is the face across that edge and
    // face_edges[f][j] the id of that edge in `edges`.
    std::vector<std::array<int, 2>> edges;  // unordered pairs, a < b, sorted
    std::vector<std::vector<int>> neighbors;
    std::vector<std::vector<int>> face_edges;
    std::vector<Vec3> centroids;            // per face, mean of its vertices
    std::vector<std::string> warnings;      // non-fatal validation findings

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int gon(int face) const { return static_cast<int>(faces[face].size()); }

    bool adjacent(int f, int g) const;
    // Slot of g in f's neighbor cycle, or -1.
    int neighbor_slot(int f, int g) const;

    // Area-weighted outward normal (Newell), normalized.
    Vec3 face_normal(int face) const;
};

// Validates and derives everything. Re-orients face cycles outward if
// needed, recenters vertices on their mean. Throws std::runtime_error on
// structural problems (non-manifold edge, Euler violation, bad index,
// degenerate face); non-convex vertex positions only add a warning.
Polyhedron build(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces,
                 std::string name = "", double tol = kDefaultTolerance);

// Reflection through the x-z plane (negates y). Face cycles are reversed so
// orientation stays outward; face and vertex indices are unchanged, which is
// what makes mirrored peel runs comparable index-by-index.
Polyhedron mirror(const Polyhedron& p);

// Rigid rotation taking the centroid of face f1 onto the +z axis. Requires
// the solid centroid at the origin (build guarantees this); throws if the
// face centroid sits at the origin, since then no axis is defined.
Polyhedron rotate_to_top(const Polyhedron& p, int f1);

}  // namespace peelkit
