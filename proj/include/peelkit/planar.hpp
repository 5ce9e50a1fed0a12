#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "peelkit/geometry.hpp"
#include "peelkit/peeling.hpp"

namespace peelkit {

// Barycentric (Tutte) drawing of a polyhedron's skeleton. The outer face is
// the start face of the peel, drawn with its true shape; every interior
// vertex sits at the average of its neighbors. The trace polyline joins the
// projected face centroids in peel order, and `remaining` lists faces the
// peel never selected.
struct PlanarEmbedding {
    std::string solid;
    std::vector<Vec2> positions;   // per vertex
    int outer_face = -1;
    std::vector<int> outer_cycle;  // vertex ids of the fixed boundary
    std::vector<int> trace;        // face indices in peel order
    std::vector<int> remaining;
    // Convenience: centroid of a face in the drawing.
    Vec2 face_center(const Polyhedron& p, int f) const;
};

// Solve the barycentric system with the peel's start face fixed as the
// outer boundary (congruent copy of its 3D shape), then rotate so the
// second face's projected centroid lies on the positive y-axis. Throws
// std::runtime_error if the linear system cannot be solved, which a
// 3-connected planar skeleton never triggers.
PlanarEmbedding embed(const Polyhedron& p, const PeelSequence& seq);

// Count of properly crossing edge pairs (shared endpoints excluded).
// Zero for a valid embedding of a planar skeleton.
int crossing_pairs(const Polyhedron& p, const PlanarEmbedding& e,
                   double tol = kDefaultTolerance);

// Largest deviation of an interior vertex from the average of its
// neighbors; the solve contract keeps this below 1e-9.
double barycentric_residual(const Polyhedron& p, const PlanarEmbedding& e);

// SVG: skeleton edges, remaining faces filled red, trace polyline in a
// distinct stroke, data attributes carrying face/step metadata.
std::string to_svg(const Polyhedron& p, const PlanarEmbedding& e);
void write_svg(const Polyhedron& p, const PlanarEmbedding& e, std::ostream& os);

}  // namespace peelkit
