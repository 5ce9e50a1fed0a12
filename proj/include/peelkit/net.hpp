#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "peelkit/geometry.hpp"
#include "peelkit/peeling.hpp"

namespace peelkit {

// One face of a flattened net. `poly` is the placed 2D polygon in the face's
// stored cycle order; `hinge` names the two vertex ids shared with the
// predecessor in the sequence (-1,-1 for the first face). `gray` is the
// lightness rank used by the SVG emitter, dark start to light goal.
struct NetFace {
    int face = -1;
    int step = 0;
    std::vector<Vec2> poly;
    std::pair<int, int> hinge{-1, -1};
    double gray = 0.25;
};

struct Net {
    std::string solid;
    std::vector<NetFace> faces;
};

// Role of each face in an intermediate 3D unfolding state.
enum class UnfoldRole { NotUnfolded, Unfolded, LastSelected };

// Snapshot after step i of a peel: faces seq[0..i-1] are rotated flat into
// the plane of seq[i], everything else keeps its original coordinates.
struct PartialUnfoldState {
    int step = 0;
    std::vector<std::vector<Vec3>> face_coords;  // per original face index
    std::vector<UnfoldRole> roles;               // per original face index
};

// Flatten the selected faces of `seq` into the plane by composing rigid
// hinge rotations down the chain. Works for incomplete sequences too; the
// net then contains only the selected faces. The first face is placed with
// its inside toward the viewer.
Net unfold(const Polyhedron& p, const PeelSequence& seq);

// Intermediate state with 1 <= i < seq length. Throws std::out_of_range
// otherwise.
PartialUnfoldState partial_unfold(const Polyhedron& p, const PeelSequence& seq,
                                  int i);

// Pairs of faces (by step index, earlier first) that are non-consecutive in
// the sequence and whose placed polygons overlap with interior penetration
// deeper than tol. Convex polygons assumed (true for every catalog face).
std::vector<std::pair<int, int>> check_overlap(const Net& net,
                                               double tol = kDefaultTolerance);

// SVG document for a net: one polygon per face, grayscale fill by step,
// data-face / data-step attributes for tooling.
std::string to_svg(const Net& net);
void write_svg(const Net& net, std::ostream& os);

// Wavefront OBJ for an intermediate state: faces triangulated by a fan from
// their centroid, roles recorded in comments.
std::string to_obj(const Polyhedron& p, const PartialUnfoldState& state);
void write_obj(const Polyhedron& p, const PartialUnfoldState& state,
               std::ostream& os);

}  // namespace peelkit
