#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "peelkit/geometry.hpp"

namespace peelkit {

enum class Handedness { Right, Left };

const char* handedness_name(Handedness h);

struct PeelConfig {
    Handedness handedness = Handedness::Right;
    double tolerance = kDefaultTolerance;  // z-comparisons and side predicate
    int max_steps = 0;                     // 0 = face count (safety bound)
};

// Which selection rule produced each step. The first two entries of a run
// are the given start pair.
enum class StepRule { Start, Given, OnlyNeighbor, HighestLeft, LowestRight };

const char* step_rule_name(StepRule r);

enum class PeelOutcome { Complete, Terminated, Isolated };

const char* outcome_name(PeelOutcome o);

struct PeelSequence {
    std::string solid;
    int f1 = -1, f2 = -1;
    Handedness handedness = Handedness::Right;
    std::vector<int> order;       // selected faces, in selection order
    std::vector<StepRule> rules;  // aligned with order
    PeelOutcome outcome = PeelOutcome::Complete;
    std::vector<int> remaining;   // ascending; empty iff Complete
    std::vector<std::string> warnings;  // e.g. z-ties broken by face index

    int length() const { return static_cast<int>(order.size()); }
};

// Plane through the peeling axis (origin -> c1) and the current face
// centroid ck; its normal is ck x c1. Degenerate when ck is parallel to the
// axis (the face opposite the start face), in which case the left set is
// empty by convention and the lowest-z rule applies.
struct SidePlane {
    Vec3 normal;  // ck x c1
    Vec3 c1, ck;
    bool degenerate(double tol = kDefaultTolerance) const { return normal.norm() <= tol; }
};

SidePlane side_plane(const Vec3& c1, const Vec3& ck);

// Strict left test: normal . point > tol. Points within +-tol of the plane
// count as not-left. For left-handed peeling the half-space flips, which is
// exactly equivalent to right-handed peeling of the mirrored solid.
bool is_left(const SidePlane& plane, const Vec3& point, double tol = kDefaultTolerance,
             Handedness handedness = Handedness::Right);

struct NotAdjacentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The greedy spiral selection. Orients the solid so f1's centroid sits on
// the +z axis, then repeatedly selects among the current face's unselected
// neighbors: the only one if unique; otherwise the highest-centroid one on
// the left of the axis plane; otherwise the lowest-centroid one overall.
// Stops when everything is selected or the current face has no unselected
// neighbor. Throws NotAdjacentError unless f2 neighbors f1.
PeelSequence peel(const Polyhedron& p, int f1, int f2, const PeelConfig& cfg = {});

// One run per ordered adjacent pair (2 * edge count of them), enumerated by
// ascending f1 and then f1's neighbor-cycle order.
std::vector<PeelSequence> peel_all_pairs(const Polyhedron& p, const PeelConfig& cfg = {});

std::string to_json(const PeelSequence& seq);

}  // namespace peelkit
