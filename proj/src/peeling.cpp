#include "peelkit/peeling.hpp"

#include <algorithm>

#include <json.hpp>

namespace peelkit {

const char* handedness_name(Handedness h) {
    return h == Handedness::Right ? "right" : "left";
}

const char* step_rule_name(StepRule r) {
    switch (r) {
        case StepRule::Start: return "start";
        case StepRule::Given: return "given";
        case StepRule::OnlyNeighbor: return "only-neighbor";
        case StepRule::HighestLeft: return "highest-left";
        case StepRule::LowestRight: return "lowest-right";
    }
    return "?";
}

const char* outcome_name(PeelOutcome o) {
    switch (o) {
        case PeelOutcome::Complete: return "complete";
        case PeelOutcome::Terminated: return "terminated";
        case PeelOutcome::Isolated: return "isolated";
    }
    return "?";
}

SidePlane side_plane(const Vec3& c1, const Vec3& ck) {
    return {ck.cross(c1), c1, ck};
}

bool is_left(const SidePlane& plane, const Vec3& point, double tol, Handedness handedness) {
    double d = plane.normal.dot(point);
    return handedness == Handedness::Right ? d > tol : d < -tol;
}

namespace {

// Extremal pick with the near-tie rule: candidates whose key is within tol
// of the best tie, and the smallest face index wins. Returns (face, tied).
std::pair<int, bool> pick_extreme(const std::vector<int>& cands,
                                  const std::vector<Vec3>& centroids, bool want_max,
                                  double tol) {
    double best = want_max ? -1e300 : 1e300;
    for (int f : cands) {
        double z = centroids[f].z();
        if (want_max ? z > best : z < best) best = z;
    }
    int chosen = -1;
    int eligible = 0;
    for (int f : cands) {
        double z = centroids[f].z();
        if (want_max ? z >= best - tol : z <= best + tol) {
            ++eligible;
            if (chosen < 0 || f < chosen) chosen = f;
        }
    }
    return {chosen, eligible > 1};
}

}  // namespace

PeelSequence peel(const Polyhedron& p, int f1, int f2, const PeelConfig& cfg) {
    const int n = p.face_count();
    if (f1 < 0 || f1 >= n || f2 < 0 || f2 >= n)
        throw std::runtime_error("start face out of range: " + std::to_string(f1) + "," +
                                 std::to_string(f2));
    if (!p.adjacent(f1, f2))
        throw NotAdjacentError("faces " + std::to_string(f1) + " and " + std::to_string(f2) +
                               " are not adjacent");

    const Polyhedron q = rotate_to_top(p, f1);
    const double tol = cfg.tolerance;
    const int max_steps = cfg.max_steps > 0 ? cfg.max_steps : n;
    const Vec3 c1 = q.centroids[f1];

    PeelSequence seq;
    seq.solid = p.name;
    seq.f1 = f1;
    seq.f2 = f2;
    seq.handedness = cfg.handedness;
    seq.order = {f1, f2};
    seq.rules = {StepRule::Start, StepRule::Given};

    std::vector<char> selected(n, 0);
    selected[f1] = selected[f2] = 1;

    while (seq.length() < n && seq.length() < max_steps) {
        const int cur = seq.order.back();
        std::vector<int> cands;
        for (int g : q.neighbors[cur])
            if (!selected[g] && std::find(cands.begin(), cands.end(), g) == cands.end())
                cands.push_back(g);
        if (cands.empty()) break;

        int chosen;
        StepRule rule;
        bool tied = false;
        if (cands.size() == 1) {
            chosen = cands.front();
            rule = StepRule::OnlyNeighbor;
        } else {
            const SidePlane plane = side_plane(c1, q.centroids[cur]);
            std::vector<int> left;
            if (!plane.degenerate(tol)) {
                for (int g : cands)
                    if (is_left(plane, q.centroids[g], tol, cfg.handedness)) left.push_back(g);
            }
            if (!left.empty()) {
                std::tie(chosen, tied) = pick_extreme(left, q.centroids, true, tol);
                rule = StepRule::HighestLeft;
            } else {
                std::tie(chosen, tied) = pick_extreme(cands, q.centroids, false, tol);
                rule = StepRule::LowestRight;
            }
        }
        if (tied)
            seq.warnings.push_back("step " + std::to_string(seq.length()) +
                                   ": centroid z-tie within tolerance, broke by smallest face index (" +
                                   std::to_string(chosen) + ")");
        selected[chosen] = 1;
        seq.order.push_back(chosen);
        seq.rules.push_back(rule);
    }

    for (int f = 0; f < n; ++f)
        if (!selected[f]) seq.remaining.push_back(f);

    if (seq.remaining.empty()) {
        seq.outcome = PeelOutcome::Complete;
    } else {
        // Isolated: some skipped face can never be reached again because all
        // of its neighbors are already selected. Otherwise plain termination.
        bool isolated = false;
        for (int f : seq.remaining) {
            bool all_taken = true;
            for (int g : q.neighbors[f])
                if (!selected[g]) {
                    all_taken = false;
                    break;
                }
            if (all_taken) {
                isolated = true;
                break;
            }
        }
        seq.outcome = isolated ? PeelOutcome::Isolated : PeelOutcome::Terminated;
    }
    return seq;
}

std::vector<PeelSequence> peel_all_pairs(const Polyhedron& p, const PeelConfig& cfg) {
    std::vector<PeelSequence> runs;
    runs.reserve(2 * p.edge_count());
    for (int f1 = 0; f1 < p.face_count(); ++f1)
        for (int f2 : p.neighbors[f1]) runs.push_back(peel(p, f1, f2, cfg));
    return runs;
}

std::string to_json(const PeelSequence& seq) {
    nlohmann::ordered_json doc;
    doc["solid"] = seq.solid;
    doc["f1"] = seq.f1;
    doc["f2"] = seq.f2;
    doc["handedness"] = handedness_name(seq.handedness);
    doc["order"] = seq.order;
    doc["outcome"] = outcome_name(seq.outcome);
    doc["remaining"] = seq.remaining;
    return doc.dump(2) + "\n";
}

}  // namespace peelkit
