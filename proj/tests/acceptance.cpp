// Acceptance gate: eleven checks against the embedded reference expectations,
// one [PASS]/[FAIL] line each, exit 0 only if everything passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "peelkit/catalog.hpp"
#include "peelkit/classify.hpp"
#include "peelkit/graph.hpp"
#include "peelkit/net.hpp"
#include "peelkit/planar.hpp"

using namespace peelkit;

namespace {

// Reproducing the embedded verdict table needs the side predicate to act as
// a plain sign test; 1e-18 sits below the noise floor of the coordinates.
// Everything tolerance-agnostic runs at the library default instead.
PeelConfig replication_config() {
    PeelConfig cfg;
    cfg.handedness = Handedness::Right;
    cfg.tolerance = 1e-18;
    return cfg;
}

std::map<std::string, ExpectedRow> expected_by_name() {
    std::map<std::string, ExpectedRow> m;
    for (const ExpectedRow& r : expected_table1()) m[r.name] = r;
    return m;
}

bool family_verdicts_match(Family fam, std::string& note) {
    auto expected = expected_by_name();
    PeelConfig cfg = replication_config();
    bool ok = true;
    for (const SolidRecord& rec : catalog()) {
        if (rec.family != fam) continue;
        PeelabilityVerdict v = classify(rec.poly, cfg);
        Verdict want = expected.at(rec.name).verdict;
        if (v.verdict != want) {
            ok = false;
            note += " " + rec.name + ": got " + verdict_short(v.verdict) + ", expected " +
                    verdict_short(want) + ";";
        }
    }
    return ok;
}

bool two_value_alternation(const std::vector<int>& v) {
    std::set<int> distinct(v.begin(), v.end());
    if (distinct.size() != 2) return false;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) return false;
    return true;
}

struct Criterion {
    int id;
    const char* what;
    double cap_seconds;  // 0 = untimed
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "all five regular solids classify as perfectly peelable", 1.0,
                        [](std::string& note) {
                            bool ok = true;
                            for (const SolidRecord& rec : catalog()) {
                                if (rec.family != Family::Platonic) continue;
                                PeelabilityVerdict v = classify(rec.poly);
                                if (v.verdict != Verdict::PerfectlyPeelable) {
                                    ok = false;
                                    note += " " + rec.name + ": " + verdict_short(v.verdict) + ";";
                                }
                            }
                            return ok;
                        }});

    criteria.push_back(
        {2, "dodecahedron yields one net class and no two-value zigzag hinge pattern", 1.0,
         [](std::string& note) {
             const Polyhedron& p = lookup("Dodecahedron").poly;
             std::vector<PeelSequence> runs = peel_all_pairs(p);
             for (const PeelSequence& seq : runs)
                 if (seq.outcome != PeelOutcome::Complete) {
                     note = " incomplete run";
                     return false;
                 }
             auto classes = pattern_classes(p, runs);
             if (classes.size() != 1) {
                 note = " expected 1 class, got " + std::to_string(classes.size());
                 return false;
             }
             const std::vector<int> want = {1, 2, 2, 2, 3, 2, 3, 3, 3, 4};
             if (classes[0].sig.offsets != want) {
                 note = " unexpected hinge offsets";
                 return false;
             }
             if (two_value_alternation(classes[0].sig.offsets)) {
                 note = " offsets form the excluded zigzag pattern";
                 return false;
             }
             return true;
         }});

    criteria.push_back({3, "vertex-uniform verdicts match the embedded table row by row", 60.0,
                        [](std::string& note) {
                            return family_verdicts_match(Family::Archimedean, note);
                        }});

    criteria.push_back({4, "face-uniform verdicts match the embedded table row by row", 120.0,
                        [](std::string& note) {
                            return family_verdicts_match(Family::Catalan, note);
                        }});

    criteria.push_back(
        {5, "truncated icosahedron nets split by first-pentagon position 0/1/2", 0,
         [](std::string& note) {
             const Polyhedron& p = lookup("Truncated Icosahedron").poly;
             auto classes = pattern_classes(p, peel_all_pairs(p));
             if (classes.size() != 3) {
                 note = " expected 3 classes, got " + std::to_string(classes.size());
                 return false;
             }
             std::set<int> positions;
             for (const PatternClass& c : classes) {
                 auto it = std::find(c.sig.gons.begin(), c.sig.gons.end(), 5);
                 if (it == c.sig.gons.end()) {
                     note = " class without a pentagon";
                     return false;
                 }
                 positions.insert(static_cast<int>(it - c.sig.gons.begin()));
             }
             if (positions != std::set<int>{0, 1, 2}) {
                 note = " unexpected pentagon positions";
                 return false;
             }
             return true;
         }});

    criteria.push_back(
        {6, "snub cube square starts: success has the second square at 14, failure at 16", 0,
         [](std::string& note) {
             const Polyhedron& good = lookup("Snub Cube").poly;
             const Polyhedron bad = mirror(good);
             for (int f1 = 0; f1 < good.face_count(); ++f1) {
                 if (good.gon(f1) != 4) continue;
                 for (int f2 : good.neighbors[f1]) {
                     PeelSequence s = peel(good, f1, f2);
                     if (s.outcome != PeelOutcome::Complete) {
                         note = " embedded form: square start failed";
                         return false;
                     }
                     if (good.gon(s.order[14]) != 4) {
                         note = " embedded form: second square not at position 14";
                         return false;
                     }
                     for (int k = 1; k <= 13; ++k)
                         if (good.gon(s.order[k]) != 3) {
                             note = " embedded form: non-triangle between the squares";
                             return false;
                         }

                     PeelSequence t = peel(bad, f1, f2);
                     if (t.outcome == PeelOutcome::Complete) {
                         note = " mirrored form: square start unexpectedly completed";
                         return false;
                     }
                     if (t.length() <= 16 || bad.gon(t.order[16]) != 4 ||
                         bad.gon(t.order[14]) == 4) {
                         note = " mirrored form: square not at position 16";
                         return false;
                     }
                 }
             }
             return true;
         }});

    criteria.push_back(
        {7, "left-handed runs equal right-handed runs on the mirrored solid", 120.0,
         [](std::string& note) {
             PeelConfig left_cfg;
             left_cfg.handedness = Handedness::Left;
             for (const SolidRecord& rec : catalog()) {
                 const Polyhedron& p = rec.poly;
                 Polyhedron m = mirror(p);
                 for (int f1 = 0; f1 < p.face_count(); ++f1)
                     for (int f2 : p.neighbors[f1]) {
                         PeelSequence a = peel(p, f1, f2, left_cfg);
                         PeelSequence b = peel(m, f1, f2);
                         if (a.order != b.order || a.outcome != b.outcome ||
                             a.remaining != b.remaining) {
                             note = " " + rec.name + " pair " + std::to_string(f1) + "," +
                                    std::to_string(f2);
                             return false;
                         }
                     }
             }
             return true;
         }});

    criteria.push_back(
        {8, "Hamiltonian-path column reproduces: 7 of 13 duals, all 13 originals, ratios 6/7 "
            "and 9/13",
         600.0, [](std::string& note) {
             auto expected = expected_by_name();
             int catalan_path = 0, arch_path = 0, catalan_peelable = 0, arch_peelable = 0;
             for (const SolidRecord& rec : catalog()) {
                 SkeletonGraph g = skeleton(rec.poly);
                 HamiltonianReport r = hamiltonian_path(g);
                 const ExpectedRow& want = expected.at(rec.name);
                 if (r.status == HamiltonianStatus::TimedOut) {
                     note = " " + rec.name + ": search timed out";
                     return false;
                 }
                 bool found = r.status == HamiltonianStatus::PathFound;
                 if (found != want.hamiltonian) {
                     note = " " + rec.name + (found ? ": unexpected path" : ": path missing");
                     return false;
                 }
                 if (found) {
                     std::set<int> seen(r.witness.begin(), r.witness.end());
                     if (static_cast<int>(r.witness.size()) != g.n ||
                         static_cast<int>(seen.size()) != g.n) {
                         note = " " + rec.name + ": bad witness";
                         return false;
                     }
                     for (size_t i = 1; i < r.witness.size(); ++i)
                         if (!g.has_edge(r.witness[i - 1], r.witness[i])) {
                             note = " " + rec.name + ": witness uses a non-edge";
                             return false;
                         }
                 }
                 bool peelable = want.verdict != Verdict::NonPeelable;
                 if (rec.family == Family::Catalan) {
                     catalan_path += found;
                     catalan_peelable += peelable;
                 }
                 if (rec.family == Family::Archimedean) {
                     arch_path += found;
                     arch_peelable += peelable;
                 }
             }
             if (arch_peelable != 6 || catalan_path != 7 || catalan_peelable != 9 ||
                 arch_path != 13) {
                 note = " counts " + std::to_string(arch_peelable) + "/" +
                        std::to_string(catalan_path) + " and " +
                        std::to_string(catalan_peelable) + "/" + std::to_string(arch_path);
                 return false;
             }
             return true;
         }});

    criteria.push_back(
        {9, "every complete run flattens isometrically with coincident hinges (<= 1e-6)", 60.0,
         [](std::string& note) {
             PeelConfig cfg = replication_config();
             long long checked = 0;
             for (const SolidRecord& rec : catalog()) {
                 const Polyhedron& p = rec.poly;
                 for (const PeelSequence& seq : peel_all_pairs(p, cfg)) {
                     if (seq.outcome != PeelOutcome::Complete) continue;
                     Net net = unfold(p, seq);
                     auto placed = [&](const NetFace& nf, int vid) {
                         const auto& cyc = p.faces[nf.face];
                         auto it = std::find(cyc.begin(), cyc.end(), vid);
                         return nf.poly[it - cyc.begin()];
                     };
                     for (size_t k = 0; k < net.faces.size(); ++k) {
                         const NetFace& nf = net.faces[k];
                         const auto& cyc = p.faces[nf.face];
                         for (size_t i = 0; i < cyc.size(); ++i) {
                             size_t j = (i + 1) % cyc.size();
                             double d3 = (p.vertices[cyc[i]] - p.vertices[cyc[j]]).norm();
                             double d2 = (nf.poly[i] - nf.poly[j]).norm();
                             if (std::abs(d3 - d2) > 1e-6) {
                                 note = " " + rec.name + ": edge length drifted";
                                 return false;
                             }
                         }
                         if (k > 0) {
                             auto [a, b] = nf.hinge;
                             if ((placed(nf, a) - placed(net.faces[k - 1], a)).norm() > 1e-6 ||
                                 (placed(nf, b) - placed(net.faces[k - 1], b)).norm() > 1e-6) {
                                 note = " " + rec.name + ": hinge endpoints separated";
                                 return false;
                             }
                         }
                     }
                     ++checked;
                 }
             }
             if (checked == 0) {
                 note = " no complete runs found";
                 return false;
             }
             return true;
         }});

    criteria.push_back(
        {10, "barycentric drawings: zero crossings, residual < 1e-9 on all 31 skeletons", 30.0,
         [](std::string& note) {
             for (const SolidRecord& rec : catalog()) {
                 const Polyhedron& p = rec.poly;
                 PlanarEmbedding e = embed(p, peel(p, 0, p.neighbors[0][0]));
                 if (crossing_pairs(p, e) != 0) {
                     note = " " + rec.name + ": edges cross";
                     return false;
                 }
                 if (barycentric_residual(p, e) >= 1e-9) {
                     note = " " + rec.name + ": residual too large";
                     return false;
                 }
             }
             return true;
         }});

    criteria.push_back(
        {11, "every complete run is a Hamiltonian path of its face graph", 30.0,
         [](std::string& note) {
             PeelConfig cfg = replication_config();
             long long complete = 0;
             for (const SolidRecord& rec : catalog()) {
                 SkeletonGraph g = face_graph(rec.poly);
                 for (const PeelSequence& seq : peel_all_pairs(rec.poly, cfg)) {
                     if (seq.outcome != PeelOutcome::Complete) continue;
                     ++complete;
                     if (!peel_implies_path(seq, g)) {
                         note = " " + rec.name + " pair " + std::to_string(seq.f1) + "," +
                                std::to_string(seq.f2);
                         return false;
                     }
                 }
             }
             if (complete == 0) {
                 note = " no complete runs found";
                 return false;
             }
             return true;
         }});

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        std::string note;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception& ex) {
            note = std::string(" exception: ") + ex.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.cap_seconds > 0 && dt > c.cap_seconds) {
            ok = false;
            note = " exceeded the " + std::to_string(c.cap_seconds) + " s budget";
        }
        std::printf("[%s] criterion %d: %s (%.2f s)%s\n", ok ? "PASS" : "FAIL", c.id, c.what,
                    dt, note.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
