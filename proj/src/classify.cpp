#include "peelkit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

namespace peelkit {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PerfectlyPeelable: return "PerfectlyPeelable";
        case Verdict::PossiblyPeelable: return "PossiblyPeelable";
        case Verdict::NonPeelable: return "NonPeelable";
    }
    return "?";
}

const char* verdict_short(Verdict v) {
    switch (v) {
        case Verdict::PerfectlyPeelable: return "Perfect";
        case Verdict::PossiblyPeelable: return "Possible";
        case Verdict::NonPeelable: return "Impossible";
    }
    return "?";
}

PeelabilityVerdict classify(const Polyhedron& p, const PeelConfig& cfg) {
    PeelabilityVerdict out;
    out.solid = p.name;
    for (const PeelSequence& run : peel_all_pairs(p, cfg)) {
        out.per_pair.push_back({run.f1, run.f2, run.outcome, run.length()});
        ++out.total;
        if (run.outcome == PeelOutcome::Complete) ++out.complete;
    }
    if (out.complete == out.total)
        out.verdict = Verdict::PerfectlyPeelable;
    else if (out.complete == 0)
        out.verdict = Verdict::NonPeelable;
    else
        out.verdict = Verdict::PossiblyPeelable;
    return out;
}

namespace {

// Canonical description of where an edge slot sits within the face's shape:
// the slot's offset from a lexicographically minimal rotation of the
// quantized (edge length, corner angle) cycle. All rotations tie for a
// regular polygon, so every slot reports 0 there.
int shape_phase(const Polyhedron& p, int face, int slot) {
    const auto& cyc = p.faces[face];
    const int k = static_cast<int>(cyc.size());
    std::vector<std::pair<long long, long long>> item(k);
    for (int j = 0; j < k; ++j) {
        const Vec3& prev = p.vertices[cyc[(j - 1 + k) % k]];
        const Vec3& at = p.vertices[cyc[j]];
        const Vec3& next = p.vertices[cyc[(j + 1) % k]];
        double len = (next - at).norm();
        double ang = std::acos(std::clamp((prev - at).normalized().dot((next - at).normalized()),
                                          -1.0, 1.0));
        item[j] = {std::llround(len * 1e6), std::llround(ang * 1e6)};
    }
    auto rotation_less = [&](int a, int b) {  // compare cycles starting at a vs b
        for (int j = 0; j < k; ++j) {
            const auto& x = item[(a + j) % k];
            const auto& y = item[(b + j) % k];
            if (x != y) return x < y;
        }
        return false;
    };
    int best = 0;
    for (int o = 1; o < k; ++o)
        if (rotation_less(o, best)) best = o;
    int phase = k;
    for (int o = 0; o < k; ++o) {
        if (rotation_less(o, best) || rotation_less(best, o)) continue;  // not minimal
        phase = std::min(phase, (slot - o + k) % k);
    }
    return phase;
}

}  // namespace

PatternSignature signature(const Polyhedron& p, const PeelSequence& seq) {
    PatternSignature sig;
    sig.outcome = seq.outcome;
    for (int f : seq.order) sig.gons.push_back(p.gon(f));
    if (seq.outcome != PeelOutcome::Complete) {
        sig.remaining_count = static_cast<int>(seq.remaining.size());
        return sig;
    }
    sig.start_phase = shape_phase(p, seq.f1, p.neighbor_slot(seq.f1, seq.f2));
    const int t = seq.length();
    for (int i = 1; i + 1 < t; ++i) {
        int face = seq.order[i];
        int entry = p.neighbor_slot(face, seq.order[i - 1]);
        int exit = p.neighbor_slot(face, seq.order[i + 1]);
        sig.offsets.push_back((exit - entry + p.gon(face)) % p.gon(face));
    }
    return sig;
}

std::vector<PatternClass> pattern_classes(const Polyhedron& p,
                                          const std::vector<PeelSequence>& runs) {
    std::map<PatternSignature, PatternClass> classes;
    for (const PeelSequence& run : runs) {
        PatternSignature sig = signature(p, run);
        auto [it, fresh] = classes.try_emplace(sig);
        if (fresh) {
            it->second.sig = std::move(sig);
            it->second.representative = run;
        }
        ++it->second.count;
    }
    std::vector<PatternClass> out;
    out.reserve(classes.size());
    for (auto& [sig, cls] : classes) out.push_back(std::move(cls));
    return out;
}

const std::vector<ExpectedRow>& expected_table1() {
    static const std::vector<ExpectedRow> rows = {
        {"Tetrahedron", Verdict::PerfectlyPeelable, true},
        {"Cube", Verdict::PerfectlyPeelable, true},
        {"Octahedron", Verdict::PerfectlyPeelable, true},
        {"Dodecahedron", Verdict::PerfectlyPeelable, true},
        {"Icosahedron", Verdict::PerfectlyPeelable, true},
        {"Truncated Tetrahedron", Verdict::PossiblyPeelable, true},
        {"Triakis Tetrahedron", Verdict::PossiblyPeelable, true},
        {"Cuboctahedron", Verdict::NonPeelable, true},
        {"Rhombic Dodecahedron", Verdict::PerfectlyPeelable, false},
        {"Truncated Cube", Verdict::NonPeelable, true},
        {"Triakis Octahedron", Verdict::NonPeelable, false},
        {"Truncated Octahedron", Verdict::PerfectlyPeelable, true},
        {"Tetrakis Hexahedron", Verdict::PossiblyPeelable, true},
        {"Small Rhombicuboctahedron", Verdict::NonPeelable, true},
        {"Deltoidal Icositetrahedron", Verdict::PerfectlyPeelable, false},
        {"Great Rhombicuboctahedron", Verdict::PerfectlyPeelable, true},
        {"Disdyakis Dodecahedron", Verdict::NonPeelable, true},
        {"Snub Cube", Verdict::PossiblyPeelable, true},
        {"Pentagonal Icositetrahedron", Verdict::PerfectlyPeelable, true},
        {"Icosidodecahedron", Verdict::NonPeelable, true},
        {"Rhombic Triacontahedron", Verdict::PossiblyPeelable, false},
        {"Truncated Dodecahedron", Verdict::NonPeelable, true},
        {"Triakis Icosahedron", Verdict::NonPeelable, false},
        {"Truncated Icosahedron", Verdict::PerfectlyPeelable, true},
        {"Pentakis Dodecahedron", Verdict::PerfectlyPeelable, true},
        {"Small Rhombicosidodecahedron", Verdict::NonPeelable, true},
        {"Deltoidal Hexecontahedron", Verdict::PerfectlyPeelable, false},
        {"Great Rhombicosidodecahedron", Verdict::PossiblyPeelable, true},
        {"Disdyakis Triacontahedron", Verdict::NonPeelable, true},
        {"Snub Dodecahedron", Verdict::NonPeelable, true},
        {"Pentagonal Hexecontahedron", Verdict::PerfectlyPeelable, true},
    };
    return rows;
}

CatalogClassification classify_catalog(const PeelConfig& cfg) {
    CatalogClassification out;
    const auto& expected = expected_table1();
    for (const SolidRecord& rec : catalog()) {
        PeelabilityVerdict v = classify(rec.poly, cfg);
        out.rows.push_back({rec.name, rec.index, rec.family, v.verdict, v.complete, v.total});
        auto it = std::find_if(expected.begin(), expected.end(),
                               [&](const ExpectedRow& row) { return row.name == rec.name; });
        if (it == expected.end())
            out.mismatches.push_back(rec.name + ": no expected entry");
        else if (it->verdict != v.verdict)
            out.mismatches.push_back(rec.name + ": got " + verdict_short(v.verdict) +
                                     ", expected " + verdict_short(it->verdict));
    }
    return out;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv(const std::vector<ClassifyRow>& rows) {
    std::ostringstream os;
    os << "name,index,family,verdict,complete-pairs,total-pairs\n";
    for (const auto& r : rows)
        os << csv_field(r.name) << ',' << csv_field(r.index) << ',' << family_name(r.family)
           << ',' << verdict_short(r.verdict) << ',' << r.complete << ',' << r.total << '\n';
    return os.str();
}

std::string to_json(const std::vector<ClassifyRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        row["index"] = r.index;
        row["family"] = family_name(r.family);
        row["verdict"] = verdict_short(r.verdict);
        row["complete-pairs"] = r.complete;
        row["total-pairs"] = r.total;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

}  // namespace peelkit
