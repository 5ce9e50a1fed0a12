#pragma once

#include <compare>
#include <string>
#include <vector>

#include "peelkit/catalog.hpp"
#include "peelkit/peeling.hpp"

namespace peelkit {

enum class Verdict { PerfectlyPeelable, PossiblyPeelable, NonPeelable };

const char* verdict_name(Verdict v);   // PerfectlyPeelable / ...
const char* verdict_short(Verdict v);  // Perfect / Possible / Impossible

struct PairOutcome {
    int f1, f2;
    PeelOutcome outcome;
    int length;
};

struct PeelabilityVerdict {
    std::string solid;
    Verdict verdict = Verdict::NonPeelable;
    int total = 0;
    int complete = 0;
    std::vector<PairOutcome> per_pair;
};

// Runs every ordered adjacent start pair and aggregates.
PeelabilityVerdict classify(const Polyhedron& p, const PeelConfig& cfg = {});

// Net-shape equivalence key for a run. Complete runs carry the gon-count
// sequence, where the second face attaches on the start face (canonical
// under the start face's shape symmetry, so regular start faces always give
// phase 0), and for every middle step the cyclic offset of the exit hinge
// from the entry hinge. Incomplete runs compare coarser: gon prefix plus
// how many faces were left over.
struct PatternSignature {
    std::vector<int> gons;
    int start_phase = 0;
    std::vector<int> offsets;
    PeelOutcome outcome = PeelOutcome::Complete;
    int remaining_count = 0;

    auto operator<=>(const PatternSignature&) const = default;
};

PatternSignature signature(const Polyhedron& p, const PeelSequence& seq);

struct PatternClass {
    PatternSignature sig;
    int count = 0;
    PeelSequence representative;  // first run encountered in this class
};

// Partition runs (from one solid, one handedness) by signature. Classes are
// ordered by signature, so the result is independent of run order.
std::vector<PatternClass> pattern_classes(const Polyhedron& p,
                                          const std::vector<PeelSequence>& runs);

struct ClassifyRow {
    std::string name;
    std::string index;
    Family family;
    Verdict verdict;
    int complete = 0;
    int total = 0;
};

struct CatalogClassification {
    std::vector<ClassifyRow> rows;  // catalog order
    // Rows whose verdict differs from the embedded expectations.
    std::vector<std::string> mismatches;
};

// Expected classification-table entry per catalog solid, plus whether the
// solid's skeleton carries a Hamiltonian path.
struct ExpectedRow {
    const char* name;
    Verdict verdict;
    bool hamiltonian;
};

const std::vector<ExpectedRow>& expected_table1();

CatalogClassification classify_catalog(const PeelConfig& cfg = {});

std::string to_csv(const std::vector<ClassifyRow>& rows);
std::string to_json(const std::vector<ClassifyRow>& rows);

}  // namespace peelkit
