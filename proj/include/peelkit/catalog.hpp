#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "peelkit/geometry.hpp"

namespace peelkit {

enum class Family { Platonic, Archimedean, Catalan };

const char* family_name(Family f);

struct SolidRecord {
    std::string name;
    std::string index;   // vertex-configuration bracket string
    Family family;
    bool chiral;
    Polyhedron poly;
};

// The 31 built-in solids: 5 Platonic, 13 Archimedean (unit edge length),
// 13 Catalan (polar duals of the unit-midradius Archimedean partner), in
// classification-table row order. Chiral entries hold the default
// enantiomorph; pass mirrored=true to lookup() for the other one.
const std::vector<SolidRecord>& catalog();

// Accepts a canonical name (case-insensitive) or a bracket index like
// "{5,6,6}" / "[5,6,6]". Throws UnknownSolidError if nothing matches.
struct UnknownSolidError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
SolidRecord lookup(const std::string& name_or_index, bool mirrored = false);

// Catalan partner of an Archimedean name and vice versa.
std::string dual_partner_name(const std::string& name);

// OFF mesh text <-> Polyhedron. Parse errors carry the 1-based line number.
Polyhedron ingest_off(const std::string& text, double tol = kDefaultTolerance);
std::string to_off(const Polyhedron& p);

// JSON document {"vertices": [[x,y,z]...], "faces": [[...]...], "name": "..."}.
Polyhedron ingest_json(const std::string& text, double tol = kDefaultTolerance);
std::string to_json(const Polyhedron& p);

struct CatalogCheck {
    std::string solid;
    std::string check;
    bool pass;
    std::string detail;
};

struct CatalogReport {
    std::vector<CatalogCheck> checks;
    bool all_pass() const;
    int failures() const;
};

// Euler counts for everything, face regularity + uniform vertex
// configuration for Archimedean entries, and combinatorial duality of each
// Catalan entry against its Archimedean partner (via dual construction and
// graph isomorphism).
CatalogReport verify_catalog();

std::ostream& operator<<(std::ostream& os, const CatalogReport& report);

}  // namespace peelkit
