#pragma once

namespace peelkit::detail {

// Flat geometry tables emitted by scripts/make_solid_tables.py.
// faces is a run-length stream: k, v_1..v_k, k, v_1..v_k, ...
struct RawSolid {
    const char* name;
    const char* index;   // bracket notation, {..} Archimedean, [..] Catalan
    const char* family;  // "Platonic" | "Archimedean" | "Catalan"
    bool chiral;
    const double* verts;
    int vert_count;
    const int* faces;
    int face_ints;
};

const RawSolid* raw_solids();
int raw_solid_count();

}  // namespace peelkit::detail
