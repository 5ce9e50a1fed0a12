#!/usr/bin/env python3
"""Regenerate src/catalog_data.cpp from published solid coordinates.

Platonic and Archimedean vertex sets come from the standard Cartesian
forms (golden-ratio expressions, signed permutations). The two snub
solids are solved numerically: their vertices are the orbit of a seed
point under the chiral rotation group, with the face twist angle and
radius fitted until every hull edge has unit length. Catalan solids are
polar duals of the unit-midradius Archimedean partner.

Every solid is verified (counts, Euler, edge equality, face regularity,
vertex configuration, midsphere) before anything is written. Run from
the repository root:  python3 scripts/make_solid_tables.py
"""

import itertools
import math
import sys

import numpy as np
from scipy.optimize import minimize
from scipy.spatial import ConvexHull

PHI = (1.0 + math.sqrt(5.0)) / 2.0
OUT_PATH = "src/catalog_data.cpp"


# ---------------------------------------------------------------------------
# vertex set helpers

def signed_perms(base, perms="all", minus_parity=None):
    """All permutations of `base` with sign choices on nonzero entries.

    perms: "all" | "cyclic"
    minus_parity: None (any sign count) | 0 | 1 (parity of minus signs)
    """
    out = set()
    if perms == "all":
        orders = set(itertools.permutations(range(3)))
    else:
        orders = {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
    for order in orders:
        vals = [base[i] for i in order]
        nz = [i for i, v in enumerate(vals) if abs(v) > 1e-14]
        for signs in itertools.product([1, -1], repeat=len(nz)):
            if minus_parity is not None and signs.count(-1) % 2 != minus_parity:
                continue
            v = list(vals)
            for i, s in zip(nz, signs):
                v[i] = s * v[i]
            out.add(tuple(round(x, 14) for x in v))
    return [np.array(v) for v in sorted(out)]


def tetrahedron():
    return [np.array(v, float) for v in
            [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]]


def cube():
    return [np.array(v, float) for v in itertools.product([-1, 1], repeat=3)]


def octahedron():
    return signed_perms((1, 0, 0))


def dodecahedron():
    return (cube()
            + signed_perms((0, 1 / PHI, PHI), perms="cyclic"))


def icosahedron():
    return signed_perms((0, 1, PHI), perms="cyclic")


VERTEX_SETS = {
    "Tetrahedron": tetrahedron,
    "Cube": cube,
    "Octahedron": octahedron,
    "Dodecahedron": dodecahedron,
    "Icosahedron": icosahedron,
    "Truncated Tetrahedron": lambda: signed_perms((3, 1, 1), minus_parity=0),
    "Cuboctahedron": lambda: signed_perms((1, 1, 0)),
    "Truncated Cube": lambda: signed_perms((math.sqrt(2) - 1, 1, 1)),
    "Truncated Octahedron": lambda: signed_perms((0, 1, 2)),
    "Small Rhombicuboctahedron": lambda: signed_perms((1, 1, 1 + math.sqrt(2))),
    "Great Rhombicuboctahedron":
        lambda: signed_perms((1, 1 + math.sqrt(2), 1 + 2 * math.sqrt(2))),
    "Icosidodecahedron":
        lambda: signed_perms((0, 0, PHI), perms="cyclic")
        + signed_perms((0.5, PHI / 2, PHI ** 2 / 2), perms="cyclic"),
    "Truncated Dodecahedron":
        lambda: signed_perms((0, 1 / PHI, 2 + PHI), perms="cyclic")
        + signed_perms((1 / PHI, PHI, 2 * PHI), perms="cyclic")
        + signed_perms((PHI, 2, PHI + 1), perms="cyclic"),
    "Truncated Icosahedron":
        lambda: signed_perms((0, 1, 3 * PHI), perms="cyclic")
        + signed_perms((1, 2 + PHI, 2 * PHI), perms="cyclic")
        + signed_perms((PHI, 2, 2 * PHI + 1), perms="cyclic"),
    "Small Rhombicosidodecahedron":
        lambda: signed_perms((1, 1, PHI ** 3), perms="cyclic")
        + signed_perms((PHI ** 2, PHI, 2 * PHI), perms="cyclic")
        + signed_perms((2 + PHI, 0, PHI ** 2), perms="cyclic"),
    "Great Rhombicosidodecahedron":
        lambda: signed_perms((1 / PHI, 1 / PHI, 3 + PHI), perms="cyclic")
        + signed_perms((2 / PHI, PHI, 1 + 2 * PHI), perms="cyclic")
        + signed_perms((1 / PHI, PHI ** 2, 3 * PHI - 1), perms="cyclic")
        + signed_perms((2 * PHI - 1, 2, 2 + PHI), perms="cyclic")
        + signed_perms((PHI, 3, 2 * PHI), perms="cyclic"),
}


# ---------------------------------------------------------------------------
# snub solids: orbit of a seed corner under the chiral rotation group

def orthonormalize(m):
    u, _, vt = np.linalg.svd(m)
    return u @ vt


def rotation(axis, angle):
    axis = np.asarray(axis, float)
    axis = axis / np.linalg.norm(axis)
    c, s = math.cos(angle), math.sin(angle)
    x, y, z = axis
    k = np.array([[0, -z, y], [z, 0, -x], [-y, x, 0]])
    return np.eye(3) + s * k + (1 - c) * (k @ k)


def closure(generators, expect):
    mats = {tuple(np.round(np.eye(3), 9).ravel()): np.eye(3)}
    frontier = [np.eye(3)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                p = orthonormalize(g @ m)
                key = tuple(np.round(p, 9).ravel())
                if key not in mats:
                    mats[key] = p
                    nxt.append(p)
        frontier = nxt
    assert len(mats) == expect, f"group closure gave {len(mats)}, want {expect}"
    return list(mats.values())


def chiral_octahedral():
    gens = [rotation((0, 0, 1), math.pi / 2), rotation((1, 1, 1), 2 * math.pi / 3)]
    return closure(gens, 24)


def chiral_icosahedral():
    gens = [rotation((0, 1, PHI), 2 * math.pi / 5), rotation((0, 0, 1), math.pi)]
    return closure(gens, 60)


def orbit(point, group):
    pts = {}
    for g in group:
        q = g @ point
        pts.setdefault(tuple(np.round(q, 7)), q)
    return list(pts.values())


def snub_seed_objective(group, axis, corner_radius, nverts, nedges):
    axis = axis / np.linalg.norm(axis)
    e1 = np.cross(axis, [0.41, 0.11, 0.87])
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(axis, e1)

    def build(params):
        dist, theta = params
        seed = (dist * axis
                + corner_radius * (math.cos(theta) * e1
                                   + math.sin(theta) * e2))
        return orbit(seed, group)

    def cost(params):
        pts = np.array(build(params))
        if len(pts) != nverts:
            return 1e9
        hull = ConvexHull(pts)
        seen = set()
        for simplex in hull.simplices:
            for a, b in itertools.combinations(simplex, 2):
                seen.add((min(a, b), max(a, b)))
        lens = sorted(np.linalg.norm(pts[a] - pts[b]) for a, b in seen)
        # the true edges are the nedges shortest; the rest are diagonals
        # from triangulating the square/pentagon faces
        return sum((d - 1.0) ** 2 for d in lens[:nedges])

    return build, cost


def solve_snub(group, axis, gon, nverts, nedges, dist0):
    corner_radius = 1.0 / (2.0 * math.sin(math.pi / gon))
    build, cost = snub_seed_objective(group, axis, corner_radius,
                                      nverts, nedges)
    best = None
    for dist in np.linspace(dist0 - 0.12, dist0 + 0.12, 7):
        for theta in np.linspace(0.02, 2 * math.pi / gon, 25):
            c = cost([dist, theta])
            if best is None or c < best[0]:
                best = (c, [dist, theta])
    res = minimize(cost, best[1], method="Nelder-Mead",
                   options={"xatol": 1e-14, "fatol": 1e-28, "maxiter": 20000,
                            "maxfev": 20000})
    assert res.fun < 1e-20, f"snub fit failed: residual {res.fun}"
    return build(res.x)


# ---------------------------------------------------------------------------
# hull -> cyclically ordered faces

def faces_from_hull(verts):
    pts = np.array(verts)
    hull = ConvexHull(pts)
    groups = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 6))
        groups.setdefault(key, set()).update(simplex)
    # merge keys that round apart but describe the same plane
    keys = list(groups)
    merged = []
    used = [False] * len(keys)
    for i, ki in enumerate(keys):
        if used[i]:
            continue
        members = set(groups[ki])
        for j in range(i + 1, len(keys)):
            if used[j]:
                continue
            if np.linalg.norm(np.array(ki) - np.array(keys[j])) < 1e-5:
                members |= groups[keys[j]]
                used[j] = True
        used[i] = True
        merged.append((np.array(ki[:3]), members))

    faces = []
    for normal, members in merged:
        ids = sorted(members)
        center = pts[ids].mean(axis=0)
        b1 = pts[ids[0]] - center
        b1 -= normal * (b1 @ normal)
        b1 /= np.linalg.norm(b1)
        b2 = np.cross(normal, b1)
        ang = [math.atan2((pts[i] - center) @ b2, (pts[i] - center) @ b1)
               for i in ids]
        cycle = [i for _, i in sorted(zip(ang, ids))]
        # outward normal (qhull equations point outward); make cycle CCW
        a, b, c = (pts[cycle[0]], pts[cycle[1]], pts[cycle[2]])
        if np.cross(b - a, c - a) @ normal < 0:
            cycle.reverse()
        k = cycle.index(min(cycle))
        faces.append(cycle[k:] + cycle[:k])
    faces.sort(key=lambda f: tuple(np.round(pts[f].mean(axis=0), 6)))
    return faces


# ---------------------------------------------------------------------------
# verification

def edge_set(faces):
    edges = set()
    for f in faces:
        for i in range(len(f)):
            a, b = f[i], f[(i + 1) % len(f)]
            edges.add((min(a, b), max(a, b)))
    return edges


def vertex_config(verts, faces, v):
    """Cyclic gon sequence of the faces around vertex v."""
    incident = [i for i, f in enumerate(faces) if v in f]
    bag = {}
    for i in incident:
        f = faces[i]
        k = f.index(v)
        nxt = f[(k + 1) % len(f)]
        bag[(v, nxt)] = i
    # walk around the vertex via shared edges
    order = []
    face = incident[0]
    for _ in incident:
        order.append(len(faces[face]))
        f = faces[face]
        k = f.index(v)
        prev = f[(k - 1) % len(f)]
        face = bag[(v, prev)]
    return order


def canonical_cycle(seq):
    cands = []
    for s in (seq, seq[::-1]):
        for r in range(len(s)):
            cands.append(tuple(s[r:] + s[:r]))
    return min(cands)


def verify(name, verts, faces, m, l, n, regular, tol=1e-9):
    pts = np.array(verts)
    assert len(pts) == m, f"{name}: {len(pts)} vertices, want {m}"
    assert len(faces) == n, f"{name}: {len(faces)} faces, want {n}"
    edges = edge_set(faces)
    assert len(edges) == l, f"{name}: {len(edges)} edges, want {l}"
    assert m - l + n == 2, f"{name}: Euler violated"
    lens = [np.linalg.norm(pts[a] - pts[b]) for a, b in edges]
    if regular:
        assert max(lens) - min(lens) < tol, \
            f"{name}: edge spread {max(lens) - min(lens):.2e}"
        for f in faces:
            c = pts[f].mean(axis=0)
            rad = [np.linalg.norm(pts[v] - c) for v in f]
            assert max(rad) - min(rad) < 1e-6, f"{name}: irregular face"
        configs = {canonical_cycle(vertex_config(verts, faces, v))
                   for v in range(m)}
        assert len(configs) == 1, f"{name}: vertex configs differ: {configs}"
    # faces planar
    for f in faces:
        c = pts[f].mean(axis=0)
        nrm = np.zeros(3)
        for i in range(len(f)):
            a, b = pts[f[i]], pts[f[(i + 1) % len(f)]]
            nrm += np.cross(a - c, b - c)
        nrm /= np.linalg.norm(nrm)
        dev = max(abs((pts[v] - c) @ nrm) for v in f)
        assert dev < 1e-7, f"{name}: non-planar face ({dev:.2e})"
    return max(lens) - min(lens)


def scale_to_unit_edge(verts, faces):
    pts = np.array(verts)
    lens = [np.linalg.norm(pts[a] - pts[b]) for a, b in edge_set(faces)]
    return pts / np.mean(lens)


def midradius(pts, faces):
    """Distance from the origin to every edge line; must be uniform."""
    dists = []
    for a, b in edge_set(faces):
        p, q = pts[a], pts[b]
        d = q - p
        t = -(p @ d) / (d @ d)
        dists.append(np.linalg.norm(p + t * d))
    spread = max(dists) - min(dists)
    assert spread < 1e-7, f"midradius spread {spread:.2e}"
    return np.mean(dists)


# ---------------------------------------------------------------------------
# polar dual (Catalan construction)

def face_plane(pts, face):
    c = pts[face].mean(axis=0)
    nrm = np.zeros(3)
    for i in range(len(face)):
        a, b = pts[face[i]], pts[face[(i + 1) % len(face)]]
        nrm += np.cross(a - c, b - c)
    nrm /= np.linalg.norm(nrm)
    return nrm, c @ nrm


def faces_around_vertices(faces, m):
    """For each vertex, incident faces in cyclic order."""
    across = {}
    for i, f in enumerate(faces):
        for k in range(len(f)):
            across[(f[k], f[(k + 1) % len(f)])] = i
    rings = []
    for v in range(m):
        incident = [i for i, f in enumerate(faces) if v in f]
        ring = []
        face = incident[0]
        for _ in incident:
            ring.append(face)
            f = faces[face]
            k = f.index(v)
            # neighbor across edge {v, prev} holds the reversed directed edge
            face = across[(v, f[(k - 1) % len(f)])]
        assert face == ring[0] and len(ring) == len(incident)
        rings.append(ring)
    return rings


def polar_dual(verts, faces):
    pts = np.array(verts)
    rho = midradius(pts, faces)
    pts = pts / rho
    dual_verts = []
    for f in faces:
        nrm, off = face_plane(pts, f)
        assert off > 0
        dual_verts.append(nrm / off)
    dual_pts = np.array(dual_verts)
    dual_faces = []
    for ring in faces_around_vertices(faces, len(pts)):
        a, b, c = dual_pts[ring[0]], dual_pts[ring[1]], dual_pts[ring[2]]
        cyc = list(ring)
        if np.cross(b - a, c - a) @ (a + b + c) < 0:
            cyc.reverse()
        k = cyc.index(min(cyc))
        dual_faces.append(cyc[k:] + cyc[:k])
    dual_faces.sort(key=lambda f: tuple(np.round(dual_pts[f].mean(axis=0), 6)))
    return dual_pts, dual_faces


# ---------------------------------------------------------------------------
# catalog description

PLATONIC = [
    ("Tetrahedron", "{3,3,3}", 4, 6, 4),
    ("Cube", "{4,4,4}", 8, 12, 6),
    ("Octahedron", "{3,3,3,3}", 6, 12, 8),
    ("Dodecahedron", "{5,5,5}", 20, 30, 12),
    ("Icosahedron", "{3,3,3,3,3}", 12, 30, 20),
]

ARCHIMEDEAN = [
    ("Truncated Tetrahedron", "{3,6,6}", 12, 18, 8, "Triakis Tetrahedron"),
    ("Cuboctahedron", "{3,4,3,4}", 12, 24, 14, "Rhombic Dodecahedron"),
    ("Truncated Cube", "{3,8,8}", 24, 36, 14, "Triakis Octahedron"),
    ("Truncated Octahedron", "{4,6,6}", 24, 36, 14, "Tetrakis Hexahedron"),
    ("Small Rhombicuboctahedron", "{3,4,4,4}", 24, 48, 26,
     "Deltoidal Icositetrahedron"),
    ("Great Rhombicuboctahedron", "{4,6,8}", 48, 72, 26,
     "Disdyakis Dodecahedron"),
    ("Snub Cube", "{3,3,3,3,4}", 24, 60, 38, "Pentagonal Icositetrahedron"),
    ("Icosidodecahedron", "{3,5,3,5}", 30, 60, 32, "Rhombic Triacontahedron"),
    ("Truncated Dodecahedron", "{3,10,10}", 60, 90, 32, "Triakis Icosahedron"),
    ("Truncated Icosahedron", "{5,6,6}", 60, 90, 32, "Pentakis Dodecahedron"),
    ("Small Rhombicosidodecahedron", "{3,4,5,4}", 60, 120, 62,
     "Deltoidal Hexecontahedron"),
    ("Great Rhombicosidodecahedron", "{4,6,10}", 120, 180, 62,
     "Disdyakis Triacontahedron"),
    ("Snub Dodecahedron", "{3,3,3,3,5}", 60, 150, 92,
     "Pentagonal Hexecontahedron"),
]

CHIRAL = {"Snub Cube", "Snub Dodecahedron",
          "Pentagonal Icositetrahedron", "Pentagonal Hexecontahedron"}


def build_all():
    records = []

    def add(name, index, family, verts, faces):
        records.append(dict(name=name, index=index, family=family,
                            chiral=name in CHIRAL,
                            verts=np.asarray(verts), faces=faces))

    for name, index, m, l, n in PLATONIC:
        verts = VERTEX_SETS[name]()
        faces = faces_from_hull(verts)
        verify(name, verts, faces, m, l, n, regular=True, tol=1e-9)
        pts = scale_to_unit_edge(verts, faces)
        add(name, index, "Platonic", pts, faces)
        print(f"  {name:34s} m={m:3d} l={l:3d} n={n:3d}")

    for name, index, m, l, n, dual_name in ARCHIMEDEAN:
        if name == "Snub Cube":
            verts = solve_snub(chiral_octahedral(), np.array([0.0, 0.0, 1.0]),
                               4, 24, 60, 1.14)
        elif name == "Snub Dodecahedron":
            verts = solve_snub(chiral_icosahedral(), np.array([0.0, 1.0, PHI]),
                               5, 60, 150, 1.98)
        else:
            verts = VERTEX_SETS[name]()
        faces = faces_from_hull(verts)
        tol = 1e-9 if name not in ("Snub Cube", "Snub Dodecahedron") else 1e-8
        verify(name, verts, faces, m, l, n, regular=True, tol=tol)
        pts = scale_to_unit_edge(verts, faces)
        add(name, index, "Archimedean", pts, faces)
        print(f"  {name:34s} m={m:3d} l={l:3d} n={n:3d}")

        dual_pts, dual_faces = polar_dual(pts, faces)
        dual_index = index.replace("{", "[").replace("}", "]")
        verify(dual_name, dual_pts, dual_faces, n, l, m, regular=False)
        add(dual_name, dual_index, "Catalan", dual_pts, dual_faces)
        print(f"  {dual_name:34s} m={n:3d} l={l:3d} n={m:3d}  (dual)")

    return records


# ---------------------------------------------------------------------------
# emission

HEADER = """\
// Embedded geometry tables for the built-in solid catalog.
//
// GENERATED by scripts/make_solid_tables.py -- do not edit by hand.
// Platonic and Archimedean solids use the standard published Cartesian
// coordinates scaled to unit edge length; the snub solids are fitted
// numerically; Catalan solids are polar duals of the unit-midradius
// Archimedean partner.

#include "peelkit/catalog_data.hpp"

namespace peelkit::detail {
namespace {
"""

FOOTER = """\
}  // namespace

const RawSolid* raw_solids() { return kSolids; }
int raw_solid_count() { return %d; }

}  // namespace peelkit::detail
"""


def cxx_ident(name):
    return "".join(ch for ch in name.title() if ch.isalpha())


def emit(records, path):
    chunks = [HEADER]
    for rec in records:
        ident = cxx_ident(rec["name"])
        vs = rec["verts"]
        chunks.append(f"const double k{ident}Verts[] = {{\n")
        for v in vs:
            chunks.append(f"    {v[0]:.17g}, {v[1]:.17g}, {v[2]:.17g},\n")
        chunks.append("};\n")
        chunks.append(f"const int k{ident}Faces[] = {{\n")
        for f in rec["faces"]:
            chunks.append("    " + ", ".join(str(x) for x in [len(f)] + f)
                          + ",\n")
        chunks.append("};\n\n")
    chunks.append("const RawSolid kSolids[] = {\n")
    for rec in records:
        ident = cxx_ident(rec["name"])
        nface_ints = sum(len(f) + 1 for f in rec["faces"])
        chunks.append(
            '    {"%s", "%s", "%s", %s,\n     k%sVerts, %d, k%sFaces, %d},\n'
            % (rec["name"], rec["index"], rec["family"],
               "true" if rec["chiral"] else "false",
               ident, len(rec["verts"]), ident, nface_ints))
    chunks.append("};\n")
    chunks.append(FOOTER % len(records))
    with open(path, "w") as fh:
        fh.write("".join(chunks))
    print(f"wrote {path}")


def main():
    print("building solids...")
    records = build_all()
    assert len(records) == 31
    emit(records, OUT_PATH)


if __name__ == "__main__":
    sys.exit(main())
