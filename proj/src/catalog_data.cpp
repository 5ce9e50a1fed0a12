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
const double kTetrahedronVerts[] = {
    0.35355339059327373, 0.35355339059327373, 0.35355339059327373,
    0.35355339059327373, -0.35355339059327373, -0.35355339059327373,
    -0.35355339059327373, 0.35355339059327373, -0.35355339059327373,
    -0.35355339059327373, -0.35355339059327373, 0.35355339059327373,
};
const int kTetrahedronFaces[] = {
    3, 1, 3, 2,
    3, 0, 2, 3,
    3, 0, 3, 1,
    3, 0, 1, 2,
};

const double kCubeVerts[] = {
    -0.5, -0.5, -0.5,
    -0.5, -0.5, 0.5,
    -0.5, 0.5, -0.5,
    -0.5, 0.5, 0.5,
    0.5, -0.5, -0.5,
    0.5, -0.5, 0.5,
    0.5, 0.5, -0.5,
    0.5, 0.5, 0.5,
};
const int kCubeFaces[] = {
    4, 0, 1, 3, 2,
    4, 0, 4, 5, 1,
    4, 0, 2, 6, 4,
    4, 1, 5, 7, 3,
    4, 2, 3, 7, 6,
    4, 4, 6, 7, 5,
};

const double kOctahedronVerts[] = {
    -0.70710678118654746, 0, 0,
    0, -0.70710678118654746, 0,
    0, 0, -0.70710678118654746,
    0, 0, 0.70710678118654746,
    0, 0.70710678118654746, 0,
    0.70710678118654746, 0, 0,
};
const int kOctahedronFaces[] = {
    3, 0, 2, 1,
    3, 0, 1, 3,
    3, 0, 4, 2,
    3, 0, 3, 4,
    3, 1, 2, 5,
    3, 1, 5, 3,
    3, 2, 4, 5,
    3, 3, 5, 4,
};

const double kDodecahedronVerts[] = {
    -0.80901699437494934, -0.80901699437494934, -0.80901699437494934,
    -0.80901699437494934, -0.80901699437494934, 0.80901699437494934,
    -0.80901699437494934, 0.80901699437494934, -0.80901699437494934,
    -0.80901699437494934, 0.80901699437494934, 0.80901699437494934,
    0.80901699437494934, -0.80901699437494934, -0.80901699437494934,
    0.80901699437494934, -0.80901699437494934, 0.80901699437494934,
    0.80901699437494934, 0.80901699437494934, -0.80901699437494934,
    0.80901699437494934, 0.80901699437494934, 0.80901699437494934,
    -1.3090169943749468, 0, -0.49999999999999728,
    -1.3090169943749468, 0, 0.49999999999999728,
    -0.49999999999999728, -1.3090169943749468, 0,
    -0.49999999999999728, 1.3090169943749468, 0,
    0, -0.49999999999999728, -1.3090169943749468,
    0, -0.49999999999999728, 1.3090169943749468,
    0, 0.49999999999999728, -1.3090169943749468,
    0, 0.49999999999999728, 1.3090169943749468,
    0.49999999999999728, -1.3090169943749468, 0,
    0.49999999999999728, 1.3090169943749468, 0,
    1.3090169943749468, 0, -0.49999999999999728,
    1.3090169943749468, 0, 0.49999999999999728,
};
const int kDodecahedronFaces[] = {
    5, 0, 10, 1, 9, 8,
    5, 2, 8, 9, 3, 11,
    5, 0, 8, 2, 14, 12,
    5, 1, 13, 15, 3, 9,
    5, 0, 12, 4, 16, 10,
    5, 1, 10, 16, 5, 13,
    5, 2, 11, 17, 6, 14,
    5, 3, 15, 7, 17, 11,
    5, 4, 12, 14, 6, 18,
    5, 5, 19, 7, 15, 13,
    5, 4, 18, 19, 5, 16,
    5, 6, 17, 7, 19, 18,
};

const double kIcosahedronVerts[] = {
    -0.8090169943749469, 0, -0.50000000000000122,
    -0.8090169943749469, 0, 0.50000000000000122,
    -0.50000000000000122, -0.8090169943749469, 0,
    -0.50000000000000122, 0.8090169943749469, 0,
    0, -0.50000000000000122, -0.8090169943749469,
    0, -0.50000000000000122, 0.8090169943749469,
    0, 0.50000000000000122, -0.8090169943749469,
    0, 0.50000000000000122, 0.8090169943749469,
    0.50000000000000122, -0.8090169943749469, 0,
    0.50000000000000122, 0.8090169943749469, 0,
    0.8090169943749469, 0, -0.50000000000000122,
    0.8090169943749469, 0, 0.50000000000000122,
};
const int kIcosahedronFaces[] = {
    3, 0, 2, 1,
    3, 0, 1, 3,
    3, 0, 4, 2,
    3, 1, 2, 5,
    3, 0, 3, 6,
    3, 1, 7, 3,
    3, 0, 6, 4,
    3, 1, 5, 7,
    3, 2, 4, 8,
    3, 2, 8, 5,
    3, 3, 9, 6,
    3, 3, 7, 9,
    3, 4, 6, 10,
    3, 5, 11, 7,
    3, 4, 10, 8,
    3, 5, 8, 11,
    3, 6, 9, 10,
    3, 7, 11, 9,
    3, 8, 10, 11,
    3, 9, 11, 10,
};

const double kTruncatedTetrahedronVerts[] = {
    -1.0606601717798212, -0.35355339059327373, 0.35355339059327373,
    -1.0606601717798212, 0.35355339059327373, -0.35355339059327373,
    -0.35355339059327373, -1.0606601717798212, 0.35355339059327373,
    -0.35355339059327373, -0.35355339059327373, 1.0606601717798212,
    -0.35355339059327373, 0.35355339059327373, -1.0606601717798212,
    -0.35355339059327373, 1.0606601717798212, -0.35355339059327373,
    0.35355339059327373, -1.0606601717798212, -0.35355339059327373,
    0.35355339059327373, -0.35355339059327373, -1.0606601717798212,
    0.35355339059327373, 0.35355339059327373, 1.0606601717798212,
    0.35355339059327373, 1.0606601717798212, 0.35355339059327373,
    1.0606601717798212, -0.35355339059327373, -0.35355339059327373,
    1.0606601717798212, 0.35355339059327373, 0.35355339059327373,
};
const int kTruncatedTetrahedronFaces[] = {
    3, 0, 2, 3,
    3, 1, 5, 4,
    6, 0, 1, 4, 7, 6, 2,
    6, 0, 3, 8, 9, 5, 1,
    6, 2, 6, 10, 11, 8, 3,
    6, 4, 5, 9, 11, 10, 7,
    3, 6, 7, 10,
    3, 8, 11, 9,
};

const double kTriakisTetrahedronVerts[] = {
    -0.6000000000000002, -0.60000000000000009, 0.6000000000000002,
    -0.6000000000000002, 0.60000000000000009, -0.6000000000000002,
    -1.0000000000000002, -1, -1.0000000000000002,
    -1.0000000000000002, 1.0000000000000002, 1.0000000000000002,
    1.0000000000000002, -1.0000000000000002, 1,
    1.0000000000000002, 1.0000000000000002, -1.0000000000000002,
    0.60000000000000009, -0.60000000000000009, -0.59999999999999998,
    0.60000000000000009, 0.6000000000000002, 0.6000000000000002,
};
const int kTriakisTetrahedronFaces[] = {
    3, 0, 3, 2,
    3, 1, 2, 3,
    3, 0, 2, 4,
    3, 0, 4, 3,
    3, 1, 5, 2,
    3, 1, 3, 5,
    3, 2, 6, 4,
    3, 2, 5, 6,
    3, 3, 4, 7,
    3, 3, 7, 5,
    3, 4, 6, 5,
    3, 4, 5, 7,
};

const double kCuboctahedronVerts[] = {
    -0.70710678118654746, -0.70710678118654746, 0,
    -0.70710678118654746, 0, -0.70710678118654746,
    -0.70710678118654746, 0, 0.70710678118654746,
    -0.70710678118654746, 0.70710678118654746, 0,
    0, -0.70710678118654746, -0.70710678118654746,
    0, -0.70710678118654746, 0.70710678118654746,
    0, 0.70710678118654746, -0.70710678118654746,
    0, 0.70710678118654746, 0.70710678118654746,
    0.70710678118654746, -0.70710678118654746, 0,
    0.70710678118654746, 0, -0.70710678118654746,
    0.70710678118654746, 0, 0.70710678118654746,
    0.70710678118654746, 0.70710678118654746, 0,
};
const int kCuboctahedronFaces[] = {
    4, 0, 2, 3, 1,
    3, 0, 1, 4,
    3, 0, 5, 2,
    3, 1, 3, 6,
    3, 2, 7, 3,
    4, 0, 4, 8, 5,
    4, 1, 6, 9, 4,
    4, 2, 5, 10, 7,
    4, 3, 7, 11, 6,
    3, 4, 9, 8,
    3, 5, 8, 10,
    3, 6, 11, 9,
    3, 7, 10, 11,
    4, 8, 9, 11, 10,
};

const double kRhombicDodecahedronVerts[] = {
    -1.2247448713915892, 0, 0,
    -0.61237243569579469, -0.61237243569579469, -0.61237243569579469,
    -0.61237243569579469, -0.61237243569579469, 0.61237243569579469,
    -0.61237243569579469, 0.61237243569579469, -0.61237243569579469,
    -0.61237243569579469, 0.61237243569579469, 0.61237243569579469,
    0, -1.2247448713915892, 0,
    0, 0, -1.2247448713915892,
    0, 0, 1.2247448713915892,
    0, 1.2247448713915892, 0,
    0.61237243569579469, -0.61237243569579469, -0.61237243569579469,
    0.61237243569579469, -0.61237243569579469, 0.61237243569579469,
    0.61237243569579469, 0.61237243569579469, -0.61237243569579469,
    0.61237243569579469, 0.61237243569579469, 0.61237243569579469,
    1.2247448713915892, 0, 0,
};
const int kRhombicDodecahedronFaces[] = {
    4, 0, 1, 5, 2,
    4, 0, 3, 6, 1,
    4, 0, 2, 7, 4,
    4, 0, 4, 8, 3,
    4, 1, 6, 9, 5,
    4, 2, 5, 10, 7,
    4, 3, 8, 11, 6,
    4, 4, 7, 12, 8,
    4, 5, 9, 13, 10,
    4, 6, 11, 13, 9,
    4, 7, 10, 13, 12,
    4, 8, 12, 13, 11,
};

const double kTruncatedCubeVerts[] = {
    -1.2071067811865497, -1.2071067811865497, -0.50000000000000688,
    -1.2071067811865497, -1.2071067811865497, 0.50000000000000688,
    -1.2071067811865497, -0.50000000000000688, -1.2071067811865497,
    -1.2071067811865497, -0.50000000000000688, 1.2071067811865497,
    -1.2071067811865497, 0.50000000000000688, -1.2071067811865497,
    -1.2071067811865497, 0.50000000000000688, 1.2071067811865497,
    -1.2071067811865497, 1.2071067811865497, -0.50000000000000688,
    -1.2071067811865497, 1.2071067811865497, 0.50000000000000688,
    -0.50000000000000688, -1.2071067811865497, -1.2071067811865497,
    -0.50000000000000688, -1.2071067811865497, 1.2071067811865497,
    -0.50000000000000688, 1.2071067811865497, -1.2071067811865497,
    -0.50000000000000688, 1.2071067811865497, 1.2071067811865497,
    0.50000000000000688, -1.2071067811865497, -1.2071067811865497,
    0.50000000000000688, -1.2071067811865497, 1.2071067811865497,
    0.50000000000000688, 1.2071067811865497, -1.2071067811865497,
    0.50000000000000688, 1.2071067811865497, 1.2071067811865497,
    1.2071067811865497, -1.2071067811865497, -0.50000000000000688,
    1.2071067811865497, -1.2071067811865497, 0.50000000000000688,
    1.2071067811865497, -0.50000000000000688, -1.2071067811865497,
    1.2071067811865497, -0.50000000000000688, 1.2071067811865497,
    1.2071067811865497, 0.50000000000000688, -1.2071067811865497,
    1.2071067811865497, 0.50000000000000688, 1.2071067811865497,
    1.2071067811865497, 1.2071067811865497, -0.50000000000000688,
    1.2071067811865497, 1.2071067811865497, 0.50000000000000688,
};
const int kTruncatedCubeFaces[] = {
    8, 0, 1, 3, 5, 7, 6, 4, 2,
    3, 0, 2, 8,
    3, 1, 9, 3,
    3, 4, 6, 10,
    3, 5, 11, 7,
    8, 0, 8, 12, 16, 17, 13, 9, 1,
    8, 2, 4, 10, 14, 20, 18, 12, 8,
    8, 3, 9, 13, 19, 21, 15, 11, 5,
    8, 6, 7, 11, 15, 23, 22, 14, 10,
    3, 12, 18, 16,
    3, 13, 17, 19,
    3, 14, 22, 20,
    3, 15, 21, 23,
    8, 16, 18, 20, 22, 23, 21, 19, 17,
};

const double kTriakisOctahedronVerts[] = {
    -1.4142135623730965, 5.2604289090458896e-33, -5.2604289090458896e-33,
    -0.58578643762690463, -0.58578643762690452, -0.58578643762690452,
    -0.58578643762690452, -0.58578643762690463, 0.58578643762690452,
    -0.58578643762690463, 0.58578643762690452, -0.58578643762690452,
    -0.58578643762690441, 0.58578643762690441, 0.58578643762690452,
    -5.2604289090458896e-33, -1.4142135623730965, 5.2604289090458896e-33,
    5.2604289090458896e-33, -5.2604289090458896e-33, -1.4142135623730965,
    -5.2604289090458896e-33, 5.2604289090458896e-33, 1.4142135623730965,
    5.2604289090458896e-33, 1.4142135623730965, -5.2604289090458896e-33,
    0.58578643762690441, -0.58578643762690441, -0.58578643762690452,
    0.58578643762690452, -0.58578643762690463, 0.58578643762690452,
    0.58578643762690452, 0.58578643762690463, -0.58578643762690452,
    0.58578643762690441, 0.58578643762690441, 0.58578643762690452,
    1.4142135623730965, -5.2604289090458896e-33, 5.2604289090458896e-33,
};
const int kTriakisOctahedronFaces[] = {
    3, 0, 1, 5,
    3, 0, 5, 2,
    3, 0, 6, 1,
    3, 0, 2, 7,
    3, 0, 3, 6,
    3, 0, 7, 4,
    3, 0, 8, 3,
    3, 0, 4, 8,
    3, 1, 6, 5,
    3, 2, 5, 7,
    3, 3, 8, 6,
    3, 4, 7, 8,
    3, 5, 6, 9,
    3, 5, 10, 7,
    3, 6, 8, 11,
    3, 7, 12, 8,
    3, 5, 9, 13,
    3, 5, 13, 10,
    3, 6, 13, 9,
    3, 7, 10, 13,
    3, 6, 11, 13,
    3, 7, 13, 12,
    3, 8, 13, 11,
    3, 8, 12, 13,
};

const double kTruncatedOctahedronVerts[] = {
    -1.4142135623730951, -0.70710678118654757, 0,
    -1.4142135623730951, 0, -0.70710678118654757,
    -1.4142135623730951, 0, 0.70710678118654757,
    -1.4142135623730951, 0.70710678118654757, 0,
    -0.70710678118654757, -1.4142135623730951, 0,
    -0.70710678118654757, 0, -1.4142135623730951,
    -0.70710678118654757, 0, 1.4142135623730951,
    -0.70710678118654757, 1.4142135623730951, 0,
    0, -1.4142135623730951, -0.70710678118654757,
    0, -1.4142135623730951, 0.70710678118654757,
    0, -0.70710678118654757, -1.4142135623730951,
    0, -0.70710678118654757, 1.4142135623730951,
    0, 0.70710678118654757, -1.4142135623730951,
    0, 0.70710678118654757, 1.4142135623730951,
    0, 1.4142135623730951, -0.70710678118654757,
    0, 1.4142135623730951, 0.70710678118654757,
    0.70710678118654757, -1.4142135623730951, 0,
    0.70710678118654757, 0, -1.4142135623730951,
    0.70710678118654757, 0, 1.4142135623730951,
    0.70710678118654757, 1.4142135623730951, 0,
    1.4142135623730951, -0.70710678118654757, 0,
    1.4142135623730951, 0, -0.70710678118654757,
    1.4142135623730951, 0, 0.70710678118654757,
    1.4142135623730951, 0.70710678118654757, 0,
};
const int kTruncatedOctahedronFaces[] = {
    4, 0, 2, 3, 1,
    6, 0, 1, 5, 10, 8, 4,
    6, 0, 4, 9, 11, 6, 2,
    6, 1, 3, 7, 14, 12, 5,
    6, 2, 6, 13, 15, 7, 3,
    4, 4, 8, 16, 9,
    4, 5, 12, 17, 10,
    4, 6, 11, 18, 13,
    4, 7, 15, 19, 14,
    6, 8, 10, 17, 21, 20, 16,
    6, 9, 16, 20, 22, 18, 11,
    6, 12, 14, 19, 23, 21, 17,
    6, 13, 18, 22, 23, 19, 15,
    4, 20, 21, 23, 22,
};

const double kTetrakisHexahedronVerts[] = {
    -1.0606601717798214, 0, 0,
    -0.70710678118654757, -0.70710678118654757, -0.70710678118654757,
    -0.70710678118654757, -0.70710678118654757, 0.70710678118654757,
    -0.70710678118654757, 0.70710678118654757, -0.70710678118654757,
    -0.70710678118654757, 0.70710678118654757, 0.70710678118654757,
    0, -1.0606601717798214, 0,
    0, 0, -1.0606601717798214,
    0, 0, 1.0606601717798214,
    0, 1.0606601717798214, 0,
    0.70710678118654757, -0.70710678118654757, -0.70710678118654757,
    0.70710678118654757, -0.70710678118654757, 0.70710678118654757,
    0.70710678118654757, 0.70710678118654757, -0.70710678118654757,
    0.70710678118654757, 0.70710678118654757, 0.70710678118654757,
    1.0606601717798214, 0, 0,
};
const int kTetrakisHexahedronFaces[] = {
    3, 0, 1, 2,
    3, 0, 3, 1,
    3, 0, 2, 4,
    3, 0, 4, 3,
    3, 1, 5, 2,
    3, 1, 3, 6,
    3, 2, 7, 4,
    3, 3, 4, 8,
    3, 1, 9, 5,
    3, 2, 5, 10,
    3, 1, 6, 9,
    3, 2, 10, 7,
    3, 3, 11, 6,
    3, 4, 7, 12,
    3, 3, 8, 11,
    3, 4, 12, 8,
    3, 5, 9, 10,
    3, 6, 11, 9,
    3, 7, 10, 12,
    3, 8, 12, 11,
    3, 9, 13, 10,
    3, 9, 11, 13,
    3, 10, 13, 12,
    3, 11, 12, 13,
};

const double kSmallRhombicuboctahedronVerts[] = {
    -1.2071067811865472, -0.50000000000000089, -0.50000000000000089,
    -1.2071067811865472, -0.50000000000000089, 0.50000000000000089,
    -1.2071067811865472, 0.50000000000000089, -0.50000000000000089,
    -1.2071067811865472, 0.50000000000000089, 0.50000000000000089,
    -0.50000000000000089, -1.2071067811865472, -0.50000000000000089,
    -0.50000000000000089, -1.2071067811865472, 0.50000000000000089,
    -0.50000000000000089, -0.50000000000000089, -1.2071067811865472,
    -0.50000000000000089, -0.50000000000000089, 1.2071067811865472,
    -0.50000000000000089, 0.50000000000000089, -1.2071067811865472,
    -0.50000000000000089, 0.50000000000000089, 1.2071067811865472,
    -0.50000000000000089, 1.2071067811865472, -0.50000000000000089,
    -0.50000000000000089, 1.2071067811865472, 0.50000000000000089,
    0.50000000000000089, -1.2071067811865472, -0.50000000000000089,
    0.50000000000000089, -1.2071067811865472, 0.50000000000000089,
    0.50000000000000089, -0.50000000000000089, -1.2071067811865472,
    0.50000000000000089, -0.50000000000000089, 1.2071067811865472,
    0.50000000000000089, 0.50000000000000089, -1.2071067811865472,
    0.50000000000000089, 0.50000000000000089, 1.2071067811865472,
    0.50000000000000089, 1.2071067811865472, -0.50000000000000089,
    0.50000000000000089, 1.2071067811865472, 0.50000000000000089,
    1.2071067811865472, -0.50000000000000089, -0.50000000000000089,
    1.2071067811865472, -0.50000000000000089, 0.50000000000000089,
    1.2071067811865472, 0.50000000000000089, -0.50000000000000089,
    1.2071067811865472, 0.50000000000000089, 0.50000000000000089,
};
const int kSmallRhombicuboctahedronFaces[] = {
    4, 0, 1, 3, 2,
    4, 0, 4, 5, 1,
    4, 0, 2, 8, 6,
    4, 1, 7, 9, 3,
    4, 2, 3, 11, 10,
    3, 0, 6, 4,
    3, 1, 5, 7,
    3, 2, 10, 8,
    3, 3, 9, 11,
    4, 4, 12, 13, 5,
    4, 4, 6, 14, 12,
    4, 5, 13, 15, 7,
    4, 6, 8, 16, 14,
    4, 7, 15, 17, 9,
    4, 8, 10, 18, 16,
    4, 9, 17, 19, 11,
    4, 10, 11, 19, 18,
    3, 12, 14, 20,
    3, 13, 21, 15,
    3, 16, 18, 22,
    3, 17, 23, 19,
    4, 12, 20, 21, 13,
    4, 14, 16, 22, 20,
    4, 15, 21, 23, 17,
    4, 18, 19, 23, 22,
    4, 20, 22, 23, 21,
};

const double kDeltoidalIcositetrahedronVerts[] = {
    -1.0823922002923947, 0, 0,
    -0.76536686473017956, -0.76536686473017945, 0,
    -0.76536686473017956, 0, -0.76536686473017956,
    -0.76536686473017956, 0, 0.76536686473017945,
    -0.76536686473017956, 0.76536686473017956, 0,
    -0.59197995131615866, -0.59197995131615866, -0.59197995131615866,
    -0.59197995131615866, -0.59197995131615866, 0.59197995131615866,
    -0.59197995131615866, 0.59197995131615866, -0.59197995131615866,
    -0.59197995131615866, 0.59197995131615866, 0.59197995131615866,
    0, -1.0823922002923947, 0,
    0, -0.76536686473017956, -0.76536686473017945,
    0, -0.76536686473017956, 0.76536686473017956,
    0, 0, -1.0823922002923947,
    0, 0, 1.0823922002923947,
    0, 0.76536686473017945, -0.76536686473017956,
    0, 0.76536686473017956, 0.76536686473017956,
    0, 1.0823922002923947, 0,
    0.59197995131615866, -0.59197995131615866, -0.59197995131615866,
    0.59197995131615866, -0.59197995131615866, 0.59197995131615866,
    0.59197995131615866, 0.59197995131615866, -0.59197995131615866,
    0.59197995131615866, 0.59197995131615866, 0.59197995131615866,
    0.76536686473017945, -0.76536686473017956, 0,
    0.76536686473017956, 0, -0.76536686473017956,
    0.76536686473017945, 0, 0.76536686473017956,
    0.76536686473017956, 0.76536686473017956, 0,
    1.0823922002923947, 0, 0,
};
const int kDeltoidalIcositetrahedronFaces[] = {
    4, 0, 2, 5, 1,
    4, 0, 1, 6, 3,
    4, 0, 4, 7, 2,
    4, 0, 3, 8, 4,
    4, 1, 5, 10, 9,
    4, 1, 9, 11, 6,
    4, 2, 12, 10, 5,
    4, 3, 6, 11, 13,
    4, 2, 7, 14, 12,
    4, 3, 13, 15, 8,
    4, 4, 16, 14, 7,
    4, 4, 8, 15, 16,
    4, 9, 10, 17, 21,
    4, 9, 21, 18, 11,
    4, 10, 12, 22, 17,
    4, 11, 18, 23, 13,
    4, 12, 14, 19, 22,
    4, 13, 23, 20, 15,
    4, 14, 16, 24, 19,
    4, 15, 20, 24, 16,
    4, 17, 22, 25, 21,
    4, 18, 21, 25, 23,
    4, 19, 24, 25, 22,
    4, 20, 23, 25, 24,
};

const double kGreatRhombicuboctahedronVerts[] = {
    -1.9142135623730949, -1.207106781186545, -0.5,
    -1.9142135623730949, -1.207106781186545, 0.5,
    -1.9142135623730949, -0.5, -1.207106781186545,
    -1.9142135623730949, -0.5, 1.207106781186545,
    -1.9142135623730949, 0.5, -1.207106781186545,
    -1.9142135623730949, 0.5, 1.207106781186545,
    -1.9142135623730949, 1.207106781186545, -0.5,
    -1.9142135623730949, 1.207106781186545, 0.5,
    -1.207106781186545, -1.9142135623730949, -0.5,
    -1.207106781186545, -1.9142135623730949, 0.5,
    -1.207106781186545, -0.5, -1.9142135623730949,
    -1.207106781186545, -0.5, 1.9142135623730949,
    -1.207106781186545, 0.5, -1.9142135623730949,
    -1.207106781186545, 0.5, 1.9142135623730949,
    -1.207106781186545, 1.9142135623730949, -0.5,
    -1.207106781186545, 1.9142135623730949, 0.5,
    -0.5, -1.9142135623730949, -1.207106781186545,
    -0.5, -1.9142135623730949, 1.207106781186545,
    -0.5, -1.207106781186545, -1.9142135623730949,
    -0.5, -1.207106781186545, 1.9142135623730949,
    -0.5, 1.207106781186545, -1.9142135623730949,
    -0.5, 1.207106781186545, 1.9142135623730949,
    -0.5, 1.9142135623730949, -1.207106781186545,
    -0.5, 1.9142135623730949, 1.207106781186545,
    0.5, -1.9142135623730949, -1.207106781186545,
    0.5, -1.9142135623730949, 1.207106781186545,
    0.5, -1.207106781186545, -1.9142135623730949,
    0.5, -1.207106781186545, 1.9142135623730949,
    0.5, 1.207106781186545, -1.9142135623730949,
    0.5, 1.207106781186545, 1.9142135623730949,
    0.5, 1.9142135623730949, -1.207106781186545,
    0.5, 1.9142135623730949, 1.207106781186545,
    1.207106781186545, -1.9142135623730949, -0.5,
    1.207106781186545, -1.9142135623730949, 0.5,
    1.207106781186545, -0.5, -1.9142135623730949,
    1.207106781186545, -0.5, 1.9142135623730949,
    1.207106781186545, 0.5, -1.9142135623730949,
    1.207106781186545, 0.5, 1.9142135623730949,
    1.207106781186545, 1.9142135623730949, -0.5,
    1.207106781186545, 1.9142135623730949, 0.5,
    1.9142135623730949, -1.207106781186545, -0.5,
    1.9142135623730949, -1.207106781186545, 0.5,
    1.9142135623730949, -0.5, -1.207106781186545,
    1.9142135623730949, -0.5, 1.207106781186545,
    1.9142135623730949, 0.5, -1.207106781186545,
    1.9142135623730949, 0.5, 1.207106781186545,
    1.9142135623730949, 1.207106781186545, -0.5,
    1.9142135623730949, 1.207106781186545, 0.5,
};
const int kGreatRhombicuboctahedronFaces[] = {
    8, 0, 1, 3, 5, 7, 6, 4, 2,
    4, 0, 8, 9, 1,
    4, 2, 4, 12, 10,
    4, 3, 11, 13, 5,
    4, 6, 7, 15, 14,
    6, 0, 2, 10, 18, 16, 8,
    6, 1, 9, 17, 19, 11, 3,
    6, 4, 6, 14, 22, 20, 12,
    6, 5, 13, 21, 23, 15, 7,
    8, 8, 16, 24, 32, 33, 25, 17, 9,
    4, 16, 18, 26, 24,
    4, 17, 25, 27, 19,
    8, 10, 12, 20, 28, 36, 34, 26, 18,
    8, 11, 19, 27, 35, 37, 29, 21, 13,
    4, 20, 22, 30, 28,
    4, 21, 29, 31, 23,
    8, 14, 15, 23, 31, 39, 38, 30, 22,
    6, 24, 26, 34, 42, 40, 32,
    6, 25, 33, 41, 43, 35, 27,
    6, 28, 30, 38, 46, 44, 36,
    6, 29, 37, 45, 47, 39, 31,
    4, 32, 40, 41, 33,
    4, 34, 36, 44, 42,
    4, 35, 43, 45, 37,
    4, 38, 39, 47, 46,
    8, 40, 42, 44, 46, 47, 45, 43, 41,
};

const double kDisdyakisDodecahedronVerts[] = {
    -1.1822262065932594, 0, 0,
    -0.72502440934110812, -0.72502440934110812, 0,
    -0.72502440934110812, 0, -0.72502440934110812,
    -0.72502440934110812, 0, 0.72502440934110812,
    -0.72502440934110812, 0.72502440934110812, 0,
    -0.62491942820756496, -0.62491942820756496, -0.62491942820756496,
    -0.62491942820756496, -0.62491942820756496, 0.62491942820756496,
    -0.62491942820756508, 0.62491942820756508, -0.62491942820756508,
    -0.62491942820756485, 0.62491942820756485, 0.62491942820756485,
    0, -1.1822262065932594, 0,
    0, -0.72502440934110812, -0.72502440934110812,
    0, -0.72502440934110812, 0.72502440934110812,
    0, 0, -1.1822262065932594,
    0, 0, 1.1822262065932594,
    0, 0.72502440934110812, -0.72502440934110812,
    0, 0.72502440934110812, 0.72502440934110812,
    0, 1.1822262065932594, 0,
    0.62491942820756485, -0.62491942820756485, -0.62491942820756485,
    0.62491942820756508, -0.62491942820756508, 0.62491942820756508,
    0.62491942820756496, 0.62491942820756496, -0.62491942820756496,
    0.62491942820756508, 0.62491942820756508, 0.62491942820756508,
    0.72502440934110812, -0.72502440934110812, 0,
    0.72502440934110812, 0, -0.72502440934110812,
    0.72502440934110812, 0, 0.72502440934110812,
    0.72502440934110812, 0.72502440934110812, 0,
    1.1822262065932594, 0, 0,
};
const int kDisdyakisDodecahedronFaces[] = {
    3, 0, 5, 1,
    3, 0, 1, 6,
    3, 0, 2, 5,
    3, 0, 6, 3,
    3, 0, 7, 2,
    3, 0, 3, 8,
    3, 0, 4, 7,
    3, 0, 8, 4,
    3, 1, 5, 9,
    3, 1, 9, 6,
    3, 2, 12, 5,
    3, 3, 6, 13,
    3, 2, 7, 12,
    3, 3, 13, 8,
    3, 4, 16, 7,
    3, 4, 8, 16,
    3, 5, 10, 9,
    3, 6, 9, 11,
    3, 5, 12, 10,
    3, 6, 11, 13,
    3, 7, 14, 12,
    3, 8, 13, 15,
    3, 7, 16, 14,
    3, 8, 15, 16,
    3, 9, 10, 17,
    3, 9, 18, 11,
    3, 10, 12, 17,
    3, 11, 18, 13,
    3, 12, 14, 19,
    3, 13, 20, 15,
    3, 14, 16, 19,
    3, 15, 20, 16,
    3, 9, 17, 21,
    3, 9, 21, 18,
    3, 12, 22, 17,
    3, 13, 18, 23,
    3, 12, 19, 22,
    3, 13, 23, 20,
    3, 16, 24, 19,
    3, 16, 20, 24,
    3, 17, 25, 21,
    3, 18, 21, 25,
    3, 17, 22, 25,
    3, 18, 25, 23,
    3, 19, 25, 22,
    3, 20, 23, 25,
    3, 19, 24, 25,
    3, 20, 25, 24,
};

const double kSnubCubeVerts[] = {
    -0.62122641055658534, 0.33775397381375277, 1.1426135089259619,
    -0.33775397381375277, -0.62122641055658534, 1.1426135089259619,
    1.1426135089259619, -0.62122641055658512, 0.33775397381375211,
    0.62122641055658534, -0.33775397381375283, 1.1426135089259619,
    1.1426135089259619, -0.33775397381375288, -0.62122641055658534,
    0.62122641055658523, 1.1426135089259621, 0.33775397381375266,
    0.33775397381375244, 1.1426135089259624, -0.62122641055658478,
    0.33775397381375288, 0.62122641055658523, 1.1426135089259619,
    1.1426135089259617, 0.62122641055658556, -0.33775397381375327,
    -0.62122641055658545, 1.1426135089259621, -0.33775397381375249,
    -1.1426135089259619, 0.62122641055658534, 0.33775397381375249,
    -1.1426135089259624, 0.33775397381375238, -0.62122641055658478,
    1.1426135089259619, 0.33775397381375249, 0.62122641055658534,
    -0.33775397381375383, 1.1426135089259613, 0.6212264105565859,
    -1.1426135089259619, -0.62122641055658545, -0.33775397381375249,
    -0.62122641055658545, -1.1426135089259619, 0.33775397381375249,
    0.33775397381375294, -1.1426135089259619, 0.62122641055658512,
    -0.33775397381375249, -1.1426135089259624, -0.62122641055658478,
    -1.1426135089259615, -0.33775397381375338, 0.6212264105565859,
    0.62122641055658534, -1.1426135089259619, -0.33775397381375249,
    0.33775397381375255, -0.62122641055658545, -1.1426135089259619,
    0.62122641055658478, 0.33775397381375288, -1.1426135089259621,
    -0.62122641055658512, -0.33775397381375244, -1.1426135089259621,
    -0.33775397381375294, 0.62122641055658523, -1.1426135089259619,
};
const int kSnubCubeFaces[] = {
    4, 10, 11, 14, 18,
    3, 14, 15, 18,
    3, 11, 22, 14,
    3, 0, 10, 18,
    3, 9, 11, 10,
    3, 14, 17, 15,
    3, 14, 22, 17,
    3, 1, 18, 15,
    3, 0, 18, 1,
    3, 11, 23, 22,
    3, 9, 23, 11,
    3, 0, 13, 10,
    3, 9, 10, 13,
    3, 1, 15, 16,
    3, 17, 22, 20,
    3, 0, 7, 13,
    3, 6, 23, 9,
    4, 15, 17, 19, 16,
    4, 20, 22, 23, 21,
    4, 0, 1, 3, 7,
    4, 5, 6, 9, 13,
    3, 17, 20, 19,
    3, 1, 16, 3,
    3, 6, 21, 23,
    3, 5, 13, 7,
    3, 2, 16, 19,
    3, 4, 19, 20,
    3, 2, 3, 16,
    3, 4, 20, 21,
    3, 3, 12, 7,
    3, 6, 8, 21,
    3, 5, 7, 12,
    3, 5, 8, 6,
    3, 2, 19, 4,
    3, 2, 12, 3,
    3, 4, 21, 8,
    3, 5, 12, 8,
    4, 2, 4, 8, 12,
};

const double kPentagonalIcositetrahedronVerts[] = {
    -1.0915529689177332, -3.573532382921995e-16, 6.572750781237322e-16,
    -0.82074820640110735, -0.59346535597198724, 0.1754270194903845,
    -0.82074820640110757, -0.17542701949038486, -0.59346535597198702,
    -0.82074820640110757, 0.17542701949038453, 0.59346535597198691,
    -0.82074820640110757, 0.59346535597198713, -0.17542701949038442,
    -0.59346535597198735, -0.82074820640110746, -0.17542701949038444,
    -0.59346535597198702, -0.59346535597198702, -0.59346535597198702,
    -0.59346535597198657, -0.59346535597198746, 0.59346535597198702,
    -0.5934653559719868, -0.17542701949038442, 0.82074820640110768,
    -0.59346535597198735, 0.17542701949038469, -0.82074820640110724,
    -0.59346535597198724, 0.59346535597198691, -0.59346535597198702,
    -0.59346535597198746, 0.59346535597198635, 0.59346535597198691,
    -0.59346535597198724, 0.82074820640110713, 0.17542701949038464,
    -0.1754270194903845, -0.82074820640110768, 0.59346535597198713,
    -0.17542701949038464, -0.59346535597198735, -0.82074820640110735,
    -0.17542701949038431, 0.5934653559719868, 0.82074820640110768,
    -0.17542701949038469, 0.82074820640110735, -0.59346535597198735,
    2.042018504526855e-16, -1.0915529689177332, 3.7558575892784719e-16,
    5.2323118770325241e-33, 0, -1.0915529689177332,
    0, 0, 1.0915529689177335,
    -4.0840370090537079e-16, 1.0915529689177332, 7.5117151785569369e-16,
    0.17542701949038483, -0.82074820640110746, -0.59346535597198713,
    0.17542701949038453, -0.59346535597198735, 0.82074820640110746,
    0.17542701949038431, 0.59346535597198746, -0.82074820640110735,
    0.17542701949038414, 0.82074820640110757, 0.59346535597198735,
    0.59346535597198746, -0.82074820640110724, 0.17542701949038458,
    0.59346535597198691, -0.59346535597198713, -0.59346535597198702,
    0.59346535597198757, -0.59346535597198713, 0.5934653559719868,
    0.59346535597198702, -0.1754270194903845, -0.82074820640110757,
    0.59346535597198735, 0.1754270194903845, 0.82074820640110757,
    0.59346535597198657, 0.59346535597198713, -0.59346535597198724,
    0.59346535597198724, 0.59346535597198702, 0.59346535597198713,
    0.59346535597198702, 0.82074820640110735, -0.1754270194903845,
    0.82074820640110746, -0.59346535597198724, -0.17542701949038447,
    0.82074820640110768, -0.17542701949038497, 0.59346535597198702,
    0.82074820640110724, 0.17542701949038439, -0.59346535597198757,
    0.82074820640110757, 0.59346535597198702, 0.17542701949038461,
    1.0915529689177335, 9.3896439731961761e-17, -5.1050462613171386e-17,
};
const int kPentagonalIcositetrahedronFaces[] = {
    5, 0, 2, 6, 5, 1,
    5, 0, 1, 7, 8, 3,
    5, 0, 4, 10, 9, 2,
    5, 0, 3, 11, 12, 4,
    5, 1, 5, 17, 13, 7,
    5, 2, 9, 18, 14, 6,
    5, 3, 8, 19, 15, 11,
    5, 4, 12, 20, 16, 10,
    5, 5, 6, 14, 21, 17,
    5, 7, 13, 22, 19, 8,
    5, 9, 10, 16, 23, 18,
    5, 11, 15, 24, 20, 12,
    5, 13, 17, 25, 27, 22,
    5, 14, 18, 28, 26, 21,
    5, 15, 19, 29, 31, 24,
    5, 16, 20, 32, 30, 23,
    5, 17, 21, 26, 33, 25,
    5, 19, 22, 27, 34, 29,
    5, 18, 23, 30, 35, 28,
    5, 20, 24, 31, 36, 32,
    5, 25, 33, 37, 34, 27,
    5, 26, 28, 35, 37, 33,
    5, 29, 34, 37, 36, 31,
    5, 30, 32, 36, 37, 35,
};

const double kIcosidodecahedronVerts[] = {
    -1.6180339887498882, 0, 0,
    0, -1.6180339887498882, 0,
    0, 0, -1.6180339887498882,
    0, 0, 1.6180339887498882,
    0, 1.6180339887498882, 0,
    1.6180339887498882, 0, 0,
    -1.3090169943749483, -0.49999999999999944, -0.80901699437494912,
    -1.3090169943749483, -0.49999999999999944, 0.80901699437494912,
    -1.3090169943749483, 0.49999999999999944, -0.80901699437494912,
    -1.3090169943749483, 0.49999999999999944, 0.80901699437494912,
    -0.80901699437494912, -1.3090169943749483, -0.49999999999999944,
    -0.80901699437494912, -1.3090169943749483, 0.49999999999999944,
    -0.80901699437494912, 1.3090169943749483, -0.49999999999999944,
    -0.80901699437494912, 1.3090169943749483, 0.49999999999999944,
    -0.49999999999999944, -0.80901699437494912, -1.3090169943749483,
    -0.49999999999999944, -0.80901699437494912, 1.3090169943749483,
    -0.49999999999999944, 0.80901699437494912, -1.3090169943749483,
    -0.49999999999999944, 0.80901699437494912, 1.3090169943749483,
    0.49999999999999944, -0.80901699437494912, -1.3090169943749483,
    0.49999999999999944, -0.80901699437494912, 1.3090169943749483,
    0.49999999999999944, 0.80901699437494912, -1.3090169943749483,
    0.49999999999999944, 0.80901699437494912, 1.3090169943749483,
    0.80901699437494912, -1.3090169943749483, -0.49999999999999944,
    0.80901699437494912, -1.3090169943749483, 0.49999999999999944,
    0.80901699437494912, 1.3090169943749483, -0.49999999999999944,
    0.80901699437494912, 1.3090169943749483, 0.49999999999999944,
    1.3090169943749483, -0.49999999999999944, -0.80901699437494912,
    1.3090169943749483, -0.49999999999999944, 0.80901699437494912,
    1.3090169943749483, 0.49999999999999944, -0.80901699437494912,
    1.3090169943749483, 0.49999999999999944, 0.80901699437494912,
};
const int kIcosidodecahedronFaces[] = {
    3, 0, 8, 6,
    3, 0, 7, 9,
    5, 0, 6, 10, 11, 7,
    5, 0, 9, 13, 12, 8,
    3, 6, 14, 10,
    3, 7, 11, 15,
    3, 8, 12, 16,
    3, 9, 17, 13,
    5, 2, 14, 6, 8, 16,
    5, 3, 17, 9, 7, 15,
    3, 1, 11, 10,
    3, 4, 12, 13,
    5, 1, 10, 14, 18, 22,
    5, 1, 23, 19, 15, 11,
    3, 2, 18, 14,
    3, 3, 15, 19,
    3, 2, 16, 20,
    3, 3, 21, 17,
    5, 4, 24, 20, 16, 12,
    5, 4, 13, 17, 21, 25,
    3, 1, 22, 23,
    3, 4, 25, 24,
    5, 2, 20, 28, 26, 18,
    5, 3, 19, 27, 29, 21,
    3, 18, 26, 22,
    3, 19, 23, 27,
    3, 20, 24, 28,
    3, 21, 29, 25,
    5, 5, 27, 23, 22, 26,
    5, 5, 28, 24, 25, 29,
    3, 5, 26, 28,
    3, 5, 29, 27,
};

const double kRhombicTriacontahedronVerts[] = {
    -0.95105651629515753, 0, -0.36327126400267257,
    -0.95105651629515753, 0, 0.36327126400267257,
    -0.95105651629515608, -0.58778525229246947, 0,
    -0.95105651629515608, 0.58778525229246947, 0,
    -0.58778525229247269, -0.58778525229247269, -0.58778525229247258,
    -0.58778525229247269, -0.58778525229247258, 0.58778525229247269,
    -0.58778525229247269, 0.58778525229247258, -0.58778525229247269,
    -0.58778525229247269, 0.58778525229247269, 0.58778525229247258,
    -0.58778525229246947, 0, -0.95105651629515608,
    -0.58778525229246947, 0, 0.95105651629515608,
    -0.36327126400267257, -0.95105651629515753, 0,
    -0.36327126400267257, 0.95105651629515753, 0,
    0, -0.95105651629515608, -0.58778525229246947,
    0, -0.95105651629515608, 0.58778525229246947,
    0, -0.36327126400267257, -0.95105651629515753,
    0, -0.36327126400267257, 0.95105651629515753,
    0, 0.36327126400267257, -0.95105651629515753,
    0, 0.36327126400267257, 0.95105651629515753,
    0, 0.95105651629515608, -0.58778525229246947,
    0, 0.95105651629515608, 0.58778525229246947,
    0.36327126400267257, -0.95105651629515753, 0,
    0.36327126400267257, 0.95105651629515753, 0,
    0.58778525229246947, 0, -0.95105651629515608,
    0.58778525229246947, 0, 0.95105651629515608,
    0.58778525229247258, -0.58778525229247269, -0.58778525229247269,
    0.58778525229247269, -0.58778525229247258, 0.58778525229247269,
    0.58778525229247269, 0.58778525229247258, -0.58778525229247269,
    0.58778525229247258, 0.58778525229247269, 0.58778525229247269,
    0.95105651629515608, -0.58778525229246947, 0,
    0.95105651629515608, 0.58778525229246947, 0,
    0.95105651629515753, 0, -0.36327126400267257,
    0.95105651629515753, 0, 0.36327126400267257,
};
const int kRhombicTriacontahedronFaces[] = {
    4, 0, 2, 1, 3,
    4, 0, 8, 4, 2,
    4, 1, 2, 5, 9,
    4, 0, 3, 6, 8,
    4, 1, 9, 7, 3,
    4, 2, 4, 12, 10,
    4, 2, 10, 13, 5,
    4, 3, 11, 18, 6,
    4, 3, 7, 19, 11,
    4, 4, 8, 14, 12,
    4, 5, 13, 15, 9,
    4, 6, 18, 16, 8,
    4, 7, 9, 17, 19,
    4, 10, 12, 20, 13,
    4, 8, 16, 22, 14,
    4, 9, 15, 23, 17,
    4, 11, 19, 21, 18,
    4, 12, 14, 22, 24,
    4, 13, 25, 23, 15,
    4, 16, 18, 26, 22,
    4, 17, 23, 27, 19,
    4, 12, 24, 28, 20,
    4, 13, 20, 28, 25,
    4, 18, 21, 29, 26,
    4, 19, 27, 29, 21,
    4, 22, 30, 28, 24,
    4, 23, 25, 28, 31,
    4, 22, 26, 29, 30,
    4, 23, 31, 29, 27,
    4, 28, 30, 29, 31,
};

const double kTruncatedDodecahedronVerts[] = {
    -2.9270509831248432, 0, -0.49999999999999695,
    -2.9270509831248432, 0, 0.49999999999999695,
    -0.49999999999999695, -2.9270509831248432, 0,
    -0.49999999999999695, 2.9270509831248432, 0,
    0, -0.49999999999999695, -2.9270509831248432,
    0, -0.49999999999999695, 2.9270509831248432,
    0, 0.49999999999999695, -2.9270509831248432,
    0, 0.49999999999999695, 2.9270509831248432,
    0.49999999999999695, -2.9270509831248432, 0,
    0.49999999999999695, 2.9270509831248432, 0,
    2.9270509831248432, 0, -0.49999999999999695,
    2.9270509831248432, 0, 0.49999999999999695,
    -2.6180339887498993, -0.49999999999999695, -1.3090169943749457,
    -2.6180339887498993, -0.49999999999999695, 1.3090169943749457,
    -2.6180339887498993, 0.49999999999999695, -1.3090169943749457,
    -2.6180339887498993, 0.49999999999999695, 1.3090169943749457,
    -1.3090169943749457, -2.6180339887498993, -0.49999999999999695,
    -1.3090169943749457, -2.6180339887498993, 0.49999999999999695,
    -1.3090169943749457, 2.6180339887498993, -0.49999999999999695,
    -1.3090169943749457, 2.6180339887498993, 0.49999999999999695,
    -0.49999999999999695, -1.3090169943749457, -2.6180339887498993,
    -0.49999999999999695, -1.3090169943749457, 2.6180339887498993,
    -0.49999999999999695, 1.3090169943749457, -2.6180339887498993,
    -0.49999999999999695, 1.3090169943749457, 2.6180339887498993,
    0.49999999999999695, -1.3090169943749457, -2.6180339887498993,
    0.49999999999999695, -1.3090169943749457, 2.6180339887498993,
    0.49999999999999695, 1.3090169943749457, -2.6180339887498993,
    0.49999999999999695, 1.3090169943749457, 2.6180339887498993,
    1.3090169943749457, -2.6180339887498993, -0.49999999999999695,
    1.3090169943749457, -2.6180339887498993, 0.49999999999999695,
    1.3090169943749457, 2.6180339887498993, -0.49999999999999695,
    1.3090169943749457, 2.6180339887498993, 0.49999999999999695,
    2.6180339887498993, -0.49999999999999695, -1.3090169943749457,
    2.6180339887498993, -0.49999999999999695, 1.3090169943749457,
    2.6180339887498993, 0.49999999999999695, -1.3090169943749457,
    2.6180339887498993, 0.49999999999999695, 1.3090169943749457,
    -2.1180339887498945, -1.3090169943749457, -1.6180339887498976,
    -2.1180339887498945, -1.3090169943749457, 1.6180339887498976,
    -2.1180339887498945, 1.3090169943749457, -1.6180339887498976,
    -2.1180339887498945, 1.3090169943749457, 1.6180339887498976,
    -1.6180339887498976, -2.1180339887498945, -1.3090169943749457,
    -1.6180339887498976, -2.1180339887498945, 1.3090169943749457,
    -1.6180339887498976, 2.1180339887498945, -1.3090169943749457,
    -1.6180339887498976, 2.1180339887498945, 1.3090169943749457,
    -1.3090169943749457, -1.6180339887498976, -2.1180339887498945,
    -1.3090169943749457, -1.6180339887498976, 2.1180339887498945,
    -1.3090169943749457, 1.6180339887498976, -2.1180339887498945,
    -1.3090169943749457, 1.6180339887498976, 2.1180339887498945,
    1.3090169943749457, -1.6180339887498976, -2.1180339887498945,
    1.3090169943749457, -1.6180339887498976, 2.1180339887498945,
    1.3090169943749457, 1.6180339887498976, -2.1180339887498945,
    1.3090169943749457, 1.6180339887498976, 2.1180339887498945,
    1.6180339887498976, -2.1180339887498945, -1.3090169943749457,
    1.6180339887498976, -2.1180339887498945, 1.3090169943749457,
    1.6180339887498976, 2.1180339887498945, -1.3090169943749457,
    1.6180339887498976, 2.1180339887498945, 1.3090169943749457,
    2.1180339887498945, -1.3090169943749457, -1.6180339887498976,
    2.1180339887498945, -1.3090169943749457, 1.6180339887498976,
    2.1180339887498945, 1.3090169943749457, -1.6180339887498976,
    2.1180339887498945, 1.3090169943749457, 1.6180339887498976,
};
const int kTruncatedDodecahedronFaces[] = {
    3, 0, 14, 12,
    3, 1, 13, 15,
    10, 0, 12, 36, 40, 16, 17, 41, 37, 13, 1,
    10, 0, 1, 15, 39, 43, 19, 18, 42, 38, 14,
    3, 36, 44, 40,
    3, 37, 41, 45,
    3, 38, 42, 46,
    3, 39, 47, 43,
    10, 4, 20, 44, 36, 12, 14, 38, 46, 22, 6,
    10, 5, 7, 23, 47, 39, 15, 13, 37, 45, 21,
    3, 2, 17, 16,
    3, 3, 18, 19,
    10, 2, 16, 40, 44, 20, 24, 48, 52, 28, 8,
    10, 2, 8, 29, 53, 49, 25, 21, 45, 41, 17,
    3, 4, 24, 20,
    3, 5, 21, 25,
    3, 6, 22, 26,
    3, 7, 27, 23,
    10, 3, 9, 30, 54, 50, 26, 22, 46, 42, 18,
    10, 3, 19, 43, 47, 23, 27, 51, 55, 31, 9,
    3, 8, 28, 29,
    3, 9, 31, 30,
    10, 4, 6, 26, 50, 58, 34, 32, 56, 48, 24,
    10, 5, 25, 49, 57, 33, 35, 59, 51, 27, 7,
    3, 48, 56, 52,
    3, 49, 53, 57,
    3, 50, 54, 58,
    3, 51, 59, 55,
    10, 10, 11, 33, 57, 53, 29, 28, 52, 56, 32,
    10, 10, 34, 58, 54, 30, 31, 55, 59, 35, 11,
    3, 10, 32, 34,
    3, 11, 35, 33,
};

const double kTriakisIcosahedronVerts[] = {
    -0.93874890193175242, 0, -0.35857017363628307,
    -0.93874890193175242, 0, 0.35857017363628307,
    -0.99999999999999989, -0.61803398874989479, 0,
    -0.99999999999999989, 0.61803398874989479, 0,
    -0.58017872829546424, -0.58017872829546424, -0.58017872829546424,
    -0.58017872829546424, -0.58017872829546424, 0.58017872829546424,
    -0.58017872829546424, 0.58017872829546424, -0.58017872829546424,
    -0.58017872829546424, 0.58017872829546424, 0.58017872829546424,
    -0.61803398874989479, 0, -0.99999999999999989,
    -0.61803398874989479, 0, 0.99999999999999989,
    -0.35857017363628307, -0.93874890193175242, 0,
    -0.35857017363628307, 0.93874890193175242, 0,
    0, -0.99999999999999989, -0.61803398874989479,
    0, -0.99999999999999989, 0.61803398874989479,
    0, -0.35857017363628307, -0.93874890193175242,
    0, -0.35857017363628307, 0.93874890193175242,
    0, 0.35857017363628307, -0.93874890193175242,
    0, 0.35857017363628307, 0.93874890193175242,
    0, 0.99999999999999989, -0.61803398874989479,
    0, 0.99999999999999989, 0.61803398874989479,
    0.35857017363628307, -0.93874890193175242, 0,
    0.35857017363628307, 0.93874890193175242, 0,
    0.61803398874989479, 0, -0.99999999999999989,
    0.61803398874989479, 0, 0.99999999999999989,
    0.58017872829546424, -0.58017872829546424, -0.58017872829546424,
    0.58017872829546424, -0.58017872829546424, 0.58017872829546424,
    0.58017872829546424, 0.58017872829546424, -0.58017872829546424,
    0.58017872829546424, 0.58017872829546424, 0.58017872829546424,
    0.99999999999999989, -0.61803398874989479, 0,
    0.99999999999999989, 0.61803398874989479, 0,
    0.93874890193175242, 0, -0.35857017363628307,
    0.93874890193175242, 0, 0.35857017363628307,
};
const int kTriakisIcosahedronFaces[] = {
    3, 0, 2, 3,
    3, 1, 3, 2,
    3, 0, 8, 2,
    3, 1, 2, 9,
    3, 0, 3, 8,
    3, 1, 9, 3,
    3, 2, 8, 4,
    3, 2, 5, 9,
    3, 3, 6, 8,
    3, 3, 9, 7,
    3, 2, 4, 12,
    3, 2, 13, 5,
    3, 3, 18, 6,
    3, 3, 7, 19,
    3, 2, 12, 10,
    3, 2, 10, 13,
    3, 3, 11, 18,
    3, 3, 19, 11,
    3, 4, 8, 12,
    3, 5, 13, 9,
    3, 6, 18, 8,
    3, 7, 9, 19,
    3, 8, 14, 12,
    3, 9, 13, 15,
    3, 8, 18, 16,
    3, 9, 17, 19,
    3, 10, 12, 13,
    3, 11, 19, 18,
    3, 8, 22, 14,
    3, 9, 15, 23,
    3, 8, 16, 22,
    3, 9, 23, 17,
    3, 12, 20, 13,
    3, 18, 19, 21,
    3, 12, 14, 22,
    3, 13, 23, 15,
    3, 16, 18, 22,
    3, 17, 23, 19,
    3, 12, 22, 24,
    3, 13, 25, 23,
    3, 18, 26, 22,
    3, 19, 23, 27,
    3, 12, 28, 20,
    3, 13, 20, 28,
    3, 18, 21, 29,
    3, 19, 29, 21,
    3, 12, 24, 28,
    3, 13, 28, 25,
    3, 18, 29, 26,
    3, 19, 27, 29,
    3, 22, 28, 24,
    3, 23, 25, 28,
    3, 22, 26, 29,
    3, 23, 29, 27,
    3, 22, 30, 28,
    3, 23, 28, 31,
    3, 22, 29, 30,
    3, 23, 31, 29,
    3, 28, 30, 29,
    3, 28, 29, 31,
};

const double kTruncatedIcosahedronVerts[] = {
    -2.4270509831248419, 0, -0.50000000000000044,
    -2.4270509831248419, 0, 0.50000000000000044,
    -0.50000000000000044, -2.4270509831248419, 0,
    -0.50000000000000044, 2.4270509831248419, 0,
    0, -0.50000000000000044, -2.4270509831248419,
    0, -0.50000000000000044, 2.4270509831248419,
    0, 0.50000000000000044, -2.4270509831248419,
    0, 0.50000000000000044, 2.4270509831248419,
    0.50000000000000044, -2.4270509831248419, 0,
    0.50000000000000044, 2.4270509831248419, 0,
    2.4270509831248419, 0, -0.50000000000000044,
    2.4270509831248419, 0, 0.50000000000000044,
    -1.8090169943749463, -1.6180339887498962, -0.50000000000000044,
    -1.8090169943749463, -1.6180339887498962, 0.50000000000000044,
    -1.8090169943749463, 1.6180339887498962, -0.50000000000000044,
    -1.8090169943749463, 1.6180339887498962, 0.50000000000000044,
    -1.6180339887498962, -0.50000000000000044, -1.8090169943749463,
    -1.6180339887498962, -0.50000000000000044, 1.8090169943749463,
    -1.6180339887498962, 0.50000000000000044, -1.8090169943749463,
    -1.6180339887498962, 0.50000000000000044, 1.8090169943749463,
    -0.50000000000000044, -1.8090169943749463, -1.6180339887498962,
    -0.50000000000000044, -1.8090169943749463, 1.6180339887498962,
    -0.50000000000000044, 1.8090169943749463, -1.6180339887498962,
    -0.50000000000000044, 1.8090169943749463, 1.6180339887498962,
    0.50000000000000044, -1.8090169943749463, -1.6180339887498962,
    0.50000000000000044, -1.8090169943749463, 1.6180339887498962,
    0.50000000000000044, 1.8090169943749463, -1.6180339887498962,
    0.50000000000000044, 1.8090169943749463, 1.6180339887498962,
    1.6180339887498962, -0.50000000000000044, -1.8090169943749463,
    1.6180339887498962, -0.50000000000000044, 1.8090169943749463,
    1.6180339887498962, 0.50000000000000044, -1.8090169943749463,
    1.6180339887498962, 0.50000000000000044, 1.8090169943749463,
    1.8090169943749463, -1.6180339887498962, -0.50000000000000044,
    1.8090169943749463, -1.6180339887498962, 0.50000000000000044,
    1.8090169943749463, 1.6180339887498962, -0.50000000000000044,
    1.8090169943749463, 1.6180339887498962, 0.50000000000000044,
    -2.1180339887498967, -0.80901699437494567, -1.0000000000000009,
    -2.1180339887498967, -0.80901699437494567, 1.0000000000000009,
    -2.1180339887498967, 0.80901699437494567, -1.0000000000000009,
    -2.1180339887498967, 0.80901699437494567, 1.0000000000000009,
    -1.0000000000000009, -2.1180339887498967, -0.80901699437494567,
    -1.0000000000000009, -2.1180339887498967, 0.80901699437494567,
    -1.0000000000000009, 2.1180339887498967, -0.80901699437494567,
    -1.0000000000000009, 2.1180339887498967, 0.80901699437494567,
    -0.80901699437494567, -1.0000000000000009, -2.1180339887498967,
    -0.80901699437494567, -1.0000000000000009, 2.1180339887498967,
    -0.80901699437494567, 1.0000000000000009, -2.1180339887498967,
    -0.80901699437494567, 1.0000000000000009, 2.1180339887498967,
    0.80901699437494567, -1.0000000000000009, -2.1180339887498967,
    0.80901699437494567, -1.0000000000000009, 2.1180339887498967,
    0.80901699437494567, 1.0000000000000009, -2.1180339887498967,
    0.80901699437494567, 1.0000000000000009, 2.1180339887498967,
    1.0000000000000009, -2.1180339887498967, -0.80901699437494567,
    1.0000000000000009, -2.1180339887498967, 0.80901699437494567,
    1.0000000000000009, 2.1180339887498967, -0.80901699437494567,
    1.0000000000000009, 2.1180339887498967, 0.80901699437494567,
    2.1180339887498967, -0.80901699437494567, -1.0000000000000009,
    2.1180339887498967, -0.80901699437494567, 1.0000000000000009,
    2.1180339887498967, 0.80901699437494567, -1.0000000000000009,
    2.1180339887498967, 0.80901699437494567, 1.0000000000000009,
};
const int kTruncatedIcosahedronFaces[] = {
    6, 0, 36, 12, 13, 37, 1,
    6, 0, 1, 39, 15, 14, 38,
    5, 0, 38, 18, 16, 36,
    5, 1, 37, 17, 19, 39,
    6, 12, 36, 16, 44, 20, 40,
    6, 13, 41, 21, 45, 17, 37,
    6, 14, 42, 22, 46, 18, 38,
    6, 15, 39, 19, 47, 23, 43,
    5, 2, 41, 13, 12, 40,
    5, 3, 42, 14, 15, 43,
    6, 4, 44, 16, 18, 46, 6,
    6, 5, 7, 47, 19, 17, 45,
    6, 2, 40, 20, 24, 52, 8,
    6, 2, 8, 53, 25, 21, 41,
    5, 4, 48, 24, 20, 44,
    5, 5, 45, 21, 25, 49,
    5, 6, 46, 22, 26, 50,
    5, 7, 51, 27, 23, 47,
    6, 3, 9, 54, 26, 22, 42,
    6, 3, 43, 23, 27, 55, 9,
    6, 4, 6, 50, 30, 28, 48,
    6, 5, 49, 29, 31, 51, 7,
    5, 8, 52, 32, 33, 53,
    5, 9, 55, 35, 34, 54,
    6, 24, 48, 28, 56, 32, 52,
    6, 25, 53, 33, 57, 29, 49,
    6, 26, 54, 34, 58, 30, 50,
    6, 27, 51, 31, 59, 35, 55,
    5, 10, 56, 28, 30, 58,
    5, 11, 59, 31, 29, 57,
    6, 10, 11, 57, 33, 32, 56,
    6, 10, 58, 34, 35, 59, 11,
};

const double kPentakisDodecahedronVerts[] = {
    -1.0000000000000004, -0.38196601125010543, 0,
    -1.0000000000000002, 0.38196601125010549, 0,
    -0.88705799822366749, 0, -0.54823199289467051,
    -0.88705799822366749, 0, 0.54823199289467051,
    -0.61803398874989501, -0.61803398874989501, -0.61803398874989501,
    -0.61803398874989501, -0.61803398874989501, 0.6180339887498949,
    -0.61803398874989501, 0.61803398874989501, -0.6180339887498949,
    -0.61803398874989501, 0.61803398874989501, 0.61803398874989501,
    -0.54823199289467051, -0.8870579982236676, 0,
    -0.54823199289467051, 0.8870579982236676, 0,
    -0.38196601125010538, 0, -1.0000000000000002,
    -0.38196601125010549, 0, 1.0000000000000002,
    0, -1.0000000000000004, -0.38196601125010543,
    0, -1.0000000000000002, 0.38196601125010549,
    0, -0.54823199289467051, -0.8870579982236676,
    0, -0.54823199289467051, 0.8870579982236676,
    0, 0.54823199289467051, -0.8870579982236676,
    0, 0.54823199289467051, 0.8870579982236676,
    0, 1.0000000000000002, -0.38196601125010549,
    0, 1.0000000000000004, 0.38196601125010543,
    0.38196601125010549, 0, -1.0000000000000002,
    0.38196601125010538, 0, 1.0000000000000002,
    0.54823199289467051, -0.8870579982236676, 0,
    0.54823199289467051, 0.8870579982236676, 0,
    0.6180339887498949, -0.61803398874989501, -0.61803398874989501,
    0.61803398874989501, -0.61803398874989501, 0.61803398874989501,
    0.61803398874989501, 0.61803398874989501, -0.61803398874989501,
    0.6180339887498949, 0.61803398874989501, 0.61803398874989501,
    0.88705799822366749, 0, -0.54823199289467051,
    0.88705799822366749, 0, 0.54823199289467051,
    1.0000000000000002, -0.38196601125010549, 0,
    1.0000000000000004, 0.38196601125010543, 0,
};
const int kPentakisDodecahedronFaces[] = {
    3, 0, 1, 2,
    3, 0, 3, 1,
    3, 0, 2, 4,
    3, 0, 5, 3,
    3, 1, 6, 2,
    3, 1, 3, 7,
    3, 0, 4, 8,
    3, 0, 8, 5,
    3, 1, 9, 6,
    3, 1, 7, 9,
    3, 2, 10, 4,
    3, 3, 5, 11,
    3, 2, 6, 10,
    3, 3, 11, 7,
    3, 4, 12, 8,
    3, 5, 8, 13,
    3, 6, 9, 18,
    3, 7, 19, 9,
    3, 4, 10, 14,
    3, 5, 15, 11,
    3, 6, 16, 10,
    3, 7, 11, 17,
    3, 4, 14, 12,
    3, 5, 13, 15,
    3, 6, 18, 16,
    3, 7, 17, 19,
    3, 8, 12, 13,
    3, 9, 19, 18,
    3, 10, 20, 14,
    3, 11, 15, 21,
    3, 10, 16, 20,
    3, 11, 21, 17,
    3, 12, 22, 13,
    3, 18, 19, 23,
    3, 12, 14, 24,
    3, 13, 25, 15,
    3, 16, 18, 26,
    3, 17, 27, 19,
    3, 14, 20, 24,
    3, 15, 25, 21,
    3, 16, 26, 20,
    3, 17, 21, 27,
    3, 12, 24, 22,
    3, 13, 22, 25,
    3, 18, 23, 26,
    3, 19, 27, 23,
    3, 20, 28, 24,
    3, 21, 25, 29,
    3, 20, 26, 28,
    3, 21, 29, 27,
    3, 22, 24, 30,
    3, 22, 30, 25,
    3, 23, 31, 26,
    3, 23, 27, 31,
    3, 24, 28, 30,
    3, 25, 30, 29,
    3, 26, 31, 28,
    3, 27, 29, 31,
    3, 28, 31, 30,
    3, 29, 30, 31,
};

const double kSmallRhombicosidodecahedronVerts[] = {
    -2.1180339887498962, -0.50000000000000033, -0.50000000000000033,
    -2.1180339887498962, -0.50000000000000033, 0.50000000000000033,
    -2.1180339887498962, 0.50000000000000033, -0.50000000000000033,
    -2.1180339887498962, 0.50000000000000033, 0.50000000000000033,
    -0.50000000000000033, -2.1180339887498962, -0.50000000000000033,
    -0.50000000000000033, -2.1180339887498962, 0.50000000000000033,
    -0.50000000000000033, -0.50000000000000033, -2.1180339887498962,
    -0.50000000000000033, -0.50000000000000033, 2.1180339887498962,
    -0.50000000000000033, 0.50000000000000033, -2.1180339887498962,
    -0.50000000000000033, 0.50000000000000033, 2.1180339887498962,
    -0.50000000000000033, 2.1180339887498962, -0.50000000000000033,
    -0.50000000000000033, 2.1180339887498962, 0.50000000000000033,
    0.50000000000000033, -2.1180339887498962, -0.50000000000000033,
    0.50000000000000033, -2.1180339887498962, 0.50000000000000033,
    0.50000000000000033, -0.50000000000000033, -2.1180339887498962,
    0.50000000000000033, -0.50000000000000033, 2.1180339887498962,
    0.50000000000000033, 0.50000000000000033, -2.1180339887498962,
    0.50000000000000033, 0.50000000000000033, 2.1180339887498962,
    0.50000000000000033, 2.1180339887498962, -0.50000000000000033,
    0.50000000000000033, 2.1180339887498962, 0.50000000000000033,
    2.1180339887498962, -0.50000000000000033, -0.50000000000000033,
    2.1180339887498962, -0.50000000000000033, 0.50000000000000033,
    2.1180339887498962, 0.50000000000000033, -0.50000000000000033,
    2.1180339887498962, 0.50000000000000033, 0.50000000000000033,
    -1.6180339887498958, -1.3090169943749457, -0.80901699437494545,
    -1.6180339887498958, -1.3090169943749457, 0.80901699437494545,
    -1.6180339887498958, 1.3090169943749457, -0.80901699437494545,
    -1.6180339887498958, 1.3090169943749457, 0.80901699437494545,
    -1.3090169943749457, -0.80901699437494545, -1.6180339887498958,
    -1.3090169943749457, -0.80901699437494545, 1.6180339887498958,
    -1.3090169943749457, 0.80901699437494545, -1.6180339887498958,
    -1.3090169943749457, 0.80901699437494545, 1.6180339887498958,
    -0.80901699437494545, -1.6180339887498958, -1.3090169943749457,
    -0.80901699437494545, -1.6180339887498958, 1.3090169943749457,
    -0.80901699437494545, 1.6180339887498958, -1.3090169943749457,
    -0.80901699437494545, 1.6180339887498958, 1.3090169943749457,
    0.80901699437494545, -1.6180339887498958, -1.3090169943749457,
    0.80901699437494545, -1.6180339887498958, 1.3090169943749457,
    0.80901699437494545, 1.6180339887498958, -1.3090169943749457,
    0.80901699437494545, 1.6180339887498958, 1.3090169943749457,
    1.3090169943749457, -0.80901699437494545, -1.6180339887498958,
    1.3090169943749457, -0.80901699437494545, 1.6180339887498958,
    1.3090169943749457, 0.80901699437494545, -1.6180339887498958,
    1.3090169943749457, 0.80901699437494545, 1.6180339887498958,
    1.6180339887498958, -1.3090169943749457, -0.80901699437494545,
    1.6180339887498958, -1.3090169943749457, 0.80901699437494545,
    1.6180339887498958, 1.3090169943749457, -0.80901699437494545,
    1.6180339887498958, 1.3090169943749457, 0.80901699437494545,
    -1.8090169943749461, 0, -1.3090169943749457,
    -1.8090169943749461, 0, 1.3090169943749457,
    -1.3090169943749457, -1.8090169943749461, 0,
    -1.3090169943749457, 1.8090169943749461, 0,
    0, -1.3090169943749457, -1.8090169943749461,
    0, -1.3090169943749457, 1.8090169943749461,
    0, 1.3090169943749457, -1.8090169943749461,
    0, 1.3090169943749457, 1.8090169943749461,
    1.3090169943749457, -1.8090169943749461, 0,
    1.3090169943749457, 1.8090169943749461, 0,
    1.8090169943749461, 0, -1.3090169943749457,
    1.8090169943749461, 0, 1.3090169943749457,
};
const int kSmallRhombicosidodecahedronFaces[] = {
    4, 0, 1, 3, 2,
    3, 0, 2, 48,
    3, 1, 49, 3,
    5, 0, 24, 50, 25, 1,
    5, 2, 3, 27, 51, 26,
    4, 0, 48, 28, 24,
    4, 1, 25, 29, 49,
    4, 2, 26, 30, 48,
    4, 3, 49, 31, 27,
    3, 24, 28, 32,
    3, 25, 33, 29,
    3, 26, 34, 30,
    3, 27, 31, 35,
    5, 6, 28, 48, 30, 8,
    5, 7, 9, 31, 49, 29,
    4, 4, 50, 24, 32,
    4, 5, 33, 25, 50,
    4, 10, 34, 26, 51,
    4, 11, 51, 27, 35,
    3, 4, 5, 50,
    3, 10, 51, 11,
    4, 6, 52, 32, 28,
    4, 7, 29, 33, 53,
    4, 8, 30, 34, 54,
    4, 9, 55, 35, 31,
    4, 4, 12, 13, 5,
    5, 4, 32, 52, 36, 12,
    5, 5, 13, 37, 53, 33,
    3, 6, 14, 52,
    3, 7, 53, 15,
    4, 6, 8, 16, 14,
    4, 7, 15, 17, 9,
    3, 8, 54, 16,
    3, 9, 17, 55,
    5, 10, 18, 38, 54, 34,
    5, 11, 35, 55, 39, 19,
    4, 10, 11, 19, 18,
    4, 14, 40, 36, 52,
    4, 15, 53, 37, 41,
    4, 16, 54, 38, 42,
    4, 17, 43, 39, 55,
    3, 12, 56, 13,
    3, 18, 19, 57,
    4, 12, 36, 44, 56,
    4, 13, 56, 45, 37,
    4, 18, 57, 46, 38,
    4, 19, 39, 47, 57,
    5, 14, 16, 42, 58, 40,
    5, 15, 41, 59, 43, 17,
    3, 36, 40, 44,
    3, 37, 45, 41,
    3, 38, 46, 42,
    3, 39, 43, 47,
    4, 20, 44, 40, 58,
    4, 21, 59, 41, 45,
    4, 22, 58, 42, 46,
    4, 23, 47, 43, 59,
    5, 20, 21, 45, 56, 44,
    5, 22, 46, 57, 47, 23,
    3, 20, 58, 22,
    3, 21, 23, 59,
    4, 20, 22, 23, 21,
};

const double kDeltoidalHexecontahedronVerts[] = {
    -1.0274862967460152, 0, 0,
    -0.94250103173100785, 0, -0.36000335968940583,
    -0.94250103173100797, 0, 0.36000335968940589,
    -0.89666468261860888, -0.55416925036993991, 0,
    -0.89666468261860888, 0.55416925036993991, 0,
    -0.83125387555490626, -0.31751072718189888, -0.51374314837301005,
    -0.83125387555490626, -0.31751072718189882, 0.51374314837301005,
    -0.83125387555490626, 0.31751072718189882, -0.51374314837301005,
    -0.83125387555490626, 0.31751072718189888, 0.51374314837301005,
    -0.5824976720416073, -0.5824976720416073, -0.5824976720416073,
    -0.5824976720416073, -0.5824976720416073, 0.5824976720416073,
    -0.5824976720416073, 0.5824976720416073, -0.5824976720416073,
    -0.5824976720416073, 0.5824976720416073, 0.5824976720416073,
    -0.55416925036993991, 0, -0.89666468261860888,
    -0.55416925036993991, 0, 0.89666468261860888,
    -0.51374314837301005, -0.83125387555490626, -0.31751072718189888,
    -0.51374314837301005, -0.83125387555490626, 0.31751072718189882,
    -0.51374314837301005, 0.83125387555490626, -0.31751072718189882,
    -0.51374314837301005, 0.83125387555490626, 0.31751072718189888,
    -0.36000335968940583, -0.94250103173100785, 0,
    -0.36000335968940589, 0.94250103173100797, 0,
    -0.31751072718189888, -0.51374314837301005, -0.83125387555490626,
    -0.31751072718189882, -0.51374314837301005, 0.83125387555490626,
    -0.31751072718189882, 0.51374314837301005, -0.83125387555490626,
    -0.31751072718189888, 0.51374314837301005, 0.83125387555490626,
    0, -1.0274862967460152, 0,
    0, -0.89666468261860888, -0.55416925036993991,
    0, -0.89666468261860888, 0.55416925036993991,
    0, -0.36000335968940583, -0.94250103173100785,
    0, -0.36000335968940589, 0.94250103173100797,
    0, 0, -1.0274862967460152,
    0, 0, 1.0274862967460152,
    0, 0.36000335968940589, -0.94250103173100797,
    0, 0.36000335968940583, 0.94250103173100785,
    0, 0.89666468261860888, -0.55416925036993991,
    0, 0.89666468261860888, 0.55416925036993991,
    0, 1.0274862967460152, 0,
    0.31751072718189882, -0.51374314837301005, -0.83125387555490626,
    0.31751072718189888, -0.51374314837301005, 0.83125387555490626,
    0.31751072718189888, 0.51374314837301005, -0.83125387555490626,
    0.31751072718189882, 0.51374314837301005, 0.83125387555490626,
    0.36000335968940589, -0.94250103173100797, 0,
    0.36000335968940583, 0.94250103173100785, 0,
    0.51374314837301005, -0.83125387555490626, -0.31751072718189882,
    0.51374314837301005, -0.83125387555490626, 0.31751072718189888,
    0.51374314837301005, 0.83125387555490626, -0.31751072718189888,
    0.51374314837301005, 0.83125387555490626, 0.31751072718189882,
    0.55416925036993991, 0, -0.89666468261860888,
    0.55416925036993991, 0, 0.89666468261860888,
    0.5824976720416073, -0.5824976720416073, -0.5824976720416073,
    0.5824976720416073, -0.5824976720416073, 0.5824976720416073,
    0.5824976720416073, 0.5824976720416073, -0.5824976720416073,
    0.5824976720416073, 0.5824976720416073, 0.5824976720416073,
    0.83125387555490626, -0.31751072718189882, -0.51374314837301005,
    0.83125387555490626, -0.31751072718189888, 0.51374314837301005,
    0.83125387555490626, 0.31751072718189888, -0.51374314837301005,
    0.83125387555490626, 0.31751072718189882, 0.51374314837301005,
    0.89666468261860888, -0.55416925036993991, 0,
    0.89666468261860888, 0.55416925036993991, 0,
    0.94250103173100797, 0, -0.36000335968940589,
    0.94250103173100785, 0, 0.36000335968940583,
    1.0274862967460152, 0, 0,
};
const int kDeltoidalHexecontahedronFaces[] = {
    4, 0, 1, 5, 3,
    4, 0, 3, 6, 2,
    4, 0, 4, 7, 1,
    4, 0, 2, 8, 4,
    4, 1, 7, 13, 5,
    4, 2, 6, 14, 8,
    4, 3, 5, 9, 15,
    4, 3, 16, 10, 6,
    4, 4, 17, 11, 7,
    4, 4, 8, 12, 18,
    4, 5, 13, 21, 9,
    4, 6, 10, 22, 14,
    4, 7, 11, 23, 13,
    4, 8, 14, 24, 12,
    4, 3, 15, 19, 16,
    4, 4, 18, 20, 17,
    4, 9, 21, 26, 15,
    4, 10, 16, 27, 22,
    4, 11, 17, 34, 23,
    4, 12, 24, 35, 18,
    4, 15, 26, 25, 19,
    4, 16, 19, 25, 27,
    4, 17, 20, 36, 34,
    4, 18, 35, 36, 20,
    4, 13, 30, 28, 21,
    4, 14, 22, 29, 31,
    4, 13, 23, 32, 30,
    4, 14, 31, 33, 24,
    4, 21, 28, 37, 26,
    4, 22, 27, 38, 29,
    4, 23, 34, 39, 32,
    4, 24, 33, 40, 35,
    4, 28, 30, 47, 37,
    4, 29, 38, 48, 31,
    4, 30, 32, 39, 47,
    4, 31, 48, 40, 33,
    4, 25, 26, 43, 41,
    4, 25, 41, 44, 27,
    4, 34, 36, 42, 45,
    4, 35, 46, 42, 36,
    4, 26, 37, 49, 43,
    4, 27, 44, 50, 38,
    4, 34, 45, 51, 39,
    4, 35, 40, 52, 46,
    4, 41, 43, 57, 44,
    4, 42, 46, 58, 45,
    4, 37, 47, 53, 49,
    4, 38, 50, 54, 48,
    4, 39, 51, 55, 47,
    4, 40, 48, 56, 52,
    4, 43, 49, 53, 57,
    4, 44, 57, 54, 50,
    4, 45, 58, 55, 51,
    4, 46, 52, 56, 58,
    4, 47, 55, 59, 53,
    4, 48, 54, 60, 56,
    4, 53, 59, 61, 57,
    4, 54, 57, 61, 60,
    4, 55, 58, 61, 59,
    4, 56, 60, 61, 58,
};

const double kGreatRhombicosidodecahedronVerts[] = {
    -3.7360679774997885, -0.4999999999999965, -0.4999999999999965,
    -3.7360679774997885, -0.4999999999999965, 0.4999999999999965,
    -3.7360679774997885, 0.4999999999999965, -0.4999999999999965,
    -3.7360679774997885, 0.4999999999999965, 0.4999999999999965,
    -0.4999999999999965, -3.7360679774997885, -0.4999999999999965,
    -0.4999999999999965, -3.7360679774997885, 0.4999999999999965,
    -0.4999999999999965, -0.4999999999999965, -3.7360679774997885,
    -0.4999999999999965, -0.4999999999999965, 3.7360679774997885,
    -0.4999999999999965, 0.4999999999999965, -3.7360679774997885,
    -0.4999999999999965, 0.4999999999999965, 3.7360679774997885,
    -0.4999999999999965, 3.7360679774997885, -0.4999999999999965,
    -0.4999999999999965, 3.7360679774997885, 0.4999999999999965,
    0.4999999999999965, -3.7360679774997885, -0.4999999999999965,
    0.4999999999999965, -3.7360679774997885, 0.4999999999999965,
    0.4999999999999965, -0.4999999999999965, -3.7360679774997885,
    0.4999999999999965, -0.4999999999999965, 3.7360679774997885,
    0.4999999999999965, 0.4999999999999965, -3.7360679774997885,
    0.4999999999999965, 0.4999999999999965, 3.7360679774997885,
    0.4999999999999965, 3.7360679774997885, -0.4999999999999965,
    0.4999999999999965, 3.7360679774997885, 0.4999999999999965,
    3.7360679774997885, -0.4999999999999965, -0.4999999999999965,
    3.7360679774997885, -0.4999999999999965, 0.4999999999999965,
    3.7360679774997885, 0.4999999999999965, -0.4999999999999965,
    3.7360679774997885, 0.4999999999999965, 0.4999999999999965,
    -3.427050983124845, -1.0000000000000011, -1.3090169943749446,
    -3.427050983124845, -1.0000000000000011, 1.3090169943749446,
    -3.427050983124845, 1.0000000000000011, -1.3090169943749446,
    -3.427050983124845, 1.0000000000000011, 1.3090169943749446,
    -1.3090169943749446, -3.427050983124845, -1.0000000000000011,
    -1.3090169943749446, -3.427050983124845, 1.0000000000000011,
    -1.3090169943749446, 3.427050983124845, -1.0000000000000011,
    -1.3090169943749446, 3.427050983124845, 1.0000000000000011,
    -1.0000000000000011, -1.3090169943749446, -3.427050983124845,
    -1.0000000000000011, -1.3090169943749446, 3.427050983124845,
    -1.0000000000000011, 1.3090169943749446, -3.427050983124845,
    -1.0000000000000011, 1.3090169943749446, 3.427050983124845,
    1.0000000000000011, -1.3090169943749446, -3.427050983124845,
    1.0000000000000011, -1.3090169943749446, 3.427050983124845,
    1.0000000000000011, 1.3090169943749446, -3.427050983124845,
    1.0000000000000011, 1.3090169943749446, 3.427050983124845,
    1.3090169943749446, -3.427050983124845, -1.0000000000000011,
    1.3090169943749446, -3.427050983124845, 1.0000000000000011,
    1.3090169943749446, 3.427050983124845, -1.0000000000000011,
    1.3090169943749446, 3.427050983124845, 1.0000000000000011,
    3.427050983124845, -1.0000000000000011, -1.3090169943749446,
    3.427050983124845, -1.0000000000000011, 1.3090169943749446,
    3.427050983124845, 1.0000000000000011, -1.3090169943749446,
    3.427050983124845, 1.0000000000000011, 1.3090169943749446,
    -3.1180339887498936, -0.4999999999999965, -2.1180339887498927,
    -3.1180339887498936, -0.4999999999999965, 2.1180339887498927,
    -3.1180339887498936, 0.4999999999999965, -2.1180339887498927,
    -3.1180339887498936, 0.4999999999999965, 2.1180339887498927,
    -2.1180339887498927, -3.1180339887498936, -0.4999999999999965,
    -2.1180339887498927, -3.1180339887498936, 0.4999999999999965,
    -2.1180339887498927, 3.1180339887498936, -0.4999999999999965,
    -2.1180339887498927, 3.1180339887498936, 0.4999999999999965,
    -0.4999999999999965, -2.1180339887498927, -3.1180339887498936,
    -0.4999999999999965, -2.1180339887498927, 3.1180339887498936,
    -0.4999999999999965, 2.1180339887498927, -3.1180339887498936,
    -0.4999999999999965, 2.1180339887498927, 3.1180339887498936,
    0.4999999999999965, -2.1180339887498927, -3.1180339887498936,
    0.4999999999999965, -2.1180339887498927, 3.1180339887498936,
    0.4999999999999965, 2.1180339887498927, -3.1180339887498936,
    0.4999999999999965, 2.1180339887498927, 3.1180339887498936,
    2.1180339887498927, -3.1180339887498936, -0.4999999999999965,
    2.1180339887498927, -3.1180339887498936, 0.4999999999999965,
    2.1180339887498927, 3.1180339887498936, -0.4999999999999965,
    2.1180339887498927, 3.1180339887498936, 0.4999999999999965,
    3.1180339887498936, -0.4999999999999965, -2.1180339887498927,
    3.1180339887498936, -0.4999999999999965, 2.1180339887498927,
    3.1180339887498936, 0.4999999999999965, -2.1180339887498927,
    3.1180339887498936, 0.4999999999999965, 2.1180339887498927,
    -2.9270509831248406, -1.809016994374949, -1.6180339887498962,
    -2.9270509831248406, -1.809016994374949, 1.6180339887498962,
    -2.9270509831248406, 1.809016994374949, -1.6180339887498962,
    -2.9270509831248406, 1.809016994374949, 1.6180339887498962,
    -1.809016994374949, -1.6180339887498962, -2.9270509831248406,
    -1.809016994374949, -1.6180339887498962, 2.9270509831248406,
    -1.809016994374949, 1.6180339887498962, -2.9270509831248406,
    -1.809016994374949, 1.6180339887498962, 2.9270509831248406,
    -1.6180339887498962, -2.9270509831248406, -1.809016994374949,
    -1.6180339887498962, -2.9270509831248406, 1.809016994374949,
    -1.6180339887498962, 2.9270509831248406, -1.809016994374949,
    -1.6180339887498962, 2.9270509831248406, 1.809016994374949,
    1.6180339887498962, -2.9270509831248406, -1.809016994374949,
    1.6180339887498962, -2.9270509831248406, 1.809016994374949,
    1.6180339887498962, 2.9270509831248406, -1.809016994374949,
    1.6180339887498962, 2.9270509831248406, 1.809016994374949,
    1.809016994374949, -1.6180339887498962, -2.9270509831248406,
    1.809016994374949, -1.6180339887498962, 2.9270509831248406,
    1.809016994374949, 1.6180339887498962, -2.9270509831248406,
    1.809016994374949, 1.6180339887498962, 2.9270509831248406,
    2.9270509831248406, -1.809016994374949, -1.6180339887498962,
    2.9270509831248406, -1.809016994374949, 1.6180339887498962,
    2.9270509831248406, 1.809016994374949, -1.6180339887498962,
    2.9270509831248406, 1.809016994374949, 1.6180339887498962,
    -2.6180339887498971, -1.3090169943749446, -2.4270509831248441,
    -2.6180339887498971, -1.3090169943749446, 2.4270509831248441,
    -2.6180339887498971, 1.3090169943749446, -2.4270509831248441,
    -2.6180339887498971, 1.3090169943749446, 2.4270509831248441,
    -2.4270509831248441, -2.6180339887498971, -1.3090169943749446,
    -2.4270509831248441, -2.6180339887498971, 1.3090169943749446,
    -2.4270509831248441, 2.6180339887498971, -1.3090169943749446,
    -2.4270509831248441, 2.6180339887498971, 1.3090169943749446,
    -1.3090169943749446, -2.4270509831248441, -2.6180339887498971,
    -1.3090169943749446, -2.4270509831248441, 2.6180339887498971,
    -1.3090169943749446, 2.4270509831248441, -2.6180339887498971,
    -1.3090169943749446, 2.4270509831248441, 2.6180339887498971,
    1.3090169943749446, -2.4270509831248441, -2.6180339887498971,
    1.3090169943749446, -2.4270509831248441, 2.6180339887498971,
    1.3090169943749446, 2.4270509831248441, -2.6180339887498971,
    1.3090169943749446, 2.4270509831248441, 2.6180339887498971,
    2.4270509831248441, -2.6180339887498971, -1.3090169943749446,
    2.4270509831248441, -2.6180339887498971, 1.3090169943749446,
    2.4270509831248441, 2.6180339887498971, -1.3090169943749446,
    2.4270509831248441, 2.6180339887498971, 1.3090169943749446,
    2.6180339887498971, -1.3090169943749446, -2.4270509831248441,
    2.6180339887498971, -1.3090169943749446, 2.4270509831248441,
    2.6180339887498971, 1.3090169943749446, -2.4270509831248441,
    2.6180339887498971, 1.3090169943749446, 2.4270509831248441,
};
const int kGreatRhombicosidodecahedronFaces[] = {
    4, 0, 1, 3, 2,
    6, 0, 2, 26, 50, 48, 24,
    6, 1, 25, 49, 51, 27, 3,
    4, 24, 48, 96, 72,
    4, 25, 73, 97, 49,
    4, 26, 74, 98, 50,
    4, 27, 51, 99, 75,
    10, 0, 24, 72, 100, 52, 53, 101, 73, 25, 1,
    10, 2, 3, 27, 75, 103, 55, 54, 102, 74, 26,
    6, 72, 96, 76, 104, 80, 100,
    6, 73, 101, 81, 105, 77, 97,
    6, 74, 102, 82, 106, 78, 98,
    6, 75, 99, 79, 107, 83, 103,
    4, 28, 52, 100, 80,
    4, 29, 81, 101, 53,
    4, 30, 82, 102, 54,
    4, 31, 55, 103, 83,
    10, 6, 32, 76, 96, 48, 50, 98, 78, 34, 8,
    10, 7, 9, 35, 79, 99, 51, 49, 97, 77, 33,
    6, 4, 5, 29, 53, 52, 28,
    6, 10, 30, 54, 55, 31, 11,
    4, 32, 56, 104, 76,
    4, 33, 77, 105, 57,
    4, 34, 78, 106, 58,
    4, 35, 59, 107, 79,
    4, 4, 12, 13, 5,
    10, 4, 28, 80, 104, 56, 60, 108, 84, 40, 12,
    10, 5, 13, 41, 85, 109, 61, 57, 105, 81, 29,
    6, 6, 14, 36, 60, 56, 32,
    6, 7, 33, 57, 61, 37, 15,
    4, 6, 8, 16, 14,
    4, 7, 15, 17, 9,
    6, 8, 34, 58, 62, 38, 16,
    6, 9, 17, 39, 63, 59, 35,
    10, 10, 18, 42, 86, 110, 62, 58, 106, 82, 30,
    10, 11, 31, 83, 107, 59, 63, 111, 87, 43, 19,
    4, 10, 11, 19, 18,
    4, 36, 88, 108, 60,
    4, 37, 61, 109, 89,
    4, 38, 62, 110, 90,
    4, 39, 91, 111, 63,
    6, 12, 40, 64, 65, 41, 13,
    6, 18, 19, 43, 67, 66, 42,
    10, 14, 16, 38, 90, 118, 70, 68, 116, 88, 36,
    10, 15, 37, 89, 117, 69, 71, 119, 91, 39, 17,
    4, 40, 84, 112, 64,
    4, 41, 65, 113, 85,
    4, 42, 66, 114, 86,
    4, 43, 87, 115, 67,
    6, 84, 108, 88, 116, 92, 112,
    6, 85, 113, 93, 117, 89, 109,
    6, 86, 114, 94, 118, 90, 110,
    6, 87, 111, 91, 119, 95, 115,
    10, 20, 21, 45, 93, 113, 65, 64, 112, 92, 44,
    10, 22, 46, 94, 114, 66, 67, 115, 95, 47, 23,
    4, 44, 92, 116, 68,
    4, 45, 69, 117, 93,
    4, 46, 70, 118, 94,
    4, 47, 95, 119, 71,
    6, 20, 44, 68, 70, 46, 22,
    6, 21, 23, 47, 71, 69, 45,
    4, 20, 22, 23, 21,
};

const double kDisdyakisTriacontahedronVerts[] = {
    -1.008915563266656, 0, 0,
    -0.95984929763309024, 0, -0.3666298076181263,
    -0.95984929763309046, 0, 0.36662980761812636,
    -0.81622983657209758, -0.31177205493876692, -0.50445778163332822,
    -0.81622983657209758, -0.31177205493876686, 0.50445778163332822,
    -0.81622983657209758, 0.31177205493876686, -0.50445778163332822,
    -0.81622983657209758, 0.31177205493876692, 0.50445778163332822,
    -0.9318412725888322, -0.57590957857985392, -9.9734700035029963e-32,
    -0.9318412725888322, 0.57590957857985403, 9.9734700035029963e-32,
    -0.59321949001496344, -0.59321949001496344, -0.59321949001496355,
    -0.59321949001496355, -0.59321949001496355, 0.59321949001496355,
    -0.59321949001496355, 0.59321949001496355, -0.59321949001496355,
    -0.59321949001496344, 0.59321949001496344, 0.59321949001496355,
    -0.50445778163332822, -0.81622983657209758, -0.31177205493876692,
    -0.50445778163332822, -0.81622983657209758, 0.31177205493876686,
    -0.50445778163332822, 0.81622983657209758, -0.31177205493876686,
    -0.50445778163332822, 0.81622983657209758, 0.31177205493876692,
    -0.57590957857985392, -9.9734700035029963e-32, -0.9318412725888322,
    -0.57590957857985403, 9.9734700035029963e-32, 0.9318412725888322,
    -0.3666298076181263, -0.95984929763309024, 0,
    -0.36662980761812636, 0.95984929763309046, 0,
    -0.31177205493876686, -0.50445778163332811, -0.81622983657209747,
    -0.31177205493876686, -0.50445778163332822, 0.81622983657209758,
    -0.31177205493876686, 0.50445778163332822, -0.81622983657209758,
    -0.31177205493876686, 0.50445778163332811, 0.81622983657209747,
    0, -1.008915563266656, 0,
    -9.9734700035029963e-32, -0.9318412725888322, -0.57590957857985392,
    9.9734700035029963e-32, -0.9318412725888322, 0.57590957857985403,
    0, -0.3666298076181263, -0.95984929763309024,
    0, -0.36662980761812636, 0.95984929763309046,
    0, 0, -1.008915563266656,
    0, 0, 1.008915563266656,
    0, 0.36662980761812636, -0.95984929763309046,
    0, 0.3666298076181263, 0.95984929763309024,
    9.9734700035029963e-32, 0.9318412725888322, -0.57590957857985403,
    -9.9734700035029963e-32, 0.9318412725888322, 0.57590957857985392,
    0, 1.008915563266656, 0,
    0.31177205493876686, -0.50445778163332822, -0.81622983657209758,
    0.31177205493876686, -0.50445778163332811, 0.81622983657209747,
    0.31177205493876686, 0.50445778163332811, -0.81622983657209747,
    0.31177205493876686, 0.50445778163332822, 0.81622983657209758,
    0.36662980761812636, -0.95984929763309046, 0,
    0.3666298076181263, 0.95984929763309024, 0,
    0.57590957857985403, 9.9734700035029963e-32, -0.9318412725888322,
    0.57590957857985392, -9.9734700035029963e-32, 0.9318412725888322,
    0.50445778163332822, -0.81622983657209758, -0.31177205493876686,
    0.50445778163332822, -0.81622983657209758, 0.31177205493876692,
    0.50445778163332822, 0.81622983657209758, -0.31177205493876692,
    0.50445778163332822, 0.81622983657209758, 0.31177205493876686,
    0.59321949001496344, -0.59321949001496355, -0.59321949001496355,
    0.59321949001496355, -0.59321949001496344, 0.59321949001496344,
    0.59321949001496355, 0.59321949001496344, -0.59321949001496344,
    0.59321949001496344, 0.59321949001496355, 0.59321949001496355,
    0.9318412725888322, -0.57590957857985403, 9.9734700035029963e-32,
    0.9318412725888322, 0.57590957857985392, -9.9734700035029963e-32,
    0.81622983657209758, -0.31177205493876686, -0.50445778163332822,
    0.81622983657209758, -0.31177205493876692, 0.50445778163332822,
    0.81622983657209758, 0.31177205493876692, -0.50445778163332822,
    0.81622983657209758, 0.31177205493876686, 0.50445778163332822,
    0.95984929763309046, 0, -0.36662980761812636,
    0.95984929763309024, 0, 0.3666298076181263,
    1.008915563266656, 0, 0,
};
const int kDisdyakisTriacontahedronFaces[] = {
    3, 0, 1, 7,
    3, 0, 7, 2,
    3, 0, 8, 1,
    3, 0, 2, 8,
    3, 1, 3, 7,
    3, 2, 7, 4,
    3, 1, 8, 5,
    3, 2, 6, 8,
    3, 1, 17, 3,
    3, 2, 4, 18,
    3, 1, 5, 17,
    3, 2, 18, 6,
    3, 3, 9, 7,
    3, 4, 7, 10,
    3, 5, 8, 11,
    3, 6, 12, 8,
    3, 7, 9, 13,
    3, 7, 14, 10,
    3, 8, 15, 11,
    3, 8, 12, 16,
    3, 3, 17, 9,
    3, 4, 10, 18,
    3, 5, 11, 17,
    3, 6, 18, 12,
    3, 7, 13, 19,
    3, 7, 19, 14,
    3, 8, 20, 15,
    3, 8, 16, 20,
    3, 9, 17, 21,
    3, 10, 22, 18,
    3, 11, 23, 17,
    3, 12, 18, 24,
    3, 9, 26, 13,
    3, 10, 14, 27,
    3, 11, 15, 34,
    3, 12, 35, 16,
    3, 9, 21, 26,
    3, 10, 27, 22,
    3, 11, 34, 23,
    3, 12, 24, 35,
    3, 17, 28, 21,
    3, 18, 22, 29,
    3, 17, 23, 32,
    3, 18, 33, 24,
    3, 13, 26, 19,
    3, 14, 19, 27,
    3, 15, 20, 34,
    3, 16, 35, 20,
    3, 17, 30, 28,
    3, 18, 29, 31,
    3, 17, 32, 30,
    3, 18, 31, 33,
    3, 19, 26, 25,
    3, 19, 25, 27,
    3, 20, 36, 34,
    3, 20, 35, 36,
    3, 21, 28, 26,
    3, 22, 27, 29,
    3, 23, 34, 32,
    3, 24, 33, 35,
    3, 26, 28, 37,
    3, 27, 38, 29,
    3, 32, 34, 39,
    3, 33, 40, 35,
    3, 25, 26, 41,
    3, 25, 41, 27,
    3, 34, 36, 42,
    3, 35, 42, 36,
    3, 28, 30, 43,
    3, 29, 44, 31,
    3, 30, 32, 43,
    3, 31, 44, 33,
    3, 26, 45, 41,
    3, 27, 41, 46,
    3, 34, 42, 47,
    3, 35, 48, 42,
    3, 28, 43, 37,
    3, 29, 38, 44,
    3, 32, 39, 43,
    3, 33, 44, 40,
    3, 26, 37, 49,
    3, 27, 50, 38,
    3, 34, 51, 39,
    3, 35, 40, 52,
    3, 26, 49, 45,
    3, 27, 46, 50,
    3, 34, 47, 51,
    3, 35, 52, 48,
    3, 37, 43, 49,
    3, 38, 50, 44,
    3, 39, 51, 43,
    3, 40, 44, 52,
    3, 41, 45, 53,
    3, 41, 53, 46,
    3, 42, 54, 47,
    3, 42, 48, 54,
    3, 43, 55, 49,
    3, 44, 50, 56,
    3, 43, 51, 57,
    3, 44, 58, 52,
    3, 45, 49, 53,
    3, 46, 53, 50,
    3, 47, 54, 51,
    3, 48, 52, 54,
    3, 49, 55, 53,
    3, 50, 53, 56,
    3, 51, 54, 57,
    3, 52, 58, 54,
    3, 43, 59, 55,
    3, 44, 56, 60,
    3, 43, 57, 59,
    3, 44, 60, 58,
    3, 53, 55, 59,
    3, 53, 60, 56,
    3, 54, 59, 57,
    3, 54, 58, 60,
    3, 53, 59, 61,
    3, 53, 61, 60,
    3, 54, 61, 59,
    3, 54, 60, 61,
};

const double kSnubDodecahedronVerts[] = {
    -0.19289371135235903, 1.7461864409858268, 1.2495037884630273,
    -0.84755004678906154, 1.1031568350717538, 1.6469179406903747,
    0.1928937113523588, -1.7461864409858268, 1.2495037884630273,
    -0.33092102472984436, 0.37482165811456186, 2.0970538352520887,
    0.84755004678906154, -1.1031568350717535, 1.6469179406903747,
    2.0970538352520891, -0.33092102472984425, 0.37482165811456214,
    0.64302960591407332, 0.56771536946692114, 1.9778389654202191,
    0.33092102472984447, -0.37482165811456158, 2.0970538352520887,
    1.9778389654202189, 0.64302960591407288, 0.56771536946692125,
    1.103156835071754, 1.6469179406903744, -0.84755004678906054,
    -2.0970538352520891, 0.33092102472984447, 0.37482165811456192,
    0.72833517695719197, 1.4152654162559821, 1.4540242293380157,
    -0.64302960591407299, -0.56771536946692114, 1.9778389654202189,
    1.454024229338015, 0.7283351769571923, 1.4152654162559826,
    0.3748216581145617, 2.0970538352520891, -0.33092102472984397,
    -1.9778389654202189, -0.64302960591407254, 0.56771536946692147,
    -1.4152654162559821, 1.4540242293380163, -0.72833517695719174,
    -1.1031568350717551, -1.646917940690374, -0.84755004678906076,
    -0.72833517695719241, -1.415265416255981, 1.4540242293380152,
    1.2495037884630271, -0.19289371135235969, 1.746186440985827,
    0.56771536946692103, 1.9778389654202184, 0.64302960591407343,
    -1.4540242293380148, -0.72833517695719185, 1.4152654162559826,
    -1.746186440985827, 1.2495037884630267, 0.19289371135235928,
    -0.37482165811456175, -2.0970538352520882, -0.33092102472984386,
    1.4152654162559819, -1.4540242293380157, -0.72833517695719185,
    0.56771536946692092, -1.9778389654202189, -0.6430296059140721,
    1.6469179406903731, -0.84755004678906232, 1.1031568350717549,
    1.4152654162559823, 1.454024229338015, 0.72833517695719141,
    -1.2495037884630271, 0.19289371135236, 1.7461864409858268,
    -1.103156835071754, 1.6469179406903747, 0.84755004678906165,
    -0.56771536946692158, -1.9778389654202182, 0.6430296059140731,
    1.7461864409858268, -1.2495037884630273, 0.19289371135235941,
    1.2495037884630271, 0.19289371135235842, -1.7461864409858256,
    1.4540242293380159, -0.72833517695719185, -1.4152654162559819,
    -0.56771536946692047, 1.9778389654202184, -0.6430296059140721,
    1.7461864409858272, 1.249503788463026, -0.19289371135235825,
    -1.6469179406903731, 0.84755004678906287, 1.1031568350717547,
    -0.37482165811456214, 2.0970538352520887, 0.33092102472984425,
    -1.4152654162559828, -1.4540242293380155, 0.72833517695719174,
    1.1031568350717533, -1.6469179406903742, 0.84755004678906121,
    1.6469179406903747, 0.8475500467890611, -1.1031568350717538,
    -0.64302960591407232, 0.56771536946692114, -1.9778389654202193,
    -1.2495037884630282, -0.19289371135235808, -1.7461864409858259,
    0.33092102472984503, 0.37482165811456286, -2.0970538352520887,
    -1.4540242293380157, 0.72833517695719197, -1.4152654162559819,
    -1.7461864409858276, -1.249503788463026, -0.19289371135235819,
    0.37482165811456181, -2.0970538352520882, 0.33092102472984442,
    2.0970538352520891, 0.33092102472984386, -0.37482165811456108,
    -0.72833517695719241, 1.4152654162559826, -1.454024229338015,
    -1.6469179406903747, -0.84755004678906209, -1.1031568350717542,
    0.6430296059140721, -0.56771536946692158, -1.9778389654202193,
    -0.33092102472984469, -0.37482165811456319, -2.0970538352520882,
    1.9778389654202193, -0.64302960591407321, -0.56771536946692069,
    0.19289371135235961, 1.7461864409858274, -1.2495037884630262,
    -2.0970538352520887, -0.33092102472984364, -0.37482165811456053,
    0.7283351769571923, -1.4152654162559826, -1.4540242293380148,
    -0.84755004678906021, -1.1031568350717547, -1.6469179406903744,
    0.84755004678906221, 1.1031568350717538, -1.646917940690374,
    -1.9778389654202191, 0.6430296059140731, -0.56771536946692081,
    -0.1928937113523598, -1.7461864409858276, -1.249503788463026,
};
const int kSnubDodecahedronFaces[] = {
    3, 10, 54, 15,
    3, 10, 58, 54,
    3, 15, 54, 45,
    3, 10, 22, 58,
    3, 45, 54, 49,
    3, 10, 36, 22,
    3, 15, 45, 38,
    3, 16, 58, 22,
    5, 42, 49, 54, 58, 44,
    5, 10, 15, 21, 28, 36,
    3, 15, 38, 21,
    3, 16, 44, 58,
    3, 17, 45, 49,
    3, 22, 36, 29,
    3, 42, 56, 49,
    3, 1, 36, 28,
    3, 17, 49, 56,
    3, 18, 21, 38,
    3, 16, 48, 44,
    3, 1, 29, 36,
    3, 12, 28, 21,
    3, 41, 42, 44,
    5, 17, 23, 30, 38, 45,
    5, 16, 22, 29, 37, 34,
    3, 12, 21, 18,
    3, 41, 44, 48,
    3, 18, 38, 30,
    3, 16, 34, 48,
    3, 42, 51, 56,
    3, 1, 28, 3,
    3, 41, 51, 42,
    3, 3, 28, 12,
    3, 17, 56, 59,
    3, 0, 29, 1,
    3, 17, 59, 23,
    3, 0, 37, 29,
    3, 2, 18, 30,
    3, 34, 53, 48,
    3, 3, 12, 7,
    3, 41, 43, 51,
    3, 23, 46, 30,
    3, 14, 34, 37,
    3, 23, 59, 25,
    3, 2, 30, 46,
    5, 50, 55, 59, 56, 51,
    5, 2, 4, 7, 12, 18,
    5, 41, 48, 53, 57, 43,
    5, 0, 1, 3, 6, 11,
    3, 14, 53, 34,
    3, 0, 20, 37,
    3, 23, 25, 46,
    3, 14, 37, 20,
    3, 43, 50, 51,
    3, 3, 7, 6,
    3, 25, 59, 55,
    3, 0, 11, 20,
    3, 2, 46, 39,
    3, 9, 53, 14,
    3, 2, 39, 4,
    3, 9, 57, 53,
    3, 32, 50, 43,
    3, 6, 7, 19,
    3, 4, 19, 7,
    3, 32, 43, 57,
    3, 24, 25, 55,
    3, 11, 27, 20,
    3, 33, 55, 50,
    3, 6, 13, 11,
    5, 24, 31, 39, 46, 25,
    5, 9, 14, 20, 27, 35,
    3, 32, 33, 50,
    3, 6, 19, 13,
    3, 24, 55, 33,
    3, 4, 39, 26,
    3, 9, 40, 57,
    3, 11, 13, 27,
    3, 4, 26, 19,
    3, 32, 57, 40,
    3, 26, 39, 31,
    3, 9, 35, 40,
    3, 24, 33, 52,
    3, 8, 27, 13,
    5, 32, 40, 47, 52, 33,
    5, 5, 8, 13, 19, 26,
    3, 24, 52, 31,
    3, 8, 35, 27,
    3, 5, 26, 31,
    3, 35, 47, 40,
    3, 5, 31, 52,
    3, 8, 47, 35,
    3, 5, 52, 47,
    3, 5, 47, 8,
};

const double kPentagonalHexecontahedronVerts[] = {
    -0.99999999999999989, -0.10418586612062763, 0.091983194761030826,
    -1, 0.10418586612062676, -0.091983194761031339,
    -0.94315125924388199, -0.36025172449889897, 3.4240007345762053e-16,
    -0.94315125924388166, 0.36025172449890008, -2.5124161234227971e-16,
    -0.88953429781332038, -0.3933888290364782, -0.27072045549020185,
    -0.88953429781331961, 0.39338882903647948, 0.2707204554902034,
    -0.83268555705720204, -0.54222076455362733, 0.17873726072917212,
    -0.83268555705720171, 0.54222076455362789, -0.17873726072917154,
    -0.90052308507218615, 1.6194333158727762e-16, -0.55655387422852354,
    -0.9005230850721857, 1.8776038444901741e-16, 0.55655387422852443,
    -0.78534843169269331, -0.45777923544637195, 0.43929672802072345,
    -0.78534843169269319, 0.45777923544637233, -0.43929672802072328,
    -0.72849969093657518, -0.60661117096352157, -0.34731353325969122,
    -0.72849969093657518, 0.60661117096352124, 0.347313533259692,
    -0.60661117096352069, -0.34731353325969211, -0.72849969093657585,
    -0.60661117096352146, 0.34731353325969233, 0.72849969093657485,
    -0.58289953474498168, -0.58289953474498279, -0.58289953474498291,
    -0.58289953474498202, -0.58289953474498257, 0.58289953474498313,
    -0.58289953474498268, 0.58289953474498213, -0.58289953474498268,
    -0.58289953474498213, 0.58289953474498235, 0.58289953474498235,
    -0.542220764553628, -0.17873726072917187, 0.83268555705720182,
    -0.54222076455362789, 0.17873726072917209, -0.83268555705720182,
    -0.55655387422852387, -0.90052308507218592, 9.9747704238540561e-17,
    -0.55655387422852376, 0.90052308507218592, -1.6429033639289036e-16,
    -0.45777923544637228, -0.43929672802072356, 0.78534843169269308,
    -0.4577792354463725, 0.43929672802072284, -0.78534843169269319,
    -0.43929672802072256, -0.78534843169269319, 0.45777923544637333,
    -0.439296728020722, 0.78534843169269419, -0.45777923544637178,
    -0.39338882903647987, -0.27072045549020252, -0.88953429781331983,
    -0.3933888290364787, 0.27072045549020241, 0.88953429781331994,
    -0.36025172449889997, -2.2011433293704105e-16, -0.94315125924388177,
    -0.36025172449889975, -1.7342341382918408e-16, 0.94315125924388166,
    -0.34731353325969266, -0.72849969093657507, -0.60661117096352102,
    -0.347313533259692, 0.72849969093657485, 0.60661117096352146,
    -0.27072045549020313, -0.88953429781332016, -0.39338882903647787,
    -0.27072045549020229, 0.88953429781331994, 0.39338882903647893,
    -0.1787372607291732, -0.83268555705720149, 0.54222076455362833,
    -0.17873726072917223, 0.83268555705720249, -0.54222076455362689,
    -0.10418586612062709, -0.091983194761030979, 1,
    -0.10418586612062715, 0.091983194761030201, -1.0000000000000002,
    -0.091983194761031117, -1.0000000000000002, 0.10418586612062736,
    -0.091983194761031908, 0.99999999999999978, -0.10418586612062757,
    2.5346498944265401e-16, -0.94315125924388232, -0.36025172449889864,
    -5.8919493159915103e-16, -0.9431512592438821, 0.3602517244988992,
    2.3704748536688475e-16, -0.55655387422852454, -0.90052308507218537,
    -4.3888989864957839e-16, -0.55655387422852398, 0.90052308507218581,
    8.3318670599251465e-17, 0.55655387422852443, -0.90052308507218559,
    1.2087074748905502e-16, 0.55655387422852387, 0.9005230850721857,
    -1.4029509503360941e-15, 0.94315125924388199, -0.36025172449889947,
    4.8914296208231398e-16, 0.94315125924388199, 0.36025172449889947,
    0.091983194761030687, -1.0000000000000004, -0.1041858661206269,
    0.091983194761031062, 1, 0.10418586612062807,
    0.10418586612062658, -0.091983194761030937, -1,
    0.10418586612062689, 0.091983194761030784, 1,
    0.17873726072917218, -0.83268555705720215, -0.54222076455362744,
    0.17873726072917223, 0.83268555705720182, 0.54222076455362789,
    0.27072045549020296, -0.88953429781332016, 0.3933888290364787,
    0.27072045549020335, 0.88953429781331983, -0.39338882903647887,
    0.34731353325969255, -0.72849969093657507, 0.60661117096352102,
    0.34731353325969277, 0.72849969093657507, -0.60661117096352113,
    0.36025172449890103, -6.2254558810476289e-17, -0.94315125924388143,
    0.36025172449889953, -9.1158461115340376e-17, 0.94315125924388166,
    0.39338882903647859, -0.27072045549020257, 0.88953429781331994,
    0.3933888290364807, 0.27072045549020207, -0.8895342978133195,
    0.43929672802072295, -0.78534843169269353, -0.457779235446372,
    0.43929672802072356, 0.78534843169269331, 0.45777923544637233,
    0.45777923544637256, -0.43929672802072317, -0.78534843169269319,
    0.45777923544637233, 0.43929672802072334, 0.78534843169269297,
    0.55655387422852376, -0.90052308507218581, 1.2556475710028053e-16,
    0.55655387422852431, 0.9005230850721857, 3.0276361992404078e-16,
    0.54222076455362811, -0.17873726072917123, -0.83268555705720193,
    0.54222076455362811, 0.17873726072917182, 0.8326855570572016,
    0.58289953474498268, -0.58289953474498246, -0.58289953474498224,
    0.58289953474498224, -0.58289953474498313, 0.58289953474498213,
    0.58289953474498246, 0.58289953474498302, -0.58289953474498191,
    0.58289953474498257, 0.58289953474498291, 0.58289953474498202,
    0.60661117096352135, -0.34731353325969239, 0.72849969093657474,
    0.60661117096352146, 0.34731353325969105, -0.72849969093657563,
    0.72849969093657452, -0.60661117096352168, 0.34731353325969283,
    0.72849969093657518, 0.60661117096352168, -0.34731353325969172,
    0.78534843169269297, -0.45777923544637295, -0.439296728020723,
    0.78534843169269286, 0.45777923544637272, 0.43929672802072289,
    0.90052308507218559, -5.2807608126286189e-17, -0.55655387422852409,
    0.90052308507218581, -1.1617673787782951e-16, 0.5565538742285242,
    0.83268555705720149, -0.54222076455362811, -0.17873726072917209,
    0.8326855570572016, 0.542220764553628, 0.17873726072917204,
    0.8895342978133195, -0.39338882903647937, 0.27072045549020363,
    0.88953429781332005, 0.39338882903647926, -0.27072045549020235,
    0.94315125924388166, -0.36025172449890003, -1.4896626572506838e-16,
    0.94315125924388177, 0.36025172449889997, 4.1577151776996775e-16,
    0.99999999999999978, -0.10418586612062732, -0.091983194761031076,
    0.99999999999999967, 0.10418586612062757, 0.091983194761031326,
};
const int kPentagonalHexecontahedronFaces[] = {
    5, 0, 1, 8, 4, 2,
    5, 0, 9, 5, 3, 1,
    5, 0, 2, 6, 10, 9,
    5, 1, 3, 7, 11, 8,
    5, 2, 4, 12, 22, 6,
    5, 3, 5, 13, 23, 7,
    5, 4, 8, 14, 16, 12,
    5, 5, 9, 15, 19, 13,
    5, 9, 10, 17, 24, 20,
    5, 8, 11, 18, 25, 21,
    5, 6, 22, 26, 17, 10,
    5, 7, 23, 27, 18, 11,
    5, 8, 21, 30, 28, 14,
    5, 9, 20, 31, 29, 15,
    5, 12, 16, 32, 34, 22,
    5, 13, 19, 33, 35, 23,
    5, 14, 28, 44, 32, 16,
    5, 15, 29, 47, 33, 19,
    5, 17, 26, 36, 45, 24,
    5, 18, 27, 37, 46, 25,
    5, 20, 24, 45, 38, 31,
    5, 21, 25, 46, 39, 30,
    5, 22, 40, 43, 36, 26,
    5, 23, 41, 48, 37, 27,
    5, 22, 34, 42, 50, 40,
    5, 23, 35, 49, 51, 41,
    5, 28, 30, 39, 52, 44,
    5, 29, 31, 38, 53, 47,
    5, 32, 44, 54, 42, 34,
    5, 33, 47, 55, 49, 35,
    5, 36, 43, 56, 58, 45,
    5, 37, 48, 57, 59, 46,
    5, 38, 45, 62, 61, 53,
    5, 39, 46, 63, 60, 52,
    5, 40, 50, 68, 56, 43,
    5, 41, 51, 69, 57, 48,
    5, 42, 54, 64, 68, 50,
    5, 49, 55, 65, 69, 51,
    5, 44, 52, 60, 70, 66,
    5, 47, 53, 61, 71, 67,
    5, 44, 66, 72, 64, 54,
    5, 47, 67, 75, 65, 55,
    5, 45, 58, 73, 76, 62,
    5, 46, 59, 74, 77, 63,
    5, 56, 68, 78, 73, 58,
    5, 57, 69, 79, 74, 59,
    5, 61, 62, 76, 83, 71,
    5, 60, 63, 77, 82, 70,
    5, 64, 72, 80, 84, 68,
    5, 65, 75, 81, 85, 69,
    5, 66, 70, 82, 80, 72,
    5, 67, 71, 83, 81, 75,
    5, 73, 78, 86, 83, 76,
    5, 74, 79, 87, 82, 77,
    5, 68, 84, 88, 86, 78,
    5, 69, 85, 89, 87, 79,
    5, 80, 82, 90, 88, 84,
    5, 81, 83, 91, 89, 85,
    5, 83, 86, 88, 90, 91,
    5, 82, 87, 89, 91, 90,
};

const RawSolid kSolids[] = {
    {"Tetrahedron", "{3,3,3}", "Platonic", false,
     kTetrahedronVerts, 4, kTetrahedronFaces, 16},
    {"Cube", "{4,4,4}", "Platonic", false,
     kCubeVerts, 8, kCubeFaces, 30},
    {"Octahedron", "{3,3,3,3}", "Platonic", false,
     kOctahedronVerts, 6, kOctahedronFaces, 32},
    {"Dodecahedron", "{5,5,5}", "Platonic", false,
     kDodecahedronVerts, 20, kDodecahedronFaces, 72},
    {"Icosahedron", "{3,3,3,3,3}", "Platonic", false,
     kIcosahedronVerts, 12, kIcosahedronFaces, 80},
    {"Truncated Tetrahedron", "{3,6,6}", "Archimedean", false,
     kTruncatedTetrahedronVerts, 12, kTruncatedTetrahedronFaces, 44},
    {"Triakis Tetrahedron", "[3,6,6]", "Catalan", false,
     kTriakisTetrahedronVerts, 8, kTriakisTetrahedronFaces, 48},
    {"Cuboctahedron", "{3,4,3,4}", "Archimedean", false,
     kCuboctahedronVerts, 12, kCuboctahedronFaces, 62},
    {"Rhombic Dodecahedron", "[3,4,3,4]", "Catalan", false,
     kRhombicDodecahedronVerts, 14, kRhombicDodecahedronFaces, 60},
    {"Truncated Cube", "{3,8,8}", "Archimedean", false,
     kTruncatedCubeVerts, 24, kTruncatedCubeFaces, 86},
    {"Triakis Octahedron", "[3,8,8]", "Catalan", false,
     kTriakisOctahedronVerts, 14, kTriakisOctahedronFaces, 96},
    {"Truncated Octahedron", "{4,6,6}", "Archimedean", false,
     kTruncatedOctahedronVerts, 24, kTruncatedOctahedronFaces, 86},
    {"Tetrakis Hexahedron", "[4,6,6]", "Catalan", false,
     kTetrakisHexahedronVerts, 14, kTetrakisHexahedronFaces, 96},
    {"Small Rhombicuboctahedron", "{3,4,4,4}", "Archimedean", false,
     kSmallRhombicuboctahedronVerts, 24, kSmallRhombicuboctahedronFaces, 122},
    {"Deltoidal Icositetrahedron", "[3,4,4,4]", "Catalan", false,
     kDeltoidalIcositetrahedronVerts, 26, kDeltoidalIcositetrahedronFaces, 120},
    {"Great Rhombicuboctahedron", "{4,6,8}", "Archimedean", false,
     kGreatRhombicuboctahedronVerts, 48, kGreatRhombicuboctahedronFaces, 170},
    {"Disdyakis Dodecahedron", "[4,6,8]", "Catalan", false,
     kDisdyakisDodecahedronVerts, 26, kDisdyakisDodecahedronFaces, 192},
    {"Snub Cube", "{3,3,3,3,4}", "Archimedean", true,
     kSnubCubeVerts, 24, kSnubCubeFaces, 158},
    {"Pentagonal Icositetrahedron", "[3,3,3,3,4]", "Catalan", true,
     kPentagonalIcositetrahedronVerts, 38, kPentagonalIcositetrahedronFaces, 144},
    {"Icosidodecahedron", "{3,5,3,5}", "Archimedean", false,
     kIcosidodecahedronVerts, 30, kIcosidodecahedronFaces, 152},
    {"Rhombic Triacontahedron", "[3,5,3,5]", "Catalan", false,
     kRhombicTriacontahedronVerts, 32, kRhombicTriacontahedronFaces, 150},
    {"Truncated Dodecahedron", "{3,10,10}", "Archimedean", false,
     kTruncatedDodecahedronVerts, 60, kTruncatedDodecahedronFaces, 212},
    {"Triakis Icosahedron", "[3,10,10]", "Catalan", false,
     kTriakisIcosahedronVerts, 32, kTriakisIcosahedronFaces, 240},
    {"Truncated Icosahedron", "{5,6,6}", "Archimedean", false,
     kTruncatedIcosahedronVerts, 60, kTruncatedIcosahedronFaces, 212},
    {"Pentakis Dodecahedron", "[5,6,6]", "Catalan", false,
     kPentakisDodecahedronVerts, 32, kPentakisDodecahedronFaces, 240},
    {"Small Rhombicosidodecahedron", "{3,4,5,4}", "Archimedean", false,
     kSmallRhombicosidodecahedronVerts, 60, kSmallRhombicosidodecahedronFaces, 302},
    {"Deltoidal Hexecontahedron", "[3,4,5,4]", "Catalan", false,
     kDeltoidalHexecontahedronVerts, 62, kDeltoidalHexecontahedronFaces, 300},
    {"Great Rhombicosidodecahedron", "{4,6,10}", "Archimedean", false,
     kGreatRhombicosidodecahedronVerts, 120, kGreatRhombicosidodecahedronFaces, 422},
    {"Disdyakis Triacontahedron", "[4,6,10]", "Catalan", false,
     kDisdyakisTriacontahedronVerts, 62, kDisdyakisTriacontahedronFaces, 480},
    {"Snub Dodecahedron", "{3,3,3,3,5}", "Archimedean", true,
     kSnubDodecahedronVerts, 60, kSnubDodecahedronFaces, 392},
    {"Pentagonal Hexecontahedron", "[3,3,3,3,5]", "Catalan", true,
     kPentagonalHexecontahedronVerts, 92, kPentagonalHexecontahedronFaces, 360},
};
}  // namespace

const RawSolid* raw_solids() { return kSolids; }
int raw_solid_count() { return 31; }

}  // namespace peelkit::detail
