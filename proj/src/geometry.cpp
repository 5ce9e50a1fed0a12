#include "peelkit/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <Eigen/Geometry>

namespace peelkit {

bool Polyhedron::adjacent(int f, int g) const {
    return neighbor_slot(f, g) >= 0;
}

int Polyhedron::neighbor_slot(int f, int g) const {
    const auto& nb = neighbors[f];
    for (int j = 0; j < static_cast<int>(nb.size()); ++j)
        if (nb[j] == g) return j;
    return -1;
}

Vec3 Polyhedron::face_normal(int face) const {
    const auto& cyc = faces[face];
    Vec3 n = Vec3::Zero();
    const Vec3& c = centroids[face];
    for (size_t j = 0; j < cyc.size(); ++j) {
        const Vec3& a = vertices[cyc[j]];
        const Vec3& b = vertices[cyc[(j + 1) % cyc.size()]];
        n += (a - c).cross(b - c);
    }
    double len = n.norm();
    if (len == 0.0) throw std::runtime_error("face " + std::to_string(face) + " has zero normal");
    return n / len;
}

namespace {

Vec3 newell_normal(const std::vector<Vec3>& verts, const std::vector<int>& cyc) {
    Vec3 c = Vec3::Zero();
    for (int v : cyc) c += verts[v];
    c /= static_cast<double>(cyc.size());
    Vec3 n = Vec3::Zero();
    for (size_t j = 0; j < cyc.size(); ++j) {
        const Vec3& a = verts[cyc[j]];
        const Vec3& b = verts[cyc[(j + 1) % cyc.size()]];
        n += (a - c).cross(b - c);
    }
    return n;
}

}  // namespace

Polyhedron build(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces,
                 std::string name, double tol) {
    Polyhedron p;
    const int m = static_cast<int>(vertices.size());
    const int n = static_cast<int>(faces.size());
    if (m < 4 || n < 4)
        throw std::runtime_error("need at least 4 vertices and 4 faces, got " +
                                 std::to_string(m) + "/" + std::to_string(n));

    for (int f = 0; f < n; ++f) {
        const auto& cyc = faces[f];
        if (cyc.size() < 3)
            throw std::runtime_error("degenerate face " + std::to_string(f) +
                                     ": fewer than 3 vertices");
        std::set<int> distinct(cyc.begin(), cyc.end());
        if (distinct.size() != cyc.size())
            throw std::runtime_error("degenerate face " + std::to_string(f) +
                                     ": repeated vertex");
        for (int v : cyc)
            if (v < 0 || v >= m)
                throw std::runtime_error("face " + std::to_string(f) +
                                         " references out-of-range vertex " + std::to_string(v));
    }

    // Center on the vertex mean; this is the solid centroid used everywhere.
    Vec3 mean = Vec3::Zero();
    for (const Vec3& v : vertices) mean += v;
    mean /= static_cast<double>(m);
    for (Vec3& v : vertices) v -= mean;

    // Re-orient cycles so every face winds counter-clockwise seen from
    // outside (outward Newell normal points away from the centered origin).
    for (auto& cyc : faces) {
        Vec3 nrm = newell_normal(vertices, cyc);
        Vec3 c = Vec3::Zero();
        for (int v : cyc) c += vertices[v];
        c /= static_cast<double>(cyc.size());
        if (nrm.dot(c) < 0.0) std::reverse(cyc.begin() + 1, cyc.end());
    }

    // Each undirected edge must be traversed exactly once in each direction.
    std::map<std::pair<int, int>, int> directed;  // (a,b) -> face
    for (int f = 0; f < n; ++f) {
        const auto& cyc = faces[f];
        for (size_t j = 0; j < cyc.size(); ++j) {
            int a = cyc[j], b = cyc[(j + 1) % cyc.size()];
            auto [it, fresh] = directed.emplace(std::make_pair(a, b), f);
            if (!fresh)
                throw std::runtime_error("non-manifold edge (" + std::to_string(a) + "," +
                                         std::to_string(b) + "): same direction in faces " +
                                         std::to_string(it->second) + " and " + std::to_string(f));
        }
    }

    std::map<std::pair<int, int>, int> edge_id;
    p.edges.reserve(directed.size() / 2);
    for (const auto& [e, f] : directed) {
        (void)f;
        auto rev = std::make_pair(e.second, e.first);
        if (!directed.count(rev))
            throw std::runtime_error("non-manifold edge (" + std::to_string(e.first) + "," +
                                     std::to_string(e.second) + "): present in only one face");
        if (e.first < e.second) {
            edge_id[e] = static_cast<int>(p.edges.size());
            p.edges.push_back({e.first, e.second});
        }
    }

    const int l = static_cast<int>(p.edges.size());
    if (m - l + n != 2)
        throw std::runtime_error("Euler relation violated: " + std::to_string(m) + " - " +
                                 std::to_string(l) + " + " + std::to_string(n) +
                                 " = " + std::to_string(m - l + n));

    p.neighbors.resize(n);
    p.face_edges.resize(n);
    for (int f = 0; f < n; ++f) {
        const auto& cyc = faces[f];
        for (size_t j = 0; j < cyc.size(); ++j) {
            int a = cyc[j], b = cyc[(j + 1) % cyc.size()];
            p.neighbors[f].push_back(directed.at({b, a}));
            p.face_edges[f].push_back(edge_id.at(a < b ? std::make_pair(a, b)
                                                       : std::make_pair(b, a)));
        }
    }

    // Face adjacency must be connected (disjoint shells would already have
    // tripped the Euler check, but be explicit).
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            ++count;
            for (int g : p.neighbors[f])
                if (!seen[g]) {
                    seen[g] = 1;
                    stack.push_back(g);
                }
        }
        if (count != n) throw std::runtime_error("face adjacency graph is disconnected");
    }

    p.name = std::move(name);
    p.vertices = std::move(vertices);
    p.faces = std::move(faces);
    p.centroids.resize(n);
    for (int f = 0; f < n; ++f) {
        Vec3 c = Vec3::Zero();
        for (int v : p.faces[f]) c += p.vertices[v];
        p.centroids[f] = c / static_cast<double>(p.faces[f].size());
    }

    // Convex-position check: every vertex inside (or on) every face's
    // halfspace. A miss is a warning, not an error.
    double worst = 0.0;
    for (int f = 0; f < n; ++f) {
        Vec3 nrm = p.face_normal(f);
        double off = nrm.dot(p.centroids[f]);
        for (const Vec3& v : p.vertices) worst = std::max(worst, nrm.dot(v) - off);
    }
    if (worst > std::max(tol, 1e-7))
        p.warnings.push_back("vertex set not in convex position (max face-plane excess " +
                             std::to_string(worst) + ")");

    return p;
}

Polyhedron mirror(const Polyhedron& p) {
    std::vector<Vec3> verts = p.vertices;
    for (Vec3& v : verts) v.y() = -v.y();
    std::vector<std::vector<int>> faces = p.faces;
    // Reverse each cycle (keeping the lead vertex) to restore outward winding.
    for (auto& cyc : faces) std::reverse(cyc.begin() + 1, cyc.end());
    return build(std::move(verts), std::move(faces), p.name);
}

Polyhedron rotate_to_top(const Polyhedron& p, int f1) {
    if (f1 < 0 || f1 >= p.face_count())
        throw std::runtime_error("face index " + std::to_string(f1) + " out of range");
    const Vec3 c1 = p.centroids[f1];
    if (c1.norm() < kDefaultTolerance)
        throw std::runtime_error("face " + std::to_string(f1) +
                                 " centroid coincides with the solid centroid; no axis");
    Eigen::Quaterniond q = Eigen::Quaterniond::FromTwoVectors(c1, Vec3::UnitZ());
    std::vector<Vec3> verts = p.vertices;
    for (Vec3& v : verts) v = q * v;
    return build(std::move(verts), p.faces, p.name);
}

}  // namespace peelkit
