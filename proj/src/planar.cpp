#include "peelkit/planar.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace peelkit {
namespace {

char* fmt(char* buf, size_t n, double v) {
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, n, "%.6f", v);
    return buf;
}

}  // namespace

Vec2 PlanarEmbedding::face_center(const Polyhedron& p, int f) const {
    Vec2 c(0, 0);
    for (int v : p.faces[f]) c += positions[v];
    return c / static_cast<double>(p.faces[f].size());
}

PlanarEmbedding embed(const Polyhedron& p, const PeelSequence& seq) {
    if (seq.order.empty()) throw std::runtime_error("empty peel sequence");
    int f1 = seq.order[0];
    int n = p.vertex_count();

    PlanarEmbedding e;
    e.solid = p.name;
    e.outer_face = f1;
    e.outer_cycle = p.faces[f1];
    e.trace = seq.order;
    e.remaining = seq.remaining;
    e.positions.assign(n, Vec2(0, 0));

    // Outer boundary: congruent copy of the start face, laid out in its own
    // plane. With v = normal x u the cycle keeps the orientation it has when
    // seen from outside the solid.
    Vec3 nrm = p.face_normal(f1);
    Vec3 c1 = p.centroids[f1];
    Vec3 u = p.vertices[p.faces[f1][1]] - p.vertices[p.faces[f1][0]];
    u -= nrm * nrm.dot(u);
    if (u.norm() <= kDefaultTolerance)
        throw std::runtime_error("degenerate start face edge");
    u.normalize();
    Vec3 v = nrm.cross(u);
    std::vector<char> fixed(n, 0);
    for (int w : p.faces[f1]) {
        Vec3 d = p.vertices[w] - c1;
        e.positions[w] = Vec2(d.dot(u), d.dot(v));
        fixed[w] = 1;
    }

    // Interior vertices: deg(v) * pos(v) - sum(neighbor pos) = boundary load.
    // The matrix is the interior principal submatrix of the graph Laplacian,
    // symmetric positive definite, so a sparse Cholesky factorization does.
    std::vector<int> row(n, -1);
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (!fixed[i]) row[i] = m++;
    std::vector<std::vector<int>> nbr(n);
    for (const auto& ed : p.edges) {
        nbr[ed[0]].push_back(ed[1]);
        nbr[ed[1]].push_back(ed[0]);
    }
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < n; ++i) {
        if (fixed[i]) continue;
        trip.emplace_back(row[i], row[i], static_cast<double>(nbr[i].size()));
        for (int j : nbr[i]) {
            if (fixed[j]) {
                bx[row[i]] += e.positions[j].x();
                by[row[i]] += e.positions[j].y();
            } else {
                trip.emplace_back(row[i], row[j], -1.0);
            }
        }
    }
    if (m > 0) {
        Eigen::SparseMatrix<double> lap(m, m);
        lap.setFromTriplets(trip.begin(), trip.end());
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("barycentric system factorization failed");
        Eigen::VectorXd x = solver.solve(bx), y = solver.solve(by);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("barycentric system solve failed");
        for (int i = 0; i < n; ++i)
            if (!fixed[i]) e.positions[i] = Vec2(x[row[i]], y[row[i]]);
    }

    // Rotate the drawing so the second face's centroid lands on +y.
    if (seq.order.size() >= 2) {
        Vec2 c2 = e.face_center(p, seq.order[1]);
        if (c2.norm() <= kDefaultTolerance)
            throw std::runtime_error("second face centroid projects to the origin");
        double phi = M_PI / 2 - std::atan2(c2.y(), c2.x());
        double cs = std::cos(phi), sn = std::sin(phi);
        for (Vec2& q : e.positions) q = Vec2(cs * q.x() - sn * q.y(), sn * q.x() + cs * q.y());
    }
    return e;
}

int crossing_pairs(const Polyhedron& p, const PlanarEmbedding& e, double tol) {
    // Proper crossings only: each segment must cut the other's supporting
    // line with clearance above tol on both sides. Shared endpoints are
    // skipped by vertex id, so hinge contact never counts.
    auto side = [&](const Vec2& a, const Vec2& b, const Vec2& q) {
        Vec2 d = b - a;
        double len = d.norm();
        return (d.x() * (q.y() - a.y()) - d.y() * (q.x() - a.x())) / len;
    };
    int count = 0;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        for (size_t j = i + 1; j < p.edges.size(); ++j) {
            const auto& e1 = p.edges[i];
            const auto& e2 = p.edges[j];
            if (e1[0] == e2[0] || e1[0] == e2[1] || e1[1] == e2[0] || e1[1] == e2[1])
                continue;
            const Vec2 &a1 = e.positions[e1[0]], &b1 = e.positions[e1[1]];
            const Vec2 &a2 = e.positions[e2[0]], &b2 = e.positions[e2[1]];
            double s1 = side(a1, b1, a2), s2 = side(a1, b1, b2);
            double s3 = side(a2, b2, a1), s4 = side(a2, b2, b1);
            if (((s1 > tol && s2 < -tol) || (s1 < -tol && s2 > tol)) &&
                ((s3 > tol && s4 < -tol) || (s3 < -tol && s4 > tol)))
                ++count;
        }
    }
    return count;
}

double barycentric_residual(const Polyhedron& p, const PlanarEmbedding& e) {
    std::vector<char> fixed(p.vertex_count(), 0);
    for (int w : e.outer_cycle) fixed[w] = 1;
    std::vector<Vec2> sum(p.vertex_count(), Vec2(0, 0));
    std::vector<int> deg(p.vertex_count(), 0);
    for (const auto& ed : p.edges) {
        sum[ed[0]] += e.positions[ed[1]];
        sum[ed[1]] += e.positions[ed[0]];
        ++deg[ed[0]];
        ++deg[ed[1]];
    }
    double worst = 0;
    for (int i = 0; i < p.vertex_count(); ++i) {
        if (fixed[i] || deg[i] == 0) continue;
        worst = std::max(worst, (e.positions[i] - sum[i] / deg[i]).norm());
    }
    return worst;
}

std::string to_svg(const Polyhedron& p, const PlanarEmbedding& e) {
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const Vec2& q : e.positions) {
        xlo = std::min(xlo, q.x());
        xhi = std::max(xhi, q.x());
        ylo = std::min(ylo, -q.y());
        yhi = std::max(yhi, -q.y());
    }
    double pad = 0.05 * std::max(xhi - xlo, yhi - ylo) + 1e-3;
    double stroke = 0.004 * (std::max(xhi - xlo, yhi - ylo) + 1e-9);
    char b1[64], b2[64], b3[64], b4[64];

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!-- peelkit planar graph -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << fmt(b1, 64, xlo - pad) << " " << fmt(b2, 64, ylo - pad) << " "
       << fmt(b3, 64, xhi - xlo + 2 * pad) << " " << fmt(b4, 64, yhi - ylo + 2 * pad)
       << "\">\n";

    for (int f : e.remaining) {
        os << "  <polygon data-face=\"" << f << "\" fill=\"#d03030\" stroke=\"none\""
           << " points=\"";
        const auto& cyc = p.faces[f];
        for (size_t k = 0; k < cyc.size(); ++k) {
            if (k) os << " ";
            os << fmt(b1, 64, e.positions[cyc[k]].x()) << ","
               << fmt(b2, 64, -e.positions[cyc[k]].y());
        }
        os << "\"/>\n";
    }
    for (const auto& ed : p.edges) {
        os << "  <line x1=\"" << fmt(b1, 64, e.positions[ed[0]].x()) << "\" y1=\""
           << fmt(b2, 64, -e.positions[ed[0]].y()) << "\" x2=\""
           << fmt(b3, 64, e.positions[ed[1]].x()) << "\" y2=\""
           << fmt(b4, 64, -e.positions[ed[1]].y())
           << "\" stroke=\"#202020\" stroke-width=\"" << fmt(b1, 64, stroke)
           << "\"/>\n";
    }
    if (!e.trace.empty()) {
        os << "  <polyline fill=\"none\" stroke=\"#1060c0\" stroke-width=\""
           << fmt(b1, 64, 1.5 * stroke) << "\" points=\"";
        for (size_t k = 0; k < e.trace.size(); ++k) {
            Vec2 c = e.face_center(p, e.trace[k]);
            if (k) os << " ";
            os << fmt(b1, 64, c.x()) << "," << fmt(b2, 64, -c.y());
        }
        os << "\"/>\n";
        for (size_t k = 0; k < e.trace.size(); ++k) {
            Vec2 c = e.face_center(p, e.trace[k]);
            os << "  <circle data-face=\"" << e.trace[k] << "\" data-step=\"" << k
               << "\" cx=\"" << fmt(b1, 64, c.x()) << "\" cy=\""
               << fmt(b2, 64, -c.y()) << "\" r=\"" << fmt(b3, 64, 1.8 * stroke)
               << "\" fill=\"#1060c0\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

void write_svg(const Polyhedron& p, const PlanarEmbedding& e, std::ostream& os) {
    os << to_svg(p, e);
}

}  // namespace peelkit
