#include "peelkit/net.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace peelkit {
namespace {

// Rigid motion x -> q * x + t. Quaternions compose without the drift that
// plagues chained 3x3 matrices; we still renormalize after every compose so
// long hinge chains stay rigid to machine precision.
struct Rigid {
    Eigen::Quaterniond q{1, 0, 0, 0};
    Vec3 t{0, 0, 0};

    Vec3 operator()(const Vec3& x) const { return q * x + t; }

    Rigid then_inner(const Rigid& inner) const {
        Rigid r;
        r.q = (q * inner.q).normalized();
        r.t = q * inner.t + t;
        return r;
    }
};

// Rotation about the line through `a` with direction `axis` taking direction
// `from` onto direction `to`. Both directions must be perpendicular to the
// axis, which holds for face normals around their shared hinge edge.
Rigid hinge_rotation(const Vec3& a, const Vec3& axis, const Vec3& from,
                     const Vec3& to) {
    double angle = std::atan2(to.dot(axis.cross(from)), to.dot(from));
    Rigid r;
    r.q = Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis));
    r.t = a - r.q * a;
    return r;
}

// Shared hinge between consecutive faces: endpoint vertex ids.
std::array<int, 2> hinge_edge(const Polyhedron& p, int prev, int cur) {
    int slot = p.neighbor_slot(prev, cur);
    if (slot < 0) throw std::runtime_error("sequence faces not adjacent");
    return p.edges[p.face_edges[prev][slot]];
}

Vec3 hinge_axis(const Polyhedron& p, const std::array<int, 2>& e, Vec3& a_out,
                double tol) {
    Vec3 a = p.vertices[e[0]], b = p.vertices[e[1]];
    Vec3 d = b - a;
    double len = d.norm();
    if (len <= tol)
        throw std::runtime_error("collapsed hinge edge (zero length) between faces");
    a_out = a;
    return d / len;
}

char* fmt(char* buf, size_t n, double v) {
    // strip negative zero so output is byte-stable across math libraries
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, n, "%.6f", v);
    return buf;
}

}  // namespace

Net unfold(const Polyhedron& p, const PeelSequence& seq) {
    if (seq.order.empty()) throw std::runtime_error("empty peel sequence");
    Net net;
    net.solid = p.name;
    int len = static_cast<int>(seq.order.size());

    // First face: inside toward the viewer, i.e. outward normal to -z.
    int f0 = seq.order[0];
    Rigid w;
    w.q = Eigen::Quaterniond::FromTwoVectors(p.face_normal(f0), Vec3(0, 0, -1));
    w.t = -(w.q * p.vertices[p.faces[f0][0]]);

    for (int i = 0; i < len; ++i) {
        int cur = seq.order[i];
        std::array<int, 2> e{-1, -1};
        if (i > 0) {
            int prev = seq.order[i - 1];
            e = hinge_edge(p, prev, cur);
            Vec3 a;
            Vec3 axis = hinge_axis(p, e, a, kDefaultTolerance);
            // open the dihedral flat: current face's normal onto predecessor's
            w = w.then_inner(
                hinge_rotation(a, axis, p.face_normal(cur), p.face_normal(prev)));
        }
        NetFace nf;
        nf.face = cur;
        nf.step = i;
        nf.hinge = {e[0], e[1]};
        nf.gray = len > 1 ? 0.25 + 0.65 * i / (len - 1) : 0.25;
        for (int v : p.faces[cur]) {
            Vec3 q = w(p.vertices[v]);
            if (std::abs(q.z()) > 1e-6)
                throw std::runtime_error("hinge chain lost planarity at step " +
                                         std::to_string(i));
            nf.poly.emplace_back(q.x(), q.y());
        }
        net.faces.push_back(std::move(nf));
    }
    return net;
}

PartialUnfoldState partial_unfold(const Polyhedron& p, const PeelSequence& seq,
                                  int i) {
    int len = static_cast<int>(seq.order.size());
    if (i < 1 || i >= len)
        throw std::out_of_range("partial unfold step must satisfy 1 <= i < " +
                                std::to_string(len));

    PartialUnfoldState st;
    st.step = i;
    st.roles.assign(p.face_count(), UnfoldRole::NotUnfolded);
    st.face_coords.resize(p.face_count());
    for (int f = 0; f < p.face_count(); ++f)
        for (int v : p.faces[f]) st.face_coords[f].push_back(p.vertices[v]);

    // Flatten faces seq[0..i-1] into the plane of seq[i] by accumulating the
    // per-hinge rotations from the strip end inward: face j first falls into
    // j+1's plane, then rides along with every later flattening.
    Rigid m;  // identity
    for (int j = i; j >= 1; --j) {
        int prev = seq.order[j - 1], next = seq.order[j];
        std::array<int, 2> e = hinge_edge(p, prev, next);
        Vec3 a;
        Vec3 axis = hinge_axis(p, e, a, kDefaultTolerance);
        m = m.then_inner(
            hinge_rotation(a, axis, p.face_normal(prev), p.face_normal(next)));
        auto& coords = st.face_coords[prev];
        coords.clear();
        for (int v : p.faces[prev]) coords.push_back(m(p.vertices[v]));
        st.roles[prev] = UnfoldRole::Unfolded;
    }
    st.roles[seq.order[i - 1]] = UnfoldRole::LastSelected;
    return st;
}

std::vector<std::pair<int, int>> check_overlap(const Net& net, double tol) {
    // Separating-axis test per convex polygon pair; only interior
    // penetration deeper than tol counts, so hinge contact never reports.
    auto project = [](const std::vector<Vec2>& poly, const Vec2& axis, double& lo,
                      double& hi) {
        lo = hi = poly[0].dot(axis);
        for (const Vec2& v : poly) {
            double d = v.dot(axis);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    };
    auto penetration = [&](const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
        double depth = std::numeric_limits<double>::infinity();
        for (const auto* poly : {&a, &b}) {
            for (size_t k = 0; k < poly->size(); ++k) {
                Vec2 edge = (*poly)[(k + 1) % poly->size()] - (*poly)[k];
                double n = edge.norm();
                if (n <= tol) continue;
                Vec2 axis(-edge.y() / n, edge.x() / n);
                double alo, ahi, blo, bhi;
                project(a, axis, alo, ahi);
                project(b, axis, blo, bhi);
                depth = std::min(depth, std::min(ahi, bhi) - std::max(alo, blo));
                if (depth <= tol) return depth;
            }
        }
        return depth;
    };

    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i + 2 <= net.faces.size(); ++i)
        for (size_t j = i + 2; j < net.faces.size(); ++j)
            if (penetration(net.faces[i].poly, net.faces[j].poly) > tol)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::string to_svg(const Net& net) {
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const auto& f : net.faces)
        for (const Vec2& v : f.poly) {
            xlo = std::min(xlo, v.x());
            xhi = std::max(xhi, v.x());
            ylo = std::min(ylo, -v.y());  // y flipped into SVG's downward axis
            yhi = std::max(yhi, -v.y());
        }
    double pad = 0.05 * std::max(xhi - xlo, yhi - ylo) + 1e-3;
    char b1[64], b2[64], b3[64], b4[64];

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!-- peelkit net -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << fmt(b1, 64, xlo - pad) << " " << fmt(b2, 64, ylo - pad) << " "
       << fmt(b3, 64, xhi - xlo + 2 * pad) << " " << fmt(b4, 64, yhi - ylo + 2 * pad)
       << "\">\n";
    double stroke = 0.004 * (std::max(xhi - xlo, yhi - ylo) + 1e-9);
    for (const auto& f : net.faces) {
        int level = static_cast<int>(std::lround(255 * f.gray));
        char color[16];
        std::snprintf(color, sizeof color, "#%02x%02x%02x", level, level, level);
        os << "  <polygon data-face=\"" << f.face << "\" data-step=\"" << f.step
           << "\" fill=\"" << color << "\" stroke=\"#202020\" stroke-width=\""
           << fmt(b1, 64, stroke) << "\" points=\"";
        for (size_t k = 0; k < f.poly.size(); ++k) {
            if (k) os << " ";
            os << fmt(b1, 64, f.poly[k].x()) << "," << fmt(b2, 64, -f.poly[k].y());
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_svg(const Net& net, std::ostream& os) { os << to_svg(net); }

std::string to_obj(const Polyhedron& p, const PartialUnfoldState& state) {
    auto role_name = [](UnfoldRole r) {
        switch (r) {
            case UnfoldRole::Unfolded: return "unfolded";
            case UnfoldRole::LastSelected: return "last-selected";
            default: return "not-unfolded";
        }
    };
    std::ostringstream os;
    os << "# peelkit intermediate unfolding state, step " << state.step << "\n";
    os << "o " << (p.name.empty() ? std::string("solid") : p.name) << "\n";
    char b[64];
    int base = 1;  // OBJ indices are 1-based
    for (int f = 0; f < p.face_count(); ++f) {
        const auto& coords = state.face_coords[f];
        Vec3 c = Vec3::Zero();
        for (const Vec3& v : coords) c += v;
        c /= static_cast<double>(coords.size());
        os << "# face " << f << " role " << role_name(state.roles[f]) << "\n";
        for (const Vec3& v : coords)
            os << "v " << fmt(b, 64, v.x()) << " " << fmt(b, 64, v.y()) << " "
               << fmt(b, 64, v.z()) << "\n";
        os << "v " << fmt(b, 64, c.x()) << " " << fmt(b, 64, c.y()) << " "
           << fmt(b, 64, c.z()) << "\n";
        int k = static_cast<int>(coords.size());
        for (int j = 0; j < k; ++j)
            os << "f " << base + j << " " << base + (j + 1) % k << " " << base + k
               << "\n";
        base += k + 1;
    }
    return os.str();
}

void write_obj(const Polyhedron& p, const PartialUnfoldState& state,
               std::ostream& os) {
    os << to_obj(p, state);
}

}  // namespace peelkit
