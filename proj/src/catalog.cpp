#include "peelkit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "peelkit/catalog_data.hpp"
#include "peelkit/graph.hpp"

namespace peelkit {

const char* family_name(Family f) {
    switch (f) {
        case Family::Platonic: return "Platonic";
        case Family::Archimedean: return "Archimedean";
        case Family::Catalan: return "Catalan";
    }
    return "?";
}

namespace {

Family parse_family(const std::string& s) {
    if (s == "Platonic") return Family::Platonic;
    if (s == "Archimedean") return Family::Archimedean;
    if (s == "Catalan") return Family::Catalan;
    throw std::runtime_error("unknown family tag: " + s);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<SolidRecord> load_catalog() {
    std::vector<SolidRecord> out;
    const detail::RawSolid* raw = detail::raw_solids();
    for (int i = 0; i < detail::raw_solid_count(); ++i) {
        const detail::RawSolid& r = raw[i];
        std::vector<Vec3> verts;
        verts.reserve(r.vert_count);
        for (int v = 0; v < r.vert_count; ++v)
            verts.emplace_back(r.verts[3 * v], r.verts[3 * v + 1], r.verts[3 * v + 2]);
        std::vector<std::vector<int>> faces;
        for (int k = 0; k < r.face_ints;) {
            int g = r.faces[k++];
            faces.emplace_back(r.faces + k, r.faces + k + g);
            k += g;
        }
        SolidRecord rec{r.name, r.index, parse_family(r.family), r.chiral,
                        build(std::move(verts), std::move(faces), r.name)};
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace

const std::vector<SolidRecord>& catalog() {
    static const std::vector<SolidRecord> solids = load_catalog();
    return solids;
}

SolidRecord lookup(const std::string& name_or_index, bool mirrored) {
    std::string key = lower(name_or_index);
    for (const SolidRecord& rec : catalog()) {
        if (lower(rec.name) == key || rec.index == name_or_index) {
            SolidRecord out = rec;
            if (mirrored) out.poly = mirror(out.poly);
            return out;
        }
    }
    throw UnknownSolidError("unknown solid: " + name_or_index);
}

std::string dual_partner_name(const std::string& name) {
    const auto& solids = catalog();
    for (size_t i = 0; i < solids.size(); ++i) {
        if (solids[i].name != name) continue;
        if (solids[i].family == Family::Archimedean) return solids[i + 1].name;
        if (solids[i].family == Family::Catalan) return solids[i - 1].name;
        throw std::runtime_error(name + " has no catalog dual partner");
    }
    throw UnknownSolidError("unknown solid: " + name);
}

namespace {

[[noreturn]] void off_error(int line, const std::string& what) {
    throw std::runtime_error("OFF parse error at line " + std::to_string(line) + ": " + what);
}

// Splits into meaningful lines, stripping comments and blanks but keeping
// original line numbers for error messages.
std::vector<std::pair<int, std::string>> meaningful_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int num = 0;
    while (std::getline(in, line)) {
        ++num;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        out.emplace_back(num, line);
    }
    return out;
}

}  // namespace

Polyhedron ingest_off(const std::string& text, double tol) {
    auto lines = meaningful_lines(text);
    if (lines.empty()) off_error(1, "empty input");
    size_t at = 0;
    {
        std::istringstream hs(lines[at].second);
        std::string magic;
        hs >> magic;
        if (magic != "OFF") off_error(lines[at].first, "expected OFF header, got '" + magic + "'");
        std::string extra;
        if (hs >> extra) off_error(lines[at].first, "unexpected token after OFF header");
        ++at;
    }
    if (at >= lines.size()) off_error(lines.back().first, "missing counts line");
    int nv = 0, nf = 0, ne = 0;
    {
        std::istringstream cs(lines[at].second);
        if (!(cs >> nv >> nf >> ne)) off_error(lines[at].first, "counts line needs 3 integers");
        ++at;
    }
    if (nv <= 0 || nf <= 0) off_error(lines[at - 1].first, "non-positive vertex/face count");

    std::vector<Vec3> verts;
    verts.reserve(nv);
    for (int i = 0; i < nv; ++i, ++at) {
        if (at >= lines.size()) off_error(lines.back().first, "expected " + std::to_string(nv) +
                                          " vertex lines, input ended");
        std::istringstream vs(lines[at].second);
        double x, y, z;
        if (!(vs >> x >> y >> z)) off_error(lines[at].first, "vertex line needs 3 numbers");
        verts.emplace_back(x, y, z);
    }

    std::vector<std::vector<int>> faces;
    faces.reserve(nf);
    for (int i = 0; i < nf; ++i, ++at) {
        if (at >= lines.size()) off_error(lines.back().first, "expected " + std::to_string(nf) +
                                          " face lines, input ended");
        std::istringstream fs(lines[at].second);
        int k = 0;
        if (!(fs >> k) || k < 3) off_error(lines[at].first, "face line needs a gon count >= 3");
        std::vector<int> cyc(k);
        for (int j = 0; j < k; ++j)
            if (!(fs >> cyc[j]))
                off_error(lines[at].first, "face line promises " + std::to_string(k) +
                          " indices but has fewer");
        faces.push_back(std::move(cyc));
    }
    if (at != lines.size()) off_error(lines[at].first, "trailing content after last face line");

    return build(std::move(verts), std::move(faces), "", tol);
}

std::string to_off(const Polyhedron& p) {
    std::ostringstream os;
    os.precision(17);
    os << "OFF\n" << p.vertex_count() << ' ' << p.face_count() << ' ' << p.edge_count() << '\n';
    for (const Vec3& v : p.vertices) os << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
    for (const auto& cyc : p.faces) {
        os << cyc.size();
        for (int v : cyc) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

Polyhedron ingest_json(const std::string& text, double tol) {
    nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<Vec3> verts;
    for (const auto& v : doc.at("vertices"))
        verts.emplace_back(v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>());
    std::vector<std::vector<int>> faces;
    for (const auto& f : doc.at("faces")) faces.push_back(f.get<std::vector<int>>());
    std::string name = doc.value("name", "");
    return build(std::move(verts), std::move(faces), std::move(name), tol);
}

std::string to_json(const Polyhedron& p) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const Vec3& v : p.vertices) doc["vertices"].push_back({v.x(), v.y(), v.z()});
    doc["faces"] = p.faces;
    doc["name"] = p.name;
    return doc.dump(2) + "\n";
}

bool CatalogReport::all_pass() const { return failures() == 0; }

int CatalogReport::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

CatalogReport verify_catalog() {
    CatalogReport report;
    auto add = [&report](const std::string& solid, const std::string& check, bool pass,
                         std::string detail = "") {
        report.checks.push_back({solid, check, pass, std::move(detail)});
    };

    const auto& solids = catalog();

    for (const SolidRecord& rec : solids) {
        const Polyhedron& p = rec.poly;
        int m = p.vertex_count(), l = p.edge_count(), n = p.face_count();
        add(rec.name, "euler", m - l + n == 2,
            std::to_string(m) + "-" + std::to_string(l) + "+" + std::to_string(n));
        add(rec.name, "convex", p.warnings.empty(),
            p.warnings.empty() ? "" : p.warnings.front());

        if (rec.family != Family::Catalan) {
            // Regular faces: equal edges within 1e-6 of the face mean and
            // equal corner radii about the face centroid.
            bool regular = true;
            double worst = 0.0;
            for (int f = 0; f < n && regular; ++f) {
                const auto& cyc = p.faces[f];
                double mean_len = 0.0;
                std::vector<double> lens;
                for (size_t j = 0; j < cyc.size(); ++j) {
                    double len = (p.vertices[cyc[(j + 1) % cyc.size()]] -
                                  p.vertices[cyc[j]]).norm();
                    lens.push_back(len);
                    mean_len += len;
                }
                mean_len /= static_cast<double>(lens.size());
                for (double len : lens) worst = std::max(worst, std::abs(len - mean_len));
                for (int v : cyc)
                    worst = std::max(worst, std::abs((p.vertices[v] - p.centroids[f]).norm() -
                                                     (p.vertices[cyc[0]] - p.centroids[f]).norm()));
                regular = worst < 1e-6;
            }
            add(rec.name, "regular-faces", regular, "max deviation " + std::to_string(worst));

            // Identical vertex configuration everywhere (gon multiset around
            // each vertex; cyclic order is implied for these solids).
            std::map<std::vector<int>, int> configs;
            std::vector<std::vector<int>> around(m);
            for (int f = 0; f < n; ++f)
                for (int v : p.faces[f]) around[v].push_back(p.gon(f));
            for (auto& a : around) {
                std::sort(a.begin(), a.end());
                configs[a]++;
            }
            add(rec.name, "vertex-config", configs.size() == 1,
                std::to_string(configs.size()) + " distinct configurations");
        }
    }

    // Archimedean <-> Catalan pairing: records come interleaved, and each
    // Catalan must be combinatorially isomorphic (as a skeleton) to the dual
    // of its partner, and vice versa.
    for (size_t i = 0; i < solids.size(); ++i) {
        if (solids[i].family != Family::Archimedean) continue;
        const SolidRecord& arch = solids[i];
        const SolidRecord& cat = solids[i + 1];
        bool paired = cat.family == Family::Catalan &&
                      cat.index == "[" + arch.index.substr(1, arch.index.size() - 2) + "]";
        add(arch.name, "index-pairing", paired, cat.index);

        Polyhedron d = dual(arch.poly);
        bool iso = isomorphic(skeleton(d), skeleton(cat.poly));
        add(cat.name, "dual-of-partner", iso);
        Polyhedron dd = dual(cat.poly);
        bool iso_back = isomorphic(skeleton(dd), skeleton(arch.poly));
        add(arch.name, "dual-of-partner", iso_back);
    }

    return report;
}

std::ostream& operator<<(std::ostream& os, const CatalogReport& report) {
    for (const auto& c : report.checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.solid << ": " << c.check;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << '\n';
    }
    os << (report.all_pass() ? "all checks passed"
                             : std::to_string(report.failures()) + " checks FAILED")
       << '\n';
    return os;
}

}  // namespace peelkit
