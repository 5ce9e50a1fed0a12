#include "peelkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace peelkit {

int SkeletonGraph::edge_count() const {
    int total = 0;
    for (const auto& a : adj) total += static_cast<int>(a.size());
    return total / 2;
}

bool SkeletonGraph::has_edge(int a, int b) const {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

SkeletonGraph skeleton(const Polyhedron& p) {
    SkeletonGraph g;
    g.n = p.vertex_count();
    g.adj.resize(g.n);
    for (const auto& e : p.edges) {
        g.adj[e[0]].push_back(e[1]);
        g.adj[e[1]].push_back(e[0]);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

SkeletonGraph face_graph(const Polyhedron& p) {
    SkeletonGraph g;
    g.n = p.face_count();
    g.adj.resize(g.n);
    for (int f = 0; f < g.n; ++f) {
        auto nb = p.neighbors[f];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.adj[f] = std::move(nb);
    }
    return g;
}

Polyhedron dual(const Polyhedron& p) {
    const int m = p.vertex_count();
    // Incident faces of each vertex, walked in rotational order by hopping
    // across the edge that precedes the vertex in the current face's cycle.
    std::vector<std::vector<int>> rings(m);
    std::vector<int> first_face(m, -1);
    for (int f = 0; f < p.face_count(); ++f)
        for (int v : p.faces[f])
            if (first_face[v] < 0 || f < first_face[v]) first_face[v] = f;
    for (int v = 0; v < m; ++v) {
        int f = first_face[v];
        do {
            rings[v].push_back(f);
            const auto& cyc = p.faces[f];
            int j = static_cast<int>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin());
            int k = static_cast<int>(cyc.size());
            f = p.neighbors[f][(j - 1 + k) % k];
        } while (f != first_face[v]);
        if (rings[v].size() < 3)
            throw std::runtime_error("vertex " + std::to_string(v) + " has degree < 3");
    }
    return build(p.centroids, std::move(rings),
                 p.name.empty() ? "dual" : "dual of " + p.name);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const SkeletonGraph& g) {
    std::vector<int> color(g.n, -1);
    std::vector<int> queue;
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : g.adj[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < g.n; ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

namespace {

struct PathSearch {
    const SkeletonGraph& g;
    long long budget;
    long long steps = 0;
    bool out_of_budget = false;
    std::vector<char> visited;
    std::vector<int> path;

    explicit PathSearch(const SkeletonGraph& graph, long long b)
        : g(graph), budget(b), visited(graph.n, 0) {}

    // The unvisited region must stay connected, contain no vertex that is
    // already cut off, and offer at most one forced final endpoint.
    bool feasible(int cur) {
        const int left = g.n - static_cast<int>(path.size());
        int start = -1;
        for (int v = 0; v < g.n; ++v)
            if (!visited[v]) {
                start = v;
                break;
            }
        if (start < 0) return true;

        std::vector<int> stack{start};
        std::vector<char> seen(g.n, 0);
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[v])
                if (!visited[w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != left) return false;

        int forced_final = 0;
        for (int v = 0; v < g.n; ++v) {
            if (visited[v]) continue;
            int du = 0;
            for (int w : g.adj[v])
                if (!visited[w]) ++du;
            bool next_to_cur = g.has_edge(cur, v);
            if (du == 0 && left > 1) return false;
            if (du == 1 && !next_to_cur && ++forced_final > 1) return false;
        }
        return true;
    }

    bool extend(int cur) {
        if (++steps > budget) {
            out_of_budget = true;
            return false;
        }
        if (static_cast<int>(path.size()) == g.n) return true;
        if (!feasible(cur)) return false;
        for (int nxt : g.adj[cur]) {
            if (visited[nxt]) continue;
            visited[nxt] = 1;
            path.push_back(nxt);
            if (extend(nxt)) return true;
            if (out_of_budget) return false;
            visited[nxt] = 0;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

HamiltonianReport hamiltonian_path(const SkeletonGraph& g, long long budget) {
    HamiltonianReport report;
    if (g.n == 0) return report;
    if (g.n == 1) {
        report.status = HamiltonianStatus::PathFound;
        report.witness = {0};
        return report;
    }

    if (auto parts = bipartition(g)) {
        auto gap = std::llabs(static_cast<long long>(parts->first.size()) -
                              static_cast<long long>(parts->second.size()));
        if (gap >= 2) {
            report.status = HamiltonianStatus::NoPath;
            report.proof = NoPathProof::BipartiteParity;
            return report;
        }
    }

    PathSearch search(g, budget);
    for (int start = 0; start < g.n; ++start) {
        std::fill(search.visited.begin(), search.visited.end(), 0);
        search.visited[start] = 1;
        search.path.assign(1, start);
        if (search.extend(start)) {
            report.status = HamiltonianStatus::PathFound;
            report.witness = search.path;
            report.elapsed_steps = search.steps;
            // Sanity: the witness must really be a Hamiltonian path.
            if (static_cast<int>(report.witness.size()) != g.n)
                throw std::logic_error("witness misses vertices");
            for (size_t i = 1; i < report.witness.size(); ++i)
                if (!g.has_edge(report.witness[i - 1], report.witness[i]))
                    throw std::logic_error("witness uses a non-edge");
            return report;
        }
        if (search.out_of_budget) {
            report.status = HamiltonianStatus::TimedOut;
            report.elapsed_steps = search.steps;
            return report;
        }
    }
    report.status = HamiltonianStatus::NoPath;
    report.proof = NoPathProof::Exhaustive;
    report.elapsed_steps = search.steps;
    return report;
}

bool peel_implies_path(const PeelSequence& seq, const SkeletonGraph& g) {
    if (seq.outcome != PeelOutcome::Complete)
        throw std::invalid_argument("peel sequence is not complete; only complete runs "
                                    "correspond to Hamiltonian path candidates");
    if (static_cast<int>(seq.order.size()) != g.n) return false;
    std::vector<char> seen(g.n, 0);
    for (int f : seq.order) {
        if (f < 0 || f >= g.n || seen[f]) return false;
        seen[f] = 1;
    }
    for (size_t i = 1; i < seq.order.size(); ++i)
        if (!g.has_edge(seq.order[i - 1], seq.order[i])) return false;
    return true;
}

namespace {

// Equitable refinement: repeatedly re-color by (color, sorted neighbor
// colors) until stable. Color ids are assigned in sorted signature order,
// so they are comparable across isomorphic graphs.
std::vector<int> refine(const SkeletonGraph& g, std::vector<int> color) {
    while (true) {
        std::vector<std::pair<std::pair<int, std::vector<int>>, int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> nc;
            nc.reserve(g.adj[v].size());
            for (int w : g.adj[v]) nc.push_back(color[w]);
            std::sort(nc.begin(), nc.end());
            sig[v] = {{color[v], std::move(nc)}, v};
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(g.n);
        int c = 0;
        for (int i = 0; i < g.n; ++i) {
            if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
            next[sig[i].second] = c;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

std::vector<std::uint64_t> certificate(const SkeletonGraph& g, const std::vector<int>& color) {
    std::vector<int> pos(g.n);
    for (int v = 0; v < g.n; ++v) pos[color[v]] = v;  // color is a bijection here
    std::vector<std::uint64_t> cert((static_cast<size_t>(g.n) * g.n + 63) / 64, 0);
    size_t bit = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j, ++bit)
            if (g.has_edge(pos[i], pos[j])) cert[bit / 64] |= 1ull << (bit % 64);
    return cert;
}

void canon_search(const SkeletonGraph& g, std::vector<int> color,
                  std::vector<std::uint64_t>& best, bool& have_best) {
    color = refine(g, color);
    int branch_color = -1, branch_size = 0;
    std::vector<int> members;
    {
        std::vector<int> count(g.n, 0);
        for (int c : color) ++count[c];
        for (int c = 0; c < g.n; ++c)
            if (count[c] > 1) {
                branch_color = c;
                branch_size = count[c];
                break;
            }
    }
    if (branch_color < 0) {
        auto cert = certificate(g, color);
        if (!have_best || cert < best) {
            best = std::move(cert);
            have_best = true;
        }
        return;
    }
    members.reserve(branch_size);
    for (int v = 0; v < g.n; ++v)
        if (color[v] == branch_color) members.push_back(v);
    for (int v : members) {
        std::vector<int> ind(g.n);
        for (int u = 0; u < g.n; ++u) ind[u] = color[u] * 2 + 1;
        ind[v] = color[v] * 2;  // pull v just ahead of its old class
        canon_search(g, std::move(ind), best, have_best);
    }
}

}  // namespace

std::vector<std::uint64_t> canonical_form(const SkeletonGraph& g) {
    std::vector<std::uint64_t> best;
    bool have_best = false;
    canon_search(g, std::vector<int>(g.n, 0), best, have_best);
    // Prefix with global invariants so different sizes can never collide.
    std::vector<std::uint64_t> out;
    out.push_back(static_cast<std::uint64_t>(g.n));
    out.push_back(static_cast<std::uint64_t>(g.edge_count()));
    out.insert(out.end(), best.begin(), best.end());
    return out;
}

bool isomorphic(const SkeletonGraph& a, const SkeletonGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    auto degs = [](const SkeletonGraph& g) {
        std::vector<int> d;
        d.reserve(g.n);
        for (const auto& row : g.adj) d.push_back(static_cast<int>(row.size()));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

std::string to_json(const std::string& solid, const SkeletonGraph& g,
                    const HamiltonianReport& r) {
    nlohmann::ordered_json doc;
    doc["solid"] = solid;
    doc["skeleton_vertices"] = g.n;
    switch (r.status) {
        case HamiltonianStatus::PathFound:
            doc["hamiltonian"] = "found";
            break;
        case HamiltonianStatus::NoPath:
            doc["hamiltonian"] = r.proof == NoPathProof::BipartiteParity ? "none(parity)"
                                                                         : "none(exhaustive)";
            break;
        case HamiltonianStatus::TimedOut:
            doc["hamiltonian"] = "timeout";
            break;
    }
    doc["witness"] = r.witness;
    return doc.dump(2) + "\n";
}

}  // namespace peelkit
