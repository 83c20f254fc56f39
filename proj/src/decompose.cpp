#include "crown/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace crown {

std::vector<std::pair<std::string, std::string>> StarForest::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : stars)
        for (const auto& leaf : s.leaves) out.push_back({s.center, leaf});
    return out;
}

bool StarForest::empty() const {
    for (const auto& s : stars)
        if (!s.leaves.empty()) return false;
    return true;
}

SimpleGraph SimpleGraph::fromInstance(const Instance& ins) {
    SimpleGraph g;
    for (const auto& [id, dim] : ins.vertices) g.ids.push_back(id);
    for (const auto& e : ins.edges) g.edges.push_back({e.u, e.v});
    return g;
}

namespace {

// Integer-indexed view used by everything below.
struct Indexed {
    std::vector<std::string> ids;
    std::map<std::string, int> index;
    std::vector<std::vector<int>> adj;              // sorted, deduped
    std::vector<std::pair<int, int>> edges;         // u < v
    std::set<std::pair<int, int>> edgeSet;

    int n() const { return static_cast<int>(ids.size()); }
    bool hasEdge(int u, int v) const {
        return edgeSet.count({std::min(u, v), std::max(u, v)}) != 0;
    }
};

Indexed buildIndexed(const SimpleGraph& g) {
    Indexed x;
    x.ids = g.ids;
    for (int i = 0; i < static_cast<int>(x.ids.size()); ++i) {
        if (x.index.count(x.ids[i])) throw Error("semantic-error", "duplicate id " + x.ids[i]);
        x.index[x.ids[i]] = i;
    }
    x.adj.resize(x.ids.size());
    for (const auto& [a, b] : g.edges) {
        auto ia = x.index.find(a), ib = x.index.find(b);
        if (ia == x.index.end() || ib == x.index.end())
            throw Error("semantic-error", "edge endpoint not a vertex");
        int u = ia->second, v = ib->second;
        if (u == v) throw Error("semantic-error", "self-loop");
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        if (!x.edgeSet.insert(key).second) continue;
        x.edges.push_back(key);
        x.adj[u].push_back(v);
        x.adj[v].push_back(u);
    }
    for (auto& a : x.adj) std::sort(a.begin(), a.end());
    return x;
}

std::vector<int> componentOf(const Indexed& x) {
    std::vector<int> comp(x.n(), -1);
    int c = 0;
    for (int s = 0; s < x.n(); ++s) {
        if (comp[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : x.adj[u])
                if (comp[v] == -1) { comp[v] = c; q.push(v); }
        }
        ++c;
    }
    return comp;
}

// Parity split of a forest: root every component at a max-degree vertex;
// an edge from a depth-d parent goes to half d mod 2 with the parent as
// the star center.
std::array<StarForest, 2> splitForestByParity(const Indexed& x) {
    std::array<StarForest, 2> out;
    if (x.n() == 0) return out;
    std::vector<int> comp = componentOf(x);
    int nc = *std::max_element(comp.begin(), comp.end()) + (x.n() ? 1 : 0);
    std::vector<int> root(nc, -1);
    for (int v = 0; v < x.n(); ++v) {
        int c = comp[v];
        if (root[c] == -1 || x.adj[v].size() > x.adj[root[c]].size()) root[c] = v;
    }
    std::vector<int> depth(x.n(), -1);
    std::map<std::pair<int, int>, std::vector<int>> leaves;  // (half, center)
    for (int c = 0; c < nc; ++c) {
        std::queue<int> q;
        q.push(root[c]);
        depth[root[c]] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : x.adj[u]) {
                if (depth[v] != -1) continue;
                depth[v] = depth[u] + 1;
                leaves[{depth[u] % 2, u}].push_back(v);
                q.push(v);
            }
        }
    }
    for (const auto& [key, ls] : leaves) {
        Star s;
        s.center = x.ids[key.second];
        for (int v : ls) s.leaves.push_back(x.ids[v]);
        out[key.first].stars.push_back(s);
    }
    return out;
}

}  // namespace

std::array<StarForest, 2> treeToTwoStarForests(const SimpleGraph& g) {
    Indexed x = buildIndexed(g);
    if (x.n() == 0) throw Error("not-a-tree", "empty graph");
    auto comp = componentOf(x);
    if (*std::max_element(comp.begin(), comp.end()) != 0 ||
        static_cast<int>(x.edges.size()) != x.n() - 1)
        throw Error("not-a-tree", "input is not a connected acyclic graph");
    return splitForestByParity(x);
}

PeeledStars anchoredStarPeel(const SimpleGraph& g) {
    Indexed x = buildIndexed(g);
    if (x.n() < 3) throw Error("not-a-tree", "need at least 3 vertices");
    auto comp = componentOf(x);
    if (*std::max_element(comp.begin(), comp.end()) != 0 ||
        static_cast<int>(x.edges.size()) != x.n() - 1)
        throw Error("not-a-tree", "input is not a connected acyclic graph");

    int root = 0;
    for (int v = 1; v < x.n(); ++v)
        if (x.adj[v].size() > x.adj[root].size()) root = v;

    std::vector<int> parent(x.n(), -1), depth(x.n(), -1);
    std::vector<std::vector<int>> children(x.n());
    std::queue<int> q;
    q.push(root);
    depth[root] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : x.adj[u]) {
            if (depth[v] != -1) continue;
            depth[v] = depth[u] + 1;
            parent[v] = u;
            children[u].push_back(v);
            q.push(v);
        }
    }

    std::vector<bool> alive(x.n(), true);
    std::vector<int> aliveChildren(x.n());
    for (int v = 0; v < x.n(); ++v) aliveChildren[v] = static_cast<int>(children[v].size());

    PeeledStars out;
    while (true) {
        int pick = -1;
        for (int v = 0; v < x.n(); ++v) {
            if (!alive[v] || aliveChildren[v] == 0) continue;
            bool allLeaves = true;
            for (int c : children[v])
                if (alive[c] && aliveChildren[c] > 0) allLeaves = false;
            if (!allLeaves) continue;
            if (pick == -1 || depth[v] > depth[pick]) pick = v;
        }
        if (pick == -1) break;
        Star s;
        s.center = x.ids[pick];
        for (int c : children[pick]) {
            if (!alive[c]) continue;
            s.leaves.push_back(x.ids[c]);
            alive[c] = false;
        }
        if (pick != root) out.anchors.push_back({x.ids[pick], x.ids[parent[pick]]});
        alive[pick] = false;
        if (pick != root) --aliveChildren[parent[pick]];
        out.forest.stars.push_back(s);
    }
    return out;
}

std::array<StarForest, 3> outerplanarToThreeStarForests(const SimpleGraph& g) {
    Indexed x = buildIndexed(g);
    const int n = x.n();
    std::vector<bool> alive(n, true);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(x.adj[v].size());

    // Peel degree-<=2 vertices, but stop a component once it is a bare
    // 3-cycle; those seed the forests with one edge each.
    std::vector<int> order;  // removal order
    int removed = 0;
    auto isTriangleVertex = [&](int v) {
        if (deg[v] != 2) return false;
        int a = -1, b = -1;
        for (int u : x.adj[v])
            if (alive[u]) (a == -1 ? a : b) = u;
        return deg[a] == 2 && deg[b] == 2 && x.hasEdge(a, b);
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || deg[v] > 2 || isTriangleVertex(v)) continue;
            alive[v] = false;
            order.push_back(v);
            ++removed;
            for (int u : x.adj[v])
                if (alive[u]) --deg[u];
            progress = true;
        }
    }

    std::vector<int> centerForest(n, -1);
    // forest -> center -> leaves; occupancy = forests where a vertex
    // already has an incident edge.
    std::array<std::map<int, std::vector<int>>, 3> stars;
    std::vector<int> occupied(n, 0);
    auto addEdge = [&](int f, int center, int leaf) {
        stars[f][center].push_back(leaf);
        occupied[center] |= 1 << f;
        occupied[leaf] |= 1 << f;
    };

    // Remaining components must be 3-cycles: seed one edge per forest.
    for (int v = 0; v < n; ++v) {
        if (!alive[v] || centerForest[v] != -1) continue;
        if (!isTriangleVertex(v)) throw Error("no-degree-2-vertex", "peel stuck at " + x.ids[v]);
        std::vector<int> tri{v};
        for (int u : x.adj[v])
            if (alive[u]) tri.push_back(u);
        std::sort(tri.begin(), tri.end());
        for (int k = 0; k < 3; ++k) {
            centerForest[tri[k]] = k;
            addEdge(k, tri[k], tri[(k + 1) % 3]);
        }
    }

    // Reinsert in reverse removal order.
    for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
        int v = order[k];
        alive[v] = true;
        std::vector<int> nbrs;
        for (int u : x.adj[v])
            if (alive[u]) nbrs.push_back(u);
        int forbidden = 0;
        for (int u : nbrs) forbidden |= 1 << centerForest[u];
        int own = 0;
        while (forbidden & (1 << own)) ++own;
        centerForest[v] = own;
        if (nbrs.empty()) continue;
        if (nbrs.size() == 1 || centerForest[nbrs[0]] != centerForest[nbrs[1]]) {
            for (int u : nbrs) addEdge(centerForest[u], u, v);
        } else {
            // Both neighbors center in the same forest; route the second
            // edge through v's own star in a forest where that neighbor
            // is still free.
            addEdge(centerForest[nbrs[0]], nbrs[0], v);
            int u = nbrs[1];
            int placed = -1;
            for (int f = 0; f < 3 && placed == -1; ++f)
                if (f != centerForest[u] && !(occupied[u] & (1 << f)) &&
                    !(occupied[v] & (1 << f))) {
                    centerForest[v] = f;
                    addEdge(f, v, u);
                    placed = f;
                }
            if (placed == -1)
                throw Error("no-degree-2-vertex", "cannot keep star shape at " + x.ids[v]);
        }
    }

    std::array<StarForest, 3> out;
    for (int f = 0; f < 3; ++f)
        for (const auto& [c, ls] : stars[f]) {
            Star s;
            s.center = x.ids[c];
            for (int l : ls) s.leaves.push_back(x.ids[l]);
            out[f].stars.push_back(s);
        }
    // Structural self-check: partition and star shapes.
    std::set<std::pair<int, int>> seen;
    for (const auto& forest : out) {
        std::map<std::string, int> touch;
        for (const auto& s : forest.stars)
            for (const auto& l : s.leaves) {
                int a = x.index.at(s.center), b = x.index.at(l);
                if (!x.hasEdge(a, b) ||
                    !seen.insert({std::min(a, b), std::max(a, b)}).second)
                    throw Error("no-degree-2-vertex", "cover check failed");
            }
    }
    if (seen.size() != x.edges.size())
        throw Error("no-degree-2-vertex", "cover check failed");
    return out;
}

// ---------------------------------------------------------------------------
// Rotation systems

namespace {

struct Rotation {
    std::vector<std::vector<int>> at;  // cyclic neighbor order per vertex

    int succ(int v, int u) const {  // neighbor after u around v
        const auto& r = at[v];
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == u) return r[(i + 1) % r.size()];
        throw Error("embedding-invalid", "dart into missing rotation entry");
    }
};

Rotation buildRotation(const Indexed& x, const Embedding& emb) {
    Rotation rot;
    rot.at.resize(x.n());
    for (const auto& [id, nbrs] : emb)
        if (!x.index.count(id))
            throw Error("embedding-invalid", "unknown vertex " + id + " in embedding");
    for (int v = 0; v < x.n(); ++v) {
        auto it = emb.find(x.ids[v]);
        std::vector<int> listed;
        if (it != emb.end())
            for (const auto& nb : it->second) {
                auto j = x.index.find(nb);
                if (j == x.index.end())
                    throw Error("embedding-invalid", "unknown neighbor " + nb);
                listed.push_back(j->second);
            }
        std::vector<int> sorted = listed;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != x.adj[v])
            throw Error("embedding-invalid",
                        "rotation of " + x.ids[v] + " does not list its neighbors");
        rot.at[v] = listed;
    }
    return rot;
}

// Faces as vertex cycles; (f[i], f[i+1]) are the darts.
std::vector<std::vector<int>> traceFaces(const Rotation& rot) {
    std::set<std::pair<int, int>> visited;
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < static_cast<int>(rot.at.size()); ++v)
        for (int u : rot.at[v]) {
            if (visited.count({v, u})) continue;
            std::vector<int> face;
            int a = v, b = u;
            while (!visited.count({a, b})) {
                visited.insert({a, b});
                face.push_back(a);
                int c = rot.succ(b, a);
                a = b;
                b = c;
            }
            faces.push_back(face);
        }
    return faces;
}

void checkEuler(const Indexed& x, const Rotation& rot) {
    auto comp = componentOf(x);
    int nc = x.n() ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
    std::vector<long long> nv(nc, 0), ne(nc, 0), nf(nc, 0);
    for (int v = 0; v < x.n(); ++v) ++nv[comp[v]];
    for (const auto& [u, v] : x.edges) ++ne[comp[u]];
    for (const auto& f : traceFaces(rot)) ++nf[comp[f[0]]];
    for (int c = 0; c < nc; ++c) {
        if (ne[c] == 0) continue;  // isolated vertex: nothing to check
        if (nv[c] - ne[c] + nf[c] != 2)
            throw Error("embedding-invalid", "Euler check failed (v-e+f != 2)");
    }
}

// Adds chords until every face is a triangle; keeps the rotation system
// consistent. Operates in place and records the added edges.
void triangulate(Indexed& x, Rotation& rot) {
    auto faces = traceFaces(rot);
    for (auto& face : faces) {
        while (face.size() > 3) {
            const int len = static_cast<int>(face.size());
            int pick = -1;
            for (int i = 0; i < len; ++i) {
                int a = face[i], b = face[(i + 1) % len], c = face[(i + 2) % len];
                if (a == c || x.hasEdge(a, c)) continue;
                pick = i;
                break;
            }
            if (pick == -1) throw Error("not-triangulable", "no admissible chord in face");
            int xprev = face[(pick + len - 1) % len];
            int a = face[pick], b = face[(pick + 1) % len], c = face[(pick + 2) % len];
            // Split off triangle (a,b,c): succ_a(xprev) becomes c,
            // succ_c(b) becomes a.
            auto insertAfter = [&](int v, int after, int nb) {
                auto& r = rot.at[v];
                for (size_t i = 0; i < r.size(); ++i)
                    if (r[i] == after) {
                        r.insert(r.begin() + i + 1, nb);
                        return;
                    }
                throw Error("embedding-invalid", "rotation insert anchor missing");
            };
            insertAfter(a, xprev, c);
            insertAfter(c, b, a);
            auto key = std::make_pair(std::min(a, c), std::max(a, c));
            x.edgeSet.insert(key);
            x.edges.push_back(key);
            x.adj[a].push_back(c);
            x.adj[c].push_back(a);
            face.erase(face.begin() + (pick + 1) % len);
        }
    }
    for (auto& a : x.adj) std::sort(a.begin(), a.end());
}

// Splits a triangulated component's edges into three forests via reverse
// contour peeling: the peeled vertex sends one edge to each of its two
// contour neighbors' sets and its covered interior edges to the third.
void contourSplit(const Indexed& x, const Rotation& rot, const std::vector<int>& verts,
                  std::array<std::vector<std::pair<int, int>>, 3>& sets) {
    std::set<int> inComp(verts.begin(), verts.end());
    // Outer face: first face traced from the smallest in-component dart.
    std::vector<int> outer;
    for (const auto& f : traceFaces(rot))
        if (inComp.count(f[0])) { outer = f; break; }
    if (outer.size() != 3) throw Error("not-triangulable", "outer face is not a triangle");
    int pv1 = outer[0], pv2 = outer[1];

    const int n = static_cast<int>(rot.at.size());
    std::vector<bool> alive(n, false), onBoundary(n, false);
    for (int v : verts) alive[v] = true;
    std::vector<int> next(n, -1), prev(n, -1);
    for (int i = 0; i < 3; ++i) {
        int a = outer[i], b = outer[(i + 1) % 3];
        next[a] = b;
        prev[b] = a;
        onBoundary[a] = true;
    }

    int remaining = static_cast<int>(verts.size());
    while (remaining > 2) {
        int v = -1;
        for (int cand : verts) {
            if (!alive[cand] || !onBoundary[cand] || cand == pv1 || cand == pv2) continue;
            int onB = 0;
            for (int u : x.adj[cand])
                if (alive[u] && onBoundary[u]) ++onB;
            if (onB == 2) { v = cand; break; }
        }
        if (v == -1) throw Error("not-triangulable", "contour ordering stuck");
        int p = prev[v], nx = next[v];
        std::vector<int> act;
        for (int u : rot.at[v])
            if (alive[u]) act.push_back(u);
        // Interior neighbors in boundary order: the rotation arc from p
        // to nx (exclusive), or the reverse of the other arc.
        auto arc = [&](int from, int to) {
            std::vector<int> a;
            size_t i = 0;
            while (act[i] != from) ++i;
            for (size_t k = (i + 1) % act.size(); act[k] != to; k = (k + 1) % act.size())
                a.push_back(act[k]);
            return a;
        };
        std::vector<int> inner = arc(p, nx);
        if (inner.empty()) {
            inner = arc(nx, p);
            std::reverse(inner.begin(), inner.end());
        }
        sets[0].push_back({v, p});
        sets[1].push_back({v, nx});
        for (int u : inner) sets[2].push_back({v, u});
        // Boundary replacement p -> inner... -> nx.
        alive[v] = false;
        onBoundary[v] = false;
        int cur = p;
        for (int u : inner) {
            next[cur] = u;
            prev[u] = cur;
            onBoundary[u] = true;
            cur = u;
        }
        next[cur] = nx;
        prev[nx] = cur;
        --remaining;
    }
    sets[2].push_back({pv1, pv2});
}

}  // namespace

void validateEmbedding(const SimpleGraph& g, const Embedding& emb) {
    Indexed x = buildIndexed(g);
    Rotation rot = buildRotation(x, emb);
    checkEuler(x, rot);
}

std::array<StarForest, 6> planarStarForestCover(const SimpleGraph& g, const Embedding& emb) {
    Indexed x = buildIndexed(g);
    Rotation rot = buildRotation(x, emb);
    checkEuler(x, rot);

    auto comp = componentOf(x);
    int nc = x.n() ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
    std::vector<std::vector<int>> members(nc);
    for (int v = 0; v < x.n(); ++v) members[comp[v]].push_back(v);
    std::vector<long long> compEdges(nc, 0);
    for (const auto& [u, v] : x.edges) ++compEdges[comp[u]];

    std::array<StarForest, 6> out;
    std::array<std::vector<std::pair<int, int>>, 3> sets;  // cyclic components only

    SimpleGraph forestPart;  // acyclic components, covered by the tree split
    std::set<int> forestVerts;

    Indexed tri = x;  // shared triangulation workspace
    Rotation triRot = rot;
    bool needTriangulation = false;
    for (int c = 0; c < nc; ++c)
        if (compEdges[c] >= static_cast<long long>(members[c].size())) needTriangulation = true;
    if (needTriangulation) triangulate(tri, triRot);

    for (int c = 0; c < nc; ++c) {
        if (compEdges[c] < static_cast<long long>(members[c].size())) {
            for (int v : members[c]) forestVerts.insert(v);
        } else {
            contourSplit(tri, triRot, members[c], sets);
        }
    }

    for (int v : forestVerts) forestPart.ids.push_back(x.ids[v]);
    for (const auto& [u, v] : x.edges)
        if (forestVerts.count(u)) forestPart.edges.push_back({x.ids[u], x.ids[v]});
    if (!forestPart.ids.empty()) {
        auto two = splitForestByParity(buildIndexed(forestPart));
        out[0] = two[0];
        out[1] = two[1];
    }

    for (int s = 0; s < 3; ++s) {
        SimpleGraph part;
        std::set<int> used;
        for (const auto& [u, v] : sets[s]) {
            if (!x.hasEdge(u, v)) continue;  // triangulation chord, not ours
            if (used.insert(u).second) part.ids.push_back(x.ids[u]);
            if (used.insert(v).second) part.ids.push_back(x.ids[v]);
            part.edges.push_back({x.ids[u], x.ids[v]});
        }
        auto two = splitForestByParity(buildIndexed(part));
        for (int p = 0; p < 2; ++p)
            for (auto& star : two[p].stars) out[2 * s + p].stars.push_back(star);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matchings

std::vector<std::pair<std::string, std::string>> maximalMatching(const SimpleGraph& g) {
    std::vector<std::pair<std::string, std::string>> sorted;
    for (auto [a, b] : g.edges) {
        if (b < a) std::swap(a, b);
        sorted.push_back({a, b});
    }
    std::sort(sorted.begin(), sorted.end());
    std::set<std::string> used;
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : sorted) {
        if (used.count(a) || used.count(b)) continue;
        used.insert(a);
        used.insert(b);
        out.push_back({a, b});
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> maximumMatching(const SimpleGraph& g) {
    Indexed x = buildIndexed(g);
    const int n = x.n();
    std::vector<int> match(n, -1), p(n), base(n);
    std::vector<bool> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<bool> usedPath(n, false);
        for (;;) {
            a = base[a];
            usedPath[a] = true;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (usedPath[b]) return b;
            b = p[match[b]];
        }
    };
    auto markPath = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    };
    auto findPath = [&](int root) -> int {
        std::fill(used.begin(), used.end(), false);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : x.adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    markPath(v, curbase, to);
                    markPath(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) { used[i] = true; q.push(i); }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int u = findPath(v);
        while (u != -1) {
            int pv = p[u], ppv = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = ppv;
        }
    }

    std::vector<std::pair<std::string, std::string>> out;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) {
            std::string a = x.ids[v], b = x.ids[match[v]];
            if (b < a) std::swap(a, b);
            out.push_back({a, b});
        }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Separators

namespace {

struct SepResult {
    std::vector<int> a, b, s;
    bool ok = false;
};

// Packs the components of g - s into two sides; valid when both stay
// within 2n/3.
SepResult evaluateSeparator(const Indexed& x, const std::vector<int>& active,
                            const std::set<int>& s) {
    SepResult r;
    const long long n = static_cast<long long>(active.size());
    std::vector<int> state(x.n(), 0);  // 0 out, 1 active, 2 separator, 3 seen
    for (int v : active) state[v] = 1;
    for (int v : s) state[v] = 2;
    std::vector<std::vector<int>> comps;
    for (int v : active) {
        if (state[v] != 1) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(v);
        state[v] = 3;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : x.adj[u])
                if (state[w] == 1) { state[w] = 3; q.push(w); }
        }
        comps.push_back(comp);
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& l, const auto& r2) { return l.size() > r2.size(); });
    std::vector<int> a, b;
    for (const auto& comp : comps) {
        auto& side = a.size() <= b.size() ? a : b;
        side.insert(side.end(), comp.begin(), comp.end());
    }
    if (3 * static_cast<long long>(a.size()) > 2 * n ||
        3 * static_cast<long long>(b.size()) > 2 * n)
        return r;
    r.a = a;
    r.b = b;
    r.s.assign(s.begin(), s.end());
    r.ok = true;
    return r;
}

// Balanced separator of the subgraph induced by `active` (must be
// connected). Candidates: singletons, BFS levels and fundamental cycles
// of BFS trees from a few roots.
SepResult separatorImpl(const Indexed& x, const std::vector<int>& active) {
    std::set<int> act(active.begin(), active.end());
    SepResult best;
    auto consider = [&](const std::set<int>& s) {
        if (s.empty()) return;
        if (best.ok && s.size() >= best.s.size()) return;
        SepResult r = evaluateSeparator(x, active, s);
        if (r.ok && (!best.ok || r.s.size() < best.s.size())) best = r;
    };

    for (int v : active) consider({v});

    auto bfs = [&](int root) {
        std::map<int, int> depth, parent;
        std::vector<int> order;
        std::queue<int> q;
        q.push(root);
        depth[root] = 0;
        parent[root] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            for (int w : x.adj[u]) {
                if (!act.count(w) || depth.count(w)) continue;
                depth[w] = depth[u] + 1;
                parent[w] = u;
                q.push(w);
            }
        }
        return std::make_tuple(depth, parent, order);
    };

    std::vector<int> roots{active.front()};
    {
        auto [d0, p0, o0] = bfs(active.front());
        roots.push_back(o0.back());  // a farthest vertex
    }
    for (int root : roots) {
        auto [depth, parent, order] = bfs(root);
        // BFS levels.
        std::map<int, std::set<int>> levels;
        for (const auto& [v, d] : depth) levels[d].insert(v);
        for (const auto& [d, lvl] : levels) consider(lvl);
        // Fundamental cycles of the BFS tree.
        for (const auto& [u, v] : x.edges) {
            if (!act.count(u) || !act.count(v)) continue;
            if (parent.at(u) == v || parent.at(v) == u) continue;
            std::set<int> cycle;
            int a = u, b = v;
            while (a != b) {
                if (depth.at(a) < depth.at(b)) std::swap(a, b);
                cycle.insert(a);
                a = parent.at(a);
            }
            cycle.insert(a);
            if (!best.ok || cycle.size() < best.s.size()) consider(cycle);
        }
    }
    if (!best.ok) throw Error("separator-error", "no balanced separator found");
    return best;
}

}  // namespace

Separation planarSeparator(const SimpleGraph& g, const Embedding& emb) {
    Indexed x = buildIndexed(g);
    Rotation rot = buildRotation(x, emb);
    checkEuler(x, rot);
    if (x.n() == 0) return {};
    auto comp = componentOf(x);
    if (*std::max_element(comp.begin(), comp.end()) != 0)
        throw Error("not-connected", "separator needs a connected graph");
    std::vector<int> all(x.n());
    for (int v = 0; v < x.n(); ++v) all[v] = v;
    SepResult r = separatorImpl(x, all);
    Separation out;
    for (int v : r.a) out.a.push_back(x.ids[v]);
    for (int v : r.b) out.b.push_back(x.ids[v]);
    for (int v : r.s) out.s.push_back(x.ids[v]);
    std::sort(out.a.begin(), out.a.end());
    std::sort(out.b.begin(), out.b.end());
    std::sort(out.s.begin(), out.s.end());
    return out;
}

RDivision rDivision(const SimpleGraph& g, const Embedding& emb, long long r) {
    if (r < 3) throw Error("invalid-argument", "r must be >= 3");
    Indexed x = buildIndexed(g);
    Rotation rot = buildRotation(x, emb);
    checkEuler(x, rot);

    RDivision out;
    std::set<int> boundary;

    std::function<void(std::vector<int>)> recurse = [&](std::vector<int> verts) {
        if (static_cast<long long>(verts.size()) <= r) {
            std::vector<std::string> region;
            for (int v : verts) region.push_back(x.ids[v]);
            std::sort(region.begin(), region.end());
            out.regions.push_back(region);
            return;
        }
        SepResult sep = separatorImpl(x, verts);
        for (int v : sep.s) boundary.insert(v);
        // Each side may be disconnected; recurse per component.
        for (const auto* side : {&sep.a, &sep.b}) {
            std::set<int> left(side->begin(), side->end());
            std::vector<bool> seen(x.n(), false);
            for (int v : *side) {
                if (seen[v]) continue;
                std::vector<int> comp;
                std::queue<int> q;
                q.push(v);
                seen[v] = true;
                while (!q.empty()) {
                    int u = q.front();
                    q.pop();
                    comp.push_back(u);
                    for (int w : x.adj[u])
                        if (left.count(w) && !seen[w]) { seen[w] = true; q.push(w); }
                }
                recurse(comp);
            }
        }
    };

    // Top level: per connected component.
    auto comp = componentOf(x);
    int nc = x.n() ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
    std::vector<std::vector<int>> members(nc);
    for (int v = 0; v < x.n(); ++v) members[comp[v]].push_back(v);
    for (auto& m : members) recurse(m);

    for (int v : boundary) out.boundary.push_back(x.ids[v]);
    std::sort(out.boundary.begin(), out.boundary.end());
    return out;
}

}  // namespace crown
