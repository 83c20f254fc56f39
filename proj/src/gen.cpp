#include "crown/gen.hpp"

#include "crown/realize.hpp"

#include <algorithm>
#include <set>

namespace crown {

namespace {

std::string vid(int i) { return "v" + std::to_string(i); }

BoxDim randDim(Rng& rng, const GenOptions& opt) {
    return {rng.range(opt.minDim, opt.maxDim), rng.range(opt.minDim, opt.maxDim)};
}

Rat randProfit(Rng& rng, const GenOptions& opt) {
    if (opt.unweighted) return Rat(1);
    return ratFromInt(rng.range(opt.minProfit, opt.maxProfit));
}

void addEdge(Instance& ins, int u, int v, Rng& rng, const GenOptions& opt) {
    ins.edges.push_back({vid(u), vid(v), randProfit(rng, opt)});
}

/// Maximal outerplanar graph: polygon plus a random triangulation of its
/// interior. tri(i, j) assumes the chord (i, j) is already present.
void triangulatePolygon(Instance& ins, int i, int j, Rng& rng, const GenOptions& opt) {
    if (j - i < 2) return;
    int k = static_cast<int>(rng.range(i + 1, j - 1));
    if (k > i + 1) addEdge(ins, i, k, rng, opt);
    if (j > k + 1) addEdge(ins, k, j, rng, opt);
    triangulatePolygon(ins, i, k, rng, opt);
    triangulatePolygon(ins, k, j, rng, opt);
}

/// Random planar triangulation by repeated vertex insertion into a random
/// face; rotation maps are maintained so the embedding stays valid.
void triangulation(Instance& ins, int n, Rng& rng, const GenOptions& opt) {
    std::vector<std::vector<int>> rot(n);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    addEdge(ins, 0, 1, rng, opt);
    addEdge(ins, 0, 2, rng, opt);
    addEdge(ins, 1, 2, rng, opt);
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
    auto insertAfter = [&](int u, int after, int inserted) {
        auto& r = rot[u];
        auto it = std::find(r.begin(), r.end(), after);
        r.insert(it + 1, inserted);
    };
    for (int v = 3; v < n; ++v) {
        size_t f = static_cast<size_t>(rng.range(0, static_cast<long long>(faces.size()) - 1));
        auto [a, b, c] = faces[f];
        insertAfter(a, c, v);
        insertAfter(b, a, v);
        insertAfter(c, b, v);
        rot.at(static_cast<size_t>(v)) = {a, c, b};
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
        addEdge(ins, a, v, rng, opt);
        addEdge(ins, b, v, rng, opt);
        addEdge(ins, c, v, rng, opt);
    }
    Embedding emb;
    for (int u = 0; u < n; ++u) {
        auto& order = emb[vid(u)];
        for (int w : rot[static_cast<size_t>(u)]) order.push_back(vid(w));
    }
    ins.embedding = std::move(emb);
}

}  // namespace

Instance genRandom(const std::string& cls, int n, const GenOptions& opt, uint64_t seed) {
    if (n < 1) throw Error("unsupported-class", "need at least one vertex");
    Rng rng(seed);
    Instance ins;
    ins.model = opt.model;
    for (int i = 0; i < n; ++i) ins.vertices.emplace_back(vid(i), randDim(rng, opt));
    if (cls == "path") {
        for (int i = 0; i + 1 < n; ++i) addEdge(ins, i, i + 1, rng, opt);
        ins.classHint = GraphClass::Path;
    } else if (cls == "cycle") {
        if (n < 3) throw Error("unsupported-class", "cycle needs at least 3 vertices");
        for (int i = 0; i < n; ++i) addEdge(ins, i, (i + 1) % n, rng, opt);
        ins.classHint = GraphClass::Cycle;
    } else if (cls == "star") {
        for (int i = 1; i < n; ++i) addEdge(ins, 0, i, rng, opt);
        ins.classHint = GraphClass::Star;
    } else if (cls == "tree") {
        for (int i = 1; i < n; ++i)
            addEdge(ins, static_cast<int>(rng.range(0, i - 1)), i, rng, opt);
        ins.classHint = GraphClass::Tree;
    } else if (cls == "outerplanar") {
        if (n < 3) throw Error("unsupported-class", "outerplanar generator needs at least 3 vertices");
        for (int i = 0; i < n; ++i) addEdge(ins, i, (i + 1) % n, rng, opt);
        triangulatePolygon(ins, 0, n - 1, rng, opt);
        ins.classHint = GraphClass::Outerplanar;
    } else if (cls == "planar-triangulation") {
        if (n < 3) throw Error("unsupported-class", "triangulation needs at least 3 vertices");
        triangulation(ins, n, rng, opt);
        ins.classHint = GraphClass::Planar;
    } else if (cls == "bipartite") {
        int left = std::max(1, n / 2);
        for (int i = 0; i < left; ++i)
            for (int j = left; j < n; ++j)
                if (rng.range(0, 1) == 0) addEdge(ins, i, j, rng, opt);
        ins.classHint = GraphClass::Bipartite;
    } else if (cls == "general") {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.range(0, 99) < 40) addEdge(ins, i, j, rng, opt);
        ins.classHint = GraphClass::General;
    } else {
        throw Error("unsupported-class", cls);
    }
    ins.checkInvariants();
    return ins;
}

namespace {

const char* kElementPrefix[3] = {"x", "y", "z"};

std::string elementId(int role, int index) {
    return kElementPrefix[role] + std::to_string(index);
}

std::string hubId(int e) { return "e" + std::to_string(e) + "s"; }

std::string satId(int e, int j) { return "e" + std::to_string(e) + "b" + std::to_string(j); }

void checkGadgetSpec(const GadgetSpec& spec) {
    if (spec.k < 0) throw Error("invalid-spec", "negative element count");
    if (spec.hyperedges.size() > static_cast<size_t>(3 * spec.k))
        throw Error("invalid-spec", "more than 3k hyperedges");
    std::set<std::array<int, 3>> seen;
    std::vector<std::array<int, 3>> uses(static_cast<size_t>(spec.k), {0, 0, 0});
    for (const auto& e : spec.hyperedges) {
        if (!seen.insert(e).second) throw Error("invalid-spec", "duplicate hyperedge");
        for (int role = 0; role < 3; ++role) {
            int idx = e[static_cast<size_t>(role)];
            if (idx < 0 || idx >= spec.k) throw Error("invalid-spec", "element index out of range");
            if (++uses[static_cast<size_t>(idx)][static_cast<size_t>(role)] > 3)
                throw Error("invalid-spec", "element in more than 3 hyperedges");
        }
    }
}

}  // namespace

Instance genGadget(const GadgetSpec& spec) {
    checkGadgetSpec(spec);
    Instance ins;
    ins.model = ContactModel::Proper;
    ins.classHint = GraphClass::Bipartite;
    for (int role = 0; role < 3; ++role)
        for (int i = 0; i < spec.k; ++i)
            ins.vertices.emplace_back(elementId(role, i), BoxDim{2, 2});
    for (size_t e = 0; e < spec.hyperedges.size(); ++e) {
        int ei = static_cast<int>(e);
        ins.vertices.emplace_back(hubId(ei), BoxDim{14, 14});
        for (int j = 1; j <= 8; ++j) {
            ins.vertices.emplace_back(satId(ei, j), BoxDim{12, 12});
            ins.edges.push_back({hubId(ei), satId(ei, j), Rat(j == 1 ? 2 : 3)});
        }
        for (int role = 0; role < 3; ++role)
            ins.edges.push_back(
                {hubId(ei), elementId(role, spec.hyperedges[e][static_cast<size_t>(role)]), Rat(1)});
    }
    ins.checkInvariants();
    return ins;
}

Layout gadgetWellFormedLayout(const GadgetSpec& spec, const std::vector<int>& matchedEdges) {
    Instance ins = genGadget(spec);
    std::set<int> matched;
    std::set<std::pair<int, int>> coveredElements;  // (role, index)
    for (int e : matchedEdges) {
        if (e < 0 || e >= static_cast<int>(spec.hyperedges.size()))
            throw Error("invalid-spec", "matched edge out of range");
        if (!matched.insert(e).second) throw Error("invalid-spec", "duplicate matched edge");
        for (int role = 0; role < 3; ++role)
            if (!coveredElements.insert({role, spec.hyperedges[static_cast<size_t>(e)]
                                                   [static_cast<size_t>(role)]}).second)
                throw Error("invalid-spec", "matched edges share an element");
    }
    std::vector<Layout> fragments;
    for (size_t e = 0; e < spec.hyperedges.size(); ++e) {
        int ei = static_cast<int>(e);
        Layout f;
        auto put = [&](const std::string& id, Rat x, Rat y) {
            f.placements[id] = {std::move(x), std::move(y)};
        };
        put(hubId(ei), Rat(0), Rat(0));
        put(satId(ei, 2), Rat(-58, 5), Rat(14));
        put(satId(ei, 3), Rat(1), Rat(14));
        put(satId(ei, 4), Rat(68, 5), Rat(14));
        put(satId(ei, 5), Rat(14), Rat(2));
        put(satId(ei, 6), Rat(68, 5), Rat(-12));
        put(satId(ei, 7), Rat(-58, 5), Rat(-12));
        put(satId(ei, 8), Rat(-12), Rat(0));
        if (matched.count(ei)) {
            for (int role = 0; role < 3; ++role)
                put(elementId(role, spec.hyperedges[e][static_cast<size_t>(role)]),
                    Rat(1 + 5 * role), Rat(-2));
        } else {
            put(satId(ei, 1), Rat(4, 5), Rat(-12));
        }
        fragments.push_back(std::move(f));
    }
    return assemble(ins, fragments);
}

Instance genFromText(const std::map<std::string, long long>& frequency,
                     const std::map<std::pair<std::string, std::string>, long long>& cooccurrence,
                     long long scale) {
    if (frequency.empty()) throw Error("empty-input", "no words");
    if (scale < 1) throw Error("invalid-spec", "scale must be positive");
    long long fmin = frequency.begin()->second, fmax = fmin;
    for (const auto& [word, f] : frequency) {
        if (word.empty()) throw Error("empty-input", "empty word");
        if (f < 1) throw Error("invalid-spec", "non-positive frequency for " + word);
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
    }
    Instance ins;
    ins.model = ContactModel::Proper;
    ins.classHint = GraphClass::General;
    for (const auto& [word, f] : frequency) {
        long long factor = fmax == fmin ? 1 : 1 + 2 * (f - fmin) / (fmax - fmin);
        ins.vertices.emplace_back(
            word, BoxDim{static_cast<long long>(word.size()) * scale * factor, scale * factor});
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [pair, count] : cooccurrence) {
        auto [a, b] = pair;
        if (a == b) throw Error("invalid-spec", "self co-occurrence for " + a);
        if (!frequency.count(a) || !frequency.count(b))
            throw Error("invalid-spec", "co-occurrence names unknown word");
        if (count < 1) throw Error("invalid-spec", "non-positive co-occurrence count");
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw Error("invalid-spec", "duplicate word pair");
        ins.edges.push_back({a, b, Rat(count)});
    }
    ins.checkInvariants();
    return ins;
}

}  // namespace crown
