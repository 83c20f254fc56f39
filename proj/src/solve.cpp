#include "crown/solve.hpp"

#include "crown/decompose.hpp"
#include "crown/gap.hpp"
#include "crown/realize.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace crown {

namespace {

uint64_t splitmix(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long long floorRat(const Rat& r) {  // non-negative inputs only
    return toLongLong(r.numerator() / r.denominator());
}

std::map<std::string, std::map<std::string, Rat>> adjacency(const Instance& ins) {
    std::map<std::string, std::map<std::string, Rat>> adj;
    for (const auto& [id, dim] : ins.vertices) adj[id];
    for (const auto& e : ins.edges) {
        adj[e.u][e.v] = e.profit;
        adj[e.v][e.u] = e.profit;
    }
    return adj;
}

const std::array<std::pair<const char*, StarBin>, 8> kBinNames = {{
    {"nw", StarBin::NW},
    {"ne", StarBin::NE},
    {"sw", StarBin::SW},
    {"se", StarBin::SE},
    {"top", StarBin::Top},
    {"bottom", StarBin::Bottom},
    {"left", StarBin::Left},
    {"right", StarBin::Right},
}};

StarBin binFromName(const std::string& name, const std::string& prefix) {
    std::string bare = name.substr(prefix.size());
    for (const auto& [n, b] : kBinNames)
        if (bare == n) return b;
    throw Error("internal-error", "unknown bin name " + name);
}

/// The 8 bins of one center: four corner slots of capacity 1, the
/// horizontal sides capped by hcap and the vertical sides by vcap.
void addCenterBins(GapInstance& g, const std::string& prefix, long long hcap, long long vcap) {
    for (const auto& [name, bin] : kBinNames) {
        long long cap = 1;
        if (bin == StarBin::Top || bin == StarBin::Bottom) cap = hcap;
        if (bin == StarBin::Left || bin == StarBin::Right) cap = vcap;
        g.bins.push_back({prefix + name, std::max<long long>(cap, 0)});
    }
}

/// One item that may enter any of a center's bins: size 1 in corners,
/// width on the horizontal sides, height on the vertical ones.
void addItemForCenter(GapItem& it, const std::string& prefix, const BoxDim& d, const Rat& profit) {
    for (const auto& [name, bin] : kBinNames) {
        long long size = 1;
        if (bin == StarBin::Top || bin == StarBin::Bottom) size = d.width;
        if (bin == StarBin::Left || bin == StarBin::Right) size = d.height;
        it.sizeInBin[prefix + name] = size;
        it.profitInBin[prefix + name] = profit;
    }
}

/// Assignment pass for one center's 8-bin group: exact DP, iterative
/// knapsack past the DP guard. Reports which guarantee was used via beta.
GapAssignment solveStarGroup(const GapInstance& g, int& beta) {
    try {
        return gapStarExact(g);
    } catch (const Error& e) {
        if (e.kind() != "budget-exceeded") throw;
        beta = 2;
        return gapIterativeKnapsack(g);
    }
}

Instance starSubInstance(const Instance& ins, const std::string& center,
                         const std::map<std::string, Rat>& leafProfit) {
    Instance sub;
    sub.model = ins.model;
    sub.vertices.push_back({center, ins.dim(center)});
    for (const auto& [leaf, p] : leafProfit) {
        sub.vertices.push_back({leaf, ins.dim(leaf)});
        sub.edges.push_back({center, leaf, p});
    }
    return sub;
}

SolveReport finishReport(const Instance& ins, Layout layout, Certificate cert,
                         std::string algo) {
    SolveReport rep;
    rep.layout = std::move(layout);
    rep.certifiedRatio = cert;
    rep.algorithm = std::move(algo);
    reevaluate(ins, rep);
    return rep;
}

/// Solve a star forest part: every star exactly, fragments assembled.
SolveReport solveForest(const Instance& ins, const StarForest& forest,
                        const std::map<std::string, std::map<std::string, Rat>>& adj,
                        const std::string& algo) {
    std::vector<Layout> fragments;
    Certificate cert = Certificate::exact();
    for (const auto& star : forest.stars) {
        std::map<std::string, Rat> leafProfit;
        for (const auto& leaf : star.leaves) leafProfit[leaf] = adj.at(star.center).at(leaf);
        auto sub = starSubInstance(ins, star.center, leafProfit);
        auto rep = solveStar(sub);
        if (rep.certifiedRatio.bound() > cert.bound()) cert = rep.certifiedRatio;
        fragments.push_back(rep.layout);
    }
    return finishReport(ins, assemble(ins, fragments), cert, algo);
}

template <size_t K>
SolveReport solveByForests(const Instance& ins, const std::array<StarForest, K>& forests,
                           const std::string& algo) {
    auto adj = adjacency(ins);
    EdgeCover parts;
    std::vector<SolveReport> reports;
    for (const auto& f : forests) {
        parts.push_back(f.edges());
        reports.push_back(solveForest(ins, f, adj, algo));
    }
    auto rep = combine(ins, parts, std::move(reports));
    rep.algorithm = algo;
    return rep;
}

bool twoColor(const Instance& ins, std::set<std::string>& side1) {
    auto adj = adjacency(ins);
    std::map<std::string, int> color;
    for (const auto& [id, dim] : ins.vertices) {
        if (color.count(id)) continue;
        color[id] = 0;
        std::vector<std::string> queue{id};
        while (!queue.empty()) {
            auto u = queue.back();
            queue.pop_back();
            for (const auto& [v, p] : adj.at(u)) {
                if (!color.count(v)) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    for (const auto& [id, c] : color)
        if (c == 0) side1.insert(id);
    return true;
}

/// Grouped single-pass assignment: for each center in order, solve its
/// 8-bin group over the residual profits of eligible items; winners are
/// reassigned to the new center. Shared by the bipartite and the
/// all-vertices general solver.
std::map<std::string, std::pair<std::string, StarBin>> groupedAssignment(
    const Instance& ins, const std::vector<std::string>& centers,
    const std::map<std::string, std::map<std::string, Rat>>& adj, int& beta) {
    std::map<std::string, std::pair<std::string, StarBin>> assign;
    std::map<std::string, Rat> gain;
    for (const auto& u : centers) {
        const auto& d = ins.dim(u);
        GapInstance g;
        addCenterBins(g, "", d.width, d.height);
        for (const auto& [v, p] : adj.at(u)) {
            Rat residual = p;
            auto it = gain.find(v);
            if (it != gain.end()) residual -= it->second;
            if (!(residual > Rat(0))) continue;
            GapItem item;
            item.id = v;
            addItemForCenter(item, "", ins.dim(v), residual);
            g.items.push_back(item);
        }
        auto a = solveStarGroup(g, beta);
        for (const auto& [v, bin] : a.assign) {
            assign[v] = {u, binFromName(bin, "")};
            gain[v] = adj.at(u).at(v);
        }
    }
    return assign;
}

std::vector<StarPlan> plansFromAssignment(
    const std::map<std::string, std::pair<std::string, StarBin>>& assign) {
    std::map<std::string, StarPlan> byCenter;
    for (const auto& [item, target] : assign) {
        auto& plan = byCenter[target.first];
        plan.center = target.first;
        plan.perBin[target.second].push_back(item);
    }
    std::vector<StarPlan> plans;
    for (auto& [c, p] : byCenter) plans.push_back(p);
    return plans;
}

bool unitProfits(const Instance& ins) {
    for (const auto& e : ins.edges)
        if (e.profit != Rat(1)) return false;
    return true;
}

std::map<std::string, int> degrees(const Instance& ins) {
    std::map<std::string, int> deg;
    for (const auto& [id, dim] : ins.vertices) deg[id] = 0;
    for (const auto& e : ins.edges) {
        deg[e.u]++;
        deg[e.v]++;
    }
    return deg;
}

bool isAcyclic(const Instance& ins) {
    auto adj = adjacency(ins);
    std::set<std::string> seen;
    for (const auto& [start, dim] : ins.vertices) {
        if (seen.count(start)) continue;
        std::vector<std::pair<std::string, std::string>> stack{{start, ""}};
        seen.insert(start);
        while (!stack.empty()) {
            auto [u, parent] = stack.back();
            stack.pop_back();
            for (const auto& [v, p] : adj.at(u)) {
                if (v == parent) continue;
                if (seen.count(v)) return false;
                seen.insert(v);
                stack.push_back({v, u});
            }
        }
    }
    return true;
}

bool isConnected(const Instance& ins) {
    if (ins.vertices.empty()) return true;
    auto adj = adjacency(ins);
    std::set<std::string> seen{ins.vertices[0].first};
    std::vector<std::string> stack{ins.vertices[0].first};
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (const auto& [v, p] : adj.at(u))
            if (seen.insert(v).second) stack.push_back(v);
    }
    return seen.size() == ins.vertices.size();
}

}  // namespace

SolveReport combine(const Instance& ins, const EdgeCover& parts,
                    std::vector<SolveReport> reports) {
    std::set<std::pair<std::string, std::string>> covered;
    for (const auto& part : parts)
        for (const auto& [u, v] : part) covered.insert(std::minmax(u, v));
    for (const auto& e : ins.edges)
        if (!covered.count(std::minmax(e.u, e.v)))
            throw Error("cover-violation", "edge " + e.u + "-" + e.v + " not covered");
    if (reports.empty() || parts.size() != reports.size())
        throw Error("cover-violation", "parts and reports disagree");

    size_t bestIdx = 0;
    for (size_t i = 0; i < reports.size(); ++i) {
        reevaluate(ins, reports[i]);
        if (reports[i].profit > reports[bestIdx].profit) bestIdx = i;
    }
    SolveReport best = reports[bestIdx];
    if (reports.size() == 1) return best;
    Rat total(0);
    for (const auto& r : reports) total += r.certifiedRatio.bound();
    best.certifiedRatio = Certificate::approx(total);
    return best;
}

SolveReport solveStar(const Instance& ins) {
    if (ins.edges.empty())
        return finishReport(ins, assemble(ins, {}), Certificate::exact(), "star");
    auto deg = degrees(ins);
    std::string center = ins.edges[0].u;
    for (const auto& [id, d] : deg)
        if (d > deg[center]) center = id;
    std::map<std::string, Rat> leafProfit;
    for (const auto& e : ins.edges) {
        if (e.u != center && e.v != center)
            throw Error("not-a-star", "edge " + e.u + "-" + e.v + " misses the center");
        leafProfit[e.u == center ? e.v : e.u] = e.profit;
    }
    const auto& cd = ins.dim(center);

    auto solveOrientation = [&](StarOrientation o, Certificate& cert) {
        long long hcap = cd.width, vcap = cd.height;
        if (ins.model == ContactModel::Proper) {
            auto caps = shrinkForProperModel(cd, o);
            // integer item sizes: a half-unit shrink rounds the cap down
            hcap = floorRat(caps.horizontal);
            vcap = floorRat(caps.vertical);
        }
        GapInstance g;
        addCenterBins(g, "", hcap, vcap);
        for (const auto& [leaf, p] : leafProfit) {
            GapItem it;
            it.id = leaf;
            addItemForCenter(it, "", ins.dim(leaf), p);
            g.items.push_back(it);
        }
        int beta = 1;
        auto a = solveStarGroup(g, beta);
        cert = beta == 1 ? Certificate::exact() : Certificate::approx(2);
        StarPlan plan;
        plan.center = center;
        plan.orientation = o;
        for (const auto& [v, bin] : a.assign) plan.perBin[binFromName(bin, "")].push_back(v);
        return finishReport(ins, assemble(ins, {realizeStar(ins, plan, ins.model)}), cert,
                            "star");
    };

    Certificate certH, certV;
    auto repH = solveOrientation(StarOrientation::Horizontal, certH);
    if (ins.model == ContactModel::Point) return repH;
    auto repV = solveOrientation(StarOrientation::Vertical, certV);
    return repV.profit > repH.profit ? repV : repH;
}

SolveReport solveTreeWeighted(const Instance& ins) {
    if (!isAcyclic(ins)) throw Error("class-mismatch", "instance is not a forest");
    auto g = SimpleGraph::fromInstance(ins);
    return solveByForests(ins, treeToTwoStarForests(g), "tree");
}

SolveReport solveOuterplanar(const Instance& ins) {
    auto g = SimpleGraph::fromInstance(ins);
    try {
        return solveByForests(ins, outerplanarToThreeStarForests(g), "outerplanar");
    } catch (const Error& e) {
        if (e.kind() == "no-degree-2-vertex")
            throw Error("class-mismatch", "instance is not outerplanar-degenerate");
        throw;
    }
}

SolveReport solvePlanarWeighted(const Instance& ins) {
    if (!ins.embedding) throw Error("class-mismatch", "planar solver needs an embedding");
    auto g = SimpleGraph::fromInstance(ins);
    validateEmbedding(g, *ins.embedding);
    return solveByForests(ins, planarStarForestCover(g, *ins.embedding), "planar");
}

SolveReport solveBipartite(const Instance& ins) {
    std::set<std::string> side1;
    if (!twoColor(ins, side1)) throw Error("not-bipartite", "instance has an odd cycle");
    auto adj = adjacency(ins);

    auto runSide = [&](bool firstSide) {
        std::vector<std::string> centers;
        for (const auto& [id, dim] : ins.vertices)
            if (side1.count(id) == (firstSide ? 1u : 0u)) centers.push_back(id);
        int beta = 1;
        auto assign = groupedAssignment(ins, centers, adj, beta);
        auto plans = plansFromAssignment(assign);
        if (ins.model == ContactModel::Proper) plans = postProcessBipartite(ins, plans);
        std::vector<Layout> fragments;
        for (const auto& plan : plans) fragments.push_back(realizeStar(ins, plan, ins.model));
        Rat ratio = ins.model == ContactModel::Proper ? Rat(16, 3) : Rat(4);
        return finishReport(ins, assemble(ins, fragments),
                            Certificate::approx(ratio * beta), "bipartite");
    };

    auto a = runSide(true);
    auto b = runSide(false);
    return b.profit > a.profit ? b : a;
}

SolveReport solveGeneralRandomized(const Instance& ins, const SolverConfig& config) {
    SolveReport best;
    bool have = false;
    for (int t = 0; t < std::max(config.trials, 1); ++t) {
        uint64_t state = static_cast<uint64_t>(config.seed) * 0x100000001b3ULL + t;
        std::set<std::string> side;
        for (const auto& [id, dim] : ins.vertices)
            if (splitmix(state) & 1) side.insert(id);
        Instance cross;
        cross.model = ins.model;
        cross.vertices = ins.vertices;
        for (const auto& e : ins.edges)
            if (side.count(e.u) != side.count(e.v)) cross.edges.push_back(e);
        auto rep = solveBipartite(cross);
        rep.certifiedRatio = Certificate::approx(rep.certifiedRatio.bound() * 2);
        reevaluate(ins, rep);
        if (!have || rep.profit > best.profit) {
            best = rep;
            have = true;
        }
    }
    best.algorithm = "general-rand";
    best.seed = config.seed;
    return best;
}

SolveReport solveGeneralDeterministic(const Instance& ins) {
    auto adj = adjacency(ins);
    std::vector<std::string> centers;
    for (const auto& [id, dim] : ins.vertices) centers.push_back(id);
    int beta = 1;
    auto assign = groupedAssignment(ins, centers, adj, beta);

    // Undirected components of the item->bin digraph; each is a tree or a
    // 1-tree and is realized as such.
    std::map<std::string, std::vector<std::string>> comp;
    {
        std::map<std::string, std::string> parent;
        std::function<std::string(const std::string&)> find = [&](const std::string& v) {
            auto it = parent.find(v);
            if (it == parent.end() || it->second == v) {
                parent[v] = v;
                return v;
            }
            return parent[v] = find(it->second);
        };
        for (const auto& [item, target] : assign) parent[find(item)] = find(target.first);
        for (const auto& [item, target] : assign) comp[find(item)].push_back(item);
    }
    std::vector<Layout> fragments;
    for (const auto& [root, items] : comp) {
        OneTreeAssignment sub;
        for (const auto& item : items) sub.assign[item] = assign.at(item);
        fragments.push_back(realizeOneTree(ins, sub, ins.model));
    }
    Rat perSide = ins.model == ContactModel::Proper ? Rat(8, 3) : Rat(2);
    return finishReport(ins, assemble(ins, fragments),
                        Certificate::approx(Rat(5) * perSide * beta), "general-det");
}

SolveReport solveTreeUnweighted(const Instance& ins) {
    if (!isAcyclic(ins) || !isConnected(ins))
        throw Error("not-a-tree", "instance is not a connected acyclic graph");
    if (!unitProfits(ins)) throw Error("not-unweighted", "profits are not all 1");
    if (ins.vertices.size() <= 2) {
        Layout frag;
        if (ins.edges.size() == 1) frag = realizePath(ins, {ins.edges[0].u, ins.edges[0].v});
        return finishReport(ins, assemble(ins, {frag}), Certificate::approx(Rat(2)),
                            "unweighted-tree");
    }
    auto g = SimpleGraph::fromInstance(ins);
    auto peeled = anchoredStarPeel(g);
    auto adj = adjacency(ins);
    auto rep = solveForest(ins, peeled.forest, adj, "unweighted-tree");
    rep.certifiedRatio = Certificate::approx(Rat(2));
    return rep;
}

SolveReport solveGeneralUnweighted(const Instance& ins) {
    if (!unitProfits(ins)) throw Error("not-unweighted", "profits are not all 1");
    auto g = SimpleGraph::fromInstance(ins);
    auto m = maximalMatching(g);
    std::set<std::string> matched;
    std::set<std::pair<std::string, std::string>> mset;
    for (const auto& [u, v] : m) {
        matched.insert(u);
        matched.insert(v);
        mset.insert(std::minmax(u, v));
    }

    // Part 1: edges leaving the matched set (bipartite matched/unmatched).
    Instance outer;
    outer.model = ins.model;
    outer.vertices = ins.vertices;
    std::vector<std::pair<std::string, std::string>> outerEdges, innerEdges;
    for (const auto& e : ins.edges) {
        if (matched.count(e.u) && matched.count(e.v)) {
            innerEdges.push_back({e.u, e.v});
        } else {
            outer.edges.push_back(e);
            outerEdges.push_back({e.u, e.v});
        }
    }
    auto bipRep = solveBipartite(outer);

    // Part 2: M plus a maximum matching on the induced leftover; their
    // union is vertex-disjoint paths and cycles, realized completely.
    SimpleGraph inner;
    inner.ids = std::vector<std::string>(matched.begin(), matched.end());
    for (const auto& [u, v] : innerEdges)
        if (!mset.count(std::minmax(u, v))) inner.edges.push_back({u, v});
    auto m2 = maximumMatching(inner);
    std::map<std::string, std::vector<std::string>> unionAdj;
    for (const auto& [u, v] : m) {
        unionAdj[u].push_back(v);
        unionAdj[v].push_back(u);
    }
    for (const auto& [u, v] : m2) {
        unionAdj[u].push_back(v);
        unionAdj[v].push_back(u);
    }
    for (const auto& [v, nb] : unionAdj)
        if (nb.size() > 2)
            throw Error("internal-error", "matching union is not paths and cycles");
    std::vector<Layout> fragments;
    std::set<std::string> used;
    for (const auto& [start, nb] : unionAdj) {
        if (used.count(start) || nb.size() != 1) continue;  // path endpoints first
        std::vector<std::string> walk{start};
        used.insert(start);
        std::string cur = start;
        while (true) {
            std::string next;
            for (const auto& w : unionAdj[cur])
                if (!used.count(w)) next = w;
            if (next.empty()) break;
            used.insert(next);
            walk.push_back(next);
            cur = next;
        }
        fragments.push_back(realizePath(ins, walk));
    }
    for (const auto& [start, nb] : unionAdj) {  // remaining components are cycles
        if (used.count(start)) continue;
        std::vector<std::string> walk{start};
        used.insert(start);
        std::string cur = start;
        while (true) {
            std::string next;
            for (const auto& w : unionAdj[cur])
                if (!used.count(w)) next = w;
            if (next.empty()) break;
            used.insert(next);
            walk.push_back(next);
            cur = next;
        }
        fragments.push_back(walk.size() == 2 ? realizePath(ins, walk)
                                             : realizeCycle(ins, walk));
    }
    auto unionRep = finishReport(ins, assemble(ins, fragments), Certificate::approx(Rat(5)),
                                 "unweighted-general");

    std::vector<std::pair<std::string, std::string>> part2 = innerEdges;
    auto rep = combine(ins, {outerEdges, part2}, {bipRep, unionRep});
    rep.algorithm = "unweighted-general";
    return rep;
}

SolveReport solvePlanarPtas(const Instance& ins, const SolverConfig& config) {
    if (!ins.embedding) throw Error("embedding-invalid", "PTAS needs an embedding");
    auto g = SimpleGraph::fromInstance(ins);
    validateEmbedding(g, *ins.embedding);
    long long maxDeg = 0;
    for (const auto& [id, d] : degrees(ins)) maxDeg = std::max<long long>(maxDeg, d);
    // r grows like degree^4 / eps^2 but is capped by the exact solver's
    // practical reach.
    Rat rTheor = ratFromInt(std::max<long long>(maxDeg, 1));
    rTheor = rTheor * rTheor * rTheor * rTheor / (config.epsilon * config.epsilon);
    long long r = std::max<long long>(3, std::min<long long>(config.regionCap, floorRat(rTheor) + 1));
    auto division = rDivision(g, *ins.embedding, r);

    bool allExact = true;
    std::set<std::string> claimed;
    std::vector<Layout> fragments;
    for (const auto& region : division.regions) {
        std::set<std::string> mine;
        for (const auto& v : region)
            if (claimed.insert(v).second) mine.insert(v);
        if (mine.empty()) continue;
        Instance sub;
        sub.model = ins.model;
        for (const auto& [id, dim] : ins.vertices)
            if (mine.count(id)) sub.vertices.push_back({id, dim});
        for (const auto& e : ins.edges)
            if (mine.count(e.u) && mine.count(e.v)) sub.edges.push_back(e);
        SolveReport part;
        if (static_cast<long long>(sub.vertices.size()) <= 6) {
            part = solveExact(sub, config.exactBudget);
            if (part.certifiedRatio.kind != Certificate::Kind::Exact) allExact = false;
        } else {
            part = solveGeneralDeterministic(sub);
            allExact = false;
        }
        fragments.push_back(part.layout);
    }
    // Boundary edges are lost to the division, so an exact certificate is
    // only honest when a single region covered everything.
    Certificate cert = (allExact && division.regions.size() <= 1) ? Certificate::exact()
                                                                  : Certificate::incumbent();
    return finishReport(ins, assemble(ins, fragments), cert, "ptas");
}

GraphClass detectClass(const Instance& ins) {
    if (ins.classHint) return *ins.classHint;
    auto deg = degrees(ins);
    size_t n = ins.vertices.size(), m = ins.edges.size();
    bool connected = isConnected(ins);
    bool acyclic = isAcyclic(ins);
    long long maxDeg = 0;
    for (const auto& [id, d] : deg) maxDeg = std::max<long long>(maxDeg, d);
    if (connected && acyclic && maxDeg <= 2) return GraphClass::Path;
    if (connected && !acyclic && m == n && maxDeg == 2) return GraphClass::Cycle;
    if (acyclic) return GraphClass::Tree;
    std::set<std::string> side;
    if (twoColor(ins, side)) return GraphClass::Bipartite;
    if (ins.embedding) {
        try {
            validateEmbedding(SimpleGraph::fromInstance(ins), *ins.embedding);
            return GraphClass::Planar;
        } catch (const Error&) {
        }
    }
    return GraphClass::General;
}

SolveReport solveAuto(const Instance& input, const SolverConfig& config) {
    Instance ins = input;
    ins.model = config.model;
    auto cls = detectClass(ins);
    bool unit = unitProfits(ins) && !ins.edges.empty();
    switch (cls) {
        case GraphClass::Path: {
            if (ins.edges.empty())
                return finishReport(ins, assemble(ins, {}), Certificate::exact(), "path");
            auto adj = adjacency(ins);
            std::string start = ins.vertices[0].first;
            for (const auto& [id, nb] : adj)
                if (nb.size() == 1) {
                    start = id;
                    break;
                }
            std::vector<std::string> order{start};
            std::set<std::string> seen{start};
            while (true) {
                std::string next;
                for (const auto& [v, p] : adj.at(order.back()))
                    if (!seen.count(v)) next = v;
                if (next.empty()) break;
                seen.insert(next);
                order.push_back(next);
            }
            auto layout = order.size() >= 2 ? realizePath(ins, order) : Layout{};
            return finishReport(ins, assemble(ins, {layout}), Certificate::exact(), "path");
        }
        case GraphClass::Cycle: {
            auto adj = adjacency(ins);
            std::vector<std::string> order{ins.vertices[0].first};
            std::set<std::string> seen{order[0]};
            while (true) {
                std::string next;
                for (const auto& [v, p] : adj.at(order.back()))
                    if (!seen.count(v)) next = v;
                if (next.empty()) break;
                seen.insert(next);
                order.push_back(next);
            }
            return finishReport(ins, assemble(ins, {realizeCycle(ins, order)}),
                                Certificate::exact(), "cycle");
        }
        case GraphClass::Star:
            return solveStar(ins);
        case GraphClass::Tree:
            return unit && isConnected(ins) ? solveTreeUnweighted(ins)
                                            : solveTreeWeighted(ins);
        case GraphClass::Outerplanar:
            return solveOuterplanar(ins);
        case GraphClass::Planar:
            if (ins.embedding) return solvePlanarWeighted(ins);
            [[fallthrough]];
        case GraphClass::Bipartite: {
            std::set<std::string> side;
            if (twoColor(ins, side)) return solveBipartite(ins);
            [[fallthrough]];
        }
        default:
            return unit ? solveGeneralUnweighted(ins) : solveGeneralDeterministic(ins);
    }
}

}  // namespace crown
