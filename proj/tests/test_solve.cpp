#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crown/gap.hpp"
#include "crown/io.hpp"
#include "crown/solve.hpp"

#include <cstdint>

using namespace crown;

namespace {

struct TestRng {
    uint64_t state;
    explicit TestRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

Instance unitInstance(int n, const std::vector<std::pair<int, int>>& edges,
                      ContactModel model = ContactModel::Proper) {
    Instance ins;
    ins.model = model;
    for (int i = 0; i < n; ++i) ins.vertices.push_back({"v" + std::to_string(i), {1, 1}});
    for (auto [a, b] : edges)
        ins.edges.push_back({"v" + std::to_string(a), "v" + std::to_string(b), Rat(1)});
    return ins;
}

Instance randomTriple(TestRng& rng, bool pointModel) {
    Instance ins;
    ins.model = pointModel ? ContactModel::Point : ContactModel::Proper;
    for (int i = 0; i < 3; ++i)
        ins.vertices.push_back({"v" + std::to_string(i),
                                {rng.range(1, 6), rng.range(1, 6)}});
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}})
        if (rng.next() % 4 != 0)
            ins.edges.push_back({"v" + std::to_string(a), "v" + std::to_string(b),
                                 Rat(rng.range(1, 9))});
    return ins;
}

Instance starInstance(BoxDim center, const std::vector<BoxDim>& leaves,
                      const std::vector<Rat>& profits, ContactModel model) {
    Instance ins;
    ins.model = model;
    ins.vertices.push_back({"c", center});
    for (size_t i = 0; i < leaves.size(); ++i) {
        std::string id = "l" + std::to_string(i);
        ins.vertices.push_back({id, leaves[i]});
        ins.edges.push_back({"c", id, profits[i]});
    }
    return ins;
}

void checkSound(const Instance& ins, const SolveReport& rep) {
    CHECK(validate(ins, rep.layout).empty());
    CHECK(evaluate(ins, rep.layout).profit == rep.profit);
}

}  // namespace

TEST_CASE("exact solver on two touching squares") {
    auto ins = unitInstance(2, {{0, 1}});
    ins.edges[0].profit = Rat(7, 2);
    auto rep = solveExact(ins);
    checkSound(ins, rep);
    CHECK(rep.profit == Rat(7, 2));
    CHECK(rep.certifiedRatio.kind == Certificate::Kind::Exact);
}

TEST_CASE("exact solver realizes a unit triangle completely") {
    auto ins = unitInstance(3, {{0, 1}, {1, 2}, {0, 2}});
    auto rep = solveExact(ins);
    checkSound(ins, rep);
    CHECK(rep.profit == Rat(3));
    CHECK(gridOracle(ins) == Rat(3));
}

TEST_CASE("grid oracle basics") {
    auto one = unitInstance(1, {});
    CHECK(gridOracle(one) == Rat(0));
    auto two = unitInstance(2, {{0, 1}});
    two.edges[0].profit = Rat(5);
    CHECK(gridOracle(two) == Rat(5));
    auto big = unitInstance(5, {});
    CHECK_THROWS_WITH_AS(gridOracle(big), doctest::Contains("size-exceeded"), Error);
}

TEST_CASE("exact solver equals the grid oracle on random triples") {
    TestRng rng(41);
    for (int t = 0; t < 60; ++t) {
        auto ins = randomTriple(rng, t % 2 == 0);
        auto rep = solveExact(ins);
        checkSound(ins, rep);
        CHECK(rep.certifiedRatio.kind == Certificate::Kind::Exact);
        CHECK(rep.profit == gridOracle(ins));
    }
}

TEST_CASE("exact solver on unit K4 matches the oracle") {
    auto ins = unitInstance(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Rat opt = gridOracle(ins);
    auto rep = solveExact(ins, 20000000);
    checkSound(ins, rep);
    CHECK(rep.certifiedRatio.kind == Certificate::Kind::Exact);
    CHECK(rep.profit == opt);
}

TEST_CASE("exact solver budget exhaustion degrades to incumbent") {
    auto ins = unitInstance(3, {{0, 1}, {1, 2}});
    auto rep = solveExact(ins, 5);
    CHECK(rep.certifiedRatio.kind == Certificate::Kind::Incumbent);
    CHECK(validate(ins, rep.layout).empty());
}

TEST_CASE("star solver realizes four proper contacts around a 3x3 center") {
    auto ins = starInstance({3, 3}, {{1, 1}, {1, 1}, {1, 1}, {1, 1}},
                            {Rat(1), Rat(1), Rat(1), Rat(1)}, ContactModel::Proper);
    auto rep = solveStar(ins);
    checkSound(ins, rep);
    CHECK(rep.profit == Rat(4));
    CHECK(rep.certifiedRatio.kind == Certificate::Kind::Exact);
}

TEST_CASE("star solver with a unit center fills all eight bins") {
    std::vector<BoxDim> leaves(8, BoxDim{1, 1});
    std::vector<Rat> profits;
    for (int i = 1; i <= 8; ++i) profits.push_back(Rat(i));
    auto ins = starInstance({1, 1}, leaves, profits, ContactModel::Point);
    auto rep = solveStar(ins);
    checkSound(ins, rep);
    CHECK(rep.profit == Rat(36));  // one unit leaf per bin realizes everything
    CHECK(rep.realizedEdges.size() == 8);
}

TEST_CASE("star solver matches the brute-force assignment optimum") {
    std::vector<BoxDim> leaves = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 1}, {3, 1}};
    std::vector<Rat> profits = {Rat(4), Rat(7), Rat(2), Rat(9), Rat(1), Rat(5)};
    auto ins = starInstance({2, 2}, leaves, profits, ContactModel::Point);
    auto rep = solveStar(ins);
    checkSound(ins, rep);

    GapInstance g;
    g.bins = {{"nw", 1}, {"ne", 1}, {"sw", 1}, {"se", 1},
              {"top", 2}, {"bottom", 2}, {"left", 2}, {"right", 2}};
    for (size_t i = 0; i < leaves.size(); ++i) {
        GapItem it;
        it.id = "l" + std::to_string(i);
        for (int b = 0; b < 4; ++b) {
            it.sizeInBin[g.bins[b].id] = 1;
            it.profitInBin[g.bins[b].id] = profits[i];
        }
        it.sizeInBin["top"] = it.sizeInBin["bottom"] = leaves[i].width;
        it.sizeInBin["left"] = it.sizeInBin["right"] = leaves[i].height;
        it.profitInBin["top"] = it.profitInBin["bottom"] = profits[i];
        it.profitInBin["left"] = it.profitInBin["right"] = profits[i];
        g.items.push_back(it);
    }
    CHECK(rep.profit == gapBruteForce(g).profit(g));
}

TEST_CASE("star solver trivia") {
    auto ins = starInstance({2, 3}, {{4, 2}}, {Rat(9, 4)}, ContactModel::Proper);
    auto rep = solveStar(ins);
    checkSound(ins, rep);
    CHECK(rep.profit == Rat(9, 4));

    Instance notStar = unitInstance(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_THROWS_WITH_AS(solveStar(notStar), doctest::Contains("not-a-star"), Error);
}

TEST_CASE("weighted tree solver certifies 2 via two forests") {
    auto ins = unitInstance(2, {{0, 1}});
    ins.edges[0].profit = Rat(6);
    auto rep = solveTreeWeighted(ins);
    checkSound(ins, rep);
    CHECK(rep.profit == Rat(6));
    CHECK(rep.certifiedRatio.bound() == Rat(2));

    TestRng rng(7);
    for (int t = 0; t < 30; ++t) {
        Instance tree;
        tree.model = t % 2 ? ContactModel::Point : ContactModel::Proper;
        int n = static_cast<int>(rng.range(2, 3));
        for (int i = 0; i < n; ++i)
            tree.vertices.push_back({"v" + std::to_string(i),
                                     {rng.range(1, 6), rng.range(1, 6)}});
        for (int i = 1; i < n; ++i)
            tree.edges.push_back({"v" + std::to_string(static_cast<int>(rng.range(0, i - 1))),
                                  "v" + std::to_string(i), Rat(rng.range(1, 9))});
        auto r = solveTreeWeighted(tree);
        checkSound(tree, r);
        CHECK(r.profit * r.certifiedRatio.bound() >= gridOracle(tree));
    }
}

TEST_CASE("outerplanar solver covers a triangle with three forests") {
    auto ins = unitInstance(3, {{0, 1}, {1, 2}, {0, 2}});
    auto rep = solveOuterplanar(ins);
    checkSound(ins, rep);
    CHECK(rep.certifiedRatio.bound() == Rat(3));
    CHECK(rep.profit * Rat(3) >= gridOracle(ins));
}

TEST_CASE("planar solver covers K4 with six forests") {
    auto ins = unitInstance(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Embedding emb;
    emb["v0"] = {"v1", "v2", "v3"};
    emb["v1"] = {"v2", "v0", "v3"};
    emb["v2"] = {"v0", "v1", "v3"};
    emb["v3"] = {"v0", "v2", "v1"};
    ins.embedding = emb;
    auto rep = solvePlanarWeighted(ins);
    checkSound(ins, rep);
    CHECK(rep.certifiedRatio.bound() == Rat(6));
    CHECK(rep.profit * Rat(6) >= gridOracle(ins));
}

TEST_CASE("bipartite solver") {
    auto single = unitInstance(2, {{0, 1}});
    single.edges[0].profit = Rat(3);
    auto rep = solveBipartite(single);
    checkSound(single, rep);
    CHECK(rep.profit == Rat(3));

    // A star fed through the bipartite path agrees with the star solver.
    auto star = starInstance({3, 3}, {{1, 1}, {1, 1}, {1, 1}},
                             {Rat(2), Rat(3), Rat(4)}, ContactModel::Proper);
    auto viaStar = solveStar(star);
    auto viaBip = solveBipartite(star);
    checkSound(star, viaBip);
    CHECK(viaBip.profit == viaStar.profit);

    auto odd = unitInstance(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_WITH_AS(solveBipartite(odd), doctest::Contains("not-bipartite"), Error);
}

TEST_CASE("bipartite certificate holds on K23") {
    Instance ins = unitInstance(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    auto rep = solveBipartite(ins);
    checkSound(ins, rep);
    // OPT <= 6; even the worst certified bound must cover it.
    CHECK(rep.profit * rep.certifiedRatio.bound() >= Rat(6));
}

TEST_CASE("randomized general solver") {
    SolverConfig cfg;
    cfg.trials = 8;
    auto edgeless = unitInstance(3, {});
    auto rep = solveGeneralRandomized(edgeless, cfg);
    checkSound(edgeless, rep);
    CHECK(rep.profit == Rat(0));

    auto single = unitInstance(2, {{0, 1}});
    auto rep2 = solveGeneralRandomized(single, cfg);
    checkSound(single, rep2);
    CHECK(rep2.profit == Rat(1));  // some trial separates the endpoints
    CHECK(rep2.seed.has_value());
}

TEST_CASE("deterministic general solver") {
    auto pairs = unitInstance(4, {{0, 1}, {2, 3}});
    auto rep = solveGeneralDeterministic(pairs);
    checkSound(pairs, rep);
    CHECK(rep.profit == Rat(2));

    auto tri = unitInstance(3, {{0, 1}, {1, 2}, {0, 2}});
    auto rep2 = solveGeneralDeterministic(tri);
    checkSound(tri, rep2);
    CHECK(rep2.profit * rep2.certifiedRatio.bound() >= gridOracle(tri));
}

TEST_CASE("unweighted tree solver") {
    auto k14 = starInstance({1, 1}, {{1, 1}, {1, 1}, {1, 1}, {1, 1}},
                            {Rat(1), Rat(1), Rat(1), Rat(1)}, ContactModel::Proper);
    auto rep = solveTreeUnweighted(k14);
    checkSound(k14, rep);
    CHECK(rep.profit == Rat(4));

    auto path5 = unitInstance(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto rep2 = solveTreeUnweighted(path5);
    checkSound(path5, rep2);
    CHECK(rep2.profit >= Rat(2));  // OPT = 4, certified ratio 2
    CHECK(rep2.certifiedRatio.bound() == Rat(2));

    auto two = unitInstance(2, {{0, 1}});
    CHECK(solveTreeUnweighted(two).profit == Rat(1));

    auto weighted = unitInstance(2, {{0, 1}});
    weighted.edges[0].profit = Rat(2);
    CHECK_THROWS_WITH_AS(solveTreeUnweighted(weighted),
                         doctest::Contains("not-unweighted"), Error);
}

TEST_CASE("unweighted general solver") {
    auto pairs = unitInstance(6, {{0, 1}, {2, 3}, {4, 5}});
    auto rep = solveGeneralUnweighted(pairs);
    checkSound(pairs, rep);
    CHECK(rep.profit == Rat(3));

    auto c5 = unitInstance(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto rep2 = solveGeneralUnweighted(c5);
    checkSound(c5, rep2);
    CHECK(rep2.profit >= Rat(3));
}

TEST_CASE("planar PTAS with one region equals exact") {
    auto ins = unitInstance(3, {{0, 1}, {1, 2}, {0, 2}});
    Embedding emb;
    emb["v0"] = {"v1", "v2"};
    emb["v1"] = {"v2", "v0"};
    emb["v2"] = {"v0", "v1"};
    ins.embedding = emb;
    SolverConfig cfg;
    cfg.regionCap = 8;
    auto rep = solvePlanarPtas(ins, cfg);
    checkSound(ins, rep);
    CHECK(rep.profit == solveExact(ins).profit);
    CHECK(rep.certifiedRatio.kind == Certificate::Kind::Exact);
}

TEST_CASE("combination framework") {
    auto ins = unitInstance(3, {{0, 1}, {1, 2}});
    auto a = solveExact(Instance{ins.model,
                                 {ins.vertices[0], ins.vertices[1], ins.vertices[2]},
                                 {ins.edges[0]},
                                 {},
                                 {}});
    auto b = solveExact(Instance{ins.model,
                                 {ins.vertices[0], ins.vertices[1], ins.vertices[2]},
                                 {ins.edges[1]},
                                 {},
                                 {}});
    a.certifiedRatio = Certificate::approx(Rat(2));
    b.certifiedRatio = Certificate::approx(Rat(2));
    auto rep = combine(ins, {{{"v0", "v1"}}, {{"v1", "v2"}}}, {a, b});
    CHECK(rep.certifiedRatio.bound() == Rat(4));
    CHECK(rep.profit >= Rat(1));

    CHECK_THROWS_WITH_AS(combine(ins, {{{"v0", "v1"}}}, {a}),
                         doctest::Contains("cover-violation"), Error);
}

TEST_CASE("class detection and auto dispatch") {
    auto path = unitInstance(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(detectClass(path) == GraphClass::Path);
    auto repP = solveAuto(path);
    checkSound(path, repP);
    CHECK(repP.profit == Rat(3));
    CHECK(repP.certifiedRatio.kind == Certificate::Kind::Exact);

    auto cyc = unitInstance(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(detectClass(cyc) == GraphClass::Cycle);
    auto repC = solveAuto(cyc);
    checkSound(cyc, repC);
    CHECK(repC.profit == Rat(4));

    auto tree = unitInstance(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(detectClass(tree) == GraphClass::Tree);
    auto tri = unitInstance(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(detectClass(tri) == GraphClass::Cycle);
    auto k4 = unitInstance(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(detectClass(k4) == GraphClass::General);
    auto k23 = unitInstance(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(detectClass(k23) == GraphClass::Bipartite);

    Instance hinted = tri;
    hinted.classHint = GraphClass::Outerplanar;
    CHECK(detectClass(hinted) == GraphClass::Outerplanar);
}

TEST_CASE("reports are byte-deterministic under fixed seeds") {
    auto ins = unitInstance(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    SolverConfig cfg;
    cfg.seed = 11;
    auto r1 = solveGeneralRandomized(ins, cfg);
    auto r2 = solveGeneralRandomized(ins, cfg);
    CHECK(writeReport(r1) == writeReport(r2));
    auto d1 = solveGeneralDeterministic(ins);
    auto d2 = solveGeneralDeterministic(ins);
    CHECK(writeReport(d1) == writeReport(d2));
}
