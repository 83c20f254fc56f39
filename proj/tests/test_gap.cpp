#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crown/gap.hpp"

#include <cstdint>

using namespace crown;

namespace {

// Deterministic splitmix-style generator so the frozen expectations below
// are stable across platforms.
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
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

GapInstance starInstance(long long w, long long h,
                         const std::vector<std::pair<long long, long long>>& dims,
                         const std::vector<Rat>& profits) {
    GapInstance g;
    g.bins = {{"c0", 1}, {"c1", 1}, {"c2", 1}, {"c3", 1},
              {"top", w}, {"bottom", w}, {"left", h}, {"right", h}};
    for (size_t i = 0; i < dims.size(); ++i) {
        GapItem it;
        it.id = "i" + std::to_string(i);
        for (int k = 0; k < 4; ++k) {
            it.sizeInBin[g.bins[k].id] = 1;
            it.profitInBin[g.bins[k].id] = profits[i];
        }
        if (dims[i].first <= w) {
            it.sizeInBin["top"] = dims[i].first;
            it.sizeInBin["bottom"] = dims[i].first;
            it.profitInBin["top"] = profits[i];
            it.profitInBin["bottom"] = profits[i];
        }
        if (dims[i].second <= h) {
            it.sizeInBin["left"] = dims[i].second;
            it.sizeInBin["right"] = dims[i].second;
            it.profitInBin["left"] = profits[i];
            it.profitInBin["right"] = profits[i];
        }
        g.items.push_back(it);
    }
    return g;
}

}  // namespace

TEST_CASE("knapsack picks the enumerated optimum") {
    std::vector<KnapsackItem> items = {{3, Rat(4)}, {2, Rat(3)}, {4, Rat(5)}};
    auto chosen = knapsackExact(5, items);
    CHECK(chosen == std::vector<size_t>{0, 1});  // profit 7, best of all 8 subsets
}

TEST_CASE("knapsack trivia") {
    CHECK(knapsackExact(0, {{3, Rat(4)}}).empty());
    CHECK(knapsackExact(10, {{10, Rat(1)}}) == std::vector<size_t>{0});
    CHECK(knapsackExact(5, {}).empty());
}

TEST_CASE("knapsack tie-break is lexicographically smallest") {
    // Items 0 and 1 are interchangeable optima; index 0 must win.
    std::vector<KnapsackItem> items = {{2, Rat(3)}, {2, Rat(3)}};
    CHECK(knapsackExact(2, items) == std::vector<size_t>{0});
    // A zero-profit filler that fits must not be added.
    std::vector<KnapsackItem> filler = {{1, Rat(2)}, {1, Rat(0)}};
    CHECK(knapsackExact(3, filler) == std::vector<size_t>{0});
}

TEST_CASE("single-bin gap reduces to knapsack") {
    GapInstance g;
    g.bins = {{"b", 5}};
    const long long sizes[3] = {3, 2, 4};
    const long long profits[3] = {4, 3, 5};
    for (int i = 0; i < 3; ++i) {
        GapItem it;
        it.id = "i" + std::to_string(i);
        it.sizeInBin["b"] = sizes[i];
        it.profitInBin["b"] = Rat(profits[i]);
        g.items.push_back(it);
    }
    auto a = gapIterativeKnapsack(g);
    CHECK(a.feasible(g));
    CHECK(a.profit(g) == Rat(7));
    CHECK(a.assign.at("i0") == "b");
    CHECK(a.assign.at("i1") == "b");
    CHECK(!a.assign.count("i2"));
}

TEST_CASE("later bin steals when its profit dominates") {
    GapInstance g;
    g.bins = {{"first", 1}, {"second", 1}};
    GapItem it;
    it.id = "x";
    it.sizeInBin = {{"first", 1}, {"second", 1}};
    it.profitInBin = {{"first", Rat(1)}, {"second", Rat(9)}};
    g.items = {it};
    auto a = gapIterativeKnapsack(g);
    // Pass 1 assigns x to "first" (profit 1); pass 2 sees adjusted
    // profit 9-1=8 > 0 and reassigns.
    CHECK(a.assign.at("x") == "second");
    CHECK(a.profit(g) == Rat(9));
}

TEST_CASE("empty gap instance") {
    GapInstance g;
    auto a = gapIterativeKnapsack(g);
    CHECK(a.assign.empty());
    CHECK(a.profit(g) == Rat(0));
}

TEST_CASE("star dp fits four unit leaves around a 3x3 center") {
    auto g = starInstance(3, 3, {{1, 1}, {1, 1}, {1, 1}, {1, 1}},
                          {Rat(1), Rat(1), Rat(1), Rat(1)});
    auto a = gapStarExact(g);
    CHECK(a.feasible(g));
    CHECK(a.profit(g) == Rat(4));
    CHECK(a.assign.size() == 4);
}

TEST_CASE("oversized leaves land in corner bins only") {
    auto g = starInstance(2, 2, {{3, 3}, {3, 3}, {3, 3}, {3, 3}, {3, 3}},
                          {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    auto a = gapStarExact(g);
    CHECK(a.profit(g) == Rat(4));
    for (const auto& [item, bin] : a.assign) CHECK(bin[0] == 'c');
    CHECK(a.profit(g) == gapBruteForce(g).profit(g));
}

TEST_CASE("star dp with no items") {
    auto g = starInstance(4, 4, {}, {});
    auto a = gapStarExact(g);
    CHECK(a.assign.empty());
    CHECK(a.profit(g) == Rat(0));
}

TEST_CASE("star dp rejects malformed shapes and huge tables") {
    GapInstance g;
    g.bins = {{"only", 3}};
    CHECK_THROWS_AS(gapStarExact(g), Error);
    auto big = starInstance(500, 500, {{2, 2}}, {Rat(1)});
    CHECK_THROWS_AS(gapStarExact(big), Error);
}

TEST_CASE("brute force trivia") {
    GapInstance g;
    g.bins = {{"b", 1}};
    GapItem stranded;
    stranded.id = "s";
    g.items = {stranded};
    CHECK(gapBruteForce(g).assign.empty());

    GapItem a{"a", {{"b", 1}}, {{"b", Rat(2)}}};
    GapItem b{"bb", {{"b", 1}}, {{"b", Rat(3)}}};
    g.items = {a, b};
    auto best = gapBruteForce(g);
    CHECK(best.assign.size() == 1);
    CHECK(best.assign.at("bb") == "b");
}

TEST_CASE("star dp matches brute force on random star instances") {
    TestRng rng(20240601);
    for (int trial = 0; trial < 60; ++trial) {
        long long w = rng.range(1, 5), h = rng.range(1, 5);
        int n = static_cast<int>(rng.range(0, 6));
        std::vector<std::pair<long long, long long>> dims;
        std::vector<Rat> profits;
        for (int i = 0; i < n; ++i) {
            dims.push_back({rng.range(1, 6), rng.range(1, 6)});
            profits.push_back(Rat(rng.range(0, 20), rng.range(1, 3)));
        }
        auto g = starInstance(w, h, dims, profits);
        auto exact = gapStarExact(g);
        auto brute = gapBruteForce(g);
        REQUIRE(exact.feasible(g));
        CHECK(exact.profit(g) == brute.profit(g));
    }
}

TEST_CASE("iterative gap stays within a third of the optimum") {
    TestRng rng(987654321);
    for (int trial = 0; trial < 80; ++trial) {
        GapInstance g;
        int nb = static_cast<int>(rng.range(1, 3));
        for (int b = 0; b < nb; ++b)
            g.bins.push_back({"b" + std::to_string(b), rng.range(0, 8)});
        int ni = static_cast<int>(rng.range(0, 8));
        for (int i = 0; i < ni; ++i) {
            GapItem it;
            it.id = "i" + std::to_string(i);
            for (const auto& bin : g.bins) {
                if (rng.range(0, 3) == 0) continue;  // sometimes ineligible
                it.sizeInBin[bin.id] = rng.range(1, 6);
                it.profitInBin[bin.id] = Rat(rng.range(0, 12));
            }
            g.items.push_back(it);
        }
        auto approx = gapIterativeKnapsack(g);
        auto best = gapBruteForce(g);
        REQUIRE(approx.feasible(g));
        CHECK(approx.profit(g) * Rat(3) >= best.profit(g));
    }
}

TEST_CASE("adding an item never hurts the brute-force optimum") {
    TestRng rng(13579);
    for (int trial = 0; trial < 25; ++trial) {
        GapInstance g;
        g.bins = {{"b0", rng.range(1, 6)}, {"b1", rng.range(1, 6)}};
        Rat prev(0);
        for (int i = 0; i < 5; ++i) {
            GapItem it;
            it.id = "i" + std::to_string(i);
            for (const auto& bin : g.bins) {
                it.sizeInBin[bin.id] = rng.range(1, 4);
                it.profitInBin[bin.id] = Rat(rng.range(0, 9));
            }
            g.items.push_back(it);
            Rat now = gapBruteForce(g).profit(g);
            CHECK(now >= prev);
            prev = now;
        }
    }
}
