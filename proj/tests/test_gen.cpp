#include "crown/gen.hpp"

#include "crown/decompose.hpp"
#include "crown/io.hpp"
#include "crown/solve.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

using namespace crown;

TEST_CASE("random generation is seed-deterministic") {
    GenOptions opt;
    const Instance a = genRandom("tree", 12, opt, 7);
    const Instance b = genRandom("tree", 12, opt, 7);
    CHECK(writeInstance(a) == writeInstance(b));
    const Instance c = genRandom("tree", 12, opt, 8);
    CHECK(writeInstance(a) != writeInstance(c));
}

TEST_CASE("generated classes have the expected shape") {
    GenOptions opt;
    opt.minDim = 1;
    opt.maxDim = 5;
    CHECK(detectClass(genRandom("path", 6, opt, 1)) == GraphClass::Path);
    CHECK(detectClass(genRandom("cycle", 6, opt, 1)) == GraphClass::Cycle);
    const Instance star = genRandom("star", 7, opt, 2);
    CHECK(star.edges.size() == 6);
    for (const auto& e : star.edges) CHECK(e.u == "v0");
    const Instance tree = genRandom("tree", 9, opt, 3);
    CHECK(tree.edges.size() == 8);
    CHECK(detectClass(tree) == GraphClass::Tree);
    for (const auto& [id, d] : tree.vertices) {
        CHECK(d.width >= 1);
        CHECK(d.width <= 5);
        CHECK(d.height >= 1);
        CHECK(d.height <= 5);
    }
    CHECK_THROWS_WITH_AS(genRandom("hypercube", 4, opt, 0), doctest::Contains("unsupported-class"),
                         Error);
}

TEST_CASE("generated outerplanar graphs are maximal and solvable") {
    GenOptions opt;
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const Instance ins = genRandom("outerplanar", 9, opt, seed);
        CHECK(ins.edges.size() == 2 * 9 - 3);
        const SolveReport rep = solveOuterplanar(ins);
        CHECK(rep.profit >= Rat(0));
    }
}

TEST_CASE("generated triangulations carry a valid embedding") {
    GenOptions opt;
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const Instance ins = genRandom("planar-triangulation", 14, opt, seed);
        CHECK(ins.edges.size() == 3 * 14 - 6);
        REQUIRE(ins.embedding.has_value());
        CHECK_NOTHROW(validateEmbedding(SimpleGraph::fromInstance(ins), *ins.embedding));
        CHECK_NOTHROW(solvePlanarWeighted(ins));
    }
}

TEST_CASE("generated bipartite graphs two-color") {
    GenOptions opt;
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const Instance ins = genRandom("bipartite", 10, opt, seed);
        CHECK_NOTHROW(solveBipartite(ins));
    }
}

TEST_CASE("matching gadget has the advertised structure") {
    GadgetSpec spec;
    spec.k = 1;
    spec.hyperedges = {{0, 0, 0}};
    const Instance ins = genGadget(spec);
    CHECK(ins.vertices.size() == 12);  // 3 elements + hub + 8 satellites
    CHECK(ins.edges.size() == 11);
    for (const auto& [id, d] : ins.vertices) {
        CHECK(d.width == d.height);
        CHECK((d.width == 2 || d.width == 12 || d.width == 14));
    }
    CHECK(detectClass(ins) == GraphClass::Bipartite);
    Rat total(0);
    for (const auto& e : ins.edges) total += e.profit;
    CHECK(total == Rat(2 + 7 * 3 + 3));

    GadgetSpec bad = spec;
    bad.hyperedges = {{0, 0, 1}};
    CHECK_THROWS_WITH_AS(genGadget(bad), doctest::Contains("invalid-spec"), Error);
    bad.hyperedges = {{0, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_WITH_AS(genGadget(bad), doctest::Contains("invalid-spec"), Error);
    bad.k = 2;
    bad.hyperedges = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}};
    CHECK_THROWS_WITH_AS(genGadget(bad), doctest::Contains("invalid-spec"), Error);
}

TEST_CASE("well-formed gadget layouts hit the target profit exactly") {
    GadgetSpec spec;
    spec.k = 1;
    spec.hyperedges = {{0, 0, 0}};
    const Instance ins = genGadget(spec);
    SUBCASE("matched hyperedge realizes its element triple") {
        const Layout lay = gadgetWellFormedLayout(spec, {0});
        CHECK(validate(ins, lay).empty());
        CHECK(evaluate(ins, lay).profit == Rat(24));
    }
    SUBCASE("unmatched hyperedge realizes the light satellite instead") {
        const Layout lay = gadgetWellFormedLayout(spec, {});
        CHECK(validate(ins, lay).empty());
        CHECK(evaluate(ins, lay).profit == Rat(23));
    }
}

TEST_CASE("well-formed gadget layouts scale with the matching size") {
    GadgetSpec spec;
    spec.k = 2;
    spec.hyperedges = {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}};
    const Instance ins = genGadget(spec);
    const Layout lay = gadgetWellFormedLayout(spec, {0, 1});
    CHECK(validate(ins, lay).empty());
    CHECK(evaluate(ins, lay).profit == Rat(23 * 3 + 2));
    CHECK_THROWS_WITH_AS(gadgetWellFormedLayout(spec, {0, 2}),
                         doctest::Contains("invalid-spec"), Error);
    CHECK_THROWS_WITH_AS(gadgetWellFormedLayout(spec, {0, 0}),
                         doctest::Contains("invalid-spec"), Error);
}

TEST_CASE("bipartite solver clears its guarantee on the gadget") {
    GadgetSpec spec;
    spec.k = 1;
    spec.hyperedges = {{0, 0, 0}};
    const Instance ins = genGadget(spec);
    const SolveReport rep = solveBipartite(ins);
    CHECK(rep.profit * rep.certifiedRatio.bound() >= Rat(24));
}

TEST_CASE("text ingestion sizes boxes by frequency rank") {
    std::map<std::string, long long> freq = {{"alpha", 4}, {"beta", 1}};
    std::map<std::pair<std::string, std::string>, long long> cooc = {{{"alpha", "beta"}, 3}};
    const Instance ins = genFromText(freq, cooc, 2);
    CHECK(ins.dim("alpha") == BoxDim{5 * 2 * 3, 2 * 3});  // top rank factor is 3
    CHECK(ins.dim("beta") == BoxDim{4 * 2, 2});
    REQUIRE(ins.edges.size() == 1);
    CHECK(ins.edges[0].profit == Rat(3));

    const Instance flat = genFromText({{"aa", 5}, {"bb", 5}}, {}, 1);
    CHECK(flat.dim("aa") == BoxDim{2, 1});  // equal frequencies share factor 1

    CHECK_THROWS_WITH_AS(genFromText({}, {}, 1), doctest::Contains("empty-input"), Error);
    CHECK_THROWS_WITH_AS(genFromText(freq, {{{"alpha", "gamma"}, 1}}, 1),
                         doctest::Contains("invalid-spec"), Error);
    CHECK_THROWS_WITH_AS(genFromText(freq, cooc, 0), doctest::Contains("invalid-spec"), Error);
}
