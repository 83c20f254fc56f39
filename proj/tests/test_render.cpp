#include "crown/render.hpp"

#include "crown/gen.hpp"
#include "crown/solve.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

using namespace crown;

namespace {

size_t countTag(const std::string& svg, const std::string& tag) {
    size_t n = 0;
    for (size_t pos = svg.find(tag); pos != std::string::npos; pos = svg.find(tag, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("a single box renders as a single labelled rect") {
    Instance ins;
    ins.vertices.emplace_back("solo", BoxDim{3, 2});
    SolveReport rep;
    rep.layout.placements["solo"] = {Rat(0), Rat(0)};
    const std::string svg = renderSvg(ins, rep);
    CHECK(countTag(svg, "<rect") == 1);
    CHECK(countTag(svg, "<line") == 0);
    CHECK(svg.find(">solo<") != std::string::npos);
    CHECK(svg.find("viewBox=\"0 0 5 4\"") != std::string::npos);  // box plus margin 1
}

TEST_CASE("realized contacts are highlighted") {
    Instance ins;
    ins.vertices.emplace_back("a", BoxDim{2, 2});
    ins.vertices.emplace_back("b", BoxDim{2, 2});
    ins.edges.push_back({"a", "b", Rat(1)});
    SolveReport rep;
    rep.layout.placements["a"] = {Rat(0), Rat(0)};
    rep.layout.placements["b"] = {Rat(2), Rat(0)};
    rep.realizedEdges = {{"a", "b"}};
    const std::string svg = renderSvg(ins, rep);
    CHECK(countTag(svg, "<rect") == 2);
    CHECK(countTag(svg, "<line") == 1);

    SUBCASE("fractional coordinates scale away into integers") {
        rep.layout.placements["b"] = {Rat(2), Rat(5, 3)};
        rep.realizedEdges.clear();
        const std::string scaled = renderSvg(ins, rep);
        const std::string body = scaled.substr(scaled.find(">\n"));  // skip the xmlns header
        CHECK(body.find('.') == std::string::npos);
        CHECK(body.find("y=\"") != std::string::npos);
    }
}

TEST_CASE("corner contacts render as a point marker") {
    Instance ins;
    ins.model = ContactModel::Point;
    ins.vertices.emplace_back("a", BoxDim{1, 1});
    ins.vertices.emplace_back("b", BoxDim{1, 1});
    ins.edges.push_back({"a", "b", Rat(1)});
    SolveReport rep;
    rep.layout.placements["a"] = {Rat(0), Rat(0)};
    rep.layout.placements["b"] = {Rat(1), Rat(1)};
    rep.realizedEdges = {{"a", "b"}};
    const std::string svg = renderSvg(ins, rep);
    CHECK(countTag(svg, "<circle") == 1);
}

TEST_CASE("invalid layouts are rejected") {
    Instance ins;
    ins.vertices.emplace_back("a", BoxDim{2, 2});
    ins.vertices.emplace_back("b", BoxDim{2, 2});
    SolveReport rep;
    rep.layout.placements["a"] = {Rat(0), Rat(0)};
    rep.layout.placements["b"] = {Rat(1), Rat(1)};  // overlaps a
    CHECK_THROWS_WITH_AS(renderSvg(ins, rep), doctest::Contains("invalid-report"), Error);
}

TEST_CASE("rendering is byte-deterministic and covers the gadget") {
    GadgetSpec spec;
    spec.k = 1;
    spec.hyperedges = {{0, 0, 0}};
    const Instance ins = genGadget(spec);
    SolveReport rep;
    rep.layout = gadgetWellFormedLayout(spec, {0});
    reevaluate(ins, rep);
    const std::string a = renderSvg(ins, rep);
    const std::string b = renderSvg(ins, rep);
    CHECK(a == b);
    CHECK(countTag(a, "<rect") == 12);
    CHECK(countTag(a, "<line") == 10);  // 23|E|+|M| layout realizes 10 of 11 edges
}
