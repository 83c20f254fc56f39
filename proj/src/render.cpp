#include "crown/render.hpp"

#include <algorithm>
#include <sstream>

namespace crown {

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) { return a / gcd(a, b) * b; }

}  // namespace

std::string renderSvg(const Instance& ins, const SolveReport& report) {
    const Layout& lay = report.layout;
    if (!validate(ins, lay).empty())
        throw Error("invalid-report", "layout does not fit the instance");
    if (ins.vertices.empty()) throw Error("invalid-report", "nothing to draw");

    std::map<std::string, PlacedBox> boxes;
    Rat minX, minY, maxY;
    bool first = true;
    for (const auto& [id, d] : ins.vertices) {
        const auto& [x, y] = lay.placements.at(id);
        PlacedBox b{x, y, d};
        if (first || x < minX) minX = x;
        if (first || y < minY) minY = y;
        if (first || b.top() > maxY) maxY = b.top();
        first = false;
        boxes.emplace(id, std::move(b));
    }
    BigInt scale(1);
    for (const auto& [id, b] : boxes) {
        scale = lcm(scale, b.x.denominator());
        scale = lcm(scale, b.y.denominator());
    }
    // Flip y so larger layout y means higher on screen; shift by the
    // margin so everything is positive.
    auto sx = [&](const Rat& v) { return (v - minX + 1) * Rat(scale); };
    auto sy = [&](const Rat& v) { return (maxY - v + 1) * Rat(scale); };
    auto num = [](const Rat& v) {
        std::ostringstream os;
        os << v.numerator();
        return os.str();
    };
    Rat viewW = Rat(0), viewH = sy(minY) + Rat(scale);
    for (const auto& [id, b] : boxes) viewW = std::max(viewW, sx(b.right()));
    viewW += Rat(scale);
    const BigInt stroke = std::max(BigInt(1), BigInt(scale / 10));
    const BigInt font = std::max(BigInt(1), BigInt(scale / 2));
    const BigInt dot = std::max(BigInt(1), BigInt(scale / 4));

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(viewW) << " "
        << num(viewH) << "\">\n";
    for (const auto& [id, b] : boxes) {
        svg << "  <rect x=\"" << num(sx(b.x)) << "\" y=\"" << num(sy(b.top())) << "\" width=\""
            << b.dim.width * scale << "\" height=\"" << b.dim.height * scale
            << "\" fill=\"#dce6f2\" stroke=\"#333\" stroke-width=\"" << stroke << "\"/>\n";
        svg << "  <text x=\"" << num(sx(b.x) + Rat(b.dim.width) * Rat(scale) / 2) << "\" y=\""
            << num(sy(b.y) - Rat(b.dim.height) * Rat(scale) / 2) << "\" font-size=\"" << font
            << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << id << "</text>\n";
    }
    auto edges = report.realizedEdges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) {
        const PlacedBox& a = boxes.at(u);
        const PlacedBox& b = boxes.at(v);
        const Rat x1 = std::max(a.x, b.x), x2 = std::min(a.right(), b.right());
        const Rat y1 = std::max(a.y, b.y), y2 = std::min(a.top(), b.top());
        if (x1 == x2 && y1 == y2) {
            svg << "  <circle cx=\"" << num(sx(x1)) << "\" cy=\"" << num(sy(y1)) << "\" r=\"" << dot
                << "\" fill=\"#c0392b\"/>\n";
        } else {
            svg << "  <line x1=\"" << num(sx(x1)) << "\" y1=\"" << num(sy(y1)) << "\" x2=\""
                << num(sx(x2)) << "\" y2=\"" << num(sy(y2))
                << "\" stroke=\"#c0392b\" stroke-width=\"" << stroke << "\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace crown
