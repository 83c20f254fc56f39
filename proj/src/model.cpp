#include "crown/model.hpp"

#include <algorithm>
#include <set>

namespace crown {

std::string graphClassName(GraphClass c) {
    switch (c) {
        case GraphClass::Path: return "path";
        case GraphClass::Cycle: return "cycle";
        case GraphClass::Star: return "star";
        case GraphClass::Tree: return "tree";
        case GraphClass::Outerplanar: return "outerplanar";
        case GraphClass::Planar: return "planar";
        case GraphClass::Bipartite: return "bipartite";
        case GraphClass::General: return "general";
    }
    return "general";
}

std::optional<GraphClass> graphClassFromName(const std::string& name) {
    static const std::map<std::string, GraphClass> table = {
        {"path", GraphClass::Path},         {"cycle", GraphClass::Cycle},
        {"star", GraphClass::Star},         {"tree", GraphClass::Tree},
        {"outerplanar", GraphClass::Outerplanar},
        {"planar", GraphClass::Planar},     {"planar-triangulation", GraphClass::Planar},
        {"bipartite", GraphClass::Bipartite}, {"general", GraphClass::General},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

bool Instance::hasVertex(const std::string& id) const {
    return std::any_of(vertices.begin(), vertices.end(),
                       [&](const auto& v) { return v.first == id; });
}

const BoxDim& Instance::dim(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.first == id) return v.second;
    throw Error("unknown-vertex", "no vertex with id '" + id + "'");
}

void Instance::checkInvariants() const {
    std::set<std::string> ids;
    for (const auto& [id, d] : vertices) {
        if (!ids.insert(id).second)
            throw Error("semantic-error", "duplicate vertex id '" + id + "'");
        if (d.width < 1 || d.height < 1)
            throw Error("semantic-error", "non-positive dims for '" + id + "'");
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : edges) {
        if (!ids.count(e.u))
            throw Error("semantic-error", "edge endpoint '" + e.u + "' is not a vertex");
        if (!ids.count(e.v))
            throw Error("semantic-error", "edge endpoint '" + e.v + "' is not a vertex");
        if (e.u == e.v)
            throw Error("semantic-error", "self-loop at '" + e.u + "'");
        if (e.profit < Rat(0))
            throw Error("semantic-error", "negative profit on (" + e.u + "," + e.v + ")");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert({key.first, key.second}).second)
            throw Error("semantic-error", "duplicate edge (" + e.u + "," + e.v + ")");
    }
    if (embedding) {
        for (const auto& [u, nbrs] : *embedding) {
            if (!ids.count(u))
                throw Error("semantic-error", "embedding key '" + u + "' is not a vertex");
            std::set<std::string> local;
            for (const auto& w : nbrs) {
                if (!ids.count(w))
                    throw Error("semantic-error", "embedding neighbor '" + w + "' is not a vertex");
                if (!local.insert(w).second)
                    throw Error("semantic-error",
                                "repeated neighbor '" + w + "' in rotation of '" + u + "'");
                auto it = embedding->find(w);
                bool back = it != embedding->end() &&
                            std::find(it->second.begin(), it->second.end(), u) != it->second.end();
                if (!back)
                    throw Error("semantic-error",
                                "asymmetric embedding: '" + w + "' lists no '" + u + "'");
            }
        }
    }
}

ContactKind contact(const PlacedBox& a, const PlacedBox& b) {
    Rat ixLo = std::max(a.x, b.x), ixHi = std::min(a.right(), b.right());
    Rat iyLo = std::max(a.y, b.y), iyHi = std::min(a.top(), b.top());
    if (ixLo > ixHi || iyLo > iyHi) return ContactKind::None;
    bool xSeg = ixLo < ixHi, ySeg = iyLo < iyHi;
    if (xSeg && ySeg)
        throw Error("overlap-error", "box interiors intersect");
    if (xSeg || ySeg) return ContactKind::Proper;
    return ContactKind::Point;
}

namespace {

PlacedBox placed(const Instance& instance, const Layout& layout, const std::string& id) {
    const auto& p = layout.placements.at(id);
    return PlacedBox{p.first, p.second, instance.dim(id)};
}

}  // namespace

std::vector<Violation> validate(const Instance& instance, const Layout& layout) {
    std::vector<Violation> out;
    std::vector<std::string> placedIds;
    for (const auto& [id, d] : instance.vertices) {
        if (!layout.placements.count(id))
            out.push_back({"unplaced", id, "", ""});
        else
            placedIds.push_back(id);
    }
    for (size_t i = 0; i < placedIds.size(); ++i) {
        PlacedBox a = placed(instance, layout, placedIds[i]);
        for (size_t j = i + 1; j < placedIds.size(); ++j) {
            PlacedBox b = placed(instance, layout, placedIds[j]);
            Rat ixLo = std::max(a.x, b.x), ixHi = std::min(a.right(), b.right());
            Rat iyLo = std::max(a.y, b.y), iyHi = std::min(a.top(), b.top());
            if (ixLo < ixHi && iyLo < iyHi) {
                Rat wx = (ixLo + ixHi) / 2, wy = (iyLo + iyHi) / 2;
                out.push_back({"overlap", placedIds[i], placedIds[j],
                               "(" + formatRat(wx) + "," + formatRat(wy) + ")"});
            }
        }
    }
    return out;
}

Evaluation evaluate(const Instance& instance, const Layout& layout) {
    auto violations = validate(instance, layout);
    if (!violations.empty()) {
        std::string detail;
        for (const auto& v : violations) {
            detail += v.kind + " " + v.a;
            if (!v.b.empty()) detail += "/" + v.b;
            detail += "; ";
        }
        throw Error("validation-error", detail);
    }
    Evaluation ev;
    ev.profit = Rat(0);
    for (const auto& e : instance.edges) {
        PlacedBox a = placed(instance, layout, e.u);
        PlacedBox b = placed(instance, layout, e.v);
        if (contactCounts(contact(a, b), instance.model)) {
            ev.realizedEdges.push_back({e.u, e.v});
            ev.profit += e.profit;
        }
    }
    return ev;
}

std::string Certificate::str() const {
    switch (kind) {
        case Kind::Exact: return "exact";
        case Kind::Incumbent: return "incumbent";
        case Kind::Ratio: return formatRat(ratio);
    }
    return "exact";
}

void reevaluate(const Instance& instance, SolveReport& report) {
    Evaluation ev = evaluate(instance, report.layout);
    report.realizedEdges = std::move(ev.realizedEdges);
    report.profit = ev.profit;
}

}  // namespace crown
