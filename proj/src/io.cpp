#include "crown/io.hpp"

#include <json.hpp>

namespace crown {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parseFail(const std::string& text, size_t byte, const std::string& msg) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    throw Error("parse-error",
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

Json parseJson(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parseFail(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
}

Rat ratField(const Json& j, const char* what) {
    if (j.is_string()) return parseRat(j.get<std::string>());
    if (j.is_number_integer()) return ratFromInt(j.get<long long>());
    if (j.is_number_float()) return parseRat(j.dump());
    throw Error("semantic-error", std::string(what) + " must be a number or rational string");
}

}  // namespace

Instance readInstance(const std::string& text) {
    Json j = parseJson(text);
    Instance inst;
    try {
        std::string model = j.value("model", "proper");
        if (model == "proper") inst.model = ContactModel::Proper;
        else if (model == "point") inst.model = ContactModel::Point;
        else throw Error("semantic-error", "unknown model '" + model + "'");

        for (const auto& v : j.at("vertices")) {
            BoxDim d{v.at("w").get<long long>(), v.at("h").get<long long>()};
            inst.vertices.push_back({v.at("id").get<std::string>(), d});
        }
        for (const auto& e : j.value("edges", Json::array())) {
            inst.edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                                  ratField(e.at("p"), "profit")});
        }
        if (j.contains("embedding") && !j["embedding"].is_null()) {
            Embedding emb;
            for (const auto& [key, nbrs] : j["embedding"].items()) {
                std::vector<std::string> rot;
                for (const auto& w : nbrs) rot.push_back(w.get<std::string>());
                emb[key] = std::move(rot);
            }
            inst.embedding = std::move(emb);
        }
        if (j.contains("class_hint") && !j["class_hint"].is_null()) {
            auto c = graphClassFromName(j["class_hint"].get<std::string>());
            if (!c) throw Error("semantic-error",
                                "unknown class_hint '" + j["class_hint"].get<std::string>() + "'");
            inst.classHint = c;
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error("semantic-error", e.what());
    }
    inst.checkInvariants();
    return inst;
}

std::string writeInstance(const Instance& inst) {
    Json j;
    j["model"] = inst.model == ContactModel::Proper ? "proper" : "point";
    j["vertices"] = Json::array();
    for (const auto& [id, d] : inst.vertices)
        j["vertices"].push_back({{"id", id}, {"w", d.width}, {"h", d.height}});
    j["edges"] = Json::array();
    for (const auto& e : inst.edges)
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"p", formatRat(e.profit)}});
    if (inst.embedding) {
        Json emb = Json::object();
        for (const auto& [u, nbrs] : *inst.embedding) emb[u] = nbrs;
        j["embedding"] = emb;
    }
    if (inst.classHint) j["class_hint"] = graphClassName(*inst.classHint);
    return j.dump(2) + "\n";
}

std::string writeReport(const SolveReport& report) {
    Json j;
    j["algorithm"] = report.algorithm;
    j["profit"] = formatRat(report.profit);
    j["certified_ratio"] = report.certifiedRatio.str();
    if (report.seed) j["seed"] = *report.seed;
    j["placements"] = Json::array();
    for (const auto& [id, pos] : report.layout.placements)
        j["placements"].push_back(
            {{"id", id}, {"x", formatRat(pos.first)}, {"y", formatRat(pos.second)}});
    j["realized_edges"] = Json::array();
    for (const auto& [u, v] : report.realizedEdges)
        j["realized_edges"].push_back(Json::array({u, v}));
    return j.dump(2) + "\n";
}

SolveReport readReport(const std::string& text) {
    Json j = parseJson(text);
    SolveReport r;
    try {
        r.algorithm = j.value("algorithm", "");
        r.profit = parseRat(j.at("profit").get<std::string>());
        std::string cert = j.value("certified_ratio", "exact");
        if (cert == "exact") r.certifiedRatio = Certificate::exact();
        else if (cert == "incumbent") r.certifiedRatio = Certificate::incumbent();
        else r.certifiedRatio = Certificate::approx(parseRat(cert));
        if (j.contains("seed") && !j["seed"].is_null()) r.seed = j["seed"].get<long long>();
        for (const auto& p : j.at("placements"))
            r.layout.placements[p.at("id").get<std::string>()] = {
                parseRat(p.at("x").get<std::string>()), parseRat(p.at("y").get<std::string>())};
        for (const auto& e : j.value("realized_edges", Json::array()))
            r.realizedEdges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
        throw Error("semantic-error", e.what());
    }
    return r;
}

}  // namespace crown
