#include "crown/realize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace crown {

namespace {

const std::vector<std::string> kNoItems;

Rat ratW(const Instance& ins, const std::string& id) { return ratFromInt(ins.dim(id).width); }
Rat ratH(const Instance& ins, const std::string& id) { return ratFromInt(ins.dim(id).height); }

std::map<std::pair<std::string, std::string>, Rat> edgeProfits(const Instance& ins) {
    std::map<std::pair<std::string, std::string>, Rat> p;
    for (const auto& e : ins.edges) {
        p[{e.u, e.v}] = e.profit;
        p[{e.v, e.u}] = e.profit;
    }
    return p;
}

}  // namespace

const std::vector<std::string>& StarPlan::items(StarBin b) const {
    auto it = perBin.find(b);
    return it == perBin.end() ? kNoItems : it->second;
}

size_t StarPlan::itemCount() const {
    size_t n = 0;
    for (const auto& [bin, items] : perBin) n += items.size();
    return n;
}

Layout realizeStar(const Instance& ins, const StarPlan& plan, ContactModel model) {
    const Rat W = ratW(ins, plan.center), H = ratH(ins, plan.center);
    const bool horiz = plan.orientation == StarOrientation::Horizontal;
    const bool proper = model == ContactModel::Proper;
    const size_t m = plan.itemCount();
    const Rat eps(1, 2 * (static_cast<long long>(m) + 1));

    for (StarBin c : {StarBin::NW, StarBin::NE, StarBin::SW, StarBin::SE})
        if (plan.items(c).size() > 1)
            throw Error("infeasible-plan", "corner bin holds more than one item");

    Layout l;
    l.placements[plan.center] = {Rat(0), Rat(0)};

    auto cornerItem = [&](StarBin b) -> const std::string* {
        const auto& v = plan.items(b);
        return v.empty() ? nullptr : &v[0];
    };
    const std::string* nw = cornerItem(StarBin::NW);
    const std::string* ne = cornerItem(StarBin::NE);
    const std::string* sw = cornerItem(StarBin::SW);
    const std::string* se = cornerItem(StarBin::SE);

    // Corner boxes. Point model: exactly corner-to-corner. Proper model:
    // shifted inward by eps along the orientation's sides.
    auto placeCorner = [&](const std::string* id, int dx, int dy) {
        if (!id) return;
        Rat w = ratW(ins, *id), h = ratH(ins, *id);
        Rat x = dx < 0 ? -w : W;
        Rat y = dy < 0 ? -h : H;
        if (proper) {
            if (horiz)
                x += dx < 0 ? eps : -eps;
            else
                y += dy < 0 ? eps : -eps;
        }
        l.placements[*id] = {x, y};
    };
    placeCorner(nw, -1, +1);
    placeCorner(ne, +1, +1);
    placeCorner(sw, -1, -1);
    placeCorner(se, +1, -1);

    // Rows pack flush along the top/bottom edges. When the corners hug
    // these sides (Proper model, horizontal), the run starts at eps behind
    // an occupied leading corner and may overhang by eps past an absent one.
    auto placeRowY = [&](const std::vector<std::string>& items, bool atTop,
                         bool lowCorner, bool highCorner) {
        Rat total(0);
        for (const auto& id : items) total += ratW(ins, id);
        Rat start(0), limit = W;
        if (proper && horiz) {
            if (lowCorner) start = eps;
            limit = highCorner ? W - eps : W + eps;
            if (!lowCorner && start + total > limit) start = -eps;
        }
        if (start + total > limit)
            throw Error("infeasible-plan", "side items exceed capacity");
        Rat cursor = start;
        for (const auto& id : items) {
            Rat y = atTop ? H : -ratH(ins, id);
            l.placements[id] = {cursor, y};
            cursor += ratW(ins, id);
        }
    };
    auto placeColX = [&](const std::vector<std::string>& items, bool atRight,
                         bool lowCorner, bool highCorner) {
        Rat total(0);
        for (const auto& id : items) total += ratH(ins, id);
        Rat start(0), limit = H;
        if (proper && !horiz) {
            if (lowCorner) start = eps;
            limit = highCorner ? H - eps : H + eps;
            if (!lowCorner && start + total > limit) start = -eps;
        }
        if (start + total > limit)
            throw Error("infeasible-plan", "side items exceed capacity");
        Rat cursor = start;
        for (const auto& id : items) {
            Rat x = atRight ? W : -ratW(ins, id);
            l.placements[id] = {x, cursor};
            cursor += ratH(ins, id);
        }
    };
    placeRowY(plan.items(StarBin::Top), true, nw != nullptr, ne != nullptr);
    placeRowY(plan.items(StarBin::Bottom), false, sw != nullptr, se != nullptr);
    placeColX(plan.items(StarBin::Left), false, sw != nullptr, nw != nullptr);
    placeColX(plan.items(StarBin::Right), true, se != nullptr, ne != nullptr);
    return l;
}

SideCaps shrinkForProperModel(const BoxDim& center, StarOrientation axis) {
    SideCaps caps{ratFromInt(center.width), ratFromInt(center.height)};
    if (axis == StarOrientation::Horizontal)
        caps.horizontal -= Rat(1, 2);
    else
        caps.vertical -= Rat(1, 2);
    return caps;
}

std::vector<StarPlan> postProcessBipartite(const Instance& ins, std::vector<StarPlan> plans) {
    auto profits = edgeProfits(ins);
    std::vector<StarPlan> out;
    for (const auto& plan : plans) {
        auto profitOf = [&](const std::string& id) {
            auto it = profits.find({plan.center, id});
            return it == profits.end() ? Rat(0) : it->second;
        };
        // Drops the lightest item of the corner-side-corner trio when it
        // is exactly full; returns the lost profit.
        auto trim = [&](StarPlan& p, StarBin lowC, StarBin side, StarBin highC,
                        long long cap, bool useWidth) {
            long long total = 0;
            for (const auto& id : p.items(side)) {
                const auto& d = ins.dim(id);
                total += useWidth ? d.width : d.height;
            }
            if (p.items(lowC).empty() || p.items(highC).empty() || total != cap)
                return Rat(0);
            StarBin where = lowC;
            std::string victim = p.items(lowC)[0];
            auto consider = [&](StarBin b, const std::string& id) {
                if (profitOf(id) < profitOf(victim) ||
                    (profitOf(id) == profitOf(victim) && id < victim)) {
                    victim = id;
                    where = b;
                }
            };
            consider(highC, p.items(highC)[0]);
            for (const auto& id : p.items(side)) consider(side, id);
            auto& bin = p.perBin[where];
            bin.erase(std::find(bin.begin(), bin.end(), victim));
            return profitOf(victim);
        };

        const auto& dim = ins.dim(plan.center);
        StarPlan a = plan, b = plan;
        a.orientation = StarOrientation::Horizontal;
        b.orientation = StarOrientation::Vertical;
        Rat lossA = trim(a, StarBin::NW, StarBin::Top, StarBin::NE, dim.width, true) +
                    trim(a, StarBin::SW, StarBin::Bottom, StarBin::SE, dim.width, true);
        Rat lossB = trim(b, StarBin::SW, StarBin::Left, StarBin::NW, dim.height, false) +
                    trim(b, StarBin::SE, StarBin::Right, StarBin::NE, dim.height, false);
        out.push_back(lossB < lossA ? b : a);
    }
    return out;
}

Layout realizePath(const Instance& ins, const std::vector<std::string>& order) {
    if (order.size() < 2) throw Error("invalid-argument", "path needs at least 2 boxes");
    Layout l;
    Rat x(0), y(0);
    l.placements[order[0]] = {x, y};
    for (size_t i = 1; i < order.size(); ++i) {
        Rat hPrev = ratH(ins, order[i - 1]), hCur = ratH(ins, order[i]);
        Rat overlap = std::min(hPrev, hCur) / 2;
        x += ratW(ins, order[i - 1]);
        y += hPrev - overlap;
        l.placements[order[i]] = {x, y};
    }
    return l;
}

Layout realizeCycle(const Instance& ins, const std::vector<std::string>& order) {
    const size_t k = order.size();
    if (k < 3) throw Error("invalid-argument", "cycle needs at least 3 boxes");
    Layout l;
    if (k == 3) {
        // Two boxes side by side, the third atop the shorter touching the
        // taller's side (or spanning both tops when heights tie).
        const std::string &a = order[0], &b = order[1], &c = order[2];
        Rat w0 = ratW(ins, a), h0 = ratH(ins, a);
        Rat w1 = ratW(ins, b), h1 = ratH(ins, b);
        Rat w2 = ratW(ins, c), h2 = ratH(ins, c);
        l.placements[a] = {Rat(0), Rat(0)};
        l.placements[b] = {w0, Rat(0)};
        if (h0 < h1)
            l.placements[c] = {w0 - w2, h0};
        else if (h1 < h0)
            l.placements[c] = {w0, h1};
        else
            l.placements[c] = {w0 - w2 / 2, h0};
        return l;
    }
    // Two columns sharing the vertical line x = 0: order[0..j] stacking
    // downward on the left, order[j+1..k-1] stacking upward on the right,
    // with the junction and the closing contact both crossing x = 0.
    std::vector<Rat> h(k);
    for (size_t i = 0; i < k; ++i) h[i] = ratH(ins, order[i]);
    for (size_t j = 0; j + 1 < k; ++j) {
        Rat H1(0);
        for (size_t i = 0; i <= j; ++i) H1 += h[i];
        Rat H2(0);
        for (size_t i = j + 1; i < k; ++i) H2 += h[i];
        // t = bottom of the right column; open intervals for the junction
        // contact (order[j], order[j+1]) and the closing (order[k-1], order[0]).
        Rat lo = std::max(-H1 - h[j + 1], -h[0] - H2);
        Rat hi = std::min(-H1 + h[j], h[k - 1] - H2);
        if (!(lo < hi)) continue;
        Rat t = (lo + hi) / 2;
        Rat top(0);
        for (size_t i = 0; i <= j; ++i) {
            top -= h[i];
            l.placements[order[i]] = {-ratW(ins, order[i]), top};
        }
        Rat bot = t;
        for (size_t i = j + 1; i < k; ++i) {
            l.placements[order[i]] = {Rat(0), bot};
            bot += h[i];
        }
        return l;
    }
    throw Error("infeasible-plan", "no feasible column split for cycle");
}

namespace {

// Shifts a fragment so its bounding box starts at (dx, dy) and merges it.
void mergeShifted(Layout& into, const Layout& frag, Rat dx, Rat dy) {
    Rat minX, minY;
    bool first = true;
    for (const auto& [id, pos] : frag.placements) {
        if (first || pos.first < minX) minX = pos.first;
        if (first || pos.second < minY) minY = pos.second;
        first = false;
    }
    for (const auto& [id, pos] : frag.placements) {
        if (into.placements.count(id))
            throw Error("infeasible-plan", "vertex placed by two fragments: " + id);
        into.placements[id] = {pos.first - minX + dx, pos.second - minY + dy};
    }
}

Rat fragWidth(const Instance& ins, const Layout& frag) {
    Rat minX, maxX;
    bool first = true;
    for (const auto& [id, pos] : frag.placements) {
        Rat r = pos.first + ratFromInt(ins.dim(id).width);
        if (first || pos.first < minX) minX = pos.first;
        if (first || r > maxX) maxX = r;
        first = false;
    }
    return maxX - minX;
}

}  // namespace

Layout realizeOneTree(const Instance& ins, const OneTreeAssignment& a, ContactModel model) {
    auto profits = edgeProfits(ins);
    std::set<std::string> verts;
    std::map<std::string, std::string> head;  // item -> its bin's center
    for (const auto& [item, target] : a.assign) {
        verts.insert(item);
        verts.insert(target.first);
        head[item] = target.first;
    }
    if (a.assign.size() > verts.size())
        throw Error("component-not-1-tree", "more edges than vertices");

    // Functional cycle (empty for tree components).
    std::set<std::string> onCycle;
    {
        std::map<std::string, int> state;  // 0 new, 1 in progress, 2 done
        for (const auto& v : verts) {
            std::vector<std::string> path;
            std::string cur = v;
            while (state[cur] == 0 && head.count(cur)) {
                state[cur] = 1;
                path.push_back(cur);
                cur = head[cur];
            }
            if (state[cur] == 1) {  // found a new cycle
                auto it = std::find(path.begin(), path.end(), cur);
                for (; it != path.end(); ++it) onCycle.insert(*it);
            }
            for (const auto& p : path) state[p] = 2;
            state[cur] = 2;
        }
    }

    // Distance to the cycle (or, in a tree, to the sink vertex).
    std::map<std::string, int> depth;
    std::function<int(const std::string&)> depthOf = [&](const std::string& v) -> int {
        if (onCycle.count(v) || !head.count(v)) return 0;
        auto it = depth.find(v);
        if (it != depth.end()) return it->second;
        int d = depthOf(head.at(v)) + 1;
        depth[v] = d;
        return d;
    };

    // Candidate split by head parity; cycle edges always go to side B.
    std::vector<std::string> sideA, sideB;  // item ids = edges
    Rat profitA(0), profitB(0);
    for (const auto& [item, target] : a.assign) {
        Rat p = profits.count({item, target.first}) ? profits.at({item, target.first}) : Rat(0);
        bool cycleEdge = onCycle.count(item) && onCycle.count(target.first);
        if (!cycleEdge && depthOf(target.first) % 2 == 0) {
            sideA.push_back(item);
            profitA += p;
        } else {
            sideB.push_back(item);
            profitB += p;
        }
    }
    bool keepB = profitB > profitA;
    const auto& kept = keepB ? sideB : sideA;

    std::vector<Layout> parts;
    std::map<std::string, StarPlan> plans;
    std::vector<std::string> cycleItems;
    for (const auto& item : kept) {
        const auto& [center, bin] = a.assign.at(item);
        if (keepB && onCycle.count(item) && onCycle.count(center)) {
            cycleItems.push_back(item);
            continue;
        }
        auto& plan = plans[center];
        plan.center = center;
        plan.perBin[bin].push_back(item);
    }
    std::vector<StarPlan> planList;
    for (auto& [center, plan] : plans) planList.push_back(plan);
    if (model == ContactModel::Proper) planList = postProcessBipartite(ins, planList);
    for (const auto& plan : planList) parts.push_back(realizeStar(ins, plan, model));

    if (!cycleItems.empty()) {
        // Walk the functional cycle in its own order.
        std::vector<std::string> cyc;
        std::string cur = *onCycle.begin();
        do {
            cyc.push_back(cur);
            cur = head.at(cur);
        } while (cur != cyc.front());
        if (cyc.size() == 2)
            parts.push_back(realizePath(ins, cyc));
        else
            parts.push_back(realizeCycle(ins, cyc));
    }

    Layout out;
    Rat cursor(0);
    for (const auto& frag : parts) {
        mergeShifted(out, frag, cursor, Rat(0));
        cursor += fragWidth(ins, frag) + Rat(1);
    }
    // Vertices whose only edge landed on the discarded side still belong
    // to this component: park them in a separated row below.
    Rat x(0);
    for (const auto& v : verts) {
        if (out.placements.count(v)) continue;
        out.placements[v] = {x, Rat(-1) - ratH(ins, v)};
        x += ratW(ins, v) + Rat(1);
    }
    return out;
}

Layout assemble(const Instance& ins, const std::vector<Layout>& fragments) {
    Layout out;
    Rat cursor(0);
    for (const auto& frag : fragments) {
        if (frag.placements.empty()) continue;
        mergeShifted(out, frag, cursor, Rat(0));
        cursor += fragWidth(ins, frag) + Rat(1);
    }
    // Leftovers in a separated row below everything placed so far.
    Rat x(0);
    for (const auto& [id, dim] : ins.vertices) {
        if (out.placements.count(id)) continue;
        out.placements[id] = {x, Rat(-1) - ratFromInt(dim.height)};
        x += ratFromInt(dim.width) + Rat(1);
    }
    return out;
}

}  // namespace crown
