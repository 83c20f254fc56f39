#include "crown/solve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace crown {

namespace {

// A weak order of box-endpoint values on one axis: classes of equal
// values, listed in increasing order. Endpoint 2i is box i's low side,
// 2i+1 its high side.
using Order = std::vector<std::vector<int>>;

// Symbolic weight c - s*eta for an infinitesimal eta > 0 (s counts strict
// inequalities). All hard constants are integers, so comparisons stay in
// long long.
struct Weight {
    long long c = 0;
    int s = 0;
    bool operator<(const Weight& o) const { return c < o.c || (c == o.c && s > o.s); }
    Weight operator+(const Weight& o) const { return {c + o.c, s + o.s}; }
};

struct DiffEdge {
    int from, to;
    Weight w;
};

/// Difference-constraint edges induced by a weak order together with the
/// exact extents high - low = size per box.
std::vector<DiffEdge> orderConstraints(const Order& o, const std::vector<long long>& size) {
    std::vector<DiffEdge> es;
    std::set<int> present;
    for (const auto& cls : o)
        for (int e : cls) present.insert(e);
    for (int e : present) {
        if (e % 2) continue;
        if (!present.count(e + 1)) continue;
        long long s = size[e / 2];
        es.push_back({e, e + 1, {s, 0}});    // high <= low + s
        es.push_back({e + 1, e, {-s, 0}});   // low <= high - s
    }
    for (size_t i = 0; i < o.size(); ++i) {
        int rep = o[i][0];
        for (size_t j = 1; j < o[i].size(); ++j) {
            es.push_back({rep, o[i][j], {0, 0}});
            es.push_back({o[i][j], rep, {0, 0}});
        }
        if (i + 1 < o.size()) es.push_back({o[i + 1][0], rep, {0, 1}});  // rep < next, strictly
    }
    return es;
}

/// Bellman-Ford feasibility: no negative cycle (where a zero-length cycle
/// with a strict edge counts as negative).
bool feasibleOrder(const Order& o, const std::vector<long long>& size) {
    auto es = orderConstraints(o, size);
    std::map<int, Weight> dist;
    for (const auto& cls : o)
        for (int e : cls) dist[e] = {0, 0};
    size_t V = dist.size();
    for (size_t round = 0; round <= V; ++round) {
        bool changed = false;
        for (const auto& e : es) {
            Weight cand = dist[e.from] + e.w;
            if (cand < dist[e.to]) {
                dist[e.to] = cand;
                changed = true;
            }
        }
        if (!changed) return true;
        if (round == V) return false;
    }
    return true;
}

/// Concrete coordinates honoring the order: shortest-path values with eta
/// substituted by a rational small enough that no integer slack flips.
std::map<int, Rat> orderWitness(const Order& o, const std::vector<long long>& size) {
    auto es = orderConstraints(o, size);
    Rat eta(1, 4 * static_cast<long long>(size.size()) + 2);
    std::map<int, Rat> dist;
    for (const auto& cls : o)
        for (int e : cls) dist[e] = Rat(0);
    for (size_t round = 0; round + 1 < 2 * dist.size() + 2; ++round) {
        bool changed = false;
        for (const auto& e : es) {
            Rat cand = dist[e.from] + ratFromInt(e.w.c) - eta * e.w.s;
            if (cand < dist[e.to]) {
                dist[e.to] = cand;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist;
}

/// All ways to insert a box's (low, high) endpoint pair into an order,
/// with low strictly before high (box extents are positive).
std::vector<Order> insertPair(const Order& o, int low, int high) {
    std::vector<Order> out;
    int C = static_cast<int>(o.size());
    auto withNew = [&](const Order& base, int gap, int e) {
        Order next = base;
        next.insert(next.begin() + gap, {e});
        return next;
    };
    auto withJoin = [&](const Order& base, int cls, int e) {
        Order next = base;
        next[cls].push_back(e);
        return next;
    };
    for (int li = 0; li < C; ++li) {  // low joins class li
        Order l = withJoin(o, li, low);
        for (int rj = li + 1; rj < C; ++rj) out.push_back(withJoin(l, rj, high));
        for (int g = li + 1; g <= C; ++g) out.push_back(withNew(l, g, high));
    }
    for (int lg = 0; lg <= C; ++lg) {  // low forms a new class at gap lg
        Order l = withNew(o, lg, low);
        int CL = C + 1;
        for (int rj = lg + 1; rj < CL; ++rj) out.push_back(withJoin(l, rj, high));
        for (int g = lg + 1; g <= CL; ++g) out.push_back(withNew(l, g, high));
    }
    return out;
}

struct ExactSearch {
    const Instance& ins;
    int n;
    std::vector<long long> ws, hs;
    std::vector<std::vector<std::pair<int, Rat>>> edgesToEarlier;  // by higher endpoint
    std::vector<Rat> rem;  // profit of edges not fully placed before box k
    long long budget;
    long long nodes = 0;
    bool exceeded = false;
    Order xo, yo;
    std::vector<int> posX, posY;  // endpoint -> class index
    Rat best = Rat(-1);
    Order bestX, bestY;

    explicit ExactSearch(const Instance& i, long long b) : ins(i), budget(b) {
        n = static_cast<int>(ins.vertices.size());
        std::map<std::string, int> idx;
        for (int k = 0; k < n; ++k) {
            idx[ins.vertices[k].first] = k;
            ws.push_back(ins.vertices[k].second.width);
            hs.push_back(ins.vertices[k].second.height);
        }
        edgesToEarlier.assign(n, {});
        std::vector<Rat> byMax(n + 1, Rat(0));
        for (const auto& e : ins.edges) {
            int a = idx.at(e.u), b = idx.at(e.v);
            edgesToEarlier[std::max(a, b)].push_back({std::min(a, b), e.profit});
            byMax[std::max(a, b)] += e.profit;
        }
        rem.assign(n + 1, Rat(0));
        for (int k = n - 1; k >= 0; --k) rem[k] = rem[k + 1] + byMax[k];
        posX.assign(2 * n, -1);
        posY.assign(2 * n, -1);
    }

    void refreshPos(const Order& o, std::vector<int>& pos) {
        for (size_t c = 0; c < o.size(); ++c)
            for (int e : o[c]) pos[e] = static_cast<int>(c);
    }

    bool openX(int a, int b) const { return posX[2 * a] < posX[2 * b + 1] && posX[2 * b] < posX[2 * a + 1]; }
    bool openY(int a, int b) const { return posY[2 * a] < posY[2 * b + 1] && posY[2 * b] < posY[2 * a + 1]; }
    bool touchX(int a, int b) const { return posX[2 * a + 1] == posX[2 * b] || posX[2 * b + 1] == posX[2 * a]; }
    bool touchY(int a, int b) const { return posY[2 * a + 1] == posY[2 * b] || posY[2 * b + 1] == posY[2 * a]; }

    Rat contribution(int k) {
        Rat p(0);
        for (const auto& [j, profit] : edgesToEarlier[k]) {
            ContactKind kind = ContactKind::None;
            if ((touchX(k, j) && openY(k, j)) || (touchY(k, j) && openX(k, j)))
                kind = ContactKind::Proper;
            else if (touchX(k, j) && touchY(k, j))
                kind = ContactKind::Point;
            if (contactCounts(kind, ins.model)) p += profit;
        }
        return p;
    }

    void dfs(int k, Rat cur) {
        if (exceeded) return;
        if (k == n) {
            if (cur > best) {
                best = cur;
                bestX = xo;
                bestY = yo;
            }
            return;
        }
        if (!(cur + rem[k] > best)) return;
        auto xcands = insertPair(xo, 2 * k, 2 * k + 1);
        for (const auto& xc : xcands) {
            if (exceeded) return;
            if (!feasibleOrder(xc, ws)) continue;
            Order savedX = xo;
            xo = xc;
            refreshPos(xo, posX);
            auto ycands = insertPair(yo, 2 * k, 2 * k + 1);
            for (const auto& yc : ycands) {
                if (++nodes > budget) {
                    exceeded = true;
                    break;
                }
                if (!feasibleOrder(yc, hs)) continue;
                Order savedY = yo;
                yo = yc;
                refreshPos(yo, posY);
                bool ok = true;
                for (int j = 0; j < k && ok; ++j)
                    if (openX(k, j) && openY(k, j)) ok = false;
                if (ok) dfs(k + 1, cur + contribution(k));
                yo = savedY;
                refreshPos(yo, posY);
            }
            xo = savedX;
            refreshPos(xo, posX);
        }
    }
};

}  // namespace

SolveReport solveExact(const Instance& ins, long long budget) {
    SolveReport rep;
    rep.algorithm = "exact";
    int n = static_cast<int>(ins.vertices.size());
    if (n <= 1) {
        if (n == 1) rep.layout.placements[ins.vertices[0].first] = {Rat(0), Rat(0)};
        rep.certifiedRatio = Certificate::exact();
        reevaluate(ins, rep);
        return rep;
    }
    ExactSearch s(ins, budget);
    s.xo = {{0}, {1}};
    s.yo = {{0}, {1}};
    s.refreshPos(s.xo, s.posX);
    s.refreshPos(s.yo, s.posY);
    s.dfs(1, Rat(0));

    if (s.best >= Rat(0)) {
        auto dx = orderWitness(s.bestX, s.ws);
        auto dy = orderWitness(s.bestY, s.hs);
        Rat ox = dx.at(0), oy = dy.at(0);  // pin box 0's low corner at the origin
        for (int k = 0; k < n; ++k)
            rep.layout.placements[ins.vertices[k].first] = {dx.at(2 * k) - ox,
                                                            dy.at(2 * k) - oy};
    } else {
        // Budget gone before any complete placement: park everything.
        Rat x(0);
        for (const auto& [id, dim] : ins.vertices) {
            rep.layout.placements[id] = {x, Rat(0)};
            x += ratFromInt(dim.width) + Rat(1);
        }
    }
    rep.certifiedRatio = s.exceeded ? Certificate::incumbent() : Certificate::exact();
    reevaluate(ins, rep);
    return rep;
}

Rat gridOracle(const Instance& ins) {
    // Exhaustive search on a half-unit grid in doubled coordinates: every
    // box is placed either at half-integer offsets within interaction
    // range of an already-placed box, or parked far away. Half resolution
    // (not whole units) is required: a box resting between two others can
    // need a half offset, as three unit squares in a triangle show. All
    // insertion orders are tried so every contact component admits an
    // order in which each box attaches to a placed neighbor.
    int n = static_cast<int>(ins.vertices.size());
    if (n > 4) throw Error("size-exceeded", "grid oracle accepts at most 4 boxes");
    if (n <= 1) return Rat(0);

    std::vector<long long> w(n), h(n);  // doubled dimensions
    std::map<std::string, int> idx;
    long long total = 0;
    for (int k = 0; k < n; ++k) {
        idx[ins.vertices[k].first] = k;
        w[k] = 2 * ins.vertices[k].second.width;
        h[k] = 2 * ins.vertices[k].second.height;
        total += w[k] + h[k];
    }
    const long long far = 2 * total + 4;

    std::vector<std::vector<Rat>> profit(n, std::vector<Rat>(n, Rat(0)));
    std::vector<std::vector<bool>> hasEdge(n, std::vector<bool>(n, false));
    for (const auto& e : ins.edges) {
        int a = idx.at(e.u), b = idx.at(e.v);
        profit[a][b] = profit[b][a] = e.profit;
        hasEdge[a][b] = hasEdge[b][a] = true;
    }

    auto open = [](long long a0, long long a1, long long b0, long long b1) {
        return std::max(a0, b0) < std::min(a1, b1);
    };

    std::vector<long long> px(n), py(n);
    Rat best(0);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;

    std::function<void(int, Rat)> dfs = [&](int oi, Rat cur) {
        if (oi == n) {
            if (cur > best) best = cur;
            return;
        }
        int k = order[oi];
        auto tryAt = [&](long long x, long long y) {
            for (int pj = 0; pj < oi; ++pj) {
                int j = order[pj];
                if (open(x, x + w[k], px[j], px[j] + w[j]) &&
                    open(y, y + h[k], py[j], py[j] + h[j]))
                    return;
            }
            px[k] = x;
            py[k] = y;
            Rat add(0);
            for (int pj = 0; pj < oi; ++pj) {
                int j = order[pj];
                if (!hasEdge[j][k]) continue;
                bool tx = x + w[k] == px[j] || px[j] + w[j] == x;
                bool ty = y + h[k] == py[j] || py[j] + h[j] == y;
                bool ox = open(x, x + w[k], px[j], px[j] + w[j]);
                bool oy = open(y, y + h[k], py[j], py[j] + h[j]);
                ContactKind kind = ContactKind::None;
                if ((tx && oy) || (ty && ox))
                    kind = ContactKind::Proper;
                else if (tx && ty)
                    kind = ContactKind::Point;
                if (contactCounts(kind, ins.model)) add += profit[j][k];
            }
            dfs(oi + 1, cur + add);
        };
        // A contact needs an exact touch on one axis, and a contact-free
        // box can always be parked, so only touching positions matter.
        for (int pj = 0; pj < oi; ++pj) {
            int j = order[pj];
            for (long long dx : {w[j], -w[k]})
                for (long long dy = -(h[j] + h[k]); dy <= h[j] + h[k]; ++dy)
                    tryAt(px[j] + dx, py[j] + dy);
            for (long long dy : {h[j], -h[k]})
                for (long long dx = -(w[j] + w[k]); dx <= w[j] + w[k]; ++dx)
                    tryAt(px[j] + dx, py[j] + dy);
        }
        tryAt(far * (k + 1), far * (k + 1));  // parked: no interaction
    };

    do {
        px[order[0]] = 0;
        py[order[0]] = 0;
        dfs(1, Rat(0));
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return best;
}

}  // namespace crown
