#include "crown/gap.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

namespace crown {

Rat GapAssignment::profit(const GapInstance& g) const {
    Rat total(0);
    for (const auto& item : g.items) {
        auto it = assign.find(item.id);
        if (it == assign.end()) continue;
        total += item.profitInBin.at(it->second);
    }
    return total;
}

bool GapAssignment::feasible(const GapInstance& g) const {
    std::map<std::string, long long> load;
    for (const auto& item : g.items) {
        auto it = assign.find(item.id);
        if (it == assign.end()) continue;
        auto sz = item.sizeInBin.find(it->second);
        if (sz == item.sizeInBin.end()) return false;  // ineligible bin
        load[it->second] += sz->second;
    }
    for (const auto& bin : g.bins)
        if (load.count(bin.id) && load[bin.id] > bin.capacity) return false;
    for (const auto& [item, bin] : assign) {
        bool known = std::any_of(g.bins.begin(), g.bins.end(),
                                 [&](const GapBin& b) { return b.id == bin; });
        if (!known) return false;
    }
    return true;
}

std::vector<size_t> knapsackExact(long long capacity, const std::vector<KnapsackItem>& items) {
    if (capacity < 0) capacity = 0;
    const size_t n = items.size();
    const size_t cap = static_cast<size_t>(capacity);
    for (const auto& it : items)
        if (it.size < 1) throw Error("invalid-argument", "knapsack item size < 1");
    // dp[i][c] = best profit using items i..n-1 with remaining capacity c
    std::vector<std::vector<Rat>> dp(n + 1, std::vector<Rat>(cap + 1, Rat(0)));
    for (size_t i = n; i-- > 0;) {
        for (size_t c = 0; c <= cap; ++c) {
            Rat best = dp[i + 1][c];
            if (static_cast<long long>(c) >= items[i].size) {
                Rat take = items[i].profit + dp[i + 1][c - items[i].size];
                if (take > best) best = take;
            }
            dp[i][c] = best;
        }
    }
    std::vector<size_t> chosen;
    size_t c = cap;
    for (size_t i = 0; i < n; ++i) {
        if (dp[i][c] == Rat(0)) break;  // lexicographic optimum: stop at zero remainder
        if (static_cast<long long>(c) >= items[i].size &&
            items[i].profit + dp[i + 1][c - items[i].size] == dp[i][c]) {
            chosen.push_back(i);
            c -= items[i].size;
        }
    }
    return chosen;
}

GapAssignment gapIterativeKnapsack(const GapInstance& g) {
    GapAssignment out;
    std::map<std::string, Rat> earned;  // current profit of assigned items
    for (const auto& bin : g.bins) {
        std::vector<KnapsackItem> kitems;
        std::vector<size_t> index;  // into g.items
        for (size_t i = 0; i < g.items.size(); ++i) {
            const auto& item = g.items[i];
            auto sz = item.sizeInBin.find(bin.id);
            if (sz == item.sizeInBin.end() || sz->second > bin.capacity) continue;
            Rat adjusted = item.profitInBin.at(bin.id);
            auto cur = earned.find(item.id);
            if (cur != earned.end()) adjusted -= cur->second;
            if (adjusted <= Rat(0)) continue;
            kitems.push_back({sz->second, adjusted});
            index.push_back(i);
        }
        for (size_t k : knapsackExact(bin.capacity, kitems)) {
            const auto& item = g.items[index[k]];
            out.assign[item.id] = bin.id;
            earned[item.id] = item.profitInBin.at(bin.id);
        }
    }
    return out;
}

namespace {

struct StarShape {
    long long capT, capB, capL, capR;
    // per item: sizes in the two horizontal bins (width) / vertical (height)
    struct ItemView {
        bool corner[4] = {false, false, false, false};
        bool horiz[2] = {false, false};
        bool vert[2] = {false, false};
        long long w = 0, h = 0;
        long long scaledProfit[8] = {0};  // per bin, valid when eligible
    };
    std::vector<ItemView> items;
};

}  // namespace

GapAssignment gapStarExact(const GapInstance& g, long long budget) {
    if (g.bins.size() != 8) throw Error("invalid-star-shape", "need exactly 8 bins");
    for (int k = 0; k < 4; ++k)
        if (g.bins[k].capacity != 1)
            throw Error("invalid-star-shape", "corner bin capacity must be 1");

    StarShape shape;
    shape.capT = g.bins[4].capacity;
    shape.capB = g.bins[5].capacity;
    shape.capL = g.bins[6].capacity;
    shape.capR = g.bins[7].capacity;

    // Common denominator so the DP runs on integers.
    BigInt lcm(1);
    for (const auto& item : g.items)
        for (const auto& [bin, p] : item.profitInBin)
            lcm = boost::multiprecision::lcm(lcm, p.denominator());

    const long long n = static_cast<long long>(g.items.size());
    const long long table = (shape.capT + 1) * (shape.capB + 1) * (shape.capL + 1) *
                            (shape.capR + 1) * 16;
    if (table * std::max<long long>(n, 1) > budget)
        throw Error("budget-exceeded", "star DP table too large");

    const BigInt kLimit = BigInt(1) << 50;
    for (const auto& item : g.items) {
        StarShape::ItemView v;
        for (int k = 0; k < 8; ++k) {
            auto sz = item.sizeInBin.find(g.bins[k].id);
            if (sz == item.sizeInBin.end()) continue;
            if (k < 4) {
                if (sz->second != 1)
                    throw Error("invalid-star-shape", "corner size must be 1");
                v.corner[k] = true;
            } else if (k < 6) {
                if (v.w != 0 && v.w != sz->second)
                    throw Error("invalid-star-shape", "horizontal sizes differ");
                v.w = sz->second;
                v.horiz[k - 4] = true;
            } else {
                if (v.h != 0 && v.h != sz->second)
                    throw Error("invalid-star-shape", "vertical sizes differ");
                v.h = sz->second;
                v.vert[k - 6] = true;
            }
            BigInt scaled = item.profitInBin.at(g.bins[k].id).numerator() * lcm /
                            item.profitInBin.at(g.bins[k].id).denominator();
            if (scaled >= kLimit || scaled <= -kLimit)
                throw Error("budget-exceeded", "profits too large for integer DP");
            v.scaledProfit[k] = toLongLong(scaled);
        }
        shape.items.push_back(v);
    }

    const long long strideR = 16;
    const long long strideL = strideR * (shape.capR + 1);
    const long long strideB = strideL * (shape.capL + 1);
    const long long strideT = strideB * (shape.capB + 1);
    const long long size = strideT * (shape.capT + 1);
    const long long NEG = std::numeric_limits<long long>::min() / 4;

    std::vector<long long> cur(size, NEG), next(size, NEG);
    cur[0] = 0;
    // choice per item per resulting state: 0 = skip, 1..8 = bin index + 1
    std::vector<std::vector<uint8_t>> choice(shape.items.size(),
                                             std::vector<uint8_t>(size, 0));

    for (size_t i = 0; i < shape.items.size(); ++i) {
        const auto& v = shape.items[i];
        std::fill(next.begin(), next.end(), NEG);
        auto& ch = choice[i];
        for (long long t = 0; t <= shape.capT; ++t)
            for (long long b = 0; b <= shape.capB; ++b)
                for (long long l = 0; l <= shape.capL; ++l)
                    for (long long r = 0; r <= shape.capR; ++r)
                        for (int mask = 0; mask < 16; ++mask) {
                            long long idx = t * strideT + b * strideB + l * strideL +
                                            r * strideR + mask;
                            long long base = cur[idx];
                            if (base == NEG) continue;
                            if (base > next[idx]) { next[idx] = base; ch[idx] = 0; }
                            for (int k = 0; k < 4; ++k) {
                                if (!v.corner[k] || (mask & (1 << k))) continue;
                                long long j = idx + (1 << k);
                                long long val = base + v.scaledProfit[k];
                                if (val > next[j]) { next[j] = val; ch[j] = uint8_t(k + 1); }
                            }
                            for (int k = 0; k < 2; ++k) {
                                if (!v.horiz[k]) continue;
                                long long cap = k == 0 ? shape.capT : shape.capB;
                                long long load = k == 0 ? t : b;
                                if (load + v.w > cap) continue;
                                long long j = idx + v.w * (k == 0 ? strideT : strideB);
                                long long val = base + v.scaledProfit[4 + k];
                                if (val > next[j]) { next[j] = val; ch[j] = uint8_t(5 + k); }
                            }
                            for (int k = 0; k < 2; ++k) {
                                if (!v.vert[k]) continue;
                                long long cap = k == 0 ? shape.capL : shape.capR;
                                long long load = k == 0 ? l : r;
                                if (load + v.h > cap) continue;
                                long long j = idx + v.h * (k == 0 ? strideL : strideR);
                                long long val = base + v.scaledProfit[6 + k];
                                if (val > next[j]) { next[j] = val; ch[j] = uint8_t(7 + k); }
                            }
                        }
        std::swap(cur, next);
    }

    long long bestIdx = 0;
    for (long long idx = 1; idx < size; ++idx)
        if (cur[idx] > cur[bestIdx]) bestIdx = idx;

    GapAssignment out;
    long long idx = bestIdx;
    for (size_t i = shape.items.size(); i-- > 0;) {
        uint8_t c = choice[i][idx];
        if (c == 0) continue;
        int k = c - 1;
        out.assign[g.items[i].id] = g.bins[k].id;
        const auto& v = shape.items[i];
        if (k < 4) idx -= (1 << k);
        else if (k == 4) idx -= v.w * strideT;
        else if (k == 5) idx -= v.w * strideB;
        else if (k == 6) idx -= v.h * strideL;
        else idx -= v.h * strideR;
    }
    return out;
}

GapAssignment gapBruteForce(const GapInstance& g) {
    double states = 1;
    for (size_t i = 0; i < g.items.size(); ++i) {
        states *= static_cast<double>(g.bins.size() + 1);
        if (states > 1e7) throw Error("size-exceeded", "brute force too large");
    }
    std::map<std::string, long long> load;
    GapAssignment cur, best;
    Rat curProfit(0), bestProfit(0);

    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == g.items.size()) {
            if (curProfit > bestProfit) { bestProfit = curProfit; best = cur; }
            return;
        }
        rec(i + 1);
        const auto& item = g.items[i];
        for (const auto& bin : g.bins) {
            auto sz = item.sizeInBin.find(bin.id);
            if (sz == item.sizeInBin.end()) continue;
            if (load[bin.id] + sz->second > bin.capacity) continue;
            load[bin.id] += sz->second;
            cur.assign[item.id] = bin.id;
            curProfit += item.profitInBin.at(bin.id);
            rec(i + 1);
            curProfit -= item.profitInBin.at(bin.id);
            cur.assign.erase(item.id);
            load[bin.id] -= sz->second;
        }
    };
    rec(0);
    return best;
}

}  // namespace crown
