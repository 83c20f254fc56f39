#ifndef CROWN_GAP_HPP
#define CROWN_GAP_HPP

#include "crown/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace crown {

struct GapBin {
    std::string id;
    long long capacity = 0;
};

struct GapItem {
    std::string id;
    std::map<std::string, long long> sizeInBin;   // absent bin id = ineligible
    std::map<std::string, Rat> profitInBin;
};

struct GapInstance {
    std::vector<GapBin> bins;
    std::vector<GapItem> items;
};

struct GapAssignment {
    std::map<std::string, std::string> assign;  // item id -> bin id

    Rat profit(const GapInstance& g) const;
    bool feasible(const GapInstance& g) const;
};

struct KnapsackItem {
    long long size = 1;
    Rat profit;
};

/// Maximum-profit subset of total size <= capacity. Among optima returns
/// the lexicographically smallest index set.
std::vector<size_t> knapsackExact(long long capacity, const std::vector<KnapsackItem>& items);

/// Bins in input order, one exact knapsack per bin over profit adjusted by
/// what an item already earns elsewhere; winners are reassigned.
GapAssignment gapIterativeKnapsack(const GapInstance& g);

/// Exact DP for the 8-bin star shape: bins[0..3] corner bins (capacity 1,
/// unit sizes), bins[4..5] horizontal (sizes = widths), bins[6..7]
/// vertical (sizes = heights). Throws Error("budget-exceeded") when the
/// DP table would exceed the budget and Error("invalid-star-shape") when
/// the instance does not match the shape.
GapAssignment gapStarExact(const GapInstance& g, long long budget = 100000000);

/// Exhaustive optimum; (#bins+1)^(#items) <= 1e7 or Error("size-exceeded").
GapAssignment gapBruteForce(const GapInstance& g);

}  // namespace crown

#endif
