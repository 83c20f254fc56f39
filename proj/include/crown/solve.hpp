#ifndef CROWN_SOLVE_HPP
#define CROWN_SOLVE_HPP

#include "crown/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace crown {

struct SolverConfig {
    Rat epsilon = Rat(1, 2);       // PTAS accuracy knob
    long long seed = 0;            // randomized algorithms
    int trials = 8;                // best-of-trials for the randomized solver
    long long exactBudget = 5000000;  // exact-solver node limit
    long long regionCap = 4;       // upper cap on the r-division region size
    ContactModel model = ContactModel::Proper;  // overrides the instance's model
};

/// Edge sets whose union must cover the instance (one per sub-report).
using EdgeCover = std::vector<std::vector<std::pair<std::string, std::string>>>;

/// Best-of combination: re-evaluates every part report on the full
/// instance, returns the most profitable one and certifies the sum of the
/// parts' ratios. Throws Error("cover-violation") when the parts miss an
/// edge.
SolveReport combine(const Instance& ins, const EdgeCover& parts,
                    std::vector<SolveReport> reports);

/// Star instances: exact 8-bin assignment DP per orientation (fallback:
/// iterative knapsack, certified 2).
SolveReport solveStar(const Instance& ins);

/// Tree / outerplanar / planar-with-embedding: star-forest cover (2 / 3 /
/// 6 forests), each star solved exactly, best forest kept.
SolveReport solveTreeWeighted(const Instance& ins);
SolveReport solveOuterplanar(const Instance& ins);
SolveReport solvePlanarWeighted(const Instance& ins);

/// Two-coloring, one grouped assignment pass per side (per-center exact
/// star DP), better side kept; the Proper model trims full trios first.
SolveReport solveBipartite(const Instance& ins);

/// Best of config.trials random vertex bipartitions, each solved as a
/// bipartite instance on the cross edges.
SolveReport solveGeneralRandomized(const Instance& ins, const SolverConfig& config);

/// Single grouped assignment over all vertices; the resulting item->bin
/// digraph decomposes into 1-trees realized component by component.
SolveReport solveGeneralDeterministic(const Instance& ins);

/// Unit-profit tree: anchor-free star peeling, each star solved exactly.
SolveReport solveTreeUnweighted(const Instance& ins);

/// Unit profits, any graph: better of (a) bipartite solve on the edges
/// leaving a maximal matching and (b) the paths-and-cycles realization of
/// the matching plus a maximum matching on its induced leftover.
SolveReport solveGeneralUnweighted(const Instance& ins);

/// r-division, each region solved exactly (budget-guarded with honest
/// certificate degradation), fragments assembled.
SolveReport solvePlanarPtas(const Instance& ins, const SolverConfig& config);

/// Exact branch-and-bound over per-axis weak orders of box endpoints,
/// feasibility by difference constraints. Past the node budget the best
/// incumbent is returned with an "incumbent" certificate.
SolveReport solveExact(const Instance& ins, long long budget = 5000000);

/// Independent exhaustive oracle: box 0 pinned at the origin, the others
/// ranging over signed subset sums of the dimensions. n <= 4, intended
/// for n <= 3. Throws Error("size-exceeded").
Rat gridOracle(const Instance& ins);

/// classHint if present, else structural detection
/// (path/cycle -> tree -> bipartite -> planar-with-embedding -> general).
GraphClass detectClass(const Instance& ins);

/// Dispatches on detectClass (and on all-equal profits for the unweighted
/// specializations); paths and cycles realize exactly.
SolveReport solveAuto(const Instance& ins, const SolverConfig& config = {});

}  // namespace crown

#endif
