#ifndef CROWN_GEN_HPP
#define CROWN_GEN_HPP

#include "crown/model.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace crown {

/// Deterministic splitmix-style generator; the only randomness source in
/// the library.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

struct GenOptions {
    long long minDim = 1, maxDim = 20;
    long long minProfit = 1, maxProfit = 9;
    bool unweighted = false;  // forces all profits to 1
    ContactModel model = ContactModel::Proper;
};

/// Seed-deterministic random instance of the named class: path, cycle,
/// star, tree, outerplanar, planar-triangulation, bipartite or general.
/// Planar triangulations come with a valid embedding by construction.
/// Throws Error("unsupported-class").
Instance genRandom(const std::string& cls, int n, const GenOptions& opt, uint64_t seed);

/// Three-dimensional matching instance: element triples and at most 3k
/// hyperedges, each element in at most 3 hyperedges.
struct GadgetSpec {
    int k = 0;
    std::vector<std::array<int, 3>> hyperedges;  // (x, y, z) indices in [0, k)
};

/// Hardness gadget: per element a 2x2 square, per hyperedge a 14x14 hub
/// with eight 12x12 satellites (profits 2 for the first, 3 for the rest,
/// 1 per hub-element incidence). Throws Error("invalid-spec").
Instance genGadget(const GadgetSpec& spec);

/// The hand-constructed layout realizing profit 23|E| + |M|: hyperedges
/// in the matching realize their element triple instead of the profit-2
/// satellite.
Layout gadgetWellFormedLayout(const GadgetSpec& spec, const std::vector<int>& matchedEdges);

/// Word-network ingestion: box sizes from character counts scaled by an
/// importance factor derived from frequency, edge profits from
/// co-occurrence counts. Throws Error("empty-input").
Instance genFromText(const std::map<std::string, long long>& frequency,
                     const std::map<std::pair<std::string, std::string>, long long>& cooccurrence,
                     long long scale);

}  // namespace crown

#endif
