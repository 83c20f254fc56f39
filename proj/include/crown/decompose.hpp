#ifndef CROWN_DECOMPOSE_HPP
#define CROWN_DECOMPOSE_HPP

#include "crown/model.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace crown {

struct Star {
    std::string center;
    std::vector<std::string> leaves;
};

/// Vertex-disjoint stars; the edge set is {(center, leaf)}.
struct StarForest {
    std::vector<Star> stars;

    std::vector<std::pair<std::string, std::string>> edges() const;
    bool empty() const;
};

/// Bare undirected graph over string ids; the shape all decomposition
/// routines consume.
struct SimpleGraph {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;

    static SimpleGraph fromInstance(const Instance& ins);
};

/// Root at a maximum-degree vertex; an edge whose parent endpoint sits at
/// depth d goes to forest d mod 2 with the parent as center.
std::array<StarForest, 2> treeToTwoStarForests(const SimpleGraph& g);

struct PeeledStars {
    StarForest forest;  // anchor edges already removed
    std::vector<std::pair<std::string, std::string>> anchors;  // (center, parent)
};

/// Repeatedly detaches a deepest vertex whose children are all leaves as a
/// star over its children plus its parent; the edge to the parent is the
/// star's anchor and is withheld from the forest.
PeeledStars anchoredStarPeel(const SimpleGraph& g);

/// Degree-<=2 peeling; forests indexed so every vertex centers a star in
/// only one of the three. Throws Error("no-degree-2-vertex") when the
/// peel gets stuck (input not outerplanar-degenerate).
std::array<StarForest, 3> outerplanarToThreeStarForests(const SimpleGraph& g);

/// Triangulates the embedding, splits the triangulation's edges into three
/// forests via an incremental contour ordering, restricts them to original
/// edges and parity-splits each into two star forests. Acyclic components
/// skip the machinery and use the two-forest tree cover.
std::array<StarForest, 6> planarStarForestCover(const SimpleGraph& g, const Embedding& emb);

/// Face-traces the rotation system and checks Euler's formula per
/// connected component; throws Error("embedding-invalid") on failure.
void validateEmbedding(const SimpleGraph& g, const Embedding& emb);

/// Greedy over id-lexicographic edge order.
std::vector<std::pair<std::string, std::string>> maximalMatching(const SimpleGraph& g);

/// Maximum cardinality matching (blossom contraction, general graphs).
std::vector<std::pair<std::string, std::string>> maximumMatching(const SimpleGraph& g);

struct Separation {
    std::vector<std::string> a, b, s;
};

/// Balanced separator: no a-b edges, |a|,|b| <= 2n/3. Candidates come
/// from BFS levels, fundamental cycles of BFS trees and (for trees) the
/// centroid; the smallest valid candidate wins.
Separation planarSeparator(const SimpleGraph& g, const Embedding& emb);

struct RDivision {
    std::vector<std::string> boundary;               // X
    std::vector<std::vector<std::string>> regions;   // each <= r, no cross edges
};

/// Recursive separator bisection until every region has <= r vertices.
RDivision rDivision(const SimpleGraph& g, const Embedding& emb, long long r);

}  // namespace crown

#endif
