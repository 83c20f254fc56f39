#ifndef CROWN_REALIZE_HPP
#define CROWN_REALIZE_HPP

#include "crown/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace crown {

enum class StarBin { NW, NE, SW, SE, Top, Bottom, Left, Right };

/// Which pair of center sides the corner boxes hug. Horizontal: corner
/// boxes sit above/below the center and make their proper contact with
/// the top/bottom edge; Vertical: left/right.
enum class StarOrientation { Horizontal, Vertical };

struct StarPlan {
    std::string center;
    std::map<StarBin, std::vector<std::string>> perBin;  // corners hold <= 1 item
    StarOrientation orientation = StarOrientation::Horizontal;

    const std::vector<std::string>& items(StarBin b) const;
    size_t itemCount() const;
};

/// Places the center at the origin, side items flush along their sides
/// and corner items corner-to-corner (Point model) or shifted inward by
/// eps = 1/(2(#items+1)) (Proper model). Throws Error("infeasible-plan")
/// when the items cannot fit.
Layout realizeStar(const Instance& ins, const StarPlan& plan, ContactModel model);

/// Side capacities after shrinking one pair of sides by 1/2 (the slack
/// the Proper-model corner shifts live in).
struct SideCaps {
    Rat horizontal;  // top/bottom bins
    Rat vertical;    // left/right bins
};
SideCaps shrinkForProperModel(const BoxDim& center, StarOrientation axis);

/// Point-contact removal for plans produced against unshrunk capacities:
/// wherever a corner-and-side trio is exactly full, the lightest of its
/// items is dropped. Variant A does this for the top and bottom trios,
/// variant B for left and right; the heavier variant is kept per center
/// (>= 3/4 of the assigned profit survives) and the orientation is set
/// so the result realizes without point contacts.
std::vector<StarPlan> postProcessBipartite(const Instance& ins, std::vector<StarPlan> plans);

/// Staircase: each box's left edge touches its predecessor's right edge
/// with vertical overlap min(h_i, h_{i+1})/2.
Layout realizePath(const Instance& ins, const std::vector<std::string>& order);

/// Triangle construction for 3 boxes; two back-to-back columns joined at
/// a common vertical line for longer cycles. Realizes every cycle edge.
Layout realizeCycle(const Instance& ins, const std::vector<std::string>& order);

/// One edge per item: the item is placed into a bin of its head vertex.
struct OneTreeAssignment {
    std::map<std::string, std::pair<std::string, StarBin>> assign;
};

/// Component of the assignment digraph with #edges <= #vertices: splits
/// the edges into two star-forest candidates (plus the cycle for
/// 1-trees) by distance parity, realizes the heavier one, and applies
/// the bipartite post-processing under the Proper model.
Layout realizeOneTree(const Instance& ins, const OneTreeAssignment& a, ContactModel model);

/// Translates internally-valid fragments into a row with gaps >= 1 and
/// appends every still-unplaced vertex in a separated row below.
Layout assemble(const Instance& ins, const std::vector<Layout>& fragments);

}  // namespace crown

#endif
