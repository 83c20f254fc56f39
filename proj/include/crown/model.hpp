#ifndef CROWN_MODEL_HPP
#define CROWN_MODEL_HPP

#include "crown/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crown {

/// Error with a machine-readable kind ("parse-error", "not-a-tree", ...).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct BoxDim {
    long long width = 1;
    long long height = 1;

    bool operator==(const BoxDim&) const = default;
};

enum class ContactModel { Proper, Point };

enum class GraphClass { Path, Cycle, Star, Tree, Outerplanar, Planar, Bipartite, General };

std::string graphClassName(GraphClass c);
std::optional<GraphClass> graphClassFromName(const std::string& name);

struct InstanceEdge {
    std::string u, v;
    Rat profit;
};

using Embedding = std::map<std::string, std::vector<std::string>>;

struct Instance {
    ContactModel model = ContactModel::Proper;
    std::vector<std::pair<std::string, BoxDim>> vertices;
    std::vector<InstanceEdge> edges;
    std::optional<Embedding> embedding;
    std::optional<GraphClass> classHint;

    bool hasVertex(const std::string& id) const;
    const BoxDim& dim(const std::string& id) const;
    /// Rejects duplicate ids, dangling/duplicate/self-loop edges, negative
    /// profits, non-positive dims and asymmetric embeddings.
    void checkInvariants() const;
};

struct Layout {
    std::map<std::string, std::pair<Rat, Rat>> placements;  // lower-left corners
};

enum class ContactKind { None, Proper, Point };

struct PlacedBox {
    Rat x, y;
    BoxDim dim;
    Rat right() const { return x + ratFromInt(dim.width); }
    Rat top() const { return y + ratFromInt(dim.height); }
};

/// Geometric classification of the boundary intersection of two
/// interior-disjoint boxes. Throws Error("overlap-error") on overlap.
ContactKind contact(const PlacedBox& a, const PlacedBox& b);

/// True when a contact of the given kind earns profit under the model.
inline bool contactCounts(ContactKind k, ContactModel m) {
    if (k == ContactKind::Proper) return true;
    return k == ContactKind::Point && m == ContactModel::Point;
}

struct Violation {
    std::string kind;  // "overlap" | "unplaced"
    std::string a, b;  // offending vertex id(s); b empty for "unplaced"
    std::string witness;
};

/// Reports every overlapping pair (with an interior witness point) and
/// every unplaced vertex. Empty result means the layout is valid.
std::vector<Violation> validate(const Instance& instance, const Layout& layout);

struct Evaluation {
    std::vector<std::pair<std::string, std::string>> realizedEdges;
    Rat profit;
};

/// Realized edge set and profit; throws Error("validation-error") when the
/// layout is invalid for the instance.
Evaluation evaluate(const Instance& instance, const Layout& layout);

struct Certificate {
    enum class Kind { Exact, Ratio, Incumbent };
    Kind kind = Kind::Exact;
    Rat ratio;  // meaningful for Kind::Ratio only

    static Certificate exact() { return {Kind::Exact, Rat(1)}; }
    static Certificate incumbent() { return {Kind::Incumbent, Rat(1)}; }
    static Certificate approx(Rat r) { return {Kind::Ratio, std::move(r)}; }
    /// Worst-case guarantee as a number (1 for exact solutions).
    Rat bound() const { return kind == Kind::Ratio ? ratio : Rat(1); }
    std::string str() const;
};

struct SolveReport {
    Layout layout;
    std::vector<std::pair<std::string, std::string>> realizedEdges;
    Rat profit;
    Certificate certifiedRatio;
    std::string algorithm;
    std::optional<long long> seed;
};

/// Recomputes realizedEdges/profit of a report from its layout.
void reevaluate(const Instance& instance, SolveReport& report);

}  // namespace crown

#endif
