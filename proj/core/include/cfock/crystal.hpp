#pragma once

#include "cfock/diagram.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace cfock {

// Kashiwara operators by the signature rule: reduce the i-signature and act
// at the surviving '1' of largest index for e (the smallest diagonal) or the
// surviving '0' of smallest index for f (the largest diagonal).  Nullopt
// when no survivor of the right letter exists.
std::optional<Diagram> e_tilde(const Diagram& y, int i);
std::optional<Diagram> f_tilde(const Diagram& y, int i);

// Corners the operators would act at, exposed for inspection tools.
std::optional<Corner> e_tilde_site(const Diagram& y, int i);
std::optional<Corner> f_tilde_site(const Diagram& y, int i);

// Crystal statistics: surviving '1' and '0' counts; epsilon is the e-string
// length and phi the f-string length through y.
int epsilon(const Diagram& y, int i);
int phi(const Diagram& y, int i);

struct CrystalEdge {
    std::size_t src;
    int colour;
    std::size_t dst;

    bool operator==(const CrystalEdge&) const = default;
};

// The f-closure of the vacuum diagram, one level per box count.  Nodes are
// indexed in canonical order (level, then lexicographically decreasing
// depths) with the vacuum at index 0; edges are sorted by (src, colour).
// level_start[m] is the index of the first level-m node, with a final
// sentinel equal to nodes.size().
struct CrystalGraph {
    int n;
    int charge;
    int depth;
    std::vector<Diagram> nodes;
    std::vector<CrystalEdge> edges;
    std::vector<std::size_t> level_start;

    const Diagram& root() const { return nodes.front(); }
    std::size_t level_size(int level) const {
        return level_start[level + 1] - level_start[level];
    }
};

CrystalGraph bfs_component(int n, int charge, int depth);

// Node count per weight_of value.
std::map<WeightVector, long> multiplicity_table(const CrystalGraph& g);

// Nodes with epsilon(y, i) = 0 for every i.
std::vector<Diagram> highest_weight_elements(const CrystalGraph& g);

}  // namespace cfock
