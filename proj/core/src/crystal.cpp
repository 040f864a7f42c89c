#include "cfock/crystal.hpp"

#include <stdexcept>
#include <tuple>

namespace cfock {

namespace {

// survivors split into leading '1's and trailing '0's
struct Survivors {
    std::vector<Corner> ones;
    std::vector<Corner> zeros;
};

Survivors surviving_corners(const Diagram& y, int i) {
    const Signature sig = i_signature(y, i);
    Survivors out;
    for (int index : reduce_signature(sig.word)) {
        const Corner& c = sig.sites[static_cast<std::size_t>(index) - 1];
        (sig.word[static_cast<std::size_t>(index) - 1] == '1' ? out.ones : out.zeros).push_back(c);
    }
    return out;
}

}  // namespace

std::optional<Corner> e_tilde_site(const Diagram& y, int i) {
    const auto surv = surviving_corners(y, i);
    if (surv.ones.empty()) return std::nullopt;
    return surv.ones.back();  // largest surviving index = smallest diagonal
}

std::optional<Corner> f_tilde_site(const Diagram& y, int i) {
    const auto surv = surviving_corners(y, i);
    if (surv.zeros.empty()) return std::nullopt;
    return surv.zeros.front();  // smallest surviving index = largest diagonal
}

std::optional<Diagram> e_tilde(const Diagram& y, int i) {
    const auto site = e_tilde_site(y, i);
    if (!site) return std::nullopt;
    return remove_box(y, static_cast<std::size_t>(site->column) - 1);
}

std::optional<Diagram> f_tilde(const Diagram& y, int i) {
    const auto site = f_tilde_site(y, i);
    if (!site) return std::nullopt;
    return add_box(y, static_cast<std::size_t>(site->column));
}

int epsilon(const Diagram& y, int i) {
    return static_cast<int>(surviving_corners(y, i).ones.size());
}

int phi(const Diagram& y, int i) {
    return static_cast<int>(surviving_corners(y, i).zeros.size());
}

CrystalGraph bfs_component(int n, int charge, int depth) {
    if (depth < 0) throw std::invalid_argument("bfs_component: depth must be >= 0");
    CrystalGraph g{n, charge, depth, {}, {}, {}};
    g.nodes.emplace_back(n, charge);
    g.level_start = {0, 1};

    std::size_t lo = 0, hi = 1;
    for (int level = 0; level < depth; ++level) {
        std::map<Diagram, std::size_t, CanonicalLess> fresh;
        std::vector<std::tuple<std::size_t, int, Diagram>> expansion;
        for (std::size_t src = lo; src < hi; ++src)
            for (int i = 0; i <= n; ++i)
                if (auto z = f_tilde(g.nodes[src], i)) {
                    fresh.emplace(*z, 0);
                    expansion.emplace_back(src, i, std::move(*z));
                }
        for (auto& [y, index] : fresh) {
            index = g.nodes.size();
            g.nodes.push_back(y);
        }
        // expansion is generated src-major, colour-minor: already edge order
        for (auto& [src, i, z] : expansion)
            g.edges.push_back(CrystalEdge{src, i, fresh.at(z)});
        g.level_start.push_back(g.nodes.size());
        lo = hi;
        hi = g.nodes.size();
    }
    return g;
}

std::map<WeightVector, long> multiplicity_table(const CrystalGraph& g) {
    std::map<WeightVector, long> table;
    for (const Diagram& y : g.nodes) ++table[weight_of(y)];
    return table;
}

std::vector<Diagram> highest_weight_elements(const CrystalGraph& g) {
    std::vector<Diagram> out;
    for (const Diagram& y : g.nodes) {
        bool highest = true;
        for (int i = 0; i <= g.n && highest; ++i)
            if (epsilon(y, i) != 0) highest = false;
        if (highest) out.push_back(y);
    }
    return out;
}

}  // namespace cfock
