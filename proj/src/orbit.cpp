#include "mutpot/orbit.hpp"

#include <map>

namespace mutpot {

std::string canonical_encoding(const SkewForm& omega, const ExchangeCollection& v) {
    return omega.str() + "|" + v.str();
}

namespace {

class NodeIndex {
public:
    explicit NodeIndex(OrbitGraph& g, bool with_potential) : g_(g), with_potential_(with_potential) {}

    std::optional<std::size_t> find(const ExchangeCollection& v, const std::optional<BinomialRationalFn>& w) const {
        auto it = buckets_.find(canonical_encoding(g_.form, v));
        if (it == buckets_.end()) return std::nullopt;
        for (std::size_t id : it->second) {
            if (!with_potential_ || g_.nodes[id].potential == w) return id;
        }
        return std::nullopt;
    }

    std::size_t insert(OrbitNode node) {
        const std::size_t id = g_.nodes.size();
        buckets_[canonical_encoding(g_.form, node.collection)].push_back(id);
        g_.nodes.push_back(std::move(node));
        return id;
    }

private:
    OrbitGraph& g_;
    bool with_potential_;
    std::map<std::string, std::vector<std::size_t>> buckets_;
};

}  // namespace

OrbitGraph explore_orbit(const VSeed& seed, std::size_t depth, bool with_potential) {
    OrbitGraph g{seed.form, {}, {}, 0, false};
    NodeIndex index(g, with_potential);
    std::optional<BinomialRationalFn> w0;
    if (with_potential) w0 = seed.potential;
    std::vector<std::size_t> frontier{index.insert({seed.collection, w0, 0})};

    auto successor = [&](std::size_t id, const LatticeVector& d) {
        const OrbitNode& n = g.nodes[id];
        OrbitNode next{collection_mutate(n.collection, d, g.form), std::nullopt, n.depth + 1};
        if (with_potential) next.potential = potential_mutate(*n.potential, d, g.form);
        return next;
    };

    for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<std::size_t> next_frontier;
        for (std::size_t id : frontier) {
            const auto dirs = g.nodes[id].collection.multiplicities();
            for (const auto& [d, m] : dirs) {
                OrbitNode next = successor(id, d);
                std::size_t to;
                if (auto seen = index.find(next.collection, next.potential)) {
                    to = *seen;
                } else {
                    to = index.insert(std::move(next));
                    next_frontier.push_back(to);
                }
                g.edges.push_back({id, d, to});
            }
        }
        g.depth_reached = level + 1;
        frontier = std::move(next_frontier);
    }
    for (std::size_t id : frontier) {
        for (const auto& [d, m] : g.nodes[id].collection.multiplicities()) {
            OrbitNode next = successor(id, d);
            if (!index.find(next.collection, next.potential)) {
                g.truncated = true;
                return g;
            }
        }
    }
    return g;
}

std::string to_dot(const OrbitGraph& g) {
    std::string out = "digraph orbit {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" + g.nodes[i].collection.str() + "\"];\n";
    }
    for (const auto& e : g.edges) {
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" + e.direction.str() +
               "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace mutpot
