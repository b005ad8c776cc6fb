#pragma once

// Breadth-first exploration of exchange-collection mutations.

#include <optional>
#include <string>
#include <vector>

#include "mutpot/mutation.hpp"

namespace mutpot {

/// Exact canonical encoding of (omega, V), used for deduplication.
std::string canonical_encoding(const SkewForm& omega, const ExchangeCollection& v);

struct OrbitNode {
    ExchangeCollection collection;
    std::optional<BinomialRationalFn> potential;  // only with potentials enabled
    std::size_t depth = 0;
};

struct OrbitEdge {
    std::size_t from = 0;
    LatticeVector direction;
    std::size_t to = 0;
};

struct OrbitGraph {
    SkewForm form;
    std::vector<OrbitNode> nodes;
    std::vector<OrbitEdge> edges;
    std::size_t depth_reached = 0;
    /// Some node at the depth bound has a successor that was never visited.
    bool truncated = false;
};

/// Nodes are numbered in discovery order; successors follow the sorted
/// distinct directions of each collection. With potentials, nodes are
/// deduplicated by collection encoding and potential equality.
OrbitGraph explore_orbit(const VSeed& seed, std::size_t depth, bool with_potential = false);

std::string to_dot(const OrbitGraph& g);

}  // namespace mutpot
