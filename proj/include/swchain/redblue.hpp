#pragma once

#include "swchain/graph.hpp"

#include <map>
#include <vector>

namespace swchain {

struct RedBlueGraph {
    ChordModelPtr model;
    std::vector<Edge> red;   // sorted
    std::vector<Edge> blue;  // sorted

    bool empty() const { return red.empty() && blue.empty(); }
    bool is_red(const Edge& e) const;
    bool contains(const Edge& e) const;
    std::vector<Edge> all_edges() const;  // sorted union
    bool balanced() const;
};

// At each vertex w, pairs (red edge, blue edge) of a perfect matching of
// [F(w), F'(w)]. Pairs are kept sorted by the red edge.
struct MatchingParameter {
    std::map<int, std::vector<std::pair<Edge, Edge>>> at;

    bool operator==(const MatchingParameter& o) const { return at == o.at; }
    bool operator<(const MatchingParameter& o) const { return at < o.at; }
};

struct Circuit {
    std::vector<Edge> edges;  // traversal order
    std::vector<int> trail;   // closed vertex sequence, trail.size() == edges.size() + 1
};

struct CircuitDecomposition {
    std::vector<Circuit> circuits;  // ordered by smallest edge
};

BigInt count_matchings(const RedBlueGraph& rb);

// The s with index `idx` in mixed radix over vertices (ascending) with a
// permutation index per vertex. Indices run over [0, count_matchings).
MatchingParameter matching_from_index(const RedBlueGraph& rb, BigInt idx);
std::vector<MatchingParameter> enumerate_matchings(const RedBlueGraph& rb);

CircuitDecomposition decompose(const RedBlueGraph& rb, const MatchingParameter& s);

// Matching induced by the consecutive edge pairs of closed trails.
MatchingParameter induced_matching(const RedBlueGraph& rb, const std::vector<Circuit>& circuits);

// Orders a closed edge cycle from its smallest edge (v1 < v2), heading to v2.
std::vector<int> trail_of(const std::vector<Edge>& cycle_edges);

nlohmann::ordered_json to_json(const CircuitDecomposition& cd);

}  // namespace swchain
