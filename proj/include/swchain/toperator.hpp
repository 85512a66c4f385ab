#pragma once

#include "swchain/common.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace swchain {

// (pi, f) over base set [mu]. Vectors are 1-based; index 0 is unused.
// comp[x] labels the eligibility clique of base element x: {x, y} is an
// eligible reversal iff x != y and comp[x] == comp[y].
struct TrailState {
    std::vector<int> comp;
    std::vector<int> pi;
    std::vector<char> red;  // red[k] is the colour of position k+ (1 <= k < mu)

    int mu() const { return static_cast<int>(pi.size()) - 1; }
    bool eligible(int p, int q) const { return p != q && comp[pi[p]] == comp[pi[q]]; }
    bool all_green() const;
    bool operator==(const TrailState& o) const { return pi == o.pi && red == o.red && comp == o.comp; }
};

// Closed trail v_1..v_mu (given 0-based); eligible pairs are equal
// vertices at equal parity. pi = identity, all green.
TrailState trail_state(const std::vector<int>& trail);

// Generic state from explicit eligible pairs; throws InvariantViolation
// unless the components are cliques.
TrailState state_from_reversals(int mu, const std::vector<std::pair<int, int>>& eligible);

std::vector<std::pair<int, int>> eligible_reversals(const std::vector<int>& trail);

int a_of(const TrailState& ts, int k);
int b_of(const TrailState& ts, int k);

struct StepInfo {
    bool fixed = true;
    int i = 0, j = 0, a = 0, b = 0;
};

StepInfo step_info(const TrailState& ts);
TrailState t_step(const TrailState& ts, StepInfo* info = nullptr);
TrailState greenify(TrailState ts);
// Iterates T until a fixed point; throws NonTermination past mu^2 steps.
TrailState t_fixpoint(TrailState ts);

struct RoundtripWitness {
    int w = 0;
    std::vector<char> g;
};

RoundtripWitness roundtrip(const TrailState& ts0, int r);

// Vertex sequence read through pi: out[k] = base[pi[k]] (1-based).
std::vector<int> vertices_through(const TrailState& ts, const std::vector<int>& base);

struct PrimitiveCircuit {
    std::vector<int> vertices;   // x_1..x_2l, closed cyclically
    std::vector<int> positions;  // trail position x of each edge v_x v_{x+1}
    int k = 0;
    int r = 0;

    int ell() const { return static_cast<int>(vertices.size()) / 2; }
    std::vector<Edge> edges() const;
};

struct PrimitiveDecomposition {
    std::vector<int> base;            // 1-based trail vertices
    std::vector<TrailState> states;   // (pi_r, f_r), r = 0..l
    std::vector<StepInfo> steps;      // step r -> r+1
    std::vector<PrimitiveCircuit> circuits;

    int rounds() const { return static_cast<int>(circuits.size()); }
};

PrimitiveDecomposition primitive_decompose(const std::vector<int>& trail, int k = 1);

bool is_primitive(const std::vector<int>& cyclic_vertices);

std::vector<nlohmann::ordered_json> trace_lines(const PrimitiveDecomposition& pd);

}  // namespace swchain
