#pragma once

#include "swchain/graph.hpp"
#include "swchain/redblue.hpp"
#include "swchain/toperator.hpp"

#include <array>
#include <optional>
#include <vector>

namespace swchain {

// Circuit labelled x_1..x_2l from its cornerstone x_1 with x_1x_2 not in E(G).
struct OrientedCircuit {
    std::vector<int> x;  // 1-based, x[0] unused
    int k = 0;
    int r = 0;
    bool reversed = false;  // walked against the trail order
    int first_index = 0;    // index of x_1 in the primitive circuit's list

    int ell() const { return (static_cast<int>(x.size()) - 1) / 2; }
    int at(int i) const;  // cyclic, x_{2l+1} = x_1
    Edge pair(int i, int j) const { return make_edge(at(i), at(j)); }
    std::vector<Edge> edges() const;
};

OrientedCircuit choose_cornerstone(const Realization& g, const PrimitiveCircuit& c);

// Repair: shortest switch sequence used where the planned block is not a
// valid move sequence (see block_ok in the sweep).
enum class SweepLine { Switch, Switch1, Switch2, DoubleStepFirst, DoubleStepSecond, TripleSwitch, Repair };
const char* line_name(SweepLine l);

struct SweepStep {
    SweepLine line = SweepLine::Switch;
    SwitchMove move;
    Realization z;
    std::vector<Edge> r_set;
    std::vector<Edge> q_set;
    std::vector<Edge> h_set;  // first Double step only
    int start = 0;
    int end = 0;
    int t2 = 0;  // value of 2t when the step was taken
};

struct SweepTrace {
    OrientedCircuit circuit;
    Realization g;
    std::vector<int> L, M;
    std::vector<SweepStep> steps;

    const Realization& final_state() const { return steps.empty() ? g : steps.back().z; }
};

// sweep: UC and bipartite; directed_sweep: bipartite representation with
// triple-switches; run_sweep picks by model.
SweepTrace sweep(const Realization& g, const OrientedCircuit& c);
SweepTrace directed_sweep(const Realization& g, const OrientedCircuit& c);
SweepTrace run_sweep(const Realization& g, const OrientedCircuit& c);

// window = x_{2t-2}, x_{2t-1}, x_{2t}, x_{2t+1}, x_{2t+2}
SwitchMove double_step_move(const Realization& z, int x1, const std::array<int, 5>& window);
Realization double_step(const Realization& z, int x1, const std::array<int, 5>& window);

// ---- canonical paths and the reconstruction pair ----

// sigma: assembly data for pi_{Z'}. form 0 = single trail, 1 = two
// flipped intervals, 2 = wrapped form reflected on [i, j]. cuts holds
// (alpha, beta, gamma, delta) for form 1 and (i, alpha, beta, gamma,
// delta, j) for form 2. glue lists (component, reversed) in trail order
// starting with the component holding position 1, at edge `offset`.
struct Sigma {
    int form = 0;
    std::vector<int> cuts;
    std::vector<std::pair<int, bool>> glue;
    int offset = 0;
    int k = 1;  // circuit index, 1-based
    int r = 0;  // base round of pi

    bool direction() const { return !glue.empty() && glue.front().second; }
    auto operator<=>(const Sigma&) const = default;
};

struct ParamBundle {
    int x1 = -1;
    Sigma sigma;
    std::vector<Edge> R;
    int w = 0;

    auto operator<=>(const ParamBundle&) const = default;
};

struct PathPoint {
    Realization z;
    int k = 1, r = 0, q = 0;
    std::optional<SweepLine> line;  // empty for X and milestones reached by no step
    bool milestone = false;
    std::vector<Edge> R;
    Realization z_prime;
    ParamBundle bundle;
    MatchingParameter s_z;  // pairs (edge in Z', edge not in Z')
    std::vector<Edge> circuit_edges;  // E(C) of the sweep producing z
    int cornerstone = -1;
};

struct CanonicalPath {
    std::vector<PathPoint> points;  // X first and Y last; empty when X == Y
    std::vector<SweepTrace> sweeps;
    CircuitDecomposition circuits;
    std::vector<PrimitiveDecomposition> primitive;

    std::size_t length() const { return points.empty() ? 0 : points.size() - 1; }
};

CanonicalPath canonical_path(const Realization& x, const Realization& y, const MatchingParameter& s);

ParamBundle bundle(const Realization& x, const Realization& y, const Realization& z, const MatchingParameter& s);
MatchingParameter s_of(const Realization& x, const Realization& y, const Realization& z, const MatchingParameter& s);

struct Reconstructed {
    Realization x, y;
    MatchingParameter s;
};

Reconstructed reconstruct(const Realization& z, const AuxMatrix& m, const ParamBundle& b, const MatchingParameter& s_z);

// ---- auxiliary matrix analysis ----

struct BadEntries {
    std::vector<Edge> twos;       // entries equal to 2
    std::vector<Edge> minus_ones; // entries equal to -1
    bool in_range = true;         // all entries in {-1, 0, 1, 2}
};

BadEntries bad_entries(const AuxMatrix& m);

// Removes the +2 entries of the cornerstone row of the submatrix induced
// by `vertices` (cornerstone first) with matrix switches (x1, i; l, j)
// on chords. switches is -1 if no sequence of at most two switches leaves
// a 0-1 matrix up to one symmetric pair of -1 entries.
struct Elimination {
    int switches = -1;
    Eigen::MatrixXi result;
};

Elimination eliminate_twos(const AuxMatrix& m, const ChordModel& cm, const std::vector<int>& vertices);

// Bad-entry audit of one path point.
struct AuxAudit {
    bool in_range = true;        // entries in {-1, 0, 1, 2}
    bool bad_on_r = true;        // every bad entry sits on a chord of R
    bool switch_case = false;    // produced by a switch, special switch or second Double step
    bool r_shape = true;         // switch case: |R| <= 3 and every chord of R contains x1
    bool counts_ok = true;       // switch case: <= 2 entries of 2 and <= 1 entry of -1
    bool r_cover_ok = true;      // R covers <= 5 vertices besides x1 (3 when bipartite)
    bool elimination_ok = true;  // switch case: the 2 entries can be removed
    int twos = 0;
    int minus_ones = 0;
    int elimination_switches = 0;

    bool ok() const { return in_range && bad_on_r && r_shape && counts_ok && r_cover_ok && elimination_ok; }
};

AuxAudit audit_point(const Realization& x, const Realization& y, const PathPoint& p);

}  // namespace swchain
