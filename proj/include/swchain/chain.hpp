#pragma once

#include "swchain/degseq.hpp"
#include "swchain/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace swchain {

// Per-move probabilities of the switch chain for one chord model. A zero
// entry means that kind of proposal cannot be made (too few class members).
struct KernelSpec {
    ChordModelPtr model;
    Rational switch_move;  // any single switch
    Rational triple_move;  // directed triple-switch, zero otherwise

    static KernelSpec for_model(ChordModelPtr model);
};

// One row of the transition matrix: targets other than the source with
// their exact probabilities, and the holding probability.
struct TransitionRow {
    std::vector<std::pair<Realization, Rational>> moves;
    Rational stay;
};

TransitionRow transitions(const KernelSpec& k, const Realization& g);

struct WalkState {
    Realization current;
    std::mt19937_64 rng;
    std::uint64_t steps = 0;
};

// The proposal drawn in one step, before validity is checked.
std::optional<SwitchMove> propose(const KernelSpec& k, std::mt19937_64& rng);

void step(const KernelSpec& k, WalkState& ws);

Realization run_walk(const DegreeSequence& d, std::uint64_t steps, std::uint64_t seed);

struct Histogram {
    std::map<Realization, std::uint64_t> counts;
    std::uint64_t samples = 0;
    // Filled when the exact space was supplied.
    std::optional<double> chi_square;
    std::optional<double> p_value;
    std::size_t states = 0;
};

// `samples` independent walks of `steps` steps each; walk i is seeded from
// (seed, i). With `exact`, missing states count as zero bins.
Histogram empirical_distribution(const DegreeSequence& d, std::uint64_t steps, std::uint64_t samples,
                                 std::uint64_t seed, const std::vector<Realization>* exact = nullptr,
                                 unsigned threads = 1);

}  // namespace swchain
