#pragma once

#include "swchain/graph.hpp"
#include "swchain/sequence.hpp"

#include <cstddef>
#include <vector>

namespace swchain {

// Sequence shifted by +-1 at two labels of the chord model.
struct Perturbation {
    DegreeSequence base;
    int x = 0;
    int y = 0;
    int sign = +1;

    DegreeSequence apply() const;
};

bool is_graphical(const DegreeSequence& d);

Realization initial_realization(const DegreeSequence& d);

// All realizations, sorted by edge list. Throws CapExceeded past `cap`.
std::vector<Realization> enumerate_realizations(const DegreeSequence& d, std::size_t cap);
std::size_t count_realizations(const DegreeSequence& d, std::size_t cap);

// UC: distinct pairs; bipartite: one label per class; directed: an out
// slot and an in slot of distinct vertices. Sequences with a negative
// entry are skipped.
std::vector<Perturbation> perturbations(const DegreeSequence& d, int sign = +1);

// |G(d) u union G(d + 1x + 1y)| / |G(d)|, union counted as a sum.
Rational stability_ratio(const DegreeSequence& d, std::size_t cap);

}  // namespace swchain

namespace swchain {

// Graphical sequences up to relabeling (entries non-increasing; directed
// pairs sorted), zero degrees included.
std::vector<DegreeSequence> graphical_sequences_uc(int n);
std::vector<DegreeSequence> graphical_sequences_bipartite(int n1, int n2);
std::vector<DegreeSequence> graphical_sequences_directed(int n);

}  // namespace swchain
