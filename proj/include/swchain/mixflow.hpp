#pragma once

#include "swchain/chain.hpp"
#include "swchain/degseq.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace swchain {

struct MarkovGraph {
    DegreeSequence d;
    std::vector<Realization> states;  // sorted
    std::vector<std::vector<std::pair<int, Rational>>> out;  // off-diagonal entries by target
    std::vector<Rational> stay;

    std::size_t size() const { return states.size(); }
    int index_of(const Realization& g) const;  // -1 when absent
    Rational p(int a, int b) const;
    Eigen::MatrixXd dense() const;
    bool connected() const;
};

// Asserts symmetry, stochastic rows, laziness and connectivity.
MarkovGraph build_markov_graph(const DegreeSequence& d, std::size_t cap);

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double lambda2 = 0;
    double tau_rel = 1;
    double residual = 0;
};

Spectrum spectral(const MarkovGraph& mg);

// Total variation distance of row x of P^t from uniform.
double tv_distance(const MarkovGraph& mg, int x, std::uint64_t t);
// Max over all starting states.
double max_tv_distance(const MarkovGraph& mg, std::uint64_t t);

// t = ceil(tau_rel * log(N / eps)) and the worst distance reached there.
struct MixingCheck {
    double eps = 0;
    std::uint64_t t = 0;
    double distance = 0;
    bool holds = false;
};

MixingCheck mixing_check(const MarkovGraph& mg, const Spectrum& sp, double eps);

struct FlowReport {
    std::size_t N = 0;
    double lambda2 = 0;
    double tau_rel = 1;
    Rational kappa = 0;
    std::size_t paths = 0;
    std::size_t max_path_length = 0;
    bool path_lengths_ok = true;  // |path| <= |X xor Y| / 2
    bool steps_adjacent = true;   // consecutive states one kernel move apart
    // Per state: sum over (X, Y) of the fraction of s whose path visits it.
    std::vector<Rational> state_load;
    Rational max_state_load = 0;
    // Edge attaining kappa, as state indices.
    int witness_from = -1;
    int witness_to = -1;
    Rational witness_load = 0;  // sum of pi(X) pi(Y) pi_XY(path) |path| through it
    // max over path points of |S(nabla & Z', nabla \ Z')| / |S_XY|.
    Rational max_matching_growth = 0;
    bool matching_growth_ok = true;  // <= n^4
    bool holds = false;              // tau_rel <= kappa

    nlohmann::ordered_json to_json() const;
};

FlowReport congestion(const DegreeSequence& d, std::size_t cap, unsigned threads = 1);
FlowReport congestion(const MarkovGraph& mg, const Spectrum& sp, unsigned threads = 1);

// Left: sum over (X, Y) of |{s : Z on the path}| / |S_XY|, X = Y included.
// Right: n^4 times the number of distinct (bundle, aux matrix) pairs met
// at Z.
struct CountingBound {
    Realization z;
    Rational left = 0;
    BigInt census = 0;
    BigInt right = 0;
    bool holds = false;
};

std::vector<CountingBound> counting_bound_check(const DegreeSequence& d, std::size_t cap);
CountingBound counting_bound_check(const DegreeSequence& d, const Realization& z, std::size_t cap);

}  // namespace swchain
