#pragma once

#include "swchain/degseq.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace swchain {

struct RegionVerdict {
    std::string region;
    bool member = false;
    bool equality = false;  // the defining inequality holds with equality
    std::vector<std::pair<std::string, BigInt>> terms;
    std::vector<std::pair<std::string, double>> real_terms;
    std::optional<long> witness;  // first failing index, where one exists

    nlohmann::ordered_json to_json() const;
};

// gs, jms, jms+ (UC); bip-root, bip-max, bip-ak, bip-4min (bipartite);
// dir-root, dir-lin, dir-max (directed).
const std::vector<std::string>& region_ids();
bool region_applies(const std::string& region, Model m);
RegionVerdict region_check(const DegreeSequence& d, const std::string& region);

// Distribution bound: #{v : d(v) >= i} <= K n sum_{j >= i} j^-gamma for every
// i >= 1, together with the gate gamma > 1 + sqrt(3).
RegionVerdict power_law_check(const DegreeSequence& d, double gamma, double k);

struct ErReport {
    int n = 0;
    double p = 0;
    std::uint64_t trials = 0;
    std::uint64_t members = 0;
    double frequency = 0;
    double ci_low = 0, ci_high = 0;  // Wilson interval, 95%
    double threshold = 0;            // 5 log n / (n - 1)
    double bound = 0;                // 1 - 3 / n

    nlohmann::ordered_json to_json() const;
};

ErReport er_corollary_check(int n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

struct StrongStability {
    long ell = 0;
    long max_distance = 0;  // max over G' of min over G of |E(G') xor E(G)|
    std::size_t perturbed = 0;  // realizations G' examined
    bool stable = true;

    nlohmann::ordered_json to_json() const;
};

// direction -1 perturbs to d - 1x - 1y (x = y allowed for UC), +1 to d + 1x + 1y.
StrongStability strong_stability_check(const DegreeSequence& d, long ell, std::size_t cap, int direction = -1);

}  // namespace swchain
