#include "swchain/stability.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

namespace swchain {

namespace {

std::string big_text(const BigInt& v) { return v.str(); }

struct Shape {
    BigInt n, m;
    BigInt max, min;
};

Shape shape_of(const std::vector<int>& d, const BigInt& m)
{
    Shape s;
    s.n = static_cast<long>(d.size());
    s.m = m;
    s.max = d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    s.min = d.empty() ? 0 : *std::min_element(d.begin(), d.end());
    return s;
}

BigInt sum_of(const std::vector<int>& d) { return std::accumulate(d.begin(), d.end(), 0L); }

}  // namespace

const std::vector<std::string>& region_ids()
{
    static const std::vector<std::string> ids = {"gs",      "jms",      "jms+",     "bip-root", "bip-max",
                                                 "bip-ak",  "bip-4min", "dir-root", "dir-lin",  "dir-max"};
    return ids;
}

bool region_applies(const std::string& region, Model m)
{
    if (region == "gs" || region == "jms" || region == "jms+") return m == Model::UC;
    if (region.rfind("bip-", 0) == 0) return m == Model::Bipartite;
    if (region.rfind("dir-", 0) == 0) return m == Model::Directed;
    return false;
}

RegionVerdict region_check(const DegreeSequence& d, const std::string& region)
{
    if (std::find(region_ids().begin(), region_ids().end(), region) == region_ids().end())
        throw PreconditionViolation("unknown region " + region);
    if (!region_applies(region, d.model))
        throw ModelMismatch("region " + region + " does not apply to " + model_name(d.model) + " sequences");
    RegionVerdict v;
    v.region = region;
    auto term = [&](const std::string& name, const BigInt& value) {
        v.terms.emplace_back(name, value);
        return value;
    };
    auto compare = [&](const BigInt& lhs, const BigInt& rhs) {
        term("lhs", lhs);
        term("rhs", rhs);
        v.equality = lhs == rhs;
        return lhs <= rhs;
    };

    if (d.model == Model::UC) {
        Shape s = shape_of(d.first, sum_of(d.first) / 2);
        const BigInt n = term("n", s.n), m = term("m", s.m), D = term("Delta", s.max), dl = term("delta", s.min);
        if (region == "gs") {
            // 3 <= Delta <= sqrt(2m) / 3
            v.member = dl >= 1 && D >= 3 && compare(9 * D * D, 2 * m);
        } else if (region == "jms") {
            const BigInt diff = D - dl + 1;
            v.member = compare(diff * diff, 4 * dl * (n - D - 1));
        } else {
            const BigInt a = 2 * m - n * dl, b = n * D - 2 * m;
            v.member = compare(a * b, (D - dl) * (a * (n - D - 1) + b * dl));
        }
        return v;
    }

    if (d.model == Model::Bipartite) {
        Shape u = shape_of(d.first, sum_of(d.first)), w = shape_of(d.second, sum_of(d.second));
        const BigInt nu = term("|U|", u.n), nv = term("|V|", w.n), m = term("m", u.m);
        const BigInt DU = term("Delta_U", u.max), dU = term("delta_U", u.min);
        const BigInt DV = term("Delta_V", w.max), dV = term("delta_V", w.min);
        if (region == "bip-root") {
            const BigInt D = term("Delta", std::max(DU, DV));
            v.member = D >= 2 && compare(2 * D * D, m);
        } else if (region == "bip-max") {
            v.member = compare((DU - dU - 1) * (DV - dV - 1), std::max(dU * (nu - DV + 1), dV * (nv - DU + 1)));
        } else if (region == "bip-ak") {
            const BigInt l1 = term("lhs_U", (DU - dV) * (DU - dV)), r1 = term("rhs_U", 4 * dV * (nv - DU));
            const BigInt l2 = term("lhs_V", (DV - dU) * (DV - dU)), r2 = term("rhs_V", 4 * dU * (nu - DV));
            v.equality = l1 == r1 || l2 == r2;
            v.member = l1 <= r1 && l2 <= r2;
        } else {
            v.member = compare((DU - dU) * (DV - dV), 4 * std::min(dU * (nu - DV), dV * (nv - DU)));
        }
        return v;
    }

    Shape o = shape_of(d.first, sum_of(d.first)), i = shape_of(d.second, sum_of(d.second));
    const BigInt n = term("n", o.n), m = term("m", o.m);
    const BigInt Do = term("Delta_out", o.max), dO = term("delta_out", o.min);
    const BigInt Di = term("Delta_in", i.max), dI = term("delta_in", i.min);
    const BigInt D = std::max(Do, Di);
    if (region == "dir-root") {
        v.member = D >= 2 && compare(16 * D * D, m);
    } else if (region == "dir-lin") {
        // strict: Delta < sqrt(m - 4) / sqrt(2)
        term("lhs", 2 * D * D);
        term("rhs", m - 4);
        v.equality = 2 * D * D == m - 4;
        v.member = D >= 2 && 2 * D * D < m - 4;
    } else {
        v.member = compare((Do - dO) * (Di - dI),
                           2 - n + std::max(dO * (n - Di - 1) + dI + Do, dI * (n - Do - 1) + dO + Di));
    }
    return v;
}

nlohmann::ordered_json RegionVerdict::to_json() const
{
    nlohmann::ordered_json j;
    j["region"] = region;
    j["member"] = member;
    j["equality"] = equality;
    nlohmann::ordered_json t;
    for (auto& [k, val] : terms) t[k] = big_text(val);
    for (auto& [k, val] : real_terms) t[k] = val;
    j["terms"] = t;
    if (witness) j["witness"] = *witness;
    return j;
}

RegionVerdict power_law_check(const DegreeSequence& d, double gamma, double k)
{
    if (d.model != Model::UC) throw ModelMismatch("power-law bound applies to UC sequences");
    if (!(gamma > 1) || !(k > 0)) throw PreconditionViolation("power-law check needs gamma > 1 and K > 0");
    RegionVerdict v;
    v.region = "powerlaw";
    const double n = static_cast<double>(d.first.size());
    const int top = d.first.empty() ? 0 : *std::max_element(d.first.begin(), d.first.end());
    const double gate = 1 + std::sqrt(3.0);
    v.real_terms = {{"gamma", gamma}, {"K", k}, {"gate", gate}};
    bool bounded = true;
    // Tail sum_{j >= i} j^-gamma = zeta(gamma) - sum_{j < i} j^-gamma.
    double tail = boost::math::zeta(gamma);
    for (int i = 1; i <= top; ++i) {
        if (i > 1) tail -= std::pow(static_cast<double>(i - 1), -gamma);
        long count = std::count_if(d.first.begin(), d.first.end(), [&](int x) { return x >= i; });
        if (static_cast<double>(count) > k * n * tail) {
            bounded = false;
            v.witness = i;
            v.terms.emplace_back("count_at_witness", BigInt(count));
            v.real_terms.emplace_back("bound_at_witness", k * n * tail);
            break;
        }
    }
    v.real_terms.emplace_back("distribution_bounded", bounded ? 1.0 : 0.0);
    v.real_terms.emplace_back("gate_passed", gamma > gate ? 1.0 : 0.0);
    v.member = bounded && gamma > gate;
    return v;
}

ErReport er_corollary_check(int n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads)
{
    ErReport r;
    r.n = n;
    r.p = p;
    r.trials = trials;
    r.threshold = 5 * std::log(static_cast<double>(n)) / (n - 1);
    r.bound = 1 - 3.0 / n;
    if (n < 100) throw PreconditionViolation("n = " + std::to_string(n) + " is below 100");
    if (p < r.threshold)
        throw PreconditionViolation("p = " + std::to_string(p) + " is below 5 log n / (n - 1) = " +
                                    std::to_string(r.threshold));
    if (1 - p < r.threshold)
        throw PreconditionViolation("1 - p = " + std::to_string(1 - p) + " is below 5 log n / (n - 1) = " +
                                    std::to_string(r.threshold));
    threads = std::max(1u, threads);
    std::vector<std::uint64_t> hits(threads, 0);
    auto work = [&](unsigned t) {
        std::vector<int> deg(n);
        for (std::uint64_t i = t; i < trials; i += threads) {
            std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                             static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
            std::mt19937_64 rng(ss);
            std::bernoulli_distribution coin(p);
            std::fill(deg.begin(), deg.end(), 0);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (coin(rng)) {
                        ++deg[a];
                        ++deg[b];
                    }
            if (region_check(DegreeSequence::uc(deg), "jms+").member) ++hits[t];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    r.members = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
    if (trials) {
        const double nn = static_cast<double>(trials);
        const double f = static_cast<double>(r.members) / nn;
        const double z = boost::math::quantile(boost::math::normal(), 0.975);
        const double den = 1 + z * z / nn;
        const double mid = (f + z * z / (2 * nn)) / den;
        const double half = z * std::sqrt(f * (1 - f) / nn + z * z / (4 * nn * nn)) / den;
        r.frequency = f;
        // The interval contains f; clamp rounding at the ends.
        r.ci_low = std::clamp(mid - half, 0.0, f);
        r.ci_high = std::clamp(mid + half, f, 1.0);
    }
    return r;
}

nlohmann::ordered_json ErReport::to_json() const
{
    return {{"n", n},         {"p", p},           {"trials", trials},       {"members", members},
            {"frequency", frequency}, {"ci_low", ci_low}, {"ci_high", ci_high}, {"threshold", threshold},
            {"bound", bound}};
}

StrongStability strong_stability_check(const DegreeSequence& d, long ell, std::size_t cap, int direction)
{
    if (!is_graphical(d)) throw NotGraphical(d.to_text() + " is not graphical");
    StrongStability st;
    st.ell = ell;
    const auto base = enumerate_realizations(d, cap);
    std::vector<DegreeSequence> targets;
    for (auto& p : perturbations(d, direction)) targets.push_back(p.apply());
    if (d.model == Model::UC)
        for (int x = 0; x < d.n1(); ++x) {
            DegreeSequence s = d;
            s.first[x] += 2 * direction;
            if (s.first[x] >= 0) targets.push_back(s);
        }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (auto& s : targets) {
        if (!is_graphical(s)) continue;
        for (auto& g2 : enumerate_realizations(s, cap)) {
            ++st.perturbed;
            long best = -1;
            for (auto& g : base) {
                std::vector<Edge> diff;
                std::set_symmetric_difference(g.edges().begin(), g.edges().end(), g2.edges().begin(),
                                              g2.edges().end(), std::back_inserter(diff));
                long dist = static_cast<long>(diff.size());
                if (best < 0 || dist < best) best = dist;
            }
            st.max_distance = std::max(st.max_distance, best);
        }
    }
    st.stable = st.max_distance <= 2 * ell;
    return st;
}

nlohmann::ordered_json StrongStability::to_json() const
{
    return {{"ell", ell}, {"max_distance", max_distance}, {"perturbed_realizations", perturbed}, {"stable", stable}};
}

}  // namespace swchain
