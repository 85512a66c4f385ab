#include "swchain/redblue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace swchain {

bool RedBlueGraph::is_red(const Edge& e) const { return std::binary_search(red.begin(), red.end(), e); }

bool RedBlueGraph::contains(const Edge& e) const
{
    return is_red(e) || std::binary_search(blue.begin(), blue.end(), e);
}

std::vector<Edge> RedBlueGraph::all_edges() const
{
    std::vector<Edge> out;
    std::merge(red.begin(), red.end(), blue.begin(), blue.end(), std::back_inserter(out));
    return out;
}

namespace {

struct Incidence {
    std::map<int, std::vector<Edge>> red, blue;
};

Incidence incidence(const RedBlueGraph& rb)
{
    Incidence inc;
    for (auto& e : rb.red) {
        inc.red[e.first].push_back(e);
        inc.red[e.second].push_back(e);
    }
    for (auto& e : rb.blue) {
        inc.blue[e.first].push_back(e);
        inc.blue[e.second].push_back(e);
    }
    return inc;
}

int other_end(const Edge& e, int v) { return e.first == v ? e.second : e.first; }

int shared_vertex(const Edge& a, const Edge& b)
{
    if (a.first == b.first || a.first == b.second) return a.first;
    if (a.second == b.first || a.second == b.second) return a.second;
    return -1;
}

}  // namespace

bool RedBlueGraph::balanced() const
{
    auto inc = incidence(*this);
    for (auto& [v, es] : inc.red)
        if (!inc.blue.count(v) || inc.blue.at(v).size() != es.size()) return false;
    for (auto& [v, es] : inc.blue)
        if (!inc.red.count(v)) return false;
    return true;
}

BigInt count_matchings(const RedBlueGraph& rb)
{
    if (!rb.balanced()) throw Unbalanced("red and blue degrees differ at some vertex");
    auto inc = incidence(rb);
    BigInt t = 1;
    for (auto& [v, es] : inc.red) t *= factorial(static_cast<long>(es.size()));
    return t;
}

MatchingParameter matching_from_index(const RedBlueGraph& rb, BigInt idx)
{
    if (!rb.balanced()) throw Unbalanced("red and blue degrees differ at some vertex");
    if (idx < 0 || idx >= count_matchings(rb)) throw InvalidMatching("matching index out of range");
    auto inc = incidence(rb);
    MatchingParameter s;
    for (auto& [v, reds] : inc.red) {
        const auto& blues = inc.blue.at(v);
        const long d = static_cast<long>(reds.size());
        BigInt radix = factorial(d);
        long digit = static_cast<long>(idx % radix);
        idx /= radix;
        // Lehmer-code unranking of `digit` into a permutation of d items.
        std::vector<int> pool(d);
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<std::pair<Edge, Edge>> pairs;
        for (long i = 0; i < d; ++i) {
            long f = static_cast<long>(factorial(d - 1 - i));
            long q = digit / f;
            digit %= f;
            pairs.push_back({reds[i], blues[pool[q]]});
            pool.erase(pool.begin() + q);
        }
        s.at[v] = std::move(pairs);
    }
    return s;
}

std::vector<MatchingParameter> enumerate_matchings(const RedBlueGraph& rb)
{
    BigInt t = count_matchings(rb);
    std::vector<MatchingParameter> out;
    for (BigInt i = 0; i < t; ++i) out.push_back(matching_from_index(rb, i));
    return out;
}

namespace {

// partner[(edge, vertex)] = edge paired with it at that vertex
using PartnerMap = std::map<std::pair<Edge, int>, Edge>;

PartnerMap partners(const RedBlueGraph& rb, const MatchingParameter& s)
{
    if (!rb.balanced()) throw Unbalanced("red and blue degrees differ at some vertex");
    auto inc = incidence(rb);
    PartnerMap pm;
    for (auto& [v, reds] : inc.red) {
        auto it = s.at.find(v);
        if (it == s.at.end()) throw InvalidMatching("no matching at vertex " + std::to_string(v));
        const auto& pairs = it->second;
        if (pairs.size() != reds.size())
            throw InvalidMatching("matching at vertex " + std::to_string(v) + " is not perfect");
        for (auto& [r, b] : pairs) {
            if (!rb.is_red(r) || (r.first != v && r.second != v))
                throw InvalidMatching("matching at vertex " + std::to_string(v) + " uses a foreign red edge");
            if (rb.is_red(b) || !rb.contains(b) || (b.first != v && b.second != v))
                throw InvalidMatching("matching at vertex " + std::to_string(v) + " uses a foreign blue edge");
            if (pm.count({r, v}) || pm.count({b, v}))
                throw InvalidMatching("matching at vertex " + std::to_string(v) + " repeats an edge");
            pm[{r, v}] = b;
            pm[{b, v}] = r;
        }
    }
    for (auto& [v, pairs] : s.at)
        if (!inc.red.count(v) && !pairs.empty())
            throw InvalidMatching("matching given at vertex " + std::to_string(v) + " outside the graph");
    return pm;
}

}  // namespace

CircuitDecomposition decompose(const RedBlueGraph& rb, const MatchingParameter& s)
{
    auto pm = partners(rb, s);
    CircuitDecomposition cd;
    std::set<Edge> seen;
    for (const Edge& e0 : rb.all_edges()) {
        if (seen.count(e0)) continue;
        Circuit c;
        Edge e = e0;
        int at = e0.second;
        c.trail.push_back(e0.first);
        while (true) {
            seen.insert(e);
            c.edges.push_back(e);
            c.trail.push_back(at);
            Edge nx = pm.at({e, at});
            if (nx == e0) break;
            at = other_end(nx, at);
            e = nx;
        }
        if (c.trail.back() != c.trail.front()) throw InternalInvariant("circuit did not close");
        cd.circuits.push_back(std::move(c));
    }
    return cd;
}

MatchingParameter induced_matching(const RedBlueGraph& rb, const std::vector<Circuit>& circuits)
{
    MatchingParameter s;
    for (const auto& c : circuits) {
        const std::size_t L = c.edges.size();
        for (std::size_t i = 0; i < L; ++i) {
            const Edge& a = c.edges[i];
            const Edge& b = c.edges[(i + 1) % L];
            int v = c.trail[i + 1];
            bool ar = rb.is_red(a), br = rb.is_red(b);
            if (ar == br) throw InvalidCircuit("circuit does not alternate at vertex " + std::to_string(v));
            s.at[v].push_back(ar ? std::pair{a, b} : std::pair{b, a});
        }
    }
    for (auto& [v, pairs] : s.at) std::sort(pairs.begin(), pairs.end());
    return s;
}

std::vector<int> trail_of(const std::vector<Edge>& cyc)
{
    const std::size_t L = cyc.size();
    if (L < 3) throw InvalidCircuit("closed trail needs at least 3 edges");
    std::vector<Edge> c = cyc;
    std::size_t p = std::min_element(c.begin(), c.end()) - c.begin();
    if (shared_vertex(c[p], c[(p + 1) % L]) != c[p].second) {
        std::reverse(c.begin(), c.end());
        p = L - 1 - p;
    }
    std::rotate(c.begin(), c.begin() + p, c.end());
    std::vector<int> t{c[0].first};
    int at = c[0].first;
    for (auto& e : c) {
        if (e.first != at && e.second != at) throw InvalidCircuit("edges do not form a closed trail");
        at = other_end(e, at);
        t.push_back(at);
    }
    if (t.back() != t.front()) throw InvalidCircuit("trail does not close");
    return t;
}

nlohmann::ordered_json to_json(const CircuitDecomposition& cd)
{
    auto arr = nlohmann::ordered_json::array();
    for (auto& c : cd.circuits) {
        nlohmann::ordered_json j;
        j["length"] = c.edges.size();
        j["trail"] = c.trail;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace swchain
