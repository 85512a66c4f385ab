#include "swchain/toperator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace swchain {

bool TrailState::all_green() const
{
    return std::none_of(red.begin(), red.end(), [](char c) { return c != 0; });
}

TrailState trail_state(const std::vector<int>& trail)
{
    const int mu = static_cast<int>(trail.size());
    TrailState ts;
    ts.comp.assign(mu + 1, -1);
    ts.pi.resize(mu + 1);
    ts.red.assign(mu + 1, 0);
    std::map<std::pair<int, int>, int> ids;
    for (int x = 1; x <= mu; ++x) {
        auto key = std::pair{trail[x - 1], x % 2};
        auto it = ids.emplace(key, static_cast<int>(ids.size())).first;
        ts.comp[x] = it->second;
        ts.pi[x] = x;
    }
    return ts;
}

TrailState state_from_reversals(int mu, const std::vector<std::pair<int, int>>& eligible)
{
    std::vector<int> parent(mu + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::set<std::pair<int, int>> given;
    for (auto [x, y] : eligible) {
        if (x < 1 || y < 1 || x > mu || y > mu || x == y) throw InvariantViolation("eligible pair out of range");
        given.insert({std::min(x, y), std::max(x, y)});
        parent[find(x)] = find(y);
    }
    for (int x = 1; x <= mu; ++x)
        for (int y = x + 1; y <= mu; ++y)
            if (find(x) == find(y) && !given.count({x, y}))
                throw InvariantViolation("eligible reversals do not form cliques");
    TrailState ts;
    ts.comp.assign(mu + 1, -1);
    ts.pi.resize(mu + 1);
    ts.red.assign(mu + 1, 0);
    for (int x = 1; x <= mu; ++x) {
        ts.comp[x] = find(x);
        ts.pi[x] = x;
    }
    return ts;
}

std::vector<std::pair<int, int>> eligible_reversals(const std::vector<int>& trail)
{
    std::vector<std::pair<int, int>> out;
    const int mu = static_cast<int>(trail.size());
    for (int x = 1; x <= mu; ++x)
        for (int y = x + 1; y <= mu; ++y)
            if (trail[x - 1] == trail[y - 1] && (x - y) % 2 == 0) out.push_back({x, y});
    return out;
}

int a_of(const TrailState& ts, int k)
{
    while (k > 1 && ts.red[k - 1]) --k;
    return k;
}

int b_of(const TrailState& ts, int k)
{
    while (k < ts.mu() && ts.red[k]) ++k;
    return k;
}

StepInfo step_info(const TrailState& ts)
{
    StepInfo s;
    const int mu = ts.mu();
    for (int jp = 2; jp <= mu && s.fixed; ++jp) {
        if (ts.red[jp - 1]) continue;
        for (int ip = jp - 1; ip >= 1; --ip) {
            if (!ts.red[ip] && ts.eligible(ip, jp)) {
                s.fixed = false;
                s.j = jp;
                s.i = ip;
                break;
            }
        }
    }
    if (!s.fixed) {
        s.a = a_of(ts, s.i);
        s.b = b_of(ts, s.j);
    }
    return s;
}

TrailState t_step(const TrailState& ts, StepInfo* info)
{
    StepInfo s = step_info(ts);
    if (info) *info = s;
    if (s.fixed) return ts;
    TrailState out = ts;
    for (int k = s.a; k <= s.b; ++k) {
        int m = s.a + s.b - k;
        int back = a_of(ts, m) + b_of(ts, m) - m;
        out.pi[k] = ts.pi[back];
    }
    for (int k = s.a; k < s.b; ++k) out.red[k] = 1;
    return out;
}

TrailState greenify(TrailState ts)
{
    std::fill(ts.red.begin(), ts.red.end(), 0);
    return ts;
}

TrailState t_fixpoint(TrailState ts)
{
    const long guard = static_cast<long>(ts.mu()) * ts.mu() + 1;
    for (long it = 0; it <= guard; ++it) {
        StepInfo s;
        TrailState nx = t_step(ts, &s);
        if (s.fixed) return ts;
        ts = std::move(nx);
    }
    throw NonTermination("T did not reach a fixed point within mu^2 steps");
}

RoundtripWitness roundtrip(const TrailState& ts0, int r)
{
    TrailState ts = ts0;
    for (int i = 0; i < r; ++i) ts = t_step(ts);
    ts = greenify(std::move(ts));
    RoundtripWitness w;
    const long guard = static_cast<long>(ts.mu()) * ts.mu();
    while (ts.pi != ts0.pi) {
        if (w.w >= guard) throw NonTermination("roundtrip exceeded mu^2 applications of T");
        StepInfo s;
        TrailState nx = t_step(ts, &s);
        if (s.fixed) throw NonTermination("roundtrip reached a fixed point other than pi_0");
        ts = std::move(nx);
        ++w.w;
    }
    w.g = ts.red;
    return w;
}

std::vector<int> vertices_through(const TrailState& ts, const std::vector<int>& base)
{
    std::vector<int> out(ts.pi.size(), -1);
    for (int k = 1; k <= ts.mu(); ++k) out[k] = base[ts.pi[k]];
    return out;
}

std::vector<Edge> PrimitiveCircuit::edges() const
{
    std::vector<Edge> out;
    const std::size_t L = vertices.size();
    for (std::size_t i = 0; i < L; ++i) out.push_back(make_edge(vertices[i], vertices[(i + 1) % L]));
    return out;
}

PrimitiveDecomposition primitive_decompose(const std::vector<int>& trail, int k)
{
    PrimitiveDecomposition pd;
    pd.base.assign(1, -1);
    pd.base.insert(pd.base.end(), trail.begin(), trail.end());
    pd.states.push_back(trail_state(trail));
    const long guard = static_cast<long>(trail.size()) * trail.size() + 1;
    for (long it = 0;; ++it) {
        if (it > guard) throw NonTermination("primitive decomposition did not terminate");
        const TrailState& cur = pd.states.back();
        StepInfo s;
        TrailState nx = t_step(cur, &s);
        if (s.fixed) break;
        PrimitiveCircuit c;
        c.k = k;
        c.r = static_cast<int>(pd.circuits.size()) + 1;
        for (int x = s.i; x < s.j; ++x) {
            if (cur.red[x]) continue;
            c.positions.push_back(x);
            c.vertices.push_back(pd.base[cur.pi[x]]);
        }
        pd.steps.push_back(s);
        pd.circuits.push_back(std::move(c));
        pd.states.push_back(std::move(nx));
    }
    return pd;
}

bool is_primitive(const std::vector<int>& cyc)
{
    const int L = static_cast<int>(cyc.size());
    if (L < 4 || L % 2) return false;
    std::map<int, std::vector<int>> occ;
    for (int i = 0; i < L; ++i) occ[cyc[i]].push_back(i);
    for (auto& [v, ps] : occ) {
        if (ps.size() > 2) return false;
        if (ps.size() == 2 && (ps[1] - ps[0]) % 2 == 0) return false;
    }
    return true;
}

std::vector<nlohmann::ordered_json> trace_lines(const PrimitiveDecomposition& pd)
{
    std::vector<nlohmann::ordered_json> out;
    for (std::size_t r = 0; r < pd.steps.size(); ++r) {
        const auto& s = pd.steps[r];
        nlohmann::ordered_json j;
        j["r"] = r;
        j["i"] = s.i;
        j["j"] = s.j;
        j["a"] = s.a;
        j["b"] = s.b;
        j["red_interval"] = {s.a, s.b};
        out.push_back(j);
    }
    return out;
}

}  // namespace swchain
