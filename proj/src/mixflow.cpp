#include "swchain/mixflow.hpp"

#include "swchain/redblue.hpp"
#include "swchain/sweep.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <thread>
#include <unordered_map>

namespace swchain {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_text(const Rational& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

int MarkovGraph::index_of(const Realization& g) const
{
    auto it = std::lower_bound(states.begin(), states.end(), g);
    return it != states.end() && *it == g ? static_cast<int>(it - states.begin()) : -1;
}

Rational MarkovGraph::p(int a, int b) const
{
    if (a == b) return stay[a];
    const auto& row = out[a];
    auto it = std::lower_bound(row.begin(), row.end(), b, [](const auto& e, int v) { return e.first < v; });
    return it != row.end() && it->first == b ? it->second : Rational(0);
}

Eigen::MatrixXd MarkovGraph::dense() const
{
    const int n = static_cast<int>(size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a) {
        m(a, a) = to_double(stay[a]);
        for (auto& [b, p] : out[a]) m(a, b) = to_double(p);
    }
    return m;
}

bool MarkovGraph::connected() const
{
    if (states.empty()) return true;
    std::vector<char> seen(size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (auto& [b, p] : out[a])
            if (!seen[b]) {
                seen[b] = 1;
                ++count;
                q.push(b);
            }
    }
    return count == size();
}

MarkovGraph build_markov_graph(const DegreeSequence& d, std::size_t cap)
{
    if (!is_graphical(d)) throw NotGraphical("degree sequence " + d.to_text() + " is not graphical");
    MarkovGraph mg;
    mg.d = d;
    mg.states = enumerate_realizations(d, cap);
    const KernelSpec k = KernelSpec::for_model(mg.states.front().model_ptr());
    mg.out.resize(mg.size());
    mg.stay.resize(mg.size());
    for (std::size_t a = 0; a < mg.size(); ++a) {
        auto row = transitions(k, mg.states[a]);
        Rational sum = row.stay;
        for (auto& [g, p] : row.moves) {
            int b = mg.index_of(g);
            if (b < 0) throw InvariantViolation("a move leaves the enumerated space");
            mg.out[a].emplace_back(b, p);
            sum += p;
        }
        std::sort(mg.out[a].begin(), mg.out[a].end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        if (sum != 1) throw InvariantViolation("transition row does not sum to 1");
        if (row.stay * 2 < 1) throw InvariantViolation("holding probability below 1/2");
        mg.stay[a] = row.stay;
    }
    for (std::size_t a = 0; a < mg.size(); ++a)
        for (auto& [b, p] : mg.out[a])
            if (mg.p(b, static_cast<int>(a)) != p) throw InvariantViolation("transition matrix is not symmetric");
    if (!mg.connected()) throw InvariantViolation("Markov graph of " + d.to_text() + " is not connected");
    return mg;
}

Spectrum spectral(const MarkovGraph& mg)
{
    Spectrum sp;
    if (mg.size() == 0) throw PreconditionViolation("empty state space");
    const Eigen::MatrixXd p = mg.dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p);
    if (es.info() != Eigen::Success) throw ConvergenceFailure("eigen-solver did not converge");
    const Eigen::VectorXd& ev = es.eigenvalues();
    const Eigen::MatrixXd& vecs = es.eigenvectors();
    for (int i = 0; i < ev.size(); ++i)
        sp.residual = std::max(sp.residual, (p * vecs.col(i) - ev(i) * vecs.col(i)).norm());
    if (sp.residual > 1e-10) throw ConvergenceFailure("eigen residual " + std::to_string(sp.residual));
    for (int i = static_cast<int>(ev.size()) - 1; i >= 0; --i) sp.eigenvalues.push_back(ev(i));
    sp.lambda2 = sp.eigenvalues.size() > 1 ? sp.eigenvalues[1] : 0.0;
    sp.tau_rel = 1.0 / (1.0 - sp.lambda2);
    return sp;
}

double tv_distance(const MarkovGraph& mg, int x, std::uint64_t t)
{
    const Eigen::MatrixXd p = mg.dense();
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(static_cast<int>(mg.size()));
    row(x) = 1;
    for (std::uint64_t i = 0; i < t; ++i) row = row * p;
    return 0.5 * (row.array() - 1.0 / static_cast<double>(mg.size())).abs().sum();
}

double max_tv_distance(const MarkovGraph& mg, std::uint64_t t)
{
    const int n = static_cast<int>(mg.size());
    Eigen::MatrixXd base = mg.dense();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
    for (std::uint64_t e = t; e; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
    }
    double worst = 0;
    for (int x = 0; x < n; ++x)
        worst = std::max(worst, 0.5 * (acc.row(x).array() - 1.0 / n).abs().sum());
    return worst;
}

MixingCheck mixing_check(const MarkovGraph& mg, const Spectrum& sp, double eps)
{
    MixingCheck mc;
    mc.eps = eps;
    mc.t = static_cast<std::uint64_t>(std::ceil(sp.tau_rel * std::log(static_cast<double>(mg.size()) / eps)));
    mc.distance = max_tv_distance(mg, mc.t);
    mc.holds = mc.distance <= eps + 1e-8;
    return mc;
}

namespace {

using Census = std::set<std::pair<ParamBundle, std::vector<int>>>;

struct Accumulator {
    std::map<std::pair<int, int>, Rational> edge_load;  // sum over pairs of (sum_s |path| [e on path]) / |S|
    std::vector<Rational> state_load;
    std::vector<Census> census;
    std::size_t paths = 0;
    std::size_t max_len = 0;
    bool len_ok = true;
    bool adj_ok = true;
    Rational growth = 0;
};

// Maximum matchings between the red and blue edges at every vertex.
BigInt unbalanced_matchings(const std::vector<Edge>& red, const std::vector<Edge>& blue)
{
    std::map<int, std::pair<long, long>> deg;
    for (auto& e : red) {
        ++deg[e.first].first;
        ++deg[e.second].first;
    }
    for (auto& e : blue) {
        ++deg[e.first].second;
        ++deg[e.second].second;
    }
    BigInt t = 1;
    for (auto& [v, ab] : deg) {
        long hi = std::max(ab.first, ab.second), lo = std::min(ab.first, ab.second);
        t *= factorial(hi) / factorial(hi - lo);
    }
    return t;
}

std::vector<int> flatten(const AuxMatrix& m)
{
    return std::vector<int>(m.entries.data(), m.entries.data() + m.entries.size());
}

void walk_pairs(const MarkovGraph& mg, int x, Accumulator& acc, bool census)
{
    const auto& states = mg.states;
    const int n = static_cast<int>(states.size());
    const Realization& gx = states[x];
    if (census) {
        acc.state_load[x] += 1;
        acc.census[x].insert({ParamBundle{}, flatten(aux_matrix(gx, gx, gx))});
    }
    for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        const Realization& gy = states[y];
        auto rb = symmetric_difference(gx, gy);
        const std::size_t nabla = rb.red.size() + rb.blue.size();
        auto all_s = enumerate_matchings(rb);
        const long ns = static_cast<long>(all_s.size());
        std::map<std::pair<int, int>, long> edge_count;
        std::map<int, long> state_count;
        for (auto& s : all_s) {
            auto cp = canonical_path(gx, gy, s);
            ++acc.paths;
            const std::size_t len = cp.length();
            acc.max_len = std::max(acc.max_len, len);
            if (2 * len > nabla) acc.len_ok = false;
            std::vector<int> idx;
            for (auto& p : cp.points) {
                int i = mg.index_of(p.z);
                if (i < 0) throw InvariantViolation("canonical path leaves the state space");
                idx.push_back(i);
                if (census) {
                    std::vector<Edge> red, blue;
                    for (auto& e : rb.all_edges()) (p.z_prime.has_edge(e) ? red : blue).push_back(e);
                    Rational g(unbalanced_matchings(red, blue), BigInt(ns));
                    if (g > acc.growth) acc.growth = g;
                    acc.census[i].insert({p.bundle, flatten(aux_matrix(gx, gy, p.z))});
                }
            }
            std::set<std::pair<int, int>> edges;
            for (std::size_t q = 1; q < idx.size(); ++q) {
                if (mg.p(idx[q - 1], idx[q]) == 0) acc.adj_ok = false;
                edges.insert({idx[q - 1], idx[q]});
            }
            for (auto& e : edges) edge_count[e] += static_cast<long>(len);
            for (int i : std::set<int>(idx.begin(), idx.end())) ++state_count[i];
        }
        for (auto& [e, c] : edge_count) acc.edge_load[e] += Rational(c, ns);
        for (auto& [i, c] : state_count) acc.state_load[i] += Rational(c, ns);
    }
}

Accumulator run_all(const MarkovGraph& mg, unsigned threads, bool census)
{
    const int n = static_cast<int>(mg.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    std::vector<Accumulator> parts(threads);
    for (auto& a : parts) {
        a.state_load.assign(n, 0);
        if (census) a.census.resize(n);
    }
    auto work = [&](unsigned t) {
        for (int x = static_cast<int>(t); x < n; x += static_cast<int>(threads)) walk_pairs(mg, x, parts[t], census);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    work(t);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    Accumulator acc = std::move(parts[0]);
    for (unsigned t = 1; t < threads; ++t) {
        auto& p = parts[t];
        for (auto& [e, v] : p.edge_load) acc.edge_load[e] += v;
        for (int i = 0; i < n; ++i) acc.state_load[i] += p.state_load[i];
        if (census)
            for (int i = 0; i < n; ++i) acc.census[i].insert(p.census[i].begin(), p.census[i].end());
        acc.paths += p.paths;
        acc.max_len = std::max(acc.max_len, p.max_len);
        acc.len_ok = acc.len_ok && p.len_ok;
        acc.adj_ok = acc.adj_ok && p.adj_ok;
        if (p.growth > acc.growth) acc.growth = p.growth;
    }
    return acc;
}

BigInt pow4(long n) { return BigInt(n) * n * n * n; }

}  // namespace

FlowReport congestion(const MarkovGraph& mg, const Spectrum& sp, unsigned threads)
{
    FlowReport fr;
    fr.N = mg.size();
    fr.lambda2 = sp.lambda2;
    fr.tau_rel = sp.tau_rel;
    Accumulator acc = run_all(mg, threads, true);
    fr.paths = acc.paths;
    fr.max_path_length = acc.max_len;
    fr.path_lengths_ok = acc.len_ok;
    fr.steps_adjacent = acc.adj_ok;
    // X = Y terms are not part of the flow.
    fr.state_load = acc.state_load;
    for (auto& v : fr.state_load) v -= 1;
    for (auto& v : fr.state_load) fr.max_state_load = std::max(fr.max_state_load, v);
    const Rational n(static_cast<long>(fr.N));
    for (auto& [e, load] : acc.edge_load) {
        Rational k = load / (n * mg.p(e.first, e.second));
        if (k > fr.kappa) {
            fr.kappa = k;
            fr.witness_from = e.first;
            fr.witness_to = e.second;
            fr.witness_load = load / (n * n);
        }
    }
    fr.max_matching_growth = acc.growth;
    fr.matching_growth_ok = acc.growth <= Rational(pow4(mg.d.n()));
    fr.holds = fr.N == 1 || fr.tau_rel <= to_double(fr.kappa) + 1e-8;
    if (!fr.steps_adjacent) throw InvariantViolation("canonical path step is not a kernel move");
    return fr;
}

FlowReport congestion(const DegreeSequence& d, std::size_t cap, unsigned threads)
{
    MarkovGraph mg = build_markov_graph(d, cap);
    return congestion(mg, spectral(mg), threads);
}

nlohmann::ordered_json FlowReport::to_json() const
{
    nlohmann::ordered_json j;
    j["N"] = N;
    j["lambda2"] = lambda2;
    j["tau_rel"] = tau_rel;
    j["kappa"] = rational_text(kappa);
    j["kappa_value"] = to_double(kappa);
    j["tau_rel_le_kappa"] = holds;
    j["paths"] = paths;
    j["max_path_length"] = max_path_length;
    j["path_lengths_within_half_nabla"] = path_lengths_ok;
    j["max_state_load"] = rational_text(max_state_load);
    j["max_state_load_over_N"] = N ? to_double(max_state_load) / static_cast<double>(N) : 0.0;
    auto loads = nlohmann::ordered_json::array();
    for (auto& v : state_load) loads.push_back(rational_text(v));
    j["state_load"] = loads;
    j["max_load_edge"] = {{"from", witness_from}, {"to", witness_to}, {"load", rational_text(witness_load)}};
    j["max_matching_growth"] = rational_text(max_matching_growth);
    j["matching_growth_within_n4"] = matching_growth_ok;
    return j;
}

std::vector<CountingBound> counting_bound_check(const DegreeSequence& d, std::size_t cap)
{
    MarkovGraph mg = build_markov_graph(d, cap);
    Accumulator acc = run_all(mg, 1, true);
    const BigInt n4 = pow4(d.n());
    std::vector<CountingBound> out;
    for (std::size_t i = 0; i < mg.size(); ++i) {
        CountingBound cb;
        cb.z = mg.states[i];
        cb.left = acc.state_load[i];
        cb.census = acc.census[i].size();
        cb.right = n4 * cb.census;
        cb.holds = cb.left <= Rational(cb.right);
        out.push_back(std::move(cb));
    }
    return out;
}

CountingBound counting_bound_check(const DegreeSequence& d, const Realization& z, std::size_t cap)
{
    for (auto& cb : counting_bound_check(d, cap))
        if (cb.z == z) return cb;
    throw ModelMismatch("Z is not a realization of " + d.to_text());
}

}  // namespace swchain
