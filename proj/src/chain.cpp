#include "swchain/chain.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <array>
#include <thread>

namespace swchain {

namespace {

bool valid_move(const Realization& g, const SwitchMove& mv)
{
    const ChordModel& cm = g.model();
    for (auto& e : mv.removed)
        if (!g.has_edge(e)) return false;
    for (auto& e : mv.added)
        if (!cm.is_chord(e) || g.has_edge(e)) return false;
    if (mv.kind == SwitchMove::Kind::TripleSwitch) {
        // The remaining matching is the one pairing each removed u with the
        // v its two matchings both avoid.
        for (auto& r : mv.removed) {
            int u = r.first;
            std::array<bool, 3> hit{};
            std::vector<int> vs;
            for (auto& f : mv.removed) vs.push_back(f.second);
            for (int i = 0; i < 3; ++i) {
                if (vs[i] == r.second) hit[i] = true;
                for (auto& a : mv.added)
                    if (a.first == u && a.second == vs[i]) hit[i] = true;
            }
            for (int i = 0; i < 3; ++i)
                if (!hit[i] && !cm.is_chord(u, vs[i])) return true;
        }
        return false;
    }
    return true;
}

SwitchMove make_move(SwitchMove::Kind kind, std::vector<Edge> removed, std::vector<Edge> added)
{
    for (auto& e : removed) e = make_edge(e.first, e.second);
    for (auto& e : added) e = make_edge(e.first, e.second);
    return SwitchMove{kind, std::move(removed), std::move(added)};
}

// k distinct members of pool, uniform over ordered k-tuples.
std::array<int, 3> draw_distinct(std::mt19937_64& rng, const std::vector<int>& pool, int k)
{
    std::array<int, 3> idx{};
    const int n = static_cast<int>(pool.size());
    for (int t = 0; t < k; ++t) {
        int j = std::uniform_int_distribution<int>(0, n - t - 1)(rng);
        std::array<int, 3> used = idx;
        std::sort(used.begin(), used.begin() + t);
        for (int s = 0; s < t; ++s)
            if (used[s] <= j) ++j;
        idx[t] = j;
    }
    std::array<int, 3> out{};
    for (int t = 0; t < k; ++t) out[t] = pool[idx[t]];
    return out;
}

bool coin(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

std::optional<SwitchMove> propose_pair_switch(const std::vector<int>& us, const std::vector<int>& vs,
                                              std::mt19937_64& rng)
{
    if (us.size() < 2 || vs.size() < 2) return std::nullopt;
    auto u = draw_distinct(rng, us, 2);
    auto v = draw_distinct(rng, vs, 2);
    std::vector<Edge> f{{u[0], v[0]}, {u[1], v[1]}};
    std::vector<Edge> g{{u[0], v[1]}, {u[1], v[0]}};
    if (coin(rng)) std::swap(f, g);
    return make_move(SwitchMove::Kind::Switch, f, g);
}

}  // namespace

KernelSpec KernelSpec::for_model(ChordModelPtr model)
{
    KernelSpec k;
    const long nu = static_cast<long>(model->class_u().size());
    const long nv = static_cast<long>(model->class_v().size());
    auto inv = [](const BigInt& den, long num_den) {
        return den == 0 ? Rational(0) : Rational(1) / (Rational(den) * num_den);
    };
    switch (model->model()) {
    case Model::UC:
        k.switch_move = inv(binomial(nu, 2) * binomial(nu - 2, 2), 2);
        break;
    case Model::Bipartite:
        k.switch_move = inv(binomial(nu, 2) * binomial(nv, 2), 2);
        break;
    case Model::Directed:
        k.switch_move = inv(binomial(nu, 2) * binomial(nv, 2), 4);
        k.triple_move = inv(binomial(nu, 3) * binomial(nv, 3), 24);
        break;
    }
    k.model = std::move(model);
    return k;
}

TransitionRow transitions(const KernelSpec& k, const Realization& g)
{
    TransitionRow row;
    Rational out = 0;
    const auto& es = g.edges();
    const std::size_t m = es.size();
    auto disjoint = [](const Edge& a, const Edge& b) {
        return a.first != b.first && a.first != b.second && a.second != b.first && a.second != b.second;
    };
    auto add = [&](const SwitchMove& mv, const Rational& p) {
        if (p == 0 || !valid_move(g, mv)) return;
        std::vector<Edge> t = mv.removed;
        t.insert(t.end(), mv.added.begin(), mv.added.end());
        row.moves.emplace_back(g.toggled(t), p);
        out += p;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const Edge& a = es[i];
            const Edge& b = es[j];
            if (!disjoint(a, b)) continue;
            add(make_move(SwitchMove::Kind::Switch, {a, b}, {{a.first, b.first}, {a.second, b.second}}),
                k.switch_move);
            add(make_move(SwitchMove::Kind::Switch, {a, b}, {{a.first, b.second}, {a.second, b.first}}),
                k.switch_move);
        }
    if (k.triple_move != 0) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                if (!disjoint(es[i], es[j])) continue;
                for (std::size_t l = j + 1; l < m; ++l) {
                    if (!disjoint(es[i], es[l]) || !disjoint(es[j], es[l])) continue;
                    const Edge f[3] = {es[i], es[j], es[l]};
                    for (int s = 1; s <= 2; ++s) {
                        std::vector<Edge> added;
                        for (int q = 0; q < 3; ++q) added.push_back({f[q].first, f[(q + s) % 3].second});
                        add(make_move(SwitchMove::Kind::TripleSwitch, {f[0], f[1], f[2]}, added), k.triple_move);
                    }
                }
            }
    }
    std::sort(row.moves.begin(), row.moves.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < row.moves.size(); ++i)
        if (row.moves[i].first == row.moves[i - 1].first)
            throw InvariantViolation("two moves lead to the same realization");
    row.stay = 1 - out;
    return row;
}

std::optional<SwitchMove> propose(const KernelSpec& k, std::mt19937_64& rng)
{
    const ChordModel& cm = *k.model;
    switch (cm.model()) {
    case Model::UC: {
        if (!coin(rng)) return std::nullopt;
        if (cm.class_u().size() < 4) return std::nullopt;
        auto v = draw_distinct(rng, cm.class_u(), 3);
        // The fourth vertex comes from the remaining n-3.
        std::vector<int> rest;
        for (int x : cm.class_u())
            if (x != v[0] && x != v[1] && x != v[2]) rest.push_back(x);
        int w = draw_distinct(rng, rest, 1)[0];
        std::vector<Edge> added = coin(rng) ? std::vector<Edge>{{v[0], v[2]}, {v[1], w}}
                                            : std::vector<Edge>{{v[0], w}, {v[1], v[2]}};
        return make_move(SwitchMove::Kind::Switch, {{v[0], v[1]}, {v[2], w}}, added);
    }
    case Model::Bipartite:
        return propose_pair_switch(cm.class_u(), cm.class_v(), rng);
    case Model::Directed: {
        if (coin(rng)) return propose_pair_switch(cm.class_u(), cm.class_v(), rng);
        if (cm.class_u().size() < 3 || cm.class_v().size() < 3) return std::nullopt;
        auto u = draw_distinct(rng, cm.class_u(), 3);
        auto v = draw_distinct(rng, cm.class_v(), 3);
        const int s = coin(rng) ? 1 : 2;
        std::vector<Edge> f, g;
        for (int q = 0; q < 3; ++q) {
            f.push_back({u[q], v[q]});
            g.push_back({u[q], v[(q + s) % 3]});
        }
        return make_move(SwitchMove::Kind::TripleSwitch, f, g);
    }
    }
    return std::nullopt;
}

void step(const KernelSpec& k, WalkState& ws)
{
    auto mv = propose(k, ws.rng);
    if (mv && valid_move(ws.current, *mv)) {
        std::vector<Edge> t = mv->removed;
        t.insert(t.end(), mv->added.begin(), mv->added.end());
        ws.current = ws.current.toggled(t);
    }
    ++ws.steps;
}

Realization run_walk(const DegreeSequence& d, std::uint64_t steps, std::uint64_t seed)
{
    if (!is_graphical(d)) throw NotGraphical("degree sequence " + d.to_text() + " is not graphical");
    WalkState ws{initial_realization(d), std::mt19937_64(seed), 0};
    const KernelSpec k = KernelSpec::for_model(ws.current.model_ptr());
    for (std::uint64_t i = 0; i < steps; ++i) step(k, ws);
    return ws.current;
}

Histogram empirical_distribution(const DegreeSequence& d, std::uint64_t steps, std::uint64_t samples,
                                 std::uint64_t seed, const std::vector<Realization>* exact, unsigned threads)
{
    if (!is_graphical(d)) throw NotGraphical("degree sequence " + d.to_text() + " is not graphical");
    const Realization start = initial_realization(d);
    const KernelSpec k = KernelSpec::for_model(start.model_ptr());
    threads = std::max(1u, threads);

    std::vector<std::map<Realization, std::uint64_t>> parts(threads);
    auto work = [&](unsigned t) {
        for (std::uint64_t i = t; i < samples; i += threads) {
            std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                             static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
            WalkState ws{start, std::mt19937_64(ss), 0};
            for (std::uint64_t s = 0; s < steps; ++s) step(k, ws);
            ++parts[t][ws.current];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    Histogram h;
    h.samples = samples;
    for (auto& p : parts)
        for (auto& [r, c] : p) h.counts[r] += c;
    h.states = h.counts.size();
    if (exact) {
        for (auto& [r, c] : h.counts)
            if (!std::binary_search(exact->begin(), exact->end(), r))
                throw InvariantViolation("walk reached a realization outside the enumerated space");
        const double e = static_cast<double>(samples) / static_cast<double>(exact->size());
        double chi = 0;
        for (auto& r : *exact) {
            auto it = h.counts.find(r);
            double o = it == h.counts.end() ? 0.0 : static_cast<double>(it->second);
            chi += (o - e) * (o - e) / e;
        }
        h.chi_square = chi;
        h.states = exact->size();
        if (exact->size() < 2) {
            h.p_value = 1.0;
        } else {
            boost::math::chi_squared dist(static_cast<double>(exact->size() - 1));
            h.p_value = boost::math::cdf(boost::math::complement(dist, chi));
        }
    }
    return h;
}

}  // namespace swchain
