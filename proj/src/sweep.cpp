#include "swchain/sweep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace swchain {

int OrientedCircuit::at(int i) const
{
    const int L = 2 * ell();
    int j = ((i - 1) % L + L) % L + 1;
    return x[j];
}

std::vector<Edge> OrientedCircuit::edges() const
{
    std::vector<Edge> out;
    for (int i = 1; i <= 2 * ell(); ++i) out.push_back(pair(i, i + 1));
    return out;
}

const char* line_name(SweepLine l)
{
    switch (l) {
    case SweepLine::Switch: return "switch";
    case SweepLine::Switch1: return "special_switch_1";
    case SweepLine::Switch2: return "special_switch_2";
    case SweepLine::DoubleStepFirst: return "double_step_1";
    case SweepLine::DoubleStepSecond: return "double_step_2";
    case SweepLine::TripleSwitch: return "triple_switch";
    case SweepLine::Repair: return "local_repair";
    }
    return "?";
}

OrientedCircuit choose_cornerstone(const Realization& g, const PrimitiveCircuit& c)
{
    const auto& vs = c.vertices;
    const int L = static_cast<int>(vs.size());
    if (L < 4 || L % 2) throw InvalidCircuit("primitive circuit must have even length >= 4");
    std::set<int> vset(vs.begin(), vs.end());
    std::map<int, int> deg;
    for (auto& e : g.edges())
        if (vset.count(e.first) && vset.count(e.second)) {
            ++deg[e.first];
            ++deg[e.second];
        }
    int p = 0;
    for (int i = 1; i < L; ++i)
        if (deg[vs[i]] < deg[vs[p]]) p = i;

    const bool fwd_edge = g.has_edge(vs[p], vs[(p + 1) % L]);
    const bool back_edge = g.has_edge(vs[p], vs[(p + L - 1) % L]);
    if (fwd_edge == back_edge) throw InvalidCircuit("circuit does not alternate at its cornerstone");

    OrientedCircuit oc;
    oc.k = c.k;
    oc.r = c.r;
    oc.reversed = fwd_edge;
    oc.first_index = p;
    oc.x.assign(L + 1, -1);
    for (int i = 0; i < L; ++i) oc.x[i + 1] = oc.reversed ? vs[((p - i) % L + L) % L] : vs[(p + i) % L];
    return oc;
}

namespace {

// Symmetric difference of pair multisets; loops must cancel.
std::vector<Edge> xor_pairs(const std::vector<std::pair<int, int>>& raw)
{
    std::map<Edge, int> cnt;
    for (auto [a, b] : raw) cnt[make_edge(a, b)] ^= 1;
    std::vector<Edge> out;
    for (auto& [e, c] : cnt) {
        if (!c) continue;
        if (e.first == e.second) throw InternalInvariant("a non-chord survives in the sweep bookkeeping");
        out.push_back(e);
    }
    return out;
}

std::vector<Edge> diff(const Realization& a, const Realization& b)
{
    std::vector<Edge> out;
    std::set_symmetric_difference(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                                  std::back_inserter(out));
    return out;
}

class Sweeper {
public:
    Sweeper(const Realization& g, const OrientedCircuit& c) : c_(c), z_(g)
    {
        tr_.circuit = c;
        tr_.g = g;
        for (auto& e : c.edges()) cedges_.insert(e);
        if (g.has_edge(c.pair(1, 2))) throw InvalidCircuit("x1x2 must be a non-edge");
        if (!is_primitive(std::vector<int>(c.x.begin() + 1, c.x.end())))
            throw InvalidCircuit("circuit is not primitive");
        for (int i = 1; i <= 2 * c.ell(); ++i)
            if (g.has_edge(c.pair(i, i + 1)) != (i % 2 == 0))
                throw InvalidCircuit("circuit does not alternate in G");
    }

    SweepTrace run_uc()
    {
        const int l2 = 2 * c_.ell();
        const int x1 = c_.at(1);
        int rr = 0;
        for (int i = 2; 2 * i <= l2; ++i)
            if (c_.at(2 * i) == x1) {
                if (rr) throw InternalInvariant("cornerstone visited more than twice");
                rr = 2 * i;
            }
        const auto& cm = tr_.g.model();
        for (int i = 4; i <= l2; i += 2) {
            bool in = cm.is_chord(x1, c_.at(i)) && tr_.g.has_edge(x1, c_.at(i));
            if (rr && c_.at(i) == c_.at(rr + 1)) in = false;
            if (in) tr_.L.push_back(i);
        }
        if (rr) {
            for (int t = 2; t <= l2; t += 2)
                if ((t > rr && c_.at(t) == c_.at(rr + 1)) || (t < rr && c_.at(t) == c_.at(rr - 1)))
                    tr_.M.push_back(t);
            tr_.M.push_back(rr);
            std::sort(tr_.M.begin(), tr_.M.end());
        }
        auto base_special = [&](int t) { return std::binary_search(tr_.M.begin(), tr_.M.end(), t); };
        // x1 x_{2t} is a circuit edge on the side the special set misses.
        auto twin = [&](int t) {
            return rr && t != rr && (c_.at(t) == c_.at(rr + 1) || c_.at(t) == c_.at(rr - 1)) && t - 2 >= 1;
        };

        int end = 2;
        while (end < l2) {
            int start = next_start(end);
            int t = start - 2;
            while (t >= end) {
                check_head(t, start, end);
                bool special = base_special(t);
                if (!block_ok(t, start, end, special)) {
                    if (!special && twin(t) && block_ok(t, start, end, true)) {
                        special = true;
                    } else {
                        t = repair(t, start, end);
                        continue;
                    }
                }
                if (special) {
                    if (t - 2 < 1) throw InternalInvariant("special step reaches before x1");
                    if (x1 == c_.at(t) && c_.at(t + 2) == c_.at(t - 1)) {
                        push(SweepLine::Switch1, mv({{c_.at(t), c_.at(t + 1)}, {c_.at(t - 2), c_.at(t - 1)}},
                                                     {{c_.at(t + 1), c_.at(t + 2)}, {x1, c_.at(t - 2)}}),
                             start, end, t, t - 2, {}, {});
                    } else if (x1 == c_.at(t) && c_.at(t + 1) == c_.at(t - 2)) {
                        push(SweepLine::Switch2, mv({{x1, c_.at(t + 2)}, {c_.at(t - 2), c_.at(t - 1)}},
                                                     {{c_.at(t + 1), c_.at(t + 2)}, {c_.at(t - 1), c_.at(t)}}),
                             start, end, t, t - 2, {}, {});
                    } else {
                        double_steps(t, start, end);
                    }
                    t -= 2;
                } else {
                    push(SweepLine::Switch, standard(t), start, end, t, t, {}, {});
                }
                t -= 2;
            }
            end = start;
        }
        finish();
        return std::move(tr_);
    }

    SweepTrace run_directed()
    {
        const int l2 = 2 * c_.ell();
        const int x1 = c_.at(1);
        const auto& cm = tr_.g.model();
        for (int i = 4; i <= l2; i += 2)
            if (cm.is_chord(x1, c_.at(i)) && tr_.g.has_edge(x1, c_.at(i))) tr_.L.push_back(i);
        int end = 2;
        while (end < l2) {
            int start = next_start(end);
            int t = start - 2;
            while (t >= end) {
                check_head(t, start, end);
                if (!cm.is_chord(x1, c_.at(t))) {
                    if (t - 2 < 1) throw InternalInvariant("triple-switch reaches before x1");
                    SwitchMove m;
                    m.kind = SwitchMove::Kind::TripleSwitch;
                    m.added = {c_.pair(1, t - 2), c_.pair(t - 1, t), c_.pair(t + 1, t + 2)};
                    m.removed = {c_.pair(t - 2, t - 1), c_.pair(t, t + 1), c_.pair(t + 2, 1)};
                    push(SweepLine::TripleSwitch, m, start, end, t, t - 2, {}, {});
                    t -= 2;
                } else {
                    push(SweepLine::Switch, standard(t), start, end, t, t, {}, {});
                }
                t -= 2;
            }
            end = start;
        }
        finish();
        return std::move(tr_);
    }

private:
    // Moves of the block at head 2t as planned by the sweep.
    std::vector<SwitchMove> plan(int t, bool special, Realization z) const
    {
        const int x1 = c_.at(1);
        if (!special) return {standard(t)};
        if (t - 2 < 1) throw InternalInvariant("special step reaches before x1");
        if (x1 == c_.at(t) && c_.at(t + 2) == c_.at(t - 1))
            return {mv({{c_.at(t), c_.at(t + 1)}, {c_.at(t - 2), c_.at(t - 1)}},
                       {{c_.at(t + 1), c_.at(t + 2)}, {x1, c_.at(t - 2)}})};
        if (x1 == c_.at(t) && c_.at(t + 1) == c_.at(t - 2))
            return {mv({{x1, c_.at(t + 2)}, {c_.at(t - 2), c_.at(t - 1)}},
                       {{c_.at(t + 1), c_.at(t + 2)}, {c_.at(t - 1), c_.at(t)}})};
        const std::array<int, 5> w{c_.at(t - 2), c_.at(t - 1), c_.at(t), c_.at(t + 1), c_.at(t + 2)};
        SwitchMove m1 = double_step_move(z, x1, w);
        z = apply_switch(z, m1);
        return {m1, double_step_move(z, x1, w)};
    }

    // The state the head invariant predicts at 2t, if it is a realization.
    std::optional<Realization> head_state(int t, int start, int end) const
    {
        std::vector<std::pair<int, int>> raw;
        interval(raw, 1, end);
        interval(raw, t + 2, start);
        raw.push_back({c_.at(1), c_.at(end)});
        raw.push_back({c_.at(1), c_.at(start)});
        raw.push_back({c_.at(1), c_.at(t + 2)});
        try {
            std::vector<Edge> toggle = xor_pairs(raw);
            Realization r = tr_.g.toggled(toggle);
            Realization checked(r.model_ptr(), r.edges());
            if (checked.degrees() != tr_.g.degrees()) return std::nullopt;
            return checked;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    bool block_ok(int t, int start, int end, bool special) const
    {
        try {
            Realization z = z_;
            for (auto& m : plan(t, special, z_)) z = apply_switch(z, m);
            auto want = head_state(special ? t - 4 : t - 2, start, end);
            return want && *want == z;
        } catch (const ValidationError&) {
            return false;
        } catch (const InvariantError&) {
            return false;
        }
    }

    // Shortest switch sequence on V(C) from z_ to the next reachable head
    // state; returns the new head 2t.
    int repair(int t, int start, int end)
    {
        std::vector<int> vs(c_.x.begin() + 1, c_.x.end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (int tn = t - 2; tn >= end - 2; tn -= 2) {
            auto want = head_state(tn, start, end);
            if (!want) continue;
            std::vector<SwitchMove> path;
            if (!shortest_switches(z_, *want, vs, path)) continue;
            for (auto& m : path) push(SweepLine::Repair, m, start, end, t, tn + 2, {}, {});
            return tn;
        }
        throw NoBranch("no valid switch sequence reaches a later sweep state");
    }

    static bool shortest_switches(const Realization& from, const Realization& to, const std::vector<int>& vs,
                                  std::vector<SwitchMove>& path)
    {
        const ChordModel& cm = from.model();
        std::function<bool(const Realization&, int, int)> dfs = [&](const Realization& cur, int g, int bound) {
            const int d = static_cast<int>(diff(cur, to).size());
            if (d == 0) return true;
            if (g + (d + 3) / 4 > bound) return false;
            std::vector<Edge> inside;
            for (auto& e : cur.edges())
                if (std::binary_search(vs.begin(), vs.end(), e.first) && std::binary_search(vs.begin(), vs.end(), e.second))
                    inside.push_back(e);
            for (std::size_t i = 0; i < inside.size(); ++i)
                for (std::size_t j = i + 1; j < inside.size(); ++j) {
                    auto [a, b] = inside[i];
                    auto [c, e] = inside[j];
                    if (a == c || a == e || b == c || b == e) continue;
                    for (auto add : {std::array<Edge, 2>{make_edge(a, c), make_edge(b, e)},
                                     std::array<Edge, 2>{make_edge(a, e), make_edge(b, c)}}) {
                        if (!cm.is_chord(add[0].first, add[0].second) || !cm.is_chord(add[1].first, add[1].second))
                            continue;
                        if (cur.has_edge(add[0]) || cur.has_edge(add[1])) continue;
                        SwitchMove m;
                        m.removed = {inside[i], inside[j]};
                        m.added = {add[0], add[1]};
                        path.push_back(m);
                        if (dfs(apply_switch(cur, m), g + 1, bound)) return true;
                        path.pop_back();
                    }
                }
            return false;
        };
        for (int bound = 1; bound <= 8; ++bound)
            if (dfs(from, 0, bound)) return true;
        return false;
    }

    static SwitchMove mv(std::vector<std::pair<int, int>> rem, std::vector<std::pair<int, int>> add)
    {
        SwitchMove m;
        for (auto [a, b] : rem) m.removed.push_back(make_edge(a, b));
        for (auto [a, b] : add) m.added.push_back(make_edge(a, b));
        return m;
    }

    SwitchMove standard(int t) const
    {
        const int x1 = c_.at(1);
        return mv({{x1, c_.at(t + 2)}, {c_.at(t), c_.at(t + 1)}}, {{x1, c_.at(t)}, {c_.at(t + 1), c_.at(t + 2)}});
    }

    int next_start(int end) const
    {
        for (int v : tr_.L)
            if (v > end) return v;
        throw InternalInvariant("no start chord beyond " + std::to_string(end));
    }

    // Interval edges x_i x_{i+1} for i in [lo, hi).
    void interval(std::vector<std::pair<int, int>>& raw, int lo, int hi) const
    {
        for (int i = lo; i < hi; ++i) raw.push_back({c_.at(i), c_.at(i + 1)});
    }

    Realization expected(const std::vector<std::pair<int, int>>& raw) const { return tr_.g.toggled(xor_pairs(raw)); }

    void check_head(int t, int start, int end) const
    {
        const int x1 = c_.at(1);
        std::vector<std::pair<int, int>> raw;
        interval(raw, 1, end);
        interval(raw, t + 2, start);
        raw.push_back({x1, c_.at(end)});
        raw.push_back({x1, c_.at(start)});
        raw.push_back({x1, c_.at(t + 2)});
        if (!(expected(raw) == z_))
            throw InternalInvariant("sweep loop invariant fails at 2t=" + std::to_string(t));
    }

    void double_steps(int t, int start, int end)
    {
        const int x1 = c_.at(1);
        const std::array<int, 5> w{c_.at(t - 2), c_.at(t - 1), c_.at(t), c_.at(t + 1), c_.at(t + 2)};
        // F / H / Q tables for the state after the first Double step, keyed
        // on the current state: a window diagonal may be a circuit edge
        // already toggled by the sweep.
        const Realization& g = z_;
        std::vector<std::pair<int, int>> raw;
        std::vector<std::pair<int, int>> h;
        std::vector<Edge> q;
        interval(raw, 1, end);
        const bool distinct = w[0] != w[3];
        int lo = 0;
        if (distinct && g.has_edge(w[0], w[3])) {
            lo = t + 1;
            h = {{x1, w[0]}, {w[0], w[3]}};
        } else if (distinct) {
            lo = t - 2;
            h = {{x1, w[4]}, {w[0], w[3]}, {w[3], w[4]}};
            q = {make_edge(w[3], w[4])};
        } else if (g.has_edge(w[4], w[1])) {
            lo = t - 1;
            h = {{x1, w[4]}, {w[4], w[1]}};
            q = {make_edge(w[0], w[1])};
        } else {
            lo = t + 2;
            h = {{x1, w[0]}, {w[4], w[1]}, {w[0], w[1]}};
        }
        interval(raw, lo, start);
        raw.push_back({x1, c_.at(end)});
        raw.push_back({x1, c_.at(start)});
        raw.insert(raw.end(), h.begin(), h.end());

        push(SweepLine::DoubleStepFirst, double_step_move(z_, x1, w), start, end, t, lo, q, xor_pairs(h));
        if (!(expected(raw) == z_))
            throw InternalInvariant("Double step state differs from the F/H prediction at 2t=" + std::to_string(t));
        push(SweepLine::DoubleStepSecond, double_step_move(z_, x1, w), start, end, t, t - 2, {}, {});
    }

    // lo: the state after the step has interval part [1, end) u [lo, start).
    void push(SweepLine line, const SwitchMove& m, int start, int end, int t, int lo, std::vector<Edge> q,
              std::vector<Edge> h)
    {
        SweepStep s;
        s.line = line;
        s.move = m;
        s.z = apply_switch(z_, m);
        s.start = start;
        s.end = end;
        s.t2 = t;
        s.q_set = std::move(q);
        s.h_set = std::move(h);
        // R = ((Z xor G) minus E(C)) plus the circuit edges that separate
        // (Z xor G) on E(C) from the interval part; the latter is Q unless
        // a window diagonal coincides with a circuit edge.
        std::vector<std::pair<int, int>> raw;
        interval(raw, 1, end);
        interval(raw, std::max(lo, end), start);
        std::set<Edge> want;
        for (auto& e : xor_pairs(raw)) want.insert(e);
        std::set<Edge> r;
        const auto flipped = diff(s.z, tr_.g);
        // The sweep ends at G xor E(C), where R is empty.
        if (std::set<Edge>(flipped.begin(), flipped.end()) == cedges_) want.clear();
        else for (auto& e : flipped) {
            if (!cedges_.count(e))
                r.insert(e);
            else if (!want.erase(e))
                r.insert(e);
        }
        r.insert(want.begin(), want.end());
        s.r_set.assign(r.begin(), r.end());
        z_ = s.z;
        tr_.steps.push_back(std::move(s));
    }

    void finish() const
    {
        std::vector<Edge> ce(cedges_.begin(), cedges_.end());
        if (!(tr_.g.toggled(ce) == z_)) throw InternalInvariant("sweep did not reach G xor E(C)");
    }

    OrientedCircuit c_;
    Realization z_;
    SweepTrace tr_;
    std::set<Edge> cedges_;
};

}  // namespace

SwitchMove double_step_move(const Realization& z, int x1, const std::array<int, 5>& w)
{
    const ChordModel& cm = z.model();
    SwitchMove m;
    auto set = [&](std::vector<std::pair<int, int>> add, std::vector<std::pair<int, int>> rem) {
        for (auto [a, b] : add) m.added.push_back(make_edge(a, b));
        for (auto [a, b] : rem) m.removed.push_back(make_edge(a, b));
    };
    if (cm.is_chord(w[0], w[3])) {
        if (z.has_edge(w[0], w[3]))
            set({{x1, w[0]}, {w[3], w[4]}}, {{w[0], w[3]}, {x1, w[4]}});
        else
            set({{w[0], w[3]}, {w[1], w[2]}}, {{w[0], w[1]}, {w[2], w[3]}});
    } else if (cm.is_chord(w[1], w[4])) {
        if (z.has_edge(w[1], w[4]))
            set({{w[3], w[4]}, {w[1], w[2]}}, {{w[1], w[4]}, {w[2], w[3]}});
        else
            set({{x1, w[0]}, {w[1], w[4]}}, {{w[0], w[1]}, {x1, w[4]}});
    } else {
        throw NoBranch("neither diagonal of the Double step window is a chord");
    }
    return m;
}

Realization double_step(const Realization& z, int x1, const std::array<int, 5>& w)
{
    return apply_switch(z, double_step_move(z, x1, w));
}

SweepTrace sweep(const Realization& g, const OrientedCircuit& c)
{
    if (g.model().model() == Model::Directed) throw ModelMismatch("use directed_sweep for directed models");
    return Sweeper(g, c).run_uc();
}

SweepTrace directed_sweep(const Realization& g, const OrientedCircuit& c)
{
    if (g.model().model() != Model::Directed) throw ModelMismatch("directed_sweep needs a directed model");
    return Sweeper(g, c).run_directed();
}

SweepTrace run_sweep(const Realization& g, const OrientedCircuit& c)
{
    return g.model().model() == Model::Directed ? directed_sweep(g, c) : sweep(g, c);
}

}  // namespace swchain
