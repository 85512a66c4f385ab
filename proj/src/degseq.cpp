#include "swchain/degseq.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace swchain {

DegreeSequence Perturbation::apply() const
{
    DegreeSequence d = base;
    auto bump = [&](int label) {
        if (label < d.n1())
            d.first[label] += sign;
        else
            d.second[label - d.n1()] += sign;
    };
    bump(x);
    bump(y);
    return d;
}

namespace {

bool sums_consistent(const DegreeSequence& d)
{
    long a = std::accumulate(d.first.begin(), d.first.end(), 0L);
    long b = std::accumulate(d.second.begin(), d.second.end(), 0L);
    if (d.model == Model::UC) return a % 2 == 0;
    return a == b;
}

bool erdos_gallai(std::vector<int> d)
{
    std::sort(d.rbegin(), d.rend());
    const long n = static_cast<long>(d.size());
    long lhs = 0;
    for (long k = 1; k <= n; ++k) {
        lhs += d[k - 1];
        long rhs = k * (k - 1);
        for (long i = k; i < n; ++i) rhs += std::min<long>(d[i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

bool gale_ryser(std::vector<int> a, const std::vector<int>& b)
{
    std::sort(a.rbegin(), a.rend());
    long lhs = 0;
    for (long k = 1; k <= static_cast<long>(a.size()); ++k) {
        lhs += a[k - 1];
        long rhs = 0;
        for (int x : b) rhs += std::min<long>(x, k);
        if (lhs > rhs) return false;
    }
    return true;
}

// Fulkerson's criterion for digraphs without loops; pairs sorted
// lexicographically non-increasing (out first, then in).
bool fulkerson(const std::vector<int>& out, const std::vector<int>& in)
{
    const long n = static_cast<long>(out.size());
    std::vector<std::pair<int, int>> p(n);
    for (long i = 0; i < n; ++i) p[i] = {out[i], in[i]};
    std::sort(p.rbegin(), p.rend());
    long lhs = 0;
    for (long k = 1; k <= n; ++k) {
        lhs += p[k - 1].first;
        long rhs = 0;
        for (long i = 0; i < k; ++i) rhs += std::min<long>(p[i].second, k - 1);
        for (long i = k; i < n; ++i) rhs += std::min<long>(p[i].second, k);
        if (lhs > rhs) return false;
    }
    return true;
}

struct Rows {
    // row label -> candidate partner labels (ascending)
    std::vector<std::pair<int, std::vector<int>>> rows;
};

Rows rows_for(const ChordModel& cm)
{
    Rows r;
    const int L = cm.label_count();
    if (cm.model() == Model::UC) {
        for (int v = 0; v < L; ++v) {
            std::vector<int> c;
            for (int w = v + 1; w < L; ++w) c.push_back(w);
            r.rows.push_back({v, c});
        }
    } else {
        for (int u = 0; u < cm.n1(); ++u) {
            std::vector<int> c;
            for (int v = cm.n1(); v < L; ++v)
                if (cm.is_chord(u, v)) c.push_back(v);
            r.rows.push_back({u, c});
        }
    }
    return r;
}

class Enumerator {
public:
    Enumerator(const DegreeSequence& d, std::size_t cap, bool keep)
        : model_(ChordModel::for_sequence(d)), rows_(rows_for(*model_)), rem_(d.label_degrees()),
          cap_(cap), keep_(keep)
    {
    }

    void run() { row(0); }

    std::vector<Realization> found;
    std::size_t count = 0;

private:
    void row(std::size_t ri)
    {
        if (ri == rows_.rows.size()) {
            for (int x : rem_)
                if (x != 0) return;
            if (++count > cap_) throw CapExceeded("more than " + std::to_string(cap_) + " realizations");
            if (keep_) {
                auto e = edges_;
                std::sort(e.begin(), e.end());
                found.emplace_back(model_, std::move(e));
            }
            return;
        }
        const int v = rows_.rows[ri].first;
        const auto& cand = rows_.rows[ri].second;
        std::vector<int> open;
        for (int w : cand)
            if (rem_[w] > 0) open.push_back(w);
        const int need = rem_[v];
        if (need > static_cast<int>(open.size())) return;
        choose(ri, v, open, 0, need);
    }

    void choose(std::size_t ri, int v, const std::vector<int>& open, std::size_t from, int need)
    {
        if (need == 0) {
            row(ri + 1);
            return;
        }
        for (std::size_t i = from; i + need <= open.size(); ++i) {
            int w = open[i];
            --rem_[v];
            --rem_[w];
            edges_.push_back(make_edge(v, w));
            choose(ri, v, open, i + 1, need - 1);
            edges_.pop_back();
            ++rem_[v];
            ++rem_[w];
        }
    }

    ChordModelPtr model_;
    Rows rows_;
    std::vector<int> rem_;
    std::vector<Edge> edges_;
    std::size_t cap_;
    bool keep_;
};

bool within_bounds(const DegreeSequence& d)
{
    switch (d.model) {
    case Model::UC:
        for (int x : d.first)
            if (x > d.n1() - 1) return false;
        return true;
    case Model::Bipartite:
        for (int x : d.first)
            if (x > d.n2()) return false;
        for (int x : d.second)
            if (x > d.n1()) return false;
        return true;
    case Model::Directed:
        for (int i = 0; i < d.n1(); ++i)
            if (d.first[i] > d.n1() - 1 || d.second[i] > d.n1() - 1) return false;
        return true;
    }
    return false;
}

}  // namespace

bool is_graphical(const DegreeSequence& d)
{
    if (!sums_consistent(d) || !within_bounds(d)) return false;
    switch (d.model) {
    case Model::UC: return erdos_gallai(d.first);
    case Model::Bipartite: return gale_ryser(d.first, d.second);
    case Model::Directed: return fulkerson(d.first, d.second);
    }
    return false;
}

Realization initial_realization(const DegreeSequence& d)
{
    if (!is_graphical(d)) throw NotGraphical(d.to_text() + " is not graphical");
    auto cm = ChordModel::for_sequence(d);
    std::vector<int> rem = d.label_degrees();
    std::vector<Edge> edges;
    const int L = cm->label_count();

    if (d.model == Model::UC) {
        // Havel-Hakimi: saturate the largest remaining degree first.
        std::vector<bool> done(L, false);
        for (int round = 0; round < L; ++round) {
            int v = -1;
            for (int x = 0; x < L; ++x)
                if (!done[x] && (v < 0 || rem[x] > rem[v])) v = x;
            done[v] = true;
            std::vector<int> others;
            for (int x = 0; x < L; ++x)
                if (!done[x]) others.push_back(x);
            std::stable_sort(others.begin(), others.end(), [&](int a, int b) { return rem[a] > rem[b]; });
            if (rem[v] > static_cast<int>(others.size())) throw InternalInvariant("Havel-Hakimi stalled");
            for (int i = 0; i < rem[v]; ++i) {
                int w = others[i];
                if (rem[w] == 0) throw InternalInvariant("Havel-Hakimi stalled");
                --rem[w];
                edges.push_back(make_edge(v, w));
            }
            rem[v] = 0;
        }
    } else {
        // Ryser / Kleitman-Wang: rows in non-increasing order, partners by
        // largest remaining degree, ties on larger remaining row degree.
        std::vector<int> order(cm->n1());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (rem[a] != rem[b]) return rem[a] > rem[b];
            if (d.model == Model::Directed) return rem[L / 2 + a] > rem[L / 2 + b];
            return false;
        });
        for (int u : order) {
            std::vector<int> cand;
            for (int v = cm->n1(); v < L; ++v)
                if (cm->is_chord(u, v) && rem[v] > 0) cand.push_back(v);
            std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
                if (rem[a] != rem[b]) return rem[a] > rem[b];
                if (d.model == Model::Directed) return rem[a - L / 2] > rem[b - L / 2];
                return false;
            });
            if (rem[u] > static_cast<int>(cand.size())) throw InternalInvariant("greedy realization stalled");
            for (int i = 0; i < rem[u]; ++i) {
                --rem[cand[i]];
                edges.push_back(make_edge(u, cand[i]));
            }
            rem[u] = 0;
        }
    }
    for (int x : rem)
        if (x != 0) throw InternalInvariant("greedy realization left residual degree");
    std::sort(edges.begin(), edges.end());
    Realization g(cm, std::move(edges));
    if (g.degrees() != d.label_degrees()) throw InternalInvariant("greedy realization has wrong degrees");
    return g;
}

std::vector<Realization> enumerate_realizations(const DegreeSequence& d, std::size_t cap)
{
    if (!sums_consistent(d) || !within_bounds(d)) return {};
    Enumerator e(d, cap, true);
    e.run();
    std::sort(e.found.begin(), e.found.end());
    return std::move(e.found);
}

std::size_t count_realizations(const DegreeSequence& d, std::size_t cap)
{
    if (!sums_consistent(d) || !within_bounds(d)) return 0;
    Enumerator e(d, cap, false);
    e.run();
    return e.count;
}

std::vector<Perturbation> perturbations(const DegreeSequence& d, int sign)
{
    std::vector<Perturbation> out;
    auto ok = [&](const Perturbation& p) {
        auto s = p.apply();
        for (int x : s.label_degrees())
            if (x < 0) return false;
        return true;
    };
    auto push = [&](int x, int y) {
        Perturbation p{d, x, y, sign};
        if (ok(p)) out.push_back(p);
    };
    if (d.model == Model::UC) {
        for (int x = 0; x < d.n1(); ++x)
            for (int y = x + 1; y < d.n1(); ++y) push(x, y);
    } else if (d.model == Model::Bipartite) {
        for (int x = 0; x < d.n1(); ++x)
            for (int y = 0; y < d.n2(); ++y) push(x, d.n1() + y);
    } else {
        for (int x = 0; x < d.n1(); ++x)
            for (int y = 0; y < d.n1(); ++y)
                if (x != y) push(x, d.n1() + y);
    }
    return out;
}

Rational stability_ratio(const DegreeSequence& d, std::size_t cap)
{
    std::size_t base = count_realizations(d, cap);
    if (base == 0) throw NotGraphical(d.to_text() + " is not graphical");
    // Distinct perturbations can produce the same sequence; count each once.
    std::map<DegreeSequence, std::size_t> seen;
    for (const auto& p : perturbations(d, +1)) {
        auto s = p.apply();
        if (seen.count(s)) continue;
        seen[s] = count_realizations(s, cap);
    }
    BigInt total = base;
    for (auto& [s, c] : seen) total += c;
    return Rational(total, BigInt(base));
}

}  // namespace swchain

namespace swchain {

namespace {

// Non-increasing sequences of length n with entries in [0, hi].
void non_increasing(int n, int hi, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f)
{
    if (static_cast<int>(cur.size()) == n) {
        f(cur);
        return;
    }
    int top = cur.empty() ? hi : cur.back();
    for (int v = top; v >= 0; --v) {
        cur.push_back(v);
        non_increasing(n, hi, cur, f);
        cur.pop_back();
    }
}

}  // namespace

std::vector<DegreeSequence> graphical_sequences_uc(int n)
{
    std::vector<DegreeSequence> out;
    std::vector<int> cur;
    non_increasing(n, n - 1, cur, [&](const std::vector<int>& d) {
        auto ds = DegreeSequence::uc(d);
        if (is_graphical(ds)) out.push_back(ds);
    });
    return out;
}

std::vector<DegreeSequence> graphical_sequences_bipartite(int n1, int n2)
{
    std::vector<DegreeSequence> out;
    std::vector<std::vector<int>> as, bs;
    std::vector<int> cur;
    non_increasing(n1, n2, cur, [&](const std::vector<int>& d) { as.push_back(d); });
    non_increasing(n2, n1, cur, [&](const std::vector<int>& d) { bs.push_back(d); });
    for (auto& a : as)
        for (auto& b : bs) {
            if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0)) continue;
            auto ds = DegreeSequence::bipartite(a, b);
            if (is_graphical(ds)) out.push_back(ds);
        }
    return out;
}

std::vector<DegreeSequence> graphical_sequences_directed(int n)
{
    std::vector<DegreeSequence> out;
    // Each vertex is a code out * n + in; codes non-increasing.
    std::vector<int> cur;
    non_increasing(n, n * n - 1, cur, [&](const std::vector<int>& codes) {
        std::vector<int> o, i;
        for (int c : codes) {
            o.push_back(c / n);
            i.push_back(c % n);
        }
        if (std::accumulate(o.begin(), o.end(), 0) != std::accumulate(i.begin(), i.end(), 0)) return;
        auto ds = DegreeSequence::directed(o, i);
        if (is_graphical(ds)) out.push_back(ds);
    });
    return out;
}

}  // namespace swchain
