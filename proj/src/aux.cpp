#include "swchain/sweep.hpp"

#include <algorithm>
#include <set>

namespace swchain {

BadEntries bad_entries(const AuxMatrix& m)
{
    BadEntries b;
    const int N = static_cast<int>(m.entries.rows());
    for (int a = 0; a < N; ++a)
        for (int c = a; c < N; ++c) {
            const int v = m.entries(a, c);
            if (v < -1 || v > 2 || m.entries(c, a) != v) b.in_range = false;
            if (a == c) {
                if (v != 0) b.in_range = false;
                continue;
            }
            if (v == 2) b.twos.push_back({a, c});
            if (v == -1) b.minus_ones.push_back({a, c});
        }
    return b;
}

namespace {

bool acceptable(const Eigen::MatrixXi& m)
{
    int neg = 0;
    for (int a = 0; a < m.rows(); ++a)
        for (int c = a + 1; c < m.cols(); ++c) {
            if (m(a, c) < -1 || m(a, c) > 1) return false;
            if (m(a, c) == -1) ++neg;
        }
    return neg <= 1;
}

bool search(Eigen::MatrixXi& m, const std::vector<int>& labels, const ChordModel& cm, int budget, int& used)
{
    const int k = static_cast<int>(m.rows());
    int j = -1;
    for (int c = 1; c < k && j < 0; ++c)
        if (m(0, c) == 2) j = c;
    if (j < 0) return acceptable(m);
    if (budget == 0) return false;
    auto chord = [&](int a, int b) { return cm.is_chord(labels[a], labels[b]); };
    for (int i = 1; i < k; ++i) {
        if (i == j || m(i, j) > 0) continue;
        for (int l = 1; l < k; ++l) {
            if (l == i || l == j || m(i, l) <= m(0, l)) continue;
            if (!chord(0, l) || !chord(l, i) || !chord(i, j) || !chord(j, 0)) continue;
            Eigen::MatrixXi save = m;
            auto bump = [&](int a, int b, int d) {
                m(a, b) += d;
                m(b, a) += d;
            };
            bump(0, l, 1);
            bump(l, i, -1);
            bump(i, j, 1);
            bump(j, 0, -1);
            ++used;
            if (search(m, labels, cm, budget - 1, used)) return true;
            --used;
            m = save;
        }
    }
    return false;
}

}  // namespace

Elimination eliminate_twos(const AuxMatrix& m, const ChordModel& cm, const std::vector<int>& vertices)
{
    const int k = static_cast<int>(vertices.size());
    Eigen::MatrixXi sub(k, k);
    for (int a = 0; a < k; ++a)
        for (int c = 0; c < k; ++c) sub(a, c) = m.entries(vertices[a], vertices[c]);
    Elimination out;
    int used = 0;
    if (search(sub, vertices, cm, 2, used)) {
        out.switches = used;
        out.result = sub;
    }
    return out;
}

AuxAudit audit_point(const Realization& x, const Realization& y, const PathPoint& p)
{
    AuxAudit a;
    const AuxMatrix m = aux_matrix(x, y, p.z);
    const BadEntries b = bad_entries(m);
    a.in_range = b.in_range;
    a.twos = static_cast<int>(b.twos.size());
    a.minus_ones = static_cast<int>(b.minus_ones.size());
    auto on_r = [&](const Edge& e) { return std::binary_search(p.R.begin(), p.R.end(), e); };
    for (auto& e : b.twos) a.bad_on_r = a.bad_on_r && on_r(e);
    for (auto& e : b.minus_ones) a.bad_on_r = a.bad_on_r && on_r(e);

    const int x1 = p.cornerstone;
    std::set<int> cover;
    for (auto& e : p.R) {
        if (e.first != x1) cover.insert(e.first);
        if (e.second != x1) cover.insert(e.second);
    }
    a.r_cover_ok = static_cast<int>(cover.size()) <= (x.model().model() == Model::Bipartite ? 3 : 5);

    if (!p.line || p.milestone) return a;
    const SweepLine l = *p.line;
    a.switch_case = l == SweepLine::Switch || l == SweepLine::Switch1 || l == SweepLine::Switch2 ||
                    l == SweepLine::DoubleStepSecond;
    if (!a.switch_case) return a;
    a.r_shape = p.R.size() <= 3;
    for (auto& e : p.R) a.r_shape = a.r_shape && (e.first == x1 || e.second == x1);
    a.counts_ok = a.twos <= 2 && a.minus_ones <= 1;
    if (a.twos == 0) return a;

    std::vector<int> verts{x1};
    for (auto& e : p.circuit_edges)
        for (int v : {e.first, e.second})
            if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
    const Elimination el = eliminate_twos(m, x.model(), verts);
    a.elimination_switches = el.switches;
    a.elimination_ok = el.switches >= 0;
    return a;
}

}  // namespace swchain
