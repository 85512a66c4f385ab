#include "swchain/sweep.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace swchain {

namespace {

int other_end(const Edge& e, int v) { return e.first == v ? e.second : e.first; }

std::vector<Edge> sym_diff(const std::vector<Edge>& a, const std::vector<Edge>& b)
{
    std::vector<Edge> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const std::vector<Edge>& sorted, const Edge& e)
{
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

// Closed 1-based vertex sequence u[1..mu] with u[mu] == u[1] and mu = |E| + 1.
Edge pos_edge(const std::vector<int>& u, int x) { return make_edge(u[x], u[x + 1]); }

struct Comp {
    std::vector<int> verts;  // canonical orientation, size edges + 1
    std::vector<Edge> edges;
    bool closed = false;
};

std::vector<int> walk_vertices(int start, const std::vector<Edge>& edges)
{
    std::vector<int> out{start};
    for (auto& e : edges) out.push_back(other_end(e, out.back()));
    return out;
}

// Components of nabla under the stored transitions, ordered by smallest edge.
std::vector<Comp> components(const std::vector<Edge>& nabla, const MatchingParameter& sz)
{
    std::map<std::pair<Edge, int>, Edge> link;
    for (auto& [w, prs] : sz.at)
        for (auto& [a, b] : prs) {
            link[{a, w}] = b;
            link[{b, w}] = a;
        }
    auto walk = [&](const Edge& e, int at, std::vector<Edge>& out) -> std::pair<bool, int> {
        Edge cur = e;
        for (;;) {
            auto it = link.find({cur, at});
            if (it == link.end()) return {false, at};
            if (it->second == e) return {true, at};
            cur = it->second;
            out.push_back(cur);
            at = other_end(cur, at);
        }
    };
    std::set<Edge> seen;
    std::vector<Comp> comps;
    for (auto& e : nabla) {
        if (seen.count(e)) continue;
        Comp c;
        std::vector<Edge> fwd{e};
        auto [closed, fend] = walk(e, e.second, fwd);
        if (closed) {
            c.closed = true;
            c.verts = trail_of(fwd);
            for (std::size_t i = 0; i + 1 < c.verts.size(); ++i) c.edges.push_back(make_edge(c.verts[i], c.verts[i + 1]));
        } else {
            std::vector<Edge> back;
            auto [cl2, bend] = walk(e, e.first, back);
            if (cl2) throw InternalInvariant("inconsistent transition links");
            std::reverse(back.begin(), back.end());
            back.insert(back.end(), fwd.begin(), fwd.end());
            c.edges = back;
            int start = bend;
            if (c.edges.size() == 1) {
                start = e.first;
            } else if (c.edges.back() < c.edges.front()) {
                std::reverse(c.edges.begin(), c.edges.end());
                start = fend;
            }
            c.verts = walk_vertices(start, c.edges);
        }
        for (auto& f : c.edges)
            if (!seen.insert(f).second) throw InternalInvariant("edge in two transition components");
        comps.push_back(std::move(c));
    }
    return comps;
}

struct Oriented {
    std::vector<int> verts;
    std::vector<Edge> edges;
};

Oriented orient(const Comp& c, bool rev)
{
    Oriented o{c.verts, c.edges};
    if (rev) {
        std::reverse(o.verts.begin(), o.verts.end());
        std::reverse(o.edges.begin(), o.edges.end());
    }
    return o;
}

void add_transitions(MatchingParameter& sz, const std::vector<int>& closed_verts, const std::vector<Edge>& zp)
{
    const int L = static_cast<int>(closed_verts.size()) - 1;
    for (int x = 0; x < L; ++x) {
        Edge a = make_edge(closed_verts[x], closed_verts[x + 1]);
        Edge b = make_edge(closed_verts[(x + 1) % L], closed_verts[(x + 1) % L + 1]);
        bool ia = contains(zp, a), ib = contains(zp, b);
        if (ia == ib) continue;
        if (!ia) std::swap(a, b);
        sz.at[closed_verts[x + 1]].push_back({a, b});
    }
}

void sort_pairs(MatchingParameter& sz)
{
    for (auto& [w, prs] : sz.at) std::sort(prs.begin(), prs.end());
}

struct Pieces {
    int form = 0;
    std::vector<int> cuts;
    std::vector<std::pair<int, int>> closed;  // closed intervals of flipped pieces
};

Pieces find_pieces(const std::vector<int>& pos, const std::vector<char>& flipped)
{
    Pieces p;
    std::vector<std::pair<int, int>> runs;  // index ranges into pos
    for (std::size_t a = 0; a < pos.size();) {
        if (!flipped[a]) {
            ++a;
            continue;
        }
        std::size_t b = a;
        while (b + 1 < pos.size() && flipped[b + 1]) ++b;
        runs.push_back({static_cast<int>(a), static_cast<int>(b)});
        a = b + 1;
    }
    const int last = static_cast<int>(pos.size()) - 1;
    if (runs.empty()) return p;
    if (runs.size() <= 2) {
        p.form = 1;
        for (auto [a, b] : runs) {
            p.cuts.push_back(pos[a]);
            p.cuts.push_back(pos[b] + 1);
            p.closed.push_back({pos[a], pos[b] + 1});
        }
        return p;
    }
    if (runs.size() == 3 && runs[0].first == 0 && runs[2].second == last) {
        p.form = 2;
        p.cuts = {pos[0], pos[runs[0].second] + 1, pos[runs[1].first], pos[runs[1].second] + 1, pos[runs[2].first],
                  pos[last] + 1};
        p.closed = {{p.cuts[0], p.cuts[1]}, {p.cuts[2], p.cuts[3]}, {p.cuts[4], p.cuts[5]}};
        return p;
    }
    throw InternalInvariant("flipped part of the circuit has " + std::to_string(runs.size()) + " pieces");
}

bool in_closed(const std::vector<std::pair<int, int>>& iv, int x)
{
    for (auto [a, b] : iv)
        if (a <= x && x <= b) return true;
    return false;
}

std::vector<std::pair<int, int>> closed_of(const Sigma& s)
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i + 1 < s.cuts.size(); i += 2) out.push_back({s.cuts[i], s.cuts[i + 1]});
    return out;
}

// Restricted T to a fixed point on [lo, hi] of u (closed, 1-based).
void settle(std::vector<int>& u, int lo, int hi)
{
    const int len = hi - lo + 1;
    TrailState ts;
    ts.comp.assign(len + 1, -1);
    ts.pi.resize(len + 1);
    ts.red.assign(len + 1, 0);
    std::map<std::pair<int, int>, int> ids;
    for (int p = 1; p <= len; ++p) {
        const int x = lo + p - 1;
        ts.comp[p] = ids.emplace(std::pair{u[x], x % 2}, static_cast<int>(ids.size())).first->second;
        ts.pi[p] = p;
    }
    ts = t_fixpoint(std::move(ts));
    std::vector<int> w(u.begin() + lo, u.begin() + hi + 1);
    for (int p = 1; p <= len; ++p) u[lo + p - 1] = w[ts.pi[p] - 1];
}

// T applied from (id, green) on the vertex sequence b until it reads as v.
int steps_to(const std::vector<int>& b, const std::vector<int>& v)
{
    std::vector<int> b0(b.begin() + 1, b.end());
    TrailState ts = trail_state(b0);
    const long guard = static_cast<long>(b0.size()) * b0.size() + 1;
    for (int w = 0; w <= guard; ++w) {
        bool same = true;
        for (int x = 1; x <= ts.mu() && same; ++x) same = b[ts.pi[x]] == v[x];
        if (same) return w;
        StepInfo s;
        TrailState nx = t_step(ts, &s);
        if (s.fixed) return -1;
        ts = std::move(nx);
    }
    return -1;
}

struct Context {
    const Realization* x;
    RedBlueGraph rb;
    std::vector<Edge> nabla;
    CircuitDecomposition cd;
    std::vector<PrimitiveDecomposition> pds;
};

void fill_bundle(const Context& ctx, PathPoint& pt, const Realization& milestone, int rb, const OrientedCircuit* oc)
{
    const int k = pt.k;
    const auto& pd = ctx.pds[k - 1];
    const auto& st = pd.states[rb];
    const auto& zp = pt.z_prime.edges();
    for (auto& e : sym_diff(pt.z_prime.edges(), ctx.x->edges()))
        if (!contains(ctx.nabla, e)) throw InternalInvariant("Z' leaves the symmetric difference");

    const int mu = st.mu();
    const int E = mu - 1;
    std::vector<int> b(mu + 1, -1);
    for (int x = 1; x <= mu; ++x) b[x] = pd.base[st.pi[x]];

    Pieces pc;
    auto flips = sym_diff(pt.z_prime.edges(), milestone.edges());
    if (!flips.empty()) {
        const auto& c = pd.circuits[rb];
        std::vector<char> fl(c.positions.size(), 0);
        std::set<Edge> fs(flips.begin(), flips.end());
        std::size_t hit = 0;
        for (std::size_t a = 0; a < c.positions.size(); ++a) {
            const int x = c.positions[a];
            Edge e = make_edge(b[x], b[x + 1]);
            if (fs.count(e)) {
                fl[a] = 1;
                ++hit;
            }
        }
        if (hit != fs.size()) throw InternalInvariant("flipped edges outside the active primitive circuit");
        pc = find_pieces(c.positions, fl);
    }
    auto larrow = [&](int y) { return a_of(st, y) + b_of(st, y) - y; };
    std::vector<int> u = b;
    if (pc.form == 1) {
        for (int x = 1; x <= mu; ++x)
            if (in_closed(pc.closed, x)) u[x] = b[larrow(x)];
    } else if (pc.form == 2) {
        const int i = pc.cuts.front(), j = pc.cuts.back();
        for (int x = i; x <= j; ++x) {
            const int y = i + j - x;
            u[x] = in_closed(pc.closed, y) ? b[larrow(y)] : b[y];
        }
    }

    // s(X, Y, Z)
    MatchingParameter sz;
    for (std::size_t i = 0; i < ctx.cd.circuits.size(); ++i)
        if (static_cast<int>(i) != k - 1) add_transitions(sz, ctx.cd.circuits[i].trail, zp);
    std::vector<int> u0(u.begin() + 1, u.end());
    add_transitions(sz, u0, zp);
    sort_pairs(sz);

    Sigma sg;
    sg.form = pc.form;
    sg.cuts = pc.cuts;
    sg.k = k;
    sg.r = rb;
    auto comps = components(ctx.nabla, sz);
    std::map<Edge, std::pair<int, int>> where;
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (std::size_t q = 0; q < comps[c].edges.size(); ++q)
            where[comps[c].edges[q]] = {static_cast<int>(c), static_cast<int>(q)};
    auto locate = [&](int p) {
        auto [c, q] = where.at(pos_edge(u, p));
        const bool rev = u[p] != comps[c].verts[q];
        const int L = static_cast<int>(comps[c].edges.size());
        return std::tuple{c, rev, rev ? L - 1 - q : q, L};
    };
    auto [c0, rev0, off0, len0] = locate(1);
    sg.glue.push_back({c0, rev0});
    sg.offset = off0;
    if (!comps[c0].closed) {
        int p = 1 + len0 - off0;
        while (p <= E - off0) {
            auto [c, rev, off, len] = locate(p);
            if (off != 0) throw InternalInvariant("transition segment starts mid-component");
            sg.glue.push_back({c, rev});
            p += len;
        }
        if (p != E - off0 + 1) throw InternalInvariant("transition segments do not tile the trail");
    }

    pt.s_z = std::move(sz);
    pt.bundle.x1 = oc ? oc->at(1) : -1;
    pt.bundle.sigma = std::move(sg);
    pt.bundle.R = pt.R;
    const auto& v = ctx.cd.circuits[k - 1].trail;
    std::vector<int> v1{-1};
    v1.insert(v1.end(), v.begin(), v.end());
    pt.bundle.w = steps_to(b, v1);
    if (pt.bundle.w < 0) throw InternalInvariant("T does not return from pi_r to the trail");
}

Context make_context(const Realization& x, const Realization& y, const MatchingParameter& s)
{
    Context ctx;
    ctx.x = &x;
    ctx.rb = symmetric_difference(x, y);
    ctx.nabla = ctx.rb.all_edges();
    ctx.cd = decompose(ctx.rb, s);
    for (std::size_t i = 0; i < ctx.cd.circuits.size(); ++i) {
        const auto& t = ctx.cd.circuits[i].trail;
        ctx.pds.push_back(primitive_decompose(t, static_cast<int>(i) + 1));
    }
    return ctx;
}

}  // namespace

CanonicalPath canonical_path(const Realization& x, const Realization& y, const MatchingParameter& s)
{
    CanonicalPath cp;
    if (x == y) return cp;
    Context ctx = make_context(x, y, s);
    cp.circuits = ctx.cd;
    cp.primitive = ctx.pds;

    PathPoint p0;
    p0.z = x;
    p0.z_prime = x;
    p0.milestone = true;
    fill_bundle(ctx, p0, x, 0, nullptr);
    cp.points.push_back(std::move(p0));

    Realization g = x;
    for (int k = 1; k <= static_cast<int>(ctx.pds.size()); ++k) {
        const auto& pd = ctx.pds[k - 1];
        for (int r = 1; r <= pd.rounds(); ++r) {
            OrientedCircuit oc = choose_cornerstone(g, pd.circuits[r - 1]);
            SweepTrace tr = run_sweep(g, oc);
            const auto ce = oc.edges();
            std::vector<Edge> cs(ce.begin(), ce.end());
            std::sort(cs.begin(), cs.end());
            for (std::size_t q = 0; q < tr.steps.size(); ++q) {
                const auto& st = tr.steps[q];
                PathPoint pt;
                pt.z = st.z;
                pt.k = k;
                pt.r = r;
                pt.q = static_cast<int>(q) + 1;
                pt.line = st.line;
                pt.milestone = q + 1 == tr.steps.size();
                pt.circuit_edges = cs;
                pt.cornerstone = oc.at(1);
                if (pt.milestone) {
                    pt.z_prime = pt.z;
                    fill_bundle(ctx, pt, pt.z, r, &oc);
                } else {
                    pt.R = st.r_set;
                    pt.z_prime = pt.z.toggled(pt.R);
                    fill_bundle(ctx, pt, g, r - 1, &oc);
                }
                cp.points.push_back(std::move(pt));
            }
            g = tr.final_state();
            cp.sweeps.push_back(std::move(tr));
        }
    }
    if (!(g == y)) throw InternalInvariant("canonical path does not end at Y");
    return cp;
}

namespace {
const PathPoint& find_point(const CanonicalPath& cp, const Realization& z)
{
    for (auto& p : cp.points)
        if (p.z == z) return p;
    throw PreconditionViolation("Z is not on the canonical path of (X, Y, s)");
}
}  // namespace

ParamBundle bundle(const Realization& x, const Realization& y, const Realization& z, const MatchingParameter& s)
{
    return find_point(canonical_path(x, y, s), z).bundle;
}

MatchingParameter s_of(const Realization& x, const Realization& y, const Realization& z, const MatchingParameter& s)
{
    return find_point(canonical_path(x, y, s), z).s_z;
}

Reconstructed reconstruct(const Realization& z, const AuxMatrix& m, const ParamBundle& bd, const MatchingParameter& s_z)
{
    const auto& cm = z.model();
    const int N = cm.label_count();
    if (m.entries.rows() != N || m.entries.cols() != N) throw ReconstructionMismatch("auxiliary matrix has wrong size");
    std::vector<Edge> nabla;
    for (int a = 0; a < N; ++a)
        for (int c = a + 1; c < N; ++c) {
            if (!cm.is_chord(a, c)) continue;
            const int val = m.entries(a, c) + (z.has_edge(a, c) ? 1 : 0);
            if (val % 2) nabla.push_back({a, c});
        }
    if (nabla.empty()) throw ReconstructionMismatch("empty symmetric difference");
    const Realization zp = z.toggled(bd.R);
    const auto& zpe = zp.edges();
    const Sigma& sg = bd.sigma;

    auto comps = components(nabla, s_z);
    std::vector<int> closed_ids, open_ids;
    for (std::size_t c = 0; c < comps.size(); ++c) (comps[c].closed ? closed_ids : open_ids).push_back(static_cast<int>(c));
    if (sg.glue.empty()) throw ReconstructionMismatch("empty glue list");
    for (auto [c, rev] : sg.glue)
        if (c < 0 || c >= static_cast<int>(comps.size())) throw ReconstructionMismatch("glue names a missing component");

    // Closed vertex sequence u = pi_{Z'} read on the trail of W_k.
    std::vector<int> S;
    for (auto [c, rev] : sg.glue) {
        Oriented o = orient(comps[c], rev);
        if (S.empty()) {
            S = o.verts;
        } else {
            if (o.verts.front() != S.back()) throw ReconstructionMismatch("glued pieces do not meet");
            S.insert(S.end(), o.verts.begin() + 1, o.verts.end());
        }
    }
    if (S.front() != S.back()) throw ReconstructionMismatch("glued trail does not close");
    const int E = static_cast<int>(S.size()) - 1;
    const int mu = E + 1;
    if (sg.offset < 0 || sg.offset >= E) throw ReconstructionMismatch("offset out of range");
    std::vector<int> u(mu + 1, -1);
    for (int x = 1; x <= E; ++x) u[x] = S[(sg.offset + x - 1) % E];
    u[mu] = u[1];

    std::vector<Edge> wk;
    for (int x = 1; x <= E; ++x) wk.push_back(pos_edge(u, x));
    std::sort(wk.begin(), wk.end());
    if (std::adjacent_find(wk.begin(), wk.end()) != wk.end()) throw ReconstructionMismatch("glued trail repeats an edge");

    // Other circuits, ordered together with W_k by smallest edge.
    std::vector<int> others;
    for (int c : closed_ids) {
        bool used = false;
        for (auto [g, rev] : sg.glue) used = used || g == c;
        if (!used) others.push_back(c);
    }
    struct Item {
        Edge first;
        int comp;  // -1 for W_k
    };
    std::vector<Item> order{{wk.front(), -1}};
    for (int c : others) order.push_back({*std::min_element(comps[c].edges.begin(), comps[c].edges.end()), c});
    std::sort(order.begin(), order.end(), [](const Item& a, const Item& b) { return a.first < b.first; });
    int kpos = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i].comp < 0) kpos = static_cast<int>(i) + 1;
    if (kpos != sg.k) throw ReconstructionMismatch("circuit index disagrees with the component order");

    // Undo the flips: recover pi_{r} on W_k.
    std::vector<int> bseq = u;
    if (sg.form == 2) {
        if (sg.cuts.size() != 6) throw ReconstructionMismatch("form 2 needs six cuts");
        const int i = sg.cuts.front(), j = sg.cuts.back();
        if (i < 1 || j > mu || i >= j) throw ReconstructionMismatch("bad reflection interval");
        for (int x = i; x <= j; ++x) bseq[x] = u[i + j - x];
    } else if (sg.form == 1) {
        if (sg.cuts.size() != 2 && sg.cuts.size() != 4) throw ReconstructionMismatch("form 1 needs two or four cuts");
    } else if (!sg.cuts.empty()) {
        throw ReconstructionMismatch("form 0 has no cuts");
    }
    const auto pieces = closed_of(sg);
    for (auto [lo, hi] : pieces) {
        if (lo < 1 || hi > mu || lo >= hi) throw ReconstructionMismatch("cut out of range");
        settle(bseq, lo, hi);
    }

    std::vector<int> v1(mu + 1, -1);
    {
        TrailState ts = trail_state(std::vector<int>(bseq.begin() + 1, bseq.end()));
        for (int w = 0; w < bd.w; ++w) ts = t_step(ts);
        for (int x = 1; x <= mu; ++x) v1[x] = bseq[ts.pi[x]];
    }
    std::vector<Edge> vcyc;
    for (int x = 1; x <= E; ++x) vcyc.push_back(pos_edge(v1, x));
    std::vector<int> v = trail_of(vcyc);
    if (!std::equal(v.begin(), v.end(), v1.begin() + 1)) throw ReconstructionMismatch("recovered trail is not canonical");

    TrailState fr = trail_state(v);
    for (int r = 0; r < sg.r; ++r) fr = t_step(fr);
    std::vector<Edge> ie, red;
    for (int x = 1; x <= E; ++x) {
        const Edge e = pos_edge(v1, x);
        if (fr.red[x]) {
            red.push_back(e);
        } else if (sg.form != 0) {
            for (auto [lo, hi] : pieces)
                if (lo <= x && x < hi) ie.push_back(e);
        }
    }
    std::sort(ie.begin(), ie.end());
    std::sort(red.begin(), red.end());

    std::vector<Edge> zk;
    for (auto& e : wk)
        if (contains(zpe, e)) zk.push_back(e);
    const auto xk = sym_diff(sym_diff(zk, ie), red);

    std::set<Edge> nset(nabla.begin(), nabla.end());
    std::vector<Edge> xe;
    for (auto& e : zpe)
        if (!nset.count(e)) xe.push_back(e);
    xe.insert(xe.end(), xk.begin(), xk.end());
    std::vector<Circuit> circuits;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Circuit c;
        if (order[i].comp < 0) {
            c.trail = v;
        } else {
            c.trail = comps[order[i].comp].verts;
            const int idx = static_cast<int>(i) + 1;
            for (auto& e : comps[order[i].comp].edges)
                if ((idx > sg.k) == contains(zpe, e)) xe.push_back(e);
        }
        for (std::size_t t = 0; t + 1 < c.trail.size(); ++t) c.edges.push_back(make_edge(c.trail[t], c.trail[t + 1]));
        circuits.push_back(std::move(c));
    }
    std::sort(xe.begin(), xe.end());
    Reconstructed out;
    try {
        out.x = Realization(z.model_ptr(), xe);
        out.y = out.x.toggled(nabla);
        out.s = induced_matching(symmetric_difference(out.x, out.y), circuits);
    } catch (const ValidationError& e) {
        throw ReconstructionMismatch(std::string("reconstructed data is invalid: ") + e.what());
    }
    return out;
}

}  // namespace swchain
