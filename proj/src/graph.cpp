#include "swchain/graph.hpp"
#include "swchain/redblue.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace swchain {

std::shared_ptr<const ChordModel> ChordModel::for_sequence(const DegreeSequence& d)
{
    auto cm = std::make_shared<ChordModel>();
    cm->model_ = d.model;
    cm->n1_ = d.n1();
    cm->n2_ = d.n2();
    if (d.model == Model::UC) {
        for (int v = 0; v < d.n1(); ++v) cm->class_u_.push_back(v);
    } else if (d.model == Model::Bipartite) {
        for (int v = 0; v < d.n1(); ++v) cm->class_u_.push_back(v);
        for (int v = 0; v < d.n2(); ++v) cm->class_v_.push_back(d.n1() + v);
    } else {
        for (int x = 0; x < d.n1(); ++x)
            if (d.first[x] > 0) cm->class_u_.push_back(x);
        for (int y = 0; y < d.n2(); ++y)
            if (d.second[y] > 0) cm->class_v_.push_back(d.n1() + y);
    }
    return cm;
}

int ChordModel::label_count() const { return n1_ + n2_; }

bool ChordModel::is_chord(int a, int b) const
{
    if (a == b) return false;
    if (a < 0 || b < 0 || a >= label_count() || b >= label_count()) return false;
    if (model_ == Model::UC) return true;
    if (side(a) == side(b)) return false;
    if (model_ == Model::Directed) {
        int u = std::min(a, b), v = std::max(a, b);
        return v - n1_ != u;
    }
    return true;
}

int ChordModel::side(int v) const
{
    if (model_ == Model::UC) return 0;
    return v < n1_ ? 0 : 1;
}

std::pair<int, bool> ChordModel::directed_slot(int label) const
{
    return label < n1_ ? std::pair{label, false} : std::pair{label - n1_, true};
}

bool ChordModel::operator==(const ChordModel& o) const
{
    return model_ == o.model_ && n1_ == o.n1_ && n2_ == o.n2_;
}

Realization::Realization(ChordModelPtr model, std::vector<Edge> edges)
    : model_(std::move(model)), edges_(std::move(edges))
{
    for (auto& e : edges_) e = make_edge(e.first, e.second);
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw PreconditionViolation("duplicate edge in realization");
    for (auto& e : edges_)
        if (!model_->is_chord(e))
            throw PreconditionViolation("pair " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                        " is not a chord");
}

bool Realization::has_edge(const Edge& e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> Realization::degrees() const
{
    std::vector<int> d(model_->label_count(), 0);
    for (auto& e : edges_) {
        ++d[e.first];
        ++d[e.second];
    }
    return d;
}

Realization Realization::toggled(const std::vector<Edge>& t) const
{
    std::vector<Edge> s = t;
    for (auto& e : s) e = make_edge(e.first, e.second);
    std::sort(s.begin(), s.end());
    std::vector<Edge> out;
    out.reserve(edges_.size() + s.size());
    std::set_symmetric_difference(edges_.begin(), edges_.end(), s.begin(), s.end(), std::back_inserter(out));
    Realization r;
    r.model_ = model_;
    r.edges_ = std::move(out);
    return r;
}

std::string Realization::to_edge_list() const
{
    std::ostringstream os;
    for (auto& e : edges_) os << e.first << ' ' << e.second << '\n';
    return os.str();
}

nlohmann::ordered_json Realization::to_json() const
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["model"] = model_name(model_->model());
    j["n1"] = model_->n1();
    j["n2"] = model_->n2();
    auto arr = nlohmann::ordered_json::array();
    for (auto& e : edges_) arr.push_back({e.first, e.second});
    j["edges"] = arr;
    return j;
}

std::size_t RealizationHash::operator()(const Realization& r) const
{
    std::size_t h = 1469598103934665603ull;
    for (auto& e : r.edges()) {
        h ^= static_cast<std::size_t>(e.first) * 1000003u + static_cast<std::size_t>(e.second);
        h *= 1099511628211ull;
    }
    return h;
}

Realization parse_edge_list(const std::string& text, ChordModelPtr model)
{
    std::istringstream is(text);
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        int a, b;
        if (!(ls >> a)) continue;
        std::string extra;
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
        edges.push_back(make_edge(a, b));
    }
    return Realization(std::move(model), std::move(edges));
}

namespace {

std::string pair_str(const Edge& e)
{
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

bool same_pairs(std::vector<Edge> a, std::vector<Edge> b)
{
    for (auto& e : a) e = make_edge(e.first, e.second);
    for (auto& e : b) e = make_edge(e.first, e.second);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

void check_switch(const Realization& g, const SwitchMove& mv)
{
    const ChordModel& cm = g.model();
    const std::size_t k = mv.kind == SwitchMove::Kind::Switch ? 2 : 3;
    if (mv.removed.size() != k || mv.added.size() != k)
        throw InvalidMove("move must remove and add " + std::to_string(k) + " pairs");
    for (auto& e : mv.removed)
        if (!g.has_edge(make_edge(e.first, e.second)))
            throw InvalidMove("removed pair " + pair_str(e) + " is not an edge");
    for (auto& e : mv.added) {
        if (!cm.is_chord(e.first, e.second)) throw InvalidMove("added pair " + pair_str(e) + " is not a chord");
        if (g.has_edge(make_edge(e.first, e.second)))
            throw InvalidMove("added pair " + pair_str(e) + " is already an edge");
    }
    std::vector<int> vr, va;
    for (auto& e : mv.removed) {
        vr.push_back(e.first);
        vr.push_back(e.second);
    }
    for (auto& e : mv.added) {
        va.push_back(e.first);
        va.push_back(e.second);
    }
    std::sort(vr.begin(), vr.end());
    std::sort(va.begin(), va.end());
    if (std::adjacent_find(vr.begin(), vr.end()) != vr.end())
        throw InvalidMove("removed pairs are not vertex-disjoint");
    if (vr != va) throw InvalidMove("added pairs do not cover the removed endpoints exactly once");
    if (same_pairs(mv.removed, mv.added)) throw InvalidMove("added pairs equal removed pairs");

    if (mv.kind == SwitchMove::Kind::TripleSwitch) {
        if (cm.model() == Model::UC) throw InvalidMove("triple-switch needs a bipartite representation");
        std::vector<int> us, vs;
        for (int v : vr) (cm.side(v) == 0 ? us : vs).push_back(v);
        if (us.size() != 3 || vs.size() != 3) throw InvalidMove("triple-switch needs 3 + 3 vertices");
        std::set<Edge> used;
        for (auto& e : mv.removed) used.insert(make_edge(e.first, e.second));
        for (auto& e : mv.added) {
            auto ee = make_edge(e.first, e.second);
            if (used.count(ee)) throw InvalidMove("triple-switch matchings are not disjoint");
            used.insert(ee);
        }
        bool has_non_chord = false;
        for (int u : us)
            for (int v : vs) {
                auto ee = make_edge(u, v);
                if (!used.count(ee) && !cm.is_chord(u, v)) has_non_chord = true;
            }
        if (!has_non_chord) throw InvalidMove("triple-switch: no distance-3 pair is a non-chord");
    }
}

Realization apply_switch(const Realization& g, const SwitchMove& mv)
{
    check_switch(g, mv);
    std::vector<Edge> t = mv.removed;
    t.insert(t.end(), mv.added.begin(), mv.added.end());
    return g.toggled(t);
}

SwitchMove inverse(const SwitchMove& mv) { return SwitchMove{mv.kind, mv.added, mv.removed}; }

RedBlueGraph symmetric_difference(const Realization& x, const Realization& y)
{
    if (!(x.model() == y.model())) throw ModelMismatch("realizations use different chord models");
    if (x.degrees() != y.degrees()) throw ModelMismatch("realizations have different degree sequences");
    RedBlueGraph rb;
    rb.model = x.model_ptr();
    std::set_difference(x.edges().begin(), x.edges().end(), y.edges().begin(), y.edges().end(),
                        std::back_inserter(rb.red));
    std::set_difference(y.edges().begin(), y.edges().end(), x.edges().begin(), x.edges().end(),
                        std::back_inserter(rb.blue));
    return rb;
}

Eigen::MatrixXi adjacency(const Realization& g)
{
    const int L = g.model().label_count();
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(L, L);
    for (auto& e : g.edges()) {
        a(e.first, e.second) = 1;
        a(e.second, e.first) = 1;
    }
    return a;
}

AuxMatrix aux_matrix(const Realization& x, const Realization& y, const Realization& z)
{
    if (!(x.model() == y.model()) || !(x.model() == z.model()))
        throw ModelMismatch("realizations use different chord models");
    auto d = x.degrees();
    if (y.degrees() != d || z.degrees() != d) throw ModelMismatch("realizations have different degree sequences");
    AuxMatrix m{adjacency(x) + adjacency(y) - adjacency(z)};
    for (int i = 0; i < m.entries.rows(); ++i)
        if (m.entries.row(i).sum() != d[i]) throw InternalInvariant("auxiliary matrix row sum mismatch");
    return m;
}

}  // namespace swchain
