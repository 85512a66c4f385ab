#include <doctest.h>

#include "swchain/degseq.hpp"
#include "swchain/redblue.hpp"
#include "swchain/sweep.hpp"

using namespace swchain;

namespace {

Realization uc_graph(int n, std::vector<Edge> edges)
{
    std::vector<int> deg(n, 0);
    for (auto& e : edges) {
        ++deg[e.first];
        ++deg[e.second];
        e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    return Realization(ChordModel::for_sequence(DegreeSequence::uc(deg)), edges);
}

std::set<Edge> as_set(const std::vector<Edge>& es)
{
    std::set<Edge> s;
    for (auto& e : es) s.insert(make_edge(e.first, e.second));
    return s;
}

}  // namespace

TEST_CASE("chords per model")
{
    auto uc = ChordModel::for_sequence(DegreeSequence::uc({1, 1, 0}));
    CHECK(uc->is_chord(0, 2));
    CHECK_FALSE(uc->is_chord(1, 1));
    auto bip = ChordModel::for_sequence(DegreeSequence::bipartite({1, 1}, {1, 1}));
    CHECK(bip->is_chord(0, 2));
    CHECK_FALSE(bip->is_chord(0, 1));
    auto dir = ChordModel::for_sequence(DegreeSequence::directed({1, 1, 1}, {1, 1, 1}));
    CHECK(dir->is_chord(0, 4));
    CHECK_FALSE(dir->is_chord(1, 4));
}

TEST_CASE("switches")
{
    auto c4 = uc_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto next = apply_switch(c4, {SwitchMove::Kind::Switch, {{1, 2}, {0, 3}}, {{1, 3}, {0, 2}}});
    CHECK(next == uc_graph(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}));
    CHECK_THROWS_AS(apply_switch(c4, {SwitchMove::Kind::Switch, {{0, 1}, {2, 3}}, {{1, 2}, {0, 3}}}), InvalidMove);

    auto d = DegreeSequence::directed({1, 1, 1}, {1, 1, 1});
    auto cm = ChordModel::for_sequence(d);
    Realization fwd(cm, {{0, 4}, {1, 5}, {2, 3}});
    Realization back(cm, {{0, 5}, {1, 3}, {2, 4}});
    SwitchMove triple{SwitchMove::Kind::TripleSwitch, {{0, 4}, {1, 5}, {2, 3}}, {{0, 5}, {1, 3}, {2, 4}}};
    CHECK(apply_switch(fwd, triple) == back);
    SwitchMove plain{SwitchMove::Kind::Switch, {{0, 4}, {1, 5}}, {{0, 5}, {1, 4}}};
    CHECK_THROWS_AS(apply_switch(fwd, plain), InvalidMove);
}

TEST_CASE("symmetric difference and auxiliary matrix")
{
    auto x = uc_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto y = uc_graph(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}});
    CHECK(symmetric_difference(x, x).empty());
    auto rb = symmetric_difference(x, y);
    CHECK(rb.red.size() == 2);
    CHECK(rb.blue.size() == 2);
    CHECK(rb.balanced());
    CHECK(aux_matrix(x, y, x).entries == adjacency(y));

    std::vector<Edge> c5 = {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}};
    std::vector<Edge> co = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    auto rb5 = symmetric_difference(uc_graph(5, c5), uc_graph(5, co));
    CHECK(rb5.all_edges().size() == 10);
    CHECK(count_matchings(rb5) == 32);
}

TEST_CASE("sweeping a cycle with a repeated cornerstone")
{
    // x1..x12 = 0 1 2 3 4 0 5 6 7 8 9 10: x1x6 is a loop, x1x10 an edge,
    // x1x4, x1x8 and x4x7 non-edges.
    auto g = uc_graph(11, {{1, 2}, {3, 4}, {0, 5}, {6, 7}, {8, 9}, {10, 0}, {0, 8}});
    OrientedCircuit c;
    c.x = {-1, 0, 1, 2, 3, 4, 0, 5, 6, 7, 8, 9, 10};
    auto tr = sweep(g, c);
    REQUIRE(tr.steps.size() >= 4);
    CHECK(tr.steps[0].line == SweepLine::Switch);
    CHECK(as_set(tr.steps[0].move.removed) == std::set<Edge>{{0, 8}, {6, 7}});
    CHECK(as_set(tr.steps[0].move.added) == std::set<Edge>{{0, 6}, {7, 8}});
    CHECK(tr.steps[1].line == SweepLine::DoubleStepFirst);
    CHECK(as_set(tr.steps[1].move.removed) == std::set<Edge>{{3, 4}, {0, 5}});
    CHECK(as_set(tr.steps[1].move.added) == std::set<Edge>{{0, 4}, {3, 5}});
    CHECK(tr.steps[2].line == SweepLine::DoubleStepSecond);
    CHECK(as_set(tr.steps[2].move.removed) == std::set<Edge>{{3, 5}, {0, 6}});
    CHECK(as_set(tr.steps[2].move.added) == std::set<Edge>{{0, 3}, {5, 6}});
    CHECK(tr.steps[3].line == SweepLine::Switch);
    CHECK(as_set(tr.steps[3].move.removed) == std::set<Edge>{{0, 3}, {1, 2}});
    CHECK(as_set(tr.steps[3].move.added) == std::set<Edge>{{0, 1}, {2, 3}});
    CHECK(tr.final_state() == g.toggled(c.edges()));
    CHECK((tr.steps.size() == 4 || tr.steps.size() == 5));
    Realization z = g;
    for (auto& s : tr.steps) z = apply_switch(z, s.move);
    CHECK(z == tr.final_state());
}

TEST_CASE("alternating 4-cycle takes one switch")
{
    auto g = uc_graph(4, {{1, 2}, {3, 0}});
    OrientedCircuit c;
    c.x = {-1, 0, 1, 2, 3};
    auto tr = sweep(g, c);
    CHECK(tr.steps.size() == 1);
    CHECK(tr.final_state() == g.toggled(c.edges()));
}

TEST_CASE("oppositely oriented triangles need a triple-switch")
{
    auto d = DegreeSequence::directed({1, 1, 1}, {1, 1, 1});
    auto cm = ChordModel::for_sequence(d);
    Realization fwd(cm, {{0, 4}, {1, 5}, {2, 3}});
    Realization back(cm, {{0, 5}, {1, 3}, {2, 4}});
    auto rb = symmetric_difference(fwd, back);
    auto all = enumerate_matchings(rb);
    REQUIRE(all.size() == 1);
    auto cp = canonical_path(fwd, back, all[0]);
    REQUIRE(cp.length() == 1);
    REQUIRE(cp.points[1].line);
    CHECK(*cp.points[1].line == SweepLine::TripleSwitch);
    CHECK(canonical_path(fwd, fwd, MatchingParameter{}).length() == 0);
}
