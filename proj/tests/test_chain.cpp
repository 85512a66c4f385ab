#include <doctest.h>

#include "swchain/chain.hpp"

#include <numeric>

using namespace swchain;

namespace {

std::vector<std::vector<int>> ordered_tuples(const std::vector<int>& pool, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v : pool)
            if (std::find(cur.begin(), cur.end(), v) == cur.end()) {
                cur.push_back(v);
                rec();
                cur.pop_back();
            }
    };
    rec();
    return out;
}

// Row of P built by listing every proposal outcome with its probability.
std::map<Realization, Rational> brute_row(const Realization& g)
{
    const ChordModel& cm = g.model();
    std::map<Realization, Rational> row;
    row[g] = 0;
    auto offer = [&](const SwitchMove& mv, const Rational& p) {
        try {
            row[apply_switch(g, mv)] += p;
        } catch (const InvalidMove&) {
            row[g] += p;
        }
    };
    auto e = [](int a, int b) { return make_edge(a, b); };
    auto pair_switches = [&](const Rational& weight) {
        auto us = ordered_tuples(cm.class_u(), 2);
        auto vs = ordered_tuples(cm.class_v(), 2);
        if (us.empty() || vs.empty()) {
            row[g] += weight;
            return;
        }
        Rational p = weight / (static_cast<long>(us.size() * vs.size()) * 2);
        for (auto& u : us)
            for (auto& v : vs) {
                std::vector<Edge> f{e(u[0], v[0]), e(u[1], v[1])}, h{e(u[0], v[1]), e(u[1], v[0])};
                offer({SwitchMove::Kind::Switch, f, h}, p);
                offer({SwitchMove::Kind::Switch, h, f}, p);
            }
    };
    switch (cm.model()) {
    case Model::UC: {
        row[g] += Rational(1, 2);
        auto t4 = ordered_tuples(cm.class_u(), 4);
        if (t4.empty()) {
            row[g] += Rational(1, 2);
            break;
        }
        Rational p = Rational(1, 4) / static_cast<long>(t4.size());
        for (auto& t : t4) {
            std::vector<Edge> rem{e(t[0], t[1]), e(t[2], t[3])};
            offer({SwitchMove::Kind::Switch, rem, {e(t[0], t[2]), e(t[1], t[3])}}, p);
            offer({SwitchMove::Kind::Switch, rem, {e(t[0], t[3]), e(t[1], t[2])}}, p);
        }
        break;
    }
    case Model::Bipartite:
        pair_switches(1);
        break;
    case Model::Directed: {
        pair_switches(Rational(1, 2));
        auto us = ordered_tuples(cm.class_u(), 3);
        auto vs = ordered_tuples(cm.class_v(), 3);
        if (us.empty() || vs.empty()) {
            row[g] += Rational(1, 2);
            break;
        }
        Rational p = Rational(1, 4) / static_cast<long>(us.size() * vs.size());
        for (auto& u : us)
            for (auto& v : vs)
                for (int s = 1; s <= 2; ++s) {
                    std::vector<Edge> f, h;
                    for (int q = 0; q < 3; ++q) {
                        f.push_back(e(u[q], v[q]));
                        h.push_back(e(u[q], v[(q + s) % 3]));
                    }
                    offer({SwitchMove::Kind::TripleSwitch, f, h}, p);
                }
        break;
    }
    }
    return row;
}

void check_rows(const DegreeSequence& d)
{
    auto all = enumerate_realizations(d, 10000);
    const KernelSpec k = KernelSpec::for_model(all.front().model_ptr());
    for (auto& g : all) {
        auto expect = brute_row(g);
        auto row = transitions(k, g);
        std::map<Realization, Rational> got;
        got[g] = row.stay;
        for (auto& [h, p] : row.moves) got[h] = p;
        for (auto it = expect.begin(); it != expect.end();)
            it = it->second == 0 && !got.count(it->first) ? expect.erase(it) : std::next(it);
        INFO(d.to_text(), " at ", g.to_edge_list());
        CHECK(got == expect);
    }
}

}  // namespace

TEST_CASE("per-move probabilities")
{
    auto k4 = KernelSpec::for_model(ChordModel::for_sequence(DegreeSequence::uc({2, 2, 2, 2})));
    CHECK(k4.switch_move == Rational(1, 12));
    auto b22 = KernelSpec::for_model(ChordModel::for_sequence(DegreeSequence::bipartite({1, 1}, {1, 1})));
    CHECK(b22.switch_move == Rational(1, 2));
    auto dir = KernelSpec::for_model(ChordModel::for_sequence(DegreeSequence::directed({1, 1, 1}, {1, 1, 1})));
    CHECK(dir.switch_move == Rational(1, 36));
    CHECK(dir.triple_move == Rational(1, 24));
}

TEST_CASE("transition rows match the proposal distribution")
{
    check_rows(DegreeSequence::uc({2, 2, 2, 2}));
    check_rows(DegreeSequence::uc({1, 1, 1, 1}));
    check_rows(DegreeSequence::uc({2, 2, 1, 1, 1, 1}));
    check_rows(DegreeSequence::uc({3, 2, 2, 2, 1}));
    check_rows(DegreeSequence::bipartite({1, 1}, {1, 1}));
    check_rows(DegreeSequence::bipartite({2, 1, 1}, {2, 1, 1}));
    check_rows(DegreeSequence::directed({1, 1, 1}, {1, 1, 1}));
    check_rows(DegreeSequence::directed({2, 1, 1, 0}, {1, 1, 1, 1}));
}

TEST_CASE("K4 only holds")
{
    auto d = DegreeSequence::uc({3, 3, 3, 3});
    auto g = initial_realization(d);
    auto row = transitions(KernelSpec::for_model(g.model_ptr()), g);
    CHECK(row.moves.empty());
    CHECK(row.stay == 1);
    CHECK(run_walk(d, 500, 3) == g);
}

TEST_CASE("walks are reproducible and keep degrees")
{
    auto d = DegreeSequence::uc({2, 2, 2, 2});
    CHECK(run_walk(d, 0, 1) == initial_realization(d));
    auto a = run_walk(d, 10000, 42);
    CHECK(a == run_walk(d, 10000, 42));
    CHECK(a.degrees() == d.label_degrees());
    auto dd = DegreeSequence::directed({2, 1, 1, 1}, {1, 2, 1, 1});
    CHECK(run_walk(dd, 3000, 5).degrees() == dd.label_degrees());
    CHECK_THROWS_AS(run_walk(DegreeSequence::uc({3, 1}), 1, 1), NotGraphical);
}

TEST_CASE("empirical distribution on three states")
{
    for (auto d : {DegreeSequence::uc({1, 1, 1, 1}), DegreeSequence::uc({2, 2, 2, 2})}) {
        auto exact = enumerate_realizations(d, 100);
        auto h = empirical_distribution(d, 60, 30000, 11, &exact);
        CHECK(h.states == 3);
        for (auto& [r, c] : h.counts) CHECK(std::abs(static_cast<double>(c) / 30000 - 1.0 / 3) < 0.02);
        REQUIRE(h.p_value);
        CHECK(*h.p_value > 0.001);
    }
    auto h = empirical_distribution(DegreeSequence::uc({3, 3, 3, 3}), 10, 50, 1);
    CHECK(h.counts.size() == 1);
}
