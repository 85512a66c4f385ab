#include <doctest.h>

#include "swchain/degseq.hpp"

#include <map>

using namespace swchain;

namespace {

// Labelled degree vectors of every graph on the given pairs, with counts.
std::map<std::vector<int>, std::size_t> census(int labels, const std::vector<Edge>& pairs)
{
    std::map<std::vector<int>, std::size_t> out;
    for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
        std::vector<int> deg(labels, 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) {
                ++deg[pairs[i].first];
                ++deg[pairs[i].second];
            }
        ++out[deg];
    }
    return out;
}

void all_vectors(int len, int hi, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f)
{
    if (static_cast<int>(cur.size()) == len) return f(cur);
    for (int v = 0; v <= hi; ++v) {
        cur.push_back(v);
        all_vectors(len, hi, cur, f);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("graphicality and counts agree with exhaustive graph enumeration")
{
    for (int n = 1; n <= 6; ++n) {
        std::vector<Edge> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
        auto c = census(n, pairs);
        std::vector<int> cur;
        all_vectors(n, n - 1, cur, [&](const std::vector<int>& d) {
            auto ds = DegreeSequence::uc(d);
            auto it = c.find(d);
            bool real = it != c.end();
            CHECK(is_graphical(ds) == real);
            if (real && n <= 5) CHECK(count_realizations(ds, 100000) == it->second);
        });
    }
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n1 + n2 <= 6; ++n2) {
            std::vector<Edge> pairs;
            for (int a = 0; a < n1; ++a)
                for (int b = 0; b < n2; ++b) pairs.push_back({a, n1 + b});
            auto c = census(n1 + n2, pairs);
            std::vector<int> cur;
            all_vectors(n1 + n2, std::max(n1, n2), cur, [&](const std::vector<int>& d) {
                std::vector<int> a(d.begin(), d.begin() + n1), b(d.begin() + n1, d.end());
                for (int x : a)
                    if (x > n2) return;
                for (int x : b)
                    if (x > n1) return;
                auto ds = DegreeSequence::bipartite(a, b);
                auto it = c.find(d);
                CHECK(is_graphical(ds) == (it != c.end()));
                if (it != c.end()) CHECK(count_realizations(ds, 100000) == it->second);
            });
        }
    for (int n = 1; n <= 4; ++n) {
        std::vector<Edge> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) pairs.push_back({a, n + b});
        auto c = census(2 * n, pairs);
        std::vector<int> cur;
        all_vectors(2 * n, n - 1, cur, [&](const std::vector<int>& d) {
            auto ds = DegreeSequence::directed({d.begin(), d.begin() + n}, {d.begin() + n, d.end()});
            auto it = c.find(d);
            CHECK(is_graphical(ds) == (it != c.end()));
            if (it != c.end() && n <= 3) CHECK(count_realizations(ds, 100000) == it->second);
        });
    }
}

TEST_CASE("small realizations")
{
    CHECK(is_graphical(DegreeSequence::uc({3, 3, 3, 3})));
    CHECK_FALSE(is_graphical(DegreeSequence::uc({3, 3, 1, 1})));
    CHECK(is_graphical(DegreeSequence::directed({1, 1, 1}, {1, 1, 1})));
    CHECK(initial_realization(DegreeSequence::uc({2, 2, 2})).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    auto pm = enumerate_realizations(DegreeSequence::uc({1, 1, 1, 1}), 10);
    CHECK(pm.size() == 3);
    CHECK(std::binary_search(pm.begin(), pm.end(), initial_realization(DegreeSequence::uc({1, 1, 1, 1}))));
    CHECK(initial_realization(DegreeSequence::bipartite({2, 2}, {2, 2})).edges().size() == 4);
    CHECK(count_realizations(DegreeSequence::uc({2, 2, 2, 2}), 10) == 3);
    CHECK(count_realizations(DegreeSequence::uc({3, 3, 3, 3}), 10) == 1);
    CHECK_THROWS_AS(enumerate_realizations(DegreeSequence::uc({2, 2, 2, 2, 2, 2}), 10), CapExceeded);
}

TEST_CASE("stability ratio")
{
    CHECK(stability_ratio(DegreeSequence::uc({3, 3, 3, 3}), 100) == 1);
    Rational expect = 3;
    for (auto& p : perturbations(DegreeSequence::uc({1, 1, 1, 1})))
        expect += count_realizations(p.apply(), 100);
    CHECK(stability_ratio(DegreeSequence::uc({1, 1, 1, 1}), 100) == expect / 3);
    CHECK(stability_ratio(DegreeSequence::uc({1, 1, 1, 1}), 100) >= 1);
}

TEST_CASE("sequence families up to relabeling")
{
    CHECK(graphical_sequences_uc(4).size() == 11);
    for (auto& d : graphical_sequences_directed(3)) CHECK(is_graphical(d));
    for (auto& d : graphical_sequences_bipartite(2, 3)) CHECK(d.n1() == 2);
}
