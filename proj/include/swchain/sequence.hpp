#pragma once

#include "swchain/common.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace swchain {

// Degree prescription. `first` holds UC degrees, class-U degrees or
// out-degrees; `second` holds class-V degrees or in-degrees.
struct DegreeSequence {
    Model model = Model::UC;
    std::vector<int> first;
    std::vector<int> second;

    static DegreeSequence uc(std::vector<int> d);
    static DegreeSequence bipartite(std::vector<int> a, std::vector<int> b);
    static DegreeSequence directed(std::vector<int> out, std::vector<int> in);

    // Number of vertices of the graph (not of its bipartite representation).
    int n() const;
    int n1() const { return static_cast<int>(first.size()); }
    int n2() const { return static_cast<int>(second.size()); }
    long m() const;
    int max_degree() const;
    int min_degree() const;

    // Degrees indexed by vertex label of the chord model.
    std::vector<int> label_degrees() const;
    int label_count() const;

    std::string to_text() const;

    auto operator<=>(const DegreeSequence&) const = default;
};

DegreeSequence parse_degree_sequence(std::string_view text);
DegreeSequence read_degree_sequence_file(const std::string& path);

}  // namespace swchain
