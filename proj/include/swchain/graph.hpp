#pragma once

#include "swchain/common.hpp"
#include "swchain/sequence.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace swchain {

// Which vertex pairs may carry an edge. Labels: UC 0..n-1; bipartite U as
// 0..n1-1 and V as n1..n1+n2-1; directed u_x = x, v_y = n + y.
class ChordModel {
public:
    static std::shared_ptr<const ChordModel> for_sequence(const DegreeSequence& d);

    Model model() const { return model_; }
    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int label_count() const;
    bool is_chord(int a, int b) const;
    bool is_chord(const Edge& e) const { return is_chord(e.first, e.second); }
    // 0 for U (and every UC vertex), 1 for V.
    int side(int v) const;

    // Class members with non-zero degree; zero-degree representation
    // vertices of a directed graph are dropped here.
    const std::vector<int>& class_u() const { return class_u_; }
    const std::vector<int>& class_v() const { return class_v_; }

    // Directed index map: label -> (vertex, is_in_slot).
    std::pair<int, bool> directed_slot(int label) const;

    bool operator==(const ChordModel& o) const;

private:
    Model model_ = Model::UC;
    int n1_ = 0;
    int n2_ = 0;
    std::vector<int> class_u_;
    std::vector<int> class_v_;
};

using ChordModelPtr = std::shared_ptr<const ChordModel>;

class Realization {
public:
    Realization() = default;
    Realization(ChordModelPtr model, std::vector<Edge> edges);

    const ChordModel& model() const { return *model_; }
    const ChordModelPtr& model_ptr() const { return model_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(const Edge& e) const;
    bool has_edge(int a, int b) const { return has_edge(make_edge(a, b)); }
    std::vector<int> degrees() const;

    // Edges toggled: result has E(this) xor toggled.
    Realization toggled(const std::vector<Edge>& toggled) const;

    std::string to_edge_list() const;
    nlohmann::ordered_json to_json() const;

    bool operator==(const Realization& o) const { return edges_ == o.edges_; }
    bool operator<(const Realization& o) const { return edges_ < o.edges_; }

private:
    ChordModelPtr model_;
    std::vector<Edge> edges_;
};

struct RealizationHash {
    std::size_t operator()(const Realization& r) const;
};

Realization parse_edge_list(const std::string& text, ChordModelPtr model);

struct SwitchMove {
    enum class Kind { Switch, TripleSwitch };
    Kind kind = Kind::Switch;
    std::vector<Edge> removed;
    std::vector<Edge> added;
};

// Throws InvalidMove with the failed precondition in the message.
void check_switch(const Realization& g, const SwitchMove& mv);
Realization apply_switch(const Realization& g, const SwitchMove& mv);
SwitchMove inverse(const SwitchMove& mv);

struct RedBlueGraph;
RedBlueGraph symmetric_difference(const Realization& x, const Realization& y);

// M = A_X + A_Y - A_Z over the label space.
struct AuxMatrix {
    Eigen::MatrixXi entries;
};

AuxMatrix aux_matrix(const Realization& x, const Realization& y, const Realization& z);
Eigen::MatrixXi adjacency(const Realization& g);

}  // namespace swchain
