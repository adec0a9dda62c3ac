#include "graphreg/graph.hpp"

#include <cmath>
#include <cstddef>

#include <nlohmann/json.hpp>

#include "graphreg/error.hpp"

namespace graphreg {

namespace {

bool connected(const Matrix& w) {
    const std::size_t n = w.rows();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v] && w(u, v) > 0.0) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

EmotionGraph validated(Matrix w) {
    const std::size_t n = w.rows();
    if (w.cols() != n) throw Error("invalid-matrix", "weight matrix not square");
    if (n < 2) throw Error("invalid-size", "need at least 2 levels");
    for (std::size_t i = 0; i < n; ++i) {
        if (w(i, i) != 0.0) throw Error("invalid-matrix", "nonzero diagonal entry");
        for (std::size_t j = 0; j < n; ++j) {
            if (!(w(i, j) >= 0.0)) throw Error("invalid-weight", "negative or NaN edge weight");
            if (std::abs(w(i, j) - w(j, i)) > 1e-12)
                throw Error("invalid-matrix", "weight matrix not symmetric");
        }
    }
    if (!connected(w)) throw Error("disconnected-graph", "graph is not connected");
    return EmotionGraph{static_cast<int>(n), std::move(w)};
}

} // namespace

double EmotionGraph::degree(int i) const {
    double d = 0.0;
    for (int j = 0; j < num_levels; ++j) d += weights(i, j);
    return d;
}

double EmotionGraph::volume() const {
    double v = 0.0;
    for (int i = 0; i < num_levels; ++i) v += degree(i);
    return v;
}

EmotionGraph line_graph(int num_levels, const std::vector<double>& edge_weights) {
    if (num_levels < 2) throw Error("invalid-size", "need at least 2 levels");
    if (edge_weights.size() != static_cast<std::size_t>(num_levels - 1))
        throw Error("invalid-size", "line graph needs exactly K-1 edge weights");
    for (double w : edge_weights)
        if (!(w > 0.0)) throw Error("invalid-weight", "line graph weights must be positive");

    Matrix w(num_levels, num_levels);
    for (int i = 0; i + 1 < num_levels; ++i)
        w(i, i + 1) = w(i + 1, i) = edge_weights[static_cast<std::size_t>(i)];
    return EmotionGraph{num_levels, std::move(w)};
}

EmotionGraph complete_graph(int num_levels, double weight) {
    if (num_levels < 2) throw Error("invalid-size", "need at least 2 levels");
    if (!(weight > 0.0)) throw Error("invalid-weight", "edge weight must be positive");
    Matrix w(num_levels, num_levels, weight);
    for (int i = 0; i < num_levels; ++i) w(i, i) = 0.0;
    return EmotionGraph{num_levels, std::move(w)};
}

EmotionGraph from_weight_matrix(const Matrix& w) { return validated(w); }

EmotionGraph preset_graph(const std::string& name, int num_levels) {
    if (num_levels < 2) throw Error("invalid-size", "need at least 2 levels");
    const int e = num_levels - 1;
    if (name == "g0") return line_graph(num_levels, std::vector<double>(e, 1.0));
    if (name == "g1" || name == "g2") {
        // g1: the two end edges carry half the weight; g2: the middle
        // edges do. At K=5 these are [0.5,1,1,0.5] and [1,0.5,0.5,1].
        std::vector<double> weights(e, name == "g1" ? 1.0 : 0.5);
        weights.front() = name == "g1" ? 0.5 : 1.0;
        weights.back() = name == "g1" ? 0.5 : 1.0;
        return line_graph(num_levels, weights);
    }
    if (name == "ga") return complete_graph(num_levels, 1.0);
    throw Error("unknown-preset", "unknown graph preset: " + name);
}

std::vector<std::string> graph_preset_names() { return {"g0", "g1", "g2", "ga"}; }

nlohmann::json graph_to_json(const EmotionGraph& g) {
    nlohmann::json weights = nlohmann::json::array();
    for (int i = 0; i < g.num_levels; ++i) weights.push_back(g.weights.row(i));
    return {{"num_levels", g.num_levels}, {"weights", weights}};
}

EmotionGraph graph_from_json(const nlohmann::json& j) {
    const int k = j.at("num_levels").get<int>();
    const auto& rows = j.at("weights");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(k))
        throw Error("invalid-matrix", "weights must be a K x K array");
    Matrix w(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != static_cast<std::size_t>(k))
            throw Error("invalid-matrix", "weights must be a K x K array");
        for (std::size_t c = 0; c < rows[i].size(); ++c) w(i, c) = rows[i][c].get<double>();
    }
    return from_weight_matrix(w);
}

} // namespace graphreg
