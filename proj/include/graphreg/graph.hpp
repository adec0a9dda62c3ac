#ifndef GRAPHREG_GRAPH_HPP
#define GRAPHREG_GRAPH_HPP

#include <string>
#include <vector>

#include "graphreg/matrix.hpp"

#include <json.hpp>

namespace graphreg {

// Weighted undirected graph over K discrete levels. Vertices are the
// levels 0..K-1 (rendered 1-indexed at the CLI); the edge weights encode
// the admissible-transition prior. Immutable after construction and
// always connected: the factory functions validate before returning.
struct EmotionGraph {
    int num_levels = 0;
    Matrix weights; // K x K, symmetric, zero diagonal, nonnegative

    double degree(int i) const;
    double volume() const; // sum of all vertex degrees
};

// Path graph 1-2-...-K with the given consecutive-level weights.
EmotionGraph line_graph(int num_levels, const std::vector<double>& edge_weights);

// All pairs of distinct levels joined with the same weight.
EmotionGraph complete_graph(int num_levels, double weight);

// Validates symmetry (1e-12), nonnegativity, zero diagonal and
// connectivity of an arbitrary weight matrix.
EmotionGraph from_weight_matrix(const Matrix& w);

// Named configurations: "g0" unit path; "g1" end edges half weight;
// "g2" middle edges half weight; "ga" unit complete graph.
EmotionGraph preset_graph(const std::string& name, int num_levels);
std::vector<std::string> graph_preset_names();

nlohmann::json graph_to_json(const EmotionGraph& g);
EmotionGraph graph_from_json(const nlohmann::json& j);

} // namespace graphreg

#endif
