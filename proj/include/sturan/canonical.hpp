#pragma once

#include "sturan/graph.hpp"

#include <span>
#include <vector>

namespace sturan {

struct CanonicalLabeling
{
    /// label[v] is the canonical position of vertex v.
    std::vector<int> label;
    /// g relabelled by `label`; equal for exactly the isomorphic inputs.
    Graph graph;
    /// Colour of each vertex in the coarsest equitable partition refining the
    /// input colouring. Automorphisms preserve it, so differing colours rule
    /// out an automorphism between two vertices.
    std::vector<int> cells;
};

/// Canonical relabelling by colour refinement plus an individualisation
/// search pruned with twin transpositions and discovered automorphisms.
///
/// `colors` (optional, one value per vertex) restricts isomorphisms to
/// colour-preserving maps; colour classes are ordered by value.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace sturan
