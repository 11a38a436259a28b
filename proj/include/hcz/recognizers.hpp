#pragma once

#include <optional>
#include <vector>

#include "hcz/graph.hpp"

namespace hcz {

// Witness mapping pattern vertex -> host vertex for an induced embedding,
// or nullopt. Backtracking with degree pruning.
std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern);

// No induced copy of the spider with arm lengths i <= j <= k (inputs are
// normalized by sorting).
bool is_subdivided_claw_free(const Graph& g, int i, int j, int k);

// S_{t,t,t}-freeness; t = 1 is claw-freeness.
bool is_sttt_free(const Graph& g, int t);
bool is_claw_free(const Graph& g);

// All simplicial cliques (nonempty cliques K such that for each v in K the
// outside neighborhood N(v) - K induces a clique), lexicographic order,
// sizes capped by size_cap (0 means no cap). Singletons count.
std::vector<VertexSet> find_simplicial_cliques(const Graph& g, int size_cap = 0);
bool has_simplicial_clique(const Graph& g);
bool is_simplicial_clique(const Graph& g, const VertexSet& k);

int max_clique_size(const Graph& g);

// Hereditary class: claw-free, clique number <= k, and every connected
// component owns a simplicial clique.
bool in_class_cls(const Graph& g, int k);

// Edge clique cover with every vertex in at most two cliques; existence is
// equivalent to being the line graph of a multigraph.
struct CliqueCover {
    std::vector<VertexSet> cliques;
    int k0 = 0;  // largest clique size in the cover
};
std::optional<CliqueCover> multigraph_line_cover(const Graph& g);

}  // namespace hcz
