#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hcz {

// Vertex subsets are sorted, duplicate-free vectors of vertex ids.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1, adjacency lists kept sorted.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    // Validates: n >= 0, endpoints in range, no self-loops. Duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

  private:
    std::vector<std::vector<int>> adj_;
    void check_vertex(int v) const;
};

// True iff s is sorted, duplicate-free, and all ids lie in [0, n).
bool valid_vertex_set(const VertexSet& s, int n);

// Neighbors of U outside U. boundary(G, {}) = {}.
VertexSet boundary(const Graph& g, const VertexSet& u);

// Induced subgraph on u; mapping[new_id] = old vertex id (ascending).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> mapping;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

enum class BlowupMode { Clique, Independent };

// Lexicographic blow-up: class i occupies vertices i*s .. i*s+s-1; classes of
// adjacent vertices are fully joined; Clique mode also joins within classes.
Graph blowup(const Graph& g, int s, BlowupMode mode);

// Dynamically sized bitmask over vertex ids; memoization key for evaluators.
class VertexMask {
  public:
    VertexMask() = default;
    explicit VertexMask(int n) : n_(n), w_((n + 63) / 64, 0) {}
    static VertexMask full(int n);

    int size() const { return n_; }
    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }
    bool empty() const;
    int count() const;

    VertexMask minus(const VertexMask& o) const;
    VertexMask intersect(const VertexMask& o) const;
    VertexMask unite(const VertexMask& o) const;
    bool intersects(const VertexMask& o) const;

    // Lowest set vertex id, or -1 when empty.
    int first() const;
    std::vector<int> to_set() const;

    friend bool operator==(const VertexMask& a, const VertexMask& b) {
        return a.w_ == b.w_;
    }
    size_t hash() const;

  private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

VertexMask mask_of(const VertexSet& s, int n);

// Closed neighborhood masks N[v]; open neighborhoods are nbr[v] minus v.
std::vector<VertexMask> closed_neighbor_masks(const Graph& g);

struct VertexMaskHash {
    size_t operator()(const VertexMask& m) const { return m.hash(); }
};

struct VertexMaskPairHash {
    size_t operator()(const std::pair<VertexMask, VertexMask>& p) const {
        return p.first.hash() * 1000003u ^ p.second.hash();
    }
};

}  // namespace hcz
