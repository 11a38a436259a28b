#include "hcz/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hcz {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(u));
    if (adjacent(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

int Graph::edge_count() const {
    size_t total = 0;
    for (const auto& a : adj_) total += a.size();
    return static_cast<int>(total / 2);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) e.emplace_back(u, v);
    return e;
}

bool valid_vertex_set(const VertexSet& s, int n) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

VertexSet boundary(const Graph& g, const VertexSet& u) {
    if (!valid_vertex_set(u, g.vertex_count()))
        throw std::invalid_argument("boundary: invalid vertex set");
    std::vector<char> in_u(g.vertex_count(), 0), out(g.vertex_count(), 0);
    for (int v : u) in_u[v] = 1;
    VertexSet b;
    for (int v : u)
        for (int w : g.neighbors(v))
            if (!in_u[w] && !out[w]) {
                out[w] = 1;
                b.push_back(w);
            }
    std::sort(b.begin(), b.end());
    return b;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u) {
    if (!valid_vertex_set(u, g.vertex_count()))
        throw std::invalid_argument("induced_subgraph: invalid vertex set");
    std::vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < u.size(); ++i) new_id[u[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(u.size()));
    for (int v : u)
        for (int w : g.neighbors(v))
            if (new_id[w] >= 0 && v < w) h.add_edge(new_id[v], new_id[w]);
    return {std::move(h), u};
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

Graph blowup(const Graph& g, int s, BlowupMode mode) {
    if (s < 1) throw std::invalid_argument("blowup: class size must be >= 1");
    int n = g.vertex_count();
    Graph h(n * s);
    for (int i = 0; i < n; ++i) {
        if (mode == BlowupMode::Clique)
            for (int a = 0; a < s; ++a)
                for (int b = a + 1; b < s; ++b) h.add_edge(i * s + a, i * s + b);
        for (int j : g.neighbors(i)) {
            if (j < i) continue;
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b) h.add_edge(i * s + a, j * s + b);
        }
    }
    return h;
}

VertexMask VertexMask::full(int n) {
    VertexMask m(n);
    for (size_t i = 0; i < m.w_.size(); ++i) m.w_[i] = ~uint64_t(0);
    int spare = static_cast<int>(m.w_.size()) * 64 - n;
    if (spare > 0 && !m.w_.empty()) m.w_.back() >>= spare;
    return m;
}

bool VertexMask::empty() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

int VertexMask::count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

VertexMask VertexMask::minus(const VertexMask& o) const {
    VertexMask r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
}

VertexMask VertexMask::intersect(const VertexMask& o) const {
    VertexMask r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
}

VertexMask VertexMask::unite(const VertexMask& o) const {
    VertexMask r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
    return r;
}

bool VertexMask::intersects(const VertexMask& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

int VertexMask::first() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

std::vector<int> VertexMask::to_set() const {
    std::vector<int> s;
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t w = w_[i];
        while (w) {
            int b = std::countr_zero(w);
            s.push_back(static_cast<int>(i * 64 + b));
            w &= w - 1;
        }
    }
    return s;
}

size_t VertexMask::hash() const {
    // FNV-1a over the words; stable across runs.
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
        for (int k = 0; k < 8; ++k) {
            h ^= (w >> (8 * k)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    return static_cast<size_t>(h);
}

VertexMask mask_of(const VertexSet& s, int n) {
    if (!valid_vertex_set(s, n)) throw std::invalid_argument("mask_of: invalid vertex set");
    VertexMask m(n);
    for (int v : s) m.set(v);
    return m;
}

std::vector<VertexMask> closed_neighbor_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexMask> masks(n, VertexMask(n));
    for (int v = 0; v < n; ++v) {
        masks[v].set(v);
        for (int w : g.neighbors(v)) masks[v].set(w);
    }
    return masks;
}

}  // namespace hcz
