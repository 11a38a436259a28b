#include "hcz/recognizers.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcz/families.hpp"

namespace hcz {

namespace {

// Pattern vertices are matched in a connectivity-friendly order: start from a
// max-degree vertex, append neighbors of matched vertices first.
std::vector<int> pattern_order(const Graph& h) {
    int n = h.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool touches = false;
            for (int u : h.neighbors(v)) touches |= placed[u];
            if (touches) {
                next = v;
                break;
            }
        }
        if (next < 0) {
            int best = -1;
            for (int v = 0; v < n; ++v)
                if (!placed[v] && (best < 0 || h.degree(v) > h.degree(best))) best = v;
            next = best;
        }
        placed[next] = 1;
        order.push_back(next);
    }
    return order;
}

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern) {
    int nh = host.vertex_count(), np = pattern.vertex_count();
    if (np == 0) return std::vector<int>{};
    if (np > nh) return std::nullopt;

    std::vector<int> order = pattern_order(pattern);
    std::vector<int> assign(np, -1);  // pattern vertex -> host vertex
    std::vector<char> used(nh, 0);

    auto rec = [&](auto&& self, size_t pos) -> bool {
        if (pos == order.size()) return true;
        int pv = order[pos];
        for (int hv = 0; hv < nh; ++hv) {
            if (used[hv] || host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q) {
                int qv = order[q];
                if (pattern.adjacent(pv, qv) != host.adjacent(hv, assign[qv])) ok = false;
            }
            if (!ok) continue;
            assign[pv] = hv;
            used[hv] = 1;
            if (self(self, pos + 1)) return true;
            used[hv] = 0;
            assign[pv] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return assign;
}

bool is_subdivided_claw_free(const Graph& g, int i, int j, int k) {
    return !contains_induced(g, make_subdivided_claw(i, j, k)).has_value();
}

bool is_sttt_free(const Graph& g, int t) { return is_subdivided_claw_free(g, t, t, t); }

bool is_claw_free(const Graph& g) { return is_sttt_free(g, 1); }

bool is_simplicial_clique(const Graph& g, const VertexSet& k) {
    if (k.empty()) return false;
    if (!valid_vertex_set(k, g.vertex_count()))
        throw std::invalid_argument("is_simplicial_clique: invalid vertex set");
    for (size_t a = 0; a < k.size(); ++a)
        for (size_t b = a + 1; b < k.size(); ++b)
            if (!g.adjacent(k[a], k[b])) return false;
    for (int v : k) {
        VertexSet outside;
        for (int u : g.neighbors(v))
            if (!std::binary_search(k.begin(), k.end(), u)) outside.push_back(u);
        for (size_t a = 0; a < outside.size(); ++a)
            for (size_t b = a + 1; b < outside.size(); ++b)
                if (!g.adjacent(outside[a], outside[b])) return false;
    }
    return true;
}

namespace {

// Lexicographic DFS over cliques: every clique is reached once, extensions use
// only vertices larger than the current maximum.
template <class Visit>
void enumerate_cliques(const Graph& g, int size_cap, Visit visit) {
    int n = g.vertex_count();
    VertexSet current;
    auto rec = [&](auto&& self, int from) -> bool {
        for (int v = from; v < n; ++v) {
            bool joined = true;
            for (int u : current)
                if (!g.adjacent(u, v)) {
                    joined = false;
                    break;
                }
            if (!joined) continue;
            current.push_back(v);
            if (!visit(current)) {
                current.pop_back();
                return false;
            }
            if (size_cap == 0 || static_cast<int>(current.size()) < size_cap)
                if (!self(self, v + 1)) {
                    current.pop_back();
                    return false;
                }
            current.pop_back();
        }
        return true;
    };
    rec(rec, 0);
}

}  // namespace

std::vector<VertexSet> find_simplicial_cliques(const Graph& g, int size_cap) {
    std::vector<VertexSet> out;
    enumerate_cliques(g, size_cap, [&](const VertexSet& k) {
        if (is_simplicial_clique(g, k)) out.push_back(k);
        return true;
    });
    return out;
}

bool has_simplicial_clique(const Graph& g) {
    bool found = false;
    enumerate_cliques(g, 0, [&](const VertexSet& k) {
        if (is_simplicial_clique(g, k)) found = true;
        return !found;
    });
    return found;
}

int max_clique_size(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int best = 0;
    std::vector<int> current;
    auto rec = [&](auto&& self, const std::vector<int>& candidates) -> void {
        if (static_cast<int>(current.size()) > best) best = static_cast<int>(current.size());
        if (current.size() + candidates.size() <= static_cast<size_t>(best)) return;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (current.size() + (candidates.size() - i) <= static_cast<size_t>(best)) return;
            int v = candidates[i];
            std::vector<int> next;
            for (size_t j = i + 1; j < candidates.size(); ++j)
                if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    rec(rec, order);
    return best;
}

bool in_class_cls(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("in_class_cls: requires k >= 1");
    if (!is_claw_free(g)) return false;
    if (max_clique_size(g) > k) return false;
    for (const auto& comp : connected_components(g)) {
        auto [sub, map] = induced_subgraph(g, comp);
        if (!has_simplicial_clique(sub)) return false;
    }
    return true;
}

namespace {

struct CoverSearch {
    const Graph& g;
    std::vector<std::pair<int, int>> edge_list;
    std::vector<char> covered;       // per edge index
    std::vector<int> usage;          // per vertex clique count
    std::vector<VertexSet> chosen;
    int edge_index(int u, int v) const {
        auto key = std::minmax(u, v);
        for (size_t i = 0; i < edge_list.size(); ++i)
            if (edge_list[i] == std::make_pair(key.first, key.second)) return static_cast<int>(i);
        return -1;
    }

    // All cliques containing {u, v}, largest first then lexicographic.
    std::vector<VertexSet> candidates(int u, int v) {
        VertexSet common;
        for (int w : g.neighbors(u))
            if (w != v && g.adjacent(w, v) && usage[w] < 2) common.push_back(w);
        std::vector<VertexSet> cliques;
        VertexSet current;
        auto rec = [&](auto&& self, size_t from) -> void {
            cliques.push_back(current);
            for (size_t i = from; i < common.size(); ++i) {
                bool joined = true;
                for (int x : current)
                    if (!g.adjacent(x, common[i])) {
                        joined = false;
                        break;
                    }
                if (!joined) continue;
                current.push_back(common[i]);
                self(self, i + 1);
                current.pop_back();
            }
        };
        rec(rec, 0);
        for (auto& c : cliques) {
            c.push_back(u);
            c.push_back(v);
            std::sort(c.begin(), c.end());
        }
        std::sort(cliques.begin(), cliques.end(), [](const VertexSet& a, const VertexSet& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        return cliques;
    }

    bool solve() {
        int next = -1;
        for (size_t i = 0; i < edge_list.size(); ++i)
            if (!covered[i]) {
                next = static_cast<int>(i);
                break;
            }
        if (next < 0) return true;
        auto [u, v] = edge_list[next];
        if (usage[u] >= 2 || usage[v] >= 2) return false;
        for (const auto& q : candidates(u, v)) {
            std::vector<int> newly;
            for (size_t a = 0; a < q.size(); ++a)
                for (size_t b = a + 1; b < q.size(); ++b) {
                    int ei = edge_index(q[a], q[b]);
                    if (!covered[ei]) {
                        covered[ei] = 1;
                        newly.push_back(ei);
                    }
                }
            for (int x : q) usage[x]++;
            chosen.push_back(q);
            if (solve()) return true;
            chosen.pop_back();
            for (int x : q) usage[x]--;
            for (int ei : newly) covered[ei] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<CliqueCover> multigraph_line_cover(const Graph& g) {
    CoverSearch s{g, g.edges(), {}, {}, {}};
    s.covered.assign(s.edge_list.size(), 0);
    s.usage.assign(g.vertex_count(), 0);
    if (!s.solve()) return std::nullopt;
    CliqueCover cover;
    cover.cliques = s.chosen;
    for (const auto& q : cover.cliques)
        cover.k0 = std::max(cover.k0, static_cast<int>(q.size()));
    return cover;
}

}  // namespace hcz
