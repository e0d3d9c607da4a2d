#include "csa/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace csa {

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n + 1, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("make_graph: need at least one vertex");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n || u == v) throw std::invalid_argument("make_graph: bad edge");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{n, std::move(edges)};
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    auto g = path_graph(n);
    g.edges.emplace_back(1, n);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph almost_path_graph(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("almost_path_graph: need 1 <= k <= n");
    auto g = path_graph(n);
    g.n = n + 1;
    g.edges.emplace_back(k, n + 1);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph path_with_triangle_graph(int n, int k) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("path_with_triangle_graph: need 1 <= k <= n-1");
    auto g = path_graph(n);
    g.n = n + 1;
    g.edges.emplace_back(k, n + 1);
    g.edges.emplace_back(k + 1, n + 1);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph catalog_graph(int index) {
    using E = std::vector<std::pair<int, int>>;
    switch (index) {
        case 1: return make_graph(4, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
        case 2: return make_graph(4, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 4}});
        case 3: return make_graph(5, E{{1, 2}, {1, 3}, {1, 4}, {1, 5}});
        case 4: return make_graph(5, E{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}});
        case 5: return make_graph(5, E{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}});
        case 6: return make_graph(5, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}});
        case 7: return make_graph(6, E{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}});
        case 8: return make_graph(7, E{{1, 4}, {1, 2}, {1, 6}, {4, 5}, {2, 3}, {6, 7}});
        case 9: return make_graph(5, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {1, 5}});
        case 10: return make_graph(5, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 5}});
        case 11: return make_graph(5, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 5}, {1, 5}});
        case 12: return make_graph(5, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 5}, {4, 5}});
        case 13: return make_graph(5, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {1, 5}, {3, 5}});
        case 14:
            return make_graph(5, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 5}, {1, 5}, {3, 5}});
        case 15:
            return make_graph(5, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 5}, {1, 5}, {4, 5}});
        case 16:
            return make_graph(
                5, E{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 5}, {1, 5}, {3, 5}, {4, 5}});
        case 17: return make_graph(5, E{{1, 4}, {2, 3}, {3, 4}, {2, 5}, {2, 4}, {1, 5}});
        case 18:
            // complete graph on {1,2,3,4} with a pendant 5 at vertex 1
            return make_graph(5, E{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}});
        case 19:
            return make_graph(5, E{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                                   {3, 5}, {4, 5}});
        case 20: return make_graph(5, E{{1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {3, 5}});
        default: throw std::invalid_argument("catalog_graph: index must be 1..20");
    }
}

namespace {

uint32_t neighbors_mask(const Graph& g, int v) {
    uint32_t m = 0;
    for (auto [a, b] : g.edges) {
        if (a == v) m |= 1u << (b - 1);
        if (b == v) m |= 1u << (a - 1);
    }
    return m;
}

bool mask_connected(const std::vector<uint32_t>& adj, uint32_t mask) {
    if (mask == 0) return false;
    uint32_t start = mask & (~mask + 1);
    uint32_t seen = start;
    uint32_t frontier = start;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < 32; ++v)
            if (frontier & (1u << v)) next |= adj[v] & mask;
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

std::vector<uint32_t> adjacency(const Graph& g) {
    std::vector<uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u - 1] |= 1u << (v - 1);
        adj[v - 1] |= 1u << (u - 1);
    }
    return adj;
}

std::vector<int> mask_to_vertices(uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
        if (mask & (1u << v)) out.push_back(v + 1);
    return out;
}

}  // namespace

bool is_connected(const Graph& g) {
    auto adj = adjacency(g);
    return mask_connected(adj, (g.n == 32 ? ~0u : (1u << g.n) - 1));
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges) {
            if (!b.has_edge(perm[u - 1], perm[v - 1])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<std::vector<int>> connected_induced_subsets(const Graph& g) {
    if (g.n > 30) throw std::invalid_argument("connected_induced_subsets: graph too large");
    auto adj = adjacency(g);
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 1; mask < (1u << g.n); ++mask)
        if (mask_connected(adj, mask)) out.push_back(mask_to_vertices(mask));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

Arrangement build_arrangement(const Graph& g) {
    auto subsets = connected_induced_subsets(g);
    std::vector<std::vector<Int>> normals;
    std::vector<std::string> labels;
    for (const auto& s : subsets) {
        std::vector<Int> v(g.n, 0);
        std::string lbl = "H_";
        for (int vert : s) {
            v[vert - 1] = 1;
            lbl += (vert >= 10 ? "," : "") + std::to_string(vert);
        }
        normals.push_back(std::move(v));
        labels.push_back(std::move(lbl));
    }
    return make_arrangement(g.n, normals, labels);
}

Graph contract_edge(const Graph& g, std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("contract_edge: not an edge");
    const int keep = e.first, drop = e.second;
    auto relabel = [&](int v) {
        if (v == drop) v = keep;
        return v > drop ? v - 1 : v;
    };
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) {
        int a = relabel(u), b = relabel(v);
        if (a == b) continue;  // loop removed
        edges.emplace_back(a, b);
    }
    return make_graph(g.n - 1, std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<int, int> pos;
    for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (pos.count(u) && pos.count(v)) edges.emplace_back(pos[u], pos[v]);
    return make_graph(static_cast<int>(sorted.size()), std::move(edges));
}

namespace {

// Path test plus endpoint discovery: a connected graph with n-1 edges and
// all degrees <= 2 is a path.
bool is_path(const Graph& g) {
    if (static_cast<int>(g.edges.size()) != g.n - 1) return false;
    auto d = g.degrees();
    for (int v = 1; v <= g.n; ++v)
        if (d[v] > 2) return false;
    return true;
}

bool is_cycle(const Graph& g) {
    if (g.n < 3 || static_cast<int>(g.edges.size()) != g.n) return false;
    auto d = g.degrees();
    for (int v = 1; v <= g.n; ++v)
        if (d[v] != 2) return false;
    return true;
}

// Vertex order along a path graph; empty when g is not a path.
std::vector<int> path_order(const Graph& g) {
    if (!is_path(g)) return {};
    if (g.n == 1) return {1};
    auto d = g.degrees();
    int start = 0;
    for (int v = 1; v <= g.n; ++v)
        if (d[v] == 1) {
            start = v;
            break;
        }
    std::vector<int> order = {start};
    int prev = 0, cur = start;
    while (static_cast<int>(order.size()) < g.n) {
        for (int w = 1; w <= g.n; ++w) {
            if (w != prev && g.has_edge(cur, w)) {
                order.push_back(w);
                prev = cur;
                cur = w;
                break;
            }
        }
    }
    return order;
}

}  // namespace

std::string FamilyTag::str() const {
    switch (kind) {
        case PathGraph: return "P_" + std::to_string(n);
        case CycleGraph: return "C_" + std::to_string(n);
        case AlmostPath: return "A_{" + std::to_string(n) + "," + std::to_string(k) + "}";
        case PathWithTriangle: return "Delta_{" + std::to_string(n) + "," + std::to_string(k) + "}";
        case Catalog: return "G_" + std::to_string(n);
        case Other: return "Other";
    }
    return "Other";
}

FamilyTag recognize_family(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("recognize_family: graph not connected");
    if (is_path(g)) return {FamilyTag::PathGraph, g.n, 0};
    if (is_cycle(g)) return {FamilyTag::CycleGraph, g.n, 0};

    auto d = g.degrees();
    const int m = static_cast<int>(g.edges.size());

    // Almost-path: a tree whose unique branch vertex carries a length-1 leg.
    if (m == g.n - 1) {
        int branch = 0, nbranch = 0;
        bool deg_ok = true;
        for (int v = 1; v <= g.n; ++v) {
            if (d[v] > 3) deg_ok = false;
            if (d[v] == 3) {
                branch = v;
                ++nbranch;
            }
        }
        if (deg_ok && nbranch == 1) {
            for (int leaf = 1; leaf <= g.n; ++leaf) {
                if (d[leaf] != 1 || !g.has_edge(branch, leaf)) continue;
                std::vector<int> rest;
                for (int v = 1; v <= g.n; ++v)
                    if (v != leaf) rest.push_back(v);
                Graph path_part = induced_subgraph(g, rest);
                auto order = path_order(path_part);
                if (order.empty()) continue;
                // position of the branch vertex along the path part
                int bpos = 0;
                for (size_t i = 0; i < order.size(); ++i)
                    if (rest[order[i] - 1] == branch) bpos = static_cast<int>(i) + 1;
                int n = g.n - 1;
                int k = std::min(bpos, n + 1 - bpos);
                return {FamilyTag::AlmostPath, n, k};
            }
        }
    }

    // Path-with-triangle: removing a degree-2 vertex whose neighbors are
    // adjacent leaves a path with those neighbors consecutive.
    if (m == g.n) {
        for (int w = 1; w <= g.n; ++w) {
            if (d[w] != 2) continue;
            std::vector<int> nb;
            for (int v = 1; v <= g.n; ++v)
                if (g.has_edge(w, v)) nb.push_back(v);
            if (!g.has_edge(nb[0], nb[1])) continue;
            std::vector<int> rest;
            for (int v = 1; v <= g.n; ++v)
                if (v != w) rest.push_back(v);
            Graph path_part = induced_subgraph(g, rest);
            auto order = path_order(path_part);
            if (order.empty()) continue;
            int p0 = 0, p1 = 0;
            for (size_t i = 0; i < order.size(); ++i) {
                if (rest[order[i] - 1] == nb[0]) p0 = static_cast<int>(i) + 1;
                if (rest[order[i] - 1] == nb[1]) p1 = static_cast<int>(i) + 1;
            }
            if (std::abs(p0 - p1) != 1) continue;
            int n = g.n - 1;
            int k = std::min(p0, p1);
            k = std::min(k, n - k);
            return {FamilyTag::PathWithTriangle, n, k};
        }
    }

    for (int idx = 1; idx <= 20; ++idx)
        if (graphs_isomorphic(g, catalog_graph(idx))) return {FamilyTag::Catalog, idx, 0};
    return {FamilyTag::Other, 0, 0};
}

bool classify_simple_freeness(const Graph& g) {
    auto tag = recognize_family(g);
    return tag.kind == FamilyTag::PathGraph || tag.kind == FamilyTag::CycleGraph ||
           tag.kind == FamilyTag::AlmostPath || tag.kind == FamilyTag::PathWithTriangle;
}

MultiFreeness classify_multi_freeness(const Graph& g) {
    auto tag = recognize_family(g);
    if (classify_simple_freeness(g) ||
        (tag.kind == FamilyTag::Catalog && (tag.n == 1 || tag.n == 2)))
        return MultiFreeness::SupportsFreeMultiplicity;
    return MultiFreeness::TotallyNonFree;
}

bool classify_constant_multiplicity(const Graph& g, long c) {
    if (c < 1) throw std::invalid_argument("classify_constant_multiplicity: c must be >= 1");
    auto tag = recognize_family(g);
    switch (tag.kind) {
        case FamilyTag::PathGraph: return true;
        case FamilyTag::CycleGraph:
            if (tag.n == 3) return c == 1 || c == 3;
            return c == 1;
        case FamilyTag::AlmostPath:
        case FamilyTag::PathWithTriangle: return c == 1;
        case FamilyTag::Catalog:
        case FamilyTag::Other: return false;
    }
    return false;
}

Lmp2Count lmp2_by_counting(const Graph& g, long c) {
    if (!is_connected(g)) throw std::invalid_argument("lmp2_by_counting: graph not connected");
    if (c < 1) throw std::invalid_argument("lmp2_by_counting: c must be >= 1");
    auto adj = adjacency(g);
    std::vector<uint32_t> connected_masks;
    for (uint32_t mask = 1; mask < (1u << g.n); ++mask)
        if (mask_connected(adj, mask)) connected_masks.push_back(mask);
    std::set<uint32_t> is_conn(connected_masks.begin(), connected_masks.end());

    // nu1: unordered pairs {I, J} of connected sets with I u J = S disjoint,
    // summed over connected S with |S| >= 2.
    long nu1 = 0;
    for (uint32_t s : connected_masks) {
        if (__builtin_popcount(s) < 2) continue;
        long ordered = 0;
        // proper nonempty submasks of s
        for (uint32_t i = (s - 1) & s; i != 0; i = (i - 1) & s) {
            uint32_t j = s & ~i;
            if (j == 0) continue;
            if (is_conn.count(i) && is_conn.count(j)) ++ordered;
        }
        nu1 += ordered / 2;
    }
    long na = static_cast<long>(connected_masks.size());
    long nu2 = na * (na - 1) / 2;
    long nu3 = nu2 - 3 * nu1;

    Lmp2Count out;
    out.nu1 = nu1;
    out.nu2 = nu2;
    out.nu3 = nu3;
    if (c % 2 == 0) {
        Int h = Int(3 * c / 2);
        out.lmp2 = Int(nu1) * h * h + Int(nu3) * Int(c) * Int(c);
    } else {
        out.lmp2 = Int(nu1) * Int((3 * c - 1) / 2) * Int((3 * c + 1) / 2) + Int(nu3) * Int(c) * Int(c);
    }
    return out;
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("connected_graphs: supported for n <= 6");
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all_edges.emplace_back(u, v);
    const int m = static_cast<int>(all_edges.size());

    auto edge_index = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<int>(std::lower_bound(all_edges.begin(), all_edges.end(),
                                                 std::make_pair(a, b)) -
                                all_edges.begin());
    };

    // Edge-index relabeling table per vertex permutation.
    std::vector<std::vector<int>> tables;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> t(m);
        for (int i = 0; i < m; ++i)
            t[i] = edge_index(perm[all_edges[i].first - 1], perm[all_edges[i].second - 1]);
        tables.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<uint64_t> seen;
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i)
            if (mask & (1ull << i)) edges.push_back(all_edges[i]);
        Graph g{n, edges};
        if (!is_connected(g)) continue;
        uint64_t best = ~0ull;
        for (const auto& t : tables) {
            uint64_t em = 0;
            for (int i = 0; i < m; ++i)
                if (mask & (1ull << i)) em |= 1ull << t[i];
            best = std::min(best, em);
        }
        if (seen.insert(best).second) {
            std::vector<std::pair<int, int>> canon_edges;
            for (int i = 0; i < m; ++i)
                if (best & (1ull << i)) canon_edges.push_back(all_edges[i]);
            out.push_back(make_graph(n, std::move(canon_edges)));
        }
    }
    return out;
}

}  // namespace csa
