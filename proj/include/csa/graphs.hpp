#ifndef CSA_GRAPHS_HPP
#define CSA_GRAPHS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/exact.hpp"

namespace csa {

/// Simple undirected graph on vertices 1..n.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates

    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;  // 1-based (index 0 unused)
    bool operator==(const Graph&) const = default;
};

Graph make_graph(int n, std::vector<std::pair<int, int>> edges);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph almost_path_graph(int n, int k);         // n+1 vertices, extra vertex joined to k
Graph path_with_triangle_graph(int n, int k);  // n+1 vertices, extra joined to k and k+1
/// The fixed obstruction catalog; index 1..20.
Graph catalog_graph(int index);

bool is_connected(const Graph& g);
bool graphs_isomorphic(const Graph& a, const Graph& b);

struct FamilyTag {
    enum Kind { PathGraph, CycleGraph, AlmostPath, PathWithTriangle, Catalog, Other } kind = Other;
    int n = 0;  // family size parameter; catalog index for Catalog
    int k = 0;  // attachment parameter where applicable
    std::string str() const;
    bool operator==(const FamilyTag&) const = default;
};

/// All nonempty vertex sets inducing a connected subgraph, ordered by
/// (size, lexicographic vertex list).
std::vector<std::vector<int>> connected_induced_subsets(const Graph& g);

/// The connected subgraph arrangement A_G: one 0/1 hyperplane per connected
/// induced subset, labeled "H_" + concatenated sorted vertices.
Arrangement build_arrangement(const Graph& g);

Graph contract_edge(const Graph& g, std::pair<int, int> e);
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// Membership (up to isomorphism) in the four parametric families or the
/// fixed catalog; Other when none matches. Throws on disconnected input.
FamilyTag recognize_family(const Graph& g);

/// True iff the simple arrangement A_G is free (the four-family criterion).
bool classify_simple_freeness(const Graph& g);

enum class MultiFreeness { SupportsFreeMultiplicity, TotallyNonFree };
MultiFreeness classify_multi_freeness(const Graph& g);

/// Theorem-backed verdict for the constant multiplicity c on A_G.
bool classify_constant_multiplicity(const Graph& g, long c);

/// Combinatorial LMP(2) for mu = c * ones: nu1 counts disjoint-union
/// triples over connected induced subgraphs, nu2 = C(|A_G|, 2),
/// nu3 = nu2 - 3 nu1.
struct Lmp2Count {
    long nu1 = 0;
    long nu2 = 0;
    long nu3 = 0;
    Int lmp2;
};
Lmp2Count lmp2_by_counting(const Graph& g, long c);

/// All connected graphs on exactly n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs(int n);

}  // namespace csa

#endif
