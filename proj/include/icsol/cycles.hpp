#pragma once

#include <cstdint>
#include <vector>

#include "icsol/problem.hpp"

namespace icsol {

/// A clique of the bidirected part of a side-information graph.
/// Vertices are kept sorted ascending; singletons are valid cliques.
struct Clique {
    std::vector<int> vertices;

    explicit Clique(std::vector<int> vs);             // sorts, no validation
    Clique(std::vector<int> vs, const SideInfoGraph &g); // validates bidirectedness

    std::uint64_t mask() const;
    int smallest() const { return vertices.front(); }
    int size() const { return static_cast<int>(vertices.size()); }
    bool operator==(const Clique &) const = default;
};

struct DirectedCycle {
    std::vector<int> vertices; // v_1..v_k in cycle order, k >= 2
    bool operator==(const DirectedCycle &) const = default;
};

/// Vertices of `restrict_mask` lying on a directed cycle of the
/// induced subgraph (SCC of size >= 2; the graphs have no self-loops).
std::uint64_t on_some_cycle(const SideInfoGraph &g, std::uint64_t restrict_mask);

struct CycleFreeVerdict {
    bool cycle_free = false;
    int witness_a = -1; // member of the first clique, when cycle_free
    int witness_b = -1; // member of the second clique
};

/// Definition-1 test: cliques ci, cj are cycle-free iff some pair
/// (x_k in ci, x_k' in cj) has no directed cycle through x_k alone,
/// x_k' alone, or both, within V_R = V \ (ci u cj) plus the pair.
/// Returns the first witness pair in lexicographic order.
CycleFreeVerdict cycle_free_pair(const SideInfoGraph &g, const Clique &ci, const Clique &cj);

struct CycleCover {
    std::vector<DirectedCycle> cycles; // vertex-disjoint
    std::vector<int> uncovered;        // ascending
};

/// Repeatedly extract a shortest directed cycle (BFS from each vertex;
/// lowest start index breaks ties), remove its vertices, repeat.
CycleCover greedy_cycle_cover(const SideInfoGraph &g);

} // namespace icsol
